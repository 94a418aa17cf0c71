#include "swarmtopo/topology.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "kv_params.hpp"

namespace swarmtopo {

std::string Topology::to_string() const
{
    switch (kind) {
    case Kind::Global: return "global";
    case Kind::Ring: return "ring:nn=" + std::to_string(nn);
    case Kind::DynamicRing:
        return "ring-dynamic:nni=" + std::to_string(nni) +
               ",nnf=" + (nnf < 0 ? std::string("m-1") : std::to_string(nnf));
    case Kind::Wheel: return hub == 0 ? "wheel" : "wheel:hub=" + std::to_string(hub);
    case Kind::Random: return "random";
    }
    return "global";
}

int dynamic_degree(int nni, int nnf, int t, int T)
{
    if (T <= 1) return nni;
    const double frac = static_cast<double>(t) / static_cast<double>(T - 1);
    return static_cast<int>(std::llround(nni + (nnf - nni) * frac));
}

Topology validated(const Topology& topo, int m)
{
    if (m < 3) throw std::domain_error("swarm size must be at least 3");
    Topology out = topo;
    switch (out.kind) {
    case Topology::Kind::Global:
        break;
    case Topology::Kind::Ring:
        if (out.nn < 2 || out.nn % 2 != 0 || out.nn > m - 1)
            throw std::domain_error("ring needs an even nn with 2 <= nn <= m-1");
        break;
    case Topology::Kind::DynamicRing:
        if (out.nnf < 0) out.nnf = m - 1;
        if (out.nni < 1 || out.nni > out.nnf || out.nnf > m - 1)
            throw std::domain_error("dynamic ring needs 1 <= nni <= nnf <= m-1");
        break;
    case Topology::Kind::Wheel:
        if (out.hub < 0 || out.hub >= m)
            throw std::domain_error("wheel hub must lie in [0, m)");
        break;
    case Topology::Kind::Random:
        break;
    }
    return out;
}

namespace {

void push_ring(int i, int nn, int m, NeighbourSet& out)
{
    // ceil(nn/2) successors, floor(nn/2) predecessors
    const int succ = (nn + 1) / 2;
    const int pred = nn / 2;
    out.push_back(i);
    for (int s = 1; s <= succ; ++s) out.push_back((i + s) % m);
    for (int p = 1; p <= pred; ++p) out.push_back((i - p + m) % m);
}

} // namespace

void neighbours(const Topology& topo, int i, int t, int T, int m, Pcg64& rng,
                NeighbourSet& out, NeighbourScratch& scratch)
{
    const Topology v = validated(topo, m);
    if (i < 0 || i >= m) throw std::domain_error("particle index out of range");

    out.clear();
    switch (v.kind) {
    case Topology::Kind::Global:
        for (int j = 0; j < m; ++j) out.push_back(j);
        break;
    case Topology::Kind::Ring:
        push_ring(i, v.nn, m, out);
        break;
    case Topology::Kind::DynamicRing:
        push_ring(i, dynamic_degree(v.nni, v.nnf, t, T), m, out);
        break;
    case Topology::Kind::Wheel:
        if (i == v.hub) {
            for (int j = 0; j < m; ++j) out.push_back(j);
        } else {
            out.push_back(i);
            out.push_back(v.hub);
        }
        break;
    case Topology::Kind::Random: {
        const int k = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(m - 2)));
        auto& pool = scratch.pool;
        pool.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) pool[static_cast<std::size_t>(j)] = j;
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(m - 1)]);
        out.push_back(i);
        // partial Fisher-Yates over the m-1 other indices, one draw per pick
        for (int sel = 0; sel < k; ++sel) {
            const int j = sel + static_cast<int>(
                                    rng.bounded(static_cast<std::uint64_t>(m - 1 - sel)));
            std::swap(pool[static_cast<std::size_t>(sel)], pool[static_cast<std::size_t>(j)]);
            out.push_back(pool[static_cast<std::size_t>(sel)]);
        }
        break;
    }
    }
}

NeighbourSet neighbours(const Topology& topo, int i, int t, int T, int m, Pcg64& rng)
{
    NeighbourSet out;
    NeighbourScratch scratch;
    neighbours(topo, i, t, T, m, rng, out, scratch);
    return out;
}

int lbest_index(const NeighbourSet& set, const std::vector<double>& pbest_conflict)
{
    if (set.empty()) throw std::domain_error("empty neighbour set");
    int best = set.front();
    for (const int j : set) {
        const double c = pbest_conflict[static_cast<std::size_t>(j)];
        const double b = pbest_conflict[static_cast<std::size_t>(best)];
        if (c < b || (c == b && j < best)) best = j;
    }
    return best;
}

void skip_neighbour_draws(const Topology& topo, int m, Pcg64& rng)
{
    if (topo.kind != Topology::Kind::Random) return;
    const auto k = 1 + rng.bounded(static_cast<std::uint64_t>(m - 2));
    rng.advance(k);
}

Topology parse_topology(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string head{text.substr(0, colon)};
    const std::string_view tail =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const auto params = detail::parse_kv(tail, text);

    Topology topo;
    if (head == "global") {
        topo.kind = Topology::Kind::Global;
    } else if (head == "ring") {
        topo.kind = Topology::Kind::Ring;
        topo.nn = static_cast<int>(detail::number_or(params, "nn", 2, text));
    } else if (head == "ring-dynamic") {
        topo.kind = Topology::Kind::DynamicRing;
        topo.nni = static_cast<int>(detail::number_or(params, "nni", 2, text));
        const auto it = params.find("nnf");
        if (it == params.end() || it->second == "m-1")
            topo.nnf = -1;
        else
            topo.nnf = static_cast<int>(detail::to_number(it->second, text));
    } else if (head == "wheel") {
        topo.kind = Topology::Kind::Wheel;
        topo.hub = static_cast<int>(detail::number_or(params, "hub", 0, text));
    } else if (head == "random") {
        topo.kind = Topology::Kind::Random;
    } else {
        throw std::invalid_argument("unknown topology '" + std::string(text) + "'");
    }
    return topo;
}

} // namespace swarmtopo
