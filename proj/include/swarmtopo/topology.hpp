#ifndef SWARMTOPO_TOPOLOGY_HPP
#define SWARMTOPO_TOPOLOGY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "swarmtopo/rng.hpp"

namespace swarmtopo {

/// Neighbourhood structure over particle indices. Connections are by
/// particle ID, not by position in the search space.
struct Topology {
    enum class Kind { Global, Ring, DynamicRing, Wheel, Random };

    Kind kind = Kind::Global;
    int nn = 2;   // Ring: total neighbour count, split evenly both ways
    int nni = 2;  // DynamicRing: neighbour count at the first step
    int nnf = -1; // DynamicRing: neighbour count at the last step; -1 = m-1
    int hub = 0;  // Wheel

    /// Canonical config string ("global", "ring:nn=2", ...).
    std::string to_string() const;
};

/// Member indices of a neighbourhood, focal particle included.
using NeighbourSet = std::vector<int>;

/// Scratch space so the per-step path allocates nothing.
struct NeighbourScratch {
    std::vector<int> pool;
};

/// Neighbour count of the dynamic ring at step t of T:
/// round(nni + (nnf - nni) * t / (T - 1)). Non-decreasing in t,
/// nni at t = 0 and nnf at t = T-1.
int dynamic_degree(int nni, int nnf, int t, int T);

/// Validate `topo` against swarm size m (resolves nnf = -1 to m-1).
/// Throws std::domain_error when m < 3 or a parameter is out of range.
Topology validated(const Topology& topo, int m);

/// Fill `out` with the neighbour set of particle i at step t. Only the
/// Random kind consumes the RNG: it draws k uniformly from {1,...,m-2}
/// and then k distinct other particles, so the mean set size is
/// (m+1)/2 exactly. Deterministic given the RNG state.
void neighbours(const Topology& topo, int i, int t, int T, int m, Pcg64& rng,
                NeighbourSet& out, NeighbourScratch& scratch);

/// Allocating convenience overload.
NeighbourSet neighbours(const Topology& topo, int i, int t, int T, int m,
                        Pcg64& rng);

/// Index of the member with the smallest pbest conflict; ties go to the
/// lowest index.
int lbest_index(const NeighbourSet& set, const std::vector<double>& pbest_conflict);

/// Raw draws neighbours() consumes for one particle: 0 for all static
/// kinds and the dynamic ring, 1 + k for Random (k read from the stream).
/// Advances `rng` past them.
void skip_neighbour_draws(const Topology& topo, int m, Pcg64& rng);

/// Parse a topology config string: "global", "ring:nn=2",
/// "ring-dynamic:nni=2,nnf=m-1", "wheel", "wheel:hub=3", "random".
/// Throws std::invalid_argument on unknown names or malformed parameters.
Topology parse_topology(std::string_view text);

} // namespace swarmtopo

#endif
