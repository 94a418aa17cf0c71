#include "swarmtopo/coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "kv_params.hpp"

namespace swarmtopo {

ResolvedCoefficients ResolvedCoefficients::from_parts(double w, double phi_min,
                                                      double phi_max, double ip)
{
    if (!(ip >= 0.0 && ip < 1.0))
        throw std::domain_error("ip must lie in [0, 1)");
    if (phi_min < 0.0 || phi_min > phi_max)
        throw std::domain_error("need 0 <= phi_min <= phi_max");

    ResolvedCoefficients rc;
    rc.w = w;
    rc.phi_min = phi_min;
    rc.phi_max = phi_max;
    rc.ip = ip;
    rc.sp = 1.0 - ip;
    rc.ind_base = ip * phi_min;
    rc.ind_range = ip * (phi_max - phi_min);
    rc.soc_base = rc.sp * phi_min;
    rc.soc_range = rc.sp * (phi_max - phi_min);
    return rc;
}

namespace {

ResolvedCoefficients resolve_classical(const ClassicalScheme& s)
{
    if (s.iw < 0.0 || s.sw < 0.0)
        throw std::domain_error("classical weights must be non-negative");
    if (s.iw + s.sw <= 0.0)
        throw std::domain_error("classical scheme needs iw + sw > 0");
    const double phi_max = s.iw + s.sw;
    const double ip = s.iw / (s.iw + s.sw);
    return ResolvedCoefficients::from_parts(s.w, 0.0, phi_max, ip);
}

ResolvedCoefficients resolve_constricted(const ConstrictedScheme& s,
                                         std::string* warning)
{
    if (!(s.kappa > 0.0 && s.kappa < 1.0))
        throw std::domain_error("kappa must lie in (0, 1)");
    if (!(s.ip >= 0.0 && s.ip < 1.0))
        throw std::domain_error("ip must lie in [0, 1)");
    double chi;
    if (s.aw >= 4.0) {
        chi = 2.0 * s.kappa / (s.aw - 2.0 + std::sqrt(s.aw * s.aw - 4.0 * s.aw));
    } else {
        chi = s.kappa;
        if (warning)
            *warning = "constricted scheme with aw < 4 falls back to chi = kappa; "
                       "aw slightly above 4 is the recommended regime";
    }
    return ResolvedCoefficients::from_parts(chi, 0.0, chi * s.aw, s.ip);
}

ResolvedCoefficients resolve_rrr1(const Rrr1Scheme& s)
{
    if (!(s.aw > 1.00 && s.aw < 2.00))
        throw std::domain_error("rrr1 requires aw in (1.00, 2.00)");
    if (!(s.ip >= 0.0 && s.ip < 1.0))
        throw std::domain_error("ip must lie in [0, 1)");
    const double w = s.aw - 1.0;
    const double phi_max = 1.5 * (w + 1.0);
    const double phi_min = 0.5 * (w + 1.0);
    return ResolvedCoefficients::from_parts(w, phi_min, phi_max, s.ip);
}

ResolvedCoefficients resolve_rrr2(const Rrr2Scheme& s)
{
    if (!(s.aw > 1.000 && s.aw < 2.618))
        throw std::domain_error("rrr2 requires aw in (1.000, 2.618)");
    if (!(s.ip >= 0.0 && s.ip < 1.0))
        throw std::domain_error("ip must lie in [0, 1)");
    const double w = 1.0 / s.aw - 2.0 + s.aw;
    const double phi_max = 2.0 * (w + 1.0);
    const double phi_min = 2.0 * s.aw - phi_max;
    return ResolvedCoefficients::from_parts(w, phi_min, phi_max, s.ip);
}

} // namespace

ResolvedCoefficients resolve(const CoefficientScheme& scheme, std::string* warning)
{
    if (warning) warning->clear();
    return std::visit(
        [&](const auto& s) -> ResolvedCoefficients {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ClassicalScheme>)
                return resolve_classical(s);
            else if constexpr (std::is_same_v<T, ConstrictedScheme>)
                return resolve_constricted(s, warning);
            else if constexpr (std::is_same_v<T, Rrr1Scheme>)
                return resolve_rrr1(s);
            else
                return resolve_rrr2(s);
        },
        scheme);
}

ConstrictedScheme preset_c_pso_1() { return ConstrictedScheme{4.10, 0.99994, 0.50}; }
Rrr1Scheme preset_rrr1_1() { return Rrr1Scheme{1.80, 0.50}; }
Rrr2Scheme preset_rrr2_1() { return Rrr2Scheme{2.40, 0.50}; }

SchemeSpec parse_scheme(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string head{text.substr(0, colon)};
    const std::string_view tail =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const auto params = detail::parse_kv(tail, text);
    const auto get_or = [&](const std::string& key, double fallback) {
        return detail::number_or(params, key, fallback, text);
    };

    SchemeSpec spec;
    spec.name = std::string(text);
    if (head == "c-pso-1") {
        spec.members.push_back(preset_c_pso_1());
    } else if (head == "pso-rrr1-1") {
        spec.members.push_back(preset_rrr1_1());
    } else if (head == "pso-rrr2-1") {
        spec.members.push_back(preset_rrr2_1());
    } else if (head == "multi-swarm") {
        spec.multi = true;
        spec.members.push_back(preset_rrr2_1());
        spec.members.push_back(preset_rrr1_1());
        spec.members.push_back(preset_c_pso_1());
    } else if (head == "classical") {
        ClassicalScheme s;
        s.iw = get_or("iw", s.iw);
        s.sw = get_or("sw", s.sw);
        s.w = get_or("w", s.w);
        spec.members.push_back(s);
    } else if (head == "constricted") {
        ConstrictedScheme s;
        s.aw = get_or("aw", s.aw);
        s.kappa = get_or("kappa", s.kappa);
        s.ip = get_or("ip", s.ip);
        spec.members.push_back(s);
    } else if (head == "rrr1") {
        Rrr1Scheme s;
        s.aw = get_or("aw", s.aw);
        s.ip = get_or("ip", s.ip);
        spec.members.push_back(s);
    } else if (head == "rrr2") {
        Rrr2Scheme s;
        s.aw = get_or("aw", s.aw);
        s.ip = get_or("ip", s.ip);
        spec.members.push_back(s);
    } else {
        throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
    }
    return spec;
}

} // namespace swarmtopo
