#ifndef SWARMTOPO_COEFFICIENTS_HPP
#define SWARMTOPO_COEFFICIENTS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "swarmtopo/rng.hpp"

namespace swarmtopo {

/// Classical velocity rule with explicit inertia/individuality/sociality
/// weights. Requires iw + sw > 0.
struct ClassicalScheme {
    double iw = 1.0;
    double sw = 1.0;
    double w = 0.7;
};

/// Constriction (Type I''): chi scales inertia and acceleration alike.
/// kappa in (0,1); aw preferably slightly above 4.
struct ConstrictedScheme {
    double aw = 4.10;
    double kappa = 0.99994;
    double ip = 0.50;
};

/// Reduced randomness range, variant 1. aw in (1.00, 2.00).
struct Rrr1Scheme {
    double aw = 1.80;
    double ip = 0.50;
};

/// Reduced randomness range, variant 2. aw in (1.000, 2.618).
struct Rrr2Scheme {
    double aw = 2.40;
    double ip = 0.50;
};

using CoefficientScheme =
    std::variant<ClassicalScheme, ConstrictedScheme, Rrr1Scheme, Rrr2Scheme>;

/// Canonical parameter tuple consumed by the velocity update:
///   phi_i = ip * [phi_min + (phi_max - phi_min) * U(0,1)]
///   phi_s = sp * [phi_min + (phi_max - phi_min) * U(0,1)]
/// Immutable after construction; safe to share across concurrent runs.
struct ResolvedCoefficients {
    double w = 0.0;
    double phi_min = 0.0;
    double phi_max = 0.0;
    double ip = 0.0;
    double sp = 0.0; // 1 - ip

    // phi_i = ind_base + ind_range * u. When phi_min = 0 this makes
    // phi_i bit-identical to the classical iw * u with iw = ip * phi_max.
    double ind_base = 0.0;
    double ind_range = 0.0;
    double soc_base = 0.0;
    double soc_range = 0.0;

    static ResolvedCoefficients from_parts(double w, double phi_min,
                                           double phi_max, double ip);
};

/// Map a user-selectable scheme onto the canonical tuple. Throws
/// std::domain_error on invariant violations (aw outside the variant's
/// open interval, kappa outside (0,1), ip outside [0,1), classical with
/// iw = sw = 0). If `warning` is non-null it receives a note for legal
/// but discouraged settings (constricted aw < 4).
ResolvedCoefficients resolve(const CoefficientScheme& scheme,
                             std::string* warning = nullptr);

/// Fresh (phi_i, phi_s) pair; two independent uniforms, phi_i drawn first.
inline std::pair<double, double> sample_phi(const ResolvedCoefficients& rc,
                                            Pcg64& rng)
{
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    return {rc.ind_base + rc.ind_range * u1, rc.soc_base + rc.soc_range * u2};
}

/// A named scheme selection; `members` holds one scheme, or the three
/// combined by the multi-swarm setting.
struct SchemeSpec {
    std::string name;
    std::vector<CoefficientScheme> members;
    bool multi = false;
};

/// Parse a scheme config string: "c-pso-1", "pso-rrr1-1", "pso-rrr2-1",
/// "classical", "multi-swarm", or a parameterized form such as
/// "classical:iw=1,sw=1,w=0.7", "constricted:aw=4.1,kappa=0.99994,ip=0.5",
/// "rrr1:aw=1.6,ip=0.5", "rrr2:aw=2.2,ip=0.5".
/// Throws std::invalid_argument on unknown names or malformed parameters.
SchemeSpec parse_scheme(std::string_view text);

ConstrictedScheme preset_c_pso_1();
Rrr1Scheme preset_rrr1_1();
Rrr2Scheme preset_rrr2_1();

} // namespace swarmtopo

#endif
