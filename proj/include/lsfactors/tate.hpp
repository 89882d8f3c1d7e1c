#pragma once

// Abelian local factors: L(s, chi), eps(s, chi, psi) and gamma(s, chi, psi).
//
// Conventions. psi has conductor n (trivial on p^n) and d = -n. Then
//   unramified:  eps = chi(t)^d q^(d/2) Z^d
//   conductor a: eps = q^(d/2) G(chi, psi) Z^(a+d),
//   G(chi, psi) = sum_{u in (O/p^a)^x} chi^-1(t^(n-a) u) psi(t^(n-a) u).
// These give eps = 1 for unramified data with n = 0, the exact functional
// equation, |eps(1/2)| = 1 for unitary chi and eps(psi^t) = chi(t) q^(1/2) Z eps.

#include <map>
#include <string>

#include "characters.hpp"
#include "factored_rf.hpp"

namespace lsfactors {

struct AbelianFactorTriple {
    FactoredRF L;
    FactoredRF eps;
    FactoredRF gamma;
    std::string provenance;  // "unramified" or "gauss-sum"
};

inline FactoredRF tate_L(const MultChar& chi) {
    const long long q = chi.field().q();
    if (chi.ramified()) return FactoredRF::one(q);
    return FactoredRF::linear(chi.pi_value(), -1);
}

/// G(chi, psi) as above. Reads unit coefficients of index < a(chi) only.
inline Scalar gauss_sum(const MultChar& chi, const AddChar& psi) {
    const int a = chi.conductor();
    const auto& field = chi.field();
    if (a < 1) throw usage_error("tate", "gauss_sum needs a ramified character");
    if (a > field.level()) throw precision_error("tate", "conductor exceeds the field level");
    if (!(psi.field() == field)) throw usage_error("tate", "characters live on different fields");

    const long long order = std::lcm(chi.unit_order(), static_cast<long long>(field.p()));
    std::vector<long long> counts(static_cast<size_t>(order), 0);
    const int v = psi.conductor() - a;
    for (const RingElt& u : field.units(a)) {
        const RootOfUnity term = chi.unit_value(u).inverse() * psi.value(v, u);
        counts[static_cast<size_t>(term.power * (order / term.order))] += 1;
    }
    const Scalar sum(Cyclo::from_exponent_counts(static_cast<int>(order), counts), QPower(), field.q());
    return chi.pi_value().pow(-v) * sum;
}

inline FactoredRF tate_eps(const MultChar& chi, const AddChar& psi) {
    const long long q = chi.field().q();
    const long long d = -psi.conductor();
    const Scalar half_d = Scalar::q_power(q, Rational(d, 2));
    if (!chi.ramified()) return FactoredRF::monomial(chi.pi_value().pow(d) * half_d, d);
    return FactoredRF::monomial(half_d * gauss_sum(chi, psi), chi.conductor() + d);
}

inline AbelianFactorTriple tate_factors(const MultChar& chi, const AddChar& psi) {
    AbelianFactorTriple t{tate_L(chi), tate_eps(chi, psi), FactoredRF(), chi.ramified() ? "gauss-sum" : "unramified"};
    t.gamma = t.eps * tate_L(chi.inverse()).reflect() / t.L;
    return t;
}

inline FactoredRF tate_gamma(const MultChar& chi, const AddChar& psi) { return tate_factors(chi, psi).gamma; }

} // namespace lsfactors
