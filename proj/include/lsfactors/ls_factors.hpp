#pragma once

// Twisted symmetric / exterior square factors of GL_n principal-series and
// Langlands-quotient parameters, built multiplicatively from abelian factors,
// plus psi-dependence, stability and Plancherel densities.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gspin_root.hpp"
#include "tate.hpp"

namespace lsfactors {

enum class R0 { sym2, wedge2 };

inline std::string to_string(R0 r) { return r == R0::sym2 ? "sym2" : "wedge2"; }

/// n(n+1)/2 for sym2, n(n-1)/2 for wedge2.
inline long long r0_dimension(R0 r, long long n) { return r == R0::sym2 ? n * (n + 1) / 2 : n * (n - 1) / 2; }

/// n + 1 for sym2, n - 1 for wedge2: det(r0 o sigma) = det(sigma)^(n +- 1).
inline long long r0_det_exponent(R0 r, long long n) { return r == R0::sym2 ? n + 1 : n - 1; }

struct PrincipalSeriesParam {
    std::vector<MultChar> chars;

    int n() const { return static_cast<int>(chars.size()); }
    const TruncatedField& field() const {
        if (chars.empty()) throw usage_error("ls-factors", "empty principal series");
        return chars.front().field();
    }
    void validate() const {
        for (const auto& c : chars) c.require_same_field(chars.front());
    }
    MultChar central() const {
        MultChar w = MultChar::trivial(field());
        for (const auto& c : chars) w = w * c;
        return w;
    }
    PrincipalSeriesParam dual() const {
        PrincipalSeriesParam d;
        for (const auto& c : chars) d.chars.push_back(c.inverse());
        return d;
    }
    PrincipalSeriesParam twist(const Rational& s0) const {
        PrincipalSeriesParam t;
        for (const auto& c : chars) t.chars.push_back(c.twist(s0));
        return t;
    }
    PrincipalSeriesParam times(const MultChar& eta) const {
        PrincipalSeriesParam t;
        for (const auto& c : chars) t.chars.push_back(c * eta);
        return t;
    }
    bool unitary() const {
        return std::all_of(chars.begin(), chars.end(), [](const MultChar& c) { return c.unitary(); });
    }
};

struct LQBlock {
    PrincipalSeriesParam P;
    Rational s;
};

/// Blocks (P_i, s_i) with unitary P_i and s_1 > ... > s_d in (1/den)Z.
struct LanglandsQuotientParam {
    std::vector<LQBlock> blocks;

    int n() const {
        int n = 0;
        for (const auto& b : blocks) n += b.P.n();
        return n;
    }
    void validate(long long den = default_shift_denominator) const {
        if (blocks.empty()) throw usage_error("ls-factors", "Langlands quotient needs at least one block");
        for (size_t i = 0; i < blocks.size(); ++i) {
            blocks[i].P.validate();
            if (!(blocks[i].P.field() == blocks[0].P.field()))
                throw usage_error("ls-factors", "blocks live on different fields");
            if (!blocks[i].P.unitary())
                throw usage_error("ls-factors", "block " + std::to_string(i + 1) + " is not unitary");
            if (denominator(Rational(den) * blocks[i].s) != 1)
                throw precision_error("ls-factors", "s_" + std::to_string(i + 1) + " = " +
                                                        lsfactors::to_string(blocks[i].s) + " is off the lattice");
            if (i > 0 && !(blocks[i - 1].s > blocks[i].s))
                throw usage_error("ls-factors", "exponents must satisfy s_1 > ... > s_d");
        }
    }
    /// The contragredient: blocks P_i^vee with exponents -s_i, reordered.
    LanglandsQuotientParam dual() const {
        LanglandsQuotientParam d;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) d.blocks.push_back({it->P.dual(), -it->s});
        return d;
    }
};

using Parameter = std::variant<PrincipalSeriesParam, LanglandsQuotientParam>;

/// All characters of the parameter with the block twists folded in.
inline PrincipalSeriesParam flatten(const Parameter& p) {
    if (auto ps = std::get_if<PrincipalSeriesParam>(&p)) return *ps;
    PrincipalSeriesParam out;
    for (const auto& b : std::get<LanglandsQuotientParam>(p).blocks)
        for (const auto& c : b.P.chars) out.chars.push_back(c.twist(b.s));
    return out;
}

inline Parameter dual(const Parameter& p) {
    if (auto ps = std::get_if<PrincipalSeriesParam>(&p)) return ps->dual();
    return std::get<LanglandsQuotientParam>(p).dual();
}

struct TwistedFactorRequest {
    Parameter param;
    R0 r0 = R0::sym2;
    MultChar eta;
    AddChar psi;

    int n() const { return std::visit([](const auto& p) { return p.n(); }, param); }
    long long q() const { return eta.field().q(); }

    void validate() const {
        const auto& field = eta.field();
        if (!(psi.field() == field)) throw usage_error("ls-factors", "psi and eta live on different fields");
        if (auto ps = std::get_if<PrincipalSeriesParam>(&param)) {
            for (const auto& c : ps->chars)
                if (!(c.field() == field)) throw usage_error("ls-factors", "parameter and eta live on different fields");
        } else {
            const auto& lq = std::get<LanglandsQuotientParam>(param);
            lq.validate();
            if (!(lq.blocks[0].P.field() == field))
                throw usage_error("ls-factors", "parameter and eta live on different fields");
        }
    }

    /// (pi^vee, eta^-1, psi-bar).
    TwistedFactorRequest dual() const { return {lsfactors::dual(param), r0, eta.inverse(), psi.conj()}; }
    TwistedFactorRequest with_psi(AddChar p) const { return {param, r0, eta, std::move(p)}; }
};

/// prod_{i,j} gamma(chi_i chi'_j, psi).
inline FactoredRF rs_gamma(const PrincipalSeriesParam& P, const PrincipalSeriesParam& Q, const AddChar& psi) {
    FactoredRF g = FactoredRF::one(psi.field().q());
    for (const auto& a : P.chars)
        for (const auto& b : Q.chars) {
            a.require_same_field(b);
            g *= tate_gamma(a * b, psi);
        }
    return g;
}

/// Principal-series multiplicativity: prod_i base(chi_i) prod_{i<j} gamma(chi_i chi_j eta),
/// base = gamma(chi^2 eta) for sym2 and 1 for wedge2.
inline FactoredRF principal_series_gamma(const PrincipalSeriesParam& P, R0 r0, const MultChar& eta,
                                         const AddChar& psi) {
    FactoredRF g = FactoredRF::one(psi.field().q());
    for (size_t i = 0; i < P.chars.size(); ++i) {
        if (r0 == R0::sym2) g *= tate_gamma(P.chars[i] * P.chars[i] * eta, psi);
        for (size_t j = i + 1; j < P.chars.size(); ++j) g *= tate_gamma(P.chars[i] * P.chars[j] * eta, psi);
    }
    return g;
}

/// Product over blocks with shifts s + 2 s_i and cross terms
/// rs_gamma(P_i, P_j eta) at s + s_i + s_j. No ordering constraint on the
/// s_i, so regroupings of one parameter can be compared directly.
inline FactoredRF block_product_gamma(const std::vector<LQBlock>& blocks, R0 r0, const MultChar& eta,
                                      const AddChar& psi) {
    FactoredRF g = FactoredRF::one(psi.field().q());
    for (size_t i = 0; i < blocks.size(); ++i) {
        g *= principal_series_gamma(blocks[i].P, r0, eta, psi).shift(2 * blocks[i].s);
        for (size_t j = i + 1; j < blocks.size(); ++j)
            g *= rs_gamma(blocks[i].P, blocks[j].P.times(eta), psi).shift(blocks[i].s + blocks[j].s);
    }
    return g;
}

inline FactoredRF twisted_gamma(const TwistedFactorRequest& req) {
    req.validate();
    if (auto ps = std::get_if<PrincipalSeriesParam>(&req.param)) return principal_series_gamma(*ps, req.r0, req.eta, req.psi);
    return block_product_gamma(std::get<LanglandsQuotientParam>(req.param).blocks, req.r0, req.eta, req.psi);
}

/// prod_{i<=j} (sym2) or prod_{i<j} (wedge2) of (1 - chi_i chi_j eta(t) Z)^-1.
inline FactoredRF spherical_L(const PrincipalSeriesParam& P, R0 r0, const MultChar& eta) {
    if (eta.ramified()) throw usage_error("ls-factors", "spherical_L needs unramified eta");
    for (const auto& c : P.chars)
        if (c.ramified()) throw usage_error("ls-factors", "spherical_L needs unramified characters");
    FactoredRF L = FactoredRF::one(eta.field().q());
    for (size_t i = 0; i < P.chars.size(); ++i)
        for (size_t j = (r0 == R0::sym2 ? i : i + 1); j < P.chars.size(); ++j)
            L *= FactoredRF::linear(P.chars[i].pi_value() * P.chars[j].pi_value() * eta.pi_value(), -1);
    return L;
}

/// 1 / P(Z) with P the zero polynomial of the gamma factor (constant term 1).
inline FactoredRF L_from_zeros(const FactoredRF& gamma) {
    FactoredRF L = FactoredRF::one(gamma.q());
    for (const auto& f : gamma.factors())
        if (f.exponent > 0) L *= FactoredRF::linear(f.key, -f.exponent);
    return L;
}

inline FactoredRF tempered_L(const PrincipalSeriesParam& P, R0 r0, const MultChar& eta) {
    if (!P.unitary()) throw usage_error("ls-factors", "tempered_L needs unitary data");
    return L_from_zeros(principal_series_gamma(P, r0, eta, AddChar::canonical(eta.field())));
}

struct EpsAndL {
    FactoredRF eps;
    FactoredRF L;
};

namespace detail {
inline void require_monomial(const FactoredRF& eps, const std::string& what) {
    if (!eps.is_monomial())
        throw consistency_error("ls-factors", what + " epsilon is not a monomial: " + eps.to_string());
}
} // namespace detail

/// Tempered: eps = gamma L(s) / L(1-s, dual). Langlands quotient: the block
/// and cross-term products with shifted arguments.
inline EpsAndL twisted_eps_and_general_L(const TwistedFactorRequest& req) {
    req.validate();
    const long long q = req.q();
    if (auto ps = std::get_if<PrincipalSeriesParam>(&req.param)) {
        const FactoredRF L = tempered_L(*ps, req.r0, req.eta);
        const FactoredRF Ld = tempered_L(ps->dual(), req.r0, req.eta.inverse());
        const FactoredRF eps = twisted_gamma(req) * L / Ld.reflect();
        detail::require_monomial(eps, "tempered");
        return {eps, L};
    }
    const auto& blocks = std::get<LanglandsQuotientParam>(req.param).blocks;
    FactoredRF eps = FactoredRF::one(q), L = FactoredRF::one(q);
    for (size_t i = 0; i < blocks.size(); ++i) {
        const TwistedFactorRequest block{blocks[i].P, req.r0, req.eta, req.psi};
        const auto [e, l] = twisted_eps_and_general_L(block);
        eps *= e.shift(2 * blocks[i].s);
        L *= l.shift(2 * blocks[i].s);
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            const Rational sh = blocks[i].s + blocks[j].s;
            for (const auto& a : blocks[i].P.chars)
                for (const auto& b : blocks[j].P.chars) {
                    const MultChar c = a * b * req.eta;
                    eps *= tate_eps(c, req.psi).shift(sh);
                    L *= tate_L(c).shift(sh);
                }
        }
    }
    detail::require_monomial(eps, "Langlands quotient");
    return {eps, L};
}

/// a = t^v u in F^x.
struct FieldElement {
    long long v = 0;
    RingElt u;
};

/// det((r0 o sigma) x eta)(a) |a|^(dim (s - 1/2)) =
/// omega(a)^(n+-1) eta(a)^dim q^(v dim / 2) Z^(v dim).
inline FactoredRF psi_dependence(const TwistedFactorRequest& req, const FieldElement& a) {
    const PrincipalSeriesParam flat = flatten(req.param);
    const long long n = flat.n();
    const long long dim = r0_dimension(req.r0, n);
    const long long q = req.q();
    Scalar omega_a = Scalar::q_power(q, 0);
    for (const auto& c : flat.chars) omega_a *= c.value(a.v, a.u);
    const Scalar unit = omega_a.pow(r0_det_exponent(req.r0, n)) * req.eta.value(a.v, a.u).pow(dim) *
                        Scalar::q_power(q, Rational(a.v * dim, 2));
    return FactoredRF::monomial(unit, a.v * dim);
}

/// twisted_gamma with psi^a.
inline FactoredRF twisted_gamma_scaled(const TwistedFactorRequest& req, const FieldElement& a) {
    return twisted_gamma(req.with_psi(req.psi.scaled(a.v, a.u)));
}

struct StabilityResult {
    FactoredRF gamma1, gamma2;
    bool equal = false;
    std::optional<FieldElement> c;  // psi(c x) = eta(1 + x) on p^h
    std::optional<FactoredRF> closed_form;
    bool closed_form_matches = false;
};

inline long long stability_threshold(const PrincipalSeriesParam& P1, const PrincipalSeriesParam& P2) {
    int m = 0;
    for (const auto* P : {&P1, &P2})
        for (const auto& c : P->chars) m = std::max(m, c.conductor());
    return 2LL * m + 2;
}

/// c = t^(n(psi) - a(eta)) u with psi(c x) = eta(1 + x) for x in p^h, h = floor(a/2) + 1.
/// u is determined modulo 1 + p^(a-h); searched over (O/p^(a-h))^x.
inline std::optional<FieldElement> find_stability_c(const MultChar& eta, const AddChar& psi) {
    const auto& F = eta.field();
    const int k = eta.conductor();
    if (k < 2) return std::nullopt;
    const int h = k / 2 + 1;
    const int width = k - h;
    const long long v = psi.conductor() - k;
    std::vector<std::pair<RingElt, RootOfUnity>> tests;  // (y, eta(1 + t^h y))
    for (int j = 0; j < width; ++j)
        for (int b : F.residue_field().basis()) {
            RingElt y = F.zero(F.level());
            y.raw()[j] = b;
            RingElt x = F.one(F.level());
            x.raw()[h + j] = F.residue_field().add(x.raw()[h + j], b);
            tests.emplace_back(std::move(y), eta.unit_value(x));
        }
    const std::vector<RingElt> candidates =
        width > 0 ? F.units(width) : std::vector<RingElt>{F.one(1)};
    for (const auto& cand : candidates) {
        RingElt u = F.one(F.level());
        for (int i = 0; i < cand.level(); ++i) u.raw()[i] = cand.raw()[i];
        const AddChar psic = psi.scaled(v, u);
        bool ok = true;
        for (const auto& [y, want] : tests)
            if (!(psic.value(h, y) == want)) {
                ok = false;
                break;
            }
        if (ok) return FieldElement{v, u};
    }
    return std::nullopt;
}

/// Equal central characters and a highly ramified eta give equal gammas;
/// also compares with det(r0 o sigma(c))^-1 gamma(eta, psi)^dim.
inline StabilityResult stability_check(const PrincipalSeriesParam& P1, const PrincipalSeriesParam& P2, R0 r0,
                                       const MultChar& eta, const AddChar& psi, bool enforce_threshold = true) {
    if (P1.n() != P2.n()) throw usage_error("ls-factors", "stability needs equal degrees");
    if (!(P1.central() == P2.central())) throw usage_error("ls-factors", "central characters differ");
    if (enforce_threshold && eta.conductor() < stability_threshold(P1, P2))
        throw usage_error("ls-factors", "a(eta) = " + std::to_string(eta.conductor()) + " is below the threshold " +
                                            std::to_string(stability_threshold(P1, P2)));
    StabilityResult r{principal_series_gamma(P1, r0, eta, psi), principal_series_gamma(P2, r0, eta, psi)};
    r.equal = r.gamma1 == r.gamma2;
    r.c = find_stability_c(eta, psi);
    if (!r.c) {
        if (enforce_threshold) throw search_error("ls-factors", "no c with psi(c x) = eta(1 + x) found");
        return r;
    }
    const long long n = P1.n();
    const Scalar det_c = P1.central().value(r.c->v, r.c->u).pow(r0_det_exponent(r0, n));
    const FactoredRF closed = FactoredRF(det_c.inverse()) * tate_gamma(eta, psi).pow(r0_dimension(r0, n));
    r.closed_form = closed;
    r.closed_form_matches = closed == r.gamma1;
    return r;
}

/// mu'(s) = gamma(s, pi, r0 x eta, psi) gamma(-s, pi^vee, r0 x eta^-1, psi-bar).
/// The constant gamma_{w0}(G/P)^2 is not included.
inline FactoredRF plancherel(const TwistedFactorRequest& req) {
    return twisted_gamma(req) * twisted_gamma(req.dual()).negate();
}

/// mu' for the pair (P, Q): rs_gamma(P, Q, psi) rs_gamma(P^vee, Q^vee, psi-bar)(-s).
inline FactoredRF plancherel_rs(const PrincipalSeriesParam& P, const PrincipalSeriesParam& Q, const AddChar& psi) {
    return rs_gamma(P, Q, psi) * rs_gamma(P.dual(), Q.dual(), psi.conj()).negate();
}

/// prod_i mu'(block i) prod_{j<i} mu'_RS(pi_i x pi_j eta) over the blocks of
/// the flattened parameter cut by `partition`.
inline FactoredRF plancherel_decomposition(const std::vector<int>& partition, const TwistedFactorRequest& req) {
    const PrincipalSeriesParam flat = flatten(req.param);
    int total = 0;
    for (int p : partition) {
        if (p < 1) throw usage_error("ls-factors", "partition parts must be positive");
        total += p;
    }
    if (total != flat.n()) throw usage_error("ls-factors", "partition does not sum to n");
    std::vector<PrincipalSeriesParam> blocks;
    size_t at = 0;
    for (int p : partition) {
        PrincipalSeriesParam b;
        for (int k = 0; k < p; ++k) b.chars.push_back(flat.chars[at++]);
        blocks.push_back(std::move(b));
    }
    FactoredRF mu = FactoredRF::one(req.q());
    for (size_t i = 0; i < blocks.size(); ++i) {
        mu *= plancherel({blocks[i], req.r0, req.eta, req.psi});
        for (size_t j = 0; j < i; ++j) mu *= plancherel_rs(blocks[i], blocks[j].times(req.eta), req.psi);
    }
    return mu;
}

} // namespace lsfactors
