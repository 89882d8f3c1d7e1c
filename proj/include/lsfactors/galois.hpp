#pragma once

// Galois side: monomial Weil parameters sigma = sum chi_i, the plethysms
// Sym^2 / wedge^2 twisted by eta, Artin factors by additivity, and the two
// comparison reports (local Langlands match and close-fields transfer).
//
// This path shares only the abelian factors with ls_factors.hpp: it never
// calls the principal-series products.

#include <string>
#include <vector>

#include "association.hpp"
#include "ls_factors.hpp"

namespace lsfactors {

struct WeilParam {
    std::vector<MultChar> chars;  // trivial monodromy

    int dim() const { return static_cast<int>(chars.size()); }
    WeilParam dual() const {
        WeilParam d;
        for (const auto& c : chars) d.chars.push_back(c.inverse());
        return d;
    }
    /// det sigma; `field` is used for the empty parameter.
    MultChar det(const TruncatedField& field) const {
        MultChar d = MultChar::trivial(field);
        for (const auto& c : chars) d = d * c;
        return d;
    }
    friend WeilParam operator+(const WeilParam& a, const WeilParam& b) {
        WeilParam s = a;
        s.chars.insert(s.chars.end(), b.chars.begin(), b.chars.end());
        return s;
    }
};

/// The Weil parameter attached to a principal-series or Langlands-quotient
/// parameter by class field theory (character by character).
inline WeilParam weil_parameter(const Parameter& p) { return {flatten(p).chars}; }

/// Sym^2: {chi_i chi_j eta : i <= j}; wedge^2: {chi_i chi_j eta : i < j}.
inline WeilParam r0_compose(const WeilParam& sigma, R0 r0, const MultChar& eta) {
    WeilParam out;
    for (size_t i = 0; i < sigma.chars.size(); ++i)
        for (size_t j = (r0 == R0::sym2 ? i : i + 1); j < sigma.chars.size(); ++j)
            out.chars.push_back(sigma.chars[i] * sigma.chars[j] * eta);
    return out;
}

/// L = prod L(chi), eps = prod eps(chi, psi), gamma = eps L(1-s, rho^vee) / L(s, rho).
inline AbelianFactorTriple artin_factors(const WeilParam& rho, const AddChar& psi) {
    const long long q = psi.field().q();
    FactoredRF L = FactoredRF::one(q), Ldual = FactoredRF::one(q), eps = FactoredRF::one(q);
    for (const auto& c : rho.chars) {
        L *= tate_L(c);
        Ldual *= tate_L(c.inverse());
        eps *= tate_eps(c, psi);
    }
    return {L, eps, eps * Ldual.reflect() / L, "artin"};
}

struct MatchReport {
    AbelianFactorTriple analytic;
    AbelianFactorTriple galois;
    bool gamma_equal = false;
    bool L_equal = false;
    bool eps_equal = false;
    bool ok() const { return gamma_equal && L_equal && eps_equal; }
    std::string describe() const {
        std::string s;
        auto line = [&](const char* what, bool ok, const FactoredRF& a, const FactoredRF& g) {
            s += std::string(what) + (ok ? " equal: " : " DIFFER: analytic ") + a.to_string() +
                 (ok ? "" : " vs galois " + g.to_string()) + "\n";
        };
        line("gamma", gamma_equal, analytic.gamma, galois.gamma);
        line("L", L_equal, analytic.L, galois.L);
        line("eps", eps_equal, analytic.eps, galois.eps);
        return s;
    }
};

/// Analytic gamma, L, eps against the Artin factors of (r0 o sigma) x eta.
inline MatchReport llc_match(const TwistedFactorRequest& req) {
    MatchReport r;
    const auto [eps, L] = twisted_eps_and_general_L(req);
    r.analytic = {L, eps, twisted_gamma(req), "langlands-shahidi"};
    r.galois = artin_factors(r0_compose(weil_parameter(req.param), req.r0, req.eta), req.psi);
    r.gamma_equal = r.analytic.gamma == r.galois.gamma;
    r.L_equal = r.analytic.L == r.galois.L;
    r.eps_equal = r.analytic.eps == r.galois.eps;
    return r;
}

struct TransferReport {
    std::string source_text;  // canonical gamma, L, eps on the source field
    std::string target_text;
    int source_level_read = 0;
    int target_level_read = 0;
    int certified_level = 0;
    bool identical = false;
    bool pure = false;
    bool ok() const { return identical && pure; }
};

namespace detail {
inline std::string factor_text(const TwistedFactorRequest& req) {
    const auto [eps, L] = twisted_eps_and_general_L(req);
    return "gamma=" + twisted_gamma(req).to_string() + "\nL=" + L.to_string() + "\neps=" + eps.to_string();
}

inline TwistedFactorRequest transport(const AssociationCertificate& cert, const TwistedFactorRequest& req,
                                      const AddChar& psi_target) {
    PrincipalSeriesParam P;
    for (const auto& c : flatten(req.param).chars) P.chars.push_back(cert.transport(c));
    Parameter param = P;
    if (auto lq = std::get_if<LanglandsQuotientParam>(&req.param)) {
        LanglandsQuotientParam t;
        for (const auto& b : lq->blocks) {
            PrincipalSeriesParam bp;
            for (const auto& c : b.P.chars) bp.chars.push_back(cert.transport(c));
            t.blocks.push_back({bp, b.s});
        }
        param = t;
    }
    return {param, req.r0, cert.transport(req.eta), psi_target};
}
} // namespace detail

/// Computes gamma, L, eps on both sides of an association certificate under
/// access tracking; requires identical canonical text and reads below the
/// certified level.
inline TransferReport deligne_transfer(const AssociationCertificate& cert, const TwistedFactorRequest& req,
                                       const AddChar& psi_target) {
    if (!cert.additive_window_agrees(req.psi, psi_target) || !(psi_target.field() == cert.target()))
        throw transfer_error("galois", "additive characters are not associated at level " +
                                           std::to_string(cert.level()));
    const TwistedFactorRequest target_req = detail::transport(cert, req, psi_target);
    TransferReport r;
    r.certified_level = cert.level();
    auto src = purity_check([&] { return detail::factor_text(req); });
    auto dst = purity_check([&] { return detail::factor_text(target_req); });
    r.source_text = src.value;
    r.target_text = dst.value;
    r.source_level_read = src.level_read;
    r.target_level_read = dst.level_read;
    r.identical = r.source_text == r.target_text;
    r.pure = r.source_level_read <= cert.level() && r.target_level_read <= cert.level();
    if (!r.pure)
        throw transfer_error("galois", "computation read level " +
                                           std::to_string(std::max(r.source_level_read, r.target_level_read)) +
                                           " beyond the certified level " + std::to_string(cert.level()));
    return r;
}

} // namespace lsfactors
