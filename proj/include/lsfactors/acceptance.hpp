#pragma once

// The acceptance suite: eleven exact property checks over desk-scale grids.
// Each criterion reports PASS/FAIL, a case count, a detail line and its
// wall time against a budget.

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galois.hpp"
#include "gspin_root.hpp"

namespace lsfactors::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long long cases = 0;
    std::string detail;  // first failure, or notes
    double seconds = 0;
    double budget = 0;
};

// ---- grids ----------------------------------------------------------------

/// Unit-part images of every character of F with conductor <= max_conductor
/// and unit order <= max_order, in lexicographic exponent order.
inline std::vector<std::vector<RootOfUnity>> unit_parts(const TruncatedField& F, int max_conductor,
                                                        long long max_order = 1LL << 40) {
    const auto gens = UnitGroupStruct::generators_at(F, F.level());
    std::vector<std::vector<RootOfUnity>> out;
    std::vector<long long> e(gens.size(), 0);
    while (true) {
        std::vector<RootOfUnity> im;
        long long order = 1;
        for (size_t g = 0; g < gens.size(); ++g) {
            im.emplace_back(gens[g].order, e[g]);
            order = std::lcm(order, im.back().order);
        }
        if (order <= max_order && conductor_from_images(F, im) <= max_conductor) out.push_back(std::move(im));
        size_t k = gens.size();
        bool done = true;
        while (k-- > 0) {
            if (++e[k] < gens[k].order) {
                done = false;
                break;
            }
            e[k] = 0;
        }
        if (done) break;
    }
    return out;
}

inline MultChar character(const TruncatedField& F, const std::vector<RootOfUnity>& images, const Scalar& pi) {
    return MultChar::make(F, conductor_from_images(F, images), pi, images);
}

/// Every character with the given unit parts and uniformizer values.
inline std::vector<MultChar> characters(const TruncatedField& F, int max_conductor, const std::vector<Scalar>& pis,
                                        long long max_order = 1LL << 40) {
    std::vector<MultChar> out;
    for (const auto& im : unit_parts(F, max_conductor, max_order))
        for (const auto& pi : pis) out.push_back(character(F, im, pi));
    return out;
}

/// Multisets of size n drawn from `pool` (index-nondecreasing).
inline std::vector<PrincipalSeriesParam> multisets(const std::vector<MultChar>& pool, int n) {
    std::vector<PrincipalSeriesParam> out;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    if (pool.empty()) return out;
    while (true) {
        PrincipalSeriesParam P;
        for (size_t i : idx) P.chars.push_back(pool[i]);
        out.push_back(std::move(P));
        int k = n - 1;
        while (k >= 0 && idx[k] == pool.size() - 1) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[k];
    }
    return out;
}

/// Ordered compositions of n.
inline std::vector<std::vector<int>> compositions(int n) {
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= n; ++first)
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

inline Scalar zeta(long long order, long long power) { return Scalar::root_of_unity(RootOfUnity(order, power)); }

/// Additive characters of conductor -1, 0, 1 with scale 1 and a second scale.
inline std::vector<AddChar> additive_grid(const TruncatedField& F) {
    std::vector<AddChar> out;
    RingElt u = F.one(F.level());
    if (F.level() > 1) u.raw()[1] = 1;
    if (F.q() > 2) u.raw()[0] = F.q() - 1;
    for (int n : {-1, 0, 1}) {
        out.emplace_back(F, n, F.one(F.level()));
        out.emplace_back(F, n, u);
    }
    return out;
}

/// Unramified eta, a ramified eta of conductor 2 and the trivial character.
inline std::vector<MultChar> eta_grid(const TruncatedField& F) {
    std::vector<MultChar> out{MultChar::trivial(F), MultChar::unramified(F, zeta(3, 1))};
    for (const auto& im : unit_parts(F, 2))
        if (conductor_from_images(F, im) == 2) {
            out.push_back(character(F, im, Scalar(1)));
            break;
        }
    return out;
}

namespace detail {

class Checker {
public:
    explicit Checker(CriterionResult& r) : r_(r) {}
    void check(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (!ok && failures_++ == 0) r_.detail = describe();
    }
    bool ok() const { return failures_ == 0; }
    long long failures() const { return failures_; }

private:
    CriterionResult& r_;
    long long failures_ = 0;
};

inline std::string field_text(const TruncatedField& F) {
    return "q=" + std::to_string(F.q()) + " level=" + std::to_string(F.level());
}

} // namespace detail

// ---- criteria -------------------------------------------------------------

/// 1. gamma(chi, psi) reflect(gamma(chi^-1, psi-bar)) = 1.
inline void functional_equation(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3, 5}) {
        TruncatedField F(q, 4);
        const auto chars = characters(F, 3, {Scalar(1), zeta(12, 5), Scalar::q_power(q, Rational(1, 2))}, 12);
        for (const auto& psi : additive_grid(F))
            for (const auto& chi : chars) {
                const FactoredRF prod = tate_gamma(chi, psi) * tate_gamma(chi.inverse(), psi.conj()).reflect();
                c.check(prod.is_one(), [&] {
                    return detail::field_text(F) + " a=" + std::to_string(chi.conductor()) +
                           ": product = " + prod.to_string();
                });
            }
    }
    r.pass = c.ok();
}

/// 2. |G(chi, psi)|^2 = q^a(chi) for unitary ramified chi.
inline void gauss_modulus(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3, 5}) {
        TruncatedField F(q, 4);
        const auto chars = characters(F, 3, {Scalar(1), zeta(12, 5)}, 12);
        for (const auto& psi : additive_grid(F))
            for (const auto& chi : chars) {
                if (!chi.ramified()) continue;
                const Scalar G = gauss_sum(chi, psi);
                const Scalar m = G * G.conj();
                c.check(m == Scalar::q_power(q, Rational(chi.conductor())), [&] {
                    return detail::field_text(F) + ": |G|^2 = " + m.to_string();
                });
            }
    }
    r.pass = c.ok();
}

/// Unitary characters of conductor <= 2 on q in {2, 3} (level 3).
inline std::vector<MultChar> llc_pool(const TruncatedField& F) {
    return characters(F, 2, {Scalar(1), zeta(4, 1)});
}

/// 3. Analytic gamma, L, eps against the Artin factors.
inline void llc_compatibility(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3}) {
        TruncatedField F(q, 3);
        const auto pool = llc_pool(F);
        const AddChar psi = AddChar::canonical(F);
        for (int n : {1, 2, 3})
            for (const auto& P : multisets(pool, n))
                for (const auto& eta : eta_grid(F))
                    for (R0 r0 : {R0::sym2, R0::wedge2}) {
                        std::vector<Parameter> params{P};
                        // Langlands quotients: leading character lifted by 1/2
                        if (n >= 2) {
                            PrincipalSeriesParam head{{P.chars[0]}}, tail{{P.chars.begin() + 1, P.chars.end()}};
                            params.push_back(LanglandsQuotientParam{{{head, Rational(1, 2)}, {tail, Rational(0)}}});
                        }
                        for (const auto& param : params) {
                            const MatchReport m = llc_match({param, r0, eta, psi});
                            c.check(m.ok(), [&] { return detail::field_text(F) + " " + to_string(r0) + ": " + m.describe(); });
                        }
                    }
    }
    r.pass = c.ok();
}

/// 4. Unramified data: gamma = eps L(1-s, dual)/L(s) with the spherical L.
inline void spherical_consistency(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3}) {
        TruncatedField F(q, 2);
        std::vector<MultChar> pool;
        for (const Scalar& s : {Scalar(1), zeta(2, 1), zeta(3, 1), zeta(4, 1), Scalar::q_power(q, Rational(1, 2))})
            pool.push_back(MultChar::unramified(F, s));
        const std::vector<MultChar> etas{MultChar::trivial(F), MultChar::unramified(F, zeta(3, 2))};
        for (int n = 1; n <= 4; ++n)
            for (const auto& P : multisets(pool, n))
                for (const auto& eta : etas)
                    for (int npsi : {0, 1})
                        for (R0 r0 : {R0::sym2, R0::wedge2}) {
                            const AddChar psi(F, npsi, F.one(F.level()));
                            const TwistedFactorRequest req{P, r0, eta, psi};
                            FactoredRF eps = FactoredRF::one(q);
                            for (const auto& chi : r0_compose(WeilParam{P.chars}, r0, eta).chars)
                                eps *= tate_eps(chi, psi);
                            const FactoredRF L = spherical_L(P, r0, eta);
                            const FactoredRF Ld = spherical_L(P.dual(), r0, eta.inverse());
                            const FactoredRF expect = eps * Ld.reflect() / L;
                            const FactoredRF got = twisted_gamma(req);
                            c.check(eps.is_monomial() && got == expect, [&] {
                                return detail::field_text(F) + " n=" + std::to_string(n) + " " + to_string(r0) +
                                       ": " + got.to_string() + " vs " + expect.to_string();
                            });
                        }
    }
    r.pass = c.ok();
}

/// 5. Regrouping the blocks of one n = 3 parameter leaves gamma unchanged.
inline void multiplicativity(CriterionResult& r) {
    detail::Checker c(r);
    TruncatedField F(3, 3);
    const auto pool = llc_pool(F);
    const AddChar psi = AddChar::canonical(F);
    const std::vector<std::vector<Rational>> twists{
        {Rational(0), Rational(0), Rational(0)},
        {Rational(1, 2), Rational(0), Rational(-1, 2)},
        {Rational(1), Rational(1, 2), Rational(0)}};
    const std::vector<std::vector<int>> partitions{{1, 1, 1}, {2, 1}, {1, 2}, {3}};
    for (const auto& P : multisets(pool, 3))
        for (const auto& eta : eta_grid(F))
            for (R0 r0 : {R0::sym2, R0::wedge2})
                for (const auto& s : twists) {
                    PrincipalSeriesParam twisted;
                    for (int i = 0; i < 3; ++i) twisted.chars.push_back(P.chars[i].twist(s[i]));
                    const FactoredRF reference = principal_series_gamma(twisted, r0, eta, psi);
                    for (const auto& part : partitions) {
                        // singleton blocks carry their twist as s; larger blocks are pre-twisted
                        std::vector<LQBlock> blocks;
                        size_t at = 0;
                        for (int len : part) {
                            if (len == 1) {
                                blocks.push_back({PrincipalSeriesParam{{P.chars[at]}}, s[at]});
                            } else {
                                PrincipalSeriesParam b;
                                for (int k = 0; k < len; ++k) b.chars.push_back(twisted.chars[at + k]);
                                blocks.push_back({b, Rational(0)});
                            }
                            at += static_cast<size_t>(len);
                        }
                        const FactoredRF g = block_product_gamma(blocks, r0, eta, psi);
                        c.check(g == reference, [&] {
                            return to_string(r0) + ": regrouped gamma " + g.to_string() + " vs " + reference.to_string();
                        });
                    }
                }
    r.pass = c.ok();
}

/// 6. Stability: n = 2, q = 3, conductors <= 1, a(eta) = 4.
inline void stability(CriterionResult& r) {
    detail::Checker c(r);
    TruncatedField F(3, 5);
    const AddChar psi = AddChar::canonical(F);
    const auto pool = characters(F, 1, {Scalar(1), zeta(2, 1), zeta(3, 1), zeta(4, 1)});
    const auto params = multisets(pool, 2);
    std::vector<MultChar> etas;
    for (const auto& im : unit_parts(F, 4))
        if (conductor_from_images(F, im) == 4) etas.push_back(character(F, im, Scalar(1)));
    for (R0 r0 : {R0::sym2, R0::wedge2})
        for (const auto& eta : etas) {
            const FactoredRF tg = tate_gamma(eta, psi).pow(r0_dimension(r0, 2));
            const auto cc = find_stability_c(eta, psi);
            c.check(cc.has_value(), [&] { return std::string("no c found for an eta of conductor 4"); });
            if (!cc) continue;
            std::vector<FactoredRF> gammas;
            for (const auto& P : params) gammas.push_back(principal_series_gamma(P, r0, eta, psi));
            for (size_t i = 0; i < params.size(); ++i) {
                const MultChar omega = params[i].central();
                const Scalar det_c = omega.value(cc->v, cc->u).pow(r0_det_exponent(r0, 2));
                const FactoredRF closed = FactoredRF(det_c.inverse()) * tg;
                c.check(closed == gammas[i], [&] {
                    return to_string(r0) + ": closed form " + closed.to_string() + " vs " + gammas[i].to_string();
                });
                for (size_t j = i + 1; j < params.size(); ++j) {
                    if (!(params[j].central() == omega)) continue;
                    c.check(gammas[i] == gammas[j], [&] {
                        return to_string(r0) + ": " + gammas[i].to_string() + " vs " + gammas[j].to_string();
                    });
                }
            }
        }
    r.pass = c.ok();
}

/// 7. gamma(psi^a) = det((r0 o sigma) x eta)(a) |a|^(dim (s - 1/2)) gamma(psi).
inline void psi_dependence_check(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3}) {
        TruncatedField F(q, 4);
        const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
        std::vector<FieldElement> as;
        for (const auto& u2 : F.units(2)) {
            RingElt u = F.zero(F.level());
            for (int i = 0; i < 2; ++i) u.raw()[i] = u2.raw()[i];
            for (long long v : {-1, 0, 1}) as.push_back({v, u});
        }
        for (const AddChar& psi : {AddChar::canonical(F), AddChar(F, 1, F.one(F.level()))})
            for (int n : {1, 2})
                for (const auto& P : multisets(pool, n))
                    for (const auto& eta : eta_grid(F))
                        for (R0 r0 : {R0::sym2, R0::wedge2}) {
                            const TwistedFactorRequest req{P, r0, eta, psi};
                            const FactoredRF base = twisted_gamma(req);
                            for (const auto& a : as) {
                                const FactoredRF lhs = twisted_gamma_scaled(req, a);
                                const FactoredRF rhs = psi_dependence(req, a) * base;
                                c.check(lhs == rhs, [&] {
                                    return detail::field_text(F) + " v(a)=" + std::to_string(a.v) + " " +
                                           to_string(r0) + ": " + lhs.to_string() + " vs " + rhs.to_string();
                                });
                            }
                        }
    }
    r.pass = c.ok();
}

/// 8. Plancherel: decomposition, Galois side and the psi^a scaling |a|^-dim.
inline void plancherel_check(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3}) {
        TruncatedField F(q, 3);
        const auto pool = llc_pool(F);
        const AddChar psi = AddChar::canonical(F);
        const AddChar psi_w = psi.scaled(1, F.one(F.level()));
        const AddChar psi_winv = psi.scaled(-1, F.one(F.level()));
        for (int n : {1, 2, 3})
            for (const auto& P : multisets(pool, n))
                for (const auto& eta : eta_grid(F))
                    for (R0 r0 : {R0::sym2, R0::wedge2}) {
                        const TwistedFactorRequest req{P, r0, eta, psi};
                        const FactoredRF mu = plancherel(req);
                        for (const auto& part : compositions(n)) {
                            const FactoredRF dec = plancherel_decomposition(part, req);
                            c.check(dec == mu, [&] { return "decomposition differs: " + dec.to_string() + " vs " + mu.to_string(); });
                        }
                        const WeilParam rho = r0_compose(WeilParam{P.chars}, r0, eta);
                        const FactoredRF galois =
                            artin_factors(rho, psi).gamma * artin_factors(rho.dual(), psi.conj()).gamma.negate();
                        c.check(galois == mu, [&] { return "galois side differs: " + galois.to_string() + " vs " + mu.to_string(); });
                        const long long dim = r0_dimension(r0, n);
                        const FactoredRF up = plancherel(req.with_psi(psi_w));
                        const FactoredRF down = plancherel(req.with_psi(psi_winv));
                        c.check(up == mu * FactoredRF(Scalar::q_power(q, Rational(dim))), [&] {
                            return "mu(psi^w)/mu = " + (up / mu).to_string() + ", expected q^" + std::to_string(dim);
                        });
                        c.check(down == mu * FactoredRF(Scalar::q_power(q, Rational(-dim))), [&] {
                            return "mu(psi^(1/w))/mu = " + (down / mu).to_string() + ", expected q^-" + std::to_string(dim);
                        });
                    }
    }
    r.pass = c.ok();
    if (r.pass)
        r.detail = "scaling law |a|^-dim: psi(w x) gives q^+dim, psi(x/w) gives q^-dim";
}

/// 9. Close-fields transfer and the purity fuzzer.
inline void close_fields(CriterionResult& r) {
    detail::Checker c(r);
    std::mt19937_64 rng(20240601);
    const int l = 4;
    for (long long q : {2, 3})
        for (auto [L1, L2] : std::vector<std::pair<int, int>>{{4, 4}, {4, 6}, {6, 5}, {7, 8}}) {
            TruncatedField S(q, L1), T(q, L2);
            const auto cert = associate(S, T, l);
            const auto pool = characters(S, 2, {Scalar(1), zeta(4, 1)});
            const auto etas = eta_grid(S);
            for (int npsi : {0, 1}) {
                RingElt scale = S.one(L1);
                for (int i = 1; i < L1; ++i) scale.raw()[i] = static_cast<int>(rng() % q);
                const AddChar psi(S, npsi, scale);
                RingElt tscale = T.one(L2);
                for (int i = 0; i < L2; ++i) tscale.raw()[i] = i < l ? scale.raw()[i] : static_cast<int>(rng() % q);
                const AddChar psi_t(T, npsi, tscale);
                for (const auto& P : multisets(pool, 2))
                    for (R0 r0 : {R0::sym2, R0::wedge2}) {
                        const TwistedFactorRequest req{P, r0, etas[(P.chars[0].conductor() + npsi) % etas.size()], psi};
                        bool ok = false;
                        std::string why;
                        try {
                            ok = deligne_transfer(cert, req, psi_t).ok();
                            why = "texts differ";
                        } catch (const error& e) {
                            why = e.what();
                        }
                        c.check(ok, [&] { return "transfer " + std::to_string(L1) + "->" + std::to_string(L2) + ": " + why; });
                    }
            }
        }

    // purity fuzzer: mutate data above the read level, outputs stay identical
    TruncatedField F(3, 8);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
    const auto etas = eta_grid(F);
    const auto params = multisets(pool, 2);
    const int mutations = 1000;
    for (int k = 0; k < mutations; ++k) {
        const auto& P = params[rng() % params.size()];
        const R0 r0 = rng() % 2 ? R0::sym2 : R0::wedge2;
        const auto& eta = etas[rng() % etas.size()];
        const int npsi = static_cast<int>(rng() % 3) - 1;
        RingElt scale = F.one(F.level());
        scale.raw()[0] = 1 + static_cast<int>(rng() % 2);
        for (int i = 1; i < F.level(); ++i) scale.raw()[i] = static_cast<int>(rng() % 3);
        const TwistedFactorRequest req{P, r0, eta, AddChar(F, npsi, scale)};
        const auto base = purity_check([&] { return ::lsfactors::detail::factor_text(req); });
        const int read = base.level_read;
        // mutate the scale above the read level
        RingElt mutated = scale;
        for (int i = std::max(read, 1); i < F.level(); ++i) mutated.raw()[i] = static_cast<int>(rng() % 3);
        const std::string a = ::lsfactors::detail::factor_text(req.with_psi(AddChar(F, npsi, mutated)));
        // extend the level: every datum re-embedded with fresh high coefficients
        const int bigger = F.level() + 1 + static_cast<int>(rng() % 3);
        TruncatedField G(3, bigger);
        RingElt gscale = G.one(bigger);
        for (int i = 0; i < bigger; ++i) gscale.raw()[i] = i < read ? scale.raw()[i] : (i == 0 ? 1 : static_cast<int>(rng() % 3));
        PrincipalSeriesParam PG;
        for (const auto& chi : P.chars) PG.chars.push_back(chi.at_level(G));
        const std::string b = ::lsfactors::detail::factor_text({PG, r0, eta.at_level(G), AddChar(G, npsi, gscale)});
        c.check(a == base.value && b == base.value && read <= F.level(), [&] {
            return "mutation " + std::to_string(k) + " above read level " + std::to_string(read) + " changed the output";
        });
    }
    r.pass = c.ok();
    if (r.pass) r.detail = std::to_string(mutations) + " fuzz mutations, outputs bit-identical";
}

/// 10. Root data.
inline IntMatrix expected_cartan(int n, Parity parity) {
    IntMatrix C(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    if (parity == Parity::odd) {
        for (int i = 0; i + 1 < n; ++i) C[i][i + 1] = C[i + 1][i] = -1;
        if (n >= 2) C[n - 2][n - 1] = -2;  // <alpha_(n-1), alpha_n^vee>, alpha_n short
    } else {
        for (int i = 0; i + 2 < n; ++i) C[i][i + 1] = C[i + 1][i] = -1;
        if (n >= 3) C[n - 3][n - 1] = C[n - 1][n - 3] = -1;  // fork at alpha_(n-2)
    }
    return C;
}

inline void root_data(CriterionResult& r) {
    detail::Checker c(r);
    std::vector<std::string> not_self_associate;
    for (Parity parity : {Parity::odd, Parity::even})
        for (int n = (parity == Parity::odd ? 1 : 2); n <= 6; ++n) {
            const GSpinRootDatum D(n, parity);
            c.check(D.cartan() == expected_cartan(n, parity), [&] { return D.type_name() + ": Cartan matrix mismatch"; });
            const long long l0 = parity == Parity::odd ? n * (n + 1) / 2 : n * (n - 1) / 2;
            const WeylElt w0 = siegel_w0(D);
            c.check(w0.length(D) == l0, [&] {
                return D.type_name() + ": l(w0) = " + std::to_string(w0.length(D)) + ", expected " + std::to_string(l0);
            });
            const bool self = is_self_associate(D);
            if (!self) not_self_associate.push_back(D.group_name());
            c.check(self, [&] { return D.group_name() + ": w0(theta) != theta"; });
            if (n > 5) continue;
            for (const auto& part : compositions(n)) {
                const BlockDecomposition dec = langlands_decomposition(D, part);
                bool lengths = dec.product_matches && dec.lengths_additive;
                for (const auto& f : dec.factors) lengths = lengths && f.elt.length(D) == expected_factor_length(D, part, f);
                c.check(lengths, [&] { return D.type_name() + ": decomposition check failed"; });
            }
        }
    r.pass = c.ok();
    if (!not_self_associate.empty()) {
        std::string list;
        for (const auto& g : not_self_associate) list += (list.empty() ? "" : ", ") + g;
        r.detail = "w0(theta) = theta fails for " + list + " (Siegel parabolic, n odd, type D)";
    }
}

/// 11. Tempered L-functions have no poles with |Z| < 1.
inline void tempered_poles(CriterionResult& r) {
    detail::Checker c(r);
    for (long long q : {2, 3}) {
        TruncatedField F(q, 3);
        const auto pool = llc_pool(F);
        for (int n : {1, 2, 3})
            for (const auto& P : multisets(pool, n))
                for (const auto& eta : eta_grid(F))
                    for (R0 r0 : {R0::sym2, R0::wedge2}) {
                        const FactoredRF L = tempered_L(P, r0, eta);
                        for (const Scalar& pole : L.zeros_poles().poles) {
                            const auto e = pole.modulus_exponent();
                            c.check(e && *e >= 0, [&] { return "pole " + pole.to_string() + " inside the unit disc"; });
                        }
                    }
    }
    r.pass = c.ok();
}

// ---- driver ---------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    double budget;
    void (*run)(CriterionResult&);
};

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "local functional equation", 10, functional_equation},
        {2, "Gauss sum modulus", 5, gauss_modulus},
        {3, "LLC compatibility", 60, llc_compatibility},
        {4, "spherical consistency", 10, spherical_consistency},
        {5, "multiplicativity invariance", 10, multiplicativity},
        {6, "stability", 60, stability},
        {7, "psi-dependence", 30, psi_dependence_check},
        {8, "Plancherel measure", 30, plancherel_check},
        {9, "close-fields transfer", 30, close_fields},
        {10, "root data", 10, root_data},
        {11, "tempered L pole proxy", 10, tempered_poles},
    };
    return all;
}

inline CriterionResult run_criterion(const Criterion& k) {
    CriterionResult r{k.id, k.name};
    r.budget = k.budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        k.run(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && r.seconds > r.budget) {
        r.pass = false;
        r.detail = "over the time budget";
    }
    return r;
}

inline std::string format(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.cases << " cases, ";
    os.setf(std::ios::fixed);
    os.precision(2);
    os << r.seconds << " s (budget " << static_cast<int>(r.budget) << " s)";
    if (!r.detail.empty()) os << " -- " << r.detail;
    return os.str();
}

/// Runs the selected criteria (all if empty), one line each. True if all pass.
inline bool run_all(std::ostream& out, const std::vector<int>& only = {}) {
    bool all = true;
    for (const auto& k : criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), k.id) == only.end()) continue;
        const CriterionResult r = run_criterion(k);
        out << format(r) << std::endl;
        all = all && r.pass;
    }
    return all;
}

} // namespace lsfactors::acceptance
