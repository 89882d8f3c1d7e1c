#include <gtest/gtest.h>

#include <complex>

#include <lsfactors/acceptance.hpp>
#include <lsfactors/ls_factors.hpp>

using namespace lsfactors;
using acceptance::characters;
using acceptance::unit_parts;
using acceptance::zeta;

namespace {

Scalar qp(long long q, long long num, long long den = 1) { return Scalar::q_power(q, Rational(num) / Rational(den)); }

MultChar unr(const TruncatedField& F, const Scalar& a) { return MultChar::unramified(F, a.with_q(F.q())); }

MultChar with_conductor(const TruncatedField& F, int a, Scalar pi = Scalar(1)) {
    for (const auto& im : unit_parts(F, a))
        if (conductor_from_images(F, im) == a) return MultChar::make(F, a, pi, im);
    throw std::logic_error("no character of that conductor");
}

// Unramified Tate gamma with canonical psi, by hand:
// (1 - b Z) / (1 - b^-1 q^-1 Z^-1), Z = q^-s.
std::complex<double> unr_gamma(std::complex<double> b, double q, std::complex<double> s) {
    const std::complex<double> Z = std::pow(q, -s);
    return (1.0 - b * Z) / (1.0 - 1.0 / (b * q * Z));
}

} // namespace

TEST(RankinSelberg, SymmetricInItsArguments) {
    const TruncatedField F(3, 3);
    const AddChar psi = AddChar::canonical(F);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
    const PrincipalSeriesParam P{{pool[1], pool[5]}}, Q{{pool[3], pool[7], pool[2]}};
    EXPECT_EQ(rs_gamma(P, Q, psi), rs_gamma(Q, P, psi));
}

TEST(TwistedGamma, RankOneCases) {
    const TruncatedField F(5, 3);
    const AddChar psi = AddChar::canonical(F);
    for (const auto& chi : characters(F, 2, {Scalar(1), zeta(3, 1)}))
        for (const auto& eta : acceptance::eta_grid(F)) {
            const PrincipalSeriesParam P{{chi}};
            EXPECT_TRUE(twisted_gamma({P, R0::wedge2, eta, psi}).is_one());
            EXPECT_EQ(twisted_gamma({P, R0::sym2, eta, psi}), tate_gamma(chi * chi * eta, psi));
        }
}

TEST(TwistedGamma, RankTwoProductFormulas) {
    const TruncatedField F(3, 3);
    const AddChar psi = AddChar::canonical(F);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
    for (size_t a = 0; a < pool.size(); a += 3)
        for (size_t b = 1; b < pool.size(); b += 4)
            for (const auto& eta : acceptance::eta_grid(F)) {
                const auto& x = pool[a];
                const auto& y = pool[b];
                const PrincipalSeriesParam P{{x, y}};
                EXPECT_EQ(twisted_gamma({P, R0::wedge2, eta, psi}), tate_gamma(x * y * eta, psi));
                EXPECT_EQ(twisted_gamma({P, R0::sym2, eta, psi}),
                          tate_gamma(x * x * eta, psi) * tate_gamma(x * y * eta, psi) * tate_gamma(y * y * eta, psi));
            }
}

TEST(TwistedGamma, UnramifiedSym2AgainstComplexOracle) {
    const long long q = 5;
    const TruncatedField F(q, 2);
    const Scalar a = zeta(5, 1) * qp(q, 1, 2), b = zeta(3, 2) * qp(q, -1, 2), e = zeta(4, 1);
    const PrincipalSeriesParam P{{unr(F, a), unr(F, b)}};
    const FactoredRF g = twisted_gamma({P, R0::sym2, unr(F, e), AddChar::canonical(F)});
    const auto A = a.to_complex(double(q)), B = b.to_complex(double(q)), E = e.to_complex(double(q));
    for (std::complex<double> s : {std::complex<double>(0.3, 0.7), std::complex<double>(-1.1, 2.5)}) {
        const auto want = unr_gamma(A * A * E, q, s) * unr_gamma(A * B * E, q, s) * unr_gamma(B * B * E, q, s);
        EXPECT_NEAR(std::abs(g.eval(s, double(q)) - want), 0.0, 1e-9 * std::abs(want));
    }
}

TEST(LFactors, SphericalFormulas) {
    const long long q = 3;
    const TruncatedField F(q, 2);
    const Scalar a = zeta(7, 3), b = zeta(5, 1), e = zeta(4, 3);
    const MultChar eta = unr(F, e);
    const PrincipalSeriesParam one{{unr(F, a)}};
    EXPECT_EQ(spherical_L(one, R0::sym2, eta), FactoredRF::linear((a * a * e).with_q(q), -1));
    EXPECT_TRUE(spherical_L(one, R0::wedge2, eta).is_one());

    const PrincipalSeriesParam two{{unr(F, a), unr(F, b)}};
    EXPECT_EQ(spherical_L(two, R0::wedge2, eta), FactoredRF::linear((a * b * e).with_q(q), -1));
    EXPECT_EQ(spherical_L(two, R0::sym2, eta),
              FactoredRF::linear((a * a * e).with_q(q), -1) * FactoredRF::linear((a * b * e).with_q(q), -1) *
                  FactoredRF::linear((b * b * e).with_q(q), -1));
    EXPECT_THROW(spherical_L(PrincipalSeriesParam{{with_conductor(F, 1)}}, R0::sym2, eta), usage_error);
}

TEST(LFactors, TemperedMatchesSphericalForUnramifiedUnitaryData) {
    const TruncatedField F(5, 2);
    for (R0 r0 : {R0::sym2, R0::wedge2})
        for (int k = 0; k < 4; ++k) {
            const PrincipalSeriesParam P{{unr(F, zeta(4, k)), unr(F, zeta(3, 1)), unr(F, zeta(6, k + 1))}};
            const MultChar eta = unr(F, zeta(8, k));
            EXPECT_EQ(tempered_L(P, r0, eta), spherical_L(P, r0, eta));
        }
}

TEST(Epsilon, TrivialForUnramifiedDataAndCanonicalPsi) {
    const TruncatedField F(3, 2);
    const PrincipalSeriesParam P{{unr(F, zeta(4, 1)), unr(F, zeta(5, 2))}};
    for (R0 r0 : {R0::sym2, R0::wedge2}) {
        const auto [eps, L] = twisted_eps_and_general_L({P, r0, unr(F, zeta(3, 1)), AddChar::canonical(F)});
        EXPECT_TRUE(eps.is_one());
        EXPECT_EQ(L, spherical_L(P, r0, unr(F, zeta(3, 1))));
    }
}

TEST(Epsilon, FunctionalEquation) {
    const TruncatedField F(3, 3);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
    for (const auto& psi : acceptance::additive_grid(F))
        for (R0 r0 : {R0::sym2, R0::wedge2})
            for (size_t a = 0; a + 2 < pool.size(); a += 5) {
                const TwistedFactorRequest req{PrincipalSeriesParam{{pool[a], pool[a + 2]}}, r0, pool[a + 1], psi};
                EXPECT_TRUE((twisted_gamma(req) * twisted_gamma(req.dual()).reflect()).is_one());
            }
}

TEST(PsiDependence, ScalingByFieldElements) {
    const TruncatedField F(3, 4);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1) * qp(3, 1, 2)});
    const auto units = F.units(4);
    for (R0 r0 : {R0::sym2, R0::wedge2})
        for (size_t a = 0; a + 2 < pool.size(); a += 7) {
            const TwistedFactorRequest req{PrincipalSeriesParam{{pool[a], pool[a + 1], pool[a + 2]}}, r0, pool[a],
                                           AddChar::canonical(F)};
            for (long long v : {-1LL, 0LL, 2LL})
                for (size_t k = 0; k < units.size(); k += 23) {
                    const FieldElement x{v, units[k]};
                    EXPECT_EQ(twisted_gamma_scaled(req, x), psi_dependence(req, x) * twisted_gamma(req));
                }
        }
}

TEST(PsiDependence, UnramifiedUniformizerExample) {
    // n = 1, sym2, chi = eta = 1: gamma(psi^t) = q^(1/2) Z gamma(psi)
    const TruncatedField F(5, 2);
    const TwistedFactorRequest req{PrincipalSeriesParam{{MultChar::trivial(F)}}, R0::sym2, MultChar::trivial(F),
                                   AddChar::canonical(F)};
    EXPECT_EQ(psi_dependence(req, {1, F.one(2)}), FactoredRF::monomial(qp(5, 1, 2), 1));
}

TEST(Stability, EqualCentralCharactersAgree) {
    const TruncatedField F(3, 5);
    const AddChar psi = AddChar::canonical(F);
    const MultChar chi = with_conductor(F, 1, zeta(4, 1));
    const MultChar omega = unr(F, zeta(3, 1));
    const PrincipalSeriesParam P1{{chi, chi.inverse() * omega}}, P2{{MultChar::trivial(F), omega}};
    ASSERT_EQ(stability_threshold(P1, P2), 4);
    const MultChar eta = with_conductor(F, 4);
    for (R0 r0 : {R0::sym2, R0::wedge2}) {
        const StabilityResult r = stability_check(P1, P2, r0, eta, psi);
        EXPECT_TRUE(r.equal);
        ASSERT_TRUE(r.c.has_value());
        EXPECT_TRUE(r.closed_form_matches);
    }
    // below the threshold the check refuses
    EXPECT_THROW(stability_check(P1, P2, R0::sym2, with_conductor(F, 2), psi), usage_error);
    EXPECT_THROW(stability_check(P1, PrincipalSeriesParam{{chi, omega}}, R0::sym2, eta, psi), usage_error);
}

TEST(Plancherel, UniformizerScaling) {
    const TruncatedField F(3, 3);
    const auto pool = characters(F, 1, {Scalar(1), zeta(4, 1)});
    for (R0 r0 : {R0::sym2, R0::wedge2})
        for (size_t a = 0; a + 1 < pool.size(); a += 3) {
            const TwistedFactorRequest req{PrincipalSeriesParam{{pool[a], pool[a + 1]}}, r0, MultChar::trivial(F),
                                           AddChar::canonical(F)};
            const long long dim = r0_dimension(r0, 2);
            const FactoredRF mu = plancherel(req);
            const AddChar up = req.psi.scaled(1, F.one(3)), down = req.psi.scaled(-1, F.one(3));
            EXPECT_EQ(plancherel(req.with_psi(up)), FactoredRF(qp(3, dim)) * mu);
            EXPECT_EQ(plancherel(req.with_psi(down)), FactoredRF(qp(3, -dim)) * mu);
        }
}

TEST(Plancherel, DecompositionExamples) {
    const TruncatedField F(3, 3);
    const AddChar psi = AddChar::canonical(F);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
    const TwistedFactorRequest sym{PrincipalSeriesParam{{pool[2], pool[5]}}, R0::sym2, pool[1], psi};
    EXPECT_EQ(plancherel_decomposition({1, 1}, sym), plancherel(sym));
    const TwistedFactorRequest wedge{PrincipalSeriesParam{{pool[2], pool[5], pool[6]}}, R0::wedge2, pool[3], psi};
    EXPECT_EQ(plancherel_decomposition({2, 1}, wedge), plancherel(wedge));
    EXPECT_EQ(plancherel_decomposition({1, 2}, wedge), plancherel(wedge));
    EXPECT_THROW(plancherel_decomposition({2, 2}, wedge), usage_error);
}

TEST(LanglandsQuotient, ValidationAndFlattening) {
    const TruncatedField F(3, 3);
    const MultChar a = with_conductor(F, 1), b = unr(F, zeta(4, 1));
    const LanglandsQuotientParam lq{{{PrincipalSeriesParam{{a}}, Rational(1, 2)}, {PrincipalSeriesParam{{b}}, Rational(0)}}};
    EXPECT_NO_THROW(lq.validate());
    const auto flat = flatten(lq);
    ASSERT_EQ(flat.n(), 2);
    EXPECT_EQ(flat.chars[0], a.twist(Rational(1, 2)));
    const LanglandsQuotientParam bad{{{PrincipalSeriesParam{{a}}, Rational(0)}, {PrincipalSeriesParam{{b}}, Rational(1, 2)}}};
    EXPECT_THROW(bad.validate(), usage_error);
    const LanglandsQuotientParam off{{{PrincipalSeriesParam{{a}}, Rational(1, 3)}}};
    EXPECT_THROW(off.validate(), precision_error);
}
