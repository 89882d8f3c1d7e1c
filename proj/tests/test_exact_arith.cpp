#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include <lsfactors/factored_rf.hpp>
#include <lsfactors/rf_format.hpp>

using namespace lsfactors;

namespace {

Scalar z(long long n, long long k) { return Scalar::root_of_unity(RootOfUnity(n, k)); }
Scalar qp(long long q, long long num, long long den = 1) { return Scalar::q_power(q, Rational(num) / Rational(den)); }

// Independent oracle: evaluate through the complex embedding only.
std::complex<double> zeta(long long n, long long k) { return std::polar(1.0, 2 * M_PI * double(k) / double(n)); }

} // namespace

TEST(Cyclo, RootsOfUnityMultiplyAndCollapse) {
    const Cyclo a = Cyclo::root_of_unity(3, 1), b = Cyclo::root_of_unity(3, 2);
    EXPECT_EQ(a * b, Cyclo(1));
    EXPECT_TRUE((a * b).is_rational());
    EXPECT_EQ(a + b, Cyclo(-1));  // 1 + z + z^2 = 0
    EXPECT_EQ(Cyclo::root_of_unity(4, 1) * Cyclo::root_of_unity(4, 1), Cyclo(-1));
}

TEST(Cyclo, EqualityAcrossOrders) {
    EXPECT_EQ(Cyclo::root_of_unity(6, 2), Cyclo::root_of_unity(3, 1));
    EXPECT_EQ(Cyclo::root_of_unity(12, 3), Cyclo::root_of_unity(4, 1));
    EXPECT_NE(Cyclo::root_of_unity(12, 1), Cyclo::root_of_unity(4, 1));
}

TEST(Cyclo, ConjugationIsAnInvolutionAndAbs2OfRootIsOne) {
    for (long long n : {3, 4, 5, 8, 9, 12, 15}) {
        for (long long k = 0; k < n; ++k) {
            const Cyclo x = Cyclo::root_of_unity(n, k);
            EXPECT_EQ(x.conj().conj(), x);
            EXPECT_EQ(x.abs2(), Cyclo(1));
        }
        const Cyclo y = Cyclo::root_of_unity(n, 1) + Cyclo(2);
        EXPECT_EQ(y.abs2().conj(), y.abs2());
    }
}

TEST(Cyclo, InverseAgreesWithComplexEmbedding) {
    const Cyclo x = Cyclo::root_of_unity(5, 1) * Cyclo(3) + Cyclo::root_of_unity(5, 3) + Cyclo(1);
    const Cyclo inv = x.inverse();
    EXPECT_EQ(x * inv, Cyclo(1));
    const auto want = 1.0 / (3.0 * zeta(5, 1) + zeta(5, 3) + 1.0);
    EXPECT_NEAR(std::abs(inv.to_complex() - want), 0.0, 1e-12);
}

TEST(Cyclo, SqrtMinusThreePrintsInItsMinimalField) {
    const Cyclo g = Cyclo::root_of_unity(3, 1) - Cyclo::root_of_unity(3, 2);
    EXPECT_EQ(g * g, Cyclo(-3));
    const Cyclo h = g.scaled(Rational(1)) * Cyclo::root_of_unity(6, 3) * Cyclo(-1);  // same value via Q(z_6)
    EXPECT_EQ(g.to_string(), h.to_string());
    EXPECT_EQ(parse_cyclo(g.to_string()), g);
}

TEST(Scalar, IntegralQPowersMoveOutOfTheCycloPart) {
    const Scalar a(Cyclo(9), QPower(), 3);
    EXPECT_EQ(a, qp(3, 2));
    EXPECT_TRUE(a.cyclo() == Cyclo(1));
    // non-rational cyclo parts with q-content
    const Scalar b = Scalar(Cyclo::root_of_unity(9, 4).scaled(Rational(-1, 9)), QPower(Rational(2)), 3);
    EXPECT_EQ(b, -z(9, 4));
    EXPECT_EQ(b.to_string(), (-z(9, 4)).with_q(3).to_string());
}

TEST(Scalar, HalfIntegerPowersCanBeCyclotomic) {
    // sqrt(-3) = z_3 - z_3^2 = z_4 * 3^(1/2)
    const Scalar g(Cyclo::root_of_unity(3, 1) - Cyclo::root_of_unity(3, 2), QPower(), 3);
    const Scalar h = z(4, 1) * qp(3, 1, 2);
    EXPECT_EQ(g, h);
    EXPECT_NE(g, -h);
}

TEST(Scalar, GroupLawsAndModulus) {
    const Scalar a = z(12, 5) * qp(5, 1, 2), b = z(8, 3) * qp(5, -3, 2);
    EXPECT_EQ(a * a.inverse(), Scalar(1).with_q(5));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.pow(3) * a.pow(-3), Scalar(1).with_q(5));
    ASSERT_TRUE(a.modulus_exponent().has_value());
    EXPECT_EQ(*a.modulus_exponent(), Rational(1, 2));
}

TEST(FactoredRF, MultiplicationExamples) {
    const long long q = 5;
    const auto one_minus = [&](const Scalar& c, long long e = 1) { return FactoredRF::linear(c.with_q(q), e); };
    EXPECT_TRUE((one_minus(Scalar(1)) * one_minus(Scalar(1), -1)).is_one());

    const FactoredRF a = FactoredRF::z_power(1, q) * one_minus(Scalar(2));
    const FactoredRF b = FactoredRF::z_power(2, q) * one_minus(Scalar(2));
    EXPECT_EQ(a * b, FactoredRF::z_power(3, q) * one_minus(Scalar(2), 2));

    const FactoredRF c = one_minus(z(3, 1)) * one_minus(z(3, 2)) * one_minus(Scalar(1));
    EXPECT_EQ(c.factors().size(), 3u);
    const double Z = 0.5, qd = double(q);
    const std::complex<double> s = -std::log(Z) / std::log(qd);
    EXPECT_NEAR(std::abs(c.eval(s, qd) - std::complex<double>(1 - Z * Z * Z)), 0.0, 1e-12);
}

TEST(FactoredRF, Substitutions) {
    const long long q = 3;
    const Scalar c = z(4, 1).with_q(q);
    const FactoredRF f = FactoredRF::linear(c, 1);
    EXPECT_EQ(f.shift(Rational(1, 2)), FactoredRF::linear(c * qp(q, -1, 2), 1));
    EXPECT_EQ(FactoredRF::z_power(1, q).reflect(), FactoredRF::monomial(qp(q, -1), -1));

    const FactoredRF g = FactoredRF::monomial(z(5, 2) * qp(q, 1, 2), 3) * FactoredRF::linear(c, 2) *
                         FactoredRF::linear(qp(q, 1), -1);
    EXPECT_EQ(g.negate().negate(), g);
    EXPECT_EQ(g.reflect().reflect(), g);
    EXPECT_EQ(g.shift(Rational(1, 2)).shift(Rational(-3, 2)), g.shift(Rational(-1)));
    EXPECT_THROW(g.shift(Rational(1, 3)), precision_error);
}

TEST(FactoredRF, NegativeVariableTermsRenormalize) {
    // (1 - c Z^-1) = (-c) Z^-1 (1 - c^-1 Z)
    const long long q = 2;
    const Scalar c = z(3, 1).with_q(q);
    const FactoredRF f = FactoredRF::linear(c, 1).negate();
    const FactoredRF want = FactoredRF::monomial(-c, -1) * FactoredRF::linear(c.inverse(), 1);
    EXPECT_EQ(f, want);
}

TEST(FactoredRF, Evaluation) {
    EXPECT_NEAR(std::abs(FactoredRF::linear(Scalar(1).with_q(3), -1).eval(1.0, 3) - 1.5), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(FactoredRF::z_power(1, 2).eval(0.0, 2) - 1.0), 0.0, 1e-12);
    const FactoredRF f = FactoredRF::linear(Scalar(1).with_q(3), 1) * FactoredRF::linear(qp(3, 1), -1);
    EXPECT_NEAR(std::abs(f.eval(2.0, 3) - 4.0 / 3.0), 0.0, 1e-12);
    EXPECT_THROW(f.eval(1.0, 3), pole_error);
}

TEST(FactoredRF, ConjugationCompatibility) {
    const long long q = 5;
    const FactoredRF f = FactoredRF::monomial(z(7, 2) * qp(q, 1, 2), 1) * FactoredRF::linear(z(7, 3).with_q(q), -2);
    const std::complex<double> s(0.3, 1.7);
    EXPECT_NEAR(std::abs(std::conj(f.eval(std::conj(s), double(q))) - f.conj_coefficients().eval(s, double(q))), 0.0,
                1e-10);
}

TEST(FactoredRF, ZerosAndPoles) {
    const long long q = 3;
    const ZerosPoles a = FactoredRF::linear(Scalar(2).with_q(q), 1).zeros_poles();
    ASSERT_EQ(a.zeros.size(), 1u);
    EXPECT_EQ(a.zeros[0], Scalar(Cyclo(Rational(1, 2)), QPower(), q));
    EXPECT_TRUE(a.poles.empty());

    // -q Z (1 - Z)/(1 - q Z)
    const FactoredRF g = FactoredRF::monomial(-qp(q, 1), 1) * FactoredRF::linear(Scalar(1).with_q(q), 1) *
                         FactoredRF::linear(qp(q, 1), -1);
    const ZerosPoles b = g.zeros_poles();
    ASSERT_EQ(b.zeros.size(), 1u);
    ASSERT_EQ(b.poles.size(), 1u);
    EXPECT_EQ(b.zeros[0], Scalar(1).with_q(q));
    EXPECT_EQ(b.poles[0], qp(q, -1));
    EXPECT_EQ(b.monomial_power, 1);
}

TEST(RfFormat, RoundTrip) {
    const long long q = 3;
    const FactoredRF g = FactoredRF::monomial(-qp(q, 1), 1) * FactoredRF::linear(Scalar(1).with_q(q), 1) *
                         FactoredRF::linear(qp(q, 1), -1);
    EXPECT_EQ(g.to_string(), "-q^1\xC2\xB7Z^1\xC2\xB7(1 - Z)^1\xC2\xB7(1 - q^1\xC2\xB7Z)^-1");
    EXPECT_EQ(parse_factored_rf(g.to_string(), q), g);

    const FactoredRF h = FactoredRF::monomial(z(9, 4) * qp(q, -5, 2), -2) *
                         FactoredRF::linear(z(12, 7) * qp(q, 1, 2), 3) *
                         FactoredRF::linear((Scalar(Cyclo::root_of_unity(5, 1) + Cyclo(2))).with_q(q), -1);
    EXPECT_EQ(parse_factored_rf(h.to_string(), q), h);
    EXPECT_EQ(parse_factored_rf(h.to_string(), q).to_string(), h.to_string());
    EXPECT_EQ(parse_factored_rf("1", q), FactoredRF::one(q));
    EXPECT_THROW(parse_factored_rf("(1 - Z", q), parse_error);
}
