#include <gtest/gtest.h>

#include <lsfactors/acceptance.hpp>
#include <lsfactors/association.hpp>
#include <lsfactors/tate.hpp>

using namespace lsfactors;
using acceptance::characters;
using acceptance::unit_parts;
using acceptance::zeta;

namespace {

MultChar char_with(const TruncatedField& F, std::vector<long long> powers, Scalar pi = Scalar(1)) {
    const auto gens = UnitGroupStruct::generators_at(F, F.level());
    std::vector<RootOfUnity> im;
    for (size_t g = 0; g < gens.size(); ++g) im.emplace_back(gens[g].order, g < powers.size() ? powers[g] : 0);
    return MultChar::make(F, conductor_from_images(F, im), pi, im);
}

MultChar with_conductor(const TruncatedField& F, int a, Scalar pi = Scalar(1)) {
    for (const auto& im : unit_parts(F, a))
        if (conductor_from_images(F, im) == a) return MultChar::make(F, a, pi, im);
    throw std::logic_error("no character of that conductor");
}

} // namespace

TEST(FiniteField, FieldAxiomsSmall) {
    for (long long q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 49, 64}) {
        const auto F = FiniteField::get(q);
        for (int a = 0; a < q; ++a) {
            EXPECT_EQ(F->add(a, F->neg(a)), 0);
            if (a != 0) EXPECT_EQ(F->mul(a, F->inv(a)), 1);
            for (int b = 0; b < q; ++b) EXPECT_EQ(F->mul(a, b), F->mul(b, a));
        }
        // the generator has order q - 1
        int x = 1, order = 0;
        do {
            x = F->mul(x, F->generator());
            ++order;
        } while (x != 1);
        EXPECT_EQ(order, q - 1);
    }
}

TEST(TruncatedField, RingLawsAndNilpotency) {
    const TruncatedField F(9, 4);
    const auto units = F.units(4);
    const RingElt t = [&] {
        RingElt e = F.zero(4);
        e.raw()[1] = 1;
        return e;
    }();
    EXPECT_NE(F.pow(t, 3, 4), F.zero(4));
    EXPECT_EQ(F.pow(t, 4, 4), F.zero(4));
    for (size_t i = 0; i < units.size(); i += 97)
        for (size_t j = 0; j < units.size(); j += 89) {
            const auto& a = units[i];
            const auto& b = units[j];
            EXPECT_EQ(F.mul(a, b, 4), F.mul(b, a, 4));
            EXPECT_EQ(F.mul(F.mul(a, b, 4), F.inverse(b, 4), 4), a);
            EXPECT_EQ(F.mul(a, F.add(b, t, 4), 4), F.add(F.mul(a, b, 4), F.mul(a, t, 4), 4));
        }
}

TEST(UnitGroupStruct, OrderAndDiscreteLogRoundTrip) {
    for (long long q : {2, 3, 4, 5}) {
        for (int m : {1, 2, 3, 4}) {
            const TruncatedField F(q, m);
            const auto ugs = UnitGroupStruct::get(F, m);
            long long expected = q - 1;
            for (int i = 1; i < m; ++i) expected *= q;
            EXPECT_EQ(ugs->group_order(), expected);
            EXPECT_EQ(static_cast<long long>(F.units(m).size()), expected);
            for (const auto& u : F.units(m)) {
                const auto& e = ugs->dlog(F, u);
                RingElt x = F.one(m);
                for (size_t g = 0; g < e.size(); ++g)
                    x = F.mul(x, F.pow(ugs->generator_element(F, g), e[g], m), m);
                EXPECT_EQ(x, u);
            }
        }
    }
}

TEST(MultChar, TrivialCharacterIsOneEverywhere) {
    const TruncatedField F(5, 3);
    const MultChar one = MultChar::trivial(F);
    EXPECT_EQ(one.conductor(), 0);
    for (const auto& u : F.units(3)) EXPECT_TRUE(one.unit_value(u).is_one());
    EXPECT_EQ(one.value(7, F.one(3)), Scalar(1).with_q(5));
}

TEST(MultChar, QuadraticCharacterModThreeMatchesLegendre) {
    // level 2: conductor 1 needs a < m
    const TruncatedField F(3, 2);
    const MultChar chi = char_with(F, {1});
    EXPECT_EQ(chi.conductor(), 1);
    EXPECT_EQ(chi.depth(), 0);
    const int legendre[3] = {0, 1, -1};
    for (const auto& u : F.units(2)) {
        const RootOfUnity v = chi.unit_value(u);
        EXPECT_EQ(v.is_one() ? 1 : -1, legendre[u[0]]);
    }
}

TEST(MultChar, ValidationErrors) {
    const TruncatedField F(3, 4);
    const auto gens = UnitGroupStruct::generators_at(F, 4);
    std::vector<RootOfUnity> trivial(gens.size());
    EXPECT_THROW(MultChar::make(F, 2, Scalar(1), trivial), validation_error);
    EXPECT_THROW(MultChar::make(F, 4, Scalar(1), trivial), validation_error);
    std::vector<RootOfUnity> bad = trivial;
    bad[0] = RootOfUnity(4, 1);  // F_3^x has order 2
    EXPECT_THROW(MultChar::make(F, 1, Scalar(1), bad), validation_error);
    EXPECT_THROW(MultChar::make(F, 0, Scalar(2), trivial), validation_error);
}

TEST(MultChar, ProductsInversesTwists) {
    const TruncatedField F(3, 4);
    const MultChar chi = with_conductor(F, 3, zeta(3, 1));
    EXPECT_EQ(chi * chi.inverse(), MultChar::trivial(F));
    EXPECT_EQ(chi.inverse().conductor(), chi.conductor());
    const MultChar quad = char_with(F, {1});
    const MultChar unr = MultChar::unramified(F, zeta(4, 1));
    EXPECT_EQ((quad * unr).conductor(), 1);
    const MultChar tw = chi.twist(Rational(1, 2));
    EXPECT_EQ(tw.pi_value(), chi.pi_value() * Scalar::q_power(3, Rational(-1, 2)));
    EXPECT_EQ(tw.images(), chi.images());
    EXPECT_FALSE(tw.unitary());
    // conductor of a product: <= max, equality when conductors differ
    for (const auto& a : characters(F, 3, {Scalar(1)}))
        for (const auto& b : characters(F, 3, {Scalar(1)})) {
            const int c = (a * b).conductor();
            EXPECT_LE(c, std::max(a.conductor(), b.conductor()));
            if (a.conductor() != b.conductor()) EXPECT_EQ(c, std::max(a.conductor(), b.conductor()));
        }
    EXPECT_THROW(chi * MultChar::trivial(TruncatedField(3, 5)), usage_error);
}

TEST(MultChar, Orthogonality) {
    for (long long q : {2, 3, 4, 5}) {
        const TruncatedField F(q, 3);
        const auto units = F.units(3);
        for (const auto& chi : characters(F, 2, {Scalar(1)})) {
            const long long order = chi.unit_order();
            std::vector<long long> counts(static_cast<size_t>(order), 0);
            for (const auto& u : units) {
                const RootOfUnity v = chi.unit_value(u);
                counts[static_cast<size_t>(v.power * (order / v.order))] += 1;
            }
            const Cyclo sum = Cyclo::from_exponent_counts(static_cast<int>(order), counts);
            EXPECT_EQ(sum, Cyclo(chi.ramified() ? 0 : static_cast<long long>(units.size())));
        }
    }
}

TEST(AddChar, ConductorLawForScaling) {
    const TruncatedField F(5, 4);
    const AddChar psi(F, 1, F.one(4));
    for (long long v = -3; v <= 3; ++v) EXPECT_EQ(psi.scaled(v, F.one(4)).conductor(), 1 - v);
    // trivial on p^n, nontrivial on p^(n-1)
    for (const auto& u : F.units(4)) EXPECT_TRUE(psi.value(1, u).is_one());
    bool nontrivial = false;
    for (const auto& u : F.units(4)) nontrivial = nontrivial || !psi.value(0, u).is_one();
    EXPECT_TRUE(nontrivial);
    EXPECT_THROW(AddChar(F, 0, F.zero(4)), validation_error);
}

TEST(DepthAndBounds, Examples) {
    const auto a = depth_and_bounds(2, 1);
    EXPECT_EQ(a.conductor_bound, 8);
    EXPECT_EQ(a.default_level, 12);
    const auto b = depth_and_bounds(1, 0);
    EXPECT_EQ(b.conductor_bound, 1);
    EXPECT_EQ(b.default_level, 5);
    const auto c = depth_and_bounds(3, 2);
    EXPECT_EQ(c.conductor_bound, 27);
    EXPECT_EQ(c.default_level, 31);
}

TEST(Association, DepthGateAndResidueData) {
    const TruncatedField A(3, 5), B(3, 7);
    EXPECT_NO_THROW(associate(A, A, 5));
    const MultChar depth3 = with_conductor(A, 4);
    ASSERT_EQ(depth3.depth(), 3);
    EXPECT_NO_THROW(associate(A, B, 5, {depth3}));
    const TruncatedField C(3, 7);
    const MultChar depth5 = with_conductor(C, 6);
    ASSERT_EQ(depth5.depth(), 5);
    EXPECT_THROW(associate(C, B, 5, {depth5}), association_error);
    EXPECT_THROW(associate(A, TruncatedField(9, 5), 5), association_error);
    EXPECT_THROW(associate(A, B, 6), association_error);

    const AddChar psi(A, 0, A.one(5)), psi_b(B, 0, B.one(7));
    EXPECT_NO_THROW(associate(A, B, 5, {}, {{psi, psi_b}}));
    RingElt off = B.one(7);
    off.raw()[2] = 1;
    EXPECT_THROW(associate(A, B, 5, {}, {{psi, AddChar(B, 0, off)}}), association_error);
}

TEST(Association, TransportIsFunctorial) {
    const TruncatedField A(3, 5), B(3, 8);
    const auto cert = associate(A, B, 5);
    const auto pool = characters(A, 2, {Scalar(1), zeta(4, 1)});
    for (const auto& a : pool)
        for (const auto& b : pool) EXPECT_EQ(cert.transport(a * b), cert.transport(a) * cert.transport(b));
}

TEST(Purity, ReadLevels) {
    const TruncatedField F(3, 5);
    const AddChar psi = AddChar::canonical(F);
    const MultChar c1 = char_with(F, {1});
    const auto r1 = purity_check([&] { return tate_gamma(c1, psi); });
    EXPECT_LE(r1.level_read, 1);
    const auto r0 = purity_check([&] { return tate_L(MultChar::trivial(F)); });
    EXPECT_EQ(r0.level_read, 0);
    const MultChar c3 = with_conductor(F, 3);
    ASSERT_EQ(c3.conductor(), 3);
    const auto r3 = purity_check([&] { return gauss_sum(c3, psi); });
    EXPECT_LE(r3.level_read, 3);
}
