#include <gtest/gtest.h>

#include <algorithm>

#include <lsfactors/acceptance.hpp>
#include <lsfactors/association.hpp>
#include <lsfactors/galois.hpp>

using namespace lsfactors;
using acceptance::characters;
using acceptance::unit_parts;
using acceptance::zeta;

namespace {

MultChar unr(const TruncatedField& F, const Scalar& a) { return MultChar::unramified(F, a.with_q(F.q())); }

MultChar with_conductor(const TruncatedField& F, int a, Scalar pi = Scalar(1)) {
    for (const auto& im : unit_parts(F, a))
        if (conductor_from_images(F, im) == a) return MultChar::make(F, a, pi, im);
    throw std::logic_error("no character of that conductor");
}

// multiset comparison through the canonical Artin factors of each piece
std::vector<std::string> texts(const WeilParam& w, const AddChar& psi) {
    std::vector<std::string> out;
    for (const auto& c : w.chars) {
        const auto t = artin_factors(WeilParam{{c}}, psi);
        out.push_back(t.gamma.to_string() + "|" + t.eps.to_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Galois, R0CompositionOfSums) {
    // r0(a + b) = r0(a) + r0(b) + (a (x) b) eta
    const TruncatedField F(3, 3);
    const AddChar psi = AddChar::canonical(F);
    const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
    const WeilParam a{{pool[1], pool[4]}}, b{{pool[6], pool[2], pool[9]}};
    const MultChar eta = pool[3];
    for (R0 r0 : {R0::sym2, R0::wedge2}) {
        WeilParam cross;
        for (const auto& x : a.chars)
            for (const auto& y : b.chars) cross.chars.push_back(x * y * eta);
        const WeilParam lhs = r0_compose(a + b, r0, eta);
        const WeilParam rhs = r0_compose(a, r0, eta) + r0_compose(b, r0, eta) + cross;
        EXPECT_EQ(lhs.dim(), r0_dimension(r0, 5));
        EXPECT_EQ(texts(lhs, psi), texts(rhs, psi));
        const auto fl = artin_factors(lhs, psi), fr = artin_factors(rhs, psi);
        EXPECT_EQ(fl.gamma, fr.gamma);
        EXPECT_EQ(fl.L, fr.L);
        EXPECT_EQ(fl.eps, fr.eps);
    }
}

TEST(Galois, DeterminantOfSym2AndWedge2) {
    // det(r0 o sigma) = det(sigma)^(n +- 1) for eta trivial
    const TruncatedField F(5, 2);
    const auto pool = characters(F, 1, {Scalar(1), zeta(3, 1)});
    const WeilParam s{{pool[1], pool[2], pool[5]}};
    const MultChar d = s.det(F);
    MultChar sym = MultChar::trivial(F), wed = MultChar::trivial(F);
    for (int k = 0; k < 4; ++k) sym = sym * d;
    for (int k = 0; k < 2; ++k) wed = wed * d;
    EXPECT_EQ(r0_compose(s, R0::sym2, MultChar::trivial(F)).det(F), sym);
    EXPECT_EQ(r0_compose(s, R0::wedge2, MultChar::trivial(F)).det(F), wed);
}

TEST(Galois, LlcMatchWedge2RankTwo) {
    for (long long q : {2, 3, 5}) {
        const TruncatedField F(q, 3);
        const auto pool = characters(F, 2, {Scalar(1), zeta(4, 1)});
        for (const auto& psi : acceptance::additive_grid(F))
            for (size_t a = 0; a + 1 < pool.size(); a += 3) {
                const TwistedFactorRequest req{PrincipalSeriesParam{{pool[a], pool[a + 1]}}, R0::wedge2,
                                               pool[(a + 2) % pool.size()], psi};
                const MatchReport r = llc_match(req);
                EXPECT_TRUE(r.ok()) << r.describe();
            }
    }
}

TEST(Galois, LlcMatchSym2RankOne) {
    const TruncatedField F(3, 3);
    for (const auto& chi : characters(F, 2, {Scalar(1), zeta(5, 1)}))
        for (const auto& eta : acceptance::eta_grid(F)) {
            const TwistedFactorRequest req{PrincipalSeriesParam{{chi}}, R0::sym2, eta, AddChar::canonical(F)};
            const MatchReport r = llc_match(req);
            EXPECT_TRUE(r.ok()) << r.describe();
            EXPECT_EQ(r.galois.gamma, tate_gamma(chi * chi * eta, req.psi));
        }
}

TEST(Galois, UnramifiedSym2RankThreeIsSpherical) {
    const TruncatedField F(5, 2);
    const PrincipalSeriesParam P{{unr(F, zeta(4, 1)), unr(F, zeta(3, 2)), unr(F, zeta(7, 3))}};
    const MultChar eta = unr(F, zeta(6, 1));
    const auto t = artin_factors(r0_compose(weil_parameter(P), R0::sym2, eta), AddChar::canonical(F));
    EXPECT_EQ(t.L, spherical_L(P, R0::sym2, eta));
    EXPECT_TRUE(t.eps.is_one());
}

TEST(Galois, LlcMatchLanglandsQuotient) {
    const TruncatedField F(3, 3);
    const LanglandsQuotientParam lq{{{PrincipalSeriesParam{{with_conductor(F, 1)}}, Rational(1, 2)},
                                     {PrincipalSeriesParam{{unr(F, zeta(4, 1)), with_conductor(F, 2)}}, Rational(0)}}};
    for (R0 r0 : {R0::sym2, R0::wedge2}) {
        const MatchReport r = llc_match({lq, r0, unr(F, zeta(3, 1)), AddChar::canonical(F)});
        EXPECT_TRUE(r.ok()) << r.describe();
    }
}

TEST(Transfer, CloseFieldsGiveIdenticalText) {
    const TruncatedField A(3, 6), B(3, 9);
    const MultChar a = with_conductor(A, 2), b = with_conductor(A, 1, zeta(4, 1));
    const AddChar psi_a = AddChar::canonical(A), psi_b = AddChar::canonical(B);
    const auto cert = associate(A, B, 6, {a, b}, {{psi_a, psi_b}});
    for (R0 r0 : {R0::sym2, R0::wedge2}) {
        const TwistedFactorRequest req{PrincipalSeriesParam{{a, b}}, r0, unr(A, zeta(3, 1)), psi_a};
        const TransferReport rep = deligne_transfer(cert, req, psi_b);
        EXPECT_TRUE(rep.identical) << rep.source_text << "\nvs\n" << rep.target_text;
        EXPECT_TRUE(rep.pure);
        EXPECT_LE(rep.source_level_read, 6);
        EXPECT_LE(rep.target_level_read, 6);
    }
}

TEST(Transfer, RejectsMismatchedAdditiveCharacters) {
    const TruncatedField A(3, 6), B(3, 9);
    const auto cert = associate(A, B, 6);
    const TwistedFactorRequest req{PrincipalSeriesParam{{MultChar::trivial(A)}}, R0::sym2, MultChar::trivial(A),
                                   AddChar::canonical(A)};
    EXPECT_THROW(deligne_transfer(cert, req, AddChar(B, 1, B.one(9))), transfer_error);
}
