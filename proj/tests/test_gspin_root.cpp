#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include <lsfactors/gspin_root.hpp>

using namespace lsfactors;

namespace {

// Orbit of the identity under simple reflections: the whole Weyl group.
size_t weyl_order(const GSpinRootDatum& D) {
    std::set<IntMatrix> seen{WeylElt::identity(D).matrix()};
    std::vector<IntMatrix> frontier{WeylElt::identity(D).matrix()};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (int i = 0; i < D.rank(); ++i) {
                IntMatrix x(m.size(), IntVector(m.size(), 0));
                const auto& s = D.reflection(i);
                for (size_t a = 0; a < m.size(); ++a)
                    for (size_t b = 0; b < m.size(); ++b)
                        for (size_t c = 0; c < m.size(); ++c) x[a][b] += m[a][c] * s[c][b];
                if (seen.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

long long factorial(long long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST(RootDatum, CartanMatrices) {
    const GSpinRootDatum B2(2, Parity::odd);
    EXPECT_EQ(B2.cartan(), (IntMatrix{{2, -2}, {-1, 2}}));
    EXPECT_EQ(B2.group_name(), "GSpin_5");

    // D3 = A3: the middle node is alpha_1, joined to both others
    const GSpinRootDatum D3(3, Parity::even);
    EXPECT_EQ(D3.cartan(), (IntMatrix{{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}));

    const GSpinRootDatum D2(2, Parity::even);
    EXPECT_EQ(D2.cartan(), (IntMatrix{{2, 0}, {0, 2}}));
    EXPECT_THROW(GSpinRootDatum(1, Parity::even), usage_error);
}

TEST(RootDatum, RootCountsAndWeylOrders) {
    for (int n = 1; n <= 4; ++n) {
        const GSpinRootDatum B(n, Parity::odd);
        EXPECT_EQ(B.positive_roots().size(), static_cast<size_t>(n * n));
        EXPECT_EQ(weyl_order(B), static_cast<size_t>((1LL << n) * factorial(n)));
        if (n >= 2) {
            const GSpinRootDatum D(n, Parity::even);
            EXPECT_EQ(D.positive_roots().size(), static_cast<size_t>(n * (n - 1)));
            EXPECT_EQ(weyl_order(D), static_cast<size_t>((1LL << (n - 1)) * factorial(n)));
        }
    }
}

TEST(RootDatum, CorootPairingAndDualAction) {
    const GSpinRootDatum D(4, Parity::odd);
    const WeylElt w = WeylElt::from_word(D, {0, 3, 1, 2, 3});
    for (size_t i = 0; i < D.simple_roots().size(); ++i)
        for (size_t j = 0; j < D.simple_coroots().size(); ++j)
            EXPECT_EQ(detail::dot(w.act(D.simple_roots()[i]), w.act_dual(D, D.simple_coroots()[j])),
                      detail::dot(D.simple_roots()[i], D.simple_coroots()[j]));
}

TEST(SiegelW0, LengthsAndAdjointData) {
    EXPECT_EQ(siegel_w0(GSpinRootDatum(2, Parity::odd)).length(GSpinRootDatum(2, Parity::odd)), 3);
    EXPECT_EQ(siegel_w0(GSpinRootDatum(2, Parity::even)).length(GSpinRootDatum(2, Parity::even)), 1);
    const std::map<std::pair<int, Parity>, long long> dims{{{2, Parity::odd}, 3},
                                                           {{1, Parity::odd}, 1},
                                                           {{4, Parity::odd}, 10},
                                                           {{4, Parity::even}, 6},
                                                           {{3, Parity::even}, 3}};
    for (const auto& [key, want] : dims) {
        const GSpinRootDatum D(key.first, key.second);
        const AdjointData ad = adjoint_data(D);
        EXPECT_EQ(ad.dim, want);
        EXPECT_EQ(ad.measure_exponent, want);
        // length of w0 = number of roots in the unipotent radical
        EXPECT_EQ(siegel_w0(D).length(D), want);
    }
}

TEST(SiegelW0, WordRoundTrip) {
    for (int n = 2; n <= 4; ++n)
        for (Parity par : {Parity::odd, Parity::even}) {
            const GSpinRootDatum D(n, par);
            const WeylElt w0 = siegel_w0(D);
            EXPECT_EQ(WeylElt::from_word(D, w0.word()), w0);
            EXPECT_EQ(w0.word_length(), static_cast<size_t>(w0.length(D)));
            EXPECT_EQ(w0.compose(D, w0.inverse(D)), WeylElt::identity(D));
        }
}

TEST(SiegelW0, SelfAssociateness) {
    // w0 preserves theta for B_n and for D_n with n even; for D_n with n odd
    // it acts on theta through the diagram flip
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(is_self_associate(GSpinRootDatum(n, Parity::odd)));
    EXPECT_TRUE(is_self_associate(GSpinRootDatum(2, Parity::even)));
    EXPECT_TRUE(is_self_associate(GSpinRootDatum(4, Parity::even)));
    EXPECT_FALSE(is_self_associate(GSpinRootDatum(3, Parity::even)));
    EXPECT_FALSE(is_self_associate(GSpinRootDatum(5, Parity::even)));
}

TEST(Decomposition, BTwoTwoBlocks) {
    const GSpinRootDatum D(2, Parity::odd);
    const auto dec = langlands_decomposition(D, {1, 1});
    ASSERT_EQ(dec.factors.size(), 3u);
    EXPECT_TRUE(dec.product_matches);
    EXPECT_TRUE(dec.lengths_additive);
    for (const auto& f : dec.factors) EXPECT_EQ(f.elt.length(D), 1);
    EXPECT_EQ(dec.factors[0].label, "rank-block 1");
    EXPECT_EQ(dec.factors[1].label, "pair (2,1)");
    EXPECT_EQ(dec.factors[2].label, "rank-block 2");
}

TEST(Decomposition, BThreeOnesAndAllCompositions) {
    const GSpinRootDatum B3(3, Parity::odd);
    const auto dec = langlands_decomposition(B3, {1, 1, 1});
    ASSERT_EQ(dec.factors.size(), 6u);
    long long total = 0;
    for (const auto& f : dec.factors) total += f.elt.length(B3);
    EXPECT_EQ(total, 6);

    for (int n = 2; n <= 4; ++n)
        for (Parity par : {Parity::odd, Parity::even}) {
            const GSpinRootDatum D(n, par);
            // all compositions of n
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> parts{1};
                for (int b = 0; b < n - 1; ++b) {
                    if (mask & (1 << b)) parts.push_back(1);
                    else ++parts.back();
                }
                const auto d = langlands_decomposition(D, parts);
                EXPECT_TRUE(d.product_matches);
                EXPECT_TRUE(d.lengths_additive);
                const size_t k = parts.size();
                EXPECT_EQ(d.factors.size(), k * (k + 1) / 2);
                for (const auto& f : d.factors) EXPECT_EQ(f.elt.length(D), expected_factor_length(D, parts, f));
            }
        }
    EXPECT_THROW(langlands_decomposition(B3, {1, 1}), usage_error);
    EXPECT_THROW(langlands_decomposition(B3, {3, 0}), usage_error);
}
