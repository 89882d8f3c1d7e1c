#pragma once

// Root datum of GSpin_{2n+1} (odd) and GSpin_{2n} (even) on X = Z e0 + ... + Z en,
// Weyl group combinatorics, the Siegel element w0 and its block decomposition.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lsfactors {

enum class Parity { odd, even };

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

namespace detail {

inline IntMatrix identity_matrix(size_t d) {
    IntMatrix m(d, IntVector(d, 0));
    for (size_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const size_t d = a.size();
    IntMatrix r(d, IntVector(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

inline IntVector matvec(const IntMatrix& a, const IntVector& v) {
    IntVector r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix r(a.size(), IntVector(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) r[j][i] = a[i][j];
    return r;
}

inline long long dot(const IntVector& x, const IntVector& y) {
    long long s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace detail

class GSpinRootDatum {
public:
    GSpinRootDatum(int n, Parity parity) : n_(n), parity_(parity) {
        if (n < 1 || (parity == Parity::even && n < 2))
            throw usage_error("gspin-root", "GSpin root datum needs n >= 1 (odd) or n >= 2 (even)");
        const size_t d = static_cast<size_t>(n) + 1;
        for (int i = 1; i < n; ++i) {
            IntVector a(d, 0), c(d, 0);
            a[i] = 1, a[i + 1] = -1;
            c[i] = 1, c[i + 1] = -1;
            roots_.push_back(a);
            coroots_.push_back(c);
        }
        IntVector a(d, 0), c(d, 0);
        if (parity == Parity::odd) {
            a[n] = 1;
            c[n] = 2, c[0] = -1;
        } else {
            a[n - 1] = 1, a[n] = 1;
            c[n - 1] = 1, c[n] = 1, c[0] = -1;
        }
        roots_.push_back(a);
        coroots_.push_back(c);

        cartan_.assign(n, IntVector(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan_[i][j] = detail::dot(roots_[i], coroots_[j]);
        for (int i = 0; i < n; ++i)
            if (cartan_[i][i] != 2) throw consistency_error("gspin-root", "<alpha_i, alpha_i^vee> != 2");

        for (int i = 0; i < n; ++i) {
            reflections_.push_back(reflection(roots_[i], coroots_[i]));
            coreflections_.push_back(reflection(coroots_[i], roots_[i]));
        }
        // Phi = W.Delta, closed under simple reflections
        std::set<IntVector> all(roots_.begin(), roots_.end());
        std::vector<IntVector> frontier(roots_.begin(), roots_.end());
        while (!frontier.empty()) {
            std::vector<IntVector> next;
            for (const auto& r : frontier)
                for (const auto& s : reflections_) {
                    IntVector x = detail::matvec(s, r);
                    if (all.insert(x).second) next.push_back(x);
                }
            frontier = std::move(next);
        }
        for (const auto& r : all)
            if (is_positive(r)) positive_.push_back(r);
    }

    int n() const { return n_; }
    Parity parity() const { return parity_; }
    int rank() const { return n_; }
    size_t dim() const { return static_cast<size_t>(n_) + 1; }
    std::string type_name() const { return (parity_ == Parity::odd ? "B" : "D") + std::to_string(n_); }
    std::string group_name() const {
        return "GSpin_" + std::to_string(parity_ == Parity::odd ? 2 * n_ + 1 : 2 * n_);
    }

    const std::vector<IntVector>& simple_roots() const { return roots_; }
    const std::vector<IntVector>& simple_coroots() const { return coroots_; }
    /// cartan()[i][j] = <alpha_i, alpha_j^vee>.
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<IntVector>& positive_roots() const { return positive_; }
    /// theta = Delta minus the last simple root (Siegel Levi GL_n x GL_1).
    std::vector<int> theta() const {
        std::vector<int> t;
        for (int i = 0; i + 1 < n_; ++i) t.push_back(i);
        return t;
    }

    const IntMatrix& reflection(int i) const { return reflections_.at(i); }
    const IntMatrix& coreflection(int i) const { return coreflections_.at(i); }

    /// Positivity through h = (0, n, n-1, ..., 1), regular and positive on Delta.
    bool is_positive(const IntVector& root) const {
        long long h = 0;
        for (int i = 1; i <= n_; ++i) h += static_cast<long long>(n_ + 1 - i) * root[i];
        return h > 0;
    }

    /// Positive roots inside the span of the simple roots indexed by J.
    std::vector<IntVector> positive_roots_of(const std::vector<int>& J) const {
        std::set<IntVector> all;
        std::vector<IntVector> frontier;
        for (int j : J) {
            all.insert(roots_[j]);
            frontier.push_back(roots_[j]);
        }
        while (!frontier.empty()) {
            std::vector<IntVector> next;
            for (const auto& r : frontier)
                for (int j : J) {
                    IntVector x = detail::matvec(reflections_[j], r);
                    if (all.insert(x).second) next.push_back(x);
                }
            frontier = std::move(next);
        }
        std::vector<IntVector> out;
        for (const auto& r : all)
            if (is_positive(r)) out.push_back(r);
        return out;
    }

private:
    // x -> x - <x, b> a
    IntMatrix reflection(const IntVector& a, const IntVector& b) const {
        IntMatrix m = detail::identity_matrix(dim());
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j) m[i][j] -= a[i] * b[j];
        return m;
    }

    int n_;
    Parity parity_;
    std::vector<IntVector> roots_, coroots_;
    IntMatrix cartan_;
    std::vector<IntMatrix> reflections_, coreflections_;
    std::vector<IntVector> positive_;
};

/// A Weyl group element: its matrix on X and a reduced word (0-based simple
/// reflection indices, w = s_word[0] s_word[1] ...).
class WeylElt {
public:
    static WeylElt identity(const GSpinRootDatum& D) { return WeylElt(detail::identity_matrix(D.dim()), {}); }

    static WeylElt from_word(const GSpinRootDatum& D, const std::vector<int>& word) {
        IntMatrix m = detail::identity_matrix(D.dim());
        for (int i : word) m = detail::matmul(m, D.reflection(i));
        return from_matrix(D, m);
    }

    /// Recovers a reduced word by leftmost descent: repeatedly strip the
    /// smallest i with w^-1(alpha_i) < 0.
    static WeylElt from_matrix(const GSpinRootDatum& D, const IntMatrix& m) {
        std::vector<int> word;
        IntMatrix rest = m, rest_inv = inverse_matrix(D, m);
        for (size_t guard = 0; !(rest == detail::identity_matrix(D.dim())); ++guard) {
            if (guard > D.positive_roots().size())
                throw consistency_error("gspin-root", "matrix is not a Weyl group element");
            bool stripped = false;
            for (int i = 0; i < D.rank() && !stripped; ++i) {
                // w^-1 alpha_i < 0  iff  s_i is a left descent
                if (!D.is_positive(detail::matvec(rest_inv, D.simple_roots()[i]))) {
                    word.push_back(i);
                    rest = detail::matmul(D.reflection(i), rest);
                    rest_inv = detail::matmul(rest_inv, D.reflection(i));
                    stripped = true;
                }
            }
            if (!stripped) throw consistency_error("gspin-root", "no descent found");
        }
        return WeylElt(m, std::move(word));
    }

    const IntMatrix& matrix() const { return m_; }
    const std::vector<int>& word() const { return word_; }
    size_t word_length() const { return word_.size(); }

    IntVector act(const IntVector& x) const { return detail::matvec(m_, x); }
    /// Contragredient action on X^vee.
    IntVector act_dual(const GSpinRootDatum& D, const IntVector& y) const {
        return detail::matvec(detail::transpose(inverse_matrix(D, m_)), y);
    }

    /// Number of positive roots sent to negative roots.
    long long length(const GSpinRootDatum& D) const { return static_cast<long long>(inversions(D).size()); }

    std::set<IntVector> inversions(const GSpinRootDatum& D) const {
        std::set<IntVector> inv;
        for (const auto& r : D.positive_roots())
            if (!D.is_positive(act(r))) inv.insert(r);
        return inv;
    }

    WeylElt compose(const GSpinRootDatum& D, const WeylElt& o) const { return from_matrix(D, detail::matmul(m_, o.m_)); }
    WeylElt inverse(const GSpinRootDatum& D) const { return from_matrix(D, inverse_matrix(D, m_)); }

    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.m_ == b.m_; }

    /// "s1 s2 s1" style, 1-based; "1" for the identity.
    std::string word_string() const {
        if (word_.empty()) return "1";
        std::string s;
        for (size_t k = 0; k < word_.size(); ++k) s += (k ? " s" : "s") + std::to_string(word_[k] + 1);
        return s;
    }

    // Weyl elements have finite order dividing |W|; the inverse is the
    // matrix product along the reversed word, computed here by powering.
    static IntMatrix inverse_matrix(const GSpinRootDatum& D, const IntMatrix& m) {
        IntMatrix prev = detail::identity_matrix(D.dim()), cur = m;
        for (int k = 0; k < 100000; ++k) {
            if (cur == detail::identity_matrix(D.dim())) return prev;
            prev = cur;
            cur = detail::matmul(cur, m);
        }
        throw consistency_error("gspin-root", "matrix has no finite order");
    }

private:
    WeylElt(IntMatrix m, std::vector<int> word) : m_(std::move(m)), word_(std::move(word)) {}

    IntMatrix m_;
    std::vector<int> word_;
};

/// Longest element of the parabolic subgroup W_J.
inline WeylElt longest_element(const GSpinRootDatum& D, const std::vector<int>& J) {
    std::vector<int> word;
    IntMatrix m = detail::identity_matrix(D.dim());
    for (bool grew = true; grew;) {
        grew = false;
        for (int j : J) {
            if (D.is_positive(detail::matvec(m, D.simple_roots()[j]))) {
                m = detail::matmul(m, D.reflection(j));
                word.push_back(j);
                grew = true;
                break;
            }
        }
    }
    return WeylElt::from_word(D, word);
}

/// w0 = w_{l,Delta} w_{l,theta}.
inline WeylElt siegel_w0(const GSpinRootDatum& D) {
    std::vector<int> all(D.rank());
    for (int i = 0; i < D.rank(); ++i) all[i] = i;
    const WeylElt wl = longest_element(D, all);
    const WeylElt wt = longest_element(D, D.theta());
    return WeylElt::from_matrix(D, detail::matmul(wl.matrix(), wt.matrix()));
}

/// Indices j in theta with w0(alpha_i) = alpha_j, or -1 when w0(alpha_i) is
/// not a simple root of theta.
inline std::vector<int> siegel_theta_image(const GSpinRootDatum& D, const WeylElt& w0) {
    std::vector<int> image;
    for (int i : D.theta()) {
        const IntVector x = w0.act(D.simple_roots()[i]);
        int hit = -1;
        for (int j : D.theta())
            if (D.simple_roots()[j] == x) hit = j;
        image.push_back(hit);
    }
    return image;
}

inline bool is_self_associate(const GSpinRootDatum& D) {
    const auto image = siegel_theta_image(D, siegel_w0(D));
    return std::none_of(image.begin(), image.end(), [](int j) { return j < 0; });
}

struct AdjointData {
    long long dim;               // dim r0 = n(n+1)/2 or n(n-1)/2
    long long measure_exponent;  // vol(N cap I) = mu(O)^measure_exponent
};

inline AdjointData adjoint_data(const GSpinRootDatum& D) {
    const long long n = D.n();
    const long long d = D.parity() == Parity::odd ? n * (n + 1) / 2 : n * (n - 1) / 2;
    return {d, d};
}

/// The element with inversion set exactly `target` (which must be one).
inline WeylElt element_with_inversions(const GSpinRootDatum& D, const std::set<IntVector>& target) {
    IntMatrix y = detail::identity_matrix(D.dim());
    for (size_t step = 0; step <= target.size(); ++step) {
        const WeylElt cur = WeylElt::from_matrix(D, y);
        const auto have = cur.inversions(D);
        if (have == target) return cur;
        const IntMatrix yinv = WeylElt::inverse_matrix(D, y);
        bool grown = false;
        for (int i = 0; i < D.rank() && !grown; ++i) {
            // Inv(s_i y) = Inv(y) + {y^-1 alpha_i} when y^-1 alpha_i > 0
            const IntVector b = detail::matvec(yinv, D.simple_roots()[i]);
            if (D.is_positive(b) && target.count(b) && !have.count(b)) {
                y = detail::matmul(D.reflection(i), y);
                grown = true;
            }
        }
        if (!grown) break;
    }
    throw consistency_error("gspin-root", "root set is not an inversion set");
}

struct BlockFactor {
    std::string label;  // "rank-block i" or "pair (i,j)", 1-based
    int i = 0;          // 0-based block index
    int j = -1;         // 0-based partner block for pair factors, else -1
    WeylElt elt;
};

struct BlockDecomposition {
    std::vector<int> partition;
    std::vector<BlockFactor> factors;  // in product order: w0 = factors[0] factors[1] ...
    bool product_matches = false;
    bool lengths_additive = false;
};

/// w0 = prod_i (prod_{j<i} w_{i,j}) w_i for the Levi GL_{n_1} x ... x GL_{n_d}
/// x GL_1 of the Siegel Levi. Block i occupies coordinates n_1+..+n_{i-1}+1 ..
/// The inversion set of w0 (roots e_a + e_b, and e_a in the odd case) is
/// split into the roots inside block i (w_i) and those between blocks i and j
/// (w_{i,j}); each factor is recovered from a cumulative inversion set.
inline BlockDecomposition langlands_decomposition(const GSpinRootDatum& D, const std::vector<int>& partition) {
    int total = 0;
    for (int p : partition) {
        if (p < 1) throw usage_error("gspin-root", "partition parts must be positive");
        total += p;
    }
    if (total != D.n()) throw usage_error("gspin-root", "partition does not sum to n = " + std::to_string(D.n()));

    const size_t d = partition.size();
    std::vector<std::vector<int>> blocks(d);
    for (size_t i = 0, c = 1; i < d; ++i)
        for (int k = 0; k < partition[i]; ++k) blocks[i].push_back(static_cast<int>(c++));
    auto plus = [&](int a, int b) {
        IntVector v(D.dim(), 0);
        v[a] += 1;
        v[b] += 1;
        return v;
    };

    // pieces from the right end of the product: w_d, w_{d,d-1}, ..., w_{d,1}, w_{d-1}, ...
    struct Piece {
        int i, j;
        std::set<IntVector> roots;
    };
    std::vector<Piece> pieces;
    for (int i = static_cast<int>(d) - 1; i >= 0; --i) {
        Piece blk{i, -1, {}};
        const auto& B = blocks[i];
        for (size_t x = 0; x < B.size(); ++x) {
            for (size_t y = x + 1; y < B.size(); ++y) blk.roots.insert(plus(B[x], B[y]));
            if (D.parity() == Parity::odd) {
                IntVector v(D.dim(), 0);
                v[B[x]] = 1;
                blk.roots.insert(v);
            }
        }
        pieces.push_back(std::move(blk));
        for (int j = i - 1; j >= 0; --j) {
            Piece pr{i, j, {}};
            for (int a : blocks[i])
                for (int b : blocks[j]) pr.roots.insert(plus(a, b));
            pieces.push_back(std::move(pr));
        }
    }

    BlockDecomposition out;
    out.partition = partition;
    std::set<IntVector> acc;
    WeylElt prev = WeylElt::identity(D);
    std::vector<BlockFactor> reversed;
    for (const auto& p : pieces) {
        acc.insert(p.roots.begin(), p.roots.end());
        const WeylElt y = element_with_inversions(D, acc);
        const WeylElt f = y.compose(D, prev.inverse(D));
        const std::string label = p.j < 0 ? "rank-block " + std::to_string(p.i + 1)
                                          : "pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
        reversed.push_back({label, p.i, p.j, f});
        prev = y;
    }
    out.factors.assign(reversed.rbegin(), reversed.rend());

    const WeylElt w0 = siegel_w0(D);
    IntMatrix prod = detail::identity_matrix(D.dim());
    long long len_sum = 0;
    for (const auto& f : out.factors) {
        prod = detail::matmul(prod, f.elt.matrix());
        len_sum += f.elt.length(D);
    }
    out.product_matches = prod == w0.matrix();
    out.lengths_additive = len_sum == w0.length(D);
    return out;
}

/// Expected length of a decomposition factor: n_i(n_i +- 1)/2 or n_i n_j.
inline long long expected_factor_length(const GSpinRootDatum& D, const std::vector<int>& partition,
                                        const BlockFactor& f) {
    const long long a = partition[f.i];
    if (f.j >= 0) return a * partition[f.j];
    return D.parity() == Parity::odd ? a * (a + 1) / 2 : a * (a - 1) / 2;
}

} // namespace lsfactors
