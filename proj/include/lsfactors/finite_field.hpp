#pragma once

// F_q for q = p^f <= 64 with full addition/multiplication tables.
// Elements are integers 0..q-1 whose base-p digits are the coefficients of
// the polynomial representative modulo a Conway polynomial.

#include <array>
#include <memory>
#include <mutex>
#include <map>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace lsfactors {

namespace detail {

struct ConwayEntry {
    int p, f;
    std::vector<int> coeffs;  // low degree first, monic
};

// Conway polynomials for the non-prime q <= 64.
inline const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}}, {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {3, 2, {2, 2, 1}},          {3, 3, {1, 2, 0, 1}},
        {5, 2, {2, 4, 1}},          {7, 2, {3, 6, 1}},
    };
    return table;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

class FiniteField {
public:
    using Elt = int;

    /// Shared, cached instance for q.
    static std::shared_ptr<const FiniteField> get(long long q) {
        static std::mutex mutex;
        static std::map<long long, std::shared_ptr<const FiniteField>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[q];
        if (!slot) slot = std::shared_ptr<const FiniteField>(new FiniteField(q));
        return slot;
    }

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }

    Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
    Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt inv(Elt a) const {
        if (a == 0) throw usage_error("local-field", "inverse of 0 in F_q");
        return inv_[a];
    }
    /// Absolute trace F_q -> F_p, as an integer 0..p-1.
    int trace(Elt a) const { return trace_[a]; }
    /// Fixed generator of F_q^x (the class of x modulo the Conway polynomial).
    Elt generator() const { return generator_; }
    /// Discrete log to base generator(); a != 0.
    int log(Elt a) const {
        if (a == 0) throw usage_error("local-field", "log of 0 in F_q");
        return log_[a];
    }
    Elt gen_pow(long long k) const { return exp_[mod_floor(k, q_ - 1)]; }

    /// Elements of the F_p-basis 1, x, ..., x^(f-1).
    std::vector<Elt> basis() const {
        std::vector<Elt> b;
        int v = 1;
        for (int i = 0; i < f_; ++i, v *= p_) b.push_back(v);
        return b;
    }

private:
    explicit FiniteField(long long q) {
        if (q < 2 || q > 64) throw usage_error("local-field", "q must be a prime power <= 64");
        const auto pf = detail::prime_power_of(q);
        p_ = static_cast<int>(pf.p);
        f_ = static_cast<int>(pf.f);
        q_ = static_cast<int>(q);
        std::vector<int> modulus;
        if (f_ == 1) {
            modulus = {0, 1};
        } else {
            for (const auto& e : detail::conway_table())
                if (e.p == p_ && e.f == f_) modulus = e.coeffs;
            if (modulus.empty()) throw usage_error("local-field", "no Conway polynomial for q = " + std::to_string(q));
        }
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = encode(poly_add(decode(a), decode(b)));
                mul_[a * q_ + b] = encode(poly_mulmod(decode(a), decode(b), modulus));
            }
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                if (add(a, b) == 0) neg_[a] = b;
                if (mul(a, b) == 1) inv_[a] = b;
            }
        // generator: x for f > 1, smallest primitive root for f = 1
        generator_ = -1;
        for (int g = (f_ > 1 ? p_ : 2); g < q_ && generator_ < 0; ++g) {
            if (q_ == 2) break;
            int order = 1;
            for (int v = g; v != 1 && order < q_; v = mul(v, g)) ++order;
            if (order == q_ - 1) generator_ = g;
        }
        if (q_ == 2) generator_ = 1;
        if (generator_ < 0) throw consistency_error("local-field", "no generator of F_q^x found");
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        int v = 1;
        for (size_t k = 0; k < exp_.size(); ++k, v = mul(v, generator_)) {
            exp_[k] = v;
            log_[v] = static_cast<int>(k);
        }
        trace_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            int t = 0, conj = a;
            for (int i = 0; i < f_; ++i) {
                t = add(t, conj);
                int c = 1;
                for (int j = 0; j < p_; ++j) c = mul(c, conj);
                conj = c;
            }
            if (t >= p_) throw consistency_error("local-field", "trace left F_p");
            trace_[a] = t;
        }
    }

    std::vector<int> decode(int a) const {
        std::vector<int> c(f_, 0);
        for (int i = 0; i < f_; ++i, a /= p_) c[i] = a % p_;
        return c;
    }
    int encode(const std::vector<int>& c) const {
        int a = 0;
        for (int i = f_ - 1; i >= 0; --i) a = a * p_ + c[i];
        return a;
    }
    std::vector<int> poly_add(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> c(f_);
        for (int i = 0; i < f_; ++i) c[i] = (a[i] + b[i]) % p_;
        return c;
    }
    std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& modulus) const {
        std::vector<int> c(2 * f_, 0);
        for (int i = 0; i < f_; ++i)
            for (int j = 0; j < f_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        for (int i = 2 * f_ - 1; i >= f_; --i) {
            int coef = c[i];
            if (coef == 0) continue;
            for (size_t j = 0; j < modulus.size(); ++j) c[i - f_ + j] = ((c[i - f_ + j] - coef * modulus[j]) % p_ + p_) % p_;
        }
        c.resize(f_);
        return c;
    }

    int p_ = 0, f_ = 0, q_ = 0;
    std::vector<int> add_, mul_, neg_, inv_, trace_, exp_, log_;
    int generator_ = 1;
};

} // namespace lsfactors
