#pragma once

// Exact arithmetic in cyclotomic fields Q(z_N).
//
// An element is stored as its coefficient vector in the power basis
// 1, z, ..., z^(phi(N)-1), i.e. reduced modulo the N-th cyclotomic
// polynomial. Binary operations on elements of different orders first embed
// both into Q(z_lcm). Rational elements always collapse to order 1.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace lsfactors {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

inline long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

inline long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

namespace detail {

/// Coefficients (low degree first) of the N-th cyclotomic polynomial.
inline const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built bottom-up.
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        auto& slot = cache[d];
        if (!slot.empty()) continue;
        std::vector<long long> p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (int e : divisors) {
            if (e >= d || d % e != 0) continue;
            const auto& phi_e = cache[e];
            // exact division of p by monic phi_e
            std::vector<long long> quotient(p.size() - phi_e.size() + 1, 0);
            for (int i = static_cast<int>(p.size()) - 1; i >= static_cast<int>(phi_e.size()) - 1; --i) {
                long long coef = p[i];
                int shift = i - (static_cast<int>(phi_e.size()) - 1);
                quotient[shift] = coef;
                for (size_t j = 0; j < phi_e.size(); ++j) p[shift + j] -= coef * phi_e[j];
            }
            p = std::move(quotient);
        }
        slot = std::move(p);
    }
    return cache[n];
}

} // namespace detail

/// A root of unity exp(2*pi*i*power/order), kept in lowest terms.
struct RootOfUnity {
    long long order = 1;
    long long power = 0;

    RootOfUnity() = default;
    RootOfUnity(long long ord, long long pow) : order(ord), power(pow) {
        if (order <= 0) throw usage_error("exact-arith", "root of unity order must be positive");
        power = mod_floor(power, order);
        long long g = std::gcd(order, power);
        if (g == 0) g = order;
        order /= g;
        power /= g;
        if (order == 1) power = 0;
    }

    RootOfUnity operator*(const RootOfUnity& o) const {
        long long l = lcm_ll(order, o.order);
        return {l, power * (l / order) + o.power * (l / o.order)};
    }
    RootOfUnity inverse() const { return {order, -power}; }
    RootOfUnity pow(long long e) const {
        return {order, mod_floor(power % order * mod_floor(e, order), order)};
    }
    bool is_one() const { return order == 1; }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

class Cyclo {
public:
    Cyclo() : order_(1), coeffs_{Rational(0)} {}
    Cyclo(long long v) : order_(1), coeffs_{Rational(v)} {}  // NOLINT
    Cyclo(const Rational& v) : order_(1), coeffs_{v} {}      // NOLINT

    /// z_order^power.
    static Cyclo root_of_unity(long long order, long long power) {
        RootOfUnity r(order, power);
        return root_of_unity(r);
    }
    static Cyclo root_of_unity(const RootOfUnity& r) {
        std::vector<Rational> poly(r.order, Rational(0));
        poly[r.power] = 1;
        return from_polynomial(static_cast<int>(r.order), std::move(poly));
    }

    /// Element sum_k poly[k] z_N^k for a polynomial of arbitrary degree.
    static Cyclo from_polynomial(int order, std::vector<Rational> poly) {
        if (order <= 0) throw usage_error("exact-arith", "cyclotomic order must be positive");
        Cyclo c;
        c.order_ = order;
        c.coeffs_ = reduce(order, std::move(poly));
        c.collapse();
        return c;
    }

    /// Element sum_k counts[k] z_N^k with integer counts indexed by k mod N.
    static Cyclo from_exponent_counts(int order, const std::vector<long long>& counts) {
        std::vector<Rational> poly(counts.begin(), counts.end());
        return from_polynomial(order, std::move(poly));
    }

    long long order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
    }
    bool is_rational() const { return order_ == 1; }
    const Rational& rational_value() const {
        if (!is_rational()) throw usage_error("exact-arith", "element is not rational");
        return coeffs_[0];
    }

    /// Image in Q(z_target); target must be a multiple of order().
    Cyclo embed(long long target) const {
        if (target % order_ != 0)
            throw usage_error("exact-arith", "cannot embed Q(z_" + std::to_string(order_) + ") into Q(z_" +
                                                 std::to_string(target) + ")");
        if (target == order_) return *this;
        long long step = target / order_;
        std::vector<Rational> poly(static_cast<size_t>((coeffs_.size() - 1) * step + 1), Rational(0));
        for (size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
        Cyclo c;
        c.order_ = target;
        c.coeffs_ = reduce(static_cast<int>(target), std::move(poly));
        return c;  // no collapse: callers want a fixed order
    }

    Cyclo operator-() const {
        Cyclo c = *this;
        for (auto& r : c.coeffs_) r = -r;
        return c;
    }
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        long long l = lcm_ll(a.order_, b.order_);
        Cyclo x = a.embed(l), y = b.embed(l);
        for (size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
        x.collapse();
        return x;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        if (a.is_rational()) return b.scaled(a.coeffs_[0]);
        if (b.is_rational()) return a.scaled(b.coeffs_[0]);
        long long l = lcm_ll(a.order_, b.order_);
        Cyclo x = a.embed(l), y = b.embed(l);
        std::vector<Rational> poly(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < y.coeffs_.size(); ++j)
                if (y.coeffs_[j] != 0) poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return from_polynomial(static_cast<int>(l), std::move(poly));
    }
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    Cyclo scaled(const Rational& r) const {
        Cyclo c = *this;
        for (auto& x : c.coeffs_) x *= r;
        c.collapse();
        return c;
    }

    /// Image under the automorphism z -> z^k, gcd(k, N) = 1.
    Cyclo galois(long long k) const {
        if (std::gcd(mod_floor(k, order_), order_) != 1 && order_ != 1)
            throw usage_error("exact-arith", "Galois exponent not coprime to the order");
        if (order_ == 1) return *this;
        std::vector<Rational> poly(order_, Rational(0));
        for (size_t j = 0; j < coeffs_.size(); ++j)
            poly[mod_floor(static_cast<long long>(j) * k, order_)] += coeffs_[j];
        return from_polynomial(static_cast<int>(order_), std::move(poly));
    }

    Cyclo conj() const { return galois(-1); }

    /// x * conj(x), a totally real element.
    Cyclo abs2() const { return *this * conj(); }

    Cyclo inverse() const {
        if (is_zero()) throw usage_error("exact-arith", "division by zero in cyclotomic field");
        if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
        // x conj(x) rational (roots of unity, Gauss sums): x^-1 = conj(x) / |x|^2
        const Cyclo c = conj();
        const Cyclo n2 = *this * c;
        if (n2.is_rational()) return c.scaled(Rational(1) / n2.rational_value());
        // x^-1 = (product of the other conjugates) / N(x)
        Cyclo others(1);
        for (long long k = 2; k < order_; ++k)
            if (std::gcd(k, order_) == 1) others *= galois(k);
        Cyclo norm = *this * others;
        if (!norm.is_rational()) throw consistency_error("exact-arith", "norm is not rational");
        return others.scaled(Rational(1) / norm.rational_value());
    }

    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        long long l = lcm_ll(a.order_, b.order_);
        return a.embed(l).coeffs_ == b.embed(l).coeffs_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// If this element is +-z_N^k return it as a root of unity.
    std::optional<RootOfUnity> as_root_of_unity() const {
        if (is_rational()) {
            if (coeffs_[0] == 1) return RootOfUnity(1, 0);
            if (coeffs_[0] == -1) return RootOfUnity(2, 1);
            return std::nullopt;
        }
        if (abs2() != Cyclo(1)) return std::nullopt;
        long long n2 = order_ % 2 == 0 ? order_ : 2 * order_;
        for (long long k = 0; k < n2; ++k)
            if (root_of_unity(n2, k) == *this) return RootOfUnity(n2, k);
        return std::nullopt;
    }

    std::complex<double> to_complex() const {
        std::complex<double> z(0.0, 0.0);
        const double two_pi = 2.0 * std::acos(-1.0);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            double angle = two_pi * static_cast<double>(k) / static_cast<double>(order_);
            z += static_cast<double>(coeffs_[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return z;
    }

    /// The same value written over the smallest Q(z_M) containing it.
    Cyclo minimal() const {
        for (long long m = 1; m < order_; ++m) {
            if (order_ % m != 0 || m % 4 == 2) continue;
            if (auto c = express_in(m)) return *c;
        }
        return *this;
    }

    /// Polynomial expression in z_M over the smallest field containing the
    /// value, e.g. "z_3 - z_3^2" or "3/2". Independent of how it was built.
    std::string to_string() const { return minimal().format(); }

private:
    std::string format() const {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0) {
                os << lsfactors::to_string(mag);
                continue;
            }
            if (mag != 1) os << lsfactors::to_string(mag) << '*';
            os << "z_" << order_;
            if (k != 1) os << '^' << k;
        }
        if (first) os << '0';
        return os.str();
    }

    // Solve x = sum_j c_j z_m^j (j < phi(m)) inside Q(z_N) by elimination.
    std::optional<Cyclo> express_in(long long m) const {
        const size_t rows = coeffs_.size();
        const size_t cols = detail::cyclotomic_polynomial(static_cast<int>(m)).size() - 1;
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
        for (size_t j = 0; j < cols; ++j) {
            const Cyclo b = root_of_unity(m, static_cast<long long>(j)).embed(order_);
            for (size_t i = 0; i < rows; ++i) a[i][j] = b.coeffs_[i];
        }
        for (size_t i = 0; i < rows; ++i) a[i][cols] = coeffs_[i];
        std::vector<size_t> pivot_col;
        size_t r = 0;
        for (size_t c = 0; c < cols && r < rows; ++c) {
            size_t piv = r;
            while (piv < rows && a[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(a[piv], a[r]);
            const Rational inv = Rational(1) / a[r][c];
            for (auto& v : a[r]) v *= inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                const Rational f = a[i][c];
                for (size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (size_t i = r; i < rows; ++i)
            if (a[i][cols] != 0) return std::nullopt;
        std::vector<Rational> poly(cols, Rational(0));
        for (size_t i = 0; i < r; ++i) poly[pivot_col[i]] = a[i][cols];
        return from_polynomial(static_cast<int>(m), std::move(poly));
    }

public:

    /// Lexicographic comparison of coefficient vectors after embedding both
    /// operands into Q(z_common). Only a total order for a fixed common.
    static int compare_in(long long common, const Cyclo& a, const Cyclo& b) {
        const auto x = a.embed(common), y = b.embed(common);
        for (size_t k = 0; k < x.coeffs_.size(); ++k) {
            if (x.coeffs_[k] < y.coeffs_[k]) return -1;
            if (y.coeffs_[k] < x.coeffs_[k]) return 1;
        }
        return 0;
    }

private:
    static std::vector<Rational> reduce(int order, std::vector<Rational> poly) {
        const auto& phi = detail::cyclotomic_polynomial(order);
        const size_t deg = phi.size() - 1;
        for (size_t i = poly.size(); i-- > deg;) {
            if (poly[i] == 0) continue;
            Rational coef = poly[i];
            size_t shift = i - deg;
            for (size_t j = 0; j <= deg; ++j)
                if (phi[j] != 0) poly[shift + j] -= coef * phi[j];
        }
        poly.resize(deg, Rational(0));
        if (poly.empty()) poly.push_back(Rational(0));
        return poly;
    }

    void collapse() {
        if (order_ == 1) return;
        for (size_t k = 1; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return;
        Rational c0 = coeffs_[0];
        order_ = 1;
        coeffs_.assign(1, c0);
    }

    long long order_;
    std::vector<Rational> coeffs_;
};

} // namespace lsfactors
