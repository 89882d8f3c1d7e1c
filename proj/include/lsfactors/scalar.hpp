#pragma once

// Scalars c * q^r: a cyclotomic number times a formal rational power of the
// residue field size q.

#include <complex>
#include <optional>
#include <string>

#include "cyclo.hpp"

namespace lsfactors {

/// Formal power q^r with r rational.
struct QPower {
    Rational exponent{0};

    QPower() = default;
    explicit QPower(Rational r) : exponent(std::move(r)) {}
    QPower(long long num, long long den) : exponent(Rational(num) / Rational(den)) {}

    QPower operator*(const QPower& o) const { return QPower(exponent + o.exponent); }
    QPower inverse() const { return QPower(-exponent); }
    bool is_one() const { return exponent == 0; }
    friend bool operator==(const QPower&, const QPower&) = default;

    /// True if the denominator of r divides `den`.
    bool on_lattice(long long den) const {
        return denominator(Rational(den) * exponent) == 1;
    }
};

namespace detail {

struct PrimePower {
    long long p = 0;
    long long f = 0;
};

inline PrimePower prime_power_of(long long q) {
    if (q < 2) throw usage_error("exact-arith", "q must be a prime power >= 2");
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;
    long long f = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++f;
    }
    if (rest != 1) throw usage_error("exact-arith", std::to_string(q) + " is not a prime power");
    return {p, f};
}

inline long long valuation(Integer n, long long p) {
    if (n < 0) n = -n;
    long long v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline Integer ipow(long long base, long long e) {
    Integer r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace detail

/// c * q^r. The base q may be left unbound (0) for q-free constants; binding
/// happens on first contact with a bound scalar. With q bound, cyclo parts
/// never carry integral powers of q: those are moved into r.
class Scalar {
public:
    Scalar() : cyclo_(1) {}
    Scalar(long long v) : cyclo_(v) {}  // NOLINT
    Scalar(Cyclo c) : cyclo_(std::move(c)) {}  // NOLINT
    Scalar(Cyclo c, QPower e, long long q = 0) : cyclo_(std::move(c)), qpow_(std::move(e)), q_(q) {
        canonicalize();
    }

    static Scalar q_power(long long q, Rational r) { return Scalar(Cyclo(1), QPower(std::move(r)), q); }
    static Scalar root_of_unity(const RootOfUnity& r) { return Scalar(Cyclo::root_of_unity(r)); }

    const Cyclo& cyclo() const { return cyclo_; }
    const QPower& qpower() const { return qpow_; }
    long long q() const { return q_; }
    bool is_zero() const { return cyclo_.is_zero(); }
    bool is_one() const { return qpow_.is_one() && cyclo_ == Cyclo(1); }

    Scalar with_q(long long q) const {
        if (q_ == q || q == 0) return *this;
        if (q_ != 0) throw usage_error("exact-arith", "scalars over different q mixed");
        return Scalar(cyclo_, qpow_, q);
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        long long q = join_q(a.q_, b.q_);
        return Scalar(a.cyclo_ * b.cyclo_, a.qpow_ * b.qpow_, q);
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar operator-() const { return Scalar(-cyclo_, qpow_, q_); }

    Scalar inverse() const {
        if (is_zero()) throw usage_error("exact-arith", "inverse of zero scalar");
        return Scalar(cyclo_.inverse(), qpow_.inverse(), q_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar pow(long long e) const {
        Scalar base = e >= 0 ? *this : inverse();
        long long n = e >= 0 ? e : -e;
        Scalar result = Scalar(Cyclo(1), QPower(), q_);
        while (n > 0) {
            if (n & 1) result *= base;
            base *= base;
            n >>= 1;
        }
        return result;
    }

    /// Complex conjugation of the cyclo part (q is real).
    Scalar conj() const { return Scalar(cyclo_.conj(), qpow_, q_); }

    /// If the cyclo part is a root of unity, |this| = q^r exactly; returns r.
    std::optional<Rational> modulus_exponent() const {
        if (cyclo_.abs2() == Cyclo(1)) return qpow_.exponent;
        return std::nullopt;
    }

    std::complex<double> to_complex(double q) const {
        return cyclo_.to_complex() * std::pow(q, static_cast<double>(qpow_.exponent));
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.q_ != b.q_ && a.q_ != 0 && b.q_ != 0) return false;
        long long q = join_q(a.q_, b.q_);
        const Scalar x = a.with_q(q), y = b.with_q(q);
        if (x.qpow_ == y.qpow_) return x.cyclo_ == y.cyclo_;
        // q^(1/2) may be cyclotomic: compare squares, then the sign numerically.
        const Rational diff = x.qpow_.exponent - y.qpow_.exponent;
        if (q == 0 || denominator(diff) != 2 || x.is_zero() || y.is_zero()) return false;
        const auto xc = x.to_complex(double(q)), yc = y.to_complex(double(q));
        if (std::abs(xc - yc) > std::abs(xc) * 1e-6) return false;
        const Scalar x2 = x * x, y2 = y * y;
        return x2.qpow_ == y2.qpow_ && x2.cyclo_ == y2.cyclo_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order for a fixed common cyclotomic order: q-exponent first.
    static int compare_in(long long common, const Scalar& a, const Scalar& b) {
        if (a.qpow_.exponent < b.qpow_.exponent) return -1;
        if (b.qpow_.exponent < a.qpow_.exponent) return 1;
        return Cyclo::compare_in(common, a.cyclo_, b.cyclo_);
    }

    /// "1", "-1", "q^1/2", "-q^1", "(z_3 - z_3^2)", "(z_4)·q^-1".
    std::string to_string() const {
        const bool has_q = !qpow_.is_one();
        const std::string qs = "q^" + lsfactors::to_string(qpow_.exponent);
        if (cyclo_ == Cyclo(1)) return has_q ? qs : "1";
        if (cyclo_ == Cyclo(-1)) return has_q ? "-" + qs : "-1";
        std::string s = "(" + cyclo_.to_string() + ")";
        if (has_q) s += "\xC2\xB7" + qs;
        return s;
    }

private:
    static long long join_q(long long a, long long b) {
        if (a != 0 && b != 0 && a != b) throw usage_error("exact-arith", "scalars over different q mixed");
        return a != 0 ? a : b;
    }

    // Moves integral powers of q out of the cyclo part. The p-adic content of
    // the power-basis coefficients does not depend on the ambient order (power
    // bases are integral bases), so this is representation independent.
    void canonicalize() {
        if (q_ == 0 || cyclo_.is_zero()) return;
        const auto pf = detail::prime_power_of(q_);
        bool first = true;
        long long v = 0;
        for (const Rational& c : cyclo_.coefficients()) {
            if (c == 0) continue;
            long long vc = detail::valuation(numerator(c), pf.p) - detail::valuation(denominator(c), pf.p);
            if (first || vc < v) v = vc;
            first = false;
        }
        long long k = v >= 0 ? v / pf.f : -((-v + pf.f - 1) / pf.f);
        if (k == 0) return;
        Rational qk(detail::ipow(q_, k >= 0 ? k : -k));
        cyclo_ = cyclo_.scaled(k >= 0 ? Rational(1) / qk : qk);
        qpow_ = qpow_ * QPower(Rational(k));
    }

    Cyclo cyclo_;
    QPower qpow_;
    long long q_ = 0;
};

} // namespace lsfactors
