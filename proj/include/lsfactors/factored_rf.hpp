#pragma once

// Rational functions of Z = q^-s kept in factored form
//     unit * Z^k * prod (1 - c_i Z)^e_i.
// Only multiplication, inversion and the substitutions s -> s + s0,
// s -> 1 - s and s -> -s are needed by the local factor formulas, and all of
// them preserve this shape, so nothing is ever expanded.

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace lsfactors {

/// Denominator bound for fractional shifts s0: s0 must lie in (1/d)Z.
inline constexpr long long default_shift_denominator = 2;

struct ZerosPoles {
    std::vector<Scalar> zeros;  // with multiplicity
    std::vector<Scalar> poles;
    long long monomial_power = 0;
};

class FactoredRF {
public:
    struct Factor {
        Scalar key;  // c in (1 - cZ)
        long long exponent = 0;
    };

    FactoredRF() : unit_(1) {}
    FactoredRF(Scalar unit, long long zpow = 0) : unit_(std::move(unit)), zpow_(zpow) {  // NOLINT
        if (unit_.is_zero()) throw usage_error("exact-arith", "factored rational function with zero unit");
        canonicalize();
    }

    static FactoredRF one(long long q = 0) { return FactoredRF(Scalar(Cyclo(1), QPower(), q)); }
    static FactoredRF monomial(Scalar unit, long long k) { return FactoredRF(std::move(unit), k); }
    /// Z^k.
    static FactoredRF z_power(long long k, long long q = 0) { return monomial(Scalar(Cyclo(1), QPower(), q), k); }
    /// (1 - cZ)^e.
    static FactoredRF linear(const Scalar& c, long long e = 1) {
        FactoredRF f(Scalar(Cyclo(1), QPower(), c.q()));
        f.factors_.push_back({c, e});
        f.canonicalize();
        return f;
    }
    static FactoredRF from_parts(Scalar unit, long long zpow, std::vector<Factor> factors) {
        FactoredRF f(std::move(unit), zpow);
        f.factors_ = std::move(factors);
        f.canonicalize();
        return f;
    }

    const Scalar& unit() const { return unit_; }
    long long zpow() const { return zpow_; }
    const std::vector<Factor>& factors() const { return factors_; }
    long long q() const { return q_; }

    bool is_monomial() const { return factors_.empty(); }
    bool is_one() const { return factors_.empty() && zpow_ == 0 && unit_.is_one(); }

    friend FactoredRF operator*(const FactoredRF& a, const FactoredRF& b) {
        FactoredRF r = a;
        r.unit_ = a.unit_ * b.unit_;
        r.zpow_ = a.zpow_ + b.zpow_;
        r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
        r.q_ = 0;
        r.canonicalize();
        return r;
    }
    FactoredRF& operator*=(const FactoredRF& o) { return *this = *this * o; }

    FactoredRF inverse() const {
        FactoredRF r = *this;
        r.unit_ = unit_.inverse();
        r.zpow_ = -zpow_;
        for (auto& f : r.factors_) f.exponent = -f.exponent;
        return r;
    }
    friend FactoredRF operator/(const FactoredRF& a, const FactoredRF& b) { return a * b.inverse(); }

    FactoredRF pow(long long e) const {
        FactoredRF r = e >= 0 ? *this : inverse();
        long long n = e >= 0 ? e : -e;
        r.unit_ = r.unit_.pow(n);
        r.zpow_ *= n;
        for (auto& f : r.factors_) f.exponent *= n;
        r.canonicalize();
        return r;
    }

    /// s -> s + s0, i.e. Z -> q^-s0 Z. s0 must lie in (1/den)Z.
    FactoredRF shift(const Rational& s0, long long den = default_shift_denominator) const {
        if (denominator(Rational(den) * s0) != 1)
            throw precision_error("exact-arith", "shift " + lsfactors::to_string(s0) + " is off the (1/" +
                                                     std::to_string(den) + ")Z lattice");
        const Scalar t = Scalar::q_power(q_, -s0);
        FactoredRF r = *this;
        r.unit_ = unit_ * t.pow(zpow_);
        for (auto& f : r.factors_) f.key = f.key * t;
        r.canonicalize();
        return r;
    }

    /// s -> 1 - s, i.e. Z -> q^-1 Z^-1.
    FactoredRF reflect() const { return invert_variable(Scalar::q_power(q_, Rational(-1))); }

    /// s -> -s, i.e. Z -> Z^-1.
    FactoredRF negate() const { return invert_variable(Scalar(Cyclo(1), QPower(), q_)); }

    /// Complex conjugate of every coefficient.
    FactoredRF conj_coefficients() const {
        FactoredRF r = *this;
        r.unit_ = unit_.conj();
        for (auto& f : r.factors_) f.key = f.key.conj();
        r.canonicalize();
        return r;
    }

    std::complex<double> eval(std::complex<double> s, double q) const {
        if (q < 2) throw usage_error("exact-arith", "evaluation needs q >= 2");
        const std::complex<double> z = std::exp(-s * std::log(q));
        std::complex<double> value = unit_.to_complex(q) * pow_int(z, zpow_);
        for (const auto& f : factors_) {
            const std::complex<double> term = 1.0 - f.key.to_complex(q) * z;
            if (f.exponent < 0 && std::abs(term) < 1e-12)
                throw pole_error("exact-arith", "pole at factor (1 - " + f.key.to_string() + "\xC2\xB7Z)^" +
                                                    std::to_string(f.exponent));
            value *= pow_int(term, f.exponent);
        }
        return value;
    }

    /// Zeros/poles in Z != 0: (1 - cZ)^e contributes c^-1 with multiplicity |e|.
    ZerosPoles zeros_poles() const {
        ZerosPoles zp;
        zp.monomial_power = zpow_;
        for (const auto& f : factors_) {
            auto& target = f.exponent > 0 ? zp.zeros : zp.poles;
            const Scalar root = f.key.inverse();
            for (long long i = 0; i < std::abs(f.exponent); ++i) target.push_back(root);
        }
        return zp;
    }

    friend bool operator==(const FactoredRF& a, const FactoredRF& b) {
        if (a.zpow_ != b.zpow_ || a.factors_.size() != b.factors_.size() || a.unit_ != b.unit_) return false;
        std::vector<bool> used(b.factors_.size(), false);
        for (const auto& f : a.factors_) {
            bool found = false;
            for (size_t j = 0; j < b.factors_.size(); ++j) {
                if (!used[j] && b.factors_[j].exponent == f.exponent && b.factors_[j].key == f.key) {
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }
    friend bool operator!=(const FactoredRF& a, const FactoredRF& b) { return !(a == b); }

    /// Canonical text, e.g. "-q^1·Z^1·(1 - Z)^1·(1 - q^1·Z)^-1"; parsed back
    /// by parse_factored_rf.
    std::string to_string() const {
        std::vector<std::string> parts;
        if (!unit_.is_one() || (zpow_ == 0 && factors_.empty())) parts.push_back(unit_.to_string());
        if (zpow_ != 0) parts.push_back("Z^" + std::to_string(zpow_));
        for (const auto& f : factors_) parts.push_back(factor_text(f.key) + "^" + std::to_string(f.exponent));
        return join(parts);
    }

    /// Human-oriented fraction form, e.g. "-q^1·Z·(1 - Z)/(1 - q^1·Z)".
    std::string to_display_string() const {
        std::vector<std::string> num, den;
        if (!unit_.is_one()) num.push_back(unit_.to_string());
        auto zterm = [](long long k) { return k == 1 ? std::string("Z") : "Z^" + std::to_string(k); };
        if (zpow_ > 0) num.push_back(zterm(zpow_));
        if (zpow_ < 0) den.push_back(zterm(-zpow_));
        for (const auto& f : factors_) {
            long long e = std::abs(f.exponent);
            std::string t = factor_text(f.key) + (e == 1 ? "" : "^" + std::to_string(e));
            (f.exponent > 0 ? num : den).push_back(t);
        }
        std::string s = num.empty() ? "1" : join(num);
        if (!den.empty()) s += "/" + (den.size() == 1 ? den[0] : "(" + join(den) + ")");
        return s;
    }

private:
    static std::complex<double> pow_int(std::complex<double> z, long long e) {
        std::complex<double> base = e >= 0 ? z : 1.0 / z;
        std::complex<double> r(1.0, 0.0);
        for (long long n = e >= 0 ? e : -e; n > 0; n >>= 1) {
            if (n & 1) r *= base;
            base *= base;
        }
        return r;
    }

    static std::string join(const std::vector<std::string>& parts) {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += "\xC2\xB7";
            s += parts[i];
        }
        return s;
    }

    static std::string factor_text(const Scalar& key) {
        return key.is_one() ? "(1 - Z)" : "(1 - " + key.to_string() + "\xC2\xB7Z)";
    }

    // Z -> w Z^-1: Z^k -> w^k Z^-k and
    // (1 - c w Z^-1) = (-c w) Z^-1 (1 - (c w)^-1 Z).
    FactoredRF invert_variable(const Scalar& w) const {
        FactoredRF r(unit_ * w.pow(zpow_), -zpow_);
        std::vector<Factor> fs;
        for (const auto& f : factors_) {
            const Scalar cw = f.key * w;
            r.unit_ = r.unit_ * (-cw).pow(f.exponent);
            r.zpow_ -= f.exponent;
            fs.push_back({cw.inverse(), f.exponent});
        }
        r.factors_ = std::move(fs);
        r.canonicalize();
        return r;
    }

    void canonicalize() {
        long long q = unit_.q();
        for (const auto& f : factors_) {
            long long fq = f.key.q();
            if (fq != 0 && q != 0 && fq != q) throw usage_error("exact-arith", "factors over different q mixed");
            if (fq != 0) q = fq;
        }
        if (q_ != 0 && q != 0 && q_ != q) throw usage_error("exact-arith", "factors over different q mixed");
        if (q == 0) q = q_;
        q_ = q;
        unit_ = unit_.with_q(q);

        std::vector<Factor> merged;
        for (auto f : factors_) {
            if (f.key.is_zero() || f.exponent == 0) continue;
            f.key = f.key.with_q(q);
            auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& m) { return m.key == f.key; });
            if (it == merged.end())
                merged.push_back(std::move(f));
            else
                it->exponent += f.exponent;
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Factor& m) { return m.exponent == 0; }),
                     merged.end());
        long long common = 1;
        for (const auto& m : merged) common = lcm_ll(common, m.key.cyclo().order());
        std::sort(merged.begin(), merged.end(), [common](const Factor& a, const Factor& b) {
            return Scalar::compare_in(common, a.key, b.key) < 0;
        });
        factors_ = std::move(merged);
    }

    Scalar unit_;
    long long zpow_ = 0;
    std::vector<Factor> factors_;
    long long q_ = 0;
};

} // namespace lsfactors
