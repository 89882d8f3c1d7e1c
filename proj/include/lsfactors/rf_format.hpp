#pragma once

// Parser for the canonical text produced by FactoredRF::to_string().
//
//   rf      := part { "·" part }
//   part    := scalar | "Z^" int | "(1 - " [ scalar "·" ] "Z)^" int
//   scalar  := ["-"] "q^" rat | ["-"] "1" | "(" cyclo ")" [ "·q^" rat ]
//   cyclo   := ["-"] term { (" + " | " - ") term }
//   term    := rat | [ rat "*" ] "z_" N [ "^" k ]
//   rat     := ["-"] digits [ "/" digits ]

#include <cctype>
#include <string>
#include <string_view>

#include "factored_rf.hpp"

namespace lsfactors {

namespace detail {

class RfParser {
public:
    RfParser(std::string_view text, long long q) : s_(text), q_(q) {}

    FactoredRF parse_rf() {
        Scalar unit(Cyclo(1), QPower(), q_);
        long long zpow = 0;
        std::vector<FactoredRF::Factor> factors;
        bool first = true;
        while (first || eat(dot)) {
            first = false;
            if (starts_with("Z^")) {
                pos_ += 2;
                zpow += parse_int();
            } else if (starts_with("(1 - ") && paren_contains_Z()) {
                pos_ += 5;
                Scalar key(Cyclo(1), QPower(), q_);
                if (!starts_with("Z)")) {
                    key = parse_scalar();
                    expect(dot);
                }
                expect("Z)^");
                factors.push_back({key, parse_int()});
            } else {
                unit = unit * parse_scalar();
            }
        }
        if (pos_ != s_.size()) fail("trailing input");
        return FactoredRF::from_parts(unit, zpow, std::move(factors));
    }

    Scalar parse_scalar() {
        bool neg = eat("-");
        Scalar result(Cyclo(1), QPower(), q_);
        if (starts_with("q^")) {
            pos_ += 2;
            result = Scalar::q_power(q_, parse_rational());
        } else if (eat("(")) {
            Cyclo c = parse_cyclo();
            expect(")");
            QPower e;
            if (starts_with(std::string(dot) + "q^")) {
                pos_ += dot.size() + 2;
                e = QPower(parse_rational());
            }
            result = Scalar(c, e, q_);
        } else {
            Rational r = parse_rational();
            result = Scalar(Cyclo(r), QPower(), q_);
        }
        return neg ? -result : result;
    }

    Cyclo parse_cyclo() {
        Cyclo total(0);
        bool neg = eat("-");
        while (true) {
            Cyclo term = parse_term();
            total += neg ? -term : term;
            if (eat(" + "))
                neg = false;
            else if (eat(" - "))
                neg = true;
            else
                break;
        }
        return total;
    }

    bool at_end() const { return pos_ == s_.size(); }

private:
    static constexpr std::string_view dot = "\xC2\xB7";

    Cyclo parse_term() {
        Rational coef = 1;
        if (!starts_with("z_")) {
            coef = parse_rational();
            if (!eat("*")) return Cyclo(coef);
        }
        expect("z_");
        long long order = parse_int();
        long long power = 1;
        if (eat("^")) power = parse_int();
        if (order <= 0) fail("bad cyclotomic order");
        return Cyclo::root_of_unity(order, power).scaled(coef);
    }

    Rational parse_rational() {
        bool neg = eat("-");
        Integer num = parse_digits();
        Integer den = 1;
        if (eat("/")) den = parse_digits();
        if (den == 0) fail("zero denominator");
        Rational r(num, den);
        return neg ? Rational(-r) : r;
    }

    long long parse_int() {
        bool neg = eat("-");
        Integer v = parse_digits();
        long long x = static_cast<long long>(v);
        return neg ? -x : x;
    }

    Integer parse_digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    bool paren_contains_Z() const {
        int depth = 0;
        for (size_t i = pos_; i < s_.size(); ++i) {
            if (s_[i] == '(') ++depth;
            if (s_[i] == ')' && --depth == 0) return false;
            if (s_[i] == 'Z' && depth == 1) return true;
        }
        return false;
    }

    bool starts_with(std::string_view t) const { return s_.substr(pos_, t.size()) == t; }
    bool eat(std::string_view t) {
        if (!starts_with(t)) return false;
        pos_ += t.size();
        return true;
    }
    void expect(std::string_view t) {
        if (!eat(t)) fail("expected '" + std::string(t) + "'");
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("exact-arith", why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    size_t pos_ = 0;
    long long q_;
};

} // namespace detail

/// Inverse of FactoredRF::to_string(); `q` binds the formal q-powers.
inline FactoredRF parse_factored_rf(std::string_view text, long long q = 0) {
    return detail::RfParser(text, q).parse_rf();
}

inline Cyclo parse_cyclo(std::string_view text) {
    detail::RfParser p(text, 0);
    Cyclo c = p.parse_cyclo();
    if (!p.at_end()) throw parse_error("exact-arith", "trailing input in \"" + std::string(text) + "\"");
    return c;
}

} // namespace lsfactors
