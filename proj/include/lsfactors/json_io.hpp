#pragma once

// JSON encoding of fields, characters and request documents. Encoders emit
// the canonical form; decoders accept it back exactly, so
// encode(decode(encode(x))) == encode(x) byte for byte. Schema violations
// raise usage_error whose message starts with the JSON pointer of the
// offending value.

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "ls_factors.hpp"

namespace lsfactors::json_io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string escape_token(const std::string& t) {
    std::string out;
    for (char c : t) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

/// A value together with its JSON pointer.
struct Node {
    const json& j;
    std::string ptr;

    [[noreturn]] void fail(const std::string& what) const {
        throw usage_error("cli", (ptr.empty() ? std::string("/") : ptr) + ": " + what);
    }
    Node at(const std::string& key) const {
        if (!j.is_object()) fail("expected an object");
        auto it = j.find(key);
        if (it == j.end()) fail("missing required key \"" + key + "\"");
        return {*it, ptr + "/" + escape_token(key)};
    }
    std::optional<Node> get(const std::string& key) const {
        if (!j.is_object()) fail("expected an object");
        auto it = j.find(key);
        if (it == j.end()) return std::nullopt;
        return Node{*it, ptr + "/" + escape_token(key)};
    }
    Node at(size_t i) const { return {j[i], ptr + "/" + std::to_string(i)}; }
    size_t size() const {
        if (!j.is_array()) fail("expected an array");
        return j.size();
    }
    long long integer() const {
        if (!j.is_number_integer()) fail("expected an integer");
        return j.get<long long>();
    }
    long long integer_in(long long lo, long long hi) const {
        long long v = integer();
        if (v < lo || v > hi) fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
        return v;
    }
    std::string string() const {
        if (!j.is_string()) fail("expected a string");
        return j.get<std::string>();
    }
    void only_keys(std::initializer_list<const char*> keys) const {
        if (!j.is_object()) fail("expected an object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            bool known = false;
            for (const char* k : keys) known = known || it.key() == k;
            if (!known) Node{it.value(), ptr + "/" + escape_token(it.key())}.fail("unknown key");
        }
    }
};

inline Integer parse_integer_text(const Node& n, const std::string& s) {
    if (s.empty()) n.fail("empty number");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) n.fail("malformed number \"" + s + "\"");
    for (size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') n.fail("malformed number \"" + s + "\"");
    return Integer(s);
}

} // namespace detail

/// Rationals are integers or strings "a/b".
inline Rational parse_rational(const detail::Node& n) {
    if (n.j.is_number_integer()) return Rational(n.j.get<long long>());
    const std::string s = n.string();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_integer_text(n, s));
    const Integer num = detail::parse_integer_text(n, s.substr(0, slash));
    const Integer den = detail::parse_integer_text(n, s.substr(slash + 1));
    if (den == 0) n.fail("zero denominator");
    return Rational(num) / Rational(den);
}

inline ordered_json rational_json(const Rational& r) {
    if (denominator(r) == 1 && abs(numerator(r)) < Integer(1LL << 52))
        return static_cast<long long>(numerator(r));
    return lsfactors::to_string(r);
}

// ---- fields ---------------------------------------------------------------

inline ordered_json to_json(const TruncatedField& F) {
    return ordered_json{{"p", F.p()}, {"f", F.f()}, {"level", F.level()}};
}

inline TruncatedField field_from_json(const detail::Node& n) {
    n.only_keys({"p", "f", "level"});
    const long long p = n.at("p").integer_in(2, 64);
    const long long f = n.at("f").integer_in(1, 6);
    const long long level = n.at("level").integer_in(1, 64);
    long long q = 1;
    for (long long i = 0; i < f; ++i) {
        q *= p;
        if (q > 64) n.fail("q = p^f must be at most 64");
    }
    try {
        return TruncatedField(static_cast<int>(p), static_cast<int>(f), static_cast<int>(level));
    } catch (const error& e) {
        n.at("p").fail(e.what());
    }
}

// ---- multiplicative characters --------------------------------------------

inline ordered_json to_json(const RootOfUnity& r) {
    return ordered_json{{"zeta_order", r.order}, {"zeta_power", r.power}};
}

inline ordered_json to_json(const MultChar& chi) {
    const auto root = chi.pi_value().cyclo().as_root_of_unity();
    const Rational& e = chi.pi_value().qpower().exponent;
    ordered_json pi{{"zeta_order", root->order},
                    {"zeta_power", root->power},
                    {"q_exp_num", static_cast<long long>(numerator(e))},
                    {"q_exp_den", static_cast<long long>(denominator(e))}};
    ordered_json images = ordered_json::array();
    for (const auto& r : chi.images()) images.push_back(to_json(r));
    return ordered_json{{"conductor", chi.conductor()}, {"pi_value", pi}, {"unit_images", images}};
}

inline RootOfUnity root_from_json(const detail::Node& n) {
    n.only_keys({"zeta_order", "zeta_power"});
    const long long order = n.at("zeta_order").integer_in(1, 1LL << 30);
    const long long power = n.at("zeta_power").integer_in(-(1LL << 30), 1LL << 30);
    return RootOfUnity(order, power);
}

inline MultChar mult_char_from_json(const TruncatedField& F, const detail::Node& n) {
    n.only_keys({"conductor", "pi_value", "unit_images"});
    const int a = static_cast<int>(n.at("conductor").integer_in(0, F.level() - 1));
    const auto pn = n.at("pi_value");
    pn.only_keys({"zeta_order", "zeta_power", "q_exp_num", "q_exp_den"});
    const long long order = pn.at("zeta_order").integer_in(1, 1LL << 30);
    const long long power = pn.at("zeta_power").integer_in(-(1LL << 30), 1LL << 30);
    const long long num = pn.at("q_exp_num").integer_in(-(1LL << 30), 1LL << 30);
    const long long den = pn.at("q_exp_den").integer_in(1, 1LL << 30);
    const Scalar pi = Scalar::root_of_unity(RootOfUnity(order, power)) *
                      Scalar::q_power(F.q(), Rational(num) / Rational(den));

    const auto in = n.at("unit_images");
    const size_t expected = UnitGroupStruct::generators_at(F, F.level()).size();
    if (in.size() != expected)
        in.fail("expected " + std::to_string(expected) + " unit generator images, got " + std::to_string(in.size()));
    std::vector<RootOfUnity> images;
    for (size_t i = 0; i < in.size(); ++i) images.push_back(root_from_json(in.at(i)));
    try {
        return MultChar::make(F, a, pi, std::move(images));
    } catch (const validation_error& e) {
        n.fail(e.what());
    }
}

// ---- additive characters --------------------------------------------------

inline ordered_json to_json(const AddChar& psi) {
    return ordered_json{{"conductor", psi.conductor()}, {"scale_unit", psi.scale().raw()}};
}

inline AddChar add_char_from_json(const TruncatedField& F, const detail::Node& n) {
    n.only_keys({"conductor", "scale_unit"});
    const int cond = static_cast<int>(n.at("conductor").integer_in(-F.level() + 1, F.level() - 1));
    const auto sn = n.at("scale_unit");
    if (sn.size() != static_cast<size_t>(F.level()))
        sn.fail("scale_unit needs exactly level = " + std::to_string(F.level()) + " coefficients");
    std::vector<int> c;
    for (size_t i = 0; i < sn.size(); ++i) c.push_back(static_cast<int>(sn.at(i).integer_in(0, F.q() - 1)));
    if (c[0] == 0) sn.at(0).fail("leading coefficient must be nonzero (a unit)");
    return AddChar(F, cond, RingElt(std::move(c)));
}

// ---- request documents ----------------------------------------------------
//
// {
//   "field": {"p": 3, "f": 1, "level": 6},
//   "characters": {"chi": {...}, ...},        named multiplicative characters
//   "psi": {"conductor": 0, "scale_unit": [...]},       optional, canonical
//   "chi": "chi",                                        factor tate
//   "parameter": ["chi1", "chi2"]                        principal series
//              | {"blocks": [{"chars": [...], "s": "1/2"}, ...]},
//   "parameter2": ...,                                   rs, stability-demo
//   "r0": "sym2" | "wedge2",
//   "eta": "name",                                       default trivial
//   "partition": [2, 1],                                 plancherel
//   "transfer": {"target_level": 7, "level": 5}          transfer-check
// }
// The reserved name "trivial" denotes the trivial character.

struct RequestDocument {
    TruncatedField field;
    std::map<std::string, MultChar> characters;
    AddChar psi;
    std::optional<std::string> chi;
    std::optional<Parameter> parameter;
    std::optional<Parameter> parameter2;
    R0 r0 = R0::sym2;
    MultChar eta;
    std::vector<int> partition;
    std::optional<int> transfer_target_level;
    std::optional<int> transfer_level;
};

namespace detail {

inline const MultChar& lookup(const RequestDocument& doc, const Node& n) {
    const std::string name = n.string();
    auto it = doc.characters.find(name);
    if (it == doc.characters.end()) n.fail("unknown character \"" + name + "\"");
    return it->second;
}

inline PrincipalSeriesParam ps_from_json(const RequestDocument& doc, const Node& n) {
    PrincipalSeriesParam P;
    if (n.size() == 0) n.fail("a parameter needs at least one character");
    for (size_t i = 0; i < n.size(); ++i) P.chars.push_back(lookup(doc, n.at(i)));
    return P;
}

inline Parameter parameter_from_json(const RequestDocument& doc, const Node& n) {
    Parameter out;
    if (n.j.is_array()) {
        out = ps_from_json(doc, n);
    } else {
        n.only_keys({"blocks"});
        const auto bn = n.at("blocks");
        LanglandsQuotientParam lq;
        for (size_t i = 0; i < bn.size(); ++i) {
            const auto b = bn.at(i);
            b.only_keys({"chars", "s"});
            lq.blocks.push_back({ps_from_json(doc, b.at("chars")), parse_rational(b.at("s"))});
        }
        out = lq;
    }
    try {
        std::visit([](const auto& p) { p.validate(); }, out);
    } catch (const error& e) {
        n.fail(e.what());
    }
    return out;
}

} // namespace detail

inline RequestDocument request_from_json(const json& j) {
    const detail::Node root{j, ""};
    root.only_keys({"field", "characters", "psi", "chi", "parameter", "parameter2", "r0", "eta", "partition",
                    "transfer", "comment"});
    const TruncatedField F = field_from_json(root.at("field"));
    RequestDocument doc{F, {}, AddChar::canonical(F), {}, {}, {}, R0::sym2, MultChar::trivial(F), {}, {}, {}};
    doc.characters.emplace("trivial", MultChar::trivial(F));
    if (auto cn = root.get("characters")) {
        if (!cn->j.is_object()) cn->fail("expected an object of named characters");
        for (auto it = cn->j.begin(); it != cn->j.end(); ++it) {
            const detail::Node c{it.value(), cn->ptr + "/" + detail::escape_token(it.key())};
            if (it.key() == "trivial") c.fail("the name \"trivial\" is reserved");
            doc.characters.insert_or_assign(it.key(), mult_char_from_json(F, c));
        }
    }
    if (auto pn = root.get("psi")) doc.psi = add_char_from_json(F, *pn);
    if (auto cn = root.get("chi")) {
        detail::lookup(doc, *cn);
        doc.chi = cn->string();
    }
    if (auto pn = root.get("parameter")) doc.parameter = detail::parameter_from_json(doc, *pn);
    if (auto pn = root.get("parameter2")) doc.parameter2 = detail::parameter_from_json(doc, *pn);
    if (auto rn = root.get("r0")) {
        const std::string r = rn->string();
        if (r == "sym2") doc.r0 = R0::sym2;
        else if (r == "wedge2") doc.r0 = R0::wedge2;
        else rn->fail("r0 must be \"sym2\" or \"wedge2\"");
    }
    if (auto en = root.get("eta")) doc.eta = detail::lookup(doc, *en);
    if (auto pn = root.get("partition")) {
        for (size_t i = 0; i < pn->size(); ++i) doc.partition.push_back(static_cast<int>(pn->at(i).integer_in(1, 16)));
    }
    if (auto tn = root.get("transfer")) {
        tn->only_keys({"target_level", "level"});
        doc.transfer_target_level = static_cast<int>(tn->at("target_level").integer_in(1, 64));
        doc.transfer_level = static_cast<int>(tn->at("level").integer_in(1, 64));
    }
    return doc;
}

/// Parses text, reporting syntax errors as usage errors at the root pointer.
inline RequestDocument request_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw usage_error("cli", std::string("/: malformed JSON: ") + e.what());
    }
    return request_from_json(j);
}

inline MultChar mult_char_from_json(const TruncatedField& F, const json& j) {
    return mult_char_from_json(F, detail::Node{j, ""});
}
inline AddChar add_char_from_json(const TruncatedField& F, const json& j) {
    return add_char_from_json(F, detail::Node{j, ""});
}
inline TruncatedField field_from_json(const json& j) { return field_from_json(detail::Node{j, ""}); }

} // namespace lsfactors::json_io
