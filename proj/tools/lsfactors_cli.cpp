// lsfactors: command line front end.
//
// Every command prints plain "key: value" lines (rootdatum prints JSON) in a
// fixed order, so output is reproducible byte for byte. Exit status is 0 on
// success, 1 when a check reports a mismatch, 2 on bad input.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <lsfactors.hpp>

using namespace lsfactors;
namespace jio = lsfactors::json_io;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw usage_error("cli", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// "s=a+bi", "s=0.5", "s=2i", "s=-1-0.5i"
std::complex<double> parse_eval(const std::string& text) {
    static const std::regex re(R"(^\s*s\s*=\s*([-+]?[0-9.eE]+)?(?:\s*([-+])\s*([0-9.eE]*)\s*i)?\s*$)");
    static const std::regex pure(R"(^\s*s\s*=\s*([-+]?[0-9.eE]*)\s*i\s*$)");
    std::smatch m;
    try {
        if (std::regex_match(text, m, pure)) {
            const std::string b = m[1].str();
            const double im = (b.empty() || b == "+") ? 1.0 : b == "-" ? -1.0 : std::stod(b);
            return {0.0, im};
        }
        if (std::regex_match(text, m, re) && m[1].matched) {
            const double re_part = std::stod(m[1].str());
            double im = 0.0;
            if (m[2].matched) {
                im = m[3].str().empty() ? 1.0 : std::stod(m[3].str());
                if (m[2].str() == "-") im = -im;
            }
            return {re_part, im};
        }
    } catch (const std::exception&) {
    }
    throw usage_error("cli", "--eval expects s=a+bi, got \"" + text + "\"");
}

std::string complex_text(std::complex<double> z) {
    // avoid "-0"
    const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

struct Printer {
    std::ostream& out;
    std::optional<std::complex<double>> s;
    long long q;

    void rf(const std::string& key, const FactoredRF& f) const {
        out << key << ": " << f.to_string() << "\n";
        if (!s) return;
        out << key << "(" << complex_text(*s) << "): ";
        try {
            out << complex_text(f.eval(*s, double(q))) << "\n";
        } catch (const pole_error&) {
            out << "pole\n";
        }
    }
    void triple(const FactoredRF& gamma, const FactoredRF& L, const FactoredRF& eps) const {
        rf("gamma", gamma);
        rf("L", L);
        rf("eps", eps);
    }
};

std::string field_line(const TruncatedField& F) {
    return "field: p=" + std::to_string(F.p()) + " f=" + std::to_string(F.f()) + " q=" + std::to_string(F.q()) +
           " level=" + std::to_string(F.level());
}

std::string psi_line(const AddChar& psi) {
    return "psi: conductor " + std::to_string(psi.conductor()) + " (trivial on p^" + std::to_string(psi.conductor()) +
           "), scale " + jio::to_json(psi)["scale_unit"].dump();
}

const Parameter& need_parameter(const std::optional<Parameter>& p, const char* key) {
    if (!p) throw usage_error("cli", std::string("/") + key + ": missing required key \"" + key + "\"");
    return *p;
}

PrincipalSeriesParam need_ps(const std::optional<Parameter>& p, const char* key) {
    const Parameter& v = need_parameter(p, key);
    if (auto ps = std::get_if<PrincipalSeriesParam>(&v)) return *ps;
    throw usage_error("cli", std::string("/") + key + ": expected an array of character names");
}

TwistedFactorRequest twisted_request(const jio::RequestDocument& doc) {
    return {need_parameter(doc.parameter, "parameter"), doc.r0, doc.eta, doc.psi};
}

// ---- commands ---------------------------------------------------------------

int factor_tate(const jio::RequestDocument& doc, const Printer& pr) {
    if (!doc.chi) throw usage_error("cli", "/chi: missing required key \"chi\"");
    const MultChar& chi = doc.characters.at(*doc.chi);
    const auto t = tate_factors(chi, doc.psi);
    pr.out << field_line(doc.field) << "\n" << psi_line(doc.psi) << "\n";
    pr.out << "chi: " << *doc.chi << ", conductor " << chi.conductor() << "\n";
    pr.triple(t.gamma, t.L, t.eps);
    pr.out << "provenance: " << t.provenance << "\n";
    return 0;
}

int factor_twisted(const jio::RequestDocument& doc, const Printer& pr) {
    const TwistedFactorRequest req = twisted_request(doc);
    const auto [eps, L] = twisted_eps_and_general_L(req);
    pr.out << field_line(doc.field) << "\n" << psi_line(doc.psi) << "\n";
    pr.out << "r0: " << to_string(doc.r0) << ", n = " << req.n() << ", dim = " << r0_dimension(doc.r0, req.n()) << "\n";
    pr.triple(twisted_gamma(req), L, eps);
    pr.out << "provenance: langlands-shahidi"
           << (std::holds_alternative<LanglandsQuotientParam>(req.param) ? " (langlands quotient)" : "") << "\n";
    return 0;
}

int factor_rs(const jio::RequestDocument& doc, const Printer& pr) {
    const PrincipalSeriesParam P = flatten(need_parameter(doc.parameter, "parameter"));
    const PrincipalSeriesParam Q = flatten(need_parameter(doc.parameter2, "parameter2"));
    WeilParam tensor;
    for (const auto& a : P.chars)
        for (const auto& b : Q.chars) tensor.chars.push_back(a * b);
    const auto t = artin_factors(tensor, doc.psi);
    const FactoredRF g = rs_gamma(P, Q, doc.psi);
    pr.out << field_line(doc.field) << "\n" << psi_line(doc.psi) << "\n";
    pr.out << "degrees: " << P.n() << " x " << Q.n() << "\n";
    pr.triple(g, t.L, t.eps);
    pr.out << "provenance: rankin-selberg, L and eps from the tensor product\n";
    return g == t.gamma ? 0 : 1;
}

int factor_artin(const jio::RequestDocument& doc, const Printer& pr) {
    const TwistedFactorRequest req = twisted_request(doc);
    const WeilParam rho = r0_compose(weil_parameter(req.param), req.r0, req.eta);
    const auto t = artin_factors(rho, req.psi);
    const MatchReport m = llc_match(req);
    pr.out << field_line(doc.field) << "\n" << psi_line(doc.psi) << "\n";
    pr.out << "r0: " << to_string(doc.r0) << ", dim = " << rho.dim() << "\n";
    pr.triple(t.gamma, t.L, t.eps);
    pr.out << "provenance: artin (abelian pieces)\n";
    pr.out << "matches analytic side: " << (m.ok() ? "yes" : "no") << "\n";
    if (!m.ok()) pr.out << m.describe();
    return m.ok() ? 0 : 1;
}

int plancherel_cmd(const jio::RequestDocument& doc, const Printer& pr) {
    const TwistedFactorRequest req = twisted_request(doc);
    const FactoredRF mu = plancherel(req);
    pr.out << field_line(doc.field) << "\n" << psi_line(doc.psi) << "\n";
    pr.out << "r0: " << to_string(doc.r0) << ", n = " << req.n() << "\n";
    pr.rf("mu'", mu);
    pr.out << "mu: gamma_w0(G/P)^2·(mu')\n";
    const ZerosPoles zp = mu.zeros_poles();
    pr.out << "zeros in Z: " << zp.zeros.size() << ", poles in Z: " << zp.poles.size() << "\n";
    if (doc.partition.empty()) return 0;
    const FactoredRF dec = plancherel_decomposition(doc.partition, req);
    const bool same = dec == mu;
    std::string parts;
    for (int p : doc.partition) parts += (parts.empty() ? "" : ",") + std::to_string(p);
    pr.out << "partition: " << parts << "\n";
    pr.rf("mu' (decomposed)", dec);
    pr.out << "decomposition agrees: " << (same ? "yes" : "no") << "\n";
    return same ? 0 : 1;
}

jio::ordered_json matrix_json(const IntMatrix& m) {
    jio::ordered_json a = jio::ordered_json::array();
    for (const auto& r : m) a.push_back(r);
    return a;
}

int rootdatum_cmd(int n, const std::string& parity, const std::vector<int>& partition, std::ostream& out) {
    if (parity != "odd" && parity != "even") throw usage_error("cli", "--parity must be odd or even");
    const GSpinRootDatum D(n, parity == "odd" ? Parity::odd : Parity::even);
    const WeylElt w0 = siegel_w0(D);
    std::vector<int> parts = partition;
    if (parts.empty()) parts.assign(static_cast<size_t>(n), 1);
    const auto dec = langlands_decomposition(D, parts);

    jio::ordered_json j;
    j["group"] = D.group_name();
    j["type"] = D.type_name();
    j["character_lattice_rank"] = D.dim();
    j["simple_roots"] = matrix_json(D.simple_roots());
    j["simple_coroots"] = matrix_json(D.simple_coroots());
    j["cartan"] = matrix_json(D.cartan());
    j["positive_roots"] = D.positive_roots().size();
    j["theta"] = D.theta();
    j["w0_word"] = w0.word_string();
    j["w0_length"] = w0.length(D);
    j["self_associate"] = is_self_associate(D);
    const AdjointData ad = adjoint_data(D);
    j["r0"] = D.parity() == Parity::odd ? "sym2" : "wedge2";
    j["r0_dim"] = ad.dim;
    jio::ordered_json factors = jio::ordered_json::array();
    for (const auto& f : dec.factors)
        factors.push_back({{"label", f.label}, {"word", f.elt.word_string()}, {"length", f.elt.length(D)},
                           {"expected_length", expected_factor_length(D, parts, f)}});
    j["decomposition"] = {{"partition", parts},
                          {"factors", factors},
                          {"product_matches", dec.product_matches},
                          {"lengths_additive", dec.lengths_additive}};
    out << j.dump(2) << "\n";
    return dec.product_matches && dec.lengths_additive ? 0 : 1;
}

int transfer_cmd(const jio::RequestDocument& doc, std::ostream& out) {
    if (!doc.transfer_target_level || !doc.transfer_level)
        throw usage_error("cli", "/transfer: missing required key \"transfer\"");
    const TruncatedField& A = doc.field;
    const TruncatedField B(static_cast<int>(A.p()), static_cast<int>(A.f()), *doc.transfer_target_level);
    std::vector<int> scale(static_cast<size_t>(B.level()), 0);
    for (int i = 0; i < std::min(A.level(), B.level()); ++i) scale[static_cast<size_t>(i)] = doc.psi.scale().raw()[i];
    const AddChar psi_b(B, doc.psi.conductor(), RingElt(scale));
    const TwistedFactorRequest req = twisted_request(doc);
    std::vector<MultChar> chars = flatten(req.param).chars;
    chars.push_back(req.eta);
    const auto cert = associate(A, B, *doc.transfer_level, chars, {{doc.psi, psi_b}});
    const TransferReport r = deligne_transfer(cert, req, psi_b);
    out << "source " << field_line(A) << "\n";
    out << "target " << field_line(B) << "\n";
    out << "certified level: " << r.certified_level << "\n";
    out << "source levels read: " << r.source_level_read << "\n";
    out << "target levels read: " << r.target_level_read << "\n";
    std::istringstream src(r.source_text);
    for (std::string line; std::getline(src, line);) out << "source " << line << "\n";
    std::istringstream dst(r.target_text);
    for (std::string line; std::getline(dst, line);) out << "target " << line << "\n";
    out << "identical: " << (r.identical ? "yes" : "no") << "\n";
    return r.ok() ? 0 : 1;
}

int stability_cmd(const jio::RequestDocument& doc, bool scan, std::ostream& out) {
    const PrincipalSeriesParam P1 = need_ps(doc.parameter, "parameter");
    const PrincipalSeriesParam P2 = need_ps(doc.parameter2, "parameter2");
    const long long threshold = stability_threshold(P1, P2);
    out << field_line(doc.field) << "\n" << psi_line(doc.psi) << "\n";
    out << "r0: " << to_string(doc.r0) << "\n";
    out << "threshold: a(eta) >= " << threshold << "\n";
    if (!scan) {
        const StabilityResult r = stability_check(P1, P2, doc.r0, doc.eta, doc.psi);
        out << "eta conductor: " << doc.eta.conductor() << "\n";
        out << "gamma1: " << r.gamma1.to_string() << "\n";
        out << "gamma2: " << r.gamma2.to_string() << "\n";
        out << "equal: " << (r.equal ? "yes" : "no") << "\n";
        if (r.closed_form) out << "closed form: " << r.closed_form->to_string() << "\n";
        out << "note: closed form det(r0 o sigma(c))^-1 gamma(eta, psi)^dim with dim = n(n+-1)/2 = "
            << r0_dimension(doc.r0, P1.n()) << "\n";
        out << "closed form matches: " << (r.closed_form_matches ? "yes" : "no") << "\n";
        return r.equal && r.closed_form_matches ? 0 : 1;
    }
    // smallest conductor from which every sampled eta gives equal gammas
    int stable_from = -1;
    bool ok = true;
    for (int k = 0; k < doc.field.level(); ++k) {
        int tried = 0, equal = 0;
        for (const auto& im : acceptance::unit_parts(doc.field, k)) {
            if (conductor_from_images(doc.field, im) != k) continue;
            const MultChar eta = MultChar::make(doc.field, k, Scalar(1), im);
            const StabilityResult r = stability_check(P1, P2, doc.r0, eta, doc.psi, false);
            ++tried;
            equal += r.equal;
            if (k >= threshold && !(r.equal && r.closed_form_matches)) ok = false;
            if (tried == 12) break;
        }
        if (tried == 0) continue;
        out << "a(eta) = " << k << ": " << equal << "/" << tried << " equal\n";
        if (equal == tried && stable_from < 0) stable_from = k;
        if (equal != tried) stable_from = -1;
    }
    out << "observed stable from: " << (stable_from < 0 ? std::string("none") : std::to_string(stable_from)) << "\n";
    out << "threshold holds: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Langlands-Shahidi local factors for GSpin groups over truncated local fields"};
    app.require_subcommand(1);
    std::string input = "-", eval_text;
    auto add_io = [&](CLI::App* c) {
        c->add_option("input", input, "request JSON file, - for stdin")->required();
        c->add_option("--eval", eval_text, "also evaluate at s=a+bi");
    };

    CLI::App* factor = app.add_subcommand("factor", "gamma, L and epsilon factors");
    factor->require_subcommand(1);
    CLI::App* f_tate = factor->add_subcommand("tate", "Tate factors of the character named by \"chi\"");
    CLI::App* f_twisted = factor->add_subcommand("twisted", "twisted symmetric or exterior square factors");
    CLI::App* f_rs = factor->add_subcommand("rs", "Rankin-Selberg factors of parameter x parameter2");
    CLI::App* f_artin = factor->add_subcommand("artin", "Galois-side factors of (r0 o sigma) x eta");
    for (auto* c : {f_tate, f_twisted, f_rs, f_artin}) add_io(c);

    CLI::App* planch = app.add_subcommand("plancherel", "Plancherel measure, optionally via a partition");
    add_io(planch);

    CLI::App* root = app.add_subcommand("rootdatum", "GSpin root datum, w0 and its decomposition as JSON");
    int rank = 2;
    std::string parity = "odd";
    std::vector<int> partition;
    root->add_option("-n,--n", rank, "rank n")->required();
    root->add_option("--parity", parity, "odd (GSpin_2n+1) or even (GSpin_2n)");
    root->add_option("--partition", partition, "block sizes summing to n")->delimiter(',');

    CLI::App* transfer = app.add_subcommand("transfer-check", "compare factors across l-close fields");
    transfer->add_option("input", input, "request JSON file, - for stdin")->required();

    CLI::App* stab = app.add_subcommand("stability-demo", "gamma factors under highly ramified twists");
    stab->add_option("input", input, "request JSON file, - for stdin")->required();
    bool scan = false;
    stab->add_flag("--scan-threshold", scan, "scan eta conductors and report where equality sets in");

    CLI::App* self = app.add_subcommand("selftest", "run the acceptance suite");
    std::vector<int> only;
    self->add_option("--only", only, "criterion ids")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (root->parsed()) return rootdatum_cmd(rank, parity, partition, std::cout);
        if (self->parsed()) return acceptance::run_all(std::cout, only) ? 0 : 1;

        const jio::RequestDocument doc = jio::request_from_text(read_input(input));
        std::optional<std::complex<double>> s;
        if (!eval_text.empty()) s = parse_eval(eval_text);
        const Printer pr{std::cout, s, doc.field.q()};
        if (f_tate->parsed()) return factor_tate(doc, pr);
        if (f_twisted->parsed()) return factor_twisted(doc, pr);
        if (f_rs->parsed()) return factor_rs(doc, pr);
        if (f_artin->parsed()) return factor_artin(doc, pr);
        if (planch->parsed()) return plancherel_cmd(doc, pr);
        if (transfer->parsed()) return transfer_cmd(doc, std::cout);
        if (stab->parsed()) return stability_cmd(doc, scan, std::cout);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
