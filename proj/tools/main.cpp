// Command-line front end: parses Seifert indices, dispatches to the
// computation modules, batch-processes files, and emits text or JSON.
//
// Indices follow the Jankins-Neumann sign convention:
// (g; b; a1/b1,...,an/bn) is the manifold with
// pi_1 = < a_i, b_i, q_j, h | h central, q_j^{a_j} = h^{b_j},
//                             q_1...q_n prod [a_i,b_i] = h^{-b} >.

#include "seifert/json_io.hpp"
#include "seifert/seifert.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using seifert::Json;

struct Options {
    bool json = false;
    bool decimal = false;
    double tol = 1e-9;
    int precision = 12;
    std::string alt_class;
};

struct Result {
    std::string text;
    Json json;
};

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string fmt_complex(const seifert::Complex& z) {
    return "(" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + ")";
}

std::string yes_no(bool v) {
    return v ? "yes" : "no";
}

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const std::string& f : flags) {
        if (!out.empty())
            out += ", ";
        out += f;
    }
    return out;
}

seifert::CohomologyClass parse_class(const std::string& text, const seifert::FuchsianSignature& sig) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    if (parts.size() != 1 && parts.size() != 2)
        throw seifert::ParseError("expected `c0; c1,c2,...`, got \"" + text + "\"");
    std::vector<seifert::Integer> coeffs;
    coeffs.push_back(seifert::parse_integer(parts[0]));
    if (parts.size() == 2 && parts[1].find_first_not_of(" \t") != std::string::npos) {
        std::string token;
        for (char ch : parts[1]) {
            if (ch == ',') {
                coeffs.push_back(seifert::parse_integer(token));
                token.clear();
            } else {
                token += ch;
            }
        }
        coeffs.push_back(seifert::parse_integer(token));
    }
    return seifert::make_class(sig, std::move(coeffs));
}

seifert::SeifertIndex parse_and_validate(const std::string& text) {
    return seifert::validate(seifert::parse_index(text));
}

std::string signature_text(const seifert::FuchsianSignature& sig) {
    std::string out = "genus " + std::to_string(sig.genus) + "; ";
    if (sig.branch_indices.empty())
        return out + "no cone points";
    out += "cone points ";
    for (std::size_t j = 0; j < sig.branch_indices.size(); ++j)
        out += (j ? ", " : "") + sig.branch_indices[j].str();
    return out;
}

Result run_info(const std::string& input, const Options&) {
    const seifert::SeifertIndex raw = parse_and_validate(input);
    const seifert::SeifertIndex idx = seifert::normalize(raw);
    const seifert::Rational chi = seifert::orbifold_euler_characteristic(idx.signature());
    const seifert::CohomologyClass cls = seifert::euler_class_of_index(idx);
    const seifert::Presentation pi1 = seifert::pi1_presentation(idx);

    std::ostringstream os;
    os << "index: " << seifert::format_index(raw) << "\n";
    os << "normalized: " << seifert::format_index(idx) << "\n";
    os << "signature: " << signature_text(idx.signature()) << "\n";
    os << "chi_orb: " << seifert::to_string(chi) << "\n";
    os << "euler class: " << seifert::format_class(cls) << "\n";
    os << "pi1 generators: ";
    for (std::size_t i = 0; i < pi1.generators.size(); ++i)
        os << (i ? ", " : "") << pi1.generators[i];
    os << "\npi1 relators:\n";
    for (const seifert::Word& w : pi1.relators)
        os << "  " << seifert::to_string(w) << "\n";
    for (const std::string& note : pi1.annotations)
        os << "note: " << note << "\n";

    Json j;
    j["index"] = seifert::to_json(raw);
    j["normalized"] = seifert::to_json(idx);
    j["signature"] = seifert::json_integers(idx.signature().branch_indices);
    j["genus"] = idx.genus;
    j["chi_orb"] = seifert::to_string(chi);
    j["euler_class"] = seifert::to_json(cls);
    Json relators = Json::array();
    for (const seifert::Word& w : pi1.relators)
        relators.push_back(seifert::to_string(w));
    j["pi1"] = Json{{"generators", pi1.generators}, {"relators", relators},
                    {"annotations", pi1.annotations}};
    return {os.str(), std::move(j)};
}

Result run_reverse(const std::string& input, const Options&) {
    const seifert::SeifertIndex idx = seifert::normalize(parse_and_validate(input));
    const seifert::SeifertIndex rev = seifert::orientation_reverse(idx);
    Json j;
    j["index"] = seifert::format_index(idx);
    j["reversed"] = seifert::format_index(rev);
    return {seifert::format_index(rev) + "\n", std::move(j)};
}

void realizability_text(std::ostream& os, const seifert::CohomologyClass& cls,
                        const seifert::RealizabilityReport& report) {
    os << "class: " << seifert::format_class(cls) << "\n";
    os << "realizable: " << yes_no(report.realizable) << "\n";
    os << "cases: ";
    if (report.cases.empty()) {
        os << "none";
    } else {
        for (std::size_t i = 0; i < report.cases.size(); ++i)
            os << (i ? ", " : "") << seifert::to_string(report.cases[i]);
    }
    os << "\n";
    if (report.beta_sum)
        os << "sum: " << seifert::to_string(*report.beta_sum) << "\n";
    if (!report.flags.empty())
        os << "flags: " << join_flags(report.flags) << "\n";
}

Result run_euler_check(const std::string& input, const Options&) {
    const seifert::SeifertIndex idx = seifert::normalize(parse_and_validate(input));
    const seifert::CohomologyClass cls = seifert::euler_class_of_index(idx);
    const seifert::RealizabilityReport report = seifert::jn_realizable(cls);
    std::ostringstream os;
    realizability_text(os, cls, report);
    return {os.str(), seifert::to_json(report)};
}

Result run_lifts(const std::string& input, const Options&) {
    const seifert::SeifertIndex idx = seifert::normalize(parse_and_validate(input));
    const seifert::CohomologyClass cls = seifert::euler_class_of_index(idx);
    const seifert::RealizabilityReport report = seifert::jn_realizable(cls);
    const seifert::LiftLedger ledger = seifert::enumerate_realizable_equivalent(cls);
    std::ostringstream os;
    realizability_text(os, cls, report);
    os << "equivalent realizable classes: " << ledger.equivalent_realizable.size() << "\n";
    for (const seifert::CohomologyClass& c : ledger.equivalent_realizable)
        os << "  " << seifert::format_class(c) << "\n";
    os << "induces sl2r: " << yes_no(ledger.induces_sl2r) << "\n";
    return {os.str(), seifert::to_json(report, ledger)};
}

Result run_asym(const std::string& input, const Options& opt) {
    const seifert::SeifertIndex idx = seifert::normalize(parse_and_validate(input));
    seifert::AsymptoticsReport report;
    if (opt.alt_class.empty()) {
        report = seifert::leading_coefficient(idx);
    } else {
        report = seifert::leading_coefficient_for_class(idx, parse_class(opt.alt_class, idx.signature()));
    }
    std::ostringstream os;
    os << "lambdas: ";
    if (report.lambdas.empty())
        os << "none";
    for (std::size_t i = 0; i < report.lambdas.size(); ++i)
        os << (i ? ", " : "") << report.lambdas[i].str();
    os << "\n";
    os << "coefficient: " << seifert::to_string(report.coefficient.rational_part) << " · log2\n";
    if (opt.decimal)
        os << "decimal: " << seifert::decimal_rendering(report.coefficient, opt.precision) << "\n";
    os << "quadratic limit: " << report.quadratic_limit << "\n";
    os << "equals -chi log2: " << yes_no(report.equals_minus_chi_log2) << "\n";
    if (!report.flags.empty())
        os << "flags: " << join_flags(report.flags) << "\n";
    std::optional<int> digits;
    if (opt.decimal)
        digits = opt.precision;
    return {os.str(), seifert::to_json(report, digits)};
}

Result run_su11_enum(const std::string& input, const Options& opt) {
    const seifert::SeifertIndex idx = seifert::normalize(parse_and_validate(input));
    const std::vector<seifert::RepTriple> triples = seifert::enumerate_triples(idx);
    const seifert::ConjugacyClasses classes = seifert::conjugacy_classes(idx, opt.tol);

    std::ostringstream os;
    os << "k-triples: " << triples.size() / 2 << "\n";
    for (std::size_t i = 0; i < triples.size(); i += 2)
        os << "  (" << triples[i].k[0] << "," << triples[i].k[1] << "," << triples[i].k[2] << ")\n";
    os << "conjugacy classes: " << classes.classes.size() << "\n";
    Json jclasses = Json::array();
    for (const seifert::Su11Representation& rep : classes.classes) {
        const seifert::ResidualReport res = seifert::verify_relations(rep, opt.tol);
        os << "  k=(" << rep.triple.k[0] << "," << rep.triple.k[1] << "," << rep.triple.k[2]
           << ") eps=" << (rep.triple.epsilon > 0 ? "+1" : "-1");
        for (int j = 0; j < 3; ++j)
            os << "  xi" << j + 1 << "=" << fmt_complex(rep.q[j].xi) << " eta" << j + 1 << "="
               << fmt_complex(rep.q[j].eta);
        const double worst =
            std::max(std::max(res.torsion[0], res.torsion[1]), std::max(res.torsion[2], res.long_relator));
        os << "  residual=" << fmt_double(worst) << (res.pass ? " pass" : " FAIL") << "\n";
        jclasses.push_back(seifert::to_json(rep, res));
    }
    if (classes.reducible_boundary.empty()) {
        os << "reducible boundary: none\n";
    } else {
        os << "reducible boundary:\n";
        for (const seifert::RepTriple& t : classes.reducible_boundary)
            os << "  k=(" << t.k[0] << "," << t.k[1] << "," << t.k[2] << ") eps="
               << (t.epsilon > 0 ? "+1" : "-1") << "\n";
    }

    Json j;
    j["index"] = seifert::to_json(idx);
    Json jtriples = Json::array();
    for (const seifert::RepTriple& t : triples)
        jtriples.push_back(seifert::to_json(t));
    j["triples"] = std::move(jtriples);
    j["classes"] = std::move(jclasses);
    Json jboundary = Json::array();
    for (const seifert::RepTriple& t : classes.reducible_boundary)
        jboundary.push_back(seifert::to_json(t));
    j["reducible_boundary"] = std::move(jboundary);
    return {os.str(), std::move(j)};
}

Result run_su11_verify(const std::string& input, const Options& opt) {
    const seifert::SeifertIndex idx = seifert::normalize(parse_and_validate(input));
    const seifert::ConjugacyClasses classes = seifert::conjugacy_classes(idx, opt.tol);
    const seifert::Presentation pi1 = seifert::pi1_presentation(idx);
    const std::size_t n = idx.fiber_count();
    // relator layout: n centrality words, then n torsion words, then the long word
    std::vector<std::string> labels;
    for (std::size_t jj = 0; jj < n; ++jj)
        labels.push_back(seifert::to_string(pi1.relators[n + jj]));
    labels.push_back(seifert::to_string(pi1.relators.back()));

    std::ostringstream os;
    os << "index: " << seifert::format_index(idx) << "\n";
    os << "classes: " << classes.classes.size() << "\n";
    bool all_pass = true;
    Json jclasses = Json::array();
    for (const seifert::Su11Representation& rep : classes.classes) {
        const seifert::ResidualReport res = seifert::verify_relations(rep, opt.tol);
        all_pass = all_pass && res.pass;
        os << "class k=(" << rep.triple.k[0] << "," << rep.triple.k[1] << "," << rep.triple.k[2]
           << ") eps=" << (rep.triple.epsilon > 0 ? "+1" : "-1") << "\n";
        for (int j = 0; j < 3; ++j)
            os << "  " << labels[j] << ": " << fmt_double(res.torsion[j]) << "\n";
        os << "  " << labels[3] << ": " << fmt_double(res.long_relator) << "\n";
        os << "  traces: " << fmt_double(res.trace[0]) << ", " << fmt_double(res.trace[1]) << ", "
           << fmt_double(res.trace[2]) << "\n";
        os << "  " << (res.pass ? "PASS" : "FAIL") << " (tol " << fmt_double(res.tol) << ")\n";
        jclasses.push_back(seifert::to_json(rep, res));
    }
    os << "all classes pass: " << yes_no(all_pass) << "\n";
    Json j;
    j["index"] = seifert::to_json(idx);
    j["classes"] = std::move(jclasses);
    j["all_pass"] = all_pass;
    return {os.str(), std::move(j)};
}

using Handler = Result (*)(const std::string&, const Options&);

int run_batch(const std::string& path, Handler handler, const Options& opt) {
    std::ifstream in(path);
    if (!in)
        throw seifert::Error("cannot open batch file: " + path);
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        Json record;
        record["line"] = line_no;
        record["input"] = line;
        try {
            record["ok"] = true;
            record["result"] = handler(line, opt).json;
        } catch (const seifert::Error& e) {
            record = Json{{"line", line_no}, {"input", line}, {"ok", false}, {"error", e.what()}};
        }
        std::cout << record.dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert fibered spaces over two-orbifolds: euler-class realizability\n"
                 "(Jankins-Neumann criteria), Ext(Gamma;Z/2Z) lift enumeration, exact\n"
                 "leading coefficients of Reidemeister-torsion asymptotics, and SU(1,1)\n"
                 "representation enumeration with numerical verification.\n"
                 "Index convention (Jankins-Neumann signs): `g; b; a1/b1,...,an/bn`."};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_flag("--decimal", opt.decimal, "include a decimal rendering of coefficients");
    app.add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
    app.add_option("--precision", opt.precision, "significant digits for --decimal")
        ->capture_default_str();

    struct Sub {
        const char* name;
        const char* help;
        Handler handler;
    };
    const std::vector<Sub> subs = {
        {"info", "normal form, base orbifold, euler characteristic, pi1 presentation", run_info},
        {"reverse", "index of the fiber-orientation-reversed manifold", run_reverse},
        {"euler-check", "Jankins-Neumann realizability of the index's euler class", run_euler_check},
        {"lifts", "realizable classes in the same Ext(Gamma;Z/2Z) coset", run_lifts},
        {"asym", "leading coefficient of the torsion asymptotics (exact multiple of log 2)",
         run_asym},
        {"su11-enum", "irreducible SU(1,1) conjugacy classes with rho(h) = -I", run_su11_enum},
        {"su11-verify", "construct the SU(1,1) classes and verify all group relations",
         run_su11_verify},
    };

    std::string index_text, batch_path;
    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("index", index_text, "inline Seifert index `g; b; a1/b1,...`");
        sub->add_option("--batch", batch_path, "batch file, one index per line, `#` comments");
        if (std::string(s.name) == "asym")
            sub->add_option("--alt", opt.alt_class,
                            "alternative cohomology class `c0; c1,c2,...` (equivalent lift)");
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Handler handler = nullptr;
    for (const Sub& s : subs)
        if (app.got_subcommand(s.name))
            handler = s.handler;

    if (index_text.empty() == batch_path.empty()) {
        std::cerr << "error: provide exactly one input source (an inline index or --batch FILE)\n";
        return 2;
    }

    try {
        if (!batch_path.empty())
            return run_batch(batch_path, handler, opt);
        Result result = handler(index_text, opt);
        if (opt.json)
            std::cout << result.json.dump(2) << "\n";
        else
            std::cout << result.text;
        return 0;
    } catch (const seifert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
