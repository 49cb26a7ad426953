// Command-line front end: builds objects from JSON specs, runs pipelines,
// emits tables, series and reports. All output is deterministic for a fixed
// set of flags (including --seed).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qasl/json_io.hpp"
#include "qasl/selftest.hpp"

namespace {

using qasl::json;

/// Parsed job: one subcommand plus its parameters. Equal jobs produce
/// byte-identical artifacts.
struct JobSpec {
    std::string command;
    int m = 0;
    int n = 0;
    std::string alpha;
    std::string beta;
    int degree = -1;
    std::string q_value = "symbolic";
    std::string input_path;
    std::string output_path;
    std::string word;
    bool symbolic = false;
    unsigned long seed = 20240811ul;
    std::string format = "json";
};

std::optional<mpq_class> parse_q(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        qasl::raise(qasl::ErrorKind::InvalidInput, "bad rational for --q: " + text);
    v.canonicalize();
    if (v == 0) qasl::raise(qasl::ErrorKind::InvalidInput, "--q must be nonzero");
    return v;
}

std::string scalar_string(const qasl::QScalar& c, const std::optional<mpq_class>& at) {
    if (!at) return c.to_string();
    return c.specialize(*at).get_str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) qasl::raise(qasl::ErrorKind::InvalidInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        qasl::raise(qasl::ErrorKind::InvalidInput, std::string("bad JSON: ") + e.what());
    }
    return j;
}

void emit(const JobSpec& spec, const std::string& text) {
    if (spec.output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(spec.output_path);
    if (!out) qasl::raise(qasl::ErrorKind::InvalidInput, "cannot write " + spec.output_path);
    out << text << "\n";
}

void emit_json(const JobSpec& spec, const json& j) { emit(spec, j.dump(2)); }

std::vector<std::size_t> parse_word(const qasl::FiniteLattice& lattice,
                                    const std::string& word) {
    std::vector<std::size_t> out;
    std::istringstream is(word);
    std::string piece;
    while (std::getline(is, piece, ';'))
        if (!piece.empty()) out.push_back(lattice.poset().index(piece));
    if (out.empty()) qasl::raise(qasl::ErrorKind::InvalidInput, "empty word");
    return out;
}

// -- subcommand bodies -------------------------------------------------------

int run_lattice_analyze(const JobSpec& spec) {
    qasl::FiniteLattice lattice = qasl::lattice_from_json(read_json_file(spec.input_path));
    json j = qasl::lattice_analysis_to_json(lattice);
    if (spec.format == "text") {
        std::ostringstream os;
        os << "elements: " << j["size"] << "\nrank: " << j["rank"]
           << "\ndistributive: " << (j["distributive"].get<bool>() ? "yes" : "no");
        if (j.contains("join_irreducibles")) {
            os << "\njoin-irreducibles:";
            for (const auto& e : j["join_irreducibles"]) os << " " << e.get<std::string>();
        }
        if (j.contains("realization"))
            os << "\ncanonical realization: d=" << j["realization"]["d"]
               << " N=" << j["realization"]["N"];
        emit(spec, os.str());
    } else {
        emit_json(spec, j);
    }
    return 0;
}

int run_grass_table(const JobSpec& spec) {
    qasl::GrassmannAlgebra algebra(spec.m, spec.n);
    const auto& table = algebra.straightening_table();
    auto at = parse_q(spec.q_value);
    json j = qasl::table_to_json(table);
    if (at) {
        j["q"] = at->get_str();
        for (auto& entry : j["straightening"])
            for (auto& term : entry["terms"])
                term["coeff"] = scalar_string(
                    qasl::QScalar::parse(term["coeff"].get<std::string>()), at);
        for (auto& entry : j["commutation"]) {
            entry["qpow"] =
                scalar_string(qasl::QScalar::parse(entry["qpow"].get<std::string>()), at);
            for (auto& term : entry["tail"])
                term["coeff"] = scalar_string(
                    qasl::QScalar::parse(term["coeff"].get<std::string>()), at);
        }
    }
    if (spec.format == "text") {
        std::ostringstream os;
        for (const auto& [key, e] : table.straightening) {
            os << "[" << key.first.to_string() << "][" << key.second.to_string() << "] =";
            bool first = true;
            for (const auto& [mono, c] : e.terms) {
                os << (first ? " " : " + ") << "(" << scalar_string(c, at) << ")*"
                   << qasl::std_monomial_to_string(mono);
                first = false;
            }
            os << "\n";
        }
        os << table.commutation.size() << " commutation entries";
        emit(spec, os.str());
    } else {
        emit_json(spec, j);
    }
    return 0;
}

int run_grass_verify(const JobSpec& spec) {
    qasl::GrassmannAlgebra algebra(spec.m, spec.n);
    int degree = spec.degree > 0 ? spec.degree : 2;
    auto report = algebra.verify_symmetric_asl(degree);
    if (spec.format == "json") {
        json j;
        j["ok"] = report.ok;
        j["notes"] = report.lines;
        j["violations"] = report.violations;
        emit_json(spec, j);
    } else {
        std::ostringstream os;
        for (const auto& line : report.lines) os << line << "\n";
        for (const auto& v : report.violations) os << "VIOLATION: " << v << "\n";
        os << (report.ok ? "symmetric ASL + condition (C): verified"
                         : "symmetric ASL + condition (C): FAILED");
        emit(spec, os.str());
    }
    return report.ok ? 0 : 3;
}

qasl::RichardsonAlgebra make_richardson(const JobSpec& spec,
                                        const qasl::GrassmannAlgebra& algebra) {
    if (spec.alpha.empty() || spec.beta.empty())
        qasl::raise(qasl::ErrorKind::InvalidInput, "--alpha and --beta are required");
    return qasl::richardson(algebra, qasl::PluckerIndex::parse(spec.alpha),
                            qasl::PluckerIndex::parse(spec.beta));
}

int run_richardson(const JobSpec& spec) {
    qasl::GrassmannAlgebra algebra(spec.m, spec.n);
    auto r = make_richardson(spec, algebra);
    if (spec.command == "richardson gk") {
        int dim = qasl::gk_dim(r);
        if (spec.format == "text") {
            emit(spec, std::to_string(dim));
        } else {
            json j;
            j["gk_dimension"] = dim;
            j["interval_size"] = r.interval.size();
            emit_json(spec, j);
        }
        return 0;
    }
    int degree = spec.degree > 0 ? spec.degree : qasl::hilbert_default_degree(r);
    auto h = qasl::hilbert(r, degree);
    if (spec.command == "richardson hilbert") {
        json j = qasl::hilbert_to_json(h);
        if (spec.format == "text") {
            std::ostringstream os;
            os << "krull: " << h.krull << "\nh:";
            for (const auto& c : h.coefficients) os << " " << c.get_str();
            os << "\nnumerator:";
            for (const auto& c : h.numerator) os << " " << c.get_str();
            os << "\npalindromic: " << (h.palindromic ? "yes" : "no");
            emit(spec, os.str());
        } else {
            emit_json(spec, j);
        }
        return 0;
    }
    // gorenstein
    if (spec.format == "text") {
        emit(spec, std::string(h.palindromic ? "true" : "false") +
                       " (Hilbert-series palindromy indicator)");
    } else {
        json j;
        j["gorenstein_indicator"] = h.palindromic;
        j["criterion"] = "Hilbert-series numerator palindromy";
        j["numerator"] = json::array();
        for (const auto& c : h.numerator) j["numerator"].push_back(c.get_str());
        emit_json(spec, j);
    }
    return 0;
}

int run_degenerate(const JobSpec& spec) {
    qasl::GrassmannAlgebra algebra(spec.m, spec.n);
    int degree = spec.degree > 0 ? spec.degree : 2;
    auto extraction = qasl::extract_graded(algebra.straightening_table(), algebra.poset());
    auto report = qasl::verify_degeneration(algebra, degree, spec.seed);
    json j;
    j["presentation"] = qasl::presentation_to_json(extraction.presentation);
    j["weights"] = json::object();
    for (std::size_t x = 0; x < extraction.presentation.lattice.size(); ++x)
        j["weights"][extraction.presentation.lattice.poset().id(x)] =
            extraction.filtration.weights[x];
    j["report"] = {{"ok", report.ok}, {"notes", report.lines},
                   {"violations", report.violations}};
    if (spec.format == "text") {
        std::ostringstream os;
        for (const auto& line : report.lines) os << line << "\n";
        for (const auto& v : report.violations) os << "VIOLATION: " << v << "\n";
        os << (report.ok ? "degeneration verified" : "degeneration FAILED");
        emit(spec, os.str());
    } else {
        emit_json(spec, j);
    }
    return report.ok ? 0 : 3;
}

int run_toric_nf(const JobSpec& spec) {
    auto p = qasl::presentation_from_json(read_json_file(spec.input_path));
    auto word = parse_word(p.lattice, spec.word);
    json j;
    j["word"] = json::array();
    for (std::size_t x : word) j["word"].push_back(p.lattice.poset().id(x));
    std::string scalar;
    std::vector<std::size_t> monomial;
    if (spec.symbolic) {
        auto nf = qasl::toric_nf_symbolic(p.lattice, p.realization, word);
        scalar = nf.symbolic->to_string(p.lattice.poset());
        monomial = nf.monomial;
    } else {
        auto nf = qasl::toric_nf(p, word);
        scalar = nf.numeric->to_string();
        monomial = nf.monomial;
    }
    j["scalar"] = scalar;
    j["monomial"] = json::array();
    for (std::size_t x : monomial) j["monomial"].push_back(p.lattice.poset().id(x));
    if (spec.format == "text") {
        std::ostringstream os;
        os << scalar << " *";
        for (std::size_t x : monomial) os << " " << p.lattice.poset().id(x);
        emit(spec, os.str());
    } else {
        emit_json(spec, j);
    }
    return 0;
}

int run_toric_certify(const JobSpec& spec) {
    auto p = qasl::presentation_from_json(read_json_file(spec.input_path));
    auto report = qasl::confluence_certify(p);
    if (spec.format == "json") {
        json j;
        j["ok"] = report.ok;
        j["overlaps_checked"] = report.overlaps_checked;
        j["failures"] = report.failures;
        emit_json(spec, j);
    } else {
        std::ostringstream os;
        os << "overlaps checked: " << report.overlaps_checked << "\n";
        for (const auto& f : report.failures) os << "FAILURE: " << f << "\n";
        os << (report.ok ? "confluent" : "NOT confluent");
        emit(spec, os.str());
    }
    return report.ok ? 0 : 3;
}

int run_toric_torus(const JobSpec& spec) {
    auto p = qasl::presentation_from_json(read_json_file(spec.input_path));
    auto embedding = qasl::torus_embedding(p);
    json j = qasl::torus_embedding_to_json(p, embedding);
    j["gk_dimension"] = qasl::gkdim_toric(p);
    if (spec.format == "text") {
        std::ostringstream os;
        os << "generators:";
        for (const auto& g : j["generators"]) os << " " << g.get<std::string>();
        os << "\nrelations verified: " << embedding.relations_verified
           << "\nGK dimension: " << j["gk_dimension"];
        emit(spec, os.str());
    } else {
        emit_json(spec, j);
    }
    return 0;
}

int run_selftest(const JobSpec& spec) {
    auto results = qasl::selftest::run_all(spec.seed);
    std::ostringstream os;
    json arr = json::array();
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.number << ": " << r.name;
        if (!r.detail.empty()) os << " -- " << r.detail;
        os << "\n";
        arr.push_back({{"criterion", r.number},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"detail", r.detail}});
    }
    bool ok = qasl::selftest::all_passed(results);
    if (spec.format == "json") {
        json j;
        j["criteria"] = arr;
        j["ok"] = ok;
        emit_json(spec, j);
    } else {
        os << (ok ? "all criteria passed" : "FAILURES present");
        emit(spec, os.str());
    }
    return ok ? 0 : 3;
}

int dispatch(const JobSpec& spec) {
    if (spec.command == "lattice analyze") return run_lattice_analyze(spec);
    if (spec.command == "grass table") return run_grass_table(spec);
    if (spec.command == "grass verify") return run_grass_verify(spec);
    if (spec.command.rfind("richardson", 0) == 0) return run_richardson(spec);
    if (spec.command == "degenerate") return run_degenerate(spec);
    if (spec.command == "toric nf") return run_toric_nf(spec);
    if (spec.command == "toric certify") return run_toric_certify(spec);
    if (spec.command == "toric torus") return run_toric_torus(spec);
    if (spec.command == "selftest") return run_selftest(spec);
    qasl::raise(qasl::ErrorKind::InvalidInput, "no subcommand given (try --help)");
}

} // namespace

int main(int argc, char** argv) {
    JobSpec spec;
    CLI::App app{"symbolic workbench for quantum Grassmannians, straightening laws and "
                 "toric degenerations"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", spec.output_path, "write output to this file");
        cmd->add_option("--format", spec.format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    auto add_mn = [&](CLI::App* cmd) {
        cmd->add_option("--m", spec.m, "tuple arity m")->required();
        cmd->add_option("--n", spec.n, "ambient bound n")->required();
    };

    auto* lattice = app.add_subcommand("lattice", "finite lattice analysis");
    auto* lattice_analyze = lattice->add_subcommand("analyze", "Birkhoff, rank, realization");
    lattice_analyze->add_option("--in", spec.input_path, "lattice JSON file")->required();
    add_common(lattice_analyze);

    auto* grass = app.add_subcommand("grass", "quantum Grassmannian");
    auto* grass_table = grass->add_subcommand("table", "straightening/commutation table");
    add_mn(grass_table);
    grass_table->add_option("--q", spec.q_value, "rational value or 'symbolic'");
    add_common(grass_table);
    auto* grass_verify = grass->add_subcommand("verify", "symmetric ASL + condition (C)");
    add_mn(grass_verify);
    grass_verify->add_option("--degree", spec.degree, "ASL-1 degree bound (default 2)");
    add_common(grass_verify);

    auto* rich = app.add_subcommand("richardson", "quantum Richardson quotients");
    for (const char* sub : {"hilbert", "gk", "gorenstein"}) {
        auto* cmd = rich->add_subcommand(sub);
        add_mn(cmd);
        cmd->add_option("--alpha", spec.alpha, "lower tuple, e.g. 1,3")->required();
        cmd->add_option("--beta", spec.beta, "upper tuple, e.g. 2,4")->required();
        if (std::string(sub) == "hilbert")
            cmd->add_option("--degree", spec.degree, "truncation degree");
        add_common(cmd);
    }

    auto* degen = app.add_subcommand("degenerate", "graded extraction + verification");
    add_mn(degen);
    degen->add_option("--degree", spec.degree, "verification degree bound (default 2)");
    degen->add_option("--seed", spec.seed, "seed for randomized containment checks");
    add_common(degen);

    auto* toric = app.add_subcommand("toric", "quantum toric algebras");
    auto* toric_nf_cmd = toric->add_subcommand("nf", "normal form of a word");
    toric_nf_cmd->add_option("--in", spec.input_path, "presentation JSON file")->required();
    toric_nf_cmd->add_option("--word", spec.word, "semicolon-joined element ids")->required();
    toric_nf_cmd->add_flag("--symbolic", spec.symbolic, "track formal units instead of values");
    add_common(toric_nf_cmd);
    auto* toric_certify = toric->add_subcommand("certify", "confluence certification");
    toric_certify->add_option("--in", spec.input_path, "presentation JSON file")->required();
    add_common(toric_certify);
    auto* toric_torus = toric->add_subcommand("torus", "quantum torus localization");
    toric_torus->add_option("--in", spec.input_path, "presentation JSON file")->required();
    add_common(toric_torus);

    auto* selftest = app.add_subcommand("selftest", "full acceptance suite");
    selftest->add_option("--seed", spec.seed, "seed for randomized checks");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << json{{"error", {{"kind", "InvalidInput"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 2;
    }

    // Reconstruct the command id from the parsed subcommand chain.
    for (auto* cmd : app.get_subcommands()) {
        spec.command = cmd->get_name();
        for (auto* sub : cmd->get_subcommands()) spec.command += " " + sub->get_name();
    }

    try {
        return dispatch(spec);
    } catch (const qasl::Error& e) {
        std::cerr << json{{"error", {{"kind", e.kind_name()}, {"message", e.what()}}}}.dump()
                  << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }
}
