// cyclo: command-line front end for the G(r,p,n) simple-module parametrization.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 cap exceeded.

#include "cyclo/afunction.hpp"
#include "cyclo/classify.hpp"
#include "cyclo/clifford.hpp"
#include "cyclo/error.hpp"
#include "cyclo/flotw.hpp"
#include "cyclo/io.hpp"
#include "cyclo/kleshchev.hpp"
#include "cyclo/parameters.hpp"
#include "cyclo/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cyclo::io::json;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kCapExceeded = 3 };

struct RunConfig {
    std::string command;
    std::string target;  // enum only
    std::optional<int> e;
    int p = 1;
    int delta = 1;
    std::string charges;  // comma or space separated
    std::optional<int> r;  // enum multipartitions only
    int n = 0;
    std::optional<int> n_max;
    std::string format = "json";
    int cap = cyclo::kDefaultTableauCap;
    std::string signature_order = "ascending";
    std::string lambda;
    std::string out;
};

class BadInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

cyclo::ParameterSpec spec_from(const RunConfig& cfg)
{
    if (!cfg.e) throw BadInput("--e is required for '" + cfg.command + "'");
    std::string text = cfg.charges;
    for (auto& ch : text)
        if (ch == ',') ch = ' ';
    std::istringstream in(text);
    std::vector<int> charges;
    for (std::string item; in >> item;) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw BadInput("bad charge '" + item + "'");
        charges.push_back(value);
    }
    if (charges.empty() && cfg.delta == 1) charges = {0};
    return cyclo::build_parameters(*cfg.e, cfg.p, cfg.delta, charges);
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw BadInput("format '" + cfg.format + "' not supported by '" + cfg.command + "'");
}

std::string listing(const RunConfig& cfg, const std::string& target, const std::vector<cyclo::Multipartition>& items)
{
    if (cfg.format == "json")
        return json{{"target", target}, {"n", cfg.n}, {"items", cyclo::io::listing_json(items)}, {"count", items.size()}}
                   .dump(2) +
               "\n";
    std::ostringstream out;
    for (const auto& m : items) out << cyclo::to_string(m) << '\n';
    out << (cfg.format == "tsv" ? "count\t" : "count: ") << items.size() << '\n';
    return out.str();
}

std::string run_classify(const RunConfig& cfg)
{
    const auto spec = spec_from(cfg);
    const auto labels = cyclo::classify(cfg.n, spec);
    if (cfg.format == "tsv") return cyclo::io::classify_tsv(labels);
    const auto report = cyclo::count_check(cfg.n, spec, cyclo::parse_signature_order(cfg.signature_order));
    if (cfg.format == "json") return cyclo::io::classify_json(cfg.n, spec, labels, report).dump(2) + "\n";
    std::ostringstream out;
    for (const auto& label : labels)
        out << cyclo::to_string(label.lambda) << "  o=" << label.o_lambda << "  i=" << label.eigen_index
            << "  a=" << cyclo::to_string(label.a_value) << '\n';
    out << "labels: " << labels.size() << "  |Lambda0|=" << report.lambda0 << "  |Lambda1|=" << report.lambda1
        << "  orbits=" << report.orbits << '\n';
    return out.str();
}

std::string run_enum(const RunConfig& cfg)
{
    const auto order = cyclo::parse_signature_order(cfg.signature_order);
    if (cfg.target == "multipartitions") {
        int r = 0;
        if (cfg.r)
            r = *cfg.r;
        else if (cfg.e)
            r = spec_from(cfg).r();
        else
            throw BadInput("enum multipartitions needs --r (or a full spec)");
        if (r < 1) throw BadInput("--r must be positive");
        return listing(cfg, cfg.target, cyclo::enumerate_multipartitions(cfg.n, static_cast<std::size_t>(r)));
    }
    if (cfg.r) throw BadInput("--r is only accepted by 'enum multipartitions'; r is derived from e, p and delta");
    const auto spec = spec_from(cfg);
    if (cfg.target == "flotw") return listing(cfg, cfg.target, cyclo::enumerate_flotw(cfg.n, spec));
    if (cfg.target == "kleshchev") return listing(cfg, cfg.target, cyclo::enumerate_kleshchev(cfg.n, spec, order));
    if (cfg.target == "lambda1") return listing(cfg, cfg.target, cyclo::enumerate_lambda1(cfg.n, spec));
    if (cfg.target == "lambda0") return listing(cfg, cfg.target, cyclo::enumerate_lambda0(cfg.n, spec, order));
    throw BadInput("unknown enum target '" + cfg.target + "'");
}

std::string run_avalue(const RunConfig& cfg)
{
    const auto spec = spec_from(cfg);
    std::vector<cyclo::Multipartition> items;
    if (!cfg.lambda.empty()) {
        auto lambda = cyclo::parse_multipartition(cfg.lambda);
        if (static_cast<int>(lambda.level()) != spec.r())
            throw BadInput("--lambda has " + std::to_string(lambda.level()) + " components, expected r = " +
                           std::to_string(spec.r()));
        items.push_back(std::move(lambda));
    } else {
        items = cyclo::enumerate_multipartitions(cfg.n, static_cast<std::size_t>(spec.r()));
    }
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& m : items)
            rows.push_back(json{{"lambda", cyclo::io::to_json(m)}, {"a_value", cyclo::to_string(cyclo::a_value_r(m, spec))}});
        return json{{"spec", cyclo::io::to_json(spec)}, {"normalization", "g(n) = 0"}, {"values", rows}}.dump(2) + "\n";
    }
    std::ostringstream out;
    if (cfg.format == "tsv") out << "lambda\ta_value\n";
    for (const auto& m : items)
        out << cyclo::to_string(m) << (cfg.format == "tsv" ? "\t" : "  a=") << cyclo::to_string(cyclo::a_value_r(m, spec))
            << '\n';
    return out.str();
}

std::string run_split(const RunConfig& cfg)
{
    const auto spec = spec_from(cfg);
    const auto q = cyclo::build_Q(spec);
    const auto classes = cyclo::morita_split(q, spec.e());
    std::vector<long> exponents;
    for (const auto& x : q) exponents.push_back(x.exponent());
    if (cfg.format == "json") {
        json cls = json::array();
        for (const auto& c : classes) {
            json one = json::array();
            for (auto i : c) one.push_back(i + 1);
            cls.push_back(one);
        }
        return json{{"spec", cyclo::io::to_json(spec)}, {"L", spec.L()}, {"Q", exponents}, {"classes", cls}}.dump(2) +
               "\n";
    }
    std::vector<std::size_t> class_of(q.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto i : classes[c]) class_of[i] = c + 1;
    std::ostringstream out;
    if (cfg.format == "tsv") out << "index\texponent\tclass\n";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (cfg.format == "tsv")
            out << i + 1 << '\t' << exponents[i] << '\t' << class_of[i] << '\n';
        else
            out << "Q_" << i + 1 << " = eta_" << spec.L() << "^" << exponents[i] << "  class " << class_of[i] << '\n';
    }
    return out.str();
}

std::string run_semisimple(const RunConfig& cfg)
{
    const auto spec = spec_from(cfg);
    const auto labels = cyclo::semisimple_labels(cfg.n, spec);
    if (cfg.format == "json") return cyclo::io::semisimple_json(cfg.n, spec, labels).dump(2) + "\n";
    return cyclo::io::semisimple_tsv(labels);
}

std::string run_verify(const RunConfig& cfg, bool& all_passed)
{
    cyclo::VerifyOptions options;
    if (cfg.e) options.specs = {spec_from(cfg)};
    options.n_min = cfg.n;
    options.n_max = cfg.n_max.value_or(4);
    options.tableau_cap = cfg.cap;
    options.order = cyclo::parse_signature_order(cfg.signature_order);

    const auto results = cyclo::run_verification(options);
    all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& r : results)
            rows.push_back(json{{"identity", r.name}, {"passed", r.passed}, {"cases", r.cases},
                                {"counterexample", r.counterexample}});
        return json{{"n_min", options.n_min}, {"n_max", options.n_max}, {"results", rows}, {"passed", all_passed}}.dump(2) +
               "\n";
    }
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.cases;
        if (!r.passed) out << '\t' << r.counterexample;
        out << '\n';
    }
    return out.str();
}

void add_spec_flags(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--e", cfg.e, "order of the root of unity (e > 1)");
    app->add_option("--p", cfg.p, "p, dividing r")->capture_default_str();
    app->add_option("--delta", cfg.delta, "number of charges")->capture_default_str();
    app->add_option("--charges", cfg.charges, "charges v_1 <= ... <= v_delta in [0, e'-1], comma or space separated");
    app->add_option("--n", cfg.n, "size n (lower bound of the range for verify)")->capture_default_str();
    app->add_option("--format", cfg.format, "json | tsv | pretty")->capture_default_str();
    app->add_option("--cap", cfg.cap, "size cap for explicit tableau enumeration")->capture_default_str();
    app->add_option("--signature-order", cfg.signature_order, "ascending | descending | leftmost")
        ->capture_default_str();
    app->add_option("--out", cfg.out, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simple modules of cyclotomic Hecke algebras of type G(r,p,n) at a root of unity"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* classify_cmd = app.add_subcommand("classify", "list the labels of the simple modules");
    auto* enum_cmd = app.add_subcommand("enum", "enumerate flotw | kleshchev | lambda1 | lambda0 | multipartitions");
    enum_cmd->add_option("target", cfg.target, "what to enumerate")->required();
    enum_cmd->add_option("--r", cfg.r, "level (multipartitions only)");
    auto* avalue_cmd = app.add_subcommand("avalue", "a-values (normalized g(n) = 0)");
    avalue_cmd->add_option("--lambda", cfg.lambda, "r-partition such as \"2,1||1\"; all of size n if omitted");
    auto* split_cmd = app.add_subcommand("split", "parameters Q and their Morita classes");
    auto* semisimple_cmd = app.add_subcommand("semisimple", "generic (semisimple) labels and dimensions");
    auto* verify_cmd = app.add_subcommand("verify", "check every cross-module identity");
    verify_cmd->add_option("--n-max", cfg.n_max, "upper end of the n range (default 4)");

    for (auto* sub : {classify_cmd, enum_cmd, avalue_cmd, split_cmd, semisimple_cmd, verify_cmd})
        add_spec_flags(sub, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    int status = kOk;
    std::string output;
    try {
        if (cfg.format != "json" && cfg.format != "tsv" && cfg.format != "pretty")
            throw BadInput("unknown format '" + cfg.format + "'");
        if (cfg.n < 0) throw BadInput("--n must be non-negative");
        cyclo::parse_signature_order(cfg.signature_order);

        if (cfg.command == "classify") output = run_classify(cfg);
        else if (cfg.command == "enum") output = run_enum(cfg);
        else if (cfg.command == "avalue") output = run_avalue(cfg);
        else if (cfg.command == "split") output = run_split(cfg);
        else if (cfg.command == "semisimple") {
            check_format(cfg, {"json", "tsv"});
            output = run_semisimple(cfg);
        } else if (cfg.command == "verify") {
            bool passed = true;
            output = run_verify(cfg, passed);
            if (!passed) status = kVerifyFailed;
        }
    } catch (const cyclo::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const cyclo::InvalidParameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }

    if (cfg.out.empty()) {
        std::cout << output;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out << '\n';
            return kBadInput;
        }
        file << output;
    }
    return status;
}
