#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "mzvlab/expression.hpp"
#include "mzvlab/identities.hpp"
#include "mzvlab/report_io.hpp"
#include "mzvlab/series.hpp"

using namespace mzvlab;

namespace {

struct GlobalOptions {
    int digits = 40;
    long max_terms = 1000000;
    std::string backend = "auto";
    std::string tolerance;
    std::string out_path;
    std::string format = "text";
    std::string cache_path = default_cache_path();
    int jobs = 1;
};

PrecisionConfig make_config(const GlobalOptions& g) {
    PrecisionConfig cfg;
    cfg.digits = g.digits;
    cfg.max_terms = g.max_terms;
    if (g.backend == "auto")
        cfg.backend = Backend::automatic;
    else if (g.backend == "direct")
        cfg.backend = Backend::direct;
    else if (g.backend == "holder")
        cfg.backend = Backend::holder;
    else
        throw domain_error("backend must be auto, direct or holder");
    setup_precision(cfg);
    if (!g.tolerance.empty()) cfg.tolerance = HPReal(g.tolerance);
    return cfg;
}

std::ostream& open_out(const GlobalOptions& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file) throw domain_error("cannot open output file " + g.out_path);
    return file;
}

int run_eval(const GlobalOptions& g, const std::string& text) {
    const PrecisionConfig cfg = make_config(g);
    const Expression expr = parse_expression(text);
    const std::string key = expr.canonical();

    std::ofstream file;
    std::ostream& os = open_out(g, file);

    EvalOutput result;
    bool from_cache = false;
    ValueCache cache(g.cache_path);
    if (const auto hit = cache.lookup(key, g.digits)) {
        result.is_value = true;
        result.value.value = HPReal(hit->value);
        result.value.bound = HPReal(hit->bound);
        result.value.kind = hit->bound_kind == "rigorous" ? BoundKind::rigorous
                                                          : BoundKind::heuristic;
        from_cache = true;
    } else {
        result = evaluate_expression(expr, cfg);
        if (result.is_value) {
            CacheEntry entry;
            entry.expr = key;
            entry.digits = g.digits;
            entry.value = render(result.value.value, g.digits + 5);
            entry.bound = render(result.value.bound, 3);
            entry.bound_kind =
                result.value.kind == BoundKind::rigorous ? "rigorous" : "heuristic";
            entry.timestamp = iso_timestamp();
            cache.append(entry);
        }
    }

    if (!result.is_value) {
        if (g.format == "json") {
            nlohmann::json j;
            j["expr"] = key;
            j["result"] = result.text;
            os << j.dump() << '\n';
        } else {
            os << result.text << '\n';
        }
        return 0;
    }
    const std::string value = render(result.value.value, g.digits);
    const std::string bound = render(result.value.bound, 3);
    const std::string kind =
        result.value.kind == BoundKind::rigorous ? "rigorous" : "heuristic";
    if (g.format == "json") {
        nlohmann::json j;
        j["expr"] = key;
        j["digits"] = g.digits;
        j["value"] = value;
        j["bound"] = bound;
        j["bound_kind"] = kind;
        j["cached"] = from_cache;
        os << j.dump() << '\n';
    } else if (g.format == "csv") {
        os << "expr,digits,value,bound,bound_kind\n";
        os << '"' << key << "\"," << g.digits << ',' << value << ',' << bound
           << ',' << kind << '\n';
    } else {
        os << key << " = " << value << "  +- " << bound << " (" << kind << ")"
           << (from_cache ? " [cached]" : "") << '\n';
    }
    return 0;
}

int emit_reports(const GlobalOptions& g,
                 const std::vector<VerificationReport>& reports) {
    std::ofstream file;
    std::ostream& os = open_out(g, file);
    if (g.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, g.digits));
        os << arr.dump(2) << '\n';
    } else if (g.format == "csv") {
        os << report_csv_header() << '\n';
        for (const auto& r : reports) os << report_to_csv(r, g.digits) << '\n';
    } else {
        for (const auto& r : reports) os << report_to_text(r, g.digits) << '\n';
        int passed = 0, failed = 0, conjecture = 0;
        for (const auto& r : reports) {
            if (r.conjecture)
                ++conjecture;
            else if (r.passed)
                ++passed;
            else
                ++failed;
        }
        os << passed << " passed, " << failed << " failed";
        if (conjecture) os << ", " << conjecture << " conjecture checks";
        os << '\n';
    }
    return suite_passed(reports) ? 0 : 1;
}

int run_verify(const GlobalOptions& g, const std::string& id,
               const std::vector<std::string>& assignments) {
    const PrecisionConfig cfg = make_config(g);
    const Params params = parse_param_assignments(assignments);
    const VerificationReport report = verify(id, params, cfg);
    return emit_reports(g, {report});
}

int run_filtered_suite(const GlobalOptions& g, const std::string& filter) {
    const PrecisionConfig cfg = make_config(g);
    if (list_identities(filter).empty() && !filter.empty())
        throw domain_error("no identities match filter '" + filter + "'");
    return emit_reports(g, run_suite(filter, cfg, g.jobs));
}

int run_constants(const GlobalOptions& g) {
    const PrecisionConfig cfg = make_config(g);
    const auto consts = fundamental_constants(cfg);
    std::ofstream file;
    std::ostream& os = open_out(g, file);
    if (g.format == "json") {
        nlohmann::json j;
        j["pi"] = render(consts.pi, g.digits);
        j["log2"] = render(consts.log2, g.digits);
        os << j.dump() << '\n';
    } else {
        os << "pi   = " << render(consts.pi, g.digits) << '\n';
        os << "log2 = " << render(consts.log2, g.digits) << '\n';
    }
    return 0;
}

int run_cache(const GlobalOptions& g, const std::string& action) {
    ValueCache cache(g.cache_path);
    if (action == "show") {
        std::ofstream file;
        std::ostream& os = open_out(g, file);
        for (const auto& e : cache.entries())
            os << e.expr << "  digits=" << e.digits << "  value=" << e.value
               << "  " << e.timestamp << '\n';
        return 0;
    }
    if (action == "clear") {
        cache.clear();
        return 0;
    }
    throw domain_error("cache action must be show or clear");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision evaluation and identity verification for "
                 "multiple zeta values and their variants"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--digits", g.digits, "working decimal digits P");
    app.add_option("--max-terms", g.max_terms, "cap on direct summation length");
    app.add_option("--backend", g.backend, "zeta backend: auto|direct|holder");
    app.add_option("--tolerance", g.tolerance, "verification tolerance override");
    app.add_option("--out", g.out_path, "write output to this file");
    app.add_option("--format", g.format, "output format: text|json|csv");
    app.add_option("--cache", g.cache_path, "cache file path");
    app.add_option("--jobs", g.jobs, "parallel workers across catalog entries");

    std::string eval_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a value expression");
    eval_cmd->add_option("expression", eval_text, "e.g. \"zeta(2,1)\"")->required();

    std::string verify_id;
    std::vector<std::string> verify_params;
    auto* verify_cmd =
        app.add_subcommand("verify", "check one catalog identity instance");
    verify_cmd->add_option("id", verify_id, "identity id, e.g. STAR-2-ONES")
        ->required();
    verify_cmd->add_option("--param", verify_params,
                           "parameter assignment name=value (repeatable)");

    std::string filter;
    auto* suite_cmd =
        app.add_subcommand("suite", "run the verification suite");
    suite_cmd->add_option("--filter", filter, "id prefix filter, e.g. GOLD-*");

    auto* const_cmd = app.add_subcommand("constants", "print pi and log 2");

    std::string cache_action;
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the cache");
    cache_cmd->add_option("action", cache_action, "show | clear")->required();

    // global flags may follow the subcommand, e.g. `eval "zeta(2)" --digits 30`
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return run_eval(g, eval_text);
        if (verify_cmd->parsed()) return run_verify(g, verify_id, verify_params);
        if (suite_cmd->parsed()) return run_filtered_suite(g, filter);
        if (const_cmd->parsed()) return run_constants(g);
        if (cache_cmd->parsed()) return run_cache(g, cache_action);
    } catch (const parse_error& e) {
        std::cerr << "error: syntax: " << e.what() << '\n';
        return 2;
    } catch (const divergence_error& e) {
        std::cerr << "error: divergent: " << e.what() << '\n';
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
