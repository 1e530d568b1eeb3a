#include "hilbert/cli.hpp"

#include "hilbert/errors.hpp"
#include "hilbert/kernels.hpp"
#include "hilbert/monotone.hpp"
#include "hilbert/norms.hpp"
#include "hilbert/rational.hpp"
#include "hilbert/series.hpp"
#include "hilbert/special.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hilbert::cli {

namespace {

using nlohmann::json;

struct CommandInfo {
    Command command;
    const char* name;
    const char* summary;
    std::vector<std::string> keys;
    std::vector<std::string> flags; // boolean keys
};

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> table = {
        {Command::norms, "norms", "lower bounds on the l^p norm of H(alpha,beta) against the best constant",
         {"alpha", "beta", "p", "N", "tol", "max-iter", "method"}, {}},
        {Command::series, "series", "certify sum m^lambda/(m+n)^s against its beta or linear bound",
         {"lambda", "s", "n", "n-max", "bound", "budget"}, {}},
        {Command::region, "region", "exact sign check of the correction polynomials D_0..D_5 on a rational grid", {"step"}, {}},
        {Command::monotone, "monotone", "monotonicity of a_n and the inequalities it reduces to",
         {"alpha", "nmax", "ratio-nmax", "exploratory"}, {"exploratory"}},
        {Command::compare, "compare", "diagonal search for H(1-alpha,1-beta) > M(alpha,beta)", {"alpha", "beta", "limit"}, {}},
        {Command::em_check, "em-check", "both sides of the Euler-Maclaurin identity for t^lambda/(t+n)^s",
         {"lambda", "s", "n", "quad-points", "b2-constant"}, {}},
        {Command::schur, "schur", "Schur-test column and row sums against the best constant",
         {"alpha", "beta", "p", "j-max", "side"}, {}},
    };
    return table;
}

const CommandInfo& info(Command c) {
    for (const auto& entry : command_table()) {
        if (entry.command == c) return entry;
    }
    throw UsageError("unknown command");
}

std::string json_scalar_to_string(const json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(17) << v.get<double>();
        return os.str();
    }
    throw UsageError("--params-json: value for '" + key + "' must be a string, number or boolean");
}

// ---------------------------------------------------------------------------
// Typed access to the flat parameter map.

class Params {
public:
    Params(const RunConfig& config) : map_(config.params) {} // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool has(const std::string& key) const { return map_.count(key) != 0; }

    [[nodiscard]] const std::string& raw(const std::string& key) const {
        auto it = map_.find(key);
        if (it == map_.end()) throw UsageError("missing required flag --" + key);
        return it->second;
    }

    [[nodiscard]] ExactRational rational(const std::string& key) const {
        try {
            return ExactRational::parse(raw(key));
        } catch (const DomainError&) {
            throw UsageError("--" + key + " expects a rational such as 3, -0.5 or 1/64, got '" + raw(key) + "'");
        }
    }

    [[nodiscard]] double real(const std::string& key) const {
        const std::string& text = raw(key);
        try {
            return ExactRational::parse(text).to_double();
        } catch (const DomainError&) {
        }
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
            throw UsageError("--" + key + " expects a number, got '" + text + "'");
        }
        return v;
    }

    [[nodiscard]] double real(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }

    [[nodiscard]] std::uint64_t count(const std::string& key) const {
        const double v = real(key);
        if (v < 0.0 || v != std::floor(v) || v > 9007199254740992.0) {
            throw UsageError("--" + key + " expects a nonnegative integer, got '" + raw(key) + "'");
        }
        return static_cast<std::uint64_t>(v);
    }

    [[nodiscard]] std::uint64_t count(const std::string& key, std::uint64_t fallback) const {
        return has(key) ? count(key) : fallback;
    }

    [[nodiscard]] std::uint64_t positive(const std::string& key, std::uint64_t fallback) const {
        const std::uint64_t v = count(key, fallback);
        if (v == 0) throw UsageError("--" + key + " must be positive");
        return v;
    }

    [[nodiscard]] std::string choice(const std::string& key, const std::vector<std::string>& allowed, const std::string& fallback) const {
        if (!has(key)) return fallback;
        const std::string& v = raw(key);
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
            std::string list;
            for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
            throw UsageError("--" + key + " must be one of " + list + ", got '" + v + "'");
        }
        return v;
    }

    [[nodiscard]] bool flag(const std::string& key) const {
        if (!has(key)) return false;
        const std::string& v = raw(key);
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw UsageError("--" + key + " is a switch; got value '" + v + "'");
    }

private:
    const std::map<std::string, std::string>& map_;
};

// ---------------------------------------------------------------------------

struct Row {
    CheckReport report;
    bool asserted = true;
};

struct CommandResult {
    std::vector<Row> rows;
    bool estimation = false;
    std::map<std::string, std::string> resolved; // effective parameters, defaults included
};

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

CheckReport estimate_row(std::string name, double value, double bound, std::string location, std::string note) {
    constexpr double kBoundSlack = 1e-9;
    CheckReport r;
    r.name = std::move(name);
    r.lhs = value;
    r.rhs = bound;
    r.margin = bound - value;
    r.location = std::move(location);
    r.note = std::move(note);
    r.checked = 1;
    r.verdict = value <= bound + kBoundSlack ? Verdict::pass : Verdict::fail;
    return r;
}

CommandResult run_norms(const Params& p, unsigned threads) {
    CommandResult out;
    out.estimation = true;
    const KernelParams kp{p.real("alpha"), p.real("beta")};
    const double pv = p.real("p");
    if (!(pv > 1.0)) throw DomainError("requires p > 1 (p=" + num(pv) + ")");
    const auto exps = ConjugateExponents::from_p(pv);
    const std::uint64_t N = p.positive("N", 1024);
    const double tol = p.real("tol", 1e-10);
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    const std::uint64_t max_iter = p.positive("max-iter", 10000);
    const std::string method = p.choice("method", {"both", "power", "test-vector"}, "both");
    out.resolved = {{"alpha", p.raw("alpha")}, {"beta", p.raw("beta")}, {"p", p.raw("p")}, {"N", std::to_string(N)},
                    {"tol", num(tol)}, {"max-iter", std::to_string(max_iter)}, {"method", method}};

    const double k = best_constant(kp, exps);
    const std::string where = "N=" + std::to_string(N);
    out.rows.push_back({estimate_row("best_constant", k, k, "alpha=" + num(kp.alpha) + ",beta=" + num(kp.beta) + ",p=" + num(pv),
                                     "B(alpha+1/p, beta+1/q)"),
                        true});
    if (method != "test-vector") {
        const NormEstimate est = power_iteration_lower_bound(kp, exps, N, tol, max_iter, threads);
        out.rows.push_back({estimate_row("power_iteration_lower_bound", est.value, k, where,
                                         "iterations=" + std::to_string(est.iterations) + " residual=" + num(est.residual) +
                                             (est.converged ? "" : " (not converged)") + " ratio=" + num(est.value / k)),
                            true});
    }
    if (method != "power") {
        const double tv = test_vector_lower_bound(kp, exps, N, threads);
        out.rows.push_back({estimate_row("test_vector_lower_bound", tv, k, where, "ratio=" + num(tv / k)), true});
    }
    return out;
}

CommandResult run_series(const Params& p) {
    CommandResult out;
    const std::string bound = p.choice("bound", {"beta", "linear", "none"}, "beta");
    const double s = p.real("s");
    const std::uint64_t n = p.positive("n", 1);
    const std::uint64_t n_max = p.count("n-max", n);
    if (n_max < n) throw UsageError("--n-max must be >= --n");
    double lambda = 1.0;
    if (bound == "linear") {
        if (p.has("lambda") && p.real("lambda") != 1.0) throw UsageError("--bound linear fixes lambda = 1");
    } else {
        lambda = p.real("lambda");
    }
    out.resolved = {{"bound", bound}, {"lambda", p.has("lambda") ? p.raw("lambda") : num(lambda)}, {"s", p.raw("s")},
                    {"n", std::to_string(n)}, {"n-max", std::to_string(n_max)}};
    if (bound == "none") {
        out.estimation = true;
        const std::uint64_t budget = p.positive("budget", 4096);
        out.resolved["budget"] = std::to_string(budget);
        for (std::uint64_t m = n; m <= n_max; ++m) {
            const SeriesParams sp{lambda, s, m};
            const CertifiedValue cv = certified_sum(sp, budget);
            CheckReport r;
            r.name = "certified_sum";
            r.lhs = cv.lower;
            r.rhs = cv.upper;
            r.margin = cv.width();
            r.location = "lambda=" + num(lambda) + ",s=" + num(s) + ",n=" + std::to_string(m);
            r.checked = cv.terms_summed;
            r.note = "enclosure [lhs, rhs], tail " + std::string(to_string(cv.tail_method));
            out.rows.push_back({r, true});
        }
        return out;
    }
    if (p.has("budget")) throw UsageError("--budget applies only to --bound none");
    for (std::uint64_t m = n; m <= n_max; ++m) {
        out.rows.push_back({bound == "beta" ? verify_beta_series_bound({lambda, s, m}) : verify_linear_series_bound(s, m), true});
    }
    return out;
}

CommandResult run_region(const Params& p, unsigned threads) {
    CommandResult out;
    const ExactRational step = p.has("step") ? p.rational("step") : ExactRational(1, 64);
    out.resolved = {{"step", step.str()}};
    for (const auto& r : verify_region_by_index(step, threads)) out.rows.push_back({r, true});
    return out;
}

CommandResult run_monotone(const Params& p) {
    CommandResult out;
    const double alpha = p.real("alpha");
    const std::uint64_t n_max = p.positive("nmax", 10000);
    const std::uint64_t ratio_max = p.positive("ratio-nmax", std::min<std::uint64_t>(n_max, 1000));
    const bool exploratory = p.flag("exploratory");
    out.resolved = {{"alpha", p.raw("alpha")}, {"nmax", std::to_string(n_max)}, {"ratio-nmax", std::to_string(ratio_max)},
                    {"exploratory", exploratory ? "true" : "false"}};
    if (exploratory && !(alpha > 1.0)) {
        out.rows.push_back({verify_increasing({alpha, n_max, true}), false});
        return out;
    }
    out.rows.push_back({verify_increasing({alpha, n_max, exploratory}), true});
    out.rows.push_back({verify_power_sum_ratio_range(alpha, ratio_max), true});
    out.rows.push_back({verify_second_difference_range(alpha, ratio_max), true});
    out.rows.push_back({verify_f_aux_grid(alpha, ratio_max), true});
    return out;
}

CommandResult run_compare(const Params& p, unsigned threads) {
    CommandResult out;
    const KernelParams kp{p.real("alpha"), p.real("beta")};
    const std::uint64_t limit = p.positive("limit", 10000);
    out.resolved = {{"alpha", p.raw("alpha")}, {"beta", p.raw("beta")}, {"limit", std::to_string(limit)}};
    out.rows.push_back({compare_entrywise(kp, limit, threads), true});
    return out;
}

CommandResult run_em_check(const Params& p) {
    CommandResult out;
    const SeriesParams sp{p.real("lambda"), p.real("s"), p.positive("n", 1)};
    const std::uint64_t points = p.positive("quad-points", 20);
    if (points < 2 || points > 200) throw UsageError("--quad-points must lie in 2..200");
    const ExactRational b2 = p.has("b2-constant") ? p.rational("b2-constant") : ExactRational(1, 6);
    out.resolved = {{"lambda", p.raw("lambda")}, {"s", p.raw("s")}, {"n", std::to_string(sp.n)},
                    {"quad-points", std::to_string(points)}, {"b2-constant", b2.str()}};
    out.rows.push_back({euler_maclaurin_check(sp, static_cast<int>(points), b2.to_double()), true});
    return out;
}

CommandResult run_schur(const Params& p) {
    CommandResult out;
    const KernelParams kp{p.real("alpha"), p.real("beta")};
    const double pv = p.real("p");
    if (!(pv > 1.0)) throw DomainError("requires p > 1 (p=" + num(pv) + ")");
    const auto exps = ConjugateExponents::from_p(pv);
    const std::uint64_t j_max = p.positive("j-max", 50);
    const std::string side = p.choice("side", {"both", "column", "row"}, "both");
    out.resolved = {{"alpha", p.raw("alpha")}, {"beta", p.raw("beta")}, {"p", p.raw("p")}, {"j-max", std::to_string(j_max)},
                    {"side", side}};
    const HomogeneousKernel kernel(kp);
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        if (side != "row") out.rows.push_back({schur_column_check(kernel, exps, j).to_check(), true});
        if (side != "column") out.rows.push_back({schur_row_check(kernel, exps, j).to_check(), true});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Report rendering

json to_json(const Row& row) {
    const CheckReport& r = row.report;
    json v;
    v["name"] = r.name;
    v["pass"] = r.verdict == Verdict::pass;
    v["verdict"] = std::string(to_string(r.verdict));
    v["lhs"] = r.lhs;
    v["rhs"] = r.rhs;
    v["margin"] = r.margin;
    v["location"] = r.location;
    v["checked"] = r.checked;
    v["note"] = r.note;
    if (r.first_violation) {
        v["first_violation"] = {{"location", r.first_violation->location}, {"lhs", r.first_violation->lhs}, {"rhs", r.first_violation->rhs}};
    }
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render(const RunConfig& config, const CommandResult& result, double timing_ms) {
    std::ostringstream os;
    switch (config.format) {
    case Format::json: {
        json doc;
        doc["command"] = command_name(config.command);
        doc["params"] = result.resolved;
        doc["verdicts"] = json::array();
        for (const auto& row : result.rows) doc["verdicts"].push_back(to_json(row));
        doc["timing_ms"] = timing_ms;
        os << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "name,verdict,pass,lhs,rhs,margin,location,checked,note\n";
        for (const auto& row : result.rows) {
            const CheckReport& r = row.report;
            os << csv_field(r.name) << ',' << to_string(r.verdict) << ',' << (r.verdict == Verdict::pass ? "true" : "false") << ','
               << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.margin) << ',' << csv_field(r.location) << ',' << r.checked << ','
               << csv_field(r.note) << '\n';
        }
        break;
    case Format::text: {
        os << "command: " << command_name(config.command) << '\n';
        for (const auto& [k, v] : result.resolved) os << "  " << k << " = " << v << '\n';
        char line[512];
        std::snprintf(line, sizeof line, "%-30s %-12s %-22s %-22s %-12s %s\n", "check", "verdict", "lhs", "rhs", "margin", "location");
        os << line;
        for (const auto& row : result.rows) {
            const CheckReport& r = row.report;
            std::snprintf(line, sizeof line, "%-30s %-12s %-22.15g %-22.15g %-12.3e %s\n", r.name.c_str(),
                          std::string(to_string(r.verdict)).c_str(), r.lhs, r.rhs, r.margin, r.location.c_str());
            os << line;
            if (!r.note.empty()) os << "    " << r.note << '\n';
        }
        os << "time: " << timing_ms << " ms\n";
        break;
    }
    }
    return os.str();
}

void check_keys(const RunConfig& config) {
    const auto& allowed = accepted_keys(config.command);
    for (const auto& [key, value] : config.params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw UsageError("unknown parameter '" + key + "' for command " + command_name(config.command));
        }
    }
}

} // namespace

const std::vector<std::string>& accepted_keys(Command command) { return info(command).keys; }

std::string command_name(Command command) { return info(command).name; }

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Verification toolkit for Hilbert-type matrix inequalities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string output;
    unsigned threads = 1;
    std::string params_json;
    bool deterministic = false;
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", output, "write the report to this file instead of stdout");
    app.add_option("--threads", threads, "worker threads for sweeps (0 = all cores)");
    app.add_option("--params-json", params_json, "extra parameters as a JSON object or a path to one");
    app.add_flag("--deterministic", deterministic, "report timing_ms as 0 for byte-identical output");

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::map<std::string, bool>> switches;
    std::vector<std::pair<const CommandInfo*, CLI::App*>> subs;
    for (const auto& entry : command_table()) {
        CLI::App* sub = app.add_subcommand(entry.name, entry.summary);
        for (const auto& key : entry.keys) {
            if (std::find(entry.flags.begin(), entry.flags.end(), key) != entry.flags.end()) {
                sub->add_flag("--" + key, switches[entry.name][key]);
            } else {
                sub->add_option("--" + key, values[entry.name][key]);
            }
        }
        subs.emplace_back(&entry, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    for (const auto& [entry, sub] : subs) {
        if (!sub->parsed()) continue;
        config.command = entry->command;
        for (const auto& key : entry->keys) {
            const CLI::Option* opt = sub->get_option("--" + key);
            if (opt->count() == 0) continue;
            const auto& sw = switches[entry->name];
            config.params[key] = sw.count(key) ? (sw.at(key) ? "true" : "false") : values[entry->name][key];
        }
    }
    if (!params_json.empty()) {
        std::string text = params_json;
        if (text.find('{') == std::string::npos) {
            std::ifstream in(params_json);
            if (!in) throw UsageError("--params-json: cannot read '" + params_json + "'");
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw UsageError(std::string("--params-json: ") + e.what());
        }
        if (!doc.is_object()) throw UsageError("--params-json must be a JSON object");
        for (const auto& [key, value] : doc.items()) {
            if (config.params.count(key)) throw UsageError("parameter '" + key + "' given both as a flag and in --params-json");
            config.params[key] = json_scalar_to_string(value, key);
        }
    }
    config.format = format == "csv" ? Format::csv : (format == "text" ? Format::text : Format::json);
    if (!output.empty()) config.output_path = output;
    config.threads = threads;
    config.deterministic = deterministic;
    check_keys(config);
    return config;
}

RunOutcome execute(const RunConfig& config) {
    RunOutcome outcome;
    try {
        check_keys(config);
        const Params params(config);
        const auto start = std::chrono::steady_clock::now();
        CommandResult result;
        switch (config.command) {
        case Command::norms: result = run_norms(params, config.threads); break;
        case Command::series: result = run_series(params); break;
        case Command::region: result = run_region(params, config.threads); break;
        case Command::monotone: result = run_monotone(params); break;
        case Command::compare: result = run_compare(params, config.threads); break;
        case Command::em_check: result = run_em_check(params); break;
        case Command::schur: result = run_schur(params); break;
        }
        const double ms =
            config.deterministic ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        outcome.report = render(config, result, ms);
        outcome.exit_code = kExitPass;
        if (!result.estimation) {
            for (const auto& row : result.rows) {
                if (row.asserted && (row.report.verdict == Verdict::fail || row.report.verdict == Verdict::inconclusive)) {
                    outcome.exit_code = kExitVerdictFailure;
                }
            }
        }
    } catch (const UsageError& e) {
        outcome = {kExitUsage, "", e.what()};
    } catch (const DomainError& e) {
        outcome = {kExitDomain, "", e.what()};
    }
    return outcome;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const RunOutcome outcome = execute(config);
    if (!outcome.error.empty()) {
        err << "error: " << outcome.error << '\n';
        return outcome.exit_code;
    }
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        file << outcome.report;
        file.flush();
        if (!file) {
            err << "error: cannot write report to '" << *config.output_path << "'\n";
            return kExitUsage;
        }
    } else {
        out << outcome.report;
    }
    return outcome.exit_code;
}

} // namespace hilbert::cli
