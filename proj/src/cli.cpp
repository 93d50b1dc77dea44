#include <dbell/cli.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include <dbell/combinatorics.hpp>
#include <dbell/serialize.hpp>
#include <dbell/series.hpp>

namespace dbell::cli {

namespace {

const std::map<std::string, Family> kFamilies{{"bell", Family::bell},
                                              {"stirling1", Family::stirling1},
                                              {"stirling2", Family::stirling2},
                                              {"dstirling", Family::dstirling},
                                              {"dbell", Family::dbell}};

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

void add_format_options(CLI::App* sub, std::string& format, std::string& output)
{
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", output, "Write to this file instead of standard output");
}

} // namespace

std::optional<CliConfig> parse_args(const std::vector<std::string>& args, std::string& help)
{
    CliConfig config;
    std::string family = "dbell";
    std::string format = "text";
    std::string output;

    CLI::App app{"Exact degenerate Bell polynomials and degenerate Stirling numbers", "dbell"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Emit a table of one number family for n = 0..n-max");
    table->add_option("--family", family, "bell | stirling1 | stirling2 | dstirling | dbell")
        ->required()
        ->check(CLI::IsMember({"bell", "stirling1", "stirling2", "dstirling", "dbell"}));
    table->add_option("--n-max", config.n_max, "Largest n")->check(CLI::NonNegativeNumber);
    add_format_options(table, format, output);

    auto* verify = app.add_subcommand("verify", "Check every closed form and identity up to n-max");
    verify->add_option("--n-max", config.n_max, "Largest n (default 12)")->check(CLI::NonNegativeNumber);
    verify->add_option("--terms", config.terms, "Series truncation for the numeric grid")
        ->check(CLI::Range(1U, std::numeric_limits<unsigned>::max()));
    verify->add_option("--tol", config.tol, "Absolute tolerance for the numeric grid")->check(CLI::PositiveNumber);
    add_format_options(verify, format, output);

    auto* eval = app.add_subcommand("eval", "Evaluate Bel_{n,lambda}(x) in floating point");
    eval->add_option("--n", config.n, "Index n")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--lambda", config.lambda, "lambda > -1, nonzero")->required();
    eval->add_option("--x", config.x, "Evaluation point")->required();
    eval->add_flag("--dobinski", config.dobinski, "Also sum the truncated Dobinski-type series");
    eval->add_option("--terms", config.terms, "Series truncation")
        ->check(CLI::Range(1U, std::numeric_limits<unsigned>::max()));
    eval->add_option("--tol", config.tol, "Tolerance for the series gap")->check(CLI::PositiveNumber);
    add_format_options(eval, format, output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        help = app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n\n" + app.help());
    }

    if (table->parsed()) {
        config.command = Command::table;
    } else if (verify->parsed()) {
        config.command = Command::verify;
    } else {
        config.command = Command::eval;
    }
    config.family = kFamilies.at(family);
    config.format = kFormats.at(format);
    if (!output.empty()) {
        config.output = output;
    }

    if (config.command == Command::eval) {
        try {
            validate_lambda(*config.lambda);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        if (!std::isfinite(*config.x)) {
            throw UsageError("x must be finite");
        }
    }
    return config;
}

// ---------------------------------------------------------------- table

namespace {

std::string family_name(Family f)
{
    for (const auto& [name, value] : kFamilies) {
        if (value == f) {
            return name;
        }
    }
    return "?";
}

std::string csv_poly_rows(const std::string& prefix, const MPoly& p)
{
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        out += prefix + "," + c.to_string();
        for (Var v : kAllVars) {
            out += "," + std::to_string(m[v]);
        }
        out += "\n";
    }
    return out;
}

std::string render_integer_table(Family family, unsigned n_max, Format format)
{
    const StirlingTable table(family == Family::stirling1 ? StirlingKind::first : StirlingKind::second, n_max);
    switch (format) {
        case Format::text: {
            std::string out;
            for (unsigned n = 0; n <= n_max; ++n) {
                std::string line;
                for (const auto& v : table.row(n)) {
                    line += (line.empty() ? "" : " ") + v.get_str();
                }
                out += line + "\n";
            }
            return out;
        }
        case Format::json: {
            Json rows = Json::array();
            for (unsigned n = 0; n <= n_max; ++n) {
                Json row = Json::array();
                for (const auto& v : table.row(n)) {
                    row.push_back(v.get_str());
                }
                rows.push_back(std::move(row));
            }
            return Json{{"family", family_name(family)}, {"rows", std::move(rows)}}.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out = "n,k,value\n";
            for (unsigned n = 0; n <= n_max; ++n) {
                for (unsigned k = 0; k <= n; ++k) {
                    out += std::to_string(n) + "," + std::to_string(k) + "," + table.at(n, k).get_str() + "\n";
                }
            }
            return out;
        }
    }
    return {};
}

std::string render_bell_table(Family family, unsigned n_max, Format format)
{
    const bool degenerate = family == Family::dbell;
    std::string text;
    std::string csv = "n,coeff,lambda,L,x,y\n";
    Json entries = Json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
        const MPoly p = degenerate ? bel_thm3(n) : bell_polynomial(n);
        const std::string label = degenerate ? "Bel_{" + std::to_string(n) + ",λ}(x)" : "Bel_" + std::to_string(n) + "(x)";
        text += label + " = " + p.to_string() + "\n";
        csv += csv_poly_rows(std::to_string(n), p);
        entries.push_back(Json{{"n", n}, {"poly", to_json(p)}});
    }
    switch (format) {
        case Format::text:
            return text;
        case Format::json:
            return Json{{"family", family_name(family)}, {"entries", std::move(entries)}}.dump(2) + "\n";
        case Format::csv:
            return csv;
    }
    return {};
}

std::string render_dstirling_table(unsigned n_max, Format format)
{
    std::string text;
    std::string csv = "n,m,coeff,lambda,L,x,y\n";
    Json entries = Json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= n; ++m) {
            const MPoly p = degenerate_stirling2_closed(n, m);
            text += "S2(" + std::to_string(n) + "," + std::to_string(m) + "|λ) = " + p.to_string() + "\n";
            csv += csv_poly_rows(std::to_string(n) + "," + std::to_string(m), p);
            entries.push_back(Json{{"n", n}, {"m", m}, {"poly", to_json(p)}});
        }
    }
    switch (format) {
        case Format::text:
            return text;
        case Format::json:
            return Json{{"family", "dstirling"}, {"entries", std::move(entries)}}.dump(2) + "\n";
        case Format::csv:
            return csv;
    }
    return {};
}

} // namespace

RunResult run_table(const CliConfig& config)
{
    switch (config.family) {
        case Family::stirling1:
        case Family::stirling2:
            return {render_integer_table(config.family, config.n_max, config.format), kExitOk};
        case Family::bell:
        case Family::dbell:
            return {render_bell_table(config.family, config.n_max, config.format), kExitOk};
        case Family::dstirling:
            return {render_dstirling_table(config.n_max, config.format), kExitOk};
    }
    throw UsageError("unknown family");
}

// --------------------------------------------------------------- verify

namespace {

using Sides = std::pair<MPoly, MPoly>;

MPoly classical_recurrence_rhs(unsigned n)
{
    MPoly sum;
    for (unsigned j = 0; j <= n; ++j) {
        sum += bell_polynomial(j) * Rational(binomial(n, j));
    }
    return MPoly::var(Var::x) * sum;
}

// Row n of a triangular family as the generating polynomial sum_m a(n, m) x^m.
template <typename Entry>
MPoly row_polynomial(unsigned n, Entry entry)
{
    MPoly row;
    for (unsigned m = 0; m <= n; ++m) {
        row += entry(n, m) * MPoly::var(Var::x, m);
    }
    return row;
}

std::vector<VerificationReport> exact_reports(unsigned n_max)
{
    std::vector<VerificationReport> reports;
    const auto against_series = [&](const std::string& name, unsigned lo, MPoly (*build)(unsigned)) {
        if (lo <= n_max) {
            reports.push_back(verify_range(name, lo, n_max, [build](unsigned n) -> Sides {
                return {build(n), oracle_degenerate_bell(n)};
            }));
        }
    };
    against_series("bel_thm1_vs_series", 0, bel_thm1);
    against_series("bel_thm3_vs_series", 0, bel_thm3);
    against_series("bel_thm7_vs_series", 1, bel_thm7);
    against_series("bel_composita_vs_series", 0, bel_composita);
    against_series("bel_recurrence_vs_series", 0, bel_recurrence);

    reports.push_back(verify_range("degenerate_stirling2_vs_series", 0, n_max, [](unsigned n) -> Sides {
        return {row_polynomial(n, degenerate_stirling2_closed), row_polynomial(n, oracle_degenerate_stirling2)};
    }));
    reports.push_back(verify_range("stirling_inversion", 0, n_max, [](unsigned n) -> Sides {
        const auto product = [](unsigned row, unsigned col) {
            BigInt s;
            for (unsigned l = col; l <= row; ++l) {
                s += stirling1(row, l) * stirling2(l, col);
            }
            return MPoly(Rational(s));
        };
        return {row_polynomial(n, product), MPoly::var(Var::x, n)};
    }));
    reports.push_back(verify_range("limit_lambda_zero", 0, n_max, [](unsigned n) -> Sides {
        return {limit_lambda_zero(bel_thm3(n)), bell_polynomial(n)};
    }));
    reports.push_back(verify_range("classical_recurrence", 0, n_max, [](unsigned n) -> Sides {
        return {bell_polynomial(n + 1), classical_recurrence_rhs(n)};
    }));
    reports.push_back(verify_range("recurrence_limit", 0, n_max, [](unsigned n) -> Sides {
        std::vector<MPoly> lower;
        for (unsigned k = 0; k <= n; ++k) {
            lower.push_back(bel_thm3(k));
        }
        return {limit_lambda_zero(bel_recurrence_step(lower)), classical_recurrence_rhs(n)};
    }));
    reports.push_back(verify_addition(0, n_max));
    if (n_max >= 1) {
        reports.push_back(verify_derivative(1, n_max));
    }
    return reports;
}

std::tuple<std::string, unsigned, double, double> sort_key(const VerifyItem& item)
{
    if (const auto* r = std::get_if<VerificationReport>(&item)) {
        return {r->identity, r->lo, 0.0, 0.0};
    }
    const auto& c = std::get<NumericCheck>(item);
    return {c.identity, c.n, c.lambda.value_or(0.0), c.x};
}

} // namespace

std::vector<VerifyItem> collect_verification(unsigned n_max, unsigned terms, double tol)
{
    std::vector<VerifyItem> items;
    for (auto& r : exact_reports(n_max)) {
        items.emplace_back(std::move(r));
    }

    const unsigned numeric_max = std::min(n_max, kNumericGridMaxN);
    const std::vector<double> lambdas{0.1, 0.5, 1.0};
    const std::vector<double> xs{0.5, 1.0, 2.0};
    for (unsigned n = 0; n <= numeric_max; ++n) {
        for (double x : xs) {
            for (double lambda : lambdas) {
                items.emplace_back(thm6_numeric_check(n, lambda, x, terms, tol));
                items.emplace_back(thm2_numeric_check(n, lambda, x, terms, tol));
            }
            items.emplace_back(classical_dobinski_check(n, x, terms, tol));
        }
        for (auto& c : limit_sweep(n, 1.0, {1e-2, 1e-4, 1e-6})) {
            items.emplace_back(std::move(c));
        }
    }

    std::stable_sort(items.begin(), items.end(),
                     [](const VerifyItem& a, const VerifyItem& b) { return sort_key(a) < sort_key(b); });
    return items;
}

bool item_passed(const VerifyItem& item)
{
    return std::visit([](const auto& v) { return v.passed; }, item);
}

RunResult run_verify(const CliConfig& config)
{
    const auto items = collect_verification(config.n_max, config.terms, config.tol);
    const bool all_passed = std::all_of(items.begin(), items.end(), item_passed);
    const auto passed_count = std::count_if(items.begin(), items.end(), item_passed);

    std::string out;
    switch (config.format) {
        case Format::text: {
            for (const auto& item : items) {
                if (const auto* r = std::get_if<VerificationReport>(&item)) {
                    out += std::string(r->passed ? "PASS" : "FAIL") + "  " + r->identity + "  n=" +
                           std::to_string(r->lo) + ".." + std::to_string(r->hi);
                    if (r->first_failure) {
                        out += "  first failure at n=" + std::to_string(r->first_failure->n) +
                               ": lhs = " + r->first_failure->lhs.to_string() +
                               ", rhs = " + r->first_failure->rhs.to_string();
                    }
                } else {
                    const auto& c = std::get<NumericCheck>(item);
                    out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.identity + "  n=" +
                           std::to_string(c.n) +
                           (c.lambda ? " lambda=" + format_double(*c.lambda) : std::string()) +
                           " x=" + format_double(c.x) + " terms=" + std::to_string(c.terms) +
                           " abs_error=" + format_double(c.abs_error) + " tol=" + format_double(c.tol);
                }
                out += "\n";
            }
            out += std::to_string(passed_count) + "/" + std::to_string(items.size()) + " checks passed\n";
            break;
        }
        case Format::json: {
            Json arr = Json::array();
            for (const auto& item : items) {
                arr.push_back(std::visit([](const auto& v) { return to_json(v); }, item));
            }
            out = arr.dump(2) + "\n";
            break;
        }
        case Format::csv: {
            out = numeric_csv_header() + "\n";
            for (const auto& item : items) {
                if (const auto* c = std::get_if<NumericCheck>(&item)) {
                    out += to_csv_row(*c) + "\n";
                }
            }
            break;
        }
    }
    return {out, all_passed ? kExitOk : kExitVerificationFailed};
}

// ----------------------------------------------------------------- eval

RunResult run_eval(const CliConfig& config)
{
    const double lambda = config.lambda.value();
    const double x = config.x.value();
    const double value = eval_bel_numeric(config.n, lambda, x);

    std::optional<double> series;
    double gap = 0.0;
    bool passed = true;
    if (config.dobinski) {
        series = dobinski_degenerate(config.n, lambda, x, config.terms);
        gap = std::fabs(*series - value);
        passed = gap <= config.tol;
    }

    std::string out;
    switch (config.format) {
        case Format::text:
            out = "Bel_{" + std::to_string(config.n) + "," + format_double(lambda) + "}(" + format_double(x) +
                  ") = " + format_double(value) + "\n";
            if (series) {
                out += "dobinski(" + std::to_string(config.terms) + " terms) = " + format_double(*series) + "\n";
                out += "gap = " + format_double(gap) + " (tol " + format_double(config.tol) + ", " +
                       (passed ? "PASS" : "FAIL") + ")\n";
            }
            break;
        case Format::json: {
            Json j;
            j["n"] = config.n;
            j["lambda"] = lambda;
            j["x"] = x;
            j["value"] = value;
            if (series) {
                j["dobinski"] = Json{{"terms", config.terms},
                                     {"value", *series},
                                     {"gap", gap},
                                     {"tol", config.tol},
                                     {"passed", passed}};
            }
            out = j.dump(2) + "\n";
            break;
        }
        case Format::csv:
            out = "n,lambda,x,value";
            out += series ? ",terms,dobinski,gap,passed\n" : "\n";
            out += std::to_string(config.n) + "," + format_double(lambda) + "," + format_double(x) + "," +
                   format_double(value);
            if (series) {
                out += "," + std::to_string(config.terms) + "," + format_double(*series) + "," +
                       format_double(gap) + (passed ? ",true" : ",false");
            }
            out += "\n";
            break;
    }
    return {out, passed ? kExitOk : kExitVerificationFailed};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::optional<CliConfig> config;
    try {
        std::string help;
        config = parse_args(args, help);
        if (!config) {
            out << help;
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    RunResult result;
    try {
        switch (config->command) {
            case Command::table:
                result = run_table(*config);
                break;
            case Command::verify:
                result = run_verify(*config);
                break;
            case Command::eval:
                result = run_eval(*config);
                break;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (config->output) {
        std::ofstream file(*config->output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *config->output << " for writing\n";
            return kExitUsage;
        }
        file << result.output;
    } else {
        out << result.output;
    }
    return result.exit_code;
}

} // namespace dbell::cli
