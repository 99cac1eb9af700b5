#include "nekbound/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nekbound/bounds.hpp"
#include "nekbound/classify.hpp"
#include "nekbound/errors.hpp"
#include "nekbound/generate.hpp"
#include "nekbound/io.hpp"
#include "nekbound/lu.hpp"
#include "nekbound/rng.hpp"

namespace nekbound::cli {

namespace {

constexpr double kSoundnessSlack = 1e-12;

bool looks_like_builtin(const std::string& input) {
    if (input.empty()) return false;
    if (input.find_first_of("./\\") != std::string::npos) return false;
    return std::all_of(input.begin(), input.end(),
                       [](unsigned char c) { return std::isalnum(c) != 0; });
}

NamedMatrix load_input(const std::string& input, const std::string& format) {
    if (format == "auto" && looks_like_builtin(input)) return builtin(input);

    std::string kind = format;
    if (kind == "auto") {
        if (input.ends_with(".mtx")) kind = "mm";
        else if (input.ends_with(".csv")) kind = "csv";
        else throw InputError("cannot infer format of '" + input +
                              "' (use --format mm or --format csv)");
    }
    std::ifstream in(input);
    if (!in) throw FileOpenError(input);
    Matrix m = (kind == "mm") ? parse_matrix_market(in) : parse_csv(in);
    if (!m.all_finite()) throw InputError("matrix has non-finite entries");
    return NamedMatrix{input, std::move(m), Provenance::file};
}

std::string class_label(const Classification& c) {
    if (c.is_sdd) return "SDD";
    if (c.is_nekrasov) return "Nekrasov";
    if (c.is_h_matrix) return "H-matrix";
    return "none";
}

std::string margins_line(const std::vector<double>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ' ';
        s += format_fixed4(m[i]);
    }
    return s;
}

std::string gudkov_line(const Classification& c) {
    if (!c.gudkov_permutation)
        return c.gudkov_exhaustive ? "none (exhaustive search)"
                                   : "none found (search truncated)";
    const auto& p = *c.gudkov_permutation;
    bool is_identity = true;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) is_identity = false;
    if (is_identity) return "identity";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i] + 1);  // 1-based, as in the matrix formats
    }
    return s;
}

double round_half_away(double x) { return std::round(x * 10000.0) / 10000.0; }

struct CommonOptions {
    std::string input;
    std::string format = "auto";
    std::string output = "table";
};

int cmd_classify(const CommonOptions& opt, std::size_t gudkov_limit, std::ostream& out) {
    const NamedMatrix nm = load_input(opt.input, opt.format);
    const Classification c = classify_all(nm.matrix, gudkov_limit);
    if (opt.output == "json") {
        out << classification_json(nm.name, nm.matrix, c).dump(2) << "\n";
        return kExitOk;
    }
    out << "matrix: " << nm.name << " (n=" << nm.matrix.order() << ")\n";
    out << "class: " << class_label(c) << "\n";
    out << "sdd: " << (c.is_sdd ? "true" : "false") << "\n";
    out << "nekrasov: " << (c.is_nekrasov ? "true" : "false") << "\n";
    out << "h-matrix: " << (c.is_h_matrix ? "true" : "false") << "\n";
    out << "gudkov permutation: " << gudkov_line(c) << "\n";
    out << "sdd margins: " << margins_line(c.sdd_margins) << "\n";
    if (c.nekrasov_margins)
        out << "nekrasov margins: " << margins_line(*c.nekrasov_margins) << "\n";
    else
        out << "nekrasov margins: undefined (zero diagonal)\n";
    return kExitOk;
}

int cmd_bound(const CommonOptions& opt, bool with_exact, std::ostream& out,
              std::ostream& err) {
    const NamedMatrix nm = load_input(opt.input, opt.format);
    const Classification c = classify_basic(nm.matrix);
    BoundReport report = best_bound(nm.matrix);
    bool singular = false;
    if (with_exact) {
        try {
            report.exact = exact_inverse_inf_norm(nm.matrix);
        } catch (const SingularError&) {
            singular = true;
        }
    }

    if (opt.output == "json") {
        out << report_json(nm.name, nm.matrix, c, report).dump(2) << "\n";
    } else {
        out << "matrix: " << nm.name << " (n=" << nm.matrix.order() << ")\n";
        out << "class: " << class_label(c) << "\n";
        out << "varah: " << (report.varah ? format_fixed4(*report.varah) : "- (not SDD)")
            << "\n";
        out << "bound2: "
            << (report.bound2 ? format_fixed4(*report.bound2) : "- (not Nekrasov)") << "\n";
        out << "bound3: "
            << (report.bound3 ? format_fixed4(*report.bound3) : "- (not Nekrasov)") << "\n";
        out << "best: " << (report.best ? format_fixed4(*report.best) : "-") << "\n";
        if (with_exact) {
            if (singular)
                out << "exact: unavailable (singular matrix)\n";
            else
                out << "exact: " << format_fixed4(*report.exact) << "\n";
        }
    }

    if (report.exact) {
        const double floor = *report.exact * (1.0 - kSoundnessSlack);
        const std::pair<const char*, std::optional<double>> checks[] = {
            {"varah", report.varah}, {"bound2", report.bound2}, {"bound3", report.bound3}};
        for (const auto& [label, value] : checks) {
            if (value && *value < floor) {
                err << "soundness violation: " << label << " = " << *value
                    << " is below the exact norm " << *report.exact << "\n";
                return kExitSoundness;
            }
        }
    }
    return kExitOk;
}

int cmd_paper_table(const std::string& output, std::ostream& out) {
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    std::ostringstream table;
    table << "matrix  class     exact   varah   bound2  bound3\n";
    for (const std::string& name : builtin_names()) {
        const NamedMatrix nm = builtin(name);
        const Classification c = classify_basic(nm.matrix);
        const BoundReport b = best_bound(nm.matrix);
        const double exact = exact_inverse_inf_norm(nm.matrix);
        const std::string label = class_label(c);

        table << name << "      " << label << std::string(10 - label.size(), ' ')
              << format_fixed4(exact) << "  "
              << (b.varah ? format_fixed4(*b.varah) : "-     ") << "  "
              << format_fixed4(*b.bound2) << "  " << format_fixed4(*b.bound3) << "\n";

        nlohmann::ordered_json row;
        row["name"] = name;
        row["class"] = label;
        row["exact"] = round_half_away(exact);
        row["varah"] = b.varah ? nlohmann::ordered_json(round_half_away(*b.varah)) : nullptr;
        row["bound2"] = round_half_away(*b.bound2);
        row["bound3"] = round_half_away(*b.bound3);
        json_rows.push_back(row);
    }
    if (output == "json")
        out << json_rows.dump(2) << "\n";
    else
        out << table.str();
    return kExitOk;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_sweep(std::uint64_t count, std::size_t order, std::uint64_t seed,
              const std::string& output, std::ostream& out, std::ostream& err) {
    SplitMix64 root(seed);
    std::uint64_t violations = 0;
    std::uint64_t sdd_count = 0;
    std::uint64_t wins2 = 0, wins3 = 0, ties = 0;
    std::vector<double> ratio2, ratio3, ratio_best;
    ratio2.reserve(count);

    for (std::uint64_t k = 0; k < count; ++k) {
        SplitMix64 stream = root.split();
        const Matrix a = random_nekrasov(stream, order, Scalars::real);
        const double exact = exact_inverse_inf_norm(a);
        const double b2 = nekrasov_bound_2(a);
        const double b3 = nekrasov_bound_3(a);
        const double floor = exact * (1.0 - kSoundnessSlack);
        if (b2 < floor || b3 < floor) ++violations;
        if (classify_sdd(a).is_sdd) {
            ++sdd_count;
            if (varah_bound(a) < floor) ++violations;
        }
        if (b2 < b3) ++wins2;
        else if (b3 < b2) ++wins3;
        else ++ties;
        ratio2.push_back(b2 / exact);
        ratio3.push_back(b3 / exact);
        ratio_best.push_back(std::min(b2, b3) / exact);
    }

    if (output == "json") {
        nlohmann::ordered_json j;
        j["count"] = count;
        j["n"] = order;
        j["seed"] = seed;
        j["sdd_count"] = sdd_count;
        j["violations"] = violations;
        j["wins"] = {{"bound2", wins2}, {"bound3", wins3}, {"tie", ties}};
        j["tightness"] = {
            {"bound2",
             {{"min", *std::min_element(ratio2.begin(), ratio2.end())},
              {"median", median_of(ratio2)}}},
            {"bound3",
             {{"min", *std::min_element(ratio3.begin(), ratio3.end())},
              {"median", median_of(ratio3)}}},
            {"best",
             {{"min", *std::min_element(ratio_best.begin(), ratio_best.end())},
              {"median", median_of(ratio_best)}}}};
        out << j.dump(2) << "\n";
    } else {
        out << "sweep: count=" << count << " n=" << order << " seed=" << seed << "\n";
        out << "sdd subset: " << sdd_count << "/" << count << "\n";
        out << "violations: " << violations << "\n";
        out << "wins: bound2=" << wins2 << " bound3=" << wins3 << " tie=" << ties << "\n";
        out << "tightness bound2/exact: min="
            << format_fixed4(*std::min_element(ratio2.begin(), ratio2.end()))
            << " median=" << format_fixed4(median_of(ratio2)) << "\n";
        out << "tightness bound3/exact: min="
            << format_fixed4(*std::min_element(ratio3.begin(), ratio3.end()))
            << " median=" << format_fixed4(median_of(ratio3)) << "\n";
        out << "tightness best/exact: min="
            << format_fixed4(*std::min_element(ratio_best.begin(), ratio_best.end()))
            << " median=" << format_fixed4(median_of(ratio_best)) << "\n";
    }
    if (violations > 0) {
        err << "soundness violation: " << violations << " bound(s) below the exact norm\n";
        return kExitSoundness;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Diagonal-dominance classes and certified bounds on ||A^-1||_inf"};
    app.require_subcommand(1);

    CommonOptions classify_opt;
    std::size_t gudkov_limit = kDefaultGudkovLimit;
    auto* classify_cmd =
        app.add_subcommand("classify", "Class membership (SDD / Nekrasov / H / Gudkov)");
    classify_cmd->add_option("input", classify_opt.input, "builtin name (A1..A6) or file path")
        ->required();
    classify_cmd->add_option("--format", classify_opt.format)
        ->check(CLI::IsMember({"auto", "mm", "csv"}));
    classify_cmd->add_option("--output", classify_opt.output)
        ->check(CLI::IsMember({"table", "json"}));
    classify_cmd->add_option("--gudkov-limit", gudkov_limit,
                             "max order for the exhaustive permutation search")
        ->check(CLI::PositiveNumber);

    CommonOptions bound_opt;
    bool with_exact = false;
    auto* bound_cmd = app.add_subcommand("bound", "Upper bounds on ||A^-1||_inf");
    bound_cmd->add_option("input", bound_opt.input, "builtin name (A1..A6) or file path")
        ->required();
    bound_cmd->add_option("--format", bound_opt.format)
        ->check(CLI::IsMember({"auto", "mm", "csv"}));
    bound_cmd->add_option("--output", bound_opt.output)
        ->check(CLI::IsMember({"table", "json"}));
    bound_cmd->add_flag("--exact", with_exact, "also compute the exact norm via dense LU");

    std::string table_output = "table";
    auto* table_cmd =
        app.add_subcommand("paper-table", "Bounds for the six built-in example matrices");
    table_cmd->add_option("--output", table_output)->check(CLI::IsMember({"table", "json"}));

    std::uint64_t sweep_count = 100;
    std::size_t sweep_n = 6;
    std::uint64_t sweep_seed = 1;
    std::string sweep_output = "table";
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Soundness sweep over seeded random Nekrasov matrices");
    sweep_cmd->add_option("--count", sweep_count, "number of matrices")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}));
    sweep_cmd->add_option("--n", sweep_n, "matrix order")
        ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
    sweep_cmd->add_option("--seed", sweep_seed, "PRNG seed");
    sweep_cmd->add_option("--output", sweep_output)->check(CLI::IsMember({"table", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_opt, gudkov_limit, out);
        if (*bound_cmd) return cmd_bound(bound_opt, with_exact, out, err);
        if (*table_cmd) return cmd_paper_table(table_output, out);
        return cmd_sweep(sweep_count, sweep_n, sweep_seed, sweep_output, out, err);
    } catch (const UnknownNameError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnknownBuiltin;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nekbound::cli
