#include "powersub/cli.hpp"

#include "powersub/catalog.hpp"
#include "powersub/errors.hpp"
#include "powersub/group_spec.hpp"
#include "powersub/report.hpp"
#include "powersub/theorems.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace powersub {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power subgroups and non-power subgroup counts of finite groups", "powersub"};
    app.require_subcommand(1);

    std::string spec_text;
    bool as_json = false, as_csv = false, verbose = false, corrupt = false, serial = false;
    std::size_t max_order = 32, k_max = 32, k = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify every subgroup of one group");
    analyze_cmd->add_option("spec", spec_text, "Group spec, e.g. Q8, C2xC2, E2_3 x C5")->required();
    auto* json_flag = analyze_cmd->add_flag("--json", as_json, "JSON report");
    analyze_cmd->add_flag("--csv", as_csv, "CSV, one row per subgroup")->excludes(json_flag);

    auto* verify_cmd = app.add_subcommand("verify", "Run every check over the family catalog");
    verify_cmd->add_option("--max-order", max_order, "Largest group order in the catalog");
    verify_cmd->add_flag("--verbose", verbose, "Print every check row");
    verify_cmd->add_flag("--corrupt-fixture", corrupt)->group("");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Observed k values over the catalog");
    spectrum_cmd->add_option("--max-order", max_order, "Largest group order in the catalog");
    spectrum_cmd->add_option("--k-max", k_max, "Largest k row to print");
    spectrum_cmd->add_flag("--json", as_json, "JSON report");

    auto* search_cmd = app.add_subcommand("search", "Catalog groups with exactly k non-power subgroups");
    search_cmd->add_option("--k", k, "Number of non-power subgroups")->required();
    search_cmd->add_option("--max-order", max_order, "Largest group order in the catalog");

    for (auto* sub : {verify_cmd, spectrum_cmd, search_cmd})
        sub->add_flag("--serial", serial)->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            const GroupTable g = parse_group_spec(spec_text).build();
            const AnalysisReport report = analyze(g);
            if (as_json) out << to_json(report).dump(2) << '\n';
            else if (as_csv) out << render_csv(report);
            else out << render_text(report);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const auto tables = catalog_tables(build_catalog(max_order));
            const auto results = run_all(tables, {.parallel = !serial, .corrupt_first = corrupt});
            out << "catalog: " << tables.size() << " groups of order <= " << max_order << "\n\n";
            out << render_checks(results, verbose);
            const bool ok = std::all_of(results.begin(), results.end(),
                                        [](const CheckResult& r) { return r.passed; });
            return ok ? kExitOk : kExitVerifyFailed;
        }
        if (spectrum_cmd->parsed()) {
            const SpectrumReport report = spectrum(max_order, !serial);
            if (as_json) out << to_json(report, k_max).dump(2) << '\n';
            else out << render_text(report, k_max);
            return kExitOk;
        }
        if (search_cmd->parsed()) {
            for (const auto& w : search(k, max_order, !serial)) out << w << '\n';
            return kExitOk;
        }
    } catch (const GroupError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace powersub
