#include "powersub/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace powersub {

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "group      " << r.group << '\n'
       << "order      " << r.order << '\n'
       << "exponent   " << r.exponent << '\n'
       << "cyclic     " << (r.cyclic ? "yes" : "no") << '\n'
       << "subgroups  " << r.total_subgroups << '\n'
       << "k          " << r.k << '\n'
       << "\npower subgroups (" << r.power_subgroups.size() << ")\n"
       << "  " << std::setw(8) << "exponent" << "  " << std::setw(6) << "order" << '\n';
    for (const auto& p : r.power_subgroups)
        os << "  " << std::setw(8) << p.exponent << "  " << std::setw(6) << p.order << '\n';
    os << "\nnon-power subgroup orders:";
    for (auto o : r.non_power_orders) os << ' ' << o;
    if (r.non_power_orders.empty()) os << " (none)";
    os << "\n\nsubgroups\n"
       << "  " << std::setw(5) << "#" << "  " << std::setw(6) << "order" << "  " << std::setw(6)
       << "normal" << "  " << std::setw(5) << "power" << "  " << std::setw(8) << "exponent"
       << "  elements\n";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        os << "  " << std::setw(5) << i << "  " << std::setw(6) << rec.order << "  " << std::setw(6)
           << (rec.normal ? "yes" : "no") << "  " << std::setw(5) << (rec.is_power ? "yes" : "no")
           << "  " << std::setw(8)
           << (rec.power_exponent ? std::to_string(*rec.power_exponent) : std::string("-")) << "  "
           << rec.set.to_hex() << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json powers = nlohmann::json::array();
    for (const auto& p : r.power_subgroups) powers.push_back({{"exponent", p.exponent}, {"order", p.order}});
    return {
        {"group", r.group},
        {"order", r.order},
        {"exponent", r.exponent},
        {"cyclic", r.cyclic},
        {"subgroups", r.total_subgroups},
        {"power_subgroups", std::move(powers)},
        {"k", r.k},
        {"non_power_orders", r.non_power_orders},
    };
}

std::string render_csv(const AnalysisReport& r) {
    std::ostringstream os;
    os << "group,index,order,normal,is_power,power_exponent,elements\n";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        os << r.group << ',' << i << ',' << rec.order << ',' << (rec.normal ? "true" : "false") << ','
           << (rec.is_power ? "true" : "false") << ','
           << (rec.power_exponent ? std::to_string(*rec.power_exponent) : std::string()) << ','
           << rec.set.to_hex() << '\n';
    }
    return os.str();
}

namespace {

constexpr const char* kSpectrumNote =
    "family catalog only; an empty row means no witness in this catalog, not that none exists";

} // namespace

std::string render_text(const SpectrumReport& r, std::size_t k_max) {
    std::ostringstream os;
    os << "max order       " << r.max_order << '\n'
       << "groups scanned  " << r.groups_scanned << '\n'
       << "note: " << kSpectrumNote << "\n\n"
       << std::setw(4) << "k" << "  " << std::setw(6) << "count" << "  witnesses\n";
    for (std::size_t k = 0; k <= k_max; ++k) {
        auto it = r.witnesses.find(k);
        const std::size_t count = it == r.witnesses.end() ? 0 : it->second.size();
        os << std::setw(4) << k << "  " << std::setw(6) << count << " ";
        if (count == 0) os << " -";
        else
            for (const auto& w : it->second) os << ' ' << w;
        os << '\n';
    }
    const auto gaps = spectrum_gaps(r, k_max);
    os << "\nk in [3, " << k_max << "] without witness:";
    for (auto k : gaps) os << ' ' << k;
    if (gaps.empty()) os << " (none)";
    os << '\n';
    return os.str();
}

nlohmann::json to_json(const SpectrumReport& r, std::size_t k_max) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k <= k_max; ++k) {
        auto it = r.witnesses.find(k);
        std::vector<std::string> w = it == r.witnesses.end() ? std::vector<std::string>{} : it->second;
        rows.push_back({{"k", k}, {"count", w.size()}, {"witnesses", std::move(w)}});
    }
    std::vector<std::size_t> realized;
    for (const auto& [k, _] : r.witnesses) realized.push_back(k);
    return {
        {"max_order", r.max_order},
        {"groups_scanned", r.groups_scanned},
        {"k_max", k_max},
        {"realized_k", realized},
        {"rows", std::move(rows)},
        {"gaps", spectrum_gaps(r, k_max)},
        {"note", kSpectrumNote},
    };
}

std::string render_checks(const std::vector<CheckResult>& results, bool verbose) {
    struct Tally {
        std::size_t passed = 0, failed = 0;
    };
    std::map<std::string, Tally> tally;
    std::vector<std::string> order;
    std::size_t failures = 0;
    std::ostringstream rows;
    for (const auto& r : results) {
        if (!tally.contains(r.check)) order.push_back(r.check);
        auto& t = tally[r.check];
        (r.passed ? t.passed : t.failed)++;
        if (!r.passed) ++failures;
        if (verbose || !r.passed) {
            rows << (r.passed ? "PASS " : "FAIL ") << r.check << ' ' << r.group;
            if (r.witness) rows << "  " << *r.witness;
            rows << '\n';
        }
    }
    std::ostringstream os;
    os << std::left << std::setw(26) << "check" << std::right << std::setw(8) << "passed"
       << std::setw(8) << "failed" << '\n';
    for (const auto& name : order)
        os << std::left << std::setw(26) << name << std::right << std::setw(8) << tally[name].passed
           << std::setw(8) << tally[name].failed << '\n';
    if (!rows.str().empty()) os << '\n' << rows.str();
    os << '\n' << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
    return os.str();
}

} // namespace powersub
