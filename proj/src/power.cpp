#include "powersub/power.hpp"

#include "powersub/subgroups.hpp"

#include <algorithm>

namespace powersub {

ElementSet power_subgroup(const GroupTable& g, std::uint64_t m) {
    ElementSet gens(g.order());
    for (Elem a = 0; a < g.order(); ++a) gens.insert(g.pow(a, m));
    return closure(g, gens);
}

namespace {

void add_if_new(std::vector<PowerSubgroup>& out, std::uint64_t m, ElementSet s) {
    for (const auto& p : out)
        if (p.set == s) return;
    out.push_back({m, std::move(s)});
}

} // namespace

std::vector<PowerSubgroup> all_power_subgroups(const GroupTable& g) {
    const std::uint64_t e = exponent(g);
    std::vector<PowerSubgroup> out;
    add_if_new(out, 0, power_subgroup(g, 0));
    for (std::uint64_t d = 1; d <= e; ++d)
        if (e % d == 0) add_if_new(out, d, power_subgroup(g, d));
    return out;
}

std::vector<PowerSubgroup> all_power_subgroups_naive(const GroupTable& g) {
    const std::uint64_t e = exponent(g);
    std::vector<PowerSubgroup> out;
    for (std::uint64_t m = 0; m <= e; ++m) add_if_new(out, m, power_subgroup(g, m));
    return out;
}

std::optional<std::uint64_t> power_exponent_of(const GroupTable& g, const ElementSet& h) {
    for (const auto& p : all_power_subgroups(g))
        if (p.set == h) return p.exponent;
    return std::nullopt;
}

Classification classify(const GroupTable& g) {
    Classification c;
    c.subgroups = all_subgroups(g);
    c.powers = all_power_subgroups(g);
    c.records.reserve(c.subgroups.size());
    for (const auto& s : c.subgroups) {
        SubgroupRecord r;
        r.set = s;
        r.order = s.size();
        r.normal = is_normal(g, s);
        for (const auto& p : c.powers)
            if (p.set == s) r.power_exponent = p.exponent;
        r.is_power = r.power_exponent.has_value();
        c.records.push_back(std::move(r));
    }
    return c;
}

std::vector<SubgroupRecord> classify_subgroups(const GroupTable& g) {
    return classify(g).records;
}

std::size_t count_non_power(const GroupTable& g) {
    const auto records = classify_subgroups(g);
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [](const SubgroupRecord& r) { return !r.is_power; }));
}

AnalysisReport make_report(const GroupTable& g, const Classification& c) {
    AnalysisReport rep;
    rep.group = g.name();
    rep.order = g.order();
    rep.exponent = exponent(g);
    rep.cyclic = is_cyclic(g);
    rep.total_subgroups = c.records.size();
    for (const auto& p : c.powers) rep.power_subgroups.push_back({p.exponent, p.set.size()});
    for (const auto& r : c.records)
        if (!r.is_power) rep.non_power_orders.push_back(r.order);
    rep.k = rep.non_power_orders.size();
    rep.records = c.records;
    return rep;
}

AnalysisReport analyze(const GroupTable& g) {
    return make_report(g, classify(g));
}

} // namespace powersub
