#include "powersub/theorems.hpp"

#include "powersub/subgroups.hpp"

#include <algorithm>
#include <numeric>

namespace powersub {

namespace {

CheckResult pass(std::string check, const GroupTable& g) {
    return {std::move(check), g.name(), true, std::nullopt};
}

CheckResult fail(std::string check, const GroupTable& g, std::string witness) {
    return {std::move(check), g.name(), false, "group=" + g.name() + " " + witness};
}

std::size_t non_power_count(const Classification& c) {
    return static_cast<std::size_t>(std::count_if(c.records.begin(), c.records.end(),
                                                  [](const SubgroupRecord& r) { return !r.is_power; }));
}

bool is_power_set(const Classification& c, const ElementSet& s) {
    return std::any_of(c.powers.begin(), c.powers.end(),
                       [&](const PowerSubgroup& p) { return p.set == s; });
}

CheckResult k_never_1_or_2(const std::vector<std::string>& names, const std::vector<std::size_t>& ks) {
    CheckResult r{"k_never_1_or_2", "catalog", true, std::nullopt};
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] == 1 || ks[i] == 2) {
            r.passed = false;
            r.witness = "group=" + names[i] + " k=" + std::to_string(ks[i]);
            break;
        }
    return r;
}

void corrupt(const GroupTable& g, Classification& c) {
    if (!is_cyclic(g)) {
        const std::uint64_t bogus = exponent(g) + 1;
        for (auto& r : c.records)
            if (!r.is_power) {
                r.is_power = true;
                r.power_exponent = bogus;
                c.powers.push_back({bogus, r.set});
            }
    } else {
        for (auto& r : c.records)
            if (r.power_exponent == 0u) {
                r.is_power = false;
                r.power_exponent.reset();
            }
        std::erase_if(c.powers, [](const PowerSubgroup& p) { return p.exponent == 0; });
    }
}

std::vector<CheckResult> group_checks(const GroupTable& g, const Classification& c) {
    std::vector<CheckResult> out;
    out.push_back(check_classification_consistency(g, c));
    out.push_back(check_cyclic_iff_k_zero(g, c));
    out.push_back(check_finite_k_positive(g, c));
    out.push_back(check_abelian_power_restriction(g, c));
    {
        CheckResult l2 = pass("quotient_power_projection", g);
        for (const auto& r : c.records) {
            if (!r.normal) continue;
            auto one = check_quotient_power_projection(g, c, r.set);
            if (!one.passed) {
                l2 = std::move(one);
                break;
            }
        }
        out.push_back(std::move(l2));
    }
    out.push_back(check_hamiltonian_structure(g, c));
    out.push_back(check_gcd_law(g));
    out.push_back(check_divisor_antimonotone(g));
    out.push_back(check_power_family_crosscheck(g, c));
    out.push_back(check_power_normal(g, c));
    out.push_back(check_conjugation_closure(g, c));
    return out;
}

} // namespace

CheckResult check_cyclic_iff_k_zero(const GroupTable& g) { return check_cyclic_iff_k_zero(g, classify(g)); }

CheckResult check_cyclic_iff_k_zero(const GroupTable& g, const Classification& c) {
    const std::size_t k = non_power_count(c);
    const bool cyclic = is_cyclic(g);
    if ((k == 0) == cyclic) return pass("cyclic_iff_k_zero", g);
    return fail("cyclic_iff_k_zero", g, "k=" + std::to_string(k) + " cyclic=" + (cyclic ? "true" : "false"));
}

CheckResult check_finite_k_positive(const GroupTable& g) {
    return check_finite_k_positive(g, classify(g));
}

CheckResult check_finite_k_positive(const GroupTable& g, const Classification& c) {
    if (is_cyclic(g)) return pass("finite_k_positive", g);
    const std::size_t k = non_power_count(c);
    if (k >= 1) return pass("finite_k_positive", g);
    return fail("finite_k_positive", g, "k=0 for a non-cyclic group");
}

CheckResult check_k_never_1_or_2(std::span<const GroupTable> catalog) {
    std::vector<std::string> names;
    std::vector<std::size_t> ks;
    for (const auto& g : catalog) {
        names.push_back(g.name());
        ks.push_back(non_power_count(classify(g)));
    }
    return k_never_1_or_2(names, ks);
}

CheckResult check_abelian_power_restriction(const GroupTable& g) { return check_abelian_power_restriction(g, classify(g)); }

CheckResult check_abelian_power_restriction(const GroupTable& g, const Classification& c) {
    for (const auto& a : c.powers) {
        const InducedGroup sub = induced_group(g, a.set);
        if (!sub.table.is_abelian()) continue;

        std::vector<ElementSet> inside;
        for (const auto& p : c.powers)
            if (p.set.is_subset_of(a.set)) inside.push_back(p.set);
        std::sort(inside.begin(), inside.end());

        std::vector<ElementSet> own;
        for (const auto& p : all_power_subgroups(sub.table)) {
            ElementSet lifted(g.order());
            p.set.for_each([&](Elem x) { lifted.insert(sub.to_parent[x]); });
            own.push_back(std::move(lifted));
        }
        std::sort(own.begin(), own.end());

        if (inside != own)
            return fail("abelian_power_restriction", g,
                        "A=" + a.set.to_hex() + " m=" + std::to_string(a.exponent) +
                            " powers_of_G_in_A=" + std::to_string(inside.size()) +
                            " powers_of_A=" + std::to_string(own.size()));
    }
    return pass("abelian_power_restriction", g);
}

CheckResult check_quotient_power_projection(const GroupTable& g, const ElementSet& n) {
    return check_quotient_power_projection(g, classify(g), n);
}

CheckResult check_quotient_power_projection(const GroupTable& g, const Classification& c, const ElementSet& n) {
    const QuotientResult q = quotient(g, n);
    for (const auto& a : c.powers) {
        if (!n.is_subset_of(a.set)) continue;
        const ElementSet projected = project_subgroup(q, a.set);
        const ElementSet expected = power_subgroup(q.table, a.exponent);
        if (projected != expected)
            return fail("quotient_power_projection", g,
                        "N=" + n.to_hex() + " A=" + a.set.to_hex() + " m=" +
                            std::to_string(a.exponent) + " A/N=" + projected.to_hex() +
                            " (G/N)^m=" + expected.to_hex());
    }
    return pass("quotient_power_projection", g);
}

bool check_dedekind(const GroupTable& g) { return check_dedekind(classify(g)); }

bool check_dedekind(const Classification& c) {
    return std::all_of(c.records.begin(), c.records.end(),
                       [](const SubgroupRecord& r) { return r.normal; });
}

CheckResult check_hamiltonian_structure(const GroupTable& g) {
    return check_hamiltonian_structure(g, classify(g));
}

CheckResult check_hamiltonian_structure(const GroupTable& g, const Classification& c) {
    if (g.is_abelian() || !check_dedekind(c)) return pass("hamiltonian_structure", g);
    for (const auto& s : c.subgroups) {
        if (s.size() != 8) continue;
        std::size_t involutions = 0;
        s.for_each([&](Elem x) { involutions += g.elem_order(x) == 2; });
        if (involutions == 1 && !induced_group(g, s).table.is_abelian())
            return pass("hamiltonian_structure", g);
    }
    return fail("hamiltonian_structure", g, "non-abelian Dedekind group without a Q8 subgroup");
}

CheckResult check_gcd_law(const GroupTable& g) {
    const std::uint64_t e = exponent(g);
    for (std::uint64_t m = 0; m <= 2 * e; ++m) {
        const std::uint64_t d = std::gcd(m, e);
        if (power_subgroup(g, m) != power_subgroup(g, d))
            return fail("gcd_law", g, "m=" + std::to_string(m) + " gcd=" + std::to_string(d));
    }
    return pass("gcd_law", g);
}

CheckResult check_divisor_antimonotone(const GroupTable& g) {
    const std::uint64_t e = exponent(g);
    std::vector<std::pair<std::uint64_t, ElementSet>> by_divisor;
    for (std::uint64_t d = 1; d <= e; ++d)
        if (e % d == 0) by_divisor.emplace_back(d, power_subgroup(g, d));
    for (const auto& [d1, s1] : by_divisor)
        for (const auto& [d2, s2] : by_divisor)
            if (d2 % d1 == 0 && !s2.is_subset_of(s1))
                return fail("divisor_antimonotone", g,
                            "d1=" + std::to_string(d1) + " d2=" + std::to_string(d2));
    return pass("divisor_antimonotone", g);
}

CheckResult check_power_family_crosscheck(const GroupTable& g, const Classification& c) {
    const auto naive = all_power_subgroups_naive(g);
    bool same = naive.size() == c.powers.size();
    for (std::size_t i = 0; same && i < naive.size(); ++i)
        same = naive[i].exponent == c.powers[i].exponent && naive[i].set == c.powers[i].set;
    if (same) return pass("power_family_crosscheck", g);
    return fail("power_family_crosscheck", g,
                "divisor_route=" + std::to_string(c.powers.size()) +
                    " naive_route=" + std::to_string(naive.size()));
}

CheckResult check_power_normal(const GroupTable& g, const Classification& c) {
    for (const auto& p : c.powers)
        if (!is_normal(g, p.set))
            return fail("power_normal", g,
                        "subgroup=" + p.set.to_hex() + " m=" + std::to_string(p.exponent));
    return pass("power_normal", g);
}

CheckResult check_conjugation_closure(const GroupTable& g, const Classification& c) {
    for (const auto& r : c.records) {
        if (r.is_power) continue;
        for (Elem x = 0; x < g.order(); ++x) {
            const ElementSet conj = conjugate(g, r.set, x);
            if (is_power_set(c, conj))
                return fail("conjugation_closure", g,
                            "subgroup=" + r.set.to_hex() + " x=" + std::to_string(x) +
                                " conjugate=" + conj.to_hex());
        }
    }
    return pass("conjugation_closure", g);
}

CheckResult check_classification_consistency(const GroupTable& g, const Classification& c) {
    const std::string name = "classification_consistency";
    std::size_t power_records = 0;
    for (const auto& r : c.records) {
        if (r.is_power != r.power_exponent.has_value())
            return fail(name, g, "subgroup=" + r.set.to_hex() + " power flag without exponent");
        if (!r.is_power) continue;
        ++power_records;
        if (r.power_exponent == 0u && r.order != 1)
            return fail(name, g, "subgroup=" + r.set.to_hex() + " exponent 0 but not trivial");
        if (r.power_exponent == 1u && g.order() > 1 && r.order != g.order())
            return fail(name, g, "subgroup=" + r.set.to_hex() + " exponent 1 but not G");
    }
    if (power_records != c.powers.size())
        return fail(name, g,
                    "power records=" + std::to_string(power_records) +
                        " power subgroups=" + std::to_string(c.powers.size()));
    for (const auto& p : c.powers)
        if (!std::binary_search(c.subgroups.begin(), c.subgroups.end(), p.set))
            return fail(name, g, "power subgroup " + p.set.to_hex() + " missing from lattice");
    return pass(name, g);
}

std::vector<CheckResult> run_all(std::span<const GroupTable> catalog, RunOptions opts) {
    const std::size_t n = catalog.size();
    std::vector<std::vector<CheckResult>> per_group(n);
    std::vector<std::size_t> ks(n);
    std::vector<std::string> names(n);
    const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const GroupTable& g = catalog[idx];
        Classification c = classify(g);
        if (opts.corrupt_first && idx == 0) corrupt(g, c);
        names[idx] = g.name();
        ks[idx] = non_power_count(c);
        per_group[idx] = group_checks(g, c);
    }

    std::vector<CheckResult> out;
    for (auto& batch : per_group)
        for (auto& r : batch) out.push_back(std::move(r));
    out.push_back(k_never_1_or_2(names, ks));
    return out;
}

} // namespace powersub
