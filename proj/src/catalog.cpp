#include "powersub/catalog.hpp"

#include "powersub/errors.hpp"

#include <unordered_set>

namespace powersub {

namespace {

std::vector<FamilyTerm> family_members(std::size_t max_order, const FamilyFilter& families) {
    auto allowed = [&](Family f) { return families.empty() || families.contains(f); };
    std::vector<FamilyTerm> out;
    auto add = [&](FamilyTerm t) {
        if (allowed(t.family) && t.order() <= max_order) out.push_back(t);
    };
    for (std::size_t n = 1; n <= max_order; ++n) add({Family::Cyclic, n, 0});
    for (std::size_t n = 1; 2 * n <= max_order; ++n) add({Family::Dihedral, n, 0});
    for (std::size_t m = 8; m <= max_order; m += 4) add({Family::Quaternion, m, 0});
    for (std::size_t p = 2; p <= max_order; ++p) {
        if (!is_prime(p)) continue;
        for (std::size_t k = 1;; ++k) {
            FamilyTerm t{Family::ElementaryAbelian, p, k};
            if (t.order() > max_order) break;
            add(t);
        }
    }
    for (std::size_t n = 1; FamilyTerm{Family::Symmetric, n, 0}.order() <= max_order; ++n)
        add({Family::Symmetric, n, 0});
    for (std::size_t n = 1; FamilyTerm{Family::Alternating, n, 0}.order() <= max_order; ++n)
        add({Family::Alternating, n, 0});
    return out;
}

} // namespace

std::vector<CatalogEntry> build_catalog(std::size_t max_order, const FamilyFilter& families) {
    if (max_order > order_cap())
        throw SizeError("catalog max order " + std::to_string(max_order) +
                        " exceeds the order cap " + std::to_string(order_cap()));
    const auto members = family_members(max_order, families);

    std::vector<GroupSpec> specs;
    for (const auto& t : members) specs.push_back({{t}});
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            const std::size_t oi = members[i].order(), oj = members[j].order();
            if (oi < 2 || oj < 2 || oi * oj > max_order) continue;
            if (oi < oj || (oi == oj && i > j)) continue;
            specs.push_back({{members[i], members[j]}});
        }

    std::vector<CatalogEntry> out;
    std::unordered_set<std::string> seen;
    for (auto& s : specs) {
        std::string text = s.text();
        if (!seen.insert(text).second) continue;
        GroupTable table = s.build();
        out.push_back({std::move(text), std::move(s), std::move(table)});
    }
    return out;
}

std::vector<GroupTable> catalog_tables(const std::vector<CatalogEntry>& entries) {
    std::vector<GroupTable> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.table);
    return out;
}

std::vector<std::size_t> catalog_k_values(const std::vector<CatalogEntry>& entries, bool parallel) {
    std::vector<std::size_t> ks(entries.size());
    const auto count = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        ks[static_cast<std::size_t>(i)] = count_non_power(entries[static_cast<std::size_t>(i)].table);
    return ks;
}

SpectrumReport spectrum(std::size_t max_order, bool parallel) {
    return spectrum(build_catalog(max_order), max_order, parallel);
}

SpectrumReport spectrum(const std::vector<CatalogEntry>& entries, std::size_t max_order,
                        bool parallel) {
    SpectrumReport r;
    r.max_order = max_order;
    r.groups_scanned = entries.size();
    const auto ks = catalog_k_values(entries, parallel);
    for (std::size_t i = 0; i < entries.size(); ++i) r.witnesses[ks[i]].push_back(entries[i].spec_text);
    return r;
}

std::vector<std::size_t> spectrum_gaps(const SpectrumReport& r, std::size_t k_max) {
    std::vector<std::size_t> gaps;
    for (std::size_t k = 3; k <= k_max; ++k)
        if (!r.witnesses.contains(k)) gaps.push_back(k);
    return gaps;
}

std::vector<std::string> search(std::size_t k, std::size_t max_order, bool parallel) {
    const auto entries = build_catalog(max_order);
    const auto ks = catalog_k_values(entries, parallel);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (ks[i] == k) out.push_back(entries[i].spec_text);
    return out;
}

} // namespace powersub
