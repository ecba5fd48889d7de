#pragma once

#include "powersub/group_spec.hpp"
#include "powersub/group_table.hpp"
#include "powersub/power.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace powersub {

struct CatalogEntry {
    std::string spec_text;
    GroupSpec spec;
    GroupTable table;
};

/// Which families may appear in the catalog (products included). Empty
/// means all.
using FamilyFilter = std::set<Family>;

/// Every C n, D n, Q m, E p_k, S n, A n of order <= max_order, followed by
/// every product of two non-trivial members with order <= max_order. Each
/// unordered pair appears once, larger-order factor first (catalog order
/// breaks ties). Deduplicated by spec text only, not by isomorphism type.
std::vector<CatalogEntry> build_catalog(std::size_t max_order, const FamilyFilter& families = {});

std::vector<GroupTable> catalog_tables(const std::vector<CatalogEntry>& entries);

/// k for every entry, in catalog order.
std::vector<std::size_t> catalog_k_values(const std::vector<CatalogEntry>& entries, bool parallel = true);

struct SpectrumReport {
    std::size_t max_order = 0;
    std::size_t groups_scanned = 0;
    /// k -> witness spec texts, in catalog order.
    std::map<std::size_t, std::vector<std::string>> witnesses;
};

SpectrumReport spectrum(std::size_t max_order, bool parallel = true);
SpectrumReport spectrum(const std::vector<CatalogEntry>& entries, std::size_t max_order,
                        bool parallel = true);

/// k values in [3, k_max] with no witness in the scanned catalog. Only
/// evidence about this catalog, never a nonexistence claim.
std::vector<std::size_t> spectrum_gaps(const SpectrumReport& r, std::size_t k_max);

/// Spec texts of all catalog entries with exactly k non-power subgroups.
std::vector<std::string> search(std::size_t k, std::size_t max_order, bool parallel = true);

} // namespace powersub
