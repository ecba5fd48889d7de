#pragma once

#include "powersub/element_set.hpp"
#include "powersub/group_table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace powersub {

/// G^m = <g^m | g in G>.
ElementSet power_subgroup(const GroupTable& g, std::uint64_t m);

struct PowerSubgroup {
    /// Least m >= 0 with set = G^m.
    std::uint64_t exponent;
    ElementSet set;
};

/// {G^m : m >= 0}, each with its least realizing m, ordered by that m.
/// Only divisors of exp(G) are evaluated; G^m = G^gcd(m, exp(G)).
std::vector<PowerSubgroup> all_power_subgroups(const GroupTable& g);

/// Same family computed by sweeping every m in 0..exp(G). Kept as an
/// independent cross-check of the divisor route.
std::vector<PowerSubgroup> all_power_subgroups_naive(const GroupTable& g);

std::optional<std::uint64_t> power_exponent_of(const GroupTable& g, const ElementSet& h);

struct SubgroupRecord {
    ElementSet set;
    std::size_t order = 0;
    bool normal = false;
    bool is_power = false;
    std::optional<std::uint64_t> power_exponent;
};

/// Subgroups and power subgroups of one group, computed once and shared by
/// classification and the verification checks.
struct Classification {
    std::vector<ElementSet> subgroups;
    std::vector<PowerSubgroup> powers;
    std::vector<SubgroupRecord> records;
};

Classification classify(const GroupTable& g);

/// One record per subgroup, in canonical subgroup order.
std::vector<SubgroupRecord> classify_subgroups(const GroupTable& g);

/// Number of non-power subgroups.
std::size_t count_non_power(const GroupTable& g);

struct PowerEntry {
    std::uint64_t exponent;
    std::size_t order;
    friend bool operator==(const PowerEntry&, const PowerEntry&) = default;
};

struct AnalysisReport {
    std::string group;
    std::size_t order = 0;
    std::uint64_t exponent = 0;
    bool cyclic = false;
    std::size_t total_subgroups = 0;
    std::vector<PowerEntry> power_subgroups;
    std::size_t k = 0;
    /// Orders of the non-power subgroups in canonical subgroup order.
    std::vector<std::size_t> non_power_orders;
    std::vector<SubgroupRecord> records;
};

AnalysisReport analyze(const GroupTable& g);
AnalysisReport make_report(const GroupTable& g, const Classification& c);

} // namespace powersub
