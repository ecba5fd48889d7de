#pragma once

#include "powersub/element_set.hpp"
#include "powersub/group_table.hpp"
#include "powersub/power.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace powersub {

struct CheckResult {
    std::string check;
    std::string group;
    bool passed = true;
    /// Present iff !passed; enough to reproduce the violation.
    std::optional<std::string> witness;
};

// Each per-group check has an overload taking a precomputed Classification so
// that run_all enumerates the lattice once per group.

/// k = 0 iff G is cyclic.
CheckResult check_cyclic_iff_k_zero(const GroupTable& g);
CheckResult check_cyclic_iff_k_zero(const GroupTable& g, const Classification& c);

/// k >= 1 for non-cyclic G. Passes vacuously on cyclic groups.
CheckResult check_finite_k_positive(const GroupTable& g);
CheckResult check_finite_k_positive(const GroupTable& g, const Classification& c);

/// No group of the catalog has exactly 1 or 2 non-power subgroups.
CheckResult check_k_never_1_or_2(std::span<const GroupTable> catalog);

/// For every abelian power subgroup A: the power subgroups of G inside A are
/// exactly the power subgroups of A.
CheckResult check_abelian_power_restriction(const GroupTable& g);
CheckResult check_abelian_power_restriction(const GroupTable& g, const Classification& c);

/// For every power subgroup A = G^m (least m) containing the normal subgroup
/// n: A/n = (G/n)^m.
CheckResult check_quotient_power_projection(const GroupTable& g, const ElementSet& n);
CheckResult check_quotient_power_projection(const GroupTable& g, const Classification& c, const ElementSet& n);

/// Every subgroup normal.
bool check_dedekind(const GroupTable& g);
bool check_dedekind(const Classification& c);

/// A non-abelian Dedekind group contains a Q8 copy: an order-8 non-abelian
/// subgroup with a single involution. Passes vacuously when g is abelian or
/// not Dedekind.
CheckResult check_hamiltonian_structure(const GroupTable& g);
CheckResult check_hamiltonian_structure(const GroupTable& g, const Classification& c);

/// G^m = G^gcd(m, exp) for m in [0, 2 exp], with gcd(0, e) = e.
CheckResult check_gcd_law(const GroupTable& g);

/// d1 | d2 implies G^d2 <= G^d1 over divisors of exp(G).
CheckResult check_divisor_antimonotone(const GroupTable& g);

/// Divisor-route power family equals the naive 0..exp sweep.
CheckResult check_power_family_crosscheck(const GroupTable& g, const Classification& c);

CheckResult check_power_normal(const GroupTable& g, const Classification& c);

/// Conjugates of non-power subgroups are non-power, so the non-power
/// subgroups are a union of full conjugacy classes.
CheckResult check_conjugation_closure(const GroupTable& g, const Classification& c);

/// Internal consistency of the classification: counts, record flags and
/// the AnalysisReport invariants.
CheckResult check_classification_consistency(const GroupTable& g, const Classification& c);

struct RunOptions {
    bool parallel = true;
    /// Test fixture: corrupt the classification of the first catalog group
    /// before checking it, so that at least one check must fail.
    bool corrupt_first = false;
};

/// Runs every check on every catalog group plus the catalog-wide k check.
/// Result order is deterministic: catalog order, then a fixed check order.
std::vector<CheckResult> run_all(std::span<const GroupTable> catalog, RunOptions opts = {});

} // namespace powersub
