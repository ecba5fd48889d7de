#pragma once

#include "powersub/element_set.hpp"
#include "powersub/group_table.hpp"

#include <span>
#include <vector>

namespace powersub {

/// Smallest subgroup containing gens. closure(g, {}) is the trivial subgroup.
ElementSet closure(const GroupTable& g, const ElementSet& gens);
ElementSet closure(const GroupTable& g, std::span<const Elem> gens);

/// Cyclic subgroup <a>.
ElementSet cyclic_subgroup(const GroupTable& g, Elem a);

bool is_subgroup(const GroupTable& g, const ElementSet& s);

/// {x^-1 a x : a in s}.
ElementSet conjugate(const GroupTable& g, const ElementSet& s, Elem x);

bool is_normal(const GroupTable& g, const ElementSet& s);

/// Every subgroup of g, sorted by bit-vector value.
///
/// Seeds the lattice with all cyclic subgroups and closes under joins until a
/// fixpoint. The join frontier is processed with OpenMP when available; the
/// result is identical to all_subgroups_serial.
std::vector<ElementSet> all_subgroups(const GroupTable& g);

/// Single-threaded reference implementation of all_subgroups.
std::vector<ElementSet> all_subgroups_serial(const GroupTable& g);

struct QuotientResult {
    GroupTable table;
    /// Parent element -> coset index.
    std::vector<Elem> coset_of;
    /// Coset index -> minimal parent element of the coset (ascending).
    std::vector<Elem> coset_reps;
    /// The normal subgroup factored out.
    ElementSet kernel;
};

/// G/N with cosets numbered by their minimal representative.
/// Throws PreconditionError if n is not a normal subgroup.
QuotientResult quotient(const GroupTable& g, const ElementSet& n);

/// Union of the cosets in s (a subgroup of the quotient).
ElementSet lift_subgroup(const QuotientResult& q, const ElementSet& s);

/// Image of a parent subset under the coset projection.
ElementSet project_subgroup(const QuotientResult& q, const ElementSet& s);

struct InducedGroup {
    GroupTable table;
    /// Local index -> parent element, ascending.
    std::vector<Elem> to_parent;
};

/// s as a group in its own right, with elements renumbered 0..|s|-1 in
/// ascending parent order.
InducedGroup induced_group(const GroupTable& g, const ElementSet& s);

} // namespace powersub
