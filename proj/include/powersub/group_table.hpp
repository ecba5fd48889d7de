#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace powersub {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 256;

/// Order cap in effect: POWERSUB_ORDER_CAP if set to a positive integer, else 256.
std::size_t order_cap();

/// A finite group given by its full multiplication table over indices 0..n-1.
///
/// Immutable once built. All constructors below validate their parameters and
/// the order cap; the raw constructor does not check the axioms (use
/// verify_group_axioms for that) so that corrupted tables can be inspected.
class GroupTable {
public:
    GroupTable(std::string name, std::size_t order, std::vector<Elem> table);

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return order_; }
    Elem identity() const noexcept { return identity_; }

    Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
    Elem inv(Elem a) const noexcept { return inverse_[a]; }
    std::uint32_t elem_order(Elem a) const noexcept { return elem_orders_[a]; }

    /// a^m for m >= 0.
    Elem pow(Elem a, std::uint64_t m) const noexcept;

    std::span<const Elem> row(Elem a) const noexcept {
        return {table_.data() + a * order_, order_};
    }
    std::span<const Elem> raw_table() const noexcept { return table_; }
    std::span<const Elem> inverses() const noexcept { return inverse_; }
    std::span<const std::uint32_t> elem_orders() const noexcept { return elem_orders_; }

    bool is_abelian() const noexcept;

    GroupTable renamed(std::string name) const;

    friend bool operator==(const GroupTable& a, const GroupTable& b) {
        return a.order_ == b.order_ && a.table_ == b.table_;
    }

private:
    std::string name_;
    std::size_t order_;
    std::vector<Elem> table_;
    Elem identity_ = 0;
    std::vector<Elem> inverse_;
    std::vector<std::uint32_t> elem_orders_;
};

GroupTable make_cyclic(std::size_t n, std::size_t cap = order_cap());
/// Dihedral group of order 2n. Elements r^i s^j are indexed j*n + i.
GroupTable make_dihedral(std::size_t n, std::size_t cap = order_cap());
/// Generalized quaternion group of total order m (m >= 8, 4 | m).
/// Elements a^i b^j are indexed j*(m/2) + i.
GroupTable make_generalized_quaternion(std::size_t m, std::size_t cap = order_cap());
/// Permutations of {0..n-1} in lexicographic order. Products act left to
/// right: (p*q)(i) = q(p(i)).
GroupTable make_symmetric(std::size_t n, std::size_t cap = order_cap());
/// Even permutations, lexicographic order, same product convention as S_n.
GroupTable make_alternating(std::size_t n, std::size_t cap = order_cap());
/// (Z_p)^k with base-p digit indexing and digitwise addition.
GroupTable make_elementary_abelian(std::size_t p, std::size_t k, std::size_t cap = order_cap());
/// Element (x, y) is indexed x*|b| + y.
GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t cap = order_cap());

std::uint32_t element_order(const GroupTable& g, Elem a);
std::uint64_t exponent(const GroupTable& g);
bool is_cyclic(const GroupTable& g);

struct AxiomViolation {
    std::string what;
};

/// First violated GroupTable invariant, or nullopt if the table is a group.
std::optional<AxiomViolation> verify_group_axioms(const GroupTable& g);

bool is_prime(std::size_t p);

} // namespace powersub
