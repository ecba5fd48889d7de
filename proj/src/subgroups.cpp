#include "powersub/subgroups.hpp"

#include "powersub/errors.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powersub {

std::string ElementSet::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t nibbles = std::max<std::size_t>(1, (universe_ + 3) / 4);
    std::string out(nibbles, '0');
    for (std::size_t i = 0; i < nibbles; ++i) {
        const std::size_t bit = i * 4;
        const auto nib = (words_[bit >> 6] >> (bit & 63)) & 0xF;
        out[nibbles - 1 - i] = digits[nib];
    }
    return "0x" + out;
}

namespace {

/// A subgroup together with a generating list.
struct Generated {
    ElementSet set;
    std::vector<Elem> gens;
};

/// <H, x> for a subgroup H with known generators, built as a union of right
/// cosets H*r closed under right multiplication by the generators.
Generated extend(const GroupTable& g, const Generated& h, Elem x) {
    Generated out{h.set, h.gens};
    out.gens.push_back(x);
    const std::vector<Elem> members = h.set.elements();
    std::vector<Elem> reps{g.identity()};
    for (std::size_t idx = 0; idx < reps.size(); ++idx) {
        const Elem r = reps[idx];
        for (Elem s : out.gens) {
            const Elem t = g.mul(r, s);
            if (out.set.contains(t)) continue;
            for (Elem m : members) out.set.insert(g.mul(m, t));
            reps.push_back(t);
        }
    }
    return out;
}

Generated trivial(const GroupTable& g) {
    ElementSet s(g.order());
    s.insert(g.identity());
    return {std::move(s), {}};
}

std::vector<Generated> cyclic_atoms(const GroupTable& g) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Generated> atoms;
    for (Elem a = 0; a < g.order(); ++a) {
        Generated c{cyclic_subgroup(g, a), {a}};
        if (seen.insert(c.set).second) atoms.push_back(std::move(c));
    }
    return atoms;
}

template <bool Parallel>
std::vector<ElementSet> enumerate_subgroups(const GroupTable& g) {
    if (g.order() > order_cap())
        throw SizeError(g.name() + " exceeds the order cap " + std::to_string(order_cap()));

    const std::vector<Generated> atoms = cyclic_atoms(g);
    std::unordered_set<ElementSet, ElementSetHash> known;
    for (const auto& a : atoms) known.insert(a.set);
    std::vector<Generated> frontier = atoms;

    while (!frontier.empty()) {
        std::vector<std::vector<Generated>> joins(frontier.size());
        const auto count = static_cast<std::ptrdiff_t>(frontier.size());
        // `known` is only read inside the parallel region.
#pragma omp parallel for schedule(dynamic) if (Parallel)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const Generated& h = frontier[static_cast<std::size_t>(i)];
            std::unordered_set<ElementSet, ElementSetHash> local;
            for (const auto& atom : atoms) {
                if (atom.set.is_subset_of(h.set)) continue;
                Generated j = extend(g, h, atom.gens.front());
                if (known.contains(j.set) || !local.insert(j.set).second) continue;
                joins[static_cast<std::size_t>(i)].push_back(std::move(j));
            }
        }
        std::vector<Generated> next;
        for (auto& batch : joins)
            for (auto& j : batch)
                if (known.insert(j.set).second) next.push_back(std::move(j));
        frontier = std::move(next);
    }

    std::vector<ElementSet> out(known.begin(), known.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ElementSet closure(const GroupTable& g, const ElementSet& gens) {
    Generated cur = trivial(g);
    gens.for_each([&](Elem x) {
        if (!cur.set.contains(x)) cur = extend(g, cur, x);
    });
    return std::move(cur.set);
}

ElementSet closure(const GroupTable& g, std::span<const Elem> gens) {
    Generated cur = trivial(g);
    for (Elem x : gens) {
        if (x >= g.order()) throw PreconditionError("generator index out of range");
        if (!cur.set.contains(x)) cur = extend(g, cur, x);
    }
    return std::move(cur.set);
}

ElementSet cyclic_subgroup(const GroupTable& g, Elem a) {
    ElementSet s(g.order());
    Elem x = g.identity();
    do {
        s.insert(x);
        x = g.mul(x, a);
    } while (x != g.identity());
    return s;
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
    if (s.universe() != g.order() || !s.contains(g.identity())) return false;
    const auto members = s.elements();
    for (Elem a : members)
        for (Elem b : members)
            if (!s.contains(g.mul(a, b))) return false;
    return true;
}

ElementSet conjugate(const GroupTable& g, const ElementSet& s, Elem x) {
    ElementSet out(g.order());
    const Elem xi = g.inv(x);
    s.for_each([&](Elem a) { out.insert(g.mul(g.mul(xi, a), x)); });
    return out;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
    const auto members = s.elements();
    for (Elem x = 0; x < g.order(); ++x) {
        const Elem xi = g.inv(x);
        for (Elem a : members)
            if (!s.contains(g.mul(g.mul(xi, a), x))) return false;
    }
    return true;
}

std::vector<ElementSet> all_subgroups(const GroupTable& g) {
    return enumerate_subgroups<true>(g);
}

std::vector<ElementSet> all_subgroups_serial(const GroupTable& g) {
    return enumerate_subgroups<false>(g);
}

QuotientResult quotient(const GroupTable& g, const ElementSet& n) {
    if (!is_subgroup(g, n) || !is_normal(g, n))
        throw PreconditionError("quotient of " + g.name() + " by " + n.to_hex() +
                                ": not a normal subgroup");
    const std::size_t order = g.order();
    const auto kernel = n.elements();
    constexpr Elem unassigned = ~Elem{0};
    std::vector<Elem> coset_of(order, unassigned);
    std::vector<Elem> reps;
    for (Elem a = 0; a < order; ++a) {
        if (coset_of[a] != unassigned) continue;
        const auto idx = static_cast<Elem>(reps.size());
        reps.push_back(a);
        for (Elem h : kernel) coset_of[g.mul(a, h)] = idx;
    }
    const std::size_t qn = reps.size();
    std::vector<Elem> t(qn * qn);
    for (std::size_t i = 0; i < qn; ++i)
        for (std::size_t j = 0; j < qn; ++j) t[i * qn + j] = coset_of[g.mul(reps[i], reps[j])];
    GroupTable table(g.name() + "/" + n.to_hex(), qn, std::move(t));
    return {std::move(table), std::move(coset_of), std::move(reps), n};
}

ElementSet lift_subgroup(const QuotientResult& q, const ElementSet& s) {
    ElementSet out(q.coset_of.size());
    for (Elem a = 0; a < q.coset_of.size(); ++a)
        if (s.contains(q.coset_of[a])) out.insert(a);
    return out;
}

ElementSet project_subgroup(const QuotientResult& q, const ElementSet& s) {
    ElementSet out(q.table.order());
    s.for_each([&](Elem a) { out.insert(q.coset_of[a]); });
    return out;
}

InducedGroup induced_group(const GroupTable& g, const ElementSet& s) {
    if (!is_subgroup(g, s))
        throw PreconditionError(s.to_hex() + " is not a subgroup of " + g.name());
    std::vector<Elem> to_parent = s.elements();
    std::vector<Elem> local(g.order(), 0);
    for (std::size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = static_cast<Elem>(i);
    const std::size_t m = to_parent.size();
    std::vector<Elem> t(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[i * m + j] = local[g.mul(to_parent[i], to_parent[j])];
    return {GroupTable(g.name() + "[" + s.to_hex() + "]", m, std::move(t)), std::move(to_parent)};
}

} // namespace powersub
