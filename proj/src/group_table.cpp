#include "powersub/group_table.hpp"

#include "powersub/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>

namespace powersub {

std::size_t order_cap() {
    static const std::size_t cap = [] {
        const char* env = std::getenv("POWERSUB_ORDER_CAP");
        if (env == nullptr) return kDefaultOrderCap;
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec != std::errc{} || *ptr != '\0' || v == 0) return kDefaultOrderCap;
        return v;
    }();
    return cap;
}

namespace {

void check_cap(std::size_t order, std::size_t cap, const std::string& what) {
    if (order > cap)
        throw SizeError(what + " has order " + std::to_string(order) +
                        ", exceeding the order cap " + std::to_string(cap));
}

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap, const std::string& what) {
    if (a != 0 && b > cap / a)
        throw SizeError(what + " exceeds the order cap " + std::to_string(cap));
    return a * b;
}

} // namespace

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<Elem> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
    if (order_ == 0) throw ParameterError("group order must be positive");
    if (table_.size() != order_ * order_)
        throw ParameterError("table size does not match order " + std::to_string(order_));
    for (Elem v : table_)
        if (v >= order_) throw ParameterError("table entry out of range");

    // Derived data is computed best-effort so that broken tables can still be
    // handed to verify_group_axioms.
    for (Elem e = 0; e < order_; ++e) {
        bool ok = true;
        for (Elem a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    inverse_.assign(order_, identity_);
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b)
            if (mul(a, b) == identity_) {
                inverse_[a] = b;
                break;
            }
    elem_orders_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a) {
        Elem x = a;
        for (std::uint32_t t = 1; t <= order_; ++t) {
            if (x == identity_) {
                elem_orders_[a] = t;
                break;
            }
            x = mul(x, a);
        }
    }
}

Elem GroupTable::pow(Elem a, std::uint64_t m) const noexcept {
    if (elem_orders_[a] != 0) m %= elem_orders_[a];
    Elem result = identity_;
    Elem base = a;
    while (m > 0) {
        if (m & 1) result = mul(result, base);
        base = mul(base, base);
        m >>= 1;
    }
    return result;
}

bool GroupTable::is_abelian() const noexcept {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

GroupTable GroupTable::renamed(std::string name) const {
    GroupTable copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

GroupTable make_cyclic(std::size_t n, std::size_t cap) {
    if (n == 0) throw ParameterError("cyclic group order must be at least 1");
    check_cap(n, cap, "C" + std::to_string(n));
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
    return {"C" + std::to_string(n), n, std::move(t)};
}

GroupTable make_dihedral(std::size_t n, std::size_t cap) {
    if (n == 0) throw ParameterError("dihedral parameter must be at least 1");
    const std::string name = "D" + std::to_string(n);
    const std::size_t order = checked_mul(2, n, cap, name);
    check_cap(order, cap, name);
    std::vector<Elem> t(order * order);
    // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l)
    for (std::size_t x = 0; x < order; ++x) {
        const std::size_t i = x % n, j = x / n;
        for (std::size_t y = 0; y < order; ++y) {
            const std::size_t k = y % n, l = y / n;
            const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
            t[x * order + y] = static_cast<Elem>(((j + l) % 2) * n + rot);
        }
    }
    return {name, order, std::move(t)};
}

GroupTable make_generalized_quaternion(std::size_t m, std::size_t cap) {
    const std::string name = "Q" + std::to_string(m);
    if (m < 8 || m % 4 != 0)
        throw ParameterError(name + ": generalized quaternion order must be >= 8 and divisible by 4");
    check_cap(m, cap, name);
    const std::size_t half = m / 2, quarter = m / 4;
    std::vector<Elem> t(m * m);
    // b a^k = a^-k b, b^2 = a^(m/4)
    for (std::size_t x = 0; x < m; ++x) {
        const std::size_t i = x % half, j = x / half;
        for (std::size_t y = 0; y < m; ++y) {
            const std::size_t k = y % half, l = y / half;
            std::size_t rot = j == 0 ? (i + k) % half : (i + half - k) % half;
            std::size_t bexp = j + l;
            if (bexp == 2) {
                rot = (rot + quarter) % half;
                bexp = 0;
            }
            t[x * m + y] = static_cast<Elem>(bexp * half + rot);
        }
    }
    return {name, m, std::move(t)};
}

namespace {

std::vector<std::vector<Elem>> lexicographic_permutations(std::size_t n, bool even_only) {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), Elem{0});
    std::vector<std::vector<Elem>> perms;
    do {
        if (even_only) {
            std::size_t inversions = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) inversions += p[a] > p[b];
            if (inversions % 2 != 0) continue;
        }
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

GroupTable permutation_group(std::string name, const std::vector<std::vector<Elem>>& perms,
                             std::size_t n) {
    const std::size_t order = perms.size();
    std::vector<Elem> t(order * order);
    std::vector<Elem> prod(n);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            for (std::size_t i = 0; i < n; ++i) prod[i] = perms[y][perms[x][i]];
            auto it = std::lower_bound(perms.begin(), perms.end(), prod);
            t[x * order + y] = static_cast<Elem>(it - perms.begin());
        }
    return {std::move(name), order, std::move(t)};
}

std::size_t factorial_capped(std::size_t n, std::size_t cap, const std::string& what) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, i, cap, what);
    return f;
}

} // namespace

GroupTable make_symmetric(std::size_t n, std::size_t cap) {
    const std::string name = "S" + std::to_string(n);
    if (n == 0) throw ParameterError("symmetric group degree must be at least 1");
    check_cap(factorial_capped(n, cap, name), cap, name);
    return permutation_group(name, lexicographic_permutations(n, false), n);
}

GroupTable make_alternating(std::size_t n, std::size_t cap) {
    const std::string name = "A" + std::to_string(n);
    if (n == 0) throw ParameterError("alternating group degree must be at least 1");
    // n!/2 <= cap  <=>  n! <= 2*cap
    const std::size_t f = factorial_capped(n, 2 * cap, name);
    check_cap(n >= 2 ? f / 2 : 1, cap, name);
    return permutation_group(name, lexicographic_permutations(n, true), n);
}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

GroupTable make_elementary_abelian(std::size_t p, std::size_t k, std::size_t cap) {
    const std::string name = "E" + std::to_string(p) + "_" + std::to_string(k);
    if (!is_prime(p)) throw ParameterError(name + ": " + std::to_string(p) + " is not prime");
    if (k == 0) throw ParameterError(name + ": rank must be at least 1");
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) order = checked_mul(order, p, cap, name);
    check_cap(order, cap, name);
    std::vector<Elem> t(order * order);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            std::size_t a = x, b = y, sum = 0, place = 1;
            for (std::size_t i = 0; i < k; ++i) {
                sum += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            t[x * order + y] = static_cast<Elem>(sum);
        }
    return {name, order, std::move(t)};
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t cap) {
    const std::string name = a.name() + "x" + b.name();
    const std::size_t na = a.order(), nb = b.order();
    const std::size_t order = checked_mul(na, nb, cap, name);
    check_cap(order, cap, name);
    std::vector<Elem> t(order * order);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            const Elem pa = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
            const Elem pb = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
            t[x * order + y] = static_cast<Elem>(pa * nb + pb);
        }
    return {name, order, std::move(t)};
}

std::uint32_t element_order(const GroupTable& g, Elem a) {
    if (a >= g.order())
        throw PreconditionError("element index " + std::to_string(a) + " out of range for " +
                                g.name());
    return g.elem_order(a);
}

std::uint64_t exponent(const GroupTable& g) {
    std::uint64_t e = 1;
    for (auto o : g.elem_orders()) e = std::lcm(e, std::uint64_t{o});
    return e;
}

bool is_cyclic(const GroupTable& g) {
    const auto orders = g.elem_orders();
    return std::any_of(orders.begin(), orders.end(),
                       [&](std::uint32_t o) { return o == g.order(); });
}

std::optional<AxiomViolation> verify_group_axioms(const GroupTable& g) {
    const std::size_t n = g.order();
    const Elem e = g.identity();
    auto fail = [](std::string s) { return std::optional<AxiomViolation>{AxiomViolation{std::move(s)}}; };

    std::vector<char> seen(n);
    for (Elem a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem b = 0; b < n; ++b) {
            const Elem v = g.mul(a, b);
            if (seen[v]) return fail("row " + std::to_string(a) + " is not a permutation");
            seen[v] = 1;
        }
    }
    for (Elem b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem a = 0; a < n; ++a) {
            const Elem v = g.mul(a, b);
            if (seen[v]) return fail("column " + std::to_string(b) + " is not a permutation");
            seen[v] = 1;
        }
    }
    for (Elem a = 0; a < n; ++a)
        if (g.mul(e, a) != a || g.mul(a, e) != a)
            return fail("identity " + std::to_string(e) + " fails on element " + std::to_string(a));
    for (Elem a = 0; a < n; ++a)
        if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e)
            return fail("inverse of element " + std::to_string(a) + " is wrong");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const Elem ab = g.mul(a, b);
            for (Elem c = 0; c < n; ++c)
                if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                    return fail("associativity fails at (" + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(c) + ")");
        }
    for (Elem a = 0; a < n; ++a) {
        const auto o = g.elem_order(a);
        if (o == 0 || n % o != 0)
            return fail("element order of " + std::to_string(a) + " is inconsistent");
        Elem x = a;
        for (std::uint32_t t = 1; t < o; ++t, x = g.mul(x, a))
            if (x == e) return fail("element order of " + std::to_string(a) + " is not minimal");
        if (x != e) return fail("element order of " + std::to_string(a) + " is inconsistent");
    }
    return std::nullopt;
}

} // namespace powersub
