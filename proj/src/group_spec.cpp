#include "powersub/group_spec.hpp"

#include "powersub/errors.hpp"

#include <cctype>
#include <limits>

namespace powersub {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupSpec parse() {
        GroupSpec spec;
        spec.factors.push_back(term());
        while (true) {
            skip_ws();
            if (at_end()) break;
            if (lower(peek()) != 'x') throw SyntaxError("expected 'x' or end of input", pos_);
            ++pos_;
            spec.factors.push_back(term());
        }
        return spec;
    }

private:
    static char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::size_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = sat_mul(v, 10);
            const auto digit = static_cast<std::size_t>(peek() - '0');
            v = v > kSaturated - digit ? kSaturated : v + digit;
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError("expected integer", start);
        return v;
    }

    FamilyTerm term() {
        skip_ws();
        if (at_end()) throw SyntaxError("expected group family letter", pos_);
        const std::size_t start = pos_;
        FamilyTerm t{};
        switch (lower(peek())) {
        case 'c': t.family = Family::Cyclic; break;
        case 'd': t.family = Family::Dihedral; break;
        case 'q': t.family = Family::Quaternion; break;
        case 's': t.family = Family::Symmetric; break;
        case 'a': t.family = Family::Alternating; break;
        case 'e': t.family = Family::ElementaryAbelian; break;
        default: throw SyntaxError(std::string("unknown group family '") + peek() + "'", start);
        }
        ++pos_;
        t.param = integer();
        if (t.family == Family::ElementaryAbelian) {
            skip_ws();
            if (at_end() || peek() != '_') throw SyntaxError("expected '_' in E p_k", pos_);
            ++pos_;
            t.rank = integer();
        }
        validate(t);
        return t;
    }

    static void validate(const FamilyTerm& t) {
        const std::string s = t.text();
        switch (t.family) {
        case Family::Quaternion:
            if (t.param < 8 || t.param % 4 != 0)
                throw ParameterError(s + ": quaternion order must be >= 8 and divisible by 4");
            break;
        case Family::ElementaryAbelian:
            if (!is_prime(t.param)) throw ParameterError(s + ": " + std::to_string(t.param) + " is not prime");
            if (t.rank == 0) throw ParameterError(s + ": rank must be at least 1");
            break;
        default:
            if (t.param == 0) throw ParameterError(s + ": parameter must be at least 1");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

char family_letter(Family f) {
    switch (f) {
    case Family::Cyclic: return 'C';
    case Family::Dihedral: return 'D';
    case Family::Quaternion: return 'Q';
    case Family::Symmetric: return 'S';
    case Family::Alternating: return 'A';
    case Family::ElementaryAbelian: return 'E';
    }
    return '?';
}

std::size_t FamilyTerm::order() const {
    switch (family) {
    case Family::Cyclic:
    case Family::Quaternion: return param;
    case Family::Dihedral: return sat_mul(2, param);
    case Family::Symmetric:
    case Family::Alternating: {
        std::size_t f = 1;
        for (std::size_t i = 2; i <= param; ++i) f = sat_mul(f, i);
        if (family == Family::Alternating && param >= 2 && f != kSaturated) f /= 2;
        return f;
    }
    case Family::ElementaryAbelian: {
        std::size_t o = 1;
        for (std::size_t i = 0; i < rank; ++i) o = sat_mul(o, param);
        return o;
    }
    }
    return 0;
}

std::string FamilyTerm::text() const {
    std::string s(1, family_letter(family));
    s += std::to_string(param);
    if (family == Family::ElementaryAbelian) s += "_" + std::to_string(rank);
    return s;
}

GroupTable FamilyTerm::build(std::size_t cap) const {
    switch (family) {
    case Family::Cyclic: return make_cyclic(param, cap);
    case Family::Dihedral: return make_dihedral(param, cap);
    case Family::Quaternion: return make_generalized_quaternion(param, cap);
    case Family::Symmetric: return make_symmetric(param, cap);
    case Family::Alternating: return make_alternating(param, cap);
    case Family::ElementaryAbelian: return make_elementary_abelian(param, rank, cap);
    }
    throw ParameterError("unknown family");
}

std::size_t GroupSpec::order() const {
    std::size_t o = 1;
    for (const auto& f : factors) o = sat_mul(o, f.order());
    return o;
}

std::string GroupSpec::text() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += 'x';
        s += f.text();
    }
    return s;
}

GroupTable GroupSpec::build(std::size_t cap) const {
    if (factors.empty()) throw ParameterError("empty group spec");
    if (order() > cap)
        throw SizeError(text() + " exceeds the order cap " + std::to_string(cap));
    GroupTable g = factors.front().build(cap);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i].build(cap), cap);
    return g;
}

GroupSpec parse_group_spec(std::string_view text, std::size_t cap) {
    GroupSpec spec = Parser(text).parse();
    if (spec.order() > cap)
        throw SizeError(spec.text() + " has order above the order cap " + std::to_string(cap));
    return spec;
}

} // namespace powersub
