#include "gammafuzz/algebra.hpp"

#include <sstream>

#include "gammafuzz/error.hpp"

namespace gammafuzz {

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

namespace {

void check_entry(std::size_t value, std::size_t bound, const std::string& where) {
    if (value >= bound) {
        throw ShapeError(where + ": entry " + std::to_string(value) + " out of range [0, " +
                         std::to_string(bound) + ")");
    }
}

std::vector<std::size_t> flatten_square(const std::vector<std::vector<std::size_t>>& table, std::size_t n,
                                        const std::string& what) {
    if (table.size() != n) {
        throw ShapeError(what + ": expected " + std::to_string(n) + " rows, got " + std::to_string(table.size()));
    }
    std::vector<std::size_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
            throw ShapeError(what + "[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries, got " +
                             std::to_string(table[i].size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
            check_entry(table[i][j], n, what + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
            flat.push_back(table[i][j]);
        }
    }
    return flat;
}

void check_unity_ranges(const UnityDecl& u, std::size_t s_size, std::size_t g_size) {
    if (u.pairs.empty()) throw ShapeError("unity declaration with no pairs");
    for (const auto& [e, d] : u.pairs) {
        check_entry(e.index, s_size, "unity element");
        check_entry(d.index, g_size, "unity gamma");
    }
}

} // namespace

GammaSemiring::GammaSemiring(SemiringTables t)
    : name_(std::move(t.name)), s_size_(t.s_size), g_size_(t.g_size), s_zero_(t.s_zero), g_zero_(t.g_zero),
      unities_(std::move(t.unities)) {
    if (s_size_ == 0 || g_size_ == 0) throw ShapeError("carriers must be nonempty");
    if (s_size_ > max_carrier) {
        throw ShapeError("|S| = " + std::to_string(s_size_) + " exceeds the supported maximum of " +
                         std::to_string(max_carrier));
    }
    s_add_ = flatten_square(t.s_add, s_size_, "s_add");
    g_add_ = flatten_square(t.g_add, g_size_, "gamma_add");
    if (t.product.size() != s_size_) throw ShapeError("product: expected " + std::to_string(s_size_) + " planes");
    prod_.reserve(s_size_ * g_size_ * s_size_);
    for (std::size_t a = 0; a < s_size_; ++a) {
        if (t.product[a].size() != g_size_) {
            throw ShapeError("product[" + std::to_string(a) + "]: expected " + std::to_string(g_size_) + " rows");
        }
        for (std::size_t alpha = 0; alpha < g_size_; ++alpha) {
            const auto& row = t.product[a][alpha];
            const std::string where = "product[" + std::to_string(a) + "][" + std::to_string(alpha) + "]";
            if (row.size() != s_size_) {
                throw ShapeError(where + ": expected " + std::to_string(s_size_) + " entries");
            }
            for (std::size_t b = 0; b < s_size_; ++b) {
                check_entry(row[b], s_size_, where + "[" + std::to_string(b) + "]");
                prod_.push_back(row[b]);
            }
        }
    }
    check_entry(s_zero_, s_size_, "s_zero");
    check_entry(g_zero_, g_size_, "gamma_zero");
    for (const auto& u : unities_) check_unity_ranges(u, s_size_, g_size_);
}

bool GammaSemiring::has_unity(Side side) const noexcept {
    for (const auto& u : unities_) {
        if (u.side == side) return true;
    }
    return false;
}

SemiringTables GammaSemiring::tables() const {
    SemiringTables t;
    t.name = name_;
    t.s_size = s_size_;
    t.g_size = g_size_;
    t.s_add.assign(s_size_, std::vector<std::size_t>(s_size_));
    for (std::size_t a = 0; a < s_size_; ++a)
        for (std::size_t b = 0; b < s_size_; ++b) t.s_add[a][b] = add(a, b);
    t.g_add.assign(g_size_, std::vector<std::size_t>(g_size_));
    for (std::size_t a = 0; a < g_size_; ++a)
        for (std::size_t b = 0; b < g_size_; ++b) t.g_add[a][b] = gamma_add(a, b);
    t.product.assign(s_size_, std::vector<std::vector<std::size_t>>(g_size_, std::vector<std::size_t>(s_size_)));
    for (std::size_t a = 0; a < s_size_; ++a)
        for (std::size_t alpha = 0; alpha < g_size_; ++alpha)
            for (std::size_t b = 0; b < s_size_; ++b) t.product[a][alpha][b] = mul(a, alpha, b);
    t.s_zero = s_zero_;
    t.g_zero = g_zero_;
    t.unities = unities_;
    return t;
}

std::string to_string(Axiom axiom) {
    switch (axiom) {
    case Axiom::s_add_commutative: return "s-add-commutative";
    case Axiom::s_add_associative: return "s-add-associative";
    case Axiom::s_add_identity: return "s-add-identity";
    case Axiom::gamma_add_commutative: return "gamma-add-commutative";
    case Axiom::gamma_add_associative: return "gamma-add-associative";
    case Axiom::gamma_add_identity: return "gamma-add-identity";
    case Axiom::left_distributive: return "left-distributive";
    case Axiom::right_distributive: return "right-distributive";
    case Axiom::gamma_distributive: return "gamma-distributive";
    case Axiom::associative: return "associative";
    case Axiom::zero_s_absorbs: return "zero-s-absorbs";
    case Axiom::zero_gamma_absorbs: return "zero-gamma-absorbs";
    case Axiom::unity: return "unity";
    }
    return "unknown";
}

namespace {

const char* witness_names(Axiom axiom) {
    switch (axiom) {
    case Axiom::s_add_commutative: return "(a+b = b+a) a,b";
    case Axiom::s_add_associative: return "((a+b)+c = a+(b+c)) a,b,c";
    case Axiom::s_add_identity: return "(0+a = a = a+0) a";
    case Axiom::gamma_add_commutative: return "(α+β = β+α) α,β";
    case Axiom::gamma_add_associative: return "((α+β)+δ = α+(β+δ)) α,β,δ";
    case Axiom::gamma_add_identity: return "(0+α = α = α+0) α";
    case Axiom::left_distributive: return "((a+b)αc = aαc+bαc) a,b,α,c";
    case Axiom::right_distributive: return "(aα(b+c) = aαb+aαc) a,α,b,c";
    case Axiom::gamma_distributive: return "(a(α+β)b = aαb+aβb) a,α,β,b";
    case Axiom::associative: return "(aα(bβc) = (aαb)βc) a,α,b,β,c";
    case Axiom::zero_s_absorbs: return "(0αx = 0 = xα0) α,x";
    case Axiom::zero_gamma_absorbs: return "(x0y = 0) x,y";
    case Axiom::unity: return "(declared unity reproduces x) unity#,x";
    }
    return "";
}

} // namespace

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    os << to_string(axiom) << " " << witness_names(axiom) << " = (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << "): lhs " << lhs << " != rhs " << rhs;
    return os.str();
}

namespace {

std::size_t unity_sum(const GammaSemiring& g, const UnityDecl& u, std::size_t x) {
    std::size_t acc = 0;
    bool first = true;
    for (const auto& [e, d] : u.pairs) {
        const std::size_t term = u.side == Side::left ? g.mul(e.index, d.index, x) : g.mul(x, d.index, e.index);
        acc = first ? term : g.add(acc, term);
        first = false;
    }
    return acc;
}

} // namespace

std::vector<AxiomViolation> validate(const GammaSemiring& g) {
    const std::size_t n = g.s_size();
    const std::size_t m = g.g_size();
    const std::size_t z = g.s_zero();
    const std::size_t gz = g.g_zero();
    std::vector<AxiomViolation> out;

    // Runs `body` until it reports a violation; only the first one is kept.
    auto first = [&out](auto&& body) {
        if (auto v = body()) out.push_back(*v);
    };
    using Found = std::optional<AxiomViolation>;

    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (g.add(a, b) != g.add(b, a)) return AxiomViolation{Axiom::s_add_commutative, {a, b}, g.add(a, b), g.add(b, a)};
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const auto lhs = g.add(g.add(a, b), c);
                    const auto rhs = g.add(a, g.add(b, c));
                    if (lhs != rhs) return AxiomViolation{Axiom::s_add_associative, {a, b, c}, lhs, rhs};
                }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a) {
            if (g.add(z, a) != a) return AxiomViolation{Axiom::s_add_identity, {a}, g.add(z, a), a};
            if (g.add(a, z) != a) return AxiomViolation{Axiom::s_add_identity, {a}, g.add(a, z), a};
        }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (g.gamma_add(a, b) != g.gamma_add(b, a))
                    return AxiomViolation{Axiom::gamma_add_commutative, {a, b}, g.gamma_add(a, b), g.gamma_add(b, a)};
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < m; ++c) {
                    const auto lhs = g.gamma_add(g.gamma_add(a, b), c);
                    const auto rhs = g.gamma_add(a, g.gamma_add(b, c));
                    if (lhs != rhs) return AxiomViolation{Axiom::gamma_add_associative, {a, b, c}, lhs, rhs};
                }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < m; ++a) {
            if (g.gamma_add(gz, a) != a) return AxiomViolation{Axiom::gamma_add_identity, {a}, g.gamma_add(gz, a), a};
            if (g.gamma_add(a, gz) != a) return AxiomViolation{Axiom::gamma_add_identity, {a}, g.gamma_add(a, gz), a};
        }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t al = 0; al < m; ++al)
                    for (std::size_t c = 0; c < n; ++c) {
                        const auto lhs = g.mul(g.add(a, b), al, c);
                        const auto rhs = g.add(g.mul(a, al, c), g.mul(b, al, c));
                        if (lhs != rhs) return AxiomViolation{Axiom::left_distributive, {a, b, al, c}, lhs, rhs};
                    }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < m; ++al)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) {
                        const auto lhs = g.mul(a, al, g.add(b, c));
                        const auto rhs = g.add(g.mul(a, al, b), g.mul(a, al, c));
                        if (lhs != rhs) return AxiomViolation{Axiom::right_distributive, {a, al, b, c}, lhs, rhs};
                    }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < m; ++al)
                for (std::size_t be = 0; be < m; ++be)
                    for (std::size_t b = 0; b < n; ++b) {
                        const auto lhs = g.mul(a, g.gamma_add(al, be), b);
                        const auto rhs = g.add(g.mul(a, al, b), g.mul(a, be, b));
                        if (lhs != rhs) return AxiomViolation{Axiom::gamma_distributive, {a, al, be, b}, lhs, rhs};
                    }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < m; ++al)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t be = 0; be < m; ++be)
                        for (std::size_t c = 0; c < n; ++c) {
                            const auto lhs = g.mul(a, al, g.mul(b, be, c));
                            const auto rhs = g.mul(g.mul(a, al, b), be, c);
                            if (lhs != rhs) return AxiomViolation{Axiom::associative, {a, al, b, be, c}, lhs, rhs};
                        }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t al = 0; al < m; ++al)
            for (std::size_t x = 0; x < n; ++x) {
                if (g.mul(z, al, x) != z) return AxiomViolation{Axiom::zero_s_absorbs, {al, x}, g.mul(z, al, x), z};
                if (g.mul(x, al, z) != z) return AxiomViolation{Axiom::zero_s_absorbs, {al, x}, g.mul(x, al, z), z};
            }
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (g.mul(x, gz, y) != z) return AxiomViolation{Axiom::zero_gamma_absorbs, {x, y}, g.mul(x, gz, y), z};
        return std::nullopt;
    });
    first([&]() -> Found {
        for (std::size_t i = 0; i < g.unities().size(); ++i)
            for (std::size_t x = 0; x < n; ++x) {
                const auto got = unity_sum(g, g.unities()[i], x);
                if (got != x) return AxiomViolation{Axiom::unity, {i, x}, got, x};
            }
        return std::nullopt;
    });
    return out;
}

bool verify_unity(const GammaSemiring& g, const UnityDecl& u) {
    check_unity_ranges(u, g.s_size(), g.g_size());
    for (std::size_t x = 0; x < g.s_size(); ++x) {
        if (unity_sum(g, u, x) != x) return false;
    }
    return true;
}

bool is_commutative(const GammaSemiring& g) {
    for (std::size_t a = 0; a < g.s_size(); ++a)
        for (std::size_t al = 0; al < g.g_size(); ++al)
            for (std::size_t b = a + 1; b < g.s_size(); ++b)
                if (g.mul(a, al, b) != g.mul(b, al, a)) return false;
    return true;
}

CrispSubset CrispSubset::of(std::initializer_list<std::size_t> elems) {
    CrispSubset s;
    for (auto e : elems) s.insert(e);
    return s;
}

std::vector<std::size_t> CrispSubset::elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::string CrispSubset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

namespace {

bool additively_closed(const GammaSemiring& g, const CrispSubset& ideal) {
    const auto members = ideal.elements();
    for (auto a : members)
        for (auto b : members)
            if (!ideal.contains(g.add(a, b))) return false;
    return true;
}

bool absorbs(const GammaSemiring& g, const CrispSubset& ideal, Side side) {
    for (auto i : ideal.elements())
        for (std::size_t s = 0; s < g.s_size(); ++s)
            for (std::size_t al = 0; al < g.g_size(); ++al) {
                const auto p = side == Side::left ? g.mul(s, al, i) : g.mul(i, al, s);
                if (!ideal.contains(p)) return false;
            }
    return true;
}

bool is_crisp_side_ideal(const GammaSemiring& g, const CrispSubset& ideal, Side side) {
    if (ideal.empty()) return true;
    return ideal.contains(g.s_zero()) && additively_closed(g, ideal) && absorbs(g, ideal, side);
}

} // namespace

bool is_crisp_left_ideal(const GammaSemiring& g, const CrispSubset& ideal) {
    return is_crisp_side_ideal(g, ideal, Side::left);
}

bool is_crisp_right_ideal(const GammaSemiring& g, const CrispSubset& ideal) {
    return is_crisp_side_ideal(g, ideal, Side::right);
}

bool is_crisp_ideal(const GammaSemiring& g, const CrispSubset& ideal) {
    return is_crisp_left_ideal(g, ideal) && is_crisp_right_ideal(g, ideal);
}

CrispSubset crisp_product(const GammaSemiring& g, const CrispSubset& r, const CrispSubset& l) {
    CrispSubset out;
    for (auto a : r.elements())
        for (std::size_t al = 0; al < g.g_size(); ++al)
            for (auto b : l.elements()) out.insert(g.mul(a, al, b));
    return out;
}

CrispSubset additive_closure(const GammaSemiring& g, const CrispSubset& a) {
    // B grows strictly inside a finite carrier, so this stops within |S| rounds.
    const auto generators = a.elements();
    CrispSubset closed = a;
    while (true) {
        CrispSubset next = closed;
        for (auto b : closed.elements())
            for (auto x : generators) next.insert(g.add(b, x));
        if (next == closed) return closed;
        closed = next;
    }
}

RegularityResult is_multiplicatively_regular(const GammaSemiring& g) {
    RegularityResult result;
    result.regular = true;
    for (std::size_t c = 0; c < g.s_size(); ++c) {
        std::optional<RegularityWitness> found;
        for (std::size_t x = 0; x < g.s_size() && !found; ++x)
            for (std::size_t g1 = 0; g1 < g.g_size() && !found; ++g1)
                for (std::size_t g2 = 0; g2 < g.g_size() && !found; ++g2)
                    if (g.mul(g.mul(c, g1, x), g2, c) == c) found = RegularityWitness{{c}, {x}, {g1}, {g2}};
        if (!found) {
            result.regular = false;
            result.witnesses.clear();
            result.failing = ElemS{c};
            return result;
        }
        result.witnesses.push_back(*found);
    }
    return result;
}

} // namespace gammafuzz
