#include "nichols/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nichols {

namespace {

std::int64_t gcd2(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(a, std::gcd(b, c));
}

}  // namespace

Cocycle3::Cocycle3(FinAbGroup group, std::vector<std::int64_t> c1, std::vector<std::int64_t> c2,
                   std::vector<std::int64_t> c3)
    : CocycleEval(std::move(group)), c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
    const auto& g = this->group();
    const int n = g.rank();
    if (static_cast<int>(c1_.size()) != n)
        throw std::invalid_argument("Cocycle3: need one c_l per generator");
    if (static_cast<std::int64_t>(c2_.size()) != pair_count(n))
        throw std::invalid_argument("Cocycle3: wrong number of pair parameters");
    if (static_cast<std::int64_t>(c3_.size()) != triple_count(n))
        throw std::invalid_argument("Cocycle3: wrong number of triple parameters");
    for (int l = 0; l < n; ++l) {
        if (c1_[static_cast<std::size_t>(l)] < 0 || c1_[static_cast<std::size_t>(l)] >= g.factors()[static_cast<std::size_t>(l)])
            throw std::invalid_argument("Cocycle3: c_l out of range");
    }
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            const auto bound = gcd2(g.factors()[static_cast<std::size_t>(i)], g.factors()[static_cast<std::size_t>(j)]);
            pair_mod_.push_back(bound);
            if (c2_[k] < 0 || c2_[k] >= bound) throw std::invalid_argument("Cocycle3: c_ij out of range");
        }
    k = 0;
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (int t = s + 1; t < n; ++t, ++k) {
                const auto bound = gcd3(g.factors()[static_cast<std::size_t>(r)], g.factors()[static_cast<std::size_t>(s)],
                                        g.factors()[static_cast<std::size_t>(t)]);
                triple_mod_.push_back(bound);
                if (c3_[k] < 0 || c3_[k] >= bound)
                    throw std::invalid_argument("Cocycle3: c_rst out of range");
            }
}

Phase Cocycle3::eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    const auto& g = group();
    g.check(a);
    g.check(b);
    g.check(c);
    const int n = g.rank();
    Phase out;
    for (int l = 0; l < n; ++l) {
        const auto m = g.factors()[static_cast<std::size_t>(l)];
        const auto cl = c1_[static_cast<std::size_t>(l)];
        if (cl == 0) continue;
        const std::int64_t carry = (b.exp[static_cast<std::size_t>(l)] + c.exp[static_cast<std::size_t>(l)]) / m;
        out *= Phase(cl * a.exp[static_cast<std::size_t>(l)] * carry, m);
    }
    std::size_t k = 0;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t, ++k) {
            const auto cst = c2_[k];
            if (cst == 0) continue;
            const auto ms = g.factors()[static_cast<std::size_t>(s)];
            const auto mt = g.factors()[static_cast<std::size_t>(t)];
            const std::int64_t carry = (b.exp[static_cast<std::size_t>(s)] + c.exp[static_cast<std::size_t>(s)]) / ms;
            out *= Phase(cst * a.exp[static_cast<std::size_t>(t)] * carry, mt);
        }
    k = 0;
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (int t = s + 1; t < n; ++t, ++k) {
                const auto crst = c3_[k];
                if (crst == 0) continue;
                out *= Phase(crst * a.exp[static_cast<std::size_t>(r)] * b.exp[static_cast<std::size_t>(s)] *
                                 c.exp[static_cast<std::size_t>(t)],
                             triple_mod_[k]);
            }
    return out;
}

TableCocycle::TableCocycle(FinAbGroup group, std::vector<Phase> values)
    : CocycleEval(std::move(group)), values_(std::move(values)) {
    const auto n = this->group().order();
    if (static_cast<std::int64_t>(values_.size()) != n * n * n)
        throw std::invalid_argument("TableCocycle: table must have |G|^3 entries");
}

TableCocycle TableCocycle::materialize(const CocycleEval& src) {
    const auto& g = src.group();
    const auto n = g.order();
    std::vector<Phase> values;
    values.reserve(static_cast<std::size_t>(n * n * n));
    const auto elems = g.all_elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) values.push_back(src.eval(a, b, c));
    return TableCocycle(g, std::move(values));
}

Phase TableCocycle::eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    const auto& g = group();
    const auto n = g.order();
    const auto idx = (g.index_of(a) * n + g.index_of(b)) * n + g.index_of(c);
    return values_[static_cast<std::size_t>(idx)];
}

PullbackCocycle::PullbackCocycle(GroupHom hom, CocyclePtr base)
    : CocycleEval(hom.domain()), hom_(std::move(hom)), base_(std::move(base)) {
    if (hom_.codomain() != base_->group())
        throw std::invalid_argument("pullback: codomain of the map must be the base group");
}

Phase PullbackCocycle::eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    return base_->eval(hom_.apply(a), hom_.apply(b), hom_.apply(c));
}

ProductCocycle::ProductCocycle(CocyclePtr a, CocyclePtr b) : CocycleEval(a->group()), a_(std::move(a)), b_(std::move(b)) {
    if (a_->group() != b_->group())
        throw std::invalid_argument("product cocycle: factors live on different groups");
}

Phase ProductCocycle::eval(const GroupElement& x, const GroupElement& y, const GroupElement& z) const {
    return a_->eval(x, y, z) * b_->eval(x, y, z);
}

Cochain2::Cochain2(FinAbGroup group, std::vector<Phase> table)
    : group_(std::move(group)), table_(std::move(table)) {
    const auto n = group_.order();
    if (static_cast<std::int64_t>(table_.size()) != n * n)
        throw std::invalid_argument("Cochain2: table must have |G|^2 entries");
    const auto id = group_.index_of(group_.identity());
    for (std::int64_t i = 0; i < n; ++i) {
        if (!table_[static_cast<std::size_t>(id * n + i)].is_one() ||
            !table_[static_cast<std::size_t>(i * n + id)].is_one())
            throw std::invalid_argument("Cochain2: not normalized");
    }
}

Cochain2 Cochain2::trivial(const FinAbGroup& group) {
    return Cochain2(group, std::vector<Phase>(static_cast<std::size_t>(group.order() * group.order())));
}

Phase Cochain2::eval(const GroupElement& a, const GroupElement& b) const {
    return table_[static_cast<std::size_t>(group_.index_of(a) * group_.order() + group_.index_of(b))];
}

Cochain2 Cochain2::inverse() const {
    auto t = table_;
    for (auto& p : t) p = p.inverse();
    return Cochain2(group_, std::move(t));
}

CoboundaryCocycle::CoboundaryCocycle(Cochain2 j) : CocycleEval(j.group()), j_(std::move(j)) {}

Phase CoboundaryCocycle::eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    const auto& g = group();
    return j_.eval(b, c) * j_.eval(a, g.mul(b, c)) / (j_.eval(g.mul(a, b), c) * j_.eval(a, b));
}

Phase phi_tilde(const CocycleEval& phi, const GroupElement& g, const GroupElement& x,
                const GroupElement& y) {
    return phi.eval(g, x, y) * phi.eval(x, y, g) / phi.eval(x, g, y);
}

Phase antisymmetry_ratio(const CocycleEval& phi, const GroupElement& g1, const GroupElement& g2,
                         const GroupElement& g3) {
    return phi_tilde(phi, g1, g2, g3) / phi_tilde(phi, g1, g3, g2);
}

namespace {

// exponent table of a cocycle over a common denominator, for exhaustive loops
struct ExpTable {
    std::int64_t n = 0;
    std::int64_t m = 1;
    std::vector<std::int32_t> e;

    std::int32_t at(std::int64_t ia, std::int64_t ib, std::int64_t ic) const {
        return e[static_cast<std::size_t>((ia * n + ib) * n + ic)];
    }
};

ExpTable exponent_table(const CocycleEval& phi) {
    const auto& g = phi.group();
    ExpTable t;
    t.n = g.order();
    const auto elems = g.all_elements();
    std::vector<Phase> vals;
    vals.reserve(static_cast<std::size_t>(t.n * t.n * t.n));
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) {
                auto p = phi.eval(a, b, c);
                t.m = std::lcm(t.m, p.den());
                vals.push_back(p);
            }
    t.e.reserve(vals.size());
    for (const auto& p : vals) t.e.push_back(static_cast<std::int32_t>(p.num() * (t.m / p.den())));
    return t;
}

std::vector<std::int32_t> multiplication_table(const FinAbGroup& g) {
    const auto n = g.order();
    std::vector<std::int32_t> mul(static_cast<std::size_t>(n * n));
    const auto elems = g.all_elements();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            mul[static_cast<std::size_t>(i * n + j)] =
                static_cast<std::int32_t>(g.index_of(g.mul(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])));
    return mul;
}

}  // namespace

bool verify_3cocycle(const CocycleEval& phi) {
    const auto& g = phi.group();
    const auto n = g.order();
    const auto t = exponent_table(phi);
    const auto mul = multiplication_table(g);
    const auto id = g.index_of(g.identity());

    // normalization w(f,1,g) = 1
    for (std::int64_t f = 0; f < n; ++f)
        for (std::int64_t h = 0; h < n; ++h)
            if (t.at(f, id, h) % t.m != 0) return false;

    // w(ef,g,h) w(e,f,gh) = w(e,f,g) w(e,fg,h) w(f,g,h)
    for (std::int64_t e = 0; e < n; ++e)
        for (std::int64_t f = 0; f < n; ++f) {
            const auto ef = mul[static_cast<std::size_t>(e * n + f)];
            for (std::int64_t gg = 0; gg < n; ++gg) {
                const auto fg = mul[static_cast<std::size_t>(f * n + gg)];
                for (std::int64_t h = 0; h < n; ++h) {
                    const auto gh = mul[static_cast<std::size_t>(gg * n + h)];
                    const std::int64_t lhs = t.at(ef, gg, h) + t.at(e, f, gh);
                    const std::int64_t rhs = t.at(e, f, gg) + t.at(e, fg, h) + t.at(f, gg, h);
                    if ((lhs - rhs) % t.m != 0) return false;
                }
            }
        }
    return true;
}

bool is_abelian(const CocycleEval& phi, const std::vector<GroupElement>& subgroup) {
    const auto& g = phi.group();
    const auto ns = static_cast<std::int64_t>(subgroup.size());
    std::set<std::int64_t> idx;
    for (const auto& a : subgroup) idx.insert(g.index_of(a));
    for (const auto& a : subgroup)
        for (const auto& b : subgroup)
            if (idx.find(g.index_of(g.mul(a, b))) == idx.end())
                throw std::invalid_argument("is_abelian: element set is not closed");

    // Phi~ symmetry over all triples of the set
    std::vector<Phase> tilde(static_cast<std::size_t>(ns * ns * ns));
    for (std::int64_t i = 0; i < ns; ++i)
        for (std::int64_t j = 0; j < ns; ++j)
            for (std::int64_t k = 0; k < ns; ++k)
                tilde[static_cast<std::size_t>((i * ns + j) * ns + k)] =
                    phi_tilde(phi, subgroup[static_cast<std::size_t>(i)], subgroup[static_cast<std::size_t>(j)],
                              subgroup[static_cast<std::size_t>(k)]);
    for (std::int64_t i = 0; i < ns; ++i)
        for (std::int64_t j = 0; j < ns; ++j)
            for (std::int64_t k = j + 1; k < ns; ++k)
                if (tilde[static_cast<std::size_t>((i * ns + j) * ns + k)] !=
                    tilde[static_cast<std::size_t>((i * ns + k) * ns + j)])
                    return false;
    return true;
}

bool is_abelian(const CocycleEval& phi) { return is_abelian(phi, phi.group().all_elements()); }

std::vector<Cocycle3> enumerate_cocycles(const FinAbGroup& group) {
    const int n = group.rank();
    std::vector<std::int64_t> bounds;
    for (int l = 0; l < n; ++l) bounds.push_back(group.factors()[static_cast<std::size_t>(l)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bounds.push_back(gcd2(group.factors()[static_cast<std::size_t>(i)], group.factors()[static_cast<std::size_t>(j)]));
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (int t = s + 1; t < n; ++t)
                bounds.push_back(gcd3(group.factors()[static_cast<std::size_t>(r)], group.factors()[static_cast<std::size_t>(s)],
                                      group.factors()[static_cast<std::size_t>(t)]));

    std::vector<Cocycle3> out;
    std::vector<std::int64_t> seq(bounds.size(), 0);
    const std::size_t n1 = static_cast<std::size_t>(n);
    const std::size_t n2 = n1 + static_cast<std::size_t>(Cocycle3::pair_count(n));
    while (true) {
        out.emplace_back(group, std::vector<std::int64_t>(seq.begin(), seq.begin() + n1),
                         std::vector<std::int64_t>(seq.begin() + n1, seq.begin() + n2),
                         std::vector<std::int64_t>(seq.begin() + n2, seq.end()));
        // lexicographic odometer, last slot fastest
        std::size_t pos = seq.size();
        while (pos > 0) {
            --pos;
            if (++seq[pos] < bounds[pos]) break;
            seq[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t x, y;
    const std::int64_t g = ext_gcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw std::logic_error("mod_inverse: not invertible");
    return mod_pos(x, m);
}

}  // namespace

std::optional<Cochain2> solve_coboundary(const CocycleEval& target) {
    const auto& g = target.group();
    const auto n = g.order();
    const auto elems = g.all_elements();
    const auto id = g.index_of(g.identity());

    // common exponent denominator
    std::int64_t m = std::lcm(g.exponent() * g.exponent(), n);
    std::vector<std::int64_t> rhs_num(static_cast<std::size_t>(n * n * n));
    {
        std::vector<Phase> vals;
        vals.reserve(rhs_num.size());
        for (const auto& a : elems)
            for (const auto& b : elems)
                for (const auto& c : elems) {
                    auto p = target.eval(a, b, c);
                    m = std::lcm(m, p.den());
                    vals.push_back(p);
                }
        for (std::size_t i = 0; i < vals.size(); ++i) rhs_num[i] = vals[i].num() * (m / vals[i].den());
    }

    // unknowns J(a,b) for a,b != 1, as exponents in Z_m
    std::vector<std::int64_t> var_of(static_cast<std::size_t>(n * n), -1);
    std::int64_t nvars = 0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            if (a == id || b == id) continue;
            var_of[static_cast<std::size_t>(a * n + b)] = nvars++;
        }

    const auto mul = multiplication_table(g);
    const std::size_t width = static_cast<std::size_t>(nvars) + 1;
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(static_cast<std::size_t>(n * n * n));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c) {
                std::vector<std::int64_t> row(width, 0);
                auto add = [&](std::int64_t x, std::int64_t y, std::int64_t coeff) {
                    const auto v = var_of[static_cast<std::size_t>(x * n + y)];
                    if (v >= 0) row[static_cast<std::size_t>(v)] = mod_pos(row[static_cast<std::size_t>(v)] + coeff, m);
                };
                const auto bc = mul[static_cast<std::size_t>(b * n + c)];
                const auto ab = mul[static_cast<std::size_t>(a * n + b)];
                add(b, c, 1);
                add(a, bc, 1);
                add(ab, c, -1);
                add(a, b, -1);
                row[width - 1] = mod_pos(rhs_num[static_cast<std::size_t>((a * n + b) * n + c)], m);
                bool zero = row[width - 1] == 0;
                for (std::size_t j = 0; zero && j + 1 < width; ++j) zero = row[j] == 0;
                if (!zero) rows.push_back(std::move(row));
            }

    // elimination over Z_m with unimodular two-row combinations
    std::size_t pivot_row = 0;
    std::vector<std::pair<std::size_t, std::int64_t>> pivots;  // (row, column)
    for (std::int64_t col = 0; col < nvars && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            while (rows[r][static_cast<std::size_t>(col)] != 0) {
                const std::int64_t p = rows[pivot_row][static_cast<std::size_t>(col)];
                const std::int64_t k = rows[r][static_cast<std::size_t>(col)];
                if (k % std::gcd(p, m) == 0) {
                    // p f = k (mod m) is solvable; clear the entry
                    const std::int64_t gp = std::gcd(p, m);
                    const std::int64_t f = mod_pos((k / gp) * mod_inverse(p / gp, m / gp), m);
                    for (std::size_t j = 0; j < width; ++j)
                        rows[r][j] = mod_pos(rows[r][j] - f * rows[pivot_row][j], m);
                } else {
                    // unimodular combination lowering the pivot to gcd(p, k)
                    std::int64_t x, y;
                    const std::int64_t d = ext_gcd(p, k, x, y);
                    const std::int64_t u = p / d, v = k / d;
                    for (std::size_t j = 0; j < width; ++j) {
                        const std::int64_t rp = rows[pivot_row][j];
                        const std::int64_t rr = rows[r][j];
                        rows[pivot_row][j] = mod_pos(x * rp + y * rr, m);
                        rows[r][j] = mod_pos(-v * rp + u * rr, m);
                    }
                }
            }
        }
        pivots.emplace_back(pivot_row, col);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (rows[r][j] != 0) throw std::logic_error("solve_coboundary: elimination left a stray entry");
        if (rows[r][width - 1] % m != 0) return std::nullopt;
    }

    // back substitution, free unknowns pinned to zero
    std::vector<std::int64_t> x(static_cast<std::size_t>(nvars), 0);
    for (std::size_t pi = pivots.size(); pi-- > 0;) {
        const auto [r, col] = pivots[pi];
        std::int64_t acc = rows[r][width - 1];
        for (std::int64_t j = col + 1; j < nvars; ++j)
            acc = mod_pos(acc - rows[r][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)], m);
        const std::int64_t p = rows[r][static_cast<std::size_t>(col)];
        const std::int64_t gp = std::gcd(p, m);
        if (acc % gp != 0) return std::nullopt;
        x[static_cast<std::size_t>(col)] = mod_pos((acc / gp) * mod_inverse(p / gp, m / gp), m / gp);
    }

    std::vector<Phase> table(static_cast<std::size_t>(n * n));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            const auto v = var_of[static_cast<std::size_t>(a * n + b)];
            if (v >= 0) table[static_cast<std::size_t>(a * n + b)] = Phase(x[static_cast<std::size_t>(v)], m);
        }
    Cochain2 j(g, std::move(table));

    // the solution must reproduce the target pointwise
    const CoboundaryCocycle dj(j);
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                if (dj.eval(a, b, c) != target.eval(a, b, c)) return std::nullopt;
    return j;
}

bool same_cocycle(const CocycleEval& a, const CocycleEval& b) {
    if (a.group() != b.group()) return false;
    const auto elems = a.group().all_elements();
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems)
                if (a.eval(x, y, z) != b.eval(x, y, z)) return false;
    return true;
}

}  // namespace nichols
