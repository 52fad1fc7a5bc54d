#include "nichols/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nichols {

namespace {

using Int = boost::multiprecision::cpp_int;
using IntPoly = std::vector<Int>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials, divisor monic
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    IntPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        const Int lead = num.back();
        const std::size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        trim(num);
    }
    if (!num.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<Int> CycField::cyclotomic_polynomial(std::int64_t n) {
    // x^d - 1 divided by the cyclotomic polynomials of the proper divisors,
    // built up along the divisor lattice of n
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<IntPoly> table;
    for (std::size_t di = 0; di < divisors.size(); ++di) {
        const std::int64_t d = divisors[di];
        IntPoly p(static_cast<std::size_t>(d) + 1, Int(0));
        p[0] = -1;
        p[static_cast<std::size_t>(d)] = 1;
        for (std::size_t e = 0; e < di; ++e) {
            if (d % divisors[e] != 0) continue;
            p = divide_exact(std::move(p), table[e]);
        }
        table.push_back(std::move(p));
    }
    return table.back();
}

CycField::CycField(std::int64_t conductor) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("CycField: conductor must be positive");
    const IntPoly cyclo = cyclotomic_polynomial(conductor);
    degree_ = static_cast<int>(cyclo.size()) - 1;
    modulus_.resize(cyclo.size());
    for (std::size_t i = 0; i < cyclo.size(); ++i) modulus_[i] = Rat(cyclo[i]);

    const std::int64_t span = std::max<std::int64_t>(conductor, 2 * degree_ - 1);
    powers_.reserve(static_cast<std::size_t>(span));
    std::vector<Rat> cur(static_cast<std::size_t>(degree_), Rat(0));
    cur[0] = 1;
    powers_.push_back(cur);
    for (std::int64_t k = 1; k < span; ++k) {
        // cur <- x * cur mod cyclo
        std::vector<Rat> next(static_cast<std::size_t>(degree_), Rat(0));
        for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
        const Rat top = cur[static_cast<std::size_t>(degree_ - 1)];
        if (top != 0) {
            for (int i = 0; i < degree_; ++i) next[i] -= top * Rat(cyclo[static_cast<std::size_t>(i)]);
        }
        powers_.push_back(next);
        cur = std::move(next);
    }
}

const std::vector<Rat>& CycField::power(std::int64_t k) const {
    return powers_.at(static_cast<std::size_t>(k));
}

CycFieldPtr make_cyc_field(std::int64_t conductor) {
    return std::make_shared<CycField>(conductor);
}

Cyc Cyc::zero(const CycFieldPtr& field) {
    return Cyc(field, std::vector<Rat>(static_cast<std::size_t>(field->degree()), Rat(0)));
}

Cyc Cyc::from_rational(const CycFieldPtr& field, const Rat& r) {
    auto c = std::vector<Rat>(static_cast<std::size_t>(field->degree()), Rat(0));
    c[0] = r;
    return Cyc(field, std::move(c));
}

Cyc Cyc::from_phase(const CycFieldPtr& field, const Phase& p) {
    const std::int64_t n = field->conductor();
    if (n % p.den() != 0)
        throw std::invalid_argument("Cyc::from_phase: conductor " + std::to_string(n) +
                                    " does not contain a phase of order " + std::to_string(p.den()));
    const std::int64_t e = p.num() * (n / p.den());
    return Cyc(field, field->power(e));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    auto c = c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-(const Cyc& o) const {
    auto c = c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator-() const {
    auto c = c_;
    for (auto& x : c) x = -x;
    return Cyc(field_, std::move(c));
}

Cyc Cyc::operator*(const Cyc& o) const {
    const int d = field_->degree();
    std::vector<Rat> conv(static_cast<std::size_t>(2 * d - 1), Rat(0));
    for (int i = 0; i < d; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
            conv[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Rat> out(static_cast<std::size_t>(d), Rat(0));
    for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(k)] = conv[static_cast<std::size_t>(k)];
    for (int k = d; k < 2 * d - 1; ++k) {
        if (conv[static_cast<std::size_t>(k)] == 0) continue;
        const auto& red = field_->power(k);
        for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += conv[static_cast<std::size_t>(k)] * red[static_cast<std::size_t>(i)];
    }
    return Cyc(field_, std::move(out));
}

namespace {

using RatPoly = std::vector<Rat>;

void rtrim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly poly_rem(RatPoly num, const RatPoly& den) {
    while (num.size() >= den.size() && !num.empty()) {
        const Rat q = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        rtrim(num);
    }
    return num;
}

RatPoly poly_quot(RatPoly num, const RatPoly& den) {
    RatPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        const Rat q = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        quot[shift] = q;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        rtrim(num);
    }
    return quot;
}

RatPoly poly_sub_mul(RatPoly a, const RatPoly& q, const RatPoly& b) {
    // a - q*b
    if (!q.empty() && !b.empty()) {
        a.resize(std::max(a.size(), q.size() + b.size() - 1), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
        }
    }
    rtrim(a);
    return a;
}

}  // namespace

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse: zero element");
    const int d = field_->degree();
    // extended Euclid against the (irreducible) cyclotomic polynomial
    RatPoly r0 = field_->modulus();
    RatPoly r1(c_.begin(), c_.end());
    rtrim(r1);
    RatPoly t0, t1 = {Rat(1)};
    while (!r1.empty()) {
        RatPoly q = poly_quot(r0, r1);
        RatPoly r2 = poly_rem(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        RatPoly t2 = poly_sub_mul(std::move(t0), q, t1);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("Cyc::inverse: gcd is not a unit");
    std::vector<Rat> out(static_cast<std::size_t>(d), Rat(0));
    for (std::size_t i = 0; i < t0.size(); ++i) out[i] = t0[i] / r0[0];
    return Cyc(field_, std::move(out));
}

bool Cyc::operator==(const Cyc& o) const {
    if (field_->conductor() != o.field_->conductor()) {
        const std::int64_t common =
            std::lcm(field_->conductor(), o.field_->conductor());
        auto f = make_cyc_field(common);
        return lift_to(f) == o.lift_to(f);
    }
    return c_ == o.c_;
}

Cyc Cyc::lift_to(const CycFieldPtr& field) const {
    const std::int64_t n0 = field_->conductor();
    const std::int64_t n1 = field->conductor();
    if (n1 % n0 != 0) throw std::invalid_argument("Cyc::lift_to: conductor is not a multiple");
    const std::int64_t step = n1 / n0;
    Cyc out = Cyc::zero(field);
    for (int i = 0; i < field_->degree(); ++i) {
        const Rat& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const auto& red = field->power(i * step);
        for (int j = 0; j < field->degree(); ++j)
            out.c_[static_cast<std::size_t>(j)] += a * red[static_cast<std::size_t>(j)];
    }
    return out;
}

std::string Cyc::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

int cyc_rank(CycMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    int rank = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const Cyc inv = m[pivot_row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] *= inv;
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const Cyc f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Cyc>> cyc_kernel(CycMatrix m, const CycFieldPtr& field) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    if (cols == 0) return {};
    const std::size_t rows = m.size();
    std::vector<std::int64_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const Cyc inv = m[pivot_row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[pivot_row][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col].is_zero()) continue;
            const Cyc f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[pivot_row][j];
        }
        pivot_col_of_row.push_back(static_cast<std::int64_t>(col));
        is_pivot[col] = true;
        ++pivot_row;
    }
    std::vector<std::vector<Cyc>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Cyc> v(cols, Cyc::zero(field));
        v[free_col] = Cyc::from_rational(field, Rat(1));
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            const auto pc = static_cast<std::size_t>(pivot_col_of_row[r]);
            v[pc] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace nichols
