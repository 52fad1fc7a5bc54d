#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nichols {

// A root of unity exp(2*pi*i * r), stored as the exponent r = num/den
// reduced to lowest terms with 0 <= num < den.  Multiplication of phases
// is addition of exponents mod 1.
class Phase {
public:
    Phase() : num_(0), den_(1) {}

    Phase(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Phase: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        num %= den;
        if (num < 0) num += den;
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    // zeta(m, k) = exp(2*pi*i*k/m), a primitive m-th root when gcd(k,m)=1.
    static Phase zeta(std::int64_t m, std::int64_t k = 1) { return Phase(k, m); }
    static Phase one() { return Phase(); }
    static Phase minus_one() { return Phase(1, 2); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_one() const { return num_ == 0; }

    // Multiplicative order; the identity has order 1.
    std::int64_t order() const { return den_; }

    Phase operator*(const Phase& o) const {
        const std::int64_t d = den_ * (o.den_ / std::gcd(den_, o.den_));
        return Phase(num_ * (d / den_) + o.num_ * (d / o.den_), d);
    }
    Phase& operator*=(const Phase& o) { return *this = *this * o; }

    Phase inverse() const { return Phase(den_ - num_, den_); }
    Phase operator/(const Phase& o) const { return *this * o.inverse(); }

    Phase pow(std::int64_t k) const {
        const std::int64_t e = ((num_ * (k % den_)) % den_ + den_) % den_;
        return Phase(e, den_);
    }

    bool operator==(const Phase& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Phase& o) const { return !(*this == o); }
    bool operator<(const Phase& o) const {
        // exponent order as rationals in [0,1)
        return num_ * o.den_ < o.num_ * den_;
    }

    // "0" for the identity, "p/q" otherwise.
    std::string str() const {
        if (num_ == 0) return "0";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static std::optional<Phase> parse(std::string_view s);

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline std::optional<Phase> Phase::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    auto to_int = [](std::string_view t, std::int64_t& out) -> bool {
        if (t.empty()) return false;
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-') { neg = true; i = 1; }
        if (i == t.size()) return false;
        std::int64_t v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
            v = v * 10 + (t[i] - '0');
            if (v < 0) return false;
        }
        out = neg ? -v : v;
        return true;
    };
    std::int64_t p = 0, q = 1;
    if (slash == std::string_view::npos) {
        if (!to_int(s, p)) return std::nullopt;
        // integer exponent reduces to the identity
        return Phase(p, 1);
    }
    if (!to_int(s.substr(0, slash), p)) return std::nullopt;
    if (!to_int(s.substr(slash + 1), q) || q == 0) return std::nullopt;
    return Phase(p, q);
}

inline Phase phase_mul(const Phase& a, const Phase& b) { return a * b; }
inline std::int64_t phase_order(const Phase& a) { return a.order(); }

}  // namespace nichols
