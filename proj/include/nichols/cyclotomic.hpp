#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nichols/phase.hpp"

namespace nichols {

using Rat = boost::multiprecision::cpp_rational;

// The cyclotomic field Q(zeta_N).  Elements live over the power basis
// 1, x, ..., x^{phi(N)-1} and are kept reduced modulo the N-th cyclotomic
// polynomial.  One field object is the computation context: all elements
// taking part in an operation must share the conductor.
class CycField {
public:
    explicit CycField(std::int64_t conductor);

    std::int64_t conductor() const { return conductor_; }
    int degree() const { return degree_; }

    // canonical form of x^k, valid for 0 <= k < reduction_span()
    const std::vector<Rat>& power(std::int64_t k) const;
    std::int64_t reduction_span() const { return static_cast<std::int64_t>(powers_.size()); }

    // the N-th cyclotomic polynomial, monic, as rational coefficients
    const std::vector<Rat>& modulus() const { return modulus_; }

    static std::vector<boost::multiprecision::cpp_int> cyclotomic_polynomial(std::int64_t n);

private:
    std::int64_t conductor_;
    int degree_;
    std::vector<Rat> modulus_;
    std::vector<std::vector<Rat>> powers_;
};

using CycFieldPtr = std::shared_ptr<const CycField>;

CycFieldPtr make_cyc_field(std::int64_t conductor);

class Cyc {
public:
    Cyc() = default;

    static Cyc zero(const CycFieldPtr& field);
    static Cyc from_rational(const CycFieldPtr& field, const Rat& r);
    static Cyc from_phase(const CycFieldPtr& field, const Phase& p);

    const CycFieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    // multiplicative inverse; throws std::domain_error on zero
    Cyc inverse() const;

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // lift to a field whose conductor is a multiple of the current one
    Cyc lift_to(const CycFieldPtr& field) const;

    std::string str() const;

private:
    Cyc(CycFieldPtr field, std::vector<Rat> c) : field_(std::move(field)), c_(std::move(c)) {}

    CycFieldPtr field_;
    std::vector<Rat> c_;
};

using CycMatrix = std::vector<std::vector<Cyc>>;

// Rank over the cyclotomic field by exact Gaussian elimination; the pivot in
// each column is the first row with a nonzero entry.  Empty matrices have
// rank 0.
int cyc_rank(CycMatrix m);

// Basis of the right kernel of m (vectors of length = number of columns).
std::vector<std::vector<Cyc>> cyc_kernel(CycMatrix m, const CycFieldPtr& field);

}  // namespace nichols
