#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nichols/group.hpp"
#include "nichols/phase.hpp"

namespace nichols {

// pointwise evaluator of a normalized 3-cocycle on a finite abelian group
class CocycleEval {
public:
    explicit CocycleEval(FinAbGroup group) : group_(std::move(group)) {}
    virtual ~CocycleEval() = default;

    const FinAbGroup& group() const { return group_; }
    virtual Phase eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const = 0;
    virtual const char* kind() const = 0;

private:
    FinAbGroup group_;
};

using CocyclePtr = std::shared_ptr<const CocycleEval>;

// representative cocycle given by the parameter sequence
// (c_1..c_n, c_12..c_{n-1,n}, c_123..c_{n-2,n-1,n})
class Cocycle3 final : public CocycleEval {
public:
    Cocycle3(FinAbGroup group, std::vector<std::int64_t> c1, std::vector<std::int64_t> c2,
             std::vector<std::int64_t> c3);

    Phase eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const override;
    const char* kind() const override { return "params"; }

    const std::vector<std::int64_t>& c1() const { return c1_; }
    const std::vector<std::int64_t>& c2() const { return c2_; }
    const std::vector<std::int64_t>& c3() const { return c3_; }

    static std::int64_t pair_count(int rank) { return static_cast<std::int64_t>(rank) * (rank - 1) / 2; }
    static std::int64_t triple_count(int rank) {
        return static_cast<std::int64_t>(rank) * (rank - 1) * (rank - 2) / 6;
    }

private:
    std::vector<std::int64_t> c1_, c2_, c3_;
    std::vector<std::int64_t> pair_mod_, triple_mod_;  // gcd bounds per index slot
};

class TrivialCocycle final : public CocycleEval {
public:
    explicit TrivialCocycle(FinAbGroup group) : CocycleEval(std::move(group)) {}
    Phase eval(const GroupElement&, const GroupElement&, const GroupElement&) const override {
        return Phase::one();
    }
    const char* kind() const override { return "trivial"; }
};

class TableCocycle final : public CocycleEval {
public:
    TableCocycle(FinAbGroup group, std::vector<Phase> values);
    static TableCocycle materialize(const CocycleEval& src);

    Phase eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const override;
    const char* kind() const override { return "table"; }

    const std::vector<Phase>& values() const { return values_; }

private:
    std::vector<Phase> values_;
};

// (f*Phi)(a,b,c) = Phi(f(a), f(b), f(c)) on the domain of f
class PullbackCocycle final : public CocycleEval {
public:
    PullbackCocycle(GroupHom hom, CocyclePtr base);

    Phase eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const override;
    const char* kind() const override { return "pullback"; }

    const GroupHom& hom() const { return hom_; }
    const CocyclePtr& base() const { return base_; }

private:
    GroupHom hom_;
    CocyclePtr base_;
};

class ProductCocycle final : public CocycleEval {
public:
    ProductCocycle(CocyclePtr a, CocyclePtr b);

    Phase eval(const GroupElement& x, const GroupElement& y, const GroupElement& z) const override;
    const char* kind() const override { return "product"; }

    const CocyclePtr& lhs() const { return a_; }
    const CocyclePtr& rhs() const { return b_; }

private:
    CocyclePtr a_, b_;
};

// normalized 2-cochain J : G x G -> phases with J(1,g) = J(g,1) = 1
class Cochain2 {
public:
    Cochain2(FinAbGroup group, std::vector<Phase> table);
    static Cochain2 trivial(const FinAbGroup& group);

    const FinAbGroup& group() const { return group_; }
    Phase eval(const GroupElement& a, const GroupElement& b) const;
    const std::vector<Phase>& table() const { return table_; }

    Cochain2 inverse() const;

private:
    FinAbGroup group_;
    std::vector<Phase> table_;
};

// (dJ)(a,b,c) = J(b,c) J(a,bc) J(ab,c)^{-1} J(a,b)^{-1}
class CoboundaryCocycle final : public CocycleEval {
public:
    explicit CoboundaryCocycle(Cochain2 j);

    Phase eval(const GroupElement& a, const GroupElement& b, const GroupElement& c) const override;
    const char* kind() const override { return "coboundary"; }

    const Cochain2& cochain() const { return j_; }

private:
    Cochain2 j_;
};

inline CoboundaryCocycle coboundary(Cochain2 j) { return CoboundaryCocycle(std::move(j)); }
inline PullbackCocycle pullback(CocyclePtr base, GroupHom f) {
    return PullbackCocycle(std::move(f), std::move(base));
}

// Phi~_g(x,y) = Phi(g,x,y) Phi(x,y,g) / Phi(x,g,y)
Phase phi_tilde(const CocycleEval& phi, const GroupElement& g, const GroupElement& x,
                const GroupElement& y);

// Phi~_{g1}(g2,g3) / Phi~_{g1}(g3,g2)
Phase antisymmetry_ratio(const CocycleEval& phi, const GroupElement& g1, const GroupElement& g2,
                         const GroupElement& g3);

// exhaustive check of the normalized 3-cocycle identities over G^4
bool verify_3cocycle(const CocycleEval& phi);

// true iff Phi~_g is symmetric on S for every g in S; S must be a
// multiplication-closed element set
bool is_abelian(const CocycleEval& phi, const std::vector<GroupElement>& subgroup);
bool is_abelian(const CocycleEval& phi);

// all parameter representatives on G, lexicographic in the parameter sequence
std::vector<Cocycle3> enumerate_cocycles(const FinAbGroup& group);

// normalized 2-cochain J with dJ = target, or nullopt when target is not a
// coboundary; solved over exponents mod M with free unknowns pinned to zero
std::optional<Cochain2> solve_coboundary(const CocycleEval& target);

// pointwise equality of two evaluators on the same group
bool same_cocycle(const CocycleEval& a, const CocycleEval& b);

}  // namespace nichols
