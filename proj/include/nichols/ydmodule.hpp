#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nichols/cocycle.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/group.hpp"
#include "nichols/phase.hpp"

namespace nichols {

// square monomial matrix: one nonzero phase per column
struct MonomialMatrix {
    std::vector<int> row;
    std::vector<Phase> coeff;

    int dim() const { return static_cast<int>(row.size()); }

    static MonomialMatrix identity(int n) {
        MonomialMatrix m;
        m.row.resize(static_cast<std::size_t>(n));
        m.coeff.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m.row[static_cast<std::size_t>(i)] = i;
        return m;
    }

    // (*this) applied after rhs
    MonomialMatrix compose(const MonomialMatrix& rhs) const {
        MonomialMatrix out;
        const int n = dim();
        out.row.resize(static_cast<std::size_t>(n));
        out.coeff.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const int mid = rhs.row[static_cast<std::size_t>(j)];
            out.row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(mid)];
            out.coeff[static_cast<std::size_t>(j)] =
                rhs.coeff[static_cast<std::size_t>(j)] * coeff[static_cast<std::size_t>(mid)];
        }
        return out;
    }

    bool operator==(const MonomialMatrix& o) const { return row == o.row && coeff == o.coeff; }
};

// G-graded space with per-generator monomial actions.  Construction verifies
// that actions preserve the grading and satisfy the projective-representation
// law e |> (f |> v) = Phi~_x(e, f) (ef) |> v on every degree-x component,
// exhaustively over G x G.
class YDModule {
public:
    YDModule(FinAbGroup group, CocyclePtr cocycle, std::vector<GroupElement> degrees,
             std::vector<MonomialMatrix> gen_actions);

    const FinAbGroup& group() const { return group_; }
    const CocyclePtr& cocycle() const { return cocycle_; }
    const std::vector<GroupElement>& degrees() const { return degrees_; }
    const std::vector<MonomialMatrix>& gen_actions() const { return gen_actions_; }
    int dim() const { return static_cast<int>(degrees_.size()); }

    // action of an arbitrary element, derived from the generator actions by
    // the canonical factorization g_1^{a_1} ... g_n^{a_n} with Phi~ corrections
    MonomialMatrix action(const GroupElement& x) const;

    // distinct degrees in order of first appearance
    std::vector<GroupElement> support_generators() const;
    // element set of the support group
    std::vector<GroupElement> support_group() const;

    static YDModule direct_sum(const YDModule& a, const YDModule& b);

    YDModule twisted(const Cochain2& j) const;
    YDModule change_base(const HatGroup& hat) const;

private:
    FinAbGroup group_;
    CocyclePtr cocycle_;
    std::vector<GroupElement> degrees_;
    std::vector<MonomialMatrix> gen_actions_;
};

// dim(V) for the simple module of degree g over a three-generator context:
// the order of Phi~_g(g2,g3) / Phi~_g(g3,g2)
std::int64_t simple_dimension(const CocycleEval& phi, const GroupElement& g, const GroupElement& g2,
                              const GroupElement& g3);

// construction data for a simple module concentrated in one degree
struct SimpleYDSpec {
    GroupElement degree;
    // permutation of the distinguished generators; context[0] must equal degree
    std::vector<GroupElement> context;
    std::optional<Phase> alpha;
    std::optional<Phase> beta;
    std::optional<Phase> gamma;
};

YDModule make_simple(const CocyclePtr& phi, const SimpleYDSpec& spec);

enum class SimpleType { Diagonal, TypeI, TypeII, Infinite };

const char* simple_type_name(SimpleType t);

SimpleType classify_simple(const YDModule& v);

// joint eigenbasis of the support-group action, when it exists
struct StandardBasis {
    CycFieldPtr field;
    std::vector<std::vector<Cyc>> vectors;  // coordinates over the module basis
    std::vector<GroupElement> degrees;      // degree of each eigenvector
    std::vector<std::vector<Phase>> q;      // q[i][j] = action of degrees[i] on vector j
};

std::optional<StandardBasis> has_standard_basis(const YDModule& v);

}  // namespace nichols
