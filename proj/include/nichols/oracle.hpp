#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "nichols/cyclotomic.hpp"
#include "nichols/ydmodule.hpp"

namespace nichols {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleBudget {
    std::int64_t max_tensors = 10000;
};

// element of the n-th tensor power, sparse over the lexicographic basis of
// tuples of module basis vectors (first factor most significant)
struct TensorElement {
    int degree = 0;
    std::map<std::int64_t, Cyc> coeff;

    bool is_zero() const {
        for (const auto& [k, c] : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
};

// column-major sparse matrix over the cyclotomic field
struct SparseCycMatrix {
    std::int64_t size = 0;
    CycFieldPtr field;
    std::vector<std::map<std::int64_t, Cyc>> cols;
};

// smallest conductor containing every scalar produced by the module: action
// coefficients of all group elements and all cocycle values
std::int64_t module_conductor(const YDModule& v);

std::int64_t tensor_dim(const YDModule& v, int degree, const OracleBudget& budget);

// the i-th braid generator on the n-fold left-bracketed tensor power;
// 1 <= i <= n-1
MonomialMatrix braid_generator(const YDModule& v, int n, int i,
                               const OracleBudget& budget = {});
CycMatrix braiding_matrix(const YDModule& v, int n, int i, const CycFieldPtr& field,
                          const OracleBudget& budget = {});

// sum over S_n of the braid-group lifts along reduced words
SparseCycMatrix symmetrizer(const YDModule& v, int n, const OracleBudget& budget = {});

struct SymmetrizerReport {
    int degree = 0;
    std::int64_t rank = 0;
    std::int64_t kernel_dim = 0;
    std::int64_t graded_dim = 0;
};

SymmetrizerReport graded_dim(const YDModule& v, int n, const OracleBudget& budget = {});

std::vector<std::int64_t> hilbert_series_oracle(const YDModule& v, int max_degree,
                                                const OracleBudget& budget = {});

// basis vector k as a degree-1 element
TensorElement tensor_basis_element(const YDModule& v, int k);

TensorElement tensor_scale(const CycFieldPtr& field, const Phase& s, const TensorElement& t);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_sub(const TensorElement& a, const TensorElement& b);

// g |> t on the n-fold left-bracketed power
TensorElement tensor_action(const YDModule& v, const GroupElement& g, const TensorElement& t);

// ad_x(y) = x y - (deg(x) |> y) x with left-bracketed products; x must be
// homogeneous of tensor degree 1
TensorElement braided_adjoint(const YDModule& v, const TensorElement& x, const TensorElement& y);

// true iff the quantum symmetrizer of the element's degree kills it
bool in_nichols_ideal(const YDModule& v, const TensorElement& x, const OracleBudget& budget = {});

std::vector<Cyc> apply_sparse(const SparseCycMatrix& m, const TensorElement& x);

}  // namespace nichols
