#include "nichols/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace nichols {

namespace {

std::vector<int> decode_tuple(std::int64_t index, int dim, int n) {
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int p = n; p-- > 0;) {
        k[static_cast<std::size_t>(p)] = static_cast<int>(index % dim);
        index /= dim;
    }
    return k;
}

std::int64_t encode_tuple(const std::vector<int>& k, int dim) {
    std::int64_t index = 0;
    for (const int v : k) index = index * dim + v;
    return index;
}

// action matrices of every group element, indexed by element index
std::vector<MonomialMatrix> all_actions(const YDModule& v) {
    std::vector<MonomialMatrix> acts;
    const auto elems = v.group().all_elements();
    acts.reserve(elems.size());
    for (const auto& e : elems) acts.push_back(v.action(e));
    return acts;
}

}  // namespace

std::int64_t module_conductor(const YDModule& v) {
    std::int64_t n = 1;
    for (const auto& act : all_actions(v))
        for (const auto& p : act.coeff) n = std::lcm(n, p.den());
    const auto elems = v.group().all_elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) n = std::lcm(n, v.cocycle()->eval(a, b, c).den());
    return n;
}

std::int64_t tensor_dim(const YDModule& v, int degree, const OracleBudget& budget) {
    if (degree < 0) throw std::invalid_argument("tensor_dim: negative degree");
    std::int64_t size = 1;
    for (int i = 0; i < degree; ++i) {
        size *= v.dim();
        if (size > budget.max_tensors)
            throw BudgetExceeded("tensor power of dimension " + std::to_string(v.dim()) + "^" +
                                 std::to_string(degree) + " exceeds the budget of " +
                                 std::to_string(budget.max_tensors) + " basis tensors");
    }
    return size;
}

MonomialMatrix braid_generator(const YDModule& v, int n, int i, const OracleBudget& budget) {
    if (i < 1 || i >= n) throw std::invalid_argument("braid_generator: position out of range");
    const std::int64_t size = tensor_dim(v, n, budget);
    const int dim = v.dim();
    const auto& g = v.group();
    const auto& phi = *v.cocycle();

    std::map<std::int64_t, MonomialMatrix> acts;
    auto action_of = [&](const GroupElement& e) -> const MonomialMatrix& {
        const auto idx = g.index_of(e);
        auto it = acts.find(idx);
        if (it == acts.end()) it = acts.emplace(idx, v.action(e)).first;
        return it->second;
    };

    MonomialMatrix out;
    out.row.resize(static_cast<std::size_t>(size));
    out.coeff.resize(static_cast<std::size_t>(size));
    for (std::int64_t t = 0; t < size; ++t) {
        auto k = decode_tuple(t, dim, n);
        const int a = k[static_cast<std::size_t>(i - 1)];
        const int b = k[static_cast<std::size_t>(i)];
        const auto& u = v.degrees()[static_cast<std::size_t>(a)];
        const auto& w = v.degrees()[static_cast<std::size_t>(b)];
        const auto& act = action_of(u);
        Phase c = act.coeff[static_cast<std::size_t>(b)];
        const int r = act.row[static_cast<std::size_t>(b)];
        if (i > 1) {
            GroupElement prefix = g.identity();
            for (int p = 0; p < i - 1; ++p)
                prefix = g.mul(prefix, v.degrees()[static_cast<std::size_t>(k[static_cast<std::size_t>(p)])]);
            // rebracketing scalars around the elementary braiding
            c *= phi.eval(prefix, w, u) / phi.eval(prefix, u, w);
        }
        k[static_cast<std::size_t>(i - 1)] = r;
        k[static_cast<std::size_t>(i)] = a;
        out.row[static_cast<std::size_t>(t)] = static_cast<int>(encode_tuple(k, dim));
        out.coeff[static_cast<std::size_t>(t)] = c;
    }
    return out;
}

CycMatrix braiding_matrix(const YDModule& v, int n, int i, const CycFieldPtr& field,
                          const OracleBudget& budget) {
    const auto m = braid_generator(v, n, i, budget);
    const auto size = static_cast<std::size_t>(m.dim());
    CycMatrix out(size, std::vector<Cyc>(size, Cyc::zero(field)));
    for (std::size_t j = 0; j < size; ++j)
        out[static_cast<std::size_t>(m.row[j])][j] = Cyc::from_phase(field, m.coeff[j]);
    return out;
}

SparseCycMatrix symmetrizer(const YDModule& v, int n, const OracleBudget& budget) {
    const std::int64_t size = tensor_dim(v, n, budget);
    // the sum ranges over n! braid lifts regardless of the tensor count
    if (n > 8)
        throw BudgetExceeded("symmetrizer at degree " + std::to_string(n) +
                             " needs " + std::to_string(n) + "! braid lifts; degrees above 8 are refused");
    auto field = make_cyc_field(module_conductor(v));

    SparseCycMatrix out;
    out.size = size;
    out.field = field;
    out.cols.resize(static_cast<std::size_t>(size));

    std::vector<MonomialMatrix> sigma;
    for (int i = 1; i < n; ++i) sigma.push_back(braid_generator(v, n, i, budget));

    // lifts along reduced words, extending by one generator at a time
    std::map<std::vector<int>, MonomialMatrix> lifts;
    std::vector<int> id_perm(static_cast<std::size_t>(n));
    std::iota(id_perm.begin(), id_perm.end(), 0);
    lifts.emplace(id_perm, MonomialMatrix::identity(static_cast<int>(size)));
    std::vector<std::vector<int>> frontier{id_perm};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            const auto& lift_w = lifts.at(w);
            for (int i = 0; i + 1 < n; ++i) {
                if (w[static_cast<std::size_t>(i)] >= w[static_cast<std::size_t>(i + 1)]) continue;
                auto ws = w;
                std::swap(ws[static_cast<std::size_t>(i)], ws[static_cast<std::size_t>(i + 1)]);
                if (lifts.count(ws)) continue;
                // right multiplication: the new generator acts first
                lifts.emplace(ws, lift_w.compose(sigma[static_cast<std::size_t>(i)]));
                next.push_back(std::move(ws));
            }
        }
        frontier = std::move(next);
    }

    for (const auto& [w, lift] : lifts) {
        for (std::int64_t j = 0; j < size; ++j) {
            const auto r = lift.row[static_cast<std::size_t>(j)];
            const auto c = Cyc::from_phase(field, lift.coeff[static_cast<std::size_t>(j)]);
            auto& col = out.cols[static_cast<std::size_t>(j)];
            auto it = col.find(r);
            if (it == col.end())
                col.emplace(r, c);
            else
                it->second += c;
        }
    }
    return out;
}

namespace {

// multidegree blocks: tuples with the same multiset of factor degrees
std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> degree_blocks(const YDModule& v,
                                                                             int n,
                                                                             std::int64_t size) {
    const int dim = v.dim();
    const auto& g = v.group();
    std::vector<std::int64_t> deg_id(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) deg_id[static_cast<std::size_t>(k)] = g.index_of(v.degrees()[static_cast<std::size_t>(k)]);
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> blocks;
    for (std::int64_t t = 0; t < size; ++t) {
        const auto tuple = decode_tuple(t, dim, n);
        std::vector<std::int64_t> key;
        key.reserve(tuple.size());
        for (const int k : tuple) key.push_back(deg_id[static_cast<std::size_t>(k)]);
        std::sort(key.begin(), key.end());
        blocks[std::move(key)].push_back(t);
    }
    return blocks;
}

}  // namespace

SymmetrizerReport graded_dim(const YDModule& v, int n, const OracleBudget& budget) {
    SymmetrizerReport report;
    report.degree = n;
    const std::int64_t size = tensor_dim(v, n, budget);
    if (n <= 1) {
        report.rank = size;
        report.kernel_dim = 0;
        report.graded_dim = size;
        return report;
    }
    const auto s = symmetrizer(v, n, budget);

    // the braid generators permute factor degrees, so the symmetrizer is
    // block diagonal over degree multisets
    std::int64_t rank = 0;
    for (const auto& [key, members] : degree_blocks(v, n, size)) {
        std::map<std::int64_t, std::size_t> pos;
        for (std::size_t p = 0; p < members.size(); ++p) pos[members[p]] = p;
        CycMatrix block(members.size(), std::vector<Cyc>(members.size(), Cyc::zero(s.field)));
        for (std::size_t cj = 0; cj < members.size(); ++cj)
            for (const auto& [r, val] : s.cols[static_cast<std::size_t>(members[cj])])
                block[pos.at(r)][cj] = val;
        rank += cyc_rank(std::move(block));
    }
    report.rank = rank;
    report.kernel_dim = size - rank;
    report.graded_dim = rank;
    return report;
}

std::vector<std::int64_t> hilbert_series_oracle(const YDModule& v, int max_degree,
                                                const OracleBudget& budget) {
    std::vector<std::int64_t> out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(graded_dim(v, n, budget).graded_dim);
    return out;
}

TensorElement tensor_basis_element(const YDModule& v, int k) {
    if (k < 0 || k >= v.dim()) throw std::out_of_range("tensor_basis_element");
    TensorElement t;
    t.degree = 1;
    auto field = make_cyc_field(module_conductor(v));
    t.coeff.emplace(k, Cyc::from_rational(field, Rat(1)));
    return t;
}

TensorElement tensor_scale(const CycFieldPtr& field, const Phase& s, const TensorElement& t) {
    TensorElement out;
    out.degree = t.degree;
    const Cyc sc = Cyc::from_phase(field, s);
    for (const auto& [k, c] : t.coeff) out.coeff.emplace(k, sc * c);
    return out;
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
    if (a.degree != b.degree) throw std::invalid_argument("tensor_add: degree mismatch");
    TensorElement out = a;
    for (const auto& [k, c] : b.coeff) {
        auto it = out.coeff.find(k);
        if (it == out.coeff.end())
            out.coeff.emplace(k, c);
        else
            it->second += c;
    }
    return out;
}

TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) {
    TensorElement neg = b;
    for (auto& [k, c] : neg.coeff) c = -c;
    return tensor_add(a, neg);
}

namespace {

CycFieldPtr element_field(const YDModule& v, const TensorElement& t) {
    if (!t.coeff.empty()) return t.coeff.begin()->second.field();
    return make_cyc_field(module_conductor(v));
}

}  // namespace

TensorElement tensor_action(const YDModule& v, const GroupElement& g, const TensorElement& t) {
    const auto field = element_field(v, t);
    const auto act = v.action(g);
    const int dim = v.dim();
    const auto& grp = v.group();

    TensorElement out;
    out.degree = t.degree;
    for (const auto& [index, c] : t.coeff) {
        if (c.is_zero()) continue;
        auto k = decode_tuple(index, dim, t.degree);
        Phase scalar;
        std::vector<int> image(k.size());
        // e |> ((..) (x) last) = Phi~_e(prefix, last) (e |> ..) (x) (e |> last)
        GroupElement prefix = grp.identity();
        for (std::size_t p = 0; p < k.size(); ++p) {
            const auto& d = v.degrees()[static_cast<std::size_t>(k[p])];
            if (p > 0) scalar *= phi_tilde(*v.cocycle(), g, prefix, d);
            prefix = grp.mul(prefix, d);
            scalar *= act.coeff[static_cast<std::size_t>(k[p])];
            image[p] = act.row[static_cast<std::size_t>(k[p])];
        }
        const auto target = encode_tuple(image, dim);
        const Cyc add = Cyc::from_phase(field, scalar) * c;
        auto it = out.coeff.find(target);
        if (it == out.coeff.end())
            out.coeff.emplace(target, add);
        else
            it->second += add;
    }
    return out;
}

TensorElement braided_adjoint(const YDModule& v, const TensorElement& x, const TensorElement& y) {
    if (x.degree != 1) throw std::invalid_argument("braided_adjoint: left argument must have degree 1");
    if (y.degree == 0) return x;
    const auto field = element_field(v, x);
    const int dim = v.dim();
    const auto& g = v.group();

    // common group degree of x
    GroupElement gx = g.identity();
    bool first = true;
    for (const auto& [k, c] : x.coeff) {
        if (c.is_zero()) continue;
        const auto& d = v.degrees()[static_cast<std::size_t>(k)];
        if (first) {
            gx = d;
            first = false;
        } else if (d != gx) {
            throw std::invalid_argument("braided_adjoint: left argument is not homogeneous");
        }
    }

    // x y, moved into the left-bracketed shape; the moves contribute
    // associator scalars Phi(deg x, prefix, next)
    TensorElement prod;
    prod.degree = y.degree + 1;
    std::int64_t stride = 1;
    for (int p = 0; p < y.degree; ++p) stride *= dim;
    for (const auto& [ka, ca] : x.coeff) {
        if (ca.is_zero()) continue;
        const auto& da = v.degrees()[static_cast<std::size_t>(ka)];
        for (const auto& [kb, cb] : y.coeff) {
            if (cb.is_zero()) continue;
            const auto tuple = decode_tuple(kb, dim, y.degree);
            Phase scalar;
            GroupElement prefix = v.degrees()[static_cast<std::size_t>(tuple[0])];
            for (std::size_t p = 1; p < tuple.size(); ++p) {
                const auto& dp = v.degrees()[static_cast<std::size_t>(tuple[p])];
                scalar *= v.cocycle()->eval(da, prefix, dp);
                prefix = g.mul(prefix, dp);
            }
            const std::int64_t target = ka * stride + kb;
            const Cyc add = Cyc::from_phase(field, scalar) * ca * cb;
            auto it = prod.coeff.find(target);
            if (it == prod.coeff.end())
                prod.coeff.emplace(target, add);
            else
                it->second += add;
        }
    }

    // (gx |> y) x
    const auto acted = tensor_action(v, gx, y);
    TensorElement rhs;
    rhs.degree = y.degree + 1;
    for (const auto& [kb, cb] : acted.coeff) {
        if (cb.is_zero()) continue;
        for (const auto& [ka, ca] : x.coeff) {
            if (ca.is_zero()) continue;
            const std::int64_t target = kb * dim + ka;
            const Cyc add = cb * ca;
            auto it = rhs.coeff.find(target);
            if (it == rhs.coeff.end())
                rhs.coeff.emplace(target, add);
            else
                it->second += add;
        }
    }

    return tensor_sub(prod, rhs);
}

bool in_nichols_ideal(const YDModule& v, const TensorElement& x, const OracleBudget& budget) {
    if (x.degree < 2) throw std::invalid_argument("in_nichols_ideal: degree must be at least 2");
    const auto s = symmetrizer(v, x.degree, budget);
    const auto image = apply_sparse(s, x);
    for (const auto& c : image)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<Cyc> apply_sparse(const SparseCycMatrix& m, const TensorElement& x) {
    std::vector<Cyc> out(static_cast<std::size_t>(m.size), Cyc::zero(m.field));
    for (const auto& [col, c] : x.coeff) {
        if (c.is_zero()) continue;
        const Cyc cl = c.field()->conductor() == m.field->conductor() ? c : c.lift_to(m.field);
        for (const auto& [row, val] : m.cols.at(static_cast<std::size_t>(col)))
            out[static_cast<std::size_t>(row)] += val * cl;
    }
    return out;
}

}  // namespace nichols
