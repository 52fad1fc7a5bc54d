#include "nichols/ydmodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nichols {

YDModule::YDModule(FinAbGroup group, CocyclePtr cocycle, std::vector<GroupElement> degrees,
                   std::vector<MonomialMatrix> gen_actions)
    : group_(std::move(group)),
      cocycle_(std::move(cocycle)),
      degrees_(std::move(degrees)),
      gen_actions_(std::move(gen_actions)) {
    if (!cocycle_) throw std::invalid_argument("YDModule: missing cocycle");
    if (cocycle_->group() != group_) throw std::invalid_argument("YDModule: cocycle group mismatch");
    if (degrees_.empty()) throw std::invalid_argument("YDModule: zero-dimensional module");
    for (const auto& d : degrees_) group_.check(d);
    if (static_cast<int>(gen_actions_.size()) != group_.rank())
        throw std::invalid_argument("YDModule: one action matrix per group generator required");
    const int n = dim();
    for (const auto& m : gen_actions_) {
        if (m.dim() != n) throw std::invalid_argument("YDModule: action matrix dimension mismatch");
        for (int j = 0; j < n; ++j) {
            const int r = m.row[static_cast<std::size_t>(j)];
            if (r < 0 || r >= n) throw std::invalid_argument("YDModule: action row out of range");
            if (degrees_[static_cast<std::size_t>(r)] != degrees_[static_cast<std::size_t>(j)])
                throw std::invalid_argument("YDModule: action does not preserve the grading");
        }
    }

    // projective-representation law, exhaustively over all pairs
    const auto elems = group_.all_elements();
    std::vector<MonomialMatrix> acts;
    acts.reserve(elems.size());
    for (const auto& e : elems) acts.push_back(action(e));
    for (std::size_t ie = 0; ie < elems.size(); ++ie)
        for (std::size_t jf = 0; jf < elems.size(); ++jf) {
            const auto ef = group_.mul(elems[ie], elems[jf]);
            const auto& lhs_a = acts[ie];
            const auto& lhs_b = acts[jf];
            const auto& rhs = acts[static_cast<std::size_t>(group_.index_of(ef))];
            for (int j = 0; j < n; ++j) {
                const int mid = lhs_b.row[static_cast<std::size_t>(j)];
                const int lhs_row = lhs_a.row[static_cast<std::size_t>(mid)];
                const Phase lhs_coeff =
                    lhs_b.coeff[static_cast<std::size_t>(j)] * lhs_a.coeff[static_cast<std::size_t>(mid)];
                const Phase factor = phi_tilde(*cocycle_, degrees_[static_cast<std::size_t>(j)], elems[ie], elems[jf]);
                if (lhs_row != rhs.row[static_cast<std::size_t>(j)] ||
                    lhs_coeff != factor * rhs.coeff[static_cast<std::size_t>(j)])
                    throw std::invalid_argument(
                        "YDModule: generator actions violate the projective representation law");
            }
        }
}

MonomialMatrix YDModule::action(const GroupElement& x) const {
    group_.check(x);
    const int n = dim();

    std::vector<int> letters;
    for (int l = 0; l < group_.rank(); ++l)
        for (std::int64_t k = 0; k < x.exp[static_cast<std::size_t>(l)]; ++k) letters.push_back(l);

    MonomialMatrix out = MonomialMatrix::identity(n);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out = gen_actions_[static_cast<std::size_t>(*it)].compose(out);

    // divide out the Phi~_w factors of the canonical word, per degree w
    std::map<GroupElement, Phase> correction;
    for (int j = 0; j < n; ++j) {
        const auto& w = degrees_[static_cast<std::size_t>(j)];
        auto found = correction.find(w);
        if (found == correction.end()) {
            Phase c;
            GroupElement prefix = group_.identity();
            for (std::size_t k = 0; k < letters.size(); ++k) {
                const auto gen = group_.generator(letters[k]);
                if (k > 0) c *= phi_tilde(*cocycle_, w, prefix, gen);
                prefix = group_.mul(prefix, gen);
            }
            found = correction.emplace(w, c).first;
        }
        out.coeff[static_cast<std::size_t>(j)] =
            out.coeff[static_cast<std::size_t>(j)] / found->second;
    }
    return out;
}

std::vector<GroupElement> YDModule::support_generators() const {
    std::vector<GroupElement> out;
    for (const auto& d : degrees_)
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    return out;
}

std::vector<GroupElement> YDModule::support_group() const {
    return generated_subgroup(group_, support_generators());
}

YDModule YDModule::direct_sum(const YDModule& a, const YDModule& b) {
    if (a.group_ != b.group_) throw std::invalid_argument("direct_sum: base groups differ");
    if (a.cocycle_ != b.cocycle_ && !same_cocycle(*a.cocycle_, *b.cocycle_))
        throw std::invalid_argument("direct_sum: cocycles differ");
    auto degrees = a.degrees_;
    degrees.insert(degrees.end(), b.degrees_.begin(), b.degrees_.end());
    const int na = a.dim();
    std::vector<MonomialMatrix> actions;
    for (int l = 0; l < a.group_.rank(); ++l) {
        MonomialMatrix m = a.gen_actions_[static_cast<std::size_t>(l)];
        const auto& mb = b.gen_actions_[static_cast<std::size_t>(l)];
        for (int j = 0; j < b.dim(); ++j) {
            m.row.push_back(mb.row[static_cast<std::size_t>(j)] + na);
            m.coeff.push_back(mb.coeff[static_cast<std::size_t>(j)]);
        }
        actions.push_back(std::move(m));
    }
    return YDModule(a.group_, a.cocycle_, std::move(degrees), std::move(actions));
}

YDModule YDModule::twisted(const Cochain2& j) const {
    if (j.group() != group_) throw std::invalid_argument("twist: cochain group mismatch");
    std::vector<MonomialMatrix> actions = gen_actions_;
    for (int l = 0; l < group_.rank(); ++l) {
        const auto gen = group_.generator(l);
        for (int c = 0; c < dim(); ++c) {
            const auto& x = degrees_[static_cast<std::size_t>(c)];
            actions[static_cast<std::size_t>(l)].coeff[static_cast<std::size_t>(c)] *=
                j.eval(gen, x) / j.eval(x, gen);
        }
    }
    auto twisted_cocycle = std::make_shared<ProductCocycle>(
        cocycle_, std::make_shared<CoboundaryCocycle>(j));
    return YDModule(group_, std::move(twisted_cocycle), degrees_, std::move(actions));
}

YDModule YDModule::change_base(const HatGroup& hat) const {
    if (hat.pi.codomain() != group_) throw std::invalid_argument("change_base: section mismatch");
    std::vector<GroupElement> degrees;
    degrees.reserve(degrees_.size());
    for (const auto& d : degrees_) degrees.push_back(hat.section(d));
    auto lifted_cocycle = std::make_shared<PullbackCocycle>(hat.pi, cocycle_);
    return YDModule(hat.hat, std::move(lifted_cocycle), std::move(degrees), gen_actions_);
}

std::int64_t simple_dimension(const CocycleEval& phi, const GroupElement& g, const GroupElement& g2,
                              const GroupElement& g3) {
    return antisymmetry_ratio(phi, g, g2, g3).order();
}

namespace {

Phase power_constraint(const CocycleEval& phi, const GroupElement& deg, const GroupElement& h,
                       std::int64_t m) {
    // product of Phi~_deg(h, h^i) for i = 1 .. m-1
    Phase out;
    const auto& g = phi.group();
    GroupElement hi = h;
    for (std::int64_t i = 1; i < m; ++i) {
        out *= phi_tilde(phi, deg, h, hi);
        hi = g.mul(hi, h);
    }
    return out;
}

Phase canonical_root(const Phase& value, std::int64_t k) {
    // the k-th root with least nonnegative exponent
    return Phase(value.num(), value.den() * k);
}

}  // namespace

YDModule make_simple(const CocyclePtr& phi, const SimpleYDSpec& spec) {
    const auto& g = phi->group();
    const int rank = g.rank();
    if (static_cast<int>(spec.context.size()) != rank)
        throw std::invalid_argument("make_simple: context must list all distinguished generators");
    if (rank > 3) throw std::invalid_argument("make_simple: only contexts of rank <= 3 are supported");

    // context is a permutation of the distinguished generators
    std::vector<int> perm;
    for (const auto& c : spec.context) {
        int found = -1;
        for (int l = 0; l < rank; ++l)
            if (c == g.generator(l)) found = l;
        if (found < 0)
            throw std::invalid_argument("make_simple: context entries must be distinguished generators");
        if (std::find(perm.begin(), perm.end(), found) != perm.end())
            throw std::invalid_argument("make_simple: repeated context generator");
        perm.push_back(found);
    }
    if (spec.degree != spec.context[0])
        throw std::invalid_argument("make_simple: degree must be the first context generator");

    const Phase ratio = rank == 3 ? antisymmetry_ratio(*phi, spec.context[0], spec.context[1], spec.context[2])
                                  : Phase::one();
    const std::int64_t n = ratio.order();

    std::vector<std::int64_t> orders;
    for (const auto& c : spec.context) orders.push_back(g.elem_order(c));
    if (orders[static_cast<std::size_t>(rank - 1)] % n != 0)
        throw std::invalid_argument("make_simple: module dimension does not divide the cyclic generator order");

    const Phase p_alpha = power_constraint(*phi, spec.degree, spec.context[0], orders[0]);
    const Phase alpha = spec.alpha.value_or(canonical_root(p_alpha, orders[0]));
    if (alpha.pow(orders[0]) != p_alpha)
        throw std::invalid_argument("make_simple: alpha violates its power constraint");

    Phase beta, gamma;
    if (rank >= 2) {
        const Phase p_beta = power_constraint(*phi, spec.degree, spec.context[1], orders[1]);
        beta = spec.beta.value_or(canonical_root(p_beta, orders[1]));
        if (beta.pow(orders[1]) != p_beta)
            throw std::invalid_argument("make_simple: beta violates its power constraint");
    }
    if (rank == 3) {
        const Phase p_gamma = power_constraint(*phi, spec.degree, spec.context[2], orders[2]);
        const std::int64_t e = orders[2] / n;
        gamma = spec.gamma.value_or(canonical_root(p_gamma, e));
        if (gamma.pow(e) != p_gamma)
            throw std::invalid_argument("make_simple: gamma violates its power constraint");
    }

    // degree action alpha; second generator diagonal with ratio powers; third cyclic
    std::vector<MonomialMatrix> ctx_actions;
    {
        MonomialMatrix m0 = MonomialMatrix::identity(static_cast<int>(n));
        for (auto& c : m0.coeff) c = alpha;
        ctx_actions.push_back(std::move(m0));
    }
    if (rank >= 2) {
        MonomialMatrix m1 = MonomialMatrix::identity(static_cast<int>(n));
        for (std::int64_t i = 0; i < n; ++i) m1.coeff[static_cast<std::size_t>(i)] = beta * ratio.pow(i);
        ctx_actions.push_back(std::move(m1));
    }
    if (rank == 3) {
        MonomialMatrix m2;
        m2.row.resize(static_cast<std::size_t>(n));
        m2.coeff.resize(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) m2.row[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
        m2.coeff[static_cast<std::size_t>(n - 1)] = gamma;
        ctx_actions.push_back(std::move(m2));
    }

    std::vector<MonomialMatrix> gen_actions(static_cast<std::size_t>(rank));
    for (int k = 0; k < rank; ++k) gen_actions[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = ctx_actions[static_cast<std::size_t>(k)];

    std::vector<GroupElement> degrees(static_cast<std::size_t>(n), spec.degree);
    return YDModule(g, phi, std::move(degrees), std::move(gen_actions));
}

const char* simple_type_name(SimpleType t) {
    switch (t) {
        case SimpleType::Diagonal: return "diagonal";
        case SimpleType::TypeI: return "typeI";
        case SimpleType::TypeII: return "typeII";
        case SimpleType::Infinite: return "infinite";
    }
    return "?";
}

SimpleType classify_simple(const YDModule& v) {
    const auto& deg = v.degrees()[0];
    for (const auto& d : v.degrees())
        if (d != deg) throw std::invalid_argument("classify_simple: module is not concentrated in one degree");
    const auto act = v.action(deg);
    for (int j = 0; j < v.dim(); ++j)
        if (act.row[static_cast<std::size_t>(j)] != j || act.coeff[static_cast<std::size_t>(j)] != act.coeff[0])
            throw std::invalid_argument("classify_simple: degree element does not act by a scalar");
    const Phase scalar = act.coeff[0];
    if (v.dim() == 1) return SimpleType::Diagonal;
    if (scalar == Phase::minus_one()) return SimpleType::TypeI;
    if (v.dim() == 2 && scalar.order() == 3) return SimpleType::TypeII;
    return SimpleType::Infinite;
}

namespace {

struct EigenSubspace {
    std::vector<std::vector<Cyc>> basis;  // full-space coordinates
    std::vector<Phase> trail;             // eigenvalue per processed operator
    GroupElement degree;
};

std::vector<Phase> eigen_candidates(const MonomialMatrix& m) {
    const int n = m.dim();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Phase> out;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::int64_t len = 0;
        Phase prod;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            prod *= m.coeff[static_cast<std::size_t>(cur)];
            cur = m.row[static_cast<std::size_t>(cur)];
            ++len;
        } while (cur != start);
        for (std::int64_t k = 0; k < len; ++k)
            out.push_back(Phase(prod.num() + k * prod.den(), len * prod.den()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::optional<StandardBasis> has_standard_basis(const YDModule& v) {
    const auto support = v.support_group();
    if (!is_abelian(*v.cocycle(), support)) return std::nullopt;

    const auto gens = v.support_generators();
    std::vector<MonomialMatrix> ops;
    std::vector<std::vector<Phase>> cands;
    std::int64_t conductor = 1;
    for (const auto& d : gens) {
        auto m = v.action(d);
        auto c = eigen_candidates(m);
        for (const auto& p : c) conductor = std::lcm(conductor, p.den());
        for (const auto& p : m.coeff) conductor = std::lcm(conductor, p.den());
        ops.push_back(std::move(m));
        cands.push_back(std::move(c));
    }
    auto field = make_cyc_field(conductor);
    const int n = v.dim();

    // start from the degree components, in order of first basis index
    std::vector<EigenSubspace> subs;
    {
        std::map<std::int64_t, std::size_t> block_of;
        for (int j = 0; j < n; ++j) {
            const auto key = v.group().index_of(v.degrees()[static_cast<std::size_t>(j)]);
            auto it = block_of.find(key);
            if (it == block_of.end()) {
                it = block_of.emplace(key, subs.size()).first;
                subs.push_back(EigenSubspace{{}, {}, v.degrees()[static_cast<std::size_t>(j)]});
            }
            std::vector<Cyc> e(static_cast<std::size_t>(n), Cyc::zero(field));
            e[static_cast<std::size_t>(j)] = Cyc::from_rational(field, Rat(1));
            subs[it->second].basis.push_back(std::move(e));
        }
    }

    for (std::size_t oi = 0; oi < ops.size(); ++oi) {
        const auto& m = ops[oi];
        std::vector<EigenSubspace> refined;
        for (auto& sub : subs) {
            const std::size_t k = sub.basis.size();
            // images under the operator
            std::vector<std::vector<Cyc>> images(k, std::vector<Cyc>(static_cast<std::size_t>(n), Cyc::zero(field)));
            for (std::size_t b = 0; b < k; ++b)
                for (int j = 0; j < n; ++j) {
                    if (sub.basis[b][static_cast<std::size_t>(j)].is_zero()) continue;
                    const int r = m.row[static_cast<std::size_t>(j)];
                    images[b][static_cast<std::size_t>(r)] +=
                        sub.basis[b][static_cast<std::size_t>(j)] *
                        Cyc::from_phase(field, m.coeff[static_cast<std::size_t>(j)]);
                }
            std::size_t found = 0;
            for (const auto& lambda : cands[oi]) {
                const Cyc lam = Cyc::from_phase(field, lambda);
                // rows: coordinates, cols: basis combination coefficients
                CycMatrix a(static_cast<std::size_t>(n), std::vector<Cyc>(k, Cyc::zero(field)));
                for (std::size_t b = 0; b < k; ++b)
                    for (int j = 0; j < n; ++j)
                        a[static_cast<std::size_t>(j)][b] =
                            images[b][static_cast<std::size_t>(j)] - lam * sub.basis[b][static_cast<std::size_t>(j)];
                const auto kernel = cyc_kernel(std::move(a), field);
                if (kernel.empty()) continue;
                EigenSubspace next;
                next.degree = sub.degree;
                next.trail = sub.trail;
                next.trail.push_back(lambda);
                for (const auto& x : kernel) {
                    std::vector<Cyc> vec(static_cast<std::size_t>(n), Cyc::zero(field));
                    for (std::size_t b = 0; b < k; ++b) {
                        if (x[b].is_zero()) continue;
                        for (int j = 0; j < n; ++j)
                            vec[static_cast<std::size_t>(j)] += x[b] * sub.basis[b][static_cast<std::size_t>(j)];
                    }
                    next.basis.push_back(std::move(vec));
                }
                found += next.basis.size();
                refined.push_back(std::move(next));
            }
            if (found != k)
                throw std::logic_error("has_standard_basis: support action is not diagonalizable");
        }
        subs = std::move(refined);
    }

    StandardBasis sb;
    sb.field = field;
    for (const auto& sub : subs)
        for (const auto& vec : sub.basis) {
            // normalize so the first nonzero coordinate is 1
            std::size_t lead = 0;
            while (lead < vec.size() && vec[lead].is_zero()) ++lead;
            const Cyc inv = vec[lead].inverse();
            std::vector<Cyc> w(vec.size(), Cyc::zero(field));
            for (std::size_t j = 0; j < vec.size(); ++j) w[j] = vec[j] * inv;
            sb.vectors.push_back(std::move(w));
            sb.degrees.push_back(sub.degree);
        }

    // q[i][j] = eigenvalue of the degree of vector i acting on vector j
    const std::size_t count = sb.vectors.size();
    std::vector<std::vector<Phase>> trail_by_vector;
    for (const auto& sub : subs)
        for (std::size_t b = 0; b < sub.basis.size(); ++b) trail_by_vector.push_back(sub.trail);
    sb.q.assign(count, std::vector<Phase>(count));
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t which = 0;
        while (gens[which] != sb.degrees[i]) ++which;
        for (std::size_t j = 0; j < count; ++j) sb.q[i][j] = trail_by_vector[j][which];
    }
    return sb;
}

}  // namespace nichols
