#include "nichols/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nichols {

std::string DynkinDiagram::dot() const {
    std::ostringstream os;
    os << "graph dynkin {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < vertex.size(); ++i)
        os << "  v" << i << " [label=\"" << vertex[i].str() << "\"];\n";
    for (const auto& [i, j, label] : edges)
        os << "  v" << i << " -- v" << j << " [label=\"" << label.str() << "\"];\n";
    os << "}\n";
    return os.str();
}

DynkinDiagram dynkin_diagram(const Bicharacter& b) {
    DynkinDiagram d;
    const int n = b.rank();
    for (int i = 0; i < n; ++i) d.vertex.push_back(b.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Phase tie = b.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                              b.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (!tie.is_one()) d.edges.emplace_back(i, j, tie);
        }
    return d;
}

bool diagrams_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
    if (a.vertex.size() != b.vertex.size() || a.edges.size() != b.edges.size()) return false;
    const int n = static_cast<int>(a.vertex.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::pair<int, int>, Phase> bedges;
    for (const auto& [i, j, l] : b.edges) bedges[{i, j}] = l;
    do {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            ok = a.vertex[static_cast<std::size_t>(i)] == b.vertex[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        for (std::size_t e = 0; ok && e < a.edges.size(); ++e) {
            auto [i, j, l] = a.edges[e];
            int pi = perm[static_cast<std::size_t>(i)];
            int pj = perm[static_cast<std::size_t>(j)];
            if (pi > pj) std::swap(pi, pj);
            auto it = bedges.find({pi, pj});
            ok = it != bedges.end() && it->second == l;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CartanMatrix cartan_matrix(const Bicharacter& b) {
    const int n = b.rank();
    CartanMatrix out;
    out.c.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    out.defined.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), true));
    for (int i = 0; i < n; ++i) {
        out.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        const Phase qii = b.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Phase tie = b.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                              b.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            bool found = false;
            // (m+1)_{q_ii} = 0 iff q_ii != 1 and q_ii^{m+1} = 1
            const std::int64_t bound = qii.order();
            for (std::int64_t m = 0; m <= bound; ++m) {
                const bool qseries_zero = !qii.is_one() && qii.pow(m + 1).is_one();
                const bool tie_killed = (qii.pow(m) * tie).is_one();
                if (qseries_zero || tie_killed) {
                    out.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -m;
                    found = true;
                    break;
                }
            }
            if (!found) out.defined[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = false;
        }
    }
    return out;
}

namespace {

using Key = std::vector<std::int64_t>;

Key state_key(const Bicharacter& b, const std::vector<std::vector<std::int64_t>>& t) {
    Key k;
    for (const auto& row : b.q)
        for (const auto& p : row) {
            k.push_back(p.num());
            k.push_back(p.den());
        }
    for (const auto& row : t)
        for (const auto v : row) k.push_back(v);
    return k;
}

Key matrix_key(const Bicharacter& b) {
    Key k;
    for (const auto& row : b.q)
        for (const auto& p : row) {
            k.push_back(p.num());
            k.push_back(p.den());
        }
    return k;
}

}  // namespace

RootSystem root_system(const Bicharacter& b, const RootSystemCaps& caps) {
    const int n = b.rank();
    RootSystem out;

    struct State {
        Bicharacter q;
        std::vector<std::vector<std::int64_t>> t;  // columns = simple roots in the original basis
    };

    std::vector<std::vector<std::int64_t>> ident(static_cast<std::size_t>(n),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) ident[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

    std::set<Key> seen_states;
    std::set<Key> seen_matrices;
    std::set<std::vector<std::int64_t>> roots;
    std::deque<State> queue;

    auto add_roots = [&](const std::vector<std::vector<std::int64_t>>& t) -> bool {
        // columns are roots of the original bicharacter, up to sign
        for (int j = 0; j < n; ++j) {
            std::vector<std::int64_t> col(static_cast<std::size_t>(n));
            bool nonneg = true, nonpos = true;
            for (int i = 0; i < n; ++i) {
                col[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                nonneg = nonneg && col[static_cast<std::size_t>(i)] >= 0;
                nonpos = nonpos && col[static_cast<std::size_t>(i)] <= 0;
            }
            if (!nonneg && !nonpos) return false;  // not a root system shape
            if (nonpos)
                for (auto& v : col) v = -v;
            roots.insert(std::move(col));
        }
        return true;
    };

    State start{b, ident};
    seen_states.insert(state_key(start.q, start.t));
    seen_matrices.insert(matrix_key(start.q));
    if (!add_roots(start.t)) {
        out.cap_hit = true;
        return out;
    }
    queue.push_back(std::move(start));

    while (!queue.empty()) {
        const State cur = std::move(queue.front());
        queue.pop_front();
        const CartanMatrix cm = cartan_matrix(cur.q);
        if (!cm.all_defined()) {
            // a missing Cartan entry certifies infinitely many roots
            out.finite = false;
            out.cap_hit = false;
            out.objects_visited = static_cast<std::int64_t>(seen_matrices.size());
            out.positive_roots.assign(roots.begin(), roots.end());
            return out;
        }
        for (int i = 0; i < n; ++i) {
            // reflected braiding matrix
            Bicharacter nq = cur.q;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const auto cij = cm.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    const auto cik = cm.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                    nq.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                        cur.q.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                        cur.q.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].pow(-cij) *
                        cur.q.q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].pow(-cik) *
                        cur.q.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].pow(cij * cik);
                }
            // root correspondence: e_j -> e_j - c_ij e_i
            auto nt = cur.t;
            for (int j = 0; j < n; ++j) {
                const auto cij = j == i ? 2 : cm.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int r = 0; r < n; ++r)
                    nt[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                        cur.t[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                        cij * cur.t[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
            }
            auto key = state_key(nq, nt);
            if (!seen_states.insert(std::move(key)).second) continue;
            seen_matrices.insert(matrix_key(nq));
            if (!add_roots(nt) || static_cast<std::int64_t>(roots.size()) > caps.max_roots ||
                static_cast<std::int64_t>(seen_states.size()) > caps.max_objects) {
                out.finite = false;
                out.cap_hit = true;
                out.objects_visited = static_cast<std::int64_t>(seen_matrices.size());
                out.positive_roots.assign(roots.begin(), roots.end());
                return out;
            }
            queue.push_back(State{std::move(nq), std::move(nt)});
        }
    }

    out.finite = true;
    out.cap_hit = false;
    out.objects_visited = static_cast<std::int64_t>(seen_matrices.size());
    out.positive_roots.assign(roots.begin(), roots.end());
    return out;
}

Phase root_phase(const Bicharacter& b, const std::vector<std::int64_t>& alpha) {
    Phase out;
    const int n = b.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out *= b.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].pow(
                alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)]);
    return out;
}

std::vector<std::optional<std::int64_t>> heights(const RootSystem& rs, const Bicharacter& b) {
    std::vector<std::optional<std::int64_t>> out;
    for (const auto& alpha : rs.positive_roots) {
        const Phase q = root_phase(b, alpha);
        if (q.is_one())
            out.push_back(std::nullopt);
        else
            out.push_back(q.order());
    }
    return out;
}

BigInt nichols_dimension(const RootSystem& rs, const std::vector<std::optional<std::int64_t>>& ht) {
    BigInt dim = 1;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        if (!ht[i]) throw std::invalid_argument("nichols_dimension: a root has infinite height");
        dim *= BigInt(*ht[i]);
    }
    return dim;
}

std::vector<BigInt> hilbert_prediction(const RootSystem& rs,
                                       const std::vector<std::optional<std::int64_t>>& ht, int n) {
    std::vector<BigInt> series(static_cast<std::size_t>(n) + 1, BigInt(0));
    series[0] = 1;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        if (!ht[r]) throw std::invalid_argument("hilbert_prediction: a root has infinite height");
        std::int64_t total = 0;
        for (const auto v : rs.positive_roots[r]) total += v;
        std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (int d = 0; d <= n; ++d) {
            if (series[static_cast<std::size_t>(d)] == 0) continue;
            for (std::int64_t k = 0; k < *ht[r] && d + k * total <= n; ++k)
                next[static_cast<std::size_t>(d + k * total)] += series[static_cast<std::size_t>(d)];
        }
        series = std::move(next);
    }
    return series;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Finite: return "finite";
        case Verdict::Infinite: return "infinite";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

FiniteTypeReport is_finite_type(const YDModule& v, const RootSystemCaps& caps) {
    FiniteTypeReport report;
    auto sb = has_standard_basis(v);
    if (!sb) {
        report.standard_basis = false;
        report.verdict = Verdict::Infinite;
        report.certificate = "no standard basis: the cocycle is nonabelian on the support group";
        return report;
    }
    report.standard_basis = true;
    const Bicharacter b = Bicharacter::from_standard_basis(*sb);
    report.basis = std::move(sb);
    RootSystem rs = root_system(b, caps);
    if (!rs.finite) {
        report.verdict = rs.cap_hit ? Verdict::Inconclusive : Verdict::Infinite;
        report.certificate = rs.cap_hit ? "exploration cap exceeded before closure"
                                        : "undefined Cartan entry: unbounded root strings";
        report.roots = std::move(rs);
        return report;
    }
    auto ht = heights(rs, b);
    bool all_finite = true;
    for (const auto& h : ht) all_finite = all_finite && h.has_value();
    if (!all_finite) {
        report.verdict = Verdict::Infinite;
        report.certificate = "a positive root has infinite height";
        report.roots = std::move(rs);
        report.root_heights = std::move(ht);
        return report;
    }
    report.verdict = Verdict::Finite;
    report.certificate = "root system closed with finite heights";
    report.dim_nichols = nichols_dimension(rs, ht);
    report.roots = std::move(rs);
    report.root_heights = std::move(ht);
    return report;
}

BigInt bosonization_dimension(const FiniteTypeReport& report, const FinAbGroup& g) {
    if (report.verdict != Verdict::Finite || !report.dim_nichols)
        throw std::invalid_argument("bosonization_dimension: requires a finite verdict");
    return *report.dim_nichols * BigInt(g.order());
}

}  // namespace nichols
