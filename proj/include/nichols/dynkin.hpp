#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nichols/phase.hpp"
#include "nichols/ydmodule.hpp"

namespace nichols {

using BigInt = boost::multiprecision::cpp_int;

// diagonal braiding data q_ij
struct Bicharacter {
    std::vector<std::vector<Phase>> q;

    int rank() const { return static_cast<int>(q.size()); }

    static Bicharacter from_standard_basis(const StandardBasis& sb) { return Bicharacter{sb.q}; }
};

// vertices labelled q_ii, edges present iff q_ij q_ji != 1, labelled by it
struct DynkinDiagram {
    std::vector<Phase> vertex;
    std::vector<std::tuple<int, int, Phase>> edges;  // i < j, ordered

    std::string dot() const;
};

DynkinDiagram dynkin_diagram(const Bicharacter& b);
inline DynkinDiagram dynkin_diagram(const StandardBasis& sb) {
    return dynkin_diagram(Bicharacter::from_standard_basis(sb));
}

// equality up to a renumbering of the vertices
bool diagrams_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b);

struct CartanMatrix {
    std::vector<std::vector<std::int64_t>> c;
    std::vector<std::vector<bool>> defined;

    bool all_defined() const {
        for (const auto& row : defined)
            for (bool d : row)
                if (!d) return false;
        return true;
    }
};

// c_ii = 2; c_ij = -min{ m >= 0 : (m+1)_{q_ii} = 0 or q_ii^m q_ij q_ji = 1 },
// undefined when no such m exists
CartanMatrix cartan_matrix(const Bicharacter& b);

struct RootSystemCaps {
    std::int64_t max_objects = 1024;
    std::int64_t max_roots = 512;
};

struct RootSystem {
    bool finite = false;
    bool cap_hit = false;
    std::int64_t objects_visited = 0;
    std::vector<std::vector<std::int64_t>> positive_roots;  // lexicographically sorted
};

// Weyl-groupoid exploration: breadth-first over reflected braiding matrices
// with their root correspondences, accumulating images of the simple roots.
// finite=true only when the exploration closes with every Cartan entry
// defined; an undefined Cartan entry proves infinite (cap_hit=false), while
// an exceeded cap leaves the question open (cap_hit=true).
RootSystem root_system(const Bicharacter& b, const RootSystemCaps& caps = {});

Phase root_phase(const Bicharacter& b, const std::vector<std::int64_t>& alpha);

// ht(alpha) = order of q_alpha when q_alpha != 1; q_alpha = 1 has no finite
// height and is reported as nullopt
std::vector<std::optional<std::int64_t>> heights(const RootSystem& rs, const Bicharacter& b);

BigInt nichols_dimension(const RootSystem& rs, const std::vector<std::optional<std::int64_t>>& ht);

// coefficients of prod_alpha (1 + t^{|a|} + ... + t^{(ht-1)|a|}) up to degree n
std::vector<BigInt> hilbert_prediction(const RootSystem& rs,
                                       const std::vector<std::optional<std::int64_t>>& ht, int n);

enum class Verdict { Finite, Infinite, Inconclusive };

const char* verdict_name(Verdict v);

struct FiniteTypeReport {
    bool standard_basis = false;
    Verdict verdict = Verdict::Inconclusive;
    std::string certificate;
    std::optional<StandardBasis> basis;
    std::optional<RootSystem> roots;
    std::vector<std::optional<std::int64_t>> root_heights;
    std::optional<BigInt> dim_nichols;
};

FiniteTypeReport is_finite_type(const YDModule& v, const RootSystemCaps& caps = {});

// dim B(V) * |G|; requires a finite verdict
BigInt bosonization_dimension(const FiniteTypeReport& report, const FinAbGroup& g);

}  // namespace nichols
