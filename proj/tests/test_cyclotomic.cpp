#include <doctest.h>

#include "nichols/cyclotomic.hpp"

using namespace nichols;

namespace {

Cyc cp(const CycFieldPtr& f, const Phase& p) { return Cyc::from_phase(f, p); }
Cyc cr(const CycFieldPtr& f, long num, long den = 1) {
    return Cyc::from_rational(f, Rat(num) / Rat(den));
}

}  // namespace

TEST_CASE("phase embedding is multiplicative") {
    auto f = make_cyc_field(12);
    for (int p = 0; p < 12; ++p)
        for (int q = 0; q < 12; ++q) {
            const Phase a(p, 12), b(q, 12);
            CHECK(cp(f, a) * cp(f, b) == cp(f, a * b));
        }
    // injective on the phases the conductor supports
    for (int p = 0; p < 12; ++p)
        for (int q = p + 1; q < 12; ++q) CHECK(cp(f, Phase(p, 12)) != cp(f, Phase(q, 12)));
}

TEST_CASE("field arithmetic and inverses") {
    for (const auto n : {1, 2, 3, 4, 5, 6, 8, 12}) {
        auto f = make_cyc_field(n);
        for (int k = 0; k < n; ++k) {
            const Cyc x = cp(f, Phase(k, n)) + cr(f, 2);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == cr(f, 1));
        }
    }
}

TEST_CASE("equality after lifting to a common conductor") {
    auto f2 = make_cyc_field(2);
    auto f4 = make_cyc_field(4);
    CHECK(cp(f2, Phase(1, 2)) == cp(f4, Phase(1, 2)));
    CHECK(cp(f2, Phase(1, 2)).lift_to(f4) == cp(f4, Phase(1, 2)));
    CHECK(cp(f4, Phase(1, 4)) != cp(f2, Phase(1, 2)));
}

TEST_CASE("rank: 1x1 matrix of 1 + zeta_2 is zero") {
    auto f = make_cyc_field(2);
    CycMatrix m{{cr(f, 1) + cp(f, Phase(1, 2))}};
    CHECK(cyc_rank(m) == 0);
}

TEST_CASE("rank: identity") {
    auto f = make_cyc_field(4);
    CycMatrix m{{cr(f, 1), cr(f, 0)}, {cr(f, 0), cr(f, 1)}};
    CHECK(cyc_rank(m) == 2);
}

TEST_CASE("rank: proportional rows collapse") {
    auto f = make_cyc_field(4);
    const Cyc i = cp(f, Phase(1, 4));
    CycMatrix m{{cr(f, 1), i}, {i, cr(f, -1)}};
    // second row is zeta_4 times the first
    CHECK(cyc_rank(m) == 1);
}

TEST_CASE("rank: every phase is nonzero") {
    for (const auto n : {2, 3, 5, 8}) {
        auto f = make_cyc_field(n);
        for (int k = 0; k < n; ++k) {
            CycMatrix m{{cp(f, Phase(k, n))}};
            CHECK(cyc_rank(m) == 1);
        }
    }
}

TEST_CASE("rank is invariant under diagonal phase scaling") {
    auto f = make_cyc_field(12);
    const CycMatrix base{
        {cr(f, 1), cp(f, Phase(1, 3)), cr(f, 0)},
        {cp(f, Phase(1, 4)), cr(f, 2), cp(f, Phase(1, 2))},
        {cr(f, 1) + cp(f, Phase(1, 3)), cr(f, 2) * cp(f, Phase(1, 3)) + cp(f, Phase(1, 4)),
         cp(f, Phase(5, 6))},
    };
    const std::vector<Phase> diag{Phase(1, 3), Phase(5, 12), Phase(1, 2)};
    CycMatrix scaled = base;
    for (std::size_t r = 0; r < scaled.size(); ++r)
        for (auto& x : scaled[r]) x *= cp(f, diag[r]);
    CHECK(cyc_rank(base) == cyc_rank(scaled));

    CycMatrix col_scaled = base;
    for (auto& row : col_scaled)
        for (std::size_t c = 0; c < row.size(); ++c) row[c] *= cp(f, diag[c]);
    CHECK(cyc_rank(base) == cyc_rank(col_scaled));
}

TEST_CASE("kernel basis solves the system") {
    auto f = make_cyc_field(4);
    const Cyc i = cp(f, Phase(1, 4));
    CycMatrix m{{cr(f, 1), i, cr(f, 0)}, {i, cr(f, -1), cr(f, 0)}};
    const auto kernel = cyc_kernel(m, f);
    CHECK(kernel.size() == 2);
    for (const auto& v : kernel) {
        for (std::size_t r = 0; r < m.size(); ++r) {
            Cyc acc = Cyc::zero(f);
            for (std::size_t c = 0; c < v.size(); ++c) acc += m[r][c] * v[c];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("empty matrix has rank zero") {
    CHECK(cyc_rank(CycMatrix{}) == 0);
}
