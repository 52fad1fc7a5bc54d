#pragma once

#include <memory>

#include "nichols/cocycle.hpp"
#include "nichols/ydmodule.hpp"

namespace nichols::fixtures {

// Z2^3 with the cocycle whose only parameter is the triple one; its value on
// (g1^i.., g1^j.., g1^k..) is (-1)^{i1 j2 k3}
inline CocyclePtr z2cubed_cocycle() {
    FinAbGroup g({2, 2, 2});
    return std::make_shared<Cocycle3>(g, std::vector<std::int64_t>{0, 0, 0},
                                      std::vector<std::int64_t>{0, 0, 0},
                                      std::vector<std::int64_t>{1});
}

struct NondiagonalTriple {
    YDModule u, v, w;
};

// The three two-dimensional type (I) simples over Z2^3: degrees e, f, g with
// diagonal actions of two generators and a symmetric swap by the third.
// Structure constants (beta_i, gamma_i) as arguments; the normalized choice
// used by the relation tests is beta2*beta3 = beta1*gamma2 = gamma1*gamma3 = -1.
inline NondiagonalTriple nondiagonal_triple(const CocyclePtr& phi, Phase beta1, Phase gamma1,
                                            Phase beta2, Phase gamma2, Phase beta3, Phase gamma3) {
    const auto& g = phi->group();
    const auto e = g.generator(0);
    const auto f = g.generator(1);
    const auto h = g.generator(2);
    const Phase minus = Phase::minus_one();

    auto scalar2 = [](Phase a, Phase b) {
        MonomialMatrix m = MonomialMatrix::identity(2);
        m.coeff[0] = a;
        m.coeff[1] = b;
        return m;
    };
    auto swap2 = [](Phase a) {
        MonomialMatrix m;
        m.row = {1, 0};
        m.coeff = {a, a};
        return m;
    };

    YDModule u(g, phi, {e, e}, {scalar2(minus, minus), scalar2(beta1, minus * beta1), swap2(gamma1)});
    YDModule v(g, phi, {f, f}, {swap2(gamma2), scalar2(minus, minus), scalar2(beta2, minus * beta2)});
    YDModule w(g, phi, {h, h}, {swap2(gamma3), scalar2(beta3, minus * beta3), scalar2(minus, minus)});
    return NondiagonalTriple{std::move(u), std::move(v), std::move(w)};
}

// the normalization used throughout the degree-2/3 relation checks
inline NondiagonalTriple normalized_triple() {
    const Phase one;
    const Phase minus = Phase::minus_one();
    // beta2*beta3 = -1, beta1*gamma2 = -1, gamma1*gamma3 = -1
    return nondiagonal_triple(z2cubed_cocycle(), one, one, one, minus, minus, minus);
}

// one-dimensional module over a rank <= 3 group with prescribed character
// values on the distinguished generators
inline YDModule diagonal_module(const CocyclePtr& phi, const GroupElement& degree,
                                const std::vector<Phase>& chi) {
    const auto& g = phi->group();
    std::vector<MonomialMatrix> actions;
    for (int l = 0; l < g.rank(); ++l) {
        MonomialMatrix m = MonomialMatrix::identity(1);
        m.coeff[0] = chi[static_cast<std::size_t>(l)];
        actions.push_back(std::move(m));
    }
    return YDModule(g, phi, {degree}, std::move(actions));
}

// rank-1 fixture: a single vector of degree g over Z2, braiding -1
inline YDModule rank1_minus_one() {
    FinAbGroup g({2});
    auto phi = std::make_shared<TrivialCocycle>(g);
    return diagonal_module(phi, g.generator(0), {Phase::minus_one()});
}

// rank-2 A2 pattern with all vertex labels -1 over Z2 x Z2
inline YDModule a2_all_minus_one() {
    FinAbGroup g({2, 2});
    auto phi = std::make_shared<TrivialCocycle>(g);
    auto v1 = diagonal_module(phi, g.generator(0), {Phase::minus_one(), Phase::minus_one()});
    auto v2 = diagonal_module(phi, g.generator(1), {Phase(), Phase::minus_one()});
    return YDModule::direct_sum(v1, v2);
}

// rank-2 A2 pattern with vertex labels zeta_5 and edge zeta_5^{-1} over Z5 x Z5
inline YDModule a2_zeta5() {
    FinAbGroup g({5, 5});
    auto phi = std::make_shared<TrivialCocycle>(g);
    auto v1 = diagonal_module(phi, g.generator(0), {Phase(1, 5), Phase(4, 5)});
    auto v2 = diagonal_module(phi, g.generator(1), {Phase(), Phase(1, 5)});
    return YDModule::direct_sum(v1, v2);
}

// rank-3 A3 pattern with all vertex labels -1 over Z2^3
inline YDModule a3_all_minus_one() {
    FinAbGroup g({2, 2, 2});
    auto phi = std::make_shared<TrivialCocycle>(g);
    const Phase one;
    const Phase m = Phase::minus_one();
    auto v1 = diagonal_module(phi, g.generator(0), {m, m, one});
    auto v2 = diagonal_module(phi, g.generator(1), {one, m, m});
    auto v3 = diagonal_module(phi, g.generator(2), {one, one, m});
    return YDModule::direct_sum(YDModule::direct_sum(v1, v2), v3);
}

// rank-4 cycle with all vertex labels -1 over Z4 x Z4 (the two-summand
// restriction pattern with beta2 = i, beta3 = 1)
inline YDModule four_cycle_all_minus_one() {
    FinAbGroup g({4, 4});
    auto phi = std::make_shared<TrivialCocycle>(g);
    const Phase m = Phase::minus_one();
    const Phase i(1, 4);
    const Phase mi(3, 4);
    const auto f = g.generator(0);
    const auto h = g.generator(1);
    auto y1 = diagonal_module(phi, f, {m, i});
    auto y2 = diagonal_module(phi, f, {m, mi});
    auto z1 = diagonal_module(phi, h, {Phase(), m});
    auto z2 = diagonal_module(phi, h, {m, m});
    return YDModule::direct_sum(YDModule::direct_sum(YDModule::direct_sum(y1, y2), z1), z2);
}

}  // namespace nichols::fixtures
