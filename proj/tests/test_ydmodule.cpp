#include <doctest.h>

#include <memory>

#include "fixtures.hpp"
#include "nichols/dynkin.hpp"
#include "nichols/ydmodule.hpp"

using namespace nichols;

TEST_CASE("simple dimensions from the antisymmetry ratio") {
    auto phi = fixtures::z2cubed_cocycle();
    const auto& g = phi->group();
    CHECK(simple_dimension(*phi, g.generator(0), g.generator(1), g.generator(2)) == 2);

    TrivialCocycle triv(g);
    CHECK(simple_dimension(triv, g.generator(0), g.generator(1), g.generator(2)) == 1);

    FinAbGroup z33({3, 3, 3});
    Cocycle3 c(z33, {0, 0, 0}, {0, 0, 0}, {1});
    CHECK(simple_dimension(c, z33.generator(0), z33.generator(1), z33.generator(2)) == 3);
}

TEST_CASE("the nondiagonal two-dimensional fixtures are valid modules") {
    // construction verifies the projective representation law exhaustively
    const auto t = fixtures::normalized_triple();
    CHECK(t.u.dim() == 2);
    CHECK(t.v.dim() == 2);
    CHECK(t.w.dim() == 2);
    CHECK(classify_simple(t.u) == SimpleType::TypeI);
    CHECK(classify_simple(t.v) == SimpleType::TypeI);
    CHECK(classify_simple(t.w) == SimpleType::TypeI);
}

TEST_CASE("make_simple over the triple cocycle on Z2^3") {
    auto phi = fixtures::z2cubed_cocycle();
    const auto& g = phi->group();
    SimpleYDSpec spec;
    spec.degree = g.generator(0);
    spec.context = {g.generator(0), g.generator(1), g.generator(2)};
    spec.alpha = Phase::minus_one();
    const auto mod = make_simple(phi, spec);
    CHECK(mod.dim() == 2);
    CHECK(classify_simple(mod) == SimpleType::TypeI);
    // cyclic action of the third generator
    const auto act = mod.action(g.generator(2));
    CHECK(act.row == std::vector<int>{1, 0});
}

TEST_CASE("make_simple over the triple cocycle on Z3^3") {
    FinAbGroup g({3, 3, 3});
    auto phi = std::make_shared<Cocycle3>(g, std::vector<std::int64_t>{0, 0, 0},
                                          std::vector<std::int64_t>{0, 0, 0},
                                          std::vector<std::int64_t>{1});
    SimpleYDSpec spec;
    spec.degree = g.generator(0);
    spec.context = {g.generator(0), g.generator(1), g.generator(2)};
    const auto mod = make_simple(phi, spec);
    CHECK(mod.dim() == 3);
    const auto act = mod.action(g.generator(2));
    CHECK(act.row == std::vector<int>{1, 2, 0});
}

TEST_CASE("make_simple validates structure constants") {
    auto phi = fixtures::z2cubed_cocycle();
    const auto& g = phi->group();
    SimpleYDSpec spec;
    spec.degree = g.generator(0);
    spec.context = {g.generator(0), g.generator(1), g.generator(2)};
    spec.alpha = Phase(1, 4);  // alpha^2 = -1 but the constraint demands alpha^2 = 1
    CHECK_THROWS_AS(make_simple(phi, spec), std::invalid_argument);

    SimpleYDSpec bad_ctx;
    bad_ctx.degree = g.generator(1);
    bad_ctx.context = {g.generator(0), g.generator(1), g.generator(2)};
    CHECK_THROWS_AS(make_simple(phi, bad_ctx), std::invalid_argument);
}

TEST_CASE("explicit actions violating the law are rejected") {
    auto phi = fixtures::z2cubed_cocycle();
    const auto& g = phi->group();
    MonomialMatrix bad = MonomialMatrix::identity(2);
    bad.coeff[0] = Phase(1, 4);  // order 4 scalar for an order 2 generator
    bad.coeff[1] = Phase(1, 4);
    MonomialMatrix id2 = MonomialMatrix::identity(2);
    CHECK_THROWS_AS(YDModule(g, phi, {g.generator(0), g.generator(0)}, {bad, id2, id2}),
                    std::invalid_argument);
}

TEST_CASE("classification of simples") {
    // diagonal
    FinAbGroup z2({2});
    auto triv = std::make_shared<TrivialCocycle>(z2);
    CHECK(classify_simple(fixtures::diagonal_module(triv, z2.generator(0), {Phase::minus_one()})) ==
          SimpleType::Diagonal);

    // dim 2 with a fourth root of unity: outside both finite families
    FinAbGroup z43({4, 4, 4});
    auto c2 = std::make_shared<Cocycle3>(z43, std::vector<std::int64_t>{0, 0, 0},
                                         std::vector<std::int64_t>{0, 0, 0},
                                         std::vector<std::int64_t>{2});
    SimpleYDSpec spec;
    spec.degree = z43.generator(0);
    spec.context = {z43.generator(0), z43.generator(1), z43.generator(2)};
    spec.alpha = Phase(1, 4);
    const auto mod = make_simple(c2, spec);
    CHECK(mod.dim() == 2);
    CHECK(classify_simple(mod) == SimpleType::Infinite);

    // dim 2 with a cube root: the second finite family
    FinAbGroup z63({6, 6, 6});
    auto c3 = std::make_shared<Cocycle3>(z63, std::vector<std::int64_t>{0, 0, 0},
                                         std::vector<std::int64_t>{0, 0, 0},
                                         std::vector<std::int64_t>{3});
    SimpleYDSpec spec2;
    spec2.degree = z63.generator(0);
    spec2.context = {z63.generator(0), z63.generator(1), z63.generator(2)};
    spec2.alpha = Phase(1, 3);
    const auto mod2 = make_simple(c3, spec2);
    CHECK(mod2.dim() == 2);
    CHECK(classify_simple(mod2) == SimpleType::TypeII);
}

TEST_CASE("standard basis existence matches abelianness of the support") {
    const auto t = fixtures::normalized_triple();
    const auto uvw = YDModule::direct_sum(YDModule::direct_sum(t.u, t.v), t.w);
    CHECK_FALSE(has_standard_basis(uvw).has_value());

    // two summands only: rank-2 support, always abelian
    const auto uv = YDModule::direct_sum(t.u, t.v);
    const auto sb = has_standard_basis(uv);
    REQUIRE(sb.has_value());
    CHECK(sb->vectors.size() == 4);
    CHECK(sb->q.size() == 4);
}

TEST_CASE("standard basis of a diagonal sum reads off the generator actions") {
    const auto mod = fixtures::a2_all_minus_one();
    const auto sb = has_standard_basis(mod);
    REQUIRE(sb.has_value());
    REQUIRE(sb->q.size() == 2);
    CHECK(sb->q[0][0] == Phase::minus_one());
    CHECK(sb->q[1][1] == Phase::minus_one());
    CHECK(sb->q[0][1] * sb->q[1][0] == Phase::minus_one());
}

TEST_CASE("standard basis exists iff the cocycle is abelian on the support") {
    FinAbGroup g({2, 2, 2});
    for (const auto& phi_val : enumerate_cocycles(g)) {
        auto phi = std::make_shared<Cocycle3>(phi_val);
        SimpleYDSpec spec;
        spec.degree = g.generator(0);
        spec.context = {g.generator(0), g.generator(1), g.generator(2)};
        const auto mod = make_simple(phi, spec);
        const bool abelian = is_abelian(*phi, mod.support_group());
        CHECK(has_standard_basis(mod).has_value() == abelian);
    }

    // order-27 sample
    FinAbGroup g3({3, 3, 3});
    const auto cocycles = enumerate_cocycles(g3);
    for (std::size_t i = 0; i < cocycles.size(); i += 13) {
        auto phi = std::make_shared<Cocycle3>(cocycles[i]);
        SimpleYDSpec spec;
        spec.degree = g3.generator(0);
        spec.context = {g3.generator(0), g3.generator(1), g3.generator(2)};
        const auto mod = make_simple(phi, spec);
        const bool abelian = is_abelian(*phi, mod.support_group());
        CHECK(has_standard_basis(mod).has_value() == abelian);
    }
}

TEST_CASE("twisting by the trivial or a symmetric cochain leaves actions alone") {
    const auto mod = fixtures::a2_all_minus_one();
    const auto& g = mod.group();
    const auto t1 = mod.twisted(Cochain2::trivial(g));
    CHECK(t1.gen_actions()[0] == mod.gen_actions()[0]);
    CHECK(t1.gen_actions()[1] == mod.gen_actions()[1]);

    // symmetric cochain: the ratio J(g,x)/J(x,g) cancels
    const auto n = g.order();
    std::vector<Phase> table(static_cast<std::size_t>(n * n));
    const auto id = g.index_of(g.identity());
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            if (a == id || b == id) continue;
            const auto lo = std::min(a, b), hi = std::max(a, b);
            table[static_cast<std::size_t>(a * n + b)] = Phase(lo + hi, 4);
        }
    const auto t2 = mod.twisted(Cochain2(g, std::move(table)));
    CHECK(t2.gen_actions()[0] == mod.gen_actions()[0]);
    CHECK(t2.gen_actions()[1] == mod.gen_actions()[1]);
}

TEST_CASE("change of base relabels degrees through the section") {
    const auto t = fixtures::normalized_triple();
    const auto uvw = YDModule::direct_sum(YDModule::direct_sum(t.u, t.v), t.w);
    const auto hat = hat_group(uvw.group());
    const auto lifted = uvw.change_base(hat);
    CHECK(lifted.group().factors() == std::vector<std::int64_t>{4, 4, 4});
    CHECK(lifted.dim() == uvw.dim());
    for (int j = 0; j < uvw.dim(); ++j)
        CHECK(lifted.degrees()[static_cast<std::size_t>(j)] ==
              hat.section(uvw.degrees()[static_cast<std::size_t>(j)]));
    for (int l = 0; l < 3; ++l)
        CHECK(lifted.gen_actions()[static_cast<std::size_t>(l)] ==
              uvw.gen_actions()[static_cast<std::size_t>(l)]);
}

TEST_CASE("twisting against a solved cochain lands in the plain category") {
    // start over Z2 with the nontrivial abelian cocycle, lift, untwist
    FinAbGroup z2({2});
    auto omega = std::make_shared<Cocycle3>(z2, std::vector<std::int64_t>{1}, std::vector<std::int64_t>{},
                                            std::vector<std::int64_t>{});
    // one-dimensional module of degree g; chi(g)^2 must equal Phi(g,g,g) = -1
    const auto mod = fixtures::diagonal_module(omega, z2.generator(0), {Phase(1, 4)});

    const auto hat = hat_group(z2);
    const auto lifted = mod.change_base(hat);
    PullbackCocycle target(hat.pi, omega);
    const auto j = solve_coboundary(target);
    REQUIRE(j.has_value());
    const auto untwisted = lifted.twisted(j->inverse());
    CHECK(same_cocycle(*untwisted.cocycle(), TrivialCocycle(hat.hat)));
}

TEST_CASE("direct sum requires matching cocycles") {
    FinAbGroup z2({2});
    auto triv = std::make_shared<TrivialCocycle>(z2);
    auto omega = std::make_shared<Cocycle3>(z2, std::vector<std::int64_t>{1}, std::vector<std::int64_t>{},
                                            std::vector<std::int64_t>{});
    const auto a = fixtures::diagonal_module(triv, z2.generator(0), {Phase::minus_one()});
    const auto b = fixtures::diagonal_module(omega, z2.generator(0), {Phase(1, 4)});
    CHECK_THROWS_AS(YDModule::direct_sum(a, b), std::invalid_argument);
}
