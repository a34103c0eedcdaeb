#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nokw/errors.hpp"
#include "nokw/essential.hpp"
#include "nokw/rootsys.hpp"
#include "nokw/weyl.hpp"
#include "support/wordpoly.hpp"

using namespace nokw;
using nokw::testsupport::brute_force_essential_set;

TEST_CASE("tuple comparisons in both orders") {
    const ExponentTuple a{1, 0, 0}, b{0, 1, 0}, c{0, 0, 2}, d{0, 1, 1};
    CHECK(compare_tuples(a, a, TupleOrder::right_lex) == 0);
    // right_lex: decided at the highest differing index.
    CHECK(compare_tuples(a, b, TupleOrder::right_lex) == -1);
    CHECK(compare_tuples(b, a, TupleOrder::right_lex) == 1);
    CHECK(compare_tuples(d, c, TupleOrder::right_lex) == -1);
    CHECK(compare_tuples(b, d, TupleOrder::right_lex) == -1);
    // opposite order flips every strict verdict.
    CHECK(compare_tuples(a, b, TupleOrder::opposite_right_lex) == 1);
    CHECK(compare_tuples(d, c, TupleOrder::opposite_right_lex) == 1);
    CHECK(compare_tuples(c, c, TupleOrder::opposite_right_lex) == 0);
    CHECK_THROWS_AS(compare_tuples({1, 0}, {1, 0, 0}, TupleOrder::right_lex), invalid_input);
}

TEST_CASE("partition lists are exact and in scan order") {
    RootSystem a2 = RootSystem::make('A', 2);
    auto ea = good_ordering(a2, full_support(a2));
    REQUIRE(ea.roots == std::vector<RootVec>{RootVec{{0, 1}}, RootVec{{1, 0}}, RootVec{{1, 1}}});
    auto parts = kostant_partitions({2, 2}, ea.roots);
    CHECK(parts == std::vector<ExponentTuple>{{0, 0, 2}, {1, 1, 1}, {2, 2, 0}});

    RootSystem b2 = RootSystem::make('B', 2);
    auto eb = good_ordering(b2, full_support(b2));
    REQUIRE(eb.roots == std::vector<RootVec>{RootVec{{0, 1}}, RootVec{{1, 0}}, RootVec{{1, 1}},
                                             RootVec{{1, 2}}});
    auto pb = kostant_partitions({1, 2}, eb.roots);
    CHECK(pb == std::vector<ExponentTuple>{{0, 0, 0, 1}, {1, 0, 1, 0}, {2, 1, 0, 0}});

    CHECK(kostant_partitions({0, 0}, ea.roots) == std::vector<ExponentTuple>{{0, 0, 0}});
    CHECK(kostant_partitions({1, 0}, ea.roots) == std::vector<ExponentTuple>{{0, 1, 0}});
    CHECK(kostant_partitions({-1, 0}, ea.roots).empty());
}

TEST_CASE("partition enumeration is complete, duplicate-free, sorted") {
    RootSystem b2 = RootSystem::make('B', 2);
    auto e = good_ordering(b2, full_support(b2));
    const std::vector<int> nu{3, 4};
    auto parts = kostant_partitions(nu, e.roots);

    std::set<ExponentTuple> seen(parts.begin(), parts.end());
    CHECK(seen.size() == parts.size());
    CHECK(std::is_sorted(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        return compare_tuples(x, y, TupleOrder::opposite_right_lex) < 0;
    }));

    // Independent nested-loop count of the same solution set.
    std::size_t expected = 0;
    for (int m1 = 0; m1 <= 4; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2)
            for (int m3 = 0; m3 <= 3; ++m3)
                for (int m4 = 0; m4 <= 2; ++m4) {
                    std::vector<int> s(2, 0);
                    for (int j = 0; j < 2; ++j)
                        s[j] = m1 * e.roots[0].coords[j] + m2 * e.roots[1].coords[j] +
                               m3 * e.roots[2].coords[j] + m4 * e.roots[3].coords[j];
                    if (s == nu) {
                        ++expected;
                        CHECK(seen.count({m1, m2, m3, m4}) == 1);
                    }
                }
    CHECK(parts.size() == expected);
}

TEST_CASE("essential set of the sl3 adjoint module, frozen") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    auto& m = cache.get(a2, Weight{{1, 1}});
    auto e = good_ordering(a2, full_support(a2));
    auto es = essential_set(m, e);
    const std::vector<ExponentTuple> expected{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                              {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    CHECK(es.tuples == expected);
    CHECK(es.size() == 8);
    // Depth bookkeeping: sum of m_k beta_k.
    for (const auto& t : es.tuples) {
        std::vector<int> depth(2, 0);
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 2; ++j) depth[j] += t[k] * e.roots[k].coords[j];
        CHECK(es.info.at(t).depth == depth);
    }
    // Scan ranks are distinct and start at zero.
    std::set<long> ranks;
    for (const auto& [t, inf] : es.info) ranks.insert(inf.scan_rank);
    CHECK(ranks.size() == es.size());
    CHECK(*ranks.begin() == 0);
}

TEST_CASE("essential sets match the word-polynomial oracle") {
    struct Case { char s; int n; std::vector<long> lambda; };
    const Case cases[] = {{'A', 1, {3}}, {'A', 2, {1, 1}}, {'A', 2, {1, 0}},
                          {'A', 2, {2, 1}}, {'B', 2, {1, 0}}, {'B', 2, {1, 1}}};
    for (const auto& c : cases) {
        CAPTURE(c.s);
        CAPTURE(c.lambda);
        RootSystem rs = RootSystem::make(c.s, c.n);
        Weight lambda{c.lambda};
        auto e = good_ordering(rs, rs.support(lambda));
        HighestWeightModule m(rs, lambda);
        auto es = essential_set(m, e);
        auto oracle = brute_force_essential_set(rs, lambda, e);
        CHECK(es.tuples == oracle);
        CHECK(Int(static_cast<long>(es.size())) == rs.weyl_dim(lambda));
    }
}

TEST_CASE("essential set size equals the module dimension") {
    RootSystem a2 = RootSystem::make('A', 2);
    HighestWeightModule m(a2, Weight{{2, 1}});
    auto es = essential_set(m, good_ordering(a2, full_support(a2)));
    CHECK(es.size() == 15);
    CHECK(std::is_sorted(es.tuples.begin(), es.tuples.end(), [](const auto& x, const auto& y) {
        return compare_tuples(x, y, TupleOrder::right_lex) < 0;
    }));
}

TEST_CASE("single-tuple membership agrees with the full scan") {
    for (auto [s, n] : {std::pair<char, int>{'A', 2}, {'B', 2}}) {
        RootSystem rs = RootSystem::make(s, n);
        Weight rho = rs.rho();
        auto e = good_ordering(rs, full_support(rs));
        HighestWeightModule scan_module(rs, rho);
        auto es = essential_set(scan_module, e);
        HighestWeightModule probe_module(rs, rho);
        scan_module.build_all();
        for (const auto& depth : scan_module.weight_depths())
            for (const auto& t : kostant_partitions(depth, e.roots))
                CHECK(is_essential(probe_module, e, t) == es.contains(t));
    }
}

TEST_CASE("level slices of the graded monoid") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    auto e = good_ordering(a2, full_support(a2));
    auto g1 = gamma_level(cache, a2, Weight{{1, 0}}, e, 1);
    CHECK(g1.level == 1);
    CHECK(g1.points.size() == 3);
    auto g3 = gamma_level(cache, a2, Weight{{1, 0}}, e, 3);
    CHECK(g3.level == 3);
    CHECK(g3.points.size() == 10); // dim V(3 omega_1) for sl3
    CHECK(g3.points.lambda.coords == std::vector<long>{3, 0});
    CHECK_THROWS_AS(gamma_level(cache, a2, Weight{{1, 0}}, e, 0), invalid_input);
}

TEST_CASE("monoid inclusion and Minkowski equality for sl3") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    auto e = good_ordering(a2, full_support(a2));
    auto es1 = essential_set(cache.get(a2, Weight{{1, 0}}), e);
    auto es2 = essential_set(cache.get(a2, Weight{{0, 1}}), e);
    auto esr = essential_set(cache.get(a2, Weight{{1, 1}}), e);
    auto es2r = essential_set(cache.get(a2, Weight{{2, 2}}), e);

    CHECK(check_monoid_inclusion(es1, es2, esr).empty());
    CHECK(check_monoid_inclusion(esr, esr, es2r).empty());
    CHECK(minkowski_equality(es1, es2, esr));
    CHECK(minkowski_equality(esr, esr, es2r));

    // A set in a smaller parabolic frame cannot be combined with these.
    auto narrow = essential_set(cache.get(a2, Weight{{1, 0}}), good_ordering(a2, {0}));
    CHECK_THROWS_AS(check_monoid_inclusion(narrow, es2, esr), invalid_input);
    CHECK_THROWS_AS(minkowski_equality(narrow, es2, esr), invalid_input);
}

TEST_CASE("module support must lie inside the enumeration frame") {
    RootSystem a2 = RootSystem::make('A', 2);
    HighestWeightModule m(a2, Weight{{1, 1}});
    CHECK_THROWS_AS(essential_set(m, good_ordering(a2, {0})), invalid_input);
    HighestWeightModule fund(a2, Weight{{0, 1}});
    CHECK_THROWS_AS(essential_set(fund, good_ordering(a2, {0})), invalid_input);
}

TEST_CASE("sparse polynomials and the lowest-term valuation") {
    using Poly = SparseExponentPolynomial;
    Poly p = Poly::monomial({1, 0}, Rat(2));
    p.add_term({0, 1}, Rat(1));
    CHECK(p.terms().size() == 2);
    // right_lex minimum of {(1,0), (0,1)} is (1,0).
    CHECK(lowest_term_valuation(p) == ExponentTuple{1, 0});

    Poly q = Poly::monomial({0, 1}, Rat(1, 3));
    auto prod = p * q;
    CHECK(lowest_term_valuation(prod) == ExponentTuple{1, 1});
    CHECK(prod.terms().at({1, 1}) == Rat(2, 3));

    // Cancellation erases a term.
    Poly z = Poly::monomial({1, 0}, Rat(2));
    z.add_term({1, 0}, Rat(-2));
    CHECK(z.is_zero());
    CHECK_THROWS_AS(lowest_term_valuation(z), invalid_input);

    auto sum = p + q;
    CHECK(sum.terms().at({0, 1}) == Rat(4, 3));

    // Valuation is additive on products (no cancellation can reach the
    // lowest term: right_lex addition is strictly monotone).
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int> expd(0, 3);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a(3), b(3);
        for (int t = 0; t < 4; ++t) {
            long ca = coef(rng), cb = coef(rng);
            if (ca != 0) a.add_term({expd(rng), expd(rng), expd(rng)}, Rat(ca));
            if (cb != 0) b.add_term({expd(rng), expd(rng), expd(rng)}, Rat(cb));
        }
        if (a.is_zero() || b.is_zero()) continue;
        auto la = lowest_term_valuation(a);
        auto lb = lowest_term_valuation(b);
        std::vector<int> expect(3);
        for (int j = 0; j < 3; ++j) expect[j] = la[j] + lb[j];
        CHECK(lowest_term_valuation(a * b) == expect);
    }
}
