#include <doctest.h>

#include <algorithm>

#include "nokw/errors.hpp"
#include "nokw/widths.hpp"

using namespace nokw;

namespace {

bool all_vertices_pass(const SimplexReport& r) {
    return std::all_of(r.vertex_verdicts.begin(), r.vertex_verdicts.end(),
                       [](const auto& v) { return v.second; });
}

bool all_checks_pass(const SimplexReport& r) {
    return std::all_of(r.checks.begin(), r.checks.end(), [](const NamedCheck& c) { return c.passed; });
}

bool has_note_containing(const std::vector<std::string>& notes, const std::string& needle) {
    return std::any_of(notes.begin(), notes.end(),
                       [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("corner simplex for the sl3 adjoint weight") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    auto rep = verify_good_ordering_theorem(cache, a2, Weight{{1, 1}});
    CHECK(rep.verified);
    CHECK(rep.spec.kind == SimplexKind::good_ordering);
    CHECK(rep.spec.size == 1);
    REQUIRE(rep.spec.vertices.size() == 4);
    CHECK(rep.spec.vertices[0] == ExponentTuple{0, 0, 0});
    CHECK(rep.spec.vertices[1] == ExponentTuple{1, 0, 0});
    CHECK(rep.spec.vertices[2] == ExponentTuple{0, 1, 0});
    CHECK(rep.spec.vertices[3] == ExponentTuple{0, 0, 1});
    CHECK(all_vertices_pass(rep));
    CHECK(all_checks_pass(rep));
    CHECK_FALSE(rep.checks.empty());
}

TEST_CASE("corner simplex adapts to singular weights") {
    RootSystem b2 = RootSystem::make('B', 2);
    ModuleCache cache;
    auto rep = verify_good_ordering_theorem(cache, b2, Weight{{1, 0}});
    CHECK(rep.verified);
    // Parabolic positive system of supp {alpha_1} has three roots.
    CHECK(rep.spec.enumeration.size() == 3);
    CHECK(rep.spec.vertices.size() == 4);
    CHECK(rep.spec.size == 1);
    CHECK(all_vertices_pass(rep));

    CHECK_THROWS_AS(verify_good_ordering_theorem(cache, b2, Weight{{0, 0}}), invalid_input);
    CHECK_THROWS_AS(verify_good_ordering_theorem(cache, b2, Weight{{-1, 2}}), invalid_input);
}

TEST_CASE("maximal exponents along a suffix enumeration") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    auto data = mmax_tuples(cache, a2, {0, 1, 0}, Weight{{2, 1}});
    CHECK(data.exponents == std::vector<long>{2, 1, 2});
    REQUIRE(data.tail_tuples.size() == 3);
    CHECK(data.tail_tuples[0] == ExponentTuple{2, 1, 2});
    CHECK(data.tail_tuples[1] == ExponentTuple{0, 1, 2});
    CHECK(data.tail_tuples[2] == ExponentTuple{0, 0, 2});
    CHECK(data.enumeration.kind == EnumKind::word_suffix);

    CHECK_THROWS_AS(mmax_tuples(cache, a2, {0, 1, 0}, Weight{{1, 0}}), invalid_input);
    CHECK_THROWS_AS(mmax_tuples(cache, a2, {0, 1, 1}, Weight{{1, 1}}), invalid_input);
}

TEST_CASE("staircase simplex from reduced words") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    for (auto lambda : {Weight{{1, 1}}, Weight{{2, 1}}}) {
        CAPTURE(lambda.coords);
        auto rep = verify_convex_ordering_theorem(cache, a2, {0, 1, 0}, lambda);
        CHECK(rep.verified);
        CHECK(rep.spec.kind == SimplexKind::convex_ordering);
        CHECK(rep.spec.size == 1);
        REQUIRE(rep.spec.vertices.size() == 4);
        CHECK(rep.spec.vertices[0] == ExponentTuple{0, 0, 0});
        CHECK(rep.spec.vertices[1] == ExponentTuple{1, 1, 1});
        CHECK(rep.spec.vertices[2] == ExponentTuple{0, 1, 1});
        CHECK(rep.spec.vertices[3] == ExponentTuple{0, 0, 1});
        CHECK(all_vertices_pass(rep));
        CHECK(all_checks_pass(rep));
    }

    RootSystem b2 = RootSystem::make('B', 2);
    auto word = longest_element(b2, full_support(b2)).second;
    auto rep = verify_convex_ordering_theorem(cache, b2, word, Weight{{1, 1}});
    CHECK(rep.verified);
    CHECK(rep.spec.size == 1);
    CHECK(rep.spec.vertices.size() == 5);
    CHECK(all_vertices_pass(rep));
    CHECK(all_checks_pass(rep));

    CHECK_THROWS_AS(verify_convex_ordering_theorem(cache, b2, word, Weight{{1, 0}}), invalid_input);
}

TEST_CASE("nested-chain simplex in classical types") {
    ModuleCache cache;
    for (auto [s, n] : {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}}) {
        RootSystem rs = RootSystem::make(s, n);
        CAPTURE(s);
        auto rep = verify_telescope_theorem(cache, rs, rs.rho());
        CHECK(rep.verified);
        CHECK(rep.spec.kind == SimplexKind::telescope);
        CHECK(rep.spec.size == 1);
        CHECK(rep.spec.vertices.size() == rs.positive_roots().size() + 1);
        CHECK(all_vertices_pass(rep));
        CHECK(all_checks_pass(rep));
        CHECK(rep.spec.enumeration.kind == EnumKind::telescope);
    }

    RootSystem g2 = RootSystem::make('G', 2);
    CHECK_THROWS_AS(verify_telescope_theorem(cache, g2, g2.rho()), unsupported_type);
    RootSystem f4 = RootSystem::make('F', 4);
    CHECK_THROWS_AS(verify_telescope_theorem(cache, f4, f4.rho()), unsupported_type);

    RootSystem b3 = RootSystem::make('B', 3);
    CHECK_THROWS_AS(verify_telescope_theorem(cache, b3, Weight{{1, 0, 0}}), invalid_input);
}

TEST_CASE("telescope support by type") {
    CHECK(telescope_supported(RootSystem::make('A', 1).type()));
    CHECK(telescope_supported(RootSystem::make('A', 4).type()));
    CHECK(telescope_supported(RootSystem::make('B', 4).type()));
    CHECK(telescope_supported(RootSystem::make('C', 4).type()));
    CHECK(telescope_supported(RootSystem::make('D', 4).type()));
    CHECK(telescope_supported(RootSystem::make('E', 6).type()));
    CHECK(telescope_supported(RootSystem::make('E', 7).type()));
    CHECK_FALSE(telescope_supported(RootSystem::make('E', 8).type()));
    CHECK_FALSE(telescope_supported(RootSystem::make('F', 4).type()));
    CHECK_FALSE(telescope_supported(RootSystem::make('G', 2).type()));
}

TEST_CASE("width reports for rational weights") {
    RootSystem a2 = RootSystem::make('A', 2);
    ModuleCache cache;
    auto rep = width_report(cache, a2, {Rat(1, 2), Rat(1, 2)});
    CHECK(rep.lambda.coords == std::vector<long>{1, 1});
    CHECK(rep.scale == 2);
    CHECK(rep.integral_width == 1);
    CHECK(rep.width == Rat(1, 2));
    REQUIRE(rep.minimizers.size() == 2);
    CHECK(rep.minimizers[0] == RootVec{{0, 1}});
    CHECK(rep.minimizers[1] == RootVec{{1, 0}});
    CHECK(rep.good.has_value());
    CHECK(rep.convex.has_value());
    CHECK(rep.telescope.has_value());
    CHECK(rep.verified);
}

TEST_CASE("width reports skip inapplicable constructions with a note") {
    ModuleCache cache;

    RootSystem b2 = RootSystem::make('B', 2);
    auto singular = width_report(cache, b2, {Rat(1), Rat(0)});
    CHECK(singular.integral_width == 1);
    CHECK(singular.good.has_value());
    CHECK_FALSE(singular.convex.has_value());
    CHECK_FALSE(singular.telescope.has_value());
    CHECK(has_note_containing(singular.notes, "singular"));
    CHECK(singular.verified);

    RootSystem g2 = RootSystem::make('G', 2);
    auto exceptional = width_report(cache, g2, {Rat(1), Rat(1)});
    CHECK(exceptional.good.has_value());
    CHECK(exceptional.convex.has_value());
    CHECK_FALSE(exceptional.telescope.has_value());
    CHECK(has_note_containing(exceptional.notes, "telescope"));
    CHECK(exceptional.verified);

    CHECK_THROWS_AS(width_report(cache, g2, {Rat(1), Rat(1)}, ConstructionRequest::telescope),
                    unsupported_type);
    CHECK_THROWS_AS(width_report(cache, b2, {Rat(1), Rat(0)}, ConstructionRequest::convex),
                    invalid_input);
    CHECK_THROWS_AS(width_report(cache, b2, {Rat(0), Rat(0)}), invalid_input);
    CHECK_THROWS_AS(width_report(cache, b2, {Rat(-1), Rat(2)}), invalid_input);
    CHECK_THROWS_AS(width_report(cache, b2, {Rat(1)}), invalid_input);
}

TEST_CASE("width values for integral weights across types") {
    ModuleCache cache;
    RootSystem g2 = RootSystem::make('G', 2);
    auto rep = width_report(cache, g2, {Rat(1), Rat(1)}, ConstructionRequest::good);
    // Pairings of rho with the six positive coroots of G2 have minimum 1.
    CHECK(rep.integral_width == 1);
    CHECK(rep.width == Rat(1));
    CHECK(rep.good.has_value());
    CHECK_FALSE(rep.convex.has_value());
    CHECK(rep.verified);

    RootSystem c3 = RootSystem::make('C', 3);
    auto crep = width_report(cache, c3, {Rat(2), Rat(0), Rat(1)}, ConstructionRequest::good);
    // <lambda, beta^vee> over the parabolic system: the short simple coroot
    // at the first node already gives 2, the long-root pairing gives 1.
    CHECK(crep.integral_width == 1);
    CHECK(crep.verified);
}
