#include <doctest.h>

#include <algorithm>
#include <set>

#include "nokw/errors.hpp"
#include "nokw/rootsys.hpp"
#include "nokw/weyl.hpp"

using namespace nokw;

namespace {
std::vector<std::vector<int>> coords_of(const std::vector<RootVec>& roots) {
    std::vector<std::vector<int>> out;
    for (const auto& b : roots) out.push_back(b.coords);
    return out;
}
} // namespace

TEST_CASE("simple reflections act correctly on weights and roots") {
    RootSystem a2 = RootSystem::make('A', 2);
    WeylElement s0 = WeylElement::simple_reflection(a2, 0);
    CHECK(s0.apply(Weight{{1, 0}}).coords == std::vector<long>{-1, 1});
    CHECK(s0.apply(Weight{{0, 1}}).coords == std::vector<long>{0, 1});
    CHECK(s0.apply_to_root({0, 1}) == std::vector<int>{1, 1});
    CHECK(s0.apply_to_root({1, 0}) == std::vector<int>{-1, 0});
    CHECK((s0 * s0) == WeylElement::identity(2));
}

TEST_CASE("greedy longest-element words") {
    RootSystem a2 = RootSystem::make('A', 2);
    CHECK(longest_element(a2, full_support(a2)).second == std::vector<int>{0, 1, 0});
    RootSystem b2 = RootSystem::make('B', 2);
    CHECK(longest_element(b2, full_support(b2)).second == std::vector<int>{0, 1, 0, 1});
    RootSystem a3 = RootSystem::make('A', 3);
    auto [w0, word] = longest_element(a3, full_support(a3));
    CHECK(static_cast<int>(word.size()) == a3.num_positive());
    CHECK(w0.length(a3) == a3.num_positive());
    CHECK(is_reduced_word(a3, word));
    // w0 sends every positive root to a negative one.
    for (const auto& b : a3.positive_roots()) CHECK_FALSE(w0.sends_positive(a3, b));
}

TEST_CASE("longest element of a Levi subgroup") {
    RootSystem a3 = RootSystem::make('A', 3);
    auto [wl, word] = longest_element(a3, {0, 1});
    CHECK(word == std::vector<int>{0, 1, 0});
    CHECK(wl.length(a3) == 3);
    auto [we, we_word] = longest_element(a3, {});
    CHECK(we == WeylElement::identity(3));
    CHECK(we_word.empty());
}

TEST_CASE("reduced-word detection") {
    RootSystem a2 = RootSystem::make('A', 2);
    CHECK(is_reduced_word(a2, {0, 1, 0}));
    CHECK(is_reduced_word(a2, {1, 0, 1}));
    CHECK_FALSE(is_reduced_word(a2, {0, 0}));
    CHECK_FALSE(is_reduced_word(a2, {0, 1, 0, 1}));
    CHECK(is_reduced_word(a2, {}));
}

TEST_CASE("involution and order of the longest element") {
    for (auto [s, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'G', 2}, {'C', 3}}) {
        RootSystem rs = RootSystem::make(s, n);
        WeylElement w0 = longest_element(rs, full_support(rs)).first;
        CHECK((w0 * w0) == WeylElement::identity(n));
        // In these types w0 = -1 on weights.
        Weight rho = rs.rho();
        Weight img = w0.apply(rho);
        for (int i = 0; i < n; ++i) CHECK(img.coords[i] == -rho.coords[i]);
    }
    RootSystem a2 = RootSystem::make('A', 2);
    WeylElement w0 = longest_element(a2, full_support(a2)).first;
    CHECK(w0.apply(Weight{{1, 0}}).coords == std::vector<long>{0, -1}); // diagram flip
}

TEST_CASE("word enumerations of the positive system") {
    RootSystem a2 = RootSystem::make('A', 2);
    auto pre = enumeration_from_word(a2, full_support(a2), {0, 1, 0}, EnumKind::word_prefix);
    CHECK(coords_of(pre.roots) == std::vector<std::vector<int>>{{1, 0}, {1, 1}, {0, 1}});
    auto suf = enumeration_from_word(a2, full_support(a2), {0, 1, 0}, EnumKind::word_suffix);
    CHECK(coords_of(suf.roots) == std::vector<std::vector<int>>{{0, 1}, {1, 1}, {1, 0}});
    CHECK(pre.kind == EnumKind::word_prefix);
    CHECK(suf.kind == EnumKind::word_suffix);

    // Non-reduced or wrong-length words are rejected.
    CHECK_THROWS_AS(enumeration_from_word(a2, full_support(a2), {0, 0, 0}, EnumKind::word_prefix),
                    invalid_input);
    CHECK_THROWS_AS(enumeration_from_word(a2, full_support(a2), {0, 1}, EnumKind::word_prefix),
                    invalid_input);
    CHECK_THROWS_AS(enumeration_from_word(a2, full_support(a2), {0, 1, 2}, EnumKind::word_prefix),
                    invalid_input);
}

TEST_CASE("suffix enumeration is the reverse of the prefix of the reversed word") {
    for (auto [s, n] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        RootSystem rs = RootSystem::make(s, n);
        auto word = longest_element(rs, full_support(rs)).second;
        std::vector<int> reversed(word.rbegin(), word.rend());
        auto suf = enumeration_from_word(rs, full_support(rs), word, EnumKind::word_suffix);
        auto pre = enumeration_from_word(rs, full_support(rs), reversed, EnumKind::word_prefix);
        std::vector<RootVec> flipped(pre.roots.rbegin(), pre.roots.rend());
        CHECK(coords_of(suf.roots) == coords_of(flipped));
    }
}

TEST_CASE("enumerations are bijections onto the parabolic positive system") {
    RootSystem b3 = RootSystem::make('B', 3);
    auto word = longest_element(b3, full_support(b3)).second;
    for (auto kind : {EnumKind::word_prefix, EnumKind::word_suffix}) {
        auto e = enumeration_from_word(b3, full_support(b3), word, kind);
        std::set<std::vector<int>> seen;
        for (const auto& b : e.roots) {
            CHECK(b3.is_positive_root(b.coords));
            CHECK(seen.insert(b.coords).second);
        }
        CHECK(static_cast<int>(seen.size()) == b3.num_positive());
    }
}

TEST_CASE("good orderings respect dominance") {
    RootSystem a2 = RootSystem::make('A', 2);
    auto e = good_ordering(a2, full_support(a2));
    CHECK(coords_of(e.roots) == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(is_good_ordering(e));

    Enumeration badly = e;
    std::reverse(badly.roots.begin(), badly.roots.end());
    CHECK_FALSE(is_good_ordering(badly));

    // Parabolic variant: only roots through the support.
    auto ep = good_ordering(a2, {0});
    CHECK(coords_of(ep.roots) == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
    CHECK(is_good_ordering(ep));

    RootSystem g2 = RootSystem::make('G', 2);
    CHECK(is_good_ordering(good_ordering(g2, full_support(g2))));
}

TEST_CASE("position lookup inside an enumeration") {
    RootSystem a2 = RootSystem::make('A', 2);
    auto e = good_ordering(a2, full_support(a2));
    CHECK(e.position_of(RootVec{{1, 1}}) == 2);
    CHECK(e.position_of(RootVec{{2, 1}}) == -1);
    CHECK(e.same_frame(e));
}

TEST_CASE("telescope enumerations match the shell layout") {
    RootSystem a3 = RootSystem::make('A', 3);
    auto e = telescope_enumeration(a3);
    CHECK(e.kind == EnumKind::telescope);
    CHECK(coords_of(e.roots) ==
          std::vector<std::vector<int>>{
              {0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}});
    CHECK(e.shells == std::vector<int>{3, 3, 3, 2, 2, 1});
    CHECK(e.relabeling == std::vector<int>{0, 1, 2});

    RootSystem b3 = RootSystem::make('B', 3);
    auto eb = telescope_enumeration(b3);
    CHECK(coords_of(eb.roots) ==
          std::vector<std::vector<int>>{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2},
                                        {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 0, 1}});
    CHECK(eb.shells == std::vector<int>{3, 3, 3, 3, 3, 2, 2, 2, 1});
    CHECK(eb.relabeling == std::vector<int>{2, 1, 0});

    RootSystem c3 = RootSystem::make('C', 3);
    auto ec = telescope_enumeration(c3);
    CHECK(coords_of(ec.roots) ==
          std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {1, 1, 1}, {1, 2, 1},
                                        {2, 2, 1}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}});
    CHECK(ec.shells == std::vector<int>{3, 3, 3, 3, 3, 3, 2, 2, 1});

    // Shells occupy tail segments: shell ids never increase along the list...
    for (std::size_t p = 1; p < eb.shells.size(); ++p) CHECK(eb.shells[p] <= eb.shells[p - 1]);
}

TEST_CASE("telescope enumerations exist for the supported series") {
    for (auto [s, n] : std::vector<std::pair<char, int>>{
             {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}}) {
        RootSystem rs = RootSystem::make(s, n);
        auto e = telescope_enumeration(rs);
        CHECK(static_cast<int>(e.roots.size()) == rs.num_positive());
        std::set<std::vector<int>> seen;
        for (const auto& b : e.roots) CHECK(seen.insert(b.coords).second);
    }
    CHECK_THROWS_AS(telescope_enumeration(RootSystem::make('G', 2)), unsupported_type);
    CHECK_THROWS_AS(telescope_enumeration(RootSystem::make('F', 4)), unsupported_type);
    CHECK_THROWS_AS(telescope_enumeration(RootSystem::make('E', 8)), unsupported_type);
}

TEST_CASE("reflection in a positive root") {
    RootSystem a2 = RootSystem::make('A', 2);
    Weight r = reflect_weight(a2, RootVec{{1, 1}}, Weight{{1, 1}});
    CHECK(r.coords == std::vector<long>{-1, -1});
    Weight s = reflect_weight(a2, RootVec{{1, 0}}, Weight{{2, 1}});
    CHECK(s.coords == std::vector<long>{-2, 3});
}

TEST_CASE("weyl element inverse and products") {
    RootSystem b2 = RootSystem::make('B', 2);
    WeylElement w = product_of_word(b2, {0, 1, 0});
    CHECK((w * w.inverse()) == WeylElement::identity(2));
    CHECK(w.length(b2) == 3);
    CHECK(product_of_word(b2, {}).length(b2) == 0);
}
