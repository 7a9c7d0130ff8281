#include "wsadist/distance.hpp"
#include "wsadist/error.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wsadist;
using wsadist::test_support::brute_force_standard;
using wsadist::test_support::full_matrix_standard;
using wsadist::test_support::random_model;
using wsadist::test_support::random_string;
using wsadist::test_support::strip_trailing_spaces;
using wsadist::test_support::utf8_debug;

namespace {

// Motivating pair: the second row of a normalized three-column table lost
// its last cell ("999 aa"). Separators are reconstructed as two spaces, so
// the missing tail is "  999  aa": 9 characters, 5 of them non-space.
const std::string kRowFull = "aaaa aaa  9 aa 9 aaaaaa  999  aa";
const std::string kRowShort = "aaaa aaa  9 aa 9 aaaaaa";

} // namespace

TEST(Standard, Examples) {
    const auto unit = unit_model();
    EXPECT_EQ(levenshtein_standard("", "abc", unit), 3u);
    EXPECT_EQ(levenshtein_standard("", "", unit), 0u);
    EXPECT_EQ(levenshtein_standard(kRowFull, kRowShort, unit), 9u);
    EXPECT_EQ(levenshtein_standard("aaaaA  99  99", "aaaaA", appendix_model()), 8u);
}

TEST(Standard, KittenSittingAgainstExhaustiveAlignment) {
    const auto unit = unit_model();
    const Cost oracle = brute_force_standard(U"kitten", U"sitting", unit);
    ASSERT_EQ(oracle, 3u);
    EXPECT_EQ(levenshtein_standard("kitten", "sitting", unit), oracle);
}

TEST(Standard, MatchesExhaustiveAlignmentOnRandomModels) {
    std::mt19937_64 rng(0xD15);
    const std::u32string alphabet = U"ab ";
    for (int k = 0; k < 300; ++k) {
        const auto model = random_model(rng, alphabet, k % 2 == 0);
        const auto a = random_string(rng, alphabet, 6);
        const auto b = random_string(rng, alphabet, 6);
        EXPECT_EQ(levenshtein_standard(a, b, model), brute_force_standard(a, b, model));
    }
}

TEST(Standard, LargeAlphabetFallsBackToModelLookups) {
    std::u32string a;
    std::u32string b;
    for (char32_t c = 0x4E00; c < 0x4E00 + 700; ++c) {
        a.push_back(c);
        if (c % 3 != 0) b.push_back(c + 1);
    }
    const auto model = appendix_model();
    EXPECT_EQ(levenshtein_standard(a, b, model), full_matrix_standard(a, b, model));
    EXPECT_EQ(levenshtein_standard(b, a, model), full_matrix_standard(b, a, model));
}

TEST(WsAgnostic, Examples) {
    const auto unit = unit_model();
    const auto table = appendix_model();
    EXPECT_EQ(levenshtein_ws_agnostic("abc   ", "abc", unit), 0u);
    EXPECT_EQ(levenshtein_ws_agnostic(kRowFull, kRowShort, unit), 5u);
    EXPECT_EQ(levenshtein_ws_agnostic("aaaaA  99  99", "aaaaA", table), 4u);
    EXPECT_EQ(levenshtein_ws_agnostic("aaaaA      99", "aaaaA", table), 2u);
    EXPECT_EQ(levenshtein_ws_agnostic("", "   ", unit), 0u);
    EXPECT_EQ(levenshtein_ws_agnostic("", "", unit), 0u);
}

TEST(WsAgnostic, EmptyStringIsAlreadyAtInfinity) {
    const auto table = appendix_model();
    // a, A -> 1 each; 9 -> min(1, 4); ( -> min(1, 999); space -> 0
    EXPECT_EQ(levenshtein_ws_agnostic("", "aA9( ", table), 4u);
    EXPECT_EQ(levenshtein_ws_agnostic("aA9( ", "", table), 4u);

    const auto cheap_space = load_model(R"({"indel_default": 5, "replace": [{"a": "x", "b": " ", "cost": 2}]})");
    EXPECT_EQ(levenshtein_ws_agnostic("x x", "", cheap_space), 4u);
    EXPECT_EQ(levenshtein_standard("x x", "", cheap_space), 15u);
}

TEST(WsAgnostic, AsymmetricModelUsesDirectionalWhitespaceCosts) {
    const auto model = load_model(R"({
        "symmetric": false, "indel_default": 10, "replace_default": 10,
        "replace": [{"a": "x", "b": " ", "cost": 1}, {"a": " ", "b": "y", "cost": 2}]
    })");
    EXPECT_EQ(levenshtein_ws_agnostic("x", "", model), 1u);
    EXPECT_EQ(levenshtein_ws_agnostic("", "x", model), 10u);
    EXPECT_EQ(levenshtein_ws_agnostic("", "y", model), 2u);
    EXPECT_EQ(levenshtein_ws_agnostic("y", "", model), 10u);
    EXPECT_EQ(levenshtein_ws_agnostic("ax", "a", model), 1u);
    EXPECT_EQ(levenshtein_ws_agnostic("a", "ayy", model), 4u);
    EXPECT_EQ(ws_agnostic_naive("a", "ayy", model), 4u);
}

TEST(WsAgnostic, Unicode) {
    const auto unit = unit_model();
    EXPECT_EQ(levenshtein_ws_agnostic("héllo  ", "héllo", unit), 0u);
    EXPECT_EQ(levenshtein_ws_agnostic("héllo", "hello", unit), 1u);
    EXPECT_EQ(compute_distance(Algorithm::WsAgnostic, "é", "", unit).len1, 1u);
}

TEST(Naive, Examples) {
    EXPECT_EQ(ws_agnostic_naive("abc   ", "abc", unit_model()), 0u);
    EXPECT_EQ(ws_agnostic_naive("aaaaA  99  99", "aaaaA", appendix_model()), 4u);
    EXPECT_EQ(ws_agnostic_naive("", "", unit_model()), 0u);
}

TEST(Recursive, Examples) {
    EXPECT_EQ(ws_agnostic_recursive_unit("", ""), 0u);
    EXPECT_EQ(ws_agnostic_recursive_unit("a", "a"), 0u);
    ASSERT_EQ(brute_force_standard(U"abc", U"abd", unit_model()), 1u);
    EXPECT_EQ(ws_agnostic_recursive_unit("abc", "abd"), 1u);
    EXPECT_EQ(ws_agnostic_recursive_unit("abc   ", "abc"), 0u);
    EXPECT_EQ(ws_agnostic_recursive_unit(kRowFull, kRowShort), 5u);
}

TEST(Limits, SizeErrors) {
    DistanceLimits limits;
    limits.max_cells = 100;
    const std::string a(11, 'a');
    const std::string b(10, 'b');
    EXPECT_THROW(levenshtein_standard(a, b, unit_model(), limits), SizeLimitError);
    EXPECT_THROW(levenshtein_ws_agnostic(a, b, unit_model(), limits), SizeLimitError);
    EXPECT_NO_THROW(levenshtein_ws_agnostic(std::string(10, 'a'), b, unit_model(), limits));
    EXPECT_NO_THROW(levenshtein_ws_agnostic(std::string(100000, 'a'), "", unit_model(), limits));

    EXPECT_THROW(ws_agnostic_naive(std::string(300, 'a'), std::string(213, 'a'), unit_model()),
                 SizeLimitError);
    EXPECT_THROW(ws_agnostic_recursive_unit(std::string(65, 'a'), "a"), SizeLimitError);
    EXPECT_THROW(compute_distance(Algorithm::NaiveOracle, std::string(600, 'a'), "", unit_model()),
                 SizeLimitError);
}

TEST(AlgorithmNames, RoundTrip) {
    for (auto alg : {Algorithm::Standard, Algorithm::WsAgnostic, Algorithm::NaiveOracle,
                     Algorithm::RecursiveReference}) {
        EXPECT_EQ(parse_algorithm(to_string(alg)), alg);
    }
    EXPECT_FALSE(parse_algorithm("fast").has_value());
}

TEST(ComputeDistance, Dispatch) {
    const auto r = compute_distance(Algorithm::Standard, "aaaaA  99  99", "aaaaA", appendix_model());
    EXPECT_EQ(r, (DistanceResult{8, Algorithm::Standard, 13, 5}));
    EXPECT_EQ(compute_distance(Algorithm::RecursiveReference, "abc", "abd", appendix_model()).cost, 1u);
}

// Randomized differential and property checks.

TEST(Oracle, WsAgnosticEqualsNaiveOnTableAlphabet) {
    std::mt19937_64 rng(0xC0FFEE);
    const auto models = {unit_model(), appendix_model()};
    int cases = 0;
    for (const auto& model : models) {
        for (int k = 0; k < 600; ++k, ++cases) {
            const auto a = random_string(rng, test_support::kTableAlphabet, 24);
            const auto b = random_string(rng, test_support::kTableAlphabet, 24);
            ASSERT_EQ(levenshtein_ws_agnostic(a, b, model), ws_agnostic_naive(a, b, model))
                << utf8_debug(a) << " | " << utf8_debug(b);
        }
    }
    EXPECT_GE(cases, 1000);
}

TEST(Oracle, WsAgnosticEqualsNaiveOnRandomModels) {
    std::mt19937_64 rng(0xBADA55);
    const std::u32string alphabet = U"ab ";
    for (int k = 0; k < 400; ++k) {
        const auto model = random_model(rng, alphabet, k % 2 == 0);
        const auto a = random_string(rng, alphabet, 10);
        const auto b = random_string(rng, alphabet, 10);
        ASSERT_EQ(levenshtein_ws_agnostic(a, b, model), ws_agnostic_naive(a, b, model));
    }
}

TEST(Oracle, PaddingBoundIsSufficient) {
    std::mt19937_64 rng(0xB0B);
    for (const auto& model : {unit_model(), appendix_model()}) {
        for (int k = 0; k < 150; ++k) {
            const auto a = random_string(rng, test_support::kTableAlphabet, 12);
            const auto b = random_string(rng, test_support::kTableAlphabet, 12);
            EXPECT_EQ(ws_agnostic_naive(a, b, model),
                      ws_agnostic_naive(a, b, model, {}, 2 * (a.size() + b.size())));
        }
    }
}

TEST(Oracle, WsAgnosticEqualsRecurrenceUnderUnitCosts) {
    std::mt19937_64 rng(0xFACE);
    const auto unit = unit_model();
    for (int k = 0; k < 1000; ++k) {
        const auto a = random_string(rng, test_support::kTableAlphabet, 12);
        const auto b = random_string(rng, test_support::kTableAlphabet, 12);
        ASSERT_EQ(levenshtein_ws_agnostic(a, b, unit), ws_agnostic_recursive_unit(a, b));
    }
}

TEST(Properties, DominanceIdentitySymmetry) {
    std::mt19937_64 rng(0x1D);
    for (const auto& model : {unit_model(), appendix_model()}) {
        for (int k = 0; k < 500; ++k) {
            const auto a = random_string(rng, test_support::kTableAlphabet, 24);
            const auto b = random_string(rng, test_support::kTableAlphabet, 24);
            const Cost wsa = levenshtein_ws_agnostic(a, b, model);
            const Cost std_cost = levenshtein_standard(a, b, model);
            EXPECT_LE(wsa, std_cost);
            EXPECT_EQ(levenshtein_ws_agnostic(a, a, model), 0u);
            EXPECT_EQ(levenshtein_standard(a, a, model), 0u);
            EXPECT_EQ(levenshtein_ws_agnostic(b, a, model), wsa);
            EXPECT_EQ(levenshtein_standard(b, a, model), std_cost);
        }
    }
}

TEST(Properties, TrailingSpaceAbsorption) {
    std::mt19937_64 rng(0x5ACE);
    for (const auto& model : {unit_model(), appendix_model()}) {
        for (int k = 0; k < 500; ++k) {
            const auto a = random_string(rng, test_support::kTableAlphabet, 24);
            const auto b = random_string(rng, test_support::kTableAlphabet, 24);
            EXPECT_EQ(levenshtein_ws_agnostic(a + U" ", b, model), levenshtein_ws_agnostic(a, b, model));
            EXPECT_EQ(levenshtein_ws_agnostic(a, b + U" ", model), levenshtein_ws_agnostic(a, b, model));
        }
    }
}

TEST(Properties, UnitZeroCharacterization) {
    std::mt19937_64 rng(0x2E20);
    const auto unit = unit_model();
    // A small alphabet makes near-equal pairs frequent.
    const std::u32string alphabet = U"a ";
    for (int k = 0; k < 1000; ++k) {
        const auto a = random_string(rng, alphabet, 8);
        auto b = k % 2 == 0 ? strip_trailing_spaces(a) + std::u32string(k % 5, U' ')
                            : random_string(rng, alphabet, 8);
        const bool equal = strip_trailing_spaces(a) == strip_trailing_spaces(b);
        EXPECT_EQ(levenshtein_ws_agnostic(a, b, unit) == 0, equal);
    }
}

TEST(Properties, AsymmetricModelsAgreeWithTranspose) {
    // Swapping the arguments of an asymmetric model equals swapping the
    // arguments and transposing the model.
    std::mt19937_64 rng(0x7A);
    const std::u32string alphabet = U"ab ";
    for (int k = 0; k < 200; ++k) {
        const auto model = random_model(rng, alphabet, false);
        CostModelBuilder t;
        t.symmetric(false).indel_default(model.indel_default()).replace_default(model.replace_default());
        for (const auto& [c, cost] : model.indel_entries()) t.indel(c, cost);
        for (const auto& [key, cost] : model.replace_entries()) t.replace(key.second, key.first, cost);
        const auto transposed = t.build();
        const auto a = random_string(rng, alphabet, 12);
        const auto b = random_string(rng, alphabet, 12);
        EXPECT_EQ(levenshtein_ws_agnostic(a, b, model), levenshtein_ws_agnostic(b, a, transposed));
        EXPECT_EQ(levenshtein_standard(a, b, model), levenshtein_standard(b, a, transposed));
    }
}
