#include <gtest/gtest.h>

#include "generators.hpp"
#include "tri/parser.hpp"
#include "tri/ranking.hpp"

namespace tri {
namespace {

constexpr auto O = TruthValue::Zero;
constexpr auto U = TruthValue::Half;
constexpr auto I = TruthValue::One;

const Formula x0 = Formula::var(0);
const Formula x1 = Formula::var(1);

// Brute-force model set by direct evaluation at every interpretation.
std::vector<Interpretation> models_by_brute_force(const Formula& f, std::size_t n) {
    std::vector<Interpretation> out;
    for (const auto& w : enumerate_interpretations(n))
        if (eval(f, w) == TruthValue::One) out.push_back(w);
    return out;
}

TEST(Levels, ValueCorrespondence) {
    EXPECT_EQ(level_of(I), Level::L1);
    EXPECT_EQ(level_of(U), Level::L2);
    EXPECT_EQ(level_of(O), Level::L3);
    for (Level l : kLevels) EXPECT_EQ(level_of(value_of(l)), l);
    EXPECT_THROW(level_from_int(0), std::invalid_argument);
    EXPECT_THROW(level_from_int(4), std::invalid_argument);
}

TEST(RankingOfFormula, Examples) {
    const Ranking r = ranking_of_formula(x0, 1);
    EXPECT_EQ(r.members(Level::L1), std::vector<Interpretation>{Interpretation({I})});
    EXPECT_EQ(r.members(Level::L2), std::vector<Interpretation>{Interpretation({U})});
    EXPECT_EQ(r.members(Level::L3), std::vector<Interpretation>{Interpretation({O})});
    EXPECT_EQ(r.serialize(), "321");

    EXPECT_EQ(ranking_of_formula(Formula::bot(), 2), Ranking::constant(2, Level::L3));
    EXPECT_EQ(ranking_of_formula(box1(box1(x0)), 1), Ranking::constant(1, Level::L1));
    EXPECT_EQ(ranking_of_formula(Formula::bot(), 0).serialize(), "3");
}

TEST(CaptureValuation, Examples) {
    EXPECT_EQ(capture_valuation(Interpretation({I, O})), x0 & ~x1);

    const Formula half = capture_valuation(Interpretation({U}));
    EXPECT_EQ(half, box1(x0) & box1(~x0));
    EXPECT_EQ(models_by_brute_force(half, 1), std::vector<Interpretation>{Interpretation({U})});

    const Formula mixed = capture_valuation(Interpretation({I, U}));
    EXPECT_EQ(mixed, x0 & (box1(x1) & box1(~x1)));
    EXPECT_EQ(models_by_brute_force(mixed, 2), std::vector<Interpretation>{Interpretation({I, U})});
}

TEST(CaptureValuation, RejectsEmptyInterpretation) {
    EXPECT_THROW(capture_valuation(Interpretation()), std::invalid_argument);
}

TEST(CaptureValuation, ExactlyOneModelButPossiblySeveralQuasiModels) {
    bool saw_several_quasi = false;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& w : enumerate_interpretations(n)) {
            const Formula f = capture_valuation(w);
            EXPECT_EQ(models_by_brute_force(f, n), std::vector<Interpretation>{w});
            saw_several_quasi = saw_several_quasi || classify(f, n).quasi_models.size() > 1;
        }
    }
    EXPECT_TRUE(saw_several_quasi);
}

TEST(CaptureSet, Examples) {
    EXPECT_EQ(capture_set({}, 1), Formula::bot());
    EXPECT_TRUE(models_by_brute_force(capture_set({}, 2), 2).empty());

    const std::vector<Interpretation> ends{Interpretation({I}), Interpretation({O})};
    const Formula f = capture_set(ends, 1);
    EXPECT_EQ(f, x0 | ~x0);
    EXPECT_EQ(models_by_brute_force(f, 1), (std::vector<Interpretation>{Interpretation({O}), Interpretation({I})}));

    for (std::size_t n = 1; n <= 3; ++n)
        EXPECT_EQ(models_by_brute_force(capture_set(enumerate_interpretations(n), n), n).size(),
                  world_count(n));
    EXPECT_THROW(capture_set(ends, 2), std::invalid_argument);
}

TEST(CaptureSet, RandomSubsetsAreCapturedExactly) {
    testing::Gen gen(31);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + gen.below(3);
        std::vector<Interpretation> subset;
        for (const auto& w : enumerate_interpretations(n))
            if (gen.below(2)) subset.push_back(w);
        EXPECT_EQ(models_by_brute_force(capture_set(subset, n), n), subset);
    }
}

TEST(FormulaOfRanking, RoundTripsAllRankingsOverOneVariable) {
    const auto all = enumerate_rankings(1);
    ASSERT_EQ(all.size(), 27u);
    for (const Ranking& r : all) EXPECT_EQ(ranking_of_formula(formula_of_ranking(r), 1), r) << r.serialize();
}

TEST(FormulaOfRanking, Examples) {
    const Ranking rx = ranking_of_formula(x0, 1);
    EXPECT_EQ(ranking_of_formula(formula_of_ranking(rx), 1), rx);

    // Empty L2 and L3 make both psi bot.
    const Formula top = formula_of_ranking(Ranking::constant(2, Level::L1));
    EXPECT_EQ(top, ~(dia1(Formula::bot()) | dia2(Formula::bot())));
    EXPECT_EQ(count_value(eval_all(top, 2), I), 9u);

    EXPECT_THROW(formula_of_ranking(Ranking::constant(0, Level::L1)), std::invalid_argument);
}

TEST(FormulaOfRanking, RandomRankingsOverThreeVariables) {
    testing::Gen gen(32);
    for (int i = 0; i < 200; ++i) {
        const Ranking r = gen.ranking(3);
        EXPECT_EQ(ranking_of_formula(formula_of_ranking(r), 3), r);
    }
}

TEST(RankingValue, SerializationAndIndex) {
    EXPECT_EQ(ranking_count(1), 27u);
    EXPECT_EQ(ranking_count(2), 19683u);
    EXPECT_THROW(ranking_count(4), std::length_error);
    for (std::uint64_t i = 0; i < 27; ++i) {
        const Ranking r = Ranking::from_index(i, 1);
        EXPECT_EQ(r.index(), i);
        EXPECT_EQ(Ranking::parse(r.serialize()), r);
    }
    EXPECT_EQ(Ranking::from_index(0, 1).serialize(), "111");
    EXPECT_EQ(Ranking::from_index(26, 1).serialize(), "333");
    EXPECT_LT(Ranking::parse("112"), Ranking::parse("121"));
    EXPECT_THROW(Ranking::parse("12"), std::invalid_argument);
    EXPECT_THROW(Ranking::parse("124"), std::invalid_argument);
    EXPECT_THROW(Ranking(1, TruthColumn(4)), std::invalid_argument);
}

TEST(RankingFile, RoundTripAndFormat) {
    const Ranking r = ranking_of_formula(x0 & ~x1, 2);
    EXPECT_EQ(r.to_file().substr(0, 16), "0 0 : 3\n0 u : 3\n");
    EXPECT_EQ(parse_ranking_file(r.to_file()), r);

    testing::Gen gen(33);
    for (int i = 0; i < 50; ++i) {
        const Ranking q = gen.ranking(1 + gen.below(3));
        EXPECT_EQ(parse_ranking_file(q.to_file()), q);
    }
}

TEST(RankingFile, AcceptsAnyOrderCommentsAndBlankLines) {
    EXPECT_EQ(parse_ranking_file("# x0\n1 : 1\n\n0 : 3\nu : 2\n"), Ranking::parse("321"));
}

TEST(RankingFile, RejectsMalformedInput) {
    EXPECT_THROW(parse_ranking_file(""), std::invalid_argument);
    EXPECT_THROW(parse_ranking_file("0 : 1\nu : 1\n"), std::invalid_argument);           // missing 1
    EXPECT_THROW(parse_ranking_file("0 : 1\nu : 1\n1 : 2\n0 : 3\n"), std::invalid_argument);  // duplicate
    EXPECT_THROW(parse_ranking_file("0 : 4\nu : 1\n1 : 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_ranking_file("0 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_ranking_file("0 : 1\nu 0 : 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_ranking_file("2 : 1\n"), std::invalid_argument);
}

}  // namespace
}  // namespace tri
