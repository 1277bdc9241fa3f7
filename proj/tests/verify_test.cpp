#include <gtest/gtest.h>

#include <random>

#include "grshermes/verify.hpp"
#include "oracles.hpp"

using namespace grshermes;

namespace {

GrsCode theorem_code_q2() {  // the [5,2,4] member over GF(4)
    return construct_family({Family::q2plus1, 2, 2, 0, {}});
}

}  // namespace

TEST(verify, binomial_capped) {
    EXPECT_EQ(binomial_capped(22, 5), 26334u);
    EXPECT_EQ(binomial_capped(10, 3), 120u);
    EXPECT_EQ(binomial_capped(5, 0), 1u);
    EXPECT_EQ(binomial_capped(4, 5), 0u);
    EXPECT_GT(binomial_capped(177, 15, 10000000), 10000000u);
}

TEST(verify, min_distance_examples) {
    GrsCode code = theorem_code_q2();
    EXPECT_EQ(min_distance_enumerate(code), 4u);  // n - k + 1

    // the full space has distance 1
    auto t = make_tower(2, 1);
    GrsCode full = build_grs(make_eval_set(t, {0, 1, 2, 3}), {1, 1, 1, 1}, 4);
    EXPECT_EQ(min_distance_enumerate(full), 1u);

    // [9,3] over GF(25): 25^3 - 1 messages, distance 7
    GrsCode cor38 = construct_family({Family::r_family, 5, 3, 2, {}});
    EXPECT_EQ(cor38.length(), 9u);
    EXPECT_EQ(min_distance_enumerate(cor38), 7u);
}

TEST(verify, min_distance_guard) {
    GrsCode big = construct_family({Family::r_family, 23, 15, 8, {}});
    EXPECT_THROW(min_distance_enumerate(big), GuardExceeded);
}

TEST(verify, min_distance_thread_count_does_not_matter) {
    GrsCode code = construct_family({Family::q2plus1, 3, 3, 0, {}});
    EXPECT_EQ(min_distance_enumerate(code, 1), 8u);
    EXPECT_EQ(min_distance_enumerate(code, 3), 8u);
    EXPECT_EQ(min_distance_enumerate(code, 16), 8u);
}

TEST(verify, mds_by_column_rank_exhaustive) {
    GrsCode code = construct_family({Family::q2plus1, 3, 2, 0, {}});  // [10,2]
    EXPECT_EQ(mds_by_column_rank(code, {MdsMode::Kind::exhaustive, 0, 0}), MdsOutcome::pass);

    // duplicated column: subsets containing both copies are singular
    GrsCode corrupted = code;
    for (std::size_t r = 0; r < corrupted.gen.rows; ++r)
        corrupted.gen.at(r, 1) = corrupted.gen.at(r, 0);
    EXPECT_EQ(mds_by_column_rank(corrupted, {MdsMode::Kind::exhaustive, 0, 0}),
              MdsOutcome::fail);
}

TEST(verify, mds_by_column_rank_sampled) {
    GrsCode code = construct_family({Family::r_family, 5, 3, 2, {}});
    const MdsMode mode{MdsMode::Kind::sampled, 500, 42};
    EXPECT_EQ(mds_by_column_rank(code, mode), MdsOutcome::sampled_pass);
    // never upgrades to a full pass, and is seed-deterministic
    EXPECT_EQ(mds_by_column_rank(code, mode), mds_by_column_rank(code, mode));

    GrsCode corrupted = code;
    for (std::size_t r = 0; r < corrupted.gen.rows; ++r)
        corrupted.gen.at(r, 1) = corrupted.gen.at(r, 0);
    // 500 draws from C(9,3) = 84 subsets cannot all miss the bad pair
    EXPECT_EQ(mds_by_column_rank(corrupted, mode), MdsOutcome::fail);
}

TEST(verify, mds_exhaustive_guard) {
    GrsCode big = construct_family({Family::r_family, 23, 15, 8, {}});
    EXPECT_THROW(mds_by_column_rank(big, {MdsMode::Kind::exhaustive, 0, 0}), GuardExceeded);
}

// Oracle agreement: enumeration says d = n-k+1 exactly when the
// column-rank oracle passes.
TEST(verify, distance_oracles_agree) {
    std::vector<GrsCode> codes;
    codes.push_back(theorem_code_q2());
    codes.push_back(construct_family({Family::q2plus1, 3, 3, 0, {}}));
    codes.push_back(construct_family({Family::q2, 3, 2, 0, {}}));
    GrsCode corrupted = theorem_code_q2();
    for (std::size_t r = 0; r < corrupted.gen.rows; ++r)
        corrupted.gen.at(r, 2) = corrupted.gen.at(r, 1);
    codes.push_back(corrupted);

    for (const GrsCode& code : codes) {
        const bool mds_by_enum =
            min_distance_enumerate(code) == code.length() - code.k + 1;
        const bool mds_by_rank =
            mds_by_column_rank(code, {MdsMode::Kind::exhaustive, 0, 0}) == MdsOutcome::pass;
        EXPECT_EQ(mds_by_enum, mds_by_rank);
    }
}

TEST(verify, verify_all_happy_path) {
    GrsCode code = theorem_code_q2();
    const VerifyReport r = verify_all(code);
    EXPECT_TRUE(r.hermitian);
    EXPECT_TRUE(r.rational_dual);
    EXPECT_EQ(r.mds, MdsOutcome::pass);
    EXPECT_EQ(r.method, "enumeration");
    ASSERT_TRUE(r.min_distance.has_value());
    EXPECT_EQ(*r.min_distance, 4u);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.code_id, code_content_hash(code));
}

TEST(verify, verify_all_empty_budget_only_runs_cheap_checks) {
    GrsCode code = theorem_code_q2();
    VerifyBudget budget;
    budget.distance = VerifyBudget::Distance::none;
    const VerifyReport r = verify_all(code, budget);
    EXPECT_TRUE(r.hermitian);
    EXPECT_TRUE(r.rational_dual);
    EXPECT_EQ(r.mds, MdsOutcome::not_computed);
    EXPECT_FALSE(r.min_distance.has_value());
    EXPECT_EQ(r.method, "none");
    EXPECT_FALSE(r.all_pass());
}

TEST(verify, verify_all_is_deterministic) {
    GrsCode code = construct_family({Family::r_family, 5, 3, 2, {}});
    VerifyBudget budget;
    budget.distance = VerifyBudget::Distance::sampled;
    budget.sample_count = 200;
    budget.seed = 99;
    auto ja = report_to_json(verify_all(code, budget));
    auto jb = report_to_json(verify_all(code, budget));
    ja.erase("elapsed");
    jb.erase("elapsed");
    EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(verify, corrupted_generator_is_detected) {
    GrsCode code = construct_family({Family::q2plus1, 3, 3, 0, {}});
    ASSERT_TRUE(verify_all(code).all_pass());
    GrsCode bad = code;
    bad.gen.at(1, 4) = bad.tower->add(bad.gen.at(1, 4), 1);
    const VerifyReport r = verify_all(bad);
    EXPECT_TRUE(!r.hermitian || r.mds == MdsOutcome::fail);
}

TEST(verify, report_json_round_trip) {
    GrsCode code = theorem_code_q2();
    const VerifyReport r = verify_all(code);
    const VerifyReport back = report_from_json(report_to_json(r));
    EXPECT_EQ(back.code_id, r.code_id);
    EXPECT_EQ(back.min_distance, r.min_distance);
    EXPECT_EQ(back.mds, r.mds);
    EXPECT_EQ(back.hermitian, r.hermitian);
    EXPECT_EQ(back.rational_dual, r.rational_dual);
    EXPECT_EQ(back.method, r.method);
}

TEST(verify, code_hash_ignores_checks_but_not_content) {
    GrsCode code = theorem_code_q2();
    const std::string id = code_content_hash(code);
    GrsCode reverified = code;
    reverified.checks.mds_ok = CheckState::pass;
    EXPECT_EQ(code_content_hash(reverified), id);
    GrsCode tweaked = code;
    tweaked.gen.at(0, 0) = tweaked.tower->add(tweaked.gen.at(0, 0), 1);
    EXPECT_NE(code_content_hash(tweaked), id);
}

TEST(verify, code_json_round_trip_preserves_content) {
    GrsCode code = construct_family({Family::r_family, 5, 2, 2, {}});
    const GrsCode back = code_from_json(code_to_json(code));
    EXPECT_EQ(back.eval.points, code.eval.points);
    EXPECT_EQ(back.eval.with_infinity, code.eval.with_infinity);
    EXPECT_EQ(back.v, code.v);
    EXPECT_EQ(back.k, code.k);
    EXPECT_EQ(back.gen, code.gen);
    EXPECT_TRUE(back.tower->same_tower(*code.tower));
    EXPECT_EQ(code_content_hash(back), code_content_hash(code));
}
