#include <gtest/gtest.h>

#include <random>

#include "grshermes/grs.hpp"
#include "oracles.hpp"

using namespace grshermes;
using grshermes::testing::encode_by_matrix;
using grshermes::testing::random_distinct_points;

namespace {

GrsCode random_code(std::shared_ptr<const FieldTower> t, std::mt19937_64& rng,
                    std::size_t max_n = 12) {
    std::uniform_int_distribution<std::size_t> size(2, std::min<std::size_t>(t->q_squared(), max_n));
    const bool inf = rng() % 3 == 0;
    auto pts = random_distinct_points(*t, size(rng), rng);
    EvalSet e = make_eval_set(t, pts, inf);
    std::uniform_int_distribution<Felt> nonzero(1, t->q_squared() - 1);
    std::vector<Felt> v(e.length());
    for (Felt& vi : v) vi = nonzero(rng);
    std::uniform_int_distribution<std::size_t> dim(1, e.length());
    return build_grs(std::move(e), std::move(v), dim(rng));
}

Felt dot(const FieldTower& f, const std::vector<Felt>& a, const std::vector<Felt>& b) {
    Felt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

}  // namespace

TEST(grs, build_with_infinity_example) {
    auto t = make_tower(2, 1);
    const GrsCode code =
        build_grs(make_eval_set(t, {0, 1, 2, 3}, true), {1, 1, 1, 1, 1}, 2);
    ASSERT_EQ(code.gen.rows, 2u);
    ASSERT_EQ(code.gen.cols, 5u);
    EXPECT_EQ(code.gen.a, (std::vector<Felt>{1, 1, 1, 1, 0,   // f = 1
                                             0, 1, 2, 3, 1})); // f = x, f(inf) = 1
    EXPECT_EQ(code.checks.hermitian_ok, CheckState::unknown);
}

TEST(grs, full_dimension_generator_is_invertible) {
    auto t = make_tower(3, 1);
    const auto pts = std::vector<Felt>{0, 1, 2, 3, 4};
    const GrsCode code = build_grs(make_eval_set(t, pts), std::vector<Felt>(5, 1), 5);
    EXPECT_EQ(rank_of(*t, code.gen), 5u);
}

TEST(grs, build_rejects_bad_input) {
    auto t = make_tower(2, 1);
    EXPECT_THROW(build_grs(make_eval_set(t, {0, 1, 2}), {1, 0, 1}, 2), std::invalid_argument);
    EXPECT_THROW(build_grs(make_eval_set(t, {0, 1, 2}), {1, 1, 1}, 0), std::invalid_argument);
    EXPECT_THROW(build_grs(make_eval_set(t, {0, 1, 2}), {1, 1, 1}, 4), std::invalid_argument);
    EXPECT_THROW(build_grs(make_eval_set(t, {0, 1, 2}), {1, 1}, 2), std::invalid_argument);
}

TEST(grs, encode_examples) {
    auto t = make_tower(2, 1);
    const GrsCode code = build_grs(make_eval_set(t, {1, 2, 3}), {1, 1, 1}, 2);
    EXPECT_EQ(encode(code, {{0, 1}}), (std::vector<Felt>{1, 2, 3}));  // f = x
    EXPECT_EQ(encode(code, {{0, 0}}), (std::vector<Felt>{0, 0, 0}));
    EXPECT_EQ(encode(code, {{1, 0}}), code.v);  // f = 1
    EXPECT_THROW(encode(code, {{1}}), std::invalid_argument);
}

TEST(grs, encode_horner_equals_matrix_route) {
    std::mt19937_64 rng(29);
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto t = make_tower(p, m);
        for (int trial = 0; trial < 25; ++trial) {
            const GrsCode code = random_code(t, rng);
            std::uniform_int_distribution<Felt> any(0, t->q_squared() - 1);
            Message msg;
            msg.coeffs.resize(code.k);
            for (Felt& c : msg.coeffs) c = any(rng);
            ASSERT_EQ(encode(code, msg), encode_by_matrix(code, msg));
        }
    }
}

TEST(grs, euclidean_dual_annihilates_primal) {
    std::mt19937_64 rng(31);
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
        auto t = make_tower(p, m);
        for (int trial = 0; trial < 25; ++trial) {
            const GrsCode code = random_code(t, rng);
            const GrsCode dual = euclidean_dual(code);
            EXPECT_EQ(dual.k, code.length() - code.k);
            for (std::size_t i = 0; i < dual.gen.rows; ++i)
                for (std::size_t j = 0; j < code.gen.rows; ++j) {
                    std::vector<Felt> di(dual.gen.a.begin() + i * dual.gen.cols,
                                         dual.gen.a.begin() + (i + 1) * dual.gen.cols);
                    std::vector<Felt> gj(code.gen.a.begin() + j * code.gen.cols,
                                         code.gen.a.begin() + (j + 1) * code.gen.cols);
                    ASSERT_EQ(dot(*t, di, gj), 0u);
                }
        }
    }
}

TEST(grs, dual_of_full_code_has_dimension_zero) {
    auto t = make_tower(2, 1);
    const GrsCode code = build_grs(make_eval_set(t, {0, 1, 2}), {1, 1, 1}, 3);
    const GrsCode dual = euclidean_dual(code);
    EXPECT_EQ(dual.k, 0u);
    EXPECT_EQ(dual.gen.rows, 0u);
    // and back up: the double dual is the whole space again
    const GrsCode dd = euclidean_dual(dual);
    EXPECT_EQ(dd.k, 3u);
}

TEST(grs, double_dual_restores_the_code) {
    std::mt19937_64 rng(37);
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto t = make_tower(p, m);
        for (int trial = 0; trial < 20; ++trial) {
            const GrsCode code = random_code(t, rng);
            const GrsCode dd = euclidean_dual(euclidean_dual(code));
            EXPECT_EQ(dd.k, code.k);
            EXPECT_EQ(dd.v, code.v);  // u'_i = v_i c_i^(-1) c_i
            EXPECT_TRUE(row_equivalent(*t, dd.gen, code.gen));
        }
    }
}

TEST(grs, q_power_examples) {
    auto t = make_tower(2, 1);
    const GrsCode code =
        build_grs(make_eval_set(t, {0, 1, 2, 3}, true), {1, 1, 1, 1, 1}, 2);
    const Matrix mq = q_power_code(code);
    EXPECT_EQ(std::vector<Felt>(mq.a.begin() + 5, mq.a.end()),
              (std::vector<Felt>{0, 1, 3, 2, 1}));  // (0,1,w,w^2,1) -> (0,1,w^2,w,1)

    // involution, and codes over GF(q) are fixed
    Matrix mqq = mq;
    for (Felt& x : mqq.a) x = t->frobenius(x);
    EXPECT_EQ(mqq, code.gen);

    const GrsCode sub = build_grs(make_eval_set(t, {0, 1}), {1, 1}, 2);
    EXPECT_EQ(q_power_code(sub), sub.gen);
}

TEST(grs, q_power_equals_grs_on_conjugated_data) {
    // on a Frobenius-stable evaluation set the q-power code is the GRS
    // code of the conjugated points and scalings
    auto t = make_tower(3, 1);
    EvalSet e = roots_of_unity(t, 8, true);
    std::vector<Felt> v;
    for (std::size_t i = 0; i < e.length(); ++i) v.push_back(static_cast<Felt>(i % 7 + 1));
    const GrsCode code = build_grs(e, v, 3);

    std::vector<Felt> pts_q, v_q;
    for (Felt x : e.points) pts_q.push_back(t->frobenius(x));
    for (Felt x : v) v_q.push_back(t->frobenius(x));
    const GrsCode conj = build_grs(make_eval_set(t, pts_q), v_q, 3);
    EXPECT_EQ(q_power_code(code), conj.gen);
    EXPECT_TRUE(row_equivalent(*t, q_power_code(code), conj.gen));
}

TEST(grs, code_subset_basics) {
    auto t = make_tower(2, 1);
    const GrsCode c2 = build_grs(make_eval_set(t, {0, 1, 2, 3}), {1, 1, 1, 1}, 2);
    const GrsCode c3 = build_grs(make_eval_set(t, {0, 1, 2, 3}), {1, 1, 1, 1}, 3);
    EXPECT_TRUE(code_subset(*t, c2.gen, c2.gen));
    EXPECT_TRUE(code_subset(*t, c2.gen, c3.gen));   // P_2 in P_3
    EXPECT_FALSE(code_subset(*t, c3.gen, c2.gen));
    EXPECT_TRUE(code_subset(*t, Matrix(2, 4), c2.gen));  // zero rows are everywhere
    EXPECT_THROW(code_subset(*t, c2.gen, Matrix(2, 5)), std::invalid_argument);
}

TEST(grs, every_k_columns_of_a_grs_generator_are_independent) {
    std::mt19937_64 rng(41);
    auto t = make_tower(2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const GrsCode code = random_code(t, rng, 9);
        std::vector<std::size_t> cols(code.length());
        for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        // sample a handful of k-subsets
        for (int s = 0; s < 20; ++s) {
            for (std::size_t i = 0; i < code.k; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, cols.size() - 1);
                std::swap(cols[i], cols[pick(rng)]);
            }
            std::vector<std::size_t> sub(cols.begin(), cols.begin() + code.k);
            ASSERT_TRUE(columns_full_rank(*t, code.gen, sub));
        }
    }
}
