#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "spreadseq/constructions.hpp"

using namespace spreadseq;

namespace {

const PrimeModulus p3(3);
const PrimeModulus p5(5);

#include "data/reference_columns.inc"

using Rows = std::vector<std::vector<uint32_t>>;

Rows rows_of(const MatrixFamily& fam, size_t i) { return fam.members[i].matrix.to_rows(); }

MatrixFamily family_p5m3() {
    return build_thm_lp(Permutation({3, 1, 2}), {2, 2},
                        {{0, 3, 4}, {1, 0, 1}, {2, 1, 2}, {3, 2, 0}, {4, 4, 3}}, p5);
}

MatrixFamily family_p3m4_diff() {
    return build_thm_2p_diff(Permutation({1, 2, 3, 4}), {1, 2, 2}, {2, 1, 1},
                             {{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}},
                             {{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}}, p3);
}

MatrixFamily family_p3m4_shift() {
    return build_thm_2p_shift(Permutation({2, 3, 1, 4}), 1, {1, 1, 2}, {1, 1, 1},
                              {{0, 2, 1, 2}, {1, 1, 0, 0}, {2, 0, 2, 1}},
                              {{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}}, p3);
}

MatrixFamily family_p3m4_even() {
    return build_thm_p3_even(Permutation({1, 4, 3, 2}), {2, 2, 2}, {1, 1, 1}, {0, 0, 0, 0},
                             std::vector<uint8_t>{0, 0, 1, 0});
}

MatrixFamily family_p3m5_any() {
    return build_thm_p3_any(Permutation({1, 2, 3, 4, 5}), {2, 1, 2, 2}, {1, 2, 1, 1},
                            {0, 0, 0, 0, 0}, 5, 1);
}

}  // namespace

TEST_CASE("p-block construction reproduces the worked instance") {
    const MatrixFamily fam = family_p5m3();
    REQUIRE(fam.size() == 5);
    CHECK(rows_of(fam, 0) == Rows{{0, 2, 0}, {0, 3, 0}, {2, 0, 4}});
    CHECK(rows_of(fam, 1) == Rows{{1, 2, 0}, {0, 0, 0}, {2, 0, 1}});
    CHECK(rows_of(fam, 2) == Rows{{2, 2, 0}, {0, 1, 0}, {2, 0, 2}});
    CHECK(rows_of(fam, 3) == Rows{{3, 2, 0}, {0, 2, 0}, {2, 0, 0}});
    CHECK(rows_of(fam, 4) == Rows{{4, 2, 0}, {0, 4, 0}, {2, 0, 3}});
    CHECK(r_min(fam) == 3);

    // every pairwise difference is diagonal with nonzero entries
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = i + 1; j < 5; ++j) {
            const MatrixFp q = symplectic_q(fam.members[i], fam.members[j]).matrix;
            for (uint32_t r = 0; r < 3; ++r)
                for (uint32_t c = 0; c < 3; ++c) {
                    if (r == c)
                        CHECK(q.at(r, c) != 0);
                    else
                        CHECK(q.at(r, c) == 0);
                }
        }
}

TEST_CASE("p-block construction rejects bad inputs") {
    const Permutation id2({1, 2});
    CHECK_THROWS_AS(
        build_thm_lp(id2, {0}, {{0, 0}, {1, 1}, {2, 2}}, p3), ConditionViolation);
    // duplicated d vector
    CHECK_THROWS_AS(
        build_thm_lp(id2, {1}, {{0, 0}, {0, 0}, {2, 2}}, p3), ConditionViolation);
    // clash in a single coordinate
    CHECK_THROWS_AS(
        build_thm_lp(id2, {1}, {{0, 0}, {1, 0}, {2, 2}}, p3), ConditionViolation);
    // wrong count
    CHECK_THROWS_AS(build_thm_lp(id2, {1}, {{0, 0}, {1, 1}}, p3), ShapeError);

    // small valid instance keeps full rank
    const MatrixFamily ok =
        build_thm_lp(id2, {1}, {{0, 0}, {1, 1}, {2, 2}}, p3);
    CHECK(r_min(ok) == 2);
}

TEST_CASE("2p-block construction with distinct paths") {
    const MatrixFamily fam = family_p3m4_diff();
    REQUIRE(fam.size() == 6);
    CHECK(rows_of(fam, 0) ==
          Rows{{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}});
    CHECK(rows_of(fam, 1) ==
          Rows{{1, 1, 0, 0}, {0, 1, 2, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}});
    CHECK(rows_of(fam, 2) ==
          Rows{{2, 1, 0, 0}, {0, 2, 2, 0}, {0, 0, 2, 2}, {0, 0, 0, 2}});
    CHECK(rows_of(fam, 3) ==
          Rows{{0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(rows_of(fam, 4) ==
          Rows{{1, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(rows_of(fam, 5) ==
          Rows{{2, 2, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 1}, {0, 0, 0, 2}});
    CHECK(r_min(fam) == 4);

    CHECK_THROWS_AS(build_thm_2p_diff(Permutation({1, 2}), {1}, {1}, {{0, 0}, {1, 1}, {2, 2}},
                                      {{0, 0}, {1, 1}, {2, 2}}, p3),
                    ConditionViolation);

    // the guarantee is r_min >= m-1
    const MatrixFamily small = build_thm_2p_diff(
        Permutation({1, 2}), {1}, {2}, {{0, 0}, {1, 1}, {2, 2}}, {{0, 1}, {1, 2}, {2, 0}}, p3);
    CHECK(r_min(small) >= 1);
}

TEST_CASE("2p-block construction with a shifted permutation") {
    const MatrixFamily fam = family_p3m4_shift();
    REQUIRE(fam.size() == 6);
    CHECK(rows_of(fam, 0) ==
          Rows{{0, 0, 0, 2}, {0, 2, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 2}});
    CHECK(rows_of(fam, 1) ==
          Rows{{1, 0, 0, 2}, {0, 1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(rows_of(fam, 2) ==
          Rows{{2, 0, 0, 2}, {0, 0, 1, 0}, {1, 0, 2, 0}, {0, 0, 0, 1}});
    CHECK(rows_of(fam, 3) ==
          Rows{{0, 0, 0, 1}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(rows_of(fam, 4) ==
          Rows{{1, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(rows_of(fam, 5) ==
          Rows{{2, 0, 0, 1}, {0, 2, 0, 0}, {1, 0, 2, 0}, {0, 1, 0, 2}});
    CHECK(r_min(fam) == 4);
}

TEST_CASE("shift construction condition scan") {
    const Permutation pi({2, 3, 1, 4});
    const std::vector<std::vector<uint8_t>> da = {{0, 2, 1, 2}, {1, 1, 0, 0}, {2, 0, 2, 1}};
    const std::vector<std::vector<uint8_t>> db = {{0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}};

    // a full-period shift leaves pi unchanged; no index pattern can work
    CHECK_THROWS_AS(
        build_thm_2p_shift(pi, 4, {1, 1, 2}, {1, 1, 2}, da, db, p3), ConditionViolation);
    // no matching index at all
    CHECK_THROWS_AS(
        build_thm_2p_shift(pi, 1, {1, 1, 2}, {2, 1, 2}, da, db, p3), ConditionViolation);
    // two matching indices: b_1 = a_2 and b_2 = a_3
    CHECK_THROWS_AS(
        build_thm_2p_shift(pi, 1, {1, 1, 2}, {1, 2, 1}, da, db, p3), ConditionViolation);

    // tau beyond m wraps
    const MatrixFamily fam = build_thm_2p_shift(pi, 5, {1, 1, 2}, {1, 1, 1}, da, db, p3);
    CHECK(r_min(fam) == 4);

    // a constant b can still match at exactly one index (here t = 2, since
    // b_2 = a_3) and the construction keeps its near-optimal rank floor
    const MatrixFamily constb = build_thm_2p_shift(pi, 1, {1, 1, 2}, {2, 2, 2}, da, db, p3);
    CHECK(r_min(constb) >= 3);
}

TEST_CASE("six-block even-m construction") {
    const MatrixFamily fam = family_p3m4_even();
    REQUIRE(fam.size() == 6);
    CHECK(rows_of(fam, 0) ==
          Rows{{0, 0, 0, 2}, {0, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}});
    CHECK(rows_of(fam, 1) ==
          Rows{{1, 0, 0, 2}, {0, 1, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 1}});
    CHECK(rows_of(fam, 2) ==
          Rows{{2, 0, 0, 2}, {0, 2, 0, 0}, {0, 2, 2, 0}, {0, 0, 2, 2}});
    CHECK(rows_of(fam, 3) ==
          Rows{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}});
    CHECK(rows_of(fam, 4) ==
          Rows{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 2, 0}, {0, 0, 1, 1}});
    CHECK(rows_of(fam, 5) ==
          Rows{{2, 0, 0, 1}, {0, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}});
    CHECK(r_min(fam) == 4);

    // literal form (second triple equals the first) is accepted as-is
    const MatrixFamily literal = build_thm_p3_even(Permutation({1, 4, 3, 2}), {2, 2, 2},
                                                   {1, 1, 1}, {0, 0, 0, 0});
    CHECK(r_min(literal) == 4);

    // m = 8 is even but 8 mod 3 = 2
    std::vector<uint32_t> id8(8);
    for (uint32_t i = 0; i < 8; ++i) id8[i] = i + 1;
    CHECK_THROWS_AS(build_thm_p3_even(Permutation(id8), std::vector<uint8_t>(7, 1),
                                      std::vector<uint8_t>(7, 2), std::vector<uint8_t>(8, 0)),
                    ConditionViolation);
    // odd m
    CHECK_THROWS_AS(build_thm_p3_even(Permutation({1, 2, 3}), {1, 1}, {2, 2}, {0, 0, 0}),
                    ConditionViolation);
    // equal path entries
    CHECK_THROWS_AS(build_thm_p3_even(Permutation({1, 4, 3, 2}), {2, 2, 2}, {2, 1, 1},
                                      {0, 0, 0, 0}),
                    ConditionViolation);
    // second triple shifted at two coordinates
    CHECK_THROWS_AS(build_thm_p3_even(Permutation({1, 4, 3, 2}), {2, 2, 2}, {1, 1, 1},
                                      {0, 0, 0, 0}, std::vector<uint8_t>{1, 0, 1, 0}),
                    ConditionViolation);
}

TEST_CASE("even-m rank sweep over random valid paths") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<uint32_t> perm(4);
        for (uint32_t i = 0; i < 4; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<uint8_t> a(3), b(3), d1(4);
        for (uint32_t k = 0; k < 3; ++k) {
            a[k] = static_cast<uint8_t>(1 + rng() % 2);
            b[k] = static_cast<uint8_t>(3 - a[k]);
        }
        for (auto& v : d1) v = static_cast<uint8_t>(rng() % 3);
        const MatrixFamily fam = build_thm_p3_even(Permutation(perm), a, b, d1);
        CHECK(r_min(fam) == 4);
    }
}

TEST_CASE("index set U") {
    CHECK(compute_index_set_u(5).members == std::set<uint32_t>{1, 5});
    CHECK(compute_index_set_u(4).members == std::set<uint32_t>{2, 3});
    CHECK(compute_index_set_u(2).members == std::set<uint32_t>{1, 2});
    CHECK(compute_index_set_u(6).members == std::set<uint32_t>{1, 3, 4, 6});
    CHECK(compute_index_set_u(3).members == std::set<uint32_t>{1, 3});
    CHECK_THROWS_AS(compute_index_set_u(1), ValueError);
}

TEST_CASE("six-block any-m construction") {
    const MatrixFamily fam = family_p3m5_any();
    REQUIRE(fam.size() == 6);
    CHECK(rows_of(fam, 0) == Rows{{0, 2, 0, 0, 0},
                                  {0, 0, 1, 0, 0},
                                  {0, 0, 0, 2, 0},
                                  {0, 0, 0, 0, 2},
                                  {0, 0, 0, 0, 0}});
    CHECK(rows_of(fam, 3) == Rows{{0, 1, 0, 0, 0},
                                  {0, 0, 2, 0, 0},
                                  {0, 0, 0, 1, 0},
                                  {0, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 1}});
    CHECK(rows_of(fam, 5) == Rows{{2, 1, 0, 0, 0},
                                  {0, 2, 2, 0, 0},
                                  {0, 0, 2, 1, 0},
                                  {0, 0, 0, 2, 1},
                                  {0, 0, 0, 0, 0}});
    CHECK(r_min(fam) == 5);

    // s outside U
    CHECK_THROWS_AS(build_thm_p3_any(Permutation({1, 2, 3, 4, 5}), {2, 1, 2, 2}, {1, 2, 1, 1},
                                     {0, 0, 0, 0, 0}, 2, 1),
                    ConditionViolation);
    // zero shift amount
    CHECK_THROWS_AS(build_thm_p3_any(Permutation({1, 2, 3, 4, 5}), {2, 1, 2, 2}, {1, 2, 1, 1},
                                     {0, 0, 0, 0, 0}, 5, 0),
                    ConditionViolation);

    // smallest case m = 2
    const MatrixFamily tiny =
        build_thm_p3_any(Permutation({1, 2}), {1}, {2}, {0, 0}, 1, 1);
    CHECK(r_min(tiny) == 2);
}

TEST_CASE("any-m construction applies the shift at pi(s)") {
    // non-identity pi: shift lands at coordinate pi(s)
    const Permutation pi({2, 1});
    const MatrixFamily fam = build_thm_p3_any(pi, {1}, {2}, {0, 0}, 1, 2);
    // d_4 differs from d_1 at coordinate pi(1) = 2
    CHECK(fam.members[3].spec->d == std::vector<uint8_t>{0, 2});
    CHECK(r_min(fam) == 2);
}

TEST_CASE("rank lower bound holds on every constructed member") {
    for (const MatrixFamily& fam : {family_p5m3(), family_p3m4_diff(), family_p3m4_shift(),
                                    family_p3m4_even(), family_p3m5_any()})
        for (const auto& a : fam.members) CHECK(verify_rank_lower_bound(a));
}

TEST_CASE("configuration counting") {
    CHECK(count_configs(Variant::ThmLp, p3, 2) == 6);
    CHECK(count_configs(Variant::ThmLp, p3, 3) == 36);
    CHECK(count_configs(Variant::Thm2pDiff, p3, 2) == 36);
    CHECK(count_configs(Variant::Thm2pShift, p3, 3) == 1296);
    CHECK_THROWS_AS(count_configs(Variant::ThmP3Even, p3, 4), ValueError);
}

TEST_CASE("configuration count matches exhaustive enumeration") {
    // enumerate ordered d-triples over F_3^m with coordinate-wise distinct
    // values; families identical up to block order collapse to one
    for (uint32_t m : {2u, 3u}) {
        std::set<std::set<std::vector<uint8_t>>> families;
        const uint64_t total = *checked_pow(3, 3 * m);
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t rest = code;
            std::vector<std::vector<uint8_t>> ds(3, std::vector<uint8_t>(m));
            for (auto& d : ds)
                for (uint32_t k = 0; k < m; ++k) {
                    d[k] = static_cast<uint8_t>(rest % 3);
                    rest /= 3;
                }
            bool ok = true;
            for (uint32_t k = 0; k < m && ok; ++k)
                for (uint32_t i = 0; i < 3 && ok; ++i)
                    for (uint32_t j = i + 1; j < 3; ++j)
                        if (ds[i][k] == ds[j][k]) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            families.insert(std::set<std::vector<uint8_t>>(ds.begin(), ds.end()));
        }
        CHECK(families.size() == count_configs(Variant::ThmLp, p3, m));
    }
}

TEST_CASE("lifted spreading matrices") {
    const MatrixFamily fam = family_p3m4_diff();
    CHECK_THROWS_AS(lift_family_q(fam, 0), ValueError);
    CHECK_THROWS_AS(lift_family_q(fam, 5), ValueError);

    // h = 1 phases equal the base construction's
    const SpreadingMatrix base = spreading_matrix(fam);
    const SpreadingMatrix lifted1 = lift_family_q(fam, 1);
    for (uint64_t c : {0ull, 1ull, 80ull})
        CHECK(base.column(0, c).phases == lifted1.column(0, c).phases);

    // h = 2: exact within-block orthogonality; coherence within sqrt(p/M)
    const SpreadingMatrix lifted2 = lift_family_q(fam, 2);
    CHECK(lifted2.q() == 9);
    const auto quad = lifted2.quad_table(1);
    for (uint64_t c1 = 0; c1 < 9; ++c1)
        for (uint64_t c2 = c1 + 1; c2 < 9; ++c2)
            CHECK(is_zero_sum(inner_product_exact(lifted2.column_from_quad(quad, c1),
                                                  lifted2.column_from_quad(quad, c2))));
    const auto rep = coherence_bruteforce(lifted2);
    CHECK(rep.mu <= std::sqrt(3.0 / 81.0) + 1e-12);
    CHECK(rep.mu >= 1.0 / 9.0 - 1e-12);

    // the complementary-set bound survives the lift
    const SpreadingMatrix lifted25 = lift_family_q(family_p5m3(), 2);
    CHECK(lifted25.q() == 25);
    const auto papr = papr_set(lifted25, 8);
    CHECK(papr.set_estimate <= 5.0 + 1e-6);

    // q = 25 blocks stay exactly orthogonal (sampled pairs)
    const auto quad25 = lifted25.quad_table(2);
    for (uint64_t c1 = 0; c1 < 125; c1 += 13)
        for (uint64_t c2 = c1 + 7; c2 < 125; c2 += 17)
            CHECK(is_zero_sum(inner_product_exact(lifted25.column_from_quad(quad25, c1),
                                                  lifted25.column_from_quad(quad25, c2))));
}

TEST_CASE("smallest one-block set") {
    const QuadMatrix a = psi(PsiSpec{Permutation({1}), {}, {1}, p3});
    const SpreadingMatrix phi{p3, 1, 1, {a}, "single"};
    CHECK(phi.seq_len() == 3);
    CHECK(phi.num_columns() == 3);
    // column c has phases d x^2 + c x: a quadratic-phase chirp over Z_3
    for (uint64_t c = 0; c < 3; ++c) {
        const PhaseSequence col = phi.column(0, c);
        for (uint32_t x = 0; x < 3; ++x)
            CHECK(col.phases[x] == (x * x + c * x) % 3);
    }
    // the three columns are pairwise orthogonal
    for (uint64_t c1 = 0; c1 < 3; ++c1)
        for (uint64_t c2 = c1 + 1; c2 < 3; ++c2)
            CHECK(is_zero_sum(inner_product_exact(phi.column(0, c1), phi.column(0, c2))));
}

TEST_CASE("materialization order and budget") {
    const MatrixFamily fam = family_p5m3();
    const SpreadingMatrix phi = spreading_matrix(fam);
    const auto cols = materialize_phi(phi);
    REQUIRE(cols.size() == 625);
    CHECK(cols[0].phases == phi.column(0, 0).phases);
    CHECK(cols[126].phases == phi.column(1, 1).phases);
    CHECK(cols[624].phases == phi.column(4, 124).phases);

    CHECK_THROWS_AS(materialize_phi(phi, 1000), CapacityError);
}

TEST_CASE("reference column table") {
    const SpreadingMatrix phi = spreading_matrix(family_p3m4_diff());
    const uint64_t last = phi.seq_len() - 1;
    for (size_t b = 0; b < 6; ++b) {
        size_t slot = b * 3;
        for (uint64_t c : {uint64_t(0), uint64_t(1), last}) {
            const PhaseSequence col = phi.column(b, c);
            for (size_t k = 0; k < 81; ++k)
                CHECK(col.phases[k] == uint32_t(kRefCols[slot][k]));
            ++slot;
        }
    }
}

TEST_CASE("variant names round trip") {
    for (Variant v : {Variant::ThmLp, Variant::Thm2pDiff, Variant::Thm2pShift,
                      Variant::ThmP3Even, Variant::ThmP3Any})
        CHECK(variant_from_name(variant_name(v)) == v);
    CHECK_FALSE(variant_from_name("nope").has_value());
}
