#include "scv/commutant.hpp"

#include "scv/corpus.hpp"
#include "scv/modes.hpp"
#include "scv/partitions.hpp"
#include "scv/variety.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace scv;

TEST_SUITE_BEGIN("commutant");

namespace {

Matrix from_strings(std::vector<std::vector<const char*>> rows) {
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = GaussianRational::parse(rows[r][c]);
    return m;
}

ScPoint point(long d, Matrix a) {
    return ScPoint::from_quadratic(QuadraticVector{d, std::move(a), Vector(d), Vector(d)});
}

}  // namespace

TEST_CASE("colored partition series") {
    auto p0 = colored_partition_numbers(0, 5);
    CHECK(p0 == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
    auto p1 = colored_partition_numbers(1, 8);
    CHECK(p1 == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11, 15, 22});
    auto p2 = colored_partition_numbers(2, 8);
    CHECK(p2 == std::vector<std::int64_t>{1, 2, 5, 10, 20, 36, 65, 110, 185});
    auto p3 = colored_partition_numbers(3, 6);
    CHECK(p3 == std::vector<std::int64_t>{1, 3, 9, 22, 51, 108, 221});
}

TEST_CASE("graded operator degenerate cases") {
    // For the top point, L(-1) - L'(-1) = 0 at every degree.
    ScPoint top = point(2, Matrix::identity(2));
    for (long n = 0; n <= 4; ++n)
        CHECK(graded_operator(top, GradedWhich::l_minus_lprime_minus1, n).matrix.is_zero());
    // For the bottom point, L'(-1) = 0.
    ScPoint zero = point(2, Matrix(2, 2));
    for (long n = 0; n <= 4; ++n)
        CHECK(graded_operator(zero, GradedWhich::lprime_minus1, n).matrix.is_zero());
}

TEST_CASE("graded operator agrees with the mode-calculus route") {
    // Explicit normal-ordered expansion vs reconstruction-based evaluation,
    // column by column.
    std::vector<ScPoint> points{
        point(2, from_strings({{"1", "0"}, {"0", "0"}})),
        point(2, from_strings({{"1/2", "1/2"}, {"1/2", "1/2"}})),
        point(2, from_strings({{"4/3", "2/3i"}, {"2/3i", "-1/3"}})),
        point(3, Matrix::identity(3)),
    };
    for (const ScPoint& p : points) {
        FockElement omega_p = p.state();
        FockElement omega = conformal_vector(p.d(), Vector(p.d()));
        for (long n = 0; n <= 4; ++n) {
            GradedBasis src = basis_of_degree(p.d(), n);
            GradedBasis dst = basis_of_degree(p.d(), n + 1);
            GradedMap lp = graded_operator(p, GradedWhich::lprime_minus1, n);
            GradedMap diff = graded_operator(p, GradedWhich::l_minus_lprime_minus1, n);
            for (std::size_t c = 0; c < src.size(); ++c) {
                FockElement b = FockElement::single(p.d(), src.at(c));
                Vector expect_lp = dst.coordinates(virasoro_mode(omega_p, -1, b));
                Vector expect_diff = dst.coordinates(virasoro_mode(omega, -1, b) -
                                                     virasoro_mode(omega_p, -1, b));
                for (std::size_t r = 0; r < dst.size(); ++r) {
                    CHECK(lp.matrix.at(r, c) == expect_lp[r]);
                    CHECK(diff.matrix.at(r, c) == expect_diff[r]);
                }
            }
        }
    }
}

TEST_CASE("kernel of L'(-1) on V_1 for diag(1,0)") {
    ScPoint diag = point(2, from_strings({{"1", "0"}, {"0", "0"}}));
    GradedMap lp = graded_operator(diag, GradedWhich::lprime_minus1, 1);
    auto k = kernel(lp.matrix);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == GaussianRational(0));  // kernel = span{h_2(-1)1}
    CHECK(k[0][1] == GaussianRational(1));
}

TEST_CASE("commutant dimensions match colored partitions") {
    // d = 2, rank 1: commutant dims are 1-color partition numbers.
    ScPoint diag = point(2, from_strings({{"1", "0"}, {"0", "0"}}));
    CommutantProfile prof = commutant_dims(diag, 5);
    CHECK(prof.dims_commutant == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7});
    CHECK(prof.dims_double_commutant == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7});
    CHECK(prof.matches_expected());

    // d = 2, rank 2 (the top point): the commutant is trivial, so L(-1) is
    // injective on V_n for n >= 1.
    ScPoint top = point(2, Matrix::identity(2));
    prof = commutant_dims(top, 5);
    CHECK(prof.dims_commutant == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
    CHECK(prof.dims_double_commutant == std::vector<std::int64_t>{1, 2, 5, 10, 20, 36});
    CHECK(prof.matches_expected());

    // d = 3, rank 1: the double commutant is a rank-1 Heisenberg piece.
    Matrix r1(3, 3);
    r1.at(0, 0) = GaussianRational(1);
    prof = commutant_dims(point(3, r1), 4);
    CHECK(prof.dims_double_commutant == std::vector<std::int64_t>{1, 1, 2, 3, 5});
    CHECK(prof.dims_commutant == std::vector<std::int64_t>{1, 2, 5, 10, 20});
    CHECK(prof.matches_expected());
}

TEST_CASE("L(-1) injectivity on V_n for n in 1..6") {
    ScPoint top2 = point(2, Matrix::identity(2));
    CommutantProfile prof = commutant_dims(top2, 6);
    for (long n = 1; n <= 6; ++n) CHECK(prof.dims_commutant[n] == 0);
}

TEST_CASE("lambda != 0 is rejected") {
    Vector lam{GaussianRational(1)};
    ScPoint p = ScPoint::from_quadratic(QuadraticVector{1, Matrix::identity(1), lam, lam});
    CHECK_THROWS_AS(commutant_dims(p, 3), std::invalid_argument);
    CHECK_THROWS_AS(graded_operator(p, GradedWhich::lprime_minus1, 1), std::invalid_argument);
}

TEST_CASE("weight-1 identification") {
    CHECK(weight1_identification(point(2, Matrix::identity(2))));
    CHECK(weight1_identification(point(2, from_strings({{"1", "0"}, {"0", "0"}}))));
    CHECK(weight1_identification(point(2, from_strings({{"1/2", "1/2"}, {"1/2", "1/2"}}))));
    CHECK(weight1_identification(point(2, from_strings({{"4/3", "2/3i"}, {"2/3i", "-1/3"}}))));
    for (const ScPoint& p : [] {
             CorpusOptions co;
             co.d = 3;
             co.positive_target = 10;
             co.negative_target = 1;
             co.seed = 3;
             return make_corpus(co).positives;
         }())
        CHECK(weight1_identification(p));
}

TEST_CASE("tensor decomposition convolution") {
    // d = 2, r = 1 at n = 2: 1*2 + 1*1 + 2*1 = 5 = dim V_2.
    ScPoint diag = point(2, from_strings({{"1", "0"}, {"0", "0"}}));
    CommutantProfile prof = commutant_dims(diag, 4);
    std::int64_t conv = prof.dims_commutant[0] * prof.dims_double_commutant[2] +
                        prof.dims_commutant[1] * prof.dims_double_commutant[1] +
                        prof.dims_commutant[2] * prof.dims_double_commutant[0];
    CHECK(conv == 5);
    CHECK(tensor_dim_check(prof));

    // Trivial factors at the bottom and top points.
    CHECK(tensor_dim_check(point(2, Matrix(2, 2)), 5));
    CHECK(tensor_dim_check(point(2, Matrix::identity(2)), 5));

    // d = 3, rank 2 through degree 5.
    Matrix r2(3, 3);
    r2.at(0, 0) = GaussianRational(1);
    r2.at(1, 1) = GaussianRational(1);
    CHECK(tensor_dim_check(point(3, r2), 5));
}

TEST_CASE("involution swaps the two dimension sequences") {
    for (const ScPoint& p : {point(2, from_strings({{"1/2", "1/2"}, {"1/2", "1/2"}})),
                             point(2, from_strings({{"4/3", "2/3i"}, {"2/3i", "-1/3"}}))}) {
        CommutantProfile prof = commutant_dims(p, 4);
        CommutantProfile iprof = commutant_dims(involution(p), 4);
        CHECK(prof.dims_commutant == iprof.dims_double_commutant);
        CHECK(prof.dims_double_commutant == iprof.dims_commutant);
    }
}

TEST_CASE("dimension-criterion decomposition test") {
    ScPoint diag = point(2, from_strings({{"1", "0"}, {"0", "0"}}));
    CHECK(dimension_criterion_check(diag, 4) == DimensionCriterion::holds);

    Matrix r1(3, 3);
    r1.at(0, 0) = GaussianRational(1);
    CHECK(dimension_criterion_check(point(3, r1), 4) == DimensionCriterion::holds);

    CHECK(dimension_criterion_check(point(2, Matrix(2, 2)), 4) == DimensionCriterion::precondition_violated);
    CHECK(dimension_criterion_check(point(2, Matrix::identity(2)), 4) ==
          DimensionCriterion::precondition_violated);
}

TEST_SUITE_END();
