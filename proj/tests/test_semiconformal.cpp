#include "scv/semiconformal.hpp"

#include "scv/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

using namespace scv;

TEST_SUITE_BEGIN("semiconformal");

namespace {

Matrix from_strings(std::vector<std::vector<const char*>> rows) {
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = GaussianRational::parse(rows[r][c]);
    return m;
}

QuadraticVector quad(long d, Matrix a, Vector b, Vector lambda) {
    return QuadraticVector{d, std::move(a), std::move(b), std::move(lambda)};
}

Vector zeros(long d) { return Vector(d); }

}  // namespace

TEST_CASE("matrix form extraction") {
    // omega at d = 2 has A = I, B = 0.
    FockElement omega = conformal_vector(2, zeros(2));
    QuadraticVector q = fock_to_quadratic(omega, zeros(2));
    CHECK(q.A == Matrix::identity(2));
    CHECK(q.B == zeros(2));

    // h_1(-1)h_2(-1)1 has the off-diagonal convention A = [[0,1],[1,0]].
    FockElement cross = FockElement::single(2, FockMonomial({{1, 1}, {1, 2}}));
    q = fock_to_quadratic(cross, zeros(2));
    CHECK(q.A == from_strings({{"0", "1"}, {"1", "0"}}));

    q = fock_to_quadratic(FockElement::zero(2), zeros(2));
    CHECK(q.A == Matrix(2, 2));
    CHECK(q.B == zeros(2));

    FockElement inhomogeneous = FockElement::vacuum(2) + cross;
    CHECK_THROWS_AS(fock_to_quadratic(inhomogeneous, zeros(2)), std::invalid_argument);
}

TEST_CASE("matrix/fock round trip is exact on weight-2 bases") {
    for (long d = 1; d <= 3; ++d) {
        GradedBasis basis = basis_of_degree(d, 2);
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            FockElement v = FockElement::single(d, basis.at(bi), rational_of(3, 7));
            QuadraticVector q = fock_to_quadratic(v, zeros(d));
            CHECK(quadratic_to_fock(q) == v);
        }
    }
}

TEST_CASE("check_matrix conditions") {
    Vector lam0 = zeros(2);
    CHECK(check_matrix(quad(2, Matrix::identity(2), zeros(2), lam0)));
    CHECK(check_matrix(quad(2, from_strings({{"1/2", "1/2"}, {"1/2", "1/2"}}), zeros(2), lam0)));
    CHECK_FALSE(check_matrix(quad(2, from_strings({{"0", "1"}, {"1", "0"}}), zeros(2), lam0)));

    // Shift compatibility A lambda^T = B.
    Vector lam{GaussianRational(1), GaussianRational(0)};
    Matrix a = from_strings({{"1", "0"}, {"0", "0"}});
    Vector b{GaussianRational(1), GaussianRational(0)};
    CHECK(check_matrix(quad(2, a, b, lam)));
    CHECK_FALSE(check_matrix(quad(2, a, zeros(2), lam)));

    // Identity with B = lambda^T is the conformal vector itself.
    CHECK(check_matrix(quad(2, Matrix::identity(2), lam, lam)));

    CHECK_THROWS_AS(check_matrix(quad(2, Matrix::identity(3), zeros(2), lam0)),
                    std::invalid_argument);
}

TEST_CASE("check_direct on canonical examples") {
    // omega_lambda is semi-conformal in itself, c' read from L(2).
    for (long d = 1; d <= 2; ++d) {
        FockElement omega = conformal_vector(d, zeros(d));
        CheckReport rep = check_direct(omega, zeros(d));
        CHECK(rep.verdict);
        REQUIRE(rep.central_charge.has_value());
        CHECK(*rep.central_charge == GaussianRational(d));
    }

    CheckReport zero = check_direct(FockElement::zero(2), zeros(2));
    CHECK(zero.verdict);
    CHECK(*zero.central_charge == GaussianRational(0));

    FockElement proj = FockElement::single(2, FockMonomial({{1, 1}, {1, 1}}), rational_of(1, 2));
    CheckReport rp = check_direct(proj, zeros(2));
    CHECK(rp.verdict);
    CHECK(*rp.central_charge == GaussianRational(1));

    FockElement cross = FockElement::single(2, FockMonomial({{1, 1}, {1, 2}}));
    CheckReport rc = check_direct(cross, zeros(2));
    CHECK_FALSE(rc.verdict);
    CHECK_FALSE(rc.failures.empty());
}

TEST_CASE("check_direct records the failing equation tags") {
    FockElement inhomogeneous = FockElement::vacuum(2);
    CheckReport rep = check_direct(inhomogeneous, zeros(2));
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].equation == "weight2");
}

TEST_CASE("oracle equivalence: check_direct iff check_matrix on seeded corpora") {
    // The acceptance suite runs the full battery; this is the per-module slice.
    for (long d = 1; d <= 2; ++d) {
        for (bool nonzero : {false, true}) {
            CorpusOptions co;
            co.d = d;
            co.lambda = zeros(d);
            if (nonzero) co.lambda[0] = GaussianRational(1);
            co.positive_target = 10;
            co.negative_target = 25;
            co.seed = 42 + d;
            Corpus corpus = make_corpus(co);
            for (const QuadraticVector& q : corpus.candidates) {
                bool matrix_route = check_matrix(q);
                CheckReport direct = check_direct(quadratic_to_fock(q), q.lambda);
                CHECK(matrix_route == direct.verdict);
            }
        }
    }
}

TEST_CASE("accepted points have c' = trace(A) = rank(A) at lambda = 0") {
    CorpusOptions co;
    co.d = 3;
    co.lambda = zeros(3);
    co.positive_target = 8;
    co.negative_target = 5;
    co.seed = 7;
    for (const ScPoint& p : make_corpus(co).positives) {
        CheckReport rep = check_direct(p.state(), p.lambda());
        REQUIRE(rep.verdict);
        REQUIRE(rep.central_charge.has_value());
        CHECK(*rep.central_charge == p.A().trace());
        CHECK(*rep.central_charge == GaussianRational(static_cast<long>(p.rank_of_A())));
        CHECK(*rep.central_charge == p.central_charge());
    }
}

TEST_CASE("scpoint construction validates") {
    CHECK_THROWS_AS(ScPoint::from_quadratic(
                        quad(2, from_strings({{"0", "1"}, {"1", "0"}}), zeros(2), zeros(2))),
                    std::invalid_argument);
    ScPoint p = ScPoint::from_quadratic(
        quad(2, from_strings({{"4/3", "2/3i"}, {"2/3i", "-1/3"}}), zeros(2), zeros(2)));
    CHECK(p.rank_of_A() == 1);
    CHECK(p.central_charge() == GaussianRational(1));
}

TEST_CASE("polynomial system: d = 1 zero set and general structure") {
    std::string sys = emit_polynomial_system(1, zeros(1));
    CHECK(sys ==
          "2*a_1_1^2 - a_1_1\n"
          "2*a_1_1*b_1 - b_1\n"
          "b_1\n"
          "2*a_1_1^2 - 6*b_1^2 - a_1_1\n");

    // d = 1 with a shift: zero set corresponds to (A,B) in {(0,0), (1,lambda)}.
    Vector lam{GaussianRational(1)};
    std::string shifted = emit_polynomial_system(1, lam);
    CHECK(shifted.find("2*a_1_1 - b_1") != std::string::npos);

    // Row count: d diagonal + d AB + d ALambda + 1 scalar + d(d-1)/2 off-diagonal.
    auto count_lines = [](const std::string& s) {
        return std::count(s.begin(), s.end(), '\n');
    };
    for (long d = 1; d <= 3; ++d) {
        std::string text = emit_polynomial_system(d, zeros(d));
        CHECK(count_lines(text) == 3 * d + 1 + d * (d - 1) / 2);
    }
}

namespace {

// Minimal evaluator for the emitted polynomial text, used as an independent
// route: substitute a candidate's coefficients into every line.
GaussianRational eval_term(const std::string& term,
                           const std::map<std::string, GaussianRational>& vals) {
    std::string rest = term;
    GaussianRational value(1);
    if (!rest.empty() && rest[0] == '(') {
        auto close = rest.find(')');
        REQUIRE(close != std::string::npos);
        value = GaussianRational::parse(rest.substr(1, close - 1));
        rest = close + 1 < rest.size() ? rest.substr(close + 2) : "";  // skip ")*"
    }
    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (start <= rest.size() && !rest.empty()) {
        auto star = rest.find('*', start);
        pieces.push_back(rest.substr(start, star - start));
        if (star == std::string::npos) break;
        start = star + 1;
    }
    for (const std::string& piece : pieces) {
        if (piece.empty()) continue;
        if (std::isdigit(static_cast<unsigned char>(piece[0]))) {
            value *= GaussianRational::parse(piece);
            continue;
        }
        auto caret = piece.find('^');
        std::string name = piece.substr(0, caret);
        long exp = caret == std::string::npos ? 1 : std::stol(piece.substr(caret + 1));
        auto it = vals.find(name);
        REQUIRE(it != vals.end());
        for (long e = 0; e < exp; ++e) value *= it->second;
    }
    return value;
}

GaussianRational eval_poly_line(const std::string& line,
                                const std::map<std::string, GaussianRational>& vals) {
    GaussianRational total(0);
    std::size_t pos = 0;
    GaussianRational sign(1);
    if (!line.empty() && line[0] == '-') {
        sign = GaussianRational(-1);
        pos = 1;
    }
    while (pos < line.size()) {
        std::size_t plus = line.find(" + ", pos);
        std::size_t minus = line.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        total += sign * eval_term(line.substr(pos, cut - pos), vals);
        if (cut == std::string::npos) break;
        sign = GaussianRational(cut == plus ? 1 : -1);
        pos = cut + 3;
    }
    return total;
}

std::map<std::string, GaussianRational> coefficient_values(const QuadraticVector& q) {
    std::map<std::string, GaussianRational> vals;
    for (long i = 1; i <= q.d; ++i) {
        for (long j = i; j <= q.d; ++j) {
            GaussianRational a = q.A.at(i - 1, j - 1);
            if (i == j) a = a * rational_of(1, 2);  // A_ii = 2 a_ii
            vals["a_" + std::to_string(i) + "_" + std::to_string(j)] = a;
        }
        vals["b_" + std::to_string(i)] = q.B[i - 1];
    }
    return vals;
}

}  // namespace

TEST_CASE("emitted polynomial system vanishes exactly on accepted points") {
    for (long d = 1; d <= 2; ++d) {
        for (bool nonzero : {false, true}) {
            Vector lam = zeros(d);
            if (nonzero) lam[0] = rational_of(1, 2);
            CorpusOptions co;
            co.d = d;
            co.lambda = lam;
            co.positive_target = 6;
            co.negative_target = 12;
            co.seed = 99 + d;
            Corpus corpus = make_corpus(co);
            std::string text = emit_polynomial_system(d, lam);
            std::vector<std::string> lines;
            std::istringstream is(text);
            for (std::string line; std::getline(is, line);) lines.push_back(line);

            for (const QuadraticVector& q : corpus.candidates) {
                auto vals = coefficient_values(q);
                bool vanishes = true;
                for (const std::string& line : lines)
                    if (!eval_poly_line(line, vals).is_zero()) vanishes = false;
                CHECK(vanishes == check_matrix(q));
            }
        }
    }
}

TEST_CASE("norm-one construction") {
    // h = h_1(-1)1: A = diag(1, 0, ...), c' = 1.
    FockElement h1 = FockElement::single(2, FockMonomial({{1, 1}}));
    ScPoint p = omega_from_norm_one(h1);
    CHECK(p.A() == from_strings({{"1", "0"}, {"0", "0"}}));
    CHECK(p.central_charge() == GaussianRational(1));

    // u = (3/5, 4/5): A = u u^T.
    FockElement h35(2);
    h35.add_term(FockMonomial({{1, 1}}), rational_of(3, 5));
    h35.add_term(FockMonomial({{1, 2}}), rational_of(4, 5));
    ScPoint p35 = omega_from_norm_one(h35);
    CHECK(p35.A() == from_strings({{"9/25", "12/25"}, {"12/25", "16/25"}}));
    CHECK(p35.central_charge() == GaussianRational(1));

    // Isotropic h_1 + i h_2 is rejected with the actual norm in the message.
    FockElement iso(2);
    iso.add_term(FockMonomial({{1, 1}}), GaussianRational(1));
    iso.add_term(FockMonomial({{1, 2}}), GaussianRational::i());
    CHECK_THROWS_WITH_AS(omega_from_norm_one(iso), "state has <h,h> = 0, need 1",
                         std::domain_error);

    // sqrt(2)-normalized states do not exist over Q(i): (1,1) has norm 2.
    FockElement h11(2);
    h11.add_term(FockMonomial({{1, 1}}), GaussianRational(1));
    h11.add_term(FockMonomial({{1, 2}}), GaussianRational(1));
    CHECK_THROWS_AS(omega_from_norm_one(h11), std::domain_error);
}

TEST_SUITE_END();
