#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treetp/search.hpp"
#include "treetp/spectral.hpp"

using namespace treetp;

TEST_CASE("to_float / to_exact: dyadic round trip is lossless") {
    std::mt19937_64 rng(400);
    ExactMatrix m(3);
    std::uniform_int_distribution<long> num(-65, 99);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = make_rational(num(rng), 64);
    FloatMatrix f = to_float(m);
    CHECK(to_exact(f) == m);  // denominators are powers of two, so exact
}

TEST_CASE("smallest_eigenpair: [[2,1],[1,2]]") {
    FloatMatrix a(2, 2);
    a << 2, 1, 1, 2;
    EigenPair p = smallest_eigenpair(a);
    CHECK(p.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p.simple);
    CHECK(p.residual <= 1e-10 * a.norm());
    // Eigenvector proportional to (1, -1), unit norm.
    CHECK(std::abs(p.vector(0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(p.vector(1) == doctest::Approx(-p.vector(0)).epsilon(1e-8));
}

TEST_CASE("smallest_eigenpair matches exact char-poly bisection on a 3x3") {
    ExactMatrix pascal{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
    EigenPair p = smallest_eigenpair(to_float(pascal));
    const Rational dyadic_tol = Rational(1) / (Integer(1) << 40);
    const Rational exact = *char_poly(pascal).smallest_real_root(dyadic_tol);
    CHECK(p.value == doctest::Approx(to_double(exact)).epsilon(1e-9));
    CHECK(p.simple);
}

TEST_CASE("smallest_eigenpair: repeated eigenvalue reported as non-simple") {
    FloatMatrix eye = FloatMatrix::Identity(3, 3);
    EigenPair p = smallest_eigenpair(eye);
    CHECK(p.value == doctest::Approx(1.0));
    CHECK_FALSE(p.simple);
}

TEST_CASE("smallest_eigenpair: singular and complex-spectrum inputs throw") {
    FloatMatrix zero = FloatMatrix::Zero(2, 2);
    CHECK_THROWS_AS(smallest_eigenpair(zero), SpectralError);

    FloatMatrix rot(2, 2);
    rot << 0, -1, 1, 0;  // eigenvalues +-i
    CHECK_THROWS_AS(smallest_eigenpair(rot), SpectralError);
}

TEST_CASE("largest_eigenpair: Perron pair of a positive matrix") {
    FloatMatrix a(2, 2);
    a << 2, 1, 1, 2;
    EigenPair p = largest_eigenpair(a);
    CHECK(p.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(p.vector(0) > 0);
    CHECK(p.vector(1) > 0);
    CHECK(p.residual <= 1e-9 * a.norm());

    FloatMatrix neg(2, 2);
    neg << 1, -1, 1, 1;
    CHECK_THROWS_AS(largest_eigenpair(neg), std::invalid_argument);
}

TEST_CASE("signing_verdict: sign pattern up to a global flip") {
    auto path3 = parse_tree("1 2\n2 3\n");
    VertexSigning sigma = path3.signing();  // (+1, -1, +1)

    Eigen::VectorXd v(3);
    v << 0.5, -0.7, 0.3;
    CHECK(signing_verdict(v, sigma).pass);
    CHECK(signing_verdict(-v, sigma).pass);       // global flip allowed
    CHECK(signing_verdict(10.0 * v, sigma).pass); // scale invariant

    Eigen::VectorXd wrong(3);
    wrong << 0.5, 0.7, 0.3;
    auto verdict = signing_verdict(wrong, sigma);
    CHECK_FALSE(verdict.pass);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->rows == std::vector<int>{2});

    Eigen::VectorXd tiny(3);
    tiny << 0.5, -1e-12, 0.3;  // component below the zero tolerance
    CHECK_FALSE(signing_verdict(tiny, sigma).pass);
}

TEST_CASE("verify_theorem: generated TP matrices on a path pass end to end") {
    auto path5 = parse_tree("1 2\n2 3\n3 4\n4 5\n");
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        ExactMatrix a = generate_tp(5, seed);
        TheoremVerdict v = verify_theorem(a, path5);
        CHECK(v.status == TheoremStatus::pass);
        CHECK(v.hypotheses.all_hold);
        CHECK(v.sign_pattern.clean());
        REQUIRE(v.smallest.has_value());
        CHECK(v.smallest->simple);
        CHECK(v.smallest->residual <= 1e-10 * to_float(a).norm());
        CHECK(v.signing.pass);
        CHECK(v.routes_agree);
    }
}

TEST_CASE("verify_theorem: hypotheses gate") {
    auto edge = parse_tree("1 2\n");
    ExactMatrix bad{{1, 2}, {3, 4}};  // positive entries, det < 0
    TheoremVerdict v = verify_theorem(bad, edge);
    CHECK(v.status == TheoremStatus::hypotheses_not_met);
    CHECK_FALSE(v.smallest.has_value());
    CHECK_FALSE(v.routes_agree);
}

TEST_CASE("spectral values agree with the exact route on symmetric matrices") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        ExactMatrix m = oracles::random_positive_symmetric(n, rng);
        Polynomial p = char_poly(m);
        const Rational tol = Rational(1) / (Integer(1) << 48);
        auto lo = p.smallest_real_root(tol);
        REQUIRE(lo.has_value());
        EigenPair small = smallest_eigenpair(to_float(m));
        CHECK(small.value ==
              doctest::Approx(to_double(*lo)).epsilon(1e-9));

        auto hi = p.largest_real_root(tol);
        EigenPair big = largest_eigenpair(to_float(m));
        CHECK(big.value == doctest::Approx(to_double(*hi)).epsilon(1e-9));
    }
}
