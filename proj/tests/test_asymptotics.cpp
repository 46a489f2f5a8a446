#include "seifert/asymptotics.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace seifert;
using oracles::cls;
using oracles::index_of;
using oracles::signature;

namespace {

// least m >= 1 with m*beta divisible by alpha
Integer lambda_brute(const Integer& alpha, const Integer& beta) {
    for (Integer m = 1;; ++m)
        if (m * beta % alpha == 0)
            return m;
}

} // namespace

TEST_CASE("lambda of a fiber pair") {
    CHECK(lambda_of(7, 1) == 7);
    CHECK(lambda_of(6, 0) == 1);
    CHECK(lambda_of(12, 8) == 3);
    CHECK(lambda_of(12, 8) == lambda_brute(12, 8));
    CHECK_THROWS_AS(lambda_of(5, 5), Error);
    CHECK_THROWS_AS(lambda_of(5, -1), Error);

    std::mt19937 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const Integer alpha = 2 + int(rng() % 40);
        const Integer beta = Integer(int(rng() % 1000)) % alpha;
        const Integer lambda = lambda_of(alpha, beta);
        CHECK(lambda == lambda_brute(alpha, beta));
        CHECK(lambda >= 1);
        CHECK(lambda <= alpha);
        CHECK(alpha % lambda == 0);
        // gcd symmetry behind orientation invariance
        CHECK(lambda == lambda_of(alpha, beta == 0 ? Integer(0) : alpha - beta));
    }
}

TEST_CASE("rotation order matches lambda and its numerical oracle") {
    CHECK(rotation_order(1, 2) == 2);
    CHECK(rotation_order(0, 5) == 1);
    CHECK(rotation_order(2, 6) == 3);

    for (long long alpha = 2; alpha <= 60; ++alpha)
        for (long long beta = 0; beta < alpha; ++beta)
            CHECK(rotation_order(beta, alpha) == lambda_of(alpha, beta));
}

TEST_CASE("leading coefficient of the Brieskorn sphere") {
    const AsymptoticsReport report = leading_coefficient(index_of(0, -1, {{2, 1}, {3, 1}, {7, 1}}));
    CHECK(report.lambdas == std::vector<Integer>{2, 3, 7});
    CHECK(report.coefficient.rational_part == Rational(1, 42));
    CHECK(report.coefficient.rational_part ==
          -orbifold_euler_characteristic(signature(0, {2, 3, 7})));
    CHECK(report.equals_minus_chi_log2);
    CHECK(report.quadratic_limit == 0);
    CHECK(report.flags.empty());

    // fiber reversal keeps the coefficient
    const AsymptoticsReport rev = leading_coefficient(index_of(0, -2, {{2, 1}, {3, 2}, {7, 6}}));
    CHECK(rev.coefficient.rational_part == Rational(1, 42));
    CHECK(rev.equals_minus_chi_log2);
}

TEST_CASE("leading coefficient of unit tangent bundles") {
    const AsymptoticsReport genus2 = leading_coefficient(unit_tangent_bundle(signature(2, {})));
    CHECK(genus2.coefficient.rational_part == Rational(2));
    CHECK(genus2.equals_minus_chi_log2);
    CHECK(genus2.flags.empty());

    const AsymptoticsReport t237 = leading_coefficient(unit_tangent_bundle(signature(0, {2, 3, 7})));
    CHECK(t237.coefficient.rational_part == Rational(1, 42));
}

TEST_CASE("coefficient is invariant under orientation reversal") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 400; ++trial) {
        const SeifertIndex idx = oracles::random_normalized_index(rng, 3, 5, 30);
        CHECK(leading_coefficient(idx).coefficient.rational_part ==
              leading_coefficient(orientation_reverse(idx)).coefficient.rational_part);
    }
}

TEST_CASE("coefficient equals -chi exactly when all pairs are coprime") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        SeifertIndex idx = oracles::random_normalized_index(rng, 3, 5, 30);
        bool coprime = true;
        for (const Fiber& f : idx.fibers)
            coprime = coprime && gcd(f.alpha, f.beta) == 1;
        const AsymptoticsReport report = leading_coefficient(idx);
        CHECK(report.equals_minus_chi_log2 == coprime);
        if (coprime)
            CHECK(report.coefficient.rational_part ==
                  -orbifold_euler_characteristic(idx.signature()));
    }

    // a shared factor lowers lambda and moves the value off -chi
    const AsymptoticsReport shared = leading_coefficient(index_of(0, -1, {{4, 2}, {3, 1}, {7, 1}}));
    CHECK_FALSE(shared.equals_minus_chi_log2);
    CHECK(shared.lambdas == std::vector<Integer>{2, 3, 7});
    CHECK(shared.coefficient.rational_part !=
          -orbifold_euler_characteristic(signature(0, {4, 3, 7})));
}

TEST_CASE("unrealizable classes are flagged, not rejected") {
    const AsymptoticsReport report = leading_coefficient(index_of(0, 5, {{2, 1}, {3, 1}, {7, 1}}));
    CHECK(report.flags == std::vector<std::string>{"NOT_REALIZABLE"});
    CHECK(report.coefficient.rational_part == Rational(1, 42));
}

TEST_CASE("alternative lifts") {
    const SeifertIndex brieskorn = index_of(0, -1, {{2, 1}, {3, 1}, {7, 1}});

    const AsymptoticsReport alt =
        leading_coefficient_for_class(brieskorn, cls(signature(0, {2, 3, 7}), {-2, 1, 2, 6}));
    CHECK(alt.lambdas == std::vector<Integer>{2, 3, 7});
    CHECK(alt.coefficient.rational_part == Rational(1, 42));

    const AsymptoticsReport self =
        leading_coefficient_for_class(brieskorn, euler_class_of_index(brieskorn));
    CHECK(self.coefficient.rational_part ==
          leading_coefficient(brieskorn).coefficient.rational_part);
    CHECK(self.lambdas == leading_coefficient(brieskorn).lambdas);

    // realizable-but-inequivalent (genus 2, parity of b flips)
    const SeifertIndex tangent = unit_tangent_bundle(signature(2, {}));
    CHECK_THROWS_AS(leading_coefficient_for_class(tangent, cls(signature(2, {}), {1})),
                    NotEquivalent);
    // equivalent-but-unrealizable
    CHECK_THROWS_AS(
        leading_coefficient_for_class(brieskorn, cls(signature(0, {2, 3, 7}), {-3, 1, 1, 1})),
        NotRealizable);
    CHECK_THROWS_AS(
        leading_coefficient_for_class(brieskorn, cls(signature(0, {2, 3, 5}), {-1, 1, 1, 1})),
        SignatureMismatch);
}

TEST_CASE("different lifts can give different coefficients") {
    // lambda (2,2) against (4,6) over the same alphas
    CHECK(coefficient_from_lambdas(0, {2, 2}) == Rational(-1));
    CHECK(coefficient_from_lambdas(0, {4, 6}) == Rational(-5, 12));
    CHECK(coefficient_from_lambdas(0, {2, 2}) != coefficient_from_lambdas(0, {4, 6}));
    // independent route: -(2 - sum (l-1)/l) accumulated by hand
    CHECK(coefficient_from_lambdas(0, {4, 6}) == -(Rational(2) - Rational(3, 4) - Rational(5, 6)));
}

TEST_CASE("decimal rendering of coefficients") {
    CHECK(decimal_rendering({Rational(1, 42)}, 12) == "0.016503504299");
    CHECK(decimal_rendering({Rational(2)}, 12) == "1.38629436112");
    CHECK(decimal_rendering({Rational(0)}, 12) == "0");
    CHECK(decimal_rendering({Rational(-1, 42)}, 6) == "-0.0165035");
}
