#pragma once

// Rotation orders lambda_j and the exact leading coefficient of the
// Reidemeister-torsion asymptotics: the sequence log|Tor(M; rho_{2N})| grows
// linearly in 2N and
//
//   lim log|Tor(M; rho_{2N})| / (2N) = -(2 - 2g - sum (lambda_j-1)/lambda_j) * log 2,
//   lim log|Tor(M; rho_{2N})| / (2N)^2 = 0,
//
// with lambda_j = alpha_j / gcd(alpha_j, beta_j) the order of the rotation
// image of the cone generator q_j.

#include "abelian.hpp"
#include "euler_class.hpp"
#include "numeric.hpp"
#include "seifert_core.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace seifert {

struct NumericalMismatch : Error {
    using Error::Error;
};

struct NotEquivalent : Error {
    using Error::Error;
};

struct NotRealizable : Error {
    using Error::Error;
};

/// Exact coefficient q: the limit equals q * log 2.
struct AsymptoticCoefficient {
    Rational rational_part;
};

struct AsymptoticsReport {
    std::vector<Integer> lambdas;
    AsymptoticCoefficient coefficient;
    int quadratic_limit = 0; // the (2N)^2-normalized limit, identically zero
    bool equals_minus_chi_log2 = false;
    std::vector<std::string> flags; // NOT_REALIZABLE when the class fails the JN criteria
};

/// lambda = alpha / gcd(alpha, beta); gcd(alpha, 0) = alpha, so beta = 0
/// degenerates gracefully to lambda = 1.
inline Integer lambda_of(const Integer& alpha, const Integer& beta) {
    if (beta < 0 || beta >= alpha)
        throw Error("lambda_of requires 0 <= beta < alpha");
    return alpha / gcd(alpha, beta);
}

/// Order in PSL(2,R) of the rotation by angle pi*beta/alpha, i.e. the least
/// m >= 1 with R^m = +-I. Computed as alpha / gcd(alpha, beta) and
/// cross-checked by powering the rotation matrix in double precision.
inline Integer rotation_order(const Integer& beta, const Integer& alpha, double tol = 1e-9) {
    const Integer order = lambda_of(alpha, beta);

    const double theta = 3.14159265358979323846 * Rational(beta, alpha).convert_to<double>();
    const double c = std::cos(theta), s = std::sin(theta);
    // p = R^m, entries (a b; -b a) for rotations
    double pa = 1.0, pb = 0.0;
    Integer first_hit = 0;
    for (Integer m = 1; m <= order; ++m) {
        const double na = pa * c - pb * s;
        const double nb = pa * s + pb * c;
        pa = na;
        pb = nb;
        const double to_plus = std::max(std::abs(pa - 1.0), std::abs(pb));
        const double to_minus = std::max(std::abs(pa + 1.0), std::abs(pb));
        if (std::min(to_plus, to_minus) < tol) {
            first_hit = m;
            break;
        }
    }
    if (first_hit != order)
        throw NumericalMismatch("rotation-order oracle disagrees with alpha/gcd(alpha,beta) for " +
                                beta.str() + "/" + alpha.str());
    return order;
}

/// -(2 - 2g - sum (lambda_j - 1)/lambda_j), exact.
inline Rational coefficient_from_lambdas(int genus, const std::vector<Integer>& lambdas) {
    Rational inner = 2 - 2 * Integer(genus);
    for (const Integer& l : lambdas)
        inner -= Rational(l - 1, l);
    return -inner;
}

namespace detail {

inline AsymptoticsReport asymptotics_from(int genus, const std::vector<Integer>& alphas,
                                          const std::vector<Integer>& betas) {
    AsymptoticsReport report;
    bool coprime = true;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        report.lambdas.push_back(lambda_of(alphas[j], betas[j]));
        coprime = coprime && gcd(alphas[j], betas[j]) == 1;
    }
    report.coefficient.rational_part = coefficient_from_lambdas(genus, report.lambdas);
    report.equals_minus_chi_log2 = coprime;
    return report;
}

} // namespace detail

/// Leading coefficient for the index's own euler class. If that class fails
/// the JN criteria the formula is still evaluated (it applies to any
/// representation sending h to -I) but the report is flagged NOT_REALIZABLE.
inline AsymptoticsReport leading_coefficient(const SeifertIndex& index) {
    const SeifertIndex idx = normalize(index);
    std::vector<Integer> alphas, betas;
    for (const Fiber& f : idx.fibers) {
        alphas.push_back(f.alpha);
        betas.push_back(f.beta);
    }
    AsymptoticsReport report = detail::asymptotics_from(idx.genus, alphas, betas);
    if (!jn_realizable(euler_class_of_index(idx)).realizable)
        report.flags.push_back("NOT_REALIZABLE");
    return report;
}

/// Leading coefficient for the representation of pi_1(M) induced through an
/// alternative lift: lambda'_j = alpha_j / gcd(alpha_j, beta'_j) where the
/// beta'_j come from alt. alt must be JN-realizable and equivalent to the
/// index's class in Ext(Gamma;Z/2Z).
inline AsymptoticsReport leading_coefficient_for_class(const SeifertIndex& index,
                                                       const CohomologyClass& alt) {
    const SeifertIndex idx = normalize(index);
    const CohomologyClass own = euler_class_of_index(idx);
    const CohomologyClass altn = class_normal_form(alt);
    if (!(altn.signature == own.signature))
        throw SignatureMismatch("class signature does not match the index");
    if (!jn_realizable(altn).realizable)
        throw NotRealizable("class " + format_class(altn) + " fails the Jankins-Neumann criteria");
    if (!ext2_equivalent(altn, own))
        throw NotEquivalent("class " + format_class(altn) + " is not Ext(Gamma;Z/2Z)-equivalent to " +
                            format_class(own));
    std::vector<Integer> alphas = idx.signature().branch_indices;
    std::vector<Integer> betas(altn.coeffs.begin() + 1, altn.coeffs.end());
    return detail::asymptotics_from(idx.genus, alphas, betas);
}

/// Decimal value of q * log 2 at the requested number of significant digits.
inline std::string decimal_rendering(const AsymptoticCoefficient& coeff, int significant_digits = 12) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    if (significant_digits < 1)
        significant_digits = 1;
    if (significant_digits > 40)
        significant_digits = 40;
    Float value = Float(coeff.rational_part) * log(Float(2));
    std::ostringstream os;
    os.precision(significant_digits);
    os << value;
    return os.str();
}

} // namespace seifert
