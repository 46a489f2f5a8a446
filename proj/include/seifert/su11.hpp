#pragma once

// Irreducible SU(1,1)-representations of pi_1(M) sending the regular fiber h
// to -I, for genus-0 indices with exactly three exceptional fibers.
//
// SU(1,1) is the group of matrices [[xi, eta], [conj eta, conj xi]] with
// |xi|^2 - |eta|^2 = 1; it is conjugate to SL(2,R) by C = [[1,-i],[1,i]].
// A conjugacy class is pinned by a triple (k_1,k_2,k_3) with
// tr rho(q_j) = 2 cos(k_j pi / alpha_j), 0 < k_j < alpha_j,
// k_j = beta_j (mod 2), together with the sign of Im xi_1; the canonical
// representative has rho(q_1) diagonal and eta_2 real and positive.

#include "numeric.hpp"
#include "seifert_core.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace seifert {

struct UnsupportedShape : Error {
    using Error::Error;
};

struct DegenerateReducible : Error {
    using Error::Error;
};

struct ConstructionInfeasible : Error {
    using Error::Error;
};

struct NonRealResult : Error {
    using Error::Error;
};

using Complex = std::complex<double>;

/// 2x2 complex matrix [[a, b], [c, d]].
struct ComplexMatrix2 {
    Complex a, b, c, d;

    static ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }

    friend ComplexMatrix2 operator*(const ComplexMatrix2& x, const ComplexMatrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend ComplexMatrix2 operator*(double s, const ComplexMatrix2& x) {
        return {s * x.a, s * x.b, s * x.c, s * x.d};
    }

    friend ComplexMatrix2 operator-(const ComplexMatrix2& x, const ComplexMatrix2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
};

/// Entrywise max-norm.
inline double max_norm(const ComplexMatrix2& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)), std::max(std::abs(m.c), std::abs(m.d)));
}

inline ComplexMatrix2 matrix_power(ComplexMatrix2 base, Integer exp) {
    ComplexMatrix2 acc = ComplexMatrix2::identity();
    while (exp > 0) {
        if (floor_mod(exp, 2) == 1)
            acc = acc * base;
        base = base * base;
        exp = floor_div(exp, 2);
    }
    return acc;
}

/// SU(1,1) element, stored as the top row (xi, eta).
struct Su11Element {
    Complex xi;
    Complex eta;

    ComplexMatrix2 matrix() const { return {xi, eta, std::conj(eta), std::conj(xi)}; }

    /// | |xi|^2 - |eta|^2 - 1 |
    double unit_defect() const { return std::abs(std::norm(xi) - std::norm(eta) - 1.0); }

    friend Su11Element operator*(const Su11Element& x, const Su11Element& y) {
        return {x.xi * y.xi + x.eta * std::conj(y.eta), x.xi * y.eta + x.eta * std::conj(y.xi)};
    }
};

inline Su11Element su11_inverse(const Su11Element& m) {
    return {std::conj(m.xi), -m.eta};
}

/// Real 2x2 matrix [[a, b], [c, d]].
struct RealMatrix2 {
    double a, b, c, d;

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
};

/// Names a conjugacy class: the triple (k_1,k_2,k_3) plus the sign of b_1 = Im xi_1.
struct RepTriple {
    std::array<Integer, 3> k;
    int epsilon = +1;

    friend bool operator==(const RepTriple&, const RepTriple&) = default;
};

/// Canonical representative: rho(q_1) diagonal, eta_2 real positive,
/// rho(h) = -I fixed.
struct Su11Representation {
    SeifertIndex index;
    RepTriple triple;
    std::array<Su11Element, 3> q;
};

struct ResidualReport {
    std::array<double, 3> torsion{};   // |rho(q_j)^{alpha_j} - (-I)^{beta_j}|
    double long_relator = 0.0;         // |rho(q_1 q_2 q_3) - (-I)^{-b}|
    std::array<double, 3> trace{};     // |tr rho(q_j) - 2 cos(k_j pi / alpha_j)|
    double tol = 1e-9;
    bool pass = false;                 // all four relation residuals < tol
};

struct ConjugacyClasses {
    std::vector<Su11Representation> classes;
    std::vector<RepTriple> reducible_boundary; // dropped: canonical form degenerates (eta_2 = 0)
};

namespace detail {

inline SeifertIndex require_three_fiber(const SeifertIndex& index) {
    SeifertIndex idx = normalize(validate(index));
    if (idx.genus != 0 || idx.fiber_count() != 3)
        throw UnsupportedShape("need genus 0 and exactly 3 exceptional fibers, got " +
                               format_index(idx));
    return idx;
}

inline Rational abs_rational(Rational r) {
    return r < 0 ? -r : r;
}

} // namespace detail

/// Definition ranges only: 0 < k_j < alpha_j and k_j = beta_j (mod 2).
inline bool triple_candidate(const SeifertIndex& index, const std::array<Integer, 3>& k) {
    for (int j = 0; j < 3; ++j) {
        if (k[j] <= 0 || k[j] >= index.fibers[j].alpha)
            return false;
        if (floor_mod(k[j] - index.fibers[j].beta, 2) != 0)
            return false;
    }
    return true;
}

namespace detail {

// The irreducibility region for the ratios r_j = k_j/alpha_j, evaluated in
// exact rationals so boundary cases cannot flicker. For even b the region is
//   0 < r_3 <= |r_1 - r_2|        or  1 - |r_1 + r_2 - 1| <= r_3 < 1,
// and for odd b
//   0 < r_3 <= |r_1 + r_2 - 1|    or  1 - |r_1 - r_2| <= r_3 < 1.
// Equality is the reducible wall (eta_2 = 0).
struct TripleRegion {
    Rational low;  // upper bound of the low branch
    Rational high; // lower bound of the high branch

    bool admits(const Rational& r3) const { return r3 <= low || r3 >= high; }
    bool boundary(const Rational& r3) const { return r3 == low || r3 == high; }
};

inline TripleRegion triple_region(const SeifertIndex& index, const std::array<Integer, 3>& k) {
    const Rational r1(k[0], index.fibers[0].alpha);
    const Rational r2(k[1], index.fibers[1].alpha);
    const bool b_even = floor_mod(index.b, 2) == 0;
    const Rational diff = abs_rational(r1 - r2);
    const Rational skew = abs_rational(r1 + r2 - 1);
    TripleRegion region;
    region.low = b_even ? diff : skew;
    region.high = 1 - (b_even ? skew : diff);
    return region;
}

} // namespace detail

/// Exact inequality test for the irreducibility region (see TripleRegion).
inline bool triple_admissible(const SeifertIndex& index, const std::array<Integer, 3>& k) {
    return detail::triple_region(index, k).admits(Rational(k[2], index.fibers[2].alpha));
}

/// Equality case of the region: the reducible wall, where eta_2 = 0 exactly.
inline bool triple_boundary(const SeifertIndex& index, const std::array<Integer, 3>& k) {
    return detail::triple_region(index, k).boundary(Rational(k[2], index.fibers[2].alpha));
}

/// All representation triples: candidates passing the exact inequality test,
/// two per admissible k (epsilon = +1 then -1), k lexicographic.
inline std::vector<RepTriple> enumerate_triples(const SeifertIndex& index) {
    const SeifertIndex idx = detail::require_three_fiber(index);
    std::vector<RepTriple> out;
    std::array<Integer, 3> k;
    for (k[0] = 1; k[0] < idx.fibers[0].alpha; ++k[0])
        for (k[1] = 1; k[1] < idx.fibers[1].alpha; ++k[1])
            for (k[2] = 1; k[2] < idx.fibers[2].alpha; ++k[2]) {
                if (!triple_candidate(idx, k) || !triple_admissible(idx, k))
                    continue;
                out.push_back({k, +1});
                out.push_back({k, -1});
            }
    return out;
}

/// Canonical representative for a triple:
///   xi_1 = cos(k_1 pi/alpha_1) + eps*i*sin(k_1 pi/alpha_1), eta_1 = 0,
///   a_2 = cos(k_2 pi/alpha_2), b_2 solved from the trace of rho(q_3),
///   eta_2 = +sqrt(a_2^2 + b_2^2 - 1),
///   rho(q_3) = (-1)^b (rho(q_1) rho(q_2))^{-1}.
/// Throws DegenerateReducible on the reducible wall (eta_2 = 0) and
/// ConstructionInfeasible when eta_2^2 < -tol (an admissibility violation).
inline Su11Representation construct_representation(const SeifertIndex& index, const RepTriple& t,
                                                   double tol = 1e-9) {
    const SeifertIndex idx = detail::require_three_fiber(index);
    if (!triple_candidate(idx, t.k))
        throw Error("triple out of range or of wrong parity for " + format_index(idx));
    if (t.epsilon != 1 && t.epsilon != -1)
        throw Error("epsilon must be +1 or -1");

    constexpr double pi = 3.14159265358979323846;
    const double t1 = pi * Rational(t.k[0], idx.fibers[0].alpha).convert_to<double>();
    const double t2 = pi * Rational(t.k[1], idx.fibers[1].alpha).convert_to<double>();
    const double t3 = pi * Rational(t.k[2], idx.fibers[2].alpha).convert_to<double>();
    const double sign_b = floor_mod(idx.b, 2) == 0 ? 1.0 : -1.0;

    const double a1 = std::cos(t1);
    const double b1 = t.epsilon * std::sin(t1);
    const double a2 = std::cos(t2);
    const double b2 = (a1 * a2 - sign_b * std::cos(t3)) / b1;
    const double eta2_sq = a2 * a2 + b2 * b2 - 1.0;
    if (eta2_sq < -tol)
        throw ConstructionInfeasible("eta_2^2 = " + std::to_string(eta2_sq) +
                                     " below -tol: inadmissible triple");
    if (triple_boundary(idx, t.k))
        throw DegenerateReducible("triple lies on the reducible wall (eta_2 = 0)");
    const double eta2 = std::sqrt(std::max(eta2_sq, 0.0));
    if (eta2 <= tol)
        throw DegenerateReducible("eta_2 within tolerance of zero: reducible");

    Su11Representation rep;
    rep.index = idx;
    rep.triple = t;
    rep.q[0] = {Complex(a1, b1), Complex(0.0, 0.0)};
    rep.q[1] = {Complex(a2, b2), Complex(eta2, 0.0)};
    Su11Element q3 = su11_inverse(rep.q[0] * rep.q[1]);
    if (sign_b < 0)
        q3 = {-q3.xi, -q3.eta};
    rep.q[2] = q3;
    return rep;
}

/// Residuals of all group relations under rho(h) = -I.
inline ResidualReport verify_relations(const Su11Representation& rep, double tol = 1e-9) {
    ResidualReport report;
    report.tol = tol;
    constexpr double pi = 3.14159265358979323846;
    const ComplexMatrix2 id = ComplexMatrix2::identity();

    for (int j = 0; j < 3; ++j) {
        const Fiber& f = rep.index.fibers[j];
        ComplexMatrix2 power = matrix_power(rep.q[j].matrix(), f.alpha);
        const double h_sign = floor_mod(f.beta, 2) == 0 ? 1.0 : -1.0;
        report.torsion[j] = max_norm(power - h_sign * id);
        const double want = 2.0 * std::cos(pi * Rational(rep.triple.k[j], f.alpha).convert_to<double>());
        report.trace[j] = std::abs(rep.q[j].matrix().trace() - want);
    }
    const ComplexMatrix2 product = rep.q[0].matrix() * rep.q[1].matrix() * rep.q[2].matrix();
    const double h_sign = floor_mod(rep.index.b, 2) == 0 ? 1.0 : -1.0;
    report.long_relator = max_norm(product - h_sign * id);

    report.pass = report.long_relator < tol && report.torsion[0] < tol &&
                  report.torsion[1] < tol && report.torsion[2] < tol;
    return report;
}

/// One canonical representative per representation triple. Boundary triples
/// whose canonical form degenerates (eta_2 = 0) are dropped and recorded.
inline ConjugacyClasses conjugacy_classes(const SeifertIndex& index, double tol = 1e-9) {
    const SeifertIndex idx = detail::require_three_fiber(index);
    ConjugacyClasses out;
    for (const RepTriple& t : enumerate_triples(idx)) {
        try {
            out.classes.push_back(construct_representation(idx, t, tol));
        } catch (const DegenerateReducible&) {
            out.reducible_boundary.push_back(t);
        }
    }
    return out;
}

/// Conjugation into SL(2,R): C^{-1} m C with C = [[1,-i],[1,i]].
/// Throws NonRealResult when the input is not (close to) an SU(1,1) matrix.
inline RealMatrix2 su11_to_sl2r(const ComplexMatrix2& m, double tol = 1e-9) {
    const Complex i(0.0, 1.0);
    const ComplexMatrix2 conj_by{1.0, -i, 1.0, i};
    const ComplexMatrix2 conj_by_inv{0.5, 0.5, 0.5 * i, -0.5 * i};
    const ComplexMatrix2 r = conj_by_inv * (m * conj_by);
    const double imag = std::max(std::max(std::abs(r.a.imag()), std::abs(r.b.imag())),
                                 std::max(std::abs(r.c.imag()), std::abs(r.d.imag())));
    if (imag > tol)
        throw NonRealResult("conjugated matrix has imaginary part " + std::to_string(imag));
    return {r.a.real(), r.b.real(), r.c.real(), r.d.real()};
}

inline RealMatrix2 su11_to_sl2r(const Su11Element& m, double tol = 1e-9) {
    return su11_to_sl2r(m.matrix(), tol);
}

} // namespace seifert
