#pragma once

// Realizability of euler classes of PSL(2,R)-representations of a Fuchsian
// group (Jankins-Neumann criteria), the class of a Seifert index, and
// enumeration of realizable classes inside a fixed Ext(Gamma;Z/2Z) coset.

#include "abelian.hpp"
#include "numeric.hpp"
#include "seifert_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert {

enum class JnCase {
    G_POSITIVE,    // g > 0:  2 - 2g - n <= b <= 2g - 2
    ZERO_RANGE,    // g = 0:  2 - n <= b <= -2
    B_MINUS_ONE,   // g = 0:  b = -1   and sum beta_j/alpha_j <= 1
    B_ONE_MINUS_N, // g = 0:  b = 1-n  and sum beta_j/alpha_j >= n - 1
};

inline const char* to_string(JnCase c) {
    switch (c) {
    case JnCase::G_POSITIVE: return "G_POSITIVE";
    case JnCase::ZERO_RANGE: return "ZERO_RANGE";
    case JnCase::B_MINUS_ONE: return "B_MINUS_ONE";
    case JnCase::B_ONE_MINUS_N: return "B_ONE_MINUS_N";
    }
    return "?";
}

struct RealizabilityReport {
    bool realizable = false;
    std::vector<JnCase> cases;        // every satisfied case, not just one
    std::optional<Rational> beta_sum; // sum beta_j/alpha_j, genus-0 only
    std::vector<std::string> flags;   // NON_HYPERBOLIC_BASE when chi_orb >= 0
};

struct LiftLedger {
    CohomologyClass base_class;
    std::vector<CohomologyClass> equivalent_realizable; // normal forms, (b; beta) ascending
    bool induces_sl2r = false;
};

/// The class b x_0 + beta_1 x_1 + ... + beta_n x_n of a normalized index.
inline CohomologyClass euler_class_of_index(const SeifertIndex& index) {
    if (!index.is_normalized())
        throw NotNormalized("index must be normalized: " + format_index(index));
    CohomologyClass c;
    c.signature = index.signature();
    c.coeffs.reserve(index.fiber_count() + 1);
    c.coeffs.push_back(index.b);
    for (const Fiber& f : index.fibers)
        c.coeffs.push_back(f.beta);
    return c;
}

/// Jankins-Neumann realizability of a class in normal form. For g > 0 only
/// the b-range matters. For g = 0 the three cases additionally require every
/// beta_j >= 1: beta_j = 0 means the cone generator q_j maps to the identity,
/// and such representations factor through a smaller group, so the genus-zero
/// cases never produce them. Classes over a non-hyperbolic base
/// (chi_orb >= 0) are evaluated all the same and flagged.
inline RealizabilityReport jn_realizable(const CohomologyClass& c) {
    if (!c.is_normal_form())
        throw NotNormalized("class must be in normal form: " + format_class(c));
    const int g = c.signature.genus;
    const Integer n = static_cast<long long>(c.signature.cone_points());
    const Integer& b = c.coeffs[0];

    RealizabilityReport report;
    if (orbifold_euler_characteristic(c.signature) >= 0)
        report.flags.push_back("NON_HYPERBOLIC_BASE");

    if (g > 0) {
        if (2 - 2 * Integer(g) - n <= b && b <= 2 * Integer(g) - 2)
            report.cases.push_back(JnCase::G_POSITIVE);
    } else {
        Rational sum = 0;
        bool positive = true;
        for (std::size_t j = 1; j < c.coeffs.size(); ++j) {
            sum += Rational(c.coeffs[j], c.signature.branch_indices[j - 1]);
            positive = positive && c.coeffs[j] >= 1;
        }
        report.beta_sum = sum;
        if (positive) {
            if (2 - n <= b && b <= -2)
                report.cases.push_back(JnCase::ZERO_RANGE);
            if (b == -1 && sum <= 1)
                report.cases.push_back(JnCase::B_MINUS_ONE);
            if (b == 1 - n && sum >= n - 1)
                report.cases.push_back(JnCase::B_ONE_MINUS_N);
        }
    }
    report.realizable = !report.cases.empty();
    return report;
}

namespace detail {

// Odometer over beta vectors with 0 <= beta_j < alpha_j; false when exhausted.
inline bool next_beta(std::vector<Integer>& beta, const std::vector<Integer>& alpha) {
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (++beta[j] < alpha[j])
            return true;
        beta[j] = 0;
    }
    return false;
}

} // namespace detail

/// All normalized classes that are Ext(Gamma;Z/2Z)-equivalent to c and
/// JN-realizable. The b' scan covers the union of the case ranges:
/// [2-2g-n, 2g-2] for g > 0, and for g = 0 everything between 1-n and -1
/// (in either order, so the degenerate n <= 1 cases stay covered). Finite
/// because every case bounds b.
inline LiftLedger enumerate_realizable_equivalent(const CohomologyClass& c) {
    if (!c.is_normal_form())
        throw NotNormalized("class must be in normal form: " + format_class(c));
    const int g = c.signature.genus;
    const Integer n = static_cast<long long>(c.signature.cone_points());
    const std::vector<Integer>& alpha = c.signature.branch_indices;

    Integer lo, hi;
    if (g > 0) {
        lo = 2 - 2 * Integer(g) - n;
        hi = 2 * Integer(g) - 2;
    } else {
        lo = std::min(Integer(1 - n), Integer(-1));
        hi = std::max(Integer(1 - n), Integer(-1));
    }

    LiftLedger ledger;
    ledger.base_class = c;
    DoubleCosetDecider decider(c.signature);
    for (Integer b = lo; b <= hi; ++b) {
        std::vector<Integer> beta(alpha.size(), 0);
        do {
            CohomologyClass cand;
            cand.signature = c.signature;
            cand.coeffs.push_back(b);
            cand.coeffs.insert(cand.coeffs.end(), beta.begin(), beta.end());
            std::vector<Integer> diff(cand.coeffs.size());
            for (std::size_t i = 0; i < diff.size(); ++i)
                diff[i] = cand.coeffs[i] - c.coeffs[i];
            if (!decider.contains(diff))
                continue;
            if (jn_realizable(cand).realizable)
                ledger.equivalent_realizable.push_back(std::move(cand));
        } while (detail::next_beta(beta, alpha));
    }
    ledger.induces_sl2r = !ledger.equivalent_realizable.empty();
    return ledger;
}

} // namespace seifert
