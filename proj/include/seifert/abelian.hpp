#pragma once

// Exact arithmetic in H^2(Gamma;Z) = ab<x_0,...,x_n | alpha_j x_j = x_0>:
// normal forms, negation, and membership in 2*H^2 decided by Smith normal
// form over the integers.

#include "numeric.hpp"
#include "seifert_core.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace seifert {

struct SignatureMismatch : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

/// Element c_0 x_0 + c_1 x_1 + ... + c_n x_n of H^2(Gamma;Z).
struct CohomologyClass {
    FuchsianSignature signature;
    std::vector<Integer> coeffs; // size n + 1

    bool is_normal_form() const {
        for (std::size_t j = 0; j < signature.branch_indices.size(); ++j)
            if (coeffs[j + 1] < 0 || coeffs[j + 1] >= signature.branch_indices[j])
                return false;
        return true;
    }

    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

inline CohomologyClass make_class(FuchsianSignature sig, std::vector<Integer> coeffs) {
    if (coeffs.size() != sig.branch_indices.size() + 1)
        throw Error("coefficient vector must have length n + 1");
    return CohomologyClass{std::move(sig), std::move(coeffs)};
}

inline void require_same_signature(const CohomologyClass& v, const CohomologyClass& w) {
    if (!(v.signature == w.signature))
        throw SignatureMismatch("cohomology classes live over different signatures");
}

/// `(c0; c1,...,cn)`
inline std::string format_class(const CohomologyClass& v) {
    std::string out = "(" + v.coeffs[0].str() + ";";
    for (std::size_t j = 1; j < v.coeffs.size(); ++j)
        out += (j == 1 ? " " : ",") + v.coeffs[j].str();
    out += ")";
    return out;
}

/// Unique representative with 0 <= c_j < alpha_j for j >= 1; c_0 absorbs the
/// floor quotients through the relations alpha_j x_j = x_0.
inline CohomologyClass class_normal_form(CohomologyClass v) {
    for (std::size_t j = 0; j < v.signature.branch_indices.size(); ++j) {
        const Integer& alpha = v.signature.branch_indices[j];
        v.coeffs[0] += floor_div(v.coeffs[j + 1], alpha);
        v.coeffs[j + 1] = floor_mod(v.coeffs[j + 1], alpha);
    }
    return v;
}

inline bool class_equal(const CohomologyClass& v, const CohomologyClass& w) {
    require_same_signature(v, w);
    return class_normal_form(v).coeffs == class_normal_form(w).coeffs;
}

inline CohomologyClass class_negate(CohomologyClass v) {
    for (Integer& c : v.coeffs)
        c = -c;
    return class_normal_form(std::move(v));
}

// --- integer matrices and Smith normal form ----------------------------------

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
  public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix dimension mismatch");
        IntegerMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a.at(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x) {
        if (a.cols_ != x.size())
            throw Error("matrix dimension mismatch");
        std::vector<Integer> y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                y[i] += a.at(i, j) * x[j];
        return y;
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Integer> entries_;
};

struct SmithDecomposition {
    IntegerMatrix u, s, v; // u * input * v = s
};

/// Smith normal form: U m V = S with U, V unimodular and S diagonal with
/// d_i | d_{i+1}. Pivots on the smallest nonzero entry to limit coefficient
/// growth.
inline SmithDecomposition smith_normal_form(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntegerMatrix u = IntegerMatrix::identity(rows);
    IntegerMatrix v = IntegerMatrix::identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < cols; ++k)
            std::swap(m.at(i, k), m.at(j, k));
        for (std::size_t k = 0; k < rows; ++k)
            std::swap(u.at(i, k), u.at(j, k));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < rows; ++k)
            std::swap(m.at(k, i), m.at(k, j));
        for (std::size_t k = 0; k < cols; ++k)
            std::swap(v.at(k, i), v.at(k, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t k = 0; k < cols; ++k)
            m.at(dst, k) += c * m.at(src, k);
        for (std::size_t k = 0; k < rows; ++k)
            u.at(dst, k) += c * u.at(src, k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t k = 0; k < rows; ++k)
            m.at(k, dst) += c * m.at(k, src);
        for (std::size_t k = 0; k < cols; ++k)
            v.at(k, dst) += c * v.at(k, src);
    };

    const std::size_t dim = std::min(rows, cols);
    for (std::size_t t = 0; t < dim; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Integer& e = m.at(i, j);
                    if (e == 0)
                        continue;
                    if (!found || abs(e) < abs(m.at(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found)
                goto done; // trailing block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool reduced = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m.at(i, t) != 0) {
                    add_row(i, t, -(m.at(i, t) / m.at(t, t)));
                    if (m.at(i, t) != 0)
                        reduced = false; // remainder becomes a smaller pivot
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m.at(t, j) != 0) {
                    add_col(j, t, -(m.at(t, j) / m.at(t, t)));
                    if (m.at(t, j) != 0)
                        reduced = false;
                }
            if (!reduced)
                continue;

            // Enforce the divisibility chain before moving past this pivot.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
        if (m.at(t, t) < 0) {
            for (std::size_t k = 0; k < cols; ++k)
                m.at(t, k) = -m.at(t, k);
            for (std::size_t k = 0; k < rows; ++k)
                u.at(t, k) = -u.at(t, k);
        }
    }
done:
    return SmithDecomposition{std::move(u), std::move(m), std::move(v)};
}

/// True iff m z = rhs has an integer solution z.
inline bool integer_solvable(const IntegerMatrix& m, const std::vector<Integer>& rhs) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Integer> d = snf.u * rhs;
    const std::size_t dim = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Integer s = i < dim ? snf.s.at(i, i) : Integer(0);
        if (s == 0) {
            if (d[i] != 0)
                return false;
        } else if (d[i] % s != 0) {
            return false;
        }
    }
    return true;
}

/// Relation rows of H^2: row j is (-1, 0,..., alpha_j at slot j, ..., 0).
inline IntegerMatrix relation_matrix(const FuchsianSignature& sig) {
    const std::size_t n = sig.branch_indices.size();
    IntegerMatrix r(n, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        r.at(j, 0) = -1;
        r.at(j, j + 1) = sig.branch_indices[j];
    }
    return r;
}

/// Membership test for the subgroup 2*H^2(Gamma;Z) over a fixed signature.
/// Decides c = 2u + (relation-lattice element) by solvability of the stacked
/// system [2*I | R^T] z = c. The Smith data is computed once per signature.
class DoubleCosetDecider {
  public:
    explicit DoubleCosetDecider(const FuchsianSignature& sig) : snf_(build(sig)), dim_(0) {
        dim_ = std::min(snf_.s.rows(), snf_.s.cols());
    }

    bool contains(const std::vector<Integer>& coeffs) const {
        std::vector<Integer> d = snf_.u * coeffs;
        for (std::size_t i = 0; i < snf_.s.rows(); ++i) {
            const Integer s = i < dim_ ? snf_.s.at(i, i) : Integer(0);
            if (s == 0) {
                if (d[i] != 0)
                    return false;
            } else if (d[i] % s != 0) {
                return false;
            }
        }
        return true;
    }

  private:
    static SmithDecomposition build(const FuchsianSignature& sig) {
        const std::size_t n = sig.branch_indices.size();
        IntegerMatrix stacked(n + 1, (n + 1) + n);
        for (std::size_t i = 0; i <= n; ++i)
            stacked.at(i, i) = 2;
        IntegerMatrix r = relation_matrix(sig);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i <= n; ++i)
                stacked.at(i, n + 1 + j) = r.at(j, i);
        return smith_normal_form(std::move(stacked));
    }

    SmithDecomposition snf_;
    std::size_t dim_;
};

/// True iff v lies in 2*H^2(Gamma;Z).
inline bool is_in_double(const CohomologyClass& v) {
    return DoubleCosetDecider(v.signature).contains(v.coeffs);
}

/// True iff v and w give the same class in Ext(Gamma;Z/2Z), i.e. v - w is
/// in 2*H^2(Gamma;Z).
inline bool ext2_equivalent(const CohomologyClass& v, const CohomologyClass& w) {
    require_same_signature(v, w);
    std::vector<Integer> diff(v.coeffs.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = v.coeffs[i] - w.coeffs[i];
    return DoubleCosetDecider(v.signature).contains(diff);
}

} // namespace seifert
