#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncborel/errors.hpp"
#include "ncborel/rational.hpp"
#include "ncborel/scalar_poly.hpp"

namespace ncborel {

// Ring protocol used by the elimination templates.  Prototype-based overloads
// instead of a traits class because ScalarPoly constants need a parameter
// context that only an existing element can supply.
inline GaussianRational ring_one_like(const GaussianRational&) { return 1; }
inline bool ring_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline GaussianRational ring_exact_div(const GaussianRational& a,
                                       const GaussianRational& b) {
    return a / b;
}

inline ScalarPoly ring_one_like(const ScalarPoly& p) { return ScalarPoly::one(p.ctx()); }
inline bool ring_is_zero(const ScalarPoly& x) { return x.is_zero(); }
inline ScalarPoly ring_exact_div(const ScalarPoly& a, const ScalarPoly& b) {
    auto q = a.try_divide(b);
    if (!q)
        throw DivisionError("fraction-free elimination: inexact polynomial division");
    return *q;
}

inline ScalarFraction ring_one_like(const ScalarFraction& f) {
    return ScalarFraction(ScalarPoly::one(f.num().ctx()));
}
inline bool ring_is_zero(const ScalarFraction& x) { return x.is_zero(); }
inline ScalarFraction ring_exact_div(const ScalarFraction& a, const ScalarFraction& b) {
    return a / b;
}

// Fields take the classical normalized elimination path below; proper rings
// (ScalarPoly) must use the fraction-free recurrence instead.
inline constexpr bool ring_is_field(const GaussianRational&) { return true; }
inline constexpr bool ring_is_field(const ScalarFraction&) { return true; }
inline constexpr bool ring_is_field(const ScalarPoly&) { return false; }

/// Dense row-major matrix over an exact ring.  A zero prototype is stored so
/// that empty matrices can still mint entries of the right context.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)),
          data_(rows * cols, zero_) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero_element() const { return zero_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(at(a, j), at(b, j));
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] = out[i] + at(i, j) * v[j];
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> data_;
};

/// Result of the exact Gauss-Jordan reduction.
///
/// After reduction every pivot entry equals det_scale (one over a field;
/// otherwise the determinant of the pivot block, up to row-permutation sign)
/// and rows beyond the rank are zero, so nullspace vectors and solutions can
/// be read off without leaving the ring.
template <typename T>
struct Echelon {
    Matrix<T> m;
    std::vector<std::size_t> pivot_cols;
    T det_scale;

    std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

template <typename T>
struct ReduceOutcome {
    std::vector<std::size_t> pivot_cols;
    T scale;  // det_scale of the reduced pivot block
};

/// Jordan-style reduction in place, pivots restricted to the first
/// pivot_limit columns.  Fields use classical elimination with the pivot row
/// rescaled to a unit pivot, which keeps entries reduced and lets rows with a
/// zero multiplier be skipped outright; other rings use the one-step
/// fraction-free Bareiss recurrence, whose divisions are exact.  Pivot
/// selection is deterministic either way: columns scanned left to right,
/// first nonzero entry below the processed block.
template <typename T>
ReduceOutcome<T> reduce_in_place(Matrix<T>& m, std::size_t pivot_limit) {
    const bool field = ring_is_field(m.zero_element());
    T prev = ring_one_like(m.zero_element());
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // row the next pivot will be moved into
    for (std::size_t c = 0; c < pivot_limit && pr < m.rows(); ++c) {
        std::size_t r = pr;
        while (r < m.rows() && ring_is_zero(m.at(r, c))) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(r, pr);
        const T piv = m.at(pr, c);
        if (field) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!ring_is_zero(m.at(pr, j)))
                    m.at(pr, j) = ring_exact_div(m.at(pr, j), piv);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i == pr) continue;
                const T mic = m.at(i, c);
                if (ring_is_zero(mic)) continue;
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (!ring_is_zero(m.at(pr, j)))
                        m.at(i, j) = m.at(i, j) - mic * m.at(pr, j);
            }
        } else {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i == pr) continue;
                const T mic = m.at(i, c);
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    T val = m.at(i, j) * piv - mic * m.at(pr, j);
                    m.at(i, j) = pivots.empty() ? std::move(val)
                                                : ring_exact_div(val, prev);
                }
            }
            prev = piv;
        }
        pivots.push_back(c);
        ++pr;
    }
    return ReduceOutcome<T>{std::move(pivots), std::move(prev)};
}

}  // namespace detail

/// Exact Gauss-Jordan elimination over a field or a fraction-free ring; see
/// detail::reduce_in_place for the two paths.
template <typename T>
Echelon<T> fraction_free_reduce(Matrix<T> m) {
    auto red = detail::reduce_in_place(m, m.cols());
    return Echelon<T>{std::move(m), std::move(red.pivot_cols), std::move(red.scale)};
}

/// Rank via forward-only elimination (cheaper than the full Jordan reduction
/// when only the rank is needed).  Same field/ring split as reduce_in_place;
/// the field branch divides the multiplier instead of rescaling the pivot
/// row, since rows above never get revisited.
template <typename T>
std::size_t rank(Matrix<T> m) {
    const bool field = ring_is_field(m.zero_element());
    T prev = ring_one_like(m.zero_element());
    std::size_t nPivots = 0;
    for (std::size_t c = 0; c < m.cols() && nPivots < m.rows(); ++c) {
        std::size_t r = nPivots;
        while (r < m.rows() && ring_is_zero(m.at(r, c))) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(r, nPivots);
        const T piv = m.at(nPivots, c);
        for (std::size_t i = nPivots + 1; i < m.rows(); ++i) {
            const T mic = m.at(i, c);
            if (field) {
                if (ring_is_zero(mic)) continue;
                const T factor = ring_exact_div(mic, piv);
                for (std::size_t j = c; j < m.cols(); ++j)
                    if (!ring_is_zero(m.at(nPivots, j)))
                        m.at(i, j) = m.at(i, j) - factor * m.at(nPivots, j);
            } else {
                for (std::size_t j = c; j < m.cols(); ++j) {
                    T val = m.at(i, j) * piv - mic * m.at(nPivots, j);
                    m.at(i, j) = nPivots == 0 ? std::move(val)
                                              : ring_exact_div(val, prev);
                }
            }
        }
        prev = piv;
        ++nPivots;
    }
    return nPivots;
}

/// Nullspace basis with entries still in the ring, one vector per free
/// column in ascending column order.  Vectors are det_scale at their free
/// column and minus the reduced entries at the pivot columns; callers
/// normalize as appropriate for the entry type.
template <typename T>
std::vector<std::vector<T>> nullspace_ring(const Matrix<T>& input) {
    Echelon<T> e = fraction_free_reduce(input);
    std::vector<bool> isPivot(input.cols(), false);
    for (auto c : e.pivot_cols) isPivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < input.cols(); ++f) {
        if (isPivot[f]) continue;
        std::vector<T> v(input.cols(), input.zero_element());
        v[f] = e.det_scale;
        for (std::size_t t = 0; t < e.pivot_cols.size(); ++t)
            v[e.pivot_cols[t]] = input.zero_element() - e.m.at(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Minimal solution of A x = b over a field: free variables are set to zero.
/// Returns NONE when the system is inconsistent.
template <typename T>
std::optional<std::vector<T>> solve_minimal(const Matrix<T>& A, const std::vector<T>& b) {
    if (b.size() != A.rows()) throw Error("solve_minimal: dimension mismatch");
    Matrix<T> aug(A.rows(), A.cols() + 1, A.zero_element());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    // Reduce with pivots restricted to the A-columns.
    auto red = detail::reduce_in_place(aug, A.cols());
    // Consistency: rows past the rank must have a zero right-hand side.
    for (std::size_t i = red.pivot_cols.size(); i < aug.rows(); ++i)
        if (!ring_is_zero(aug.at(i, A.cols())))
            return std::nullopt;
    std::vector<T> x(A.cols(), A.zero_element());
    for (std::size_t t = 0; t < red.pivot_cols.size(); ++t)
        x[red.pivot_cols[t]] = ring_exact_div(aug.at(t, A.cols()), red.scale);
    return x;
}

template <typename T>
Matrix<T> matmul(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.cols() != B.rows()) throw Error("matmul: dimension mismatch");
    Matrix<T> C(A.rows(), B.cols(), A.zero_element());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (ring_is_zero(A.at(i, k))) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = C.at(i, j) + A.at(i, k) * B.at(k, j);
        }
    return C;
}

/// Spec-facing nullspace over the fraction field: clears denominators
/// row-wise, runs the fraction-free reduction over ScalarPoly, and returns
/// content-normalized polynomial vectors (no polynomial gcd is attempted).
std::vector<std::vector<ScalarPoly>> nullspace(const Matrix<ScalarFraction>& m);

/// Nullspace over Q(i) with each vector scaled so its free coordinate is 1.
std::vector<std::vector<GaussianRational>> nullspace(const Matrix<GaussianRational>& m);

}  // namespace ncborel
