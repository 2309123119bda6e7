#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

#include "dcycle/fields.hpp"

namespace dcycle {

/// Fraction-free (Bareiss) elimination rank of an integer matrix.  All
/// divisions are exact, so the computation stays in arbitrary-precision
/// integers with controlled growth.
inline std::size_t bareiss_rank(std::vector<BigInt> a, std::size_t rows, std::size_t cols) {
    auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };
    BigInt prev(1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
        const BigInt pivot = at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt factor = at(r, c);
            for (std::size_t j = c; j < cols; ++j)
                at(r, j) = (at(r, j) * pivot - factor * at(rank, j)) / prev;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

template <class F>
struct SolveReport {
    std::optional<std::vector<typename F::Value>> solution;
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;
};

/// Dense matrix over an exact field.  Row/column order is fixed by the
/// caller; every operation is deterministic.
template <class F>
class DenseMatrix {
public:
    using Value = typename F::Value;

    DenseMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(rows * cols, field.zero()) {}

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Value& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Value& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Value> apply(const std::vector<Value>& x) const {
        std::vector<Value> y(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!field_.is_zero(at(r, c)))
                    y[r] = field_.add(y[r], field_.mul(at(r, c), x[c]));
        return y;
    }

    std::size_t rank() const {
        if constexpr (std::is_same_v<F, Rationals>) {
            // clear denominators row by row, then run fraction-free elimination
            std::vector<BigInt> m(rows_ * cols_);
            for (std::size_t r = 0; r < rows_; ++r) {
                BigInt scale(1);
                for (std::size_t c = 0; c < cols_; ++c) {
                    const BigInt den = boost::multiprecision::denominator(at(r, c));
                    scale = boost::multiprecision::lcm(scale, den);
                }
                for (std::size_t c = 0; c < cols_; ++c) {
                    const BigRational v = at(r, c) * BigRational(scale);
                    m[r * cols_ + c] = boost::multiprecision::numerator(v);
                }
            }
            return bareiss_rank(std::move(m), rows_, cols_);
        } else {
            std::vector<Value> work = a_;
            return eliminate(field_, work, rows_, cols_, nullptr);
        }
    }

    /// Reduced row echelon kernel basis, one vector per free column in
    /// ascending column order.
    std::vector<std::vector<Value>> kernel_basis() const {
        std::vector<Value> work = a_;
        std::vector<int> pivot_row_of_col(cols_, -1);
        eliminate(field_, work, rows_, cols_, &pivot_row_of_col);

        std::vector<std::vector<Value>> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_row_of_col[c] >= 0) continue;
            std::vector<Value> v(cols_, field_.zero());
            v[c] = field_.one();
            for (std::size_t pc = 0; pc < cols_; ++pc) {
                const int pr = pivot_row_of_col[pc];
                if (pr >= 0) {
                    const Value& entry = work[static_cast<std::size_t>(pr) * cols_ + c];
                    if (!field_.is_zero(entry)) v[pc] = field_.neg(entry);
                }
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<std::vector<Value>> solve(const std::vector<Value>& b) const {
        return solve_with_report(b).solution;
    }

    /// Solves A x = b; the report carries rank(A) and rank([A|b]) so that a
    /// failed solve doubles as a certificate of insolvability.
    SolveReport<F> solve_with_report(const std::vector<Value>& b) const {
        std::vector<Value> work((cols_ + 1) * rows_, field_.zero());
        const std::size_t w = cols_ + 1;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) work[r * w + c] = at(r, c);
            work[r * w + cols_] = b[r];
        }
        std::vector<int> pivot_row_of_col(w, -1);
        const std::size_t aug_rank = eliminate(field_, work, rows_, w, &pivot_row_of_col);

        SolveReport<F> report;
        report.augmented_rank = aug_rank;
        if (pivot_row_of_col[cols_] >= 0) {
            report.rank = aug_rank - 1;
            return report; // pivot in the rhs column: inconsistent
        }
        report.rank = aug_rank;

        std::vector<Value> x(cols_, field_.zero());
        for (std::size_t c = 0; c < cols_; ++c) {
            const int pr = pivot_row_of_col[c];
            if (pr >= 0) x[c] = work[static_cast<std::size_t>(pr) * w + cols_];
        }
        report.solution = std::move(x);
        return report;
    }

private:
    // Gauss-Jordan to reduced row echelon form; returns the rank.
    static std::size_t eliminate(const F& field, std::vector<Value>& a,
                                 std::size_t rows, std::size_t cols,
                                 std::vector<int>* pivot_row_of_col) {
        auto at = [&](std::size_t r, std::size_t c) -> Value& { return a[r * cols + c]; };
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols && next < rows; ++c) {
            std::size_t p = next;
            while (p < rows && field.is_zero(at(p, c))) ++p;
            if (p == rows) continue;
            if (p != next)
                for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(next, j));
            const Value scale = field.inv(at(next, c));
            for (std::size_t j = c; j < cols; ++j) at(next, j) = field.mul(at(next, j), scale);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == next || field.is_zero(at(r, c))) continue;
                const Value factor = at(r, c);
                for (std::size_t j = c; j < cols; ++j)
                    at(r, j) = field.sub(at(r, j), field.mul(factor, at(next, j)));
            }
            if (pivot_row_of_col) (*pivot_row_of_col)[c] = static_cast<int>(next);
            ++next;
        }
        return next;
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<Value> a_;
};

} // namespace dcycle
