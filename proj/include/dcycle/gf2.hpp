#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcycle/errors.hpp"

// Packed GF(2) vectors and matrices.  This is the workhorse behind every
// characteristic-2 search: kernel enumeration, cycle decomposition and the
// brute-force subset oracle all run on 64-bit word rows.

namespace dcycle::gf2 {

class Vec {
public:
    Vec() : n_(0) {}
    explicit Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    Vec& operator^=(const Vec& other) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
        return *this;
    }
    friend Vec operator^(Vec a, const Vec& b) { a ^= b; return a; }

    bool is_zero() const {
        for (std::uint64_t w : w_) if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) idx.push_back(i);
        return idx;
    }

    // true iff the support of `this` is contained in the support of `other`
    bool subset_of(const Vec& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~other.w_[k]) return false;
        return true;
    }

    bool operator==(const Vec& other) const { return n_ == other.n_ && w_ == other.w_; }

    // deterministic tie-break order: smaller support first, then by lowest
    // differing bit (set beats unset)
    static bool support_less(const Vec& a, const Vec& b) {
        const std::size_t pa = a.popcount(), pb = b.popcount();
        if (pa != pb) return pa < pb;
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            if (a.w_[k] != b.w_[k]) {
                const std::uint64_t diff = a.w_[k] ^ b.w_[k];
                const std::uint64_t low = diff & (~diff + 1);
                return (a.w_[k] & low) != 0;
            }
        }
        return false;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, Vec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    void set(std::size_t r, std::size_t c) { row_[r].set(c); }
    bool test(std::size_t r, std::size_t c) const { return row_[r].test(c); }
    const Vec& row(std::size_t r) const { return row_[r]; }

    // y = A x
    Vec apply(const Vec& x) const {
        Vec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::size_t parity = 0;
            for (std::size_t c : row_[r].support())
                parity ^= x.test(c) ? 1u : 0u;
            if (parity) y.set(r);
        }
        return y;
    }

    std::size_t rank() const {
        std::vector<Vec> rows = row_;
        return eliminate(rows, cols_, nullptr);
    }

    // Basis of {x : A x = 0}, one vector per free column, in ascending free
    // column order.  Deterministic for a fixed matrix.
    std::vector<Vec> kernel_basis() const {
        std::vector<Vec> rows = row_;
        std::vector<int> pivot_row_of_col(cols_, -1);
        eliminate(rows, cols_, &pivot_row_of_col);

        std::vector<Vec> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_row_of_col[c] >= 0) continue;
            Vec v(cols_);
            v.set(c);
            for (std::size_t pc = 0; pc < cols_; ++pc) {
                const int pr = pivot_row_of_col[pc];
                if (pr >= 0 && rows[static_cast<std::size_t>(pr)].test(c)) v.set(pc);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Particular solution of A x = b with all free variables set to 0,
    // or nullopt when inconsistent.
    std::optional<Vec> solve(const Vec& b) const {
        std::vector<Vec> rows = row_;
        std::vector<Vec> rhs_bits(rows_, Vec(1));
        for (std::size_t r = 0; r < rows_; ++r)
            if (b.test(r)) rhs_bits[r].set(0);

        std::vector<int> pivot_row_of_col(cols_, -1);
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
            std::size_t p = next;
            while (p < rows_ && !rows[p].test(c)) ++p;
            if (p == rows_) continue;
            std::swap(rows[p], rows[next]);
            std::swap(rhs_bits[p], rhs_bits[next]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r != next && rows[r].test(c)) {
                    rows[r] ^= rows[next];
                    rhs_bits[r] ^= rhs_bits[next];
                }
            }
            pivot_row_of_col[c] = static_cast<int>(next);
            ++next;
        }
        for (std::size_t r = next; r < rows_; ++r)
            if (rhs_bits[r].test(0)) return std::nullopt;

        Vec x(cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            const int pr = pivot_row_of_col[c];
            if (pr >= 0 && rhs_bits[static_cast<std::size_t>(pr)].test(0)) x.set(c);
        }
        return x;
    }

    // rank of [A | b]; together with rank() this witnesses (in)solvability
    std::size_t augmented_rank(const Vec& b) const {
        std::vector<Vec> rows(rows_, Vec(cols_ + 1));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c : row_[r].support()) rows[r].set(c);
            if (b.test(r)) rows[r].set(cols_);
        }
        return eliminate(rows, cols_ + 1, nullptr);
    }

private:
    static std::size_t eliminate(std::vector<Vec>& rows, std::size_t cols,
                                 std::vector<int>* pivot_row_of_col) {
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
            std::size_t p = next;
            while (p < rows.size() && !rows[p].test(c)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[next]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != next && rows[r].test(c)) rows[r] ^= rows[next];
            if (pivot_row_of_col) (*pivot_row_of_col)[c] = static_cast<int>(next);
            ++next;
        }
        return next;
    }

    std::size_t rows_, cols_;
    std::vector<Vec> row_;
};

} // namespace dcycle::gf2
