#pragma once

#include <cstdint>
#include <cstddef>
#include <bit>
#include <stdexcept>
#include <vector>

namespace rsauto {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
/// Trailing bits of the last word are kept zero so whole-word
/// comparison and popcount stay valid.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    /// Parity of the AND with another vector (GF(2) inner product).
    bool dot(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1u;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
        return bits_;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense GF(2) matrix as a list of BitVec rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, BitVec(cols)) {}

    std::size_t rows() const { return r_.size(); }
    std::size_t cols() const { return cols_; }

    BitVec& row(std::size_t i) { return r_[i]; }
    const BitVec& row(std::size_t i) const { return r_[i]; }

    void append_row(BitVec v) {
        if (cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
        r_.push_back(std::move(v));
    }

    std::size_t rank() const {
        BitMatrix t = *this;
        return t.eliminate();
    }

    /// Reduced row echelon form with zero rows dropped: a canonical
    /// representation of the rowspace, so two spans are equal iff their
    /// rref() compare equal.
    BitMatrix rref() const {
        BitMatrix t = *this;
        std::size_t rk = t.eliminate();
        t.r_.resize(rk);
        return t;
    }

    /// Basis of { x : M x = 0 } with unknowns indexed by columns.
    std::vector<BitVec> nullspace() const {
        BitMatrix t = *this;
        t.eliminate();
        std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
        std::size_t rk = 0;
        for (std::size_t r = 0; r < t.r_.size() && t.r_[r].any(); ++r, ++rk)
            pivot_of_col[t.r_[r].first_set()] = r;
        std::vector<BitVec> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] != SIZE_MAX) continue;
            BitVec v(cols_);
            v.set(c, true);
            for (std::size_t pc = 0; pc < cols_; ++pc) {
                std::size_t pr = pivot_of_col[pc];
                if (pr != SIZE_MAX && t.r_[pr].get(c)) v.set(pc, true);
            }
            basis.push_back(std::move(v));
        }
        (void)rk;
        return basis;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    /// In-place Gauss-Jordan; returns rank. Rows end up in pivot-column order.
    std::size_t eliminate() {
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < r_.size(); ++c) {
            std::size_t piv = SIZE_MAX;
            for (std::size_t r = rank; r < r_.size(); ++r)
                if (r_[r].get(c)) {
                    piv = r;
                    break;
                }
            if (piv == SIZE_MAX) continue;
            std::swap(r_[rank], r_[piv]);
            for (std::size_t r = 0; r < r_.size(); ++r)
                if (r != rank && r_[r].get(c)) r_[r] ^= r_[rank];
            ++rank;
        }
        return rank;
    }

    std::size_t cols_ = 0;
    std::vector<BitVec> r_;
};

}  // namespace rsauto
