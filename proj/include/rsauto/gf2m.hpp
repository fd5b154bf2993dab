#pragma once

#include <cstdint>
#include <vector>

namespace rsauto {

/// Element of GF(2^m), stored as its coordinate bits over the canonical
/// polynomial basis [1, a, a^2, ..., a^{m-1}]: bit i is the coefficient
/// of a^i. Zero is representable directly; log-domain form exists only
/// for nonzero elements.
using Fe = std::uint16_t;

inline Fe fe_add(Fe x, Fe y) { return x ^ y; }

/// GF(2^m) arithmetic for 3 <= m <= 10, built from a primitive polynomial.
/// The residue of x is the primitive element alpha; primitivity is verified
/// at construction. Immutable after construction and shareable across threads.
class Field {
public:
    /// Uses the default primitive polynomial for m (x^3+x+1, x^4+x+1,
    /// x^5+x^2+1, x^6+x+1 for m = 3..6, standard published choices above).
    explicit Field(int m);
    Field(int m, std::uint32_t prim_poly);

    int m() const { return m_; }
    int n() const { return n_; }  // 2^m - 1
    std::uint32_t prim_poly() const { return poly_; }

    Fe mul(Fe x, Fe y) const {
        if (x == 0 || y == 0) return 0;
        return alog_[log_[x] + log_[y]];
    }
    Fe inv(Fe x) const;
    Fe pow(Fe x, long k) const;

    /// alpha^k for any integer k (reduced mod n).
    Fe alpha_pow(long k) const {
        long r = k % n_;
        if (r < 0) r += n_;
        return alog_[r];
    }

    /// Discrete log base alpha; throws std::domain_error on zero.
    int log(Fe x) const;

    /// Absolute trace to GF(2), returned as 0/1.
    int trace(Fe x) const { return trace_[x]; }

    static std::uint32_t default_prim_poly(int m);

private:
    void build();

    int m_ = 0, n_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<Fe> alog_;   // size 2n: alpha^k for k in [0, 2n)
    std::vector<int> log_;   // size 2^m; log_[0] unused
    std::vector<std::uint8_t> trace_;
};

}  // namespace rsauto
