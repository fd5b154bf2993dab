#pragma once

#include <optional>
#include <vector>

#include "rsauto/bitvec.hpp"
#include "rsauto/gf2m.hpp"

namespace rsauto {

/// Triple-parity (n, n-3, 4) RS code with zeros {1, a, a^2}, or the
/// double-parity (n, n-2, 3) variant with zeros {1, a}.
struct CodeSpec {
    Field field;
    int parity;  // 2 or 3

    CodeSpec(Field f, int p);

    int m() const { return field.m(); }
    int n() const { return field.n(); }
    int k() const { return field.n() - parity; }
    int d_min() const { return parity + 1; }

    /// Zeros of the generator polynomial: alpha^0 .. alpha^{parity-1}.
    std::vector<Fe> zeros() const;
};

/// Flat bit index of binary-image entry (row i, column j), symbol-major:
/// the m bits of symbol j are contiguous. i is 0-based here.
inline int flat_index(int m, int i, int j) { return j * m + i; }

/// Systematic encoder: message symbols occupy coefficient positions
/// parity..n-1, the division remainder by g(x) fills positions 0..parity-1.
std::vector<Fe> encode_rs(const CodeSpec& spec, const std::vector<Fe>& message);

/// Monic generator polynomial, low-degree coefficient first.
std::vector<Fe> generator_poly(const CodeSpec& spec);

/// Syndromes r(alpha^s) for s = 0..parity-1.
std::vector<Fe> syndromes(const CodeSpec& spec, const std::vector<Fe>& received);

/// Binary image of a codeword: bit [i,j] is coordinate i of symbol j
/// over the canonical basis, flattened symbol-major.
BitVec to_binary_image(const CodeSpec& spec, const std::vector<Fe>& codeword);
std::vector<Fe> from_binary_image(const CodeSpec& spec, const BitVec& image);

/// Classical binary expansion of the RS parity-check matrix
/// H[s][j] = alpha^{s j}: one binary row per (zero s, basis coordinate t).
/// Full rank parity*m; its rowspace is the binary dual of the image code.
BitMatrix standard_binary_parity(const CodeSpec& spec);

/// Generator basis of the binary image code: the images of the encoded
/// unit messages (symbol a^t at message position j), m*(n-parity) rows.
BitMatrix codeword_basis(const CodeSpec& spec);

// --- polynomial ring F2[x]/(x^n - 1) -------------------------------------

BitVec ring_mul(const BitVec& x, const BitVec& y);
BitVec cyclic_shift(const BitVec& v, int sh);

/// Shift u such that p equals theta shifted by u, if any.
std::optional<int> match_cyclic_shift(const BitVec& p, const BitVec& theta);

/// Primitive idempotent theta(x) tied to the cyclotomic coset of
/// eps = alpha^{-1}: coefficient j is Tr(alpha^j). Verifies theta^2 = theta.
BitVec compute_idempotent(const CodeSpec& spec);

/// Complement-convention idempotent (transform one off the coset instead
/// of on it): 1 + theta.
BitVec idempotent_complement(const CodeSpec& spec);

/// Cyclic-shift exponents placing idempotent shifts into the polynomial
/// parity matrix. u2 is present only for parity == 3.
struct UVectors {
    std::vector<int> u1;
    std::vector<int> u2;
    bool complement_convention = false;  // which idempotent matched
};

UVectors derive_u_vectors(const CodeSpec& spec);

/// The parity*m x m polynomial parity-check matrix: theta1(x) on the
/// diagonal of the first block, theta(x) x^{u_i + k} rows below.
/// Construction validates full rank and rowspace equality against
/// standard_binary_parity and throws std::runtime_error otherwise.
struct PolyParityMatrix {
    int m = 0, n = 0, parity = 0;
    UVectors u;
    BitVec theta;

    /// Binary expansion, one row per polynomial row (parity*m rows).
    BitMatrix expand() const;
};

PolyParityMatrix build_poly_parity_matrix(const CodeSpec& spec);

/// The m x m exponent matrix of Eq-Mtype dual vectors: row i is a dual
/// vector whose block i is identically zero and whose block j is the pure
/// shift theta(x) x^{b[i][j]}. Exponents are canonical only up to a
/// per-row additive shift; compare rows through pairwise differences.
struct MMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<int>> b;  // b[i][i] = -1 (undefined)
    BitVec theta;

    /// b[i][j] - b[i][k] mod n, the shift-invariant quantity.
    int row_diff(int i, int j, int k) const;
};

/// Requires parity == 3. For each row solves the block-i-zero linear
/// conditions on the 3m-dimensional dual space, enumerates that subspace
/// in deterministic Gray-code order and takes the first element whose
/// other blocks are all pure idempotent shifts.
MMatrix compute_m_matrix(const CodeSpec& spec);

}  // namespace rsauto
