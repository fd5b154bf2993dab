#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsauto/rs_code.hpp"

namespace rsauto {

/// Bit-index permutation from the structured family
/// [i,j] -> [sigma(i), j 2^l + a_i mod n], with sigma a permutation of the
/// m basis rows (0-based here), a in Z_n^m and l in Z_m.
struct Permutation {
    std::vector<int> sigma;  // sigma[i] = image row of i
    std::vector<int> a;      // size m
    int l = 0;

    int m() const { return static_cast<int>(sigma.size()); }

    /// Canonical class representative: a shifted so a[0] == 0.
    Permutation canonical(int n) const;

    bool is_identity(int n) const;

    /// Cycle notation on 1-based indices, "id" for the identity.
    std::string sigma_cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Forward map on flat bit indices: out[map[t]] = in[t].
std::vector<std::int32_t> index_map(const Permutation& p, int n);

Permutation compose(const Permutation& outer, const Permutation& inner, int n);
Permutation invert(const Permutation& p, int n);

/// Applies the permutation to any vector over the m*n bit indices.
template <typename T>
std::vector<T> apply_permutation(const Permutation& p, const std::vector<T>& v, int n) {
    const auto map = index_map(p, n);
    if (v.size() != map.size())
        throw std::invalid_argument("apply_permutation: vector length must be m*n");
    std::vector<T> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) out[map[t]] = v[t];
    return out;
}

BitVec apply_permutation(const Permutation& p, const BitVec& v, int n);

/// Automorphism classes with a[0] = 0; each class expands to n distinct
/// code automorphisms through the global shift a -> a + a0.
struct AutomorphismGroup {
    int m = 0, n = 0;
    std::vector<Permutation> classes;  // sorted by (sigma, l, a)

    long order() const { return static_cast<long>(classes.size()) * n; }

    /// Expanded element: class representative with global column shift c.
    Permutation element(std::size_t cls, int shift) const;
};

/// Definitive invariance check: every generator-basis image of the code,
/// permuted by p, still has zero syndrome against the standard binary
/// parity matrix.
bool is_code_automorphism(const Permutation& p, const CodeSpec& spec);

struct SearchOptions {
    bool paper_faithful = false;  // filter on the two-delta equality instead of deriving a directly
    int threads = 1;
};

/// Heuristic search over (sigma, l, shift) with the a-vector derived from
/// the exponent matrix; candidates are accepted only by the definitive
/// invariance check. Output is duplicate-free under index-map equality and
/// deterministically ordered.
AutomorphismGroup search_automorphisms(const MMatrix& mm, const CodeSpec& spec,
                                       const SearchOptions& opts = {});

/// Ground-truth oracle, m <= 5: exhaustive over (sigma, a2..am, l) for
/// m <= 4, exhaustive over (sigma, l, shift) with derived a for m == 5.
/// No exponent-matrix filtering; every candidate gets the definitive check.
AutomorphismGroup brute_force_group(const CodeSpec& spec);

}  // namespace rsauto
