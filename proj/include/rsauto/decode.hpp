#pragma once

#include <cstdint>
#include <vector>

#include "rsauto/automorphism.hpp"
#include "rsauto/rs_code.hpp"

namespace rsauto {

/// Soft channel values, one per binary-image bit; positive favors bit 0.
using LlrVector = std::vector<double>;

struct DecodeResult {
    std::vector<std::uint8_t> bits;  // hard decisions, m*n
    bool valid = false;              // zero syndrome against the decoding matrix
    int iterations_used = 0;
    LlrVector posterior;
};

/// Hard-decision decoder: Berlekamp-Massey locator, Chien search, Forney
/// values. Corrects up to floor((d_min-1)/2) symbol errors; a detected
/// uncorrectable pattern is a normal outcome with ok = false and the input
/// returned unchanged.
struct HddResult {
    std::vector<Fe> codeword;
    bool ok = false;
};

HddResult hdd_decode(const CodeSpec& spec, const std::vector<Fe>& received);

/// Flooding-schedule sum-product decoder over a fixed binary parity-check
/// matrix. Stateless across calls; safe to share between threads.
class SpaDecoder {
public:
    explicit SpaDecoder(const BitMatrix& h);

    DecodeResult decode(const LlrVector& channel_llr, int max_iters) const;

    /// Zero-syndrome test against the decoding matrix.
    bool syndrome_ok(const std::vector<std::uint8_t>& bits) const;

    int num_vars() const { return nvar_; }
    int num_checks() const { return ncheck_; }

    static constexpr double kLlrClip = 30.0;

private:
    int ncheck_ = 0, nvar_ = 0;
    std::vector<std::vector<int>> check_vars_;  // variables on each check
    std::vector<std::vector<int>> var_edges_;   // edge ids touching each variable
    std::vector<int> edge_var_;                 // edge id -> variable
    std::vector<int> check_edge_begin_;         // edges are check-major
};

DecodeResult spa_decode(const BitMatrix& h, const LlrVector& channel_llr, int max_iters);

struct PspaOptions {
    bool exclude_identity = true;  // never draw the identity mapping
    bool extrinsic_sum = false;    // combine extrinsic parts instead of posteriors
};

struct PspaResult {
    DecodeResult result;
    int permutations_used = 0;
};

/// Permutation sum-product decoder: plain SPA first, then SPA on up to
/// max_perms randomly drawn automorphism permutations of the channel LLRs,
/// with early exit on any valid codeword; failing posteriors are combined
/// through the inverse maps and hard-decided.
class PspaDecoder {
public:
    PspaDecoder(const CodeSpec& spec, const AutomorphismGroup& group, const BitMatrix& h,
                PspaOptions opts = {});

    PspaResult decode(const LlrVector& channel_llr, int max_iters, int max_perms,
                      std::uint64_t rng_seed) const;

    /// Continuation after an already-run plain SPA pass (shared by the
    /// simulation harness so the first pass is not repeated).
    PspaResult decode_after_initial(const DecodeResult& initial, const LlrVector& channel_llr,
                                    int max_iters, int max_perms, std::uint64_t rng_seed) const;

    const SpaDecoder& spa() const { return spa_; }

private:
    const AutomorphismGroup& group_;
    SpaDecoder spa_;
    PspaOptions opts_;
    int m_ = 0, n_ = 0;
};

PspaResult pspa_decode(const CodeSpec& spec, const AutomorphismGroup& group,
                       const LlrVector& channel_llr, int max_iters, int max_perms,
                       std::uint64_t rng_seed, PspaOptions opts = {});

}  // namespace rsauto
