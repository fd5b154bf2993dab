#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsauto/decode.hpp"
#include "rsauto/rng.hpp"

namespace rsauto {

/// BPSK over AWGN: bit 0 -> +1, bit 1 -> -1, LLR = 2r/sigma^2 with
/// sigma^2 = 1 / (2 R 10^{EbN0/10}) and R the code rate (n-p)/n.
struct ChannelConfig {
    double ebno_db = 0.0;
    double rate = 1.0;
    double sigma = 1.0;
    std::uint64_t master_seed = 1;

    static ChannelConfig make(const CodeSpec& spec, double ebno_db, std::uint64_t master_seed);
    static double sigma_for(double ebno_db, double rate);
};

LlrVector transmit(const CodeSpec& spec, const std::vector<std::uint8_t>& codeword_bits,
                   const ChannelConfig& cfg, GaussianSource& noise);

struct BerPoint {
    double ebno_db = 0.0;
    std::string decoder;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    double ci95 = 0.0;  // half-width of the 95% interval on ber
    double wall_time_s = 0.0;
};

struct StopRule {
    std::uint64_t min_frame_errors = 100;  // per decoder
    std::uint64_t max_frames = 10'000'000;
};

struct SweepConfig {
    std::vector<double> ebno_db;
    std::vector<std::string> decoders{"uncoded", "hdd", "spa", "pspa"};
    int max_iters = 30;
    int max_perms = 10;
    StopRule stop;
    std::uint64_t master_seed = 1;
    int threads = 1;
    PspaOptions pspa;
};

/// Monte Carlo sweep. Every decoder at a point sees identical channel
/// realizations; frames are seeded per (master_seed, point, frame index),
/// so results are byte-identical for any thread count. Errors are counted
/// on the m*(n-parity) information bits only.
std::vector<BerPoint> run_sweep(const CodeSpec& spec, const SweepConfig& cfg);

/// Header: ebno_db,decoder,frames,bit_errors,frame_errors,ber,fer,ci95
void write_csv(std::ostream& os, const std::vector<BerPoint>& points);
std::string to_csv(const std::vector<BerPoint>& points);

}  // namespace rsauto
