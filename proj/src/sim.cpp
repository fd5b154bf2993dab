#include "rsauto/sim.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace rsauto {

double ChannelConfig::sigma_for(double ebno_db, double rate) {
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0)));
}

ChannelConfig ChannelConfig::make(const CodeSpec& spec, double ebno_db, std::uint64_t master_seed) {
    ChannelConfig c;
    c.ebno_db = ebno_db;
    c.rate = static_cast<double>(spec.k()) / spec.n();
    c.sigma = sigma_for(ebno_db, c.rate);
    c.master_seed = master_seed;
    return c;
}

LlrVector transmit(const CodeSpec& spec, const std::vector<std::uint8_t>& codeword_bits,
                   const ChannelConfig& cfg, GaussianSource& noise) {
    const std::size_t nbits = static_cast<std::size_t>(spec.m()) * spec.n();
    if (codeword_bits.size() != nbits)
        throw std::invalid_argument("transmit: expected m*n codeword bits");
    LlrVector llr(nbits);
    const double scale = 2.0 / (cfg.sigma * cfg.sigma);
    for (std::size_t t = 0; t < nbits; ++t) {
        const double x = codeword_bits[t] ? -1.0 : 1.0;
        llr[t] = scale * (x + cfg.sigma * noise.next());
    }
    return llr;
}

namespace {

struct Counters {
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;

    Counters& operator+=(const Counters& o) {
        bit_errors += o.bit_errors;
        frame_errors += o.frame_errors;
        return *this;
    }
};

struct DecoderSet {
    bool uncoded = false, hdd = false, spa = false, pspa = false;
};

DecoderSet parse_decoders(const std::vector<std::string>& names) {
    DecoderSet d;
    for (const auto& s : names) {
        if (s == "uncoded")
            d.uncoded = true;
        else if (s == "hdd")
            d.hdd = true;
        else if (s == "spa")
            d.spa = true;
        else if (s == "pspa")
            d.pspa = true;
        else
            throw std::invalid_argument("run_sweep: unknown decoder '" + s + "'");
    }
    return d;
}

/// Per-frame work. Pure function of (spec, decoders, point config, seed),
/// which is what makes the sweep reproducible under any parallelism.
struct FrameResult {
    Counters uncoded, hdd, spa, pspa;
};

class PointRunner {
public:
    PointRunner(const CodeSpec& spec, const SweepConfig& cfg, const DecoderSet& set,
                const PspaDecoder* pspa, const SpaDecoder* spa)
        : spec_(spec), cfg_(cfg), set_(set), pspa_(pspa), spa_(spa), m_(spec.m()), n_(spec.n()) {}

    FrameResult run_frame(const ChannelConfig& chan, std::size_t point_idx,
                          std::uint64_t frame_idx) const {
        const std::uint64_t base = derive_seed(cfg_.master_seed, point_idx, frame_idx);
        SplitMix64 msg_rng(derive_seed(base, 0, 0));
        GaussianSource noise(derive_seed(base, 1, 0));
        const std::uint64_t pspa_seed = derive_seed(base, 2, 0);

        std::vector<Fe> message(spec_.k());
        for (auto& s : message) s = static_cast<Fe>(msg_rng.next() >> (64 - m_));
        const std::vector<Fe> cw = encode_rs(spec_, message);

        const int nbits = m_ * n_;
        std::vector<std::uint8_t> sent(nbits);
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < m_; ++i) sent[flat_index(m_, i, j)] = (cw[j] >> i) & 1u;

        // one noise realization per frame, shared by every decoder
        std::vector<double> z(nbits);
        for (int t = 0; t < nbits; ++t) z[t] = noise.next();
        LlrVector llr(nbits);
        const double scale = 2.0 / (chan.sigma * chan.sigma);
        for (int t = 0; t < nbits; ++t) {
            const double x = sent[t] ? -1.0 : 1.0;
            llr[t] = scale * (x + chan.sigma * z[t]);
        }

        const int info_begin = spec_.parity * m_;  // info bits are the flat suffix
        FrameResult fr;

        if (set_.uncoded) {
            const double sig_u = ChannelConfig::sigma_for(chan.ebno_db, 1.0);
            for (int t = info_begin; t < nbits; ++t) {
                const double x = sent[t] ? -1.0 : 1.0;
                const bool bit = (x + sig_u * z[t]) < 0.0;
                fr.uncoded.bit_errors += bit != static_cast<bool>(sent[t]);
            }
            fr.uncoded.frame_errors = fr.uncoded.bit_errors > 0;
        }

        if (set_.hdd) {
            std::vector<std::uint8_t> hard(nbits);
            for (int t = 0; t < nbits; ++t) hard[t] = llr[t] < 0.0;
            std::vector<Fe> received(n_);
            for (int j = 0; j < n_; ++j) {
                Fe e = 0;
                for (int i = 0; i < m_; ++i)
                    if (hard[flat_index(m_, i, j)]) e = static_cast<Fe>(e | (1u << i));
                received[j] = e;
            }
            const HddResult hr = hdd_decode(spec_, received);
            for (int j = spec_.parity; j < n_; ++j) {
                const Fe diff = fe_add(hr.codeword[j], cw[j]);
                fr.hdd.bit_errors += std::popcount(static_cast<unsigned>(diff));
            }
            fr.hdd.frame_errors = fr.hdd.bit_errors > 0;
        }

        DecodeResult spa_res;
        if (set_.spa || set_.pspa) {
            spa_res = spa_->decode(llr, cfg_.max_iters);
            if (set_.spa) {
                for (int t = info_begin; t < nbits; ++t)
                    fr.spa.bit_errors += spa_res.bits[t] != sent[t];
                fr.spa.frame_errors = fr.spa.bit_errors > 0;
            }
        }
        if (set_.pspa) {
            const PspaResult pr = pspa_->decode_after_initial(spa_res, llr, cfg_.max_iters,
                                                              cfg_.max_perms, pspa_seed);
            for (int t = info_begin; t < nbits; ++t)
                fr.pspa.bit_errors += pr.result.bits[t] != sent[t];
            fr.pspa.frame_errors = fr.pspa.bit_errors > 0;
        }
        return fr;
    }

private:
    const CodeSpec& spec_;
    const SweepConfig& cfg_;
    DecoderSet set_;
    const PspaDecoder* pspa_;
    const SpaDecoder* spa_;
    int m_, n_;
};

BerPoint make_point(double ebno_db, const std::string& name, std::uint64_t frames,
                    const Counters& c, std::uint64_t info_bits_per_frame, double wall) {
    BerPoint p;
    p.ebno_db = ebno_db;
    p.decoder = name;
    p.frames = frames;
    p.bit_errors = c.bit_errors;
    p.frame_errors = c.frame_errors;
    const double nbits = static_cast<double>(frames) * info_bits_per_frame;
    p.ber = frames ? c.bit_errors / nbits : 0.0;
    p.fer = frames ? static_cast<double>(c.frame_errors) / frames : 0.0;
    p.ci95 = frames ? 1.96 * std::sqrt(std::max(p.ber * (1.0 - p.ber), 0.0) / nbits) : 0.0;
    p.wall_time_s = wall;
    return p;
}

}  // namespace

std::vector<BerPoint> run_sweep(const CodeSpec& spec, const SweepConfig& cfg) {
    const DecoderSet set = parse_decoders(cfg.decoders);
    const int nthreads = std::max(1, cfg.threads);

    // shared immutable decoding material
    std::unique_ptr<SpaDecoder> spa;
    std::unique_ptr<PspaDecoder> pspa;
    std::unique_ptr<AutomorphismGroup> group;
    if (set.spa || set.pspa) {
        const BitMatrix h = build_poly_parity_matrix(spec).expand();
        if (set.pspa) {
            group = std::make_unique<AutomorphismGroup>(
                search_automorphisms(compute_m_matrix(spec), spec, {.threads = nthreads}));
            pspa = std::make_unique<PspaDecoder>(spec, *group, h, cfg.pspa);
        }
        spa = std::make_unique<SpaDecoder>(h);
    }
    const SpaDecoder* spa_ptr = pspa ? &pspa->spa() : spa.get();

    PointRunner runner(spec, cfg, set, pspa.get(), spa_ptr);
    const std::uint64_t info_bits = static_cast<std::uint64_t>(spec.m()) * spec.k();
    constexpr std::uint64_t kChunk = 1024;  // stop rule granularity, thread-independent

    std::vector<BerPoint> out;
    for (std::size_t pi = 0; pi < cfg.ebno_db.size(); ++pi) {
        const ChannelConfig chan = ChannelConfig::make(spec, cfg.ebno_db[pi], cfg.master_seed);
        Counters cu, ch, cs, cp;
        std::uint64_t frames = 0;
        const auto t0 = std::chrono::steady_clock::now();

        auto done = [&] {
            if (frames >= cfg.stop.max_frames) return true;
            if (frames == 0) return false;
            const auto enough = [&](bool enabled, const Counters& c) {
                return !enabled || c.frame_errors >= cfg.stop.min_frame_errors;
            };
            return enough(set.uncoded, cu) && enough(set.hdd, ch) && enough(set.spa, cs) &&
                   enough(set.pspa, cp);
        };

        while (!done()) {
            const std::uint64_t todo = std::min<std::uint64_t>(kChunk, cfg.stop.max_frames - frames);
            std::vector<FrameResult> partial(nthreads);
            auto work = [&](int tid) {
                FrameResult acc;
                for (std::uint64_t fidx = tid; fidx < todo; fidx += nthreads) {
                    const FrameResult fr = runner.run_frame(chan, pi, frames + fidx);
                    acc.uncoded += fr.uncoded;
                    acc.hdd += fr.hdd;
                    acc.spa += fr.spa;
                    acc.pspa += fr.pspa;
                }
                partial[tid] = acc;
            };
            if (nthreads == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
                for (auto& th : pool) th.join();
            }
            for (const auto& fr : partial) {
                cu += fr.uncoded;
                ch += fr.hdd;
                cs += fr.spa;
                cp += fr.pspa;
            }
            frames += todo;
        }

        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (set.uncoded) out.push_back(make_point(chan.ebno_db, "uncoded", frames, cu, info_bits, wall));
        if (set.hdd) out.push_back(make_point(chan.ebno_db, "hdd", frames, ch, info_bits, wall));
        if (set.spa) out.push_back(make_point(chan.ebno_db, "spa", frames, cs, info_bits, wall));
        if (set.pspa) out.push_back(make_point(chan.ebno_db, "pspa", frames, cp, info_bits, wall));
    }
    return out;
}

std::string to_csv(const std::vector<BerPoint>& points) {
    std::string s = "ebno_db,decoder,frames,bit_errors,frame_errors,ber,fer,ci95\n";
    char buf[256];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%g,%s,%llu,%llu,%llu,%.10g,%.10g,%.10g\n", p.ebno_db,
                      p.decoder.c_str(), static_cast<unsigned long long>(p.frames),
                      static_cast<unsigned long long>(p.bit_errors),
                      static_cast<unsigned long long>(p.frame_errors), p.ber, p.fer, p.ci95);
        s += buf;
    }
    return s;
}

void write_csv(std::ostream& os, const std::vector<BerPoint>& points) { os << to_csv(points); }

}  // namespace rsauto
