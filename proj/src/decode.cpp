#include "rsauto/decode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsauto/rng.hpp"

namespace rsauto {

// --- hard-decision Berlekamp-Massey ---------------------------------------

namespace {

Fe poly_eval(const Field& f, const std::vector<Fe>& p, Fe x) {
    Fe acc = 0;
    for (std::size_t d = p.size(); d-- > 0;) acc = fe_add(f.mul(acc, x), p[d]);
    return acc;
}

}  // namespace

HddResult hdd_decode(const CodeSpec& spec, const std::vector<Fe>& received) {
    const Field& f = spec.field;
    const int n = spec.n();
    const int nsyn = spec.parity;          // d_min - 1 syndromes
    const int t = (spec.d_min() - 1) / 2;  // 1 for both supported codes
    if (static_cast<int>(received.size()) != n)
        throw std::invalid_argument("hdd_decode: received length must be n");

    const std::vector<Fe> syn = syndromes(spec, received);
    if (std::all_of(syn.begin(), syn.end(), [](Fe s) { return s == 0; }))
        return {received, true};

    // Berlekamp-Massey over the nsyn syndromes
    std::vector<Fe> lambda{1}, prev{1};
    int L = 0, shift = 1;
    Fe b = 1;
    for (int r = 0; r < nsyn; ++r) {
        Fe delta = 0;
        for (int i = 0; i <= L && i < static_cast<int>(lambda.size()); ++i)
            if (r - i >= 0) delta = fe_add(delta, f.mul(lambda[i], syn[r - i]));
        if (delta == 0) {
            ++shift;
            continue;
        }
        const Fe factor = f.mul(delta, f.inv(b));
        std::vector<Fe> next = lambda;
        next.resize(std::max(lambda.size(), prev.size() + shift), 0);
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i + shift] = fe_add(next[i + shift], f.mul(factor, prev[i]));
        if (2 * L <= r) {
            prev = lambda;
            b = delta;
            L = r + 1 - L;
            shift = 1;
        } else {
            ++shift;
        }
        lambda = std::move(next);
    }
    if (L > t) return {received, false};

    // Chien search for error positions (roots of lambda at alpha^{-pos})
    std::vector<int> positions;
    for (int pos = 0; pos < n; ++pos)
        if (poly_eval(f, lambda, f.alpha_pow(-pos)) == 0) positions.push_back(pos);
    if (static_cast<int>(positions.size()) != L) return {received, false};

    // Forney with the first zero at alpha^0: omega = S * lambda mod x^nsyn
    std::vector<Fe> omega(nsyn, 0);
    for (int d = 0; d < nsyn; ++d)
        for (int i = 0; i <= d && i < static_cast<int>(lambda.size()); ++i)
            omega[d] = fe_add(omega[d], f.mul(lambda[i], syn[d - i]));
    std::vector<Fe> lambda_deriv;  // formal derivative, odd terms survive
    for (std::size_t d = 1; d < lambda.size(); d += 2) {
        lambda_deriv.resize(d, 0);
        lambda_deriv[d - 1] = lambda[d];
    }

    std::vector<Fe> corrected = received;
    for (int pos : positions) {
        const Fe xinv = f.alpha_pow(-pos);
        const Fe num = poly_eval(f, omega, xinv);
        const Fe den = poly_eval(f, lambda_deriv, xinv);
        if (den == 0) return {received, false};
        const Fe value = f.mul(f.alpha_pow(pos), f.mul(num, f.inv(den)));
        corrected[pos] = fe_add(corrected[pos], value);
    }

    const std::vector<Fe> check = syndromes(spec, corrected);
    if (!std::all_of(check.begin(), check.end(), [](Fe s) { return s == 0; }))
        return {received, false};
    return {corrected, true};
}

// --- sum-product decoder ---------------------------------------------------

SpaDecoder::SpaDecoder(const BitMatrix& h)
    : ncheck_(static_cast<int>(h.rows())), nvar_(static_cast<int>(h.cols())) {
    check_vars_.resize(ncheck_);
    var_edges_.resize(nvar_);
    check_edge_begin_.reserve(ncheck_ + 1);
    int e = 0;
    for (int c = 0; c < ncheck_; ++c) {
        check_edge_begin_.push_back(e);
        for (int v = 0; v < nvar_; ++v)
            if (h.row(c).get(v)) {
                check_vars_[c].push_back(v);
                var_edges_[v].push_back(e);
                edge_var_.push_back(v);
                ++e;
            }
    }
    check_edge_begin_.push_back(e);
}

bool SpaDecoder::syndrome_ok(const std::vector<std::uint8_t>& bits) const {
    for (int c = 0; c < ncheck_; ++c) {
        unsigned s = 0;
        for (int v : check_vars_[c]) s ^= bits[v];
        if (s & 1u) return false;
    }
    return true;
}

DecodeResult spa_decode(const BitMatrix& h, const LlrVector& channel_llr, int max_iters) {
    return SpaDecoder(h).decode(channel_llr, max_iters);
}

DecodeResult SpaDecoder::decode(const LlrVector& channel_llr, int max_iters) const {
    if (static_cast<int>(channel_llr.size()) != nvar_)
        throw std::invalid_argument("SpaDecoder: LLR length does not match matrix columns");
    constexpr double kTanhLim = 1.0 - 1e-12;
    const auto clip = [](double x) { return std::clamp(x, -kLlrClip, kLlrClip); };

    DecodeResult res;
    res.posterior = channel_llr;
    res.bits.resize(nvar_);
    for (int v = 0; v < nvar_; ++v) res.bits[v] = channel_llr[v] < 0.0;
    if (syndrome_ok(res.bits)) {
        res.valid = true;
        return res;
    }

    const int nedges = static_cast<int>(edge_var_.size());
    std::vector<double> q(nedges), r(nedges);
    std::vector<double> tanhs, pre, suf;
    for (int e = 0; e < nedges; ++e) q[e] = clip(channel_llr[edge_var_[e]]);

    for (int iter = 1; iter <= max_iters; ++iter) {
        // check update, tanh rule via prefix/suffix products
        for (int c = 0; c < ncheck_; ++c) {
            const int begin = check_edge_begin_[c], end = check_edge_begin_[c + 1];
            const int deg = end - begin;
            tanhs.resize(deg);
            pre.resize(deg + 1);
            suf.resize(deg + 1);
            for (int k = 0; k < deg; ++k) tanhs[k] = std::tanh(0.5 * q[begin + k]);
            pre[0] = 1.0;
            for (int k = 0; k < deg; ++k) pre[k + 1] = pre[k] * tanhs[k];
            suf[deg] = 1.0;
            for (int k = deg; k-- > 0;) suf[k] = suf[k + 1] * tanhs[k];
            for (int k = 0; k < deg; ++k) {
                const double prod = std::clamp(pre[k] * suf[k + 1], -kTanhLim, kTanhLim);
                r[begin + k] = 2.0 * std::atanh(prod);
            }
        }
        // variable update and posterior
        res.posterior = channel_llr;
        for (int e = 0; e < nedges; ++e) res.posterior[edge_var_[e]] += r[e];
        for (int v = 0; v < nvar_; ++v) res.bits[v] = res.posterior[v] < 0.0;
        res.iterations_used = iter;
        if (syndrome_ok(res.bits)) {
            res.valid = true;
            return res;
        }
        for (int e = 0; e < nedges; ++e) q[e] = clip(res.posterior[edge_var_[e]] - r[e]);
    }
    return res;
}

// --- permutation sum-product ------------------------------------------------

PspaDecoder::PspaDecoder(const CodeSpec& spec, const AutomorphismGroup& group, const BitMatrix& h,
                         PspaOptions opts)
    : group_(group), spa_(h), opts_(opts), m_(spec.m()), n_(spec.n()) {
    if (group_.classes.empty()) throw std::invalid_argument("PspaDecoder: group must be nonempty");
}

PspaResult PspaDecoder::decode(const LlrVector& channel_llr, int max_iters, int max_perms,
                               std::uint64_t rng_seed) const {
    return decode_after_initial(spa_.decode(channel_llr, max_iters), channel_llr, max_iters,
                                max_perms, rng_seed);
}

PspaResult PspaDecoder::decode_after_initial(const DecodeResult& initial,
                                             const LlrVector& channel_llr, int max_iters,
                                             int max_perms, std::uint64_t rng_seed) const {
    PspaResult out;
    if (initial.valid) {
        out.result = initial;
        return out;
    }

    const int nbits = m_ * n_;
    LlrVector ysum = initial.posterior;
    int iterations = initial.iterations_used;

    // sample permutation indices without replacement, identity excluded
    long id_index = -1;
    for (std::size_t c = 0; c < group_.classes.size(); ++c)
        if (group_.classes[c].is_identity(n_)) {
            id_index = static_cast<long>(c) * n_;
            break;
        }
    std::vector<long> pool;
    pool.reserve(group_.order());
    for (long e = 0; e < group_.order(); ++e)
        if (!(opts_.exclude_identity && e == id_index)) pool.push_back(e);
    const int draws = static_cast<int>(std::min<long>(max_perms, static_cast<long>(pool.size())));
    SplitMix64 rng(rng_seed);
    for (int d = 0; d < draws; ++d) {
        const std::size_t pick = d + static_cast<std::size_t>(rng.below(pool.size() - d));
        std::swap(pool[d], pool[pick]);
    }

    LlrVector yperm(nbits);
    for (int d = 0; d < draws; ++d) {
        const Permutation rho = group_.element(pool[d] / n_, static_cast<int>(pool[d] % n_));
        const auto map = index_map(rho, n_);
        for (int tIdx = 0; tIdx < nbits; ++tIdx) yperm[map[tIdx]] = channel_llr[tIdx];
        const DecodeResult rp = spa_.decode(yperm, max_iters);
        iterations += rp.iterations_used;
        out.permutations_used = d + 1;
        if (rp.valid) {
            // undo the permutation on the decoded word
            out.result.bits.resize(nbits);
            out.result.posterior.resize(nbits);
            for (int tIdx = 0; tIdx < nbits; ++tIdx) {
                out.result.bits[tIdx] = rp.bits[map[tIdx]];
                out.result.posterior[tIdx] = rp.posterior[map[tIdx]];
            }
            out.result.valid = true;
            out.result.iterations_used = iterations;
            return out;
        }
        for (int tIdx = 0; tIdx < nbits; ++tIdx) {
            const double back = rp.posterior[map[tIdx]];
            ysum[tIdx] += opts_.extrinsic_sum ? back - channel_llr[tIdx] : back;
        }
    }

    out.result.posterior = std::move(ysum);
    out.result.bits.resize(nbits);
    for (int tIdx = 0; tIdx < nbits; ++tIdx)
        out.result.bits[tIdx] = out.result.posterior[tIdx] < 0.0;
    out.result.iterations_used = iterations;
    // validity of the combined decision is judged by its own syndrome
    out.result.valid = spa_.syndrome_ok(out.result.bits);
    return out;
}

PspaResult pspa_decode(const CodeSpec& spec, const AutomorphismGroup& group,
                       const LlrVector& channel_llr, int max_iters, int max_perms,
                       std::uint64_t rng_seed, PspaOptions opts) {
    const BitMatrix h = build_poly_parity_matrix(spec).expand();
    return PspaDecoder(spec, group, h, opts).decode(channel_llr, max_iters, max_perms, rng_seed);
}

}  // namespace rsauto
