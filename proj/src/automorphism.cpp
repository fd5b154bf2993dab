#include "rsauto/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace rsauto {

namespace {

int mod_n(long v, int n) {
    long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

void validate(const Permutation& p, int m, int n) {
    if (p.m() != m || static_cast<int>(p.a.size()) != m)
        throw std::invalid_argument("Permutation: sigma and a must have length m");
    std::vector<bool> seen(m, false);
    for (int s : p.sigma) {
        if (s < 0 || s >= m || seen[s]) throw std::invalid_argument("Permutation: sigma is not a permutation");
        seen[s] = true;
    }
    for (int ai : p.a)
        if (ai < 0 || ai >= n) throw std::invalid_argument("Permutation: a entries must lie in Z_n");
    if (p.l < 0 || p.l >= m) throw std::invalid_argument("Permutation: l must lie in Z_m");
}

}  // namespace

Permutation Permutation::canonical(int n) const {
    Permutation c = *this;
    const int a0 = c.a[0];
    for (int& ai : c.a) ai = mod_n(ai - a0, n);
    return c;
}

bool Permutation::is_identity(int n) const {
    for (int i = 0; i < m(); ++i)
        if (sigma[i] != i) return false;
    for (int ai : a)
        if (mod_n(ai, n) != 0) return false;
    return l == 0;
}

std::string Permutation::sigma_cycles() const {
    std::string out;
    std::vector<bool> seen(sigma.size(), false);
    for (int s = 0; s < m(); ++s) {
        if (seen[s] || sigma[s] == s) {
            seen[s] = true;
            continue;
        }
        out += '(';
        int t = s;
        bool first = true;
        while (!seen[t]) {
            seen[t] = true;
            if (!first) out += ',';
            out += std::to_string(t + 1);
            first = false;
            t = sigma[t];
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

std::vector<std::int32_t> index_map(const Permutation& p, int n) {
    const int m = p.m();
    validate(p, m, n);
    const int two_l = mod_n(1L << p.l, n);
    std::vector<std::int32_t> map(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            map[flat_index(m, i, j)] =
                flat_index(m, p.sigma[i], mod_n(static_cast<long>(j) * two_l + p.a[i], n));
    return map;
}

Permutation compose(const Permutation& outer, const Permutation& inner, int n) {
    const int m = inner.m();
    Permutation r;
    r.sigma.resize(m);
    r.a.resize(m);
    r.l = (inner.l + outer.l) % m;
    const int two_lo = mod_n(1L << outer.l, n);
    for (int i = 0; i < m; ++i) {
        r.sigma[i] = outer.sigma[inner.sigma[i]];
        r.a[i] = mod_n(static_cast<long>(inner.a[i]) * two_lo + outer.a[inner.sigma[i]], n);
    }
    return r;
}

Permutation invert(const Permutation& p, int n) {
    const int m = p.m();
    Permutation r;
    r.sigma.assign(m, 0);
    r.a.assign(m, 0);
    r.l = (m - p.l) % m;
    const int two_li = mod_n(1L << r.l, n);
    for (int i = 0; i < m; ++i) r.sigma[p.sigma[i]] = i;
    for (int ip = 0; ip < m; ++ip) {
        const int i = r.sigma[ip];
        r.a[ip] = mod_n(-static_cast<long>(p.a[i]) * two_li, n);
    }
    return r;
}

BitVec apply_permutation(const Permutation& p, const BitVec& v, int n) {
    const auto map = index_map(p, n);
    if (v.size() != map.size())
        throw std::invalid_argument("apply_permutation: vector length must be m*n");
    BitVec out(v.size());
    for (std::size_t t = 0; t < map.size(); ++t)
        if (v.get(t)) out.set(map[t], true);
    return out;
}

Permutation AutomorphismGroup::element(std::size_t cls, int shift) const {
    Permutation p = classes[cls];
    for (int& ai : p.a) ai = mod_n(ai + shift, n);
    return p;
}

namespace {

/// Precomputed material for the definitive invariance check.
struct AutoContext {
    BitMatrix gens;  // generator basis of the binary image code
    BitMatrix h;     // standard binary parity

    explicit AutoContext(const CodeSpec& spec)
        : gens(codeword_basis(spec)), h(standard_binary_parity(spec)) {}

    /// True iff every permuted generator keeps zero syndrome. Works on the
    /// pulled-back parity rows so only parity*m vectors get permuted.
    bool accepts(const std::vector<std::int32_t>& map) const {
        for (std::size_t r = 0; r < h.rows(); ++r) {
            BitVec pulled(h.cols());
            for (std::size_t t = 0; t < map.size(); ++t)
                if (h.row(r).get(map[t])) pulled.set(t, true);
            for (std::size_t g = 0; g < gens.rows(); ++g)
                if (gens.row(g).dot(pulled)) return false;
        }
        return true;
    }
};

struct Collector {
    std::set<std::vector<std::int32_t>> maps;  // dedup on the induced index map
    std::vector<Permutation> classes;

    void add(const Permutation& p, int n) {
        auto map = index_map(p, n);
        if (maps.insert(std::move(map)).second) classes.push_back(p);
    }

    void merge(Collector&& o, int n) {
        for (auto& p : o.classes) add(p, n);
    }
};

std::vector<std::vector<int>> all_sigmas(int m) {
    std::vector<int> s(m);
    std::iota(s.begin(), s.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

/// Exponent-matrix invariance filter: the permuted row i must be a common
/// shift of row sigma(i) for every i. Row 0 passes by construction of a.
bool m_filter(const std::vector<std::vector<int>>& b, const std::vector<int>& sigma,
              const std::vector<int>& a, int two_l, int n, int m) {
    for (int i = 1; i < m; ++i) {
        int r = -1;
        for (int k = 0; k < m; ++k) {
            if (k == i) continue;
            const int v = mod_n(static_cast<long>(two_l) * b[i][k] + a[k] - b[sigma[i]][sigma[k]], n);
            if (r < 0)
                r = v;
            else if (r != v)
                return false;
        }
    }
    return true;
}

void scan_sigma(const std::vector<std::vector<int>>& b, const std::vector<int>& sigma, int m,
                int n, bool paper_faithful, const AutoContext& ctx, Collector& out) {
    Permutation cand;
    cand.sigma = sigma;
    cand.a.assign(m, 0);
    const int s0 = sigma[0];
    for (int l = 0; l < m; ++l) {
        cand.l = l;
        const int two_l = mod_n(1L << l, n);
        auto try_delta = [&](int delta) {
            for (int i = 1; i < m; ++i)
                cand.a[i] = mod_n(static_cast<long>(delta) + b[s0][sigma[i]] -
                                      static_cast<long>(two_l) * b[0][i],
                                  n);
            if (!m_filter(b, sigma, cand.a, two_l, n, m)) return;
            if (ctx.accepts(index_map(cand, n))) out.add(cand, n);
        };
        if (!paper_faithful) {
            for (int delta = 0; delta < n; ++delta) try_delta(delta);
        } else {
            // original loop shape: sweep (a2, a3), keep pairs whose two
            // delta values coincide, then derive the rest
            for (int a2 = 0; a2 < n; ++a2) {
                const int d1 = mod_n(static_cast<long>(two_l) * b[0][1] + a2 - b[s0][sigma[1]], n);
                for (int a3 = 0; a3 < n; ++a3) {
                    const int d2 =
                        mod_n(static_cast<long>(two_l) * b[0][2] + a3 - b[s0][sigma[2]], n);
                    if (d1 != d2) continue;
                    try_delta(d1);
                }
            }
        }
    }
}

}  // namespace

bool is_code_automorphism(const Permutation& p, const CodeSpec& spec) {
    AutoContext ctx(spec);
    return ctx.accepts(index_map(p, spec.n()));
}

AutomorphismGroup search_automorphisms(const MMatrix& mm, const CodeSpec& spec,
                                       const SearchOptions& opts) {
    const int m = spec.m(), n = spec.n();
    if (mm.m != m || mm.n != n)
        throw std::invalid_argument("search_automorphisms: exponent matrix does not match spec");
    const AutoContext ctx(spec);
    const auto sigmas = all_sigmas(m);

    const int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(sigmas.size())));
    std::vector<Collector> parts(nthreads);
    auto work = [&](int tid) {
        for (std::size_t si = tid; si < sigmas.size(); si += nthreads)
            scan_sigma(mm.b, sigmas[si], m, n, opts.paper_faithful, ctx, parts[tid]);
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    Collector all;
    for (auto& part : parts) all.merge(std::move(part), n);

    AutomorphismGroup g;
    g.m = m;
    g.n = n;
    g.classes = std::move(all.classes);
    std::sort(g.classes.begin(), g.classes.end(), [](const Permutation& x, const Permutation& y) {
        if (x.sigma != y.sigma) return x.sigma < y.sigma;
        if (x.l != y.l) return x.l < y.l;
        return x.a < y.a;
    });
    return g;
}

AutomorphismGroup brute_force_group(const CodeSpec& spec) {
    const int m = spec.m(), n = spec.n();
    if (m > 5) throw std::invalid_argument("brute_force_group: only m <= 5 is tractable");
    const AutoContext ctx(spec);
    Collector found;
    Permutation cand;
    cand.a.assign(m, 0);

    if (m <= 4) {
        // fully independent: every (sigma, a2..am, l) candidate is checked
        for (const auto& sigma : all_sigmas(m)) {
            cand.sigma = sigma;
            for (int l = 0; l < m; ++l) {
                cand.l = l;
                const long total = [&] {
                    long t = 1;
                    for (int i = 1; i < m; ++i) t *= n;
                    return t;
                }();
                for (long code = 0; code < total; ++code) {
                    long c = code;
                    for (int i = 1; i < m; ++i) {
                        cand.a[i] = static_cast<int>(c % n);
                        c /= n;
                    }
                    if (ctx.accepts(index_map(cand, n))) found.add(cand, n);
                }
            }
        }
    } else {
        // m == 5: shift-derived a as in the search, but no exponent-matrix
        // filter; the definitive check decides every candidate
        const MMatrix mm = compute_m_matrix(spec);
        for (const auto& sigma : all_sigmas(m)) {
            cand.sigma = sigma;
            const int s0 = sigma[0];
            for (int l = 0; l < m; ++l) {
                cand.l = l;
                const int two_l = mod_n(1L << l, n);
                for (int delta = 0; delta < n; ++delta) {
                    for (int i = 1; i < m; ++i)
                        cand.a[i] = mod_n(static_cast<long>(delta) + mm.b[s0][sigma[i]] -
                                              static_cast<long>(two_l) * mm.b[0][i],
                                          n);
                    if (ctx.accepts(index_map(cand, n))) found.add(cand, n);
                }
            }
        }
    }

    AutomorphismGroup g;
    g.m = m;
    g.n = n;
    g.classes = std::move(found.classes);
    std::sort(g.classes.begin(), g.classes.end(), [](const Permutation& x, const Permutation& y) {
        if (x.sigma != y.sigma) return x.sigma < y.sigma;
        if (x.l != y.l) return x.l < y.l;
        return x.a < y.a;
    });
    return g;
}

}  // namespace rsauto
