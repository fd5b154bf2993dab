#include "rsauto/json_io.hpp"

#include <chrono>
#include <set>

#ifndef RSAUTO_VERSION
#define RSAUTO_VERSION "unknown"
#endif

namespace rsauto {

using nlohmann::json;

namespace {

std::string poly_terms(std::uint32_t poly, int m) {
    std::string s;
    for (int d = m; d >= 0; --d) {
        if (!((poly >> d) & 1u)) continue;
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

std::vector<int> support_of(const BitVec& v) {
    std::vector<int> s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v.get(j)) s.push_back(static_cast<int>(j));
    return s;
}

}  // namespace

json field_json(const Field& f) {
    char hex[16];
    std::snprintf(hex, sizeof hex, "0x%X", f.prim_poly());
    return json{{"m", f.m()},
                {"n", f.n()},
                {"prim_poly", hex},
                {"prim_poly_terms", poly_terms(f.prim_poly(), f.m())}};
}

json build_json(const CodeSpec& spec) {
    const PolyParityMatrix pm = build_poly_parity_matrix(spec);
    json j;
    j["schema"] = "rsauto.build.v1";
    j["field"] = field_json(spec.field);
    j["code"] = {{"n", spec.n()},
                 {"k", spec.k()},
                 {"d_min", spec.d_min()},
                 {"parity", spec.parity},
                 {"zero_exponents", [&] {
                      std::vector<int> z;
                      for (int s = 0; s < spec.parity; ++s) z.push_back(s);
                      return z;
                  }()}};
    j["idempotent"] = {{"support", support_of(pm.theta)},
                       {"weight", pm.theta.count()},
                       {"complement_convention", pm.u.complement_convention}};
    j["u_vectors"]["u1"] = pm.u.u1;
    if (spec.parity == 3) j["u_vectors"]["u2"] = pm.u.u2;
    j["parity_matrix"] = {{"rows", spec.parity * spec.m()},
                          {"rank", pm.expand().rank()}};
    if (spec.parity == 3) {
        const MMatrix mm = compute_m_matrix(spec);
        json rows = json::array();
        for (int i = 0; i < mm.m; ++i) {
            json row = json::array();
            for (int k = 0; k < mm.m; ++k) {
                if (k == i)
                    row.push_back(nullptr);
                else
                    row.push_back(mm.b[i][k]);
            }
            rows.push_back(std::move(row));
        }
        j["m_matrix"]["b"] = std::move(rows);
    }
    return j;
}

json group_json(const AutomorphismGroup& g, const Field& f) {
    json j;
    j["schema"] = "rsauto.group.v1";
    j["field"] = field_json(f);
    j["order"] = g.order();
    j["num_classes"] = g.classes.size();
    j["shifts_per_class"] = g.n;
    json classes = json::array();
    for (const auto& p : g.classes) {
        std::vector<int> one_line(p.sigma.size());
        for (std::size_t i = 0; i < p.sigma.size(); ++i) one_line[i] = p.sigma[i] + 1;
        classes.push_back(json{{"sigma_cycles", p.sigma_cycles()},
                               {"sigma", one_line},
                               {"a", p.a},
                               {"l", p.l}});
    }
    j["classes"] = std::move(classes);
    return j;
}

std::vector<Permutation> parse_permutations(const json& j, int m, int n) {
    const json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.contains("classes"))
        arr = &j.at("classes");
    else if (j.contains("perms"))
        arr = &j.at("perms");
    else
        throw UsageError("permutation file: expected an array, 'perms' or 'classes'");

    std::vector<Permutation> out;
    for (const auto& e : *arr) {
        Permutation p;
        if (!e.contains("sigma") || !e.contains("a"))
            throw UsageError("permutation entry: 'sigma' and 'a' are required");
        for (int v : e.at("sigma").get<std::vector<int>>()) p.sigma.push_back(v - 1);  // 1-based
        p.a = e.at("a").get<std::vector<int>>();
        p.l = e.value("l", 0);
        if (p.m() != m || static_cast<int>(p.a.size()) != m)
            throw UsageError("permutation entry: sigma/a length must equal m");
        for (int& ai : p.a) ai = ((ai % n) + n) % n;
        out.push_back(std::move(p));
    }
    return out;
}

SimJobConfig parse_sim_config(const json& j) {
    static const std::set<std::string> known{
        "m",          "parity",           "ebno_db",    "decoders",         "max_iters",
        "max_perms",  "min_frame_errors", "max_frames", "master_seed",      "threads",
        "exclude_identity", "extrinsic_sum"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw UsageError("config: unknown key '" + key + "'");

    SimJobConfig c;
    try {
        c.m = j.value("m", 5);
        c.parity = j.value("parity", 3);
        if (j.contains("ebno_db")) c.sweep.ebno_db = j.at("ebno_db").get<std::vector<double>>();
        if (j.contains("decoders"))
            c.sweep.decoders = j.at("decoders").get<std::vector<std::string>>();
        c.sweep.max_iters = j.value("max_iters", 30);
        c.sweep.max_perms = j.value("max_perms", 10);
        c.sweep.stop.min_frame_errors = j.value("min_frame_errors", std::uint64_t{100});
        c.sweep.stop.max_frames = j.value("max_frames", std::uint64_t{10'000'000});
        c.sweep.master_seed = j.value("master_seed", std::uint64_t{1});
        c.sweep.threads = j.value("threads", 1);
        c.sweep.pspa.exclude_identity = j.value("exclude_identity", true);
        c.sweep.pspa.extrinsic_sum = j.value("extrinsic_sum", false);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    if (c.sweep.ebno_db.empty()) throw UsageError("config: key 'ebno_db' must be a nonempty array");
    if (c.sweep.decoders.empty()) throw UsageError("config: key 'decoders' must be a nonempty array");
    if (c.m < 3 || c.m > 10) throw UsageError("config: key 'm' must be in 3..10");
    if (c.parity != 2 && c.parity != 3) throw UsageError("config: key 'parity' must be 2 or 3");
    return c;
}

json manifest_json(const std::string& command, const json& config,
                   const std::vector<std::string>& outputs, std::uint64_t master_seed) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char stamp[64];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return json{{"schema", "rsauto.manifest.v1"}, {"command", command},
                {"version", RSAUTO_VERSION},     {"created_utc", stamp},
                {"master_seed", master_seed},    {"config", config},
                {"outputs", outputs}};
}

}  // namespace rsauto
