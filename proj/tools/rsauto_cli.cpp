#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "rsauto/json_io.hpp"

using namespace rsauto;
using nlohmann::json;

namespace {

void require_m(int m) {
    if (m < 3 || m > 10) throw UsageError("--m must be in 3..10");
}

int effective_threads(int flag) {
    if (flag > 0) return flag;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
}

void emit_with_manifest(const std::string& command, const json& payload, const std::string& out,
                        const json& config, std::uint64_t seed) {
    if (out.empty()) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    write_text(out, payload.dump(2) + "\n");
    write_text(out + ".manifest.json",
               manifest_json(command, config, {out}, seed).dump(2) + "\n");
    std::cerr << "wrote " << out << "\n";
}

int cmd_build(int m, int parity, const std::string& out) {
    require_m(m);
    if (parity != 2 && parity != 3) throw UsageError("--parity must be 2 or 3");
    const CodeSpec spec(Field(m), parity);
    emit_with_manifest("build", build_json(spec), out, json{{"m", m}, {"parity", parity}}, 0);
    return 0;
}

int cmd_search(int m, bool paper_faithful, int threads, const std::string& out) {
    require_m(m);
    const CodeSpec spec(Field(m), 3);
    const MMatrix mm = compute_m_matrix(spec);
    const AutomorphismGroup g = search_automorphisms(
        mm, spec, {.paper_faithful = paper_faithful, .threads = effective_threads(threads)});

    std::cout << "order=" << g.order() << ", classes=" << g.classes.size() << "\n";
    for (const auto& p : g.classes) {
        std::cout << p.sigma_cycles() << "  a=(";
        for (std::size_t i = 0; i < p.a.size(); ++i) std::cout << (i ? "," : "") << p.a[i];
        std::cout << ")+c  l=" << p.l << "\n";
    }
    if (!out.empty())
        emit_with_manifest("search", group_json(g, spec.field), out, json{{"m", m}}, 0);
    return 0;
}

int cmd_simulate(const std::string& config_path, std::string out, long seed_override,
                 int threads_override) {
    std::ifstream is(config_path);
    if (!is) throw UsageError("cannot open config file: " + config_path);
    json cfg_json;
    try {
        cfg_json = json::parse(is);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    SimJobConfig job = parse_sim_config(cfg_json);
    if (seed_override >= 0) job.sweep.master_seed = static_cast<std::uint64_t>(seed_override);
    if (threads_override > 0) job.sweep.threads = threads_override;
    job.sweep.threads = effective_threads(job.sweep.threads);
    if (out.empty()) out = "sweep";

    const CodeSpec spec(Field(job.m), job.parity);
    std::cerr << "simulate: (" << spec.n() << "," << spec.k() << "," << spec.d_min() << ") over GF(2^"
              << job.m << "), " << job.sweep.ebno_db.size() << " points, threads="
              << job.sweep.threads << "\n";
    const std::vector<BerPoint> points = run_sweep(spec, job.sweep);
    for (const auto& p : points)
        std::cerr << "  " << p.ebno_db << " dB " << p.decoder << ": ber=" << p.ber
                  << " (frames=" << p.frames << ")\n";

    const std::string csv_path = out + ".csv";
    write_text(csv_path, to_csv(points));
    cfg_json["m"] = job.m;
    cfg_json["parity"] = job.parity;
    cfg_json["master_seed"] = job.sweep.master_seed;
    write_text(out + ".manifest.json",
               manifest_json("simulate", cfg_json, {csv_path}, job.sweep.master_seed).dump(2) + "\n");
    std::cerr << "wrote " << csv_path << "\n";
    return 0;
}

int cmd_verify(int m, const std::string& perms_path) {
    require_m(m);
    std::ifstream is(perms_path);
    if (!is) throw UsageError("cannot open permutation file: " + perms_path);
    json j;
    try {
        j = json::parse(is);
    } catch (const json::exception& e) {
        throw UsageError(std::string("permutation file: ") + e.what());
    }
    const CodeSpec spec(Field(m), 3);
    const auto perms = parse_permutations(j, spec.m(), spec.n());
    if (perms.empty()) throw UsageError("permutation file: no entries");

    bool all_ok = true;
    for (const auto& p : perms) {
        bool ok = false;
        try {
            ok = is_code_automorphism(p, spec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("permutation entry: ") + e.what());
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "accept" : "reject") << " " << p.sigma_cycles() << " a=(";
        for (std::size_t i = 0; i < p.a.size(); ++i) std::cout << (i ? "," : "") << p.a[i];
        std::cout << ") l=" << p.l << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triple-parity RS binary images: construction, automorphism search, decoding"};
    app.require_subcommand(1);
#ifdef RSAUTO_VERSION
    app.set_version_flag("--version", RSAUTO_VERSION);
#endif

    int m = 4, parity = 3, threads = 0;
    bool paper_faithful = false;
    std::string out, config_path, perms_path;
    long seed = -1;

    auto* build = app.add_subcommand("build", "construct field, idempotent, u vectors, exponent matrix");
    build->add_option("--m", m, "extension degree (3..10)")->required();
    build->add_option("--parity", parity, "parity symbols (2 or 3)");
    build->add_option("--out", out, "write JSON here instead of stdout");

    auto* search = app.add_subcommand("search", "find the automorphism group");
    search->add_option("--m", m, "extension degree (3..10)")->required();
    search->add_flag("--paper-faithful", paper_faithful, "two-delta filtered loop instead of direct derivation");
    search->add_option("--threads", threads, "worker threads (0 = all cores)");
    search->add_option("--out", out, "write group JSON here");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER sweep");
    simulate->add_option("--config", config_path, "JSON sweep configuration")->required();
    simulate->add_option("--out", out, "output prefix (default: sweep)");
    simulate->add_option("--seed", seed, "override master_seed");
    simulate->add_option("--threads", threads, "override threads (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "check permutations against the code");
    verify->add_option("--m", m, "extension degree (3..10)")->required();
    verify->add_option("--perms", perms_path, "permutation JSON file")->required();

    try {
        app.parse(argc, argv);
        if (build->parsed()) return cmd_build(m, parity, out);
        if (search->parsed()) return cmd_search(m, paper_faithful, threads, out);
        if (simulate->parsed()) return cmd_simulate(config_path, out, seed, threads);
        if (verify->parsed()) return cmd_verify(m, perms_path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
