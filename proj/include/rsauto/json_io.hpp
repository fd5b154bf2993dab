#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rsauto/automorphism.hpp"
#include "rsauto/rs_code.hpp"
#include "rsauto/sim.hpp"

namespace rsauto {

/// Command-line misuse (bad flag value, malformed config): exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json field_json(const Field& f);

/// Construction artifacts: field, code parameters, idempotent, u vectors
/// and (triple parity) the exponent matrix. Schema rsauto.build.v1.
nlohmann::json build_json(const CodeSpec& spec);

/// Automorphism group export, one entry per class plus the expanded order.
/// Schema rsauto.group.v1.
nlohmann::json group_json(const AutomorphismGroup& g, const Field& f);

/// Accepts a group export, {"perms": [...]} or a bare array of
/// {sigma (1-based one-line), a, l} entries.
std::vector<Permutation> parse_permutations(const nlohmann::json& j, int m, int n);

struct SimJobConfig {
    int m = 5;
    int parity = 3;
    SweepConfig sweep;
};

/// Strict parse: any unknown key is a UsageError naming the key.
SimJobConfig parse_sim_config(const nlohmann::json& j);

nlohmann::json manifest_json(const std::string& command, const nlohmann::json& config,
                             const std::vector<std::string>& outputs, std::uint64_t master_seed);

}  // namespace rsauto
