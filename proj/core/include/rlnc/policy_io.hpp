#ifndef RLNC_POLICY_IO_HPP
#define RLNC_POLICY_IO_HPP

#include <filesystem>
#include <string>

#include "rlnc/optimizer.hpp"
#include "rlnc/params.hpp"

namespace rlnc {

// A persisted burst-size look-up table: policies depend only on the link
// and geometry, so they are computed once and reused.
struct PolicyTable {
  Policy policy;
  Objective objective;
  std::string params_hash;  // 16 hex digits, see params_hash()
};

// FNV-1a 64-bit hash over a canonical rendering of the parameters the
// policy was optimized for. Stable across runs and platforms.
std::string params_hash(const LinkParameters& link,
                        const CodingParameters& coding, Objective objective);

// Serialized form: {"M": int, "N": [int...], "objective": "energy"|"time",
// "params_hash": hex}.
std::string policy_table_to_json(const PolicyTable& table);
PolicyTable policy_table_from_json(const std::string& text);

void save_policy_table(const PolicyTable& table,
                       const std::filesystem::path& path);
PolicyTable load_policy_table(const std::filesystem::path& path);

const char* objective_name(Objective objective);  // "energy" | "time"

}  // namespace rlnc

#endif  // RLNC_POLICY_IO_HPP
