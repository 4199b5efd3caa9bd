#include "rlnc/policy_io.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rlnc {

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t k = 0; k < len; ++k) {
    h ^= p[k];
    h *= 0x100000001b3ULL;
  }
}

void hash_field(std::uint64_t& h, const char* name, double value) {
  char buf[64];
  int n = std::snprintf(buf, sizeof buf, "%s=%.17g;", name, value);
  hash_bytes(h, buf, static_cast<std::size_t>(n));
}

void hash_field(std::uint64_t& h, const char* name, std::int64_t value) {
  char buf[64];
  int n = std::snprintf(buf, sizeof buf, "%s=%" PRId64 ";", name, value);
  hash_bytes(h, buf, static_cast<std::size_t>(n));
}

}  // namespace

std::string params_hash(const LinkParameters& link,
                        const CodingParameters& coding, Objective objective) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
  hash_field(h, "R", link.data_rate());
  hash_field(h, "D", link.propagation_delay());
  hash_field(h, "P", link.transmit_power());
  hash_field(h, "Pe", link.pkt_erasure());
  hash_field(h, "Pea", link.ack_erasure());
  hash_field(h, "M", static_cast<std::int64_t>(coding.block_size()));
  hash_field(h, "n", coding.payload_bits());
  hash_field(h, "h", coding.header_bits());
  hash_field(h, "g", static_cast<std::int64_t>(coding.coeff_bits()));
  hash_field(h, "na", coding.ack_bits());
  const char* obj = objective_name(objective);
  hash_bytes(h, obj, std::char_traits<char>::length(obj));
  char out[17];
  std::snprintf(out, sizeof out, "%016" PRIx64, h);
  return std::string(out);
}

const char* objective_name(Objective objective) {
  return objective == Objective::Energy ? "energy" : "time";
}

std::string policy_table_to_json(const PolicyTable& table) {
  nlohmann::json j;
  j["M"] = table.policy.block_size();
  j["N"] = table.policy.n_per_state();
  j["objective"] = objective_name(table.objective);
  j["params_hash"] = table.params_hash;
  return j.dump(2) + "\n";
}

PolicyTable policy_table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("policy table is not valid JSON: ") +
                      e.what());
  }
  if (!j.contains("M") || !j.contains("N") || !j.contains("objective") ||
      !j.contains("params_hash")) {
    throw ConfigError(
        "policy table must contain M, N, objective and params_hash");
  }
  const int m = j.at("M").get<int>();
  auto n = j.at("N").get<std::vector<int>>();
  if (static_cast<int>(n.size()) != m) {
    throw ConfigError("policy table N has " + std::to_string(n.size()) +
                      " entries but M = " + std::to_string(m));
  }
  const std::string obj = j.at("objective").get<std::string>();
  if (obj != "energy" && obj != "time") {
    throw ConfigError("policy table objective must be \"energy\" or \"time\"");
  }
  return PolicyTable{Policy(std::move(n)),
                     obj == "energy" ? Objective::Energy : Objective::Time,
                     j.at("params_hash").get<std::string>()};
}

void save_policy_table(const PolicyTable& table,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot open policy file for writing: " + path.string());
  }
  out << policy_table_to_json(table);
}

PolicyTable load_policy_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open policy file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return policy_table_from_json(buf.str());
}

}  // namespace rlnc
