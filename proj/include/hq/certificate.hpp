// Serializable records of verified claims.

#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hq/version.hpp"

namespace hq {

/// Inconclusive means the check ran correctly but the bound it evaluates does
/// not decide the claim (e.g. a zero margin).
enum class Outcome { pass, fail, inconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

struct Certificate {
  using Fields = std::vector<std::pair<std::string, std::string>>;

  std::string claim;
  Fields parameters;
  Fields quantities;
  std::string margin;
  Outcome outcome = Outcome::fail;
  std::string note;
  std::vector<std::uint32_t> witness;
  std::string timestamp;
  std::string version = kToolkitVersion;

  bool passed() const { return outcome == Outcome::pass; }

  template <class T>
  Certificate& param(const std::string& key, const T& value) {
    parameters.emplace_back(key, stringify(value));
    return *this;
  }
  template <class T>
  Certificate& quantity(const std::string& key, const T& value) {
    quantities.emplace_back(key, stringify(value));
    return *this;
  }

  /// Value of a recorded quantity, or empty if absent.
  std::string get(const std::string& key) const {
    for (const auto& [k, v] : quantities)
      if (k == key) return v;
    for (const auto& [k, v] : parameters)
      if (k == key) return v;
    return {};
  }

  void stamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    timestamp = os.str();
  }

 private:
  template <class T>
  static std::string stringify(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else if constexpr (std::is_floating_point_v<T>) {
      return format_real(static_cast<double>(v));
    } else if constexpr (std::is_convertible_v<T, std::string>) {
      return std::string(v);
    } else {
      std::ostringstream os;
      os << v;
      return os.str();
    }
  }
};

/// "key: value" lines.
inline void write_text(std::ostream& os, const Certificate& c) {
  os << "claim: " << c.claim << '\n';
  for (const auto& [k, v] : c.parameters) os << "param." << k << ": " << v << '\n';
  for (const auto& [k, v] : c.quantities) os << k << ": " << v << '\n';
  if (!c.margin.empty()) os << "margin: " << c.margin << '\n';
  os << "outcome: " << to_string(c.outcome) << '\n';
  if (!c.note.empty()) os << "note: " << c.note << '\n';
  if (!c.witness.empty()) {
    os << "witness:";
    for (auto w : c.witness) os << ' ' << w;
    os << '\n';
  }
  os << "version: " << c.version << '\n';
  os << "timestamp: " << c.timestamp << '\n';
}

inline nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["claim"] = c.claim;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.parameters) j["parameters"][k] = v;
  j["quantities"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.quantities) j["quantities"][k] = v;
  j["margin"] = c.margin;
  j["outcome"] = to_string(c.outcome);
  j["note"] = c.note;
  j["witness"] = c.witness;
  j["version"] = c.version;
  j["timestamp"] = c.timestamp;
  return j;
}

/// Combined outcome: any fail fails; otherwise any inconclusive is inconclusive.
inline Outcome combine(const std::vector<Certificate>& certs) {
  Outcome out = Outcome::pass;
  for (const auto& c : certs) {
    if (c.outcome == Outcome::fail) return Outcome::fail;
    if (c.outcome == Outcome::inconclusive) out = Outcome::inconclusive;
  }
  return out;
}

}  // namespace hq
