#pragma once

// Scan records, their CSV/JSON forms, and the append-only JSONL result cache.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace isoqudit::cli {

enum class TriState { False, True, Unknown };

std::string tri_state_text(TriState t);  // "true", "false" or "" (CSV)
nlohmann::json tri_state_json(TriState t);  // true, false or null
TriState tri_state_from_json(const nlohmann::json& j);

/// Shortest text that round-trips a double (17 significant digits).
std::string format_real(double x);

struct ScanRecord {
  int two_s = 0;
  double alpha = 0.0;
  double beta = 0.0;
  bool physical = false;
  TriState ppt = TriState::Unknown;
  TriState separable = TriState::Unknown;
  std::optional<double> d_hs;
  std::optional<int> sigma;  // fiducial spin as 2s
  std::string classification;
  std::uint64_t seed = 0;

  /// Throws std::logic_error when separable = true without ppt = true.
  void validate() const;
};

inline const char* const kCsvHeader = "two_s,alpha,beta,physical,ppt,separable,d_hs,sigma,classification,seed";

std::string to_csv_row(const ScanRecord& r);
nlohmann::json to_json(const ScanRecord& r);
ScanRecord record_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of a configuration string, rendered as 16 hex digits.
std::string config_hash(const std::string& canonical_config);

struct CacheCorruption : std::runtime_error {
  CacheCorruption(std::size_t line, const std::string& what);
  std::size_t line;
};

/// JSONL cache keyed by (two_s, alpha, beta, config hash). Later lines win on load;
/// appends are serialized and flushed per record.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::string path);

  /// Throws CacheCorruption on the first unreadable line.
  void load();
  std::optional<ScanRecord> find(int two_s, double alpha, double beta, const std::string& hash) const;
  void append(const ScanRecord& r, const std::string& hash);
  std::size_t size() const { return entries_.size(); }
  bool enabled() const { return !path_.empty(); }

 private:
  using Key = std::tuple<int, std::uint64_t, std::uint64_t, std::string>;
  static Key key(int two_s, double alpha, double beta, const std::string& hash);

  std::string path_;
  std::map<Key, ScanRecord> entries_;
  mutable std::mutex mu_;
};

}  // namespace isoqudit::cli
