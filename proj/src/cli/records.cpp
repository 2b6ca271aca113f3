#include "isoqudit/cli/records.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace isoqudit::cli {

std::string tri_state_text(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::Unknown: return "";
  }
  return "";
}

nlohmann::json tri_state_json(TriState t) {
  if (t == TriState::Unknown) return nullptr;
  return t == TriState::True;
}

TriState tri_state_from_json(const nlohmann::json& j) {
  if (j.is_null()) return TriState::Unknown;
  return j.get<bool>() ? TriState::True : TriState::False;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ScanRecord::validate() const {
  if (separable == TriState::True && ppt != TriState::True)
    throw std::logic_error("ScanRecord: separable record without PPT");
  if (!physical && (ppt != TriState::Unknown || separable != TriState::Unknown))
    throw std::logic_error("ScanRecord: verdicts on a non-state");
}

std::string to_csv_row(const ScanRecord& r) {
  r.validate();
  std::ostringstream os;
  os << r.two_s << ',' << format_real(r.alpha) << ',' << format_real(r.beta) << ','
     << (r.physical ? "true" : "false") << ',' << tri_state_text(r.ppt) << ',' << tri_state_text(r.separable) << ',';
  if (r.d_hs) os << format_real(*r.d_hs);
  os << ',';
  if (r.sigma) os << *r.sigma;
  os << ',' << r.classification << ',' << r.seed;
  return os.str();
}

nlohmann::json to_json(const ScanRecord& r) {
  r.validate();
  nlohmann::json j;
  j["two_s"] = r.two_s;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["physical"] = r.physical;
  j["ppt"] = tri_state_json(r.ppt);
  j["separable"] = tri_state_json(r.separable);
  j["d_hs"] = r.d_hs ? nlohmann::json(*r.d_hs) : nlohmann::json(nullptr);
  j["sigma"] = r.sigma ? nlohmann::json(*r.sigma) : nlohmann::json(nullptr);
  j["classification"] = r.classification;
  j["seed"] = r.seed;
  return j;
}

ScanRecord record_from_json(const nlohmann::json& j) {
  ScanRecord r;
  r.two_s = j.at("two_s").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.beta = j.at("beta").get<double>();
  r.physical = j.at("physical").get<bool>();
  r.ppt = tri_state_from_json(j.at("ppt"));
  r.separable = tri_state_from_json(j.at("separable"));
  if (!j.at("d_hs").is_null()) r.d_hs = j.at("d_hs").get<double>();
  if (!j.at("sigma").is_null()) r.sigma = j.at("sigma").get<int>();
  r.classification = j.at("classification").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.validate();
  return r;
}

std::string config_hash(const std::string& canonical_config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_config) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CacheCorruption::CacheCorruption(std::size_t l, const std::string& what)
    : std::runtime_error("cache line " + std::to_string(l) + ": " + what), line(l) {}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

ResultCache::Key ResultCache::key(int two_s, double alpha, double beta, const std::string& hash) {
  // -0.0 and 0.0 name the same grid point.
  return {two_s, std::bit_cast<std::uint64_t>(alpha + 0.0), std::bit_cast<std::uint64_t>(beta + 0.0), hash};
}

void ResultCache::load() {
  std::lock_guard lock(mu_);
  entries_.clear();
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto hash = j.at("config_hash").get<std::string>();
      ScanRecord r = record_from_json(j);
      entries_[key(r.two_s, r.alpha, r.beta, hash)] = std::move(r);
    } catch (const std::exception& e) {
      throw CacheCorruption(n, e.what());
    }
  }
}

std::optional<ScanRecord> ResultCache::find(int two_s, double alpha, double beta, const std::string& hash) const {
  std::lock_guard lock(mu_);
  const auto it = entries_.find(key(two_s, alpha, beta, hash));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::append(const ScanRecord& r, const std::string& hash) {
  std::lock_guard lock(mu_);
  entries_[key(r.two_s, r.alpha, r.beta, hash)] = r;
  if (path_.empty()) return;
  auto j = to_json(r);
  j["config_hash"] = hash;
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot append to cache " + path_);
}

}  // namespace isoqudit::cli
