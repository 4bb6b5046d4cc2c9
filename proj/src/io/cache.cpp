#include <fstream>
#include <random>
#include <sstream>

#include "rrclosure/error.hpp"
#include "rrclosure/report.hpp"

namespace rrc {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ReportCache::path_for(const std::string& key) const {
  char name[17];
  std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
  return dir_ / (std::string(name) + ".json");
}

std::optional<Json> ReportCache::lookup(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  Json entry = Json::parse(ss.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  auto k = entry.find("key");
  auto r = entry.find("report");
  if (k == entry.end() || r == entry.end() || !k->is_string() || *k != key || !r->is_object())
    return std::nullopt;
  return *r;
}

void ReportCache::store(const std::string& key, const Json& report) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create cache directory " + dir_.string());
  std::filesystem::path target = path_for(key);
  std::random_device rd;
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << Json{{"key", key}, {"report", report}}.dump();
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot move cache entry into " + target.string());
  }
}

}  // namespace rrc
