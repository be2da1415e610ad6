#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>
#include <system_error>

#include "json.hpp"

namespace cubiccm::cli {

namespace fs = std::filesystem;

fs::path cache_dir() {
  if (const char* dir = std::getenv("CUBICCM_CACHE"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "cubiccm";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "cubiccm";
  return fs::temp_directory_path() / "cubiccm";
}

fs::path qexp_cache_file(std::int64_t D, std::int64_t M, std::int64_t B) {
  return cache_dir() / ("qexp_D" + std::to_string(D) + "_M" + std::to_string(M) + "_B" + std::to_string(B) + ".json");
}

std::optional<std::vector<Integer>> load_qexp(std::int64_t D, std::int64_t M, std::int64_t B) {
  std::ifstream in(qexp_cache_file(D, M, B));
  if (!in) return std::nullopt;
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("D", std::int64_t{0}) != D || doc.value("M", std::int64_t{0}) != M ||
      doc.value("B", std::int64_t{0}) != B)
    return std::nullopt;
  const auto it = doc.find("coefficients");
  if (it == doc.end() || !it->is_array() || it->size() != static_cast<std::size_t>(B)) return std::nullopt;
  std::vector<Integer> out;
  out.reserve(it->size());
  for (const auto& c : *it) {
    if (!c.is_string()) return std::nullopt;
    Integer z;
    if (z.set_str(c.get<std::string>(), 10) != 0) return std::nullopt;
    out.push_back(std::move(z));
  }
  return out;
}

bool store_qexp(std::int64_t D, std::int64_t M, std::int64_t B, const std::vector<Integer>& coefficients) {
  std::error_code ec;
  fs::create_directories(cache_dir(), ec);
  if (ec) return false;
  nlohmann::json doc{{"D", D}, {"M", M}, {"B", B}, {"coefficients", nlohmann::json::array()}};
  for (const auto& c : coefficients) doc["coefficients"].push_back(c.get_str());
  // Write then rename so concurrent readers never see a partial file.
  const fs::path target = qexp_cache_file(D, M, B);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << doc.dump() << '\n';
    if (!out) return false;
  }
  fs::rename(tmp, target, ec);
  return !ec;
}

}  // namespace cubiccm::cli
