#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "cubiccm/bigint.hpp"

namespace cubiccm::cli {

// $CUBICCM_CACHE, else $XDG_CACHE_HOME/cubiccm, else ~/.cache/cubiccm.
std::filesystem::path cache_dir();

std::filesystem::path qexp_cache_file(std::int64_t D, std::int64_t M, std::int64_t B);

// Missing or unreadable entries yield nullopt.
std::optional<std::vector<Integer>> load_qexp(std::int64_t D, std::int64_t M, std::int64_t B);

// Best effort; returns false when the entry could not be written.
bool store_qexp(std::int64_t D, std::int64_t M, std::int64_t B, const std::vector<Integer>& coefficients);

}  // namespace cubiccm::cli
