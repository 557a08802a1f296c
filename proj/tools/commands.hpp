#pragma once

#include "affine/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

// Subcommands of the `affine` tool. Each returns the process exit code:
// 0 success, 1 validation or claim failure, 2 usage error.
namespace affine::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int cmd_validate(const std::filesystem::path &path, std::ostream &out, std::ostream &err);

int cmd_run(const std::filesystem::path &path, std::string_view word, bool show_state, std::ostream &out,
            std::ostream &err);

/// name ∈ {end, pal-npal, pal-npal-restart, manytwins}; `k` is required for
/// all but end. An empty `out_path` writes to `out`.
int cmd_zoo(std::string_view name, std::optional<std::int64_t> k, const std::filesystem::path &out_path,
            std::ostream &out, std::ostream &err);

/// The machine file for a zoo name, exactly as cmd_zoo writes it.
std::string zoo_file(std::string_view name, std::optional<std::int64_t> k);

/// Writes the TSV report to `out_path` (or `out` when empty).
int cmd_sweep(const std::filesystem::path &path, const SweepOptions &options,
              const std::filesystem::path &out_path, std::ostream &out, std::ostream &err);

} // namespace affine::cli
