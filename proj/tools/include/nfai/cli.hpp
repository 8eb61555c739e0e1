#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nfai/bundle.hpp"
#include "nfai/product_space.hpp"

namespace nfai::cli {

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchConfig {
  std::vector<std::size_t> ks{2};
  std::vector<std::size_t> alphabets{2};
  std::vector<std::size_t> ns{8};
  std::vector<double> densities{0.5};
  std::vector<std::uint64_t> seeds;
  std::vector<Construction> constructions{Construction::nodding, Construction::direct};
  std::size_t workers = 1;
  std::uint64_t budget = 0;  // 0: default_state_budget()
};

struct BenchRecord {
  std::size_t instance_id = 0;
  Construction construction = Construction::nodding;
  std::size_t k = 0;
  std::size_t alphabet = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t states_accessible = 0;
  std::uint64_t transitions_accessible = 0;
  std::uint64_t wall_time_ns = 0;
  /// "EMPTY", "NONEMPTY" or "SKIP".
  std::string answer;
  /// Set when a size bound was violated.
  std::optional<std::string> bound_violation;
};

/// k automata with n states each, drawn by random_nfa from seeds derived
/// from `seed`.
Bundle bench_instance(std::size_t k, std::size_t alphabet, std::size_t n, double density,
                      std::uint64_t seed);

/// Records ordered by (instance id, construction order in the config).
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r, bool omit_timing);

}  // namespace nfai::cli
