// The fixture suite behind `hyperign repro`: worked models, the
// omniscience table, the bundled proof scripts and a seeded soundness
// fuzz of every system.

#ifndef HYPERIGN_REPRO_H_
#define HYPERIGN_REPRO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hyperign {

#ifndef HYPERIGN_DATA_DIR
#define HYPERIGN_DATA_DIR "data"
#endif

struct ReproOptions {
  std::uint64_t seed = 0;
  int trials = 1000;
  int max_worlds = 3;  // omniscience searches
  int threads = 1;
  std::filesystem::path data_dir = HYPERIGN_DATA_DIR;
  // Forwarded to EvalConfig; both are deliberately wrong semantics.
  bool box_over_successors = false;
  bool disbelief_counts_self = false;
};

struct ReproRow {
  std::string group;  // "model", "omniscience", "proof", "fuzz"
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

std::vector<ReproRow> run_repro(const ReproOptions& o = {});
std::string format_table(const std::vector<ReproRow>& rows);

}  // namespace hyperign

#endif  // HYPERIGN_REPRO_H_
