#ifndef PTRANK_SCAN_HPP
#define PTRANK_SCAN_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ptrank/conjecture.hpp"

namespace ptrank {

/// One cell is a (K, dims) pair; `count_per_cell` instances are drawn in
/// each valid cell. Cells with K > min(m1*n1, m2*n2) cannot host that
/// Schmidt rank and are skipped (counted in the report).
struct ScanParams {
  std::vector<std::array<int, 4>> dims;  // (m1, n1, m2, n2)
  std::vector<int> ks;
  long count_per_cell = 100;
  std::uint64_t seed = 0;
  int shards = 1;
  int entry_bound = 9;
};

/// A violation is recorded only after the instance has been serialized,
/// re-parsed and re-checked, so every persisted counterexample is
/// self-certifying.
struct ScanViolation {
  long index = 0;  // global instance index within the campaign
  std::uint64_t instance_seed = 0;
  ExactBipartite instance;
  ConjectureVerdict verdict;
};

struct ScanCell {
  int k = 0;
  std::array<int, 4> dims{};
  long instances = 0;
  BigRat min_ratio;  // of r(M)/r(M^Gamma) over the cell
  BigRat max_ratio;  // the falsification margin: a counterexample has max_ratio > K
  std::vector<ScanViolation> violations;
};

struct ScanReport {
  ScanParams params;
  std::string campaign_id;
  std::vector<ScanCell> cells;
  int skipped_cells = 0;
  long total_instances = 0;
  long violation_count = 0;
};

/// Hash of params + seed; reruns with identical parameters land in the
/// same campaign directory.
std::string campaign_id(const ScanParams& p);

/// Runs the campaign across `shards` worker threads. The report content
/// is a pure function of (params, seed): every instance derives its own
/// child generator from the campaign seed and its global index, and the
/// aggregation is order-independent.
ScanReport scan_campaign(const ScanParams& p);

/// Report JSON for byte-identical persistence.
std::string report_to_json_string(const ScanReport& r);

/// One CSV row per (K, dims) cell.
std::string report_to_csv(const ScanReport& r);

/// Writes <out_root>/<campaign_id>/report.json and summary.csv
/// atomically; returns the campaign directory.
std::filesystem::path write_report(const ScanReport& r, const std::filesystem::path& out_root);

}  // namespace ptrank

#endif  // PTRANK_SCAN_HPP
