#include "ptrank/scan.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include "ptrank/json_io.hpp"
#include "ptrank/rng.hpp"

namespace ptrank {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string canonical_params(const ScanParams& p) {
  std::ostringstream os;
  os << "ks=";
  for (int k : p.ks) os << k << ",";
  os << ";dims=";
  for (const auto& d : p.dims) os << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << "|";
  os << ";count=" << p.count_per_cell << ";seed=" << p.seed << ";shards=" << p.shards
     << ";bound=" << p.entry_bound;
  return os.str();
}

struct CellSpec {
  int k;
  std::array<int, 4> dims;
};

struct InstanceResult {
  long index;
  int cell;
  BigRat ratio;
  bool holds;
  std::uint64_t instance_seed;
};

}  // namespace

std::string campaign_id(const ScanParams& p) {
  std::uint64_t h = fnv1a(canonical_params(p));
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
  return os.str();
}

ScanReport scan_campaign(const ScanParams& p) {
  if (p.count_per_cell < 1) throw Error("scan_campaign: count must be >= 1");
  if (p.shards < 1) throw Error("scan_campaign: shards must be >= 1");
  if (p.dims.empty() || p.ks.empty()) throw Error("scan_campaign: empty dimension or K range");
  for (const auto& d : p.dims)
    if (d[0] < 1 || d[1] < 1 || d[2] < 1 || d[3] < 1)
      throw Error("scan_campaign: dimensions must be positive");
  for (int k : p.ks)
    if (k < 1) throw Error("scan_campaign: K must be >= 1");

  ScanReport report;
  report.params = p;
  report.campaign_id = campaign_id(p);

  std::vector<CellSpec> cells;
  for (int k : p.ks)
    for (const auto& d : p.dims) {
      if (k > std::min(d[0] * d[1], d[2] * d[3])) {
        ++report.skipped_cells;
        continue;
      }
      cells.push_back({k, d});
    }

  const long total = static_cast<long>(cells.size()) * p.count_per_cell;
  const SplitMix64 root(p.seed);

  auto run_instance = [&](long g) {
    const int cell = static_cast<int>(g / p.count_per_cell);
    const CellSpec& spec = cells[cell];
    SplitMix64 child = root.split(static_cast<std::uint64_t>(g));
    const std::uint64_t instance_seed = child.next();
    ExactBipartite m = random_schmidt_rank_k(spec.k, spec.dims[0], spec.dims[1], spec.dims[2],
                                             spec.dims[3], instance_seed, p.entry_bound);
    ConjectureVerdict v = check_conjecture(m);
    return std::tuple<ExactBipartite, ConjectureVerdict, std::uint64_t>(std::move(m), v,
                                                                        instance_seed);
  };

  std::vector<InstanceResult> results(static_cast<std::size_t>(total),
                                      InstanceResult{0, 0, BigRat(0), true, 0});
  std::vector<ScanViolation> violations;
  std::mutex shared_mutex;
  std::exception_ptr first_error;

  auto worker = [&](long lo, long hi) {
    try {
      for (long g = lo; g < hi; ++g) {
        auto [m, v, instance_seed] = run_instance(g);
        results[static_cast<std::size_t>(g)] =
            InstanceResult{g, static_cast<int>(g / p.count_per_cell), v.ratio, v.holds,
                           instance_seed};
        if (!v.holds) {
          // Self-certification: persist, re-parse, re-check before recording.
          Json j = bipartite_to_json(m);
          ExactBipartite reloaded = exact_bipartite_from_json(Json::parse(j.dump()));
          ConjectureVerdict again = check_conjecture(reloaded);
          if (again.holds)
            throw Error("scan_campaign: violation did not survive round-trip re-verification");
          std::lock_guard<std::mutex> lock(shared_mutex);
          violations.push_back(ScanViolation{g, instance_seed, std::move(reloaded), again});
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(shared_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (p.shards == 1 || total < 2) {
    worker(0, total);
  } else {
    const int nw = static_cast<int>(std::min<long>(p.shards, total));
    std::vector<std::thread> pool;
    const long chunk = (total + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
      const long lo = w * chunk, hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::sort(violations.begin(), violations.end(),
            [](const ScanViolation& a, const ScanViolation& b) { return a.index < b.index; });

  for (std::size_t c = 0; c < cells.size(); ++c) {
    ScanCell cell;
    cell.k = cells[c].k;
    cell.dims = cells[c].dims;
    for (long i = 0; i < p.count_per_cell; ++i) {
      const InstanceResult& r = results[c * p.count_per_cell + i];
      if (cell.instances == 0) {
        cell.min_ratio = r.ratio;
        cell.max_ratio = r.ratio;
      } else {
        cell.min_ratio = std::min(cell.min_ratio, r.ratio);
        cell.max_ratio = std::max(cell.max_ratio, r.ratio);
      }
      ++cell.instances;
    }
    for (const ScanViolation& v : violations)
      if (v.index / p.count_per_cell == static_cast<long>(c)) cell.violations.push_back(v);
    report.violation_count += static_cast<long>(cell.violations.size());
    report.total_instances += cell.instances;
    report.cells.push_back(std::move(cell));
  }
  return report;
}

namespace {

Json ratio_json(const BigRat& r) {
  return Json::array({numerator(r).str(), denominator(r).str()});
}

}  // namespace

std::string report_to_json_string(const ScanReport& r) {
  Json jcells = Json::array();
  for (const ScanCell& c : r.cells) {
    Json jviol = Json::array();
    for (const ScanViolation& v : c.violations) {
      jviol.push_back(Json{{"index", v.index},
                           {"instance_seed", v.instance_seed},
                           {"instance", bipartite_to_json(v.instance)},
                           {"verdict", verdict_to_json(v.verdict)}});
    }
    jcells.push_back(Json{{"k", c.k},
                          {"dims", Json::array({c.dims[0], c.dims[1], c.dims[2], c.dims[3]})},
                          {"instances", c.instances},
                          {"min_ratio", ratio_json(c.min_ratio)},
                          {"max_ratio", ratio_json(c.max_ratio)},
                          {"violations", jviol}});
  }
  Json jdims = Json::array();
  for (const auto& d : r.params.dims) jdims.push_back(Json::array({d[0], d[1], d[2], d[3]}));
  Json j{{"campaign_id", r.campaign_id},
         {"params",
          Json{{"dims", jdims},
               {"ks", r.params.ks},
               {"count_per_cell", r.params.count_per_cell},
               {"seed", r.params.seed},
               {"shards", r.params.shards},
               {"entry_bound", r.params.entry_bound}}},
         {"cells", jcells},
         {"skipped_cells", r.skipped_cells},
         {"total_instances", r.total_instances},
         {"violation_count", r.violation_count}};
  return j.dump(2) + "\n";
}

std::string report_to_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "k,m1,n1,m2,n2,instances,min_ratio,max_ratio,violations\n";
  for (const ScanCell& c : r.cells) {
    os << c.k << "," << c.dims[0] << "," << c.dims[1] << "," << c.dims[2] << "," << c.dims[3]
       << "," << c.instances << "," << numerator(c.min_ratio).str() << "/"
       << denominator(c.min_ratio).str() << "," << numerator(c.max_ratio).str() << "/"
       << denominator(c.max_ratio).str() << "," << c.violations.size() << "\n";
  }
  return os.str();
}

std::filesystem::path write_report(const ScanReport& r, const std::filesystem::path& out_root) {
  const std::filesystem::path dir = out_root / r.campaign_id;
  atomic_write(dir / "report.json", report_to_json_string(r));
  atomic_write(dir / "summary.csv", report_to_csv(r));
  return dir;
}

}  // namespace ptrank
