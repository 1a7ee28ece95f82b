// ptrank: exact verification toolkit for the bipartite rank inequality
// r(M) <= K * r(M^Gamma) and its tripartite-state consequences.
//
// Exit codes: 0 success; 1 verified inequality violation (and nothing
// else); 2 usage, parse, or I/O errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ptrank/convert.hpp"
#include "ptrank/json_io.hpp"
#include "ptrank/rng.hpp"
#include "ptrank/scan.hpp"

namespace {

using namespace ptrank;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
  } else {
    atomic_write(out, content);
  }
}

std::array<int, 4> parse_dims4(const std::string& s) {
  std::array<int, 4> d{};
  char c1, c2, c3;
  std::istringstream is(s);
  if (!(is >> d[0] >> c1 >> d[1] >> c2 >> d[2] >> c3 >> d[3]) || c1 != ',' || c2 != ',' ||
      c3 != ',')
    throw Error("expected --dims as m1,n1,m2,n2");
  return d;
}

std::array<int, 3> parse_dims3(const std::string& s) {
  std::array<int, 3> d{};
  char c1, c2;
  std::istringstream is(s);
  if (!(is >> d[0] >> c1 >> d[1] >> c2 >> d[2]) || c1 != ',' || c2 != ',')
    throw Error("expected --dims as dA,dB,dC");
  return d;
}

std::string ratio_str(const BigRat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

int cmd_schmidt(const std::string& input, const std::string& decompose_out,
                std::optional<double> tolerance) {
  AnyBipartite any = bipartite_from_json(load_json(input));
  if (std::holds_alternative<ExactBipartite>(any)) {
    if (tolerance)
      throw Error("--tolerance applies to float scalars only; exact ranks carry none");
    const ExactBipartite& m = std::get<ExactBipartite>(any);
    ConjectureVerdict v = check_conjecture(m);
    std::cout << "K=" << v.schmidt_rank << " r(M)=" << v.rank_m
              << " r(M^Gamma)=" << v.rank_m_gamma << " ratio=" << ratio_str(v.ratio)
              << (v.holds ? " holds" : " VIOLATION") << "\n";
    if (!decompose_out.empty()) {
      SchmidtDecomposition d = schmidt_decompose(m);
      emit(decompose_out, decomposition_to_json(d).dump(2) + "\n");
    }
    return kExitOk;
  }
  const FloatBipartite& m = std::get<FloatBipartite>(any);
  const int k = schmidt_rank(m, tolerance);
  const int r = rank(m.data, tolerance).rank;
  const int rg = rank(partial_transpose(m, Side::B).data, tolerance).rank;
  std::cout << "K=" << k << " r(M)=" << r << " r(M^Gamma)=" << rg
            << " (float scalars: SVD-threshold ranks, not certified)\n";
  if (!decompose_out.empty())
    throw Error("--decompose requires exact scalars; convert with: ptrank convert --exact");
  return kExitOk;
}

int cmd_check(const std::string& input) {
  ExactBipartite m = exact_bipartite_from_json(load_json(input));
  ConjectureVerdict v = check_conjecture(m);
  std::cout << verdict_to_json(v).dump(2) << "\n";
  if (v.holds) return kExitOk;
  // Re-verify from the persisted form before reporting the headline event.
  ExactBipartite reloaded = exact_bipartite_from_json(Json::parse(bipartite_to_json(m).dump()));
  ConjectureVerdict again = check_conjecture(reloaded);
  return again.holds ? kExitOk : kExitViolation;
}

int cmd_reduce(const std::string& input, const std::string& out) {
  ExactBipartite m = exact_bipartite_from_json(load_json(input));
  CanonicalForm c = reduce_to_canonical(m);
  emit(out, canonical_to_json(c).dump(2) + "\n");
  return kExitOk;
}

int cmd_bounds(const std::string& input) {
  ExactBipartite m = exact_bipartite_from_json(load_json(input));
  CanonicalForm c = reduce_to_canonical(m);
  BlockRankBounds b = verify_canonical_bounds(c);
  std::cout << bounds_to_json(b).dump(2) << "\n";
  return kExitOk;
}

int cmd_detect(const std::string& input) {
  ExactBipartite m = exact_bipartite_from_json(load_json(input));
  SpecialCaseTag t = detect_special_case(m);
  std::cout << special_case_to_json(t).dump(2) << "\n";
  return kExitOk;
}

// Resolved run configuration; everything flows from explicit flags, the
// only defaults are fixed constants (never wall clock or entropy).
struct Config {
  long count = 100;
  std::uint64_t seed = 0;
  int shards = 1;
  int entry_bound = 9;
  std::string out_dir = "reports";

  void validate_for_scan() const {
    if (count < 1) throw Error("--count must be positive");
    if (shards < 1) throw Error("--shards must be positive");
    if (entry_bound < 1) throw Error("--bound must be positive");
    // The report directory must be writable before the campaign starts.
    std::filesystem::path root(out_dir);
    std::filesystem::create_directories(root);
    atomic_write(root / ".writable", "");
    std::filesystem::remove(root / ".writable");
  }
};

int cmd_scan(const std::vector<std::string>& dims, const std::vector<int>& ks,
             const Config& cfg) {
  cfg.validate_for_scan();
  ScanParams p;
  for (const auto& d : dims) p.dims.push_back(parse_dims4(d));
  if (p.dims.empty()) p.dims.push_back({2, 2, 3, 3});
  p.ks = ks;
  p.count_per_cell = cfg.count;
  p.seed = cfg.seed;
  p.shards = cfg.shards;
  p.entry_bound = cfg.entry_bound;

  ScanReport report = scan_campaign(p);
  std::filesystem::path dir = write_report(report, cfg.out_dir);
  for (const ScanCell& c : report.cells) {
    std::cout << "k=" << c.k << " dims=" << c.dims[0] << "," << c.dims[1] << "," << c.dims[2]
              << "," << c.dims[3] << " instances=" << c.instances
              << " min_ratio=" << ratio_str(c.min_ratio)
              << " max_ratio=" << ratio_str(c.max_ratio)
              << " violations=" << c.violations.size() << "\n";
  }
  std::cout << "report: " << (dir / "report.json").string() << "\n";
  std::cout << "violations: " << report.violation_count << "\n";
  return report.violation_count > 0 ? kExitViolation : kExitOk;
}

struct StateGenOptions {
  std::string dims;
  int target_rank = 0;      // random_tripartite when > 0
  int rab_target = 0;       // random_with_reduced_rank when > 0
  int purification = 4;
  int bound = 3;
  std::uint64_t seed = 0;
};

ExactState generate_state(const StateGenOptions& o, std::uint64_t seed) {
  auto d = parse_dims3(o.dims);
  if ((o.target_rank > 0) == (o.rab_target > 0))
    throw Error("choose exactly one of --rank and --rab-target");
  if (o.target_rank > 0) return random_tripartite(d[0], d[1], d[2], o.target_rank, seed, o.bound);
  return random_with_reduced_rank(d[0], d[1], d[2], o.rab_target, seed, o.purification, o.bound);
}

int cmd_states(const StateGenOptions& o, long count, const std::string& out, bool as_float) {
  if (count <= 1) {
    ExactState s = generate_state(o, o.seed);
    RankTriple t = rank_triple(s);
    std::cerr << "r_ab=" << t.r_ab << " r_ac=" << t.r_ac << " r_bc=" << t.r_bc
              << " product_inequality=" << (t.inequality_holds ? "holds" : "fails") << "\n";
    Json j = as_float ? state_to_json(FloatState(s.dA, s.dB, s.dC, to_float(s.rho)))
                      : state_to_json(s);
    emit(out, j.dump(2) + "\n");
    return kExitOk;
  }
  // Population mode: one CSV row per generated state.
  std::ostringstream csv;
  csv << "seed,dA,dB,dC,r_ab,r_ac,r_bc,inequality_holds,ppt_bc\n";
  SplitMix64 root(o.seed);
  for (long i = 0; i < count; ++i) {
    const std::uint64_t child_seed = root.split(static_cast<std::uint64_t>(i)).next();
    ExactState s = generate_state(o, child_seed);
    RankTriple t = rank_triple(s);
    const bool ppt = is_ppt(partial_trace(s, KeepPair::BC), s.dB, s.dC);
    csv << child_seed << "," << s.dA << "," << s.dB << "," << s.dC << "," << t.r_ab << ","
        << t.r_ac << "," << t.r_bc << "," << (t.inequality_holds ? 1 : 0) << "," << (ppt ? 1 : 0)
        << "\n";
  }
  emit(out, csv.str());
  return kExitOk;
}

// Converts a matrix, bipartite matrix, or state file between scalar
// variants. Already-matching inputs pass through unchanged; exact
// conversion uses continued-fraction rounding with bounded denominators.
int cmd_convert(const std::string& input, bool to_exact_flag, bool to_float_flag, long limit,
                const std::string& out) {
  if (to_exact_flag == to_float_flag) throw Error("choose exactly one of --exact and --float");
  if (limit < 1) throw Error("--limit must be positive");
  const Json j = load_json(input);
  const BigInt den_limit(limit);

  auto convert_matrix = [&](const AnyMatrix& m) -> AnyMatrix {
    if (to_float_flag)
      return std::holds_alternative<FloatMatrix>(m) ? m
                                                    : AnyMatrix(to_float(std::get<ExactMatrix>(m)));
    return std::holds_alternative<ExactMatrix>(m)
               ? m
               : AnyMatrix(to_exact(std::get<FloatMatrix>(m), den_limit));
  };

  Json result;
  if (j.is_object() && j.contains("rho")) {
    AnyState s = state_from_json(j);
    const auto [dA, dB, dC] = std::visit(
        [](const auto& st) { return std::tuple<int, int, int>(st.dA, st.dB, st.dC); }, s);
    AnyMatrix rho = std::visit([](const auto& st) { return AnyMatrix(st.rho); }, s);
    AnyMatrix conv = convert_matrix(rho);
    result = std::holds_alternative<ExactMatrix>(conv)
                 ? state_to_json(ExactState(dA, dB, dC, std::get<ExactMatrix>(conv)))
                 : state_to_json(FloatState(dA, dB, dC, std::get<FloatMatrix>(conv)));
  } else if (j.is_object() && j.contains("dims")) {
    AnyBipartite b = bipartite_from_json(j);
    const auto [m1, n1, m2, n2] = std::visit(
        [](const auto& x) { return std::tuple<int, int, int, int>(x.m1, x.n1, x.m2, x.n2); }, b);
    AnyMatrix data = std::visit([](const auto& x) { return AnyMatrix(x.data); }, b);
    AnyMatrix conv = convert_matrix(data);
    result = std::holds_alternative<ExactMatrix>(conv)
                 ? bipartite_to_json(ExactBipartite(m1, n1, m2, n2, std::get<ExactMatrix>(conv)))
                 : bipartite_to_json(FloatBipartite(m1, n1, m2, n2, std::get<FloatMatrix>(conv)));
  } else {
    result = matrix_to_json(convert_matrix(matrix_from_json(j)));
  }
  emit(out, result.dump(2) + "\n");
  return kExitOk;
}

int cmd_screen(const std::string& input, const StateGenOptions& o) {
  std::optional<ExactState> s;
  if (!input.empty()) {
    AnyState any = state_from_json(load_json(input));
    if (!std::holds_alternative<ExactState>(any))
      throw Error("screen requires exact scalars; convert with: ptrank convert --exact");
    s.emplace(std::get<ExactState>(std::move(any)));
  } else {
    s.emplace(generate_state(o, o.seed));
  }
  DistillabilityVerdict v = distillability_screen(*s);
  std::cout << screen_verdict_to_json(v).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank-inequality verification for bipartite matrices and tripartite states"};
  app.require_subcommand(1);

  std::string input, out, decompose_out;
  std::optional<double> tolerance;
  double tol_value = -1.0;

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt rank, ranks of M and M^Gamma, verdict");
  schmidt->add_option("input", input, "BipartiteMatrix JSON file")->required();
  schmidt->add_option("--decompose", decompose_out, "write the decomposition JSON here");
  schmidt->add_option("--tolerance", tol_value, "relative rank tolerance for float scalars");

  auto* check = app.add_subcommand("check", "full inequality verdict (exit 1 on violation)");
  check->add_option("input", input, "BipartiteMatrix JSON file")->required();

  auto* reduce = app.add_subcommand("reduce", "canonical form of a 2x2-block Schmidt-rank-3 matrix");
  reduce->add_option("input", input, "BipartiteMatrix JSON file")->required();
  reduce->add_option("--out", out, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "block-rank bound sandwich on the canonical form");
  bounds->add_option("input", input, "BipartiteMatrix JSON file")->required();

  auto* detect = app.add_subcommand("detect", "special-case hypothesis detection");
  detect->add_option("input", input, "BipartiteMatrix JSON file")->required();

  std::vector<std::string> scan_dims;
  std::vector<int> scan_ks;
  Config cfg;
  auto* scan = app.add_subcommand("scan", "randomized counterexample scan campaign");
  scan->add_option("--dims", scan_dims,
                   "dimension tuple m1,n1,m2,n2 (repeatable; default 2,2,3,3)");
  scan->add_option("--k", scan_ks, "Schmidt rank values (repeatable)")->required();
  scan->add_option("--count", cfg.count, "instances per (K, dims) cell")->capture_default_str();
  scan->add_option("--seed", cfg.seed, "campaign seed")->capture_default_str();
  scan->add_option("--shards", cfg.shards, "worker threads")->capture_default_str();
  scan->add_option("--bound", cfg.entry_bound, "integer entry bound")->capture_default_str();
  scan->add_option("--out", cfg.out_dir, "report root directory")->capture_default_str();

  StateGenOptions gen;
  long state_count = 1;
  bool as_float = false;
  auto* states = app.add_subcommand("states", "generate random tripartite states, report ranks");
  states->add_option("--dims", gen.dims, "local dimensions dA,dB,dC")->required();
  states->add_option("--rank", gen.target_rank, "target rank of rho");
  states->add_option("--rab-target", gen.rab_target, "target rank of the AB reduction");
  states->add_option("--purification", gen.purification, "purification rank")->capture_default_str();
  states->add_option("--bound", gen.bound, "integer entry bound")->capture_default_str();
  states->add_option("--seed", gen.seed, "seed")->capture_default_str();
  states->add_option("--count", state_count, "population size (CSV output when > 1)")
      ->capture_default_str();
  states->add_option("--out", out, "output file (default stdout)");
  states->add_flag("--float", as_float, "emit float scalars instead of exact");

  std::string conv_input, conv_out;
  bool conv_exact = false, conv_float = false;
  long conv_limit = 1000000;
  auto* convert = app.add_subcommand("convert", "convert scalars between exact and float");
  convert->add_option("input", conv_input, "matrix, bipartite, or state JSON file")->required();
  convert->add_flag("--exact", conv_exact, "convert to exact scalars (continued fractions)");
  convert->add_flag("--float", conv_float, "convert to float scalars");
  convert->add_option("--limit", conv_limit, "denominator limit for --exact")
      ->capture_default_str();
  convert->add_option("--out", conv_out, "output file (default stdout)");

  StateGenOptions screen_gen;
  std::string screen_input;
  auto* screen = app.add_subcommand("screen", "distillability screen for a tripartite state");
  screen->add_option("input", screen_input, "TripartiteState JSON file");
  screen->add_option("--dims", screen_gen.dims, "local dimensions dA,dB,dC (generation mode)");
  screen->add_option("--rank", screen_gen.target_rank, "target rank of rho");
  screen->add_option("--rab-target", screen_gen.rab_target, "target rank of the AB reduction");
  screen->add_option("--purification", screen_gen.purification, "purification rank")
      ->capture_default_str();
  screen->add_option("--bound", screen_gen.bound, "integer entry bound")->capture_default_str();
  screen->add_option("--seed", screen_gen.seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*schmidt) {
      if (tol_value >= 0) tolerance = tol_value;
      return cmd_schmidt(input, decompose_out, tolerance);
    }
    if (*check) return cmd_check(input);
    if (*reduce) return cmd_reduce(input, out);
    if (*bounds) return cmd_bounds(input);
    if (*detect) return cmd_detect(input);
    if (*scan) return cmd_scan(scan_dims, scan_ks, cfg);
    if (*states) return cmd_states(gen, state_count, out, as_float);
    if (*convert) return cmd_convert(conv_input, conv_exact, conv_float, conv_limit, conv_out);
    if (*screen) return cmd_screen(screen_input, screen_gen);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
