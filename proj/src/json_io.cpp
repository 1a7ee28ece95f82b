#include "ptrank/json_io.hpp"

#include <fstream>

namespace ptrank {

namespace {

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key, "missing field");
  return *it;
}

int require_positive_int(const Json& j, const char* key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_number_integer() || v.get<long>() < 1)
    throw ParseError(path + "." + key, "expected a positive integer");
  return v.get<int>();
}

BigInt parse_bigint(const Json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a decimal string");
  try {
    return BigInt(v.get<std::string>());
  } catch (const std::exception&) {
    throw ParseError(path, "not a valid integer literal");
  }
}

GaussianRational parse_exact_entry(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 4)
    throw ParseError(path, "exact entry must be [re_num, re_den, im_num, im_den] strings");
  BigInt re_num = parse_bigint(v[0], path + "[0]");
  BigInt re_den = parse_bigint(v[1], path + "[1]");
  BigInt im_num = parse_bigint(v[2], path + "[2]");
  BigInt im_den = parse_bigint(v[3], path + "[3]");
  if (re_den <= 0) throw ParseError(path + "[1]", "denominator must be positive");
  if (im_den <= 0) throw ParseError(path + "[3]", "denominator must be positive");
  return GaussianRational::from_parts(re_num, re_den, im_num, im_den);
}

std::complex<double> parse_float_entry(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError(path, "float entry must be [re, im] numbers");
  return {v[0].get<double>(), v[1].get<double>()};
}

Json exact_entry_json(const GaussianRational& x) {
  return Json::array({numerator(x.real()).str(), denominator(x.real()).str(),
                      numerator(x.imag()).str(), denominator(x.imag()).str()});
}

}  // namespace

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(exact_entry_json(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"scalar", "exact"}, {"entries", entries}};
}

Json matrix_to_json(const FloatMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"scalar", "float"}, {"entries", entries}};
}

Json matrix_to_json(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return matrix_to_json(x); }, m);
}

AnyMatrix matrix_from_json(const Json& j, const std::string& path) {
  const int rows = require_positive_int(j, "rows", path);
  const int cols = require_positive_int(j, "cols", path);
  const Json& scalar = require(j, "scalar", path);
  const Json& entries = require(j, "entries", path);
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * cols)
    throw ParseError(path + ".entries", "expected rows*cols entries");

  if (scalar == "exact") {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int jj = 0; jj < cols; ++jj) {
        const std::size_t idx = static_cast<std::size_t>(i) * cols + jj;
        m(i, jj) = parse_exact_entry(entries[idx],
                                     path + ".entries[" + std::to_string(idx) + "]");
      }
    return m;
  }
  if (scalar == "float") {
    FloatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int jj = 0; jj < cols; ++jj) {
        const std::size_t idx = static_cast<std::size_t>(i) * cols + jj;
        m(i, jj) = parse_float_entry(entries[idx],
                                     path + ".entries[" + std::to_string(idx) + "]");
      }
    return m;
  }
  throw ParseError(path + ".scalar", "expected \"exact\" or \"float\"");
}

namespace {

template <typename T>
Json bipartite_json_impl(const Bipartite<T>& m) {
  Json j = matrix_to_json(m.data);
  j["dims"] = Json::array({m.m1, m.n1, m.m2, m.n2});
  return j;
}

}  // namespace

Json bipartite_to_json(const ExactBipartite& m) { return bipartite_json_impl(m); }
Json bipartite_to_json(const FloatBipartite& m) { return bipartite_json_impl(m); }

AnyBipartite bipartite_from_json(const Json& j, const std::string& path) {
  const Json& dims = require(j, "dims", path);
  if (!dims.is_array() || dims.size() != 4)
    throw ParseError(path + ".dims", "expected [m1, n1, m2, n2]");
  int d[4];
  for (int i = 0; i < 4; ++i) {
    if (!dims[i].is_number_integer() || dims[i].get<long>() < 1)
      throw ParseError(path + ".dims[" + std::to_string(i) + "]", "expected a positive integer");
    d[i] = dims[i].get<int>();
  }
  AnyMatrix m = matrix_from_json(j, path);
  try {
    if (std::holds_alternative<ExactMatrix>(m))
      return ExactBipartite(d[0], d[1], d[2], d[3], std::get<ExactMatrix>(std::move(m)));
    return FloatBipartite(d[0], d[1], d[2], d[3], std::get<FloatMatrix>(std::move(m)));
  } catch (const Error& e) {
    throw ParseError(path + ".dims", e.what());
  }
}

ExactBipartite exact_bipartite_from_json(const Json& j, const std::string& path) {
  AnyBipartite b = bipartite_from_json(j, path);
  if (!std::holds_alternative<ExactBipartite>(b))
    throw ParseError(path + ".scalar", "this operation requires exact scalars");
  return std::get<ExactBipartite>(std::move(b));
}

Json decomposition_to_json(const SchmidtDecomposition& d) {
  Json terms = Json::array();
  for (const auto& [r, s] : d.terms)
    terms.push_back(Json::array({matrix_to_json(r), matrix_to_json(s)}));
  return Json{{"schmidt_rank", d.schmidt_rank}, {"terms", terms}};
}

Json local_equivalence_to_json(const ExactLocalEquivalence& e) {
  return Json{{"U", matrix_to_json(e.U)},
              {"V", matrix_to_json(e.V)},
              {"W", matrix_to_json(e.W)},
              {"X", matrix_to_json(e.X)}};
}

ExactLocalEquivalence local_equivalence_from_json(const Json& j, const std::string& path) {
  auto get = [&](const char* key) {
    AnyMatrix m = matrix_from_json(require(j, key, path), path + "." + key);
    if (!std::holds_alternative<ExactMatrix>(m))
      throw ParseError(path + "." + key, "equivalence factors must be exact");
    return std::get<ExactMatrix>(std::move(m));
  };
  return ExactLocalEquivalence{get("U"), get("V"), get("W"), get("X")};
}

Json canonical_to_json(const CanonicalForm& c) {
  return Json{{"n", bipartite_to_json(c.n)},
              {"k", c.k},
              {"w", exact_entry_json(c.w)},
              {"branch", c.branch == CanonicalBranch::w_nonzero ? "w_nonzero" : "w_zero"},
              {"certificate", local_equivalence_to_json(c.certificate)}};
}

Json verdict_to_json(const ConjectureVerdict& v) {
  return Json{{"schmidt_rank", v.schmidt_rank},
              {"rank_m", v.rank_m},
              {"rank_m_gamma", v.rank_m_gamma},
              {"holds", v.holds},
              {"ratio", Json::array({numerator(v.ratio).str(), denominator(v.ratio).str()})},
              {"assumption_band", v.assumption_band}};
}

Json bounds_to_json(const BlockRankBounds& b) {
  return Json{{"k", b.k},
              {"r1", b.r1},
              {"r2", b.r2},
              {"r3", b.r3},
              {"r4", b.r4},
              {"lower_bound_rank_m", Json::array({numerator(b.lower_bound_rank_m).str(),
                                                  denominator(b.lower_bound_rank_m).str()})},
              {"upper_bound_rank_gamma", b.upper_bound_rank_gamma},
              {"branch", b.branch == CanonicalBranch::w_nonzero ? "w_nonzero" : "w_zero"},
              {"rank_m", b.rank_m},
              {"rank_gamma_a", b.rank_gamma_a}};
}

Json special_case_to_json(const SpecialCaseTag& t) {
  const char* kind = "none";
  switch (t.kind) {
    case SpecialCase::full_row: kind = "full_row"; break;
    case SpecialCase::single_independent_per_row: kind = "single_independent_per_row"; break;
    case SpecialCase::row_with_s_minus_1: kind = "row_with_s_minus_1"; break;
    case SpecialCase::none: kind = "none"; break;
  }
  Json j{{"case", kind}, {"schmidt_rank", t.schmidt_rank}};
  if (t.kind == SpecialCase::full_row || t.kind == SpecialCase::row_with_s_minus_1) {
    j["row"] = t.row;
    j["independent_cols"] = t.independent_cols;
  }
  if (t.kind == SpecialCase::row_with_s_minus_1)
    j["extra_block"] = Json::array({t.extra_block.first, t.extra_block.second});
  if (t.kind == SpecialCase::single_independent_per_row) {
    Json reps = Json::array();
    for (auto [r, c] : t.row_representatives) reps.push_back(Json::array({r, c}));
    j["row_representatives"] = reps;
  }
  return j;
}

namespace {

template <typename T>
Json state_json_impl(const TripartiteState<T>& s) {
  return Json{{"dims", Json::array({s.dA, s.dB, s.dC})}, {"rho", matrix_to_json(s.rho)}};
}

}  // namespace

Json state_to_json(const ExactState& s) { return state_json_impl(s); }
Json state_to_json(const FloatState& s) { return state_json_impl(s); }

AnyState state_from_json(const Json& j, const std::string& path) {
  const Json& dims = require(j, "dims", path);
  if (!dims.is_array() || dims.size() != 3)
    throw ParseError(path + ".dims", "expected [dA, dB, dC]");
  int d[3];
  for (int i = 0; i < 3; ++i) {
    if (!dims[i].is_number_integer() || dims[i].get<long>() < 1)
      throw ParseError(path + ".dims[" + std::to_string(i) + "]", "expected a positive integer");
    d[i] = dims[i].get<int>();
  }
  AnyMatrix m = matrix_from_json(require(j, "rho", path), path + ".rho");
  try {
    if (std::holds_alternative<ExactMatrix>(m))
      return ExactState(d[0], d[1], d[2], std::get<ExactMatrix>(std::move(m)));
    return FloatState(d[0], d[1], d[2], std::get<FloatMatrix>(std::move(m)));
  } catch (const Error& e) {
    throw ParseError(path + ".rho", e.what());
  }
}

Json rank_triple_to_json(const RankTriple& t) {
  return Json{{"r_ab", t.r_ab},
              {"r_ac", t.r_ac},
              {"r_bc", t.r_bc},
              {"inequality_holds", t.inequality_holds}};
}

Json screen_verdict_to_json(const DistillabilityVerdict& v) {
  const char* bound = "none";
  if (v.rank_bound_used == RankBoundKind::rank_le_4) bound = "rank_le_4";
  if (v.rank_bound_used == RankBoundKind::rank_le_maxmn) bound = "rank_le_maxmn";
  return Json{{"npt", v.npt},
              {"rank_bound_used", bound},
              {"distillable", v.distillable},
              {"notes", v.notes},
              {"ranks", rank_triple_to_json(v.ranks)},
              {"support_b", v.support_b},
              {"support_c", v.support_c}};
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("atomic_write: cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("atomic_write: write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace ptrank
