#include "ptrank/tripartite.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptrank/bipartite.hpp"
#include "ptrank/random.hpp"
#include "ptrank/rng.hpp"

namespace ptrank {

bool is_psd(const ExactMatrix& h) {
  if (!is_hermitian(h)) throw Error("is_psd: matrix not Hermitian");
  const int n = h.rows();
  ExactMatrix a = h;
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;

  while (!active.empty()) {
    // Hermitian => diagonal entries are real. Any negative one kills PSD.
    int pivot_pos = -1;
    BigRat best = 0;
    for (std::size_t t = 0; t < active.size(); ++t) {
      const BigRat& dg = a(active[t], active[t]).real();
      if (dg < 0) return false;
      if (dg > best) {
        best = dg;
        pivot_pos = static_cast<int>(t);
      }
    }
    if (pivot_pos < 0) {
      // All remaining diagonal entries are zero: PSD iff the remaining
      // principal submatrix vanishes entirely.
      for (int i : active)
        for (int j : active)
          if (!a(i, j).is_zero()) return false;
      return true;
    }

    const int p = active[pivot_pos];
    const GaussianRational pv = a(p, p);
    active.erase(active.begin() + pivot_pos);
    // Schur complement: A' = A_rest - (1/pv) * col * col^dagger.
    for (int i : active) {
      if (a(i, p).is_zero()) continue;
      const GaussianRational f = a(i, p) / pv;
      for (int j : active) a(i, j) = a(i, j) - f * conjugate(a(j, p));
    }
  }
  return true;
}

bool is_psd(const FloatMatrix& h, std::optional<double> tolerance) {
  if (!is_hermitian(h)) throw Error("is_psd: matrix not Hermitian");
  Eigen::MatrixXcd em(h.rows(), h.cols());
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) em(i, j) = h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(em, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  const double tol = tolerance.value_or(h.rows() * std::numeric_limits<double>::epsilon() * scale);
  return ev(0) >= -tol;
}

template <typename T>
void TripartiteState<T>::validate() const {
  if (dA < 1 || dB < 1 || dC < 1) throw Error("TripartiteState: dimensions must be positive");
  const int d = dA * dB * dC;
  if (rho.rows() != d || rho.cols() != d)
    throw Error("TripartiteState: rho shape does not match dimensions");
  if (!is_hermitian(rho)) throw Error("TripartiteState: rho not Hermitian");
  const T tr = trace(rho);
  if constexpr (is_exact_scalar_v<T>) {
    if (tr != scalar_from_int<T>(1)) throw Error("TripartiteState: trace not exactly 1");
    if (!is_psd(rho)) throw Error("TripartiteState: rho not positive semidefinite");
  } else {
    if (std::abs(tr - std::complex<double>(1.0)) > 1e-12)
      throw Error("TripartiteState: trace not 1 within 1e-12");
    if (!is_psd(rho, std::nullopt)) throw Error("TripartiteState: rho not positive semidefinite");
  }
}

template struct TripartiteState<GaussianRational>;
template struct TripartiteState<std::complex<double>>;

template <typename T>
Matrix<T> partial_trace(const TripartiteState<T>& s, KeepPair keep) {
  const int dA = s.dA, dB = s.dB, dC = s.dC;
  auto idx = [&](int a, int b, int c) { return (a * dB + b) * dC + c; };
  switch (keep) {
    case KeepPair::AB: {
      Matrix<T> out(dA * dB, dA * dB);
      for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dB; ++b)
          for (int a2 = 0; a2 < dA; ++a2)
            for (int b2 = 0; b2 < dB; ++b2) {
              T sum{};
              for (int c = 0; c < dC; ++c) sum += s.rho(idx(a, b, c), idx(a2, b2, c));
              out(a * dB + b, a2 * dB + b2) = sum;
            }
      return out;
    }
    case KeepPair::AC: {
      Matrix<T> out(dA * dC, dA * dC);
      for (int a = 0; a < dA; ++a)
        for (int c = 0; c < dC; ++c)
          for (int a2 = 0; a2 < dA; ++a2)
            for (int c2 = 0; c2 < dC; ++c2) {
              T sum{};
              for (int b = 0; b < dB; ++b) sum += s.rho(idx(a, b, c), idx(a2, b, c2));
              out(a * dC + c, a2 * dC + c2) = sum;
            }
      return out;
    }
    case KeepPair::BC: {
      Matrix<T> out(dB * dC, dB * dC);
      for (int b = 0; b < dB; ++b)
        for (int c = 0; c < dC; ++c)
          for (int b2 = 0; b2 < dB; ++b2)
            for (int c2 = 0; c2 < dC; ++c2) {
              T sum{};
              for (int a = 0; a < dA; ++a) sum += s.rho(idx(a, b, c), idx(a, b2, c2));
              out(b * dC + c, b2 * dC + c2) = sum;
            }
      return out;
    }
  }
  throw Error("partial_trace: invalid pair");
}

template Matrix<GaussianRational> partial_trace(const ExactState&, KeepPair);
template Matrix<std::complex<double>> partial_trace(const FloatState&, KeepPair);

template <typename T>
Matrix<T> trace_out_second(const Matrix<T>& rho, int d1, int d2) {
  if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2)
    throw Error("trace_out_second: shape mismatch");
  Matrix<T> out(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) {
      T sum{};
      for (int k = 0; k < d2; ++k) sum += rho(i * d2 + k, j * d2 + k);
      out(i, j) = sum;
    }
  return out;
}

template <typename T>
Matrix<T> trace_out_first(const Matrix<T>& rho, int d1, int d2) {
  if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2)
    throw Error("trace_out_first: shape mismatch");
  Matrix<T> out(d2, d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j) {
      T sum{};
      for (int k = 0; k < d1; ++k) sum += rho(k * d2 + i, k * d2 + j);
      out(i, j) = sum;
    }
  return out;
}

template Matrix<GaussianRational> trace_out_second(const ExactMatrix&, int, int);
template Matrix<std::complex<double>> trace_out_second(const FloatMatrix&, int, int);
template Matrix<GaussianRational> trace_out_first(const ExactMatrix&, int, int);
template Matrix<std::complex<double>> trace_out_first(const FloatMatrix&, int, int);

template <typename T>
TripartiteState<T> swap_bc(const TripartiteState<T>& s) {
  const int dA = s.dA, dB = s.dB, dC = s.dC;
  Matrix<T> out(dA * dC * dB, dA * dC * dB);
  auto src = [&](int a, int b, int c) { return (a * dB + b) * dC + c; };
  auto dst = [&](int a, int c, int b) { return (a * dC + c) * dB + b; };
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      for (int c = 0; c < dC; ++c)
        for (int a2 = 0; a2 < dA; ++a2)
          for (int b2 = 0; b2 < dB; ++b2)
            for (int c2 = 0; c2 < dC; ++c2)
              out(dst(a, c, b), dst(a2, c2, b2)) = s.rho(src(a, b, c), src(a2, b2, c2));
  return TripartiteState<T>(dA, dC, dB, std::move(out));
}

template TripartiteState<GaussianRational> swap_bc(const ExactState&);
template TripartiteState<std::complex<double>> swap_bc(const FloatState&);

RankTriple rank_triple(const ExactState& s) {
  RankTriple t;
  t.r_ab = rank_of(partial_trace(s, KeepPair::AB));
  t.r_ac = rank_of(partial_trace(s, KeepPair::AC));
  t.r_bc = rank_of(partial_trace(s, KeepPair::BC));
  t.inequality_holds = static_cast<long>(t.r_ab) * t.r_ac >= t.r_bc;
  return t;
}

RankTriple rank_triple(const FloatState& s) {
  RankTriple t;
  t.r_ab = rank_of(partial_trace(s, KeepPair::AB));
  t.r_ac = rank_of(partial_trace(s, KeepPair::AC));
  t.r_bc = rank_of(partial_trace(s, KeepPair::BC));
  t.inequality_holds = static_cast<long>(t.r_ab) * t.r_ac >= t.r_bc;
  return t;
}

namespace {

template <typename T>
Matrix<T> partial_transpose_second(const Matrix<T>& rho, int d1, int d2) {
  Bipartite<T> b(d1, d1, d2, d2, rho);
  return partial_transpose(b, Side::B).data;
}

}  // namespace

bool is_ppt(const ExactMatrix& rho, int d1, int d2) {
  if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2) throw Error("is_ppt: shape mismatch");
  if (!is_hermitian(rho)) throw Error("is_ppt: matrix not Hermitian");
  return is_psd(partial_transpose_second(rho, d1, d2));
}

bool is_ppt(const FloatMatrix& rho, int d1, int d2, std::optional<double> tolerance) {
  if (rho.rows() != d1 * d2 || rho.cols() != d1 * d2) throw Error("is_ppt: shape mismatch");
  if (!is_hermitian(rho)) throw Error("is_ppt: matrix not Hermitian");
  return is_psd(partial_transpose_second(rho, d1, d2), tolerance);
}

DistillabilityVerdict distillability_screen(const ExactState& s) {
  DistillabilityVerdict v;
  v.ranks = rank_triple(s);
  const ExactMatrix rho_bc = partial_trace(s, KeepPair::BC);
  v.npt = !is_ppt(rho_bc, s.dB, s.dC);
  v.support_b = rank_of(trace_out_second(rho_bc, s.dB, s.dC));
  v.support_c = rank_of(trace_out_first(rho_bc, s.dB, s.dC));

  if (!v.npt) {
    v.notes = "inconclusive: rho_BC is PPT";
    return v;
  }
  if (v.ranks.r_ab == 2 && v.ranks.r_ac == 2 && v.ranks.r_bc <= 4) {
    v.rank_bound_used = RankBoundKind::rank_le_4;
    v.distillable = true;
    v.notes = "NPT and rank(rho_BC) = " + std::to_string(v.ranks.r_bc) +
              " <= 4: distillable by the rank-four NPT criterion";
    return v;
  }
  // The product hypothesis is read on ambient dimensions (on support
  // dimensions it excludes every NPT state), while the rank bound that
  // the cited distillation criterion actually needs is re-verified on
  // the support dimensions m, n.
  const int maxmn = std::max(v.support_b, v.support_c);
  const int max_ambient = std::max(s.dB, s.dC);
  if (v.ranks.r_ab <= 3 && static_cast<long>(v.ranks.r_ab) * v.ranks.r_ac <= max_ambient &&
      v.ranks.r_bc <= maxmn) {
    v.rank_bound_used = RankBoundKind::rank_le_maxmn;
    v.distillable = true;
    v.notes = "NPT and rank(rho_BC) = " + std::to_string(v.ranks.r_bc) +
              " <= max(m, n) = " + std::to_string(maxmn) +
              ": distillable by the rank <= max-local-rank NPT criterion"
              " (product hypothesis " + std::to_string(v.ranks.r_ab) + "*" +
              std::to_string(v.ranks.r_ac) + " <= " + std::to_string(max_ambient) +
              " on ambient dims; bound re-verified on support dims " +
              std::to_string(v.support_b) + ", " + std::to_string(v.support_c) + ")";
    return v;
  }
  v.notes = "inconclusive: NPT but no applicable rank bound";
  return v;
}

namespace {

ExactState normalized_gram_state(int dA, int dB, int dC, const ExactMatrix& g) {
  ExactMatrix gram = g * hermitian_adjoint(g);
  GaussianRational tr = trace(gram);
  // trace of G G^dagger is the sum of |entry|^2, positive for nonzero G
  ExactMatrix rho = scale(gram, tr.inverse());
  return ExactState(dA, dB, dC, std::move(rho));
}

}  // namespace

ExactState random_tripartite(int dA, int dB, int dC, int target_rank, std::uint64_t seed,
                             int entry_bound) {
  const int d = dA * dB * dC;
  if (target_rank < 1 || target_rank > d) throw Error("random_tripartite: infeasible target rank");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExactMatrix g = random_matrix(d, target_rank, rng, entry_bound);
    if (rank_of(g) != target_rank) continue;
    ExactState s = normalized_gram_state(dA, dB, dC, g);
    if (rank_of(s.rho) != target_rank) continue;
    return s;
  }
  throw Error("random_tripartite: no draw with the target rank within attempt budget");
}

ExactState random_with_reduced_rank(int dA, int dB, int dC, int r_ab_target, std::uint64_t seed,
                                    int purification_rank, int entry_bound) {
  if (r_ab_target < 1 || r_ab_target > dA * dB)
    throw Error("random_with_reduced_rank: infeasible AB rank target");
  if (purification_rank < 1) throw Error("random_with_reduced_rank: purification rank must be >= 1");
  // rho_AB = F M F^dagger with M of size r x r built from purification_rank
  // vectors of dC components each, so its rank caps at dC * purification_rank.
  if (r_ab_target > dC * purification_rank)
    throw Error("random_with_reduced_rank: AB rank target exceeds dC * purification_rank");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Columns of W live in V (x) C^dC with dim V = r_ab_target, so the
    // AB reduction has rank at most the target; equality is certified.
    ExactMatrix f = random_matrix(dA * dB, r_ab_target, rng, entry_bound);
    if (rank_of(f) != r_ab_target) continue;
    ExactMatrix u = random_matrix(r_ab_target * dC, purification_rank, rng, entry_bound);
    ExactMatrix w = kron(f, ExactMatrix::identity(dC)) * u;
    if (is_zero(w)) continue;
    ExactState s = normalized_gram_state(dA, dB, dC, w);
    if (rank_of(partial_trace(s, KeepPair::AB)) != r_ab_target) continue;
    return s;
  }
  throw Error("random_with_reduced_rank: no draw with the target AB rank within attempt budget");
}

}  // namespace ptrank
