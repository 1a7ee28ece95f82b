#include "ptrank/bipartite.hpp"

#include "ptrank/random.hpp"
#include "ptrank/solve.hpp"

namespace ptrank {

int schmidt_rank(const ExactBipartite& m) {
  if (is_zero(m.data)) throw Error("schmidt_rank: undefined for the zero matrix");
  return rank_of(realign(m));
}

int schmidt_rank(const FloatBipartite& m, std::optional<double> rel_tol) {
  if (is_zero(m.data)) throw Error("schmidt_rank: undefined for the zero matrix");
  return rank(realign(m), rel_tol).rank;
}

SchmidtDecomposition schmidt_decompose(const ExactBipartite& m) {
  if (is_zero(m.data)) throw Error("schmidt_decompose: undefined for the zero matrix");

  const ExactMatrix r = realign(m);
  const int k = rank_of(r);

  // S-side basis: first linearly independent rows of the realignment in
  // row-major block order.
  std::vector<int> all_cols(r.cols());
  for (int j = 0; j < r.cols(); ++j) all_cols[j] = j;

  std::vector<int> basis_rows;
  for (int i = 0; i < r.rows() && static_cast<int>(basis_rows.size()) < k; ++i) {
    std::vector<int> cand = basis_rows;
    cand.push_back(i);
    if (rank_of(submatrix(r, cand, all_cols)) == static_cast<int>(cand.size()))
      basis_rows = std::move(cand);
  }
  ExactMatrix basis = submatrix(r, basis_rows, all_cols);  // k x (m2*n2)

  SchmidtDecomposition d;
  d.schmidt_rank = k;
  std::vector<ExactMatrix> r_side(static_cast<std::size_t>(k), ExactMatrix(m.m1, m.n1));
  for (int i = 0; i < m.m1; ++i)
    for (int j = 0; j < m.n1; ++j) {
      ExactMatrix row = submatrix(r, {i * m.n1 + j}, all_cols);
      auto coeffs = row_space_coordinates(basis, row);
      if (!coeffs) throw Error("schmidt_decompose: block outside basis span");
      for (int t = 0; t < k; ++t) r_side[t](i, j) = (*coeffs)(0, t);
    }
  for (int t = 0; t < k; ++t) {
    ExactMatrix s = unvec_row(submatrix(basis, {t}, all_cols), m.m2, m.n2);
    d.terms.emplace_back(std::move(r_side[t]), std::move(s));
  }
  return d;
}

ExactBipartite from_terms(const std::vector<std::pair<ExactMatrix, ExactMatrix>>& terms) {
  if (terms.empty()) throw Error("from_terms: needs at least one term");
  const int m1 = terms[0].first.rows(), n1 = terms[0].first.cols();
  const int m2 = terms[0].second.rows(), n2 = terms[0].second.cols();
  ExactMatrix acc(m1 * m2, n1 * n2);
  for (const auto& [r, s] : terms) {
    if (r.rows() != m1 || r.cols() != n1 || s.rows() != m2 || s.cols() != n2)
      throw Error("from_terms: inconsistent term shapes");
    acc = acc + kron(r, s);
  }
  return ExactBipartite(m1, n1, m2, n2, std::move(acc));
}

ExactLocalEquivalence identity_equivalence(int m1, int n1, int m2, int n2) {
  return {ExactMatrix::identity(m1), ExactMatrix::identity(m2), ExactMatrix::identity(n1),
          ExactMatrix::identity(n2)};
}

ExactLocalEquivalence compose(const ExactLocalEquivalence& second,
                              const ExactLocalEquivalence& first) {
  return {second.U * first.U, second.V * first.V, first.W * second.W, first.X * second.X};
}

ExactBipartite apply_local(const ExactBipartite& m, const ExactLocalEquivalence& e) {
  if (e.U.rows() != m.m1 || e.U.cols() != m.m1 || e.V.rows() != m.m2 || e.V.cols() != m.m2 ||
      e.W.rows() != m.n1 || e.W.cols() != m.n1 || e.X.rows() != m.n2 || e.X.cols() != m.n2)
    throw Error("apply_local: factor dimensions do not match");
  for (const ExactMatrix* f : {&e.U, &e.V, &e.W, &e.X})
    if (rank_of(*f) != f->rows()) throw Error("apply_local: factor not invertible");
  ExactMatrix out = kron(e.U, e.V) * m.data * kron(e.W, e.X);
  return ExactBipartite(m.m1, m.n1, m.m2, m.n2, std::move(out));
}

namespace {

// Stacked row-major vectorizations: row i is vec(f[i]).
ExactMatrix stack_vecs(const std::vector<ExactMatrix>& f) {
  ExactMatrix out(static_cast<int>(f.size()), f[0].rows() * f[0].cols());
  for (std::size_t i = 0; i < f.size(); ++i)
    set_block(out, static_cast<int>(i), 0, vec_row(f[i]));
  return out;
}

}  // namespace

ExactBipartite random_schmidt_rank_k(int k, int m1, int n1, int m2, int n2, std::uint64_t seed,
                                     int entry_bound) {
  if (k < 1 || k > std::min(m1 * n1, m2 * n2))
    throw Error("random_schmidt_rank_k: k out of range");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ExactMatrix> rs, ss;
    for (int t = 0; t < k; ++t) {
      rs.push_back(random_matrix(m1, n1, rng, entry_bound));
      ss.push_back(random_matrix(m2, n2, rng, entry_bound));
    }
    if (rank_of(stack_vecs(rs)) != k || rank_of(stack_vecs(ss)) != k) continue;
    std::vector<std::pair<ExactMatrix, ExactMatrix>> terms;
    for (int t = 0; t < k; ++t) terms.emplace_back(rs[t], ss[t]);
    ExactBipartite m = from_terms(terms);
    if (schmidt_rank(m) != k)
      throw Error("random_schmidt_rank_k: internal consistency failure");
    return m;
  }
  throw Error("random_schmidt_rank_k: no independent draw within attempt budget");
}

}  // namespace ptrank
