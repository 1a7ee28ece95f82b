#ifndef PTRANK_BIPARTITE_HPP
#define PTRANK_BIPARTITE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ptrank/matrix.hpp"
#include "ptrank/rank.hpp"

namespace ptrank {

/// Matrix on a tensor product of two matrix spaces: an m1 x n1 outer
/// grid of m2 x n2 blocks, stored as one (m1*m2) x (n1*n2) matrix.
template <typename T>
struct Bipartite {
  int m1, n1, m2, n2;
  Matrix<T> data;

  Bipartite(int m1_, int n1_, int m2_, int n2_, Matrix<T> data_)
      : m1(m1_), n1(n1_), m2(m2_), n2(n2_), data(std::move(data_)) {
    if (m1 < 1 || n1 < 1 || m2 < 1 || n2 < 1)
      throw Error("Bipartite: dimensions must be positive");
    if (data.rows() != m1 * m2 || data.cols() != n1 * n2)
      throw Error("Bipartite: data shape does not match dimensions");
  }

  /// The m2 x n2 block at outer position (i, j).
  Matrix<T> block(int i, int j) const {
    if (i < 0 || i >= m1 || j < 0 || j >= n1) throw Error("Bipartite::block: out of range");
    return ptrank::block(data, i * m2, j * n2, m2, n2);
  }

  friend bool operator==(const Bipartite& a, const Bipartite& b) {
    return a.m1 == b.m1 && a.n1 == b.n1 && a.m2 == b.m2 && a.n2 == b.n2 && a.data == b.data;
  }
};

using ExactBipartite = Bipartite<GaussianRational>;
using FloatBipartite = Bipartite<std::complex<double>>;

enum class Side { A, B };

/// Partial transpose. Side B transposes every inner block (result dims
/// m1, n1, n2, m2); side A swaps outer block indices and requires a
/// square outer grid. Applying the same side twice is the identity.
template <typename T>
Bipartite<T> partial_transpose(const Bipartite<T>& m, Side side) {
  if (side == Side::A) {
    if (m.m1 != m.n1)
      throw Error("partial_transpose: side A needs a square outer grid");
    Matrix<T> out(m.m1 * m.m2, m.n1 * m.n2);
    for (int i = 0; i < m.m1; ++i)
      for (int j = 0; j < m.n1; ++j) set_block(out, j * m.m2, i * m.n2, m.block(i, j));
    return Bipartite<T>(m.m1, m.n1, m.m2, m.n2, std::move(out));
  }
  Matrix<T> out(m.m1 * m.n2, m.n1 * m.m2);
  for (int i = 0; i < m.m1; ++i)
    for (int j = 0; j < m.n1; ++j) set_block(out, i * m.n2, j * m.m2, transpose(m.block(i, j)));
  return Bipartite<T>(m.m1, m.n1, m.n2, m.m2, std::move(out));
}

/// The (m1*n1) x (m2*n2) matrix whose row i*n1+j is the row-major
/// vectorization of block (i, j). Its rank is the Schmidt rank.
template <typename T>
Matrix<T> realign(const Bipartite<T>& m) {
  Matrix<T> out(m.m1 * m.n1, m.m2 * m.n2);
  for (int i = 0; i < m.m1; ++i)
    for (int j = 0; j < m.n1; ++j) {
      Matrix<T> b = m.block(i, j);
      for (int p = 0; p < m.m2; ++p)
        for (int q = 0; q < m.n2; ++q) out(i * m.n1 + j, p * m.n2 + q) = b(p, q);
    }
  return out;
}

int schmidt_rank(const ExactBipartite& m);
int schmidt_rank(const FloatBipartite& m, std::optional<double> rel_tol = std::nullopt);

/// Terms (R_i, S_i) with sum_i kron(R_i, S_i) equal to the source.
/// Both factor families are linearly independent.
struct SchmidtDecomposition {
  std::vector<std::pair<ExactMatrix, ExactMatrix>> terms;
  int schmidt_rank = 0;
};

/// Exact decomposition: the first linearly independent blocks in
/// row-major block order become the S-side basis, and the coefficients
/// expressing every block in that basis form the R side.
SchmidtDecomposition schmidt_decompose(const ExactBipartite& m);

/// Reconstruction sum_i kron(R_i, S_i).
ExactBipartite from_terms(const std::vector<std::pair<ExactMatrix, ExactMatrix>>& terms);

/// Invertible product transformation (U (x) V) M (W (x) X). Preserves
/// rank, Schmidt rank, and the rank of the partial transpose.
template <typename T>
struct LocalEquivalence {
  Matrix<T> U, V, W, X;
};

using ExactLocalEquivalence = LocalEquivalence<GaussianRational>;

ExactLocalEquivalence identity_equivalence(int m1, int n1, int m2, int n2);

/// second o first: applies `first`, then `second`.
ExactLocalEquivalence compose(const ExactLocalEquivalence& second,
                              const ExactLocalEquivalence& first);

ExactBipartite apply_local(const ExactBipartite& m, const ExactLocalEquivalence& e);

/// Sum of k Kronecker products of random integer factor matrices,
/// regenerated until both factor families are linearly independent; the
/// output has Schmidt rank exactly k. Requires k <= min(m1*n1, m2*n2).
ExactBipartite random_schmidt_rank_k(int k, int m1, int n1, int m2, int n2, std::uint64_t seed,
                                     int entry_bound = 9);

}  // namespace ptrank

#endif  // PTRANK_BIPARTITE_HPP
