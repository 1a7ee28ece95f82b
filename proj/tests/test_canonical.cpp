#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptrank/canonical.hpp"
#include "ptrank/random.hpp"

#include "helpers.hpp"

using namespace ptrank;
using namespace ptrank::testing;

namespace {

ExactMatrix stack_vecs(const std::vector<ExactMatrix>& blocks) {
  ExactMatrix out(static_cast<int>(blocks.size()), blocks[0].rows() * blocks[0].cols());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    set_block(out, static_cast<int>(i), 0, vec_row(blocks[i]));
  return out;
}

// 2x2-block Schmidt-rank-3 instance with a prescribed w = x + y*z, built
// from independent random blocks A, B, C and D = x*A + y*B + z*C.
ExactBipartite instance_with_w(SplitMix64& rng, int m2, int n2, const GaussianRational& x,
                               const GaussianRational& y, const GaussianRational& z) {
  for (;;) {
    ExactMatrix a = random_matrix(m2, n2, rng, 4);
    ExactMatrix b = random_matrix(m2, n2, rng, 4);
    ExactMatrix c = random_matrix(m2, n2, rng, 4);
    if (rank_of(stack_vecs({a, b, c})) != 3) continue;
    ExactMatrix d = scale(a, x) + scale(b, y) + scale(c, z);
    return from_blocks({{a, b}, {c, d}});
  }
}

void check_invariants(const ExactBipartite& input, const CanonicalForm& c) {
  // block (0,0) is diag(I_k, 0)
  ExactMatrix expect(c.n.m2, c.n.n2);
  for (int i = 0; i < c.k; ++i) expect(i, i) = GaussianRational(1);
  CHECK(c.n.block(0, 0) == expect);

  if (c.branch == CanonicalBranch::w_nonzero) {
    CHECK(!c.w.is_zero());
    CHECK(c.n.block(1, 1) == expect);
  } else {
    CHECK(c.w.is_zero());
    CHECK(is_zero(c.n.block(1, 1)));
  }

  // certificate factors are invertible and reproduce n from the input
  for (const ExactMatrix* f : {&c.certificate.U, &c.certificate.V, &c.certificate.W,
                               &c.certificate.X})
    CHECK(rank_of(*f) == f->rows());
  CHECK(apply_local(input, c.certificate).data == c.n.data);

  // rank and Schmidt rank preserved
  CHECK(rank_of(c.n.data) == rank_of(input.data));
  CHECK(schmidt_rank(c.n) == 3);
  CHECK(schmidt_rank(partial_transpose(c.n, Side::B)) == 3);
}

}  // namespace

TEST_CASE("an input already in normal form comes back unchanged") {
  // N11 = diag(1, 0), generic N12, N21, zero N22; Schmidt rank 3.
  ExactMatrix n11 = mat({{1, 0}, {0, 0}});
  ExactMatrix n12 = mat({{0, 2}, {1, 0}});
  ExactMatrix n21 = mat({{0, 0}, {3, 1}});
  ExactBipartite m = from_blocks({{n11, n12}, {n21, ExactMatrix(2, 2)}});
  REQUIRE(schmidt_rank(m) == 3);

  CanonicalForm c = reduce_to_canonical(m);
  CHECK(c.k == 1);
  CHECK(c.branch == CanonicalBranch::w_zero);
  CHECK(c.n.data == m.data);
  CHECK(c.certificate.U == ExactMatrix::identity(2));
  CHECK(c.certificate.V == ExactMatrix::identity(2));
  CHECK(c.certificate.W == ExactMatrix::identity(2));
  CHECK(c.certificate.X == ExactMatrix::identity(2));
}

TEST_CASE("random Schmidt-rank-3 instances reduce with all invariants") {
  SplitMix64 rng(3);
  for (int t = 0; t < 60; ++t) {
    ExactBipartite m = random_schmidt_rank_k(3, 2, 2, 3, 3, rng.next(), 5);
    CanonicalForm c = reduce_to_canonical(m);
    check_invariants(m, c);
  }
}

TEST_CASE("non-square inner blocks reduce as well") {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    ExactBipartite m = random_schmidt_rank_k(3, 2, 2, 3, 4, rng.next(), 4);
    CanonicalForm c = reduce_to_canonical(m);
    check_invariants(m, c);
    BlockRankBounds b = verify_canonical_bounds(c);  // padding path
    CHECK(b.rank_m == rank_of(m.data));
  }
}

TEST_CASE("the pre-pass permutes a dependent leading triple away") {
  SplitMix64 rng(7);
  for (;;) {
    ExactMatrix a = random_matrix(3, 3, rng, 4);
    ExactMatrix b = random_matrix(3, 3, rng, 4);
    ExactMatrix c = random_matrix(3, 3, rng, 4);
    if (rank_of(stack_vecs({a, b, c})) != 3) continue;
    // grid [[A, 2A], [B, C]]: the leading triple {A, 2A, B} is dependent
    ExactBipartite m = from_blocks({{a, scale(a, GaussianRational(2))}, {b, c}});
    REQUIRE(schmidt_rank(m) == 3);
    CanonicalForm cf = reduce_to_canonical(m);
    check_invariants(m, cf);
    break;
  }
}

TEST_CASE("both branches appear and carry their w") {
  SplitMix64 rng(11);
  // w = x + y*z = 0 by construction
  ExactBipartite mz =
      instance_with_w(rng, 3, 3, GaussianRational(-6), GaussianRational(2), GaussianRational(3));
  CanonicalForm cz = reduce_to_canonical(mz);
  CHECK(cz.branch == CanonicalBranch::w_zero);
  check_invariants(mz, cz);

  ExactBipartite mn =
      instance_with_w(rng, 3, 3, GaussianRational(1), GaussianRational(2), GaussianRational(3));
  CanonicalForm cn = reduce_to_canonical(mn);
  CHECK(cn.branch == CanonicalBranch::w_nonzero);
  CHECK(cn.w == GaussianRational(7));
  check_invariants(mn, cn);
}

TEST_CASE("schmidt rank is 3 for N and its partial transpose on 200 reductions") {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t) {
    ExactBipartite m = random_schmidt_rank_k(3, 2, 2, 3, 3, rng.next(), 5);
    CanonicalForm c = reduce_to_canonical(m);
    CHECK(schmidt_rank(c.n) == 3);
    CHECK(schmidt_rank(partial_transpose(c.n, Side::B)) == 3);
  }
}

TEST_CASE("reducer rejects wrong shapes and ranks") {
  SplitMix64 rng(17);
  ExactBipartite wide(2, 3, 2, 2, random_matrix(4, 6, rng, 4));
  CHECK_THROWS_AS(reduce_to_canonical(wide), Error);
  ExactBipartite low = random_schmidt_rank_k(2, 2, 2, 3, 3, 23, 5);
  CHECK_THROWS_AS(reduce_to_canonical(low), Error);
}

TEST_CASE("bounds collapse in the full-rank corner") {
  SplitMix64 rng(19);
  // [[I, Q], [R, I]]: w = 1, k = d = 3, all r_i empty.
  const ExactMatrix id = ExactMatrix::identity(3);
  for (;;) {
    ExactMatrix q = random_matrix(3, 3, rng, 4);
    ExactMatrix r = random_matrix(3, 3, rng, 4);
    if (rank_of(stack_vecs({id, q, r})) != 3) continue;
    ExactBipartite m = from_blocks({{id, q}, {r, id}});
    REQUIRE(schmidt_rank(m) == 3);
    CanonicalForm c = reduce_to_canonical(m);
    REQUIRE(c.k == 3);
    BlockRankBounds b = verify_canonical_bounds(c);
    CHECK(b.r1 == 0);
    CHECK(b.r2 == 0);
    CHECK(b.r3 == 0);
    CHECK(b.r4 == 0);
    CHECK(b.lower_bound_rank_m == BigRat(3));
    CHECK(b.upper_bound_rank_gamma == 6);
    break;
  }
}

TEST_CASE("bound sandwich holds on random canonical forms of both branches") {
  SplitMix64 rng(23);
  int zero_branch = 0, nonzero_branch = 0;
  for (int t = 0; t < 60; ++t) {
    const bool force_zero = (t % 2 == 0);
    ExactBipartite m =
        force_zero
            ? instance_with_w(rng, 3, 3, GaussianRational(-1) * GaussianRational(2), // x = -y*z
                              GaussianRational(1), GaussianRational(2))
            : random_schmidt_rank_k(3, 2, 2, 3, 3, rng.next(), 5);
    CanonicalForm c = reduce_to_canonical(m);
    (c.branch == CanonicalBranch::w_zero ? zero_branch : nonzero_branch)++;
    BlockRankBounds b = verify_canonical_bounds(c);
    CHECK(BigRat(b.rank_m) >= b.lower_bound_rank_m);
    CHECK(b.rank_gamma_a <= b.upper_bound_rank_gamma);
    CHECK(BigRat(b.upper_bound_rank_gamma) <= 3 * b.lower_bound_rank_m);
    // the outer-swap and inner-block transposes have equal rank
    CHECK(b.rank_gamma_a == rank_of(partial_transpose(c.n, Side::B).data));
  }
  CHECK(zero_branch >= 20);
  CHECK(nonzero_branch >= 20);
}

TEST_CASE("the w = 0 bound ratio is at most 3 for every parameter choice") {
  for (int k = 0; k <= 10; ++k)
    for (int r1 = 0; r1 <= 10; ++r1)
      for (int r4 = 0; r4 <= 10; ++r4)
        if (k + r1 + r4 > 0) CHECK(3 * k + r1 + r4 <= 3 * (k + r1 + r4));
}
