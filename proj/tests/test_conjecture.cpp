#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptrank/conjecture.hpp"
#include "ptrank/random.hpp"

#include "helpers.hpp"

using namespace ptrank;
using namespace ptrank::testing;

TEST_CASE("block-diagonal instances saturate with ratio 1") {
  SplitMix64 rng(3);
  // sum_i |i><i| (x) S_i with independent square S_i: the inner partial
  // transpose acts blockwise, so both ranks equal the sum of block ranks.
  std::vector<std::pair<ExactMatrix, ExactMatrix>> terms;
  int rank_sum = 0;
  for (int i = 0; i < 3; ++i) {
    ExactMatrix e(3, 3);
    e(i, i) = GaussianRational(1);
    ExactMatrix s = random_matrix(3, 3, rng, 5);
    rank_sum += rank_of(s);
    terms.emplace_back(e, s);
  }
  ExactBipartite m = from_terms(terms);
  ConjectureVerdict v = check_conjecture(m);
  CHECK(v.schmidt_rank == 3);
  CHECK(v.rank_m == rank_sum);
  CHECK(v.rank_m_gamma == rank_sum);
  CHECK(v.holds);
  CHECK(v.ratio == BigRat(1));
}

TEST_CASE("product matrices satisfy the inequality with equal ranks") {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix r = random_matrix(2, 3, rng, 5);
    ExactMatrix s = random_matrix(3, 2, rng, 5);
    if (is_zero(r) || is_zero(s)) continue;
    ExactBipartite m(2, 3, 3, 2, kron(r, s));
    ConjectureVerdict v = check_conjecture(m);
    CHECK(v.schmidt_rank == 1);
    CHECK(v.rank_m == rank_of(r) * rank_of(s));
    CHECK(v.rank_m_gamma == v.rank_m);
    CHECK(v.holds);
  }
}

TEST_CASE("random Schmidt-rank-3 instances satisfy the inequality") {
  for (int s = 0; s < 100; ++s) {
    ExactBipartite m = random_schmidt_rank_k(3, 2, 2, 3, 3, static_cast<std::uint64_t>(s), 9);
    CHECK(check_conjecture(m).holds);
  }
}

TEST_CASE("random Schmidt-rank-2 instances satisfy the inequality") {
  for (int s = 0; s < 100; ++s) {
    ExactBipartite m = random_schmidt_rank_k(2, 2, 3, 2, 3, static_cast<std::uint64_t>(s), 9);
    ConjectureVerdict v = check_conjecture(m);
    CHECK(v.rank_m <= 2 * v.rank_m_gamma);
  }
}

TEST_CASE("assumption band follows the K and rank windows") {
  // K = 1 product: band requires K > 2.
  ExactBipartite prod = random_schmidt_rank_k(1, 2, 2, 3, 3, 1, 5);
  CHECK_FALSE(check_conjecture(prod).assumption_band);

  // Generic K = 3 instance on (2,2,3,3): ranks are 6-ish, band applies.
  ExactBipartite m3 = random_schmidt_rank_k(3, 2, 2, 3, 3, 2, 5);
  ConjectureVerdict v3 = check_conjecture(m3);
  CHECK(v3.assumption_band == (v3.schmidt_rank < std::max(v3.rank_m, v3.rank_m_gamma)));
}

TEST_CASE("check_conjecture rejects the zero matrix") {
  CHECK_THROWS_AS(check_conjecture(ExactBipartite(2, 2, 2, 2, ExactMatrix(4, 4))), Error);
}

TEST_CASE("factor swap preserves all three ranks") {
  SplitMix64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const int k = 1 + static_cast<int>(rng.uniform(4));
    ExactBipartite m = random_schmidt_rank_k(k, 2, 3, 3, 2, rng.next(), 4);
    ExactBipartite w = swap_factors(m);
    CHECK(w.m1 == m.m2);
    CHECK(w.n2 == m.n1);
    CHECK(rank_of(w.data) == rank_of(m.data));
    CHECK(schmidt_rank(w) == k);
    CHECK(rank_of(partial_transpose(w, Side::B).data) ==
          rank_of(partial_transpose(m, Side::B).data));
  }
}

TEST_CASE("saturated shortcut verifies the chain at K = m1*n1") {
  ExactBipartite m = random_schmidt_rank_k(4, 2, 2, 3, 3, 11, 9);
  auto c = saturated_schmidt_rank_shortcut(m);
  REQUIRE(c.has_value());
  CHECK(c->verified);
  CHECK_FALSE(c->swapped);
  CHECK(c->schmidt_rank == 4);
  CHECK(c->chain_bound >= c->rank_gamma);
}

TEST_CASE("saturated shortcut is trivial for 1x1 grids") {
  SplitMix64 rng(13);
  ExactMatrix s = random_matrix(3, 3, rng, 5);
  REQUIRE(!is_zero(s));
  ExactBipartite m(1, 1, 3, 3, s);
  auto c = saturated_schmidt_rank_shortcut(m);
  REQUIRE(c.has_value());
  CHECK(c->verified);
  CHECK(c->schmidt_rank == 1);
}

TEST_CASE("saturated shortcut signals not-applicable below the saturation point") {
  ExactBipartite m = random_schmidt_rank_k(3, 2, 2, 3, 3, 17, 5);
  CHECK_FALSE(saturated_schmidt_rank_shortcut(m).has_value());
}

TEST_CASE("saturated shortcut chain holds on 200 saturated instances") {
  SplitMix64 rng(19);
  for (int t = 0; t < 200; ++t) {
    // alternate between grids saturated on the outer and the inner side
    const bool outer = (t % 2 == 0);
    ExactBipartite m = outer ? random_schmidt_rank_k(4, 2, 2, 3, 3, rng.next(), 5)
                             : random_schmidt_rank_k(4, 3, 3, 2, 2, rng.next(), 5);
    auto c = saturated_schmidt_rank_shortcut(m);
    REQUIRE(c.has_value());
    CHECK(c->verified);
    CHECK(c->swapped == !outer);
    CHECK(c->chain_bound >= c->rank_gamma);
    CHECK(static_cast<long>(c->schmidt_rank) * c->rank_m >= c->rank_gamma);
  }
}

TEST_CASE("block rank inequalities collapse when B = 0") {
  SplitMix64 rng(23);
  ExactMatrix a = random_matrix(3, 4, rng, 5);
  ExactMatrix c = random_matrix(2, 3, rng, 5);
  ExactMatrix zero_b(2, 4);
  CHECK(block_rank_inequalities(a, zero_b, c));
  // both sides equal rank A + rank C
  ExactMatrix full = vstack(hstack(a, ExactMatrix(3, 3)), hstack(zero_b, c));
  CHECK(rank_of(full) == rank_of(a) + rank_of(c));
}

TEST_CASE("block rank inequalities with A = C = 0 reduce to rank B") {
  SplitMix64 rng(29);
  ExactMatrix b = random_matrix(3, 3, rng, 5);
  ExactMatrix zero_a(2, 3), zero_c(3, 2);
  CHECK(block_rank_inequalities(zero_a, b, zero_c));
}

TEST_CASE("block rank inequalities hold on random triples") {
  SplitMix64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int p = 1 + static_cast<int>(rng.uniform(6));
    const int q = 1 + static_cast<int>(rng.uniform(6));
    const int s = 1 + static_cast<int>(rng.uniform(6));
    const int u = 1 + static_cast<int>(rng.uniform(6));
    ExactMatrix a = random_matrix(p, q, rng, 5);
    ExactMatrix c = random_matrix(s, u, rng, 5);
    ExactMatrix b = random_matrix(s, q, rng, 5);
    CHECK(block_rank_inequalities(a, b, c));
  }
  CHECK_THROWS_AS(block_rank_inequalities(ExactMatrix(2, 2), ExactMatrix(2, 3), ExactMatrix(2, 2)),
                  Error);
}
