#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "noset/construct.hpp"
#include "noset/error.hpp"
#include "noset/graph.hpp"
#include "noset/verify.hpp"

using namespace noset;

namespace {

ConstructionParams explicit_params() {
  ParamOverrides ov;
  ov.t = 2;
  ov.m = 2;
  ov.n = 4;
  return derive_params(PrimeModulus(2), 4, 4, 2, 1.0, 12345, 100, ov);
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("derived shape parameters: worked examples") {
  // c = 1, k = 10: largest t with 10 >= 5t is t = 2
  auto prm = derive_params(PrimeModulus(2), 16, 10, 1, 1.0, 0);
  CHECK(prm.t == 2);
  CHECK_FALSE(prm.t_clamped);
  // d = 16, t = 2: largest m with 16 >= 2^m is m = 4
  CHECK(prm.m == 4);
  // p = 2, mt = 8: n = floor(2^{8/4}) = 4
  CHECK(prm.n == 4);

  // boundary: k = 5ct exactly
  CHECK(derive_params(PrimeModulus(2), 16, 15, 1, 1.0, 0).t == 3);
  CHECK(derive_params(PrimeModulus(2), 16, 14, 1, 1.0, 0).t == 2);

  // k < 5c clamps t to 1 and flags it
  auto clamped = derive_params(PrimeModulus(2), 8, 3, 1, 1.0, 0);
  CHECK(clamped.t == 1);
  CHECK(clamped.t_clamped);

  // t = 1 caps m at ceil(log2 d) instead of the infinite 1^m chain
  CHECK(derive_params(PrimeModulus(2), 8, 4, 1, 1.0, 0).m == 3);
  CHECK(derive_params(PrimeModulus(2), 5, 4, 1, 1.0, 0).m == 3);
  CHECK(derive_params(PrimeModulus(2), 2, 2, 1, 1.0, 0).m == 1);

  // n via the exact integer fourth root: p = 3, mt = 6 -> floor(3^1.5) = 5
  ParamOverrides tm;
  tm.t = 2;
  tm.m = 3;
  CHECK(derive_params(PrimeModulus(3), 9, 9, 1, 1.0, 0, 100, tm).n == 5);

  // large c shrinks t
  CHECK(derive_params(PrimeModulus(2), 16, 10, 1, 2.0, 0).t == 1);
}

TEST_CASE("derive rejects violated hypotheses") {
  CHECK_THROWS_AS(derive_params(PrimeModulus(2), 3, 4, 1, 1.0, 0), Error);
  try {
    derive_params(PrimeModulus(2), 3, 4, 1, 1.0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisViolated);
  }
  CHECK_THROWS_AS(derive_params(PrimeModulus(2), 8, 1, 1, 1.0, 0), Error);   // k < 2
  CHECK_THROWS_AS(derive_params(PrimeModulus(2), 8, 4, 5, 1.0, 0), Error);   // ell > k
  CHECK_THROWS_AS(derive_params(PrimeModulus(2), 8, 4, 0, 1.0, 0), Error);   // ell < 1
  CHECK_THROWS_AS(derive_params(PrimeModulus(2), 8, 4, 1, 0.0, 0), Error);   // c <= 0
  ParamOverrides bad;
  bad.t = 3;
  bad.m = 2;  // t^m = 9 > d = 8
  CHECK_THROWS_AS(derive_params(PrimeModulus(2), 8, 10, 1, 1.0, 0, 100, bad), Error);
}

TEST_CASE("sampled tuples are componentwise non-self-orthogonal") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto tup = sample_tuple(PrimeModulus(3), 2, 3, rng);
    REQUIRE(tup.size() == 3);
    for (const auto& v : tup) {
      CHECK(v.dim() == 2);
      CHECK_FALSE(is_self_orthogonal(v));
    }
  }
  // F_2^1 admits a single nso vector, so the tuple is deterministic
  auto tup = sample_tuple(PrimeModulus(2), 1, 4, rng);
  for (const auto& v : tup) CHECK(v[0] == 1);
}

TEST_CASE("tuple sampling is close to uniform over the nso vectors") {
  // F_2^2 has two nso vectors: (0,1) and (1,0)
  SplitMix64 rng(32);
  std::map<std::uint32_t, int> freq;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    auto tup = sample_tuple(PrimeModulus(2), 2, 1, rng);
    freq[tup[0][0] * 2 + tup[0][1]] += 1;
  }
  REQUIRE(freq.size() == 2);
  for (auto [key, count] : freq)
    CHECK(std::abs(count / double(trials) - 0.5) < 0.03);
}

TEST_CASE("assembly: padding, alignment, multiplicities") {
  auto prm = explicit_params();
  SplitMix64 rng(prm.seed);
  auto a = assemble(prm, rng);
  CHECK(a.set.dim() == prm.d);
  CHECK(a.set.size() >= 1);
  CHECK(a.set.size() <= prm.n);
  REQUIRE(a.tuples.size() == a.set.size());
  REQUIRE(a.multiplicities.size() == a.set.size());
  std::uint64_t total = 0;
  for (auto mlt : a.multiplicities) total += mlt;
  CHECK(total == prm.n);
  for (std::size_t i = 0; i < a.set.size(); ++i) {
    REQUIRE(a.tuples[i].size() == prm.m);
    // row = tensor of its tuple, zero-padded to d
    const std::vector<FieldVector>& tup = a.tuples[i];
    auto tensor = tensor_product(tup);
    for (std::size_t j = 0; j < prm.d; ++j) {
      const std::uint32_t want = j < tensor.dim() ? tensor[j] : 0;
      CHECK(a.set[i][j] == want);
    }
    CHECK_FALSE(is_self_orthogonal(a.set[i]));
  }
  CHECK(a.set.provenance().kind == Provenance::Kind::Constructed);
  CHECK(a.set.provenance().seed == prm.seed);
}

TEST_CASE("padding preserves inner products") {
  auto prm = explicit_params();
  SplitMix64 rng(7);
  auto a = assemble(prm, rng);
  for (std::size_t i = 0; i < a.set.size(); ++i) {
    for (std::size_t j = 0; j < a.set.size(); ++j) {
      const auto ti = tensor_product(a.tuples[i]);
      const auto tj = tensor_product(a.tuples[j]);
      CHECK(inner_product(a.set[i], a.set[j]) == inner_product(ti, tj));
    }
  }
}

TEST_CASE("tensor inner products factor through the tuples") {
  auto prm = explicit_params();
  SplitMix64 rng(8);
  auto a = assemble(prm, rng);
  const std::uint64_t p = prm.p;
  for (std::size_t i = 0; i < a.set.size(); ++i) {
    for (std::size_t j = 0; j < a.set.size(); ++j) {
      std::uint64_t prod = 1;
      for (std::uint32_t f = 0; f < prm.m; ++f)
        prod = prod * inner_product(a.tuples[i][f], a.tuples[j][f]) % p;
      CHECK(inner_product(a.set[i], a.set[j]) == prod);
    }
  }
}

TEST_CASE("construction is deterministic in the seed") {
  auto prm = explicit_params();
  auto o1 = construct_verified(prm);
  auto o2 = construct_verified(prm);
  CHECK(o1.assembly.set.to_text() == o2.assembly.set.to_text());
  CHECK(o1.report.retries_used == o2.report.retries_used);
  auto prm2 = prm;
  prm2.seed += 1;
  auto o3 = construct_verified(prm2);
  // different stream; sets usually differ but determinism is the claim here
  CHECK(o3.assembly.set.to_text() == construct_verified(prm2).assembly.set.to_text());
}

TEST_CASE("verified construction satisfies both items on the nose") {
  auto prm = explicit_params();
  auto out = construct_verified(prm);
  const auto& A = out.assembly.set;
  CHECK(check_kl(A, prm.k, prm.ell).pass);
  CHECK(check_beta(A, 2 * prm.k - 2).pass);
  CHECK(A.size() * (prm.k - 1) >= prm.n);
  CHECK(out.report.set_size == A.size());
  CHECK(out.report.params.p == 2);
  if (A.size() > 1) CHECK(out.report.exponent > 0.0);
}

TEST_CASE("singleton regime passes vacuously") {
  ParamOverrides ov;
  ov.n = 1;
  auto prm = derive_params(PrimeModulus(2), 4, 4, 2, 1.0, 5, 100, ov);
  auto out = construct_verified(prm);
  CHECK(out.assembly.set.size() == 1);
  CHECK(out.report.retries_used == 0);
}

TEST_CASE("impossible size accounting exhausts retries") {
  // t = 1 over F_2: every tensor is the all-ones singleton, so |A| = 1
  // forever while n = 4 demands |A| * (k-1) >= 4 with k = 2.
  ParamOverrides ov;
  ov.t = 1;
  ov.m = 1;
  ov.n = 4;
  auto prm = derive_params(PrimeModulus(2), 2, 2, 1, 1.0, 9, 3, ov);
  try {
    construct_verified(prm);
    FAIL_CHECK("expected RetriesExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RetriesExhausted);
    CHECK(std::string(e.what()).find("size-accounting") != std::string::npos);
  }
}

TEST_CASE("failure reasons are recorded per retry") {
  ParamOverrides ov;
  ov.t = 1;
  ov.m = 1;
  ov.n = 4;
  auto prm = derive_params(PrimeModulus(2), 2, 2, 1, 1.0, 9, 2, ov);
  try {
    construct_verified(prm);
  } catch (const Error&) {
  }
  // the error path is exercised above; inspect a successful report's failures
  auto ok = construct_verified(explicit_params());
  for (const auto& f : ok.report.failures) {
    CHECK((f.reason == "kl" || f.reason == "beta" || f.reason == "size-accounting"));
    CHECK(f.retry < ok.report.retries_used);
  }
}

TEST_CASE("basis_set builds the standard basis") {
  auto vs = basis_set(PrimeModulus(5), 4);
  REQUIRE(vs.size() == 4);
  CHECK(vs.dim() == 4);
  // lex order puts e_d first, e_1 last
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(vs[i][j] == (j == 3 - i ? 1u : 0u));
  }
  auto g = OrthoGraph::induced(vs);
  CHECK(g.loop_count() == 0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.degree(i) == 3);
  CHECK_THROWS_AS(basis_set(PrimeModulus(5), 0), Error);
}

}  // TEST_SUITE("construct")
