#include "noset/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "noset/error.hpp"

namespace noset {

namespace {

std::uint64_t checked_u64_pow(std::uint64_t base, std::uint64_t exp,
                              const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) {
      raise(Errc::SizeCapExceeded, std::string(what) + " overflows");
    }
    out *= base;
  }
  return out;
}

std::uint64_t fourth_root(std::uint64_t x) {  // floor(x^(1/4))
  if (x == 0) return 0;
  std::uint64_t r =
      static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 0.25)) + 2;
  r = std::min<std::uint64_t>(r, 65536);
  const auto pow4_gt = [&](std::uint64_t v) {
    if (v >= 65536) return true;  // v^4 >= 2^64 > x
    unsigned __int128 sq = static_cast<unsigned __int128>(v) * v;
    return sq * sq > x;
  };
  while (r > 0 && pow4_gt(r)) --r;
  return r;
}

}  // namespace

ConstructionParams derive_params(PrimeModulus p, std::uint64_t d,
                                 std::uint64_t k, std::uint64_t ell, double c,
                                 std::uint64_t seed, std::uint32_t max_retries,
                                 const ParamOverrides& overrides) {
  if (k < 2) raise(Errc::InvalidArgument, "k must be >= 2");
  if (ell < 1 || ell > k) {
    raise(Errc::InvalidArgument, "need k >= ell >= 1");
  }
  if (d < k) {
    raise(Errc::HypothesisViolated,
          "d = " + std::to_string(d) + " < k = " + std::to_string(k));
  }
  if (!(c > 0.0)) raise(Errc::InvalidArgument, "c must be positive");

  ConstructionParams out;
  out.p = p.value();
  out.d = d;
  out.k = k;
  out.ell = ell;
  out.c = c;
  out.seed = seed;
  out.max_retries = max_retries;

  if (overrides.t) {
    out.t = *overrides.t;
    if (out.t < 1) raise(Errc::InvalidArgument, "t must be >= 1");
  } else {
    // largest t >= 1 with k >= 5ct, clamped into [1, d]
    std::uint64_t t = 1;
    while (static_cast<double>(k) >= 5.0 * c * static_cast<double>(t + 1)) ++t;
    if (static_cast<double>(k) < 5.0 * c) {
      t = 1;
      out.t_clamped = true;
    }
    if (t > d) {
      t = d;
      out.t_clamped = true;
    }
    out.t = static_cast<std::uint32_t>(t);
  }

  if (overrides.m) {
    out.m = *overrides.m;
    if (out.m < 1) raise(Errc::InvalidArgument, "m must be >= 1");
  } else if (out.t == 1) {
    // d >= 1^m holds for every m; cap at ceil(log2 d)
    out.m = std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(std::bit_width(d - 1)));
  } else {
    std::uint32_t m = 1;
    std::uint64_t acc = out.t;
    while (acc <= d / out.t) {
      acc *= out.t;
      ++m;
    }
    out.m = m;
  }
  const std::uint64_t tm = checked_u64_pow(out.t, out.m, "t^m");
  if (tm > d) {
    raise(Errc::HypothesisViolated, "t^m = " + std::to_string(tm) +
                                        " exceeds d = " + std::to_string(d));
  }

  if (overrides.n) {
    out.n = *overrides.n;
    if (out.n < 1) raise(Errc::InvalidArgument, "n must be >= 1");
  } else {
    const std::uint64_t pe = checked_u64_pow(
        p.value(), static_cast<std::uint64_t>(out.m) * out.t, "p^(m*t)");
    out.n = std::max<std::uint64_t>(1, fourth_root(pe));
  }
  return out;
}

std::vector<FieldVector> sample_tuple(PrimeModulus p, std::uint32_t t,
                                      std::uint32_t m, SplitMix64& rng) {
  std::vector<FieldVector> tuple;
  tuple.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    tuple.push_back(sample_nso_vector(p, t, rng));
  }
  return tuple;
}

Assembly assemble(const ConstructionParams& params, SplitMix64& rng,
                  std::uint32_t retry) {
  const PrimeModulus p(params.p);
  const std::uint64_t tm = checked_u64_pow(params.t, params.m, "t^m");
  const std::size_t pad = static_cast<std::size_t>(params.d - tm);

  std::vector<std::vector<FieldVector>> draws;
  draws.reserve(params.n);
  std::map<FieldVector, std::pair<std::uint64_t, std::size_t>> seen;
  for (std::uint64_t i = 0; i < params.n; ++i) {
    draws.push_back(sample_tuple(p, params.t, params.m, rng));
    FieldVector tensor = tensor_product(draws.back());
    std::vector<std::uint32_t> coords(tensor.coords().begin(),
                                      tensor.coords().end());
    coords.insert(coords.end(), pad, 0u);
    FieldVector padded(p, coords);
    auto [it, fresh] = seen.try_emplace(std::move(padded),
                                        std::make_pair(0u, draws.size() - 1));
    it->second.first += 1;
  }

  std::vector<FieldVector> vectors;
  std::vector<std::vector<FieldVector>> tuples;
  std::vector<std::uint64_t> multiplicities;
  vectors.reserve(seen.size());
  tuples.reserve(seen.size());
  multiplicities.reserve(seen.size());
  for (const auto& [vec, info] : seen) {  // map order = canonical row order
    vectors.push_back(vec);
    tuples.push_back(draws[info.second]);
    multiplicities.push_back(info.first);
  }
  Provenance prov;
  prov.kind = Provenance::Kind::Constructed;
  prov.seed = params.seed;
  prov.t = params.t;
  prov.m = params.m;
  prov.n = params.n;
  prov.k = params.k;
  prov.ell = params.ell;
  prov.c = params.c;
  prov.retry = retry;
  return Assembly{VectorSet::create(p, params.d, std::move(vectors), prov),
                  std::move(tuples), std::move(multiplicities)};
}

ConstructOutcome construct_verified(const ConstructionParams& params,
                                    const VerifyConfig& vcfg) {
  std::vector<FailedAttempt> failures;
  for (std::uint32_t r = 0; r <= params.max_retries; ++r) {
    SplitMix64 rng(params.seed + r);
    Assembly a = assemble(params, rng, r);

    CheckResult item1 = check_kl(a.set, params.k, params.ell, vcfg);
    if (!item1.pass) {
      failures.push_back({r, "kl", item1.witness});
      continue;
    }
    CheckResult item2 = check_beta(a.set, 2 * params.k - 2, vcfg);
    if (!item2.pass) {
      failures.push_back({r, "beta", item2.witness});
      continue;
    }
    // the multiplicity argument: n draws over at most k-1 copies per vector
    if (a.set.size() * (params.k - 1) < params.n) {
      failures.push_back({r, "size-accounting", std::nullopt});
      continue;
    }

    ConstructionReport rep;
    rep.params = params;
    rep.retries_used = r;
    rep.set_size = a.set.size();
    rep.multiplicities = a.multiplicities;
    rep.failures = std::move(failures);
    rep.exponent = std::log2(static_cast<double>(a.set.size())) *
                   std::log2(static_cast<double>(params.k)) /
                   (static_cast<double>(params.k) *
                    std::log2(static_cast<double>(params.d)));
    return ConstructOutcome{std::move(a), std::move(rep)};
  }

  std::map<std::string, int> reasons;
  for (const auto& f : failures) reasons[f.reason] += 1;
  std::ostringstream os;
  os << "no attempt passed in " << (params.max_retries + 1)
     << " tries (failures:";
  for (const auto& [why, cnt] : reasons) os << ' ' << why << " x" << cnt;
  os << ")";
  raise(Errc::RetriesExhausted, os.str());
}

VectorSet basis_set(PrimeModulus p, std::uint64_t d) {
  if (d < 1) raise(Errc::InvalidArgument, "d must be >= 1");
  std::vector<FieldVector> vecs;
  vecs.reserve(d);
  for (std::uint64_t i = 0; i < d; ++i) {
    std::vector<std::uint32_t> coords(d, 0u);
    coords[static_cast<std::size_t>(i)] = 1u;
    vecs.emplace_back(p, coords);
  }
  return VectorSet::create(p, d, std::move(vecs), Provenance::manual());
}

}  // namespace noset
