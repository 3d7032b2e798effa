#include "noset/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "noset/error.hpp"
#include "noset/vector_set.hpp"

namespace noset {

double BoundInput::s() const {
  if (d == 0) raise(Errc::InvalidArgument, "s undefined for d = 0");
  return 2.0 * static_cast<double>(n) * std::log2(static_cast<double>(n)) /
         static_cast<double>(d);
}

const char* count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::BiIndependentExactK: return "bi_independent_pairs_exact_k";
    case CountKind::BiIndependentLeK: return "bi_independent_pairs_le_k";
    case CountKind::KlfreeSubsets: return "klfree_subsets_le_k";
    case CountKind::KlCopies: return "kl_copies";
  }
  return "?";
}

std::string CountReport::verdict() const {
  if (!log2_bound || !applicable) return "-";
  const bool holds = log2_exact <= *log2_bound + 1e-9;
  if (shape_only) return holds ? "shape-pass" : "shape-exceed";
  return holds ? "pass" : "FAILURE";
}

std::string CountReport::tsv_line() const {
  std::ostringstream os;
  os << count_kind_name(kind) << '\t';
  if (pt) {
    os << pt->first << '\t' << pt->second << '\t';
  } else {
    os << "-\t-\t";
  }
  os << params.k << '\t';
  if (params.ell) {
    os << *params.ell << '\t';
  } else {
    os << "-\t";
  }
  os << exact.str() << '\t' << format_real(log2_exact) << '\t' << bound_name
     << '\t';
  if (log2_bound) {
    os << format_real(*log2_bound) << '\t';
  } else {
    os << "-\t";
  }
  os << (applicable ? "yes" : "no") << '\t' << verdict();
  return os.str();
}

// ---------------------------------------------------------------------------
// bounds

double log2_bound_bi_exact(const BoundInput& in) {
  const double s = in.s();
  const double n = static_cast<double>(in.n);
  const double k = static_cast<double>(in.k);
  const double rho = 2.0 * in.lambda * n / static_cast<double>(in.d);
  return -std::lgamma(k + 1.0) / std::log(2.0) + 2.0 * s * std::log2(n) +
         2.0 * (k - s) * std::log2(rho);
}

double log2_bound_bi_le(const BoundInput& in) {
  const double s = in.s();
  const double n = static_cast<double>(in.n);
  const double k = static_cast<double>(in.k);
  const double rho = 2.0 * in.lambda * n / static_cast<double>(in.d);
  const double base = std::max(n, rho * rho);
  return 2.0 * std::log2(k + 1.0) + (s + k) * std::log2(base);
}

double log2_bound_klfree(const BoundInput& in) {
  const double n = static_cast<double>(in.n);
  const double k = static_cast<double>(in.k);
  return in.c * std::log2(n) * std::log2(n / in.lambda) +
         k * std::log2(in.lambda);
}

double bound_g_bipartite(std::uint64_t p, std::uint32_t t, std::uint64_t k,
                         double c) {
  const double td = static_cast<double>(t);
  const double kd = static_cast<double>(k);
  return c * (td * td + kd) + td * kd * std::log2(static_cast<double>(p));
}

double bound_g_klfree(std::uint64_t p, std::uint32_t t, std::uint64_t k,
                      double c) {
  const double td = static_cast<double>(t);
  const double kd = static_cast<double>(k);
  return c * td * td + td * kd / 2.0 * std::log2(static_cast<double>(p));
}

// ---------------------------------------------------------------------------
// enumeration plumbing

namespace {

// Shared budget across workers; outcome is deterministic because the DFS
// tree (and hence the total node count) does not depend on thread count.
struct Budget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit;
  explicit Budget(std::uint64_t lim) : limit(lim) {}
  void charge() {
    if (used.fetch_add(1, std::memory_order_relaxed) >= limit) {
      raise(Errc::BudgetExceeded,
            "enumeration budget of " + std::to_string(limit) +
                " node visits exhausted");
    }
  }
};

// C(m, j) for all m <= n, j <= k.
std::vector<std::vector<BigUint>> binom_table(std::size_t n, std::size_t k) {
  std::vector<std::vector<BigUint>> c(n + 1,
                                      std::vector<BigUint>(k + 1, BigUint(0)));
  for (std::size_t m = 0; m <= n; ++m) {
    c[m][0] = BigUint(1);
    for (std::size_t j = 1; j <= std::min(m, k); ++j) {
      c[m][j] = c[m - 1][j - 1];
      c[m][j] += c[m - 1][j];
    }
  }
  return c;
}

std::vector<DynBitset> complement_rows(const OrthoGraph& g) {
  std::vector<DynBitset> comp;
  comp.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    DynBitset c(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g.row(i).test(j)) c.set(j);
    }
    comp.push_back(std::move(c));
  }
  return comp;
}

// Off-diagonal neighborhoods (loops stripped), for clique work.
std::vector<DynBitset> loopless_rows(const OrthoGraph& g) {
  std::vector<DynBitset> nb;
  nb.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    DynBitset r = g.row(i);
    r.reset(i);
    nb.push_back(std::move(r));
  }
  return nb;
}

// Enumerates U1 prefixes in increasing-index DFS order; `term` folds each
// visited prefix's joint non-neighborhood size into the worker accumulator.
// Returns the sum over all first elements v0 with v0 % stride == offset.
struct BiEnumerator {
  const std::vector<DynBitset>& comp;
  std::size_t n;
  std::uint64_t k;
  bool all_prefixes;  // visit every prefix (<= k) vs. only completed k-sets
  bool prune_empty;   // abandon subtrees with empty non-neighborhood
  const std::vector<std::vector<BigUint>>& weight;  // weight[|B|] added per visit
  Budget& budget;

  BigUint run(std::size_t offset, std::size_t stride) const {
    BigUint acc(0);
    for (std::size_t v0 = offset; v0 < n; v0 += stride) {
      if (n - v0 < min_remaining(1)) continue;
      DynBitset b = comp[v0];
      dfs(v0 + 1, 1, b, acc);
    }
    return acc;
  }

 private:
  std::size_t min_remaining(std::uint64_t depth) const {
    return all_prefixes ? 1 : static_cast<std::size_t>(k - depth + 1);
  }

  void dfs(std::size_t next, std::uint64_t depth, const DynBitset& b,
           BigUint& acc) const {
    budget.charge();
    const std::size_t bsize = b.count();
    if (all_prefixes || depth == k) acc += weight[bsize][0];
    if (depth == k) return;
    for (std::size_t v = next; v < n; ++v) {
      if (n - v < min_remaining(depth + 1)) break;
      DynBitset nb = b;
      nb &= comp[v];
      const std::size_t nbc = nb.count();
      if (!all_prefixes && nbc < k) continue;   // C(|B|, k) = 0 from here on
      if (prune_empty && nbc == 0) continue;    // nothing left to pair with
      dfs(v + 1, depth + 1, nb, acc);
    }
  }
};

BigUint parallel_sum(const std::function<BigUint(std::size_t, std::size_t)>& job,
                     unsigned threads) {
  if (threads <= 1) return job(0, 1);
  std::vector<BigUint> parts(threads, BigUint(0));
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        parts[w] = job(w, threads);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs) {
    if (e) std::rethrow_exception(e);
  }
  BigUint total(0);
  for (auto& part : parts) total += part;
  return total;
}

std::optional<BoundInput> graph_bound_input(const OrthoGraph& g,
                                            std::uint64_t k,
                                            std::optional<std::uint64_t> ell,
                                            double c) {
  const auto fp = g.full_params();
  if (!fp) return std::nullopt;
  const TheorySpectral th = g_theory(fp->first, fp->second);
  BoundInput in{th.n, th.d, th.lambda, k, ell, c};
  if (!in.valid()) return std::nullopt;
  return in;
}

CountReport base_report(const OrthoGraph& g, CountKind kind, std::uint64_t k,
                        std::optional<std::uint64_t> ell, double c) {
  CountReport rep;
  rep.kind = kind;
  rep.pt = g.full_params();
  rep.params.n = g.size();
  rep.params.k = k;
  rep.params.ell = ell;
  rep.params.c = c;
  if (auto in = graph_bound_input(g, k, ell, c)) rep.params = *in;
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// counting operations

CountReport count_bi_independent_exact_k(const OrthoGraph& g, std::uint64_t k,
                                         const CountConfig& cfg) {
  if (k < 1) raise(Errc::InvalidArgument, "k must be >= 1");
  CountReport rep = base_report(g, CountKind::BiIndependentExactK, k,
                                std::nullopt, 1.0);
  const std::size_t n = g.size();
  const auto binom = binom_table(n, static_cast<std::size_t>(std::min<std::uint64_t>(k, n)));
  // weight[|B|] = C(|B|, k); one column so BiEnumerator can index [..][0]
  std::vector<std::vector<BigUint>> weight(n + 1, std::vector<BigUint>(1, BigUint(0)));
  if (k <= n) {
    for (std::size_t m = 0; m <= n; ++m) weight[m][0] = binom[m][k];
  }
  const auto comp = complement_rows(g);
  Budget budget(cfg.budget);
  BiEnumerator en{comp, n, k, /*all_prefixes=*/false, /*prune_empty=*/false,
                  weight, budget};
  rep.exact = parallel_sum(
      [&](std::size_t off, std::size_t stride) { return en.run(off, stride); },
      cfg.threads);
  rep.log2_exact = rep.exact.log2();
  if (graph_bound_input(g, k, std::nullopt, 1.0)) {
    rep.bound_name = "exact-k-bound";
    rep.log2_bound = log2_bound_bi_exact(rep.params);
    rep.applicable = static_cast<double>(k) >= rep.params.s();
  }
  return rep;
}

CountReport count_bi_independent_le_k(const OrthoGraph& g, std::uint64_t k,
                                      bool include_empty,
                                      const CountConfig& cfg) {
  CountReport rep =
      base_report(g, CountKind::BiIndependentLeK, k, std::nullopt, 1.0);
  const std::size_t n = g.size();
  const std::size_t kc = static_cast<std::size_t>(std::min<std::uint64_t>(k, n));
  const auto binom = binom_table(n, kc);
  // weight[|B|] = sum_{j=jmin..kc} C(|B|, j)
  const std::size_t jmin = include_empty ? 0 : 1;
  std::vector<std::vector<BigUint>> weight(n + 1, std::vector<BigUint>(1, BigUint(0)));
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::size_t j = jmin; j <= kc; ++j) weight[m][0] += binom[m][j];
  }
  BigUint total(0);
  if (k >= 1 && n >= 1) {
    const auto comp = complement_rows(g);
    Budget budget(cfg.budget);
    BiEnumerator en{comp, n, k, /*all_prefixes=*/true,
                    /*prune_empty=*/!include_empty, weight, budget};
    total = parallel_sum([&](std::size_t off, std::size_t stride) {
      return en.run(off, stride);
    }, cfg.threads);
  }
  if (include_empty) total += weight[n][0];  // U1 = empty pairs with anything
  rep.exact = total;
  rep.log2_exact = rep.exact.log2();
  if (k >= 1 && graph_bound_input(g, k, std::nullopt, 1.0)) {
    rep.bound_name = "le-k-bound";
    rep.log2_bound = log2_bound_bi_le(rep.params);
    rep.applicable = true;
  }
  return rep;
}

CountReport count_klfree_subsets(const OrthoGraph& g, std::uint64_t k,
                                 std::uint64_t ell, bool include_empty,
                                 double c, const CountConfig& cfg) {
  if (ell < 2) raise(Errc::InvalidArgument, "ell must be >= 2");
  CountReport rep = base_report(g, CountKind::KlfreeSubsets, k, ell, c);
  const std::size_t n = g.size();
  const auto nb = loopless_rows(g);
  Budget budget(cfg.budget);

  // true iff the graph induced on cands (restricted to indices > floor
  // handled by caller) contains an r-clique
  std::function<bool(const DynBitset&, std::uint64_t)> has_clique =
      [&](const DynBitset& cands, std::uint64_t r) -> bool {
    if (r == 0) return true;
    if (cands.count() < r) return false;
    for (std::size_t v = cands.next(0); v < n; v = cands.next(v + 1)) {
      budget.charge();
      DynBitset deeper = cands;
      deeper &= nb[v];
      for (std::size_t lo = cands.next(0); lo <= v && lo < n;
           lo = cands.next(lo + 1)) {
        deeper.reset(lo);  // cliques are found from their least vertex
      }
      if (has_clique(deeper, r - 1)) return true;
    }
    return false;
  };

  std::function<std::uint64_t(std::size_t, const DynBitset&, std::uint64_t)>
      dfs = [&](std::size_t next, const DynBitset& chosen,
                std::uint64_t depth) -> std::uint64_t {
    budget.charge();
    std::uint64_t cnt = 1;  // the chosen set itself is K_ell-free
    if (depth == k) return cnt;
    for (std::size_t v = next; v < n; ++v) {
      DynBitset common = chosen;
      common &= nb[v];
      if (has_clique(common, ell - 1)) continue;  // v would close a K_ell
      DynBitset ext = chosen;
      ext.set(v);
      cnt += dfs(v + 1, ext, depth + 1);
    }
    return cnt;
  };

  std::uint64_t total = 0;
  if (k >= 1) {
    for (std::size_t v0 = 0; v0 < n; ++v0) {
      DynBitset chosen(n);
      chosen.set(v0);
      total += dfs(v0 + 1, chosen, 1);
    }
  }
  if (include_empty) total += 1;
  rep.exact = BigUint(total);
  rep.log2_exact = rep.exact.log2();
  if (k >= 1 && graph_bound_input(g, k, ell, c)) {
    rep.bound_name = "container-bound";
    rep.log2_bound = log2_bound_klfree(rep.params);
    rep.applicable = true;
    rep.shape_only = true;
  }
  return rep;
}

KlCopies count_kl_copies(const OrthoGraph& g, const DynBitset& u,
                         std::uint64_t ell, const CountConfig& cfg) {
  if (ell < 2 || ell > 4) raise(Errc::InvalidArgument, "ell must be in {2,3,4}");
  if (u.size() != g.size()) raise(Errc::BadSubset, "U must index the vertex set");
  const std::size_t n = g.size();
  const auto nb = loopless_rows(g);
  Budget budget(cfg.budget);

  std::function<std::uint64_t(const DynBitset&, std::uint64_t)> dfs =
      [&](const DynBitset& cands, std::uint64_t r) -> std::uint64_t {
    if (r == 0) return 1;
    std::uint64_t cnt = 0;
    for (std::size_t v = cands.next(0); v < n; v = cands.next(v + 1)) {
      budget.charge();
      DynBitset deeper = cands;
      deeper &= nb[v];
      for (std::size_t lo = cands.next(0); lo <= v && lo < n;
           lo = cands.next(lo + 1)) {
        deeper.reset(lo);
      }
      cnt += dfs(deeper, r - 1);
    }
    return cnt;
  };

  KlCopies out;
  out.exact = BigUint(dfs(u, ell));

  // estimate needs (n, d) of the ambient graph
  double dd;
  const auto fp = g.full_params();
  if (fp) {
    dd = static_cast<double>(g_theory(fp->first, fp->second).d);
  } else {
    const auto degs = g.degrees();
    const bool regular = std::all_of(degs.begin(), degs.end(),
                                     [&](std::size_t x) { return x == degs[0]; });
    if (!regular) {
      raise(Errc::InvalidArgument,
            "clique estimate needs a regular graph (or a full G(p,t))");
    }
    dd = static_cast<double>(degs[0]);
  }
  const double uu = static_cast<double>(u.count());
  const double nn = static_cast<double>(n);
  double fact = 1.0;
  for (std::uint64_t i = 2; i <= ell; ++i) fact *= static_cast<double>(i);
  out.estimate = std::pow(uu, static_cast<double>(ell)) / fact *
                 std::pow(dd / nn, static_cast<double>(ell * (ell - 1) / 2));
  // exp2 of (-inf - x) is 0, so a zero exact count falls out naturally
  out.ratio = out.estimate == 0.0
                  ? 0.0
                  : std::exp2(out.exact.log2() - std::log2(out.estimate));
  return out;
}

}  // namespace noset
