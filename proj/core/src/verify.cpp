#include "noset/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "noset/bitset.hpp"
#include "noset/error.hpp"
#include "noset/graph.hpp"

namespace noset {

const char* witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::IndependentSet: return "independent_set";
    case WitnessKind::BiIndependentPair: return "bi_independent_pair";
    case WitnessKind::KlfreeSubset: return "klfree_subset";
  }
  return "?";
}

std::string Witness::serialize() const {
  std::ostringstream os;
  os << "WITNESS kind=" << witness_kind_name(kind) << " A1=";
  for (std::size_t i = 0; i < indices_1.size(); ++i) {
    if (i) os << ',';
    os << indices_1[i];
  }
  if (kind == WitnessKind::BiIndependentPair) {
    os << " A2=";
    for (std::size_t i = 0; i < indices_2.size(); ++i) {
      if (i) os << ',';
      os << indices_2[i];
    }
  }
  return os.str();
}

namespace {

struct SearchBudget {
  std::uint64_t used = 0;
  std::uint64_t limit;
  explicit SearchBudget(std::uint64_t lim) : limit(lim) {}
  void charge() {
    if (used++ >= limit) {
      raise(Errc::BudgetExceeded, "verification search budget of " +
                                      std::to_string(limit) + " exhausted");
    }
  }
};

// Vertices by descending degree, ties by index: the branch order everywhere.
std::vector<std::size_t> branch_order(const OrthoGraph& g) {
  std::vector<std::size_t> ord(g.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(a) > g.degree(b);
  });
  return ord;
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

// Greedy clique cover of `cands`: an independent set picks at most one vertex
// per clique, so the cover size bounds the independent sets inside cands.
std::size_t clique_cover_bound(const OrthoGraph& g,
                               const std::vector<std::size_t>& ord,
                               const DynBitset& cands) {
  std::vector<DynBitset> cliques;
  for (std::size_t v : ord) {
    if (!cands.test(v)) continue;
    bool placed = false;
    for (auto& q : cliques) {
      if (DynBitset::and_count(q, g.row(v)) == q.count()) {
        q.set(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      DynBitset q(g.size());
      q.set(v);
      cliques.push_back(std::move(q));
    }
  }
  return cliques.size();
}

// True iff the graph induced on cands contains an r-clique (off-diagonal
// adjacency; rows passed in are loopless).
bool contains_clique(const std::vector<DynBitset>& nb, const DynBitset& cands,
                     std::uint64_t r, SearchBudget& budget) {
  if (r == 0) return true;
  if (cands.count() < r) return false;
  const std::size_t n = cands.size();
  for (std::size_t v = cands.next(0); v < n; v = cands.next(v + 1)) {
    budget.charge();
    DynBitset deeper = cands;
    deeper &= nb[v];
    for (std::size_t lo = cands.next(0); lo <= v && lo < n;
         lo = cands.next(lo + 1)) {
      deeper.reset(lo);  // build cliques upward from their least vertex
    }
    if (contains_clique(nb, deeper, r - 1, budget)) return true;
  }
  return false;
}

struct AlphaSearch {
  const OrthoGraph& g;
  const std::vector<std::size_t>& ord;
  std::uint64_t target;  // independent-set size that refutes the predicate
  SearchBudget& budget;
  std::vector<std::size_t> chosen;

  bool find(const DynBitset& cands) {
    budget.charge();
    if (chosen.size() == target) return true;
    if (chosen.size() + clique_cover_bound(g, ord, cands) < target) {
      return false;
    }
    std::size_t v = g.size();
    for (std::size_t cand : ord) {
      if (cands.test(cand)) {
        v = cand;
        break;
      }
    }
    if (v == g.size()) return false;
    DynBitset incl = cands;
    incl.reset(v);
    incl.andnot_assign(g.row(v));
    chosen.push_back(v);
    if (find(incl)) return true;
    chosen.pop_back();
    DynBitset excl = cands;
    excl.reset(v);
    return find(excl);
  }
};

OrthoGraph graph_of(const VectorSet& vs) {
  return OrthoGraph::induced(vs.vectors());
}

}  // namespace

CheckResult check_alpha(const VectorSet& vs, std::uint64_t k,
                        const VerifyConfig& cfg) {
  const OrthoGraph g = graph_of(vs);
  const auto ord = branch_order(g);
  SearchBudget budget(cfg.budget);
  AlphaSearch search{g, ord, k + 1, budget, {}};
  DynBitset all(g.size(), true);
  CheckResult res;
  if (g.size() > k && search.find(all)) {
    res.pass = false;
    Witness w;
    w.kind = WitnessKind::IndependentSet;
    w.indices_1 = search.chosen;
    std::sort(w.indices_1.begin(), w.indices_1.end());
    res.witness = std::move(w);
  }
  return res;
}

CheckResult check_beta(const VectorSet& vs, std::uint64_t k,
                       const VerifyConfig& cfg) {
  const OrthoGraph g = graph_of(vs);
  const std::size_t n = g.size();
  const std::uint64_t target = k + 1;
  CheckResult res;
  if (n < target) return res;  // no (k+1)-subset at all
  const auto ord = branch_order(g);
  const auto comp = complement_rows(g);
  SearchBudget budget(cfg.budget);

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> found_a2;
  // A1 over positions in branch order; B = joint non-neighborhood, which
  // only shrinks, so |B| < k+1 kills the whole subtree.
  std::function<bool(std::size_t, const DynBitset&)> find =
      [&](std::size_t from, const DynBitset& b) -> bool {
    budget.charge();
    if (chosen.size() == target) {
      if (b.count() >= target) {
        found_a2.clear();
        for (std::size_t v = b.next(0); v < n && found_a2.size() < target;
             v = b.next(v + 1)) {
          found_a2.push_back(v);
        }
        return true;
      }
      return false;
    }
    for (std::size_t pos = from; pos < n; ++pos) {
      if (n - pos < target - chosen.size()) break;
      const std::size_t v = ord[pos];
      DynBitset nb = b;
      nb &= comp[v];
      if (nb.count() < target) continue;
      chosen.push_back(v);
      if (find(pos + 1, nb)) return true;
      chosen.pop_back();
    }
    return false;
  };

  DynBitset all(n, true);
  if (find(0, all)) {
    res.pass = false;
    Witness w;
    w.kind = WitnessKind::BiIndependentPair;
    w.indices_1 = chosen;
    std::sort(w.indices_1.begin(), w.indices_1.end());
    w.indices_2 = found_a2;
    res.witness = std::move(w);
  }
  return res;
}

CheckResult check_kl(const VectorSet& vs, std::uint64_t K, std::uint64_t L,
                     const VerifyConfig& cfg) {
  if (K < 1) raise(Errc::InvalidArgument, "subset size K must be >= 1");
  if (L < 1) raise(Errc::InvalidArgument, "clique size L must be >= 1");
  const OrthoGraph g = graph_of(vs);
  const std::size_t n = g.size();
  CheckResult res;
  if (n < K) return res;  // vacuous
  const auto ord = branch_order(g);
  std::vector<DynBitset> nb;
  nb.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    DynBitset r = g.row(i);
    r.reset(i);
    nb.push_back(std::move(r));
  }
  SearchBudget budget(cfg.budget);

  // Search for a K_L-free subset of size K: a K-subset with no L pairwise
  // orthogonal vectors, which is exactly a violation.
  std::vector<std::size_t> chosen;
  DynBitset chosen_mask(n);
  std::function<bool(std::size_t)> find = [&](std::size_t from) -> bool {
    budget.charge();
    if (chosen.size() == K) return true;
    for (std::size_t pos = from; pos < n; ++pos) {
      if (n - pos < K - chosen.size()) break;
      const std::size_t v = ord[pos];
      DynBitset common = chosen_mask;
      common &= nb[v];
      if (contains_clique(nb, common, L - 1, budget)) continue;
      chosen.push_back(v);
      chosen_mask.set(v);
      if (find(pos + 1)) return true;
      chosen.pop_back();
      chosen_mask.reset(v);
    }
    return false;
  };

  if (find(0)) {
    res.pass = false;
    Witness w;
    w.kind = WitnessKind::KlfreeSubset;
    w.indices_1 = chosen;
    std::sort(w.indices_1.begin(), w.indices_1.end());
    res.witness = std::move(w);
  }
  return res;
}

bool witness_revalidates(const VectorSet& vs, const Witness& w,
                         std::uint64_t kl_l) {
  const auto& vecs = vs.vectors();
  const auto in_range = [&](const std::vector<std::size_t>& idx) {
    return std::all_of(idx.begin(), idx.end(),
                       [&](std::size_t i) { return i < vecs.size(); });
  };
  if (!in_range(w.indices_1) || !in_range(w.indices_2)) return false;
  switch (w.kind) {
    case WitnessKind::IndependentSet:
      for (std::size_t a = 0; a < w.indices_1.size(); ++a) {
        for (std::size_t b = a + 1; b < w.indices_1.size(); ++b) {
          if (inner_product(vecs[w.indices_1[a]], vecs[w.indices_1[b]]) == 0) {
            return false;
          }
        }
      }
      return true;
    case WitnessKind::BiIndependentPair:
      for (std::size_t a : w.indices_1) {
        for (std::size_t b : w.indices_2) {
          if (inner_product(vecs[a], vecs[b]) == 0) return false;
        }
      }
      return true;
    case WitnessKind::KlfreeSubset: {
      if (kl_l == 0) return false;  // caller must say what it is free of
      // no kl_l of the listed vectors are pairwise orthogonal
      const std::size_t m = w.indices_1.size();
      std::vector<std::size_t> pick;
      std::function<bool(std::size_t)> any_clique = [&](std::size_t from) {
        if (pick.size() == kl_l) return true;
        for (std::size_t i = from; i < m; ++i) {
          bool ok = true;
          for (std::size_t j : pick) {
            if (inner_product(vecs[w.indices_1[i]], vecs[w.indices_1[j]]) !=
                0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          pick.push_back(i);
          if (any_clique(i + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      return !any_clique(0);
    }
  }
  return false;
}

}  // namespace noset
