// workbench CLI: graphs, counts, construction, verification
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noset/construct.hpp"
#include "noset/counting.hpp"
#include "noset/error.hpp"
#include "noset/graph.hpp"
#include "noset/rng.hpp"
#include "noset/spectral.hpp"
#include "noset/verify.hpp"
#include "noset/version.hpp"

namespace {

using namespace noset;

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  std::string output;  // empty = stdout
  std::string format = "text";
  std::size_t graph_cap = OrthoGraph::kDefaultBuildCap;
};

std::string bool_word(bool b) { return b ? "true" : "false"; }

void emit(const Globals& g, const std::string& content) {
  if (g.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) raise(Errc::Internal, "cannot open output file " + g.output);
  out << content;
  if (!out.flush()) raise(Errc::Internal, "short write to " + g.output);
}

std::ostringstream report_head(const Globals& g, const std::string& command,
                               const std::string& extra) {
  std::ostringstream os;
  os << "# noset " << kVersion << " rng=" << kRngAlgorithm << "\n";
  os << "# config: command=" << command << ' ' << extra << " seed=" << g.seed
     << " budget=" << g.budget << " threads=" << g.threads
     << " format=" << g.format << " output="
     << (g.output.empty() ? "-" : g.output) << "\n";
  return os;
}

int exit_code_for(bool pass) { return pass ? 0 : 1; }

// ---------------------------------------------------------------------------

int run_graph_certify(const Globals& g, std::uint64_t p, std::uint32_t t,
                      double tolerance) {
  const PrimeModulus pm(p);
  const OrthoGraph graph = OrthoGraph::full_graph(pm, t, g.graph_cap);
  const SpectralCertificate cert = certify(graph, pm, t, tolerance);
  std::ostringstream extra;
  extra << "p=" << p << " t=" << t << " tolerance=" << format_real(tolerance)
        << " graph-cap=" << g.graph_cap;
  std::ostringstream os = report_head(g, "graph-certify", extra.str());
  os << "n=" << cert.n_measured << " d=" << cert.d_measured
     << " loops=" << graph.loop_count() << "\n";
  os << "top_eigenvalue=" << format_real(cert.top_eigenvalue)
     << " lambda_empirical=" << format_real(cert.lambda_empirical)
     << " lambda_theory="
     << (cert.lambda_theory ? format_real(*cert.lambda_theory) : "-") << "\n";
  os << "regular=" << bool_word(cert.regular) << "\n";
  os << "verdict=" << (cert.pass ? "pass" : "fail") << "\n";
  emit(g, os.str());
  return exit_code_for(cert.pass);
}

int run_graph_export(const Globals& g, std::uint64_t p, std::uint32_t t) {
  const PrimeModulus pm(p);
  const OrthoGraph graph = OrthoGraph::full_graph(pm, t, g.graph_cap);
  emit(g, graph.export_edge_list());
  return 0;
}

// ---------------------------------------------------------------------------

void describe_params(std::ostringstream& os, const CountReport& rep) {
  os << "params: n=" << rep.params.n;
  if (rep.params.valid()) {
    os << " d=" << rep.params.d << " lambda=" << format_real(rep.params.lambda)
       << " s=" << format_real(rep.params.s());
  }
  os << "\n";
}

void describe_report(std::ostringstream& os, const CountReport& rep,
                     const std::string& label) {
  os << label << ": exact=" << rep.exact.str()
     << " log2=" << format_real(rep.log2_exact);
  if (rep.log2_bound) {
    os << " | " << rep.bound_name << " log2=" << format_real(*rep.log2_bound)
       << " applicable=" << (rep.applicable ? "yes" : "no")
       << " verdict=" << rep.verdict();
  }
  os << "\n";
}

// extra shape-only line pinned to the full-graph closed forms
CountReport with_graph_bound(CountReport rep, const std::string& name,
                             double log2_bound) {
  rep.bound_name = name;
  rep.log2_bound = log2_bound;
  rep.applicable = true;
  rep.shape_only = true;
  return rep;
}

int run_count_bi(const Globals& g, std::uint64_t p, std::uint32_t t,
                 std::uint64_t k, bool include_empty, bool exact_k, double c) {
  const PrimeModulus pm(p);
  const OrthoGraph graph = OrthoGraph::full_graph(pm, t, g.graph_cap);
  const CountConfig cfg{g.budget, g.threads};
  std::ostringstream extra;
  extra << "mode=bi p=" << p << " t=" << t << " k=" << k
        << " include-empty=" << bool_word(include_empty)
        << " exact-k=" << bool_word(exact_k) << " c=" << format_real(c);
  std::ostringstream os = report_head(g, "count", extra.str());

  std::vector<CountReport> lines;
  if (exact_k) {
    lines.push_back(count_bi_independent_exact_k(graph, k, cfg));
  } else {
    lines.push_back(count_bi_independent_le_k(graph, k, include_empty, cfg));
  }
  lines.push_back(
      with_graph_bound(lines.front(), "graph-pair-bound",
                       bound_g_bipartite(p, t, k, c)));

  bool failure = false;
  if (g.format == "tsv") {
    for (const auto& rep : lines) os << rep.tsv_line() << "\n";
  } else {
    describe_params(os, lines.front());
    describe_report(os, lines.front(),
                    exact_k ? "pairs |U1|=|U2|=k"
                            : (include_empty ? "pairs sizes<=k (empty counted)"
                                             : "pairs sizes<=k (empty excluded)"));
    if (!exact_k) {
      // the other empty-set convention, for the record
      const CountReport other =
          count_bi_independent_le_k(graph, k, !include_empty, cfg);
      describe_report(os, other,
                      !include_empty ? "pairs sizes<=k (empty counted)"
                                     : "pairs sizes<=k (empty excluded)");
    }
    describe_report(os, lines.back(), "closed-form (c free)");
  }
  for (const auto& rep : lines) failure = failure || rep.verdict() == "FAILURE";
  emit(g, os.str());
  return failure ? 1 : 0;
}

int run_count_klfree(const Globals& g, std::uint64_t p, std::uint32_t t,
                     std::uint64_t k, std::uint64_t ell, bool include_empty,
                     double c) {
  const PrimeModulus pm(p);
  const OrthoGraph graph = OrthoGraph::full_graph(pm, t, g.graph_cap);
  const CountConfig cfg{g.budget, g.threads};
  std::ostringstream extra;
  extra << "mode=klfree p=" << p << " t=" << t << " k=" << k << " ell=" << ell
        << " include-empty=" << bool_word(include_empty)
        << " c=" << format_real(c);
  std::ostringstream os = report_head(g, "count", extra.str());

  const CountReport rep =
      count_klfree_subsets(graph, k, ell, include_empty, c, cfg);
  const CountReport shaped = with_graph_bound(
      rep, "graph-klfree-bound", bound_g_klfree(p, t, k, c));

  if (g.format == "tsv") {
    os << rep.tsv_line() << "\n" << shaped.tsv_line() << "\n";
  } else {
    describe_params(os, rep);
    describe_report(os, rep,
                    include_empty ? "klfree subsets<=k (empty counted)"
                                  : "klfree subsets<=k (empty excluded)");
    const CountReport other =
        count_klfree_subsets(graph, k, ell, !include_empty, c, cfg);
    describe_report(os, other,
                    !include_empty ? "klfree subsets<=k (empty counted)"
                                   : "klfree subsets<=k (empty excluded)");
    describe_report(os, shaped, "closed-form (c free)");
  }
  emit(g, os.str());
  const bool failure =
      rep.verdict() == "FAILURE" || shaped.verdict() == "FAILURE";
  return failure ? 1 : 0;
}

int run_count_copies(const Globals& g, std::uint64_t p, std::uint32_t t,
                     std::uint64_t ell) {
  const PrimeModulus pm(p);
  const OrthoGraph graph = OrthoGraph::full_graph(pm, t, g.graph_cap);
  const CountConfig cfg{g.budget, g.threads};
  std::ostringstream extra;
  extra << "mode=copies p=" << p << " t=" << t << " ell=" << ell;
  std::ostringstream os = report_head(g, "count", extra.str());

  DynBitset all(graph.size(), true);
  const KlCopies res = count_kl_copies(graph, all, ell, cfg);

  bool identity_pass = true;
  BigUint expected(0);
  if (ell == 2) {
    // degree-sum identity: copies of K_2 = (n d - loops) / 2
    const TheorySpectral th = g_theory(p, t);
    expected = BigUint(th.n * th.d - graph.loop_count());
    expected.div_exact_u32(2);
    identity_pass = res.exact == expected;
  }

  if (g.format == "tsv") {
    os << count_kind_name(CountKind::KlCopies) << '\t' << p << '\t' << t
       << "\t-\t" << ell << '\t' << res.exact.str() << '\t'
       << format_real(res.exact.log2()) << '\t' << "clique-estimate" << '\t'
       << format_real(res.estimate) << '\t' << (ell == 2 ? "yes" : "no")
       << '\t' << (ell == 2 ? (identity_pass ? "pass" : "FAILURE") : "-")
       << "\n";
  } else {
    os << "copies of K_" << ell << " in G(" << p << "," << t
       << "): exact=" << res.exact.str()
       << " estimate=" << format_real(res.estimate)
       << " ratio=" << format_real(res.ratio) << "\n";
    if (ell == 2) {
      os << "degree-sum identity: expected=" << expected.str() << " verdict="
         << (identity_pass ? "pass" : "FAILURE") << "\n";
    }
  }
  emit(g, os.str());
  return identity_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_construct(const Globals& g, std::uint64_t p, std::uint64_t d,
                  std::uint64_t k, std::uint64_t beta_k, std::uint64_t ell,
                  double c, std::uint32_t max_retries,
                  const ParamOverrides& overrides, std::string out_file) {
  if (beta_k > 0) {
    // nearly-orthogonal-pairs surface: sets of size beta_k+1 against sets of
    // size beta_k+1 reduce to the (floor(beta_k/2)+1, 1) instance
    k = beta_k / 2 + 1;
    ell = 1;
  }
  const PrimeModulus pm(p);
  const ConstructionParams params =
      derive_params(pm, d, k, ell, c, g.seed, max_retries, overrides);
  if (out_file.empty()) out_file = "construction.noset";

  std::ostringstream extra;
  extra << "p=" << p << " d=" << d << " k=" << k << " ell=" << ell
        << " c=" << format_real(c) << " t=" << params.t << " m=" << params.m
        << " n=" << params.n << " max-retries=" << max_retries
        << " file=" << out_file;
  std::ostringstream os = report_head(g, "construct", extra.str());
  if (params.t_clamped) {
    os << "warning: t clamped to " << params.t
       << " (the 5ct rule left no admissible t)\n";
  }

  const VerifyConfig vcfg{g.budget};
  const ConstructOutcome outcome = construct_verified(params, vcfg);
  outcome.assembly.set.write_file(out_file);

  for (const auto& f : outcome.report.failures) {
    os << "attempt " << f.retry << ": fail " << f.reason;
    if (f.witness) os << " | " << f.witness->serialize();
    os << "\n";
  }
  os << "attempt " << outcome.report.retries_used << ": pass\n";
  os << "set: file=" << out_file << " size=" << outcome.report.set_size
     << " draws=" << params.n << "\n";
  os << "multiplicities:";
  for (auto m : outcome.report.multiplicities) os << ' ' << m;
  os << "\n";
  os << "exponent=" << format_real(outcome.report.exponent) << "\n";
  os << "retries_used=" << outcome.report.retries_used << "\n";
  os << "verdict=pass\n";
  std::cout << os.str();  // -o names the set file; the report stays on stdout
  return 0;
}

int run_verify(const Globals& g, const std::string& file,
               const std::string& mode, std::uint64_t k, std::uint64_t ell) {
  const VectorSet vs = VectorSet::read_file(file);
  const VerifyConfig cfg{g.budget};
  std::ostringstream extra;
  extra << "file=" << file << " mode=" << mode << " k=" << k;
  if (mode == "kl") extra << " ell=" << ell;
  std::ostringstream os = report_head(g, "verify", extra.str());
  os << "set: p=" << vs.modulus().value() << " d=" << vs.dim()
     << " size=" << vs.size() << "\n";

  CheckResult res;
  if (mode == "alpha") {
    res = check_alpha(vs, k, cfg);
  } else if (mode == "beta") {
    res = check_beta(vs, k, cfg);
  } else if (mode == "kl") {
    res = check_kl(vs, k, ell, cfg);
  } else {
    raise(Errc::InvalidArgument, "mode must be alpha, beta or kl");
  }
  os << "verdict=" << (res.pass ? "pass" : "fail") << "\n";
  if (res.witness) os << res.witness->serialize() << "\n";
  emit(g, os.str());
  return exit_code_for(res.pass);
}

int run_basis(const Globals& g, std::uint64_t p, std::uint64_t d,
              std::string out_file) {
  if (out_file.empty()) out_file = "basis.noset";
  const VectorSet vs = basis_set(PrimeModulus(p), d);
  vs.write_file(out_file);
  std::ostringstream extra;
  extra << "p=" << p << " d=" << d << " file=" << out_file;
  std::ostringstream os = report_head(g, "basis", extra.str());
  os << "set: file=" << out_file << " size=" << vs.size() << "\n";
  std::cout << os.str();  // -o names the set file; the report stays on stdout
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nearly orthogonal sets over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed (echoed in every report)");
  app.add_option("--budget", g.budget, "enumeration/search node budget");
  app.add_option("--threads", g.threads, "worker count for counting enumerators");
  app.add_option("-o,--output", g.output, "output file (default: stdout; set files default to *.noset)");
  app.add_option("--format", g.format, "report format: text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--graph-cap", g.graph_cap, "max p^t when building G(p,t)");

  std::function<int()> action;

  // graph-certify
  {
    auto* sub = app.add_subcommand("graph-certify",
                                   "certify (n,d,lambda) of G(p,t)");
    auto p = std::make_shared<std::uint64_t>(2);
    auto t = std::make_shared<std::uint32_t>(2);
    auto tol = std::make_shared<double>(kDefaultCertTolerance);
    sub->add_option("--p", *p, "prime modulus")->required();
    sub->add_option("--t", *t, "dimension")->required();
    sub->add_option("--tolerance", *tol, "eigenvalue tolerance");
    sub->callback([&, p, t, tol] {
      action = [&, p, t, tol] { return run_graph_certify(g, *p, *t, *tol); };
    });
  }

  // graph-export
  {
    auto* sub = app.add_subcommand("graph-export", "edge list of G(p,t)");
    auto p = std::make_shared<std::uint64_t>(2);
    auto t = std::make_shared<std::uint32_t>(2);
    sub->add_option("--p", *p, "prime modulus")->required();
    sub->add_option("--t", *t, "dimension")->required();
    sub->callback([&, p, t] {
      action = [&, p, t] { return run_graph_export(g, *p, *t); };
    });
  }

  // count
  {
    auto* sub = app.add_subcommand("count", "exact counts vs closed-form bounds");
    sub->require_subcommand(1);
    auto p = std::make_shared<std::uint64_t>(2);
    auto t = std::make_shared<std::uint32_t>(2);
    auto k = std::make_shared<std::uint64_t>(1);
    auto ell = std::make_shared<std::uint64_t>(2);
    auto c = std::make_shared<double>(1.0);
    auto include_empty = std::make_shared<bool>(true);
    auto exact_k = std::make_shared<bool>(false);

    auto* bi = sub->add_subcommand("bi", "bi-independent pairs (U1, U2)");
    bi->add_option("--p", *p, "prime modulus")->required();
    bi->add_option("--t", *t, "dimension")->required();
    bi->add_option("--k", *k, "subset size")->required();
    bi->add_option("--c", *c, "free constant for shape-only bounds");
    bi->add_flag("--include-empty,!--no-include-empty", *include_empty,
                 "count empty sets in size<=k mode (default on)");
    bi->add_flag("--exact-k", *exact_k, "count |U1|=|U2|=k instead of <=k");
    bi->callback([&, p, t, k, c, include_empty, exact_k] {
      action = [&, p, t, k, c, include_empty, exact_k] {
        return run_count_bi(g, *p, *t, *k, *include_empty, *exact_k, *c);
      };
    });

    auto* klf = sub->add_subcommand("klfree", "K_ell-free subsets of size<=k");
    klf->add_option("--p", *p, "prime modulus")->required();
    klf->add_option("--t", *t, "dimension")->required();
    klf->add_option("--k", *k, "subset size cap")->required();
    klf->add_option("--ell", *ell, "clique size")->required();
    klf->add_option("--c", *c, "free constant for shape-only bounds");
    klf->add_flag("--include-empty,!--no-include-empty", *include_empty,
                  "count the empty subset (default on)");
    klf->callback([&, p, t, k, ell, c, include_empty] {
      action = [&, p, t, k, ell, c, include_empty] {
        return run_count_klfree(g, *p, *t, *k, *ell, *include_empty, *c);
      };
    });

    auto* cp = sub->add_subcommand("copies", "copies of K_ell on the full vertex set");
    cp->add_option("--p", *p, "prime modulus")->required();
    cp->add_option("--t", *t, "dimension")->required();
    cp->add_option("--ell", *ell, "clique size (2..4)")->required();
    cp->callback([&, p, t, ell] {
      action = [&, p, t, ell] { return run_count_copies(g, *p, *t, *ell); };
    });
  }

  // construct
  {
    auto* sub = app.add_subcommand(
        "construct", "sample, tensorize and verify a nearly orthogonal set");
    auto p = std::make_shared<std::uint64_t>(2);
    auto d = std::make_shared<std::uint64_t>(4);
    auto k = std::make_shared<std::uint64_t>(2);
    auto beta_k = std::make_shared<std::uint64_t>(0);
    auto ell = std::make_shared<std::uint64_t>(1);
    auto c = std::make_shared<double>(1.0);
    auto retries = std::make_shared<std::uint32_t>(100);
    auto t = std::make_shared<std::uint32_t>(0);
    auto m = std::make_shared<std::uint32_t>(0);
    auto n = std::make_shared<std::uint64_t>(0);
    sub->add_option("--p", *p, "prime modulus")->required();
    sub->add_option("--d", *d, "ambient dimension")->required();
    auto* kopt = sub->add_option("--k", *k, "subset size (clique property)");
    sub->add_option("--beta-k", *beta_k,
                    "pairs property at size beta-k+1; maps to k=floor(beta-k/2)+1, ell=1")
        ->excludes(kopt);
    sub->add_option("--ell", *ell, "orthogonal vectors demanded per k-subset");
    sub->add_option("--c", *c, "free constant in the t rule");
    sub->add_option("--max-retries", *retries, "sampling attempts before giving up");
    sub->add_option("--t", *t, "override component dimension");
    sub->add_option("--m", *m, "override tensor factor count");
    sub->add_option("--n", *n, "override draw count");
    sub->callback([&, p, d, k, beta_k, ell, c, retries, t, m, n] {
      action = [&, p, d, k, beta_k, ell, c, retries, t, m, n] {
        ParamOverrides ov;
        if (*t > 0) ov.t = *t;
        if (*m > 0) ov.m = *m;
        if (*n > 0) ov.n = *n;
        return run_construct(g, *p, *d, *k, *beta_k, *ell, *c, *retries, ov,
                             g.output);
      };
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify", "decide a predicate over a set file");
    auto file = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>();
    auto k = std::make_shared<std::uint64_t>(1);
    auto ell = std::make_shared<std::uint64_t>(1);
    sub->add_option("--file", *file, "NOSET input file")->required();
    sub->add_option("--mode", *mode, "alpha, beta or kl")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "kl"}));
    sub->add_option("--k", *k, "predicate parameter")->required();
    sub->add_option("--ell", *ell, "clique size (kl mode)");
    sub->callback([&, file, mode, k, ell] {
      action = [&, file, mode, k, ell] {
        return run_verify(g, *file, *mode, *k, *ell);
      };
    });
  }

  // basis
  {
    auto* sub = app.add_subcommand("basis", "standard basis set of F_p^d");
    auto p = std::make_shared<std::uint64_t>(2);
    auto d = std::make_shared<std::uint64_t>(4);
    sub->add_option("--p", *p, "prime modulus")->required();
    sub->add_option("--d", *d, "dimension")->required();
    sub->callback([&, p, d] {
      action = [&, p, d] { return run_basis(g, *p, *d, g.output); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const noset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
