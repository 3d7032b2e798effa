#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "noset/field.hpp"
#include "noset/vector_set.hpp"
#include "support/cli_runner.hpp"

namespace fs = std::filesystem;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto nl = s.find('\n', pos);
    if (nl == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("report head carries version, rng and full config echo") {
  auto r = cli::run("graph-certify --p 2 --t 3");
  REQUIRE(r.exit == 0);
  CHECK(r.err.empty());
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() >= 2);
  CHECK(contains(ls[0], "# noset "));
  CHECK(contains(ls[0], "rng=splitmix64"));
  CHECK(contains(ls[1], "# config: command=graph-certify"));
  CHECK(contains(ls[1], "seed=0"));
  CHECK(contains(ls[1], "budget=100000000"));
  CHECK(contains(ls[1], "threads=1"));
  CHECK(contains(ls[1], "format=text"));
  CHECK(contains(ls[1], "output=-"));
}

TEST_CASE("graph-certify passes on G(2,3) and reports the parameters") {
  auto r = cli::run("graph-certify --p 2 --t 3");
  CHECK(r.exit == 0);
  CHECK(r.err.empty());
  CHECK(contains(r.out, "n=7 d=3"));
  CHECK(contains(r.out, "verdict=pass"));
}

TEST_CASE("composite modulus is a usage error on stderr, exit 2") {
  auto r = cli::run("graph-certify --p 4 --t 2");
  CHECK(r.exit == 2);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "not prime"));
}

TEST_CASE("graph cap is enforced and adjustable") {
  auto r = cli::run("graph-certify --p 2 --t 17");
  CHECK(r.exit == 2);
  CHECK(contains(r.err, "cap"));
  auto r2 = cli::run("graph-export --p 2 --t 8 --graph-cap 100");
  CHECK(r2.exit == 2);
  auto r3 = cli::run("graph-export --p 2 --t 8 --graph-cap 300");
  CHECK(r3.exit == 0);
  CHECK(contains(r3.out, "GRAPH n=255"));
}

TEST_CASE("graph-export emits the documented edge list") {
  auto r = cli::run("graph-export --p 2 --t 2");
  CHECK(r.exit == 0);
  CHECK(r.out == "GRAPH n=3 loops=1\n0 1\n2 2\n");
  CHECK(r.err.empty());
}

TEST_CASE("count bi shows both empty-set conventions in text mode") {
  auto r = cli::run("count bi --p 2 --t 2 --k 1");
  CHECK(r.exit == 0);
  CHECK(r.err.empty());
  CHECK(contains(r.out, "exact=13"));
  CHECK(contains(r.out, "exact=6"));
  CHECK(contains(r.out, "(empty counted)"));
  CHECK(contains(r.out, "(empty excluded)"));
}

TEST_CASE("count bi tsv emits one row per report line") {
  auto r = cli::run("--format tsv count bi --p 2 --t 2 --k 1");
  REQUIRE(r.exit == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() >= 4);  // two config comments + count + graph bound
  const auto& row = ls[2];
  CHECK(contains(row, "bi_independent_pairs_le_k"));
  CHECK(contains(row, "\t13\t"));
  const auto& shaped = ls[3];
  CHECK(contains(shaped, "graph-pair-bound"));
  CHECK(contains(shaped, "shape-"));
}

TEST_CASE("count bi respects --no-include-empty and --exact-k") {
  auto r = cli::run("--format tsv count bi --p 2 --t 2 --k 1 --no-include-empty");
  CHECK(contains(lines_of(r.out)[2], "\t6\t"));
  auto r2 = cli::run("--format tsv count bi --p 2 --t 2 --k 1 --exact-k");
  CHECK(contains(lines_of(r2.out)[2], "bi_independent_pairs_exact_k"));
  CHECK(contains(lines_of(r2.out)[2], "\t6\t"));
}

TEST_CASE("count klfree worked example") {
  auto r = cli::run("count klfree --p 2 --t 2 --k 2 --ell 2");
  CHECK(r.exit == 0);
  CHECK(contains(r.out, "exact=6"));
  CHECK(contains(r.out, "exact=5"));
}

TEST_CASE("count copies: identity line and ratio on G(2,3)") {
  auto r = cli::run("count copies --p 2 --t 3 --ell 2");
  CHECK(r.exit == 0);
  CHECK(contains(r.out, "exact=9"));
  CHECK(contains(r.out, "estimate=10.5"));
  CHECK(contains(r.out, "degree-sum identity: expected=9 verdict=pass"));
  auto r3 = cli::run("count copies --p 2 --t 4 --ell 3");
  CHECK(r3.exit == 0);
  CHECK(contains(r3.out, "exact=35"));
}

TEST_CASE("construct writes the set file and reports on stdout") {
  const auto dir = cli::scratch_dir();
  const auto file = (dir / "c.noset").string();
  auto r = cli::run("--seed 12345 -o " + file +
                    " construct --p 2 --d 4 --k 4 --ell 2 --t 2 --m 2 --n 4");
  REQUIRE(r.exit == 0);
  CHECK(r.err.empty());
  CHECK(contains(r.out, "verdict=pass"));
  CHECK(contains(r.out, "file=" + file));
  REQUIRE(fs::exists(file));

  // the file round-trips and re-verifies through the CLI
  auto v1 = cli::run("verify --file " + file + " --mode kl --k 4 --ell 2");
  CHECK(v1.exit == 0);
  CHECK(contains(v1.out, "verdict=pass"));
  auto v2 = cli::run("verify --file " + file + " --mode beta --k 6");
  CHECK(v2.exit == 0);

  // determinism: the same seed writes identical bytes
  const auto file2 = (dir / "c2.noset").string();
  auto r2 = cli::run("--seed 12345 -o " + file2 +
                     " construct --p 2 --d 4 --k 4 --ell 2 --t 2 --m 2 --n 4");
  REQUIRE(r2.exit == 0);
  CHECK(cli::slurp(file) == cli::slurp(file2));
}

TEST_CASE("construct --beta-k maps onto (k, ell) = (floor/2+1, 1)") {
  const auto dir = cli::scratch_dir();
  const auto file = (dir / "beta.noset").string();
  auto r = cli::run("--seed 3 -o " + file + " construct --p 2 --d 4 --beta-k 5");
  REQUIRE(r.exit == 0);
  CHECK(contains(r.out, "k=3"));
  CHECK(contains(r.out, "ell=1"));
  auto bad = cli::run("construct --p 2 --d 4 --k 3 --beta-k 5");
  CHECK(bad.exit == 2);  // mutually exclusive options
}

TEST_CASE("construct surfaces the t-clamp warning") {
  const auto dir = cli::scratch_dir();
  const auto file = (dir / "clamp.noset").string();
  auto r = cli::run("--seed 1 -o " + file + " construct --p 2 --d 4 --k 3 --ell 1");
  REQUIRE(r.exit == 0);
  CHECK(contains(r.out, "warning: t clamped to 1"));
}

TEST_CASE("verify failure exits 1 with a re-checkable witness") {
  const auto dir = cli::scratch_dir();
  const auto file = dir / "pair.noset";
  {
    std::ofstream out(file);
    out << "NOSET p=3 d=2 count=2\n# provenance: manual\n1 0\n1 1\n";
  }
  auto r = cli::run("verify --file " + file.string() + " --mode alpha --k 1");
  CHECK(r.exit == 1);
  CHECK(r.err.empty());  // a clean negative verdict is not an error
  CHECK(contains(r.out, "verdict=fail"));
  CHECK(contains(r.out, "WITNESS kind=independent_set A1=0,1"));
  // the named rows really are non-orthogonal
  auto vs = noset::VectorSet::read_file(file);
  CHECK(noset::inner_product(vs[0], vs[1]) != 0);
}

TEST_CASE("verify rejects malformed files with the offending row, exit 2") {
  const auto dir = cli::scratch_dir();
  const auto file = dir / "bad.noset";
  {
    std::ofstream out(file);
    out << "NOSET p=2 d=2 count=1\n# provenance: manual\n1 1\n";
  }
  auto r = cli::run("verify --file " + file.string() + " --mode alpha --k 1");
  CHECK(r.exit == 2);
  CHECK(contains(r.err, "row 1"));
  auto r2 = cli::run("verify --file " + (dir / "missing.noset").string() +
                     " --mode alpha --k 1");
  CHECK(r2.exit == 2);
}

TEST_CASE("basis then verify alpha k=1 passes: the baseline workflow") {
  const auto dir = cli::scratch_dir();
  const auto file = (dir / "basis.noset").string();
  auto r = cli::run("-o " + file + " basis --p 3 --d 6");
  REQUIRE(r.exit == 0);
  CHECK(contains(r.out, "size=6"));
  auto v = cli::run("verify --file " + file + " --mode alpha --k 1");
  CHECK(v.exit == 0);
  CHECK(contains(v.out, "verdict=pass"));
}

TEST_CASE("-o writes reports to the named file, stdout stays empty") {
  const auto dir = cli::scratch_dir();
  const auto file = (dir / "report.txt").string();
  auto r = cli::run("-o " + file + " graph-certify --p 2 --t 2");
  CHECK(r.exit == 0);
  CHECK(r.out.empty());
  CHECK(contains(cli::slurp(file), "verdict=pass"));
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(cli::run("count bi --p 2 --t 2").exit == 2);       // missing --k
  CHECK(cli::run("squash --p 2").exit == 2);               // unknown subcommand
  CHECK(cli::run("").exit == 2);                           // subcommand required
  CHECK(cli::run("--format yaml graph-export --p 2 --t 2").exit == 2);
  CHECK(cli::run("--help").exit == 0);
  CHECK(cli::run("count --help").exit == 0);
}

TEST_CASE("verify --mode rejects unknown modes") {
  const auto dir = cli::scratch_dir();
  const auto file = dir / "one.noset";
  {
    std::ofstream out(file);
    out << "NOSET p=3 d=1 count=1\n# provenance: manual\n1\n";
  }
  CHECK(cli::run("verify --file " + file.string() + " --mode gamma --k 1").exit == 2);
}

TEST_CASE("threads flag leaves counts unchanged") {
  auto a = cli::run("--format tsv count bi --p 3 --t 2 --k 2");
  auto b = cli::run("--threads 4 --format tsv count bi --p 3 --t 2 --k 2");
  // identical data rows; only the config echo differs
  CHECK(lines_of(a.out)[2] == lines_of(b.out)[2]);
  CHECK(lines_of(a.out)[3] == lines_of(b.out)[3]);
}

TEST_CASE("tiny budget is reported as an error, exit 2") {
  auto r = cli::run("--budget 3 count bi --p 2 --t 4 --k 4");
  CHECK(r.exit == 2);
  CHECK(contains(r.err, "budget"));
}

}  // TEST_SUITE("cli")
