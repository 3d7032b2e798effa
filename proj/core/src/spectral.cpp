#include "noset/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "noset/error.hpp"

namespace noset {

namespace {

constexpr double kOffDiagTol = 1e-12;  // Frobenius norm of off-diagonal part
constexpr int kMaxSweeps = 100;

double offdiag_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s += 2.0 * a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  if (n == 0) raise(Errc::EmptyInput, "empty matrix");
  if (a.size() != n * n) {
    raise(Errc::DimensionMismatch, "matrix storage is not n*n");
  }
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (offdiag_norm(a, n) <= kOffDiagTol) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e154) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
  }
  if (!converged && offdiag_norm(a, n) > kOffDiagTol) {
    raise(Errc::NoConvergence, "Jacobi sweeps did not converge");
  }
  std::vector<double> evals(n);
  for (std::size_t i = 0; i < n; ++i) evals[i] = a[i * n + i];
  std::sort(evals.begin(), evals.end());
  return evals;
}

std::vector<double> spectrum(const OrthoGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) {
    raise(Errc::SolverCapExceeded,
          "graph order " + std::to_string(n) + " exceeds eigensolver cap " +
              std::to_string(cap));
  }
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const DynBitset& row = g.row(i);
    for (std::size_t j = row.next(0); j < n; j = row.next(j + 1)) {
      a[i * n + j] = 1.0;
    }
  }
  return jacobi_eigenvalues(std::move(a), n);
}

TheorySpectral g_theory(std::uint64_t p, std::uint32_t t) {
  if (t == 0) raise(Errc::InvalidArgument, "dimension t must be >= 1");
  TheorySpectral th;
  std::uint64_t pt = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    if (pt > UINT64_MAX / p) raise(Errc::InvalidArgument, "p^t overflows");
    pt *= p;
    if (i + 2 == t) th.d = pt - 1;
  }
  th.n = pt - 1;
  if (t == 1) th.d = 0;
  th.lambda =
      static_cast<double>(p - 1) * std::pow(static_cast<double>(p),
                                            static_cast<double>(t) / 2.0 - 1.0);
  return th;
}

SpectralCertificate evaluate_certificate(
    const std::vector<std::size_t>& degrees,
    const std::vector<double>& eigenvalues,
    const std::optional<TheorySpectral>& theory, double tolerance) {
  if (degrees.empty() || eigenvalues.size() != degrees.size()) {
    raise(Errc::DimensionMismatch, "degree and eigenvalue counts differ");
  }
  SpectralCertificate cert;
  cert.tolerance = tolerance;
  cert.n_measured = degrees.size();
  cert.regular = std::all_of(degrees.begin(), degrees.end(),
                             [&](std::size_t d) { return d == degrees[0]; });
  cert.d_measured = cert.regular
                        ? degrees[0]
                        : *std::max_element(degrees.begin(), degrees.end());
  cert.top_eigenvalue = eigenvalues.back();
  // Drop exactly one copy of the largest eigenvalue (it can repeat at tiny
  // scale), then take the largest remaining magnitude.
  cert.lambda_empirical =
      eigenvalues.size() == 1
          ? 0.0
          : std::max(std::abs(eigenvalues.front()),
                     std::abs(eigenvalues[eigenvalues.size() - 2]));
  cert.pass = cert.regular;
  if (theory) {
    cert.lambda_theory = theory->lambda;
    cert.pass = cert.pass && cert.n_measured == theory->n &&
                cert.d_measured == theory->d &&
                cert.lambda_empirical <= theory->lambda + tolerance;
  }
  return cert;
}

SpectralCertificate certify(const OrthoGraph& g, PrimeModulus p,
                            std::uint32_t t, double tolerance,
                            std::size_t cap) {
  return evaluate_certificate(g.degrees(), spectrum(g, cap),
                              g_theory(p.value(), t), tolerance);
}

ShrinkCheck lemma_shrink_check(const OrthoGraph& g, const DynBitset& b,
                               const SpectralCertificate& cert) {
  if (b.size() != g.size()) {
    raise(Errc::BadSubset, "B must be a subset of the vertex set");
  }
  if (!cert.pass) {
    raise(Errc::InvalidArgument, "need a passing spectral certificate");
  }
  if (cert.d_measured == 0) {
    raise(Errc::InvalidArgument, "shrinkage lemma needs degree >= 1");
  }
  const double n = static_cast<double>(g.size());
  const double d = static_cast<double>(cert.d_measured);
  const double lambda = cert.lambda_theory.value_or(cert.lambda_empirical);
  ShrinkCheck out;
  out.b_size = b.count();
  const double threshold =
      d / (2.0 * n) * static_cast<double>(out.b_size);
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (static_cast<double>(DynBitset::and_count(g.row(u), b)) <= threshold) {
      ++out.c_size;
    }
  }
  const double rhs = 2.0 * lambda * n / d;
  out.bound = rhs * rhs;
  out.pass = static_cast<double>(out.b_size) * static_cast<double>(out.c_size) <=
             out.bound;
  return out;
}

}  // namespace noset
