#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "noset/graph.hpp"

namespace noset {

inline constexpr std::size_t kDefaultSpectrumCap = 4096;
inline constexpr double kDefaultCertTolerance = 1e-6;

/// Eigenvalues of a dense symmetric matrix (row-major n x n, consumed as
/// scratch) by cyclic Jacobi rotations, iterated until the off-diagonal
/// Frobenius norm drops below 1e-12. Sorted ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

/// All eigenvalues of the adjacency matrix (diagonal 1 at loops).
std::vector<double> spectrum(const OrthoGraph& g,
                             std::size_t cap = kDefaultSpectrumCap);

/// Closed-form parameters of G(p,t): n = p^t - 1, d = p^{t-1} - 1,
/// lambda = (p-1) p^{t/2-1}.
struct TheorySpectral {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  double lambda = 0.0;
};
TheorySpectral g_theory(std::uint64_t p, std::uint32_t t);

struct SpectralCertificate {
  std::uint64_t n_measured = 0;
  std::uint64_t d_measured = 0;  // common degree if regular, else max degree
  std::optional<double> lambda_theory;
  double lambda_empirical = 0.0;  // max |mu| after dropping one copy of the top
  double top_eigenvalue = 0.0;
  bool regular = false;
  bool pass = false;
  double tolerance = kDefaultCertTolerance;
};

/// Pure evaluation: measured degrees + sorted eigenvalues vs. theory. Pass
/// requires regularity, exact n and d match, and
/// lambda_empirical <= lambda_theory + tolerance; without theory (induced
/// graphs) only regularity is demanded.
SpectralCertificate evaluate_certificate(
    const std::vector<std::size_t>& degrees,
    const std::vector<double>& eigenvalues,
    const std::optional<TheorySpectral>& theory, double tolerance);

/// Certify g against the G(p,t) parameters.
SpectralCertificate certify(const OrthoGraph& g, PrimeModulus p,
                            std::uint32_t t,
                            double tolerance = kDefaultCertTolerance,
                            std::size_t cap = kDefaultSpectrumCap);

/// |B| * |C| <= (2 lambda n / d)^2 where C is the set of vertices with at
/// most (d/2n)|B| neighbors inside B (loops put a vertex in its own
/// neighborhood).
struct ShrinkCheck {
  std::size_t b_size = 0;
  std::size_t c_size = 0;
  double bound = 0.0;
  bool pass = false;
};
ShrinkCheck lemma_shrink_check(const OrthoGraph& g, const DynBitset& b,
                               const SpectralCertificate& cert);

}  // namespace noset
