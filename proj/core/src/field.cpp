#include "noset/field.hpp"

#include <string>

#include "noset/error.hpp"

namespace noset {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p > 0xffffffffULL)
    raise(Errc::NotPrime, "modulus " + std::to_string(p) + " out of supported range");
  if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

FieldVector::FieldVector(PrimeModulus modulus, std::vector<std::uint32_t> coords)
    : modulus_(modulus), coords_(std::move(coords)) {
  if (coords_.empty()) raise(Errc::InvalidArgument, "vector dimension must be >= 1");
  for (auto c : coords_)
    if (c >= modulus_.value())
      raise(Errc::InvalidArgument,
            "coordinate " + std::to_string(c) + " is not a canonical residue mod " +
                std::to_string(modulus_.value()));
}

std::uint32_t inner_product(const FieldVector& u, const FieldVector& v) {
  if (!(u.modulus() == v.modulus()))
    raise(Errc::ModulusMismatch, "inner_product over different moduli");
  if (u.dim() != v.dim())
    raise(Errc::DimensionMismatch, "inner_product of dims " + std::to_string(u.dim()) +
                                       " and " + std::to_string(v.dim()));
  const std::uint64_t p = u.modulus().value();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i)
    acc = (acc + static_cast<std::uint64_t>(u[i]) * v[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

bool is_self_orthogonal(const FieldVector& u) { return inner_product(u, u) == 0; }

FieldVector tensor_product(std::span<const FieldVector> factors) {
  if (factors.empty()) raise(Errc::EmptyInput, "tensor_product of no factors");
  const PrimeModulus p = factors[0].modulus();
  for (const auto& f : factors)
    if (!(f.modulus() == p)) raise(Errc::ModulusMismatch, "tensor_product over different moduli");

  std::size_t out_dim = 1;
  for (const auto& f : factors) {
    if (out_dim > (std::size_t{1} << 31) / f.dim())
      raise(Errc::SizeCapExceeded, "tensor product dimension overflow");
    out_dim *= f.dim();
  }

  const std::uint64_t mod = p.value();
  std::vector<std::uint32_t> out(factors[0].coords().begin(), factors[0].coords().end());
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const auto& f = factors[j];
    std::vector<std::uint32_t> nxt(out.size() * f.dim());
    std::size_t pos = 0;
    for (std::uint32_t a : out)
      for (std::uint32_t b : f.coords())
        nxt[pos++] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % mod);
    out = std::move(nxt);
  }
  return FieldVector(p, std::move(out));
}

FieldVector sample_vector(PrimeModulus p, std::size_t t, SplitMix64& rng) {
  if (t == 0) raise(Errc::InvalidArgument, "dimension must be >= 1");
  std::vector<std::uint32_t> coords(t);
  for (auto& c : coords) c = static_cast<std::uint32_t>(rng.below(p.value()));
  return FieldVector(p, std::move(coords));
}

FieldVector sample_nso_vector(PrimeModulus p, std::size_t t, SplitMix64& rng) {
  constexpr std::uint64_t kRejectionCap = 1'000'000;
  for (std::uint64_t i = 0; i < kRejectionCap; ++i) {
    FieldVector v = sample_vector(p, t, rng);
    if (!is_self_orthogonal(v)) return v;
  }
  raise(Errc::SamplerStuck, "rejection sampler exceeded 10^6 draws");
}

}  // namespace noset
