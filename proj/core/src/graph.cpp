#include "noset/graph.hpp"

#include <algorithm>
#include <sstream>

#include "noset/error.hpp"

namespace noset {

std::size_t checked_pow(std::uint64_t p, std::uint32_t t, std::size_t cap) {
  std::size_t out = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    if (out > cap / p) {
      raise(Errc::SizeCapExceeded,
            "p^t exceeds build cap " + std::to_string(cap));
    }
    out *= p;
  }
  if (out > cap) {
    raise(Errc::SizeCapExceeded,
          "p^t exceeds build cap " + std::to_string(cap));
  }
  return out;
}

OrthoGraph OrthoGraph::from_labels(std::vector<FieldVector> labels) {
  OrthoGraph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.rows_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (inner_product(g.labels_[i], g.labels_[j]) == 0) {
        g.rows_[i].set(j);
        g.rows_[j].set(i);
        if (i == j) ++g.loop_count_;
      }
    }
  }
  return g;
}

OrthoGraph OrthoGraph::full_graph(PrimeModulus p, std::uint32_t t,
                                  std::size_t cap) {
  if (t == 0) raise(Errc::InvalidArgument, "dimension t must be >= 1");
  const std::size_t total = checked_pow(p.value(), t, cap);
  std::vector<FieldVector> labels;
  labels.reserve(total - 1);
  // Odometer over base-p digits; first coordinate is the most significant,
  // so increments from the last coordinate yield lexicographic order.
  std::vector<std::uint32_t> digits(t, 0);
  const auto pv = static_cast<std::uint32_t>(p.value());
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::size_t pos = t;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < pv) break;
      digits[pos] = 0;
    }
    labels.emplace_back(p, digits);
  }
  OrthoGraph g = from_labels(std::move(labels));
  g.full_params_ = {p.value(), t};
  return g;
}

OrthoGraph OrthoGraph::induced(std::span<const FieldVector> vectors) {
  if (vectors.empty()) raise(Errc::EmptyInput, "induced graph needs vectors");
  const auto& first = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].modulus().value() != first.modulus().value()) {
      raise(Errc::ModulusMismatch, "mixed moduli in vertex set");
    }
    if (vectors[i].dim() != first.dim()) {
      raise(Errc::DimensionMismatch, "mixed dimensions in vertex set");
    }
  }
  std::vector<FieldVector> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    raise(Errc::DuplicateVector, "duplicate vertex in induced graph");
  }
  return from_labels(std::vector<FieldVector>(vectors.begin(), vectors.end()));
}

std::vector<std::size_t> OrthoGraph::degrees() const {
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = rows_[i].count();
  return out;
}

std::string OrthoGraph::export_edge_list() const {
  std::ostringstream os;
  os << "GRAPH n=" << size() << " loops=" << loop_count_ << "\n";
  for (std::size_t i = 0; i < size(); ++i) {
    if (loop_at(i)) os << i << ' ' << i << "\n";
    for (std::size_t j = rows_[i].next(i + 1); j < size();
         j = rows_[i].next(j + 1)) {
      os << i << ' ' << j << "\n";
    }
  }
  return os.str();
}

}  // namespace noset
