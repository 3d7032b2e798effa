#include "noset/vector_set.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "noset/error.hpp"

namespace noset {

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) raise(Errc::Internal, "to_chars failed");
  return std::string(buf, ptr);
}

VectorSet VectorSet::create(PrimeModulus p, std::size_t dim, std::vector<FieldVector> vectors,
                            Provenance provenance) {
  if (dim == 0) raise(Errc::InvalidArgument, "dimension must be >= 1");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (!(v.modulus() == p))
      raise(Errc::ModulusMismatch, "row " + std::to_string(i + 1) + " has a different modulus");
    if (v.dim() != dim)
      raise(Errc::DimensionMismatch, "row " + std::to_string(i + 1) + " has dim " +
                                         std::to_string(v.dim()) + ", expected " +
                                         std::to_string(dim));
    if (is_self_orthogonal(v))
      raise(Errc::SelfOrthogonalVector, "self-orthogonal vector at row " + std::to_string(i + 1));
  }
  std::sort(vectors.begin(), vectors.end());
  for (std::size_t i = 1; i < vectors.size(); ++i)
    if (vectors[i] == vectors[i - 1]) raise(Errc::DuplicateVector, "duplicate vector in set");
  return VectorSet(p, dim, std::move(vectors), provenance);
}

std::string VectorSet::to_text() const {
  std::ostringstream os;
  os << "NOSET p=" << modulus_.value() << " d=" << dim_ << " count=" << vectors_.size() << '\n';
  if (provenance_.kind == Provenance::Kind::Manual) {
    os << "# provenance: manual\n";
  } else {
    os << "# provenance: seed=" << provenance_.seed << " t=" << provenance_.t
       << " m=" << provenance_.m << " n=" << provenance_.n << " k=" << provenance_.k
       << " ell=" << provenance_.ell << " c=" << format_real(provenance_.c)
       << " retry=" << provenance_.retry << '\n';
  }
  for (const auto& v : vectors_) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (i) os << ' ';
      os << v[i];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    raise(Errc::ParseError, std::string("bad ") + what + " value '" + std::string(s) + "'");
  return v;
}

double parse_f64(std::string_view s, const char* what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    raise(Errc::ParseError, std::string("bad ") + what + " value '" + std::string(s) + "'");
  return v;
}

/// "key=value" with the expected key.
std::string_view expect_kv(std::string_view token, std::string_view key) {
  if (token.size() < key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=')
    raise(Errc::ParseError, "expected '" + std::string(key) + "=...', got '" +
                                std::string(token) + "'");
  return token.substr(key.size() + 1);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

VectorSet VectorSet::parse_text(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) raise(Errc::ParseError, "empty input");

  auto header = split_ws(lines[0]);
  if (header.size() != 4 || header[0] != "NOSET")
    raise(Errc::ParseError, "bad header line '" + lines[0] + "'");
  const std::uint64_t p_val = parse_u64(expect_kv(header[1], "p"), "p");
  const std::uint64_t dim = parse_u64(expect_kv(header[2], "d"), "d");
  const std::uint64_t count = parse_u64(expect_kv(header[3], "count"), "count");
  PrimeModulus p(p_val);
  if (dim == 0) raise(Errc::ParseError, "d must be >= 1");

  if (lines.size() < 2) raise(Errc::ParseError, "missing provenance line");
  Provenance prov;
  {
    const std::string& l = lines[1];
    constexpr std::string_view prefix = "# provenance: ";
    if (l.rfind(prefix, 0) != 0) raise(Errc::ParseError, "bad provenance line '" + l + "'");
    std::string_view rest = std::string_view(l).substr(prefix.size());
    if (rest == "manual") {
      prov = Provenance::manual();
    } else {
      auto kv = split_ws(rest);
      if (kv.size() != 8) raise(Errc::ParseError, "bad provenance line '" + l + "'");
      prov.kind = Provenance::Kind::Constructed;
      prov.seed = parse_u64(expect_kv(kv[0], "seed"), "seed");
      prov.t = static_cast<std::uint32_t>(parse_u64(expect_kv(kv[1], "t"), "t"));
      prov.m = static_cast<std::uint32_t>(parse_u64(expect_kv(kv[2], "m"), "m"));
      prov.n = parse_u64(expect_kv(kv[3], "n"), "n");
      prov.k = parse_u64(expect_kv(kv[4], "k"), "k");
      prov.ell = parse_u64(expect_kv(kv[5], "ell"), "ell");
      prov.c = parse_f64(expect_kv(kv[6], "c"), "c");
      prov.retry = static_cast<std::uint32_t>(parse_u64(expect_kv(kv[7], "retry"), "retry"));
    }
  }

  // Data rows. Trailing blank lines are tolerated; anything else is an error.
  std::vector<FieldVector> rows;
  rows.reserve(count);
  std::size_t row_no = 0;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const std::string& l = lines[li];
    if (l.empty()) {
      for (std::size_t lj = li; lj < lines.size(); ++lj)
        if (!lines[lj].empty()) raise(Errc::ParseError, "blank line inside data section");
      break;
    }
    ++row_no;
    if (row_no > count) raise(Errc::ParseError, "more rows than declared count");
    auto toks = split_ws(l);
    if (toks.size() != dim)
      raise(Errc::ParseError, "row " + std::to_string(row_no) + " has " +
                                  std::to_string(toks.size()) + " entries, expected " +
                                  std::to_string(dim));
    std::vector<std::uint32_t> coords(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::uint64_t r = parse_u64(toks[i], "residue");
      if (r >= p.value())
        raise(Errc::ParseError, "row " + std::to_string(row_no) + ": residue " +
                                    std::to_string(r) + " >= p");
      coords[i] = static_cast<std::uint32_t>(r);
    }
    FieldVector v(p, std::move(coords));
    if (is_self_orthogonal(v))
      raise(Errc::SelfOrthogonalVector,
            "self-orthogonal vector at row " + std::to_string(row_no));
    rows.push_back(std::move(v));
  }
  if (row_no != count)
    raise(Errc::ParseError, "declared count=" + std::to_string(count) + " but found " +
                                std::to_string(row_no) + " rows");

  // Duplicate detection with input row numbers, before canonical sorting.
  {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows[a] < rows[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (rows[order[i]] == rows[order[i - 1]])
        raise(Errc::DuplicateVector,
              "duplicate row " + std::to_string(std::max(order[i], order[i - 1]) + 1));
  }

  return create(p, dim, std::move(rows), prov);
}

void VectorSet::write_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::ParseError, "cannot open " + path.string() + " for writing");
  out << to_text();
  if (!out) raise(Errc::ParseError, "failed writing " + path.string());
}

VectorSet VectorSet::read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

}  // namespace noset
