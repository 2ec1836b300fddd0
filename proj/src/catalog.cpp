#include "latgate/catalog.hpp"

#include <charconv>
#include <map>

#include "latgate/error.hpp"

namespace latgate {
namespace {

GramMatrix e8() {
  static constexpr int kCartan[8][8] = {
      {2, 0, -1, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0},
      {-1, 0, 2, -1, 0, 0, 0, 0}, {0, -1, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, 0, 0, -1, 2},
  };
  std::vector<std::vector<Integer>> rows(8, std::vector<Integer>(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) rows[i][j] = kCartan[i][j];
  }
  return GramMatrix::from_rows(rows);
}

GramMatrix from_doubled_basis(std::vector<std::vector<Integer>> const& b) {
  std::size_t const n = b.size();
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer dot = 0;
      for (std::size_t c = 0; c < b[i].size(); ++c) dot += b[i][c] * b[j][c];
      if (dot % 4 != 0) {
        throw Error(ErrorCode::kInvalidParameter, "non-integral basis");
      }
      rows[i][j] = dot / 4;
    }
  }
  return GramMatrix::from_rows(rows);
}

// Simple roots e_i - e_{i+1} (i < n-1) and e_{n-1} + e_n.
GramMatrix dn(int n) {
  std::vector<std::vector<Integer>> basis;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Integer> v(n);
    v[i] = 2;
    v[i + 1] = -2;
    basis.push_back(v);
  }
  std::vector<Integer> last(n);
  last[n - 2] = 2;
  last[n - 1] = 2;
  basis.push_back(last);
  return from_doubled_basis(basis);
}

int parse_positive(std::string_view text, std::string_view id) {
  int value = 0;
  auto const* end = text.data() + text.size();
  auto const [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kUnknownId, std::string(id));
  }
  if (value < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                std::string(id) + ": rank must be positive");
  }
  return value;
}

GramMatrix summand(std::string_view part) {
  if (part == "E8") return e8();
  if (part.starts_with("Zn:")) {
    return GramMatrix::identity(parse_positive(part.substr(3), part));
  }
  if (part.size() > 1 && part[0] == 'Z') {
    return GramMatrix::identity(parse_positive(part.substr(1), part));
  }
  if (part.size() > 1 && part[0] == 'D') {
    bool const plus = part.ends_with("plus");
    std::string_view digits = part.substr(1);
    if (plus) digits.remove_suffix(4);
    int const n = parse_positive(digits, part);
    if (plus) {
      if (n % 4 != 0) {
        throw Error(ErrorCode::kInvalidParameter,
                    std::string(part) +
                        ": D_n^+ is integral only for n divisible by 4");
      }
      return from_doubled_basis(dn_plus_basis_doubled(n));
    }
    if (n < 2) {
      throw Error(ErrorCode::kInvalidParameter,
                  std::string(part) + ": D_n needs n >= 2");
    }
    return dn(n);
  }
  throw Error(ErrorCode::kUnknownId, std::string(part));
}

std::optional<Golden> golden_for(std::string_view id) {
  static std::map<std::string, Golden, std::less<>> const kGoldens = [] {
    std::map<std::string, Golden, std::less<>> g;
    for (int n = 1; n <= 16; ++n) {
      Golden const z{1, Parity::kOdd, n, 0};
      g.emplace("Zn:" + std::to_string(n), z);
      g.emplace("Z" + std::to_string(n), z);
    }
    g.emplace("E8", Golden{1, Parity::kEven, 0, 1});
    g.emplace("D4", Golden{4, Parity::kEven, std::nullopt, std::nullopt});
    g.emplace("D4plus", Golden{1, Parity::kOdd, 4, 0});
    g.emplace("D8plus", Golden{1, Parity::kEven, 0, 1});
    g.emplace("D12plus", Golden{1, Parity::kOdd, 4, 1});
    g.emplace("D16plus", Golden{1, Parity::kEven, 0, 2});
    g.emplace("E8+E8", Golden{1, Parity::kEven, 0, 2});
    for (int k = 1; k <= 4; ++k) {
      g.emplace("E8+Z" + std::to_string(k), Golden{1, Parity::kOdd, k, 1});
    }
    return g;
  }();
  auto const it = kGoldens.find(id);
  if (it == kGoldens.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::vector<std::vector<Integer>> dn_plus_basis_doubled(int n) {
  std::vector<std::vector<Integer>> basis;
  basis.emplace_back(n, Integer(1));
  for (int i = 1; i + 1 < n; ++i) {
    std::vector<Integer> v(n);
    v[i] = 2;
    v[i + 1] = -2;
    basis.push_back(v);
  }
  std::vector<Integer> last(n);
  last[n - 2] = 2;
  last[n - 1] = 2;
  basis.push_back(last);
  return basis;
}

CatalogEntry catalog_get(std::string_view id) {
  if (id.empty()) throw Error(ErrorCode::kUnknownId, "empty id");
  std::optional<GramMatrix> gram;
  std::string_view rest = id;
  while (true) {
    std::size_t const cut = rest.find('+');
    std::string_view const part = rest.substr(0, cut);
    if (part.empty()) throw Error(ErrorCode::kUnknownId, std::string(id));
    GramMatrix next = summand(part);
    gram = gram ? direct_sum(*gram, next) : std::move(next);
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  return CatalogEntry{std::string(id), std::move(*gram), golden_for(id)};
}

std::vector<std::string> standard_catalog_ids() {
  std::vector<std::string> ids;
  for (int n = 1; n <= 16; ++n) ids.push_back("Zn:" + std::to_string(n));
  ids.push_back("E8");
  for (int k = 1; k <= 4; ++k) ids.push_back("E8+Z" + std::to_string(k));
  ids.push_back("E8+E8");
  ids.push_back("D4plus");
  ids.push_back("D12plus");
  ids.push_back("D16plus");
  return ids;
}

}  // namespace latgate
