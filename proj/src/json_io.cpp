#include "latgate/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "latgate/error.hpp"

namespace latgate {

using nlohmann::json;

json integer_to_json(Integer const& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Integer integer_from_json(json const& j, std::string const& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    std::string const s = j.get<std::string>();
    std::size_t const digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = s.size() > digits_from;
    for (std::size_t i = digits_from; i < s.size() && ok; ++i) {
      ok = s[i] >= '0' && s[i] <= '9';
    }
    if (ok) return Integer(s);
  }
  throw Error(ErrorCode::kParseError,
              where + ": expected an integer, got " + j.dump());
}

json vector_to_json(LatticeVector const& v) {
  json out = json::array();
  for (Integer const& x : v) out.push_back(integer_to_json(x));
  return out;
}

LatticeVector vector_from_json(json const& j, std::string const& where) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParseError, where + ": expected an array");
  }
  LatticeVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

json gram_to_json(GramMatrix const& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.rank(); ++j) {
      row.push_back(integer_to_json(g(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"rank", g.rank()}, {"gram", std::move(rows)}};
}

GramMatrix gram_from_json(json const& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kParseError, "Gram JSON must be an object");
  }
  if (!j.contains("gram")) {
    throw Error(ErrorCode::kParseError, "missing field \"gram\"");
  }
  json const& gram = j.at("gram");
  if (!gram.is_array()) {
    throw Error(ErrorCode::kParseError, "gram: expected an array of rows");
  }
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    std::string const where = "gram[" + std::to_string(i) + "]";
    if (!gram[i].is_array()) {
      throw Error(ErrorCode::kParseError, where + ": expected an array");
    }
    rows.push_back(vector_from_json(gram[i], where));
  }
  if (j.contains("rank")) {
    json const& rank = j.at("rank");
    if (!rank.is_number_integer() || rank.get<std::int64_t>() < 1) {
      throw Error(ErrorCode::kParseError,
                  "rank: expected a positive integer, got " + rank.dump());
    }
    if (static_cast<std::size_t>(rank.get<std::int64_t>()) != rows.size()) {
      throw Error(ErrorCode::kBadShape,
                  "rank is " + rank.dump() + " but gram has " +
                      std::to_string(rows.size()) + " rows");
    }
  }
  return GramMatrix::from_rows(rows);
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw Error(ErrorCode::kParseError,
                "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GramMatrix load_gram(std::string_view text) {
  return gram_from_json(parse_json_text(text));
}

GramMatrix load_gram_file(std::filesystem::path const& path) {
  return load_gram(read_file(path));
}

json manifold_to_json(ManifoldDescriptor const& m) {
  return json{{"b1", m.b1}, {"form", gram_to_json(m.form)}};
}

ManifoldDescriptor manifold_from_json(json const& j) {
  if (!j.is_object() || !j.contains("b1") || !j.contains("form")) {
    throw Error(ErrorCode::kParseError,
                "manifold JSON needs fields \"b1\" and \"form\"");
  }
  json const& b1 = j.at("b1");
  if (!b1.is_number_integer() || b1.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::kParseError,
                "b1: expected a nonnegative integer, got " + b1.dump());
  }
  return ManifoldDescriptor{b1.get<long>(), gram_from_json(j.at("form"))};
}

ManifoldDescriptor load_manifold_file(std::filesystem::path const& path) {
  return manifold_from_json(parse_json_text(read_file(path)));
}

}  // namespace latgate
