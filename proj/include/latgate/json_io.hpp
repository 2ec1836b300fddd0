#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "latgate/gram.hpp"
#include "latgate/manifold.hpp"

namespace latgate {

// Integers serialize as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
nlohmann::json integer_to_json(Integer const& x);
// `where` names the field in ParseError diagnostics.
Integer integer_from_json(nlohmann::json const& j, std::string const& where);

nlohmann::json vector_to_json(LatticeVector const& v);
LatticeVector vector_from_json(nlohmann::json const& j,
                               std::string const& where);

// {"rank": n, "gram": [[...], ...]}.
nlohmann::json gram_to_json(GramMatrix const& g);
// Throws ParseError, BadShape, NotSymmetric.
GramMatrix gram_from_json(nlohmann::json const& j);
GramMatrix load_gram(std::string_view text);
GramMatrix load_gram_file(std::filesystem::path const& path);

// {"b1": int, "form": <Gram JSON>}.
nlohmann::json manifold_to_json(ManifoldDescriptor const& m);
ManifoldDescriptor manifold_from_json(nlohmann::json const& j);
ManifoldDescriptor load_manifold_file(std::filesystem::path const& path);

// Parses text as JSON, mapping syntax errors to ParseError with the byte
// offset.
nlohmann::json parse_json_text(std::string_view text);
std::string read_file(std::filesystem::path const& path);

}  // namespace latgate
