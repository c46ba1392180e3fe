#include "basechange/document.hpp"

namespace basechange {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing \"" + key + "\"");
  return *it;
}

std::int64_t integer_member(const json& j, const char* key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

std::string string_member(const json& j, const char* key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_string()) throw ParseError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

RingDescriptor ring_from_json_at(const json& j, const std::string& path) {
  const std::string kind = string_member(j, "kind", path);
  try {
    if (kind == "zmod-pk")
      return RingDescriptor::zmod_pk(integer_member(j, "p", path), static_cast<int>(integer_member(j, "k", path)));
    if (kind == "p-local") return RingDescriptor::p_local(integer_member(j, "p", path));
    if (kind == "prime-field") return RingDescriptor::prime_field(integer_member(j, "p", path));
    if (kind == "rationals") return RingDescriptor::rationals();
    if (kind == "trunc-poly") {
      const RingDescriptor base = ring_from_json_at(member(j, "base", path), path + ".base");
      const int n = static_cast<int>(integer_member(j, "n", path));
      if (base.kind() == RingKind::prime_field) return RingDescriptor::trunc_poly_fp(base.prime(), n);
      if (base.kind() == RingKind::rationals) return RingDescriptor::trunc_poly_q(n);
      throw ParseError(path + ".base: must be a prime-field or rationals");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
  throw ParseError(path + ".kind: unknown ring kind \"" + kind + "\"");
}

}  // namespace

json ring_to_json(const RingDescriptor& ring) {
  switch (ring.kind()) {
    case RingKind::zmod_pk:
      return {{"kind", "zmod-pk"}, {"p", ring.prime()}, {"k", ring.exponent()}};
    case RingKind::p_local:
      return {{"kind", "p-local"}, {"p", ring.prime()}};
    case RingKind::trunc_poly:
      return {{"kind", "trunc-poly"},
              {"base", ring.over_rationals() ? ring_to_json(RingDescriptor::rationals())
                                             : ring_to_json(RingDescriptor::prime_field(ring.prime()))},
              {"n", ring.exponent()}};
    case RingKind::prime_field:
      return {{"kind", "prime-field"}, {"p", ring.prime()}};
    case RingKind::rationals:
      return {{"kind", "rationals"}};
  }
  return {};
}

RingDescriptor ring_from_json(const json& j) { return ring_from_json_at(j, "ring"); }

json complex_to_json(const FreeComplex& c) {
  json maps = json::array();
  for (const Matrix& d : c.maps()) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(d(i, j).to_string());
      rows.push_back(std::move(row));
    }
    maps.push_back(std::move(rows));
  }
  return {{"ring", ring_to_json(c.ring())},
          {"min_degree", c.min_degree()},
          {"ranks", c.ranks()},
          {"maps", std::move(maps)}};
}

FreeComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document: expected an object");
  const RingDescriptor ring = ring_from_json(member(j, "ring", "document"));

  const std::int64_t min_degree = integer_member(j, "min_degree", "document");
  if (min_degree < -100000 || min_degree > 100000) throw ParseError("min_degree: out of range");

  const json& ranks_json = member(j, "ranks", "document");
  if (!ranks_json.is_array()) throw ParseError("ranks: expected an array");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < ranks_json.size(); ++i) {
    const json& r = ranks_json[i];
    if (!r.is_number_integer() || r.get<std::int64_t>() < 0 || r.get<std::int64_t>() > 10000)
      throw ParseError("ranks[" + std::to_string(i) + "]: expected a rank in [0, 10000]");
    ranks.push_back(r.get<std::size_t>());
  }

  const json& maps_json = member(j, "maps", "document");
  if (!maps_json.is_array()) throw ParseError("maps: expected an array");
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (maps_json.size() != expected)
    throw DimensionError("maps: " + std::to_string(ranks.size()) + " ranks need " + std::to_string(expected) +
                         " maps, got " + std::to_string(maps_json.size()));

  std::vector<Matrix> maps;
  for (std::size_t m = 0; m < maps_json.size(); ++m) {
    const std::string path = "maps[" + std::to_string(m) + "]";
    const json& rows = maps_json[m];
    const std::size_t nrows = ranks[m + 1], ncols = ranks[m];
    if (!rows.is_array() || rows.size() != nrows)
      throw DimensionError(path + ": expected " + std::to_string(nrows) + " rows");
    Matrix d(ring, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      const std::string row_path = path + "[" + std::to_string(i) + "]";
      if (!rows[i].is_array() || rows[i].size() != ncols)
        throw DimensionError(row_path + ": expected " + std::to_string(ncols) + " entries");
      for (std::size_t k = 0; k < ncols; ++k) {
        const std::string entry_path = row_path + "[" + std::to_string(k) + "]";
        const json& e = rows[i][k];
        if (!e.is_string()) throw ParseError(entry_path + ": entries must be strings");
        try {
          d(i, k) = RingElement::parse(ring, e.get<std::string>());
        } catch (const ParseError& err) {
          throw ParseError(entry_path + ": " + err.what());
        }
      }
    }
    maps.push_back(std::move(d));
  }
  return FreeComplex(ring, static_cast<int>(min_degree), std::move(ranks), std::move(maps));
}

FreeComplex parse_complex_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON document");
  }
  return complex_from_json(j);
}

std::string write_complex_document(const FreeComplex& c) { return complex_to_json(c).dump(2) + "\n"; }

}  // namespace basechange
