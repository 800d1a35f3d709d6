#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chiy/varieties.hpp"

namespace chiy {

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j, const std::string& field) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rational(static_cast<long long>(j.get<std::uint64_t>()));
  throw SchemaError("field '" + field + "' must be an integer or a rational string \"p/q\"");
}

inline long long integer_from_json(const nlohmann::json& j, const std::string& field) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) return static_cast<long long>(j.get<std::uint64_t>());
  throw SchemaError("field '" + field + "' must be an integer");
}

inline const nlohmann::json& require_field(const nlohmann::json& j, const std::string& field) {
  const auto it = j.find(field);
  if (it == j.end()) throw SchemaError("missing field '" + field + "'");
  return *it;
}

}  // namespace detail

inline VarietyDescriptor descriptor_from_json(const nlohmann::json& j) {
  using detail::integer_from_json;
  using detail::rational_from_json;
  using detail::require_field;

  if (!j.is_object()) throw SchemaError("descriptor must be a JSON object");
  const nlohmann::json& kind_field = require_field(j, "kind");
  if (!kind_field.is_string()) throw SchemaError("field 'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "projective_space") {
    ProjectiveSpace v;
    v.dim = static_cast<int>(integer_from_json(require_field(j, "dim"), "dim"));
    return v;
  }
  if (kind == "complete_intersection") {
    CompleteIntersection v;
    v.ambient_dim = static_cast<int>(integer_from_json(require_field(j, "ambient_dim"), "ambient_dim"));
    const nlohmann::json& degrees = require_field(j, "degrees");
    if (!degrees.is_array()) throw SchemaError("field 'degrees' must be an array");
    for (const auto& d : degrees) v.degrees.push_back(integer_from_json(d, "degrees"));
    return v;
  }
  if (kind == "hodge_diamond") {
    HodgeDiamond v;
    v.dim = static_cast<int>(integer_from_json(require_field(j, "dim"), "dim"));
    const nlohmann::json& table = require_field(j, "h");
    if (!table.is_array()) throw SchemaError("field 'h' must be an array of arrays");
    for (const auto& row : table) {
      if (!row.is_array()) throw SchemaError("field 'h' must be an array of arrays");
      std::vector<long long> out_row;
      for (const auto& entry : row) out_row.push_back(integer_from_json(entry, "h"));
      v.h.push_back(std::move(out_row));
    }
    return v;
  }
  if (kind == "invariants") {
    LowDimInvariants v;
    v.dim = static_cast<int>(integer_from_json(require_field(j, "dim"), "dim"));
    v.chi_a = rational_from_json(require_field(j, "chi_a"), "chi_a");
    v.euler = rational_from_json(require_field(j, "euler"), "euler");
    v.signature = j.contains("signature") ? rational_from_json(j.at("signature"), "signature") : Rational(0);
    return v;
  }
  if (kind == "toric") {
    ToricOrbits v;
    const nlohmann::json& counts = require_field(j, "orbit_counts");
    if (!counts.is_array()) throw SchemaError("field 'orbit_counts' must be an array");
    for (const auto& c : counts) v.counts.push_back(integer_from_json(c, "orbit_counts"));
    return v;
  }
  if (kind == "product") {
    ProductVariety v;
    const nlohmann::json& factors = require_field(j, "factors");
    if (!factors.is_array()) throw SchemaError("field 'factors' must be an array");
    for (const auto& f : factors) v.factors.push_back(descriptor_from_json(f));
    return v;
  }
  if (kind == "chi_y") {
    RawChiY v;
    const nlohmann::json& coeffs = require_field(j, "coeffs");
    if (!coeffs.is_array()) throw SchemaError("field 'coeffs' must be an array");
    std::vector<Rational> values;
    for (const auto& c : coeffs) values.push_back(rational_from_json(c, "coeffs"));
    v.coeffs = Polynomial(std::move(values));
    return v;
  }
  throw SchemaError("unknown descriptor kind '" + kind + "'");
}

// Parses and fully validates a descriptor document.
inline VarietyDescriptor parse_descriptor(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  VarietyDescriptor d = descriptor_from_json(j);
  validate(d);
  return d;
}

inline nlohmann::json descriptor_to_json(const VarietyDescriptor& d) {
  struct Visitor {
    nlohmann::json operator()(const ProjectiveSpace& v) const {
      return {{"kind", "projective_space"}, {"dim", v.dim}};
    }
    nlohmann::json operator()(const CompleteIntersection& v) const {
      return {{"kind", "complete_intersection"}, {"ambient_dim", v.ambient_dim}, {"degrees", v.degrees}};
    }
    nlohmann::json operator()(const HodgeDiamond& v) const {
      return {{"kind", "hodge_diamond"}, {"dim", v.dim}, {"h", v.h}};
    }
    nlohmann::json operator()(const LowDimInvariants& v) const {
      return {{"kind", "invariants"},
              {"dim", v.dim},
              {"chi_a", v.chi_a.str()},
              {"euler", v.euler.str()},
              {"signature", v.signature.str()}};
    }
    nlohmann::json operator()(const ToricOrbits& v) const {
      return {{"kind", "toric"}, {"orbit_counts", v.counts}};
    }
    nlohmann::json operator()(const ProductVariety& v) const {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : v.factors) factors.push_back(descriptor_to_json(f));
      return {{"kind", "product"}, {"factors", std::move(factors)}};
    }
    nlohmann::json operator()(const RawChiY& v) const {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rational& c : v.coeffs.coeffs()) coeffs.push_back(c.str());
      return {{"kind", "chi_y"}, {"coeffs", std::move(coeffs)}};
    }
  };
  return std::visit(Visitor{}, d.value());
}

}  // namespace chiy
