#pragma once

// JSON problem and twist file schemas used by the CLI. Pair-indexed
// coefficients are keyed "i,j" with 1 <= i < j <= n; couples and angular
// velocities may alternatively be given as pseudovectors when n = 3.

#include "screwalg/duality.hpp"
#include "screwalg/statics.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace screwalg::io {

using json = nlohmann::json;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Vectord parse_array(const json& j, Eigen::Index n, const std::string& what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
    throw ValidationError(what + ": expected array of " + std::to_string(n) +
                          " numbers");
  Vectord v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!j[i].is_number()) throw ValidationError(what + ": non-numeric entry");
    v[i] = j[i].get<double>();
    if (!std::isfinite(v[i])) throw ValidationError(what + ": non-finite entry");
  }
  return v;
}

inline Bivectord parse_pairs(const json& j, Eigen::Index n, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + ": expected object");
  Bivectord b(n);
  for (const auto& [key, val] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw ValidationError(what + ": bad pair key '" + key + "'");
    long i = 0, jj = 0;
    try {
      i = std::stol(key.substr(0, comma));
      jj = std::stol(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw ValidationError(what + ": bad pair key '" + key + "'");
    }
    if (i < 1 || jj <= i || jj > n)
      throw ValidationError(what + ": pair key '" + key +
                            "' out of range for dimension " + std::to_string(n));
    if (!val.is_number()) throw ValidationError(what + ": non-numeric value");
    b.at(i - 1, jj - 1) = val.get<double>();
  }
  return b;
}

// A couple given as {"pairs": {...}} or, for n = 3, {"pseudovector": [...]}.
inline Bivectord parse_couple(const json& j, Eigen::Index n, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + ": expected object");
  if (j.contains("pairs")) return parse_pairs(j.at("pairs"), n, what);
  if (j.contains("pseudovector")) {
    if (n != 3)
      throw ValidationError(what + ": pseudovector form requires dimension 3");
    return pseudovector_to_bivector(parse_array(j.at("pseudovector"), 3, what));
  }
  throw ValidationError(what + ": expected 'pairs' or 'pseudovector'");
}

inline Eigen::Index parse_dimension(const json& j) {
  if (!j.is_object() || !j.contains("dimension"))
    throw ValidationError("missing 'dimension'");
  const auto& d = j.at("dimension");
  if (!d.is_number_integer() || d.get<long>() < 1)
    throw ValidationError("'dimension' must be a positive integer");
  return d.get<Eigen::Index>();
}

inline json pairs_to_json(Eigen::Index n, const Vectord& coeffs) {
  json out = json::object();
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j, ++p)
      out[std::to_string(i + 1) + "," + std::to_string(j + 1)] = coeffs[p];
  return out;
}

}  // namespace detail

struct Problem {
  ForceSystemd system;
  json metadata;  // opaque unit labels etc.
};

inline Problem parse_problem(const json& j) {
  const Eigen::Index n = detail::parse_dimension(j);
  Problem out;
  out.system.dim = n;
  if (j.contains("forces")) {
    if (!j.at("forces").is_array())
      throw ValidationError("'forces' must be an array");
    for (const auto& f : j.at("forces")) {
      if (!f.is_object() || !f.contains("point") || !f.contains("vector"))
        throw ValidationError("force entries need 'point' and 'vector'");
      out.system.forces.push_back({detail::parse_array(f.at("point"), n, "force point"),
                                   detail::parse_array(f.at("vector"), n, "force vector")});
    }
  }
  if (j.contains("couples")) {
    if (!j.at("couples").is_array())
      throw ValidationError("'couples' must be an array");
    for (const auto& c : j.at("couples"))
      out.system.couples.push_back(detail::parse_couple(c, n, "couple"));
  }
  if (j.contains("metadata")) out.metadata = j.at("metadata");
  return out;
}

inline json serialize_problem(const Problem& p) {
  const Eigen::Index n = p.system.dim;
  json j;
  j["dimension"] = n;
  j["forces"] = json::array();
  for (const auto& f : p.system.forces) {
    json e;
    e["point"] = std::vector<double>(f.point.begin(), f.point.end());
    e["vector"] = std::vector<double>(f.force.begin(), f.force.end());
    j["forces"].push_back(e);
  }
  j["couples"] = json::array();
  for (const auto& c : p.system.couples)
    j["couples"].push_back({{"pairs", detail::pairs_to_json(n, c.coeffs)}});
  if (!p.metadata.is_null()) j["metadata"] = p.metadata;
  return j;
}

inline Twistd parse_twist(const json& j) {
  const Eigen::Index n = detail::parse_dimension(j);
  if (!j.contains("q") || !j.contains("omega") || !j.contains("v_q"))
    throw ValidationError("twist needs 'q', 'omega', 'v_q'");
  const Bivectord omega = detail::parse_couple(j.at("omega"), n, "omega");
  return {detail::parse_array(j.at("q"), n, "q"),
          angular_velocity_from_pairs<double>(n, omega.coeffs),
          detail::parse_array(j.at("v_q"), n, "v_q")};
}

inline json serialize_bivector(const Bivectord& b) {
  return detail::pairs_to_json(b.dim, b.coeffs);
}

inline json serialize_vector(const Vectord& v) {
  return std::vector<double>(v.begin(), v.end());
}

}  // namespace screwalg::io
