#include "tropcong/json_io.hpp"

#include "tropcong/error.hpp"

namespace tropcong::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InvalidInput(std::string("field '") + key + "' is not an array");
  return a;
}

std::string string_field(const Json& j, const char* key) {
  const Json& s = field(j, key);
  if (!s.is_string()) throw InvalidInput(std::string("field '") + key + "' is not a string");
  return s.get<std::string>();
}

TropPoly poly_field(const Json& j, const char* key, std::size_t n) {
  try {
    return parse_poly(string_field(j, key), n);
  } catch (const ParseError& e) {
    throw InvalidInput(std::string("field '") + key + "': " + e.what());
  }
}

Json constraints_to_json(const std::vector<Constraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json row = Json::array();
    for (const auto& a : c.normal) row.push_back(to_json(a));
    row.push_back(to_json(c.rhs));
    out.push_back(row);
  }
  return out;
}

std::vector<Constraint> constraints_from_json(const Json& j, std::size_t n) {
  std::vector<Constraint> out;
  if (!j.is_array()) throw InvalidInput("constraint list is not an array");
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n + 1) throw InvalidInput("constraint row must have dim + 1 entries");
    IntVec normal;
    for (std::size_t i = 0; i < n; ++i) normal.push_back(integer_from_json(row[i]));
    out.push_back({normal, rational_from_json(row[n])});
  }
  return out;
}

std::string status_name(PairStatus s) { return to_string(s); }

PairStatus status_from(const std::string& s) {
  if (s == "kept") return PairStatus::kept;
  if (s == "dropped-bottom") return PairStatus::dropped_bottom;
  if (s == "dropped-monomial") return PairStatus::dropped_monomial;
  throw InvalidInput("unknown pair status '" + s + "'");
}

std::size_t size_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw InvalidInput("expected a nonnegative integer");
  return j.get<std::size_t>();
}

bool bool_from_json(const Json& j) {
  if (!j.is_boolean()) throw InvalidInput("expected a boolean");
  return j.get<bool>();
}

}  // namespace

Json to_json(const Integer& a) {
  if (a.fits_int64()) return a.to_int64();
  return a.str();
}

Json to_json(const Rational& a) {
  if (a.is_integer()) return to_json(a.num());
  return a.str();
}

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(to_json(a));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Integer::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: '" + j.get<std::string>() + "'");
    }
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidInput("not a rational: '" + j.get<std::string>() + "'");
    }
  }
  throw InvalidInput("expected an integer or a \"p/q\" string, got " + j.dump());
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an integer array");
  IntVec v;
  for (const auto& a : j) v.push_back(integer_from_json(a));
  return v;
}

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a rational array");
  RatVec v;
  for (const auto& a : j) v.push_back(rational_from_json(a));
  return v;
}

Json complex_to_json(const PolyComplex& cx) {
  Json cells = Json::array();
  for (const auto& c : cx.cells()) {
    Json cell;
    cell["id"] = c.id;
    cell["eq"] = constraints_to_json(c.geometry.equations());
    cell["ineq"] = constraints_to_json(c.geometry.inequalities());
    if (c.weight) cell["weight"] = to_json(*c.weight);
    cells.push_back(cell);
  }
  Json out;
  out["dim"] = cx.dim();
  out["cells"] = cells;
  out["facets"] = cx.facet_ids();
  return out;
}

PolyComplex complex_from_json(const Json& j) {
  std::size_t n = size_from_json(field(j, "dim"));
  std::vector<Cell> cells;
  for (const auto& c : array_field(j, "cells")) {
    std::optional<Integer> weight;
    if (c.contains("weight")) weight = integer_from_json(c.at("weight"));
    std::vector<Constraint> eqs = c.contains("eq") ? constraints_from_json(c.at("eq"), n) : std::vector<Constraint>{};
    std::vector<Constraint> ineqs =
        c.contains("ineq") ? constraints_from_json(c.at("ineq"), n) : std::vector<Constraint>{};
    cells.push_back({string_field(c, "id"), Polyhedron(n, eqs, ineqs), weight});
  }
  std::vector<std::string> facets;
  for (const auto& f : array_field(j, "facets")) {
    if (!f.is_string()) throw InvalidInput("facet ids must be strings");
    facets.push_back(f.get<std::string>());
  }
  try {
    return PolyComplex(n, std::move(cells), std::move(facets));
  } catch (const InvalidInput&) {
    throw;
  } catch (const Error& e) {
    throw InvalidInput(e.what());
  }
}

Json derivation_to_json(const line::Derivation& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps) {
    Json step;
    step["generator"] = Json::array({to_json(s.u), to_json(s.v)});
    step["power"] = s.power;
    step["multiplier"] = {{"coeff", to_json(s.multiplier.coeff)}, {"exponent", to_json(s.multiplier.exponent)}};
    step["context"] = s.context.str();
    step["direction"] = s.direction == line::Direction::forward ? "forward" : "backward";
    steps.push_back(step);
  }
  Json out;
  out["start"] = d.start.str();
  out["end"] = d.end.str();
  out["steps"] = steps;
  return out;
}

line::Derivation derivation_from_json(const Json& j) {
  line::Derivation d;
  d.start = canon_fun(poly_field(j, "start", 2));
  d.end = canon_fun(poly_field(j, "end", 2));
  for (const auto& s : array_field(j, "steps")) {
    line::Step step;
    const Json& g = array_field(s, "generator");
    if (g.size() != 2) throw InvalidInput("generator must be [u, v]");
    step.u = integer_from_json(g[0]);
    step.v = integer_from_json(g[1]);
    if (s.contains("power")) {
      step.power = size_from_json(s.at("power"));
      if (step.power == 0) throw InvalidInput("step power must be positive");
    }
    const Json& m = field(s, "multiplier");
    step.multiplier.coeff = rational_from_json(field(m, "coeff"));
    step.multiplier.exponent = intvec_from_json(field(m, "exponent"));
    if (step.multiplier.exponent.size() != 2) throw InvalidInput("multiplier exponent must have length 2");
    step.context = canon_fun(poly_field(s, "context", 2));
    std::string dir = string_field(s, "direction");
    if (dir == "forward") step.direction = line::Direction::forward;
    else if (dir == "backward") step.direction = line::Direction::backward;
    else throw InvalidInput("direction must be forward or backward");
    d.steps.push_back(std::move(step));
  }
  return d;
}

Json certificate_to_json(const Certificate& c) {
  Json cands = Json::array();
  for (const auto& r : c.candidates) {
    Json e;
    e["lhs"] = r.lhs.str();
    e["rhs"] = r.rhs.str();
    e["status"] = status_name(r.status);
    e["lhs_fits"] = r.lhs_fits;
    e["rhs_fits"] = r.rhs_fits;
    cands.push_back(e);
  }
  Json pts = Json::array();
  for (const auto& p : c.thin_points) pts.push_back(to_json(p));
  Json out;
  out["complex"] = complex_to_json(c.complex);
  out["candidates"] = cands;
  out["shift"] = to_json(c.shift);
  out["N"] = to_json(c.N);
  out["thin"] = {{"n", c.complex.dim()}, {"N", to_json(c.thin_N)}, {"points", pts}};
  out["witness"] = {{"f", c.f.str()}, {"g", c.g.str()}, {"eps", to_json(c.eps)}, {"u0", to_json(c.u0)}};
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.complex = complex_from_json(field(j, "complex"));
  std::size_t n = c.complex.dim();
  for (const auto& e : array_field(j, "candidates")) {
    CandidateRecord r{poly_field(e, "lhs", n), poly_field(e, "rhs", n), status_from(string_field(e, "status"))};
    r.lhs_fits = bool_from_json(field(e, "lhs_fits"));
    r.rhs_fits = bool_from_json(field(e, "rhs_fits"));
    c.candidates.push_back(std::move(r));
  }
  c.shift = ratvec_from_json(field(j, "shift"));
  c.N = integer_from_json(field(j, "N"));
  const Json& thin = field(j, "thin");
  if (size_from_json(field(thin, "n")) != n) throw InvalidInput("thin polytope dimension differs from the complex");
  c.thin_N = integer_from_json(field(thin, "N"));
  for (const auto& p : array_field(thin, "points")) c.thin_points.push_back(intvec_from_json(p));
  const Json& w = field(j, "witness");
  c.f = poly_field(w, "f", n);
  c.g = poly_field(w, "g", n);
  c.eps = rational_from_json(field(w, "eps"));
  c.u0 = intvec_from_json(field(w, "u0"));
  return c;
}

Json chart_to_json(const SubspaceChart& c) {
  auto rows = [](const std::vector<IntVec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
  };
  Json out;
  out["n"] = c.n;
  out["d"] = c.d;
  out["basis"] = rows(c.basis);
  out["completion"] = rows(c.completion);
  out["dual"] = rows(c.dual);
  out["perp"] = rows(c.perp);
  out["complement"] = rows(c.complement);
  return out;
}

SubspaceChart subspace_from_json(const Json& j) {
  std::size_t n = size_from_json(field(j, "dim"));
  std::vector<RatVec> span;
  for (const auto& v : array_field(j, "span")) {
    span.push_back(ratvec_from_json(v));
    if (span.back().size() != n) throw InvalidInput("span vector has wrong length");
  }
  return make_chart(span, n);
}

std::vector<PolyPair> pairs_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InvalidInput("pair list is not an array");
  std::vector<PolyPair> out;
  for (const auto& e : j) {
    if (e.is_array()) {
      if (e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InvalidInput("a pair must be two polynomial strings");
      try {
        out.emplace_back(parse_poly(e[0].get<std::string>(), n), parse_poly(e[1].get<std::string>(), n));
      } catch (const ParseError& err) {
        throw InvalidInput(err.what());
      }
    } else {
      out.emplace_back(poly_field(e, "lhs", n), poly_field(e, "rhs", n));
    }
  }
  return out;
}

Json pairs_to_json(const std::vector<PolyPair>& pairs) {
  Json out = Json::array();
  for (const auto& [f, g] : pairs) out.push_back({{"lhs", f.str()}, {"rhs", g.str()}});
  return out;
}

}  // namespace tropcong::io
