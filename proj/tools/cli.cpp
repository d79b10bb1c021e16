#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "tropcong/error.hpp"
#include "tropcong/json_io.hpp"

namespace tropcong::cli {

namespace {

using io::Json;

struct Options {
  std::size_t dim = 2;
  std::vector<std::string> polys;
  std::string complex_path, subspace_path, candidates_path, output;
  std::string point, by, points, u0, from, to, file;
  std::size_t n = 2;
  std::string N = "3";
  bool chart = false;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Json& j, const std::string& output, std::ostream& out) {
  std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw InvalidInput("cannot write '" + output + "'");
  f << text;
}

RatVec parse_point(const std::string& text, std::size_t n) {
  RatVec x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      x.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw InvalidInput("bad coordinate '" + item + "'");
    }
  }
  if (x.size() != n) throw InvalidInput("point needs " + std::to_string(n) + " coordinates");
  return x;
}

IntVec to_integers(const RatVec& x) {
  IntVec v;
  for (const auto& a : x) {
    if (!a.is_integer()) throw InvalidInput("expected integer coordinates");
    v.push_back(a.num());
  }
  return v;
}

std::vector<IntVec> parse_points(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw InvalidInput("points must be a JSON array of integer vectors");
  }
  if (!j.is_array()) throw InvalidInput("points must be a JSON array of integer vectors");
  std::vector<IntVec> pts;
  for (const auto& p : j) pts.push_back(io::intvec_from_json(p));
  return pts;
}

TropPoly poly_at(const Options& o, std::size_t i) {
  if (o.polys.size() <= i) throw InvalidInput("missing --poly");
  return parse_poly(o.polys[i], o.dim);
}

int cmd_eq(const Options& o, std::ostream& out) {
  if (o.polys.size() != 2) throw InvalidInput("eq needs exactly two --poly");
  TropPoly p = poly_at(o, 0), q = poly_at(o, 1);
  if (o.complex_path.empty()) {
    bool same = fun_eq(p, q);
    out << (same ? "equal" : "different") << "\n";
    return same ? 0 : 1;
  }
  PolyComplex cx = io::complex_from_json(read_json(o.complex_path));
  EqResult r = eq_on_complex(p, q, cx);
  if (r.equal) {
    out << "equal\n";
    return 0;
  }
  out << "different\n"
      << "cell: " << r.cell << "\n"
      << "witness: " << to_string(r.witness) << "\n"
      << "lhs: " << r.p_value.str() << "\n"
      << "rhs: " << r.q_value.str() << "\n";
  return 1;
}

int cmd_balance(const Options& o, std::ostream& out) {
  PolyComplex cx = io::complex_from_json(read_json(o.complex_path));
  BalanceReport r = balancing_check(cx);
  for (const auto& ridge : r.ridges) {
    out << ridge.ridge << ": " << (ridge.balanced ? "balanced" : "unbalanced") << " sum " << to_string(ridge.weighted_sum)
        << "\n";
  }
  out << (r.balanced ? "balanced" : "unbalanced") << "\n";
  return r.balanced ? 0 : 1;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  line::Decomposition d = line::decompose(poly_at(o, 0));
  out << "a: " << d.a << "\nu: " << d.u << "\nv: " << d.v << "\nf0: " << d.f0.to_poly().str() << "\n";
  return 0;
}

int cmd_derive(const Options& o, std::ostream& out) {
  TropPoly f = parse_poly(o.from, 2), g = parse_poly(o.to, 2);
  if (!line::eq_on_L(f, g)) {
    out << "not equal on L\n";
    return 1;
  }
  line::Derivation d = line::derive(f, g);
  emit(io::derivation_to_json(d), o.output, out);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  line::Derivation d = io::derivation_from_json(read_json(o.file));
  line::ReplayReport r = line::verify_derivation(d);
  if (r.ok) {
    out << "valid (" << d.steps.size() << " steps)\n";
    return 0;
  }
  out << "invalid at step " << r.failed_step << ": " << r.message << "\n";
  return 1;
}

int cmd_thin(const Options& o, std::ostream& out) {
  ThinPolytope t = thin_polytope(o.n, Integer::parse(o.N));
  Json rows = Json::array(), pts = Json::array();
  for (const auto& r : t.matrix.row_vectors()) rows.push_back(io::to_json(r));
  for (const auto& p : t.points) pts.push_back(io::to_json(p));
  Json j;
  j["n"] = t.n;
  j["N"] = io::to_json(t.N);
  j["matrix"] = rows;
  j["determinant"] = io::to_json(determinant(t.matrix));
  j["points"] = pts;
  j["interior_point"] = io::to_json(t.interior_point);
  j["min_dist_sq"] = io::to_json(t.min_dist_sq);
  emit(j, o.output, out);
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
  PolyComplex cx = io::complex_from_json(read_json(o.complex_path));
  std::vector<IntVec> pts = parse_points(o.points);
  WitnessPair w = witness_pair(LatticePolytope::hull(pts, cx.dim()), to_integers(parse_point(o.u0, cx.dim())), cx);
  Json j;
  j["f"] = w.f.str();
  j["g"] = w.g.str();
  j["eps"] = io::to_json(w.eps);
  j["attained_at"] = io::to_json(w.attained_at);
  j["cell"] = w.cell;
  emit(j, o.output, out);
  return 0;
}

int cmd_refute(const Options& o, std::ostream& out) {
  PolyComplex cx = io::complex_from_json(read_json(o.complex_path));
  auto cands = io::pairs_from_json(read_json(o.candidates_path), cx.dim());
  Certificate c = refute(cands, cx);
  emit(io::certificate_to_json(c), o.output, out);
  return 0;
}

int cmd_verify_cert(const Options& o, std::ostream& out) {
  Certificate c = io::certificate_from_json(read_json(o.file));
  CertificateCheck r = verify_certificate(c);
  out << (r.ok ? "valid" : "invalid: " + r.reason) << "\n";
  return r.ok ? 0 : 1;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  SubspaceChart chart = io::subspace_from_json(read_json(o.subspace_path));
  if (o.chart) {
    emit(io::chart_to_json(chart), o.output, out);
    return 0;
  }
  PolyComplex cx = io::complex_from_json(read_json(o.complex_path));
  emit(io::complex_to_json(reduce_complex(cx, chart)), o.output, out);
  return 0;
}

int cmd_translate(const Options& o, std::ostream& out) {
  if (!o.complex_path.empty()) {
    PolyComplex cx = io::complex_from_json(read_json(o.complex_path));
    emit(io::complex_to_json(translate_complex(cx, parse_point(o.by, cx.dim()))), o.output, out);
    return 0;
  }
  out << translate_poly(poly_at(o, 0), parse_point(o.by, o.dim)).str() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with tropical polynomial congruences", "tropcong"};
  app.require_subcommand(1);
  Options o;

  auto poly_opts = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--poly", o.polys, "polynomial text");
    if (required) opt->required();
    s->add_option("--dim", o.dim, "number of variables")->check(CLI::PositiveNumber);
  };
  auto complex_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--complex", o.complex_path, "complex JSON file");
    if (required) opt->required();
  };
  auto output_opt = [&](CLI::App* s) { s->add_option("-o,--output", o.output, "write JSON here instead of stdout"); };

  std::map<std::string, std::function<int()>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<int()> h) {
    handlers[name] = std::move(h);
    return app.add_subcommand(name, help);
  };

  auto* s = sub("parse", "print a polynomial in normalized text", [&] {
    out << poly_at(o, 0).str() << "\n";
    return 0;
  });
  poly_opts(s, true);

  s = sub("eval", "evaluate at a rational point", [&] {
    out << poly_at(o, 0).eval(parse_point(o.point, o.dim)).str() << "\n";
    return 0;
  });
  poly_opts(s, true);
  s->add_option("--point", o.point, "comma-separated rationals")->required();

  s = sub("canon", "canonical representative of the function", [&] {
    out << canon_fun(poly_at(o, 0)).str() << "\n";
    return 0;
  });
  poly_opts(s, true);

  s = sub("eq", "decide equality on a complex (or on R^n)", [&] { return cmd_eq(o, out); });
  poly_opts(s, true);
  complex_opt(s, false);

  s = sub("newton", "vertices of the Newton polytope", [&] {
    Json vs = Json::array();
    LatticePolytope np = newton(poly_at(o, 0));
    for (const auto& v : np.vertices()) vs.push_back(io::to_json(v));
    out << vs.dump() << "\n";
    return 0;
  });
  poly_opts(s, true);

  s = sub("balance", "check the balancing condition", [&] { return cmd_balance(o, out); });
  complex_opt(s, true);

  s = sub("unbounded", "is the support unbounded in every rational direction", [&] {
    bool u = unbounded_all_rational(io::complex_from_json(read_json(o.complex_path)));
    out << (u ? "unbounded" : "bounded in some direction") << "\n";
    return u ? 0 : 1;
  });
  complex_opt(s, true);

  s = sub("delta", "the triangle Delta(A) of a planar point set", [&] {
    line::DeltaSet d = line::delta(parse_points(o.points));
    Json pts = Json::array();
    for (const auto& p : d.points()) pts.push_back(io::to_json(p));
    Json j{{"a", io::to_json(d.a)}, {"b", io::to_json(d.b)}, {"c", io::to_json(d.c)}, {"points", pts}};
    out << j.dump() << "\n";
    return 0;
  });
  s->add_option("--points", o.points, "JSON array of integer points")->required();

  s = sub("decompose", "a x^u y^v f0 decomposition on L", [&] { return cmd_decompose(o, out); });
  poly_opts(s, true);

  s = sub("derive", "rewrite chain between two polynomials equal on L", [&] { return cmd_derive(o, out); });
  s->add_option("--from", o.from)->required();
  s->add_option("--to", o.to)->required();
  output_opt(s);

  s = sub("verify", "replay a derivation", [&] { return cmd_verify(o, out); });
  s->add_option("file", o.file, "derivation JSON")->required();

  s = sub("thin", "thin lattice polytope", [&] { return cmd_thin(o, out); });
  s->add_option("--n", o.n)->required();
  s->add_option("--N", o.N)->required();
  output_opt(s);

  s = sub("witness", "epsilon witness pair on a complex avoiding the origin", [&] { return cmd_witness(o, out); });
  complex_opt(s, true);
  s->add_option("--points", o.points, "JSON array of lattice points spanning P")->required();
  s->add_option("--u0", o.u0, "interior lattice point")->required();
  output_opt(s);

  s = sub("refute", "certificate that candidate pairs do not generate E(Z)", [&] { return cmd_refute(o, out); });
  s->add_option("--candidates", o.candidates_path, "pairs JSON file")->required();
  complex_opt(s, true);
  output_opt(s);

  s = sub("verify-cert", "check a refutation certificate", [&] { return cmd_verify_cert(o, out); });
  s->add_option("file", o.file, "certificate JSON")->required();

  s = sub("reduce", "pull a complex inside a subspace back to its chart", [&] { return cmd_reduce(o, out); });
  complex_opt(s, false);
  s->add_option("--subspace", o.subspace_path, "subspace JSON file")->required();
  s->add_flag("--chart", o.chart, "print the chart instead");
  output_opt(s);

  s = sub("translate", "f(x + a), or the complex shifted by a", [&] { return cmd_translate(o, out); });
  poly_opts(s, false);
  complex_opt(s, false);
  s->add_option("--by", o.by, "comma-separated rationals")->required();
  output_opt(s);

  s = sub("subspace-gens", "generators (x^k, 0) of the congruence of a subspace", [&] {
    SubspaceChart c = io::subspace_from_json(read_json(o.subspace_path));
    emit(io::pairs_to_json(subspace_congruence_generators(c)), o.output, out);
    return 0;
  });
  s->add_option("--subspace", o.subspace_path, "subspace JSON file")->required();
  output_opt(s);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    for (auto* cmd : app.get_subcommands()) return handlers.at(cmd->get_name())();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tropcong::cli
