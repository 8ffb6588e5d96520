#pragma once

// Command-line front end. Needs CLI11.hpp and nlohmann/json (json.hpp) on
// the include path in addition to the library headers.

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsuper/expr.hpp"
#include "qsuper/suites.hpp"

namespace qsuper::cli {

using nlohmann::json;

/// Exit codes: success, a verification reported failures, bad usage or input.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Options {
  std::string ring = "Asigma";
  std::optional<std::complex<double>> numeric;
  int degree = -1;  // -1: command default
  bool json = false;
  std::size_t cache_size = 0;  // 0: unlimited
};

/// A rational number "n" or "n/m" as a double.
inline double parse_rational(const std::string& s) {
  try {
    mpq_class v(s);
    v.canonicalize();
    if (v.get_den() == 0) throw Error("zero denominator");
    return v.get_d();
  } catch (const std::invalid_argument&) {
    throw Error("not a rational number: '" + s + "'");
  }
}

/// Twice a half-integer given as "n" or "n/2".
inline int parse_half(const std::string& s) {
  mpq_class v;
  try {
    v = mpq_class(s);
    v.canonicalize();
  } catch (const std::invalid_argument&) {
    throw Error("not a half-integer: '" + s + "'");
  }
  mpq_class two = v * 2;
  if (two.get_den() != 1 || !two.get_num().fits_sint_p()) throw Error("not a half-integer: '" + s + "'");
  return static_cast<int>(two.get_num().get_si());
}

inline std::string number_string(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string complex_string(std::complex<double> z) {
  double re = std::abs(z.real()) < 1e-13 ? 0 : z.real(), im = std::abs(z.imag()) < 1e-13 ? 0 : z.imag();
  if (im == 0) return number_string(re);
  std::string i = (std::abs(im) == 1 ? "" : number_string(std::abs(im)) + "*") + "i";
  if (re == 0) return (im < 0 ? "-" : "") + i;
  return "(" + number_string(re) + (im < 0 ? " - " : " + ") + i + ")";
}

class Renderer {
 public:
  explicit Renderer(const Options& o) : opt_(o) {}

  std::string text(const Scalar& s) const { return opt_.numeric ? complex_string(value(s)) : to_string(s); }

  std::string text(const Element& x) const {
    if (!opt_.numeric) return to_string(x);
    std::vector<std::pair<std::string, std::complex<double>>> terms;
    for (auto& [m, c] : x.terms()) {
      std::complex<double> v = value(c);
      if (std::abs(v) > 1e-13) terms.emplace_back(monomial_string(m, x.ring()), v);
    }
    if (terms.empty()) return "0";
    std::string out;
    for (auto& [name, v] : terms) {
      if (!out.empty()) out += " + ";
      if (name.empty()) out += complex_string(v);
      else if (std::abs(v - 1.0) < 1e-13) out += name;
      else out += complex_string(v) + "*" + name;
    }
    return out;
  }

  std::string text(const Tensor& x) const {
    if (!opt_.numeric) return to_string(x);
    std::string out;
    for (auto& [k, c] : x.terms()) {
      std::complex<double> v = value(c);
      if (std::abs(v) < 1e-13) continue;
      if (!out.empty()) out += " + ";
      out += complex_string(v) + "*[" + leg(k[0], *x.legs()[0]) + " (x) " + leg(k[1], *x.legs()[1]) + "]";
    }
    return out.empty() ? "0" : out;
  }

  json scalar(const Scalar& s) const {
    json j = {{"text", text(s)}};
    if (opt_.numeric) {
      std::complex<double> v = value(s);
      j["numeric"] = {{"re", v.real()}, {"im", v.imag()}};
    } else {
      j["exact"] = to_string(s);
    }
    return j;
  }

  static json exponents(const Monomial& m, Ring r) {
    if (is_plane(r)) return json::array({m.e[0], m.e[1]});
    return json::array({m.e[0], m.e[1], m.e[2], m.e[3], m.e[4]});
  }

  json element(const Element& x) const {
    json terms = json::array();
    for (auto& [m, c] : x.terms()) terms.push_back({{"exponents", exponents(m, x.ring())}, {"coefficient", scalar(c)}});
    return {{"text", text(x)}, {"terms", terms}};
  }

  json tensor(const Tensor& x) const {
    json terms = json::array();
    for (auto& [k, c] : x.terms())
      terms.push_back({{"left", exponents(k[0], x.legs()[0]->ring())},
                       {"right", exponents(k[1], x.legs()[1]->ring())},
                       {"coefficient", scalar(c)}});
    return {{"text", text(x)}, {"terms", terms}};
  }

  static json report(const Report& r) {
    json failures = json::array();
    for (auto& f : r.failures) failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"name", r.name},         {"checked", r.checked}, {"failed", r.failure_count},
            {"ok", r.ok()},           {"failures", failures}, {"notes", r.notes}};
  }

 private:
  const Options& opt_;

  std::complex<double> value(const Scalar& s) const { return eval_numeric(s, *opt_.numeric); }
  static std::string leg(const Monomial& m, const Algebra& A) {
    std::string s = monomial_string(m, A.ring());
    return s.empty() ? "1" : s;
  }
};

inline std::string report_text(const Report& r) {
  std::ostringstream os;
  os << r.name << ": " << r.checked << " checked, " << r.failure_count << " failed" << (r.ok() ? "" : "  FAIL")
     << "\n";
  for (auto& f : r.failures) os << "  at " << f.input << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
  for (auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

inline const char* parity_name(const Element& x) {
  if (x.is_zero()) return "zero";
  std::optional<int> p = x.parity();
  if (!p) return "mixed";
  return *p ? "odd" : "even";
}

inline Ring ring_option(const Options& o) {
  std::optional<Ring> r = ring_from_name(o.ring);
  if (!r || is_plane(*r)) throw CLI::ValidationError("--ring", "expected B, Bsigma or Asigma, got '" + o.ring + "'");
  return *r;
}

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the quantum super group A(sigma)", "qsuper"};
  app.require_subcommand(1, 1);
  Options opt;
  std::string numeric;
  app.add_option("--ring", opt.ring, "B, Bsigma or Asigma")->capture_default_str();
  app.add_option("--numeric", numeric, "evaluate scalars numerically at q=<rational>");
  app.add_option("--degree", opt.degree, "size parameter of the command");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--cache-size", opt.cache_size, "bound on memo tables (0 = unlimited)");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  std::string x1, x2, form = "R", source = "coproduct", reading = "corrected", check = "relations", suite = "all",
                      base = "q", alpha_text, l = "1/2", i = "-1/2", j = "-1/2";
  int n = 1, alpha = 0, beta = 0, s = 0, words = 3;
  bool infinity = false;

  for (const char* name : {"nf", "delta", "eps", "antipode", "star", "grade", "haar"}) {
    CLI::App* c = sub(name, "");
    c->add_option("expr", x1, "element expression")->required();
  }
  app.get_subcommand("nf")->description("normal form");
  app.get_subcommand("delta")->description("coproduct");
  app.get_subcommand("eps")->description("counit");
  app.get_subcommand("antipode")->description("antipode");
  app.get_subcommand("star")->description("star involution");
  app.get_subcommand("grade")->description("parity and bigrade");
  app.get_subcommand("haar")->description("Haar functional");
  CLI::App* pair = sub("pair", "dual pairing <functional, element>");
  pair->add_option("functional", x1, "expression in k, kinv, e, f")->required();
  pair->add_option("expr", x2, "element expression")->required();
  CLI::App* inner = sub("inner", "inner product <x, y> = h(x* y) (R) or h(y x*) (L)");
  inner->add_option("x", x1)->required();
  inner->add_option("y", x2)->required();
  inner->add_option("--form", form, "R or L")->check(CLI::IsMember({"R", "L"}))->capture_default_str();
  CLI::App* jac = sub("jacobi", "little Jacobi polynomial in z");
  jac->add_option("--n", n)->required()->check(CLI::Range(0, 64));
  jac->add_option("--alpha", alpha)->check(CLI::Range(-64, 64));
  jac->add_option("--beta", beta)->check(CLI::Range(-64, 64));
  jac->add_option("--base", base, "base of the polynomial (expression)")->capture_default_str();
  CLI::App* mat = sub("matcoef", "matrix coefficient of the spin-l comodule");
  mat->add_option("--l", l, "spin (half-integer)")->capture_default_str();
  mat->add_option("--i", i, "row index")->capture_default_str();
  mat->add_option("--j", j, "column index")->capture_default_str();
  mat->add_option("--s", s, "power of sigma")->check(CLI::Range(0, 1));
  mat->add_option("--source", source, "coproduct or closed")
      ->check(CLI::IsMember({"coproduct", "closed"}))
      ->capture_default_str();
  mat->add_option("--reading", reading, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();
  CLI::App* gram = sub("gram", "rank of the pairing Gram matrix");
  gram->add_option("--words", words, "bound on functional word length")->check(CLI::Range(0, 6));
  CLI::App* sph = sub("sphere", "quantum super spheres");
  sph->add_option("--alpha", alpha_text, "point a,b,c of CP^2 (expressions)");
  sph->add_flag("--infinity", infinity, "the point at infinity");
  sph->add_option("--check", check, "relations, basis, characters or coideal")
      ->check(CLI::IsMember({"relations", "basis", "characters", "coideal"}))
      ->capture_default_str();
  sph->add_option("--reading", reading, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();
  CLI::App* ver = sub("verify", "run verification suites");
  std::vector<std::string> names{"all"};
  for (auto& su : suites()) names.push_back(su.name);
  ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(names))->capture_default_str();

  std::vector<std::string> argv_store{"qsuper"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  auto emit_error = [&](const char* kind, const std::string& msg, std::optional<std::size_t> offset) {
    if (opt.json) {
      json e = {{"kind", kind}, {"message", msg}};
      if (offset) e["offset"] = *offset;
      out << json{{"error", e}}.dump(2) << "\n";
    }
    err << "qsuper: " << msg << "\n";
    return kUsage;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what(), std::nullopt);
    err << app.help();
    return kUsage;
  }

  for (Ring r : {Ring::B, Ring::Bsigma, Ring::Asigma}) Algebra::standard(r).set_cache_limit(opt.cache_size);
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  Renderer R(opt);
  json j_out = {{"command", name}};
  std::string text;
  int code = kOk;

  try {
    if (!numeric.empty()) {
      if (numeric.rfind("q=", 0) != 0) throw CLI::ValidationError("--numeric", "expected q=<rational>");
      double q = parse_rational(numeric.substr(2));
      if (q == 0) throw CLI::ValidationError("--numeric", "q must be nonzero");
      opt.numeric = std::complex<double>(q, 0);
    }
    Ring ring = ring_option(opt);
    j_out["ring"] = ring_name(ring);
    auto element = [&](const std::string& src) { return evaluate(parse(src), ring); };
    auto degree = [&](int d) { return opt.degree >= 0 ? opt.degree : d; };

    if (name == "nf" || name == "antipode" || name == "star") {
      Element x = element(x1);
      if (name == "antipode") x = HopfStructure::standard(ring).antipode(x);
      if (name == "star") x = HopfStructure::standard(ring).star(x);
      j_out["input"] = x1;
      j_out["result"] = R.element(x);
      text = R.text(x);
    } else if (name == "delta") {
      Tensor d = HopfStructure::standard(ring).coproduct(element(x1));
      j_out["input"] = x1;
      j_out["result"] = R.tensor(d);
      text = R.text(d);
    } else if (name == "eps" || name == "haar") {
      Element x = element(x1);
      Scalar v = name == "eps" ? HopfStructure::standard(ring).counit(x) : haar(x);
      j_out["input"] = x1;
      j_out["result"] = R.scalar(v);
      text = R.text(v);
    } else if (name == "grade") {
      Element x = element(x1);
      BiDegree g = bigrade(x);
      j_out["input"] = x1;
      j_out["parity"] = parity_name(x);
      j_out["bigrade"] = x.is_zero() || g.mixed ? json(nullptr) : json::array({g.m, g.n});
      text = std::string("parity: ") + parity_name(x) + "\nbigrade: " + (x.is_zero() ? "zero" : to_string(g));
    } else if (name == "pair") {
      Functional phi = evaluate_functional(parse(x1));
      Scalar v = standard_pairing(ring).eval(phi, element(x2));
      j_out["functional"] = x1;
      j_out["input"] = x2;
      j_out["result"] = R.scalar(v);
      text = R.text(v);
    } else if (name == "inner") {
      if (ring != Ring::Asigma) throw RingMismatch("inner products need the ring Asigma");
      Scalar v = qsuper::inner(form == "R" ? Form::R : Form::L, element(x1), element(x2));
      j_out["form"] = form;
      j_out["left"] = x1;
      j_out["right"] = x2;
      j_out["result"] = R.scalar(v);
      text = R.text(v);
    } else if (name == "jacobi") {
      Scalar b = evaluate_scalar(parse(base));
      QPolynomial p = little_jacobi(n, alpha, beta, b);
      json coeffs = json::array();
      for (auto& [k, c] : p.terms()) coeffs.push_back({{"power", k}, {"coefficient", R.scalar(c)}});
      j_out["n"] = n;
      j_out["alpha"] = alpha;
      j_out["beta"] = beta;
      j_out["base"] = R.scalar(b);
      j_out["result"] = {{"text", to_string(p)}, {"coefficients", coeffs}};
      text = to_string(p);
    } else if (name == "matcoef") {
      int tl = parse_half(l), ti = parse_half(i), tj = parse_half(j);
      CorepIndex{tl, ti, tj, s}.validate();
      Element x = source == "closed"
                      ? closed_form(tl, ti, tj, s, reading == "printed" ? Reading::Printed : Reading::Corrected)
                      : matrix_coefficients(tl, s).at(ti, tj);
      j_out["l"] = half_string(tl);
      j_out["i"] = half_string(ti);
      j_out["j"] = half_string(tj);
      j_out["s"] = s;
      j_out["source"] = source;
      if (source == "closed") j_out["reading"] = reading;
      j_out["result"] = R.element(x);
      text = R.text(x);
    } else if (name == "gram") {
      int deg = degree(2 * words);
      GramReport g = pairing_gram_rank(words, deg, ring);
      j_out["words"] = words;
      j_out["degree"] = deg;
      j_out["rows"] = g.rows;
      j_out["cols"] = g.cols;
      j_out["rank"] = g.rank;
      j_out["bound"] = g.bound;
      j_out["full"] = g.rank == g.bound;
      j_out["specialized"] = g.specialized;
      std::ostringstream os;
      os << "gram " << g.rows << "x" << g.cols << " rank " << g.rank << " (bound " << g.bound << ")"
         << (g.specialized ? " certified at a rational t" : "");
      text = os.str();
    } else if (name == "sphere") {
      if (infinity == !alpha_text.empty()) throw CLI::ValidationError("sphere", "give exactly one of --alpha, --infinity");
      SphereParams p = SphereParams::infinity();
      if (!infinity) {
        std::vector<std::string> parts;
        std::stringstream ss(alpha_text);
        for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
        if (parts.size() != 3) throw CLI::ValidationError("--alpha", "expected three comma-separated values");
        std::array<Scalar, 3> a;
        for (int k = 0; k < 3; ++k) a[k] = evaluate_scalar(parse(parts[k]));
        p = SphereParams::finite(a);
        json pt = json::array();
        for (auto& c : *p.alpha) pt.push_back(R.scalar(c));
        j_out["point"] = pt;
      } else {
        j_out["point"] = "infinity";
      }
      j_out["check"] = check;
      std::ostringstream os;
      Report rep;
      if (check == "relations") {
        json rels = json::array();
        for (auto k : {RelationKind::Quadratic, RelationKind::QuadraticSigma, RelationKind::Lower, RelationKind::Upper}) {
          RelationWitness w = find_relations(p, k);
          json wj = {{"kind", relation_name(k)}, {"nullity", w.nullity()}, {"witness", nullptr}};
          os << relation_name(k) << ": ";
          if (w.exists()) {
            json cs = json::array();
            std::string list;
            for (auto& c : *w.witness) {
              cs.push_back(R.scalar(c));
              list += (list.empty() ? "" : ", ") + R.text(c);
            }
            wj["witness"] = cs;
            os << "(" << list << ")\n";
          } else {
            os << "none exists (solution space dimension " << w.nullity() << ")\n";
          }
          rels.push_back(wj);
        }
        j_out["relations"] = rels;
        if (p.is_infinity()) {
          rep = verify_infinity_relations(reading == "printed" ? Reading::Printed : Reading::Corrected);
          j_out["report"] = Renderer::report(rep);
          os << report_text(rep);
        }
      } else if (check == "basis") {
        rep = sphere_basis_check(p, degree(3));
        j_out["report"] = Renderer::report(rep);
        os << report_text(rep);
      } else if (check == "coideal") {
        rep = verify_coideal(p);
        j_out["report"] = Renderer::report(rep);
        os << report_text(rep);
      } else {
        if (!p.is_infinity()) throw CLI::ValidationError("--check", "characters are computed for --infinity only");
        CharacterReport c = characters_of_S_infinity();
        rep = c.report;
        json chars = json::array();
        for (auto& y : c.characters) {
          chars.push_back(json::array({R.scalar(y[0]), R.scalar(y[1]), R.scalar(y[2])}));
          os << "(" << R.text(y[0]) << ", " << R.text(y[1]) << ", " << R.text(y[2]) << ")\n";
        }
        j_out["characters"] = chars;
        j_out["report"] = Renderer::report(rep);
        os << report_text(rep);
      }
      if (!rep.ok()) code = kVerifyFailed;
      text = os.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
    } else if (name == "verify") {
      json reports = json::array();
      std::ostringstream os;
      bool ok = true;
      for (auto& su : suites()) {
        if (suite != "all" && su.name != suite) continue;
        Report r = su.run(degree(su.default_degree));
        if (r.name.empty()) r.name = su.name;
        ok = ok && r.ok();
        reports.push_back(json{{"suite", su.name}, {"degree", degree(su.default_degree)}, {"report", Renderer::report(r)}});
        os << "[" << su.name << "] " << report_text(r);
      }
      j_out["suite"] = suite;
      j_out["ok"] = ok;
      j_out["reports"] = reports;
      if (!ok) code = kVerifyFailed;
      text = os.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
    }
  } catch (const ParseError& e) {
    return emit_error("parse", e.what(), e.offset);
  } catch (const EvalError& e) {
    return emit_error("eval", e.what(), e.offset);
  } catch (const CLI::ValidationError& e) {
    return emit_error("usage", e.what(), std::nullopt);
  } catch (const Error& e) {
    return emit_error("math", e.what(), std::nullopt);
  }

  if (opt.json) out << j_out.dump(2) << "\n";
  else out << text << "\n";
  return code;
}

}  // namespace qsuper::cli
