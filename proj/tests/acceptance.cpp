// Acceptance criteria, one line each. `acceptance` runs all of them;
// `acceptance N` runs criterion N only. Exit status is nonzero when any
// selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsuper/cli.hpp"

using namespace qsuper;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

std::string summary(const Report& r) {
  std::string s = std::to_string(r.checked) + " checked, " + std::to_string(r.failure_count) + " failed";
  if (!r.failures.empty()) s += " (first: " + r.failures[0].input + ")";
  return s;
}

// Collects sub-checks of one criterion.
struct Tally {
  bool pass = true;
  std::vector<std::string> parts;
  void add(bool ok, const std::string& what) {
    pass = pass && ok;
    parts.push_back(std::string(ok ? "ok" : "FAILED") + ": " + what);
  }
  Outcome outcome() const {
    std::string d;
    for (auto& p : parts) d += (d.empty() ? "" : "; ") + p;
    return {pass, d};
  }
};

Outcome basis_and_confluence() {
  Timer clock;
  Report r = verify_algebra(4, 1000, 2024, Ring::Asigma);
  double s = clock.seconds();
  Tally t;
  t.add(r.ok(), "associativity on 1000 random triples and idempotence on 250 words, " + summary(r));
  t.add(s < 60, "time " + secs(s) + " (limit 60 s)");
  return t.outcome();
}

Outcome hopf_axioms() {
  Timer clock;
  Report r = verify_hopf(4);
  double s = clock.seconds();
  Tally t;
  t.add(r.ok(), "degree <= 4, both sigma powers, " + summary(r));
  t.add(s < 120, "time " + secs(s) + " (limit 120 s)");
  return t.outcome();
}

Outcome comodule_algebra() {
  Tally t;
  for (Side side : {Side::Left, Side::Right}) {
    Report r = PlaneCoaction(side).verify(5);
    t.add(r.ok(), std::string(side == Side::Left ? "left" : "right") + " coaction, m+n <= 5, " + summary(r));
  }
  Report nil = PlaneCoaction(Side::Left, Ring::PlaneNil).verify(2);
  t.add(!nil.ok(), "imposing y^2 = 0 breaks multiplicativity (" + std::to_string(nil.failure_count) + " failures)");
  return t.outcome();
}

Outcome dual_relations() {
  Tally t;
  Report r = verify_uq_relations(5);
  t.add(r.ok(), "calibrated sign " + std::to_string(e_sign()) + ", degree <= 5, " + summary(r));
  DualPairing uncalibrated(Ring::Asigma, -e_sign());
  Report u = verify_uq_relations(1, uncalibrated);
  bool at_a = false;
  for (auto& f : u.failures) at_a |= f.input == "ef + fe = (k - k^-1)/(q - q^-1) at a";
  t.add(!u.ok() && at_a, "opposite sign fails ef + fe = (k - k^-1)/(q - q^-1) at a");
  return t.outcome();
}

Outcome pairing_evidence() {
  GramReport g = pairing_gram_rank(3, 6);
  Tally t;
  t.add(g.rank == g.bound, "Gram " + std::to_string(g.rows) + "x" + std::to_string(g.cols) + " has rank " +
                               std::to_string(g.rank) + ", maximal possible " + std::to_string(g.bound));
  return t.outcome();
}

Outcome spheres() {
  Tally t;
  Report m = verify_M({-0.5, -2.0});
  t.add(m.ok(), "Delta(M) = M (x) M, eps(M) = I, S(M) = M*^T, unitarity residual < 1e-9 at q = -1/2, -2: " +
                    summary(m));
  Report printed = verify_infinity_relations(Reading::Printed);
  Report corrected = verify_infinity_relations(Reading::Corrected);
  t.add(printed.ok(), "four relations at infinity as stated: " + summary(printed) +
                          "; with the commutator sign and the unit-relation coefficients amended: " +
                          summary(corrected));
  CharacterReport c = characters_of_S_infinity();
  std::array<Scalar, 3> plus{Scalar(), Scalar(1), Scalar()}, minus{Scalar(), Scalar(-1), Scalar()};
  bool chars = c.report.ok() && c.characters.size() == 2 &&
               ((c.characters[0] == plus && c.characters[1] == minus) ||
                (c.characters[0] == minus && c.characters[1] == plus));
  t.add(chars, "characters = {(0, 1, 0), (0, -1, 0)}");
  bool none = true;
  for (auto p : {SphereParams::finite({Scalar(1), Scalar(), Scalar(1)}),
                 SphereParams::finite({Scalar(1), Scalar(), Scalar(0)}),
                 SphereParams::finite({Scalar(1), Scalar(), Scalar(2)})})
    none = none && !find_relations(p, RelationKind::Lower).exists();
  t.add(none, "alpha_0 = 0 gives no lower relation with nonzero coefficients");
  return t.outcome();
}

Outcome matrix_coefficients_check() {
  Timer clock;
  Report r = verify_closed_form(5, Reading::Corrected);
  double s = clock.seconds();
  Tally t;
  t.add(r.ok(), "all entries 2l <= 5, both sigma powers, square-root-free normalization: " + summary(r));
  t.add(s < 600, "time " + secs(s) + " (limit 600 s)");
  return t.outcome();
}

Outcome power_formulas() {
  Report r = verify_power_formulas(6, 5);
  Tally t;
  t.add(r.ok(), "powers m <= 6, projected powers n <= 5: " + summary(r));
  return t.outcome();
}

Outcome haar_and_peter_weyl() {
  Tally t;
  IntegralReport in = verify_integral(5);
  t.add(in.report.ok(), "two-sided integral on monomials of degree <= 5: " + std::to_string(in.literal_holds) +
                            " literal, " + std::to_string(in.sigma_line) + " on the sigma line (integral is c_1 + c_sigma sigma)");
  bool routes = true;
  for (int n = 0; n <= 8; ++n) routes = routes && haar_by_decomposition(n, 0) == haar_zeta_power(n);
  t.add(routes, "h(zeta^n), n <= 8, direct formula = corepresentation decomposition");
  bool desc = true;
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) desc = desc && moments(r, s, MomentVariant::Descending).match;
  t.add(desc, "descending moments r, s <= 4");
  bool asc = !moments(0, 0, MomentVariant::Ascending).match && !moments(1, 0, MomentVariant::Ascending).match;
  t.add(asc, "ascending-moment discrepancy at (0,0), (1,0) reproduced");
  PeterWeylReport pw = verify_peter_weyl(3);
  t.add(pw.report.ok(), "orthogonality across distinct (l, i, j), 2l, 2l' <= 3: " + summary(pw.report));
  t.add(pw.cross_sigma_nonzero == 0 && pw.printed_mismatches == 0,
        "stated orthogonality values including cross-s: " + std::to_string(pw.cross_sigma_nonzero) + " of " +
            std::to_string(pw.cross_sigma_pairs) + " cross-s pairs are nonzero (already <1, s>_R = h(s) = 1), " +
            std::to_string(pw.printed_mismatches) + " sign mismatches in the R form");
  Report e = verify_e_products(3, Reading::Printed);
  Report ec = verify_e_products(3, Reading::Corrected);
  t.add(e.ok(), "e_mn e_mn* formulas as stated, |m|, |n| <= 3: " + summary(e) +
                    "; with exponent (m-n)(m+n)/2 in the m >= n case: " + summary(ec));
  return t.outcome();
}

Outcome completeness() {
  Report r = verify_completeness(4, 4);
  Tally t;
  t.add(r.ok(), "monomials of degree <= 4 in entries with 2l <= 4: " + summary(r));
  return t.outcome();
}

Expr random_expr(std::mt19937& rng, int depth) {
  static const char* names[] = {"a", "b", "c", "d", "s", "t", "q", "i", "zeta", "kappa"};
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 8);
  switch (kind(rng)) {
    case 0: return Expr::num(std::to_string(std::uniform_int_distribution<int>(0, 99)(rng)));
    case 1: return Expr::sym(names[std::uniform_int_distribution<int>(0, 9)(rng)]);
    case 2: return Expr::call("sqrt", random_expr(rng, depth - 1));
    case 3: return Expr::unary(Expr::Neg, random_expr(rng, depth - 1));
    case 4: return Expr::binary(Expr::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5: return Expr::binary(Expr::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6: return Expr::binary(Expr::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return Expr::binary(Expr::Div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::pow(random_expr(rng, depth - 1), std::uniform_int_distribution<int>(-2, 4)(rng));
  }
}

Outcome command_line() {
  Tally t;
  std::mt19937 rng(7);
  int stable = 0;
  for (int n = 0; n < 1000; ++n) {
    Expr e = random_expr(rng, 5);
    Expr back = parse(print(e));
    if (back == e && parse(print(back)) == back) ++stable;
  }
  t.add(stable == 1000, "parse(print(x)) = x on " + std::to_string(stable) + "/1000 random trees");
  auto code = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  bool codes = code({"nf", "d*a"}) == 0 && code({"verify", "--suite", "hopf", "--degree", "2"}) == 0 &&
               code({"sphere", "--infinity", "--reading", "printed"}) == 1 && code({"nf", "a*("}) == 2 &&
               code({"frobnicate"}) == 2 && code({"nf", "a", "--ring", "C"}) == 2;
  t.add(codes, "exit codes 0 success, 1 verification failure, 2 usage error");
  std::string cmd = std::string("python3 ") + QSUPER_SOURCE_DIR + "/tests/validate_cli_json.py " + QSUPER_CLI_PATH +
                    " " + QSUPER_SOURCE_DIR + "/docs/schemas > /dev/null 2>&1";
  t.add(std::system(cmd.c_str()) == 0, "JSON outputs validate against docs/schemas");
  return t.outcome();
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {"basis and confluence", basis_and_confluence},
      {"Hopf axioms", hopf_axioms},
      {"comodule algebra", comodule_algebra},
      {"dual relations", dual_relations},
      {"pairing evidence", pairing_evidence},
      {"spheres", spheres},
      {"matrix coefficients", matrix_coefficients_check},
      {"power formulas", power_formulas},
      {"Haar and Peter-Weyl", haar_and_peter_weyl},
      {"completeness witness", completeness},
      {"command line", command_line},
  };
  std::vector<int> pick;
  for (int k = 1; k < argc; ++k) pick.push_back(std::atoi(argv[k]));
  if (pick.empty())
    for (int k = 1; k <= static_cast<int>(all.size()); ++k) pick.push_back(k);
  bool ok = true;
  for (int k : pick) {
    if (k < 1 || k > static_cast<int>(all.size())) {
      std::cerr << "no criterion " << k << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = all[k - 1].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    ok = ok && o.pass;
    std::cout << "criterion " << k << " (" << all[k - 1].name << "): " << (o.pass ? "PASS" : "FAIL") << " | "
              << o.detail << std::endl;
  }
  return ok ? 0 : 1;
}
