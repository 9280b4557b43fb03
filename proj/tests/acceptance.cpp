// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lly/families.hpp"
#include "lly/regularity.hpp"
#include "lly/spectra.hpp"
#include "lly/transport.hpp"
#include "lly/verify.hpp"
#include "suites.hpp"

using namespace lly;

namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

struct Expected {
  QuadSurd lambda1;
  Rational kappa;
  bool sharp;
};

class Criterion {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 8) detail_ << (detail_.tellp() > 0 ? "; " : "") << why;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const { return detail_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream detail_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failed = 0;

void report(int id, const std::string& title, const std::function<void(Criterion&)>& body, double limit_s = 0) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  if (limit_s > 0 && t > limit_s) c.fail("took " + std::to_string(t) + " s, limit " + std::to_string(limit_s) + " s");
  if (!c.ok()) ++failed;
  std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
            << std::setprecision(2) << t << " s)";
  if (!c.ok()) std::cout << " -- " << c.detail();
  std::cout << std::endl;
}

void check_rows(Criterion& c, const std::vector<TableRow>& rows, const std::map<std::string, Expected>& want,
                bool require_exact) {
  std::set<std::string> seen;
  for (const auto& r : rows) {
    const auto it = want.find(r.label);
    if (it == want.end()) {
      c.fail("unexpected row " + r.label);
      continue;
    }
    seen.insert(r.label);
    const Expected& e = it->second;
    c.expect(r.match, r.label + " does not match its table entry");
    c.expect(r.kappa_min == e.kappa, r.label + " kappa " + to_string(r.kappa_min));
    c.expect(r.sharp == e.sharp, r.label + " sharpness");
    c.expect(std::abs(r.lambda1 - e.lambda1.to_double()) < 1e-9, r.label + " lambda1 " + std::to_string(r.lambda1));
    if (r.exact_lambda1) {
      c.expect(*r.exact_lambda1 == e.lambda1, r.label + " exact lambda1 " + r.exact_lambda1->to_string());
    } else {
      c.expect(!require_exact, r.label + " has no exact lambda1");
    }
  }
  for (const auto& [label, e] : want) c.expect(seen.count(label) == 1, "missing row " + label);
}

// Table 1: strongly regular rows, exact values.
void criterion1(Criterion& c) {
  std::map<std::string, Expected> want;
  for (int n = 2; n <= 5; ++n) want["CP(" + std::to_string(n) + ")"] = {QuadSurd(q(1)), q(1), true};
  for (int n = 2; n <= 5; ++n) {
    const Rational v = q(n, 2 * (n - 1));
    want["H(2," + std::to_string(n) + ")"] = {QuadSurd(v), v, true};
  }
  for (int n = 4; n <= 7; ++n) {
    const Rational v = q(n, 2 * (n - 2));
    want["T(" + std::to_string(n) + ")"] = {QuadSurd(v), v, true};
  }
  want["Shrikhande"] = {QuadSurd(q(2, 3)), q(1, 3), false};
  for (int i = 1; i <= 3; ++i) want["Chang " + std::to_string(i)] = {QuadSurd(q(2, 3)), q(1, 3), false};
  want["Petersen"] = {QuadSurd(q(2, 3)), q(0), false};
  want["Clebsch"] = {QuadSurd(q(4, 5)), q(4, 5), true};
  want["Schlafli"] = {QuadSurd(q(3, 4)), q(3, 4), true};
  TableConfig config;
  config.table2 = false;
  check_rows(c, reproduce_tables(config), want, true);
}

// Table 2: distance-regular rows of diameter at least 2 (and the trivial H(1,n)).
void criterion2(Criterion& c) {
  std::map<std::string, Expected> want;
  for (int d = 1; (1 << d) <= 256; ++d) {
    for (int n = 2; std::pow(n, d) <= 256; ++n) {
      const Rational v = q(n, d * (n - 1));
      want["H(" + std::to_string(d) + "," + std::to_string(n) + ")"] = {QuadSurd(v), v, true};
    }
  }
  for (int n = 2; n <= 70; ++n) {
    BigInt b = 1;
    for (int k = 1; k < n; ++k) {
      b = b * (n - k + 1) / k;
      if (b > 70) continue;
      const Rational v = q(n, k * (n - k));
      want["J(" + std::to_string(n) + "," + std::to_string(k) + ")"] = {QuadSurd(v), v, true};
    }
  }
  for (int n = 2; n <= 7; ++n) want["demi_cube(" + std::to_string(n) + ")"] = {QuadSurd(q(4, n)), q(4, n), true};
  want["Gosset"] = {QuadSurd(q(2, 3)), q(2, 3), true};
  want["Doob(1,1)"] = {QuadSurd(q(4, 9)), q(2, 9), false};
  want["Icosahedron"] = {QuadSurd(q(1), q(-1, 5), BigInt(5)), q(2, 5), false};
  TableConfig config;
  config.table1 = false;
  check_rows(c, reproduce_tables(config), want, false);
}

void criterion3(Criterion& c) {
  const std::vector<std::tuple<std::string, Graph, Rational, std::size_t>> cases{
      {"L(C5)", line_graph(cycle(5)), q(1, 2), 5},
      {"L(Petersen)", line_graph(petersen()), q(1, 4), 30},
      {"L(Hoffman-Singleton)", line_graph(hoffman_singleton()), q(1, 12), 1050},
  };
  for (const auto& [name, g, kappa, edges] : cases) {
    const auto r = curvature_report(g, 1);
    c.expect(r.edges.size() == edges, name + " edge count " + std::to_string(r.edges.size()));
    c.expect(r.kappa_min == kappa && r.kappa_max == kappa,
             name + " curvature range [" + to_string(r.kappa_min) + ", " + to_string(r.kappa_max) + "]");
  }
}

// d is the degree of the host graph.
void criterion4(Criterion& c) {
  for (const auto& [name, g, d, lambda] : std::vector<std::tuple<std::string, Graph, int, Rational>>{
           {"L(Petersen)", line_graph(petersen()), 3, q(1, 2)},
           {"L(Hoffman-Singleton)", line_graph(hoffman_singleton()), 7, q(5, 12)}}) {
    const auto v = sharpness(g);
    c.expect(!v.sharp, name + " reported sharp");
    c.expect(v.exact_lambda1 && *v.exact_lambda1 == QuadSurd(lambda), name + " exact lambda1");
    const double closed = (2.0 * d + 1 - std::sqrt(4.0 * d - 3)) / (4.0 * d - 4);
    c.expect(std::abs(v.lambda1 - closed) < 1e-9, name + " lambda1 " + std::to_string(v.lambda1));
    c.expect(v.kappa_min < lambda, name + " kappa_min not below lambda1");
  }
}

void criterion5(Criterion& c) {
  for (const auto& [name, host] : std::vector<std::pair<std::string, Graph>>{{"dodecahedron", dodecahedron()},
                                                                             {"Heawood", heawood()}}) {
    const auto r = curvature_report(line_graph(host));
    c.expect(r.kappa_min <= 0, "L(" + name + ") kappa_min " + to_string(r.kappa_min));
    const auto s = check_line_graph_sign(host);
    c.expect(s.status == LineGraphSign::yes, "L(" + name + ") sign check: " + s.reason);
  }
}

void fold(Criterion& c, const suites::Outcome& o) {
  if (!o.ok()) c.fail(o.summary());
}

void criterion6(Criterion& c) { fold(c, suites::oracle_equivalence(6, 20)); }

void criterion7(Criterion& c) {
  const auto corpus = standard_corpus();
  fold(c, suites::metric_triples(500));
  fold(c, suites::concavity(200));
  fold(c, suites::simple_plans(200));
  fold(c, suites::edge_bounds(corpus));
  int srg = 0;
  fold(c, suites::srg_identity_and_rigidity(corpus, &srg));
  c.expect(srg >= 20, "only " + std::to_string(srg) + " strongly regular graphs exercised");
  fold(c, suites::trace_identities(corpus));
  for (const auto& [label, g] : corpus) c.expect(check_bounds(g).ok(), label + " violates a bound");
}

void criterion8(Criterion& c) {
  std::set<std::string> want_sharp;
  for (int n = 2; n <= 6; ++n) want_sharp.insert("complete(" + std::to_string(n) + ")");
  want_sharp.insert("cycle(4)");
  for (int n = 2; n <= 5; ++n) want_sharp.insert("cocktail_party(" + std::to_string(n) + ")");
  for (int n = 2; n <= 5; ++n) want_sharp.insert("hamming(2," + std::to_string(n) + ")");
  for (int n = 2; n <= 4; ++n) want_sharp.insert("hamming(3," + std::to_string(n) + ")");
  want_sharp.insert({"hamming(4,2)", "hamming(5,2)", "johnson(6,3)", "johnson(7,3)", "johnson(8,4)", "clebsch",
                     "schlafli", "gosset"});
  for (int n = 4; n <= 7; ++n) want_sharp.insert("triangular(" + std::to_string(n) + ")");
  for (int n = 2; n <= 7; ++n) want_sharp.insert("demi_cube(" + std::to_string(n) + ")");
  const std::set<std::string> want_artg{"cycle(5)", "icosahedron", "line_graph(cycle(5))", "line_graph(petersen)",
                                        "line_graph(hoffman_singleton)"};

  std::set<std::string> sharp, artg;
  for (const auto& [label, g] : standard_corpus()) {
    const auto v = sharpness(g);
    c.expect(v.lower_bound_holds, label + " has lambda1 below kappa_min");
    if (v.sharp) {
      sharp.insert(label);
      c.expect(match_sharp_family(g).has_value(), label + " is sharp but unclassified");
    }
    const auto a = classify_artg(g);
    c.expect(a.status != ArtgStatus::counterexample_candidate, label + ": " + a.reason);
    if (a.status == ArtgStatus::member) artg.insert(label);
    const auto ar = amply_params(g);
    if (accepted(ar) && accepted(ar)->beta == 1) c.expect(!v.sharp, label + " has beta = 1 and is sharp");
  }
  for (const auto& s : want_sharp) c.expect(sharp.count(s) == 1, s + " not sharp");
  for (const auto& s : sharp) c.expect(want_sharp.count(s) == 1, s + " unexpectedly sharp");
  c.expect(artg == want_artg, "positive ARTG set differs (" + std::to_string(artg.size()) + " members)");
}

}  // namespace

int main() {
  report(1, "strongly regular table reproduced exactly", criterion1, 60);
  report(2, "distance-regular table reproduced", criterion2, 180);
  report(3, "constant curvature of the line graphs", criterion3, 120);
  report(4, "line graphs with beta = 1 are not sharp", criterion4);
  report(5, "non-positive edge in line graphs of large-girth hosts", criterion5);
  report(6, "transport and curvature agree with the oracles", criterion6);
  report(7, "property suites", criterion7);
  report(8, "classification sweep over the corpus", criterion8);
  return failed == 0 ? 0 : 1;
}
