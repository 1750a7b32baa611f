// One pass/fail line per acceptance criterion.

#include "qaff/fund_c.hpp"
#include "qaff/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace qaff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string tag(const AffineType& t) { return family_name(t.family) + std::to_string(t.n); }
std::string pair(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

std::vector<AffineType> typesA() { return {{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}}; }
std::vector<AffineType> typesC() { return {{Family::C, 2}, {Family::C, 3}}; }
std::vector<AffineType> all_types() {
  auto v = typesA();
  for (auto t : typesC()) v.push_back(t);
  return v;
}

Outcome c1() {
  Outcome o;
  int pairs = 0;
  for (auto t : typesA())
    for (auto [k, l] : budget_pairs(t, 1 << 20)) {
      ++pairs;
      if (!(fundamental_R(t, k, l).denominator == closed_form_d(t, k, l))) o.fail(tag(t) + " d" + pair(k, l));
    }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, n = 2..5";
  return o;
}

Outcome c2() {
  Outcome o;
  int pairs = 0;
  for (auto t : typesC())
    for (auto [k, l] : budget_pairs(t, 400)) {
      ++pairs;
      if (!(fundamental_R(t, k, l).denominator == closed_form_d(t, k, l))) o.fail(tag(t) + " d" + pair(k, l));
    }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, n = 2, 3, dim <= 400";
  return o;
}

Outcome c3() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    auto E = explicit_R11_C(n);
    const auto& R = fundamental_R({Family::C, n}, 1, 1);
    for (int r = 0; r < R.dim(); ++r)
      for (int c = 0; c < R.dim(); ++c)
        if (!(E.get(r, c) == R.entry(r, c))) o.fail("R11 C" + std::to_string(n) + " entry " + pair(r, c));
    for (int k = 1; k <= n; ++k)
      for (const auto& cr : component_ratios(fundamental_R({Family::C, n}, k, 1), k))
        if (!cr.unit_ok) o.fail("gamma C" + std::to_string(n) + " k=" + std::to_string(k) + ": " + cr.gamma.to_string());
  }
  if (o.pass) o.detail = "R11 entrywise n = 2, 3; gamma ratios k <= n";
  return o;
}

Outcome c4() {
  Outcome o;
  int n = 0;
  for (auto t : all_types())
    for (const auto& it : relation_suite(t, 3, 2024)) {
      ++n;
      if (!it.pass) o.fail(it.name + ": " + it.detail);
    }
  if (o.pass) o.detail = std::to_string(n) + " modules";
  return o;
}

Outcome c5() {
  Outcome o;
  for (auto t : all_types()) {
    const auto& R = fundamental_R(t, 1, 1);
    auto y = yang_baxter(R, R, R);
    if (!y.holds) o.fail(tag(t) + " " + y.error);
  }
  if (o.pass) o.detail = "V1 triples, A2-A5, C2-C3, x formal";
  return o;
}

Outcome c6() {
  Outcome o;
  int n = 0;
  for (auto t : all_types())
    for (auto [k, l] : budget_pairs(t, 400)) {
      if (k > l) continue;
      ++n;
      auto r = inversion(fundamental_R(t, k, l), fundamental_R(t, l, k));
      if (!r.identity || !r.spot) o.fail(tag(t) + pair(k, l));
    }
  if (o.pass) o.detail = std::to_string(n) + " unordered pairs";
  return o;
}

Outcome c7() {
  Outcome o;
  int n = 0;
  for (auto t : all_types())
    for (auto [k, l] : budget_pairs(t, 400)) {
      for (const auto& f : functional_checks(t, k, l, 8)) {
        ++n;
        if (!f.holds) o.fail(tag(t) + pair(k, l) + " " + f.name + " " + f.detail);
      }
    }
  if (o.pass) o.detail = std::to_string(n) + " identities, M = 8";
  return o;
}

Outcome c8() {
  Outcome o;
  int n = 0;
  for (auto t : all_types()) {
    if (t.family == Family::A && t.n > 4) continue;
    int top = t.family == Family::A ? t.n - 1 : t.n;
    for (int i = 1; i <= top; ++i) {
      ++n;
      auto r = check_conj2(t, i);
      if (!r.ok()) o.fail(tag(t) + " i=" + std::to_string(i) + (r.failures.empty() ? "" : ": " + r.failures[0]));
    }
  }
  if (check_conj2({Family::A, 4}, 2).dims != std::vector<int>{5, 3, 1}) o.fail("A4 i=2 dims");
  if (!check_conj2({Family::C, 2}, 2).cond1) o.fail("C2 i=2 top line");
  if (o.pass) o.detail = std::to_string(n) + " cases; A4 i=2 dims 5/3/1";
  return o;
}

Outcome c9() {
  Outcome o;
  int points = 0, pairs = 0;
  for (auto t : all_types())
    for (auto [i, j] : budget_pairs(t, 400)) {
      auto sw = pole_reducibility_sweep(t, i, j, 2 * (t.n + 2));
      ++pairs;
      points += static_cast<int>(sw.items.size());
      if (sw.disagreements) o.fail(tag(t) + pair(i, j) + ": " + std::to_string(sw.disagreements) + " disagreements");
    }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(points) + " points";
  return o;
}

Outcome c10() {
  Outcome o;
  int n = 0;
  for (auto t : {AffineType{Family::A, 2}, AffineType{Family::A, 3}, AffineType{Family::C, 2}, AffineType{Family::C, 3}})
    for (const auto& it : crystal_suite(t, empirical_tensor_rule(t))) {
      ++n;
      if (!it.pass) o.fail(it.name + ": " + it.detail);
    }
  if (module_C(2, 2).dim() != 5 || build_crystal_C(2, 2).size() != 5) o.fail("C2 k=2 count");
  if (module_C(3, 2).dim() != 14 || build_crystal_C(3, 2).size() != 14) o.fail("C3 k=2 count");
  if (o.pass) o.detail = std::to_string(n) + " crystals; KN counts 5, 14";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome c11() {
  Outcome o;
  const std::string dir = ACCEPT_TMP;
  std::string a = dir + "/selftest_a.json", b = dir + "/selftest_b.json";
  for (const auto& p : {a, b}) {
    std::string cmd = std::string(QAFF_CLI) + " verify selftest --budget small --out " + p;
    if (std::system(cmd.c_str()) != 0) o.fail("selftest run failed: " + p);
  }
  std::string sa = slurp(a), sb = slurp(b);
  if (sa.empty()) o.fail("empty report");
  if (sa != sb) o.fail("reports differ");
  if (o.pass) o.detail = std::to_string(sa.size()) + " bytes, identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> crit = {
      {"type A denominators", c1},   {"type C denominators", c2}, {"explicit R11 and component ratios", c3},
      {"defining relations", c4},    {"Yang-Baxter", c5},         {"inversion", c6},
      {"functional equations", c7},  {"filtration data", c8},     {"pole iff reducible", c9},
      {"crystal suite", c10},        {"determinism", c11}};
  int failed = 0;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", dt);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << crit[k].first << " -- " << o.detail << " ["
              << buf << "]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all passed"))
            << std::endl;
  return failed ? 1 : 0;
}
