// qaff: crystals, normalized R-matrices and verification reports.

#include "CLI11.hpp"
#include "json.hpp"
#include "qaff/fund_c.hpp"
#include "qaff/verify.hpp"

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace qaff;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kCapA = 5, kCapC = 3, kCapFactors = 3, kCapOrder = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "A";
  int n = 3;
  int order = 8;
  int jobs = 1;
  bool unsafe = false;
  std::string out;
  // subcommand arguments
  int k = 0, i = 0, j = 0;
  std::string tensor_list, dot_path, rule = "fixed", factors, budget = "small";
  bool json_out = false, check_closed = false, no_entries = false, text = false, sweep = false;
  unsigned seed = 1;
};

AffineType type_of(const Options& o) {
  Family f;
  try {
    f = parse_family(o.family);
  } catch (const std::exception&) {
    throw UsageError("unknown family '" + o.family + "'");
  }
  AffineType t{f, o.n};
  if (o.n < 2) throw UsageError("need n >= 2");
  int cap = f == Family::A ? kCapA : kCapC;
  if (o.n > cap && !o.unsafe)
    throw BudgetError("n = " + std::to_string(o.n) + " exceeds the cap " + std::to_string(cap) + " for type " + o.family +
                      " (use --unsafe-budget)");
  if (o.order > kCapOrder && !o.unsafe) throw BudgetError("series order exceeds the cap " + std::to_string(kCapOrder));
  return t;
}

int max_index(const AffineType& t) { return t.family == Family::A ? t.n - 1 : t.n; }

void check_index(const AffineType& t, int k, const std::string& what) {
  if (k < 1 || k > max_index(t))
    throw UsageError(what + " must lie in 1.." + std::to_string(max_index(t)) + " for " + family_name(t.family) +
                     std::to_string(t.n));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

json weight_json(const Weight& w) { return json(w.c); }

json manifest(const Options& o, const AffineType& t) {
  json m;
  m["tool"] = "qaff";
  m["version"] = kVersion;
  m["family"] = family_name(t.family);
  m["n"] = t.n;
  m["order"] = o.order;
  m["jobs"] = o.jobs;
  m["caps"] = {{"A", kCapA}, {"C", kCapC}, {"factors", kCapFactors}, {"order", kCapOrder}};
  m["unsafe_budget"] = o.unsafe;
  m["conventions"] = {{"scalar", "q = s^2, s = q_s"},
                      {"coproduct", "e -> e(x)t^-1 + 1(x)e, f -> f(x)1 + t(x)f"},
                      {"tensor_rule", rule_name(empirical_tensor_rule(t))},
                      {"ordering", ordering_convention()}};
  return m;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

// ---------------------------------------------------------------- crystal

int cmd_crystal(const Options& o) {
  AffineType t = type_of(o);
  std::vector<int> ks;
  if (!o.tensor_list.empty()) {
    for (const auto& s : split(o.tensor_list, ',')) ks.push_back(to_int(s));
    if (ks.empty()) throw UsageError("empty --tensor list");
  } else if (o.k) {
    ks.push_back(o.k);
  } else {
    throw UsageError("give --k or --tensor");
  }
  if (static_cast<int>(ks.size()) > kCapFactors && !o.unsafe) throw BudgetError("too many tensor factors");
  for (int k : ks) check_index(t, k, "k");
  TensorRule rule;
  if (o.rule == "fixed")
    rule = empirical_tensor_rule(t);
  else if (o.rule == "kashiwara")
    rule = TensorRule::Kashiwara;
  else if (o.rule == "mirrored")
    rule = TensorRule::Mirrored;
  else
    throw UsageError("unknown rule '" + o.rule + "'");
  CrystalGraph B = fundamental_crystal(t, ks[0]);
  for (std::size_t a = 1; a < ks.size(); ++a) B = tensor(B, fundamental_crystal(t, ks[a]), rule);
  std::string name = "B";
  for (int k : ks) name += std::to_string(k);
  if (!o.dot_path.empty()) {
    std::ofstream f(o.dot_path);
    if (!f) throw UsageError("cannot write " + o.dot_path);
    f << B.to_dot(name);
  }
  if (!o.dot_path.empty() && !o.json_out) return 0;
  json j;
  j["manifest"] = manifest(o, t);
  j["crystal"] = name;
  j["rule"] = rule_name(rule);
  json nodes = json::array(), arrows = json::array();
  const RootData& rd = B.root_data();
  for (int b = 0; b < B.size(); ++b) {
    nodes.push_back({{"label", B.label(b)}, {"weight", weight_json(B.wt(b))}});
    for (int i = 0; i < rd.num_nodes(); ++i)
      if (B.f(i, b) >= 0) arrows.push_back({{"i", i}, {"from", B.label(b)}, {"to", B.label(B.f(i, b))}});
  }
  j["size"] = B.size();
  j["nodes"] = nodes;
  j["arrows"] = arrows;
  auto ax = B.check_axioms();
  auto sr = is_simple(B);
  j["checks"] = {{"axioms", ax.empty()}, {"connected", is_connected(B)}, {"simple", sr.simple}};
  emit(o, j);
  return 0;
}

// ---------------------------------------------------------------- rmatrix

json rmatrix_json(const RMatrixResult& R, bool entries) {
  json j;
  j["dim"] = R.dim();
  j["denominator"] = factored_string(R.poles, R.residual);
  j["denominator_expanded"] = R.denominator.to_string();
  json poles = json::array();
  for (const auto& [r, m] : R.poles) poles.push_back({{"root", r.to_string()}, {"multiplicity", m}});
  j["poles"] = poles;
  j["hom_dim"] = R.hom_dim;
  j["minimal"] = R.minimal;
  json comps = json::array();
  for (const auto& c : R.comps)
    comps.push_back({{"lambda", weight_json(c.lambda)}, {"a", c.a}, {"b", c.b}, {"gamma", c.gamma.to_string()}});
  j["components"] = comps;
  if (entries) {
    j["source_labels"] = R.source_labels();
    j["target_labels"] = R.target_labels();
    json e = json::array();
    for (int r = 0; r < R.numerator.rows(); ++r)
      for (const auto& [c, v] : R.numerator.row(r)) e.push_back({r, c, R.entry(r, c).to_string()});
    j["entries"] = e;
  }
  return j;
}

int cmd_rmatrix(const Options& o) {
  AffineType t = type_of(o);
  check_index(t, o.i, "i");
  check_index(t, o.j, "j");
  const RMatrixResult& R = fundamental_R(t, o.i, o.j);
  json j;
  j["manifest"] = manifest(o, t);
  j["pair"] = {o.i, o.j};
  j["rmatrix"] = rmatrix_json(R, !o.no_entries);
  bool pass = true;
  if (o.check_closed) {
    ZPoly c = closed_form_d(t, o.i, o.j);
    bool match = c == R.denominator;
    j["closed_form"] = {{"d", c.to_string()}, {"verdict", match ? "match" : "mismatch"}};
    pass = match;
  }
  emit(o, j);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- verify

json item(const std::string& name, bool pass, const std::string& detail = "") {
  json j;
  j["name"] = name;
  j["pass"] = pass;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

std::vector<TensorFactor> parse_factors(const std::string& s) {
  std::vector<TensorFactor> out;
  for (const auto& f : split(s, ',')) {
    auto parts = split(f, ':');
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("factor '" + f + "' is not index:exponent[:sign]");
    TensorFactor tf{to_int(parts[0]), to_int(parts[1]), parts.size() == 3 ? to_int(parts[2]) : 1};
    if (tf.sign != 1 && tf.sign != -1) throw UsageError("sign must be 1 or -1");
    out.push_back(tf);
  }
  return out;
}

json conj1_json(const Conj1Report& r) {
  return {{"order", r.order},       {"dim", r.dim},
          {"generated", r.generated}, {"cyclic", r.cyclic},
          {"cocyclic", r.cocyclic}, {"literal_reading", r.literal_ok},
          {"fixed_reading", r.reversed_ok}, {"pass", r.ok()}};
}

json conj2_json(int i, const Conj2Report& r) {
  return {{"i", i},
          {"dims", r.dims},
          {"cond1", r.cond1},
          {"cond2", r.cond2},
          {"cond3", r.cond3},
          {"cond4", r.cond4},
          {"valuations", r.valuations},
          {"intertwiners", r.intertwiners},
          {"failures", r.failures},
          {"pass", r.ok()}};
}

json table_json(const PoleTable& tab) {
  json rows = json::array();
  for (const auto& r : tab.rows) {
    json roots = json::array();
    for (const auto& [c, m] : r.roots) roots.push_back({{"root", c.to_string()}, {"multiplicity", m}});
    rows.push_back({{"i", r.i},
                    {"j", r.j},
                    {"d", factored_string(r.roots, r.form_ok ? ZPoly(1) : r.d)},
                    {"closed_form", r.closed.to_string()},
                    {"match", r.match},
                    {"roots", roots},
                    {"monomial_roots", r.form_ok},
                    {"exponent_range", r.range_ok},
                    {"max_order", r.max_order}});
  }
  return {{"bound", tab.bound}, {"rows", rows}, {"pass", tab.ok()}};
}

json witness_json(const WitnessReport& w) {
  json items = json::array();
  for (const auto& it : w.items)
    items.push_back({{"diagram", it.family},
                     {"i", it.i},
                     {"root", it.root.to_string()},
                     {"nonzero", it.nonzero},
                     {"kills_u", it.kills_hw},
                     {"intertwiner", it.intertwiner}});
  return {{"k", w.k}, {"l", w.l}, {"items", items}, {"covers_roots", w.covers_roots}, {"pass", w.ok()}};
}

int finish(const Options& o, json j, bool pass) {
  j["pass"] = pass;
  emit(o, j);
  return pass ? 0 : 1;
}

int cmd_conj1(const Options& o) {
  AffineType t = type_of(o);
  TensorSpec spec{t, parse_factors(o.factors)};
  if (spec.factors.empty()) throw UsageError("give --factors");
  if (static_cast<int>(spec.factors.size()) > kCapFactors && !o.unsafe) throw BudgetError("too many tensor factors");
  for (const auto& f : spec.factors) check_index(t, f.index, "factor index");
  Conj1Report r = check_conj1(spec);
  json j;
  j["manifest"] = manifest(o, t);
  j["factors"] = o.factors;
  j["report"] = conj1_json(r);
  return finish(o, j, r.ok());
}

int cmd_conj2(const Options& o) {
  AffineType t = type_of(o);
  std::vector<int> is;
  if (o.i) {
    check_index(t, o.i, "i");
    is.push_back(o.i);
  } else {
    for (int i = 1; i <= max_index(t); ++i) is.push_back(i);
  }
  json j, reps = json::array();
  j["manifest"] = manifest(o, t);
  bool pass = true;
  for (int i : is) {
    Conj2Report r = check_conj2(t, i);
    pass = pass && r.ok();
    reps.push_back(conj2_json(i, r));
  }
  j["reports"] = reps;
  return finish(o, j, pass);
}

int cmd_poles(const Options& o) {
  AffineType t = type_of(o);
  PoleTable tab = pole_table(t, budget_pairs(t, 400));
  if (o.text) {
    emit(o, tab.to_text());
    return tab.ok() ? 0 : 1;
  }
  json j;
  j["manifest"] = manifest(o, t);
  j["table"] = table_json(tab);
  bool pass = tab.ok();
  if (t.family == Family::C) {
    json ws = json::array();
    for (int k = 1; k <= t.n; ++k)
      for (int l = 1; l <= k; ++l) {
        WitnessReport w = reducibility_witnesses_C(t.n, k, l);
        pass = pass && w.ok();
        ws.push_back(witness_json(w));
      }
    j["witnesses"] = ws;
  }
  if (o.sweep) {
    json sw = json::array();
    for (const auto& [i, jj] : budget_pairs(t, 100)) {
      PoleSweep s = pole_reducibility_sweep(t, i, jj, 2 * (t.n + 2));
      pass = pass && s.disagreements == 0;
      sw.push_back({{"i", i}, {"j", jj}, {"points", s.items.size()}, {"disagreements", s.disagreements}});
    }
    j["pole_iff_reducible"] = sw;
  }
  return finish(o, j, pass);
}

int cmd_relations(const Options& o) {
  AffineType t = type_of(o);
  int factors = o.k ? o.k : kCapFactors;
  if (factors > kCapFactors && !o.unsafe) throw BudgetError("too many tensor factors");
  json j, items = json::array();
  j["manifest"] = manifest(o, t);
  j["seed"] = o.seed;
  bool pass = true;
  for (const auto& it : relation_suite(t, factors, o.seed)) {
    pass = pass && it.pass;
    items.push_back(item(it.name, it.pass, it.detail));
  }
  j["items"] = items;
  return finish(o, j, pass);
}

int cmd_ybe(const Options& o) {
  AffineType t = type_of(o);
  int i = o.i ? o.i : 1;
  check_index(t, i, "i");
  const RMatrixResult& R = fundamental_R(t, i, i);
  YBReport y = yang_baxter(R, R, R);
  YBReport y1 = yang_baxter_at(R, R, R, RatFunc(1), RatFunc(1));
  json j;
  j["manifest"] = manifest(o, t);
  j["index"] = i;
  j["formal"] = {{"holds", y.holds}, {"degree_bound", y.degree_bound}, {"points", y.points}, {"error", y.error}};
  j["x=y=1"] = {{"holds", y1.holds}};
  return finish(o, j, y.holds && y1.holds);
}

// ---------------------------------------------------------------- selftest

void add_suite(json& items, const std::vector<SuiteItem>& s) {
  for (const auto& it : s) items.push_back(item(it.name, it.pass, it.detail));
}

void selftest_type(const Options& o, const AffineType& t, bool full, json& items) {
  const std::string tag = family_name(t.family) + std::to_string(t.n);
  RootData rd(t);
  TensorRule rule = empirical_tensor_rule(t);
  items.push_back(item("tensor rule " + tag, true, rule_name(rule)));
  add_suite(items, crystal_suite(t, rule));
  add_suite(items, relation_suite(t, 3, 1));
  auto pairs = budget_pairs(t, 400);
  PoleTable tab = pole_table(t, pairs);
  for (const auto& r : tab.rows)
    items.push_back(item("denominator " + tag + " d_" + std::to_string(r.i) + std::to_string(r.j),
                         r.match && r.form_ok && r.range_ok, factored_string(r.roots)));
  for (const auto& [k, l] : pairs) {
    if (!full && (k > 2 || l > 2)) continue;
    std::string detail;
    bool pass = true;
    for (const auto& f : functional_checks(t, k, l, o.order)) {
      pass = pass && f.holds;
      detail += (detail.empty() ? "" : "; ") + f.name + " unit " + f.unit;
    }
    items.push_back(item("functional " + tag + " " + std::to_string(k) + std::to_string(l), pass, detail));
    if (k < l) {
      auto inv = inversion(fundamental_R(t, k, l), fundamental_R(t, l, k));
      items.push_back(item("inversion " + tag + " " + std::to_string(k) + std::to_string(l), inv.identity && inv.spot));
    }
  }
  const RMatrixResult& R1 = fundamental_R(t, 1, 1);
  YBReport y = yang_baxter(R1, R1, R1);
  items.push_back(item("yang-baxter " + tag + " V1", y.holds, std::to_string(y.points) + " points"));
  items.push_back(item("yang-baxter " + tag + " V1 at x=y=1", yang_baxter_at(R1, R1, R1, RatFunc(1), RatFunc(1)).holds));
  for (int i = 1; i <= max_index(t); ++i) {
    Conj2Report r = check_conj2(t, i);
    std::string dims;
    for (int d : r.dims) dims += (dims.empty() ? "" : "/") + std::to_string(d);
    items.push_back(item("filtration " + tag + " i=" + std::to_string(i), r.ok(), "dims " + dims));
  }
  if (t.family == Family::C) {
    for (int k = 1; k <= t.n; ++k) {
      auto cr = component_ratios(fundamental_R(t, k, 1), k);
      bool pass = true;
      std::string detail;
      for (const auto& c : cr) {
        pass = pass && c.unit_ok;
        detail += (detail.empty() ? "" : "; ") + c.gamma.to_string() + " unit " + c.unit.to_string();
      }
      items.push_back(item("component ratios " + tag + " k=" + std::to_string(k), pass, detail));
      for (int l = 1; l <= k; ++l) {
        auto w = reducibility_witnesses_C(t.n, k, l);
        items.push_back(item("witnesses " + tag + " " + std::to_string(k) + std::to_string(l), w.ok(),
                             std::to_string(w.items.size()) + " roots"));
      }
    }
    auto E = explicit_R11_C(t.n);
    int bad = 0;
    for (int r = 0; r < R1.dim(); ++r)
      for (int c = 0; c < R1.dim(); ++c)
        if (!(E.get(r, c) == R1.entry(r, c))) ++bad;
    items.push_back(item("explicit R11 " + tag, bad == 0, std::to_string(bad) + " differing entries"));
  }
  for (const auto& [i, j] : budget_pairs(t, full ? 100 : 40)) {
    PoleSweep s = pole_reducibility_sweep(t, i, j, 2 * (t.n + 2));
    items.push_back(item("pole iff reducible " + tag + " " + std::to_string(i) + std::to_string(j),
                         s.disagreements == 0, std::to_string(s.items.size()) + " points"));
  }
  ExtremalReport e = dominant_extremal_uniqueness({t, {{1, 0}, {1, 0}, {max_index(t), 0}}});
  items.push_back(item("dominant extremal " + tag, e.unique));
}

int cmd_selftest(const Options& o) {
  bool full;
  if (o.budget == "small")
    full = false;
  else if (o.budget == "full")
    full = true;
  else
    throw UsageError("budget must be small or full");
  if (o.order > kCapOrder && !o.unsafe) throw BudgetError("series order exceeds the cap");
  std::vector<AffineType> types = full ? std::vector<AffineType>{{Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                                                 {Family::A, 5}, {Family::C, 2}, {Family::C, 3}}
                                       : std::vector<AffineType>{{Family::A, 3}, {Family::C, 2}};
  json items = json::array();
  for (const auto& t : types) selftest_type(o, t, full, items);
  for (const auto& [name, spec] : std::vector<std::pair<std::string, TensorSpec>>{
           {"cyclicity A3 V1 V1[s^4]", {{Family::A, 3}, {{1, 0}, {1, 4}}}},
           {"cyclicity A3 V1[s^4] V1", {{Family::A, 3}, {{1, 4}, {1, 0}}}},
           {"cyclicity C2 V1 V2[-s^3]", {{Family::C, 2}, {{1, 0}, {2, 3, -1}}}}}) {
    Conj1Report r = check_conj1(spec);
    items.push_back(item(name, r.ok(),
                         std::string("cyclic ") + (r.cyclic ? "yes" : "no") + ", cocyclic " + (r.cocyclic ? "yes" : "no")));
  }
  int failed = 0;
  for (const auto& it : items) failed += it["pass"].get<bool>() ? 0 : 1;
  json j;
  Options m = o;
  m.family = "A";
  json man = manifest(m, {Family::A, 3});
  man.erase("family");
  man.erase("n");
  man["budget"] = o.budget;
  man["types"] = json::array();
  for (const auto& t : types) man["types"].push_back(family_name(t.family) + std::to_string(t.n));
  j["manifest"] = man;
  j["items"] = items;
  j["total"] = items.size();
  j["failed"] = failed;
  return finish(o, j, failed == 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qaff: crystals, normalized R-matrices and verification reports"};
  app.set_config("--config", "", "key=value file; flags win");
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--family", o.family, "A or C");
  app.add_option("--n", o.n, "rank parameter");
  app.add_option("--order", o.order, "series truncation order M");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--unsafe-budget", o.unsafe, "lift the hard caps");
  app.add_option("--out", o.out, "write the report to a file");

  auto* crystal = app.add_subcommand("crystal", "fundamental crystals and their tensor products");
  crystal->add_option("--k", o.k, "fundamental index");
  crystal->add_option("--tensor", o.tensor_list, "comma separated indices, composed left to right");
  crystal->add_option("--dot", o.dot_path, "write a DOT file");
  crystal->add_flag("--json", o.json_out, "print JSON (default unless --dot)");
  crystal->add_option("--rule", o.rule, "fixed, kashiwara or mirrored");

  auto* rmatrix = app.add_subcommand("rmatrix", "normalized R-matrix R_ij(z)");
  rmatrix->add_option("--i", o.i, "left index")->required();
  rmatrix->add_option("--j", o.j, "right index")->required();
  rmatrix->add_flag("--check-closed-form", o.check_closed, "compare the denominator with the product formula");
  rmatrix->add_flag("--no-entries", o.no_entries, "omit the matrix entries");

  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);
  auto* conj1 = verify->add_subcommand("conj1", "cyclicity of u(x)...(x)u");
  conj1->add_option("--factors", o.factors, "index:exponent[:sign],...")->required();
  auto* conj2 = verify->add_subcommand("conj2", "filtration data");
  conj2->add_option("--i", o.i, "index (default: all)");
  auto* poles = verify->add_subcommand("poles", "denominator table");
  poles->add_flag("--text", o.text, "aligned plain text");
  poles->add_flag("--sweep", o.sweep, "pole iff reducible at +-q_s^m");
  auto* relations = verify->add_subcommand("relations", "defining relations");
  relations->add_option("--factors", o.k, "largest tensor length");
  relations->add_option("--seed", o.seed, "twist generator seed");
  auto* ybe = verify->add_subcommand("ybe", "Yang-Baxter equation");
  ybe->add_option("--i", o.i, "index of the three factors (default 1)");
  auto* selftest = verify->add_subcommand("selftest", "full invariant suite");
  selftest->add_option("--budget", o.budget, "small or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  omp_set_num_threads(o.jobs);
  try {
    if (crystal->parsed()) return cmd_crystal(o);
    if (rmatrix->parsed()) return cmd_rmatrix(o);
    if (conj1->parsed()) return cmd_conj1(o);
    if (conj2->parsed()) return cmd_conj2(o);
    if (poles->parsed()) return cmd_poles(o);
    if (relations->parsed()) return cmd_relations(o);
    if (ybe->parsed()) return cmd_ybe(o);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
