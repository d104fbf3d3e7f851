#include "cli.hpp"

#include "quivexp/errors.hpp"
#include "quivexp/expander.hpp"
#include "quivexp/kronecker.hpp"
#include "quivexp/oracle.hpp"
#include "quivexp/quiver.hpp"
#include "quivexp/schofield.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace quivexp::cli {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& x) {
  if (x >= INT64_MIN && x <= INT64_MAX) return x.convert_to<std::int64_t>();
  return x.str();
}

json exact_to_json(const QuadraticSurd& s) {
  return {{"p", big_to_json(s.p())},
          {"q", big_to_json(s.q())},
          {"n", big_to_json(s.n())},
          {"r", big_to_json(s.r())}};
}

json envelope(const std::string& command, json inputs, json result) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

void add_surd(json& env, const QuadraticSurd& s) {
  env["exact"] = exact_to_json(s);
  env["approx"] = s.to_decimal(12);
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.source + 1, a.target + 1});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty() || csv.back() == ',') {
    throw InputError("malformed list '" + csv + "'");
  }
  return out;
}

// --quiver FILE | --kronecker M, shared by several subcommands.
struct QuiverSource {
  std::string file;
  int kronecker = 0;

  void attach(CLI::App* sub) {
    auto* f = sub->add_option("--quiver", file, "quiver file (vertices N / i -> j lines)");
    auto* k = sub->add_option("--kronecker", kronecker, "use K(M), M parallel arrows 1 -> 2");
    f->excludes(k);
    k->excludes(f);
  }

  Quiver resolve() const {
    if (!file.empty()) return load_quiver(file);
    if (kronecker == 0) throw InputError("one of --quiver or --kronecker is required");
    return make_kronecker(kronecker);
  }
};

struct Options {
  QuiverSource embed_quiver, subdims_quiver, scan_quiver;
  std::string e, d;
  std::optional<int> k, m;
  std::string alpha, delta, epsilon;
  std::string rep_file;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  int count = 1;
  bool identity_first = false;
  std::string theta;
  int dmax = 0;
  std::string format = "json";
};

json run_embed(const Options& o) {
  Quiver q = o.embed_quiver.resolve();
  DimVector e = parse_dim_vector(o.e);
  DimVector d = parse_dim_vector(o.d);
  SubdimCache cache(q);
  bool result = embeds(q, e, d, cache);
  return envelope("embed", {{"quiver", quiver_to_json(q)}, {"e", e.entries()}, {"d", d.entries()}},
                  {{"embeds", result}});
}

json run_subdims(const Options& o) {
  Quiver q = o.subdims_quiver.resolve();
  DimVector d = parse_dim_vector(o.d);
  SubdimCache cache(q);
  json list = json::array();
  for (const DimVector& e : generic_subdims(q, d, cache)) list.push_back(e.entries());
  return envelope("subdims", {{"quiver", quiver_to_json(q)}, {"d", d.entries()}},
                  {{"subdims", list}});
}

json run_epsilon(const Options& o) {
  if (o.k) {
    if (o.m || !o.alpha.empty() || !o.delta.empty()) {
      throw InputError("use either --k or --m/--alpha/--delta");
    }
    QuadraticSurd eps = epsilon_k(*o.k);
    json env = envelope("epsilon", {{"k", *o.k}}, {{"epsilon", eps.to_string()}});
    add_surd(env, eps);
    return env;
  }
  if (!o.m || o.alpha.empty() || o.delta.empty()) {
    throw InputError("epsilon needs --k, or all of --m, --alpha and --delta");
  }
  Rational alpha = parse_rational(o.alpha);
  Rational delta = parse_rational(o.delta);
  QuadraticSurd eps = epsilon_m_alpha_delta(*o.m, alpha, delta);
  json env = envelope("epsilon",
                      {{"m", *o.m}, {"alpha", to_string(alpha)}, {"delta", to_string(delta)}},
                      {{"epsilon", eps.to_string()}});
  add_surd(env, eps);
  return env;
}

json run_exists(const Options& o) {
  DimVector d = parse_dim_vector(o.d);
  ExpanderParams params(parse_rational(o.delta), parse_rational(o.epsilon));
  SubdimCache cache(make_kronecker(*o.m));
  ExpanderDecision decision = expander_exists(*o.m, d, params, cache);
  json result = {{"exists", decision.exists}};
  if (decision.violating_e) result["violating_e"] = decision.violating_e->entries();
  return envelope("exists",
                  {{"m", *o.m},
                   {"d", d.entries()},
                   {"delta", to_string(params.delta())},
                   {"epsilon", to_string(params.epsilon())}},
                  result);
}

json run_exists_uniform(const Options& o) {
  SlopeParams slope{*o.m, parse_rational(o.alpha)};
  Rational delta = parse_rational(o.delta);
  Rational epsilon = parse_rational(o.epsilon);
  bool exists = expander_exists_uniform(slope, delta, epsilon);
  QuadraticSurd threshold = epsilon_m_alpha_delta(slope.m, slope.alpha, delta);
  json env = envelope("exists-uniform",
                      {{"m", slope.m},
                       {"alpha", to_string(slope.alpha)},
                       {"delta", to_string(delta)},
                       {"epsilon", to_string(epsilon)}},
                      {{"exists", exists}, {"threshold", threshold.to_string()}});
  add_surd(env, threshold);
  return env;
}

json verdict_to_json(const ExpanderVerdict& v) {
  json out = {{"ok", v.ok}};
  if (v.witness) out["witness"] = subspace_to_json(*v.witness);
  return out;
}

json run_verify(const Options& o) {
  FiniteFieldRep rep = load_rep(o.rep_file);
  ExpanderParams params(parse_rational(o.delta), parse_rational(o.epsilon));
  return envelope("verify",
                  {{"rep", o.rep_file},
                   {"delta", to_string(params.delta())},
                   {"epsilon", to_string(params.epsilon())}},
                  verdict_to_json(is_expander_rep(rep, params)));
}

json run_sample(const Options& o) {
  if (o.count < 1) throw InputError("--count must be positive");
  if (o.delta.empty() != o.epsilon.empty()) {
    throw InputError("--delta and --epsilon must be given together");
  }
  DimVector d = parse_dim_vector(o.d);
  Quiver q = make_kronecker(*o.m);
  std::optional<ExpanderParams> params;
  if (!o.delta.empty()) params.emplace(parse_rational(o.delta), parse_rational(o.epsilon));

  json samples = json::array();
  int passed = 0;
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    FiniteFieldRep rep = random_rep(q, d, o.p, seed);
    if (o.identity_first) rep = with_identity_first_arrow(std::move(rep));
    json entry = {{"seed", seed}};
    if (params) {
      ExpanderVerdict v = is_expander_rep(rep, *params);
      passed += v.ok ? 1 : 0;
      entry.update(verdict_to_json(v));
    } else {
      entry["rep"] = rep_to_json(rep);
    }
    samples.push_back(std::move(entry));
  }
  json inputs = {{"kronecker", *o.m}, {"d", d.entries()}, {"p", o.p},
                 {"seed", o.seed},    {"count", o.count}, {"identity_first", o.identity_first}};
  json result = {{"samples", samples}};
  if (params) {
    inputs["delta"] = to_string(params->delta());
    inputs["epsilon"] = to_string(params->epsilon());
    result["passed"] = passed;
  }
  return envelope("sample", inputs, result);
}

json run_counterexample() {
  Quiver q = parse_quiver("vertices 3\n1 -> 2\n1 -> 2\n3 -> 2\n3 -> 2\n");
  DimVector d{3, 6, 5};
  DimVector e{3, 5, 1};
  SubdimCache cache(q);
  return envelope("counterexample",
                  {{"quiver", quiver_to_json(q)}, {"e", e.entries()}, {"d", d.entries()}},
                  {{"euler", euler_form(q, e, d - e)},
                   {"embeds", embeds(q, e, d, cache)},
                   {"fundamental_domain", in_fundamental_domain(q, d)}});
}

json run_theta_scan(const Options& o) {
  Quiver q = o.scan_quiver.resolve();
  std::vector<Rational> weights = parse_rational_list(o.theta);
  if (static_cast<int>(weights.size()) != q.vertex_count()) {
    throw InputError("--theta needs one weight per vertex");
  }
  if (o.dmax < 1) throw InputError("--dmax must be positive");
  Rational delta = parse_rational(o.delta);

  // Clear denominators: Theta -> L Theta scales the optimal epsilon by L.
  BigInt scale = 1;
  for (const Rational& w : weights) scale = boost::multiprecision::lcm(scale, denominator_of(w));
  std::vector<std::int64_t> integral;
  for (const Rational& w : weights) {
    BigInt v = numerator_of(w) * (scale / denominator_of(w));
    if (v > INT64_MAX || v < INT64_MIN) throw InputError("stability weight too large");
    integral.push_back(v.convert_to<std::int64_t>());
  }
  StabilityFunction theta(integral);

  SubdimCache cache(q);
  json rows = json::array();
  for_each_below(DimVector(std::vector<std::int64_t>(q.vertex_count(), o.dmax)),
                 [&](const DimVector& d) {
                   if (d.is_zero() || theta(d) != 0) return;
                   auto sup = theta_epsilon_supremum(q, theta, d, delta, cache);
                   json row = {{"d", d.entries()}};
                   if (sup) {
                     Rational eps = *sup / Rational(scale);
                     row["epsilon_sup"] = to_string(eps);
                     row["positive"] = eps > 0;
                   } else {
                     row["epsilon_sup"] = nullptr;
                     row["positive"] = true;
                   }
                   rows.push_back(std::move(row));
                 });
  json theta_in = json::array();
  for (const Rational& w : weights) theta_in.push_back(to_string(w));
  return envelope("theta-scan",
                  {{"quiver", quiver_to_json(q)},
                   {"theta", theta_in},
                   {"delta", to_string(delta)},
                   {"dmax", o.dmax}},
                  {{"rows", rows}});
}

struct CurveRow {
  std::int64_t x;
  std::string exact;
  std::string approx;
  std::optional<std::int64_t> ceil;
};

std::vector<CurveRow> curve_rows(int m, const DimVector& d) {
  KroneckerContext ctx(m, d);
  std::vector<CurveRow> rows;
  for (std::int64_t x = 0; x <= d[0]; ++x) {
    QuadraticSurd c = c_d_exact(ctx, x);
    std::optional<std::int64_t> ceil;
    if (ctx.self_form() <= 0) ceil = c_d_ceil(ctx, x);
    rows.push_back({x, c.to_string(), c.to_decimal(12), ceil});
  }
  return rows;
}

void run_curve(const Options& o, std::ostream& out) {
  DimVector d = parse_dim_vector(o.d);
  auto rows = curve_rows(*o.m, d);
  if (o.format == "csv") {
    out << "x,c_exact,c_approx,c_ceil\n";
    for (const auto& r : rows) {
      out << r.x << ',' << r.exact << ',' << r.approx << ',';
      if (r.ceil) out << *r.ceil;
      out << '\n';
    }
    return;
  }
  json list = json::array();
  for (const auto& r : rows) {
    list.push_back({{"x", r.x},
                    {"c_exact", r.exact},
                    {"c_approx", r.approx},
                    {"c_ceil", r.ceil ? json(*r.ceil) : json(nullptr)}});
  }
  out << envelope("curve", {{"m", *o.m}, {"d", d.entries()}}, {{"rows", list}}).dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decisions for general subrepresentations and dimension expanders"};
  app.name("quivexp");
  app.require_subcommand(1);
  Options o;

  auto* embed = app.add_subcommand("embed", "decide e -> d for general representations");
  o.embed_quiver.attach(embed);
  embed->add_option("--e", o.e, "subdimension vector, CSV")->required();
  embed->add_option("--d", o.d, "dimension vector, CSV")->required();

  auto* subdims = app.add_subcommand("subdims", "list every e with e -> d");
  o.subdims_quiver.attach(subdims);
  subdims->add_option("--d", o.d, "dimension vector, CSV")->required();

  auto* epsilon = app.add_subcommand("epsilon", "sharp expansion coefficient");
  epsilon->add_option("--k", o.k, "number of operators (k >= 2)");
  epsilon->add_option("--m", o.m, "number of arrows");
  epsilon->add_option("--alpha", o.alpha, "dimension ratio d2/d1, P/Q");
  epsilon->add_option("--delta", o.delta, "relative subspace bound, P/Q");

  auto* exists = app.add_subcommand("exists", "expander existence for one dimension vector");
  exists->add_option("--m", o.m, "number of arrows")->required();
  exists->add_option("--d", o.d, "D1,D2")->required();
  exists->add_option("--delta", o.delta, "P/Q")->required();
  exists->add_option("--epsilon", o.epsilon, "P/Q")->required();

  auto* uniform = app.add_subcommand("exists-uniform", "expander existence for all d2/d1 = alpha");
  uniform->add_option("--m", o.m, "number of arrows")->required();
  uniform->add_option("--alpha", o.alpha, "P/Q")->required();
  uniform->add_option("--delta", o.delta, "P/Q")->required();
  uniform->add_option("--epsilon", o.epsilon, "P/Q")->required();

  auto* verify = app.add_subcommand("verify", "check a concrete representation over F_p");
  verify->add_option("--rep", o.rep_file, "representation JSON file")->required();
  verify->add_option("--delta", o.delta, "P/Q")->required();
  verify->add_option("--epsilon", o.epsilon, "P/Q")->required();

  auto* sample = app.add_subcommand("sample", "seeded random representations of K(m) over F_p");
  sample->add_option("--kronecker", o.m, "number of arrows")->required();
  sample->add_option("--d", o.d, "D1,D2")->required();
  sample->add_option("--p", o.p, "prime")->required();
  sample->add_option("--seed", o.seed, "first seed; sample i uses seed + i")->required();
  sample->add_option("--count", o.count, "number of samples")->required();
  sample->add_option("--delta", o.delta, "P/Q; with --epsilon, verify each sample");
  sample->add_option("--epsilon", o.epsilon, "P/Q");
  sample->add_flag("--identity-first", o.identity_first, "replace the first map by the identity");

  auto* counter = app.add_subcommand(
      "counterexample", "bipartite quiver d=(3,6,5), e=(3,5,1): <e,d-e> > 0 yet e does not embed");

  auto* scan = app.add_subcommand("theta-scan", "optimal epsilon per d with Theta(d) = 0");
  o.scan_quiver.attach(scan);
  scan->add_option("--theta", o.theta, "weights per vertex, CSV of P/Q")->required();
  scan->add_option("--delta", o.delta, "P/Q")->required();
  scan->add_option("--dmax", o.dmax, "largest entry of d")->required();
  scan->footer(
      "Rational weights are scaled by the lcm L of their denominators; the epsilon\n"
      "computed for L*Theta is divided by L again, so the reported bound refers\n"
      "to Theta as given.");

  auto* curve = app.add_subcommand("curve", "table of c_d(x) for x = 0..d1");
  curve->add_option("--m", o.m, "number of arrows")->required();
  curve->add_option("--d", o.d, "D1,D2")->required();
  curve->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::vector<const char*> argv{"quivexp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (curve->parsed()) {
      run_curve(o, out);
      return kExitOk;
    }
    json result;
    if (embed->parsed()) result = run_embed(o);
    else if (subdims->parsed()) result = run_subdims(o);
    else if (epsilon->parsed()) result = run_epsilon(o);
    else if (exists->parsed()) result = run_exists(o);
    else if (uniform->parsed()) result = run_exists_uniform(o);
    else if (verify->parsed()) result = run_verify(o);
    else if (sample->parsed()) result = run_sample(o);
    else if (counter->parsed()) result = run_counterexample();
    else if (scan->parsed()) result = run_theta_scan(o);
    out << result.dump(2) << '\n';
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace quivexp::cli
