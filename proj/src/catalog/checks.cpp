#include "opforge/catalog/checks.hpp"

#include <chrono>
#include <functional>

#include "opforge/algebra/morphism.hpp"
#include "opforge/algebra/weights.hpp"
#include "opforge/catalog/cache.hpp"
#include "opforge/error.hpp"
#include "opforge/rewriting/critical_pairs.hpp"
#include "opforge/rewriting/suboperad.hpp"
#include "opforge/series/egf.hpp"

namespace opforge {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

const ShuffleSignature& polar() {
  static const ShuffleSignature s = polarized_signature();
  return s;
}

Expression polar_expr(const std::string& text) { return parse_expression(text, product_bracket_generators()); }

Element polar_element(const std::string& text, std::span<const int> sigma = {}) {
  return to_element(polar_expr(text), polar(), sigma);
}

OrderSpec pathlex(const ShuffleSignature& sig, const CheckOptions& o) {
  return make_order(OrderKind::PathLex, sig, o.reverse_precedence);
}

RewriteSystem system_of(const Presentation& p, const CheckOptions& o, int n) {
  return completed(p, pathlex(p.signature(), o), CompletionOptions{n, o.step_limit, o.threads, true});
}

std::vector<long long> tree_dims(int n) {
  std::vector<long long> out;
  for (int k = 1; k <= n; ++k) {
    long long v = 1;
    for (int j = 1; j < k; ++j) v *= k;
    out.push_back(v);
  }
  return out;
}

std::string perm_text(const std::vector<int>& sigma) {
  std::string s;
  for (int x : sigma) s += (s.empty() ? "" : " ") + std::to_string(x);
  return "(" + s + ")";
}

/// Reduces image(sigma) for every sigma in S_n; records the first nonzero
/// normal form under `key` and returns false on it.
bool orbit_vanishes(int n, const std::function<Element(std::span<const int>)>& image, Reducer& reducer,
                    Json& witnesses, const std::string& key) {
  int count = 0;
  for (const auto& sigma : all_permutations(n)) {
    const Element e = image(sigma);
    const Element nf = reducer.normal_form(e);
    ++count;
    if (!nf.is_zero()) {
      const auto& sys = reducer.system();
      witnesses[key] = Json{{"permutation", perm_text(sigma)},
                            {"element", to_text(e, sys.signature, sys.order)},
                            {"normal_form", to_text(nf, sys.signature, sys.order)}};
      return false;
    }
  }
  witnesses[key] = Json{{"orbit_size", count}, {"normal_form", "0"}};
  return true;
}

class Run {
 public:
  explicit Run(std::string name) : start_(Clock::now()) { report_.name = std::move(name); }
  CheckReport& report() { return report_; }
  Json& witnesses() { return report_.witnesses; }
  void fail() { report_.status = CheckStatus::Fail; }
  CheckReport finish() {
    report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  CheckReport report_;
  Clock::time_point start_;
};

GeneratorMap commutator_map(const ShuffleSignature& plc) {
  const TreeMonomial o = corolla(plc, plc.id_of("o"));
  Element b = Element::monomial(corolla(plc, plc.id_of("p")));
  b.add_term(corolla(plc, plc.id_of("p'")), -1);
  return GeneratorMap::from_origins(polar(), plc, {Element::monomial(o), b});
}

constexpr const char* kHertlingManinPForm =
    "[a1 o a2, a3 o a4] - [a1 o a2, a3] o a4 - [a1 o a2, a4] o a3"
    " - [a1, a3 o a4] o a2 + ([a1, a3] o a4) o a2 + ([a1, a4] o a3) o a2"
    " - [a2, a3 o a4] o a1 + ([a2, a3] o a4) o a1 + ([a2, a4] o a3) o a1";
constexpr const char* kPOfThree = "[a1, a2 o a3] - [a1, a2] o a3 - [a1, a3] o a2";
constexpr const char* kPOfThreeInPlc = "p(a1, a2 o a3) - p(a1, a2) o a3 - p(a1, a3) o a2";

Json to_json_dims(const std::vector<long long>& d) { return Json(d); }

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "fail";
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["witnesses"] = r.witnesses;
  j["dims"] = r.dims;
  j["timing"] = Json{{"seconds", r.seconds}};
  return j;
}

CheckReport check_r1_in_pl(const CheckOptions& opts, const std::string& r1) {
  Run run("r1-in-pl");
  const RewriteSystem pl = system_of(preset("prelie"), opts, 3);
  Reducer reducer(pl, opts.step_limit);
  const Expression e = polar_expr(r1);
  if (e.arity != 3) throw Error("R1 must have arity 3");
  run.witnesses()["relation"] = to_text(e, product_bracket_generators());
  if (!orbit_vanishes(3, [&](auto s) { return depolarize(to_element(e, polar(), s), polar()); }, reducer,
                      run.witnesses(), "depolarized_orbit"))
    run.fail();
  return run.finish();
}

CheckReport check_r2_in_pl(const CheckOptions& opts, const std::string& r2, const std::string& r1) {
  Run run("r2-in-pl");
  auto& w = run.witnesses();
  const RewriteSystem pl = system_of(preset("prelie"), opts, 4);
  Reducer reducer(pl, opts.step_limit);
  const Expression e2 = polar_expr(r2);
  if (e2.arity != 4) throw Error("R2 must have arity 4");
  w["terms"] = static_cast<int>(e2.terms.size());
  if (!orbit_vanishes(4, [&](auto s) { return depolarize(to_element(e2, polar(), s), polar()); }, reducer, w,
                      "transcription"))
    run.fail();

  // S-polynomials of R1 with itself, as a single shuffle relation.
  const OrderSpec order = pathlex(polar(), opts);
  const Element r1_element = polar_element(r1);
  const RewriteRule rule = rule_from_element(r1_element, order);
  const auto overlaps = critical_pairs(rule, rule, 4, polar());
  int nonzero = 0, survivors = 0;
  Json first_survivor;
  for (const auto& o : overlaps) {
    const Element s = s_polynomial(o);
    if (s.is_zero()) continue;
    ++nonzero;
    const Element nf = reducer.normal_form(depolarize(s, polar()));
    if (!nf.is_zero() && survivors++ == 0)
      first_survivor = Json{{"s_polynomial", to_text(s, polar(), order)}, {"normal_form", to_text(nf, pl.signature, pl.order)}};
  }
  w["self_overlaps"] = Json{{"count", overlaps.size()}, {"nonzero_s_polynomials", nonzero},
                            {"nonzero_normal_forms", survivors}};
  if (overlaps.empty() || survivors > 0) {
    if (survivors > 0) w["self_overlaps"]["witness"] = first_survivor;
    run.fail();
  }

  // Informational: is R2 already a consequence of R1 alone (no orbit)?
  try {
    const RewriteSystem single =
        complete(ShufflePresentation{polar(), {r1_element}}, order, CompletionOptions{4, opts.step_limit, opts.threads, false});
    w["r2_in_ideal_of_single_r1"] = Reducer(single, opts.step_limit).normal_form(polar_element(r2)).is_zero();
  } catch (const Error& err) {
    w["r2_in_ideal_of_single_r1"] = std::string("not computed: ") + err.what();
  }
  return run.finish();
}

CheckReport check_gr_lemma(const CheckOptions& opts, const std::string& r1, const std::string& r2) {
  Run run("gr-lemma");
  auto& w = run.witnesses();
  const WeightAssignment weights = lie_filtration_weights(polar());

  // (i) weight-0 part of R1 against the orbit of associativity
  {
    const auto parts = weight_components(polar_element(r1), weights);
    const Element zero_part = parts.count(0) ? parts.at(0) : Element(3);
    bool found = false;
    for (const auto& s : all_permutations(3))
      if (zero_part.proportional_to(polar_element(relations::kAssociativity, s))) {
        found = true;
        w["r1_weight0"] = Json{{"status", "associativity"}, {"permutation", perm_text(s)}};
        break;
      }
    if (!found) {
      w["r1_weight0"] = Json{{"status", "mismatch"}, {"element", to_text(zero_part, polar())}};
      run.fail();
    }
  }

  // (ii) weight-1 part of R2 against the nine-term relation
  {
    const auto parts = weight_components(polar_element(r2), weights);
    const Element one_part = parts.count(1) ? parts.at(1) : Element(4);
    const Element nine = polar_element(relations::kR2WeightOne);
    if (one_part == nine) {
      w["r2_weight1"] = Json{{"status", "equal"}, {"terms", one_part.size()}};
    } else {
      w["r2_weight1"] = Json{{"status", "mismatch"}, {"difference", to_text(one_part - nine, polar())}};
      run.fail();
    }
  }

  // (iii) two-way membership at arity 4
  {
    const RewriteSystem fm = system_of(preset("fm"), opts, 4);
    Reducer red(fm, opts.step_limit);
    const Expression nine = polar_expr(relations::kR2WeightOne);
    if (!orbit_vanishes(4, [&](auto s) { return to_element(nine, polar(), s); }, red, w, "nine_term_in_fm"))
      run.fail();

    const auto gens = product_bracket_generators();
    const Expression hm = polar_expr(relations::kHertlingManin);
    const Presentation with_jacobi = make_presentation(
        "nine-term", gens, {relations::kAssociativity, relations::kJacobi, relations::kR2WeightOne});
    const RewriteSystem back = system_of(with_jacobi, opts, 4);
    Reducer rb(back, opts.step_limit);
    if (!orbit_vanishes(4, [&](auto s) { return to_element(hm, polar(), s); }, rb, w, "hertling_manin_in_nine_term"))
      run.fail();

    const Presentation without_jacobi =
        make_presentation("nine-term-no-jacobi", gens, {relations::kAssociativity, relations::kR2WeightOne});
    const RewriteSystem bare = system_of(without_jacobi, opts, 4);
    Reducer rn(bare, opts.step_limit);
    Json info;
    const bool holds = orbit_vanishes(4, [&](auto s) { return to_element(hm, polar(), s); }, rn, info, "x");
    w["hertling_manin_without_jacobi"] = Json{{"informational", true}, {"holds", holds}, {"detail", info["x"]}};
  }
  return run.finish();
}

CheckReport check_sandwich(const CheckOptions& opts) {
  Run run("sandwich");
  const int n = opts.max_arity;
  const auto expected = tree_dims(n);
  run.report().dims["expected"] = to_json_dims(expected);
  for (const char* id : {"prelie", "almost(com,lie)", "fm"}) {
    const auto d = dims(system_of(preset(id), opts, n), n);
    run.report().dims[id] = to_json_dims(d);
    for (int k = 0; k < n; ++k)
      if (d[k] != expected[k]) {
        run.witnesses()[std::string(id) + "_mismatch"] =
            Json{{"arity", k + 1}, {"dimension", d[k]}, {"expected", expected[k]}};
        run.fail();
        break;
      }
  }
  return run.finish();
}

CheckReport check_plc_proposition(const CheckOptions& opts) {
  Run run("plc-proposition");
  const Presentation plc = preset("plc");
  const ShuffleSignature sig = plc.signature();
  const RewriteSystem sys = system_of(plc, opts, 4);
  Reducer red(sys, opts.step_limit);
  const GeneratorMap bracket = commutator_map(sig);

  auto mapped = [&](const char* text) {
    const Expression e = polar_expr(text);
    return std::make_pair(e.arity, [e, &bracket](std::span<const int> s) {
      return bracket.apply(to_element(e, polar(), s));
    });
  };
  bool ok = true;
  for (auto [key, text] : {std::pair{"associativity", relations::kAssociativity},
                           std::pair{"jacobi", relations::kJacobi},
                           std::pair{"hertling_manin", relations::kHertlingManin},
                           std::pair{"p_form", kHertlingManinPForm}}) {
    auto [arity, fn] = mapped(text);
    ok &= orbit_vanishes(arity, fn, red, run.witnesses(), key);
  }
  const Expression lhs = polar_expr(kPOfThree);
  const Expression rhs = parse_expression(kPOfThreeInPlc, plc.generators);
  ok &= orbit_vanishes(
      3, [&](auto s) { return bracket.apply(to_element(lhs, polar(), s)) - to_element(rhs, sig, s); }, red,
      run.witnesses(), "p_of_three");
  if (!ok) run.fail();
  return run.finish();
}

CheckReport conjecture_probe(const CheckOptions& opts) {
  Run run("conjecture-probe");
  run.report().status = CheckStatus::Info;
  const int n = opts.max_arity;
  const Presentation plc = preset("plc");
  const ShuffleSignature sig = plc.signature();
  const RewriteSystem sys = system_of(plc, opts, n);
  const GeneratorMap bracket = commutator_map(sig);
  const std::vector<Element> gens{bracket.apply(Element::monomial(corolla(polar(), polar().id_of("o")))),
                                  bracket.apply(Element::monomial(corolla(polar(), polar().id_of("b"))))};
  const auto ranks = suboperad_dims(sys, gens, n);
  const auto expected = tree_dims(n);
  run.report().dims["image_rank"] = to_json_dims(ranks);
  run.report().dims["fm_dimension"] = to_json_dims(expected);
  run.report().dims["plc_dimension"] = to_json_dims(dims(sys, n));
  int first_gap = 0;
  for (int k = 0; k < n; ++k)
    if (ranks[k] != expected[k]) {
      first_gap = k + 1;
      break;
    }
  if (first_gap)
    run.witnesses()["injectivity_fails_at_arity"] = first_gap;
  else
    run.witnesses()["consistent_with_embedding_up_to_arity"] = n;
  return run.finish();
}

RhsMap hertling_manin_rhs() { return {RhsEntry{"[a1 o a2, a3 o a4]", relations::kHertlingManinRhs}}; }

RhsMap frozen_non_distributive_rhs() { return {RhsEntry{"[a1 o a2, a3 o a4]", "(a1 o a2) o (a3 o a4)"}}; }

CheckReport check_almost_distributive(const CheckOptions& opts) {
  Run run("almost-distributive");
  auto& w = run.witnesses();
  const Presentation com = preset("com"), lie = preset("lie");
  const CompletionOptions co{opts.max_arity, opts.step_limit, opts.threads, true};
  const bool zero = is_almost_distributive(com, lie, {}, co);
  const bool hm = is_almost_distributive(com, lie, hertling_manin_rhs(), co);
  w["zero_rhs"] = zero;
  w["hertling_manin_rhs"] = hm;
  if (!zero || !hm) run.fail();
  if (opts.max_arity >= 4) {
    const bool frozen = is_almost_distributive(com, lie, frozen_non_distributive_rhs(),
                                               CompletionOptions{4, opts.step_limit, opts.threads, true});
    const auto deformed = with_rewriting_rhs(com, lie, frozen_non_distributive_rhs());
    w["frozen_counterexample"] = Json{{"rhs", frozen_non_distributive_rhs()[0].rhs}, {"distributive", frozen}};
    run.report().dims["frozen_counterexample"] = to_json_dims(dims(system_of(deformed, opts, 4), 4));
    if (frozen) run.fail();
  } else {
    w["frozen_counterexample"] = "skipped below arity 4";
  }
  run.report().dims["almost(com,lie)"] =
      to_json_dims(dims(system_of(almost_composite(com, lie), opts, opts.max_arity), opts.max_arity));
  return run.finish();
}

CheckReport check_series_chain(const CheckOptions& opts) {
  Run run("series-chain");
  const ChainResult r = chain_check(opts.series_order);
  auto& w = run.witnesses();
  w["order"] = r.order;
  w["composition_matches_closed_form"] = r.composition_matches_closed_form;
  w["sum_is_t_minus_t_exp"] = r.sum_is_t_minus_t_exp;
  w["inverse_has_tree_dims"] = r.inverse_has_tree_dims;
  w["compose_with_tree_is_t"] = r.compose_with_tree_is_t;
  w["lagrange_matches_newton"] = r.lagrange_matches_newton;
  w["fixed_point_matches_inverse"] = r.fixed_point_matches_inverse;
  w["sum"] = to_text(euler_series(opts.series_order).sum);
  Json d = Json::array();
  for (const auto& x : tree_egf(opts.series_order).dims()) d.push_back(x.get_str());
  run.report().dims["tree_egf"] = d;
  if (!r.passed()) run.fail();
  return run.finish();
}

std::vector<std::string> check_names() {
  return {"r1-in-pl", "r2-in-pl", "gr-lemma", "sandwich", "plc-proposition", "conjecture-probe",
          "almost-distributive", "series-chain"};
}

CheckReport run_check(const std::string& name, const CheckOptions& opts) {
  if (name == "r1-in-pl") return check_r1_in_pl(opts);
  if (name == "r2-in-pl") return check_r2_in_pl(opts);
  if (name == "gr-lemma") return check_gr_lemma(opts);
  if (name == "sandwich") return check_sandwich(opts);
  if (name == "plc-proposition") return check_plc_proposition(opts);
  if (name == "conjecture-probe") return conjecture_probe(opts);
  if (name == "almost-distributive") return check_almost_distributive(opts);
  if (name == "series-chain") return check_series_chain(opts);
  throw Error("unknown check '" + name + "'");
}

}  // namespace opforge
