#include "opforge/rewriting/system.hpp"

#include "opforge/algebra/presentation.hpp"
#include "opforge/core/occurrence.hpp"
#include "opforge/error.hpp"

namespace opforge {

namespace {
constexpr const char* kFormat = "operad-forge/rewrite-system/1";

}  // namespace

std::string to_string(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::Input: return "input";
    case Provenance::Kind::CriticalPair: return "critical-pair";
    case Provenance::Kind::InterReduction: return "inter-reduction";
  }
  return "input";
}

static Provenance::Kind parse_provenance_kind(const std::string& s) {
  if (s == "input") return Provenance::Kind::Input;
  if (s == "critical-pair") return Provenance::Kind::CriticalPair;
  if (s == "inter-reduction") return Provenance::Kind::InterReduction;
  throw Error("unknown provenance '" + s + "'");
}

Element RewriteRule::relation() const { return Element::monomial(lhs) - rhs; }

RewriteRule rule_from_element(const Element& e, const OrderSpec& spec, Provenance p) {
  if (e.is_zero()) throw Error("cannot orient the zero relation");
  Element m = e.monic(spec);
  TreeMonomial lead = m.leading_monomial(spec);
  Element rhs = Element::monomial(lead) - m;
  return RewriteRule{std::move(lead), std::move(rhs), std::move(p)};
}

bool is_interreduced(const RewriteSystem& sys) {
  for (std::size_t i = 0; i < sys.rules.size(); ++i)
    for (std::size_t j = 0; j < sys.rules.size(); ++j) {
      if (i == j || sys.rules[j].arity() > sys.rules[i].arity()) continue;
      if (!find_occurrences(sys.rules[i].lhs, sys.rules[j].lhs).empty()) return false;
    }
  return true;
}

nlohmann::ordered_json to_json(const RewriteSystem& sys) {
  nlohmann::ordered_json j;
  j["format"] = kFormat;
  j["order"] = to_json(sys.order);
  j["truncation_arity"] = sys.truncation_arity;
  auto sig = nlohmann::ordered_json::array();
  for (const auto& g : sys.signature.origins()) sig.push_back(to_json(g));
  j["signature"] = std::move(sig);
  auto rules = nlohmann::ordered_json::array();
  for (const auto& r : sys.rules) {
    nlohmann::ordered_json jr;
    jr["lhs"] = to_json(r.lhs, sys.signature);
    jr["rhs"] = to_json(r.rhs, sys.signature, sys.order);
    nlohmann::ordered_json prov;
    prov["kind"] = to_string(r.provenance.kind);
    if (!r.provenance.parents.empty()) prov["parents"] = r.provenance.parents;
    jr["provenance"] = std::move(prov);
    rules.push_back(std::move(jr));
  }
  j["rules"] = std::move(rules);
  return j;
}

RewriteSystem system_from_json(const nlohmann::json& j) {
  if (j.value("format", std::string()) != kFormat) throw Error("not a rewrite-system dump");
  RewriteSystem sys;
  std::vector<GeneratorSpec> gens;
  for (const auto& g : j.at("signature")) gens.push_back(generator_from_json(g));
  sys.signature = ShuffleSignature::from_generators(std::move(gens));
  sys.order = order_from_json(j.at("order"));
  sys.truncation_arity = j.at("truncation_arity").get<int>();
  for (const auto& jr : j.at("rules")) {
    RewriteRule r;
    r.lhs = monomial_from_json(jr.at("lhs"), sys.signature);
    r.rhs = element_from_json(jr.at("rhs"), r.lhs.arity(), sys.signature);
    const auto& prov = jr.at("provenance");
    r.provenance.kind = parse_provenance_kind(prov.at("kind").get<std::string>());
    if (prov.contains("parents")) r.provenance.parents = prov.at("parents").get<std::vector<int>>();
    sys.rules.push_back(std::move(r));
  }
  return sys;
}

std::string dump(const RewriteSystem& sys) { return to_json(sys).dump(1) + "\n"; }

}  // namespace opforge
