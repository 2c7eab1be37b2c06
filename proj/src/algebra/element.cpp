#include "opforge/algebra/element.hpp"

#include "opforge/error.hpp"

namespace opforge {

Element Element::monomial(const TreeMonomial& t, const Scalar& c) {
  Element e(t.arity());
  e.add_term(t, c);
  return e;
}

Scalar Element::coefficient(const TreeMonomial& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const TreeMonomial& t, const Scalar& c) {
  if (t.arity() != arity_)
    throw Error("arity mismatch: term of arity " + std::to_string(t.arity()) +
                " added to element of arity " + std::to_string(arity_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  if (o.arity_ != arity_) throw Error("arity mismatch in element addition");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.arity_ != arity_) throw Error("arity mismatch in element subtraction");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

const TreeMonomial& Element::leading_monomial(const OrderSpec& spec) const {
  if (terms_.empty()) throw Error("leading monomial of the zero element");
  auto best = terms_.begin();
  OrderKey best_key = order_key(best->first, spec);
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    OrderKey k = order_key(it->first, spec);
    if (compare_keys(k, best_key) > 0) {
      best = it;
      best_key = std::move(k);
    }
  }
  return best->first;
}

Scalar Element::leading_coefficient(const OrderSpec& spec) const {
  return terms_.at(leading_monomial(spec));
}

Element Element::monic(const OrderSpec& spec) const {
  Element e = *this;
  e *= Scalar(1) / leading_coefficient(spec);
  return e;
}

bool Element::proportional_to(const Element& o) const {
  if (arity_ != o.arity_ || is_zero() || o.is_zero() || terms_.size() != o.terms_.size()) return false;
  const auto& [t0, c0] = *terms_.begin();
  auto it = o.terms_.find(t0);
  if (it == o.terms_.end()) return false;
  const Scalar ratio = it->second / c0;
  for (const auto& [t, c] : terms_) {
    auto j = o.terms_.find(t);
    if (j == o.terms_.end() || j->second != ratio * c) return false;
  }
  return true;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element scale(const Scalar& c, const Element& e) { return c * e; }

namespace {

std::string render(const std::vector<std::pair<TreeMonomial, Scalar>>& terms,
                   const ShuffleSignature& sig) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += to_text(t, sig);
  }
  return out;
}

std::vector<std::pair<TreeMonomial, Scalar>> ordered_terms(const Element& e, const OrderSpec& spec) {
  std::vector<TreeMonomial> monos;
  for (const auto& [t, c] : e.terms()) monos.push_back(t);
  sort_by_order(monos, spec);
  std::vector<std::pair<TreeMonomial, Scalar>> out;
  for (auto it = monos.rbegin(); it != monos.rend(); ++it) out.emplace_back(*it, e.terms().at(*it));
  return out;
}

}  // namespace

std::string to_text(const Element& e, const ShuffleSignature& sig) {
  std::vector<std::pair<TreeMonomial, Scalar>> terms(e.terms().begin(), e.terms().end());
  return render(terms, sig);
}

std::string to_text(const Element& e, const ShuffleSignature& sig, const OrderSpec& spec) {
  return render(ordered_terms(e, spec), sig);
}

nlohmann::ordered_json to_json(const Element& e, const ShuffleSignature& sig, const OrderSpec& spec) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [t, c] : ordered_terms(e, spec)) {
    nlohmann::ordered_json term;
    term["coeff"] = to_string(c);
    term["monomial"] = to_json(t, sig);
    arr.push_back(term);
  }
  return arr;
}

Element element_from_json(const nlohmann::json& j, int arity, const ShuffleSignature& sig) {
  Element e(arity);
  for (const auto& term : j) {
    TreeMonomial t = monomial_from_json(term.at("monomial"), sig);
    e.add_term(t, parse_scalar(term.at("coeff").get<std::string>()));
  }
  return e;
}

Element replace_occurrence(const TreeMonomial& host, const Occurrence& occ,
                           const Element& replacement) {
  return replace_occurrence(host, TreeIndex(host), occ, replacement);
}

Element replace_occurrence(const TreeMonomial& host, const TreeIndex& index,
                           const Occurrence& occ, const Element& replacement) {
  if (replacement.arity() != static_cast<int>(occ.frontier.size()))
    throw Error("replacement arity does not match the matched pattern");
  Element out(host.arity());
  for (const auto& [t, c] : replacement.terms()) out.add_term(substitute(host, index, occ, t), c);
  return out;
}

Element apply_permutation(const Element& e, std::span<const int> sigma, const ShuffleSignature& sig) {
  Element out(e.arity());
  for (const auto& [t, c] : e.terms()) {
    Signed s = apply_permutation(t, sigma, sig);
    out.add_term(s.monomial, c * s.sign);
  }
  return out;
}

Element compose(const Element& outer, int leaf_index, const Element& inner,
                std::span<const int> inner_labels) {
  Element out(outer.arity() + inner.arity() - 1);
  for (const auto& [a, ca] : outer.terms())
    for (const auto& [b, cb] : inner.terms())
      out.add_term(compose(a, leaf_index, b, inner_labels), ca * cb);
  return out;
}

}  // namespace opforge
