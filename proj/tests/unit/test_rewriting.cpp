#include <doctest.h>

#include "linear_oracle.hpp"
#include "opforge/algebra/morphism.hpp"
#include "opforge/catalog/constructions.hpp"
#include "opforge/catalog/presets.hpp"
#include "opforge/error.hpp"
#include "opforge/rewriting/completion.hpp"
#include "opforge/rewriting/critical_pairs.hpp"
#include "opforge/rewriting/linalg.hpp"
#include "opforge/rewriting/suboperad.hpp"
#include "random.hpp"

using namespace opforge;

namespace {

RewriteSystem system_of(const std::string& id, int max_arity, int threads = 1, bool reverse = false) {
  const Presentation p = preset(id);
  CompletionOptions o;
  o.max_arity = max_arity;
  o.threads = threads;
  return complete(p, make_order(OrderKind::PathLex, p.signature(), reverse), o);
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
long long power(long long b, int e) { return e == 0 ? 1 : b * power(b, e - 1); }

Element elem(const std::string& text, const RewriteSystem& sys) {
  return to_element(parse_expression(text, sys.signature.origins()), sys.signature);
}

}  // namespace

TEST_CASE("sparse echelon ranks agree with a dense oracle") {
  opforge::testing::Rng rng(5);
  std::uniform_int_distribution<int> v(-2, 2), cols(0, 7);
  const auto sig = polarized_signature();
  const auto mons = enumerate_monomials(sig, 3);
  for (int k = 0; k < 200; ++k) {
    std::vector<SparseVec> rows;
    std::vector<Element> elems;
    for (int r = 0; r < 6; ++r) {
      std::map<int, Scalar> m;
      for (int j = 0; j < 4; ++j) {
        const int c = cols(rng);
        m[c] += v(rng);
      }
      for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
      rows.push_back(sparse_from_map(m));
      Element e(3);
      for (const auto& [c, x] : m) e.add_term(mons[c], x);
      elems.push_back(e);
    }
    Echelon ech;
    for (const auto& r : rows) ech.insert(r);
    const int want = oracle::span_rank(elems);
    CHECK(ech.rank() == want);
    CHECK(fraction_free_rank(rows) == want);
    ech.make_reduced();
    for (const auto& r : rows) CHECK(ech.reduce(r).empty());
  }
}

TEST_CASE("completed dimensions match closed formulas") {
  const auto com = dims(system_of("com", 5), 5), lie = dims(system_of("lie", 5), 5),
             ass = dims(system_of("ass", 5), 5), poisson = dims(system_of("poisson", 5), 5),
             prelie = dims(system_of("prelie", 5), 5), fm = dims(system_of("fm", 5), 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(com[n - 1] == 1);
    CHECK(lie[n - 1] == factorial(n - 1));
    CHECK(ass[n - 1] == factorial(n));
    CHECK(poisson[n - 1] == factorial(n));
    CHECK(prelie[n - 1] == power(n, n - 1));
    CHECK(fm[n - 1] == power(n, n - 1));
  }
}

TEST_CASE("completed dimensions match the ideal-spanning oracle") {
  for (const char* id : {"com", "lie", "ass", "poisson", "prelie", "fm", "almost(com,lie)"}) {
    CAPTURE(id);
    CHECK(dims(system_of(id, 4), 4) == oracle::quotient_dims(preset(id), 4));
  }
  CHECK(dims(system_of("plc", 3), 3) == oracle::quotient_dims(preset("plc"), 3));
}

TEST_CASE("completed systems are interreduced and confluent") {
  for (const char* id : {"poisson", "prelie", "fm", "plc"}) {
    const auto sys = system_of(id, 4);
    CHECK(is_interreduced(sys));
    CHECK(verify_confluence(sys));
    for (const auto& r : sys.rules)
      for (const auto& [t, c] : r.rhs.terms()) CHECK(compare(t, r.lhs, sys.order) < 0);
  }
}

TEST_CASE("completion options and errors") {
  const Presentation fm = preset("fm");
  const OrderSpec order = make_order(OrderKind::PathLex, fm.signature());
  CompletionReport rep;
  CompletionOptions o;
  o.max_arity = 3;
  const auto sys = complete(fm, order, o, &rep);
  CHECK(rep.relations_skipped > 0);
  CHECK(rep.max_arity_reached == 3);
  CHECK(rep.verified);
  CHECK(sys.truncation_arity == 3);
  CHECK(dims(sys, 3) == std::vector<long long>{1, 2, 9});
  CHECK_THROWS_AS(dims(sys, 4), Error);
  const auto bad = make_presentation("bad", product_bracket_generators(), {"a1 o a2 - a2 o a1"});
  CHECK_THROWS_AS(complete(bad, order, o), Error);
}

TEST_CASE("completion is deterministic across thread counts and precedence") {
  CHECK(dump(system_of("fm", 4, 1)) == dump(system_of("fm", 4, 4)));
  CHECK(dump(system_of("prelie", 4, 1)) == dump(system_of("prelie", 4, 3)));
  for (const char* id : {"poisson", "fm", "prelie"})
    CHECK(dims(system_of(id, 4, 1, true), 4) == dims(system_of(id, 4), 4));
}

TEST_CASE("system dump round trip") {
  const auto sys = system_of("fm", 5);
  const auto back = system_from_json(nlohmann::json::parse(dump(sys)));
  CHECK(back == sys);
  CHECK(dump(back) == dump(sys));
  bool has_cp = false;
  for (const auto& r : sys.rules) has_cp |= r.provenance.kind == Provenance::Kind::CriticalPair;
  CHECK(has_cp);
}

TEST_CASE("reduction and membership") {
  const auto fm = system_of("fm", 4);
  CHECK(reduce(elem(relations::kHertlingManin, fm), fm).is_zero());
  CHECK(ideal_membership(elem(relations::kLeibniz, fm), fm) == false);
  const auto poisson = system_of("poisson", 4);
  CHECK(ideal_membership(elem(relations::kHertlingManin, poisson), poisson));
  Certificate cert;
  const Element x = elem("(a1 o a2) o (a3 o a4) + [[a1, a2], a3] o a4", fm);
  const Element nf = reduce(x, fm, ReduceStrategy::LeftmostInnermost, &cert);
  CHECK_FALSE(cert.empty());
  CHECK(replay(cert, fm, 4) == x - nf);
  CHECK_THROWS_AS(reduce(x, fm, ReduceStrategy::LeftmostOutermost, nullptr, 1), StepLimitExceeded);
  CHECK(normal_monomials(fm, 4).size() == 64);
}

TEST_CASE("xy-augmented order reproduces the fm dimensions") {
  const Presentation fm = preset("fm");
  CompletionOptions o;
  o.max_arity = 4;
  const auto sys = complete(fm, make_order(OrderKind::XYAugmented, fm.signature()), o);
  CHECK(dims(sys, 4) == std::vector<long long>{1, 2, 9, 64});
  CHECK_THROWS_AS(make_order(OrderKind::XYAugmented, preset("prelie").signature()), Error);
}

TEST_CASE("critical pairs against brute force") {
  const auto sys = system_of("poisson", 4);
  const auto& sig = sys.signature;
  const int max_arity = 4;
  for (const auto& r1 : sys.rules)
    for (const auto& r2 : sys.rules) {
      if (r1.arity() + r2.arity() - 1 > 5) continue;
      const bool self = r1 == r2;
      long long want = 0;
      for (int n = std::max(r1.arity(), r2.arity()); n <= max_arity; ++n)
        for (const auto& t : enumerate_monomials(sig, n)) {
          const auto a = find_occurrences(t, r1.lhs), b = find_occurrences(t, r2.lhs);
          const auto all = internal_mask(t);
          for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = self ? i + 1 : 0; j < b.size(); ++j)
              if ((a[i].mask & b[j].mask) && (a[i].mask | b[j].mask) == all) ++want;
        }
      const auto got = critical_pairs(r1, r2, max_arity, sig);
      CHECK(static_cast<long long>(got.size()) == want);
      for (const auto& o : got) CHECK(reduce(s_polynomial(o), sys).is_zero());
    }
}

TEST_CASE("suboperad dimensions") {
  const auto pl = system_of("prelie", 4);
  const Element p = Element::monomial(parse_monomial("p(1,2)", pl.signature));
  const Element q = Element::monomial(parse_monomial("p'(1,2)", pl.signature));
  CHECK(suboperad_dims(pl, {p + q, p - q}, 4) == std::vector<long long>{1, 2, 9, 64});
  CHECK(suboperad_dims(pl, {p + q}, 4) == std::vector<long long>{1, 1, 3, 15});
  CHECK(suboperad_dims(pl, {p - q}, 4) == std::vector<long long>{1, 1, 2, 6});
  CHECK_THROWS_AS(suboperad_dims(pl, {p}, 5), Error);
}
