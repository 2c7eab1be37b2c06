#include "opforge/algebra/expression.hpp"

#include <cctype>
#include <set>

#include "opforge/error.hpp"

namespace opforge {

Expression& Expression::operator+=(const Expression& o) {
  if (arity != o.arity) throw Error("arity mismatch in expression sum");
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

Expression& Expression::operator-=(const Expression& o) {
  if (arity != o.arity) throw Error("arity mismatch in expression difference");
  for (auto t : o.terms) {
    t.coeff = -t.coeff;
    terms.push_back(std::move(t));
  }
  return *this;
}

int leaf_count(const ExprTree& t) {
  if (t.gen < 0) return 1;
  int n = 0;
  for (const auto& c : t.children) n += leaf_count(c);
  return n;
}

namespace {

int find_gen(const std::vector<GeneratorSpec>& gens, std::string_view name) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

bool is_argument_name(std::string_view s) {
  if (s.size() < 2 || s[0] != 'a') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::vector<GeneratorSpec>& gens)
      : text_(text), gens_(gens) {}

  Expression parse(int arity) {
    Expression e;
    skip_ws();
    if (peek() == '0' && only_zero()) {
      e.arity = arity;
      return e;
    }
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (!first) {
        if (at_end()) break;
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      term_starts_.push_back(pos_);
      ExprTerm t = term();
      t.coeff *= sign;
      e.terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
    }
    int n = arity;
    if (n == 0)
      for (const auto& t : e.terms) n = std::max(n, max_arg(t.tree));
    for (std::size_t i = 0; i < e.terms.size(); ++i) check_multilinear(e.terms[i].tree, n, term_starts_[i]);
    e.arity = n;
    return e;
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool only_zero() {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p == text_.size();
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long long integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", pos_);
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > (1LL << 40)) throw ParseError("integer too large", pos_);
    }
    return v;
  }

  ExprTerm term() {
    ExprTerm t{Scalar(1), {}};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos_;
      const long long num = integer();
      long long den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      t.coeff = Scalar(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
      t.coeff.canonicalize();
      if (peek() == '*') ++pos_;
    }
    t.tree = product();
    return t;
  }

  ExprTree product() {
    ExprTree left = atom();
    if (is_infix_o()) {
      const std::size_t at = pos_;
      ++pos_;
      ExprTree right = atom();
      if (is_infix_o()) throw ParseError("chained 'o' is ambiguous; add parentheses", pos_);
      const int g = find_gen(gens_, "o");
      if (g < 0) throw ParseError("infix 'o' used but there is no generator 'o'", at);
      if (gens_[g].arity != 2) throw ParseError("generator 'o' is not binary", at);
      return ExprTree::apply(g, {std::move(left), std::move(right)});
    }
    return left;
  }

  // In operator position an `o` not followed by an identifier character is
  // the infix product, including `a1 o (a2 o a3)`.
  bool is_infix_o() {
    if (peek() != 'o') return false;
    const std::size_t next = pos_ + 1;
    return !(next < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[next])) ||
                                     text_[next] == '_' || text_[next] == '\''));
  }

  ExprTree atom() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      ExprTree inner = product();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      ExprTree a = product();
      expect(',');
      ExprTree b = product();
      expect(']');
      const int g = find_gen(gens_, "b");
      if (g < 0) throw ParseError("bracket used but there is no generator 'b'", at);
      if (gens_[g].arity != 2) throw ParseError("generator 'b' is not binary", at);
      return ExprTree::apply(g, {std::move(a), std::move(b)});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto name = identifier();
      if (is_argument_name(name) && peek() != '(') {
        const int i = std::stoi(std::string(name.substr(1)));
        if (i < 1) throw ParseError("argument indices start at 1", at);
        return ExprTree::argument(i);
      }
      const int g = find_gen(gens_, name);
      if (g < 0) throw ParseError("unknown generator '" + std::string(name) + "'", at);
      expect('(');
      std::vector<ExprTree> kids;
      kids.push_back(product());
      while (peek() == ',') {
        ++pos_;
        kids.push_back(product());
      }
      expect(')');
      if (static_cast<int>(kids.size()) != gens_[g].arity)
        throw ParseError("generator '" + std::string(name) + "' expects " + std::to_string(gens_[g].arity) +
                             " arguments, got " + std::to_string(kids.size()),
                         at);
      return ExprTree::apply(g, std::move(kids));
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  static int max_arg(const ExprTree& t) {
    if (t.gen < 0) return t.arg;
    int m = 0;
    for (const auto& c : t.children) m = std::max(m, max_arg(c));
    return m;
  }

  static void collect(const ExprTree& t, std::vector<int>& out) {
    if (t.gen < 0) {
      out.push_back(t.arg);
      return;
    }
    for (const auto& c : t.children) collect(c, out);
  }

  static void check_multilinear(const ExprTree& t, int n, std::size_t at) {
    std::vector<int> args;
    collect(t, args);
    std::vector<int> seen(n + 1, 0);
    for (int a : args) {
      if (a > n) throw ParseError("argument a" + std::to_string(a) + " exceeds arity " + std::to_string(n), at);
      if (seen[a]++) throw ParseError("argument a" + std::to_string(a) + " repeated", at);
    }
    for (int i = 1; i <= n; ++i)
      if (!seen[i]) throw ParseError("argument a" + std::to_string(i) + " missing", at);
  }

  std::string_view text_;
  const std::vector<GeneratorSpec>& gens_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> term_starts_;
};

enum class Context { Top, Operand };

void print_tree(const ExprTree& t, const std::vector<GeneratorSpec>& gens, Context ctx, std::string& out) {
  if (t.gen < 0) {
    out += "a" + std::to_string(t.arg);
    return;
  }
  const auto& g = gens[t.gen];
  if (g.name == "o" && g.arity == 2) {
    if (ctx == Context::Operand) out += '(';
    print_tree(t.children[0], gens, Context::Operand, out);
    out += " o ";
    print_tree(t.children[1], gens, Context::Operand, out);
    if (ctx == Context::Operand) out += ')';
    return;
  }
  if (g.name == "b" && g.arity == 2) {
    out += '[';
    print_tree(t.children[0], gens, Context::Top, out);
    out += ", ";
    print_tree(t.children[1], gens, Context::Top, out);
    out += ']';
    return;
  }
  out += g.name;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ", ";
    print_tree(t.children[i], gens, Context::Top, out);
  }
  out += ')';
}

}  // namespace

Expression parse_expression(std::string_view text, const std::vector<GeneratorSpec>& gens, int arity) {
  return ExpressionParser(text, gens).parse(arity);
}

std::string to_text(const ExprTree& t, const std::vector<GeneratorSpec>& gens) {
  std::string out;
  print_tree(t, gens, Context::Top, out);
  return out;
}

std::string to_text(const Expression& e, const std::vector<GeneratorSpec>& gens) {
  std::string out;
  bool first = true;
  for (const auto& term : e.terms) {
    if (term.coeff == 0) continue;
    const Scalar mag = abs(term.coeff);
    if (first)
      out += term.coeff < 0 ? "-" : "";
    else
      out += term.coeff < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += to_text(term.tree, gens);
  }
  return first ? "0" : out;
}

}  // namespace opforge
