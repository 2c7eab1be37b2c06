#include "opforge/series/parse.hpp"

#include <cctype>
#include <string>

#include "opforge/error.hpp"

namespace opforge {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int order) : s_(text), order_(order) {}

  Egf parse() {
    Egf e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  Egf expr() {
    Egf acc(order_);
    bool neg = eat('-');
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Egf term() {
    Egf acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        Egf d = power();
        if (d[0] == 0) throw ParseError("division by a series without constant term", at);
        acc = acc * reciprocal(d);
      } else {
        return acc;
      }
    }
  }

  Egf power() {
    Egf base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t at = pos_;
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    if (digits.empty() || digits.size() > 4) throw ParseError("expected a small exponent", at);
    Egf out = Egf::constant(order_, 1);
    for (int k = std::stoi(digits); k > 0; --k) out = out * base;
    return out;
  }

  Egf atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (eat('(')) {
      Egf e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string id;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
      if (id == "t") return Egf::t(order_);
      if (id != "exp" && id != "log" && id != "log1p") throw ParseError("unknown name '" + id + "'", at);
      expect('(');
      Egf arg = expr();
      expect(')');
      try {
        if (id == "exp") {
          if (arg[0] != 0) throw Error("exp needs an argument with zero constant term");
          return exp(arg);
        }
        if (id == "log1p") return log1p(arg);
        if (arg[0] != 1) throw Error("log needs an argument with constant term 1");
        return log1p(arg - Egf::constant(order_, 1));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), at);
      }
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  Egf number() {
    const std::size_t at = pos_;
    std::string text;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
      // a '/' belongs to the number only when digits follow
      if (s_[pos_] == '/' && (pos_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) break;
      if (s_[pos_] == '/' && text.find('/') != std::string::npos) break;
      text += s_[pos_++];
    }
    try {
      return Egf::constant(order_, parse_scalar(text));
    } catch (const Error& e) {
      throw ParseError(e.what(), at);
    }
  }

  std::string_view s_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

Egf parse_series(std::string_view text, int order) { return Parser(text, order).parse(); }

}  // namespace opforge
