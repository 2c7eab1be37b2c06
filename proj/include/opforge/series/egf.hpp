#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "opforge/algebra/scalar.hpp"

namespace opforge {

constexpr int kDefaultSeriesOrder = 12;

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with exact rational
/// coefficients, read as an exponential generating function.
class Egf {
 public:
  explicit Egf(int order = kDefaultSeriesOrder);
  Egf(int order, std::vector<Scalar> coeffs);  // missing coefficients are 0

  static Egf constant(int order, const Scalar& c);
  static Egf t(int order);
  /// sum_n dims[n-1] t^n / n!
  static Egf from_dims(int order, const std::vector<mpz_class>& dims);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int n) const { return c_.at(n); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// a_n = n! c_n for n = 1..N.
  std::vector<mpz_class> dims() const;

  Egf& operator+=(const Egf& o);
  Egf& operator-=(const Egf& o);
  friend Egf operator+(Egf a, const Egf& b) { return a += b; }
  friend Egf operator-(Egf a, const Egf& b) { return a -= b; }
  friend Egf operator-(Egf a) { return scale(-1, std::move(a)); }
  friend Egf operator*(const Egf& a, const Egf& b);
  friend bool operator==(const Egf&, const Egf&) = default;

  static Egf scale(const Scalar& s, Egf f);

 private:
  std::vector<Scalar> c_;
};

/// Throws Error when the constant terms or orders violate the preconditions.
Egf compose(const Egf& f, const Egf& g);          // f(g), g(0) = 0
Egf exp(const Egf& f);                            // f(0) = 0
Egf log1p(const Egf& f);                          // log(1 + f), f(0) = 0
Egf reciprocal(const Egf& f);                     // 1/f, f(0) != 0
Egf derivative(const Egf& f);                     // last coefficient becomes 0
Egf comp_inverse(const Egf& f);                   // Lagrange inversion
Egf comp_inverse_newton(const Egf& f);

/// The solution of f = t exp(f).
Egf tree_egf(int order = kDefaultSeriesOrder);

struct EulerSeries {
  Egf com_dual;         // t - log(1 + t)
  Egf lie_dual;         // exp(-t) - 1 + t
  Egf lie_over_com;     // 1 + log(1 + t) - t - (1 + t) exp(-t), by composition
  Egf closed_form;      // the same, from its closed form
  Egf sum;
};
EulerSeries euler_series(int order = kDefaultSeriesOrder);

struct ChainResult {
  int order = 0;
  bool composition_matches_closed_form = false;
  bool sum_is_t_minus_t_exp = false;
  bool inverse_has_tree_dims = false;
  bool compose_with_tree_is_t = false;
  bool lagrange_matches_newton = false;
  bool fixed_point_matches_inverse = false;
  bool passed() const;
};
ChainResult chain_check(int order = kDefaultSeriesOrder);

/// `c0 + c1*t + ...`, rationals as p/q, zero terms skipped.
std::string to_text(const Egf& f);

}  // namespace opforge
