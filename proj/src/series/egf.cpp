#include "opforge/series/egf.hpp"

#include "opforge/error.hpp"

namespace opforge {

namespace {

void same_order(const Egf& a, const Egf& b) {
  if (a.order() != b.order())
    throw Error("series truncation orders differ: " + std::to_string(a.order()) + " and " +
                std::to_string(b.order()));
}

void no_constant(const Egf& f, const char* what) {
  if (f[0] != 0) throw Error(std::string(what) + " needs a series with zero constant term");
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

Egf::Egf(int order) {
  if (order < 0) throw Error("negative truncation order");
  c_.assign(order + 1, Scalar(0));
}

Egf::Egf(int order, std::vector<Scalar> coeffs) : Egf(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

Egf Egf::constant(int order, const Scalar& c) { return Egf(order, {c}); }
Egf Egf::t(int order) { return order >= 1 ? Egf(order, {0, 1}) : Egf(order); }

Egf Egf::from_dims(int order, const std::vector<mpz_class>& dims) {
  Egf f(order);
  for (int n = 1; n <= order && n <= static_cast<int>(dims.size()); ++n)
    f.c_[n] = Scalar(dims[n - 1]) / Scalar(factorial(n));
  return f;
}

std::vector<mpz_class> Egf::dims() const {
  std::vector<mpz_class> out;
  for (int n = 1; n <= order(); ++n) {
    Scalar a = c_[n] * Scalar(factorial(n));
    if (a.get_den() != 1) throw Error("coefficient " + std::to_string(n) + " is not an integer over n!");
    out.push_back(a.get_num());
  }
  return out;
}

Egf& Egf::operator+=(const Egf& o) {
  same_order(*this, o);
  for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
  return *this;
}

Egf& Egf::operator-=(const Egf& o) {
  same_order(*this, o);
  for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Egf operator*(const Egf& a, const Egf& b) {
  same_order(a, b);
  Egf out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

Egf Egf::scale(const Scalar& s, Egf f) {
  for (auto& x : f.c_) x *= s;
  return f;
}

Egf compose(const Egf& f, const Egf& g) {
  same_order(f, g);
  no_constant(g, "composition");
  Egf out(f.order());
  for (int k = f.order(); k >= 0; --k) {
    out = out * g;
    out += Egf::constant(f.order(), f[k]);
  }
  return out;
}

Egf exp(const Egf& f) {
  no_constant(f, "exp");
  const int n = f.order();
  std::vector<Scalar> h(n + 1);
  h[0] = 1;
  // h' = f' h
  for (int m = 1; m <= n; ++m) {
    Scalar s = 0;
    for (int k = 1; k <= m; ++k) s += k * f[k] * h[m - k];
    h[m] = s / m;
  }
  return Egf(n, h);
}

Egf derivative(const Egf& f) {
  std::vector<Scalar> c(f.order() + 1);
  for (int k = 1; k <= f.order(); ++k) c[k - 1] = k * f[k];
  return Egf(f.order(), c);
}

Egf reciprocal(const Egf& f) {
  if (f[0] == 0) throw Error("reciprocal needs a nonzero constant term");
  const int n = f.order();
  std::vector<Scalar> r(n + 1);
  r[0] = 1 / f[0];
  for (int m = 1; m <= n; ++m) {
    Scalar s = 0;
    for (int k = 1; k <= m; ++k) s += f[k] * r[m - k];
    r[m] = -s / f[0];
  }
  return Egf(n, r);
}

Egf log1p(const Egf& f) {
  no_constant(f, "log1p");
  // (log(1+f))' = f' / (1+f)
  const Egf q = derivative(f) * reciprocal(Egf::constant(f.order(), 1) + f);
  std::vector<Scalar> c(f.order() + 1);
  for (int k = 1; k <= f.order(); ++k) c[k] = q[k - 1] / k;
  return Egf(f.order(), c);
}

Egf comp_inverse(const Egf& f) {
  no_constant(f, "compositional inversion");
  const int n = f.order();
  if (n >= 1 && f[1] == 0) throw Error("compositional inversion needs a nonzero linear term");
  Egf g(n);
  if (n == 0) return g;
  // [t^m] g = (1/m) [u^(m-1)] (u / f(u))^m
  std::vector<Scalar> shifted(n + 1);
  for (int k = 1; k <= n; ++k) shifted[k - 1] = f[k];
  const Egf phi = reciprocal(Egf(n, shifted));
  Egf power = Egf::constant(n, 1);
  std::vector<Scalar> c(n + 1);
  for (int m = 1; m <= n; ++m) {
    power = power * phi;
    c[m] = power[m - 1] / m;
  }
  return Egf(n, c);
}

Egf comp_inverse_newton(const Egf& f) {
  no_constant(f, "compositional inversion");
  const int n = f.order();
  if (n >= 1 && f[1] == 0) throw Error("compositional inversion needs a nonzero linear term");
  if (n == 0) return Egf(0);
  const Egf t = Egf::t(n);
  const Egf df = derivative(f);
  Egf g = Egf::scale(1 / f[1], t);
  // Each step doubles the number of correct coefficients; stop at the fixed point.
  for (int step = 0; step < 64; ++step) {
    Egf next = g - (compose(f, g) - t) * reciprocal(compose(df, g));
    if (next == g) return g;
    g = std::move(next);
  }
  throw Error("Newton iteration did not settle");
}

Egf tree_egf(int order) {
  // Iterating f <- t exp(f) fixes one more coefficient per step.
  Egf f(order);
  const Egf t = Egf::t(order);
  for (int k = 0; k < order; ++k) f = t * exp(f);
  return f;
}

EulerSeries euler_series(int order) {
  if (order < 2) throw Error("the Euler series need order at least 2");
  const Egf t = Egf::t(order);
  const Egf one = Egf::constant(order, 1);
  EulerSeries s;
  s.com_dual = t - log1p(t);
  s.lie_dual = exp(-t) - one + t;
  // 1 - u - exp(-u) evaluated at u = t - log(1+t)
  s.lie_over_com = compose(one - t - exp(-t), s.com_dual);
  s.closed_form = one + log1p(t) - t - (one + t) * exp(-t);
  s.sum = s.com_dual + s.lie_dual + s.lie_over_com;
  return s;
}

bool ChainResult::passed() const {
  return composition_matches_closed_form && sum_is_t_minus_t_exp && inverse_has_tree_dims &&
         compose_with_tree_is_t && lagrange_matches_newton && fixed_point_matches_inverse;
}

ChainResult chain_check(int order) {
  ChainResult r;
  r.order = order;
  const Egf t = Egf::t(order);
  const EulerSeries e = euler_series(order);
  const Egf texp = t * exp(-t);
  r.composition_matches_closed_form = e.lie_over_com == e.closed_form;
  r.sum_is_t_minus_t_exp = e.sum == t - texp;
  const Egf inv = comp_inverse(t - e.sum);
  const auto d = inv.dims();
  r.inverse_has_tree_dims = true;
  for (int n = 1; n <= order; ++n) {
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), n, n - 1);
    if (d[n - 1] != expect) r.inverse_has_tree_dims = false;
  }
  const Egf tree = tree_egf(order);
  r.compose_with_tree_is_t = compose(texp, tree) == t;
  r.lagrange_matches_newton = comp_inverse_newton(texp) == inv;
  r.fixed_point_matches_inverse = tree == inv;
  return r;
}

std::string to_text(const Egf& f) {
  std::string out;
  for (int n = 0; n <= f.order(); ++n) {
    if (f[n] == 0) continue;
    Scalar c = f[n];
    const bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = n == 0 ? "" : n == 1 ? "t" : "t^" + std::to_string(n);
    if (n == 0)
      out += to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += to_string(c) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace opforge
