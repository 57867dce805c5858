#include "polyorder/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace polyorder {

namespace {

using Dense = std::vector<Rational>;  // ascending degree, no trailing zeros

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense to_dense(const SparsePoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("univariate operation on multivariate polynomial");
  Dense d;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] >= static_cast<int>(d.size())) d.resize(e[0] + 1, Rational(0));
    d[e[0]] = c;
  }
  return d;
}

SparsePoly from_dense(const Dense& d) {
  SparsePoly p(1);
  for (size_t i = 0; i < d.size(); ++i) p.add_term({static_cast<int>(i)}, d[i]);
  return p;
}

Rational eval(const Dense& p, const Rational& x) {
  Rational v;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

Dense derivative(const Dense& p) {
  Dense d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Remainder of a by b, b != 0.
Dense rem(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Dense make_monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  const Rational inv = Rational(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

Dense gcd_dense(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = rem(a, b);
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

// Exact division; nullopt when a remainder survives.
std::optional<Dense> div_exact_dense(Dense a, const Dense& b) {
  trim(a);
  if (b.empty()) throw std::invalid_argument("divide_exact: zero divisor");
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

int sign_variations(const std::vector<Dense>& chain, const Rational& x) {
  int last = 0, var = 0;
  for (const auto& p : chain) {
    const int s = eval(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

int x_adic_valuation(const SparsePoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("x_adic_valuation: multivariate polynomial");
  if (p.is_zero()) throw std::invalid_argument("x_adic_valuation: zero polynomial");
  return p.terms().begin()->first[0];
}

SparsePoly shift_down(const SparsePoly& p, int j) {
  if (p.nvars() != 1) throw std::invalid_argument("shift_down: multivariate polynomial");
  SparsePoly r(1);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < j) throw std::invalid_argument("shift_down: x^j does not divide p");
    r.add_term({e[0] - j}, c);
  }
  return r;
}

std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& d) {
  auto q = div_exact_dense(to_dense(p), to_dense(d));
  if (!q) return std::nullopt;
  return from_dense(*q);
}

int sturm_count(const SparsePoly& poly, const Rational& a, const Rational& b) {
  if (poly.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (a > b) throw std::invalid_argument("sturm_count: empty interval");
  if (a == b) return 0;

  Dense p = to_dense(poly);
  // Squarefree part: p / gcd(p, p').
  const Dense d = derivative(p);
  if (!d.empty()) {
    const Dense g = gcd_dense(p, d);
    if (g.size() > 1) p = *div_exact_dense(p, g);
  }

  int count = eval(p, b).is_zero() ? 1 : 0;
  // Peel roots sitting at the endpoints so the classical theorem applies.
  const Dense lin_a = {-a, Rational(1)};
  const Dense lin_b = {-b, Rational(1)};
  while (!p.empty() && eval(p, a).is_zero()) p = *div_exact_dense(p, lin_a);
  while (!p.empty() && eval(p, b).is_zero()) p = *div_exact_dense(p, lin_b);
  if (p.size() <= 1) return count;

  std::vector<Dense> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Dense r = rem(chain[chain.size() - 2], chain.back());
    trim(r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  count += sign_variations(chain, a) - sign_variations(chain, b);
  return count;
}

bool strictly_positive_on_unit_interval(const SparsePoly& p) {
  if (p.is_zero()) return false;
  if (p.evaluate({Rational(0)}).sign() <= 0) return false;
  if (p.evaluate({Rational(1)}).sign() <= 0) return false;
  // Endpoints are nonzero, so roots in (0, 1] are exactly roots in (0, 1).
  return sturm_count(p, Rational(0), Rational(1)) == 0;
}

}  // namespace polyorder
