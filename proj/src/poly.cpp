#include "polyorder/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyorder {

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("SparsePoly::variable: bad index");
  ExpVec e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), Rational(1));
}

SparsePoly SparsePoly::monomial(int nvars, ExpVec exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("SparsePoly::monomial: exponent size mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("SparsePoly::monomial: negative exponent");
  SparsePoly p(nvars);
  p.add_term(exps, c);
  return p;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational SparsePoly::coeff(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const ExpVec& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("SparsePoly::add_term: exponent size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SparsePoly::evaluate(const QVec& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("SparsePoly::evaluate: dimension mismatch");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < nvars_; ++j)
      if (e[j] != 0) t *= pow_rational(point[j], static_cast<unsigned>(e[j]));
    sum += t;
  }
  return sum;
}

void SparsePoly::check_same(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: variable count mismatch");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same(b);
  SparsePoly r(a.nvars_);
  SparsePoly::ExpVec e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly r = constant(nvars_, Rational(1));
  SparsePoly b = *this;
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return r;
}

bool operator<(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ib != b.terms_.end();
}

std::string SparsePoly::var_name(int nvars, int index) {
  static const char* named[] = {"x", "y", "z", "w"};
  if (nvars <= 4) return named[index];
  return "x" + std::to_string(index + 1);
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  // Usual algebra-text layout: by total degree, earlier variables first.
  std::vector<std::pair<ExpVec, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool neg = c.sign() < 0;
    const Rational ac = c.abs();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (is_const || ac != Rational(1)) {
      os << ac.str();
      if (!is_const) os << "*";
    }
    bool firstv = true;
    for (int j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << var_name(nvars_, j);
      if (e[j] > 1) os << "^" << e[j];
    }
  }
  return os.str();
}

}  // namespace polyorder
