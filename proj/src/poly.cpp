#include "ktweb/poly.hpp"

#include <algorithm>
#include <vector>

namespace ktweb {

void Poly2::check_degree(int i, int j) const {
  if (i < 0 || j < 0) throw DegreeOverflow("negative exponent");
  if (i > max_degree_ || j > max_degree_) {
    throw DegreeOverflow("exponent exceeds bound " + std::to_string(max_degree_));
  }
}

Poly2 Poly2::constant(const Rat& c, int max_degree) {
  Poly2 p(max_degree);
  p.set(0, 0, c);
  return p;
}

Poly2 Poly2::monomial(int i, int j, const Rat& c, int max_degree) {
  Poly2 p(max_degree);
  p.set(i, j, c);
  return p;
}

void Poly2::set(int i, int j, const Rat& c) {
  check_degree(i, j);
  if (c == 0) {
    terms_.erase({i, j});
  } else {
    terms_[{i, j}] = c;
  }
}

void Poly2::add_term(int i, int j, const Rat& c) {
  check_degree(i, j);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Poly2::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly2::degree() const {
  int deg = -1;
  for (const auto& [key, c] : terms_) deg = std::max(deg, key.first + key.second);
  return deg;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  max_degree_ = std::min(max_degree_, rhs.max_degree_);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  max_degree_ = std::min(max_degree_, rhs.max_degree_);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out(std::min(lhs.max_degree_, rhs.max_degree_));
  for (const auto& [ka, ca] : lhs.terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

Poly2 Poly2::diff(int var) const {
  Poly2 out(max_degree_);
  for (const auto& [key, c] : terms_) {
    const auto [i, j] = key;
    if (var == 1 && i > 0) out.add_term(i - 1, j, c * i);
    if (var == 2 && j > 0) out.add_term(i, j - 1, c * j);
  }
  return out;
}

Rat Poly2::eval(const Rat& x1, const Rat& x2) const {
  Rat acc(0);
  for (const auto& [key, c] : terms_) {
    Rat term = c;
    for (int k = 0; k < key.first; ++k) term *= x1;
    for (int k = 0; k < key.second; ++k) term *= x2;
    acc += term;
  }
  return acc;
}

double Poly2::eval(double x1, double x2) const {
  double acc = 0.0;
  for (const auto& [key, c] : terms_) {
    double term = to_double(c);
    for (int k = 0; k < key.first; ++k) term *= x1;
    for (int k = 0; k < key.second; ++k) term *= x2;
    acc += term;
  }
  return acc;
}

Poly2 Poly2::compose_affine(const Rat& c, const Rat& s, const Rat& tx, const Rat& ty) const {
  const Poly2 X = Poly2::monomial(1, 0, c, max_degree_) + Poly2::monomial(0, 1, -s, max_degree_) +
                  Poly2::constant(tx, max_degree_);
  const Poly2 Y = Poly2::monomial(1, 0, s, max_degree_) + Poly2::monomial(0, 1, c, max_degree_) +
                  Poly2::constant(ty, max_degree_);

  int max_i = 0, max_j = 0;
  for (const auto& [key, v] : terms_) {
    max_i = std::max(max_i, key.first);
    max_j = std::max(max_j, key.second);
  }
  std::vector<Poly2> xp(static_cast<size_t>(max_i) + 1, Poly2::constant(1, max_degree_));
  std::vector<Poly2> yp(static_cast<size_t>(max_j) + 1, Poly2::constant(1, max_degree_));
  for (int i = 1; i <= max_i; ++i) xp[static_cast<size_t>(i)] = xp[static_cast<size_t>(i - 1)] * X;
  for (int j = 1; j <= max_j; ++j) yp[static_cast<size_t>(j)] = yp[static_cast<size_t>(j - 1)] * Y;

  Poly2 out(max_degree_);
  for (const auto& [key, v] : terms_) {
    out += v * (xp[static_cast<size_t>(key.first)] * yp[static_cast<size_t>(key.second)]);
  }
  return out;
}

}  // namespace ktweb
