#pragma once

#include <map>
#include <utility>

#include "ktweb/errors.hpp"
#include "ktweb/rational.hpp"

namespace ktweb {

inline constexpr int kDefaultMaxDegree = 32;

/// Sparse bivariate polynomial with exact rational coefficients.
/// No zero coefficients are stored; each exponent is bounded by max_degree.
class Poly2 {
 public:
  using Key = std::pair<int, int>;  // (exponent of x1, exponent of x2)
  using Terms = std::map<Key, Rat>;

  Poly2() = default;
  explicit Poly2(int max_degree) : max_degree_(max_degree) {}

  static Poly2 constant(const Rat& c, int max_degree = kDefaultMaxDegree);
  static Poly2 monomial(int i, int j, const Rat& c, int max_degree = kDefaultMaxDegree);

  /// Sets the coefficient of x1^i x2^j (erases on zero). Throws DegreeOverflow.
  void set(int i, int j, const Rat& c);
  void add_term(int i, int j, const Rat& c);
  Rat coeff(int i, int j) const;

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int max_degree() const { return max_degree_; }

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Rat& c);
  friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
  friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator*(Poly2 lhs, const Rat& c) { return lhs *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 rhs) { return rhs *= c; }

  bool operator==(const Poly2& rhs) const { return terms_ == rhs.terms_; }

  /// Partial derivative; var is 1 or 2.
  Poly2 diff(int var) const;

  Rat eval(const Rat& x1, const Rat& x2) const;
  double eval(double x1, double x2) const;

  /// Exact substitution x1 -> c*x1 - s*x2 + tx, x2 -> s*x1 + c*x2 + ty.
  Poly2 compose_affine(const Rat& c, const Rat& s, const Rat& tx, const Rat& ty) const;

  const Terms& terms() const { return terms_; }

 private:
  void check_degree(int i, int j) const;

  Terms terms_;
  int max_degree_ = kDefaultMaxDegree;
};

}  // namespace ktweb
