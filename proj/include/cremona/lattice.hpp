#pragma once

// Rank-2 Picard lattice of a variety X carrying two blow-down maps to P^n.
// Chart 1 is the basis {H1, E1} pulled back along the first contraction,
// chart 2 the basis {H2, E2}. F1, F2 are lines in the fibres of the two
// exceptional divisors.

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "cremona/errors.hpp"
#include "cremona/rational.hpp"

namespace cremona {

enum class Chart { One = 1, Two = 2 };
enum class Curve { F1, F2 };

inline Chart other(Chart c) { return c == Chart::One ? Chart::Two : Chart::One; }
inline int index(Chart c) { return static_cast<int>(c); }

/// Ambient dimension, center dimensions and (optionally) center degrees.
struct GeometryParams {
  int n = 0;
  int m1 = 0;
  int m2 = 0;
  std::optional<Integer> d1;
  std::optional<Integer> d2;

  static GeometryParams make(int n, int m1, int m2, std::optional<Integer> d1 = std::nullopt,
                             std::optional<Integer> d2 = std::nullopt) {
    GeometryParams gp{n, m1, m2, std::move(d1), std::move(d2)};
    gp.validate();
    return gp;
  }

  int center_dim(Chart c) const { return c == Chart::One ? m1 : m2; }

  void validate() const {
    if (n < 4) throw ConstraintViolation("geometry.n_at_least_4", "n = " + std::to_string(n));
    if (!(n - 2 >= m1 && m1 > m2 && m2 >= 1))
      throw ConstraintViolation("geometry.dimension_chain",
                                "need n-2 >= m1 > m2 >= 1, got n=" + std::to_string(n) +
                                    " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2));
    if (d1 && *d1 < 2) throw ConstraintViolation("geometry.d1_at_least_2", "d1 = " + d1->get_str());
    if (d2 && *d2 < 2) throw ConstraintViolation("geometry.d2_at_least_2", "d2 = " + d2->get_str());
  }

  /// Roles of the two contractions exchanged.
  GeometryParams swapped() const { return {n, m2, m1, d2, d1}; }
};

/// Pairing numbers a = H1.F2, b = H2.F1, c = E1.F2, d = E2.F1.
struct LatticeParams {
  Integer a;
  Integer b;
  Integer c;
  Integer d;

  /// b is set equal to a; `check_a_equals_b` keeps the equality testable.
  static LatticeParams make(const Integer& a, const Integer& c, const Integer& d) {
    LatticeParams lp{a, a, c, d};
    lp.validate();
    return lp;
  }

  bool check_a_equals_b() const { return a == b; }

  void validate() const {
    if (!check_a_equals_b()) throw ConstraintViolation("lattice.a_equals_b", "a != b");
    if (a <= 0) throw ConstraintViolation("lattice.a_positive", "a = " + a.get_str());
    if (c <= 0) throw ConstraintViolation("lattice.c_positive", "c = " + c.get_str());
    if (d <= 0) throw ConstraintViolation("lattice.d_positive", "d = " + d.get_str());
  }

  LatticeParams swapped() const { return {b, a, d, c}; }
};

class DivisorClass {
 public:
  DivisorClass(Chart chart, Rational h, Rational e) : chart_(chart), h_(std::move(h)), e_(std::move(e)) {}

  static DivisorClass H(Chart chart) { return {chart, 1, 0}; }
  static DivisorClass E(Chart chart) { return {chart, 0, 1}; }

  Chart chart() const { return chart_; }
  const Rational& coeff_h() const { return h_; }
  const Rational& coeff_e() const { return e_; }

  DivisorClass& operator+=(const DivisorClass& o) {
    require_same_chart(o);
    h_ += o.h_;
    e_ += o.e_;
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    require_same_chart(o);
    h_ -= o.h_;
    e_ -= o.e_;
    return *this;
  }
  friend DivisorClass operator+(DivisorClass l, const DivisorClass& r) { return l += r; }
  friend DivisorClass operator-(DivisorClass l, const DivisorClass& r) { return l -= r; }
  friend DivisorClass operator*(const Rational& s, const DivisorClass& c) { return {c.chart_, s * c.h_, s * c.e_}; }
  friend DivisorClass operator-(const DivisorClass& c) { return {c.chart_, -c.h_, -c.e_}; }

  friend bool operator==(const DivisorClass& l, const DivisorClass& r) {
    return l.chart_ == r.chart_ && l.h_ == r.h_ && l.e_ == r.e_;
  }

  std::string str() const {
    const std::string s = std::to_string(index(chart_));
    auto term = [&](const Rational& c, const char* g) { return (c == 1 ? "" : to_string(c) + "*") + g + s; };
    if (e_ == 0) return h_ == 0 ? "0" : term(h_, "H");
    if (h_ == 0) return e_ == -1 ? "-E" + s : term(e_, "E");
    return term(h_, "H") + (e_ < 0 ? " - " : " + ") + term(abs(e_), "E");
  }
  friend std::ostream& operator<<(std::ostream& os, const DivisorClass& c) { return os << c.str(); }

 private:
  void require_same_chart(const DivisorClass& o) const {
    if (o.chart_ != chart_)
      throw ChartMismatch("divisor classes in charts " + std::to_string(index(chart_)) + " and " +
                          std::to_string(index(o.chart_)) + " combined without conversion");
  }

  Chart chart_;
  Rational h_;
  Rational e_;
};

/// Rows give the source chart's (H, E) in target-chart coordinates:
///   H_src = m[0][0] H_dst + m[0][1] E_dst,  E_src = m[1][0] H_dst + m[1][1] E_dst.
struct BasisChange {
  Chart from = Chart::One;
  Chart to = Chart::Two;
  std::array<std::array<Rational, 2>, 2> m;

  Rational determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  bool integral() const {
    for (const auto& row : m)
      for (const auto& x : row)
        if (!is_integral(x)) return false;
    return true;
  }

  DivisorClass apply(const DivisorClass& c) const {
    if (c.chart() != from) throw ChartMismatch("basis change applied to a class in the wrong chart");
    return {to, c.coeff_h() * m[0][0] + c.coeff_e() * m[1][0], c.coeff_h() * m[0][1] + c.coeff_e() * m[1][1]};
  }

  BasisChange inverse() const {
    const Rational det = determinant();
    if (det == 0) throw DomainError("singular basis change");
    BasisChange inv{to, from, {}};
    inv.m[0][0] = m[1][1] / det;
    inv.m[0][1] = -m[0][1] / det;
    inv.m[1][0] = -m[1][0] / det;
    inv.m[1][1] = m[0][0] / det;
    return inv;
  }

  friend BasisChange operator*(const BasisChange& l, const BasisChange& r) {
    BasisChange out{r.from, l.to, {}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.m[i][j] = l.m[i][0] * r.m[0][j] + l.m[i][1] * r.m[1][j];
    return out;
  }
};

/// H1 = d H2 - a E2, E1 = ((cd-1)/a) H2 - c E2.
inline BasisChange solve_basis_change(const LatticeParams& lp) {
  lp.validate();
  const Integer cd1 = lp.c * lp.d - 1;
  if (!divides(lp.a, cd1))
    throw ConstraintViolation("lattice.a_divides_cd_minus_1",
                              "a = " + lp.a.get_str() + " does not divide cd-1 = " + cd1.get_str());
  BasisChange bc;
  bc.m[0][0] = lp.d;
  bc.m[0][1] = -lp.a;
  bc.m[1][0] = Rational(Integer(cd1 / lp.a));
  bc.m[1][1] = -lp.c;
  if (bc.determinant() != -1) throw ConstraintViolation("lattice.determinant_minus_1", "det = " + to_string(bc.determinant()));
  return bc;
}

/// Intersection of a divisor class with F1 or F2.
inline Rational pairing(const DivisorClass& dc, Curve curve, const LatticeParams& lp) {
  // (H.F, E.F) in the divisor's own chart.
  Rational hf, ef;
  if (dc.chart() == Chart::One) {
    hf = curve == Curve::F1 ? Rational(0) : Rational(lp.a);
    ef = curve == Curve::F1 ? Rational(-1) : Rational(lp.c);
  } else {
    hf = curve == Curve::F2 ? Rational(0) : Rational(lp.b);
    ef = curve == Curve::F2 ? Rational(-1) : Rational(lp.d);
  }
  return dc.coeff_h() * hf + dc.coeff_e() * ef;
}

/// K_X = -(n+1) H + (n - m - 1) E in the requested chart.
inline DivisorClass canonical_class(Chart chart, const GeometryParams& gp) {
  const int m = gp.center_dim(chart);
  return {chart, -(gp.n + 1), gp.n - m - 1};
}

}  // namespace cremona
