#pragma once

// Numerical constraints on a candidate (n, a, c, d, m1, m2). Each check is
// a pure predicate returning the exact quantities it compared.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

enum class Relation { Equal, Less, LessEqual, Greater, GreaterEqual, Divides, CongruentMod };

inline std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equal: return "==";
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::Divides: return "|";
    case Relation::CongruentMod: return "=~";
  }
  return "?";
}

/// One exact comparison `lhs op rhs` (mod `modulus` for congruences).
struct Comparison {
  std::string label;
  Relation op = Relation::Equal;
  Rational lhs;
  Rational rhs;
  Integer modulus = 0;

  bool evaluate() const {
    switch (op) {
      case Relation::Equal: return lhs == rhs;
      case Relation::Less: return lhs < rhs;
      case Relation::LessEqual: return lhs <= rhs;
      case Relation::Greater: return lhs > rhs;
      case Relation::GreaterEqual: return lhs >= rhs;
      case Relation::Divides:
        return is_integral(lhs) && is_integral(rhs) && divides(lhs.get_num(), rhs.get_num());
      case Relation::CongruentMod:
        return is_integral(lhs) && is_integral(rhs) && divides(modulus, lhs.get_num() - rhs.get_num());
    }
    return false;
  }

  std::string str() const {
    std::string s = to_string(lhs) + " " + std::string(relation_symbol(op)) + " " + to_string(rhs);
    if (op == Relation::CongruentMod) s += " (mod " + to_string(modulus) + ")";
    return label + ": " + s;
  }
};

/// `holds` is the conjunction of the witness comparisons.
struct ConstraintResult {
  std::string id;
  bool holds = true;
  bool axiom = false;
  std::vector<Comparison> witness;

  ConstraintResult() = default;
  explicit ConstraintResult(std::string id, bool axiom = false) : id(std::move(id)), axiom(axiom) {}

  ConstraintResult& compare(std::string label, Relation op, Rational lhs, Rational rhs, Integer modulus = 0) {
    Comparison c{std::move(label), op, std::move(lhs), std::move(rhs), std::move(modulus)};
    holds = holds && c.evaluate();
    witness.push_back(std::move(c));
    return *this;
  }

  bool reverify() const {
    for (const auto& c : witness)
      if (!c.evaluate()) return false;
    return true;
  }
};

/// Unique (c, d) solving the two canonical-class identities for given a.
inline std::pair<Rational, Rational> katz_cd(int n, const Integer& a, int m1, int m2) {
  const Integer k1 = n - m1 - 1, k2 = n - m2 - 1;
  return {make_rational(a * (n + 1) - k2, k1), make_rational(a * (n + 1) - k1, k2)};
}

/// (a^2 (n+1)^2 - a (n+1)(2n-2-m1-m2)) / ((n-m1-1)(n-m2-1)).
inline Rational cd_minus_one(int n, const Integer& a, int m1, int m2) {
  const Integer np1 = n + 1;
  return make_rational(a * a * np1 * np1 - a * np1 * (2 * n - 2 - m1 - m2), Integer(n - m1 - 1) * (n - m2 - 1));
}

/// a^(n-m2) | cd - 1.
inline ConstraintResult check_eh_divisibility(int n, const Integer& a, int m2, const Integer& cd_minus_1) {
  ConstraintResult r("eh_divisibility");
  r.compare("a^(n-m2) | cd-1", Relation::Divides, Rational(ipow(a, static_cast<unsigned long>(n - m2))),
            Rational(cd_minus_1));
  return r;
}

/// Positivity, divisibility and the two inequalities bounding a.
inline ConstraintResult check_estimate(int n, const Integer& a, int m1, int m2) {
  ConstraintResult r("estimate");
  const Integer np1 = n + 1;
  const Integer k1 = n - m1 - 1, k2 = n - m2 - 1;
  const Integer p = a * np1 * np1 - np1 * (2 * n - 2 - m1 - m2);
  r.compare("a(n+1)^2-(n+1)(2n-2-m1-m2) > 0", Relation::Greater, Rational(p), 0);
  r.compare("(n-m1-1)(n-m2-1)a^(n-m2-1) | a(n+1)^2-(n+1)(2n-2-m1-m2)", Relation::Divides,
            Rational(Integer(k1 * k2 * ipow(a, static_cast<unsigned long>(n - m2 - 1)))), Rational(p));
  const Integer mid = ipow(a, static_cast<unsigned long>(n - m2 - 2)) * k2 * k1;
  r.compare("(n+1)^2 > a^(n-m2-2)(n-m2-1)(n-m1-1)", Relation::Greater, Rational(Integer(np1 * np1)), Rational(mid));
  r.compare("a^(n-m2-2)(n-m2-1)(n-m1-1) >= a^(n-m1-1)(n-m1)(n-m1-1)", Relation::GreaterEqual, Rational(mid),
            Rational(Integer(ipow(a, static_cast<unsigned long>(n - m1 - 1)) * (n - m1) * k1)));
  return r;
}

/// m1-m2 = a(m1+2) mod (n-m1-1) and m2-m1 = a(m2+2) mod (n-m2-1).
inline ConstraintResult check_congruences(int n, const Integer& a, int m1, int m2) {
  ConstraintResult r("congruences");
  r.compare("m1-m2 =~ a(m1+2)", Relation::CongruentMod, m1 - m2, Rational(Integer(a * (m1 + 2))), n - m1 - 1);
  r.compare("m2-m1 =~ a(m2+2)", Relation::CongruentMod, m2 - m1, Rational(Integer(a * (m2 + 2))), n - m2 - 1);
  return r;
}

/// d2 < (d/a)^(n-m2).
inline ConstraintResult check_degree_bound(const Integer& d2, const Integer& d, const Integer& a, int n, int m2) {
  ConstraintResult r("degree_bound");
  r.compare("d2 < (d/a)^(n-m2)", Relation::Less, Rational(d2),
            qpow(make_rational(d, a), static_cast<unsigned long>(n - m2)));
  return r;
}

/// Both canonical-class identities, a | cd-1 and c > d >= 2.
inline ConstraintResult check_katz_consistency(int n, const Integer& a, const Integer& c, const Integer& d, int m1,
                                               int m2) {
  ConstraintResult r("katz_consistency");
  const Integer cd1 = c * d - 1;
  const Rational q = make_rational(cd1, a);
  r.compare("(d-1)(n+1) == (n-m1-1)(cd-1)/a", Relation::Equal, Rational(Integer((d - 1) * (n + 1))),
            Rational(n - m1 - 1) * q);
  r.compare("(c-1)(n+1) == (n-m2-1)(cd-1)/a", Relation::Equal, Rational(Integer((c - 1) * (n + 1))),
            Rational(n - m2 - 1) * q);
  r.compare("a | cd-1", Relation::Divides, Rational(a), Rational(cd1));
  r.compare("c > d", Relation::Greater, Rational(c), Rational(d));
  r.compare("d >= 2", Relation::GreaterEqual, Rational(d), 2);
  return r;
}

/// Imported criterion: m2 <= 2n/3 forces a = 1. Fails exactly when a >= 2
/// and 3 m2 <= 2n.
inline ConstraintResult check_hc_gate(int n, const Integer& a, int m2) {
  ConstraintResult r("hc_gate", /*axiom=*/true);
  if (a == 1)
    r.compare("a == 1", Relation::Equal, Rational(a), 1);
  else
    r.compare("3*m2 > 2n", Relation::Greater, 3 * m2, 2 * n);
  return r;
}

}  // namespace cremona
