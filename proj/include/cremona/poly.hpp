#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Power product of named variables, kept sorted by name with positive
/// exponents only.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(const std::string& name, int exp = 1) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(name, exp);
    return m;
  }

  int degree() const {
    int d = 0;
    for (const auto& [_, e] : factors_) d += e;
    return d;
  }

  int exponent(const std::string& name) const {
    for (const auto& [v, e] : factors_)
      if (v == name) return e;
    return 0;
  }

  bool is_one() const { return factors_.empty(); }

  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const {
    Monomial out;
    auto i = factors_.begin();
    auto j = o.factors_.begin();
    while (i != factors_.end() || j != o.factors_.end()) {
      if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Removes `name` entirely.
  Monomial without(const std::string& name) const {
    Monomial out;
    for (const auto& f : factors_)
      if (f.first != name) out.factors_.push_back(f);
    return out;
  }

  std::string str() const {
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += '*';
      s += v;
      if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
  }

  bool operator==(const Monomial&) const = default;

  // Graded: lower total degree first, then lexicographic on (name, exponent).
  friend bool operator<(const Monomial& l, const Monomial& r) {
    int dl = l.degree(), dr = r.degree();
    if (dl != dr) return dl < dr;
    return l.factors_ < r.factors_;
  }

 private:
  std::vector<std::pair<std::string, int>> factors_;
};

/// Multivariate polynomial with rational coefficients over named variables.
/// Used for the degree symbols d1, d2 and, in symbolic checks, for the
/// unknown intersection numbers u_i.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c) { add_term(Monomial{}, c); }
  Poly(long c) : Poly(Rational(c)) {}
  Poly(int c) : Poly(Rational(c)) {}

  static Poly var(const std::string& name) {
    Poly p;
    p.terms_.emplace(Monomial::var(name), Rational(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [_, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator-(Poly p) { return p *= Rational(-1); }

  friend Poly operator*(const Poly& l, const Poly& r) {
    Poly out;
    for (const auto& [ml, cl] : l.terms_)
      for (const auto& [mr, cr] : r.terms_) out.add_term(ml * mr, cl * cr);
    return out;
  }

  Poly pow(unsigned exp) const {
    Poly result(1), base = *this;
    while (exp) {
      if (exp & 1u) result = result * base;
      exp >>= 1u;
      if (exp) base = base * base;
    }
    return result;
  }

  /// Sum of the terms carrying name^k, with that factor removed.
  Poly coefficient(const std::string& name, int k) const {
    Poly out;
    for (const auto& [m, c] : terms_)
      if (m.exponent(name) == k) out.add_term(m.without(name), c);
    return out;
  }

  Poly substitute(const std::string& name, const Poly& value) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(name);
      Poly t;
      t.add_term(m.without(name), c);
      out += e ? t * value.pow(static_cast<unsigned>(e)) : t;
    }
    return out;
  }

  bool mentions(const std::string& name) const {
    for (const auto& [m, _] : terms_)
      if (m.exponent(name)) return true;
    return false;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) s += '-';
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (m.is_one()) {
        s += to_string(mag);
      } else {
        if (mag != 1) s += to_string(mag) + '*';
        s += m.str();
      }
      first = false;
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  Terms terms_;
};

/// Quotient of two polynomials. Not reduced by gcd; a constant denominator
/// is folded into the numerator so polynomial results print as polynomials.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& l, const RationalFunction& r) {
    if (l.den_ == r.den_) return {l.num_ + r.num_, l.den_};
    return {l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_};
  }
  friend RationalFunction operator-(const RationalFunction& l, const RationalFunction& r) {
    if (l.den_ == r.den_) return {l.num_ - r.num_, l.den_};
    return {l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_};
  }
  friend RationalFunction operator-(const RationalFunction& f) { return {-f.num_, f.den_}; }
  friend RationalFunction operator*(const RationalFunction& l, const RationalFunction& r) {
    return {l.num_ * r.num_, l.den_ * r.den_};
  }
  friend RationalFunction operator/(const RationalFunction& l, const RationalFunction& r) {
    if (r.is_zero()) throw DomainError("division by zero rational function");
    return {l.num_ * r.den_, l.den_ * r.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& l, const RationalFunction& r) {
    return (l.num_ * r.den_ - r.num_ * l.den_).is_zero();
  }

  std::string str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
    } else if (den_.is_constant()) {
      num_ *= Rational(1) / den_.constant_term();
      den_ = Poly(1);
    } else {
      // Cancel a numerator that is a constant multiple of the denominator.
      const auto& [lead_mono, lead_coeff] = *den_.terms().rbegin();
      auto it = num_.terms().find(lead_mono);
      if (it != num_.terms().end() && num_.terms().size() == den_.terms().size()) {
        const Rational ratio = it->second / lead_coeff;
        if (num_ == den_ * Poly(ratio)) {
          num_ = Poly(ratio);
          den_ = Poly(1);
        }
      }
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace cremona
