#pragma once

// Top intersection numbers E^i H^(n-i) on one blow-up chart, symbolic
// expansion of divisor products into affine forms over the unknown
// numbers, exact linear solving, and the projective-bundle relation of the
// exceptional divisor.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/lattice.hpp"
#include "cremona/poly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Unknown intersection numbers are named by their E-exponent: u6 = H^3 E^6
/// on a 9-fold.
inline std::string unknown_name(int i) { return "u" + std::to_string(i); }

struct TableEntry {
  enum class Kind { Known, Unknown };
  Kind kind = Kind::Known;
  Poly value;       // when Known; may mention d1 / d2
  int unknown = -1; // E-exponent when Unknown

  bool is_unknown() const { return kind == Kind::Unknown; }
  Poly as_poly() const { return is_unknown() ? Poly::var(unknown_name(unknown)) : value; }
};

/// E^i H^(n-i) for a blow-up of P^n along a center of dimension m and degree `deg`.
inline TableEntry eh_value(int n, int m, const Poly& deg, int i) {
  if (i < 0 || i > n) throw DomainError("exponent " + std::to_string(i) + " outside 0.." + std::to_string(n));
  if (m < 1 || m > n - 2) throw DomainError("center dimension " + std::to_string(m) + " outside 1..n-2");
  const int codim = n - m;
  if (i == 0) return {TableEntry::Kind::Known, Poly(1)};
  if (i < codim) return {TableEntry::Kind::Known, Poly(0)};
  if (i == codim) return {TableEntry::Kind::Known, (codim - 1) % 2 == 0 ? deg : -deg};
  return {TableEntry::Kind::Unknown, Poly(0), i};
}

class IntersectionTable {
 public:
  IntersectionTable(Chart chart, int n, int m, Poly deg) : chart_(chart), n_(n), m_(m), deg_(std::move(deg)) {
    eh_value(n_, m_, deg_, 0);  // validates n, m
  }

  Chart chart() const { return chart_; }
  int n() const { return n_; }
  int m() const { return m_; }
  const Poly& deg() const { return deg_; }
  TableEntry entry(int i) const { return eh_value(n_, m_, deg_, i); }

  std::vector<int> unknowns() const {
    std::vector<int> out;
    for (int i = n_ - m_ + 1; i <= n_; ++i) out.push_back(i);
    return out;
  }

 private:
  Chart chart_;
  int n_;
  int m_;
  Poly deg_;
};

/// constant + sum coeff_i * u_i. Coefficients are polynomials in the degree
/// symbols (pure rationals in every product of divisor classes).
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Poly constant) : constant_(std::move(constant)) {}

  static LinearForm unknown(int i) {
    LinearForm f;
    f.add_term(i, Poly(1));
    return f;
  }

  const Poly& constant() const { return constant_; }
  const std::map<int, Poly>& terms() const { return terms_; }

  Poly coefficient(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Poly(0) : it->second;
  }

  void add_constant(const Poly& p) { constant_ += p; }

  void add_term(int i, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const TableEntry& e, const Poly& coeff) {
    if (e.is_unknown())
      add_term(e.unknown, coeff);
    else
      add_constant(coeff * e.value);
  }

  LinearForm& operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [i, c] : o.terms_) add_term(i, c);
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    constant_ -= o.constant_;
    for (const auto& [i, c] : o.terms_) add_term(i, -c);
    return *this;
  }
  LinearForm& operator*=(const Poly& s) {
    constant_ = constant_ * s;
    std::map<int, Poly> scaled;
    for (const auto& [i, c] : terms_) {
      Poly p = c * s;
      if (!p.is_zero()) scaled.emplace(i, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
  }
  friend LinearForm operator+(LinearForm l, const LinearForm& r) { return l += r; }
  friend LinearForm operator-(LinearForm l, const LinearForm& r) { return l -= r; }
  friend LinearForm operator*(LinearForm l, const Poly& s) { return l *= s; }
  friend LinearForm operator*(const Poly& s, LinearForm l) { return l *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm l) { return l *= Poly(s); }

  bool operator==(const LinearForm& o) const { return constant_ == o.constant_ && terms_ == o.terms_; }

  /// Unknowns become polynomial variables u_i.
  Poly to_poly() const {
    Poly p = constant_;
    for (const auto& [i, c] : terms_) p += c * Poly::var(unknown_name(i));
    return p;
  }

  /// Substitutes values for (some of) the unknowns.
  LinearForm substitute(const std::map<int, Poly>& values) const {
    LinearForm out(constant_);
    for (const auto& [i, c] : terms_) {
      auto it = values.find(i);
      if (it == values.end())
        out.add_term(i, c);
      else
        out.add_constant(c * it->second);
    }
    return out;
  }

  std::string str() const {
    std::string s = constant_.is_zero() && !terms_.empty() ? "" : constant_.str();
    for (const auto& [i, c] : terms_) {
      const std::string u = unknown_name(i);
      if (c.terms().size() == 1) {
        const auto& [mono, coeff] = *c.terms().begin();
        const Rational mag = abs(coeff);
        std::string body = mag == 1 ? "" : to_string(mag) + "*";
        if (!mono.is_one()) body += mono.str() + "*";
        body += u;
        if (s.empty())
          s = (coeff < 0 ? "-" : "") + body;
        else
          s += (coeff < 0 ? " - " : " + ") + body;
      } else {
        s += (s.empty() ? "(" : " + (") + c.str() + ")*" + u;
      }
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const LinearForm& f) { return os << f.str(); }

 private:
  Poly constant_;
  std::map<int, Poly> terms_;
};

/// Polynomial in the two commuting generators H and E of one chart, with
/// coefficients polynomial in the degree symbols. Keyed by (H-exp, E-exp).
class ChowPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Poly>;

  ChowPoly() = default;
  ChowPoly(const Poly& scalar) { add_term(0, 0, scalar); }

  static ChowPoly H() {
    ChowPoly p;
    p.add_term(1, 0, Poly(1));
    return p;
  }
  static ChowPoly E() {
    ChowPoly p;
    p.add_term(0, 1, Poly(1));
    return p;
  }
  static ChowPoly from(const DivisorClass& c) {
    ChowPoly p;
    p.add_term(1, 0, Poly(c.coeff_h()));
    p.add_term(0, 1, Poly(c.coeff_e()));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int h, int e, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::pair{h, e}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend ChowPoly operator+(ChowPoly l, const ChowPoly& r) {
    for (const auto& [k, c] : r.terms_) l.add_term(k.first, k.second, c);
    return l;
  }
  friend ChowPoly operator-(ChowPoly l, const ChowPoly& r) {
    for (const auto& [k, c] : r.terms_) l.add_term(k.first, k.second, -c);
    return l;
  }
  friend ChowPoly operator*(const ChowPoly& l, const ChowPoly& r) {
    ChowPoly out;
    for (const auto& [kl, cl] : l.terms_)
      for (const auto& [kr, cr] : r.terms_) out.add_term(kl.first + kr.first, kl.second + kr.second, cl * cr);
    return out;
  }

  ChowPoly pow(unsigned exp) const {
    ChowPoly result(Poly(1)), base = *this;
    while (exp) {
      if (exp & 1u) result = result * base;
      exp >>= 1u;
      if (exp) base = base * base;
    }
    return result;
  }

  bool operator==(const ChowPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// Replaces every H^(n-k) E^k by its table value. All terms must have total
/// degree n.
inline LinearForm evaluate(const ChowPoly& p, const IntersectionTable& table) {
  LinearForm out;
  for (const auto& [k, c] : p.terms()) {
    const int degree = k.first + k.second;
    if (degree != table.n())
      throw DomainError("degree mismatch: expected " + std::to_string(table.n()) + ", got " + std::to_string(degree) +
                        " in term H^" + std::to_string(k.first) + " E^" + std::to_string(k.second));
    out.add(table.entry(k.second), c);
  }
  return out;
}

/// Expands prod (alpha_j H + beta_j E)^(k_j) through per-factor binomial rows
/// and substitutes the table.
inline LinearForm expand_product(const std::vector<std::pair<DivisorClass, int>>& factors,
                                 const IntersectionTable& table) {
  int total = 0;
  for (const auto& [dc, k] : factors) {
    if (dc.chart() != table.chart()) throw ChartMismatch("factor chart differs from the intersection table's chart");
    if (k < 0) throw DomainError("negative exponent " + std::to_string(k));
    total += k;
  }
  if (total != table.n())
    throw DomainError("degree mismatch: expected " + std::to_string(table.n()) + ", got " + std::to_string(total));

  // coeffs[j] = coefficient of H^(total-j) E^j in the running product.
  std::vector<Rational> coeffs{Rational(1)};
  for (const auto& [dc, k] : factors) {
    std::vector<Rational> row(static_cast<std::size_t>(k) + 1);
    Integer binom = 1;
    for (int j = 0; j <= k; ++j) {
      row[j] = Rational(binom) * qpow(dc.coeff_h(), k - j) * qpow(dc.coeff_e(), j);
      binom = binom * (k - j) / (j + 1);
    }
    std::vector<Rational> next(coeffs.size() + row.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) next[i + j] += coeffs[i] * row[j];
    }
    coeffs = std::move(next);
  }

  LinearForm out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) out.add(table.entry(static_cast<int>(j)), Poly(coeffs[j]));
  return out;
}

/// form = required.
struct Equation {
  LinearForm form;
  Poly required;
};

/// Thrown when some combination of the equations reduces to 0 = nonzero.
class InconsistentSystem : public std::runtime_error {
 public:
  InconsistentSystem(std::vector<RationalFunction> combination, RationalFunction residual)
      : std::runtime_error("inconsistent system: combination reduces to 0 = " + residual.str()),
        combination(std::move(combination)),
        residual(std::move(residual)) {}

  std::vector<RationalFunction> combination;  // multiplier per input equation
  RationalFunction residual;
};

class RankDeficient : public std::runtime_error {
 public:
  RankDeficient(std::size_t rank, std::vector<int> unknowns)
      : std::runtime_error("underdetermined system: rank " + std::to_string(rank) + " in " +
                           std::to_string(unknowns.size()) + " unknowns"),
        rank(rank),
        unknowns(std::move(unknowns)) {}

  std::size_t rank;
  std::vector<int> unknowns;
};

struct Solution {
  std::map<int, RationalFunction> values;

  /// Value as a polynomial; throws if the value has a nonconstant denominator.
  Poly poly(int i) const {
    const RationalFunction& v = values.at(i);
    if (!v.is_polynomial()) throw DomainError(unknown_name(i) + " is not polynomial in the degree symbols");
    return v.numerator();
  }
};

/// Fraction-free (Bareiss) elimination over the field of rational functions
/// in the degree symbols. Pivot: first nonzero entry at or below the current
/// row. Rows carry their combination of the input equations so an
/// inconsistency can be reported as an explicit linear combination.
inline Solution solve_unknowns(const std::vector<Equation>& equations) {
  std::vector<int> unknowns;
  for (const auto& eq : equations)
    for (const auto& [i, _] : eq.form.terms()) unknowns.push_back(i);
  std::sort(unknowns.begin(), unknowns.end());
  unknowns.erase(std::unique(unknowns.begin(), unknowns.end()), unknowns.end());

  const std::size_t rows = equations.size();
  const std::size_t cols = unknowns.size();
  // Columns: unknowns | rhs | combination.
  const std::size_t width = cols + 1 + rows;
  std::vector<std::vector<RationalFunction>> m(rows, std::vector<RationalFunction>(width));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = equations[r].form.coefficient(unknowns[c]);
    m[r][cols] = equations[r].required - equations[r].form.constant();
    m[r][cols + 1 + r] = 1;
  }

  RationalFunction prev = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = 0; j < width; ++j) {
        if (j == c) continue;
        m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    pivot_col.push_back(c);
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r) {
    if (!m[r][cols].is_zero())
      throw InconsistentSystem(std::vector<RationalFunction>(m[r].begin() + cols + 1, m[r].end()), m[r][cols]);
  }
  if (rank < cols) throw RankDeficient(rank, unknowns);

  Solution sol;
  std::vector<RationalFunction> x(cols);
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t c = pivot_col[r];
    RationalFunction acc = m[r][cols];
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!m[r][j].is_zero()) acc -= m[r][j] * x[j];
    x[c] = acc / m[r][c];
  }
  for (std::size_t c = 0; c < cols; ++c) sol.values.emplace(unknowns[c], x[c]);
  return sol;
}

/// c1 = -x/d2, c2 = x^2/d2^2 - y/d2 for the conormal bundle of the
/// smaller center, from x = H^3 E^6 and y = H^2 E^7.
template <class Field>
std::pair<Field, Field> chern_from_intersections(const Field& x, const Field& y, const Field& d2) {
  if (d2 == Field(0)) throw DomainError("d2 = 0");
  Field c1 = Field(0) - x / d2;
  Field c2 = x * x / (d2 * d2) - y / d2;
  return {c1, c2};
}

/// v^r - c1 H v^(r-1) + c2 H^2 v^(r-2) - ... = 0 on P(N*), with `chern`
/// holding c_1..c_r as multiples of H^i.
template <class Field>
struct BundleRelation {
  int rank = 0;
  std::vector<Field> chern;
};

namespace detail {

// Multiplying the relation by v^k H^(m-1-k) and integrating over the
// exceptional divisor, with H^j v^l |-> (-1)^l E^(l+1) H^j, gives
//   (-1)^(r+k) * sum_i c_i * E^(r+k+1-i) H^(...),   c_0 = 1.
// Terms where H^j vanishes on the center are exactly the zero table entries.
template <class Out, class Field, class Lift>
std::vector<Out> bundle_residuals(const BundleRelation<Field>& rel, const IntersectionTable& table, Lift lift) {
  const int r = table.n() - table.m();
  if (rel.rank != r)
    throw DomainError("bundle rank " + std::to_string(rel.rank) + " does not match codimension " + std::to_string(r));
  if (static_cast<int>(rel.chern.size()) != r) throw DomainError("need Chern coefficients c_1..c_r");
  std::vector<Out> out;
  for (int k = 0; k < table.m(); ++k) {
    Out acc = lift(Field(1), table.entry(r + k + 1));
    for (int i = 1; i <= r; ++i) acc += lift(rel.chern[i - 1], table.entry(r + k + 1 - i));
    if ((r + k) % 2) acc = Out{} - acc;
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace detail

/// Residuals that vanish iff the Chern coefficients are consistent with the
/// table; one per multiplier v^k H^(m-1-k), k = 0..m-1.
inline std::vector<LinearForm> bundle_relation_residual(const BundleRelation<Rational>& rel,
                                                        const IntersectionTable& table) {
  return detail::bundle_residuals<LinearForm>(rel, table, [](const Rational& c, const TableEntry& e) {
    LinearForm f;
    f.add(e, Poly(c));
    return f;
  });
}

/// Fully symbolic variant; unknown entries become the variables u_i.
inline std::vector<RationalFunction> bundle_relation_residual(const BundleRelation<RationalFunction>& rel,
                                                              const IntersectionTable& table) {
  auto lift = [](const RationalFunction& c, const TableEntry& e) { return c * RationalFunction(e.as_poly()); };
  return detail::bundle_residuals<RationalFunction>(rel, table, lift);
}

}  // namespace cremona
