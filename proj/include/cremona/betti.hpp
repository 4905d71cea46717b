#pragma once

// Even Betti numbers of the two centers and the relations forced on them
// by the two blow-up decompositions of H^*(X).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/constraints.hpp"
#include "cremona/errors.hpp"

namespace cremona {

/// (h^0, h^2, ..., h^(2m)) of an m-dimensional center. Indices outside
/// 0..m read as 0.
class BettiSeq {
 public:
  BettiSeq() = default;
  explicit BettiSeq(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  int dim() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<std::int64_t>& values() const { return values_; }

  std::int64_t operator[](int i) const {
    return i < 0 || i >= static_cast<int>(values_.size()) ? 0 : values_[static_cast<std::size_t>(i)];
  }

  bool palindromic() const {
    for (int i = 0; i <= dim(); ++i)
      if ((*this)[i] != (*this)[dim() - i]) return false;
    return true;
  }

  bool positive() const {
    for (auto v : values_)
      if (v < 1) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
    return s + ")";
  }

  bool operator==(const BettiSeq&) const = default;

 private:
  std::vector<std::int64_t> values_;
};

/// h^(2k)(X) = h^(2k)(P^n) + sum_{i=0}^{n-m-2} h^(2(k-i-1))(Z).
inline std::int64_t blowup_even_betti(const BettiSeq& center, int n, int m, int k) {
  std::int64_t h = (k >= 0 && k <= n) ? 1 : 0;
  for (int i = 0; i <= n - m - 2; ++i) h += center[k - i - 1];
  return h;
}

/// a_i - a_{i-(n-m1-1)} = b_i - b_{i-(n-m2-1)} for every i in 0..n.
inline ConstraintResult difference_relation(const BettiSeq& a, const BettiSeq& b, int n, int m1, int m2) {
  ConstraintResult r("betti_difference");
  for (int i = 0; i <= n; ++i) {
    const std::int64_t lhs = a[i] - a[i - (n - m1 - 1)];
    const std::int64_t rhs = b[i] - b[i - (n - m2 - 1)];
    r.compare("i=" + std::to_string(i), Relation::Equal, Rational(static_cast<long>(lhs)),
              Rational(static_cast<long>(rhs)));
  }
  return r;
}

/// True when h^(2i)(Z) = 1 is forced for a smooth m-fold Z in P^n
/// (low-codimension cohomology agrees with P^n). Imported result.
inline bool barth_larsen_forced(int n, int m, int i) {
  if (m < 1 || m > n - 2 || i < 0) throw DomainError("barth_larsen_forced: need 1 <= m <= n-2 and i >= 0");
  return 2 * i <= 2 * m - n;
}

/// Hypothesis of the gate: 4 m1 >= 3n - 2, in which case m2 <= n - m1 - 2.
inline bool check_betti_gate(int n, int m1) { return 4 * m1 >= 3 * n - 2; }

struct DerivationStep {
  std::string id;
  std::string statement;
  bool axiom = false;
  bool ok = true;
};

struct Case2Betti {
  BettiSeq a;  // 6-dimensional center
  BettiSeq b;  // 4-dimensional center
  std::vector<DerivationStep> steps;
  bool ok = true;
};

/// Determines the even Betti numbers of both centers for n = 9, m1 = 6,
/// m2 = 4 from the blow-up relations, duality, the forced low-degree
/// values and hard Lefschetz injectivity H^4 -> H^6.
inline Case2Betti derive_case2_betti() {
  constexpr int n = 9, m1 = 6, m2 = 4;
  constexpr int s1 = n - m1 - 1, s2 = n - m2 - 1;  // offsets 2 and 4
  std::vector<std::optional<std::int64_t>> a(m1 + 1), b(m2 + 1);
  Case2Betti out;
  auto step = [&](std::string id, std::string statement, bool ok, bool axiom = false) {
    out.steps.push_back({std::move(id), std::move(statement), axiom, ok});
    out.ok = out.ok && ok;
  };
  auto av = [&](int i) -> std::int64_t { return i < 0 || i > m1 ? 0 : a[i].value(); };
  auto bv = [&](int i) -> std::int64_t { return i < 0 || i > m2 ? 0 : b[i].value(); };

  a[0] = a[m1] = b[0] = b[m2] = 1;
  step("h0_and_top", "a_0 = a_6 = b_0 = b_4 = 1", true);

  const bool forced = barth_larsen_forced(n, m1, 1);
  a[1] = 1;
  step("barth_larsen", "a_1 = 1 (2*1 <= 2*6 - 9)", forced, true);

  // i <= n-m1-2 = 1: both offsets negative, so a_i = b_i.
  b[1] = a[1];
  step("low_degree_equal", "b_1 = a_1 = 1", 1 <= n - m1 - 2);

  a[m1 - 1] = a[1];
  b[m2 - 1] = b[1];
  step("poincare_duality", "a_5 = a_1 = 1, b_3 = b_1 = 1", true);

  // i = 3: a_3 - a_1 = b_3 - b_{-1}.
  a[3] = bv(3) - bv(3 - s2) + av(3 - s1);
  step("difference_i3", "a_3 = a_1 + b_3 = " + std::to_string(*a[3]), *a[3] == 2);

  // i = 2: a_2 - a_0 = b_2 - b_{-2}, so a_2 = 1 + b_2. Hard Lefschetz gives
  // a_2 <= a_3, hence b_2 <= a_3 - 1; positivity gives b_2 >= 1.
  const std::int64_t b2_max = *a[3] - av(0);
  const std::int64_t b2_min = 1;
  step("hard_lefschetz", "a_2 <= a_3 => b_2 <= " + std::to_string(b2_max), true, true);
  step("positivity", "b_2 >= 1", b2_min <= b2_max);
  b[2] = b2_min;
  a[2] = av(0) + *b[2];
  step("b2_pinned", "b_2 = 1, a_2 = 1 + b_2 = " + std::to_string(*a[2]), b2_min == b2_max);

  a[4] = a[2];
  step("poincare_duality_a4", "a_4 = a_2", true);

  std::vector<std::int64_t> av_out, bv_out;
  for (auto& x : a) av_out.push_back(x.value());
  for (auto& x : b) bv_out.push_back(x.value());
  out.a = BettiSeq(av_out);
  out.b = BettiSeq(bv_out);

  const auto rel = difference_relation(out.a, out.b, n, m1, m2);
  step("difference_all", "a_i - a_{i-2} = b_i - b_{i-4} for all i", rel.holds);
  step("palindromes", "a, b palindromic and positive",
       out.a.palindromic() && out.b.palindromic() && out.a.positive() && out.b.positive());
  return out;
}

}  // namespace cremona
