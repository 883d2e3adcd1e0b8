#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parsep {

using Integer = mpz_class;

class series_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exponent vector q^q a^a b^b z^z. Ordered lexicographically in (q, a, b, z).
struct Monomial {
  int q = 0;
  int a = 0;
  int b = 0;
  int z = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator+(Monomial x, const Monomial& y) {
    return {x.q + y.q, x.a + y.a, x.b + y.b, x.z + y.z};
  }
  Monomial scaled(int s) const { return {q * s, a * s, b * s, z * s}; }
  bool is_one() const { return q == 0 && a == 0 && b == 0 && z == 0; }
  /// Strictly positive in the (q, a, b) grading: repeated multiplication
  /// eventually leaves any finite box.
  bool graded_positive() const { return q > 0 || a > 0 || b > 0; }
};

inline Monomial q_pow(int e) { return {e, 0, 0, 0}; }

/// Truncation box: q-degree <= order, a-degree <= cap_a, b-degree <= cap_b,
/// |z-degree| <= z_window.
struct Box {
  int order = 0;
  int cap_a = 0;
  int cap_b = 0;
  int z_window = 0;

  static Box univariate(int order) { return {order, 0, 0, 0}; }
  static Box bivariate(int order) { return {order, 0, 0, order}; }
  static Box triple(int order, int cap_a, int cap_b) { return {order, cap_a, cap_b, 0}; }

  bool contains(const Monomial& m) const {
    return m.q >= 0 && m.q <= order && m.a >= 0 && m.a <= cap_a && m.b >= 0 && m.b <= cap_b &&
           m.z >= -z_window && m.z <= z_window;
  }
  /// True when m and every graded multiple of it fall outside the box.
  bool beyond(const Monomial& m) const { return m.q > order || m.a > cap_a || m.b > cap_b; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Exact truncated power series in q with polynomial a, b and Laurent z
/// coefficients, stored sparsely. Zero coefficients are never stored.
class GradedSeries {
 public:
  using Terms = std::map<Monomial, Integer>;

  explicit GradedSeries(Box box) : box_(box) {}

  static GradedSeries zero(Box box) { return GradedSeries(box); }
  static GradedSeries one(Box box) { return monomial(box, Monomial{}, 1); }
  static GradedSeries monomial(Box box, Monomial m, Integer c) {
    GradedSeries s(box);
    if (box.contains(m) && c != 0) s.terms_.emplace(m, std::move(c));
    return s;
  }
  /// Univariate series from dense coefficients c[0..].
  static GradedSeries from_coefficients(Box box, const std::vector<Integer>& c) {
    GradedSeries s(box);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0 && box.contains(q_pow(static_cast<int>(i)))) s.terms_.emplace(q_pow(static_cast<int>(i)), c[i]);
    }
    return s;
  }

  const Box& box() const noexcept { return box_; }
  int order() const noexcept { return box_.order; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Integer coefficient(int q_exp) const { return coefficient(q_pow(q_exp)); }

  /// Coefficients of q^0..q^order with a = b = z = 0.
  std::vector<Integer> q_coefficients() const {
    std::vector<Integer> out(static_cast<std::size_t>(box_.order) + 1);
    for (const auto& [m, c] : terms_) {
      if (m.a == 0 && m.b == 0 && m.z == 0) out[static_cast<std::size_t>(m.q)] = c;
    }
    return out;
  }

  GradedSeries& operator+=(const GradedSeries& y) {
    require_same_box(y);
    for (const auto& [m, c] : y.terms_) accumulate(m, c);
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& y) {
    require_same_box(y);
    for (const auto& [m, c] : y.terms_) accumulate(m, -c);
    return *this;
  }
  friend GradedSeries operator+(GradedSeries x, const GradedSeries& y) { return x += y; }
  friend GradedSeries operator-(GradedSeries x, const GradedSeries& y) { return x -= y; }
  GradedSeries operator-() const {
    GradedSeries out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend GradedSeries operator*(const GradedSeries& x, const GradedSeries& y) {
    x.require_same_box(y);
    GradedSeries out(x.box_);
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        Monomial m = mx + my;
        if (!x.box_.contains(m)) continue;
        auto [it, inserted] = out.terms_.try_emplace(m);
        it->second += cx * cy;
      }
    }
    out.prune();
    return out;
  }
  GradedSeries& operator*=(const GradedSeries& y) { return *this = *this * y; }

  GradedSeries& scale(const Integer& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  /// Divides every coefficient by d; throws unless all are divisible.
  GradedSeries divided_exactly(const Integer& d) const {
    GradedSeries out = *this;
    for (auto& [m, c] : out.terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw series_error("coefficient not divisible");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return out;
  }

  /// Multiplicative inverse. The constant term must be +1 or -1 and every
  /// other term must carry a positive power of q, a or b.
  GradedSeries inverse() const {
    Integer c0 = coefficient(Monomial{});
    if (c0 != 1 && c0 != -1) throw series_error("inverse requires constant term +1 or -1");
    for (const auto& [m, c] : terms_) {
      if (!m.is_one() && !m.graded_positive()) throw series_error("inverse of a series with pure z terms");
    }
    GradedSeries out(box_);
    Terms pending;
    pending.emplace(Monomial{}, 1);
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      Integer yk = c0 * it->second;
      if (yk == 0) continue;
      for (const auto& [mj, cj] : terms_) {
        if (mj.is_one()) continue;
        Monomial t = it->first + mj;
        if (!box_.contains(t)) continue;
        auto [pos, inserted] = pending.try_emplace(t);
        pos->second -= cj * yk;
      }
      out.terms_.emplace(it->first, std::move(yk));
    }
    return out;
  }

  /// q -> q^s for s >= 1.
  GradedSeries substitute_q(int s) const {
    if (s < 1) throw series_error("substitution scale must be >= 1");
    GradedSeries out(box_);
    for (const auto& [m, c] : terms_) {
      Monomial t{m.q * s, m.a, m.b, m.z};
      if (box_.contains(t)) out.terms_.emplace(t, c);
    }
    return out;
  }

  /// q -> -q.
  GradedSeries negate_q() const {
    GradedSeries out = *this;
    for (auto& [m, c] : out.terms_) {
      if (m.q % 2 != 0) c = -c;
    }
    return out;
  }

  /// z -> 1; the result has z_window 0.
  GradedSeries specialize_z_one() const {
    Box b = box_;
    b.z_window = 0;
    GradedSeries out(b);
    for (const auto& [m, c] : terms_) out.accumulate(Monomial{m.q, m.a, m.b, 0}, c);
    return out;
  }

  /// Same coefficients in a different box, dropping terms that fall outside.
  GradedSeries rebox(Box b) const {
    GradedSeries out(b);
    for (const auto& [m, c] : terms_) {
      if (b.contains(m)) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// Multiplication by a monomial. Negative exponents are allowed as long as
  /// no surviving term gets a negative q, a or b degree.
  GradedSeries shifted(const Monomial& by) const {
    GradedSeries out(box_);
    for (const auto& [m, c] : terms_) {
      Monomial t = m + by;
      if (t.q < 0 || t.a < 0 || t.b < 0) throw series_error("shift produces a negative exponent");
      if (box_.contains(t)) out.terms_.emplace(t, c);
    }
    return out;
  }

  /// In place: *this *= (1 - sign * m).
  void multiply_one_minus(int sign, const Monomial& m) {
    if (box_.beyond(m)) return;
    if (m.is_one()) {
      scale(Integer(1 - sign));
      return;
    }
    if (m > Monomial{}) {
      // Targets are larger than their sources; walk downwards so each source
      // is read before anything is added to it.
      auto it = terms_.end();
      while (it != terms_.begin()) {
        --it;
        Monomial t = it->first + m;
        if (!box_.contains(t)) continue;
        auto [pos, inserted] = terms_.try_emplace(t);
        if (sign > 0) {
          pos->second -= it->second;
        } else {
          pos->second += it->second;
        }
      }
    } else {
      Terms snapshot = terms_;
      for (const auto& [k, c] : snapshot) {
        Monomial t = k + m;
        if (!box_.contains(t)) continue;
        auto [pos, inserted] = terms_.try_emplace(t);
        if (sign > 0) {
          pos->second -= c;
        } else {
          pos->second += c;
        }
      }
    }
    prune();
  }

  /// In place: *this /= (1 - sign * m). m must be graded positive.
  void divide_one_minus(int sign, const Monomial& m) {
    if (!m.graded_positive()) throw series_error("division by a non-unit factor");
    if (box_.beyond(m)) return;
    // y = x + sign * m * y, resolved in increasing monomial order.
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->second == 0) continue;
      Monomial t = it->first + m;
      if (!box_.contains(t)) continue;
      auto [pos, inserted] = terms_.try_emplace(t);
      if (sign > 0) {
        pos->second += it->second;
      } else {
        pos->second -= it->second;
      }
    }
    prune();
  }

  friend bool operator==(const GradedSeries& x, const GradedSeries& y) {
    return x.box_ == y.box_ && x.terms_ == y.terms_;
  }

 private:
  void require_same_box(const GradedSeries& y) const {
    if (!(box_ == y.box_)) throw series_error("series truncation boxes differ");
  }
  void accumulate(const Monomial& m, const Integer& c) {
    auto [it, inserted] = terms_.try_emplace(m);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  void prune() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

  Box box_;
  Terms terms_;
};

/// The element c = sign * monomial in (c; q^step)_n.
struct PochhammerBase {
  Monomial monomial;
  int sign = 1;
};

/// Multiplies s in place by (base; q^step)_length raised to `power`
/// (negative powers divide). An empty length means the infinite product.
inline void apply_pochhammer(GradedSeries& s, const PochhammerBase& base, int step,
                             std::optional<int> length, int power = 1) {
  if (step < 0) throw series_error("pochhammer step must be non-negative");
  if (length && *length < 0) throw series_error("pochhammer length must be non-negative");
  if (!length && step == 0 && !s.box().beyond(base.monomial)) {
    throw series_error("infinite product whose factors never leave the truncation box");
  }
  for (int j = 0; !length || j < *length; ++j) {
    Monomial factor = base.monomial + q_pow(step * j);
    if (s.box().beyond(factor)) {
      if (!length || step > 0) break;
      continue;
    }
    for (int r = 0; r < (power < 0 ? -power : power); ++r) {
      if (power > 0) {
        s.multiply_one_minus(base.sign, factor);
      } else {
        s.divide_one_minus(base.sign, factor);
      }
    }
  }
}

inline GradedSeries expand_pochhammer(const Box& box, const PochhammerBase& base, int step,
                                      std::optional<int> length) {
  GradedSeries s = GradedSeries::one(box);
  apply_pochhammer(s, base, step, length, 1);
  return s;
}

inline GradedSeries expand_pochhammer_reciprocal(const Box& box, const PochhammerBase& base, int step,
                                                 std::optional<int> length) {
  GradedSeries s = GradedSeries::one(box);
  apply_pochhammer(s, base, step, length, -1);
  return s;
}

/// (q^e; q^e)_inf style shorthand: (sign * q^base; q^step)_inf.
inline PochhammerBase q_base(int exponent, int sign = 1) { return {q_pow(exponent), sign}; }

namespace detail {

/// Sums t_first + ... + t_last of a series whose consecutive terms satisfy
/// t_n = ratio_n * t_{n-1}, by Horner's scheme from the innermost term.
template <class First, class Ratio>
GradedSeries horner_sum(const Box& box, int first, int last, First&& apply_first, Ratio&& apply_ratio) {
  GradedSeries acc = GradedSeries::zero(box);
  if (last < first) return acc;
  const GradedSeries one = GradedSeries::one(box);
  for (int n = last; n > first; --n) {
    acc += one;
    apply_ratio(n, acc);
  }
  acc += one;
  apply_first(acc);
  return acc;
}

inline int last_index(int order, auto&& min_exponent, int start) {
  int n = start;
  while (min_exponent(n + 1) <= order) ++n;
  return min_exponent(start) <= order ? n : start - 1;
}

}  // namespace detail

enum class MockTheta { nu, omega, psi3 };

/// nu(q) = sum q^{n^2+n} / (-q;q^2)_{n+1}
/// omega(q) = sum q^{2n^2+2n} / (q;q^2)_{n+1}^2
/// psi3(q) = sum_{n>=1} q^{n^2} / (q;q^2)_n
inline GradedSeries mock_theta(MockTheta kind, int order) {
  if (order < 0) throw series_error("order must be non-negative");
  const Box box = Box::univariate(order);
  switch (kind) {
    case MockTheta::nu: {
      int last = detail::last_index(order, [](int n) { return n * n + n; }, 0);
      return detail::horner_sum(
          box, 0, last, [](GradedSeries& s) { s.divide_one_minus(-1, q_pow(1)); },
          [](int n, GradedSeries& s) {
            s = s.shifted(q_pow(2 * n));
            s.divide_one_minus(-1, q_pow(2 * n + 1));
          });
    }
    case MockTheta::omega: {
      int last = detail::last_index(order, [](int n) { return 2 * n * n + 2 * n; }, 0);
      return detail::horner_sum(
          box, 0, last,
          [](GradedSeries& s) {
            s.divide_one_minus(1, q_pow(1));
            s.divide_one_minus(1, q_pow(1));
          },
          [](int n, GradedSeries& s) {
            s = s.shifted(q_pow(4 * n));
            s.divide_one_minus(1, q_pow(2 * n + 1));
            s.divide_one_minus(1, q_pow(2 * n + 1));
          });
    }
    case MockTheta::psi3: {
      int last = detail::last_index(order, [](int n) { return n * n; }, 1);
      return detail::horner_sum(
          box, 1, last,
          [](GradedSeries& s) {
            s = s.shifted(q_pow(1));
            s.divide_one_minus(1, q_pow(1));
          },
          [](int n, GradedSeries& s) {
            s = s.shifted(q_pow(2 * n - 1));
            s.divide_one_minus(1, q_pow(2 * n - 1));
          });
    }
  }
  throw series_error("unknown mock theta function");
}

enum class SeriesFamily {
  nu,
  omega,
  psi3,
  beo_bivariate,        // sum over BEO of z^eoc q^|pi|
  boe_bivariate,        // sum over BOE of z^srank q^|pi|
  beo_self_conjugate,   // (-q^8;q^8)_inf
  boe_self_conjugate,   // q^{-1} sum_{n>=1} q^{4n^2} / (q^4;q^8)_n
  p0,                   // sum_{n>=1} q^{2n^2} / (q;q^2)_n^2
  p1,                   // sum_{n>=1} q^{2n^2+2n} / ((q;q^2)_n (q;q^2)_{n+1})
  eta_product,          // (q^4;q^4)_inf^3 / (q^2;q^2)_inf^2
};

inline GradedSeries eta_product(int order) {
  GradedSeries s = GradedSeries::one(Box::univariate(order));
  apply_pochhammer(s, q_base(4), 4, std::nullopt, 3);
  apply_pochhammer(s, q_base(2), 2, std::nullopt, -2);
  return s;
}

/// (q^4;q^4)_inf / ((z^2 q^2;q^4)_inf (q^2/z^2;q^4)_inf), z-window = order.
inline GradedSeries beo_bivariate(int order) {
  GradedSeries s = GradedSeries::one(Box::bivariate(order));
  apply_pochhammer(s, q_base(4), 4, std::nullopt, 1);
  apply_pochhammer(s, PochhammerBase{Monomial{2, 0, 0, 2}, 1}, 4, std::nullopt, -1);
  apply_pochhammer(s, PochhammerBase{Monomial{2, 0, 0, -2}, 1}, 4, std::nullopt, -1);
  return s;
}

/// sum_{m,n>=1} q^{4mn-1} / ((z^2q^2;q^4)_m (q^2/z^2;q^4)_n), z-window = order.
inline GradedSeries boe_bivariate(int order) {
  const Box box = Box::bivariate(order);
  const int last_m = detail::last_index(order, [](int m) { return 4 * m - 1; }, 1);
  GradedSeries acc = GradedSeries::zero(box);
  for (int m = last_m; m >= 1; --m) {
    int last_n = detail::last_index(order, [m](int n) { return 4 * m * n - 1; }, 1);
    // Inner sum over n of q^{4mn-1} / (q^2/z^2;q^4)_n.
    GradedSeries inner = detail::horner_sum(
        box, 1, last_n,
        [m](GradedSeries& s) {
          s = s.shifted(q_pow(4 * m - 1));
          s.divide_one_minus(1, Monomial{2, 0, 0, -2});
        },
        [m](int n, GradedSeries& s) {
          s = s.shifted(q_pow(4 * m));
          s.divide_one_minus(1, Monomial{4 * n - 2, 0, 0, -2});
        });
    acc += inner;
    acc.divide_one_minus(1, Monomial{4 * m - 2, 0, 0, 2});
  }
  return acc;
}

inline GradedSeries beo_self_conjugate(int order) {
  return expand_pochhammer(Box::univariate(order), q_base(8, -1), 8, std::nullopt);
}

/// sum_{m>=0} q^{4m^2+4m} / (q^8;q^8)_m, the sum side of the Euler identity
/// for (-q^8;q^8)_inf.
inline GradedSeries beo_self_conjugate_sum(int order) {
  int last = detail::last_index(order, [](int m) { return 4 * m * m + 4 * m; }, 0);
  return detail::horner_sum(
      Box::univariate(order), 0, last, [](GradedSeries&) {},
      [](int m, GradedSeries& s) {
        s = s.shifted(q_pow(8 * m));
        s.divide_one_minus(1, q_pow(8 * m));
      });
}

/// The q^{-1} prefactor is absorbed: each summand is q^{4n^2-1}/(q^4;q^8)_n,
/// whose exponents are already >= 3.
inline GradedSeries boe_self_conjugate(int order) {
  int last = detail::last_index(order, [](int n) { return 4 * n * n - 1; }, 1);
  return detail::horner_sum(
      Box::univariate(order), 1, last,
      [](GradedSeries& s) {
        s = s.shifted(q_pow(3));
        s.divide_one_minus(1, q_pow(4));
      },
      [](int n, GradedSeries& s) {
        s = s.shifted(q_pow(8 * n - 4));
        s.divide_one_minus(1, q_pow(8 * n - 4));
      });
}

inline GradedSeries p0_series(int order) {
  int last = detail::last_index(order, [](int n) { return 2 * n * n; }, 1);
  return detail::horner_sum(
      Box::univariate(order), 1, last,
      [](GradedSeries& s) {
        s = s.shifted(q_pow(2));
        s.divide_one_minus(1, q_pow(1));
        s.divide_one_minus(1, q_pow(1));
      },
      [](int n, GradedSeries& s) {
        s = s.shifted(q_pow(4 * n - 2));
        s.divide_one_minus(1, q_pow(2 * n - 1));
        s.divide_one_minus(1, q_pow(2 * n - 1));
      });
}

inline GradedSeries p1_series(int order) {
  int last = detail::last_index(order, [](int n) { return 2 * n * n + 2 * n; }, 1);
  return detail::horner_sum(
      Box::univariate(order), 1, last,
      [](GradedSeries& s) {
        s = s.shifted(q_pow(4));
        s.divide_one_minus(1, q_pow(1));
        s.divide_one_minus(1, q_pow(1));
        s.divide_one_minus(1, q_pow(3));
      },
      [](int n, GradedSeries& s) {
        s = s.shifted(q_pow(4 * n));
        s.divide_one_minus(1, q_pow(2 * n - 1));
        s.divide_one_minus(1, q_pow(2 * n + 1));
      });
}

inline GradedSeries build_family(SeriesFamily family, int order) {
  if (order < 0) throw series_error("order must be non-negative");
  switch (family) {
    case SeriesFamily::nu: return mock_theta(MockTheta::nu, order);
    case SeriesFamily::omega: return mock_theta(MockTheta::omega, order);
    case SeriesFamily::psi3: return mock_theta(MockTheta::psi3, order);
    case SeriesFamily::beo_bivariate: return beo_bivariate(order);
    case SeriesFamily::boe_bivariate: return boe_bivariate(order);
    case SeriesFamily::beo_self_conjugate: return beo_self_conjugate(order);
    case SeriesFamily::boe_self_conjugate: return boe_self_conjugate(order);
    case SeriesFamily::p0: return p0_series(order);
    case SeriesFamily::p1: return p1_series(order);
    case SeriesFamily::eta_product: return eta_product(order);
  }
  throw series_error("unknown series family");
}

inline const char* series_family_name(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::nu: return "NU";
    case SeriesFamily::omega: return "OMEGA";
    case SeriesFamily::psi3: return "PSI3";
    case SeriesFamily::beo_bivariate: return "GF_BEO_BIVAR";
    case SeriesFamily::boe_bivariate: return "GF_BOE_BIVAR";
    case SeriesFamily::beo_self_conjugate: return "GF_BEO_SELFCONJ";
    case SeriesFamily::boe_self_conjugate: return "GF_BOE_SELFCONJ";
    case SeriesFamily::p0: return "GF_P0";
    case SeriesFamily::p1: return "GF_P1";
    case SeriesFamily::eta_product: return "ETA_PRODUCT";
  }
  return "?";
}

inline std::optional<SeriesFamily> parse_series_family(const std::string& name) {
  for (auto f : {SeriesFamily::nu, SeriesFamily::omega, SeriesFamily::psi3, SeriesFamily::beo_bivariate,
                 SeriesFamily::boe_bivariate, SeriesFamily::beo_self_conjugate, SeriesFamily::boe_self_conjugate,
                 SeriesFamily::p0, SeriesFamily::p1, SeriesFamily::eta_product}) {
    if (name == series_family_name(f)) return f;
  }
  return std::nullopt;
}

}  // namespace parsep
