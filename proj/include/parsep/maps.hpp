#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parsep/families.hpp"
#include "parsep/partition.hpp"

namespace parsep {

// ---------------------------------------------------------------------------
// 2-colored partitions as cell-weighted Ferrers diagrams.
//
// Every part has its leftmost cell weighted b. A part colored ab (allowed for
// sizes >= 2, pairwise distinct) additionally has its rightmost cell weighted
// a. All other cells are weighted q. When two parts have equal size the ab
// one is listed below (after) the b one.
// ---------------------------------------------------------------------------

enum class PartColor { b, ab };

struct ColoredPart {
  int size = 0;
  PartColor color = PartColor::b;

  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Exponents of a^a b^b q^q.
struct DiagramWeight {
  int a = 0;
  int b = 0;
  int q = 0;

  friend bool operator==(const DiagramWeight&, const DiagramWeight&) = default;
  friend DiagramWeight operator+(DiagramWeight x, const DiagramWeight& y) {
    return {x.a + y.a, x.b + y.b, x.q + y.q};
  }
};

class ColoredDiagram {
 public:
  ColoredDiagram() = default;

  explicit ColoredDiagram(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const auto& p = parts_[i];
      if (p.size < 1) throw std::invalid_argument("diagram parts must be positive");
      if (p.color == PartColor::ab && p.size < 2) throw std::invalid_argument("ab-colored parts need size >= 2");
      if (i + 1 < parts_.size()) {
        const auto& next = parts_[i + 1];
        if (next.size > p.size) throw std::invalid_argument("diagram parts must be weakly decreasing");
        if (next.size == p.size && p.color == PartColor::ab) {
          // Either a repeated ab size or an ab part sitting above a b part.
          throw std::invalid_argument("ab parts must be distinct and sit below equal b parts");
        }
      }
    }
  }

  /// All parts colored b.
  static ColoredDiagram plain(const Partition& lambda) {
    std::vector<ColoredPart> parts;
    for (int p : lambda.parts()) parts.push_back({p, PartColor::b});
    return ColoredDiagram(std::move(parts));
  }

  const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const {
    int s = 0;
    for (const auto& p : parts_) s += p.size;
    return s;
  }
  int ab_count() const {
    return static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [](const ColoredPart& p) { return p.color == PartColor::ab; }));
  }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back().size; }

  /// The underlying uncolored partition.
  Partition shape() const {
    std::vector<int> sizes;
    for (const auto& p : parts_) sizes.push_back(p.size);
    return Partition(std::move(sizes));
  }

  friend bool operator==(const ColoredDiagram&, const ColoredDiagram&) = default;
  friend auto operator<=>(const ColoredDiagram& x, const ColoredDiagram& y) { return x.parts_ <=> y.parts_; }

 private:
  std::vector<ColoredPart> parts_;
};

inline DiagramWeight diagram_weight(const ColoredDiagram& d) {
  DiagramWeight w;
  w.b = d.num_parts();
  w.a = d.ab_count();
  w.q = d.size() - w.b - w.a;
  return w;
}

/// Pair of diagrams; `in_fixed_set` is membership in the set of pairs with
/// b-only diagrams and smallest part of `left` > #parts of `right`.
struct DiagramPair {
  ColoredDiagram left;
  ColoredDiagram right;

  bool in_fixed_set() const {
    return left.ab_count() == 0 && right.ab_count() == 0 && (left.empty() || left.smallest() > right.num_parts());
  }

  friend bool operator==(const DiagramPair&, const DiagramPair&) = default;
  friend auto operator<=>(const DiagramPair&, const DiagramPair&) = default;
};

// ---------------------------------------------------------------------------
// Enumeration of diagrams inside a (q, a, b) degree box.
// ---------------------------------------------------------------------------

namespace detail {

/// Visits multisets of parts (as decreasing vectors) drawn from [min_part,
/// max_part], with at most max_count parts and total cost <= budget.
template <class Cost, class Visitor>
void bounded_multisets(int max_part, int min_part, int max_count, int budget, Cost&& cost, std::vector<int>& cur,
                       Visitor&& visit) {
  visit(static_cast<const std::vector<int>&>(cur));
  if (max_count == 0) return;
  for (int p = max_part; p >= min_part; --p) {
    int c = cost(p);
    if (c > budget) continue;
    cur.push_back(p);
    bounded_multisets(p, min_part, max_count - 1, budget - c, cost, cur, visit);
    cur.pop_back();
  }
}

/// Same, but with pairwise distinct parts.
template <class Cost, class Visitor>
void bounded_sets(int max_part, int min_part, int max_count, int budget, Cost&& cost, std::vector<int>& cur,
                  Visitor&& visit) {
  visit(static_cast<const std::vector<int>&>(cur));
  if (max_count == 0) return;
  for (int p = max_part; p >= min_part; --p) {
    int c = cost(p);
    if (c > budget) continue;
    cur.push_back(p);
    bounded_sets(p - 1, min_part, max_count - 1, budget - c, cost, cur, visit);
    cur.pop_back();
  }
}

inline ColoredDiagram merge_colored(const std::vector<int>& b_parts, const std::vector<int>& ab_parts) {
  std::vector<ColoredPart> parts;
  for (int p : b_parts) parts.push_back({p, PartColor::b});
  for (int p : ab_parts) parts.push_back({p, PartColor::ab});
  // Decreasing size; within a size the b parts come first.
  std::stable_sort(parts.begin(), parts.end(), [](const ColoredPart& x, const ColoredPart& y) {
    if (x.size != y.size) return x.size > y.size;
    return x.color == PartColor::b && y.color == PartColor::ab;
  });
  return ColoredDiagram(std::move(parts));
}

}  // namespace detail

/// Visits every diagram with q-degree <= max_q, a-degree <= max_a and
/// b-degree (number of parts) <= max_b.
template <class Visitor>
void for_each_colored_diagram(int max_q, int max_a, int max_b, Visitor&& visit) {
  std::vector<int> b_parts;
  detail::bounded_multisets(max_q + 1, 1, max_b, max_q, [](int p) { return p - 1; }, b_parts,
                            [&](const std::vector<int>& bs) {
                              int used_q = 0;
                              for (int p : bs) used_q += p - 1;
                              int room = max_b - static_cast<int>(bs.size());
                              std::vector<int> ab_parts;
                              detail::bounded_sets(max_q - used_q + 2, 2, std::min(room, max_a), max_q - used_q,
                                                   [](int p) { return p - 2; }, ab_parts,
                                                   [&](const std::vector<int>& abs) {
                                                     visit(detail::merge_colored(bs, abs));
                                                   });
                            });
}

// ---------------------------------------------------------------------------
// The bijection phi from fixed-set pairs to BEO.
//
// Under a -> q^2/z^2, b -> z^2 q^2, q -> q^4, each left part k carries
// z^-2 q^{4k-2} and becomes two copies of the odd part 2k-1; the right
// diagram, doubled the same way and conjugated, becomes the even parts whose
// largest value 2t (t = #right) has odd multiplicity. eoc = 2t - 2s.
// ---------------------------------------------------------------------------

/// (z-exponent, q-exponent) of a pair under the specialization above.
struct SpecializedWeight {
  int z = 0;
  int q = 0;
  friend bool operator==(const SpecializedWeight&, const SpecializedWeight&) = default;
};

inline SpecializedWeight specialized_weight(const DiagramPair& pair) {
  SpecializedWeight w;
  for (const auto& p : pair.left.parts()) {
    w.z -= 2;
    w.q += 4 * p.size - 2;
  }
  for (const auto& p : pair.right.parts()) {
    w.z += 2;
    w.q += 4 * p.size - 2;
  }
  return w;
}

namespace detail {

inline std::vector<int> doubled_odd(const Partition& p) {
  std::vector<int> out;
  for (int k : p.parts()) {
    out.push_back(2 * k - 1);
    out.push_back(2 * k - 1);
  }
  return out;
}

/// Inverse of doubled_odd: every part odd with even multiplicity.
inline Partition halved_odd(const std::vector<int>& parts) {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts.size(); i += 2) {
    if (parts[i] % 2 == 0 || i + 1 >= parts.size() || parts[i + 1] != parts[i]) {
      throw std::invalid_argument("expected odd parts in pairs");
    }
    out.push_back((parts[i] + 1) / 2);
  }
  return Partition(std::move(out));
}

}  // namespace detail

inline Partition phi(const DiagramPair& pair) {
  if (!pair.in_fixed_set()) throw std::invalid_argument("phi: pair is not in the fixed set");
  std::vector<int> parts = detail::doubled_odd(pair.left.shape());
  Partition evens = conjugate(Partition(detail::doubled_odd(pair.right.shape())));
  parts.insert(parts.end(), evens.parts().begin(), evens.parts().end());
  return Partition(std::move(parts));
}

inline DiagramPair phi_inverse(const Partition& pi) {
  if (!is_member(FamilyTag{Family::beo}, pi)) throw std::invalid_argument("phi_inverse: partition is not in BEO");
  std::vector<int> odd;
  std::vector<int> even;
  for (int p : pi.parts()) (p % 2 != 0 ? odd : even).push_back(p);
  Partition left = detail::halved_odd(odd);
  Partition right = detail::halved_odd(conjugate(Partition(std::move(even))).parts());
  return DiagramPair{ColoredDiagram::plain(left), ColoredDiagram::plain(right)};
}

/// Visits every fixed-set pair with specialized q-weight exactly n.
template <class Visitor>
void for_each_phi_pair(int n, Visitor&& visit) {
  if (n < 0 || n % 2 != 0) return;
  // Parts k weigh 4k - 2, so a pair of weight n is a partition of n/2 into
  // parts of the form 2k - 1 split between the two diagrams.
  auto cost = [](int k) { return 4 * k - 2; };
  std::vector<int> right;
  std::function<void(int, int)> grow_right;
  std::vector<int> left;
  std::function<void(int, int, int)> grow_left = [&](int max_part, int min_part, int rest) {
    if (rest == 0) {
      visit(DiagramPair{ColoredDiagram::plain(Partition(left)), ColoredDiagram::plain(Partition(right))});
      return;
    }
    for (int k = std::min(max_part, (rest + 2) / 4); k >= min_part; --k) {
      if (cost(k) > rest) continue;
      left.push_back(k);
      grow_left(k, min_part, rest - cost(k));
      left.pop_back();
    }
  };
  grow_right = [&](int max_part, int rest) {
    int t = static_cast<int>(right.size());
    grow_left(rest, t + 1, rest);
    for (int k = std::min(max_part, (rest + 2) / 4); k >= 1; --k) {
      if (cost(k) > rest) continue;
      right.push_back(k);
      grow_right(k, rest - cost(k));
      right.pop_back();
    }
  };
  grow_right(n, n);
}

// ---------------------------------------------------------------------------
// The sign-reversing involution on pairs (lambda, mu) where lambda is an
// uncolored partition whose parts carry weight a on their leftmost cell, and
// mu is a 2-colored diagram whose ab parts carry -a on their rightmost cell.
// ---------------------------------------------------------------------------

struct StarPair {
  Partition left;
  ColoredDiagram right;

  bool in_fixed_set() const {
    return right.ab_count() == 0 && (left.empty() || left.smallest() > right.num_parts());
  }

  friend bool operator==(const StarPair&, const StarPair&) = default;
  friend auto operator<=>(const StarPair&, const StarPair&) = default;
};

/// sign * a^a b^b q^q.
struct SignedWeight {
  int sign = 1;
  DiagramWeight monomial;
  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

inline SignedWeight star_weight(const StarPair& pair) {
  const int ab = pair.right.ab_count();
  SignedWeight w;
  w.sign = ab % 2 == 0 ? 1 : -1;
  w.monomial.a = pair.left.num_parts() + ab;
  w.monomial.b = pair.right.num_parts();
  w.monomial.q = (pair.left.size() - pair.left.num_parts()) + (pair.right.size() - pair.right.num_parts() - ab);
  return w;
}

enum class StarCase { insert_part, remove_part, fixed };

struct StarResult {
  StarPair pair;
  StarCase which;
};

inline StarResult star_involution(const StarPair& pair) {
  const int t = pair.right.num_parts();
  // Largest part of left that is <= t (0 if none).
  int li = 0;
  for (int p : pair.left.parts()) {
    if (p <= t) {
      li = p;
      break;
    }
  }
  // Largest 1-based index of an ab-colored part of right (0 if none).
  int j = 0;
  const auto& rp = pair.right.parts();
  for (int idx = static_cast<int>(rp.size()); idx >= 1; --idx) {
    if (rp[static_cast<std::size_t>(idx - 1)].color == PartColor::ab) {
      j = idx;
      break;
    }
  }
  if (li == 0 && j == 0) return {pair, StarCase::fixed};

  std::vector<int> left = pair.left.parts();
  std::vector<ColoredPart> right = rp;
  if (li <= j) {
    // Insert j into left; shorten the first j parts of right by one cell, the
    // j-th losing its ab color.
    left.insert(std::upper_bound(left.begin(), left.end(), j, std::greater<>()), j);
    for (int idx = 0; idx < j; ++idx) right[static_cast<std::size_t>(idx)].size -= 1;
    right[static_cast<std::size_t>(j - 1)].color = PartColor::b;
    return {StarPair{Partition(std::move(left)), ColoredDiagram(std::move(right))}, StarCase::insert_part};
  }
  // Remove the last occurrence of li from left; lengthen the first li parts
  // of right by one cell, the li-th becoming ab-colored.
  auto pos = std::find(left.rbegin(), left.rend(), li);
  left.erase(std::next(pos).base());
  for (int idx = 0; idx < li; ++idx) right[static_cast<std::size_t>(idx)].size += 1;
  right[static_cast<std::size_t>(li - 1)].color = PartColor::ab;
  return {StarPair{Partition(std::move(left)), ColoredDiagram(std::move(right))}, StarCase::remove_part};
}

/// Visits every star pair with total q-degree <= max_q, a-degree <= max_a
/// and b-degree <= max_b.
template <class Visitor>
void for_each_star_pair(int max_q, int max_a, int max_b, Visitor&& visit) {
  std::vector<int> left;
  detail::bounded_multisets(max_q + 1, 1, max_a, max_q, [](int p) { return p - 1; }, left,
                            [&](const std::vector<int>& ls) {
                              Partition lp{std::vector<int>(ls)};
                              int used_q = lp.size() - lp.num_parts();
                              int used_a = lp.num_parts();
                              for_each_colored_diagram(max_q - used_q, max_a - used_a, max_b,
                                                       [&](const ColoredDiagram& d) { visit(StarPair{lp, d}); });
                            });
}

// ---------------------------------------------------------------------------
// EO2 (size n) <-> BEO (size n - 1).
// ---------------------------------------------------------------------------

/// Subtracts one from the last occurrence of the smallest odd part.
inline Partition eo2_to_beo(const Partition& lambda) {
  if (!is_member(FamilyTag{Family::eo2}, lambda)) throw std::invalid_argument("eo2_to_beo: not in EO2");
  std::vector<int> parts = lambda.parts();
  int smallest_odd = 0;
  for (int p : parts) {
    if (p % 2 != 0) smallest_odd = p;
  }
  auto last = std::find(parts.rbegin(), parts.rend(), smallest_odd);
  auto it = std::next(last).base();
  if (--*it == 0) parts.erase(it);
  return Partition(std::move(parts));
}

/// Adds one to the first occurrence of the largest even part, or appends a
/// part 1 when there is no even part.
inline Partition beo_to_eo2(const Partition& mu) {
  if (!is_member(FamilyTag{Family::beo}, mu)) throw std::invalid_argument("beo_to_eo2: not in BEO");
  std::vector<int> parts = mu.parts();
  auto it = std::find_if(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
  if (it == parts.end()) {
    parts.push_back(1);
  } else {
    ++*it;
  }
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Odd Ferrers graphs: a Ferrers graph whose first row and first column hold
// 1's and every other cell holds 2.
// ---------------------------------------------------------------------------

struct OddFerrersGraph {
  Partition shape;

  /// 0-based row and column.
  int cell(int row, int col) const { return row == 0 || col == 0 ? 1 : 2; }
  int total() const {
    if (shape.empty()) return 0;
    return 2 * shape.size() - (shape.num_parts() + shape.largest() - 1);
  }
  /// Sum of the 2-dilated filling with the top-left corner reduced by one.
  int dilated_total() const { return 2 * total() - 1; }

  friend bool operator==(const OddFerrersGraph&, const OddFerrersGraph&) = default;
};

namespace detail {

/// Partitions of `size` with exactly `count` parts, each <= max_part.
template <class Visitor>
void partitions_with_exact_count(int size, int count, int max_part, std::vector<int>& cur, Visitor&& visit) {
  if (count == 0) {
    if (size == 0) visit(static_cast<const std::vector<int>&>(cur));
    return;
  }
  if (size < count || size > count * max_part) return;
  for (int p = std::min(max_part, size - (count - 1)); p >= 1; --p) {
    if (p * count < size) break;
    cur.push_back(p);
    partitions_with_exact_count(size - p, count - 1, p, cur, visit);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<OddFerrersGraph> odd_ferrers_enumerate(int total) {
  if (total < 1) throw std::invalid_argument("odd Ferrers total must be positive");
  std::vector<OddFerrersGraph> out;
  for (int rows = 1; rows <= total; ++rows) {
    for (int cols = 1; rows + cols - 1 <= total; ++cols) {
      int twice = total + rows + cols - 1;
      if (twice % 2 != 0) continue;
      int cells = twice / 2;
      if (cells > rows * cols) continue;
      std::vector<int> rest;
      detail::partitions_with_exact_count(cells - cols, rows - 1, cols, rest, [&](const std::vector<int>& r) {
        std::vector<int> parts{cols};
        parts.insert(parts.end(), r.begin(), r.end());
        out.push_back(OddFerrersGraph{Partition(std::move(parts))});
      });
    }
  }
  std::sort(out.begin(), out.end(),
            [](const OddFerrersGraph& x, const OddFerrersGraph& y) { return x.shape > y.shape; });
  return out;
}

}  // namespace parsep
