#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "parsep/families.hpp"
#include "parsep/maps.hpp"
#include "parsep/partition.hpp"

namespace parsep {

/// Cross-check bound between the filter oracle and structural generators.
inline constexpr int kOracleBound = 40;

namespace detail {

/// Visits multisets of odd values <= max_odd, each used an even number of
/// times, whose total is exactly `size`. Parts arrive in decreasing order.
template <class Visitor>
void paired_odd_parts(int size, int max_odd, std::vector<int>& cur, Visitor&& visit) {
  if (size == 0) {
    visit(static_cast<const std::vector<int>&>(cur));
    return;
  }
  if (max_odd % 2 == 0) --max_odd;
  for (int v = std::min(max_odd, size / 2); v >= 1; --v) {
    if (v % 2 == 0) continue;
    cur.push_back(v);
    cur.push_back(v);
    paired_odd_parts(size - 2 * v, v, cur, visit);
    cur.pop_back();
    cur.pop_back();
  }
}

/// BOE members of `size` assembled from a (2n-1) x (2m-1) rectangle, a
/// horizontal strip of length 2m-1 (the largest odd part), a vertical strip
/// of height 2n-1, a partition alpha below the strip and a partition beta to
/// the right of the vertical strip. alpha and beta' are odd parts in even
/// multiplicity bounded by 2m-1 and 2n-1. Visits (lambda, m, n).
template <class Visitor>
void boe_dissections(int size, Visitor&& visit) {
  if (size < 3 || size % 2 == 0) return;
  for (int m = 1; 4 * m - 1 <= size; ++m) {
    for (int n = 1; 4 * m * n - 1 <= size; ++n) {
      const int rest = size - (4 * m * n - 1);
      const int width = 2 * m - 1;
      const int height = 2 * n - 1;
      for (int alpha_size = 0; alpha_size <= rest; alpha_size += 2) {
        std::vector<int> alpha;
        paired_odd_parts(alpha_size, width, alpha, [&](const std::vector<int>& a) {
          std::vector<int> beta_conj;
          paired_odd_parts(rest - alpha_size, height, beta_conj, [&](const std::vector<int>& bc) {
            Partition beta = conjugate(Partition(std::vector<int>(bc)));
            std::vector<int> parts;
            for (int i = 0; i < height; ++i) {
              int extra = i < beta.num_parts() ? beta[static_cast<std::size_t>(i)] : 0;
              parts.push_back(width + 1 + extra);
            }
            parts.push_back(width);
            parts.insert(parts.end(), a.begin(), a.end());
            visit(Partition(std::move(parts)), m, n);
          });
        });
      }
    }
  }
}

/// EO3 members: largest odd part L with odd multiplicity, smaller odd parts
/// in even multiplicity.
template <class Visitor>
void eo3_members(int size, Visitor&& visit) {
  for (int largest = 1; largest <= size; largest += 2) {
    for (int copies = 1; copies * largest <= size; copies += 2) {
      int rest = size - copies * largest;
      if (rest % 2 != 0) continue;
      std::vector<int> tail;
      paired_odd_parts(rest, largest - 2, tail, [&](const std::vector<int>& t) {
        std::vector<int> parts(static_cast<std::size_t>(copies), largest);
        parts.insert(parts.end(), t.begin(), t.end());
        visit(Partition(std::move(parts)));
      });
    }
  }
}

template <class Visitor>
void structural_base_members(Family f, int k, int n, Visitor&& visit) {
  switch (f) {
    case Family::beo:
      for_each_phi_pair(n, [&](const DiagramPair& pair) { visit(phi(pair)); });
      return;
    case Family::eo2:
      if (n < 1) return;
      for_each_phi_pair(n - 1, [&](const DiagramPair& pair) { visit(beo_to_eo2(phi(pair))); });
      return;
    case Family::eo3:
      eo3_members(n, visit);
      return;
    case Family::boe:
      boe_dissections(n, [&](const Partition& lambda, int, int) { visit(lambda); });
      return;
    case Family::boe_k:
      boe_dissections(n, [&](const Partition& lambda, int m, int nn) {
        if (nn - m == k) visit(lambda);
      });
      return;
    default:
      throw std::logic_error("no structural enumerator");
  }
}

}  // namespace detail

inline bool has_structural_enumerator(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::beo:
    case Family::boe:
    case Family::boe_k:
    case Family::eo2:
    case Family::eo3:
      return true;
    default:
      return false;
  }
}

/// Visits the members of a family at size n through the filter over all
/// partitions of n. Exhaustive, so only practical for small n.
template <class Visitor>
void for_each_member_by_filter(const FamilyTag& tag, int n, Visitor&& visit) {
  for_each_partition(n, [&](std::span<const int> parts) {
    Partition lambda{std::vector<int>(parts.begin(), parts.end())};
    if (is_member(tag, lambda)) visit(lambda);
  });
}

/// Visits every member of the family at size n exactly once, in no
/// particular order. Uses the structural generator when one exists.
template <class Visitor>
void for_each_member(const FamilyTag& tag, int n, Visitor&& visit) {
  if (n < 0) return;
  if (!has_structural_enumerator(tag)) {
    for_each_member_by_filter(tag, n, visit);
    return;
  }
  detail::structural_base_members(tag.family, tag.k, n, [&](const Partition& lambda) {
    if (!tag.self_conjugate || is_self_conjugate(lambda)) visit(lambda);
  });
}

namespace detail {
inline void canonical_sort(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }
}  // namespace detail

/// Members at size n in lexicographically decreasing order of parts.
inline std::vector<Partition> enumerate_family(const FamilyTag& tag, int n) {
  std::vector<Partition> out;
  for_each_member(tag, n, [&](const Partition& lambda) { out.push_back(lambda); });
  detail::canonical_sort(out);
  return out;
}

inline std::vector<Partition> enumerate_family_by_filter(const FamilyTag& tag, int n) {
  std::vector<Partition> out;
  for_each_member_by_filter(tag, n, [&](const Partition& lambda) { out.push_back(lambda); });
  detail::canonical_sort(out);
  return out;
}

inline std::int64_t count_family(const FamilyTag& tag, int n) {
  std::int64_t c = 0;
  for_each_member(tag, n, [&](const Partition&) { ++c; });
  return c;
}

// ---------------------------------------------------------------------------
// Crank tables.
// ---------------------------------------------------------------------------

enum class CrankStatistic { eoc, srank };

inline const char* statistic_name(CrankStatistic s) { return s == CrankStatistic::eoc ? "EOC" : "SRANK"; }

struct CrankTable {
  FamilyTag family;
  int n = 0;
  CrankStatistic statistic = CrankStatistic::eoc;
  std::map<int, std::int64_t> counts;
  std::map<int, std::int64_t> odd_part_totals;

  std::int64_t total() const {
    std::int64_t s = 0;
    for (const auto& [m, c] : counts) s += c;
    return s;
  }
  std::int64_t count(int m) const {
    auto it = counts.find(m);
    return it == counts.end() ? 0 : it->second;
  }
  /// Number of members whose statistic is congruent to r modulo `modulus`.
  std::int64_t count_congruent(int r, int modulus) const { return sum_congruent(counts, r, modulus); }
  /// Total number of odd parts over members whose statistic is r mod `modulus`.
  std::int64_t odd_parts_congruent(int r, int modulus) const { return sum_congruent(odd_part_totals, r, modulus); }

 private:
  static std::int64_t sum_congruent(const std::map<int, std::int64_t>& table, int r, int modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const int target = ((r % modulus) + modulus) % modulus;
    std::int64_t s = 0;
    for (const auto& [m, c] : table) {
      if (((m % modulus) + modulus) % modulus == target) s += c;
    }
    return s;
  }
};

inline CrankTable crank_table(const FamilyTag& tag, int n, CrankStatistic statistic) {
  if (statistic == CrankStatistic::eoc && !is_eo_subfamily(tag.family)) {
    throw std::invalid_argument("the even-odd crank is only defined on subfamilies of EO");
  }
  CrankTable table{tag, n, statistic, {}, {}};
  for_each_member(tag, n, [&](const Partition& lambda) {
    Statistics s = statistics(lambda);
    int m = statistic == CrankStatistic::eoc ? s.eoc : s.srank;
    ++table.counts[m];
    table.odd_part_totals[m] += s.odd_count;
  });
  return table;
}

/// N_eo(r, modulus, n) over BEO.
inline std::int64_t n_eo(const CrankTable& beo_table, int r, int modulus) {
  return beo_table.count_congruent(r, modulus);
}

/// NT_eo(r, modulus, n) over BEO.
inline std::int64_t nt_eo(const CrankTable& beo_table, int r, int modulus) {
  return beo_table.odd_parts_congruent(r, modulus);
}

/// (NT(1,5,n) - NT(4,5,n)) + 2 (NT(2,5,n) - NT(3,5,n)) over BEO at size n.
inline std::int64_t andrews_beck_combination(const CrankTable& beo_table) {
  return (nt_eo(beo_table, 1, 5) - nt_eo(beo_table, 4, 5)) + 2 * (nt_eo(beo_table, 2, 5) - nt_eo(beo_table, 3, 5));
}

// ---------------------------------------------------------------------------
// Combinatorial counters for the coefficients of nu(-q), q omega(q) and the
// refinements p_k of BOE.
// ---------------------------------------------------------------------------

enum class Counter { p_nu_comb, p_omega_comb, p_k };

namespace detail {

template <class Visitor>
void distinct_partitions(int rest, int max_part, std::vector<int>& cur, Visitor&& visit) {
  if (rest == 0) {
    visit(static_cast<const std::vector<int>&>(cur));
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    // The remaining distinct parts below p sum to at most p(p-1)/2.
    if (p + p * (p - 1) / 2 < rest) break;
    cur.push_back(p);
    distinct_partitions(rest - p, p - 1, cur, visit);
    cur.pop_back();
  }
}

inline bool odd_parts_below_twice_smallest(std::span<const int> parts) {
  if (parts.empty()) return true;
  const int smallest = parts.back();
  return std::all_of(parts.begin(), parts.end(), [&](int p) { return p % 2 == 0 || p < 2 * smallest; });
}

}  // namespace detail

/// Distinct-part partitions of n whose odd parts are all less than twice the
/// smallest part; nonempty members without odd parts are counted twice.
inline std::int64_t p_nu_comb(int n) {
  if (n < 0) return 0;
  std::int64_t total = 0;
  std::vector<int> cur;
  detail::distinct_partitions(n, n, cur, [&](const std::vector<int>& parts) {
    if (!detail::odd_parts_below_twice_smallest(parts)) return;
    bool all_even = std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
    total += (!parts.empty() && all_even) ? 2 : 1;
  });
  return total;
}

/// Partitions of n whose odd parts are all less than twice the smallest part.
inline std::int64_t p_omega_comb(int n) {
  if (n < 0) return 0;
  std::int64_t total = 0;
  for_each_partition(n, [&](std::span<const int> parts) {
    if (detail::odd_parts_below_twice_smallest(parts)) ++total;
  });
  return total;
}

/// p_k(n): BOE members of size 2n - 1 with E(lambda) - E(lambda') = 2k;
/// zero for n <= 1.
inline std::int64_t p_k_comb(int k, int n) {
  if (k < 0) throw std::invalid_argument("p_k requires k >= 0");
  if (n <= 1) return 0;
  return count_family(FamilyTag::boe_k(k), 2 * n - 1);
}

inline std::int64_t special_counter(Counter kind, int n, int k = 0) {
  switch (kind) {
    case Counter::p_nu_comb: return p_nu_comb(n);
    case Counter::p_omega_comb: return p_omega_comb(n);
    case Counter::p_k: return p_k_comb(k, n);
  }
  throw std::invalid_argument("unknown counter");
}

}  // namespace parsep
