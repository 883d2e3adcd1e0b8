#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parsep/partition.hpp"

namespace parsep {

/// Partition families defined by where the odd and even parts may sit.
///
///   EO    every even part is less than every odd part
///   BEO   EO, and only the largest even part (if any) has odd multiplicity
///   OE    every odd part is less than every even part
///   BOE   OE with both parities present, and only the largest odd part and
///         the largest even part have odd multiplicity
///   EO1   EO, at most one part value has odd multiplicity
///   EO2   EO, only the smallest odd part has odd multiplicity
///   EO3   all parts odd, only the largest part has odd multiplicity
///   BOE_K BOE members with E(lambda) - E(lambda') = 2k (E = #even parts)
enum class Family { eo, beo, oe, boe, eo1, eo2, eo3, boe_k };

struct FamilyTag {
  Family family = Family::eo;
  int k = 0;
  bool self_conjugate = false;

  static FamilyTag boe_k(int k) {
    if (k < 0) throw std::invalid_argument("BOE_K requires k >= 0");
    return {Family::boe_k, k, false};
  }
  FamilyTag self_conjugate_part() const { return {family, k, true}; }

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

inline std::string family_name(const FamilyTag& tag) {
  std::string base;
  switch (tag.family) {
    case Family::eo: base = "EO"; break;
    case Family::beo: base = "BEO"; break;
    case Family::oe: base = "OE"; break;
    case Family::boe: base = "BOE"; break;
    case Family::eo1: base = "EO1"; break;
    case Family::eo2: base = "EO2"; break;
    case Family::eo3: base = "EO3"; break;
    case Family::boe_k: base = "BOE_K(" + std::to_string(tag.k) + ")"; break;
  }
  return tag.self_conjugate ? "SELF_CONJ(" + base + ")" : base;
}

/// Inverse of family_name. Also accepts "BOE_K:2".
inline FamilyTag parse_family(std::string name) {
  bool sc = false;
  const std::string sc_prefix = "SELF_CONJ(";
  if (name.rfind(sc_prefix, 0) == 0 && name.size() > sc_prefix.size() && name.back() == ')') {
    sc = true;
    name = name.substr(sc_prefix.size(), name.size() - sc_prefix.size() - 1);
  }
  FamilyTag tag;
  if (name == "EO") tag.family = Family::eo;
  else if (name == "BEO") tag.family = Family::beo;
  else if (name == "OE") tag.family = Family::oe;
  else if (name == "BOE") tag.family = Family::boe;
  else if (name == "EO1") tag.family = Family::eo1;
  else if (name == "EO2") tag.family = Family::eo2;
  else if (name == "EO3") tag.family = Family::eo3;
  else if (name.rfind("BOE_K", 0) == 0) {
    std::string arg = name.substr(5);
    if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
    else if (!arg.empty() && arg.front() == ':') arg = arg.substr(1);
    else throw std::invalid_argument("unknown family: " + name);
    try {
      std::size_t used = 0;
      int k = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      tag = FamilyTag::boe_k(k);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("unknown family: " + name);
    }
  } else {
    throw std::invalid_argument("unknown family: " + name);
  }
  tag.self_conjugate = sc;
  return tag;
}

/// True for families closed under conjugation.
inline bool is_stable_family(Family f) {
  return f == Family::beo || f == Family::boe || f == Family::eo1 || f == Family::eo2 || f == Family::eo3 ||
         f == Family::boe_k;
}

/// True for subfamilies of EO (where the even-odd crank is meaningful).
inline bool is_eo_subfamily(Family f) {
  return f == Family::eo || f == Family::beo || f == Family::eo1 || f == Family::eo2 || f == Family::eo3;
}

namespace detail {

struct ParityProfile {
  int max_even = 0;              // 0 if none
  int min_even = 0;
  int max_odd = 0;               // 0 if none
  int min_odd = 0;
  std::vector<std::pair<int, int>> mult;  // decreasing values
};

inline ParityProfile parity_profile(const Partition& lambda) {
  ParityProfile p;
  p.mult = lambda.multiplicities();
  for (const auto& [v, m] : p.mult) {
    if (v % 2 == 0) {
      if (p.max_even == 0) p.max_even = v;
      p.min_even = v;
    } else {
      if (p.max_odd == 0) p.max_odd = v;
      p.min_odd = v;
    }
  }
  return p;
}

inline bool evens_below_odds(const ParityProfile& p) {
  return p.max_even == 0 || p.max_odd == 0 || p.max_even < p.min_odd;
}

inline bool odds_below_evens(const ParityProfile& p) {
  return p.max_even == 0 || p.max_odd == 0 || p.max_odd < p.min_even;
}

/// Only the listed part values may (and must) have odd multiplicity.
inline bool odd_multiplicities_exactly(const ParityProfile& p, std::initializer_list<int> values) {
  for (const auto& [v, m] : p.mult) {
    bool listed = std::find(values.begin(), values.end(), v) != values.end();
    if ((m % 2 != 0) != listed) return false;
  }
  return true;
}

inline bool base_member(Family f, int k, const Partition& lambda) {
  const ParityProfile p = parity_profile(lambda);
  switch (f) {
    case Family::eo: return evens_below_odds(p);
    case Family::oe: return odds_below_evens(p);
    case Family::beo:
      if (!evens_below_odds(p)) return false;
      return p.max_even == 0 ? odd_multiplicities_exactly(p, {}) : odd_multiplicities_exactly(p, {p.max_even});
    case Family::boe:
    case Family::boe_k: {
      if (!odds_below_evens(p) || p.max_even == 0 || p.max_odd == 0) return false;
      if (!odd_multiplicities_exactly(p, {p.max_odd, p.max_even})) return false;
      if (f == Family::boe) return true;
      return count_even_parts(lambda) - count_even_parts(conjugate(lambda)) == 2 * k;
    }
    case Family::eo1: {
      if (!evens_below_odds(p)) return false;
      auto odd = std::count_if(p.mult.begin(), p.mult.end(), [](const auto& vm) { return vm.second % 2 != 0; });
      return odd <= 1;
    }
    case Family::eo2:
      return evens_below_odds(p) && p.max_odd != 0 && odd_multiplicities_exactly(p, {p.min_odd});
    case Family::eo3:
      return p.max_odd != 0 && p.max_even == 0 && odd_multiplicities_exactly(p, {p.max_odd});
  }
  return false;
}

/// Positions of odd letters in the extended word
/// (n_0 = 1, e_1, n_1, ..., e_k, n_k, e_{k+1} = 1): e_i sits at 2i - 1 and
/// n_i at 2i.
inline std::vector<int> odd_letter_positions(const ProfileWord& w) {
  std::vector<int> odd;
  const int k = w.num_corners();
  odd.push_back(0);
  for (int i = 1; i <= k; ++i) {
    if (w.east(i) % 2 != 0) odd.push_back(2 * i - 1);
    if (w.north(i) % 2 != 0) odd.push_back(2 * i);
  }
  odd.push_back(2 * k + 1);
  return odd;
}

}  // namespace detail

/// Direct membership test from part multiplicities.
inline bool is_member(const FamilyTag& tag, const Partition& lambda) {
  if (!detail::base_member(tag.family, tag.k, lambda)) return false;
  return !tag.self_conjugate || is_self_conjugate(lambda);
}

/// Membership read off the profile word alone. Defined for every family
/// except BOE_K; agrees with is_member on all partitions.
inline bool is_member_by_profile(Family f, const ProfileWord& w) {
  const int k = w.num_corners();
  // Interior odd letters only (drop the two boundary sentinels).
  std::vector<int> odd = detail::odd_letter_positions(w);
  std::vector<int> interior(odd.begin() + 1, odd.end() - 1);
  auto count_if_pos = [&](auto pred) { return std::count_if(interior.begin(), interior.end(), pred); };
  auto is_east = [](int pos) { return pos % 2 == 1; };
  auto is_north = [](int pos) { return pos % 2 == 0; };
  switch (f) {
    case Family::eo: return count_if_pos(is_east) <= 1;
    case Family::oe: {
      std::vector<int> east;
      for (int pos : interior) {
        if (is_east(pos)) east.push_back(pos);
      }
      if (east.empty()) return true;
      return east.front() == 1 && east.size() <= 2;
    }
    case Family::beo: {
      // One odd pair (n_i, e_{i+1}), 0 <= i <= k, counting the sentinels
      // n_0 = e_{k+1} = 1; every other letter even.
      if (interior.empty()) return k == 0;
      if (interior.size() == 1) return interior.front() == 1 || interior.front() == 2 * k;
      return interior.size() == 2 && is_north(interior[0]) && interior[1] == interior[0] + 1;
    }
    case Family::boe: {
      // e_1 and n_k odd plus exactly one interior pair (n_i, e_{i+1}).
      if (interior.size() != 4 || k < 2) return false;
      return interior[0] == 1 && interior[3] == 2 * k && is_north(interior[1]) && interior[2] == interior[1] + 1 &&
             interior[1] >= 2 && interior[2] <= 2 * k - 1;
    }
    case Family::eo1: return count_if_pos(is_east) <= 1 && count_if_pos(is_north) <= 1;
    case Family::eo2:
      return interior.size() == 2 && is_east(interior[0]) && interior[1] == interior[0] + 1;
    case Family::eo3:
      return k >= 1 && interior.size() == 2 && interior[0] == 1 && interior[1] == 2 * k;
    case Family::boe_k: break;
  }
  throw std::invalid_argument("no profile characterization for BOE_K");
}

}  // namespace parsep
