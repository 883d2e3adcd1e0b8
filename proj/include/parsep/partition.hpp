#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parsep {

/// A weakly decreasing sequence of positive integers. The empty partition
/// (of 0) is a valid value.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw std::invalid_argument("partition parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
      size_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// Parses "4,4,2,1,1". Surrounding parentheses and blanks are ignored;
  /// "", "()" and "e" denote the empty partition.
  static Partition parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
      if (c != ' ' && c != '(' && c != ')' && c != '\t') cleaned.push_back(c);
    }
    if (cleaned.empty() || cleaned == "e") return Partition();
    std::vector<int> parts;
    std::string_view rest = cleaned;
    while (true) {
      auto comma = rest.find(',');
      auto token = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed partition: " + std::string(text));
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// (value, multiplicity) pairs in decreasing order of value.
  std::vector<std::pair<int, int>> multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
      if (!out.empty() && out.back().first == p) {
        ++out.back().second;
      } else {
        out.emplace_back(p, 1);
      }
    }
    return out;
  }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
  friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Visits every partition of n as a span of parts, in lexicographically
/// decreasing order. n = 0 visits the empty partition once.
template <class Visitor>
void for_each_partition(int n, Visitor&& visit) {
  if (n < 0) return;
  std::vector<int> a;
  if (n > 0) a.push_back(n);
  while (true) {
    visit(std::span<const int>(a));
    int remainder = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++remainder;
    }
    if (a.empty()) return;
    int x = --a.back();
    ++remainder;
    while (remainder > x) {
      a.push_back(x);
      remainder -= x;
    }
    if (remainder > 0) a.push_back(remainder);
  }
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> p) {
    out.emplace_back(std::vector<int>(p.begin(), p.end()));
  });
  return out;
}

/// Transpose of the Ferrers graph: conj_i = #{j : parts_j >= i}.
inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int p : lambda.parts()) {
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

/// lambda = (side; below, right): `below` is the subpartition under the
/// Durfee square, `right` the conjugate of the subpartition to its right.
struct DurfeeDecomposition {
  int side = 0;
  Partition below;
  Partition right;

  Partition recompose() const {
    Partition right_rows = conjugate(right);
    std::vector<int> parts;
    for (int i = 0; i < side; ++i) {
      int extra = i < right_rows.num_parts() ? right_rows[static_cast<std::size_t>(i)] : 0;
      parts.push_back(side + extra);
    }
    parts.insert(parts.end(), below.parts().begin(), below.parts().end());
    return Partition(std::move(parts));
  }

  friend bool operator==(const DurfeeDecomposition&, const DurfeeDecomposition&) = default;
};

inline DurfeeDecomposition durfee_decompose(const Partition& lambda) {
  const auto& parts = lambda.parts();
  int d = 0;
  while (d < lambda.num_parts() && parts[static_cast<std::size_t>(d)] >= d + 1) ++d;
  std::vector<int> right_rows;
  for (int i = 0; i < d; ++i) {
    int excess = parts[static_cast<std::size_t>(i)] - d;
    if (excess > 0) right_rows.push_back(excess);
  }
  return DurfeeDecomposition{
      d, Partition(std::vector<int>(parts.begin() + d, parts.end())),
      conjugate(Partition(std::move(right_rows)))};
}

/// Run lengths (e1, n1, ..., ek, nk) of the east/north border edges of the
/// Ferrers graph, read from the bottom-left corner. e1 is the smallest part,
/// n1 its multiplicity, e1 + e2 the next distinct part, and so on.
class ProfileWord {
 public:
  ProfileWord() = default;

  explicit ProfileWord(std::vector<int> runs) : runs_(std::move(runs)) {
    if (runs_.size() % 2 != 0) throw std::invalid_argument("profile word must have even length");
    for (int r : runs_) {
      if (r < 1) throw std::invalid_argument("profile word runs must be positive");
    }
  }

  const std::vector<int>& runs() const noexcept { return runs_; }
  int num_corners() const noexcept { return static_cast<int>(runs_.size() / 2); }
  /// 1-based accessors matching e_i and n_i.
  int east(int i) const { return runs_[static_cast<std::size_t>(2 * (i - 1))]; }
  int north(int i) const { return runs_[static_cast<std::size_t>(2 * (i - 1) + 1)]; }

  ProfileWord reversed() const { return ProfileWord(std::vector<int>(runs_.rbegin(), runs_.rend())); }
  bool is_palindrome() const { return std::equal(runs_.begin(), runs_.end(), runs_.rbegin()); }

  friend bool operator==(const ProfileWord&, const ProfileWord&) = default;

 private:
  std::vector<int> runs_;
};

inline ProfileWord profile_word(const Partition& lambda) {
  auto mult = lambda.multiplicities();
  std::vector<int> runs;
  int previous = 0;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    runs.push_back(it->first - previous);
    runs.push_back(it->second);
    previous = it->first;
  }
  return ProfileWord(std::move(runs));
}

inline Partition from_profile(const ProfileWord& word) {
  std::vector<int> ascending;
  int value = 0;
  for (int i = 1; i <= word.num_corners(); ++i) {
    value += word.east(i);
    ascending.insert(ascending.end(), static_cast<std::size_t>(word.north(i)), value);
  }
  return Partition(std::vector<int>(ascending.rbegin(), ascending.rend()));
}

inline Partition from_profile(std::vector<int> runs) { return from_profile(ProfileWord(std::move(runs))); }

inline int count_odd_parts(const Partition& lambda) {
  return static_cast<int>(std::count_if(lambda.parts().begin(), lambda.parts().end(),
                                        [](int p) { return p % 2 != 0; }));
}

inline int count_even_parts(const Partition& lambda) { return lambda.num_parts() - count_odd_parts(lambda); }

/// 0 when lambda has no even part.
inline int largest_even_part(const Partition& lambda) {
  for (int p : lambda.parts()) {
    if (p % 2 == 0) return p;
  }
  return 0;
}

struct Statistics {
  int rank = 0;
  int srank = 0;
  int eoc = 0;
  int odd_count = 0;
  int even_count = 0;
  int largest_even_part = 0;

  friend bool operator==(const Statistics&, const Statistics&) = default;
};

inline Statistics statistics(const Partition& lambda) {
  Statistics s;
  s.rank = lambda.largest() - lambda.num_parts();
  s.odd_count = count_odd_parts(lambda);
  s.even_count = lambda.num_parts() - s.odd_count;
  s.srank = s.odd_count - count_odd_parts(conjugate(lambda));
  s.largest_even_part = largest_even_part(lambda);
  s.eoc = s.largest_even_part - s.odd_count;
  return s;
}

}  // namespace parsep
