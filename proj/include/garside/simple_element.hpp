#pragma once

// Permutation braids: the simple elements of the classical Garside
// structure of B_n, and the prefix lattice on them.
//
// Convention: perm[j] is the bottom position reached by the strand that
// starts at top position j (0-based). For a product s.t (s on top),
// (s.t)[j] = t[s[j]]. The atom sigma_i exchanges positions i-1 and i.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

inline constexpr int kMaxStrands = 32;

class StrandCount {
 public:
  constexpr explicit StrandCount(int n) : n_(n) {
    if (n < 2 || n > kMaxStrands) {
      throw std::invalid_argument("strand count must lie in [2, " +
                                  std::to_string(kMaxStrands) + "], got " +
                                  std::to_string(n));
    }
  }

  constexpr int value() const noexcept { return n_; }

  // n(n-1)/2, the number of crossings in Delta.
  constexpr int delta_length() const noexcept { return n_ * (n_ - 1) / 2; }

  friend constexpr bool operator==(StrandCount, StrandCount) = default;
  friend constexpr auto operator<=>(StrandCount, StrandCount) = default;

 private:
  int n_;
};

class SimpleElement {
 public:
  static SimpleElement identity(StrandCount n) {
    SimpleElement s(n);
    for (int j = 0; j < n.value(); ++j) s.perm_[j] = static_cast<std::uint8_t>(j);
    return s;
  }

  // images[j] is the 0-based image of j; must be a bijection of {0..n-1}.
  static SimpleElement from_permutation(StrandCount n, std::span<const int> images) {
    if (static_cast<int>(images.size()) != n.value()) {
      throw std::invalid_argument("permutation size does not match strand count");
    }
    SimpleElement s(n);
    std::array<bool, kMaxStrands> seen{};
    for (int j = 0; j < n.value(); ++j) {
      const int v = images[j];
      if (v < 0 || v >= n.value() || seen[v]) {
        throw std::invalid_argument("not a permutation of the strands");
      }
      seen[v] = true;
      s.perm_[j] = static_cast<std::uint8_t>(v);
    }
    return s;
  }

  StrandCount strands() const noexcept { return StrandCount(n_); }
  int n() const noexcept { return n_; }

  // 0-based image of strand position j.
  int operator[](int j) const noexcept { return perm_[j]; }

  std::vector<int> permutation() const { return {perm_.begin(), perm_.begin() + n_}; }

  // Inversion count, i.e. the number of crossings.
  int length() const noexcept {
    int inv = 0;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (perm_[a] > perm_[b]) ++inv;
    return inv;
  }

  bool is_identity() const noexcept {
    for (int j = 0; j < n_; ++j)
      if (perm_[j] != j) return false;
    return true;
  }

  bool is_delta() const noexcept {
    for (int j = 0; j < n_; ++j)
      if (perm_[j] != n_ - 1 - j) return false;
    return true;
  }

  // sigma_i is a prefix (1-based i): the strands starting at i, i+1 cross.
  bool starts_with_atom(int i) const noexcept { return perm_[i - 1] > perm_[i]; }

  // sigma_i is a suffix: the strands ending at i, i+1 cross.
  bool ends_with_atom(int i) const noexcept {
    int a = 0, b = 0;
    for (int j = 0; j < n_; ++j) {
      if (perm_[j] == i - 1) a = j;
      if (perm_[j] == i) b = j;
    }
    return a > b;
  }

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;
  friend auto operator<=>(const SimpleElement&, const SimpleElement&) = default;

 private:
  explicit SimpleElement(StrandCount n) : n_(static_cast<std::uint8_t>(n.value())) {}

  friend struct SimpleAccess;

  std::uint8_t n_;
  std::array<std::uint8_t, kMaxStrands> perm_{};
};

// Raw permutation arithmetic shared by the lattice operations below. The
// results are only meaningful as simple elements when lengths add up, which
// every caller guarantees.
struct SimpleAccess {
  static std::uint8_t* data(SimpleElement& s) noexcept { return s.perm_.data(); }
  static SimpleElement blank(StrandCount n) { return SimpleElement(n); }
};

namespace detail {

inline void check_same_strands(const SimpleElement& a, const SimpleElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched strand counts");
}

inline SimpleElement inverse_perm(const SimpleElement& s) {
  SimpleElement r = SimpleAccess::blank(s.strands());
  auto* out = SimpleAccess::data(r);
  for (int j = 0; j < s.n(); ++j) out[s[j]] = static_cast<std::uint8_t>(j);
  return r;
}

// Permutation of the product a.b.
inline SimpleElement compose(const SimpleElement& a, const SimpleElement& b) {
  SimpleElement r = SimpleAccess::blank(a.strands());
  auto* out = SimpleAccess::data(r);
  for (int j = 0; j < a.n(); ++j) out[j] = static_cast<std::uint8_t>(b[a[j]]);
  return r;
}

// Permutation of a^{-1}.b.
inline SimpleElement left_quotient(const SimpleElement& a, const SimpleElement& b) {
  SimpleElement r = SimpleAccess::blank(a.strands());
  auto* out = SimpleAccess::data(r);
  for (int j = 0; j < a.n(); ++j) out[a[j]] = static_cast<std::uint8_t>(b[j]);
  return r;
}

}  // namespace detail

inline SimpleElement atom(int i, StrandCount n) {
  if (i < 1 || i > n.value() - 1) {
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " out of range for " + std::to_string(n.value()) +
                            " strands");
  }
  SimpleElement s = SimpleElement::identity(n);
  auto* p = SimpleAccess::data(s);
  std::swap(p[i - 1], p[i]);
  return s;
}

// The Garside element; its permutation reverses the strands.
inline SimpleElement delta(StrandCount n) {
  SimpleElement s = SimpleAccess::blank(n);
  auto* p = SimpleAccess::data(s);
  for (int j = 0; j < n.value(); ++j) p[j] = static_cast<std::uint8_t>(n.value() - 1 - j);
  return s;
}

// Delta^{-1} s Delta.
inline SimpleElement tau(const SimpleElement& s) {
  const int n = s.n();
  SimpleElement r = SimpleAccess::blank(s.strands());
  auto* out = SimpleAccess::data(r);
  for (int j = 0; j < n; ++j) out[j] = static_cast<std::uint8_t>(n - 1 - s[n - 1 - j]);
  return r;
}

inline SimpleElement tau_power(const SimpleElement& s, long long k) {
  return (k % 2 == 0) ? s : tau(s);
}

// Right complement: the simple t with s.t = Delta.
inline SimpleElement complement(const SimpleElement& s) {
  const int n = s.n();
  SimpleElement r = SimpleAccess::blank(s.strands());
  auto* out = SimpleAccess::data(r);
  for (int j = 0; j < n; ++j) out[s[j]] = static_cast<std::uint8_t>(n - 1 - j);
  return r;
}

// Left complement: the simple u with u.s = Delta.
inline SimpleElement left_complement(const SimpleElement& s) {
  const int n = s.n();
  SimpleElement r = SimpleAccess::blank(s.strands());
  auto* out = SimpleAccess::data(r);
  for (int j = 0; j < n; ++j) out[n - 1 - s[j]] = static_cast<std::uint8_t>(j);
  return r;
}

// s ≼ t iff len(s) + len(s^{-1}t) = len(t).
inline bool prefix_leq(const SimpleElement& s, const SimpleElement& t) {
  detail::check_same_strands(s, t);
  return s.length() + detail::left_quotient(s, t).length() == t.length();
}

// Product of simple elements whose lengths add (a ≼ a.b ≼ Delta).
inline SimpleElement multiply_simple(const SimpleElement& a, const SimpleElement& b) {
  detail::check_same_strands(a, b);
  return detail::compose(a, b);
}

// m^{-1} t for a prefix m ≼ t.
inline SimpleElement left_divide(const SimpleElement& m, const SimpleElement& t) {
  detail::check_same_strands(m, t);
  return detail::left_quotient(m, t);
}

// Greatest common prefix. Peels common initial atoms off both arguments
// until none is left; this is the weak-order meet of the two permutations.
inline SimpleElement meet(const SimpleElement& s, const SimpleElement& t) {
  detail::check_same_strands(s, t);
  const int n = s.n();
  std::array<std::uint8_t, kMaxStrands> a{}, b{}, minv{};
  for (int j = 0; j < n; ++j) {
    a[j] = static_cast<std::uint8_t>(s[j]);
    b[j] = static_cast<std::uint8_t>(t[j]);
    minv[j] = static_cast<std::uint8_t>(j);
  }
  int i = 1;
  while (i < n) {
    if (a[i - 1] > a[i] && b[i - 1] > b[i]) {
      std::swap(a[i - 1], a[i]);
      std::swap(b[i - 1], b[i]);
      std::swap(minv[i - 1], minv[i]);
      // Only descents at i-1, i, i+1 can have changed.
      i = (i > 1) ? i - 1 : 1;
    } else {
      ++i;
    }
  }
  SimpleElement m = SimpleAccess::blank(s.strands());
  auto* out = SimpleAccess::data(m);
  for (int j = 0; j < n; ++j) out[minv[j]] = static_cast<std::uint8_t>(j);
  return m;
}

// Left-weighted pair: complement(s) ∧ t = 1, i.e. every initial atom of t
// is a final atom of s.
inline bool is_left_weighted(const SimpleElement& s, const SimpleElement& t) {
  detail::check_same_strands(s, t);
  const SimpleElement c = complement(s);
  for (int i = 1; i < s.n(); ++i)
    if (c.starts_with_atom(i) && t.starts_with_atom(i)) return false;
  return true;
}

// Canonical positive word: repeatedly strip the smallest initial atom.
inline std::vector<int> canonical_word(const SimpleElement& s) {
  const int n = s.n();
  std::array<std::uint8_t, kMaxStrands> a{};
  for (int j = 0; j < n; ++j) a[j] = static_cast<std::uint8_t>(s[j]);
  std::vector<int> word;
  int i = 1;
  while (i < n) {
    if (a[i - 1] > a[i]) {
      word.push_back(i);
      std::swap(a[i - 1], a[i]);
      i = 1;
    } else {
      ++i;
    }
  }
  return word;
}

// Simple element of a positive word that is known to be a permutation braid.
inline SimpleElement simple_from_word(StrandCount n, std::span<const int> letters) {
  SimpleElement s = SimpleElement::identity(n);
  for (int i : letters) {
    const SimpleElement a = atom(i, n);
    if (s.ends_with_atom(i)) {
      throw std::invalid_argument("word is not a permutation braid");
    }
    s = detail::compose(s, a);
  }
  return s;
}

inline std::string to_string(const SimpleElement& s) {
  std::string out;
  for (int i : canonical_word(s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace garside
