#pragma once

// Braid words, left normal forms and the group operations of B_n.

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/simple_element.hpp"

namespace garside {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word in the Artin generators: +i is sigma_i, -i is sigma_i^{-1}.
class BraidWord {
 public:
  BraidWord(StrandCount n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    for (int e : letters_) {
      if (e == 0 || std::abs(e) > n.value() - 1) {
        throw std::out_of_range("generator " + std::to_string(e) + " invalid for " +
                                std::to_string(n.value()) + " strands");
      }
    }
  }

  StrandCount strands() const noexcept { return n_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  StrandCount n_;
  std::vector<int> letters_;
};

// Whitespace-separated signed integers, e.g. "1 2 -1".
inline BraidWord parse_word(std::string_view text, StrandCount n) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed generator '" + token + "'");
    }
    if (used != token.size()) throw ParseError("malformed generator '" + token + "'");
    if (value == 0 || std::abs(value) > n.value() - 1) {
      throw ParseError("generator " + token + " out of range for " +
                       std::to_string(n.value()) + " strands");
    }
    letters.push_back(value);
  }
  return BraidWord(n, std::move(letters));
}

inline std::string to_string(const BraidWord& w) {
  std::string out;
  for (int e : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

// Left normal form Delta^p x_1 ... x_l. Every value of this type satisfies
// the normal form invariants; construction from raw data goes through the
// normalizer or through from_normal_form, which checks them.
class CanonicalBraid {
 public:
  static CanonicalBraid identity(StrandCount n) { return CanonicalBraid(n, 0, {}); }
  static CanonicalBraid delta_power(StrandCount n, long long p) { return CanonicalBraid(n, p, {}); }
  static CanonicalBraid from_simple(const SimpleElement& s) {
    if (s.is_identity()) return identity(s.strands());
    if (s.is_delta()) return delta_power(s.strands(), 1);
    return CanonicalBraid(s.strands(), 0, {s});
  }

  static CanonicalBraid from_normal_form(StrandCount n, long long p,
                                         std::vector<SimpleElement> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      if (f.n() != n.value()) throw std::invalid_argument("mismatched strand counts");
      if (f.is_identity() || f.is_delta()) {
        throw std::invalid_argument("normal form factors must be proper simple elements");
      }
      if (i > 0 && !is_left_weighted(factors[i - 1], f)) {
        throw std::invalid_argument("normal form factors must be left weighted");
      }
    }
    return CanonicalBraid(n, p, std::move(factors));
  }

  StrandCount strands() const noexcept { return n_; }
  long long delta_exponent() const noexcept { return p_; }
  const std::vector<SimpleElement>& factors() const noexcept { return factors_; }

  long long inf() const noexcept { return p_; }
  long long sup() const noexcept { return p_ + static_cast<long long>(factors_.size()); }
  long long canonical_length() const noexcept { return static_cast<long long>(factors_.size()); }

  bool is_identity() const noexcept { return p_ == 0 && factors_.empty(); }

  friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;

 private:
  CanonicalBraid(StrandCount n, long long p, std::vector<SimpleElement> factors)
      : n_(n), p_(p), factors_(std::move(factors)) {}

  friend class NormalFormBuilder;

  StrandCount n_;
  long long p_;
  std::vector<SimpleElement> factors_;
};

// Incremental left normal form: maintains Delta^p L with L left weighted and
// accepts simple factors on the right.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(StrandCount n) : n_(n) {}

  explicit NormalFormBuilder(const CanonicalBraid& x)
      : n_(x.strands()), p_(x.delta_exponent()), factors_(x.factors()) {}

  StrandCount strands() const noexcept { return n_; }

  // Right multiplication by a power of Delta: L.Delta^k = Delta^k tau^k(L).
  void append_delta_power(long long k) {
    p_ += k;
    if (k % 2 != 0) {
      for (auto& f : factors_) f = tau(f);
    }
  }

  void append(const SimpleElement& s) {
    if (s.n() != n_.value()) throw std::invalid_argument("mismatched strand counts");
    if (s.is_identity()) return;
    if (s.is_delta()) {
      append_delta_power(1);
      return;
    }
    factors_.push_back(s);
    // Restore left weightedness from the right. Delta factors produced on
    // the way travel to the front; a trivial factor can only appear last.
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      const SimpleElement m = meet(complement(factors_[j - 1]), factors_[j]);
      if (m.is_identity()) break;
      factors_[j - 1] = multiply_simple(factors_[j - 1], m);
      factors_[j] = left_divide(m, factors_[j]);
    }
    if (factors_.back().is_identity()) factors_.pop_back();
    std::size_t leading = 0;
    while (leading < factors_.size() && factors_[leading].is_delta()) ++leading;
    if (leading > 0) {
      p_ += static_cast<long long>(leading);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(leading));
    }
  }

  void append(const CanonicalBraid& y) {
    append_delta_power(y.delta_exponent());
    for (const auto& f : y.factors()) append(f);
  }

  CanonicalBraid build() && { return CanonicalBraid(n_, p_, std::move(factors_)); }
  CanonicalBraid build() const& { return CanonicalBraid(n_, p_, factors_); }

 private:
  StrandCount n_;
  long long p_ = 0;
  std::vector<SimpleElement> factors_;
};

namespace detail {
inline void check_same_strands(const CanonicalBraid& a, const CanonicalBraid& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("mismatched strand counts");
}
}  // namespace detail

// sigma_i^{-1} = Delta^{-1} u with u the left complement of sigma_i. All the
// Delta^{-1} are gathered at the front first: each simple factor is twisted
// by tau once for every Delta^{-1} to its right.
inline CanonicalBraid normalize(const BraidWord& w) {
  const StrandCount n = w.strands();
  const auto& letters = w.letters();
  long long negatives_after = 0;
  for (int e : letters)
    if (e < 0) ++negatives_after;
  NormalFormBuilder builder(n);
  builder.append_delta_power(-negatives_after);
  for (int e : letters) {
    if (e > 0) {
      builder.append(tau_power(atom(e, n), negatives_after));
    } else {
      --negatives_after;
      builder.append(tau_power(left_complement(atom(-e, n)), negatives_after));
    }
  }
  return std::move(builder).build();
}

inline CanonicalBraid multiply(const CanonicalBraid& x, const CanonicalBraid& y) {
  detail::check_same_strands(x, y);
  NormalFormBuilder builder(x);
  builder.append(y);
  return std::move(builder).build();
}

inline CanonicalBraid operator*(const CanonicalBraid& x, const CanonicalBraid& y) {
  return multiply(x, y);
}

// (Delta^p x_1..x_l)^{-1} = Delta^{-p-l} tau^{p+l}(∂x_l) ... tau^{p+1}(∂x_1),
// which is again left weighted.
inline CanonicalBraid inverse(const CanonicalBraid& x) {
  const long long p = x.delta_exponent();
  const auto& fs = x.factors();
  const long long l = static_cast<long long>(fs.size());
  std::vector<SimpleElement> out;
  out.reserve(fs.size());
  for (long long i = l; i >= 1; --i) {
    out.push_back(tau_power(complement(fs[static_cast<std::size_t>(i - 1)]), p + i));
  }
  return CanonicalBraid::from_normal_form(x.strands(), -p - l, std::move(out));
}

inline CanonicalBraid power(const CanonicalBraid& x, long long k) {
  if (k < 0) return power(inverse(x), -k);
  CanonicalBraid result = CanonicalBraid::identity(x.strands());
  CanonicalBraid base = x;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

inline bool equals(const CanonicalBraid& x, const CanonicalBraid& y) { return x == y; }

// tau applied factor-wise; already in normal form.
inline CanonicalBraid tau(const CanonicalBraid& x) {
  std::vector<SimpleElement> fs;
  fs.reserve(x.factors().size());
  for (const auto& f : x.factors()) fs.push_back(tau(f));
  return CanonicalBraid::from_normal_form(x.strands(), x.delta_exponent(), std::move(fs));
}

inline long long exponent_sum(const CanonicalBraid& x) {
  long long e = x.delta_exponent() * x.strands().delta_length();
  for (const auto& f : x.factors()) e += f.length();
  return e;
}

// c^{-1} x c.
inline CanonicalBraid conjugate(const CanonicalBraid& x, const CanonicalBraid& c) {
  return multiply(multiply(inverse(c), x), c);
}

// "D^p | w1 | ... | wl"
inline std::string to_string(const CanonicalBraid& x) {
  std::string out = "D^" + std::to_string(x.delta_exponent());
  for (const auto& f : x.factors()) {
    out += " | ";
    out += to_string(f);
  }
  return out;
}

// A word for x: Delta^p expanded (inverted letters for p < 0), then the
// canonical words of the factors.
inline BraidWord to_word(const CanonicalBraid& x) {
  const StrandCount n = x.strands();
  const std::vector<int> dw = canonical_word(delta(n));
  std::vector<int> letters;
  const long long p = x.delta_exponent();
  for (long long i = 0; i < (p < 0 ? -p : p); ++i) {
    if (p > 0) {
      letters.insert(letters.end(), dw.begin(), dw.end());
    } else {
      for (auto it = dw.rbegin(); it != dw.rend(); ++it) letters.push_back(-*it);
    }
  }
  for (const auto& f : x.factors()) {
    const auto w = canonical_word(f);
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return BraidWord(n, std::move(letters));
}

// Parses the "D^p | w1 | ..." rendering back into a braid. Factor words need
// not be normalized; the result is renormalized.
inline CanonicalBraid parse_canonical(std::string_view text, StrandCount n) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == '|') {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);

  std::istringstream head(parts.front());
  std::string token;
  if (!(head >> token) || token.rfind("D^", 0) != 0) {
    throw ParseError("normal form must start with D^p");
  }
  long long p = 0;
  try {
    std::size_t used = 0;
    p = std::stoll(token.substr(2), &used);
    if (used != token.size() - 2) throw ParseError("bad Delta exponent");
  } catch (const std::logic_error&) {
    throw ParseError("bad Delta exponent '" + token + "'");
  }
  if (head >> token) throw ParseError("unexpected text after Delta power");

  NormalFormBuilder builder(n);
  builder.append_delta_power(p);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const BraidWord w = parse_word(parts[i], n);
    for (int e : w.letters()) {
      if (e < 0) throw ParseError("normal form factors must be positive words");
    }
    builder.append(normalize(w));
  }
  return std::move(builder).build();
}

}  // namespace garside
