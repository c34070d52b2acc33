#pragma once

// Test-only oracles that share no code path with the normal-form machinery.
//
// ArtinAction decides equality in B_n through the faithful action of the
// braid group on the free group F_n: x_i -> x_i x_{i+1} x_i^{-1},
// x_{i+1} -> x_i for sigma_i. Two words are equal braids iff they induce
// the same automorphism. Image lengths grow quickly, so keep words short.

#include <cstdlib>
#include <map>
#include <ostream>
#include <vector>

#include "garside/garside.hpp"

namespace oracle {

using FreeWord = std::vector<int>;  // letters ±j, j in 1..n

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

inline FreeWord invert(const FreeWord& w) {
  FreeWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

class ArtinAction {
 public:
  explicit ArtinAction(int n) : n_(n), images_(static_cast<std::size_t>(n)) {
    for (int j = 1; j <= n; ++j) images_[static_cast<std::size_t>(j - 1)] = {j};
  }

  static ArtinAction of(const garside::BraidWord& w) {
    ArtinAction a(w.strands().value());
    for (int e : w.letters()) a.apply(e);
    return a;
  }

  static ArtinAction of(const garside::CanonicalBraid& x) { return of(garside::to_word(x)); }

  // Precompose with the automorphism of a single generator.
  void apply(int e) {
    const int i = std::abs(e);
    std::map<int, FreeWord> gen;
    if (e > 0) {
      gen[i] = {i, i + 1, -i};
      gen[i + 1] = {i};
    } else {
      gen[i] = {i + 1};
      gen[i + 1] = {-(i + 1), i, i + 1};
    }
    for (auto& img : images_) {
      FreeWord out;
      for (int letter : img) {
        const int j = std::abs(letter);
        auto it = gen.find(j);
        FreeWord piece = (it == gen.end()) ? FreeWord{j} : it->second;
        if (letter < 0) piece = invert(piece);
        for (int p : piece) push_reduced(out, p);
      }
      img = std::move(out);
    }
  }

  friend bool operator==(const ArtinAction&, const ArtinAction&) = default;

 private:
  int n_;
  std::vector<FreeWord> images_;
};

inline bool same_braid(const garside::BraidWord& a, const garside::BraidWord& b) {
  return ArtinAction::of(a) == ArtinAction::of(b);
}

inline garside::BraidWord concat(std::initializer_list<garside::BraidWord> parts) {
  std::vector<int> letters;
  for (const auto& p : parts) letters.insert(letters.end(), p.letters().begin(), p.letters().end());
  return garside::BraidWord(parts.begin()->strands(), std::move(letters));
}

inline garside::BraidWord inverse_word(const garside::BraidWord& w) {
  std::vector<int> letters;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(-*it);
  return garside::BraidWord(w.strands(), std::move(letters));
}

// Left normal form condition checked through the brute-force meet.
inline bool is_left_normal(const garside::CanonicalBraid& x) {
  const auto& fs = x.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_identity() || fs[i].is_delta()) return false;
    if (i > 0 &&
        !garside::lab::brute_meet(garside::complement(fs[i - 1]), fs[i]).is_identity()) {
      return false;
    }
  }
  return true;
}

}  // namespace oracle

// Readable failure messages in gtest.
namespace garside {
inline void PrintTo(const CanonicalBraid& x, std::ostream* os) { *os << to_string(x); }
inline void PrintTo(const SimpleElement& s, std::ostream* os) { *os << "<" << to_string(s) << ">"; }
}  // namespace garside
