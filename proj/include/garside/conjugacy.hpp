#pragma once

// Conjugacy machinery on normal forms: cycling, decycling, cyclic sliding,
// rigidity, the minimal simple elements of a rigid braid, cycling orbits and
// the centralizer of a braid whose ultra summit set is minimal.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "garside/braid.hpp"

namespace garside {

// iota(x) = tau^{-p}(x_1); 1 when l = 0.
inline SimpleElement initial_factor(const CanonicalBraid& x) {
  if (x.factors().empty()) return SimpleElement::identity(x.strands());
  return tau_power(x.factors().front(), x.delta_exponent());
}

// phi(x) = x_l; Delta when l = 0.
inline SimpleElement final_factor(const CanonicalBraid& x) {
  if (x.factors().empty()) return delta(x.strands());
  return x.factors().back();
}

// s^{-1} x s for a simple s, as Delta^{p-1} tau^{p+1}(∂s) x_1..x_l s.
inline CanonicalBraid conjugate_by_simple(const CanonicalBraid& x, const SimpleElement& s) {
  if (s.n() != x.strands().value()) throw std::invalid_argument("mismatched strand counts");
  NormalFormBuilder b(x.strands());
  b.append_delta_power(x.delta_exponent() - 1);
  b.append(tau_power(complement(s), x.delta_exponent() + 1));
  for (const auto& f : x.factors()) b.append(f);
  b.append(s);
  return std::move(b).build();
}

// Delta^p x_2..x_l iota(x).
inline CanonicalBraid cycling(const CanonicalBraid& x) {
  const auto& fs = x.factors();
  if (fs.empty()) return x;
  NormalFormBuilder b(x.strands());
  b.append_delta_power(x.delta_exponent());
  for (std::size_t i = 1; i < fs.size(); ++i) b.append(fs[i]);
  b.append(initial_factor(x));
  return std::move(b).build();
}

// phi(x) Delta^p x_1..x_{l-1} = Delta^p tau^p(x_l) x_1..x_{l-1}.
inline CanonicalBraid decycling(const CanonicalBraid& x) {
  const auto& fs = x.factors();
  if (fs.empty()) return x;
  NormalFormBuilder b(x.strands());
  b.append_delta_power(x.delta_exponent());
  b.append(tau_power(fs.back(), x.delta_exponent()));
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) b.append(fs[i]);
  return std::move(b).build();
}

inline SimpleElement preferred_prefix(const CanonicalBraid& x) {
  return meet(initial_factor(x), complement(final_factor(x)));
}

inline CanonicalBraid cyclic_sliding(const CanonicalBraid& x) {
  const SimpleElement p = preferred_prefix(x);
  if (p.is_identity()) return x;
  return conjugate_by_simple(x, p);
}

inline bool is_rigid(const CanonicalBraid& x) {
  return meet(complement(final_factor(x)), initial_factor(x)).is_identity();
}

// conjugator^{-1} . source . conjugator = target
struct ConjugationCertificate {
  CanonicalBraid source;
  CanonicalBraid target;
  CanonicalBraid conjugator;
  long long iterations = 0;
};

// Sliding did not reach a rigid braid within the iteration bound.
struct ExceededBound {
  CanonicalBraid last;
  CanonicalBraid conjugator;
  long long iterations = 0;
};

using SlideResult = std::variant<ConjugationCertificate, ExceededBound>;

// Generic bound on the number of slidings: l (n(n-1)/2 - 1).
inline long long sliding_bound(const CanonicalBraid& x) {
  return x.canonical_length() * (x.strands().delta_length() - 1);
}

// Iterated cyclic sliding, accumulating the conjugator
// alpha = p(x) p(s(x)) p(s^2(x)) ...
inline SlideResult slide_to_rigid(const CanonicalBraid& x) {
  const long long bound = sliding_bound(x);
  CanonicalBraid y = x;
  NormalFormBuilder alpha(x.strands());
  long long r = 0;
  while (r < bound) {
    const SimpleElement p = preferred_prefix(y);
    if (p.is_identity()) break;
    alpha.append(p);
    y = conjugate_by_simple(y, p);
    ++r;
  }
  if (!is_rigid(y)) return ExceededBound{std::move(y), std::move(alpha).build(), r};
  return ConjugationCertificate{x, std::move(y), std::move(alpha).build(), r};
}

inline bool reached_rigid(const SlideResult& r) {
  return std::holds_alternative<ConjugationCertificate>(r);
}

// sigma_i . alpha, alpha being the sliding conjugator of sigma_i^{-1} y sigma_i
// to a rigid braid: a positive conjugator from y to a rigid braid that starts
// with sigma_i. Sliding does not always find the smallest such conjugator
// (see minimal_simple_elements). Empty when sliding exceeds its bound.
inline std::optional<CanonicalBraid> min_rigid_conjugator_with_atom(const CanonicalBraid& y,
                                                                    int i) {
  const SimpleElement a = atom(i, y.strands());
  const SlideResult slid = slide_to_rigid(conjugate_by_simple(y, a));
  const auto* cert = std::get_if<ConjugationCertificate>(&slid);
  if (cert == nullptr) return std::nullopt;
  NormalFormBuilder b(y.strands());
  b.append(a);
  b.append(cert->conjugator);
  return std::move(b).build();
}

// All simple s with 1 ≼ s ≼ t, in order of increasing length.
inline std::vector<SimpleElement> prefixes(const SimpleElement& t) {
  const StrandCount n = t.strands();
  std::vector<SimpleElement> level{SimpleElement::identity(n)};
  std::vector<SimpleElement> quotients{t};
  std::vector<SimpleElement> out = level;
  while (!level.empty()) {
    std::vector<SimpleElement> next, next_q;
    for (std::size_t k = 0; k < level.size(); ++k) {
      for (int i = 1; i < n.value(); ++i) {
        if (!quotients[k].starts_with_atom(i)) continue;
        const SimpleElement a = atom(i, n);
        next.push_back(multiply_simple(level[k], a));
        next_q.push_back(left_divide(a, quotients[k]));
      }
    }
    // Deduplicate, keeping quotients aligned.
    std::vector<std::size_t> order(next.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return next[a] < next[b]; });
    level.clear();
    quotients.clear();
    for (std::size_t k : order) {
      if (!level.empty() && level.back() == next[k]) continue;
      level.push_back(next[k]);
      quotients.push_back(next_q[k]);
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace detail {
inline bool conjugates_into_rigid(const CanonicalBraid& y, const SimpleElement& s) {
  const CanonicalBraid z = conjugate_by_simple(y, s);
  return z.canonical_length() == y.canonical_length() && is_rigid(z);
}
}  // namespace detail

// Minimal simple elements of a rigid y with l > 1, sorted. For such y the
// ultra summit set is the set of rigid conjugates, and every minimal simple
// element divides iota(y) or ∂(phi(y)); the prefixes of those two are
// scanned by increasing length, skipping anything above an element already
// found.
//
// Note: sliding sigma_i^{-1} y sigma_i back to a rigid braid can overshoot
// the smallest rigid conjugator starting with sigma_i, so the atom search
// is not used to decide membership here.
inline std::vector<SimpleElement> minimal_simple_elements(const CanonicalBraid& y) {
  if (y.canonical_length() < 1) {
    throw std::invalid_argument("minimal simple elements need canonical length > 0");
  }
  std::vector<SimpleElement> candidates = prefixes(initial_factor(y));
  const auto grey = prefixes(complement(final_factor(y)));
  candidates.insert(candidates.end(), grey.begin(), grey.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.length() < b.length(); });

  std::vector<SimpleElement> found;
  for (const auto& s : candidates) {
    if (s.is_identity()) continue;
    if (std::find(found.begin(), found.end(), s) != found.end()) continue;
    const bool above = std::any_of(found.begin(), found.end(),
                                   [&](const auto& f) { return prefix_leq(f, s); });
    if (above) continue;
    if (detail::conjugates_into_rigid(y, s)) found.push_back(s);
  }
  std::sort(found.begin(), found.end());
  return found;
}

// A rigid y with l > 1 has a minimal ultra summit set iff its minimal simple
// elements are exactly iota(y) and ∂(phi(y)), i.e. iff no proper non-trivial
// prefix of either conjugates y to a rigid braid.
inline bool is_uss_minimal(const CanonicalBraid& y) {
  if (y.canonical_length() <= 1 || !is_rigid(y)) return false;
  const SimpleElement first = initial_factor(y);
  const SimpleElement grey = complement(final_factor(y));
  // Cheap rejection: a sliding conjugator that is a proper prefix of
  // iota(y) or ∂(phi(y)) already witnesses non-minimality.
  for (int i = 1; i < y.strands().value(); ++i) {
    if (!first.starts_with_atom(i) && !grey.starts_with_atom(i)) continue;
    const auto c = min_rigid_conjugator_with_atom(y, i);
    if (!c || c->delta_exponent() != 0 || c->factors().size() != 1) continue;
    const SimpleElement& s = c->factors().front();
    if ((s != first && prefix_leq(s, first)) || (s != grey && prefix_leq(s, grey))) return false;
  }
  for (const SimpleElement& top : {first, grey}) {
    for (const auto& s : prefixes(top)) {
      if (s.is_identity() || s == top) continue;
      if (detail::conjugates_into_rigid(y, s)) return false;
    }
  }
  return true;
}

struct OrbitData {
  CanonicalBraid base;
  // Cycling steps until base or tau(base) recurs.
  long long t = 0;
  // p_1 ... p_t
  CanonicalBraid pc;
  bool self_conjugate = false;
  std::vector<SimpleElement> conjugators;
};

// Cycles y until it returns to y or reaches tau(y); p_i = iota(c^{i-1}(y)).
inline OrbitData cycling_orbit(const CanonicalBraid& y) {
  const CanonicalBraid twisted = tau(y);
  OrbitData o{y, 0, CanonicalBraid::identity(y.strands()), false, {}};
  NormalFormBuilder pc(y.strands());
  CanonicalBraid z = y;
  do {
    const SimpleElement p = initial_factor(z);
    o.conjugators.push_back(p);
    pc.append(p);
    z = cycling(z);
    ++o.t;
  } while (z != y && z != twisted);
  o.self_conjugate = (z == twisted);
  o.pc = std::move(pc).build();
  return o;
}

inline std::string to_string(const OrbitData& o) {
  return "t=" + std::to_string(o.t) + ", pc=" + to_string(o.pc) +
         ", self=" + (o.self_conjugate ? "true" : "false");
}

enum class CentralizerCase { TwoOrbits, OneOrbitTauFixed, OneOrbitTauFree };

inline const char* to_string(CentralizerCase c) {
  switch (c) {
    case CentralizerCase::TwoOrbits: return "TwoOrbits";
    case CentralizerCase::OneOrbitTauFixed: return "OneOrbitTauFixed";
    case CentralizerCase::OneOrbitTauFree: return "OneOrbitTauFree";
  }
  return "?";
}

// y = v^c w^d with v, w generating the centralizer of y.
struct CentralizerBasis {
  CanonicalBraid v;
  CanonicalBraid w;
  long long c = 0;
  long long d = 0;
  CentralizerCase kind = CentralizerCase::TwoOrbits;
};

// A precondition of centralizer_basis does not hold for the given braid.
class CentralizerError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline long long exact_div(long long a, long long b, const char* what) {
  if (b == 0 || a % b != 0) {
    throw CentralizerError(std::string("non-exact division computing ") + what + ": " +
                           std::to_string(a) + "/" + std::to_string(b));
  }
  return a / b;
}
}  // namespace detail

// Requires y rigid with a minimal ultra summit set and o = cycling_orbit(y).
inline CentralizerBasis centralizer_basis(const CanonicalBraid& y, const OrbitData& o) {
  const StrandCount n = y.strands();
  const long long p = y.delta_exponent();
  const long long l = y.canonical_length();
  CentralizerBasis b{CanonicalBraid::identity(n), CanonicalBraid::identity(n), 0, 0,
                     CentralizerCase::TwoOrbits};
  if (!o.self_conjugate) {
    b.kind = CentralizerCase::TwoOrbits;
    b.v = CanonicalBraid::delta_power(n, 2);
    b.w = o.pc;
    b.c = detail::exact_div(p, 2, "c");
    b.d = detail::exact_div(l, o.t, "d");
  } else if (tau(y) == y) {
    b.kind = CentralizerCase::OneOrbitTauFixed;
    b.v = CanonicalBraid::delta_power(n, 1);
    b.w = o.pc;
    b.c = p;
    b.d = detail::exact_div(l, o.t, "d");
  } else {
    // The orbit reached tau(y) after o.t steps; the full orbit is twice that.
    b.kind = CentralizerCase::OneOrbitTauFree;
    const long long t = 2 * o.t;
    b.v = CanonicalBraid::delta_power(n, 2);
    b.w = multiply(o.pc, CanonicalBraid::delta_power(n, -1));
    b.c = detail::exact_div(p * t + 2 * l, 2 * t, "c");
    b.d = detail::exact_div(2 * l, t, "d");
  }
  if (multiply(b.v, b.w) != multiply(b.w, b.v)) {
    throw CentralizerError("centralizer generators do not commute");
  }
  if (multiply(power(b.v, b.c), power(b.w, b.d)) != y) {
    throw CentralizerError("v^c w^d does not reconstruct the braid");
  }
  return b;
}

}  // namespace garside
