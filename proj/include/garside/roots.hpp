#pragma once

// k-th roots of braids in the generic case: slide to a rigid conjugate,
// check that its ultra summit set is minimal, write it as v^c w^d over the
// generators of its centralizer and divide the exponents by k.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"

namespace garside {

inline constexpr const char* kNoRootMessage = "A k-th root does not exist.";

struct Root {
  CanonicalBraid root;
};

struct NoRoot {};

// The generic procedure does not apply. Carries the reduced braid and the
// conjugator reached so far, so that a general-purpose solver can resume.
struct NonGeneric {
  std::string reason;
  CanonicalBraid reduced;
  CanonicalBraid conjugator;
};

using RootOutcome = std::variant<Root, NoRoot, NonGeneric>;

// A computed root failed verification. Never reported as NoRoot.
class RootVerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_degree(long long k) {
  if (k <= 1) throw std::invalid_argument("root degree k must be > 1, got " + std::to_string(k));
}

inline bool verify_root(const CanonicalBraid& x, long long k, const CanonicalBraid& a) {
  check_degree(k);
  return power(a, k) == x;
}

// True certifies that no k-th root exists: a^k = x forces k | e(x).
inline bool quick_no_root(const CanonicalBraid& x, long long k) {
  check_degree(k);
  return exponent_sum(x) % k != 0;
}

namespace detail {
inline RootOutcome checked_root(const CanonicalBraid& x, long long k, CanonicalBraid a) {
  if (power(a, k) != x) {
    throw RootVerificationError("computed root " + to_string(a) + " does not satisfy a^" +
                                std::to_string(k) + " = " + to_string(x));
  }
  return Root{std::move(a)};
}
}  // namespace detail

inline RootOutcome extract_root(const CanonicalBraid& x, long long k) {
  check_degree(k);
  const StrandCount n = x.strands();
  if (quick_no_root(x, k)) return NoRoot{};

  const SlideResult slid = slide_to_rigid(x);
  if (const auto* ex = std::get_if<ExceededBound>(&slid)) {
    return NonGeneric{"not rigid within bound", ex->last, ex->conjugator};
  }
  const auto& cert = std::get<ConjugationCertificate>(slid);
  const CanonicalBraid& y = cert.target;
  const CanonicalBraid& alpha = cert.conjugator;
  const CanonicalBraid alpha_inv = inverse(alpha);

  if (y.canonical_length() == 0) {
    const long long p = y.delta_exponent();
    if (p % k != 0) return NonGeneric{"power of Delta", y, alpha};
    return detail::checked_root(
        x, k, multiply(multiply(alpha, CanonicalBraid::delta_power(n, p / k)), alpha_inv));
  }

  if (!is_uss_minimal(y)) return NonGeneric{"USS not minimal", y, alpha};

  const OrbitData orbit = cycling_orbit(y);
  std::optional<CentralizerBasis> basis;
  try {
    basis = centralizer_basis(y, orbit);
  } catch (const CentralizerError& e) {
    return NonGeneric{std::string("centralizer decomposition failed: ") + e.what(), y, alpha};
  }
  // Under a minimal ultra summit set the root, if any, is unique.
  if (basis->c % k != 0 || basis->d % k != 0) return NoRoot{};

  CanonicalBraid a = multiply(alpha, power(basis->v, basis->c / k));
  a = multiply(a, power(basis->w, basis->d / k));
  a = multiply(a, alpha_inv);
  return detail::checked_root(x, k, std::move(a));
}

inline const char* outcome_name(const RootOutcome& o) {
  if (std::holds_alternative<Root>(o)) return "Root";
  if (std::holds_alternative<NoRoot>(o)) return "NoRoot";
  return "NonGeneric";
}

}  // namespace garside
