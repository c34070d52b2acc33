#pragma once

// Random sampling of braids, brute-force lattice oracles, and the
// experiment/benchmark runners used to check genericity and complexity
// claims empirically.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"
#include "garside/roots.hpp"

namespace garside::lab {

// SplitMix64. Fixed arithmetic, so streams are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0, bound), by rejection.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = 0;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

// Per-sample seed: seed XOR index through the mixer.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed ^ index);
}

enum class SampleModel { SignedArtinWord, PositiveSimpleProduct };

inline const char* to_string(SampleModel m) {
  return m == SampleModel::SignedArtinWord ? "SignedArtinWord" : "PositiveSimpleProduct";
}

inline SampleModel parse_model(const std::string& s) {
  if (s == "SignedArtinWord" || s == "signed") return SampleModel::SignedArtinWord;
  if (s == "PositiveSimpleProduct" || s == "positive") return SampleModel::PositiveSimpleProduct;
  throw std::invalid_argument("unknown sample model '" + s + "'");
}

struct SampleSpec {
  StrandCount n{3};
  int r = 1;
  SampleModel model = SampleModel::SignedArtinWord;
  std::uint64_t seed = 0;
  int count = 1;

  void validate() const {
    if (r <= 0) throw std::invalid_argument("sample length r must be positive");
    if (count <= 0) throw std::invalid_argument("sample count must be positive");
  }
};

// Uniform random permutation braid; redrawn until non-trivial if requested.
inline SimpleElement random_simple(StrandCount n, SplitMix64& rng, bool nontrivial = true) {
  std::vector<int> perm(static_cast<std::size_t>(n.value()));
  while (true) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n.value() - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    SimpleElement s = SimpleElement::from_permutation(n, perm);
    if (!nontrivial || !s.is_identity()) return s;
  }
}

inline BraidWord sample_word(const SampleSpec& spec, std::uint64_t index) {
  spec.validate();
  SplitMix64 rng(derive_seed(spec.seed, index));
  const int gens = spec.n.value() - 1;
  std::vector<int> letters;
  if (spec.model == SampleModel::SignedArtinWord) {
    letters.reserve(static_cast<std::size_t>(spec.r));
    for (int i = 0; i < spec.r; ++i) {
      const auto v = static_cast<int>(rng.uniform(2 * static_cast<std::uint64_t>(gens)));
      letters.push_back(v < gens ? v + 1 : -(v - gens + 1));
    }
  } else {
    for (int i = 0; i < spec.r; ++i) {
      const auto w = canonical_word(random_simple(spec.n, rng));
      letters.insert(letters.end(), w.begin(), w.end());
    }
  }
  return BraidWord(spec.n, std::move(letters));
}

inline std::vector<BraidWord> sample(const SampleSpec& spec) {
  spec.validate();
  std::vector<BraidWord> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) out.push_back(sample_word(spec, static_cast<std::uint64_t>(i)));
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force lattice oracles. Deliberately naive: they work on plain
// permutation vectors and enumerate all n! simple elements.

inline constexpr int kMaxBruteStrands = 6;

namespace detail {

inline std::vector<int> perm_of(const SimpleElement& s) { return s.permutation(); }

inline int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++c;
  return c;
}

// Permutation of the braid product s.u.
inline std::vector<int> product(const std::vector<int>& s, const std::vector<int>& u) {
  std::vector<int> r(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) r[j] = u[static_cast<std::size_t>(s[j])];
  return r;
}

inline void check_brute_size(StrandCount n) {
  if (n.value() > kMaxBruteStrands) {
    throw std::invalid_argument("brute-force oracle limited to " +
                                std::to_string(kMaxBruteStrands) + " strands");
  }
}

}  // namespace detail

inline std::vector<SimpleElement> enumerate_simple_elements(StrandCount n) {
  detail::check_brute_size(n);
  std::vector<int> perm(static_cast<std::size_t>(n.value()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SimpleElement> all;
  do {
    all.push_back(SimpleElement::from_permutation(n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return all;
}

// s ≼ t iff some simple u has s.u = t with crossing numbers adding up.
inline bool brute_prefix(const SimpleElement& s, const SimpleElement& t) {
  if (s.n() != t.n()) throw std::invalid_argument("mismatched strand counts");
  detail::check_brute_size(s.strands());
  const auto ps = detail::perm_of(s);
  const auto pt = detail::perm_of(t);
  const int ls = detail::inversions(ps), lt = detail::inversions(pt);
  std::vector<int> u(ps.size());
  std::iota(u.begin(), u.end(), 0);
  do {
    if (detail::product(ps, u) == pt && ls + detail::inversions(u) == lt) return true;
  } while (std::next_permutation(u.begin(), u.end()));
  return false;
}

// The common prefix that every other common prefix divides.
inline SimpleElement brute_meet(const SimpleElement& s, const SimpleElement& t) {
  if (s.n() != t.n()) throw std::invalid_argument("mismatched strand counts");
  std::vector<SimpleElement> common;
  for (const auto& u : enumerate_simple_elements(s.strands())) {
    if (brute_prefix(u, s) && brute_prefix(u, t)) common.push_back(u);
  }
  std::stable_sort(common.begin(), common.end(), [](const auto& a, const auto& b) {
    return detail::inversions(detail::perm_of(a)) > detail::inversions(detail::perm_of(b));
  });
  for (const auto& m : common) {
    if (std::all_of(common.begin(), common.end(),
                    [&](const SimpleElement& u) { return brute_prefix(u, m); })) {
      return m;
    }
  }
  throw std::logic_error("no greatest common prefix found");
}

// ---------------------------------------------------------------------------
// Genericity experiment.

struct ExperimentRow {
  int r = 0;
  double fractionRigidWithinBound = 0;
  double fractionUssMinimal = 0;
  double meanSlidings = 0;
  int samples = 0;
};

inline std::vector<ExperimentRow> run_genericity_experiment(StrandCount n, std::vector<int> rs,
                                                            SampleModel model, int count,
                                                            std::uint64_t seed) {
  std::sort(rs.begin(), rs.end());
  std::vector<ExperimentRow> rows;
  for (int r : rs) {
    const SampleSpec spec{n, r, model, seed, count};
    spec.validate();
    long long rigid = 0, minimal = 0, slidings = 0;
    for (int i = 0; i < count; ++i) {
      const CanonicalBraid x = normalize(sample_word(spec, static_cast<std::uint64_t>(i)));
      const SlideResult slid = slide_to_rigid(x);
      if (const auto* cert = std::get_if<ConjugationCertificate>(&slid)) {
        ++rigid;
        slidings += cert->iterations;
        if (is_uss_minimal(cert->target)) ++minimal;
      } else {
        slidings += std::get<ExceededBound>(slid).iterations;
      }
    }
    rows.push_back({r, static_cast<double>(rigid) / count, static_cast<double>(minimal) / count,
                    static_cast<double>(slidings) / count, count});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Planted-root round trip.

struct RoundTripSummary {
  int samples = 0;
  int roots = 0;
  int nonGeneric = 0;
  int noRoot = 0;
  int verificationFailures = 0;
  // Generic-path roots that differ from the planted root.
  int mismatchedRoots = 0;
  double maxSeconds = 0;
};

// Planted root a: a sample of the given model with r = l (so ℓ(a) ≤ l).
inline RoundTripSummary run_root_roundtrip(StrandCount n, int l, long long k, int count,
                                           std::uint64_t seed,
                                           SampleModel model = SampleModel::SignedArtinWord) {
  check_degree(k);
  const SampleSpec spec{n, l, model, seed, count};
  spec.validate();
  RoundTripSummary s;
  for (int i = 0; i < count; ++i) {
    const CanonicalBraid a = normalize(sample_word(spec, static_cast<std::uint64_t>(i)));
    const CanonicalBraid x = power(a, k);
    const auto start = std::chrono::steady_clock::now();
    RootOutcome out = NoRoot{};
    try {
      out = extract_root(x, k);
    } catch (const RootVerificationError&) {
      ++s.verificationFailures;
      ++s.samples;
      continue;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    s.maxSeconds = std::max(s.maxSeconds, secs);
    ++s.samples;
    if (const auto* root = std::get_if<Root>(&out)) {
      ++s.roots;
      if (power(root->root, k) != x) ++s.verificationFailures;
      if (root->root != a) {
        const SlideResult slid = slide_to_rigid(x);
        const auto* cert = std::get_if<ConjugationCertificate>(&slid);
        if (cert && cert->target.canonical_length() > 0) ++s.mismatchedRoots;
      }
    } else if (std::holds_alternative<NoRoot>(out)) {
      ++s.noRoot;
    } else {
      ++s.nonGeneric;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Runtime benchmark.

struct BenchCell {
  int n = 0;
  int l = 0;
  std::optional<double> meanSeconds;
  int genericInstances = 0;
  int nonGenericInstances = 0;
  double meanCanonicalLength = 0;
  // meanSeconds(l) / meanSeconds(l/2) when both cells are present.
  std::optional<double> ratioToHalfL;
};

// Each instance is x = a^k with a a product of max(1, l/k) random
// non-trivial simple elements, so ℓ(x) is close to l. Only instances that
// end in Root are timed.
inline std::vector<BenchCell> benchmark_root(const std::vector<int>& ns, std::vector<int> ls,
                                             long long k, int count, std::uint64_t seed) {
  check_degree(k);
  std::sort(ls.begin(), ls.end());
  std::vector<BenchCell> cells;
  for (int nv : ns) {
    const StrandCount n(nv);
    const std::size_t first = cells.size();
    for (int l : ls) {
      const int r = std::max<int>(1, static_cast<int>(l / k));
      const SampleSpec spec{n, r, SampleModel::PositiveSimpleProduct,
                            derive_seed(seed, static_cast<std::uint64_t>(nv) * 1000003ULL +
                                                  static_cast<std::uint64_t>(l)),
                            count};
      spec.validate();
      BenchCell cell{nv, l, std::nullopt, 0, 0, 0, std::nullopt};
      double total = 0;
      long long lengths = 0;
      for (int i = 0; i < count; ++i) {
        const CanonicalBraid a = normalize(sample_word(spec, static_cast<std::uint64_t>(i)));
        const CanonicalBraid x = power(a, k);
        lengths += x.canonical_length();
        const auto start = std::chrono::steady_clock::now();
        const RootOutcome out = extract_root(x, k);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (std::holds_alternative<Root>(out)) {
          ++cell.genericInstances;
          total += secs;
        } else {
          ++cell.nonGenericInstances;
        }
      }
      cell.meanCanonicalLength = static_cast<double>(lengths) / count;
      if (cell.genericInstances > 0) cell.meanSeconds = total / cell.genericInstances;
      cells.push_back(cell);
    }
    for (std::size_t i = first; i < cells.size(); ++i) {
      for (std::size_t j = first; j < cells.size(); ++j) {
        if (2 * cells[j].l == cells[i].l && cells[i].meanSeconds && cells[j].meanSeconds &&
            *cells[j].meanSeconds > 0) {
          cells[i].ratioToHalfL = *cells[i].meanSeconds / *cells[j].meanSeconds;
        }
      }
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Output. Floating point values carry 6 significant digits.

inline std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline double round_g6(double v) { return std::stod(format_g6(v)); }

inline std::string sampling_note(SampleModel model) {
  return std::string("# sampling: model=") + to_string(model) +
         " (uniform random words of the given length, standing in for the uniform "
         "distribution on the ball of radius r over simple generators)";
}

inline void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "r,fractionRigidWithinBound,fractionUssMinimal,meanSlidings,samples\n";
  for (const auto& row : rows) {
    out << row.r << ',' << format_g6(row.fractionRigidWithinBound) << ','
        << format_g6(row.fractionUssMinimal) << ',' << format_g6(row.meanSlidings) << ','
        << row.samples << '\n';
  }
}

inline nlohmann::ordered_json to_json(const std::vector<ExperimentRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    arr.push_back({{"r", row.r},
                   {"fractionRigidWithinBound", round_g6(row.fractionRigidWithinBound)},
                   {"fractionUssMinimal", round_g6(row.fractionUssMinimal)},
                   {"meanSlidings", round_g6(row.meanSlidings)},
                   {"samples", row.samples}});
  }
  return arr;
}

inline void write_csv(std::ostream& out, const std::vector<BenchCell>& cells) {
  out << "n,l,meanSeconds,genericInstances,nonGenericInstances,meanCanonicalLength,"
         "ratioToHalfL\n";
  for (const auto& c : cells) {
    out << c.n << ',' << c.l << ',' << (c.meanSeconds ? format_g6(*c.meanSeconds) : "") << ','
        << c.genericInstances << ',' << c.nonGenericInstances << ','
        << format_g6(c.meanCanonicalLength) << ','
        << (c.ratioToHalfL ? format_g6(*c.ratioToHalfL) : "") << '\n';
  }
}

inline nlohmann::ordered_json to_json(const std::vector<BenchCell>& cells) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cells) {
    nlohmann::ordered_json row = {{"n", c.n},
                          {"l", c.l},
                          {"meanSeconds", nullptr},
                          {"genericInstances", c.genericInstances},
                          {"nonGenericInstances", c.nonGenericInstances},
                          {"meanCanonicalLength", round_g6(c.meanCanonicalLength)},
                          {"ratioToHalfL", nullptr}};
    if (c.meanSeconds) row["meanSeconds"] = round_g6(*c.meanSeconds);
    if (c.ratioToHalfL) row["ratioToHalfL"] = round_g6(*c.ratioToHalfL);
    arr.push_back(row);
  }
  return arr;
}

}  // namespace garside::lab
