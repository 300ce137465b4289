#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace scf {

using ModelId = std::string;

/// An ordinal below the universe size, or the symbolic top ordinal kappa.
/// kappa compares above every finite ordinal; it never carries a finite value.
class Ord {
 public:
  constexpr Ord() : raw_(0) {}

  static constexpr Ord fin(uint32_t n) { return Ord(n); }
  static constexpr Ord kappa() { return Ord(kKappaRaw); }

  constexpr bool isKappa() const { return raw_ == kKappaRaw; }
  constexpr uint32_t finite() const { return raw_; }

  friend constexpr auto operator<=>(Ord a, Ord b) = default;

  std::string str() const { return isKappa() ? "kappa" : std::to_string(raw_); }

 private:
  static constexpr uint32_t kKappaRaw = 0xffffffffu;
  explicit constexpr Ord(uint32_t raw) : raw_(raw) {}
  uint32_t raw_;
};

enum class Errc {
  NoComparisonPoint,
  NotClosed,
  NoRepresentation,
  UnknownId,
  DomainClash,
  NotInModel,
  NotInDClass,
  PreconditionFailed,
  AmbiguousCase,
  CoordinateMissing,
  GenerationExhausted,
  BudgetExceeded,
  UnknownProperty,
  ParseError,
  UniverseDefect,
};

const char* errcName(Errc c);

class Error final : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Deterministic 64-bit PRNG (splitmix64). All randomness in the project is
/// seeded explicitly; no ambient entropy.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n). n must be positive.
  uint64_t below(uint64_t n) { return next() % n; }

  bool chance(uint32_t num, uint32_t den) { return below(den) < num; }

  /// Independent stream for trial i of a run seeded with `seed`.
  static SplitMix64 forTrial(uint64_t seed, uint64_t trial) {
    SplitMix64 mix(seed ^ (0x5851f42d4c957f2dull * (trial + 1)));
    mix.next();
    return mix;
  }
};

/// Sorted unique vectors double as finite sets of ordinals throughout.
using OrdVec = std::vector<uint32_t>;

namespace ords {

inline OrdVec normalized(OrdVec v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains(const OrdVec& v, uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

inline OrdVec intersect(const OrdVec& a, const OrdVec& b) {
  OrdVec out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline OrdVec unite(const OrdVec& a, const OrdVec& b) {
  OrdVec out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline OrdVec diff(const OrdVec& a, const OrdVec& b) {
  OrdVec out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool subset(const OrdVec& a, const OrdVec& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Elements of v that are < bound (all of v when bound is kappa).
inline OrdVec below(const OrdVec& v, Ord bound) {
  if (bound.isKappa()) return v;
  OrdVec out;
  for (uint32_t x : v) {
    if (x < bound.finite()) out.push_back(x);
  }
  return out;
}

}  // namespace ords

using Counters = std::map<std::string, int64_t>;

}  // namespace scf
