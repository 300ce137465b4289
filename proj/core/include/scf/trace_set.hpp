#pragma once

#include <string>

#include "scf/base.hpp"

namespace scf {

/// A finite set of ordinals below the universe size. Trace sets stand in for
/// the sets of the form M ∩ alpha that the condition calculus manipulates.
///
/// Stored sorted and duplicate-free. The part below the omega1 cut W of a
/// well-shaped trace set is an initial segment [0, delta); `deltaPrefix`
/// computes delta and `belowCutShaped` checks the shape.
class TraceSet {
 public:
  TraceSet() = default;
  explicit TraceSet(OrdVec elems) : e_(ords::normalized(std::move(elems))) {}

  const OrdVec& elems() const { return e_; }
  bool empty() const { return e_.empty(); }
  size_t size() const { return e_.size(); }
  bool contains(uint32_t x) const { return ords::contains(e_, x); }

  /// Largest element. Requires nonempty.
  uint32_t sup() const { return e_.back(); }

  /// Least gamma not in the initial run 0,1,2,... of the set.
  uint32_t deltaPrefix() const {
    uint32_t d = 0;
    for (uint32_t x : e_) {
      if (x != d) break;
      ++d;
    }
    return d;
  }

  /// The below-cut part equals [0, delta) for some delta <= cut.
  bool belowCutShaped(uint32_t cut) const {
    uint32_t d = deltaPrefix();
    for (uint32_t x : e_) {
      if (x >= cut) break;
      if (x >= d) return false;
    }
    return true;
  }

  TraceSet restrictBelow(Ord bound) const { return TraceSet(ords::below(e_, bound)); }
  TraceSet intersect(const TraceSet& o) const { return TraceSet(ords::intersect(e_, o.e_)); }
  bool subsetOf(const TraceSet& o) const { return ords::subset(e_, o.e_); }

  /// True when this set is the first k elements of `o` for some k >= 1.
  bool isPrefixOf(const TraceSet& o) const {
    if (e_.empty() || e_.size() > o.e_.size()) return false;
    return std::equal(e_.begin(), e_.end(), o.e_.begin());
  }

  /// The first k elements, 1 <= k <= size().
  TraceSet prefix(size_t k) const {
    return TraceSet(OrdVec(e_.begin(), e_.begin() + static_cast<long>(k)));
  }

  friend bool operator==(const TraceSet& a, const TraceSet& b) = default;
  friend auto operator<=>(const TraceSet& a, const TraceSet& b) = default;

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + "}";
  }

 private:
  OrdVec e_;
};

/// Chain order: by sup first, ties broken lexicographically. Valid chains
/// never contain two distinct sets with equal sup.
inline bool chainLess(const TraceSet& a, const TraceSet& b) {
  if (a.empty() || b.empty()) return a.size() < b.size();
  if (a.sup() != b.sup()) return a.sup() < b.sup();
  return a < b;
}

}  // namespace scf
