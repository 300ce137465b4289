#pragma once

#include <optional>

#include "scf/adequacy.hpp"

namespace scf {

/// Which stationary set a condition ranges over: the union of all S_i for the
/// single forcing, or a single coordinate S_i inside the product.
struct StationaryRef {
  bool isUnion = true;
  uint32_t coord = 0;

  static StationaryRef unionSet() { return StationaryRef{true, 0}; }
  static StationaryRef coordSet(uint32_t i) { return StationaryRef{false, i}; }

  friend bool operator==(const StationaryRef&, const StationaryRef&) = default;

  std::string str() const { return isUnion ? "union" : std::to_string(coord); }
};

/// The realized stationary set for a reference.
OrdVec stationarySet(const Universe& u, const StationaryRef& ref);

/// Provenance note for a set-type domain element: t = trace(model) ∩ alpha.
/// Advisory data; element equality ignores it and validation re-derives it.
struct Witness {
  ModelId model;
  Ord alpha;
};

/// A domain element of the f component: an ordinal of S, or a trace set.
class DomainElement {
 public:
  enum class Kind { OrdS, Set };

  static DomainElement ordS(uint32_t alpha) {
    DomainElement e;
    e.kind_ = Kind::OrdS;
    e.alpha_ = alpha;
    return e;
  }
  static DomainElement setElem(TraceSet t, std::optional<Witness> w = std::nullopt) {
    DomainElement e;
    e.kind_ = Kind::Set;
    e.set_ = std::move(t);
    e.wit_ = std::move(w);
    return e;
  }

  Kind kind() const { return kind_; }
  bool isOrd() const { return kind_ == Kind::OrdS; }
  uint32_t alpha() const { return alpha_; }
  const TraceSet& set() const { return set_; }
  const std::optional<Witness>& witness() const { return wit_; }
  void setWitness(std::optional<Witness> w) { wit_ = std::move(w); }

  /// Canonical order: ordinals first ascending, then sets lexicographically.
  friend bool operator<(const DomainElement& a, const DomainElement& b) {
    if (a.kind_ != b.kind_) return a.kind_ == Kind::OrdS;
    if (a.kind_ == Kind::OrdS) return a.alpha_ < b.alpha_;
    return a.set_ < b.set_;
  }
  friend bool operator==(const DomainElement& a, const DomainElement& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == Kind::OrdS ? a.alpha_ == b.alpha_ : a.set_ == b.set_;
  }

  std::string str() const {
    return kind_ == Kind::OrdS ? std::to_string(alpha_) : set_.str();
  }

 private:
  Kind kind_ = Kind::OrdS;
  uint32_t alpha_ = 0;
  TraceSet set_;
  std::optional<Witness> wit_;
};

using Chain = std::vector<TraceSet>;  // sorted strictly by sup

struct GKey {
  TraceSet k;
  DomainElement x;

  friend bool operator<(const GKey& a, const GKey& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.x < b.x;
  }
  friend bool operator==(const GKey& a, const GKey& b) = default;
};

/// A condition of the single forcing: the chain assignment f, the gap
/// annotations g (absent pairs denote the empty set; empty values are never
/// stored), and the adequate side-condition set A.
struct PCondition {
  StationaryRef s = StationaryRef::unionSet();
  std::map<DomainElement, Chain> f;
  std::map<GKey, OrdVec> g;
  std::set<ModelId> a;

  bool hasElem(const DomainElement& x) const { return f.count(x) != 0; }
  bool hasSet(const TraceSet& t) const { return f.count(DomainElement::setElem(t)) != 0; }

  const Chain& chainAt(const DomainElement& x) const;

  /// g value for (K, x); empty when the pair is absent.
  OrdVec gAt(const TraceSet& k, const DomainElement& x) const;

  /// The S-ordinals in the domain.
  OrdVec domOrds() const;
  /// The trace sets in the domain.
  std::vector<TraceSet> domSets() const;

  bool isMax() const { return f.empty() && g.empty() && a.empty(); }

  /// Drops empty g values, sorts chains in chain order, and recomputes
  /// canonical witnesses for set elements against this condition's own data.
  void normalize(const Universe& u);

  /// Structural equality of the canonical forms (witnesses included).
  friend bool operator==(const PCondition& p, const PCondition& q);
};

struct ClauseViolation {
  std::string clause;  // "C1".."C7" for conditions, "a".."d" for order checks
  std::string witness;
};

}  // namespace scf
