#pragma once

#include "scf/qforcing.hpp"

namespace scf {
namespace fixtures {

/// The running example: U = 40, W = 10, Lambda = {12,20,28,32,36},
/// S_0 = {20}, S_1 = {28}; models M0, M2, N (simple) and P (simple, cut 36).
Universe u1();

/// u1 plus an extra model M3 that is incomparable with the others; used for
/// inadequacy cases. Still passes the full axiom ledger.
Universe u2();

/// The documentation condition over u1: A = {N}, f(20) = [N∩20],
/// f(N∩20) = [], g(N∩20, 20) = {15}.
PCondition p1(const Universe& u, StationaryRef ref = StationaryRef::unionSet());

/// The side of the worked amalgam that lives inside N:
/// A = {M0}, f(20) = [M0∩20], f(M0∩20) = [].
PCondition amalgamW(const Universe& u, StationaryRef ref = StationaryRef::unionSet());

/// Hand-derived output of amalgCountable(amalgamW, p1, N).
PCondition amalgamExpected(const Universe& u, StationaryRef ref = StationaryRef::unionSet());

/// The documentation product condition: coordinate 0 carries p1 over S_0.
QCondition q1(const Universe& u);

}  // namespace fixtures
}  // namespace scf
