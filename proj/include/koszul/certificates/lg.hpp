#pragma once

#include <vector>

#include "koszul/groebner/groebner.hpp"
#include "koszul/invariants/verdict.hpp"

namespace koszul {

inline constexpr std::size_t kDefaultLiftTruncation = 12;

/// A candidate lift: T/lift is meant to be G-quadratic with the forms a
/// regular sequence and T/(lift + forms) = R.
struct LgLift {
  Ideal lift;
  std::vector<Polynomial> forms;
  TermOrder order;
};

/// Claim "lg-quadratic" for R = S/r_ideal. CertifiedYes iff
///  (a) the lift has a quadratic reduced basis under the order,
///  (b) H_{T/lift}(z) (1-z)^s = H_R(z) through the truncation, and
///  (c) lift + (forms) = r_ideal T + (forms), S embedded in T by variable name.
/// Non-linear forms and a non-homogeneous lift are InputError.
Verdict verify_lg_lift(const Ideal& r_ideal, const LgLift& lift, std::size_t truncation = kDefaultLiftTruncation);

/// For quadrics q_1..q_m: T = S[y_1..y_m], lift (y_i^2 + q_i), forms y_i,
/// degrevlex with the y's highest so that the y_i^2 lead.
LgLift caviglia_lift(const Ideal& quadrics);

}  // namespace koszul
