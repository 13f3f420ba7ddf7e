#pragma once

#include <optional>
#include <vector>

#include "koszul/polyring/ideal.hpp"

namespace koszul {

/// Ideals of R = S/I generated by linear forms, handled through their
/// preimages V + I in S.

/// Linear forms of I (the degree-1 slice).
LinearSpace linear_part(const Ideal& defining);

/// V + I_1: the canonical representative of (V) in R_1.
LinearSpace saturate_linear(const LinearSpace& v, const Ideal& defining);

/// dim of the image of V in R_1.
std::size_t dim_in_quotient(const LinearSpace& v, const Ideal& defining);

/// (V) = (W) as ideals of R.
bool same_in_quotient(const LinearSpace& v, const LinearSpace& w, const Ideal& defining);

/// (V + I) : x in S, by minimal generators.
Ideal quotient_colon(const Ideal& defining, const LinearSpace& v, const Polynomial& x);

/// If the ideal (which contains I) equals W + I for its linear part W,
/// returns W; otherwise nothing.
std::optional<LinearSpace> linear_generated(const Ideal& ideal, const Ideal& defining);

/// Ideal (V) + I in S.
Ideal extend(const LinearSpace& v, const Ideal& defining);

}  // namespace koszul
