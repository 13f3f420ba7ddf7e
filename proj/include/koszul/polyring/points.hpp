#pragma once

#include <vector>

#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/ideal.hpp"

namespace koszul {

/// Linear forms vanishing at one projective point (n-1 of them).
Ideal point_prime(const RingDescriptor& ring, const ProjectivePoint& point);

/// Homogeneous vanishing ideal of distinct points, as the intersection of their
/// linear primes, by minimal generators. Throws InputError on repeated or zero
/// points.
Ideal points_ideal(const RingDescriptor& ring, const std::vector<ProjectivePoint>& points);

}  // namespace koszul
