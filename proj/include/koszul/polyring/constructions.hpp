#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "koszul/polyring/ideal.hpp"

namespace koszul {

/// Seeded generator used for every "generic" object. mt19937_64 is fully
/// specified by the standard; draws go through uniform_int below so results
/// do not depend on the library's distribution implementations.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by rejection sampling.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
/// Uniform in {-bound..bound} \ {0}.
std::int64_t uniform_nonzero(Rng& rng, std::int64_t bound);

inline constexpr std::int64_t kDefaultCoefficientBound = 50;

/// Degree-d monomials in n variables with at most s nonzero exponents,
/// descending degrevlex.
std::vector<Monomial> pinched_veronese(std::size_t n, unsigned d, std::size_t s);

/// Dense form with every coefficient drawn from {-bound..bound} \ {0}, in
/// canonical monomial order.
Polynomial generic_form(const RingDescriptor& ring, unsigned degree, std::uint64_t seed,
                        std::int64_t bound = kDefaultCoefficientBound);
/// Several independent generic forms from one seeded stream.
std::vector<Polynomial> generic_forms(const RingDescriptor& ring, unsigned degree, std::size_t count, std::uint64_t seed,
                                      std::int64_t bound = kDefaultCoefficientBound);

/// det [[x1,x2,x3],[x2,x4,x5],[x3,x5,x6]] in K[x1..x6].
Polynomial symmetric_det_cubic(const Field& field = Field::rationals());

/// Projective point as a nonzero coordinate vector of length n+1.
using ProjectivePoint = Vector;

/// `count` points of P^n with integer coordinates in [-bound, bound], in
/// general linear position (every subset of at most n+1 points independent)
/// and pairwise distinct.
std::vector<ProjectivePoint> generic_points(const Field& field, std::size_t projective_dim, std::size_t count,
                                            std::uint64_t seed, std::int64_t bound = 5);

/// Same projective point (proportional coordinate vectors).
bool same_projective_point(const ProjectivePoint& a, const ProjectivePoint& b);

}  // namespace koszul
