#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/certificates/filtration.hpp"
#include "koszul/groebner/quotient.hpp"

namespace koszul {

/// V_i = span(forms[0..i)) in R_1, and (V_i) : (V_{i+1}) = (V_{colon_map[i]}).
struct GroebnerFlag {
  Ideal defining;
  std::vector<Polynomial> forms;
  std::vector<std::size_t> colon_map;
};

/// CertifiedYes (R is G-quadratic) iff the forms are a basis of R_1 and every
/// colon identity holds exactly.
Verdict verify_flag(const GroebnerFlag& flag);

/// The flag as a one-chain Koszul filtration.
KoszulFiltration flag_to_filtration(const GroebnerFlag& flag);

/// Linear forms with coefficients in {-2..2} (first nonzero coefficient
/// positive), ordered by support size then coefficient size, followed by
/// seeded forms with small rational coefficients.
std::vector<Polynomial> linear_form_pool(const RingDescriptor& ring, std::uint64_t seed, std::size_t rational_count = 64);

inline constexpr std::size_t kDefaultFlagAttempts = 500;

struct FlagSearchResult {
  std::optional<GroebnerFlag> flag;
  std::size_t attempts_used = 0;
  std::vector<std::string> transcript;
};

/// Seeded greedy search: each attempt picks V_1 from the pool and extends
/// with pool forms (in an attempt-specific seeded order) whose colon lands in
/// the chain or in a pending larger space that later forms must fill.
FlagSearchResult search_flag(const QuotientRing& q, std::uint64_t seed, std::size_t attempts = kDefaultFlagAttempts);

Json to_json(const GroebnerFlag& flag);
GroebnerFlag flag_from_json(const Json& j);

}  // namespace koszul
