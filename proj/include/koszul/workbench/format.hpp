#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "koszul/polyring/ideal.hpp"

namespace koszul {

struct ParsedIdeal {
  RingDescriptor ring;
  Ideal ideal;
};

/// Ideal file:
///   ring n=<int> field=<q|fp:p> [vars=<a,b,...>]
///   one polynomial per line, terms like 3/2*x1^2*x3 joined by + and -
/// '#' starts a comment; blank lines are skipped. Errors are ParseError with
/// the 1-based line and column. A given field replaces the header's.
ParsedIdeal parse_ideal_file(std::string_view text, const std::optional<Field>& field = std::nullopt);

/// One polynomial in an existing ring. `line` is only used for error positions.
Polynomial parse_polynomial(const RingDescriptor& ring, std::string_view text, std::size_t line = 1);

/// The header line alone ("ring n=... field=... vars=...").
RingDescriptor parse_ring_header(std::string_view line);

/// Inverse of parse_ideal_file.
std::string format_ideal_file(const Ideal& ideal);

}  // namespace koszul
