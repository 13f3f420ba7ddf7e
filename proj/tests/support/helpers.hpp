#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/polyring/ideal.hpp"
#include "koszul/workbench/format.hpp"

namespace testing {

using namespace koszul;

/// Ring over `field` with comma-separated variable names.
inline RingDescriptor make_ring(const std::string& vars, const Field& field = Field::rationals()) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  return RingDescriptor(names.size(), field, names);
}

inline Polynomial poly(const RingDescriptor& ring, const std::string& text) { return parse_polynomial(ring, text); }

inline Ideal ideal(const RingDescriptor& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(poly(ring, g));
  return Ideal(ring, out);
}

inline std::vector<Polynomial> polys(const RingDescriptor& ring, std::initializer_list<const char*> gens) {
  return ideal(ring, gens).generators();
}

}  // namespace testing
