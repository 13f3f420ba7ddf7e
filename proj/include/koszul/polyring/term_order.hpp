#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "koszul/polyring/monomial.hpp"

namespace koszul {

/// Monomial order on n variables. The priority list names the variables from
/// largest to smallest; the default is x1 > x2 > ... > xn.
///
/// BlockElimination(k) compares by degrevlex on the first k variables of the
/// priority list, breaking ties by degrevlex on the rest. Any monomial
/// involving the first block is larger than every monomial free of it, which
/// is what elimination needs.
class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, BlockElimination };

  static TermOrder lex(std::size_t n);
  static TermOrder lex(std::vector<std::size_t> priority);
  static TermOrder degrevlex(std::size_t n);
  static TermOrder degrevlex(std::vector<std::size_t> priority);
  static TermOrder block_elimination(std::size_t n, std::size_t block);
  static TermOrder block_elimination(std::vector<std::size_t> priority, std::size_t block);

  Kind kind() const { return kind_; }
  std::size_t num_variables() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t block_size() const { return block_; }
  bool is_graded() const { return kind_ == Kind::DegRevLex; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// "lex", "degrevlex", "revlex-perm:3,1,2" (1-based priority list) or
  /// "block:k" / "block:k:perm".
  std::string to_string() const;
  /// Inverse of to_string. Variable names may appear in place of indices.
  static TermOrder parse(const std::string& text, const std::vector<std::string>& names);

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block);
  int compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const;

  Kind kind_ = Kind::DegRevLex;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
};

}  // namespace koszul
