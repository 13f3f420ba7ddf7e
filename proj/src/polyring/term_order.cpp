#include "koszul/polyring/term_order.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {
namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_permutation(const std::vector<std::size_t>& priority) {
  if (priority.empty() || priority.size() > kMaxVariables) throw InputError("term order needs 1..48 variables");
  std::vector<bool> seen(priority.size(), false);
  for (std::size_t v : priority) {
    if (v >= priority.size() || seen[v]) throw InputError("term order priority list is not a permutation");
    seen[v] = true;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::size_t parse_variable(const std::string& token, const std::vector<std::string>& names) {
  auto it = std::find(names.begin(), names.end(), token);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), idx);
  if (ec != std::errc() || ptr != token.data() + token.size() || idx == 0 || idx > names.size()) {
    throw InputError("unknown variable '" + token + "' in term order");
  }
  return idx - 1;
}

std::vector<std::size_t> parse_priority(const std::string& text, const std::vector<std::string>& names) {
  std::vector<std::size_t> p;
  for (const auto& tok : split(text, ',')) p.push_back(parse_variable(tok, names));
  if (p.size() != names.size()) throw InputError("term order permutation must list every variable once");
  check_permutation(p);
  return p;
}

}  // namespace

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
  check_permutation(priority_);
  if (kind_ == Kind::BlockElimination && block_ > priority_.size()) throw InputError("elimination block too large");
}

TermOrder TermOrder::lex(std::size_t n) { return TermOrder(Kind::Lex, identity_priority(n), 0); }
TermOrder TermOrder::lex(std::vector<std::size_t> priority) { return TermOrder(Kind::Lex, std::move(priority), 0); }
TermOrder TermOrder::degrevlex(std::size_t n) { return TermOrder(Kind::DegRevLex, identity_priority(n), 0); }
TermOrder TermOrder::degrevlex(std::vector<std::size_t> priority) {
  return TermOrder(Kind::DegRevLex, std::move(priority), 0);
}
TermOrder TermOrder::block_elimination(std::size_t n, std::size_t block) {
  return TermOrder(Kind::BlockElimination, identity_priority(n), block);
}
TermOrder TermOrder::block_elimination(std::vector<std::size_t> priority, std::size_t block) {
  return TermOrder(Kind::BlockElimination, std::move(priority), block);
}

int TermOrder::compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const {
  unsigned da = 0, db = 0;
  if (begin == 0 && end == priority_.size()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = begin; i < end; ++i) {
      da += a[priority_[i]];
      db += b[priority_[i]];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    const std::size_t v = priority_[i];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      return compare_degrevlex(a, b, 0, priority_.size());
    case Kind::Lex:
      for (std::size_t v : priority_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    case Kind::BlockElimination: {
      int c = compare_degrevlex(a, b, 0, block_);
      if (c != 0) return c;
      return compare_degrevlex(a, b, block_, priority_.size());
    }
  }
  return 0;
}

std::string TermOrder::to_string() const {
  const bool identity = priority_ == identity_priority(priority_.size());
  std::string perm;
  for (std::size_t i = 0; i < priority_.size(); ++i) perm += (i ? "," : "") + std::to_string(priority_[i] + 1);
  switch (kind_) {
    case Kind::Lex:
      return identity ? "lex" : "lex-perm:" + perm;
    case Kind::DegRevLex:
      return identity ? "degrevlex" : "revlex-perm:" + perm;
    case Kind::BlockElimination:
      return "block:" + std::to_string(block_) + (identity ? "" : ":" + perm);
  }
  return {};
}

TermOrder TermOrder::parse(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  if (text == "lex") return lex(n);
  if (text == "degrevlex" || text == "revlex") return degrevlex(n);
  if (text.rfind("revlex-perm:", 0) == 0) return degrevlex(parse_priority(text.substr(12), names));
  if (text.rfind("lex-perm:", 0) == 0) return lex(parse_priority(text.substr(9), names));
  if (text.rfind("block:", 0) == 0) {
    auto parts = split(text.substr(6), ':');
    std::size_t k = 0;
    if (parts.empty()) throw InputError("malformed block order '" + text + "'");
    auto [ptr, ec] = std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), k);
    if (ec != std::errc() || ptr != parts[0].data() + parts[0].size()) throw InputError("malformed block order '" + text + "'");
    if (parts.size() == 1) return block_elimination(n, k);
    return block_elimination(parse_priority(parts[1], names), k);
  }
  throw InputError("unknown term order '" + text + "'");
}

}  // namespace koszul
