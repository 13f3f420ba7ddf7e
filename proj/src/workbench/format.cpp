#include "koszul/workbench/format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

class PolyParser {
 public:
  PolyParser(const RingDescriptor& ring, std::string_view text, std::size_t line)
      : ring_(ring), text_(text), line_(line) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      if (negative) term = -term;
      result += term;
      first = false;
    }
    if (result.is_zero()) fail(0, "empty polynomial (all terms cancel)");
    return result;
  }

 private:
  Polynomial parse_term() {
    FieldElem coeff = ring_.field().one();
    std::vector<unsigned> exps(ring_.num_variables(), 0);
    while (true) {
      skip_space();
      if (at_end()) fail("expected a coefficient or variable");
      if (is_digit(peek())) {
        coeff *= parse_number();
      } else if (is_ident_start(peek())) {
        std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = ring_.index_of(name);
        if (!idx) fail(start, "unknown variable '" + name + "'");
        unsigned e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = static_cast<unsigned>(parse_unsigned());
        }
        exps[*idx] += e;
        if (exps[*idx] > 255) fail(start, "exponent too large");
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial::monomial(ring_, Monomial(std::span<const unsigned>(exps)), coeff);
  }

  FieldElem parse_number() {
    std::size_t start = pos_;
    mpz_class num = parse_digits();
    mpz_class den = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t den_pos = pos_;
      den = parse_digits();
      if (den == 0) fail(den_pos, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    try {
      return ring_.field().from_rational(q);
    } catch (const InputError& e) {
      fail(start, e.what());
    }
  }

  mpz_class parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned long parse_unsigned() {
    std::size_t start = pos_;
    mpz_class v = parse_digits();
    if (v > 255) fail(start, "exponent too large");
    return v.get_ui();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail(pos_, what); }
  [[noreturn]] void fail(std::size_t pos, const std::string& what) const { throw ParseError(line_, pos + 1, what); }

  const RingDescriptor& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

RingDescriptor parse_header(std::string_view line, std::size_t line_no) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  };
  auto word = [&] {
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    return std::pair<std::size_t, std::string_view>(start, line.substr(start, pos - start));
  };
  skip();
  auto [kw_pos, kw] = word();
  if (kw != "ring") throw ParseError(line_no, kw_pos + 1, "expected header 'ring n=<int> field=<q|fp:p>'");
  std::optional<std::size_t> n;
  std::optional<Field> field;
  std::vector<std::string> names;
  bool have_vars = false;
  std::size_t vars_pos = 0;
  while (true) {
    skip();
    if (pos >= line.size()) break;
    auto [at, tok] = word();
    auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, at + 1, "expected key=value");
    std::string_view key = tok.substr(0, eq);
    std::string_view value = tok.substr(eq + 1);
    std::size_t value_col = at + eq + 2;
    if (key == "n") {
      std::size_t v = 0;
      auto res = std::from_chars(value.data(), value.data() + value.size(), v);
      if (res.ec != std::errc() || res.ptr != value.data() + value.size())
        throw ParseError(line_no, value_col, "n must be a positive integer");
      n = v;
    } else if (key == "field") {
      try {
        field = Field::parse(std::string(value));
      } catch (const InputError& e) {
        throw ParseError(line_no, value_col, e.what());
      }
    } else if (key == "vars") {
      have_vars = true;
      vars_pos = value_col;
      std::size_t start = 0;
      while (start <= value.size()) {
        auto comma = value.find(',', start);
        std::string_view name = value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        bool ok = !name.empty() && is_ident_start(name.front());
        for (char c : name) ok = ok && is_ident_char(c);
        if (!ok) throw ParseError(line_no, value_col + start, "bad variable name '" + std::string(name) + "'");
        names.emplace_back(name);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      throw ParseError(line_no, at + 1, "unknown header key '" + std::string(key) + "'");
    }
  }
  if (!n) throw ParseError(line_no, 1, "header is missing n=");
  if (!field) throw ParseError(line_no, 1, "header is missing field=");
  if (*n < 1 || *n > kMaxVariables) throw ParseError(line_no, 1, "n must be between 1 and 48");
  try {
    return RingDescriptor(*n, *field, names);
  } catch (const InputError& e) {
    throw ParseError(line_no, have_vars ? vars_pos : 1, e.what());
  }
}

}  // namespace

RingDescriptor parse_ring_header(std::string_view line) { return parse_header(line, 1); }

Polynomial parse_polynomial(const RingDescriptor& ring, std::string_view text, std::size_t line) {
  return PolyParser(ring, text, line).parse();
}

ParsedIdeal parse_ideal_file(std::string_view text, const std::optional<Field>& field) {
  std::optional<RingDescriptor> ring;
  std::vector<Polynomial> gens;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = strip_comment(line);
    if (!is_blank(body)) {
      if (!ring) {
        ring = parse_header(body, line_no);
        if (field) ring = ring->with_field(*field);
      } else {
        gens.push_back(parse_polynomial(*ring, body, line_no));
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!ring) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'ring' header");
  Ideal ideal(*ring, gens);
  return ParsedIdeal{*ring, std::move(ideal)};
}

std::string format_ideal_file(const Ideal& ideal) {
  std::ostringstream out;
  out << ideal.ring().header() << '\n';
  for (const auto& g : ideal.generators()) out << g.to_string() << '\n';
  return out.str();
}

}  // namespace koszul
