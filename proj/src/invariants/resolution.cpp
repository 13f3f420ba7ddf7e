#include "koszul/invariants/resolution.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

// Free module with generators in the given degrees; its degree-d piece has
// one block of size dim R_{d - a_g} per generator g.
struct FreeModule {
  std::vector<unsigned> degrees;

  std::size_t dim(const GradedQuotient& r, unsigned d) const {
    std::size_t total = 0;
    for (unsigned a : degrees)
      if (a <= d) total += r.dim(d - a);
    return total;
  }
  std::size_t offset(const GradedQuotient& r, unsigned d, std::size_t g) const {
    std::size_t total = 0;
    for (std::size_t h = 0; h < g; ++h)
      if (degrees[h] <= d) total += r.dim(d - degrees[h]);
    return total;
  }
};

// x_k * v for v in F_d, landing in F_{d+1}.
Vector times_variable(const GradedQuotient& r, const FreeModule& f, std::size_t k, unsigned d, const Vector& v) {
  Vector out(f.dim(r, d + 1), r.field().zero());
  std::size_t in_off = 0, out_off = 0;
  for (unsigned a : f.degrees) {
    if (a > d + 1) continue;
    if (a <= d) {
      const unsigned e = d - a;
      for (std::size_t i = 0; i < r.dim(e); ++i) {
        const FieldElem& c = v[in_off + i];
        if (c.is_zero()) continue;
        for (const auto& [idx, coeff] : r.multiply_variable(k, e, i)) out[out_off + idx] += c * coeff;
      }
      in_off += r.dim(e);
    }
    out_off += r.dim(d + 1 - a);
  }
  return out;
}

struct Generator {
  unsigned degree;
  Vector image;  // in the previous module at this degree
};

class Resolver {
 public:
  Resolver(const QuotientRing& q, std::size_t i_max, unsigned d_max)
      : r_(q, d_max), i_max_(i_max), d_max_(d_max) {
    if (i_max < 1) throw InputError("i_max must be at least 1");
    if (d_max < i_max) throw InputError("d_max must be at least i_max");
    // Artinian top degree, if visible within the bound.
    for (unsigned d = 0; d <= d_max; ++d)
      if (r_.dim(d) == 0) {
        top_ = d == 0 ? 0 : d - 1;
        artinian_ = true;
        break;
      }
  }

  BettiTable run(BettiTable::Subject subject, const std::vector<Vector>& first_images) {
    BettiTable table;
    table.subject = subject;
    table.i_max = i_max_;
    table.d_max = d_max_;
    table.entries[{0, 0}] = 1;
    table.column_complete.assign(i_max_ + 1, false);
    table.column_complete[0] = true;

    FreeModule prev{{0}};
    std::vector<Generator> gens;
    for (const auto& v : first_images) gens.push_back({1, v});
    table.column_complete[1] = true;

    for (std::size_t i = 1; i <= i_max_; ++i) {
      FreeModule cur;
      for (const auto& g : gens) {
        cur.degrees.push_back(g.degree);
        ++table.entries[{i, g.degree}];
      }
      if (i > 1) {
        // Column i is complete when column i-1 was and its kernel degrees are exhausted.
        bool done = table.column_complete[i - 1] && (prev.degrees.empty() ||
                                                     (artinian_ && max_degree(prev) + top_ <= d_max_));
        table.column_complete[i] = done;
      }
      if (i == i_max_) break;
      std::vector<Generator> next = kernel_generators(prev, cur, gens);
      prev = std::move(cur);
      gens = std::move(next);
    }
    return table;
  }

  const GradedQuotient& graded() const { return r_; }

 private:
  static unsigned max_degree(const FreeModule& f) { return *std::max_element(f.degrees.begin(), f.degrees.end()); }

  // Minimal generators of ker(cur -> prev) in degrees <= d_max.
  std::vector<Generator> kernel_generators(const FreeModule& prev, const FreeModule& cur, const std::vector<Generator>& gens) {
    std::vector<Generator> out;
    if (cur.degrees.empty()) return out;
    const std::size_t n = r_.num_variables();
    const unsigned start = *std::min_element(cur.degrees.begin(), cur.degrees.end());
    // columns[g][m]: image of m * e_g in prev, for the current degree.
    std::vector<std::vector<Vector>> columns(gens.size());
    std::vector<Vector> kernel_prev;
    for (unsigned d = start; d <= d_max_; ++d) {
      std::vector<std::vector<Vector>> next_columns(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const unsigned a = gens[g].degree;
        if (a > d) continue;
        if (a == d) {
          next_columns[g].push_back(gens[g].image);
          continue;
        }
        const unsigned e = d - a;
        for (const auto& m : r_.basis(e)) {
          std::size_t k = n;
          while (m[k - 1] == 0) --k;
          --k;
          Monomial lower = m.quotient(Monomial::variable(k));
          std::size_t idx = *r_.index(e - 1, lower);
          next_columns[g].push_back(times_variable(r_, prev, k, d - 1, columns[g][idx]));
        }
      }
      columns = std::move(next_columns);

      const std::size_t rows = prev.dim(r_, d);
      const std::size_t cols = cur.dim(r_, d);
      std::vector<Vector> kernel;
      if (cols > 0) {
        DenseMatrix m(r_.field(), rows, cols);
        std::size_t c = 0;
        for (const auto& block : columns)
          for (const auto& col : block) {
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = col[r];
            ++c;
          }
        kernel = kernel_basis(m);
      }
      EchelonBasis lower(r_.field(), cols);
      for (const auto& v : kernel_prev)
        for (std::size_t k = 0; k < n; ++k) lower.insert(times_variable(r_, cur, k, d - 1, v));
      for (const auto& v : kernel)
        if (lower.insert(v)) out.push_back({d, v});
      kernel_prev = std::move(kernel);
    }
    return out;
  }

  GradedQuotient r_;
  std::size_t i_max_;
  unsigned d_max_;
  bool artinian_ = false;
  unsigned top_ = 0;
};

}  // namespace

std::size_t BettiTable::at(std::size_t i, unsigned j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t sum = 0;
  for (const auto& [key, value] : entries)
    if (key.first == i) sum += value;
  return sum;
}

bool BettiTable::linear() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.first.first == e.first.second; });
}

Json to_json(const BettiTable& t) {
  Json j;
  j["subject"] = t.subject == BettiTable::Subject::ResidueField ? "residue-field" : "cyclic-quotient";
  j["i_max"] = t.i_max;
  j["d_max"] = t.d_max;
  Json triples = Json::array();
  for (const auto& [key, value] : t.entries) triples.push_back(Json::array({key.first, key.second, value}));
  j["entries"] = triples;
  Json complete = Json::array();
  for (bool b : t.column_complete) complete.push_back(b);
  j["column_complete"] = complete;
  return j;
}

BettiTable betti_from_json(const Json& j) {
  try {
    BettiTable t;
    const std::string subject = j.at("subject").get<std::string>();
    if (subject == "residue-field")
      t.subject = BettiTable::Subject::ResidueField;
    else if (subject == "cyclic-quotient")
      t.subject = BettiTable::Subject::CyclicQuotient;
    else
      throw InputError("unknown Betti table subject '" + subject + "'");
    t.i_max = j.at("i_max").get<std::size_t>();
    t.d_max = j.at("d_max").get<unsigned>();
    for (const auto& e : j.at("entries"))
      t.entries[{e.at(0).get<std::size_t>(), e.at(1).get<unsigned>()}] = e.at(2).get<std::size_t>();
    for (const auto& b : j.at("column_complete")) t.column_complete.push_back(b.get<bool>());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed Betti table: ") + e.what());
  }
}

BettiTable resolve_residue_field(const QuotientRing& q, std::size_t i_max, unsigned d_max) {
  Resolver res(q, i_max, d_max);
  const GradedQuotient& r = res.graded();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < r.dim(1); ++i) {
    Vector v(r.dim(1), r.field().zero());
    v[i] = r.field().one();
    images.push_back(std::move(v));
  }
  return res.run(BettiTable::Subject::ResidueField, images);
}

BettiTable resolve_cyclic(const QuotientRing& q, const Ideal& linear_ideal, std::size_t i_max, unsigned d_max) {
  if (!(linear_ideal.ring() == q.ring())) throw InputError("ideal and quotient live in different rings");
  for (const auto& g : linear_ideal.generators())
    if (g.degree() != 1 || !g.is_homogeneous()) throw InputError("cyclic resolution needs an ideal generated by linear forms");
  Resolver res(q, i_max, d_max);
  const GradedQuotient& r = res.graded();
  std::vector<Vector> coords;
  for (const auto& g : linear_ideal.generators()) coords.push_back(r.coordinates(g, 1));
  std::vector<Vector> images;
  if (!coords.empty()) {
    auto e = rref(DenseMatrix::from_rows(r.field(), r.dim(1), coords));
    for (std::size_t i = 0; i < e.rank; ++i) images.push_back(e.reduced.row_vector(i));
  }
  return res.run(BettiTable::Subject::CyclicQuotient, images);
}

}  // namespace koszul
