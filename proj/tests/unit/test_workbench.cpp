#include <cstdlib>
#include <fstream>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/certificates/filtration.hpp"
#include "koszul/errors.hpp"
#include "koszul/invariants/koszul.hpp"
#include "koszul/workbench/corpus.hpp"
#include "koszul/workbench/report.hpp"

using namespace testing;

namespace {

std::size_t parse_error_column(const std::string& text) {
  try {
    parse_ideal_file(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_ideal_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

Json random_json(std::mt19937_64& rng, int depth) {
  switch (rng() % (depth > 0 ? 6 : 4)) {
    case 0: return static_cast<std::int64_t>(rng() % 2001) - 1000;
    case 1: return std::string(1 + rng() % 6, static_cast<char>('a' + rng() % 26));
    case 2: return rng() % 2 == 0;
    case 3: return static_cast<double>(rng() % 100000) / 64.0;
    case 4: {
      Json a = Json::array();
      for (std::size_t k = rng() % 4; k > 0; --k) a.push_back(random_json(rng, depth - 1));
      return a;
    }
    default: {
      Json o = Json::object();
      for (std::size_t k = rng() % 4; k > 0; --k) o["k" + std::to_string(rng() % 50)] = random_json(rng, depth - 1);
      return o;
    }
  }
}

Json random_object(std::mt19937_64& rng) {
  Json o = Json::object();
  for (std::size_t k = rng() % 3; k > 0; --k) o["f" + std::to_string(rng() % 20)] = random_json(rng, 2);
  return o;
}

Report random_report(std::mt19937_64& rng) {
  Report r;
  if (rng() % 3 != 0) r.command = "cmd-" + std::to_string(rng() % 1000);
  r.config = random_object(rng);
  r.seeds = random_object(rng);
  r.results = random_object(rng);
  r.timings = random_object(rng);
  const Outcome outcomes[] = {Outcome::CertifiedYes, Outcome::CertifiedNo, Outcome::UndeterminedAtBound};
  for (std::size_t k = rng() % 4; k > 0; --k) {
    Verdict v;
    v.outcome = outcomes[rng() % 3];
    v.claim = "claim-" + std::to_string(rng() % 10);
    v.witness = random_object(rng);
    v.bounds = random_object(rng);
    if (rng() % 2) v.note = "note " + std::to_string(rng() % 100);
    r.verdicts.push_back(v);
  }
  return r;
}

}  // namespace

TEST_CASE("ideal file examples") {
  auto one = parse_ideal_file("ring n=1 field=q\nx1^2\n");
  CHECK(one.ring.num_variables() == 1);
  REQUIRE(one.ideal.generators().size() == 1);
  CHECK(one.ideal.generators()[0] == poly(one.ring, "x1^2"));

  auto exc = parse_ideal_file(
      "# exceptional algebra\n"
      "ring n=3 field=q vars=x,y,z\n"
      "x^2\n"
      "x*y\n"
      "\n"
      "y^2 + x*z   # sign variant +\n"
      "y*z\n");
  CHECK(exc.ideal.generators().size() == 4);
  for (const auto& g : exc.ideal.generators()) CHECK(g.degree() == 2);

  auto f7 = parse_ideal_file("ring n=2 field=fp:7\n3*x1*x2 - 4/1*x2^2\n");
  REQUIRE(f7.ideal.generators().size() == 1);
  const auto& terms = f7.ideal.generators()[0].terms();
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) CHECK(t.coeff == f7.ring.field().from_rational(mpq_class(3)));
}

TEST_CASE("ideal file errors are positioned") {
  CHECK_THROWS_AS(parse_ideal_file("ring n=2 field=q\nx1 + w\n"), ParseError);
  CHECK(parse_error_line("ring n=2 field=q\nx1 + w\n") == 2);
  CHECK(parse_error_column("ring n=2 field=q\nx1 + w\n") == 6);
  CHECK(parse_error_column("ring n=2 field=q\n3/0*x1\n") == 3);
  CHECK(parse_error_line("ring n=2 field=q\nx1\nx2 - x2\n") == 3);
  CHECK(parse_error_line("ring n=2 field=q\nx1 +\n") == 2);
  CHECK(parse_error_line("rink n=2 field=q\n") == 1);
  CHECK(parse_error_column("ring n=2 field=fp:8\nx1\n") == 16);
  CHECK(parse_error_line("ring n=2 field=fp:7\n1/7*x1\n") == 2);
}

TEST_CASE("ideal file round trip") {
  auto r = make_ring("x,y,z");
  Ideal I = ideal(r, {"x^2 - 3/4*y*z", "x*y", "z^3 + 2*x*y*z - y^3"});
  auto back = parse_ideal_file(format_ideal_file(I));
  CHECK(back.ring.names() == r.names());
  CHECK(back.ideal.generators() == I.generators());
  // A field override reinterprets the coefficients.
  auto mod5 = parse_ideal_file(format_ideal_file(I), Field::prime(5));
  CHECK(mod5.ring.field() == Field::prime(5));
  CHECK(mod5.ideal.generators().size() == 3);
}

TEST_CASE("empty report") {
  CHECK(emit_report(Report{}).dump() == R"({"schema":1,"verdicts":[]})");
  CHECK_THROWS_AS(parse_report(Json{{"schema", 2}, {"verdicts", Json::array()}}), InputError);
  CHECK_THROWS_AS(parse_report(Json{{"schema", 1}}), InputError);
}

TEST_CASE("report of the cubic-power probe") {
  auto r = make_ring("x");
  Report rep;
  rep.command = "koszul-probe";
  rep.verdicts.push_back(koszul_probe(QuotientRing(ideal(r, {"x^3"})), 4, 9));
  const Json doc = emit_report(rep);
  const Json& v = doc.at("verdicts").at(0);
  CHECK(v.at("outcome") == "CertifiedNo");
  CHECK(v.at("witness") == Json{{"i", 2}, {"j", 3}, {"beta", 1}});
  std::vector<std::string> keys;
  for (const auto& [k, _] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "command", "verdicts"});
}

TEST_CASE("report round trip") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    Report r = random_report(rng);
    CHECK(parse_report(Json::parse(emit_report(r).dump())) == r);
  }
}

TEST_CASE("corpus is green") {
  const auto& entries = corpus();
  for (std::size_t i = 1; i < entries.size(); ++i) CHECK(entries[i - 1].name < entries[i].name);
  CHECK_THROWS_AS(corpus_entry("no-such-entry"), InputError);
  for (const auto& entry : entries) {
    if (entry.long_running) continue;
    EntryRun run = run_entry(entry);
    INFO(entry.name);
    CHECK(run.green);
    for (const auto& c : run.checks) {
      INFO(c.expected.claim);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("long-running entry runs when named") {
  const CorpusEntry& pv = corpus_entry("pv-4-5-2");
  CHECK(pv.long_running);
  EntryRun run = run_entry(pv);
  CHECK(run.green);
  REQUIRE(run.output.verdicts.size() == 1);
  CHECK(run.output.verdicts[0].witness.at("degree") == 3);
}

TEST_CASE("corpus runs are deterministic") {
  for (const char* name : {"points-4-p2", "generic-cubic-3", "no-flag"}) {
    auto a = to_json(run_entry(corpus_entry(name)));
    auto b = to_json(run_entry(corpus_entry(name)));
    CHECK(a == b);
  }
}

TEST_CASE("a filtration never meets a negative dual series") {
  for (const auto& entry : corpus()) {
    if (entry.long_running) continue;
    EntryRun run = run_entry(entry);
    for (const auto& v : run.output.verdicts) {
      if (v.claim != "koszul-filtration" || v.outcome != Outcome::CertifiedYes) continue;
      INFO(entry.name);
      CHECK(series_koszul_test(QuotientRing(run.output.ideal), 10).outcome != Outcome::CertifiedNo);
    }
  }
}

TEST_CASE("Anick Poincare prefix matches the golden file") {
  std::ifstream in(std::string(KOSZUL_TEST_DATA_DIR) + "/anick_poincare.json");
  REQUIRE(in);
  const Json golden = Json::parse(in);
  QuotientRing q(anick_ideal(Field::rationals()));
  auto p = poincare_prefix(q, golden.at("i_max").get<std::size_t>(), golden.at("d_max").get<unsigned>());
  std::vector<long> got;
  for (const auto& c : p.series.coeffs()) got.push_back(c.get_num().get_si());
  CHECK(got == golden.at("poincare_prefix").get<std::vector<long>>());
  CHECK(p.complete == golden.at("complete").get<bool>());
}

TEST_CASE("exceptional sign variants") {
  for (int sign : {1, -1}) {
    Ideal I = exceptional_ideal(Field::rationals(), sign);
    auto h = hilbert_series(QuotientRing(I), 12);
    for (std::size_t d = 3; d <= 12; ++d) CHECK(h.prefix[d] == 1);
    CHECK(quadratic_verdict(I).outcome == Outcome::CertifiedYes);
  }
  CHECK_THROWS_AS(exceptional_ideal(Field::rationals(), 2), InputError);
}

#ifdef KOSZUL_CLI_PATH
namespace {

int cli(const std::string& args) {
  const std::string cmd = std::string(KOSZUL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(KOSZUL_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("command line exit codes") {
  const std::string exc = write_temp("exc.ideal", "ring n=3 field=q vars=x,y,z\nx^2\nx*y\ny^2+x*z\ny*z\n");
  const std::string bad = write_temp("bad.ideal", "ring n=2 field=q\nx1 + w\n");
  const std::string cubic = write_temp("cubic.ideal", "ring n=1 field=q vars=x\nx^3\n");
  const std::string out = std::string(KOSZUL_TEST_TMP_DIR) + "/hilbert.json";
  CHECK(cli("hilbert --ideal " + exc + " --trunc 8 --json " + out) == 0);
  std::ifstream in(out);
  REQUIRE(in);
  const Report rep = parse_report(Json::parse(in));
  std::vector<std::string> coeffs = rep.results.at("coefficients").get<std::vector<std::string>>();
  CHECK(coeffs == std::vector<std::string>{"1", "3", "2", "1", "1", "1", "1", "1", "1"});

  CHECK(cli("koszul-probe --ideal " + cubic) == 0);  // CertifiedNo still exits 0
  CHECK(cli("gb --ideal " + bad) == 1);
  CHECK(cli("gb --ideal /nonexistent/file") == 1);
  CHECK(cli("gb") == 1);
  CHECK(cli("frobnicate") == 1);
  CHECK(cli("--help") == 0);
  CHECK(cli("corpus-run --entry no-such-entry") == 1);
  CHECK(cli("corpus-run --entry caviglia-ci --field q") == 0);
}
#endif
