#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "koszul/apolarity/apolar.hpp"
#include "koszul/certificates/filtration.hpp"
#include "koszul/certificates/flag.hpp"
#include "koszul/certificates/gquadratic.hpp"
#include "koszul/certificates/lg.hpp"
#include "koszul/errors.hpp"
#include "koszul/groebner/ideal_ops.hpp"
#include "koszul/invariants/hilbert.hpp"
#include "koszul/invariants/koszul.hpp"
#include "koszul/polyring/constructions.hpp"
#include "koszul/polyring/graded.hpp"
#include "koszul/polyring/points.hpp"
#include "koszul/workbench/corpus.hpp"
#include "koszul/workbench/format.hpp"
#include "koszul/workbench/report.hpp"

using namespace koszul;

namespace {

struct Options {
  std::string field;
  std::string order;
  std::vector<std::string> orders;
  std::size_t trunc = 12;
  std::size_t imax = kDefaultIMax;
  unsigned dmax = kDefaultDMax;
  std::uint64_t seed = 1;
  std::size_t attempts = kDefaultFlagAttempts;
  std::string json;

  std::string ideal_path, cert_path, lift_path, form_path, forms;
  std::optional<unsigned> cap;
  std::size_t changes = 8;
  std::size_t minors = 2;
  std::size_t n = 3, d = 2, s = 2, dim = 2, count = 4;
  std::int64_t bound = 5;
  bool probe = false, caviglia = false, long_running = false;
  std::vector<std::string> entries;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Field> field_option(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

Field field_or_q(const Options& o) { return field_option(o).value_or(Field::rationals()); }

ParsedIdeal load_ideal(const std::string& path, const Options& o) {
  if (path.empty()) throw InputError("an ideal file is required (--ideal)");
  try {
    return parse_ideal_file(read_file(path), field_option(o));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Polynomial load_form(const Options& o) {
  ParsedIdeal p = load_ideal(o.form_path, o);
  if (p.ideal.generators().size() != 1) throw InputError("the form file must hold exactly one polynomial");
  return p.ideal.generators().front();
}

TermOrder order_of(const std::string& text, const RingDescriptor& ring) {
  if (text.empty()) return TermOrder::degrevlex(ring.num_variables());
  return TermOrder::parse(text, ring.names());
}

Json strings_of(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json series_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.get_str());
  return out;
}

Json ideal_json(const Ideal& ideal) { return Json{{"ring", ideal.ring().header()}, {"generators", strings_of(ideal.generators())}}; }

std::string join(const Json& arr) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += ",";
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void print_verdicts(const Report& r) {
  for (const auto& v : r.verdicts) {
    std::cout << v.claim << ": " << to_string(v.outcome);
    if (!v.witness.empty()) std::cout << " witness=" << v.witness.dump();
    if (!v.note.empty()) std::cout << " (" << v.note << ")";
    std::cout << "\n";
  }
}

void print_table(const BettiTable& t) {
  std::cout << "betti (i: j=beta ...)\n";
  for (std::size_t i = 0; i <= t.i_max; ++i) {
    std::cout << "  " << i << ":";
    for (const auto& [ij, b] : t.entries)
      if (ij.first == i) std::cout << " " << ij.second << "=" << b << (t.flagged(i, ij.second) ? "*" : "");
    std::cout << (t.column_complete.at(i) ? "" : "  (column may be incomplete)") << "\n";
  }
}

Verdict flag_search_verdict(const QuotientRing& q, const Options& o, Report& r) {
  auto found = search_flag(q, o.seed, o.attempts);
  r.results["attempts_used"] = found.attempts_used;
  r.results["transcript"] = found.transcript;
  if (!found.flag) {
    Verdict v;
    v.claim = "groebner-flag";
    v.bounds = Json{{"attempts", o.attempts}, {"seed", o.seed}};
    v.note = "flag search exhausted";
    return v;
  }
  r.results["certificate"] = to_json(*found.flag);
  Verdict v = verify_flag(*found.flag);
  v.bounds = Json{{"attempts", o.attempts}, {"seed", o.seed}};
  return v;
}

void presentation_report(const Ideal& presentation, Report& r) {
  r.results["ideal"] = format_ideal_file(presentation);
  r.verdicts.push_back(quadratic_verdict(presentation));
}

// Runs one subcommand and fills the report. Human-readable output goes to stdout.
void run(const std::string& cmd, const Options& o, Report& r) {
  r.config = Json{{"field", o.field.empty() ? "from input" : o.field}};
  if (cmd == "gb") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    TermOrder order = order_of(o.order, p.ring);
    GroebnerBasis gb = buchberger(p.ideal, order, o.cap);
    r.config["order"] = order.to_string();
    if (o.cap) r.config["trunc"] = *o.cap;
    r.results["basis"] = strings_of(gb.elements());
    r.results["truncated"] = gb.truncated();
    std::cout << "basis (" << order.to_string() << (gb.truncated() ? ", truncated" : "") << "):\n";
    for (const auto& g : gb.elements()) std::cout << "  " << g.to_string() << "\n";
  } else if (cmd == "hilbert") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    HilbertSeries h = hilbert_series(QuotientRing(p.ideal), o.trunc);
    r.config["trunc"] = o.trunc;
    Json num = Json::array();
    for (const auto& c : h.numerator) num.push_back(c.get_str());
    r.results["coefficients"] = series_json(h.prefix);
    r.results["numerator"] = num;
    r.results["dim"] = h.dim;
    std::cout << "coefficients: " << join(r.results["coefficients"]) << "\n";
    std::cout << "numerator: " << join(num) << " over (1-z)^" << h.dim << "\n";
  } else if (cmd == "betti") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    BettiTable t = resolve_residue_field(QuotientRing(p.ideal), o.imax, o.dmax);
    r.config["imax"] = o.imax;
    r.config["dmax"] = o.dmax;
    r.results["betti"] = to_json(t);
    print_table(t);
  } else if (cmd == "koszul-probe") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    QuotientRing q(p.ideal);
    BettiTable t = resolve_residue_field(q, o.imax, o.dmax);
    r.config["imax"] = o.imax;
    r.config["dmax"] = o.dmax;
    r.config["trunc"] = o.trunc;
    r.results["betti"] = to_json(t);
    r.verdicts.push_back(koszul_probe(q, t));
    r.verdicts.push_back(series_koszul_test(q, o.trunc, &t));
  } else if (cmd == "filtration-verify") {
    r.verdicts.push_back(verify_filtration(filtration_from_json(Json::parse(read_file(o.cert_path)))));
  } else if (cmd == "filtration-monomial") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    KoszulFiltration f = monomial_filtration(p.ideal);
    r.results["certificate"] = to_json(f);
    r.verdicts.push_back(verify_filtration(f));
  } else if (cmd == "flag-verify") {
    r.verdicts.push_back(verify_flag(flag_from_json(Json::parse(read_file(o.cert_path)))));
  } else if (cmd == "flag-search") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    r.seeds["seed"] = o.seed;
    r.config["attempts"] = o.attempts;
    r.verdicts.push_back(flag_search_verdict(QuotientRing(p.ideal), o, r));
  } else if (cmd == "gquad-search") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    std::vector<TermOrder> orders;
    for (const auto& text : o.orders) orders.push_back(order_of(text, p.ring));
    if (orders.empty()) orders = {TermOrder::degrevlex(p.ring.num_variables()), TermOrder::lex(p.ring.num_variables())};
    Json names = Json::array();
    for (const auto& ord : orders) names.push_back(ord.to_string());
    r.config["orders"] = names;
    r.config["changes"] = o.changes;
    r.seeds["seed"] = o.seed;
    r.verdicts.push_back(gquadratic_search(p.ideal, orders, o.changes, o.seed));
  } else if (cmd == "lg-verify") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    LgLift lift = [&] {
      if (o.caviglia) return caviglia_lift(p.ideal);
      ParsedIdeal l = load_ideal(o.lift_path, o);
      std::vector<Polynomial> forms;
      std::stringstream ss(o.forms);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) forms.push_back(parse_polynomial(l.ring, item));
      return LgLift{l.ideal, forms, order_of(o.order, l.ring)};
    }();
    r.config["trunc"] = o.trunc;
    r.results["lift"] = ideal_json(lift.lift);
    r.verdicts.push_back(verify_lg_lift(p.ideal, lift, o.trunc));
  } else if (cmd == "apolar") {
    const Polynomial f = load_form(o);
    ApolarForm af(f);
    auto inv = inverse_system(af);
    Json h = Json::array();
    for (auto x : inv.h_vector) h.push_back(x);
    r.results["inverse_system"] = ideal_json(inv.ideal);
    r.results["h_vector"] = h;
    r.results["cone"] = is_cone(af);
    r.verdicts.push_back(quadratic_verdict(inv.ideal));
    std::cout << "I_f: " << inv.ideal.to_string() << "\nh-vector: " << join(h) << "\ncone: " << (is_cone(af) ? "yes" : "no") << "\n";
  } else if (cmd == "hessian") {
    const Polynomial f = load_form(o);
    PolyMatrix h = hessian(f);
    Json rows = Json::array();
    for (const auto& row : h) rows.push_back(strings_of(row));
    Ideal m = minors_ideal(h, o.minors);
    r.config["minors"] = o.minors;
    r.results["hessian"] = rows;
    r.results["minors_ideal"] = ideal_json(m);
    const std::size_t c = m.is_zero() ? 0 : (is_unit_ideal(m) ? f.ring().num_variables() + 1 : codim(m));
    if (!is_unit_ideal(m)) r.results["codim"] = c;
    std::cout << "minors ideal (" << o.minors << "x" << o.minors << "): " << m.to_string() << "\n";
    if (!is_unit_ideal(m)) std::cout << "codim: " << c << "\n";
  } else if (cmd == "theorem34") {
    r.verdicts.push_back(theorem34_check(load_form(o)));
  } else if (cmd == "toric") {
    ParsedIdeal p = load_ideal(o.ideal_path, o);
    std::vector<Monomial> monos;
    for (const auto& g : p.ideal.generators()) {
      if (g.terms().size() != 1) throw InputError("toric input must list monomials");
      monos.push_back(g.terms().front().monomial);
    }
    presentation_report(toric_ideal(monos, p.ring.num_variables(), p.ring.field()), r);
    std::cout << r.results["ideal"].get<std::string>();
  } else if (cmd == "pinched-veronese") {
    r.config["n"] = o.n;
    r.config["d"] = o.d;
    r.config["s"] = o.s;
    presentation_report(toric_ideal(pinched_veronese(o.n, static_cast<unsigned>(o.d), o.s), o.n, field_or_q(o)), r);
    std::cout << r.results["ideal"].get<std::string>();
  } else if (cmd == "points") {
    const Field field = field_or_q(o);
    auto pts = generic_points(field, o.dim, o.count, o.seed, o.bound);
    RingDescriptor ring(o.dim + 1, field);
    Ideal I = points_ideal(ring, pts);
    r.config["dim"] = o.dim;
    r.config["count"] = o.count;
    r.config["bound"] = o.bound;
    r.seeds["seed"] = o.seed;
    Json jp = Json::array();
    for (const auto& p : pts) {
      Json row = Json::array();
      for (const auto& c : p) row.push_back(c.to_string());
      jp.push_back(row);
    }
    r.results["points"] = jp;
    presentation_report(I, r);
    QuotientRing q(I);
    r.results["hilbert"] = series_json(hilbert_series(q, o.trunc).prefix);
    if (o.probe) {
      BettiTable t = resolve_residue_field(q, o.imax, o.dmax);
      r.results["betti"] = to_json(t);
      r.verdicts.push_back(series_koszul_test(q, o.trunc, &t));
      r.verdicts.push_back(koszul_probe(q, t));
    }
    std::cout << r.results["ideal"].get<std::string>();
  } else if (cmd == "corpus-run") {
    const Field field = field_or_q(o);
    Json runs = Json::array();
    bool all_green = true;
    for (const auto& entry : corpus()) {
      const bool named = std::find(o.entries.begin(), o.entries.end(), entry.name) != o.entries.end();
      if (!o.entries.empty() && !named) continue;
      if (o.entries.empty() && entry.long_running && !o.long_running) continue;
      EntryRun run = run_entry(entry, field);
      for (const auto& v : run.output.verdicts) r.verdicts.push_back(v);
      runs.push_back(to_json(run));
      r.timings[entry.name] = run.seconds;
      all_green = all_green && run.green;
      std::cout << entry.name << ": " << (run.green ? "green" : "RED") << "\n";
      for (const auto& c : run.checks)
        std::cout << "  " << c.expected.claim << " [" << to_string(c.expected.kind) << "] expected "
                  << to_string(c.expected.outcome) << ", got " << (c.verdict ? to_string(c.verdict->outcome) : "missing") << "\n";
    }
    for (const auto& name : o.entries) corpus_entry(name);  // unknown names are input errors
    r.results["entries"] = runs;
    r.results["green"] = all_green;
    return;
  } else {
    throw InputError("unknown command '" + cmd + "'");
  }
  print_verdicts(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for quadratic, G-quadratic, LG-quadratic and Koszul algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "coefficient field: q or fp:<p> (overrides the file header)");
    sub->add_option("--json", o.json, "write the JSON report to this path ('-' for stdout)");
  };
  auto with_ideal = [&](CLI::App* sub) { sub->add_option("--ideal", o.ideal_path, "ideal file")->required(); };
  auto with_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->envname("KOSZUL_SEED");
  };
  auto with_bounds = [&](CLI::App* sub) {
    sub->add_option("--imax", o.imax, "largest homological degree");
    sub->add_option("--dmax", o.dmax, "largest internal degree");
  };

  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs{
      {"gb", "reduced Groebner basis"},
      {"hilbert", "Hilbert series prefix and numerator"},
      {"betti", "truncated Betti table of the residue field"},
      {"koszul-probe", "bounded Koszul probe and series screen"},
      {"filtration-verify", "verify a Koszul filtration certificate"},
      {"filtration-monomial", "build and verify the variable-subset filtration"},
      {"flag-verify", "verify a Groebner flag certificate"},
      {"flag-search", "seeded search for a Groebner flag"},
      {"gquad-search", "search coordinates and orders for a quadratic Groebner basis"},
      {"lg-verify", "verify an LG-quadratic lift"},
      {"apolar", "inverse system of a form"},
      {"hessian", "Hessian matrix and its minor ideals"},
      {"theorem34", "Hessian 2-minor Koszul criterion for cubics in 3 or 4 variables"},
      {"toric", "presentation ideal of a monomial algebra"},
      {"pinched-veronese", "presentation ideal of PV(n,d,s)"},
      {"points", "ideal of seeded generic points"},
      {"corpus-run", "run corpus entries and check their expectations"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    const std::string name = s.name;
    if (name == "gb") {
      with_ideal(sub);
      sub->add_option("--order", o.order, "lex | degrevlex | revlex-perm:<perm>");
      sub->add_option("--trunc", o.cap, "degree cap");
    } else if (name == "hilbert") {
      with_ideal(sub);
      sub->add_option("--trunc", o.trunc, "last coefficient degree");
    } else if (name == "betti") {
      with_ideal(sub);
      with_bounds(sub);
    } else if (name == "koszul-probe") {
      with_ideal(sub);
      with_bounds(sub);
      sub->add_option("--trunc", o.trunc, "series truncation");
    } else if (name == "filtration-verify" || name == "flag-verify") {
      sub->add_option("--cert", o.cert_path, "certificate JSON")->required();
    } else if (name == "filtration-monomial") {
      with_ideal(sub);
    } else if (name == "flag-search") {
      with_ideal(sub);
      with_seed(sub);
      sub->add_option("--attempts", o.attempts, "attempt budget");
    } else if (name == "gquad-search") {
      with_ideal(sub);
      with_seed(sub);
      sub->add_option("--order", o.orders, "term order to try (repeatable)");
      sub->add_option("--changes", o.changes, "number of random coordinate changes");
    } else if (name == "lg-verify") {
      with_ideal(sub);
      sub->add_option("--lift", o.lift_path, "lift ideal file");
      sub->add_option("--forms", o.forms, "comma-separated linear forms of the lift ring");
      sub->add_option("--order", o.order, "term order on the lift ring");
      sub->add_option("--trunc", o.trunc, "Hilbert identity truncation");
      sub->add_flag("--caviglia", o.caviglia, "use the lift y_i^2 + q_i of the generators");
    } else if (name == "apolar" || name == "theorem34") {
      sub->add_option("--form", o.form_path, "file with one form")->required();
    } else if (name == "hessian") {
      sub->add_option("--form", o.form_path, "file with one form")->required();
      sub->add_option("--minors", o.minors, "minor size");
    } else if (name == "toric") {
      with_ideal(sub);
    } else if (name == "pinched-veronese") {
      sub->add_option("--n", o.n, "variables")->required();
      sub->add_option("--d", o.d, "degree")->required();
      sub->add_option("--s", o.s, "support bound")->required();
    } else if (name == "points") {
      sub->add_option("--dim", o.dim, "projective dimension");
      sub->add_option("--count", o.count, "number of points");
      sub->add_option("--bound", o.bound, "coordinate bound");
      sub->add_option("--trunc", o.trunc, "Hilbert truncation");
      sub->add_flag("--probe", o.probe, "also run the Koszul probe");
      with_bounds(sub);
      with_seed(sub);
    } else if (name == "corpus-run") {
      sub->add_option("--entry", o.entries, "entry name (repeatable; default all)");
      sub->add_flag("--long", o.long_running, "include long-running entries");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  std::vector<std::string> echo(argv, argv + argc);
  Report report;
  report.command = [&] {
    std::string out;
    for (std::size_t i = 1; i < echo.size(); ++i) out += (i > 1 ? " " : "") + echo[i];
    return out;
  }();
  try {
    const auto start = std::chrono::steady_clock::now();
    std::streambuf* saved = nullptr;
    std::ostringstream sink;
    if (o.json == "-") saved = std::cout.rdbuf(sink.rdbuf());
    run(cmd, o, report);
    if (saved) std::cout.rdbuf(saved);
    report.timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string doc = emit_report(report).dump(2);
    if (o.json == "-") {
      std::cout << doc << "\n";
    } else if (!o.json.empty()) {
      std::ofstream out(o.json);
      if (!out) throw InputError("cannot write '" + o.json + "'");
      out << doc << "\n";
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
