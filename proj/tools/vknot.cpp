// Command-line front end: eval, check, family, equiv, unknot, replay.
//
// Exit codes: 0 pass/found, 1 checked and negative, 2 usage or parse
// error, 3 resource cap.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vknot/braid.hpp"
#include "vknot/diagram_sum.hpp"
#include "vknot/finite_type.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/moves.hpp"
#include "vknot/polynomials.hpp"
#include "vknot/random.hpp"
#include "vknot/search.hpp"
#include "vknot/witnesses.hpp"

using namespace vknot;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Collects one record per check; prints the table then the records.
struct Report {
  std::string command;
  std::uint64_t seed;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> records;
  bool pass = true;

  void add(const std::string& check, bool ok, const std::string& detail,
           const std::vector<std::pair<std::string, std::string>>& fields) {
    pass = pass && ok;
    rows.push_back({check, ok ? "pass" : "FAIL", detail});
    std::string r = "record command=" + command + " check=" + check + " verdict=" + (ok ? "pass" : "fail");
    for (const auto& [k, v] : fields) r += " " + k + "=" + v;
    records.push_back(r);
  }

  int emit() const {
    std::cout << "# vknot " << command << " seed=" << seed << "\n";
    std::size_t w0 = 5, w2 = 6;
    for (const auto& r : rows) w0 = std::max(w0, r[0].size());
    for (const auto& r : rows) w2 = std::max(w2, r[2].size());
    std::cout << std::left << std::setw(static_cast<int>(w0)) << "check" << "  verdict  detail\n";
    for (const auto& r : rows)
      std::cout << std::left << std::setw(static_cast<int>(w0)) << r[0] << "  " << std::setw(7) << r[1] << "  " << r[2]
                << "\n";
    for (const auto& r : records) std::cout << r << "\n";
    return pass ? 0 : kExitNegative;
  }
};

std::string sites_text(const std::vector<Triangle>& sites) {
  std::string out;
  for (const auto& t : sites) out += (out.empty() ? "" : ",") + std::to_string(t.position);
  return out;
}

std::string chords_text(const std::vector<int>& chords) {
  std::string out;
  for (int c : chords) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

void add_order(Report& rep, const std::string& check, const OrderVerdict& v, bool expect_pass) {
  std::string detail = std::to_string(v.sums_checked) + " sums, " + std::to_string(v.diagrams_skipped) + " skipped";
  std::vector<std::pair<std::string, std::string>> fields{{"sums", std::to_string(v.sums_checked)},
                                                          {"skipped", std::to_string(v.diagrams_skipped)}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    detail += "; counterexample " + to_string(c.diagram) + " value " + c.value;
    fields.push_back({"counterexample", "\"" + to_string(c.diagram) + "\""});
    if (!c.chords.empty()) fields.push_back({"chords", chords_text(c.chords)});
    if (!c.sites.empty()) fields.push_back({"sites", sites_text(c.sites)});
    fields.push_back({"value", "\"" + c.value + "\""});
  }
  rep.add(check, v.pass == expect_pass, detail, fields);
}

// Random formula with max term size exactly n0.
DiagramSum formula_of_degree(Rng& rng, int n0) {
  DiagramSum a;
  while (a.max_chords() != n0) {
    a = random_formula(rng, 3, n0, DiagramKind::based);
    a.add(random_diagram(rng, n0, DiagramKind::based), 1 + static_cast<int>(rng() % 3));
  }
  return a;
}

int suite_prop_gpv(Report& rep, std::uint64_t seed, int trials) {
  Rng rng(seed);
  for (int n0 = 1; n0 <= 3; ++n0) {
    const DiagramSum a = formula_of_degree(rng, n0);
    Sampler s;
    s.trials = trials;
    s.max_chords = 8;
    s.exhaustive_up_to = 8;
    s.seed = seed + n0;
    add_order(rep, "gpv-order<=" + std::to_string(n0) + "[n0=" + std::to_string(n0) + "]",
              check_gpv_order_at_most(gauss_formula_functional(a), n0, s), true);
  }
  return rep.emit();
}

int suite_thm2(Report& rep, std::uint64_t seed, int trials, int n) {
  if (n < 0 || n > 1) throw UsageError("thm2 supports --n 0 or 1");
  Sampler s;
  s.trials = trials;
  s.max_chords = 7;
  s.exhaustive_up_to = 7;
  s.seed = seed;
  // built-in invariants with GPV order at most 2n+1
  add_order(rep, "constant:f-order<=" + std::to_string(n), check_f_order_at_most(constant_functional(1), n, s), true);
  if (n == 1) {
    Sampler g = s;
    g.max_chords = 6;
    add_order(rep, "c2:gpv-order<=2", check_gpv_order_at_most(c2_functional(), 2, g), true);
    add_order(rep, "c2:gpv-order<=1-refuted", check_gpv_order_at_most(c2_functional(), 1, g), false);
    add_order(rep, "c2:f-order<=1", check_f_order_at_most(c2_functional(), 1, s), true);
  }
  return rep.emit();
}

int suite_lemma(Report& rep, std::uint64_t seed, int trials) {
  Rng rng(seed);
  int confirmed = 0;
  for (int i = 0; i < trials; ++i) {
    GaussDiagram d;
    std::vector<Triangle> sites;
    while (sites.empty()) {
      d = random_diagram(rng, 2, 6, DiagramKind::based);
      sites = forbidden_sites(d);
    }
    const Triangle t = sites[rng() % sites.size()];
    const auto r = verify_lemma_f2gpv(d, t);
    confirmed += r.all();
    rep.records.push_back("record command=" + rep.command + " check=site diagram=\"" + to_string(d) +
                          "\" position=" + std::to_string(t.position) + " A1=" + std::to_string(r.confirmed[0]) +
                          " A2=" + std::to_string(r.confirmed[1]) + " A12=" + std::to_string(r.confirmed[2]));
  }
  rep.add("lemma-f2gpv", confirmed == trials, std::to_string(confirmed) + "/" + std::to_string(trials) + " confirmed",
          {{"confirmed", std::to_string(confirmed)}, {"trials", std::to_string(trials)}});
  return rep.emit();
}

template <class V>
void add_similarity(Report& rep, const std::string& check, const SimilarityVerdict<V>& v) {
  std::string values;
  for (const auto& x : v.image_values) values += (values.empty() ? "" : ",") + format_value(x);
  rep.add(check, v.pass, "base " + format_value(v.base_value) + ", images " + values,
          {{"base", format_value(v.base_value)}, {"images", values}});
}

int suite_similarity(Report& rep) {
  add_similarity(rep, "gpv3-commutator:c2", verify_similarity_consequence(commutator_witness(3), c2_functional(), 2));
  add_similarity(rep, "f2-stored:c2", verify_similarity_consequence(stored_f2_witness(), c2_functional(), 1));
  return rep.emit();
}

int suite_invariance(Report& rep, std::uint64_t seed, int trials, const std::vector<std::string>& names) {
  std::vector<GaussDiagram> corpus{as_based(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")),
                                   as_based(parse_gauss_code("O1+ U2+ U1+ O2+"))};
  Rng rng(seed);
  for (int i = 0; i < 8; ++i) corpus.push_back(random_diagram(rng, 1, 5, DiagramKind::based));
  for (const auto& name : names) {
    bool ok = true;
    std::size_t moves = 0;
    std::string detail;
    std::vector<std::pair<std::string, std::string>> fields;
    auto run = [&](const auto& functional) {
      for (std::size_t i = 0; i < corpus.size() && ok; ++i) {
        FuzzOptions o;
        o.trials = trials;
        o.seed = seed + i;
        auto v = invariance_fuzz(functional, corpus[i], o);
        moves += v.moves;
        if (!v.pass) {
          ok = false;
          detail = "violation on " + to_string(corpus[i]) + ": " + format_value(v.expected) + " -> " + format_value(v.found);
          std::string trace = format_trace(*v.violation);
          for (auto& ch : trace)
            if (ch == '\n') ch = ';';
          fields.push_back({"diagram", "\"" + to_string(corpus[i]) + "\""});
          fields.push_back({"trace", "\"" + trace + "\""});
        }
      }
    };
    if (name == "f") run(f_functional());
    else if (name == "bracket") run(bracket_functional());
    else if (name == "c2") run(c2_functional());
    else if (name == "writhe") run(writhe_functional());
    else throw UsageError("unknown invariant '" + name + "'");
    if (ok) detail = std::to_string(moves) + " moves";
    fields.insert(fields.begin(), {"moves", std::to_string(moves)});
    rep.add("invariance:" + name, ok, detail, fields);
  }
  return rep.emit();
}

GaussDiagram input_diagram(const std::string& code, const std::string& file) {
  if (!file.empty()) return parse_gauss_code(read_file(file));
  return parse_gauss_code(code);
}

// Drops report headers and record lines so saved unknot/equiv output replays as is.
std::string trace_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.starts_with("#") && !line.starts_with("record ")) out += line + "\n";
  return out;
}

int print_trace_result(const std::optional<MoveTrace>& t, const std::string& command, std::uint64_t seed) {
  std::cout << "# vknot " << command << " seed=" << seed << "\n";
  if (!t) {
    std::cout << "not found within budget\n";
    std::cout << "record command=" << command << " verdict=not-found\n";
    return kExitNegative;
  }
  std::cout << format_trace(*t);
  std::cout << "record command=" << command << " verdict=found steps=" << t->size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vknot: Gauss diagrams, finite type checks and polynomial invariants of virtual knots"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for all randomness")->capture_default_str();

  std::string code, file, braid, invariant, closure = "knot";
  auto* eval = app.add_subcommand("eval", "Evaluate an invariant");
  eval->add_option("code", code, "Gauss code, e.g. \"O1+ U1+\"");
  eval->add_option("--file", file, "Read the Gauss code from a file");
  eval->add_option("--braid", braid, "2-strand braid word over s, S, v");
  eval->add_option("--closure", closure, "Braid closure: plain or knot")->check(CLI::IsMember({"plain", "knot"}));
  eval->add_option("--invariant", invariant, "bracket, f, c2, writhe or gauss-formula:<file>")->required();

  std::string suite;
  int trials = -1, n = 1;
  std::vector<std::string> invariants{"f", "c2"};
  auto* check = app.add_subcommand("check", "Run a check suite");
  check->add_option("suite", suite, "prop-gpv, thm2, lemma-f2gpv, similarity or invariance")
      ->required()
      ->check(CLI::IsMember({"prop-gpv", "thm2", "lemma-f2gpv", "similarity", "invariance"}));
  check->add_option("--trials", trials, "Diagrams (or sites) to sample");
  check->add_option("--n", n, "Order parameter for thm2")->capture_default_str();
  check->add_option("--invariant", invariants, "Invariants for the invariance suite")->delimiter(',');

  std::string base = "@";
  int lmax = 3;
  auto* family = app.add_subcommand("family", "f-polynomials of K # K_n^l for l = 0..lmax");
  family->add_option("--base", base, "Long base knot K")->capture_default_str();
  family->add_option("--n", n, "Commutator depth")->capture_default_str();
  family->add_option("--lmax", lmax, "Largest twist count")->capture_default_str();

  std::string code2;
  SearchBudget budget;
  auto* equiv = app.add_subcommand("equiv", "Search for a Reidemeister path between two diagrams");
  equiv->add_option("code1", code, "First Gauss code")->required();
  equiv->add_option("code2", code2, "Second Gauss code")->required();
  std::string moves = "reid+forbidden";
  auto* unknot = app.add_subcommand("unknot", "Search for a path to the empty diagram");
  unknot->add_option("code", code, "Gauss code");
  unknot->add_option("--file", file, "Read the Gauss code from a file");
  unknot->add_option("--moves", moves, "reid or reid+forbidden")->check(CLI::IsMember({"reid", "reid+forbidden"}));
  for (auto* sub : {equiv, unknot}) {
    sub->add_option("--depth", budget.max_depth, "Search depth")->capture_default_str();
    sub->add_option("--max-states", budget.max_states, "State budget")->capture_default_str();
    sub->add_option("--max-chords", budget.max_chords, "Chord bound for insertions (-1: inputs + 2)");
  }

  auto* replay = app.add_subcommand("replay", "Check that a trace file replays exactly");
  replay->add_option("file", file, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*eval) {
      if (!braid.empty()) {
        const BraidWord w = parse_braid(braid);
        const ClosureMode mode = closure == "plain" ? ClosureMode::plain : ClosureMode::knot;
        if (invariant == "bracket") std::cout << kauffman_bracket(w, mode).to_string() << "\n";
        else if (invariant == "f") std::cout << f_polynomial(w, mode).to_string() << "\n";
        else code = to_string(cut_open(w, mode));
      }
      if (braid.empty() || (invariant != "bracket" && invariant != "f")) {
        const GaussDiagram d = input_diagram(code, file);
        if (invariant == "bracket") std::cout << kauffman_bracket(d).to_string() << "\n";
        else if (invariant == "f") std::cout << f_polynomial(d).to_string() << "\n";
        else if (invariant == "c2") std::cout << c2(d) << "\n";
        else if (invariant == "writhe") std::cout << writhe(d) << "\n";
        else if (invariant.rfind("gauss-formula:", 0) == 0)
          std::cout << gauss_formula(parse_diagram_sum(read_file(invariant.substr(14))), d) << "\n";
        else throw UsageError("unknown invariant '" + invariant + "'");
      }
    } else if (*check) {
      Report rep{"check-" + suite, seed, {}, {}};
      if (suite == "prop-gpv") rc = suite_prop_gpv(rep, seed, trials > 0 ? trials : 100);
      else if (suite == "thm2") rc = suite_thm2(rep, seed, trials > 0 ? trials : 200, n);
      else if (suite == "lemma-f2gpv") rc = suite_lemma(rep, seed, trials > 0 ? trials : 50);
      else if (suite == "similarity") rc = suite_similarity(rep);
      else rc = suite_invariance(rep, seed, trials > 0 ? trials : 20, invariants);
    } else if (*family) {
      GaussDiagram k = parse_gauss_code(base);
      if (!k.is_based()) k = as_based(k);
      Report rep{"family", seed, {}, {}};
      std::set<LaurentPoly, bool (*)(const LaurentPoly&, const LaurentPoly&)> seen(
          [](const LaurentPoly& a, const LaurentPoly& b) { return a.coefficients() < b.coefficients(); });
      std::optional<int> prev_degree, gap;
      bool monotone = true;
      for (int l = 0; l <= lmax; ++l) {
        const LaurentPoly f = family_f_polynomial(k, n, l);
        const int chords = k.chord_count() + real_letter_count(full_twists(commutator_braid(n), l));
        const int deg = max_degree(f);
        const bool fresh = seen.insert(f).second;
        if (prev_degree) {
          if (deg == *prev_degree || (gap && deg - *prev_degree != *gap)) monotone = false;
          gap = deg - *prev_degree;
        }
        prev_degree = deg;
        rep.add("l=" + std::to_string(l), fresh,
                std::to_string(chords) + " chords, max degree " + std::to_string(deg) + ", f = " + f.to_string(),
                {{"n", std::to_string(n)},
                 {"l", std::to_string(l)},
                 {"chords", std::to_string(chords)},
                 {"max_degree", std::to_string(deg)},
                 {"f", "\"" + f.to_string() + "\""}});
      }
      rep.add("degree-gap", monotone, gap ? "constant gap " + std::to_string(*gap) : "single row",
              {{"gap", gap ? std::to_string(*gap) : "none"}});
      rc = rep.emit();
    } else if (*equiv) {
      rc = print_trace_result(equivalent_search(parse_gauss_code(code), parse_gauss_code(code2), budget), "equiv", seed);
    } else if (*unknot) {
      const GaussDiagram d = input_diagram(code, file);
      const auto t = moves == "reid" ? equivalent_search(d, GaussDiagram::empty(d.kind()), budget)
                                     : unknot_by_forbidden(d, budget);
      rc = print_trace_result(t, "unknot", seed);
    } else if (*replay) {
      const MoveTrace t = parse_trace(trace_lines(read_file(file)));
      const bool ok = replays(t);
      std::cout << "# vknot replay seed=" << seed << "\n"
                << (ok ? "replay ok, " : "replay MISMATCH, ") << t.size() << " steps\n"
                << "record command=replay verdict=" << (ok ? "pass" : "fail") << " steps=" << t.size() << "\n";
      rc = ok ? 0 : kExitNegative;
    }
  } catch (const CapError& e) {
    std::cerr << "vknot: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "vknot: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()
            << " s\n";
  return rc;
}
