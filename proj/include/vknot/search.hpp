#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/moves.hpp"

namespace vknot {

struct SearchBudget {
  int max_depth = 8;
  /// Insertions never exceed this many chords; -1 means the larger input + 2.
  int max_chords = -1;
  /// Distinct canonical states visited over both search directions.
  std::size_t max_states = 200000;
};

struct TraceStep {
  MoveSite site;
  GaussDiagram result;
};

/// A replayable move sequence. Each step's result is exactly
/// apply_move(previous result, site), with no canonicalization in between.
struct MoveTrace {
  GaussDiagram start;
  std::vector<TraceStep> steps;

  const GaussDiagram& end() const { return steps.empty() ? start : steps.back().result; }
  std::size_t size() const { return steps.size(); }
  void push(const MoveSite& site) { steps.push_back({site, apply_move(end(), site)}); }
};

/// True when replaying every site from `start` reproduces each recorded result.
bool replays(const MoveTrace& trace);

/// `start <code>` followed by one `<kind> <params> -> <code>` line per step.
std::string format_trace(const MoveTrace& trace);
/// Reads format_trace output; recorded results are taken as written (check
/// them with replays()). Throws GaussError or MoveError on malformed input.
MoveTrace parse_trace(std::string_view text);

/// A site on `from` whose result is canonically equal to `target`, among
/// Reidemeister sites (all insertions) and, if allowed, forbidden sites.
std::optional<MoveSite> find_step(const GaussDiagram& from, const GaussDiagram& target, bool allow_forbidden);

/// The inverse path from trace.end() back to trace.start (canonically).
/// Throws MoveError for steps without an inverse (virtualization).
MoveTrace reverse_trace(const MoveTrace& trace);

/// Reidemeister-only bounded search. Returns a trace from d1 whose end is
/// canonically equal to d2, or nullopt when the budget runs out first.
std::optional<MoveTrace> equivalent_search(const GaussDiagram& d1, const GaussDiagram& d2,
                                           const SearchBudget& budget = {});

/// Reduces `d` to the empty diagram with Reidemeister and forbidden moves:
/// a constructive greedy pass first, bounded search as fallback.
std::optional<MoveTrace> unknot_by_forbidden(const GaussDiagram& d, const SearchBudget& budget = {});

}  // namespace vknot
