#include "vknot/finite_type.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "vknot/random.hpp"

namespace vknot {

namespace {

void require_distinct_chords(const GaussDiagram& d, const std::vector<int>& chords) {
  std::set<int> seen;
  for (int c : chords) {
    if (!d.has_chord(c)) throw FiniteTypeError("unknown chord " + std::to_string(c));
    if (!seen.insert(c).second) throw FiniteTypeError("chord " + std::to_string(c) + " listed twice");
  }
}

void require_sites(const GaussDiagram& d, const std::vector<Triangle>& sites) {
  for (const auto& t : sites) {
    const auto all = forbidden_sites(d);
    if (std::none_of(all.begin(), all.end(), [&](const Triangle& s) { return s.position == t.position && s.role == t.role; }))
      throw FiniteTypeError("no forbidden site at position " + std::to_string(t.position));
  }
  if (!pairwise_disjoint(d, sites)) throw FiniteTypeError("forbidden sites overlap");
}

GaussDiagram virtualize_all(GaussDiagram d, const std::vector<int>& chords) {
  for (int c : chords) d = virtualize(d, c);
  return d;
}

// Calls f on every k-subset of {0..n-1}, in lexicographic order, until it returns false.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<GaussDiagram> sample_diagrams(const Sampler& s) {
  std::vector<GaussDiagram> out = s.corpus;
  Rng rng(s.seed);
  while (static_cast<int>(out.size()) < s.trials) out.push_back(random_diagram(rng, s.min_chords, s.max_chords, s.kind));
  return out;
}

template <class V>
bool is_zero(const V& v) {
  return v == V{};
}

}  // namespace

template <class V>
V gpv_alternating_sum(const Functional<V>& v, const GaussDiagram& d, const std::vector<int>& chords) {
  require_distinct_chords(d, chords);
  const int k = static_cast<int>(chords.size());
  V total{};
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) chosen.push_back(chords[i]);
    V value = v(virtualize_all(d, chosen));
    if (std::popcount(mask) % 2) total -= value;
    else total += value;
  }
  return total;
}

template <class V>
V f_alternating_sum(const Functional<V>& v, const GaussDiagram& d, const std::vector<Triangle>& sites) {
  require_sites(d, sites);
  const int k = static_cast<int>(sites.size());
  V total{};
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Triangle> chosen;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) chosen.push_back(sites[i]);
    V value = v(apply_forbidden_set(d, chosen));
    if (std::popcount(mask) % 2) total -= value;
    else total += value;
  }
  return total;
}

bool pairwise_disjoint(const GaussDiagram& d, const std::vector<Triangle>& sites) {
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      if (!disjoint(d, sites[i], sites[j])) return false;
  return true;
}

GaussDiagram apply_forbidden_set(const GaussDiagram& d, const std::vector<Triangle>& sites) {
  if (!pairwise_disjoint(d, sites)) throw FiniteTypeError("forbidden sites overlap");
  // disjoint transpositions leave each other's positions in place
  GaussDiagram out = d;
  for (const auto& t : sites) out = apply_forbidden(out, t);
  return out;
}

DiagramSum expand_semi_virtual(const GaussDiagram& d, const std::vector<int>& marked) {
  require_distinct_chords(d, marked);
  DiagramSum out;
  const int k = static_cast<int>(marked.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) chosen.push_back(marked[i]);
    out.add(virtualize_all(d, chosen), std::popcount(mask) % 2 ? -1 : 1);
  }
  return out;
}

DiagramSum expand_semi_triple(const GaussDiagram& d, const std::vector<Triangle>& marked, TriangleConvention convention) {
  require_sites(d, marked);
  const int flip = convention == TriangleConvention::flipped ? -1 : 1;
  std::int64_t base_sign = 1;
  for (const auto& t : marked) base_sign *= flip * triangle_sign(d, t.position);
  DiagramSum out;
  const int k = static_cast<int>(marked.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Triangle> chosen;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) chosen.push_back(marked[i]);
    out.add(apply_forbidden_set(d, chosen), base_sign * (std::popcount(mask) % 2 ? -1 : 1));
  }
  return out;
}

template <class V>
OrderVerdict check_gpv_order_at_most(const Functional<V>& v, int n, const Sampler& sampler) {
  OrderVerdict out;
  Rng rng(sampler.seed ^ 0x9e3779b97f4a7c15ULL);
  const int k = n + 1;
  for (const auto& d : sample_diagrams(sampler)) {
    if (d.chord_count() < k) {
      ++out.diagrams_skipped;
      continue;
    }
    std::vector<int> ids;
    for (const auto& c : d.chords()) ids.push_back(c.id);
    auto check = [&](const std::vector<int>& chosen) {
      V value = gpv_alternating_sum(v, d, chosen);
      ++out.sums_checked;
      if (is_zero(value)) return true;
      out.pass = false;
      out.counterexample = OrderCounterexample{d, chosen, {}, format_value(value)};
      return false;
    };
    if (d.chord_count() <= sampler.exhaustive_up_to) {
      const bool ok = for_each_subset(d.chord_count(), k, [&](const std::vector<int>& idx) {
        std::vector<int> chosen;
        for (int i : idx) chosen.push_back(ids[i]);
        return check(chosen);
      });
      if (!ok) return out;
    } else {
      for (int s = 0; s < sampler.subsets_per_diagram; ++s) {
        std::shuffle(ids.begin(), ids.end(), rng);
        if (!check({ids.begin(), ids.begin() + k})) return out;
      }
    }
  }
  return out;
}

template <class V>
OrderVerdict check_f_order_at_most(const Functional<V>& v, int n, const Sampler& sampler, TriangleConvention convention) {
  OrderVerdict out;
  Rng rng(sampler.seed ^ 0x9e3779b97f4a7c15ULL);
  const int k = n + 1;
  for (const auto& d : sample_diagrams(sampler)) {
    const auto sites = forbidden_sites(d);
    std::vector<std::vector<Triangle>> sets;
    for_each_subset(static_cast<int>(sites.size()), k, [&](const std::vector<int>& idx) {
      std::vector<Triangle> chosen;
      for (int i : idx) chosen.push_back(sites[i]);
      if (pairwise_disjoint(d, chosen)) sets.push_back(std::move(chosen));
      return true;
    });
    if (sets.empty()) {
      ++out.diagrams_skipped;
      continue;
    }
    if (d.chord_count() > sampler.exhaustive_up_to && static_cast<int>(sets.size()) > sampler.subsets_per_diagram) {
      std::shuffle(sets.begin(), sets.end(), rng);
      sets.resize(sampler.subsets_per_diagram);
    }
    for (const auto& chosen : sets) {
      V value = v(expand_semi_triple(d, chosen, convention));
      ++out.sums_checked;
      if (!is_zero(value)) {
        out.pass = false;
        out.counterexample = OrderCounterexample{d, {}, chosen, format_value(value)};
        return out;
      }
    }
  }
  return out;
}

LemmaReport verify_lemma_f2gpv(const GaussDiagram& d, const Triangle& t, const SearchBudget& budget) {
  LemmaReport r;
  r.moved = apply_forbidden(d, t);
  r.chord1 = d.endpoints()[t.position].chord;
  r.chord2 = d.endpoints()[d.next(t.position)].chord;
  const std::array<std::vector<int>, 3> sets{std::vector<int>{r.chord1}, std::vector<int>{r.chord2},
                                             std::vector<int>{r.chord1, r.chord2}};
  for (int i = 0; i < 3; ++i) {
    r.traces[i] = equivalent_search(virtualize_all(d, sets[i]), virtualize_all(r.moved, sets[i]), budget);
    r.confirmed[i] = r.traces[i].has_value();
  }
  return r;
}

void validate(const SimilarityWitness& w) {
  if (w.size() == 0) throw FiniteTypeError("similarity witness has no sets");
  if (w.size() > 16) throw FiniteTypeError("similarity witness has too many sets");
  if (w.mode == SimilarityMode::gpv) {
    std::vector<int> all;
    for (const auto& a : w.chord_family) {
      if (a.empty()) throw FiniteTypeError("empty set in similarity witness");
      all.insert(all.end(), a.begin(), a.end());
    }
    require_distinct_chords(w.base, all);
  } else {
    std::vector<Triangle> all;
    for (const auto& a : w.site_family) {
      if (a.empty()) throw FiniteTypeError("empty set in similarity witness");
      all.insert(all.end(), a.begin(), a.end());
    }
    require_sites(w.base, all);
  }
}

GaussDiagram apply_subfamily(const SimilarityWitness& w, std::uint32_t mask) {
  validate(w);
  if (w.mode == SimilarityMode::gpv) {
    std::vector<int> chosen;
    for (int i = 0; i < w.size(); ++i)
      if (mask >> i & 1) chosen.insert(chosen.end(), w.chord_family[i].begin(), w.chord_family[i].end());
    return virtualize_all(w.base, chosen);
  }
  std::vector<Triangle> chosen;
  for (int i = 0; i < w.size(); ++i)
    if (mask >> i & 1) chosen.insert(chosen.end(), w.site_family[i].begin(), w.site_family[i].end());
  return apply_forbidden_set(w.base, chosen);
}

std::pair<GaussDiagram, GaussDiagram> build_similar_pair(const SimilarityWitness& w) {
  return {w.base, apply_subfamily(w, (1u << w.size()) - 1)};
}

std::vector<GaussDiagram> subfamily_images(const SimilarityWitness& w) {
  validate(w);
  std::vector<GaussDiagram> out;
  for (std::uint32_t mask = 1; mask < (1u << w.size()); ++mask) out.push_back(apply_subfamily(w, mask));
  return out;
}

template <class V>
SimilarityVerdict<V> verify_similarity_consequence(const SimilarityWitness& w, const Functional<V>& v, int m) {
  if (m >= w.size()) throw FiniteTypeError("order bound must be below the witness size");
  SimilarityVerdict<V> out;
  out.base_value = v(w.base);
  for (const auto& img : subfamily_images(w)) {
    out.image_values.push_back(v(img));
    if (!(out.image_values.back() == out.base_value)) out.pass = false;
  }
  return out;
}

Functional<std::int64_t> constant_functional(std::int64_t c) {
  return {"constant", [c](const GaussDiagram&) { return c; }};
}

Functional<std::int64_t> chord_count_functional() {
  return {"chords", [](const GaussDiagram& d) { return std::int64_t{d.chord_count()}; }};
}

Functional<std::int64_t> chord_choose_functional(int k) {
  return {"chords-choose-" + std::to_string(k), [k](const GaussDiagram& d) {
            std::int64_t r = 1;
            const int n = d.chord_count();
            if (k > n) return std::int64_t{0};
            for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
            return r;
          }};
}

Functional<std::int64_t> gauss_formula_functional(const DiagramSum& a) {
  return {"gauss-formula", [a](const GaussDiagram& d) { return gauss_formula(a, d); }};
}

#define VKNOT_INSTANTIATE(V)                                                                                 \
  template V gpv_alternating_sum(const Functional<V>&, const GaussDiagram&, const std::vector<int>&);        \
  template V f_alternating_sum(const Functional<V>&, const GaussDiagram&, const std::vector<Triangle>&);     \
  template OrderVerdict check_gpv_order_at_most(const Functional<V>&, int, const Sampler&);                 \
  template OrderVerdict check_f_order_at_most(const Functional<V>&, int, const Sampler&, TriangleConvention); \
  template SimilarityVerdict<V> verify_similarity_consequence(const SimilarityWitness&, const Functional<V>&, int);

VKNOT_INSTANTIATE(std::int64_t)
VKNOT_INSTANTIATE(LaurentPoly)

#undef VKNOT_INSTANTIATE

}  // namespace vknot
