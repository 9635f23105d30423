#include "delstar/span.hpp"

#include <algorithm>

namespace delstar {

namespace {

using Row = std::map<int, Rational>;

void axpy(Row& r, const Rational& f, const Row& s) {
  for (const auto& [j, v] : s) {
    auto it = r.find(j);
    if (it == r.end()) {
      r.emplace(j, f * v);
    } else {
      it->second += f * v;
      if (it->second == 0) r.erase(it);
    }
  }
}

/* Incremental sparse elimination. Pivot rows are kept in creation order; each
 * was reduced against all earlier pivots when added, so its leading column is
 * new. `combos` (optional) express every pivot row as a combination of the
 * original rows fed in. */
struct Eliminator {
  std::vector<Row> rows;
  std::vector<Row> combos;
  std::map<int, int> lead;  // leading column -> pivot index
  bool track;

  explicit Eliminator(bool track_combos) : track(track_combos) {}

  int rank() const { return int(rows.size()); }

  /* Eliminates every column of r that is some pivot's lead. Pivot rows only
   * introduce columns above their lead, so one ascending sweep suffices. */
  void reduce(Row& r, Row* combo) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto p = lead.find(it->first);
      if (p == lead.end()) {
        ++it;
        continue;
      }
      int col = it->first;
      Rational f = -(it->second / rows[p->second].at(col));
      axpy(r, f, rows[p->second]);
      if (combo) axpy(*combo, f, combos[p->second]);
      it = r.lower_bound(col);
    }
  }

  /* Returns true if the row was independent and became a pivot. */
  bool add(Row r, int source_index) {
    Row combo;
    if (track) combo[source_index] = 1;
    reduce(r, track ? &combo : nullptr);
    if (r.empty()) return false;
    lead[r.begin()->first] = int(rows.size());
    rows.push_back(std::move(r));
    if (track) combos.push_back(std::move(combo));
    return true;
  }

  /* A functional vanishing on every pivot row (hence on everything fed in)
   * with value r[lead(r)] != 0 on the fully reduced residual r. Solved on the
   * pivot columns in reverse creation order: pivot k has zeros at the leads
   * of pivots created before it. */
  Row separating_functional(const Row& r) const {
    Row y;
    y[r.begin()->first] = 1;
    for (int k = int(rows.size()) - 1; k >= 0; --k) {
      const Row& p = rows[k];
      int lk = p.begin()->first;
      Rational s = 0;
      for (const auto& [c, v] : p) {
        if (c == lk) continue;
        auto it = y.find(c);
        if (it != y.end()) s += v * it->second;
      }
      if (!(s == 0)) y[lk] = -s / p.begin()->second;
    }
    return y;
  }
};

}  // namespace

SpanResult check_basic_generation(const VenkovGraph& g, const BasicCycleSet& b) {
  SpanResult res;
  res.cycle_dim = cycle_space_dim(g);
  Eliminator el(false);
  for (size_t i = 0; i < b.cycles.size() && el.rank() < res.cycle_dim; ++i)
    el.add(b.cycles[i].cycle.coeffs, int(i));
  res.span_rank = el.rank();
  res.holds = res.span_rank == res.cycle_dim;
  return res;
}

Certificate decompose_cycle(const VenkovGraph& g, const BasicCycleSet& b, const CycleVector& x) {
  if (!in_cycle_space(g, x)) throw std::invalid_argument("not a cycle");
  int dim = cycle_space_dim(g);
  Eliminator el(true);
  for (size_t i = 0; i < b.cycles.size() && el.rank() < dim; ++i)
    el.add(b.cycles[i].cycle.coeffs, int(i));

  Row r = x.coeffs;
  Row combo;
  el.reduce(r, &combo);
  if (!r.empty()) throw NotInSpanError(el.separating_functional(r));

  Certificate cert;
  cert.target = x;
  for (const auto& [i, c] : combo)
    if (!(c == 0)) cert.terms.push_back({-c, i});
  return cert;
}

bool verify_certificate(const BasicCycleSet& b, const Certificate& c) {
  Row sum;
  for (const auto& [coeff, idx] : c.terms) {
    if (idx < 0 || idx >= int(b.cycles.size())) return false;
    axpy(sum, coeff, b.cycles[idx].cycle.coeffs);
  }
  Row target;
  for (const auto& [ei, v] : c.target.coeffs)
    if (!(v == 0)) target.emplace(ei, v);
  return sum == target;
}

Rational apply_functional(const std::map<int, Rational>& functional, const CycleVector& x) {
  Rational s = 0;
  for (const auto& [ei, c] : x.coeffs) {
    auto it = functional.find(ei);
    if (it != functional.end()) s += c * it->second;
  }
  return s;
}

}  // namespace delstar
