#ifndef DELSTAR_SPAN_HPP
#define DELSTAR_SPAN_HPP

#include <stdexcept>

#include "delstar/basic_cycles.hpp"

namespace delstar {

struct SpanResult {
  bool holds = false;
  int span_rank = 0;
  int cycle_dim = 0;
};

/* Rank of the basic-cycle span inside the cycle space; stops adding rows as
 * soon as the full cycle dimension is reached. holds <=> span is the whole
 * cycle space. */
SpanResult check_basic_generation(const VenkovGraph& g, const BasicCycleSet& b);

struct Certificate {
  CycleVector target;
  std::vector<std::pair<Rational, int>> terms;  // coefficient, basic-cycle index
};

/* Proof that a cycle lies outside the basic span: `functional` (edge index ->
 * value) vanishes on every basic cycle but not on the rejected one. */
class NotInSpanError : public std::runtime_error {
 public:
  explicit NotInSpanError(std::map<int, Rational> f)
      : std::runtime_error("not in span"), functional(std::move(f)) {}
  std::map<int, Rational> functional;
};

/* Exact coefficients with sum(coeff * basic) == x. Throws NotInSpanError when
 * impossible, std::invalid_argument("not a cycle") when x is not a cycle. */
Certificate decompose_cycle(const VenkovGraph& g, const BasicCycleSet& b, const CycleVector& x);

/* Independent re-summation: the certificate's terms add up to its target. */
bool verify_certificate(const BasicCycleSet& b, const Certificate& c);

Rational apply_functional(const std::map<int, Rational>& functional, const CycleVector& x);

}  // namespace delstar

#endif
