#ifndef DELSTAR_TESTS_DSTAR_UTIL_HPP
#define DELSTAR_TESTS_DSTAR_UTIL_HPP

#include <algorithm>
#include <vector>

#include "delstar/lattice.hpp"

/* Reference cells of D_d* built directly from doubled ambient coordinates,
 * independent of the library's star constructions. */

/* Even d = 2m, half-integer support S (|S| = m): 2^m integer vertices with
 * 0/1 entries on S, and 2^m half-integer vertices 1/2 on S, ±1/2 off S. */
inline std::vector<delstar::PointVec> dstar_even_cell(int m, const std::vector<int>& s) {
  using namespace delstar;
  int d = 2 * m;
  std::vector<int> rest;
  for (int i = 0; i < d; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) rest.push_back(i);
  std::vector<PointVec> vs;
  for (int mask = 0; mask < (1 << m); ++mask) {
    PointVec a(d, 0);
    for (int i = 0; i < m; ++i) a[s[i]] = ((mask >> i) & 1) ? 2 : 0;
    vs.push_back(dstar_basis_from_ambient_doubled(a));
  }
  for (int mask = 0; mask < (1 << m); ++mask) {
    PointVec a(d, 0);
    for (int i : s) a[i] = 1;
    for (int i = 0; i < m; ++i) a[rest[i]] = ((mask >> i) & 1) ? 1 : -1;
    vs.push_back(dstar_basis_from_ambient_doubled(a));
  }
  return vs;
}

/* Odd d = 2m+1, unique position j, half support S (|S| = m, j not in S):
 * 2^m integer vertices with 0/1 entries on S and zeros elsewhere, and 2^m
 * half-integer vertices 1/2 on S and at j, ±1/2 on the rest. */
inline std::vector<delstar::PointVec> dstar_odd_cell(int m, int j, const std::vector<int>& s) {
  using namespace delstar;
  int d = 2 * m + 1;
  std::vector<int> rest;
  for (int i = 0; i < d; ++i)
    if (i != j && std::find(s.begin(), s.end(), i) == s.end()) rest.push_back(i);
  std::vector<PointVec> vs;
  for (int mask = 0; mask < (1 << m); ++mask) {
    PointVec a(d, 0);
    for (int i = 0; i < m; ++i) a[s[i]] = ((mask >> i) & 1) ? 2 : 0;
    vs.push_back(dstar_basis_from_ambient_doubled(a));
  }
  for (int mask = 0; mask < (1 << m); ++mask) {
    PointVec a(d, 0);
    for (int i : s) a[i] = 1;
    a[j] = 1;
    for (int i = 0; i < m; ++i) a[rest[i]] = ((mask >> i) & 1) ? 1 : -1;
    vs.push_back(dstar_basis_from_ambient_doubled(a));
  }
  return vs;
}

#endif
