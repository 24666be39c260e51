#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropcone/io.hpp"

namespace testsupport {

using tropcone::Basis;
using tropcone::Int;
using tropcone::Trop;
using tropcone::TropMatrix;
using tropcone::TropVector;
using tropcone::TwoRowSystem;

// 4 x3 + 2 x4 <= x1 + 2 x2 ; 3 x1 + x3 <= x2
inline TwoRowSystem<Int> example1() {
  return to_integer(tropcone::parse_system(std::string("-inf -inf 4 2\n"
                                                       "3 -inf 0 -inf\n"
                                                       "0 2 -inf -inf\n"
                                                       "-inf 0 -inf -inf\n"))
                        .system);
}

// x4 + 4 x5 + 2 x6 + 6 x7 <= x1 + 1 x2 + 5 x3
// 5 x2 + 6 x3 + 2 x7      <= 3 x1 + x4 + 2 x5 + 4 x6
inline TwoRowSystem<Int> example2() {
  return to_integer(tropcone::parse_system(std::string("-inf -inf -inf 0 4 2 6\n"
                                                       "-inf 5 6 -inf -inf -inf 2\n"
                                                       "0 1 5 -inf -inf -inf -inf\n"
                                                       "3 -inf -inf 0 2 4 -inf\n"))
                        .system);
}

/// "-inf 0 3" -> tropical vector; exact integer tokens only.
inline TropVector<Int> tv(const std::string& tokens) {
  std::istringstream in(tokens);
  std::vector<Trop<Int>> vals;
  std::string w;
  while (in >> w)
    vals.push_back(w == "-inf" ? Trop<Int>::bottom() : Trop<Int>(std::stoll(w)));
  TropVector<Int> v(static_cast<Eigen::Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

using SparseVec = std::vector<std::pair<int, long long>>;

inline SparseVec sparse_of(const TropVector<Int>& v) {
  SparseVec s;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (v(i).is_finite()) s.emplace_back(static_cast<int>(i), v(i).value());
  return s;
}

inline std::vector<SparseVec> sparse_set(const Basis<Int>& b) {
  std::vector<SparseVec> out;
  for (const auto& g : b.gens) {
    SparseVec s;
    for (const auto& [p, c] : g.entries) s.emplace_back(p, c.value());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SparseVec> sorted(std::vector<SparseVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testsupport
