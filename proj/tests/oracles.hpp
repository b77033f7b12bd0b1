#pragma once

// Brute-force reference computations, written directly from the definitions
// and independent of the library's algorithms.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opetope/core.hpp"

namespace oracle {

using opetope::Hypergraph;

// one-step upper relation: a |>+ b iff some alpha has a in delta(alpha), gamma(alpha) = b
inline bool step_plus(const Hypergraph& h, int a, int b) {
  for (int al = 0; al < h.size(); ++al) {
    if (h.dim(al) == 0) continue;
    const auto& d = h.delta(al);
    if (h.gamma(al) == b && std::find(d.begin(), d.end(), a) != d.end()) return true;
  }
  return false;
}

inline bool step_minus(const Hypergraph& h, int a, int b) {
  if (h.dim(a) == 0 || h.dim(a) != h.dim(b)) return false;
  const auto& d = h.delta(b);
  return std::find(d.begin(), d.end(), h.gamma(a)) != d.end();
}

// reachability by depth-first search along one-step relations (paths of length >= 1)
template <class Step>
std::set<std::pair<std::string, std::string>> closure(const Hypergraph& h, int k, Step step) {
  std::set<std::pair<std::string, std::string>> out;
  const auto& fs = h.faces_of_dim(k);
  for (int a : fs) {
    std::vector<int> stack{a};
    std::set<int> seen;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : fs)
        if (step(h, x, y) && seen.insert(y).second) stack.push_back(y);
    }
    for (int y : seen) out.insert({h.id(a), h.id(y)});
  }
  return out;
}

inline std::set<std::pair<std::string, std::string>> upper(const Hypergraph& h, int k) {
  return closure(h, k, step_plus);
}

inline std::set<std::pair<std::string, std::string>> lower(const Hypergraph& h, int k) {
  return closure(h, k, step_minus);
}

inline bool lt_plus(const Hypergraph& h, int a, int b) {
  if (h.dim(a) != h.dim(b)) return false;
  return upper(h, h.dim(a)).count({h.id(a), h.id(b)}) > 0;
}

// faces reachable from x through gamma and delta, by fixpoint iteration
inline std::set<std::string> generated(const Hypergraph& h, const std::string& x) {
  std::set<std::string> s{x};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < h.size(); ++f) {
      if (!s.count(h.id(f)) || h.dim(f) == 0) continue;
      if (s.insert(h.id(h.gamma(f))).second) grew = true;
      for (int d : h.delta(f))
        if (s.insert(h.id(d)).second) grew = true;
    }
  }
  return s;
}

template <class Pairs>
std::set<std::pair<std::string, std::string>> named(const Hypergraph& h, const Pairs& ps) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : ps) out.insert({h.id(a), h.id(b)});
  return out;
}

template <class Faces>
std::set<std::string> names(const Hypergraph& h, const Faces& fs) {
  std::set<std::string> out;
  for (int f : fs) out.insert(h.id(f));
  return out;
}

}  // namespace oracle
