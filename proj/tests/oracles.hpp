// Test-only oracles: small independent implementations used to cross-check
// the library.  Nothing here may call into the code path it validates.

#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dnsym/group.hpp"

namespace oracles {

// Abstract D_q multiplication on pairs (k, l), written from the presentation
// directly: (k1,l1)*(k2,l2) = (k1+k2, (-1)^{k2} l1 + l2).
struct DihedralTable {
  int q;
  explicit DihedralTable(int q_) : q(q_) {}
  std::pair<int, int> mul(std::pair<int, int> a, std::pair<int, int> b) const {
    int k = (a.first + b.first) % 2;
    int l = ((b.first ? -a.second : a.second) + b.second) % q;
    if (l < 0) l += q;
    return {k, l};
  }
  std::pair<int, int> inv(std::pair<int, int> a) const {
    if (a.first) return a;
    return {0, (q - a.second) % q};
  }
  int index(std::pair<int, int> a) const { return a.first * q + a.second; }
  std::pair<int, int> element(int i) const { return {i / q, i % q}; }
};

// Backtracking isomorphism search between a subgroup (given by its elements
// and the ambient multiplication) and abstract D_q with q = |S|/2.
inline bool isomorphic_to_dihedral(const dnsym::FiniteGroup& g,
                                   const std::vector<dnsym::GroupElement>& elems) {
  int order = static_cast<int>(elems.size());
  if (order < 4 || order % 2 != 0) return false;
  int q = order / 2;
  DihedralTable dn(q);

  std::map<int, int> pos;  // ambient index -> 0..order-1
  for (int i = 0; i < order; ++i) pos[g.index_of(elems[i])] = i;

  // try all image pairs for the abstract generators x, y
  for (const dnsym::GroupElement& rx : elems) {
    for (const dnsym::GroupElement& ry : elems) {
      // build phi: D_q -> S by words y^k x^l, then verify multiplicativity
      std::vector<int> img(2 * q, -1);
      bool good = true;
      for (int k = 0; k < 2 && good; ++k) {
        for (int l = 0; l < q && good; ++l) {
          dnsym::GroupElement v = g.identity();
          if (k) v = ry;
          for (int t = 0; t < l; ++t) v = g.mul(v, rx);
          auto it = pos.find(g.index_of(v));
          if (it == pos.end()) {
            good = false;
            break;
          }
          img[dn.index({k, l})] = it->second;
        }
      }
      if (!good) continue;
      std::set<int> distinct(img.begin(), img.end());
      if (static_cast<int>(distinct.size()) != order) continue;
      for (int i = 0; i < 2 * q && good; ++i)
        for (int j = 0; j < 2 * q && good; ++j) {
          auto prod = dn.mul(dn.element(i), dn.element(j));
          dnsym::GroupElement lhs = g.mul(elems[img[i]], elems[img[j]]);
          if (!(lhs == elems[img[dn.index(prod)]])) good = false;
        }
      if (good) return true;
    }
  }
  return false;
}

// Every subgroup of g, as sorted element-index sets (closure-growing search).
inline std::set<std::vector<int>> all_subgroups(const dnsym::FiniteGroup& g) {
  using Set = std::vector<int>;
  auto close = [&](std::vector<dnsym::GroupElement> gens) {
    std::set<int> seen{g.index_of(g.identity())};
    std::deque<dnsym::GroupElement> queue{g.identity()};
    for (auto& a : gens)
      if (seen.insert(g.index_of(a)).second) queue.push_back(a);
    while (!queue.empty()) {
      auto a = queue.front();
      queue.pop_front();
      for (auto& b : gens) {
        auto c = g.mul(a, b);
        if (seen.insert(g.index_of(c)).second) queue.push_back(c);
      }
    }
    return Set(seen.begin(), seen.end());
  };
  std::set<Set> found{close({})};
  std::deque<std::pair<Set, std::vector<dnsym::GroupElement>>> frontier;
  frontier.push_back({close({}), {}});
  while (!frontier.empty()) {
    auto [set, gens] = frontier.front();
    frontier.pop_front();
    for (const dnsym::GroupElement& a : g.elements()) {
      if (std::binary_search(set.begin(), set.end(), g.index_of(a))) continue;
      auto bigger_gens = gens;
      bigger_gens.push_back(a);
      Set bigger = close(bigger_gens);
      if (found.insert(bigger).second) frontier.push_back({bigger, bigger_gens});
    }
  }
  return found;
}

// Reachability oracle for the triple-rotation lemma: the set of triples of
// reflections reachable from (a, b, c) by the two braid generators.
struct TripleOrbit {
  std::set<std::array<int, 3>> reached;
  bool has_normal = false;

  TripleOrbit(const dnsym::FiniteGroup& g, std::array<dnsym::GroupElement, 3> start) {
    auto idx = [&](const std::array<dnsym::GroupElement, 3>& t) {
      return std::array<int, 3>{g.index_of(t[0]), g.index_of(t[1]), g.index_of(t[2])};
    };
    std::deque<std::array<dnsym::GroupElement, 3>> queue{start};
    reached.insert(idx(start));
    while (!queue.empty()) {
      auto t = queue.front();
      queue.pop_front();
      if (t[0] == t[1] || t[1] == t[2]) has_normal = true;
      // sigma_1^{+-1} and sigma_2^{+-1} on the triple
      std::array<dnsym::GroupElement, 3> nexts[4] = {
          {g.mul(g.mul(t[0], t[1]), g.inv(t[0])), t[0], t[2]},
          {t[1], g.mul(g.mul(g.inv(t[1]), t[0]), t[1]), t[2]},
          {t[0], g.mul(g.mul(t[1], t[2]), g.inv(t[1])), t[1]},
          {t[0], t[2], g.mul(g.mul(g.inv(t[2]), t[1]), t[2])}};
      for (auto& s : nexts)
        if (reached.insert(idx(s)).second) queue.push_back(s);
    }
  }

  bool contains(const dnsym::FiniteGroup& g, std::array<dnsym::GroupElement, 3> t) const {
    return reached.count({g.index_of(t[0]), g.index_of(t[1]), g.index_of(t[2])}) > 0;
  }
};

// Automorphism count by assigning images to one fixed generating tuple and
// verifying the full multiplication table, kept separate from the library's
// breadth-first completion.
inline int automorphism_count(const dnsym::FiniteGroup& g,
                              std::vector<dnsym::GroupElement> gens) {
  // expand words over the generators to reach every element
  struct Word {
    dnsym::GroupElement value;
    std::vector<int> letters;
  };
  std::vector<Word> words;
  std::map<int, int> where;
  words.push_back({g.identity(), {}});
  where[g.index_of(g.identity())] = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Word next{g.mul(words[i].value, gens[j]), words[i].letters};
      next.letters.push_back(static_cast<int>(j));
      if (!where.count(g.index_of(next.value))) {
        where[g.index_of(next.value)] = static_cast<int>(words.size());
        words.push_back(next);
      }
    }
  if (static_cast<int>(words.size()) != g.order()) return -1;  // not generating

  int count = 0;
  std::vector<int> pick(gens.size(), 0);
  std::vector<dnsym::GroupElement> images(gens.size(), g.identity());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = g.by_index(pick[j]);
    // evaluate each word under the candidate images, then check bijection and
    // multiplicativity over all pairs
    std::vector<dnsym::GroupElement> phi(g.order(), g.identity());
    for (const Word& w : words) {
      dnsym::GroupElement v = g.identity();
      for (int letter : w.letters) v = g.mul(v, images[letter]);
      phi[where.at(g.index_of(w.value))] = v;
    }
    auto apply = [&](dnsym::GroupElement a) { return phi[where.at(g.index_of(a))]; };
    bool good = true;
    std::set<int> im;
    for (const dnsym::GroupElement& a : g.elements()) im.insert(g.index_of(apply(a)));
    good = static_cast<int>(im.size()) == g.order();
    for (int i = 0; i < g.order() && good; ++i)
      for (int j = 0; j < g.order() && good; ++j) {
        dnsym::GroupElement a = g.by_index(i), b = g.by_index(j);
        if (!(apply(g.mul(a, b)) == g.mul(apply(a), apply(b)))) good = false;
      }
    if (good) ++count;
    std::size_t j = 0;
    for (; j < gens.size(); ++j) {
      if (++pick[j] < static_cast<std::size_t>(g.order())) break;
      pick[j] = 0;
    }
    if (j == gens.size()) break;
  }
  return count;
}

}  // namespace oracles
