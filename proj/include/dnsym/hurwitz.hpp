// Hurwitz vectors, the braid x automorphism action, orbit enumeration, and
// the genus / dimension arithmetic of branched covers.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dnsym/group.hpp"

namespace dnsym {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator*(long long k, Rational a) { return Rational(k) * a; }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const;
};

// Base genus plus the multiset of branching indices (sorted ascending).
struct Signature {
  int genus = 0;
  std::vector<int> orders;

  int r() const { return static_cast<int>(orders.size()); }
  friend bool operator==(const Signature&, const Signature&) = default;
  std::string str() const;
};

// Handle pairs (a_j, b_j) and branch entries over a fixed group, subject to
// product-one: prod [a_j, b_j] * prod branch_i = e.  Identity branch entries
// are erased on construction.
class HurwitzVector {
 public:
  using Handle = std::pair<GroupElement, GroupElement>;

  HurwitzVector(FiniteGroup group, std::vector<Handle> handles,
                std::vector<GroupElement> branches);

  const FiniteGroup& group() const { return group_; }
  int genus() const { return static_cast<int>(handles_.size()); }
  std::span<const Handle> handles() const { return handles_; }
  std::span<const GroupElement> branches() const { return branches_; }
  int length() const { return static_cast<int>(branches_.size()); }

  bool lex_less(const HurwitzVector& other) const;  // same-shape comparison
  std::string str() const;
  friend bool operator==(const HurwitzVector& a, const HurwitzVector& b);

 private:
  FiniteGroup group_;
  std::vector<Handle> handles_;
  std::vector<GroupElement> branches_;
};

enum class BraidDir { Forward, Inverse };

// sigma_i, 1-based: (..., v_i, v_{i+1}, ...) -> (..., v_i v_{i+1} v_i^-1, v_i, ...).
// Base genus must be 0.
HurwitzVector braid_move(const HurwitzVector& v, int i, BraidDir dir = BraidDir::Forward);

// Componentwise image of handles and branches under a total endomap.
HurwitzVector apply_aut(const HurwitzVector& v, const GroupMap& phi);

bool product_one(const HurwitzVector& v);
bool generates(const HurwitzVector& v, const FiniteGroup& g);
Signature signature_of(const HurwitzVector& v);

// Genus of the covering curve from 2g - 2 = |G| (2g' - 2 + sum(1 - 1/m_i)).
// Rejects signatures for which the result is not a non-negative integer.
long long riemann_hurwitz_genus(long long group_order, const Signature& sig);

// 2 - 2g' - sum(1 - 1/m_i)
Rational orbifold_euler(const Signature& sig);

// delta = 3g' - 3 + r, the fixed-locus dimension of the quotient signature.
int delta(const Signature& sig);

// Braid moves confined to positions {i, i+1, i+2} (1-based) turning a triple
// of reflections into (a, a, c) or (a, b, b) form; the triple entries must
// all have reflection bit 1.  Returns v unchanged when already normal.
HurwitzVector normalize_triple(const HurwitzVector& v, int i);

struct OrbitOptions {
  std::uint64_t node_cap = 10'000'000;
};

struct SameOrbitResult {
  bool same = false;
  bool exhausted = true;  // false when the node cap cut the search short
};

// Packed-key search engine for braid x automorphism closures over one group
// and a fixed branch count (at most 8; element indices fit a byte).  Keys
// compare like the lexicographic order on branch tuples.
class OrbitEngine {
 public:
  OrbitEngine(FiniteGroup g, int length, std::span<const GroupMap> auts);

  std::uint64_t pack(const HurwitzVector& v) const;
  HurwitzVector unpack(std::uint64_t key) const;

  // Expands the closure of seed, invoking visit on every key reached
  // (the seed included).  Returns true iff complete under the node cap.
  bool closure(std::uint64_t seed, std::uint64_t node_cap,
               const std::function<void(std::uint64_t)>& visit) const;

  // Bidirectional connectivity test.
  SameOrbitResult connected(std::uint64_t a, std::uint64_t b,
                            std::uint64_t node_cap) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct OrbitClass {
  HurwitzVector representative;  // lexicographic minimum of the set reached
  std::uint64_t size = 0;
  bool exhausted = true;
  std::string moves;
};

// Breadth-first closure under all sigma_i^{+-1} and the given automorphisms.
// Base genus must be 0 and the branch list at most 8 long.
OrbitClass orbit(const HurwitzVector& v, std::span<const GroupMap> auts,
                 const OrbitOptions& opts = {});

SameOrbitResult same_orbit(const HurwitzVector& v, const HurwitzVector& w,
                           std::span<const GroupMap> auts, const OrbitOptions& opts = {});

}  // namespace dnsym
