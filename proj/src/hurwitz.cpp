#include "dnsym/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace dnsym {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) fail_arg("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Signature::str() const {
  std::string s = "(" + std::to_string(genus) + ";";
  for (std::size_t i = 0; i < orders.size(); ++i)
    s += (i ? "," : " ") + std::to_string(orders[i]);
  if (orders.empty()) s += " -";
  return s + ")";
}

HurwitzVector::HurwitzVector(FiniteGroup group, std::vector<Handle> handles,
                             std::vector<GroupElement> branches)
    : group_(std::move(group)), handles_(std::move(handles)) {
  GroupElement e = group_.identity();
  branches_.reserve(branches.size());
  for (const GroupElement& b : branches)
    if (!(b == e)) branches_.push_back(b);
  GroupElement p = e;
  for (const Handle& h : handles_) {
    GroupElement comm = group_.mul(group_.mul(h.first, h.second),
                                   group_.mul(group_.inv(h.first), group_.inv(h.second)));
    p = group_.mul(p, comm);
  }
  for (const GroupElement& b : branches_) p = group_.mul(p, b);
  if (!(p == e)) fail_arg("Hurwitz vector violates the product-one relation");
}

bool HurwitzVector::lex_less(const HurwitzVector& other) const {
  auto cmp = [](const GroupElement& a, const GroupElement& b) { return element_less(a, b); };
  std::vector<GroupElement> flat_a, flat_b;
  for (const Handle& h : handles_) {
    flat_a.push_back(h.first);
    flat_a.push_back(h.second);
  }
  flat_a.insert(flat_a.end(), branches_.begin(), branches_.end());
  for (const Handle& h : other.handles_) {
    flat_b.push_back(h.first);
    flat_b.push_back(h.second);
  }
  flat_b.insert(flat_b.end(), other.branches_.begin(), other.branches_.end());
  return std::lexicographical_compare(flat_a.begin(), flat_a.end(), flat_b.begin(),
                                      flat_b.end(), cmp);
}

std::string HurwitzVector::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < handles_.size(); ++i) {
    if (i) s += ", ";
    s += group_.name(handles_[i].first) + " , " + group_.name(handles_[i].second);
  }
  if (!handles_.empty()) s += " ; ";
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (i) s += ", ";
    s += group_.name(branches_[i]);
  }
  return s + "]";
}

bool operator==(const HurwitzVector& a, const HurwitzVector& b) {
  return a.group_.same_group(b.group_) && a.handles_ == b.handles_ &&
         a.branches_ == b.branches_;
}

HurwitzVector braid_move(const HurwitzVector& v, int i, BraidDir dir) {
  if (v.genus() != 0) fail_arg("braid moves act on genus-0 vectors only");
  int r = v.length();
  if (i < 1 || i >= r) fail_arg("braid index out of range");
  const FiniteGroup& g = v.group();
  std::vector<GroupElement> b(v.branches().begin(), v.branches().end());
  GroupElement x = b[i - 1], y = b[i];
  if (dir == BraidDir::Forward) {
    b[i - 1] = g.mul(g.mul(x, y), g.inv(x));
    b[i] = x;
  } else {
    b[i - 1] = y;
    b[i] = g.mul(g.mul(g.inv(y), x), y);
  }
  return HurwitzVector(g, {}, std::move(b));
}

HurwitzVector apply_aut(const HurwitzVector& v, const GroupMap& phi) {
  if (!phi.source().same_group(v.group())) fail_arg("automorphism group mismatch");
  std::vector<HurwitzVector::Handle> handles;
  for (const auto& h : v.handles())
    handles.emplace_back(phi.apply(h.first), phi.apply(h.second));
  std::vector<GroupElement> branches;
  for (const GroupElement& b : v.branches()) branches.push_back(phi.apply(b));
  return HurwitzVector(phi.target(), std::move(handles), std::move(branches));
}

bool product_one(const HurwitzVector& v) {
  const FiniteGroup& g = v.group();
  GroupElement p = g.identity();
  for (const auto& h : v.handles()) {
    GroupElement comm =
        g.mul(g.mul(h.first, h.second), g.mul(g.inv(h.first), g.inv(h.second)));
    p = g.mul(p, comm);
  }
  for (const GroupElement& b : v.branches()) p = g.mul(p, b);
  return p == g.identity();
}

bool generates(const HurwitzVector& v, const FiniteGroup& g) {
  if (!v.group().same_group(g)) fail_arg("vector belongs to a different group");
  std::vector<GroupElement> gens;
  for (const auto& h : v.handles()) {
    gens.push_back(h.first);
    gens.push_back(h.second);
  }
  gens.insert(gens.end(), v.branches().begin(), v.branches().end());
  return closure_order(g, gens) == g.order();
}

Signature signature_of(const HurwitzVector& v) {
  Signature sig;
  sig.genus = v.genus();
  for (const GroupElement& b : v.branches()) sig.orders.push_back(v.group().order_of(b));
  std::sort(sig.orders.begin(), sig.orders.end());
  return sig;
}

long long riemann_hurwitz_genus(long long group_order, const Signature& sig) {
  if (group_order < 1) fail_arg("group order must be positive");
  // 2g - 2 = |G| (2g' - 2) + sum (|G| - |G|/m_i); all terms must stay integral
  long long twog2 = group_order * (2 * sig.genus - 2);
  for (int mi : sig.orders) {
    if (mi < 2) fail_arg("branching index below 2");
    if (group_order % mi != 0)
      fail_arg("inconsistent signature: index " + std::to_string(mi) +
               " does not divide the group order");
    twog2 += group_order - group_order / mi;
  }
  if (twog2 % 2 != 0 || twog2 < -2)
    fail_arg("inconsistent signature: 2g-2 = " + std::to_string(twog2));
  return twog2 / 2 + 1;
}

Rational orbifold_euler(const Signature& sig) {
  Rational chi(2 - 2 * sig.genus);
  for (int mi : sig.orders) chi = chi - (Rational(1) - Rational(1, mi));
  return chi;
}

int delta(const Signature& sig) { return 3 * sig.genus - 3 + sig.r(); }

// ---- orbit machinery ----------------------------------------------------

namespace {
constexpr int kMaxOrbitLen = 8;
}  // namespace

// Branch tuples pack into one word: entry 0 in the most significant byte so
// that word order equals lexicographic order on element indices.
struct OrbitEngine::Impl {
  FiniteGroup g;
  int r;
  std::vector<std::uint8_t> mul;  // order x order
  std::vector<std::uint8_t> inv;
  std::vector<std::vector<std::uint8_t>> auts;

  Impl(FiniteGroup group, int len, std::span<const GroupMap> aut_list)
      : g(std::move(group)), r(len) {
    int n = g.order();
    if (n > 256) fail("orbit search supports groups of order at most 256");
    if (r < 1 || r > kMaxOrbitLen)
      fail("orbit search supports 1 to " + std::to_string(kMaxOrbitLen) +
           " branch points, got " + std::to_string(r));
    mul.resize(std::size_t(n) * n);
    inv.resize(n);
    for (int i = 0; i < n; ++i) {
      inv[i] = std::uint8_t(g.index_of(g.inv(g.by_index(i))));
      for (int j = 0; j < n; ++j)
        mul[std::size_t(i) * n + j] =
            std::uint8_t(g.index_of(g.mul(g.by_index(i), g.by_index(j))));
    }
    for (const GroupMap& a : aut_list) {
      if (!a.source().same_group(g) || !a.target().same_group(g))
        fail_arg("orbit automorphism acts on a different group");
      if (!a.total()) fail_arg("orbit automorphism must be total");
      auts.emplace_back(a.images().begin(), a.images().end());
    }
  }

  std::uint8_t times(std::uint8_t a, std::uint8_t b) const {
    return mul[std::size_t(a) * g.order() + b];
  }

  std::uint8_t at(std::uint64_t key, int i) const {
    return std::uint8_t(key >> (8 * (r - 1 - i)));
  }

  std::uint64_t with(std::uint64_t key, int i, std::uint8_t v) const {
    int shift = 8 * (r - 1 - i);
    return (key & ~(std::uint64_t(0xFF) << shift)) | (std::uint64_t(v) << shift);
  }

  std::uint64_t braid(std::uint64_t key, int i, bool forward) const {
    std::uint8_t a = at(key, i), b = at(key, i + 1);
    if (forward) {
      key = with(key, i, times(times(a, b), inv[a]));
      key = with(key, i + 1, a);
    } else {
      key = with(key, i, b);
      key = with(key, i + 1, times(times(inv[b], a), b));
    }
    return key;
  }

  std::uint64_t aut(std::uint64_t key, const std::vector<std::uint8_t>& images) const {
    std::uint64_t out = 0;
    for (int i = 0; i < r; ++i) out = (out << 8) | images[at(key, i)];
    return out;
  }

  template <typename Visit>
  void neighbors(std::uint64_t key, Visit visit) const {
    for (int i = 0; i + 1 < r; ++i) {
      visit(braid(key, i, true));
      visit(braid(key, i, false));
    }
    for (const auto& images : auts) visit(aut(key, images));
  }
};

OrbitEngine::OrbitEngine(FiniteGroup g, int length, std::span<const GroupMap> auts)
    : impl_(std::make_shared<const Impl>(std::move(g), length, auts)) {}

std::uint64_t OrbitEngine::pack(const HurwitzVector& v) const {
  if (v.genus() != 0 || v.length() != impl_->r || !v.group().same_group(impl_->g))
    fail_arg("vector does not fit this orbit engine");
  std::uint64_t key = 0;
  for (const GroupElement& b : v.branches())
    key = (key << 8) | std::uint8_t(impl_->g.index_of(b));
  return key;
}

HurwitzVector OrbitEngine::unpack(std::uint64_t key) const {
  std::vector<GroupElement> branches(impl_->r, impl_->g.identity());
  for (int i = impl_->r - 1; i >= 0; --i) {
    branches[i] = impl_->g.by_index(int(key & 0xFF));
    key >>= 8;
  }
  return HurwitzVector(impl_->g, {}, std::move(branches));
}

bool OrbitEngine::closure(std::uint64_t seed, std::uint64_t node_cap,
                          const std::function<void(std::uint64_t)>& visit) const {
  std::unordered_set<std::uint64_t> seen{seed};
  std::deque<std::uint64_t> queue{seed};
  visit(seed);
  while (!queue.empty()) {
    if (seen.size() >= node_cap) return false;
    std::uint64_t cur = queue.front();
    queue.pop_front();
    impl_->neighbors(cur, [&](std::uint64_t next) {
      if (seen.insert(next).second) {
        queue.push_back(next);
        visit(next);
      }
    });
  }
  return true;
}

SameOrbitResult OrbitEngine::connected(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t node_cap) const {
  if (a == b) return {true, true};
  // bidirectional search, expanding the smaller frontier first
  struct Side {
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::uint64_t> queue;
  };
  Side s[2];
  s[0].seen.insert(a);
  s[0].queue.push_back(a);
  s[1].seen.insert(b);
  s[1].queue.push_back(b);
  bool met = false;
  while (!met) {
    int side = s[0].queue.empty()                       ? 1
               : s[1].queue.empty()                     ? 0
               : s[0].queue.size() <= s[1].queue.size() ? 0
                                                        : 1;
    if (s[side].queue.empty()) break;  // both empty: disjoint orbits
    if (s[0].seen.size() + s[1].seen.size() >= node_cap) return {false, false};
    std::size_t level = s[side].queue.size();
    for (std::size_t k = 0; k < level && !met; ++k) {
      std::uint64_t cur = s[side].queue.front();
      s[side].queue.pop_front();
      impl_->neighbors(cur, [&](std::uint64_t next) {
        if (met) return;
        if (s[side].seen.insert(next).second) {
          if (s[1 - side].seen.count(next)) {
            met = true;
            return;
          }
          s[side].queue.push_back(next);
        }
      });
    }
    if (s[0].queue.empty() && s[1].queue.empty()) break;
  }
  return {met, true};
}

namespace {

std::string move_descriptor(int r, std::size_t naut) {
  return "braid sigma_1.." + std::to_string(r - 1) + " with " + std::to_string(naut) +
         " automorphisms";
}

}  // namespace

OrbitClass orbit(const HurwitzVector& v, std::span<const GroupMap> auts,
                 const OrbitOptions& opts) {
  if (v.genus() != 0) fail_arg("orbit enumeration acts on genus-0 vectors only");
  OrbitEngine engine(v.group(), v.length(), auts);
  std::uint64_t start = engine.pack(v);
  std::uint64_t best = start;
  std::uint64_t size = 0;
  bool exhausted = engine.closure(start, opts.node_cap, [&](std::uint64_t key) {
    ++size;
    if (key < best) best = key;
  });
  return OrbitClass{engine.unpack(best), size, exhausted,
                    move_descriptor(v.length(), auts.size())};
}

SameOrbitResult same_orbit(const HurwitzVector& v, const HurwitzVector& w,
                           std::span<const GroupMap> auts, const OrbitOptions& opts) {
  if (v.genus() != 0 || w.genus() != 0) fail_arg("orbit search acts on genus-0 vectors");
  if (!v.group().same_group(w.group())) fail_arg("vectors over different groups");
  if (v.length() != w.length()) return {false, true};
  OrbitEngine engine(v.group(), v.length(), auts);
  return engine.connected(engine.pack(v), engine.pack(w), opts.node_cap);
}

HurwitzVector normalize_triple(const HurwitzVector& v, int i) {
  if (v.genus() != 0) fail_arg("triple normalization acts on genus-0 vectors only");
  int r = v.length();
  if (i < 1 || i + 1 >= r) fail_arg("triple index out of range");
  const FiniteGroup& g = v.group();
  for (int k = i - 1; k <= i + 1; ++k)
    if (v.branches()[k].refl != 1) fail_arg("triple entries must all be reflections");

  // Entries outside the triple never move, so close over triples only.
  using Triple = std::array<int, 3>;
  Triple start{g.index_of(v.branches()[i - 1]), g.index_of(v.branches()[i]),
               g.index_of(v.branches()[i + 1])};
  auto normal = [](const Triple& t) { return t[0] == t[1] || t[1] == t[2]; };
  if (normal(start)) return v;

  auto key = [&](const Triple& t) {
    return std::uint32_t(t[0]) << 20 | std::uint32_t(t[1]) << 10 | std::uint32_t(t[2]);
  };
  auto step = [&](const Triple& t, int pos, bool forward) {
    Triple s = t;
    GroupElement a = g.by_index(t[pos]), b = g.by_index(t[pos + 1]);
    if (forward) {
      s[pos] = g.index_of(g.mul(g.mul(a, b), g.inv(a)));
      s[pos + 1] = t[pos];
    } else {
      s[pos] = t[pos + 1];
      s[pos + 1] = g.index_of(g.mul(g.mul(g.inv(b), a), b));
    }
    return s;
  };

  std::unordered_set<std::uint32_t> seen{key(start)};
  std::deque<Triple> queue{start};
  std::optional<Triple> best;
  while (!queue.empty()) {
    Triple cur = queue.front();
    queue.pop_front();
    for (int pos : {0, 1})
      for (bool forward : {true, false}) {
        Triple next = step(cur, pos, forward);
        if (!seen.insert(key(next)).second) continue;
        queue.push_back(next);
        if (normal(next) && (!best || next < *best)) best = next;
      }
  }
  if (!best) fail("no normal form reachable for the given triple");
  std::vector<GroupElement> branches(v.branches().begin(), v.branches().end());
  for (int k = 0; k < 3; ++k) branches[i - 1 + k] = g.by_index((*best)[k]);
  return HurwitzVector(g, {}, std::move(branches));
}

}  // namespace dnsym
