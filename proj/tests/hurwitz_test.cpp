#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnsym/hurwitz.hpp"
#include "oracles.hpp"

using namespace dnsym;

namespace {

HurwitzVector vec(const FiniteGroup& g, std::initializer_list<const char*> entries) {
  std::vector<GroupElement> b;
  for (const char* e : entries) b.push_back(g.parse(e));
  return HurwitzVector(g, {}, std::move(b));
}

// all product-one branch vectors of the given length over a pool of entries
std::vector<HurwitzVector> product_one_vectors(const FiniteGroup& g,
                                               const std::vector<GroupElement>& pool,
                                               int len) {
  std::vector<HurwitzVector> out;
  std::vector<GroupElement> pick(len, g.identity());
  auto rec = [&](auto&& self, int pos, GroupElement prefix) -> void {
    if (pos == len - 1) {
      GroupElement last = g.inv(prefix);
      if (last == g.identity()) return;
      bool in_pool = false;
      for (const GroupElement& p : pool) in_pool = in_pool || p == last;
      if (!in_pool) return;
      pick[len - 1] = last;
      out.emplace_back(g, std::vector<HurwitzVector::Handle>{}, pick);
      return;
    }
    for (const GroupElement& p : pool) {
      pick[pos] = p;
      self(self, pos + 1, g.mul(prefix, p));
    }
  };
  rec(rec, 0, g.identity());
  return out;
}

std::vector<GroupElement> reflections(const FiniteGroup& g) {
  std::vector<GroupElement> out;
  for (GroupElement a : g.elements())
    if (a.refl == 1) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("construction enforces the surface relation") {
  FiniteGroup g = FiniteGroup::make(GroupType::DnBare, 3);
  CHECK_THROWS_AS(vec(g, {"y", "y x"}), std::invalid_argument);
  // identity entries are erased
  HurwitzVector v(g, {}, {g.parse("y"), g.identity(), g.parse("y")});
  CHECK(v.length() == 2);
  // handle pairs enter through the commutator
  HurwitzVector torus(g, {{g.parse("x"), g.parse("y")}}, {g.parse("x^-2")});
  CHECK(torus.genus() == 1);
  CHECK(product_one(torus));
  CHECK_THROWS_AS(HurwitzVector(g, {{g.parse("x"), g.parse("y")}}, {g.parse("x^2")}),
                  std::invalid_argument);
}

TEST_CASE("braid moves") {
  FiniteGroup g = FiniteGroup::make(GroupType::DnBare, 3);
  SUBCASE("sigma_1 conjugates the adjacent pair") {
    HurwitzVector v = vec(g, {"y", "y x", "y x^2", "y x"});
    HurwitzVector w = braid_move(v, 1);
    // y (yx) y^-1 = y x^2
    CHECK(w.branches()[0] == g.parse("y x^2"));
    CHECK(w.branches()[1] == g.parse("y"));
    CHECK(w.branches()[2] == v.branches()[2]);
    CHECK(product_one(w));
  }
  SUBCASE("inverse undoes the move") {
    auto vectors = product_one_vectors(g, reflections(g), 4);
    CHECK(vectors.size() > 0);
    for (const HurwitzVector& v : vectors)
      for (int i = 1; i <= 3; ++i) {
        CHECK(braid_move(braid_move(v, i), i, BraidDir::Inverse) == v);
        CHECK(braid_move(braid_move(v, i, BraidDir::Inverse), i) == v);
      }
  }
  SUBCASE("braid and far-commutation relations") {
    FiniteGroup g4 = FiniteGroup::make(GroupType::DnBare, 4);
    std::vector<GroupElement> pool;
    for (GroupElement a : g4.elements())
      if (!(a == g4.identity())) pool.push_back(a);
    auto vectors = product_one_vectors(g4, reflections(g4), 4);
    for (const HurwitzVector& v : vectors) {
      // sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2
      HurwitzVector lhs = braid_move(braid_move(braid_move(v, 1), 2), 1);
      HurwitzVector rhs = braid_move(braid_move(braid_move(v, 2), 1), 2);
      CHECK(lhs == rhs);
      // sigma_1 sigma_3 = sigma_3 sigma_1
      CHECK(braid_move(braid_move(v, 1), 3) == braid_move(braid_move(v, 3), 1));
    }
    CHECK(vectors.size() > 0);
  }
  SUBCASE("index range and genus preconditions") {
    HurwitzVector v = vec(g, {"y", "y x", "y x", "y"});
    CHECK_THROWS_AS(braid_move(v, 0), std::invalid_argument);
    CHECK_THROWS_AS(braid_move(v, 4), std::invalid_argument);
    HurwitzVector torus(g, {{g.parse("x"), g.parse("y")}}, {g.parse("x^-2")});
    CHECK_THROWS_AS(braid_move(torus, 1), std::invalid_argument);
  }
}

TEST_CASE("automorphism action") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 4);
  Subgroup h = distinguished_subgroup(g);
  HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
  SUBCASE("identity map leaves the vector unchanged") {
    auto auts = automorphisms_fixing(g, h);
    bool found_identity = false;
    for (const GroupMap& phi : auts)
      if (apply_aut(a, phi) == a && phi.apply(g.element(0, 1, 0)) == g.element(0, 1, 0))
        found_identity = true;
    CHECK(found_identity);
  }
  SUBCASE("the morphism (e,1) -> (x^m,1) moves the last two entries") {
    std::vector<std::pair<GroupElement, GroupElement>> img{
        {g.element(0, 1, 0), g.element(0, 1, 0)},
        {g.element(1, 0, 0), g.element(1, 2, 0)},  // y -> y x^{-m}
        {g.element(0, 0, 1), g.element(0, 2, 1)}};
    auto phi = complete_homomorphism(g, g, img);
    REQUIRE(phi.has_value());
    REQUIRE(phi->is_automorphism());
    HurwitzVector b = apply_aut(a, *phi);
    CHECK(b.branches()[4] == g.element(0, 2, 1));
    CHECK(b.branches()[5] == g.element(0, 2, 1));
    CHECK(product_one(b));
    CHECK(generates(b, g));
  }
  SUBCASE("braid moves commute with every automorphism") {
    auto auts = automorphisms(g);
    auto vectors = product_one_vectors(
        g, std::vector<GroupElement>(g.elements().begin() + 1, g.elements().end()), 3);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < vectors.size(); k += 7) {
      const HurwitzVector& v = vectors[k];
      for (const GroupMap& phi : auts)
        for (int i = 1; i <= 2; ++i) {
          CHECK(apply_aut(braid_move(v, i), phi) == braid_move(apply_aut(v, phi), i));
          ++checked;
        }
    }
    CHECK(checked > 1000);
  }
}

TEST_CASE("braid moves preserve class data and derived genus") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 4);
  auto class_of = [&](GroupElement a) {
    int best = g.order();
    for (GroupElement t : g.elements()) best = std::min(best, g.index_of(g.conj(a, t)));
    return best;
  };
  auto class_multiset = [&](const HurwitzVector& v) {
    std::vector<int> out;
    for (GroupElement b : v.branches()) out.push_back(class_of(b));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto vectors = product_one_vectors(
      g, std::vector<GroupElement>(g.elements().begin() + 1, g.elements().end()), 4);
  auto auts = automorphisms(g);
  for (std::size_t k = 0; k < vectors.size(); k += 23) {
    const HurwitzVector& v = vectors[k];
    long long genus = riemann_hurwitz_genus(g.order(), signature_of(v));
    for (int i = 1; i < v.length(); ++i) {
      HurwitzVector w = braid_move(v, i);
      CHECK(class_multiset(w) == class_multiset(v));
      CHECK(signature_of(w) == signature_of(v));
      CHECK(riemann_hurwitz_genus(g.order(), signature_of(w)) == genus);
      CHECK(generates(w, g) == generates(v, g));
    }
    const GroupMap& phi = auts[k % auts.size()];
    HurwitzVector w = apply_aut(v, phi);
    CHECK(riemann_hurwitz_genus(g.order(), signature_of(w)) == genus);
    // classes map forward under the automorphism
    std::vector<int> mapped;
    for (GroupElement b : v.branches()) mapped.push_back(class_of(phi.apply(b)));
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == class_multiset(w));
  }
}

TEST_CASE("generation and signatures") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 3);
  HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
  CHECK(product_one(a));
  CHECK(generates(a, g));
  HurwitzVector bad = vec(g, {"y | 1", "y | 1", "e | 1", "e | 1", "e | 1", "e | 1"});
  CHECK_FALSE(generates(bad, g));
  Signature sig = signature_of(a);
  CHECK(sig == Signature{0, {2, 2, 2, 2, 2, 2}});
}

TEST_CASE("Riemann-Hurwitz arithmetic") {
  SUBCASE("genus of the covering curve") {
    for (long long n : {2, 3, 4, 5, 6, 8}) {
      Signature six2{0, {2, 2, 2, 2, 2, 2}};
      CHECK(riemann_hurwitz_genus(4 * n, six2) == 2 * n + 1);
      Signature unramified{2, {}};
      CHECK(riemann_hurwitz_genus(2 * n, unramified) == 2 * n + 1);
    }
    CHECK(riemann_hurwitz_genus(2, Signature{0, {2, 2}}) == 0);
    // inconsistent signatures are rejected
    CHECK_THROWS_AS(riemann_hurwitz_genus(4, Signature{0, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(riemann_hurwitz_genus(2, Signature{0, {2}}), std::invalid_argument);
  }
  SUBCASE("orbifold Euler characteristic") {
    CHECK(orbifold_euler(Signature{0, {2, 2, 2, 2, 2, 2}}) == Rational(-1));
    CHECK(orbifold_euler(Signature{2, {}}) == Rational(-2));
    CHECK(orbifold_euler(Signature{0, {2, 3}}) == Rational(5, 6));
  }
  SUBCASE("fixed-locus dimension") {
    CHECK(delta(Signature{2, {}}) == 3);
    CHECK(delta(Signature{0, {2, 2, 2, 2, 2, 2, 2, 2}}) == 5);
    CHECK(delta(Signature{1, {2, 2, 2, 2}}) == 4);
  }
}

TEST_CASE("triple normalization") {
  FiniteGroup g = FiniteGroup::make(GroupType::DnBare, 3);
  SUBCASE("reaches a repeated-pair form") {
    HurwitzVector v = vec(g, {"y", "y x", "y x^2", "y x"});  // product one
    HurwitzVector w = normalize_triple(v, 1);
    bool normal = w.branches()[0] == w.branches()[1] || w.branches()[1] == w.branches()[2];
    CHECK(normal);
    CHECK(w.branches()[3] == v.branches()[3]);  // untouched outside the triple
    oracles::TripleOrbit orbit_oracle(g, {v.branches()[0], v.branches()[1], v.branches()[2]});
    CHECK(orbit_oracle.contains(g, {w.branches()[0], w.branches()[1], w.branches()[2]}));
  }
  SUBCASE("already-normal input is returned unchanged") {
    HurwitzVector v = vec(g, {"y", "y", "y x", "y x"});
    CHECK(normalize_triple(v, 1) == v);
    CHECK(normalize_triple(v, 2) == v);
  }
  SUBCASE("rejects non-reflection entries") {
    HurwitzVector v = vec(g, {"y", "x", "y x^2", "x^2"});
    CHECK_THROWS_AS(normalize_triple(v, 1), std::invalid_argument);
  }
  SUBCASE("reachability for all reflection triples, small n") {
    for (int n : {3, 4, 5, 6}) {
      FiniteGroup gn = FiniteGroup::make(GroupType::DnBare, n);
      for (GroupElement a : reflections(gn))
        for (GroupElement b : reflections(gn))
          for (GroupElement c : reflections(gn)) {
            GroupElement closer = gn.inv(gn.mul(gn.mul(a, b), c));
            std::vector<GroupElement> branches{a, b, c, closer};
            HurwitzVector v(gn, {}, branches);
            HurwitzVector w = normalize_triple(v, 1);
            bool normal =
                w.branches()[0] == w.branches()[1] || w.branches()[1] == w.branches()[2];
            CHECK(normal);
            oracles::TripleOrbit orbit_oracle(gn, {a, b, c});
            CHECK(orbit_oracle.has_normal);
            CHECK(orbit_oracle.contains(
                gn, {w.branches()[0], w.branches()[1], w.branches()[2]}));
          }
    }
  }
}

TEST_CASE("orbit enumeration") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 4);
  Subgroup h = distinguished_subgroup(g);
  auto auts = automorphisms_fixing(g, h);
  HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
  HurwitzVector b =
      vec(g, {"y | 1", "y x^2 | 1", "y x | 1", "y x | 1", "x^2 | 1", "e | 1"});
  SUBCASE("the two listed even-n forms lie in different classes") {
    SameOrbitResult r = same_orbit(a, b, auts);
    CHECK(r.exhausted);
    CHECK_FALSE(r.same);
  }
  SUBCASE("the (x^m,1)-pair variant is equivalent to the base form") {
    HurwitzVector c =
        vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "x^2 | 1", "x^2 | 1"});
    SameOrbitResult r = same_orbit(a, c, auts);
    CHECK(r.exhausted);
    CHECK(r.same);
  }
  SUBCASE("orbit contains its seed and re-running is a fixed point") {
    OrbitClass oc = orbit(a, auts);
    CHECK(oc.exhausted);
    CHECK(oc.size > 1);
    OrbitClass again = orbit(oc.representative, auts);
    CHECK(again.size == oc.size);
    CHECK(again.representative == oc.representative);
    SameOrbitResult r = same_orbit(a, oc.representative, auts);
    CHECK(r.same);
  }
  SUBCASE("orbit of size one only for vectors fixed by every move") {
    // central entries over an abelian-quotient-like setup: use D_2 x Z/2
    FiniteGroup g2 = FiniteGroup::make(GroupType::Type1, 2);
    HurwitzVector fixed = vec(g2, {"e | 1", "e | 1"});
    OrbitClass oc = orbit(fixed, {});
    CHECK(oc.size == 1);
  }
  SUBCASE("node cap reports truncation") {
    OrbitClass oc = orbit(a, auts, {5});
    CHECK_FALSE(oc.exhausted);
    CHECK(oc.size >= 5);
  }
  SUBCASE("packed keys order like the element order") {
    OrbitEngine engine(g, 6, auts);
    HurwitzVector lo = vec(g, {"e | 1", "e | 1", "y | 1", "y | 1", "y x | 1", "y x | 1"});
    CHECK(engine.pack(lo) < engine.pack(a));
    CHECK(engine.unpack(engine.pack(a)) == a);
    CHECK(lo.lex_less(a));
  }
}
