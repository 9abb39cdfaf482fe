#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dnsym/covers.hpp"
#include "dnsym/fixtures.hpp"

using namespace dnsym;

namespace {

HurwitzVector vec(const FiniteGroup& g, std::initializer_list<const char*> entries) {
  std::vector<GroupElement> b;
  for (const char* e : entries) b.push_back(g.parse(e));
  return HurwitzVector(g, {}, std::move(b));
}

}  // namespace

TEST_CASE("quotient vectors") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 6);
  HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
  CHECK(quotient_vector(a, *find_subgroup(g, "H_{1,2}")) ==
        std::vector<int>{0, 0, 0, 0, 1, 1});
  CHECK(quotient_vector(a, *find_subgroup(g, "H_{1,6}")) ==
        std::vector<int>{0, 0, 1, 1, 1, 1});
  CHECK(quotient_vector(a, distinguished_subgroup(g)) ==
        std::vector<int>{1, 1, 1, 1, 1, 1});
  // whole group is not a valid quotient target
  Subgroup whole(g, {g.elements().begin(), g.elements().end()});
  CHECK_THROWS_AS(quotient_vector(a, whole), std::invalid_argument);
}

TEST_CASE("admissibility") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 6);
  Subgroup h = distinguished_subgroup(g);
  SUBCASE("the base form of cover type I is admissible") {
    HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
    CHECK(is_admissible(a, CoverTypeTag::I, h));
  }
  SUBCASE("non-surjective candidates are rejected") {
    // all entries inside a proper subgroup of order 6
    HurwitzVector v =
        vec(g, {"y | 1", "y | 1", "y x^2 | 1", "y x^2 | 1", "y x^4 | 1", "y x^4 | 1"});
    CHECK_FALSE(is_admissible(v, CoverTypeTag::I, h));
    CHECK_FALSE(generates(v, g));
  }
  SUBCASE("signature templates are enforced") {
    // five points with the fifth staying in H: cover II, c5 = order of the entry
    HurwitzVector f2 = vec(g, {"y | 1", "y x^-1 | 1", "e | 1", "e | 1", "x | 0"});
    CHECK(is_admissible(f2, CoverTypeTag::II, h));
    CHECK_FALSE(is_admissible(f2, CoverTypeTag::I, h));
    // III-b requires c4 > 2
    FiniteGroup g2 = FiniteGroup::make(GroupType::Type1, 2);
    Subgroup h2 = distinguished_subgroup(g2);
    HurwitzVector small = vec(g2, {"y x | 1", "e | 1", "y | 0", "x | 0"});
    CHECK_FALSE(is_admissible(small, CoverTypeTag::IIIb, h2));
    // III-a requires d4 > 1: a fourth entry of order 2 fails
    HurwitzVector d41 = vec(g2, {"y | 1", "y x | 1", "e | 1", "x | 1"});
    CHECK_FALSE(is_admissible(d41, CoverTypeTag::IIIa, h2));
  }
  SUBCASE("group type 2 admits nothing") {
    FiniteGroup t2 = FiniteGroup::make(GroupType::Type2, 6);
    Subgroup h2 = distinguished_subgroup(t2);
    for (CoverTypeTag ct :
         {CoverTypeTag::I, CoverTypeTag::II, CoverTypeTag::IIIa, CoverTypeTag::IIIb})
      CHECK(enumerate_admissible(t2, h2, ct).empty());
  }
}

TEST_CASE("enumeration") {
  SUBCASE("cover I over D_3 x Z/2: one class containing the listed form") {
    FiniteGroup g = FiniteGroup::make(GroupType::Type1, 3);
    Subgroup h = distinguished_subgroup(g);
    auto adm = enumerate_admissible(g, h, CoverTypeTag::I);
    REQUIRE_FALSE(adm.empty());
    HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
    auto auts = automorphisms_fixing(g, h);
    OrbitClass oc = orbit(a, auts);
    CHECK(oc.exhausted);
    CHECK(oc.size == adm.size());  // a single class exhausts the admissible set
    for (std::size_t i = 0; i < adm.size(); i += 37)
      CHECK(same_orbit(adm[i], a, auts).same);
  }
  SUBCASE("the twisted extension admits nothing") {
    FiniteGroup g = FiniteGroup::make(GroupType::Type3, 4);
    Subgroup h = distinguished_subgroup(g);
    for (CoverTypeTag ct :
         {CoverTypeTag::I, CoverTypeTag::II, CoverTypeTag::IIIa, CoverTypeTag::IIIb})
      CHECK(enumerate_admissible(g, h, ct).empty());
  }
  SUBCASE("cover III-a over odd n is nonempty, against the source text") {
    // The source text claims 2 d_4 = n forces n even, but its unique listed
    // form is admissible for every n >= 3 with d_4 = n when n is odd.
    FiniteGroup g = FiniteGroup::make(GroupType::Type1, 3);
    Subgroup h = distinguished_subgroup(g);
    auto adm = enumerate_admissible(g, h, CoverTypeTag::IIIa);
    CHECK(adm.size() == 18);
    HurwitzVector form = vec(g, {"y | 1", "y x^-1 | 1", "e | 1", "x | 1"});
    CHECK(is_admissible(form, CoverTypeTag::IIIa, h));
    auto auts = automorphisms_fixing(g, h);
    OrbitClass oc = orbit(form, auts);
    CHECK(oc.exhausted);
    // the closure leaves the positional template, but covers every admissible vector
    CHECK(oc.size >= adm.size());
    for (std::size_t i = 0; i < adm.size(); i += 5)
      CHECK(same_orbit(adm[i], form, auts).same);
  }
  SUBCASE("enumeration is duplicate-free, sorted and admissible throughout") {
    FiniteGroup g = FiniteGroup::make(GroupType::Type1, 4);
    Subgroup h = distinguished_subgroup(g);
    auto adm = enumerate_admissible(g, h, CoverTypeTag::II);
    for (std::size_t i = 1; i < adm.size(); ++i) CHECK(adm[i - 1].lex_less(adm[i]));
    for (std::size_t i = 0; i < adm.size(); i += 11)
      CHECK(is_admissible(adm[i], CoverTypeTag::II, h));
  }
  SUBCASE("the order bound is an explicit refusal") {
    FiniteGroup g = FiniteGroup::make(GroupType::Type1, 6);
    Subgroup h = distinguished_subgroup(g);
    CHECK_THROWS_AS(enumerate_admissible(g, h, CoverTypeTag::I, 10), std::runtime_error);
  }
}

TEST_CASE("index-2 restriction") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 6);
  Subgroup h = distinguished_subgroup(g);
  SUBCASE("cover I to H_{1,6}: genus 1 with four order-2 lifts") {
    HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
    RestrictedCover rc = restrict_index2(a, *find_subgroup(g, "H_{1,6}"));
    CHECK(rc.genus == 1);
    CHECK(rc.delta_value() == 4);
    CHECK(rc.signature() == Signature{1, {2, 2, 2, 2}});
    CHECK(rc.handles.size() == 1);
    CHECK(rc.generates_subgroup());
    CHECK(product_one(rc.vector()));
  }
  SUBCASE("cover II restriction to H_{1,3}: seven points") {
    HurwitzVector f2 = vec(g, {"y | 1", "y x^-1 | 1", "e | 1", "e | 1", "x | 0"});
    RestrictedCover rc = restrict_index2(f2, *find_subgroup(g, "H_{1,3}"));
    CHECK(rc.genus == 0);
    CHECK(rc.delta_value() == 4);
    CHECK(rc.signature() == Signature{0, {2, 2, 2, 2, 2, 2, 3}});  // m = 3
  }
  SUBCASE("cover III-b restricted to H matches the printed intermediate vector") {
    HurwitzVector b = vec(g, {"y x | 1", "e | 1", "y | 0", "x | 0"});
    RestrictedCover rc = restrict_index2(b, h);
    CHECK(rc.genus == 0);
    CHECK(rc.delta_value() == 1);
    CHECK(rc.signature() == Signature{0, {2, 2, 6, 6}});
    FiniteGroup dn = FiniteGroup::make(GroupType::DnBare, 6);
    GroupMap ident = dihedral_identification(h, dn);
    std::vector<GroupElement> mapped;
    for (GroupElement e : rc.branches) mapped.push_back(ident.apply(e));
    HurwitzVector ours(dn, {}, mapped);
    HurwitzVector printed = vec(dn, {"y", "y x^-2", "x", "x"});
    auto aut_dn = automorphisms(dn);
    CHECK(same_orbit(ours, printed, aut_dn).same);
  }
  SUBCASE("restriction needs an entry outside the subgroup") {
    FiniteGroup g4 = FiniteGroup::make(GroupType::Type1, 4);
    HurwitzVector inside = vec(g4, {"y | 0", "y | 0", "x | 0", "x^-1 | 0"});
    CHECK_THROWS_AS(restrict_index2(inside, distinguished_subgroup(g4)),
                    std::invalid_argument);
  }
  SUBCASE("light and full restrictions agree, genus and Euler bookkeeping hold") {
    std::vector<std::vector<std::string>> samples{
        {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"},
        {"y | 1", "y x^-1 | 1", "e | 1", "e | 1", "x | 0"},
        {"y | 1", "y x^-1 | 1", "e | 1", "x | 1"},
        {"y x | 1", "e | 1", "y | 0", "x | 0"}};
    for (const auto& entries : samples) {
      std::vector<GroupElement> b;
      for (const std::string& e : entries) b.push_back(g.parse(e));
      HurwitzVector v(g, {}, std::move(b));
      for (Subgroup& hp : index2_subgroups(g)) {
        bool outside = false;
        for (GroupElement e : v.branches()) outside = outside || !hp.contains(e);
        if (!outside) continue;
        RestrictedCover rc = restrict_index2(v, hp);
        CHECK(rc.signature() == restrict_signature(v, hp));
        // genus of the covering curve agrees through every subgroup
        CHECK(riemann_hurwitz_genus(hp.order(), rc.signature()) ==
              riemann_hurwitz_genus(g.order(), signature_of(v)));
        // orbifold Euler characteristic doubles
        CHECK(orbifold_euler(rc.signature()) ==
              Rational(2) * orbifold_euler(signature_of(v)));
        // branch count bookkeeping
        int expect = 0;
        for (GroupElement e : v.branches()) {
          if (hp.contains(e)) expect += 2;
          else if (g.order_of(e) > 2) expect += 1;
        }
        CHECK(static_cast<int>(rc.branches.size()) == expect);
      }
    }
  }
}

TEST_CASE("dimension pairs") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 6);
  Subgroup h = distinguished_subgroup(g);
  HurwitzVector a = vec(g, {"y | 1", "y | 1", "y x | 1", "y x | 1", "e | 1", "e | 1"});
  CHECK(dimension_pair(a, h, *find_subgroup(g, "H_{1,2}")) == std::pair<int, int>{3, 5});

  HurwitzVector f1 = vec(g, {"y | 1", "y x | 1", "y x | 1", "e | 1", "y | 0"});
  CHECK(dimension_pair(f1, h, *find_subgroup(g, "H_{1,6}")) == std::pair<int, int>{2, 2});

  HurwitzVector iiia = vec(g, {"y | 1", "y x^-1 | 1", "e | 1", "x | 1"});
  CHECK(dimension_pair(iiia, h, *find_subgroup(g, "H_{1,4}")) == std::pair<int, int>{1, 1});

  SUBCASE("the worked example: delta values 1, 1 and 2") {
    HurwitzVector iiib = vec(g, {"y x | 1", "e | 1", "y | 0", "x | 0"});
    CHECK(dimension_pair(iiib, h, *find_subgroup(g, "H_{1,2}")).second == 1);
    CHECK(dimension_pair(iiib, h, *find_subgroup(g, "H_{1,6}")).second == 1);
    CHECK(dimension_pair(iiib, h, *find_subgroup(g, "H_{1,4}")).second == 2);
  }
}

TEST_CASE("the III-c catalog") {
  SUBCASE("n = 3 contains the direct product of order 24") {
    auto cat = iiic_catalog(3);
    REQUIRE(cat.size() == 2);
    CHECK(cat[0].group.order() == 24);  // 4 |D_3|
    CHECK(cat[0].h.order() == 6);
  }
  SUBCASE("entries have a normal dihedral H with Klein quotient") {
    for (int n : {2, 3, 4, 5, 6, 8}) {
      for (const IIIcEntry& entry : iiic_catalog(n)) {
        CAPTURE(entry.name);
        const FiniteGroup& g = entry.group;
        CHECK(g.order() == 8 * n);
        CHECK(entry.h.index() == 4);
        if (n > 2) CHECK(is_dihedral(entry.h).has_value());
        // normality and exponent-2 quotient
        for (GroupElement a : g.elements()) {
          for (GroupElement s : entry.h.elements())
            CHECK(entry.h.contains(g.conj(s, a)));
          CHECK(entry.h.contains(g.mul(a, a)));
        }
      }
      // the twisted entry appears exactly when n = 4h with h odd
      std::size_t expected = (n % 4 == 0 && (n / 4) % 2 == 1) ? 3 : 2;
      CHECK(iiic_catalog(n).size() == expected);
    }
  }
  SUBCASE("no admissible vector over the whole catalog") {
    for (int n = 2; n <= 8; ++n)
      for (const IIIcEntry& entry : iiic_catalog(n))
        CHECK(enumerate_admissible(entry.group, entry.h, CoverTypeTag::IIIc, 8 * n + 1)
                  .empty());
  }
}

TEST_CASE("braid-equivalent inputs restrict to the same signatures") {
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, 4);
  HurwitzVector v = vec(g, {"y | 1", "y x^-1 | 1", "e | 1", "e | 1", "x | 0"});
  HurwitzVector w = braid_move(braid_move(v, 2), 1);
  for (Subgroup& hp : index2_subgroups(g)) {
    bool outside = false;
    for (GroupElement e : v.branches()) outside = outside || !hp.contains(e);
    if (!outside) continue;
    CHECK(restrict_signature(v, hp) == restrict_signature(w, hp));
  }
}
