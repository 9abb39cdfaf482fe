#include "dnsym/covers.hpp"

#include <algorithm>

namespace dnsym {

std::string_view to_string(CoverTypeTag t) {
  switch (t) {
    case CoverTypeTag::I: return "I";
    case CoverTypeTag::II: return "II";
    case CoverTypeTag::IIIa: return "III-a";
    case CoverTypeTag::IIIb: return "III-b";
    case CoverTypeTag::IIIc: return "III-c";
  }
  return "?";
}

std::optional<CoverTypeTag> cover_from_string(std::string_view s) {
  if (s == "I") return CoverTypeTag::I;
  if (s == "II") return CoverTypeTag::II;
  if (s == "III-a" || s == "IIIa") return CoverTypeTag::IIIa;
  if (s == "III-b" || s == "IIIb") return CoverTypeTag::IIIb;
  if (s == "III-c" || s == "IIIc") return CoverTypeTag::IIIc;
  return std::nullopt;
}

int cover_length(CoverTypeTag t) {
  switch (t) {
    case CoverTypeTag::I: return 6;
    case CoverTypeTag::II: return 5;
    default: return 4;
  }
}

int cover_subgroup_index(CoverTypeTag t) { return t == CoverTypeTag::IIIc ? 4 : 2; }

std::pair<int, int> cover_heading(CoverTypeTag t) {
  switch (t) {
    case CoverTypeTag::I: return {3, 2};
    case CoverTypeTag::II: return {2, 1};
    case CoverTypeTag::IIIa: return {1, 1};
    case CoverTypeTag::IIIb: return {1, 0};
    case CoverTypeTag::IIIc: return {1, 0};
  }
  return {0, 0};
}

int quotient_image(const Subgroup& h, GroupElement a) {
  if (h.index() != 2) fail_arg("quotient image requires an index-2 subgroup");
  return h.contains(a) ? 0 : 1;
}

std::vector<int> quotient_vector(const HurwitzVector& v, const Subgroup& h) {
  if (!h.parent().same_group(v.group())) fail_arg("subgroup of a different group");
  if (h.index() != 2) fail_arg("quotient vector requires an index-2 subgroup");
  std::vector<int> out;
  out.reserve(v.length());
  int ones = 0;
  for (const GroupElement& b : v.branches()) {
    out.push_back(quotient_image(h, b));
    ones += out.back();
  }
  if (ones % 2 != 0) fail("product-one vector with odd quotient weight");
  return out;
}

namespace {

// Coset labels modulo an index-4 subgroup with Klein quotient: 0 for H,
// 1..3 for the involutions in order of their least coset representative.
struct KleinQuotient {
  std::vector<int> label_by_index;

  KleinQuotient(const FiniteGroup& g, const Subgroup& h) {
    if (h.index() != 4) fail_arg("IIIc requires an index-4 subgroup");
    label_by_index.assign(g.order(), -1);
    std::vector<GroupElement> reps;
    for (const GroupElement& a : g.elements()) {
      if (label_by_index[g.index_of(a)] >= 0) continue;
      int label = static_cast<int>(reps.size());
      reps.push_back(a);
      for (const GroupElement& x : h.elements())
        label_by_index[g.index_of(g.mul(a, x))] = label;
    }
    if (reps.size() != 4) fail("index-4 coset count mismatch");
    if (label_by_index[g.index_of(g.identity())] != 0)
      fail("identity coset must come first");
    // Klein check: every nontrivial coset squares into H
    for (const GroupElement& a : g.elements())
      if (label_by_index[g.index_of(g.mul(a, a))] != 0)
        fail_arg("quotient modulo H is not (Z/2)^2");
  }
};

bool order2(const FiniteGroup& g, GroupElement a) { return g.order_of(a) == 2; }

}  // namespace

bool is_admissible(const HurwitzVector& v, CoverTypeTag t, const Subgroup& h) {
  const FiniteGroup& g = v.group();
  if (!h.parent().same_group(g)) fail_arg("subgroup of a different group");
  if (h.index() != cover_subgroup_index(t))
    fail_arg(std::string("cover type ") + std::string(to_string(t)) + " requires index " +
             std::to_string(cover_subgroup_index(t)) + " subgroup");
  if (v.genus() != 0 || v.length() != cover_length(t)) return false;

  auto b = v.branches();
  if (t == CoverTypeTag::IIIc) {
    KleinQuotient q(g, h);
    auto lab = [&](GroupElement a) { return q.label_by_index[g.index_of(a)]; };
    for (int i = 0; i < 3; ++i)
      if (!order2(g, b[i]) || lab(b[i]) == 0) return false;
    if (lab(b[0]) == lab(b[1]) || lab(b[0]) == lab(b[2]) || lab(b[1]) == lab(b[2]))
      return false;
    if (g.order_of(b[3]) <= 2 || lab(b[3]) != 0) return false;
    return generates(v, g);
  }

  std::vector<int> eps = quotient_vector(v, h);
  switch (t) {
    case CoverTypeTag::I:
      for (int i = 0; i < 6; ++i)
        if (!order2(g, b[i]) || eps[i] != 1) return false;
      break;
    case CoverTypeTag::II:
      for (int i = 0; i < 4; ++i)
        if (!order2(g, b[i]) || eps[i] != 1) return false;
      if (eps[4] != 0) return false;  // c5 = order of the fifth entry, >= 2
      break;
    case CoverTypeTag::IIIa:
      for (int i = 0; i < 3; ++i)
        if (!order2(g, b[i]) || eps[i] != 1) return false;
      if (eps[3] != 1) return false;
      if (g.order_of(b[3]) % 2 != 0 || g.order_of(b[3]) <= 2) return false;  // 2*d4, d4 > 1
      break;
    case CoverTypeTag::IIIb:
      for (int i = 0; i < 2; ++i)
        if (!order2(g, b[i]) || eps[i] != 1) return false;
      if (eps[2] != 0 || eps[3] != 0) return false;
      if (g.order_of(b[2]) > g.order_of(b[3])) return false;  // c3 <= c4
      if (g.order_of(b[3]) <= 2) return false;                // c4 > 2
      break;
    case CoverTypeTag::IIIc:
      break;  // handled above
  }
  return generates(v, g);
}

std::vector<HurwitzVector> enumerate_admissible(const FiniteGroup& g, const Subgroup& h,
                                                CoverTypeTag t, int order_bound) {
  if (g.order() > order_bound)
    fail("enumeration refused: group order " + std::to_string(g.order()) +
         " exceeds bound " + std::to_string(order_bound));
  if (!h.parent().same_group(g)) fail_arg("subgroup of a different group");
  if (h.index() != cover_subgroup_index(t))
    fail_arg("subgroup index does not match the cover type");

  int r = cover_length(t);
  // candidate pool per position; the last entry is forced by product-one
  std::vector<std::vector<GroupElement>> pool(r - 1);
  auto all_with = [&](auto pred) {
    std::vector<GroupElement> out;
    for (const GroupElement& a : g.elements())
      if (pred(a)) out.push_back(a);
    return out;
  };

  std::optional<KleinQuotient> klein;
  if (t == CoverTypeTag::IIIc) klein.emplace(g, h);
  auto lab = [&](GroupElement a) { return klein->label_by_index[g.index_of(a)]; };

  switch (t) {
    case CoverTypeTag::I:
    case CoverTypeTag::II: {
      auto refl_like = all_with([&](GroupElement a) {
        return order2(g, a) && quotient_image(h, a) == 1;
      });
      for (int i = 0; i < (t == CoverTypeTag::I ? 5 : 4); ++i) pool[i] = refl_like;
      break;
    }
    case CoverTypeTag::IIIa: {
      auto p = all_with([&](GroupElement a) {
        return order2(g, a) && quotient_image(h, a) == 1;
      });
      pool[0] = pool[1] = pool[2] = p;
      break;
    }
    case CoverTypeTag::IIIb: {
      auto p = all_with([&](GroupElement a) {
        return order2(g, a) && quotient_image(h, a) == 1;
      });
      pool[0] = pool[1] = p;
      pool[2] = all_with([&](GroupElement a) {
        return quotient_image(h, a) == 0 && g.order_of(a) >= 2;
      });
      break;
    }
    case CoverTypeTag::IIIc: {
      for (int lbl = 1; lbl <= 3; ++lbl)
        pool[lbl - 1] = all_with([&](GroupElement a) {
          (void)lbl;
          return order2(g, a) && lab(a) != 0;
        });
      break;
    }
  }

  std::vector<HurwitzVector> out;
  std::vector<GroupElement> pick(r, g.identity());
  auto validate_last = [&](GroupElement last) {
    switch (t) {
      case CoverTypeTag::I:
        return order2(g, last) && quotient_image(h, last) == 1;
      case CoverTypeTag::II:
        return quotient_image(h, last) == 0 && g.order_of(last) >= 2;
      case CoverTypeTag::IIIa:
        return quotient_image(h, last) == 1 && g.order_of(last) > 2 &&
               g.order_of(last) % 2 == 0;
      case CoverTypeTag::IIIb:
        return quotient_image(h, last) == 0 && g.order_of(last) > 2 &&
               g.order_of(pick[2]) <= g.order_of(last);
      case CoverTypeTag::IIIc:
        return lab(last) == 0 && g.order_of(last) > 2;
    }
    return false;
  };

  // depth-first assembly in element order yields lexicographically sorted output
  auto rec = [&](auto&& self, int pos, GroupElement prefix) -> void {
    if (pos == r - 1) {
      GroupElement last = g.inv(prefix);
      if (!validate_last(last)) return;
      if (t == CoverTypeTag::IIIc) {
        // distinct involution labels on the first three entries
        int l0 = lab(pick[0]), l1 = lab(pick[1]), l2 = lab(pick[2]);
        if (l0 == l1 || l0 == l2 || l1 == l2) return;
      }
      pick[r - 1] = last;
      HurwitzVector v(g, {}, pick);
      if (generates(v, g)) out.push_back(std::move(v));
      return;
    }
    for (const GroupElement& a : pool[pos]) {
      pick[pos] = a;
      self(self, pos + 1, g.mul(prefix, a));
    }
  };
  rec(rec, 0, g.identity());
  return out;
}

Signature RestrictedCover::signature() const {
  Signature sig;
  sig.genus = genus;
  const FiniteGroup& g = subgroup.parent();
  for (const GroupElement& b : branches) sig.orders.push_back(g.order_of(b));
  std::sort(sig.orders.begin(), sig.orders.end());
  return sig;
}

int RestrictedCover::delta_value() const { return delta(signature()); }

HurwitzVector RestrictedCover::vector() const {
  return HurwitzVector(subgroup.parent(), handles, branches);
}

bool RestrictedCover::generates_subgroup() const {
  const FiniteGroup& g = subgroup.parent();
  std::vector<GroupElement> gens;
  for (const auto& hd : handles) {
    gens.push_back(hd.first);
    gens.push_back(hd.second);
  }
  gens.insert(gens.end(), branches.begin(), branches.end());
  return subgroup_closure(g, gens).order() == subgroup.order();
}

namespace {

GroupElement commutator(const FiniteGroup& g, GroupElement a, GroupElement b) {
  return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

// Handle pairs solving prod [a_j, b_j] = target, chosen first in element
// order with the full vector required to generate the subgroup.
std::vector<std::pair<GroupElement, GroupElement>> solve_handles(
    const Subgroup& h, int genus, GroupElement target,
    const std::vector<GroupElement>& branches) {
  const FiniteGroup& g = h.parent();
  auto generates_with = [&](std::span<const GroupElement> extra) {
    std::vector<GroupElement> gens(branches);
    gens.insert(gens.end(), extra.begin(), extra.end());
    return subgroup_closure(g, gens).order() == h.order();
  };
  if (genus == 1) {
    for (const GroupElement& a : h.elements())
      for (const GroupElement& b : h.elements()) {
        if (!(commutator(g, a, b) == target)) continue;
        GroupElement pair[] = {a, b};
        if (!generates_with(pair)) continue;
        return {{a, b}};
      }
    fail("no genus-1 handle pair solves the surface relation");
  }
  if (genus == 2) {
    for (const GroupElement& a1 : h.elements())
      for (const GroupElement& b1 : h.elements()) {
        GroupElement rest = g.mul(g.inv(commutator(g, a1, b1)), target);
        for (const GroupElement& a2 : h.elements())
          for (const GroupElement& b2 : h.elements()) {
            if (!(commutator(g, a2, b2) == rest)) continue;
            GroupElement quad[] = {a1, b1, a2, b2};
            if (!generates_with(quad)) continue;
            return {{a1, b1}, {a2, b2}};
          }
      }
    fail("no genus-2 handle pairs solve the surface relation");
  }
  fail("restriction genus " + std::to_string(genus) + " not supported");
}

}  // namespace

RestrictedCover restrict_index2(const HurwitzVector& v, const Subgroup& h) {
  const FiniteGroup& g = v.group();
  if (!h.parent().same_group(g)) fail_arg("subgroup of a different group");
  if (h.index() != 2) fail_arg("restriction requires an index-2 subgroup");
  if (v.genus() != 0) fail_arg("restriction acts on genus-0 vectors");

  int r = v.length();
  auto b = v.branches();
  std::vector<int> eps = quotient_vector(v, h);
  std::vector<int> crossings;
  for (int i = 0; i < r; ++i)
    if (eps[i] == 1) crossings.push_back(i);
  if (crossings.empty())
    fail_arg("vector is not surjective onto G/H': no branch image leaves the subgroup");

  RestrictedCover out{h, eps, int(crossings.size()) / 2 - 1, {}, {}};
  GroupElement tau = b[crossings.front()];

  std::vector<GroupElement> lifts;
  if (out.genus == 0) {
    // Schreier rewriting of the sphere relation along the double cover with
    // branch points p < q; the emitted order keeps the product trivial:
    //   [tau g_i tau^-1]_{i<p}  g_p^2  [g_i]_{p<i<q}  [g_q g_i g_q^-1]_{i>q}
    //   [u g_i u^-1]_{i<p}  [g_q g_i g_q^-1]_{p<i<q}  g_q^2  [g_i]_{i>q}
    // with u = g_q tau^-1.
    int p = crossings[0], q = crossings[1];
    GroupElement gq = b[q];
    GroupElement u = g.mul(gq, g.inv(tau));
    for (int i = 0; i < p; ++i) lifts.push_back(g.conj(b[i], tau));
    lifts.push_back(g.mul(b[p], b[p]));
    for (int i = p + 1; i < q; ++i) lifts.push_back(b[i]);
    for (int i = q + 1; i < r; ++i) lifts.push_back(g.conj(b[i], gq));
    for (int i = 0; i < p; ++i) lifts.push_back(g.conj(b[i], u));
    for (int i = p + 1; i < q; ++i) lifts.push_back(g.conj(b[i], gq));
    lifts.push_back(g.mul(gq, gq));
    for (int i = q + 1; i < r; ++i) lifts.push_back(b[i]);
  } else {
    // Elliptic lifts in base-point order: for image 0 the g_i lift precedes
    // the tau-conjugate; an image-1 point contributes its square.
    for (int i = 0; i < r; ++i) {
      if (eps[i] == 0) {
        lifts.push_back(b[i]);
        lifts.push_back(g.conj(b[i], tau));
      } else {
        lifts.push_back(g.mul(b[i], b[i]));
      }
    }
  }

  GroupElement e = g.identity();
  GroupElement prod = e;
  for (const GroupElement& x : lifts) {
    if (!h.contains(x)) fail("restriction produced an element outside the subgroup");
    prod = g.mul(prod, x);
    if (!(x == e)) out.branches.push_back(x);
  }
  if (out.genus == 0) {
    if (!(prod == e)) fail("genus-0 restriction violates product-one");
  } else {
    out.handles = solve_handles(h, out.genus, g.inv(prod), out.branches);
  }

  // Euler characteristic doubling pins the base genus independently.
  Rational base = orbifold_euler(signature_of(v));
  Rational restricted = orbifold_euler(out.signature());
  if (!(restricted == Rational(2) * base)) fail("orbifold Euler characteristic did not double");
  if (!out.generates_subgroup()) fail("restriction does not generate the subgroup");
  return out;
}

Signature restrict_signature(const HurwitzVector& v, const Subgroup& h) {
  const FiniteGroup& g = v.group();
  if (!h.parent().same_group(g)) fail_arg("subgroup of a different group");
  if (h.index() != 2) fail_arg("restriction requires an index-2 subgroup");
  if (v.genus() != 0) fail_arg("restriction acts on genus-0 vectors");
  Signature sig;
  int crossings = 0;
  for (const GroupElement& b : v.branches()) {
    int ord = g.order_of(b);
    if (h.contains(b)) {
      sig.orders.push_back(ord);
      sig.orders.push_back(ord);
    } else {
      ++crossings;
      if (ord > 2) sig.orders.push_back(ord / 2);
    }
  }
  if (crossings == 0)
    fail_arg("vector is not surjective onto G/H': no branch image leaves the subgroup");
  sig.genus = crossings / 2 - 1;
  std::sort(sig.orders.begin(), sig.orders.end());
  return sig;
}

std::pair<int, int> dimension_pair(const HurwitzVector& v, const Subgroup& h,
                                   const Subgroup& hp) {
  return {delta(restrict_signature(v, h)), delta(restrict_signature(v, hp))};
}

std::vector<IIIcEntry> iiic_catalog(int n) {
  if (n < 2) fail_arg("catalog parameter n must be at least 2");
  if (n > 24) fail_arg("catalog bounded to n <= 24");
  std::vector<IIIcEntry> out;

  auto add_product = [&](const FiniteGroup& base, const Subgroup& base_h,
                         std::string name) {
    FiniteGroup prod = base.times_z2();
    std::vector<GroupElement> hs;
    hs.reserve(base_h.order());
    for (const GroupElement& a : base_h.elements())
      hs.push_back(base.embed_z2(prod, a, 0));
    out.push_back({prod, Subgroup(prod, std::move(hs), "H"), std::move(name)});
  };

  std::string ns = std::to_string(n);
  // D_n x (Z/2)^2
  FiniteGroup g1 = FiniteGroup::make(GroupType::Type1, n);
  add_product(g1, distinguished_subgroup(g1), "D_" + ns + " x (Z/2)^2");

  // D_{2n} x Z/2 with H = <z^2, y> x {0}
  FiniteGroup d2n = FiniteGroup::make(GroupType::DnBare, 2 * n);
  std::vector<GroupElement> hgens{d2n.element(0, 2, 0), d2n.element(1, 0, 0)};
  add_product(d2n, subgroup_closure(d2n, hgens, "H"),
              "D_" + std::to_string(2 * n) + " x Z/2, H = <z^2,y>");

  // twisted extension (group type 3) times a central Z/2, where parameters permit
  if (n % 4 == 0 && (n / 4) % 2 == 1) {
    FiniteGroup g3 = FiniteGroup::make(GroupType::Type3, n);
    add_product(g3, distinguished_subgroup(g3), "type-3 extension (n=" + ns + ") x Z/2");
  }
  return out;
}

}  // namespace dnsym
