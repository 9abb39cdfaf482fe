// Cover-type admissibility, quotient and index-2 restriction of covers, and
// dimension bookkeeping.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnsym/group.hpp"
#include "dnsym/hurwitz.hpp"

namespace dnsym {

// The five branching configurations under which a proper supergroup acts
// with the same fixed-locus dimension:
//   I     (2,2,2,2,2,2)        quotient images (1,1,1,1,1,1)
//   II    (2,2,2,2,c5)         images (1,1,1,1,0)
//   IIIa  (2,2,2,2d4), d4 > 1  images (1,1,1,1)
//   IIIb  (2,2,c3,c4), c3 <= c4, c4 > 2   images (1,1,0,0)
//   IIIc  (2,2,2,c4), c4 > 2   images: three distinct involutions of (Z/2)^2, then 0
enum class CoverTypeTag { I, II, IIIa, IIIb, IIIc };

std::string_view to_string(CoverTypeTag t);
std::optional<CoverTypeTag> cover_from_string(std::string_view s);

int cover_length(CoverTypeTag t);          // r
int cover_subgroup_index(CoverTypeTag t);  // 2, or 4 for IIIc

// (delta_H, g_{C/H}) required of the intermediate cover per cover type.
std::pair<int, int> cover_heading(CoverTypeTag t);

// Coset of an element modulo an index-2 subgroup, as 0/1.
int quotient_image(const Subgroup& h, GroupElement a);

// Componentwise image of the branch entries in G/H' (index 2).
std::vector<int> quotient_vector(const HurwitzVector& v, const Subgroup& h);

// True iff v generates, matches the cover-type signature template, and its
// quotient images match the cover-type pattern w.r.t. H.
bool is_admissible(const HurwitzVector& v, CoverTypeTag t, const Subgroup& h);

// Complete duplicate-free list of admissible vectors, in lexicographic order.
// Branch entries are chosen position by position; the product-one constraint
// eliminates the final free choice.
std::vector<HurwitzVector> enumerate_admissible(const FiniteGroup& g, const Subgroup& h,
                                                CoverTypeTag t, int order_bound = 200);

// Restriction of an admissible genus-0 vector to an index-2 subgroup.
// Branch images live in the parent group (inside the subgroup).
struct RestrictedCover {
  Subgroup subgroup;
  std::vector<int> quotient;  // image of each base point in G/H'
  int genus = 0;
  std::vector<std::pair<GroupElement, GroupElement>> handles;
  std::vector<GroupElement> branches;

  Signature signature() const;
  int delta_value() const;
  HurwitzVector vector() const;    // over the parent group
  bool generates_subgroup() const;
};

RestrictedCover restrict_index2(const HurwitzVector& v, const Subgroup& h);

// Signature of the restriction, skipping handle reconstruction (bulk checks).
Signature restrict_signature(const HurwitzVector& v, const Subgroup& h);

// (delta_H, delta_{H'}) of the restrictions.
std::pair<int, int> dimension_pair(const HurwitzVector& v, const Subgroup& h,
                                   const Subgroup& hp);

// Concrete groups G of order 8n with normal H isomorphic to D_n and
// G/H isomorphic to (Z/2)^2: D_n x (Z/2)^2, D_{2n} x Z/2, and (for n = 4h,
// h odd) the twisted extension times Z/2.
struct IIIcEntry {
  FiniteGroup group;
  Subgroup h;
  std::string name;
};
std::vector<IIIcEntry> iiic_catalog(int n);

}  // namespace dnsym
