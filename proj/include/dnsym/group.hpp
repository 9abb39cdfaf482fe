// Exact arithmetic in the dihedral group D_n and its order-4n extensions,
// plus subgroup and automorphism enumeration.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dnsym {

[[noreturn]] void fail(const std::string& msg);      // std::runtime_error
[[noreturn]] void fail_arg(const std::string& msg);  // std::invalid_argument

// Type1: D_n x Z/2.
// Type2: D_{2n} = <z,y>, H = <z^2,y>; requires n = 2d.
// Type3: D_n x| <b2>, b2 y b2 = yx^2, b2 x b2 = x^{2h-1}; requires n = 4h, h odd.
// DnBare: plain D_n (extension coordinate always 0).
// ExplicitTable: externally supplied multiplication table.
enum class GroupType { Type1, Type2, Type3, DnBare, ExplicitTable };

std::string_view to_string(GroupType t);
std::optional<GroupType> group_type_from_string(std::string_view s);

// Element in normal form y^k x^l with one extension coordinate s.
// Meaning of s depends on the group type (Z/2 part, odd power of z, or b2).
// For ExplicitTable groups `rot` holds the element index and k = s = 0.
struct GroupElement {
  std::uint32_t gid = 0;  // owning group instance
  std::uint8_t refl = 0;  // y-exponent k
  std::uint16_t rot = 0;  // x-exponent l, reduced to [0, n)
  std::uint8_t ext = 0;   // extension coordinate s

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Fixed total order (reflection-bit, rotation-exponent, extension-coordinate).
bool element_less(const GroupElement& a, const GroupElement& b);

// Immutable once constructed; cheap to copy (shared representation).
// Two separately constructed groups are distinct even for equal parameters.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup make(GroupType type, int n);
  static FiniteGroup from_table(std::vector<std::string> names,
                                const std::vector<std::vector<int>>& table,
                                std::vector<int> distinguished = {});

  // Direct product with Z/2 as an ExplicitTable group; element (g, b) has
  // index 2 * index_of(g) + b in the product.
  FiniteGroup times_z2() const;
  GroupElement embed_z2(const FiniteGroup& product, GroupElement base, int bit) const;

  bool valid() const { return d_ != nullptr; }
  GroupType type() const;
  int n() const;
  int order() const;
  int m() const;  // n/2, Type1 tables
  int h() const;  // n/4, Type3
  std::uint32_t id() const;
  bool same_group(const FiniteGroup& other) const { return d_ == other.d_; }

  GroupElement identity() const;
  GroupElement element(int refl, int rot, int ext) const;  // normalizes exponents
  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inv(GroupElement a) const;
  GroupElement conj(GroupElement a, GroupElement b) const;  // b a b^-1
  int order_of(GroupElement a) const;

  std::span<const GroupElement> elements() const;  // sorted by element_less
  int index_of(GroupElement a) const;
  GroupElement by_index(int i) const;

  std::string name(GroupElement a) const;           // "y^k x^l | s"
  GroupElement parse(std::string_view text) const;  // canonical or compact form

  // ExplicitTable only: element indices of the designated subgroup H.
  std::span<const int> distinguished_indices() const;

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  const Data& data() const;
  std::shared_ptr<const Data> d_;
};

class Subgroup {
 public:
  // Element set must be closed under the group law; sorted and deduplicated.
  Subgroup(FiniteGroup parent, std::vector<GroupElement> elems,
           std::optional<std::string> label = std::nullopt);

  const FiniteGroup& parent() const { return parent_; }
  std::span<const GroupElement> elements() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int index() const { return parent_.order() / order(); }
  bool contains(GroupElement a) const;
  const std::optional<std::string>& label() const { return label_; }
  Subgroup with_label(std::string label) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  FiniteGroup parent_;
  std::vector<GroupElement> elems_;
  std::vector<bool> mask_;  // by element index
  std::optional<std::string> label_;
};

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const GroupElement> gens,
                          std::optional<std::string> label = std::nullopt);

// Order of the subgroup generated, without materializing it.
int closure_order(const FiniteGroup& g, std::span<const GroupElement> gens);

// All subgroups of index exactly 2 (kernels of surjections onto Z/2),
// labeled against the standard catalog where they match.
std::vector<Subgroup> index2_subgroups(const FiniteGroup& g);

// The distinguished subgroup H of an extension group (extension coordinate 0).
Subgroup distinguished_subgroup(const FiniteGroup& g);

// Named subgroups of the standard catalog: H, H_{1,1}..H_{1,6}, H_{2,*}, H_{3,*}.
std::vector<Subgroup> standard_subgroups(const FiniteGroup& g);
std::optional<Subgroup> find_subgroup(const FiniteGroup& g, std::string_view label);

// Witnesses (r, s) with order(r) = |S|/2, order(s) = 2, s r s^-1 = r^-1 and
// <r, s> = S, found by smallest-normal-form-first search; absent if S is not
// dihedral.  The Klein group counts as D_2.
std::optional<std::pair<GroupElement, GroupElement>> is_dihedral(const Subgroup& s);

// Total map between groups; images indexed by source element index.
// kUndef marks elements outside the domain (used for subgroup-defined maps).
class GroupMap {
 public:
  static constexpr std::uint16_t kUndef = 0xFFFF;

  GroupMap(FiniteGroup src, FiniteGroup dst, std::vector<std::uint16_t> images);

  const FiniteGroup& source() const { return src_; }
  const FiniteGroup& target() const { return dst_; }
  bool total() const;
  GroupElement apply(GroupElement a) const;
  std::span<const std::uint16_t> images() const { return img_; }

  bool is_homomorphism() const;  // checked on the defined domain
  bool is_automorphism() const;
  GroupMap compose(const GroupMap& inner) const;  // (*this) o inner
  bool maps_onto(const Subgroup& s) const;        // image of s equals s as a set

  friend bool operator==(const GroupMap& a, const GroupMap& b);

 private:
  FiniteGroup src_, dst_;
  std::vector<std::uint16_t> img_;
};

// Extends generator images to a full homomorphism by closure, or reports
// failure.  Images are verified against every product a*g with g a generator.
std::optional<GroupMap> complete_homomorphism(
    const FiniteGroup& src, const FiniteGroup& dst,
    std::span<const std::pair<GroupElement, GroupElement>> gen_images);

// Deterministic generating tuple: greedily extends by the least element
// (in normal-form order) that enlarges the closure.
std::vector<GroupElement> generating_tuple(const FiniteGroup& g);

// Complete automorphism list via generator-image search with order filtering.
// Refuses groups larger than `bound` rather than returning a partial list.
std::vector<GroupMap> automorphisms(const FiniteGroup& g, int bound = 200);
std::vector<GroupMap> automorphisms_fixing(const FiniteGroup& g, const Subgroup& s,
                                           int bound = 200);

// Fixed isomorphism S -> D_n onto `target` (a DnBare group of order |S|).
// H_{1,3} and H_{1,5} use the table convention (generators to x^{m+1}, y, x^m);
// anything else maps the is_dihedral witnesses to (x, y).
GroupMap dihedral_identification(const Subgroup& s, const FiniteGroup& target);

}  // namespace dnsym
