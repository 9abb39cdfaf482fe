// JSON forms of the core value types (stable element strings "y^k x^l | s").

#pragma once

#include "json.hpp"

#include "dnsym/covers.hpp"
#include "dnsym/group.hpp"
#include "dnsym/hurwitz.hpp"

namespace dnsym {

using ordered_json = nlohmann::ordered_json;

ordered_json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const ordered_json& j);

ordered_json subgroup_to_json(const Subgroup& s);
ordered_json vector_to_json(const HurwitzVector& v, bool embed_group = false);
HurwitzVector vector_from_json(const FiniteGroup& g, const ordered_json& j);

// Mirrors one table row: quotient vector, genus, delta and the restricted
// vector (identified with abstract D_n when the subgroup is dihedral).
ordered_json restricted_to_json(const RestrictedCover& rc);

ordered_json orbit_to_json(const OrbitClass& oc);

}  // namespace dnsym
