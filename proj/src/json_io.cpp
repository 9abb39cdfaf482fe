#include "dnsym/json_io.hpp"

namespace dnsym {

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json j;
  j["type"] = std::string(to_string(g.type()));
  j["n"] = g.n();
  ordered_json elems = ordered_json::array();
  for (const GroupElement& a : g.elements()) elems.push_back(g.name(a));
  j["elements"] = std::move(elems);
  return j;
}

FiniteGroup group_from_json(const ordered_json& j) {
  auto type = group_type_from_string(j.at("type").get<std::string>());
  if (!type) fail_arg("unknown group type in JSON");
  if (*type == GroupType::ExplicitTable)
    fail_arg("ExplicitTable groups cannot be reconstructed from JSON");
  FiniteGroup g = FiniteGroup::make(*type, j.at("n").get<int>());
  if (j.contains("elements")) {
    const auto& elems = j.at("elements");
    if (static_cast<int>(elems.size()) != g.order())
      fail_arg("element list size does not match the group order");
    for (int i = 0; i < g.order(); ++i)
      if (!(g.parse(elems[i].get<std::string>()) == g.by_index(i)))
        fail_arg("element list does not match the canonical order");
  }
  return g;
}

ordered_json subgroup_to_json(const Subgroup& s) {
  ordered_json j;
  if (s.label()) j["label"] = *s.label();
  j["order"] = s.order();
  j["index"] = s.index();
  ordered_json elems = ordered_json::array();
  for (const GroupElement& a : s.elements()) elems.push_back(s.parent().name(a));
  j["elements"] = std::move(elems);
  return j;
}

ordered_json vector_to_json(const HurwitzVector& v, bool embed_group) {
  ordered_json j;
  if (embed_group) j["group"] = group_to_json(v.group());
  j["genus"] = v.genus();
  ordered_json handles = ordered_json::array();
  for (const auto& h : v.handles())
    handles.push_back({v.group().name(h.first), v.group().name(h.second)});
  j["handles"] = std::move(handles);
  ordered_json branches = ordered_json::array();
  for (const GroupElement& b : v.branches()) branches.push_back(v.group().name(b));
  j["branches"] = std::move(branches);
  return j;
}

HurwitzVector vector_from_json(const FiniteGroup& g, const ordered_json& j) {
  std::vector<HurwitzVector::Handle> handles;
  if (j.contains("handles"))
    for (const auto& h : j.at("handles"))
      handles.emplace_back(g.parse(h.at(0).get<std::string>()),
                           g.parse(h.at(1).get<std::string>()));
  std::vector<GroupElement> branches;
  for (const auto& b : j.at("branches")) branches.push_back(g.parse(b.get<std::string>()));
  HurwitzVector v(g, std::move(handles), std::move(branches));
  if (j.contains("genus") && j.at("genus").get<int>() != v.genus())
    fail_arg("genus does not match the handle count");
  return v;
}

ordered_json restricted_to_json(const RestrictedCover& rc) {
  ordered_json j;
  j["subgroup"] = rc.subgroup.label().value_or("");
  j["v_quot"] = rc.quotient;
  j["genus"] = rc.genus;
  j["delta"] = rc.delta_value();
  const FiniteGroup& g = rc.subgroup.parent();
  bool identified = false;
  ordered_json handles = ordered_json::array(), branches = ordered_json::array();
  if (is_dihedral(rc.subgroup)) {
    FiniteGroup dn = FiniteGroup::make(GroupType::DnBare, rc.subgroup.order() / 2);
    GroupMap ident = dihedral_identification(rc.subgroup, dn);
    for (const auto& h : rc.handles)
      handles.push_back({dn.name(ident.apply(h.first)), dn.name(ident.apply(h.second))});
    for (const GroupElement& b : rc.branches) branches.push_back(dn.name(ident.apply(b)));
    identified = true;
  } else {
    for (const auto& h : rc.handles) handles.push_back({g.name(h.first), g.name(h.second)});
    for (const GroupElement& b : rc.branches) branches.push_back(g.name(b));
  }
  if (!handles.empty()) j["v_prime_handles"] = std::move(handles);
  j["v_prime"] = std::move(branches);
  j["identified_with_dn"] = identified;
  return j;
}

ordered_json orbit_to_json(const OrbitClass& oc) {
  ordered_json j;
  j["representative"] = vector_to_json(oc.representative);
  j["size"] = oc.size;
  j["exhausted"] = oc.exhausted;
  j["moves"] = oc.moves;
  return j;
}

}  // namespace dnsym
