#include "dnsym/classify.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace dnsym {

namespace {

GroupType group_type_of(int group_type) {
  switch (group_type) {
    case 1: return GroupType::Type1;
    case 2: return GroupType::Type2;
    case 3: return GroupType::Type3;
  }
  fail_arg("group type must be 1, 2 or 3");
}

FixtureSet fixtures_for(const RunOptions& opts) {
  return load_fixtures(opts.fixture_dir.empty() ? default_fixture_dir()
                                                : opts.fixture_dir);
}

}  // namespace

bool ClassificationReport::ok() const {
  if (partial || !inadmissible_forms.empty()) return false;
  for (const OrbitClassEntry& c : classes)
    if (!c.exhausted) return false;
  if (!unmatched_classes.empty()) return false;
  std::map<std::string, int> where;  // form -> class index
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const std::string& f : classes[i].matched_forms) where[f] = static_cast<int>(i);
  for (const std::string& f : expected_forms)
    if (!where.count(f)) return false;
  auto canon = [&](std::string f) {  // follow the declared-equivalence links
    while (equivalent_to.count(f)) f = equivalent_to.at(f);
    return f;
  };
  // forms sharing a class must be declared equivalent, and vice versa
  for (const OrbitClassEntry& c : classes)
    for (const std::string& f : c.matched_forms)
      if (canon(f) != canon(c.matched_forms.front())) return false;
  for (const std::string& f : expected_forms)
    for (const std::string& g : expected_forms)
      if (canon(f) == canon(g) && where.at(f) != where.at(g)) return false;
  return true;
}

std::string ClassificationReport::summary() const {
  std::string s = "cover " + std::string(to_string(cover)) + ", group type " +
                  std::to_string(group_type) + ", n = " + std::to_string(n) + ": " +
                  std::to_string(admissible_count) + " admissible, " +
                  std::to_string(classes.size()) +
                  (classes.size() == 1 ? " class" : " classes");
  if (partial) s += " [PARTIAL]";
  return s;
}

ClassificationReport classify(CoverTypeTag cover, int group_type, int n,
                              const RunOptions& opts) {
  ClassificationReport report;
  report.cover = cover;
  report.group_type = group_type;
  report.n = n;

  FiniteGroup g = FiniteGroup::make(group_type_of(group_type), n);
  Subgroup h = distinguished_subgroup(g);
  std::vector<HurwitzVector> adm = enumerate_admissible(g, h, cover, opts.order_bound);
  report.admissible_count = adm.size();

  FixtureSet fx = fixtures_for(opts);
  std::vector<const FormFixture*> forms;
  if (group_type == 1)
    for (const FormFixture& f : fx.forms)
      if (f.cover == cover && f.when.applies(n)) forms.push_back(&f);
  for (const FormFixture* f : forms) {
    report.expected_forms.push_back(f->id);
    if (!f->same_class_as.empty()) report.equivalent_to[f->id] = f->same_class_as;
  }

  if (!adm.empty()) {
    std::vector<GroupMap> auts = automorphisms_fixing(g, h, opts.order_bound);
    OrbitEngine engine(g, cover_length(cover), auts);
    std::unordered_set<std::uint64_t> admissible_keys;
    for (const HurwitzVector& v : adm) admissible_keys.insert(engine.pack(v));
    std::unordered_map<std::uint64_t, int> assigned;

    for (const HurwitzVector& v : adm) {
      std::uint64_t seed = engine.pack(v);
      if (assigned.count(seed)) continue;
      int id = static_cast<int>(report.classes.size());
      OrbitClassEntry entry{v, 0, 0, true, {}};
      bool exhausted =
          engine.closure(seed, opts.node_cap, [&](std::uint64_t key) {
            ++entry.closure_size;
            if (admissible_keys.count(key) && !assigned.count(key)) {
              assigned.emplace(key, id);
              ++entry.admissible_size;
            }
          });
      entry.exhausted = exhausted;
      report.partial = report.partial || !exhausted;
      report.classes.push_back(std::move(entry));
    }

    for (const FormFixture* f : forms) {
      HurwitzVector vf = parse_branches(g, f->v);
      if (!is_admissible(vf, cover, h)) {
        report.inadmissible_forms.push_back(f->id);
        continue;
      }
      auto it = assigned.find(engine.pack(vf));
      if (it == assigned.end()) {
        report.inadmissible_forms.push_back(f->id);  // enumeration missed it
        continue;
      }
      report.classes[it->second].matched_forms.push_back(f->id);
    }
    for (std::size_t i = 0; i < report.classes.size(); ++i)
      if (report.classes[i].matched_forms.empty())
        report.unmatched_classes.push_back(static_cast<int>(i));
  } else {
    for (const FormFixture* f : forms) report.inadmissible_forms.push_back(f->id);
  }
  return report;
}

// ---- table verification ---------------------------------------------------

namespace {

// conjugacy class ids of a group, by element index
std::vector<int> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order(), -1);
  int next = 0;
  for (const GroupElement& a : g.elements()) {
    if (cls[g.index_of(a)] >= 0) continue;
    int id = next++;
    for (const GroupElement& t : g.elements()) cls[g.index_of(g.conj(a, t))] = id;
  }
  return cls;
}

std::vector<int> class_multiset(const FiniteGroup& g, const std::vector<int>& cls,
                                std::span<const GroupElement> elems) {
  std::vector<int> out;
  for (const GroupElement& a : elems) out.push_back(cls[g.index_of(a)]);
  std::sort(out.begin(), out.end());
  return out;
}

// class multisets equal after applying some automorphism to `a`
bool class_multisets_match(const FiniteGroup& g, const std::vector<int>& cls,
                           std::span<const GroupMap> auts,
                           std::span<const GroupElement> a,
                           std::span<const GroupElement> b) {
  std::vector<int> want = class_multiset(g, cls, b);
  for (const GroupMap& phi : auts) {
    std::vector<GroupElement> mapped;
    mapped.reserve(a.size());
    for (const GroupElement& x : a) mapped.push_back(phi.apply(x));
    if (class_multiset(g, cls, mapped) == want) return true;
  }
  return false;
}

struct TableContext {
  FiniteGroup g;
  Subgroup h;
  FiniteGroup dn;
  std::vector<GroupMap> aut_dn;
  std::vector<int> cls_dn;
  std::uint64_t node_cap;
};

std::string render_restriction(const RestrictedCover& rc, const GroupMap* ident,
                               const FiniteGroup& dn) {
  std::string s = "vq=";
  for (int e : rc.quotient) s += std::to_string(e);
  s += " g=" + std::to_string(rc.genus) + " d=" + std::to_string(rc.delta_value());
  s += " vp=[";
  const FiniteGroup& g = rc.subgroup.parent();
  bool first = true;
  for (const auto& hd : rc.handles) {
    if (!first) s += ", ";
    first = false;
    if (ident)
      s += "(" + dn.name(ident->apply(hd.first)) + " , " + dn.name(ident->apply(hd.second)) + ")";
    else
      s += "(" + g.name(hd.first) + " , " + g.name(hd.second) + ")";
  }
  if (!rc.handles.empty()) s += " ; ";
  for (std::size_t i = 0; i < rc.branches.size(); ++i) {
    if (i) s += ", ";
    s += ident ? dn.name(ident->apply(rc.branches[i])) : g.name(rc.branches[i]);
  }
  return s + "]";
}

// Fixture-side validation, independent of any computed data.
// Returns an explanation when the printed row violates its own invariants.
std::string fixture_row_invalid(const TableContext& ctx, const TableRowFixture& row,
                                int table_r) {
  if (static_cast<int>(row.vq.size()) != table_r) return "v_quot length differs from r";
  int ones = 0;
  for (int e : row.vq) ones += e;
  if (ones == 0 || ones % 2 != 0) return "v_quot weight must be positive and even";
  if (ones / 2 - 1 != row.genus)
    return "genus column contradicts v_quot (double cover branched at " +
           std::to_string(ones) + " points has genus " + std::to_string(ones / 2 - 1) + ")";
  int expect_r = row.delta - 3 * row.genus + 3;
  if (static_cast<int>(row.vp.branches.size()) != expect_r)
    return "entry count " + std::to_string(row.vp.branches.size()) +
           " contradicts delta (expected " + std::to_string(expect_r) + ")";
  if (static_cast<int>(row.vp.handles.size()) != row.genus)
    return "handle count differs from the genus";
  try {
    HurwitzVector v = parse_vector(ctx.dn, row.vp);
    if (v.length() != expect_r) return "identity entries in the printed vector";
    if (!generates(v, ctx.dn)) return "printed vector does not generate D_n";
  } catch (const std::exception& ex) {
    return std::string("printed vector is not a Hurwitz vector: ") + ex.what();
  }
  return "";
}

// Compare the computed restriction with a (well-formed) fixture vector.
CellResult compare_vp(const TableContext& ctx, const RestrictedCover& rc,
                      const GroupMap& ident, const FixtureVector& fv) {
  CellResult out;
  out.checked = true;
  HurwitzVector fixture = parse_vector(ctx.dn, fv);
  std::vector<GroupElement> computed_branches;
  for (const GroupElement& b : rc.branches) computed_branches.push_back(ident.apply(b));

  if (signature_of(fixture) != rc.signature()) {
    out.pass = false;
    out.note = "signature differs (fixture " + signature_of(fixture).str() + ", computed " +
               rc.signature().str() + ")";
    return out;
  }
  if (!class_multisets_match(ctx.dn, ctx.cls_dn, ctx.aut_dn, fixture.branches(),
                             computed_branches)) {
    out.pass = false;
    out.note = "branch conjugacy classes differ under every automorphism of D_n";
    return out;
  }
  if (rc.genus == 0) {
    HurwitzVector computed(ctx.dn, {}, computed_branches);
    SameOrbitResult r = same_orbit(computed, fixture, ctx.aut_dn, {ctx.node_cap});
    if (!r.exhausted) {
      out.pass = false;
      out.note = "orbit search hit the node cap";
    } else if (!r.same) {
      out.pass = false;
      out.note = "not in the braid x Aut(D_n) orbit of the computed restriction";
    }
    return out;
  }
  // positive genus: invariant profile (signature, delta, classes, generation,
  // genus of the covering curve are all fixed above or by the cells)
  long long genus_fixture =
      riemann_hurwitz_genus(2LL * ctx.dn.n(), signature_of(fixture));
  long long genus_computed = riemann_hurwitz_genus(2LL * ctx.dn.n(), rc.signature());
  if (genus_fixture != genus_computed) {
    out.pass = false;
    out.note = "covering-curve genus differs";
  }
  return out;
}

}  // namespace

TableReport verify_tables(int n, const RunOptions& opts) {
  TableReport report;
  report.n = n;
  FixtureSet fx = fixtures_for(opts);

  FiniteGroup g = FiniteGroup::make(GroupType::Type1, n);
  Subgroup h = distinguished_subgroup(g);
  TableContext ctx{g, h, FiniteGroup::make(GroupType::DnBare, n), {}, {}, opts.node_cap};
  ctx.aut_dn = automorphisms(ctx.dn, opts.order_bound);
  ctx.cls_dn = conjugacy_classes(ctx.dn);

  for (const TableFixture& t : fx.tables) {
    if (!t.when.applies(n)) continue;
    report.tables_checked.push_back(t.id);
    HurwitzVector v = parse_branches(g, t.v);
    if (!is_admissible(v, t.cover, h))
      fail("table " + t.id + ": the printed cover vector is not admissible");

    // heading: restriction to H itself
    {
      TableRowResult rr;
      rr.table_id = t.id;
      rr.subgroup = "H";
      RestrictedCover rc = restrict_index2(v, h);
      auto [want_delta, want_genus] = cover_heading(t.cover);
      rr.genus = {true, rc.genus == want_genus, ""};
      rr.delta = {true, rc.delta_value() == want_delta, ""};
      GroupMap ident = dihedral_identification(h, ctx.dn);
      rr.computed = render_restriction(rc, &ident, ctx.dn);
      if (t.v_h) {
        // the printed intermediate vector, same comparison as a row
        TableRowFixture pseudo;
        pseudo.subgroup = "H";
        pseudo.vq = rc.quotient;
        pseudo.genus = rc.genus;
        pseudo.delta = rc.delta_value();
        pseudo.vp = *t.v_h;
        std::string invalid =
            fixture_row_invalid(ctx, pseudo, static_cast<int>(t.v.size()));
        if (!invalid.empty()) {
          rr.invalid_row = true;
          rr.note = invalid;
        } else {
          rr.vp = compare_vp(ctx, rc, ident, *t.v_h);
        }
      }
      if (rr.invalid_row) ++report.invalid_rows;
      report.mismatched_cells += (!rr.genus.pass) + (!rr.delta.pass) + (!rr.vp.pass);
      ++report.checked_rows;
      report.rows.push_back(std::move(rr));
    }

    for (const TableRowFixture& row : t.rows) {
      if (!row.when.applies(n)) continue;
      TableRowResult rr;
      rr.table_id = t.id;
      rr.subgroup = row.subgroup;
      rr.note = row.note;
      auto hp = find_subgroup(g, row.subgroup);
      if (!hp) fail("table " + t.id + ": unknown subgroup " + row.subgroup);
      RestrictedCover rc = restrict_index2(v, *hp);
      GroupMap ident = dihedral_identification(*hp, ctx.dn);
      rr.computed = render_restriction(rc, &ident, ctx.dn);

      rr.vq = {true, rc.quotient == row.vq, ""};
      if (!rr.vq.pass) rr.vq.note = "computed quotient vector differs";
      rr.genus = {true, rc.genus == row.genus, ""};
      rr.delta = {true, rc.delta_value() == row.delta, ""};

      std::string invalid = fixture_row_invalid(ctx, row, static_cast<int>(t.v.size()));
      if (!invalid.empty()) {
        rr.invalid_row = true;
        rr.note = rr.note.empty() ? invalid : rr.note + "; " + invalid;
        ++report.invalid_rows;
      } else {
        rr.vp = compare_vp(ctx, rc, ident, row.vp);
      }
      if (row.corrected) {
        CellResult c = compare_vp(ctx, rc, ident, *row.corrected);
        rr.corrected_pass = c.pass;
        if (c.pass) rr.note += (rr.note.empty() ? "" : "; ") + std::string("proposed correction verified");
      }
      if (!rr.invalid_row)
        report.mismatched_cells +=
            (!rr.vq.pass) + (!rr.genus.pass) + (!rr.delta.pass) + (!rr.vp.pass);
      ++report.checked_rows;
      report.rows.push_back(std::move(rr));
    }
  }
  if (report.tables_checked.empty())
    report.notes.push_back("no table applies at n = " + std::to_string(n));
  return report;
}

// ---- nonexistence ----------------------------------------------------------

bool NonexistenceReport::ok() const {
  for (const Line& l : lines)
    if (l.admissible != 0) return false;
  return true;
}

NonexistenceReport verify_nonexistence(int n_max, const RunOptions& opts) {
  NonexistenceReport report;
  const CoverTypeTag index2_covers[] = {CoverTypeTag::I, CoverTypeTag::II,
                                        CoverTypeTag::IIIa, CoverTypeTag::IIIb};
  for (int n = 2; n <= n_max; n += 2) {
    FiniteGroup g = FiniteGroup::make(GroupType::Type2, n);
    Subgroup h = distinguished_subgroup(g);
    for (CoverTypeTag ct : index2_covers)
      report.lines.push_back({2, n, ct, "D_{2n}",
                              enumerate_admissible(g, h, ct, opts.order_bound).size()});
  }
  for (int n = 4; n <= n_max; n += 8) {
    FiniteGroup g = FiniteGroup::make(GroupType::Type3, n);
    Subgroup h = distinguished_subgroup(g);
    for (CoverTypeTag ct : index2_covers)
      report.lines.push_back({3, n, ct, "twisted extension",
                              enumerate_admissible(g, h, ct, opts.order_bound).size()});
  }
  for (int n = 2; n <= std::min(n_max, 8); ++n)
    for (const IIIcEntry& entry : iiic_catalog(n))
      report.lines.push_back({0, n, CoverTypeTag::IIIc, entry.name,
                              enumerate_admissible(entry.group, entry.h, CoverTypeTag::IIIc,
                                                   std::max(opts.order_bound, 8 * n + 1))
                                  .size()});
  return report;
}

// ---- dimension pairs (and the arithmetic consistency sweep) ---------------

bool CorollaryReport::ok() const {
  if (genus_mismatches || euler_mismatches) return false;
  for (const Pair& p : strict_pairs)
    if (!p.allowed) return false;
  return true;
}

CorollaryReport verify_corollary_pairs(int n, const RunOptions& opts) {
  CorollaryReport report;
  report.n = n;
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, n);
  Subgroup h = distinguished_subgroup(g);

  std::vector<Subgroup> dihedral;
  for (Subgroup& s : index2_subgroups(g))
    if (is_dihedral(s)) dihedral.push_back(std::move(s));

  auto allowed = [](CoverTypeTag ct, int a, int b) {
    switch (ct) {
      case CoverTypeTag::I: return (a == 3 && (b == 4 || b == 5));
      case CoverTypeTag::II: return (a == 2 && (b == 3 || b == 4));
      case CoverTypeTag::IIIa: return (a == 1 && b == 2);
      case CoverTypeTag::IIIb: return (a == 1 && (b == 2 || b == 3));
      default: return false;
    }
  };

  std::map<std::tuple<int, std::string, int, int>, std::uint64_t> seen;
  for (CoverTypeTag ct :
       {CoverTypeTag::I, CoverTypeTag::II, CoverTypeTag::IIIa, CoverTypeTag::IIIb}) {
    for (const HurwitzVector& v : enumerate_admissible(g, h, ct, opts.order_bound)) {
      ++report.vectors_checked;
      Signature base = signature_of(v);
      long long genus_c = riemann_hurwitz_genus(g.order(), base);
      Rational chi2 = Rational(2) * orbifold_euler(base);
      int delta_h = delta(restrict_signature(v, h));
      for (const Subgroup& hp : dihedral) {
        Signature sig = restrict_signature(v, hp);
        if (riemann_hurwitz_genus(hp.order(), sig) != genus_c) ++report.genus_mismatches;
        if (!(orbifold_euler(sig) == chi2)) ++report.euler_mismatches;
        int delta_hp = delta(sig);
        if (delta_h < delta_hp) {
          ++seen[{static_cast<int>(ct), hp.label().value_or("?"), delta_h, delta_hp}];
          if (ct == CoverTypeTag::IIIb && delta_h == 1 && delta_hp == 3)
            report.iiib_13_seen = true;
        }
      }
    }
  }
  for (const auto& [key, count] : seen) {
    auto [ct, label, dh, dhp] = key;
    report.strict_pairs.push_back({static_cast<CoverTypeTag>(ct), label, dh, dhp, count,
                                   allowed(static_cast<CoverTypeTag>(ct), dh, dhp)});
  }
  return report;
}

// ---- remark: IIIa vs IIIb under the full automorphism group ---------------

RemarkReport verify_remark_equivalence(int n, const RunOptions& opts) {
  if (n % 2 != 0) fail_arg("the remark check needs n even");
  RemarkReport report;
  report.n = n;
  FiniteGroup g = FiniteGroup::make(GroupType::Type1, n);
  Subgroup h = distinguished_subgroup(g);
  HurwitzVector a =
      parse_branches(g, {"y | 1", "y x^-1 | 1", "e | 1", "x | 1"});       // III-a
  HurwitzVector b = parse_branches(g, {"y x | 1", "e | 1", "y | 0", "x | 0"});  // III-b

  std::vector<GroupMap> full = automorphisms(g, opts.order_bound);
  std::vector<GroupMap> fixing = automorphisms_fixing(g, h, opts.order_bound);
  SameOrbitResult full_res = same_orbit(a, b, full, {opts.node_cap});
  report.full_aut_equivalent = full_res.same;
  SameOrbitResult fix_res = same_orbit(a, b, fixing, {opts.node_cap});
  report.h_fixing_inequivalent = !fix_res.same;
  report.h_fixing_search_exhausted = fix_res.exhausted;

  // the stated witness: (x,0) -> (x,1), (y,0) -> (yx,0), (e,1) -> (e,1)
  std::vector<std::pair<GroupElement, GroupElement>> images{
      {g.element(0, 1, 0), g.element(0, 1, 1)},
      {g.element(1, 0, 0), g.element(1, 1, 0)},
      {g.element(0, 0, 1), g.element(0, 0, 1)}};
  auto phi = complete_homomorphism(g, g, images);
  if (phi && phi->is_automorphism() && !phi->maps_onto(h)) {
    SameOrbitResult w1 = same_orbit(apply_aut(a, *phi), b, {}, {opts.node_cap});
    SameOrbitResult w2 = same_orbit(apply_aut(b, *phi), a, {}, {opts.node_cap});
    report.witness_connects = w1.same || w2.same;
  }
  return report;
}

// ---- rendering -------------------------------------------------------------

ordered_json to_json(const ClassificationReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "classification";
  j["cover"] = std::string(to_string(r.cover));
  j["group_type"] = r.group_type;
  j["n"] = r.n;
  j["admissible"] = r.admissible_count;
  ordered_json classes = ordered_json::array();
  for (const OrbitClassEntry& c : r.classes) {
    ordered_json jc;
    ordered_json branches = ordered_json::array();
    for (const GroupElement& b : c.representative.branches())
      branches.push_back(c.representative.group().name(b));
    jc["representative"] = std::move(branches);
    jc["admissible_size"] = c.admissible_size;
    jc["closure_size"] = c.closure_size;
    jc["exhausted"] = c.exhausted;
    jc["matched_forms"] = c.matched_forms;
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  j["expected_forms"] = r.expected_forms;
  j["inadmissible_forms"] = r.inadmissible_forms;
  j["unmatched_classes"] = r.unmatched_classes;
  j["partial"] = r.partial;
  j["ok"] = r.ok();
  return j;
}

ordered_json to_json(const TableReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "tables";
  j["n"] = r.n;
  j["tables"] = r.tables_checked;
  ordered_json rows = ordered_json::array();
  for (const TableRowResult& row : r.rows) {
    ordered_json jr;
    jr["table"] = row.table_id;
    jr["subgroup"] = row.subgroup;
    auto cell = [](const CellResult& c) {
      ordered_json v;
      v["checked"] = c.checked;
      v["pass"] = c.pass;
      if (!c.note.empty()) v["note"] = c.note;
      return v;
    };
    jr["v_quot"] = cell(row.vq);
    jr["genus"] = cell(row.genus);
    jr["delta"] = cell(row.delta);
    jr["v_prime"] = cell(row.vp);
    jr["invalid_row"] = row.invalid_row;
    if (row.corrected_pass) jr["corrected_pass"] = true;
    if (!row.note.empty()) jr["note"] = row.note;
    jr["computed"] = row.computed;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["mismatched_cells"] = r.mismatched_cells;
  j["invalid_rows"] = r.invalid_rows;
  j["notes"] = r.notes;
  j["ok"] = r.ok();
  return j;
}

ordered_json to_json(const NonexistenceReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "nonexistence";
  ordered_json lines = ordered_json::array();
  for (const auto& l : r.lines) {
    ordered_json jl;
    jl["group_type"] = l.group_type;
    jl["n"] = l.n;
    jl["cover"] = std::string(to_string(l.cover));
    jl["scope"] = l.scope;
    jl["admissible"] = l.admissible;
    lines.push_back(std::move(jl));
  }
  j["lines"] = std::move(lines);
  j["ok"] = r.ok();
  return j;
}

ordered_json to_json(const CorollaryReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "dimension-pairs";
  j["n"] = r.n;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.strict_pairs) {
    ordered_json jp;
    jp["cover"] = std::string(to_string(p.cover));
    jp["subgroup"] = p.subgroup;
    jp["pair"] = {p.delta_h, p.delta_hp};
    jp["count"] = p.count;
    jp["allowed"] = p.allowed;
    pairs.push_back(std::move(jp));
  }
  j["strict_pairs"] = std::move(pairs);
  j["vectors_checked"] = r.vectors_checked;
  j["genus_mismatches"] = r.genus_mismatches;
  j["euler_mismatches"] = r.euler_mismatches;
  j["iiib_pair_1_3_seen"] = r.iiib_13_seen;
  j["ok"] = r.ok();
  return j;
}

ordered_json to_json(const RemarkReport& r) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "remark-equivalence";
  j["n"] = r.n;
  j["full_aut_equivalent"] = r.full_aut_equivalent;
  j["h_fixing_inequivalent"] = r.h_fixing_inequivalent;
  j["h_fixing_search_exhausted"] = r.h_fixing_search_exhausted;
  j["witness_connects"] = r.witness_connects;
  j["ok"] = r.ok();
  return j;
}

namespace {

std::string pass_fail(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

std::string to_markdown(const ClassificationReport& r) {
  std::string s = "## Classification: cover " + std::string(to_string(r.cover)) +
                  ", group type " + std::to_string(r.group_type) + ", n = " +
                  std::to_string(r.n) + "\n\n";
  s += "admissible vectors: " + std::to_string(r.admissible_count) + "\n\n";
  s += "| class | representative | admissible | closure | exhausted | forms |\n";
  s += "|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const OrbitClassEntry& c = r.classes[i];
    std::string forms;
    for (const std::string& f : c.matched_forms) forms += f + " ";
    s += "| " + std::to_string(i + 1) + " | `" + c.representative.str() + "` | " +
         std::to_string(c.admissible_size) + " | " + std::to_string(c.closure_size) +
         " | " + (c.exhausted ? "yes" : "NO") + " | " + forms + "|\n";
  }
  if (!r.inadmissible_forms.empty()) {
    s += "\ninadmissible forms:";
    for (const std::string& f : r.inadmissible_forms) s += " " + f;
    s += "\n";
  }
  s += "\nresult: " + pass_fail(r.ok()) + "\n";
  return s;
}

std::string to_markdown(const TableReport& r) {
  std::string s = "## Table verification, n = " + std::to_string(r.n) + "\n\n";
  s += "| table | H' | v_quot | genus | delta | v_prime | note |\n";
  s += "|---|---|---|---|---|---|---|\n";
  auto cell = [](const CellResult& c) {
    return c.checked ? pass_fail(c.pass) : std::string("-");
  };
  for (const TableRowResult& row : r.rows) {
    std::string note = row.invalid_row ? "INVALID ROW: " + row.note : row.note;
    s += "| " + row.table_id + " | " + row.subgroup + " | " + cell(row.vq) + " | " +
         cell(row.genus) + " | " + cell(row.delta) + " | " + cell(row.vp) + " | " +
         note + " |\n";
  }
  s += "\nmismatched cells: " + std::to_string(r.mismatched_cells) +
       ", invalid rows: " + std::to_string(r.invalid_rows) + "\n";
  for (const std::string& note : r.notes) s += "\n" + note + "\n";
  s += "\nresult: " + pass_fail(r.ok()) + "\n";
  return s;
}

std::string to_markdown(const NonexistenceReport& r) {
  std::string s = "## Non-existence sweep\n\n| group type | n | cover | scope | admissible |\n";
  s += "|---|---|---|---|---|\n";
  for (const auto& l : r.lines)
    s += "| " + (l.group_type ? std::to_string(l.group_type) : std::string("catalog")) +
         " | " + std::to_string(l.n) + " | " + std::string(to_string(l.cover)) + " | " +
         l.scope + " | " + std::to_string(l.admissible) + " |\n";
  s += "\nresult: " + pass_fail(r.ok()) + "\n";
  return s;
}

std::string to_markdown(const CorollaryReport& r) {
  std::string s = "## Dimension pairs, n = " + std::to_string(r.n) + "\n\n";
  s += "vectors checked: " + std::to_string(r.vectors_checked) +
       ", genus mismatches: " + std::to_string(r.genus_mismatches) +
       ", Euler mismatches: " + std::to_string(r.euler_mismatches) + "\n\n";
  s += "| cover | H' | (delta_H, delta_H') | count | allowed |\n|---|---|---|---|---|\n";
  for (const auto& p : r.strict_pairs)
    s += "| " + std::string(to_string(p.cover)) + " | " + p.subgroup + " | (" +
         std::to_string(p.delta_h) + "," + std::to_string(p.delta_hp) + ") | " +
         std::to_string(p.count) + " | " + (p.allowed ? "yes" : "NO") + " |\n";
  s += "\nIII-b pair (1,3) observed: " + std::string(r.iiib_13_seen ? "yes" : "no") + "\n";
  s += "\nresult: " + pass_fail(r.ok()) + "\n";
  return s;
}

std::string to_markdown(const RemarkReport& r) {
  std::string s = "## III-a vs III-b equivalence, n = " + std::to_string(r.n) + "\n\n";
  s += "- equivalent under braid x Aut(G): " + pass_fail(r.full_aut_equivalent) + "\n";
  s += "- inequivalent under braid x Aut(G)_H: " + pass_fail(r.h_fixing_inequivalent) +
       (r.h_fixing_search_exhausted ? "" : " (search truncated)") + "\n";
  s += "- stated witness bridges the braid orbits: " + pass_fail(r.witness_connects) + "\n";
  s += "\nresult: " + pass_fail(r.ok()) + "\n";
  return s;
}

}  // namespace dnsym
