#include "dnsym/group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <deque>
#include <stdexcept>

namespace dnsym {

void fail(const std::string& msg) { throw std::runtime_error(msg); }
void fail_arg(const std::string& msg) { throw std::invalid_argument(msg); }

std::string_view to_string(GroupType t) {
  switch (t) {
    case GroupType::Type1: return "Type1";
    case GroupType::Type2: return "Type2";
    case GroupType::Type3: return "Type3";
    case GroupType::DnBare: return "Dn-bare";
    case GroupType::ExplicitTable: return "ExplicitTable";
  }
  return "?";
}

std::optional<GroupType> group_type_from_string(std::string_view s) {
  if (s == "Type1" || s == "1") return GroupType::Type1;
  if (s == "Type2" || s == "2") return GroupType::Type2;
  if (s == "Type3" || s == "3") return GroupType::Type3;
  if (s == "Dn-bare" || s == "Dn") return GroupType::DnBare;
  if (s == "ExplicitTable") return GroupType::ExplicitTable;
  return std::nullopt;
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  if (a.refl != b.refl) return a.refl < b.refl;
  if (a.rot != b.rot) return a.rot < b.rot;
  return a.ext < b.ext;
}

namespace {

std::uint32_t next_group_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1);
}

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

struct FiniteGroup::Data {
  GroupType type = GroupType::DnBare;
  int n = 0;
  int order = 0;
  std::uint32_t gid = 0;
  std::vector<GroupElement> elems;   // sorted by element_less
  std::vector<int> elem_order;       // by index
  std::vector<std::uint16_t> inv_idx;
  // ExplicitTable only:
  std::vector<std::uint16_t> table;  // order*order, row-major
  std::vector<std::string> names;
  std::vector<int> distinguished;
  int identity_idx = 0;
};

const FiniteGroup::Data& FiniteGroup::data() const {
  if (!d_) fail_arg("empty FiniteGroup handle");
  return *d_;
}

GroupType FiniteGroup::type() const { return data().type; }
int FiniteGroup::n() const { return data().n; }
int FiniteGroup::order() const { return data().order; }
std::uint32_t FiniteGroup::id() const { return data().gid; }

int FiniteGroup::m() const {
  const Data& d = data();
  if (d.n % 2 != 0) fail_arg("m = n/2 requires n even");
  return d.n / 2;
}

int FiniteGroup::h() const {
  const Data& d = data();
  if (d.type != GroupType::Type3) fail_arg("h = n/4 is a Type3 parameter");
  return d.n / 4;
}

GroupElement FiniteGroup::identity() const {
  const Data& d = data();
  if (d.type == GroupType::ExplicitTable) return d.elems[d.identity_idx];
  return GroupElement{d.gid, 0, 0, 0};
}

GroupElement FiniteGroup::element(int refl, int rot, int ext) const {
  const Data& d = data();
  if (d.type == GroupType::ExplicitTable) {
    if (refl != 0 || ext != 0 || rot < 0 || rot >= d.order)
      fail_arg("ExplicitTable elements are addressed by index only");
    return d.elems[rot];
  }
  if (d.type == GroupType::DnBare && mod(ext, 2) != 0)
    fail_arg("Dn-bare has no extension coordinate");
  return GroupElement{d.gid, std::uint8_t(mod(refl, 2)),
                      std::uint16_t(mod(rot, d.n)), std::uint8_t(mod(ext, 2))};
}

namespace {

// Type3 conjugation by b2: x -> x^{2h-1}, y -> yx^2.
std::pair<int, int> type3_phi(int k, int l, int n, int h) {
  int c = 2 * h - 1;
  if (k == 0) return {0, mod(c * l, n)};
  return {1, mod(2 + c * l, n)};
}

}  // namespace

GroupElement FiniteGroup::mul(GroupElement a, GroupElement b) const {
  const Data& d = data();
  if (a.gid != d.gid || b.gid != d.gid) fail_arg("cross-group operands");
  switch (d.type) {
    case GroupType::DnBare:
    case GroupType::Type1: {
      int k = (a.refl + b.refl) & 1;
      int l = mod((b.refl ? -int(a.rot) : int(a.rot)) + int(b.rot), d.n);
      int s = (a.ext + b.ext) & 1;
      return GroupElement{d.gid, std::uint8_t(k), std::uint16_t(l), std::uint8_t(s)};
    }
    case GroupType::Type2: {
      // y^k z^t with t = 2l + s, relations of D_{2n}.
      int t1 = 2 * a.rot + a.ext, t2 = 2 * b.rot + b.ext;
      int k = (a.refl + b.refl) & 1;
      int t = mod((b.refl ? -t1 : t1) + t2, 2 * d.n);
      return GroupElement{d.gid, std::uint8_t(k), std::uint16_t(t / 2),
                          std::uint8_t(t % 2)};
    }
    case GroupType::Type3: {
      int bk = b.refl, bl = b.rot;
      if (a.ext) {
        auto [pk, pl] = type3_phi(bk, bl, d.n, d.n / 4);
        bk = pk;
        bl = pl;
      }
      int k = (a.refl + bk) & 1;
      int l = mod((bk ? -int(a.rot) : int(a.rot)) + bl, d.n);
      int s = (a.ext + b.ext) & 1;
      return GroupElement{d.gid, std::uint8_t(k), std::uint16_t(l), std::uint8_t(s)};
    }
    case GroupType::ExplicitTable: {
      int i = a.rot, j = b.rot;
      return d.elems[d.table[std::size_t(i) * d.order + j]];
    }
  }
  fail("unreachable");
}

GroupElement FiniteGroup::inv(GroupElement a) const {
  const Data& d = data();
  if (a.gid != d.gid) fail_arg("cross-group operand");
  return d.elems[d.inv_idx[index_of(a)]];
}

GroupElement FiniteGroup::conj(GroupElement a, GroupElement b) const {
  return mul(mul(b, a), inv(b));
}

int FiniteGroup::order_of(GroupElement a) const {
  const Data& d = data();
  if (a.gid != d.gid) fail_arg("cross-group operand");
  return d.elem_order[index_of(a)];
}

std::span<const GroupElement> FiniteGroup::elements() const { return data().elems; }

int FiniteGroup::index_of(GroupElement a) const {
  const Data& d = data();
  if (a.gid != d.gid) fail_arg("cross-group operand");
  switch (d.type) {
    case GroupType::DnBare: return int(a.refl) * d.n + a.rot;
    case GroupType::ExplicitTable: return a.rot;
    default: return (int(a.refl) * d.n + a.rot) * 2 + a.ext;
  }
}

GroupElement FiniteGroup::by_index(int i) const {
  const Data& d = data();
  if (i < 0 || i >= d.order) fail_arg("element index out of range");
  return d.elems[i];
}

std::span<const int> FiniteGroup::distinguished_indices() const {
  return data().distinguished;
}

std::string FiniteGroup::name(GroupElement a) const {
  const Data& d = data();
  if (a.gid != d.gid) fail_arg("cross-group operand");
  if (d.type == GroupType::ExplicitTable) return d.names[a.rot];
  std::string s = "y^" + std::to_string(int(a.refl)) + " x^" + std::to_string(int(a.rot));
  if (d.type != GroupType::DnBare) s += " | " + std::to_string(int(a.ext));
  return s;
}

namespace {

struct ElemParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  int parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail_arg("expected integer in element '" + std::string(text) + "'");
    int v = 0;
    std::from_chars(text.data() + start, text.data() + pos, v);
    return neg ? -v : v;
  }
};

}  // namespace

GroupElement FiniteGroup::parse(std::string_view text) const {
  const Data& d = data();
  if (d.type == GroupType::ExplicitTable) {
    for (int i = 0; i < d.order; ++i)
      if (d.names[i] == text) return d.elems[i];
    fail_arg("unknown element '" + std::string(text) + "'");
  }
  ElemParser p{text};
  int k = 0, l = 0, s = 0;
  bool saw_coord = false;
  while (!p.eof()) {
    char c = p.peek();
    if (c == '|') {
      ++p.pos;
      s = p.parse_int();
      saw_coord = true;
      if (!p.eof()) fail_arg("trailing input after coordinate in '" + std::string(text) + "'");
      break;
    }
    if (c == 'e') {
      ++p.pos;
      continue;
    }
    if (c == 'y' || c == 'x') {
      ++p.pos;
      int exp = 1;
      if (p.peek() == '^') {
        ++p.pos;
        exp = p.parse_int();
      }
      // fold the atom in from the right: cur * atom
      if (c == 'x') {
        l = mod(l + exp, d.n);
      } else {
        // cur * y^exp: for odd exp appends a reflection
        if (mod(exp, 2) == 1) {
          // (y^k x^l) y = y^{k+1} x^{-l}
          k = (k + 1) & 1;
          l = mod(-l, d.n);
        }
      }
      continue;
    }
    fail_arg("cannot parse element '" + std::string(text) + "'");
  }
  if (saw_coord && d.type == GroupType::DnBare && mod(s, 2) != 0)
    fail_arg("Dn-bare has no extension coordinate");
  return element(k, l, s);
}

FiniteGroup FiniteGroup::make(GroupType type, int n) {
  if (type == GroupType::ExplicitTable)
    fail_arg("use FiniteGroup::from_table for ExplicitTable groups");
  if (n < 2) fail_arg("group parameter n must be at least 2");
  if (type == GroupType::Type2 && n % 2 != 0)
    fail_arg("Type2 requires n = 2d (n even), got n = " + std::to_string(n));
  if (type == GroupType::Type3 && (n % 4 != 0 || (n / 4) % 2 != 1))
    fail_arg("Type3 requires n = 4h with h odd, got n = " + std::to_string(n));

  auto d = std::make_shared<Data>();
  d->type = type;
  d->n = n;
  d->order = type == GroupType::DnBare ? 2 * n : 4 * n;
  d->gid = next_group_id();
  d->elems.reserve(d->order);
  int ext_count = type == GroupType::DnBare ? 1 : 2;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < n; ++l)
      for (int s = 0; s < ext_count; ++s)
        d->elems.push_back(GroupElement{d->gid, std::uint8_t(k), std::uint16_t(l),
                                        std::uint8_t(s)});

  FiniteGroup g{std::shared_ptr<const Data>(d)};
  auto mut = std::const_pointer_cast<Data>(std::static_pointer_cast<const Data>(d));
  mut->inv_idx.resize(d->order);
  mut->elem_order.resize(d->order);
  GroupElement e = g.identity();
  for (int i = 0; i < d->order; ++i) {
    GroupElement a = d->elems[i];
    GroupElement p = a;
    GroupElement prev = e;
    int ord = 1;
    while (!(p == e)) {
      prev = p;
      p = g.mul(p, a);
      ++ord;
      if (ord > d->order) fail("group law is broken: element order exceeds group order");
    }
    mut->elem_order[i] = ord;
    mut->inv_idx[i] = std::uint16_t(g.index_of(prev));  // a^{ord-1} = a^-1
  }
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    const std::vector<std::vector<int>>& table,
                                    std::vector<int> distinguished) {
  int ord = static_cast<int>(table.size());
  if (ord < 1 || static_cast<int>(names.size()) != ord)
    fail_arg("table/name size mismatch");
  auto d = std::make_shared<Data>();
  d->type = GroupType::ExplicitTable;
  d->n = ord;
  d->order = ord;
  d->gid = next_group_id();
  d->names = std::move(names);
  d->distinguished = std::move(distinguished);
  d->table.resize(std::size_t(ord) * ord);
  for (int i = 0; i < ord; ++i) {
    if (static_cast<int>(table[i].size()) != ord) fail_arg("ragged multiplication table");
    for (int j = 0; j < ord; ++j) {
      if (table[i][j] < 0 || table[i][j] >= ord) fail_arg("table entry out of range");
      d->table[std::size_t(i) * ord + j] = std::uint16_t(table[i][j]);
    }
  }
  for (int i = 0; i < ord; ++i)
    d->elems.push_back(GroupElement{d->gid, 0, std::uint16_t(i), 0});
  d->identity_idx = -1;
  for (int i = 0; i < ord && d->identity_idx < 0; ++i) {
    bool id = true;
    for (int j = 0; j < ord && id; ++j) id = d->table[std::size_t(i) * ord + j] == j;
    if (id) d->identity_idx = i;
  }
  if (d->identity_idx < 0) fail_arg("multiplication table has no identity");

  FiniteGroup g{std::shared_ptr<const Data>(d)};
  auto mut = std::const_pointer_cast<Data>(std::static_pointer_cast<const Data>(d));
  GroupElement e = g.identity();
  mut->inv_idx.resize(ord);
  mut->elem_order.resize(ord);
  for (int i = 0; i < ord; ++i) {
    GroupElement a = d->elems[i];
    GroupElement p = a;
    GroupElement prev = e;
    int o = 1;
    while (!(p == e)) {
      prev = p;
      p = g.mul(p, a);
      ++o;
      if (o > ord) fail("multiplication table is not a group");
    }
    mut->elem_order[i] = o;
    mut->inv_idx[i] = std::uint16_t(g.index_of(prev));
  }
  return g;
}

FiniteGroup FiniteGroup::times_z2() const {
  const Data& d = data();
  int ord = d.order;
  std::vector<std::string> names(std::size_t(ord) * 2);
  std::vector<std::vector<int>> table(std::size_t(ord) * 2,
                                      std::vector<int>(std::size_t(ord) * 2));
  auto idx = [&](int base, int bit) { return base * 2 + bit; };
  for (int i = 0; i < ord; ++i)
    for (int b = 0; b < 2; ++b)
      names[idx(i, b)] = "(" + name(d.elems[i]) + ") w^" + std::to_string(b);
  for (int i = 0; i < ord; ++i)
    for (int bi = 0; bi < 2; ++bi)
      for (int j = 0; j < ord; ++j)
        for (int bj = 0; bj < 2; ++bj)
          table[idx(i, bi)][idx(j, bj)] =
              idx(index_of(mul(d.elems[i], d.elems[j])), (bi + bj) & 1);
  return from_table(std::move(names), table, {});
}

GroupElement FiniteGroup::embed_z2(const FiniteGroup& product, GroupElement base,
                                   int bit) const {
  if (base.gid != data().gid) fail_arg("cross-group operand");
  if (product.order() != 2 * order()) fail_arg("not a Z/2 product of this group");
  return product.by_index(index_of(base) * 2 + (bit & 1));
}

// ---- subgroups ----------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<GroupElement> elems,
                   std::optional<std::string> label)
    : parent_(std::move(parent)), elems_(std::move(elems)), label_(std::move(label)) {
  std::sort(elems_.begin(), elems_.end(), element_less);
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) fail_arg("subgroup cannot be empty");
  mask_.assign(parent_.order(), false);
  for (const GroupElement& a : elems_) mask_[parent_.index_of(a)] = true;
  if (!mask_[parent_.index_of(parent_.identity())])
    fail_arg("subgroup must contain the identity");
  for (const GroupElement& a : elems_) {
    if (!mask_[parent_.index_of(parent_.inv(a))]) fail_arg("subgroup not closed under inverse");
    for (const GroupElement& b : elems_)
      if (!mask_[parent_.index_of(parent_.mul(a, b))])
        fail_arg("subgroup not closed under multiplication");
  }
}

bool Subgroup::contains(GroupElement a) const { return mask_[parent_.index_of(a)]; }

Subgroup Subgroup::with_label(std::string label) const {
  return Subgroup(parent_, elems_, std::move(label));
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent_.same_group(b.parent_) && a.elems_ == b.elems_;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const GroupElement> gens,
                          std::optional<std::string> label) {
  std::vector<bool> seen(g.order(), false);
  std::deque<GroupElement> queue;
  auto push = [&](GroupElement a) {
    int i = g.index_of(a);
    if (!seen[i]) {
      seen[i] = true;
      queue.push_back(a);
    }
  };
  push(g.identity());
  for (const GroupElement& a : gens) push(a);
  std::vector<GroupElement> out;
  while (!queue.empty()) {
    GroupElement a = queue.front();
    queue.pop_front();
    out.push_back(a);
    for (const GroupElement& b : gens) {
      push(g.mul(a, b));
      push(g.mul(b, a));
    }
    push(g.inv(a));
  }
  return Subgroup(g, std::move(out), std::move(label));
}

int closure_order(const FiniteGroup& g, std::span<const GroupElement> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<GroupElement> stack{g.identity()};
  seen[g.index_of(g.identity())] = true;
  for (const GroupElement& a : gens) {
    int i = g.index_of(a);
    if (!seen[i]) {
      seen[i] = true;
      stack.push_back(a);
    }
  }
  int count = static_cast<int>(stack.size());
  while (!stack.empty()) {
    GroupElement a = stack.back();
    stack.pop_back();
    for (const GroupElement& b : gens) {
      GroupElement c = g.mul(a, b);
      int i = g.index_of(c);
      if (!seen[i]) {
        seen[i] = true;
        stack.push_back(c);
        ++count;
      }
    }
  }
  return count;
}

Subgroup distinguished_subgroup(const FiniteGroup& g) {
  switch (g.type()) {
    case GroupType::DnBare:
      return Subgroup(g, {g.elements().begin(), g.elements().end()}, "H");
    case GroupType::Type1:
    case GroupType::Type2:
    case GroupType::Type3: {
      std::vector<GroupElement> elems;
      for (const GroupElement& a : g.elements())
        if (a.ext == 0) elems.push_back(a);
      return Subgroup(g, std::move(elems), "H");
    }
    case GroupType::ExplicitTable: {
      auto idx = g.distinguished_indices();
      if (idx.empty()) fail_arg("ExplicitTable group has no designated subgroup");
      std::vector<GroupElement> elems;
      for (int i : idx) elems.push_back(g.by_index(i));
      return Subgroup(g, std::move(elems), "H");
    }
  }
  fail("unreachable");
}

std::vector<Subgroup> standard_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  auto add = [&](std::string label, std::vector<GroupElement> gens) {
    out.push_back(subgroup_closure(g, gens, std::move(label)));
  };
  switch (g.type()) {
    case GroupType::Type1: {
      add("H", {g.element(0, 1, 0), g.element(1, 0, 0)});
      add("H_{1,1}", {g.element(0, 1, 0), g.element(0, 0, 1)});
      add("H_{1,2}", {g.element(0, 1, 0), g.element(1, 0, 1)});
      if (g.n() % 2 == 0) {
        add("H_{1,3}", {g.element(0, 2, 0), g.element(1, 0, 0), g.element(0, 0, 1)});
        add("H_{1,4}", {g.element(0, 2, 0), g.element(1, 0, 0), g.element(0, 1, 1)});
        add("H_{1,5}", {g.element(0, 2, 0), g.element(1, 1, 0), g.element(0, 0, 1)});
        add("H_{1,6}", {g.element(0, 2, 0), g.element(1, 1, 0), g.element(0, 1, 1)});
      }
      break;
    }
    case GroupType::Type2: {
      add("H", {g.element(0, 1, 0), g.element(1, 0, 0)});
      add("H_{2,1}", {g.element(0, 0, 1)});
      add("H_{2,2}", {g.element(0, 1, 0), g.element(1, 0, 1)});
      break;
    }
    case GroupType::Type3: {
      add("H", {g.element(0, 1, 0), g.element(1, 0, 0)});
      add("H_{3,1}", {g.element(0, 1, 0), g.element(0, 0, 1)});
      add("H_{3,2}", {g.element(0, 1, 0), g.element(1, 0, 1)});
      add("H_{3,3}", {g.element(0, 2, 0), g.element(1, 0, 0), g.element(0, 0, 1)});
      add("H_{3,4}", {g.element(0, 2, 0), g.element(1, 0, 0), g.element(0, 1, 1)});
      add("H_{3,5}", {g.element(0, 2, 0), g.element(1, 1, 0), g.element(0, 0, 1)});
      add("H_{3,6}", {g.element(0, 2, 0), g.element(1, 1, 0), g.element(0, 1, 1)});
      break;
    }
    default:
      break;
  }
  return out;
}

std::optional<Subgroup> find_subgroup(const FiniteGroup& g, std::string_view label) {
  if (label == "H" && g.type() != GroupType::Type1 && g.type() != GroupType::Type2 &&
      g.type() != GroupType::Type3)
    return distinguished_subgroup(g);
  for (Subgroup& s : standard_subgroups(g))
    if (s.label() == label) return s;
  return std::nullopt;
}

std::vector<Subgroup> index2_subgroups(const FiniteGroup& g) {
  // Index-2 subgroups are kernels of surjections onto Z/2, i.e. preimages of
  // hyperplanes in G / <squares, commutators>.
  int ord = g.order();
  std::vector<GroupElement> gens;
  for (const GroupElement& a : g.elements()) {
    gens.push_back(g.mul(a, a));
    for (const GroupElement& b : g.elements())
      gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  Subgroup nsub = subgroup_closure(g, gens);

  // cosets of N
  std::vector<int> coset(ord, -1);
  std::vector<GroupElement> reps;
  for (const GroupElement& a : g.elements()) {
    if (coset[g.index_of(a)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (const GroupElement& h : nsub.elements()) coset[g.index_of(g.mul(a, h))] = id;
  }
  int q = static_cast<int>(reps.size());

  // coordinates over F_2: greedy basis of the quotient (elementary abelian)
  std::vector<std::vector<int>> coords(q);
  std::vector<int> basis;
  std::vector<int> span{coset[g.index_of(g.identity())]};
  coords[span[0]] = {};
  auto coset_mul = [&](int a, int b) {
    return coset[g.index_of(g.mul(reps[a], reps[b]))];
  };
  for (int c = 0; c < q; ++c) {
    bool known = c == span[0];
    for (std::size_t i = 1; i < span.size() && !known; ++i) known = span[i] == c;
    if (known) continue;
    int bi = static_cast<int>(basis.size());
    basis.push_back(c);
    std::vector<int> old = span;
    for (int s : old) {
      int t = coset_mul(s, c);
      coords[t] = coords[s];
      coords[t].push_back(bi);
      span.push_back(t);
    }
  }
  int k = static_cast<int>(basis.size());

  std::vector<Subgroup> catalog = standard_subgroups(g);
  std::vector<Subgroup> out;
  for (int functional = 1; functional < (1 << k); ++functional) {
    std::vector<GroupElement> elems;
    for (const GroupElement& a : g.elements()) {
      int value = 0;
      for (int bi : coords[coset[g.index_of(a)]]) value ^= (functional >> bi) & 1;
      if (value == 0) elems.push_back(a);
    }
    Subgroup s(g, std::move(elems));
    for (const Subgroup& c : catalog)
      if (c == s) {
        s = s.with_label(*c.label());
        break;
      }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end(),
                                        element_less);
  });
  return out;
}

std::optional<std::pair<GroupElement, GroupElement>> is_dihedral(const Subgroup& s) {
  int ord = s.order();
  if (ord < 4 || ord % 2 != 0) return std::nullopt;
  const FiniteGroup& g = s.parent();
  int half = ord / 2;
  for (const GroupElement& r : s.elements()) {
    if (g.order_of(r) != half) continue;
    GroupElement rinv = g.inv(r);
    for (const GroupElement& t : s.elements()) {
      if (g.order_of(t) != 2) continue;
      if (!(g.conj(r, t) == rinv)) continue;
      if (subgroup_closure(g, std::vector<GroupElement>{r, t}).order() != ord) continue;
      return std::make_pair(r, t);
    }
  }
  return std::nullopt;
}

// ---- maps ---------------------------------------------------------------

GroupMap::GroupMap(FiniteGroup src, FiniteGroup dst, std::vector<std::uint16_t> images)
    : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(images)) {
  if (static_cast<int>(img_.size()) != src_.order())
    fail_arg("image vector size must equal the source order");
}

bool GroupMap::total() const {
  for (std::uint16_t v : img_)
    if (v == kUndef) return false;
  return true;
}

GroupElement GroupMap::apply(GroupElement a) const {
  std::uint16_t v = img_[src_.index_of(a)];
  if (v == kUndef) fail_arg("element outside the map domain");
  return dst_.by_index(v);
}

bool GroupMap::is_homomorphism() const {
  for (const GroupElement& a : src_.elements()) {
    std::uint16_t ia = img_[src_.index_of(a)];
    if (ia == kUndef) continue;
    for (const GroupElement& b : src_.elements()) {
      std::uint16_t ib = img_[src_.index_of(b)];
      if (ib == kUndef) continue;
      std::uint16_t iab = img_[src_.index_of(src_.mul(a, b))];
      if (iab == kUndef) return false;
      if (!(dst_.by_index(iab) == dst_.mul(dst_.by_index(ia), dst_.by_index(ib))))
        return false;
    }
  }
  return true;
}

bool GroupMap::is_automorphism() const {
  if (!src_.same_group(dst_) || !total()) return false;
  std::vector<bool> hit(dst_.order(), false);
  for (std::uint16_t v : img_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return is_homomorphism();
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (!inner.dst_.same_group(src_)) fail_arg("composition domain mismatch");
  std::vector<std::uint16_t> img(inner.img_.size(), kUndef);
  for (std::size_t i = 0; i < inner.img_.size(); ++i)
    if (inner.img_[i] != kUndef && img_[inner.img_[i]] != kUndef)
      img[i] = img_[inner.img_[i]];
  return GroupMap(inner.src_, dst_, std::move(img));
}

bool GroupMap::maps_onto(const Subgroup& s) const {
  if (!s.parent().same_group(src_) || !src_.same_group(dst_)) return false;
  for (const GroupElement& a : s.elements())
    if (!s.contains(apply(a))) return false;
  return true;
}

bool operator==(const GroupMap& a, const GroupMap& b) {
  return a.src_.same_group(b.src_) && a.dst_.same_group(b.dst_) && a.img_ == b.img_;
}

std::optional<GroupMap> complete_homomorphism(
    const FiniteGroup& src, const FiniteGroup& dst,
    std::span<const std::pair<GroupElement, GroupElement>> gen_images) {
  std::vector<std::uint16_t> img(src.order(), GroupMap::kUndef);
  auto set = [&](GroupElement a, GroupElement v) -> bool {
    std::uint16_t& slot = img[src.index_of(a)];
    std::uint16_t want = std::uint16_t(dst.index_of(v));
    if (slot == GroupMap::kUndef) {
      slot = want;
      return true;
    }
    return slot == want;
  };
  if (!set(src.identity(), dst.identity())) return std::nullopt;
  for (const auto& [a, v] : gen_images)
    if (!set(a, v)) return std::nullopt;

  std::deque<GroupElement> queue{src.identity()};
  std::vector<bool> queued(src.order(), false);
  queued[src.index_of(src.identity())] = true;
  while (!queue.empty()) {
    GroupElement a = queue.front();
    queue.pop_front();
    GroupElement fa = dst.by_index(img[src.index_of(a)]);
    for (const auto& [gen, gen_img] : gen_images) {
      GroupElement b = src.mul(a, gen);
      GroupElement fb = dst.mul(fa, gen_img);
      if (!set(b, fb)) return std::nullopt;
      int bi = src.index_of(b);
      if (!queued[bi]) {
        queued[bi] = true;
        queue.push_back(b);
      }
    }
  }
  for (std::uint16_t v : img)
    if (v == GroupMap::kUndef) return std::nullopt;  // generators do not generate
  return GroupMap(src, dst, std::move(img));
}

std::vector<GroupElement> generating_tuple(const FiniteGroup& g) {
  std::vector<GroupElement> gens;
  std::vector<bool> in_closure(g.order(), false);
  in_closure[g.index_of(g.identity())] = true;
  int covered = 1;
  while (covered < g.order()) {
    GroupElement next = g.identity();
    bool found = false;
    for (const GroupElement& a : g.elements())
      if (!in_closure[g.index_of(a)]) {
        next = a;
        found = true;
        break;
      }
    if (!found) break;
    gens.push_back(next);
    Subgroup c = subgroup_closure(g, gens);
    covered = c.order();
    for (const GroupElement& a : c.elements()) in_closure[g.index_of(a)] = true;
  }
  return gens;
}

std::vector<GroupMap> automorphisms(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    fail("automorphism enumeration refused: group order " + std::to_string(g.order()) +
         " exceeds bound " + std::to_string(bound));
  std::vector<GroupElement> gens = generating_tuple(g);
  std::vector<std::vector<GroupElement>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int want = g.order_of(gens[i]);
    for (const GroupElement& a : g.elements())
      if (g.order_of(a) == want) candidates[i].push_back(a);
  }
  std::vector<GroupMap> out;
  std::vector<std::pair<GroupElement, GroupElement>> images(gens.size(),
                                                            {g.identity(), g.identity()});
  for (std::size_t i = 0; i < gens.size(); ++i) images[i].first = gens[i];
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i].second = candidates[i][pick[i]];
    if (auto hom = complete_homomorphism(g, g, images))
      if (hom->is_automorphism()) out.push_back(*hom);
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
    }
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(),
                                        b.images().begin(), b.images().end());
  });
  return out;
}

std::vector<GroupMap> automorphisms_fixing(const FiniteGroup& g, const Subgroup& s,
                                           int bound) {
  if (!s.parent().same_group(g)) fail_arg("subgroup belongs to a different group");
  std::vector<GroupMap> out;
  for (GroupMap& a : automorphisms(g, bound))
    if (a.maps_onto(s)) out.push_back(std::move(a));
  return out;
}

GroupMap dihedral_identification(const Subgroup& s, const FiniteGroup& target) {
  const FiniteGroup& g = s.parent();
  if (target.type() != GroupType::DnBare)
    fail_arg("identification target must be a Dn-bare group");
  if (target.order() != s.order())
    fail_arg("identification target order mismatch");

  std::vector<std::pair<GroupElement, GroupElement>> gen_images;
  const std::optional<std::string>& label = s.label();
  if (label && (*label == "H_{1,3}" || *label == "H_{1,5}")) {
    // table convention: generators (in the given order) to x^{m+1}, y, x^m
    int m = g.m();
    if (m % 2 != 1) fail_arg("subgroup is not dihedral (m must be odd)");
    GroupElement second = *label == "H_{1,3}" ? g.element(1, 0, 0) : g.element(1, 1, 0);
    gen_images = {{g.element(0, 2, 0), target.element(0, m + 1, 0)},
                  {second, target.element(1, 0, 0)},
                  {g.element(0, 0, 1), target.element(0, m, 0)}};
  } else {
    auto witness = is_dihedral(s);
    if (!witness) fail_arg("subgroup is not dihedral");
    gen_images = {{witness->first, target.element(0, 1, 0)},
                  {witness->second, target.element(1, 0, 0)}};
  }

  // complete on the subgroup only
  std::vector<std::uint16_t> img(g.order(), GroupMap::kUndef);
  auto set = [&](GroupElement a, GroupElement v) -> bool {
    std::uint16_t& slot = img[g.index_of(a)];
    std::uint16_t want = std::uint16_t(target.index_of(v));
    if (slot == GroupMap::kUndef) {
      slot = want;
      return true;
    }
    return slot == want;
  };
  if (!set(g.identity(), target.identity())) fail("identification conflict");
  for (const auto& [a, v] : gen_images)
    if (!s.contains(a) || !set(a, v)) fail("identification generators must lie in the subgroup");
  std::deque<GroupElement> queue{g.identity()};
  std::vector<bool> queued(g.order(), false);
  queued[g.index_of(g.identity())] = true;
  while (!queue.empty()) {
    GroupElement a = queue.front();
    queue.pop_front();
    GroupElement fa = target.by_index(img[g.index_of(a)]);
    for (const auto& [gen, gen_img] : gen_images) {
      GroupElement b = g.mul(a, gen);
      GroupElement fb = target.mul(fa, gen_img);
      if (!set(b, fb)) fail("identification is not a homomorphism");
      int bi = g.index_of(b);
      if (!queued[bi]) {
        queued[bi] = true;
        queue.push_back(b);
      }
    }
  }
  GroupMap map(g, target, std::move(img));
  std::vector<bool> hit(target.order(), false);
  int defined = 0;
  for (const GroupElement& a : s.elements()) {
    GroupElement v = map.apply(a);
    ++defined;
    if (hit[target.index_of(v)]) fail("identification is not injective");
    hit[target.index_of(v)] = true;
  }
  if (defined != s.order()) fail("identification does not cover the subgroup");
  return map;
}

}  // namespace dnsym
