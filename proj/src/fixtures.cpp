#include "dnsym/fixtures.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dnsym {

bool Applicability::applies(int n) const {
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty() || tok == "any") continue;
    if (tok == "even") {
      if (n % 2 != 0) return false;
    } else if (tok == "odd") {
      if (n % 2 != 1) return false;
    } else if (tok == "m_odd") {
      if (n % 2 != 0 || (n / 2) % 2 != 1) return false;
    } else if (tok == "m_even") {
      if (n % 2 != 0 || (n / 2) % 2 != 0) return false;
    } else if (tok == "n=2") {
      if (n != 2) return false;
    } else if (tok == "n>=3") {
      if (n < 3) return false;
    } else if (tok == "n>=4") {
      if (n < 4) return false;
    } else {
      fail_arg("unknown applicability condition '" + tok + "'");
    }
  }
  return true;
}

namespace {

// integer expressions over m and n:  expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := INT | m | n | -factor | (expr)
struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;
  int n;

  int m() const {
    if (n % 2 != 0) fail_arg("exponent uses m = n/2 but n is odd");
    return n / 2;
  }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      long long v = expr();
      if (!eat(')')) fail_arg("missing ')' in exponent '" + std::string(text) + "'");
      return v;
    }
    char c = peek();
    if (c == 'm') {
      ++pos;
      return m();
    }
    if (c == 'n') {
      ++pos;
      return n;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail_arg("bad exponent '" + std::string(text) + "'");
    long long v = 0;
    std::from_chars(text.data() + start, text.data() + pos, v);
    return v;
  }
  long long term() {
    long long v = factor();
    while (true) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        long long d = factor();
        if (d == 0 || v % d != 0)
          fail_arg("non-exact division in exponent '" + std::string(text) + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }
  long long expr() {
    long long v = term();
    while (true) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
};

long long eval_expr(std::string_view text, int n) {
  ExprParser p{text, 0, n};
  long long v = p.expr();
  p.skip();
  if (p.pos != text.size()) fail_arg("trailing input in exponent '" + std::string(text) + "'");
  return v;
}

}  // namespace

GroupElement parse_symbolic(const FiniteGroup& g, const std::string& text) {
  // atoms: e, y, x, optionally ^exponent (integer, m, n, or parenthesized
  // expression), then an optional "| s" coordinate
  int k = 0;
  long long l = 0;
  int s = 0;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == '|') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail_arg("missing coordinate in '" + text + "'");
      s = std::stoi(text.substr(start, pos - start));
      skip();
      if (pos != text.size()) fail_arg("trailing input in '" + text + "'");
      break;
    }
    if (c == 'e') {
      ++pos;
      continue;
    }
    if (c != 'x' && c != 'y') fail_arg("cannot parse element '" + text + "'");
    ++pos;
    long long exp = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '(') {
        int depth = 0;
        do {
          if (text[pos] == '(') ++depth;
          if (text[pos] == ')') --depth;
          ++pos;
        } while (pos < text.size() && depth > 0);
        if (depth != 0) fail_arg("unbalanced exponent in '" + text + "'");
        exp = eval_expr(std::string_view(text).substr(start + 1, pos - start - 2), g.n());
      } else {
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == 'm' ||
                text[pos] == 'n'))
          ++pos;
        if (start == pos) fail_arg("missing exponent in '" + text + "'");
        exp = eval_expr(std::string_view(text).substr(start, pos - start), g.n());
      }
    }
    // fold atom in from the right
    if (c == 'x') {
      l += exp;
    } else if (exp % 2 != 0) {
      k ^= 1;
      l = -l;
    }
  }
  long long nn = g.n();
  return g.element(k, int(((l % nn) + nn) % nn), s);
}

HurwitzVector parse_branches(const FiniteGroup& g, const std::vector<std::string>& entries) {
  std::vector<GroupElement> branches;
  branches.reserve(entries.size());
  for (const std::string& e : entries) branches.push_back(parse_symbolic(g, e));
  return HurwitzVector(g, {}, std::move(branches));
}

HurwitzVector parse_vector(const FiniteGroup& g, const FixtureVector& fv) {
  std::vector<HurwitzVector::Handle> handles;
  for (const auto& [a, b] : fv.handles)
    handles.emplace_back(parse_symbolic(g, a), parse_symbolic(g, b));
  std::vector<GroupElement> branches;
  for (const std::string& e : fv.branches) branches.push_back(parse_symbolic(g, e));
  return HurwitzVector(g, std::move(handles), std::move(branches));
}

namespace {

using nlohmann::ordered_json;

FixtureVector vector_fixture(const ordered_json& j) {
  FixtureVector fv;
  if (j.contains("handles"))
    for (const auto& h : j.at("handles"))
      fv.handles.push_back({h.at(0).get<std::string>(), h.at(1).get<std::string>()});
  for (const auto& b : j.at("branches")) fv.branches.push_back(b.get<std::string>());
  return fv;
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open fixture file " + path);
  ordered_json j;
  in >> j;
  return j;
}

}  // namespace

std::string default_fixture_dir() {
#ifdef DNSYM_FIXTURE_DIR
  return DNSYM_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

FixtureSet load_fixtures(const std::string& dir) {
  FixtureSet out;
  ordered_json tables = load_json(dir + "/tables.json");
  if (tables.at("schema").get<int>() != 1) fail("unsupported tables.json schema");
  for (const auto& jt : tables.at("tables")) {
    TableFixture t;
    t.id = jt.at("id").get<std::string>();
    auto cover = cover_from_string(jt.at("cover").get<std::string>());
    if (!cover) fail("unknown cover type in table " + t.id);
    t.cover = *cover;
    if (jt.contains("when")) t.when.text = jt.at("when").get<std::string>();
    for (const auto& e : jt.at("v")) t.v.push_back(e.get<std::string>());
    if (jt.contains("vH")) t.v_h = vector_fixture(jt.at("vH"));
    for (const auto& jr : jt.at("rows")) {
      TableRowFixture r;
      r.subgroup = jr.at("h").get<std::string>();
      if (jr.contains("when")) r.when.text = jr.at("when").get<std::string>();
      for (const auto& q : jr.at("vq")) r.vq.push_back(q.get<int>());
      r.genus = jr.at("g").get<int>();
      r.delta = jr.at("d").get<int>();
      r.vp = vector_fixture(jr.at("vp"));
      if (jr.contains("corrected")) r.corrected = vector_fixture(jr.at("corrected"));
      if (jr.contains("note")) r.note = jr.at("note").get<std::string>();
      t.rows.push_back(std::move(r));
    }
    out.tables.push_back(std::move(t));
  }
  ordered_json forms = load_json(dir + "/forms.json");
  if (forms.at("schema").get<int>() != 1) fail("unsupported forms.json schema");
  for (const auto& jf : forms.at("forms")) {
    FormFixture f;
    f.id = jf.at("id").get<std::string>();
    auto cover = cover_from_string(jf.at("cover").get<std::string>());
    if (!cover) fail("unknown cover type in form " + f.id);
    f.cover = *cover;
    if (jf.contains("when")) f.when.text = jf.at("when").get<std::string>();
    for (const auto& e : jf.at("v")) f.v.push_back(e.get<std::string>());
    if (jf.contains("same_class_as")) f.same_class_as = jf.at("same_class_as").get<std::string>();
    out.forms.push_back(std::move(f));
  }
  return out;
}

}  // namespace dnsym
