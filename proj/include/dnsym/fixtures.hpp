// Checked-in transcriptions of the reference classification tables and
// normal-form lists, with per-row applicability conditions.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dnsym/covers.hpp"
#include "dnsym/group.hpp"
#include "dnsym/hurwitz.hpp"

namespace dnsym {

// Conjunction of comma-separated conditions:
//   any, even, odd, m_odd, m_even, n=2, n>=3, n>=4
struct Applicability {
  std::string text = "any";
  bool applies(int n) const;
};

// Vector entries in compact symbolic notation, e.g. "y x^(m-2) | 1";
// exponents may use m (= n/2) and n.
struct FixtureVector {
  std::vector<std::array<std::string, 2>> handles;
  std::vector<std::string> branches;
};

struct TableRowFixture {
  std::string subgroup;
  Applicability when;
  std::vector<int> vq;
  int genus = 0;
  int delta = 0;
  FixtureVector vp;
  std::optional<FixtureVector> corrected;  // proposed fix for a defective row
  std::string note;
};

struct TableFixture {
  std::string id;
  CoverTypeTag cover = CoverTypeTag::I;
  Applicability when;
  std::vector<std::string> v;        // branch entries of the full cover
  std::optional<FixtureVector> v_h;  // printed intermediate-cover vector
  std::vector<TableRowFixture> rows;
};

struct FormFixture {
  std::string id;
  CoverTypeTag cover = CoverTypeTag::I;
  Applicability when;
  std::vector<std::string> v;
  std::string same_class_as;  // the source text states equivalence to this form
};

struct FixtureSet {
  std::vector<TableFixture> tables;
  std::vector<FormFixture> forms;
};

std::string default_fixture_dir();
FixtureSet load_fixtures(const std::string& dir = default_fixture_dir());

// Symbolic element/vector evaluation over a concrete group.
GroupElement parse_symbolic(const FiniteGroup& g, const std::string& text);
HurwitzVector parse_branches(const FiniteGroup& g, const std::vector<std::string>& entries);
HurwitzVector parse_vector(const FiniteGroup& g, const FixtureVector& fv);

}  // namespace dnsym
