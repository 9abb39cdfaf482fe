// Full classification runs, comparison against the bundled reference tables,
// and report rendering.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dnsym/covers.hpp"
#include "dnsym/fixtures.hpp"
#include "dnsym/group.hpp"
#include "dnsym/hurwitz.hpp"

namespace dnsym {

using ordered_json = nlohmann::ordered_json;

struct RunOptions {
  std::uint64_t node_cap = 10'000'000;
  int order_bound = 200;
  std::string fixture_dir;  // empty: compiled-in default
};

struct OrbitClassEntry {
  HurwitzVector representative;       // least admissible member
  std::uint64_t admissible_size = 0;  // admissible vectors in the class
  std::uint64_t closure_size = 0;     // everything reached by the moves
  bool exhausted = true;
  std::vector<std::string> matched_forms;
};

// Orbit partition of the admissible vectors for one (cover, group type, n),
// with the applicable reference normal forms matched to classes.
struct ClassificationReport {
  CoverTypeTag cover = CoverTypeTag::I;
  int group_type = 1;
  int n = 0;
  std::uint64_t admissible_count = 0;
  std::vector<OrbitClassEntry> classes;
  std::vector<std::string> expected_forms;  // applicable at this n
  // form -> form it is declared equivalent to (the source states the identity)
  std::map<std::string, std::string> equivalent_to;
  std::vector<std::string> inadmissible_forms;
  std::vector<int> unmatched_classes;
  bool partial = false;
  // Every expected form admissible and matched; forms stated equivalent share
  // a class, distinct forms get distinct classes; no class unmatched.
  bool ok() const;
  std::string summary() const;
};

ClassificationReport classify(CoverTypeTag cover, int group_type, int n,
                              const RunOptions& opts = {});

struct CellResult {
  bool checked = false;
  bool pass = true;
  std::string note;
};

struct TableRowResult {
  std::string table_id;
  std::string subgroup;
  CellResult vq, genus, delta, vp;
  bool invalid_row = false;  // fixture row violates its own invariants
  bool corrected_pass = false;
  std::string note;
  std::string computed;  // rendering of the computed restriction
  bool row_ok() const {
    return !invalid_row && vq.pass && genus.pass && delta.pass && vp.pass;
  }
};

struct TableReport {
  int n = 0;
  std::vector<std::string> tables_checked;
  std::vector<TableRowResult> rows;
  int mismatched_cells = 0;
  int invalid_rows = 0;
  int checked_rows = 0;
  std::vector<std::string> notes;
  bool ok() const { return mismatched_cells == 0 && invalid_rows == 0; }
};

TableReport verify_tables(int n, const RunOptions& opts = {});

struct NonexistenceReport {
  struct Line {
    int group_type;  // 2, 3, or 0 for the III-c catalog
    int n;
    CoverTypeTag cover;
    std::string scope;
    std::uint64_t admissible = 0;
  };
  std::vector<Line> lines;
  bool ok() const;
};

NonexistenceReport verify_nonexistence(int n_max, const RunOptions& opts = {});

struct CorollaryReport {
  int n = 0;
  struct Pair {
    CoverTypeTag cover;
    std::string subgroup;
    int delta_h, delta_hp;
    std::uint64_t count = 0;
    bool allowed = true;
  };
  std::vector<Pair> strict_pairs;  // distinct (cover, subgroup, pair) observed
  std::uint64_t vectors_checked = 0;
  std::uint64_t genus_mismatches = 0;  // RH genus disagreement across G/H/H'
  std::uint64_t euler_mismatches = 0;  // orbifold Euler doubling failures
  bool iiib_13_seen = false;
  bool ok() const;
};

CorollaryReport verify_corollary_pairs(int n, const RunOptions& opts = {});

struct RemarkReport {
  int n = 0;
  bool full_aut_equivalent = false;
  bool h_fixing_inequivalent = false;
  bool h_fixing_search_exhausted = false;
  bool witness_connects = false;
  bool ok() const {
    return full_aut_equivalent && h_fixing_inequivalent && h_fixing_search_exhausted &&
           witness_connects;
  }
};

RemarkReport verify_remark_equivalence(int n, const RunOptions& opts = {});

// renderers
ordered_json to_json(const ClassificationReport& r);
ordered_json to_json(const TableReport& r);
ordered_json to_json(const NonexistenceReport& r);
ordered_json to_json(const CorollaryReport& r);
ordered_json to_json(const RemarkReport& r);
std::string to_markdown(const ClassificationReport& r);
std::string to_markdown(const TableReport& r);
std::string to_markdown(const NonexistenceReport& r);
std::string to_markdown(const CorollaryReport& r);
std::string to_markdown(const RemarkReport& r);

}  // namespace dnsym
