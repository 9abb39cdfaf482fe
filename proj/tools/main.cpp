// Command-line front end: enumerate admissible vectors, classify them into
// braid x automorphism classes, verify the bundled reference tables, and run
// the whole verification battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dnsym/classify.hpp"
#include "dnsym/json_io.hpp"

namespace {

using namespace dnsym;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapOverflow = 3;

struct CommonArgs {
  std::string format = "md";
  std::string out;
  std::uint64_t node_cap = 10'000'000;
  std::string fixtures;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "output format: json or md")
      ->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", args.out, "write the report to FILE instead of stdout");
  cmd->add_option("--node-cap", args.node_cap, "orbit search node cap");
  cmd->add_option("--fixtures", args.fixtures, "fixture directory override");
}

RunOptions options_from(const CommonArgs& args) {
  RunOptions opts;
  opts.node_cap = args.node_cap;
  if (const char* env = std::getenv("DNSYM_NODE_CAP")) opts.node_cap = std::strtoull(env, nullptr, 10);
  if (args.node_cap != 10'000'000) opts.node_cap = args.node_cap;  // flag wins
  opts.fixture_dir = args.fixtures;
  return opts;
}

void emit(const CommonArgs& args, const ordered_json& j, const std::string& md) {
  std::string text = args.format == "json" ? j.dump(2) + "\n" : md;
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "cannot write " << args.out << "\n";
      std::exit(kExitMismatch);
    }
    out << text;
  }
}

int exit_code(bool ok, bool partial) {
  if (partial) return kExitCapOverflow;
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dihedral-symmetry locus classifier"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string cover_name = "I";
  int group_type = 1;
  int n = 6;
  int n_max = 10;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list admissible Hurwitz vectors");
  enumerate->add_option("--cover-type", cover_name, "I, II, III-a, III-b or III-c")->required();
  enumerate->add_option("--group-type", group_type, "1, 2 or 3");
  enumerate->add_option("--n", n, "dihedral parameter")->required();
  add_common(enumerate, args);

  CLI::App* classify_cmd = app.add_subcommand("classify", "orbit classification report");
  classify_cmd->add_option("--cover-type", cover_name)->required();
  classify_cmd->add_option("--group-type", group_type);
  classify_cmd->add_option("--n", n)->required();
  add_common(classify_cmd, args);

  CLI::App* tables = app.add_subcommand("tables", "verify the reference tables at one n");
  tables->add_option("--n", n)->required();
  add_common(tables, args);

  CLI::App* verify_all = app.add_subcommand("verify-all", "full verification battery");
  verify_all->add_option("--n-max", n_max, "largest n to sweep");
  add_common(verify_all, args);

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "orbit of one vector");
  std::string vector_json;
  std::string auts_kind = "h-fixing";
  orbit_cmd->add_option("--group-type", group_type);
  orbit_cmd->add_option("--n", n)->required();
  orbit_cmd->add_option("--branches", vector_json, "JSON array of branch entries")->required();
  orbit_cmd->add_option("--auts", auts_kind, "automorphism set: none, h-fixing or full")
      ->check(CLI::IsMember({"none", "h-fixing", "full"}));
  add_common(orbit_cmd, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunOptions opts = options_from(args);

    if (enumerate->parsed() || classify_cmd->parsed()) {
      auto cover = cover_from_string(cover_name);
      if (!cover) {
        std::cerr << "unknown cover type " << cover_name << "\n";
        return kExitUsage;
      }
      ClassificationReport report = classify(*cover, group_type, n, opts);
      if (enumerate->parsed()) {
        ordered_json j;
        j["schema"] = 1;
        j["kind"] = "enumeration";
        j["cover"] = cover_name;
        j["group_type"] = group_type;
        j["n"] = n;
        j["admissible"] = report.admissible_count;
        std::string md = "admissible vectors for cover " + cover_name + ", group type " +
                         std::to_string(group_type) + ", n = " + std::to_string(n) + ": " +
                         std::to_string(report.admissible_count) + "\n";
        emit(args, j, md);
        return kExitOk;
      }
      emit(args, to_json(report), to_markdown(report));
      return exit_code(report.ok(), report.partial);
    }

    if (tables->parsed()) {
      TableReport report = verify_tables(n, opts);
      emit(args, to_json(report), to_markdown(report));
      return exit_code(report.ok(), false);
    }

    if (verify_all->parsed()) {
      bool all_ok = true;
      bool partial = false;
      ordered_json out;
      out["schema"] = 1;
      out["kind"] = "verify-all";
      std::string md = "# Verification battery (n up to " + std::to_string(n_max) + ")\n\n";

      ordered_json classifications = ordered_json::array();
      for (CoverTypeTag ct : {CoverTypeTag::I, CoverTypeTag::II, CoverTypeTag::IIIa,
                              CoverTypeTag::IIIb}) {
        for (int nn = 2; nn <= n_max; ++nn) {
          ClassificationReport r = classify(ct, 1, nn, opts);
          all_ok = all_ok && r.ok();
          partial = partial || r.partial;
          classifications.push_back(to_json(r));
          md += "- " + r.summary() + " -> " + (r.ok() ? "pass" : "FAIL") + "\n";
        }
      }
      out["classifications"] = std::move(classifications);

      ordered_json table_reports = ordered_json::array();
      for (int nn : {2, 4, 6, 8, 10}) {
        if (nn > n_max) continue;
        TableReport r = verify_tables(nn, opts);
        all_ok = all_ok && r.ok();
        table_reports.push_back(to_json(r));
        md += "- tables at n = " + std::to_string(nn) + ": " +
              std::to_string(r.mismatched_cells) + " mismatched cells, " +
              std::to_string(r.invalid_rows) + " invalid rows -> " +
              (r.ok() ? "pass" : "FAIL") + "\n";
      }
      out["tables"] = std::move(table_reports);

      NonexistenceReport nr = verify_nonexistence(std::min(n_max, 12), opts);
      all_ok = all_ok && nr.ok();
      out["nonexistence"] = to_json(nr);
      md += "- non-existence sweep -> " + std::string(nr.ok() ? "pass" : "FAIL") + "\n";

      ordered_json pair_reports = ordered_json::array();
      for (int nn : {3, 4, 5, 6, 10}) {
        if (nn > n_max) continue;
        CorollaryReport r = verify_corollary_pairs(nn, opts);
        all_ok = all_ok && r.ok();
        pair_reports.push_back(to_json(r));
        md += "- dimension pairs at n = " + std::to_string(nn) + " -> " +
              (r.ok() ? "pass" : "FAIL") + "\n";
      }
      out["dimension_pairs"] = std::move(pair_reports);

      ordered_json remark_reports = ordered_json::array();
      for (int nn : {4, 6}) {
        if (nn > n_max) continue;
        RemarkReport r = verify_remark_equivalence(nn, opts);
        all_ok = all_ok && r.ok();
        remark_reports.push_back(to_json(r));
        md += "- III-a/III-b equivalence at n = " + std::to_string(nn) + " -> " +
              (r.ok() ? "pass" : "FAIL") + "\n";
      }
      out["remark"] = std::move(remark_reports);

      out["ok"] = all_ok;
      md += std::string("\noverall: ") + (all_ok ? "pass" : "FAIL") + "\n";
      emit(args, out, md);
      return exit_code(all_ok, partial);
    }

    if (orbit_cmd->parsed()) {
      FiniteGroup g = FiniteGroup::make(
          group_type == 1   ? GroupType::Type1
          : group_type == 2 ? GroupType::Type2
                            : GroupType::Type3,
          n);
      ordered_json entries = ordered_json::parse(vector_json);
      std::vector<GroupElement> branches;
      for (const auto& e : entries) branches.push_back(g.parse(e.get<std::string>()));
      HurwitzVector v(g, {}, std::move(branches));
      std::vector<GroupMap> auts;
      if (auts_kind == "full") {
        auts = automorphisms(g);
      } else if (auts_kind == "h-fixing") {
        auts = automorphisms_fixing(g, distinguished_subgroup(g));
      }
      OrbitClass oc = orbit(v, auts, {opts.node_cap});
      std::string md = "orbit of " + v.str() + ":\n  size " + std::to_string(oc.size) +
                       (oc.exhausted ? "" : " (cap hit)") + "\n  representative " +
                       oc.representative.str() + "\n  moves: " + oc.moves + "\n";
      emit(args, orbit_to_json(oc), md);
      return oc.exhausted ? kExitOk : kExitCapOverflow;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
