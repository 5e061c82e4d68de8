// Command line front end: enumerate -> verify -> dedupe -> invariants ->
// dual surfaces -> reports, plus the complexity bound calculators.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cubecensus/census.hpp"
#include "cubecensus/errors.hpp"

namespace {

using namespace cubecensus;

constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

int cmd_census(uint32_t cubes, bool transversal, bool parallel, int threads,
               const std::string& out_path) {
  CensusOptions opts;
  opts.n_cubes = cubes;
  opts.paper_transversal = transversal;
  opts.parallel = parallel;
  opts.threads = threads;
  CensusResult result = run_census(opts);

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitInternal;
    }
    write_census(result, out);
  } else {
    write_census(result, std::cout);
  }
  std::cerr << "raw candidates:        " << result.summary.raw_candidates
            << "\n"
            << "manifold candidates:   " << result.summary.manifold_candidates
            << "\n"
            << "manifold classes:      " << result.summary.manifold_classes
            << "\n"
            << "orientable classes:    " << result.summary.orientable_classes
            << "\n"
            << "non-orientable classes: "
            << result.summary.nonorientable_classes << "\n";
  return 0;
}

std::string load_describe_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') return line;
    }
    throw ParseError("no cubulation line in file " + arg, 0);
  }
  return arg;
}

int cmd_describe(const std::string& arg) {
  DescribeReport rep = describe(load_describe_input(arg));
  std::cout << rep.render();
  return 0;
}

int cmd_table1(const std::string& census_path, const std::string& records_path) {
  std::ifstream in(census_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << census_path << "\n";
    return kExitInternal;
  }
  CensusResult census = read_census(in);
  Table1Report report = table1_report(census.records);
  std::cout << render_table1(report);
  if (!records_path.empty()) {
    std::ofstream rec(records_path, std::ios::binary);
    if (!rec) {
      std::cerr << "cannot open " << records_path << "\n";
      return kExitInternal;
    }
    for (const auto& m : report.matches) {
      rec << "target\t" << m.target.name << '\t' << m.target.h1.to_string();
      for (const auto& s : m.signatures) rec << '\t' << s;
      rec << '\n';
    }
    for (const auto& [sig, h1] : report.unmatched)
      rec << "unmatched\t" << sig << '\t' << h1 << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census of one-cube cubulations and their dual surfaces"};
  app.require_subcommand(1);

  uint32_t cubes = 1;
  bool transversal = false, parallel = false;
  int threads = 0;
  std::string out_path;
  auto* census = app.add_subcommand("census", "run the census pipeline");
  census->add_option("--cubes", cubes, "number of cubes (verified scale: 1)");
  census->add_flag("--paper-transversal", transversal,
                   "3 pairing classes x 4 reflection maps (192 candidates)");
  census->add_flag("--parallel", parallel, "use the OpenMP pipeline");
  census->add_option("--threads", threads, "thread count (0 = default)");
  census->add_option("--out", out_path, "write census records to a file");

  std::string describe_arg;
  auto* desc = app.add_subcommand("describe", "full report for one cubulation");
  desc->add_option("input", describe_arg, "cubulation string or file")
      ->required();

  auto* bounds = app.add_subcommand("bounds", "surface-complexity bounds");
  bounds->require_subcommand(1);

  uint64_t tri_n = 0;
  auto* tri = bounds->add_subcommand("triangulation", "sc <= 4n");
  tri->add_option("n", tri_n, "tetrahedra")->required();

  uint64_t heeg_n = 0;
  std::optional<uint64_t> heeg_m;
  auto* heeg = bounds->add_subcommand("heegaard", "sc <= 4n, improved 4n-4m");
  heeg->add_option("--n", heeg_n, "meridian crossing points")->required();
  heeg->add_option("--m", heeg_m, "points in one complementary component");

  SurgeryPresentation surgery;
  std::vector<int64_t> framings, writhes;
  auto* surg = bounds->add_subcommand("surgery", "sc <= 8n + 4m (+ framing)");
  surg->add_option("--n", surgery.crossings, "crossing points")->required();
  surg->add_option("--m", surgery.no_overpass_components,
                   "components without overpass")
      ->required();
  surg->add_option("--fr", framings, "per-component framings");
  surg->add_option("--w", writhes, "per-component writhes");

  std::optional<uint64_t> mv_sc, mv_c;
  bool mv_orientable = false;
  auto* mv = bounds->add_subcommand("matveev", "sc <= 4c, c <= 8sc (6sc or.)");
  mv->add_option("--sc", mv_sc, "known surface complexity");
  mv->add_option("--c", mv_c, "known Matveev complexity");
  mv->add_flag("--orientable", mv_orientable, "orientable manifold");

  auto* onecube = bounds->add_subcommand("one-cube", "c <= 6 for one cube");

  std::string exc_name;
  auto* exc = bounds->add_subcommand("exception", "the two exceptional pairs");
  exc->add_option("name", exc_name, "L3,1 or L4,1")->required();

  std::string census_path, records_path;
  auto* t1 = app.add_subcommand("table1", "match census classes against the "
                                          "known irreducible manifolds");
  t1->add_option("--census", census_path, "census file")->required();
  t1->add_option("--records", records_path, "also write machine-readable "
                                            "match records to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (census->parsed())
      return cmd_census(cubes, transversal, parallel, threads, out_path);
    if (desc->parsed()) return cmd_describe(describe_arg);
    if (t1->parsed()) return cmd_table1(census_path, records_path);
    if (bounds->parsed()) {
      if (tri->parsed()) {
        std::cout << sc_upper_triangulation(tri_n).to_string() << "\n";
      } else if (heeg->parsed()) {
        std::cout << sc_upper_heegaard(heeg_n, heeg_m).to_string() << "\n";
      } else if (surg->parsed()) {
        surgery.framings = framings;
        surgery.writhes = writhes;
        std::cout << sc_upper_surgery(surgery).to_string() << "\n";
      } else if (mv->parsed()) {
        if (mv_sc.has_value() == mv_c.has_value()) {
          std::cerr << "give exactly one of --sc or --c\n";
          return kExitParse;
        }
        if (mv_sc) {
          auto iv = matveev_from_sc(*mv_sc, mv_orientable);
          std::cout << "c(M) in [" << iv.lower << ", " << iv.upper << "]\n";
        } else {
          auto iv = sc_from_matveev(*mv_c, mv_orientable);
          std::cout << "sc(M) in [" << iv.lower << ", " << iv.upper << "]\n";
        }
      } else if (onecube->parsed()) {
        std::cout << one_cube_matveev_bound().to_string() << "\n";
      } else if (exc->parsed()) {
        auto entry = complexity_exception(exc_name);
        if (!entry) {
          std::cerr << "unknown exception name: " << exc_name << "\n";
          return kExitParse;
        }
        std::cout << exc_name << ": c=" << entry->matveev
                  << " sc=" << entry->sc << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidCounts& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
