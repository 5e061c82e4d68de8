#include <map>
#include <set>
#include <sstream>

#include "cubecensus/census.hpp"
#include "cubecensus/errors.hpp"
#include "cubecensus/homology.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cubecensus;
using namespace cubecensus::testing;

namespace {

const CensusResult& full_census() {
  static const CensusResult result = run_census_serial({});
  return result;
}

const CensusResult& transversal_census() {
  static const CensusResult result = [] {
    CensusOptions o;
    o.paper_transversal = true;
    return run_census_serial(o);
  }();
  return result;
}

}  // namespace

TEST_CASE("census headline: 7680 candidates, 29 orientable classes") {
  const auto& r = full_census();
  CHECK(r.summary.raw_candidates == 7680);
  CHECK(r.summary.manifold_candidates == 625);
  CHECK(r.summary.manifold_classes == 56);
  CHECK(r.summary.orientable_classes == 29);
  CHECK(r.summary.nonorientable_classes == 27);
  CHECK(r.records.size() == 56);
}

TEST_CASE("records arrive sorted by signature with no duplicates") {
  const auto& r = full_census();
  for (size_t i = 1; i < r.records.size(); ++i)
    CHECK(r.records[i - 1].signature < r.records[i].signature);
}

TEST_CASE("transversal run: 192 candidates, same orientable classes") {
  const auto& t = transversal_census();
  CHECK(t.summary.raw_candidates == 192);
  CHECK(t.summary.manifold_candidates == 74);
  CHECK(t.summary.orientable_classes == 29);
  CHECK(t.summary.nonorientable_classes == 0);

  std::set<std::string> trans, full;
  for (const auto& rec : t.records)
    if (rec.orientable) trans.insert(rec.signature.hex());
  for (const auto& rec : full_census().records)
    if (rec.orientable) full.insert(rec.signature.hex());
  CHECK(trans == full);
}

TEST_CASE("orientable H1 multiset matches the known census content") {
  std::map<std::string, int> h1_counts;
  for (const auto& rec : full_census().records)
    if (rec.orientable) h1_counts[rec.h[1].to_string()]++;
  std::map<std::string, int> expected = {
      {"0", 2},          {"Z/2", 4},          {"Z/2 + Z/2", 3},
      {"Z/2 + Z/4", 1},  {"Z/4", 4},          {"Z/4 + Z/4", 1},
      {"Z/6", 1},        {"Z/8", 1},          {"Z/12", 1},
      {"Z/14", 1},       {"Z", 4},            {"Z + Z/2", 2},
      {"Z + Z/2 + Z/2", 2},                   {"Z + Z/3", 1},
      {"Z^3", 1}};
  CHECK(h1_counts == expected);
}

TEST_CASE("non-orientable classes include the Klein-bottle product witness") {
  int witnesses = 0;
  AbelianGroup target{2, {Integer(2)}};
  for (const auto& rec : full_census().records)
    if (!rec.orientable && rec.h[1] == target) ++witnesses;
  CHECK(witnesses == 3);

  Signature k = isomorphism_signature(klein_times_circle());
  bool found = false;
  for (const auto& rec : full_census().records) found |= rec.signature == k;
  CHECK(found);
}

TEST_CASE("census invariants: H0, H3, chi and duality counts per record") {
  for (const auto& rec : full_census().records) {
    CHECK(rec.manifold);
    CHECK(rec.h[0] == AbelianGroup::free(1));
    CHECK(rec.h[3] ==
          (rec.orientable ? AbelianGroup::free(1) : AbelianGroup{}));
    long chi = rec.h[0].free_rank - rec.h[1].free_rank + rec.h[2].free_rank -
               rec.h[3].free_rank;
    CHECK(chi == 0);

    auto q = quotient_of(rec.representative);
    CHECK(rec.dual.triple_points == q.coarse_cells);
    CHECK(rec.dual.double_edges == q.coarse_faces);
    CHECK(rec.dual.regions == q.coarse_edges);
    CHECK(rec.dual.complement_components == q.coarse_vertices);
    CHECK(rec.dual.surface_chi ==
          3 * rec.dual.triple_points - 2 * rec.dual.double_edges +
              rec.dual.regions);
    long total = 0;
    for (long c : rec.surface_chis) total += c;
    CHECK(total == rec.dual.surface_chi);
  }
}

TEST_CASE("multiplicities add up to the manifold candidate count") {
  uint64_t total = 0;
  for (const auto& rec : full_census().records) total += rec.multiplicity;
  CHECK(total == full_census().summary.manifold_candidates);
}

TEST_CASE("every record re-verifies from its signature alone") {
  for (const auto& rec : full_census().records) {
    auto rep = signature_to_cubulation(rec.signature);
    CHECK(rep == rec.representative);
    auto fresh = describe(rep);
    CHECK(fresh.signature == rec.signature);
    CHECK(fresh.certificate.is_manifold);
    CHECK(fresh.orientable == rec.orientable);
    for (int i = 0; i < 4; ++i)
      CHECK(fresh.h[static_cast<size_t>(i)] == rec.h[static_cast<size_t>(i)]);
    CHECK(fresh.dual.regions == rec.dual.regions);
    CHECK(fresh.dual.complement_components == rec.dual.complement_components);
    CHECK(fresh.surface_chis == rec.surface_chis);
    CHECK(one_cube_pairing_class(rep.pairing()) == rec.pairing_class);
  }
}

TEST_CASE("census output is byte-identical across runs") {
  std::ostringstream a, b;
  write_census(run_census_serial({}), a);
  write_census(run_census_serial({}), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("#cube-census v1\n", 0) == 0);
}

TEST_CASE("parallel pipeline reproduces the serial reference byte for byte") {
  CensusOptions par;
  par.parallel = true;
  std::ostringstream serial, parallel;
  write_census(full_census(), serial);
  write_census(run_census_parallel(par), parallel);
  CHECK(serial.str() == parallel.str());
}

TEST_CASE("census files read back losslessly") {
  std::ostringstream out;
  write_census(full_census(), out);
  std::istringstream in(out.str());
  CensusResult back = read_census(in);
  REQUIRE(back.records.size() == full_census().records.size());
  for (size_t i = 0; i < back.records.size(); ++i) {
    const auto& x = back.records[i];
    const auto& y = full_census().records[i];
    CHECK(x.signature == y.signature);
    CHECK(x.pairing_class == y.pairing_class);
    CHECK(x.orientable == y.orientable);
    for (int k = 0; k < 4; ++k)
      CHECK(x.h[static_cast<size_t>(k)] == y.h[static_cast<size_t>(k)]);
    CHECK(x.dual.regions == y.dual.regions);
    CHECK(x.surface_chis == y.surface_chis);
    CHECK(x.multiplicity == y.multiplicity);
    CHECK(x.representative == y.representative);
  }
  CHECK(back.summary.orientable_classes == 29);
  CHECK(back.summary.raw_candidates == 7680);
  CHECK(back.summary.manifold_candidates == 625);

  // write -> read -> write is byte-identical
  std::ostringstream again;
  write_census(back, again);
  CHECK(again.str() == out.str());

  std::istringstream bad("#wrong\n");
  CHECK_THROWS_AS(read_census(bad), ParseError);

  std::istringstream corrupt(
      "#cube-census v1\na\tb\tc\td\te\tf\tg\th\ti\tj\tk\tl\tm\tn\to\tp\n");
  CHECK_THROWS_AS(read_census(corrupt), ParseError);
}

TEST_CASE("census files carry the format version and convention hash") {
  std::ostringstream out;
  write_census(full_census(), out);
  CHECK(out.str().rfind("#cube-census v1\n", 0) == 0);
  CHECK(out.str().find("#conventions ") != std::string::npos);
  CHECK(out.str().find("#summary raw=7680") != std::string::npos);
}

TEST_CASE("describe renders a certificate for non-manifold gluings") {
  auto rep = describe("n=1; c0.0~c0.1:r0; c0.2~c0.3:r0; c0.4~c0.5:r0");
  if (!rep.certificate.is_manifold) {
    CHECK(rep.render().find("manifold:   no") != std::string::npos);
    CHECK(rep.render().find("vertex") != std::string::npos);
  }
  auto empty = describe("n=0");
  CHECK(!empty.certificate.is_manifold);
}

TEST_CASE("describe matches the module-level examples") {
  auto t3 = describe("n=1; c0.0~c0.1:r0m; c0.2~c0.3:r0m; c0.4~c0.5:r0m");
  CHECK(t3.certificate.is_manifold);
  CHECK(t3.h[1] == AbelianGroup::free(3));
  CHECK(t3.dual.surface_chi == 0);

  auto anti = describe("n=1; c0.0~c0.1:r2m; c0.2~c0.3:r2m; c0.4~c0.5:r2m");
  CHECK(anti.h[1] == AbelianGroup::cyclic(2));
  CHECK(anti.dual.triple_points == 1);
  CHECK(anti.dual.double_edges == 3);
  CHECK(anti.dual.regions == 6);
  CHECK(anti.dual.complement_components == 4);

  CHECK_THROWS_AS(describe("n=1; c0.0~c0"), ParseError);
  CHECK(t3.render().find("H1=Z^3") != std::string::npos);
  // the one-cube complexity ceiling is recorded in every class report
  CHECK(t3.render().find("c(M) <= 6") != std::string::npos);
}

TEST_CASE("table 1: all 11 targets realized by orientable classes") {
  auto report = table1_report(full_census().records);
  REQUIRE(report.matches.size() == 11);
  for (const auto& m : report.matches) {
    CHECK(!m.signatures.empty());
  }
  // every matched signature really is an orientable class with that H1
  std::map<std::string, const CensusRecord*> by_sig;
  for (const auto& rec : full_census().records)
    by_sig[rec.signature.hex()] = &rec;
  size_t matched = 0;
  for (const auto& m : report.matches) {
    for (const auto& sig : m.signatures) {
      REQUIRE(by_sig.count(sig));
      CHECK(by_sig[sig]->orientable);
      CHECK(by_sig[sig]->h[1] == m.target.h1);
      ++matched;
    }
  }
  CHECK(matched + report.unmatched.size() == 29);
  CHECK(render_table1(report).find("L(6,1)") != std::string::npos);
}

TEST_CASE("transversal mode rejects multi-cube runs") {
  CensusOptions o;
  o.n_cubes = 2;
  o.paper_transversal = true;
  CHECK_THROWS_AS(run_census_serial(o), InvalidCounts);
}
