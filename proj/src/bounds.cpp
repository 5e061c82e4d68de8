#include "cubecensus/bounds.hpp"

#include <cstdlib>

#include "cubecensus/errors.hpp"
#include "cubecensus/integer_matrix.hpp"
#include "cubecensus/smith.hpp"

namespace cubecensus {

namespace {

const char* kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::kTriangulation: return "triangulation";
    case BoundKind::kHeegaard: return "heegaard";
    case BoundKind::kHeegaardImproved: return "heegaard_improved";
    case BoundKind::kSurgery: return "surgery";
    case BoundKind::kMatveevUpper: return "matveev_upper";
    case BoundKind::kMatveevLower: return "matveev_lower";
    case BoundKind::kOneCubeMatveev: return "one_cube_matveev";
  }
  return "?";
}

}  // namespace

std::string ComplexityBound::to_string() const {
  std::string lhs = kind == BoundKind::kOneCubeMatveev ? "c(M)" : "sc(M)";
  return lhs + " <= " + std::to_string(value) + "  [" + kind_name(kind) +
         (inputs.empty() ? "" : ", " + inputs) + "]";
}

ComplexityBound sc_upper_triangulation(uint64_t n) {
  return {BoundKind::kTriangulation, 4 * n, "n=" + std::to_string(n)};
}

ComplexityBound sc_upper_heegaard(uint64_t n, std::optional<uint64_t> m) {
  if (!m) return {BoundKind::kHeegaard, 4 * n, "n=" + std::to_string(n)};
  if (*m > n) throw InvalidCounts("heegaard bound needs m <= n");
  return {BoundKind::kHeegaardImproved, 4 * n - 4 * *m,
          "n=" + std::to_string(n) + ", m=" + std::to_string(*m)};
}

ComplexityBound sc_upper_surgery(const SurgeryPresentation& p) {
  if (p.framings.size() != p.writhes.size())
    throw InvalidCounts("framings and writhes must pair up");
  uint64_t value = 8 * p.crossings + 4 * p.no_overpass_components;
  uint64_t correction = 0;
  for (size_t i = 0; i < p.framings.size(); ++i)
    correction += static_cast<uint64_t>(
        std::llabs(static_cast<long long>(p.framings[i] - p.writhes[i])));
  value += 4 * correction;
  std::string inputs = "n=" + std::to_string(p.crossings) +
                       ", m=" + std::to_string(p.no_overpass_components);
  if (correction > 0)
    inputs += ", sum|fr-w|=" + std::to_string(correction);
  return {BoundKind::kSurgery, value, inputs};
}

BoundInterval matveev_from_sc(uint64_t sc, bool orientable) {
  uint64_t factor = orientable ? 6 : 8;
  return {(sc + 3) / 4, factor * sc};
}

BoundInterval sc_from_matveev(uint64_t c, bool orientable) {
  uint64_t factor = orientable ? 6 : 8;
  return {(c + factor - 1) / factor, 4 * c};
}

std::optional<ExceptionEntry> complexity_exception(const std::string& name) {
  if (name == "L3,1" || name == "L(3,1)") return ExceptionEntry{0, 2};
  if (name == "L4,1" || name == "L(4,1)") return ExceptionEntry{1, 0};
  return std::nullopt;
}

ComplexityBound one_cube_matveev_bound() {
  return {BoundKind::kOneCubeMatveev, 6, ""};
}

AbelianGroup seifert_h1(const SeifertInvariants& s) {
  for (const auto& [a, b] : s.exceptional)
    if (a < 1) throw InvalidCounts("exceptional pair needs a >= 1");
  size_t k = s.exceptional.size();
  if (s.base == SeifertBase::kSphere) {
    // generators x_1..x_k, h
    IntegerMatrix m(k + 1, k + 1);
    for (size_t i = 0; i < k; ++i) {
      m(i, i) = s.exceptional[i].first;
      m(i, k) = s.exceptional[i].second;
      m(k, i) = 1;
    }
    auto snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = static_cast<long>(k + 1 - rank(snf));
    for (const auto& d : snf.invariant_factors)
      if (d > 1) g.torsion.push_back(d);
    return g;
  }
  if (s.base == SeifertBase::kProjectivePlane) {
    // generators x_1..x_k, h, v
    IntegerMatrix m(k + 2, k + 2);
    for (size_t i = 0; i < k; ++i) {
      m(i, i) = s.exceptional[i].first;
      m(i, k) = s.exceptional[i].second;
      m(k + 1, i) = 1;
    }
    m(k, k) = 2;          // 2h = 0
    m(k + 1, k + 1) = 2;  // sum x_i + 2v = 0
    auto snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = static_cast<long>(k + 2 - rank(snf));
    for (const auto& d : snf.invariant_factors)
      if (d > 1) g.torsion.push_back(d);
    return g;
  }
  throw UnsupportedBase("seifert base must be S2 or RP2");
}

std::vector<Table1Target> table1_targets() {
  auto seifert = [](std::vector<std::pair<int64_t, int64_t>> pairs,
                    SeifertBase base = SeifertBase::kSphere) {
    return seifert_h1({base, std::move(pairs)});
  };
  std::vector<Table1Target> t;
  t.push_back({"L(6,1)", AbelianGroup::cyclic(6)});
  t.push_back({"L(8,3)", AbelianGroup::cyclic(8)});
  t.push_back({"L(12,5)", AbelianGroup::cyclic(12)});
  t.push_back({"L(14,3)", AbelianGroup::cyclic(14)});
  t.push_back({"(S2,(2,1),(2,1),(2,-1))", seifert({{2, 1}, {2, 1}, {2, -1}})});
  t.push_back({"(S2,(2,1),(2,1),(3,-2))", seifert({{2, 1}, {2, 1}, {3, -2}})});
  t.push_back({"T^3", AbelianGroup::free(3)});
  t.push_back({"(S2,(2,1),(4,1),(4,-3))", seifert({{2, 1}, {4, 1}, {4, -3}})});
  t.push_back({"(S2,(3,1),(3,1),(3,-2))", seifert({{3, 1}, {3, 1}, {3, -2}})});
  t.push_back({"(S2,(2,1),(2,1),(2,1),(2,-3))",
               seifert({{2, 1}, {2, 1}, {2, 1}, {2, -3}})});
  t.push_back({"(RP2,(2,1),(2,-1))",
               seifert({{2, 1}, {2, -1}}, SeifertBase::kProjectivePlane)});
  return t;
}

}  // namespace cubecensus
