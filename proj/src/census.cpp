#include "cubecensus/census.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cubecensus/conventions.hpp"
#include "cubecensus/enumeration.hpp"
#include "cubecensus/errors.hpp"
#include "cubecensus/homology.hpp"

namespace cubecensus {

namespace {

struct CandidateSpace {
  std::vector<FacePairing> pairings;
  std::vector<uint64_t> offset;  // prefix sums of gluing counts
  bool transversal = false;

  uint64_t total() const { return offset.back(); }
  Cubulation at(uint64_t idx) const {
    size_t p = static_cast<size_t>(
        std::upper_bound(offset.begin(), offset.end(), idx) - offset.begin() -
        1);
    return gluing_at(pairings[p], idx - offset[p], transversal);
  }
};

CandidateSpace candidate_space(const CensusOptions& opts) {
  CandidateSpace s;
  s.transversal = opts.paper_transversal;
  auto all = enumerate_pairings(opts.n_cubes);
  if (opts.paper_transversal) {
    if (opts.n_cubes != 1)
      throw InvalidCounts("transversal mode is defined for one cube");
    s.pairings = pairing_symmetry_classes(all).representatives;
  } else {
    s.pairings = std::move(all);
  }
  s.offset.push_back(0);
  for (const auto& p : s.pairings)
    s.offset.push_back(s.offset.back() + gluing_count(p, s.transversal));
  return s;
}

bool candidate_is_manifold(const Cubulation& c) {
  try {
    auto q = build_quotient(subdivide(c), c);
    return is_closed_3_manifold(q).is_manifold;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) + " [candidate: " +
                             to_text(c) + "]");
  }
}

CensusRecord make_record(const Signature& sig, uint64_t multiplicity) {
  CensusRecord rec;
  rec.signature = sig;
  rec.multiplicity = multiplicity;
  rec.representative = signature_to_cubulation(sig);
  const Cubulation& c = rec.representative;
  try {
    rec.pairing_class =
        c.n_cubes == 1 ? one_cube_pairing_class(c.pairing()) : -1;
    auto q = build_quotient(subdivide(c), c);
    rec.manifold = true;
    rec.orientable = is_orientable(q);
    rec.h = homology(q);
    auto d = dual_surface(c, q);
    rec.dual = dual_counts(d);
    for (const auto& comp : d.surface_components)
      rec.surface_chis.push_back(comp.chi);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) + " [candidate: " +
                             to_text(c) + "]");
  }
  return rec;
}

CensusResult finalize(const CensusOptions& opts, uint64_t raw,
                      uint64_t manifold_candidates,
                      std::map<Signature, uint64_t>&& classes, bool parallel_records) {
  CensusResult out;
  out.options = opts;
  out.summary.raw_candidates = raw;
  out.summary.manifold_candidates = manifold_candidates;
  out.summary.manifold_classes = classes.size();

  std::vector<std::pair<Signature, uint64_t>> flat(classes.begin(),
                                                   classes.end());
  out.records.resize(flat.size());
  if (parallel_records) {
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(flat.size()); ++i) {
      try {
        out.records[static_cast<size_t>(i)] =
            make_record(flat[static_cast<size_t>(i)].first,
                        flat[static_cast<size_t>(i)].second);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (size_t i = 0; i < flat.size(); ++i)
      out.records[i] = make_record(flat[i].first, flat[i].second);
  }
  for (const auto& r : out.records) {
    if (r.orientable)
      ++out.summary.orientable_classes;
    else
      ++out.summary.nonorientable_classes;
  }
  return out;
}

}  // namespace

int one_cube_pairing_class(const FacePairing& p) {
  if (p.n_cubes != 1) return -1;
  static const PairingClasses classes =
      pairing_symmetry_classes(enumerate_pairings(1));
  auto all = enumerate_pairings(1);
  auto norm = p;
  std::sort(norm.pairs.begin(), norm.pairs.end());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i].pairs == norm.pairs) return classes.class_of[i];
  return -1;
}

CensusResult run_census_serial(const CensusOptions& opts) {
  CandidateSpace space = candidate_space(opts);
  std::map<Signature, uint64_t> classes;
  uint64_t manifold_candidates = 0;
  for (uint64_t i = 0; i < space.total(); ++i) {
    Cubulation c = space.at(i);
    if (!candidate_is_manifold(c)) continue;
    ++manifold_candidates;
    classes[isomorphism_signature(c)] += 1;
  }
  return finalize(opts, space.total(), manifold_candidates, std::move(classes),
                  false);
}

CensusResult run_census_parallel(const CensusOptions& opts) {
#ifdef _OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
  CandidateSpace space = candidate_space(opts);
  const long total = static_cast<long>(space.total());
  uint64_t manifold_candidates = 0;
  std::map<Signature, uint64_t> classes;
  std::exception_ptr err;
#pragma omp parallel
  {
    std::map<Signature, uint64_t> local;
    uint64_t local_manifold = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (long i = 0; i < total; ++i) {
      try {
        Cubulation c = space.at(static_cast<uint64_t>(i));
        if (!candidate_is_manifold(c)) continue;
        ++local_manifold;
        local[isomorphism_signature(c)] += 1;
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
#pragma omp critical
    {
      manifold_candidates += local_manifold;
      for (auto& [sig, mult] : local) classes[sig] += mult;
    }
  }
  if (err) std::rethrow_exception(err);
  return finalize(opts, space.total(), manifold_candidates, std::move(classes),
                  true);
#else
  return run_census_serial(opts);
#endif
}

CensusResult run_census(const CensusOptions& opts) {
  return opts.parallel ? run_census_parallel(opts) : run_census_serial(opts);
}

// ---------------------------------------------------------------------------
// Census files.

namespace {

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<long> split_longs(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    out.push_back(std::stol(s.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

}  // namespace

void write_census(const CensusResult& r, std::ostream& out) {
  char hexbuf[17];
  snprintf(hexbuf, sizeof hexbuf, "%016llx",
           static_cast<unsigned long long>(convention_hash()));
  out << "#cube-census v1\n";
  out << "#conventions " << hexbuf << "\n";
  out << "#options cubes=" << r.options.n_cubes
      << " transversal=" << (r.options.paper_transversal ? 1 : 0) << "\n";
  out << "#columns sig pairing_class manifold orientable H0 H1 H2 H3 "
         "T D R B chiS surface mult rep\n";
  for (const auto& rec : r.records) {
    out << rec.signature.hex() << '\t' << rec.pairing_class << '\t'
        << (rec.manifold ? 1 : 0) << '\t' << (rec.orientable ? 1 : 0);
    for (const auto& h : rec.h) out << '\t' << h.to_string();
    out << '\t' << rec.dual.triple_points << '\t' << rec.dual.double_edges
        << '\t' << rec.dual.regions << '\t' << rec.dual.complement_components
        << '\t' << rec.dual.surface_chi << '\t' << join_longs(rec.surface_chis)
        << '\t' << rec.multiplicity << '\t' << to_text(rec.representative)
        << '\n';
  }
  out << "#summary raw=" << r.summary.raw_candidates
      << " manifold_candidates=" << r.summary.manifold_candidates
      << " classes=" << r.summary.manifold_classes
      << " orientable=" << r.summary.orientable_classes
      << " nonorientable=" << r.summary.nonorientable_classes << "\n";
}

CensusResult read_census(std::istream& in) {
  CensusResult r;
  std::string line;
  size_t lineno = 0;
  bool header = false;
  auto read_u64 = [&line](const char* key) -> uint64_t {
    size_t at = line.find(key);
    if (at == std::string::npos) return 0;
    return std::strtoull(line.c_str() + at + std::strlen(key), nullptr, 10);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (lineno == 1) {
        if (line != "#cube-census v1")
          throw ParseError("unrecognized census header", 0);
        header = true;
      } else if (line.rfind("#options ", 0) == 0) {
        r.options.n_cubes = static_cast<uint32_t>(read_u64("cubes="));
        r.options.paper_transversal = read_u64("transversal=") != 0;
      } else if (line.rfind("#summary ", 0) == 0) {
        r.summary.raw_candidates = read_u64("raw=");
        r.summary.manifold_candidates = read_u64("manifold_candidates=");
      }
      continue;
    }
    if (!header) throw ParseError("census data before header", lineno);
    std::vector<std::string> cols;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos
                                            ? std::string::npos
                                            : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 16)
      throw ParseError("census record needs 16 columns", lineno);
    try {
      CensusRecord rec;
      rec.signature = Signature::from_hex(cols[0]);
      rec.pairing_class = std::stoi(cols[1]);
      rec.manifold = cols[2] == "1";
      rec.orientable = cols[3] == "1";
      for (int i = 0; i < 4; ++i)
        rec.h[static_cast<size_t>(i)] = parse_abelian_group(cols[4 + i]);
      rec.dual.triple_points = std::stol(cols[8]);
      rec.dual.double_edges = std::stol(cols[9]);
      rec.dual.regions = std::stol(cols[10]);
      rec.dual.complement_components = std::stol(cols[11]);
      rec.dual.surface_chi = std::stol(cols[12]);
      rec.surface_chis = split_longs(cols[13]);
      rec.multiplicity = std::stoull(cols[14]);
      rec.representative = parse_cubulation(cols[15]);
      r.records.push_back(std::move(rec));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad census record: ") + e.what(), lineno);
    }
  }
  for (const auto& rec : r.records) {
    if (rec.orientable)
      ++r.summary.orientable_classes;
    else
      ++r.summary.nonorientable_classes;
  }
  r.summary.manifold_classes = r.records.size();
  return r;
}

// ---------------------------------------------------------------------------
// describe

DescribeReport describe(const Cubulation& c) {
  DescribeReport rep;
  rep.cubulation = c;
  rep.signature = isomorphism_signature(c);
  auto q = build_quotient(subdivide(c), c);
  rep.certificate = is_closed_3_manifold(q);
  if (rep.certificate.is_manifold) {
    rep.orientable = is_orientable(q);
    rep.h = homology(q);
    auto d = dual_surface(c, q);
    rep.dual = dual_counts(d);
    for (const auto& comp : d.surface_components)
      rep.surface_chis.push_back(comp.chi);
  }
  return rep;
}

DescribeReport describe(const std::string& text) {
  return describe(parse_cubulation(text));
}

std::string DescribeReport::render() const {
  std::ostringstream out;
  out << "cubulation: " << to_text(cubulation) << "\n";
  out << "signature:  " << signature.hex() << "\n";
  out << "manifold:   " << (certificate.is_manifold ? "yes" : "no") << "\n";
  if (!certificate.is_manifold) {
    out << "  " << certificate.describe() << "\n";
    return out.str();
  }
  out << "orientable: " << (orientable ? "yes" : "no") << "\n";
  out << "homology:   H0=" << h[0].to_string() << "  H1=" << h[1].to_string()
      << "  H2=" << h[2].to_string() << "  H3=" << h[3].to_string() << "\n";
  out << "dual surface: triple points=" << dual.triple_points
      << " double edges=" << dual.double_edges << " regions=" << dual.regions
      << " complement balls=" << dual.complement_components
      << " chi(S)=" << dual.surface_chi << "\n";
  out << "  surface components (chi): " << join_longs(surface_chis) << "\n";
  if (cubulation.n_cubes == 1)
    out << "bounds:     " << one_cube_matveev_bound().to_string() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// table 1 matching

Table1Report table1_report(const std::vector<CensusRecord>& records) {
  Table1Report report;
  auto targets = table1_targets();
  std::vector<bool> matched(records.size(), false);
  for (const auto& t : targets) {
    Table1Match m;
    m.target = t;
    for (size_t i = 0; i < records.size(); ++i) {
      if (!records[i].orientable) continue;
      if (records[i].h[1] == t.h1) {
        m.signatures.push_back(records[i].signature.hex());
        matched[i] = true;
      }
    }
    report.matches.push_back(std::move(m));
  }
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].orientable && !matched[i])
      report.unmatched.emplace_back(records[i].signature.hex(),
                                    records[i].h[1].to_string());
  }
  return report;
}

std::string render_table1(const Table1Report& report) {
  std::ostringstream out;
  out << "target manifold                       H1                matching "
         "classes\n";
  for (const auto& m : report.matches) {
    std::string name = m.target.name;
    name.resize(36, ' ');
    std::string h1 = m.target.h1.to_string();
    h1.resize(18, ' ');
    out << name << h1 << m.signatures.size() << "\n";
    for (const auto& s : m.signatures) out << "    " << s << "\n";
  }
  out << "orientable classes matching no target (reducible or lower "
         "complexity): "
      << report.unmatched.size() << "\n";
  for (const auto& [sig, h1] : report.unmatched)
    out << "    " << sig << "  H1=" << h1 << "\n";
  return out.str();
}

}  // namespace cubecensus
