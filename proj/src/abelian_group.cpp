#include "cubecensus/abelian_group.hpp"

#include <algorithm>

#include "cubecensus/errors.hpp"

namespace cubecensus {

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank == 1)
    out = "Z";
  else if (free_rank > 1)
    out = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  return out;
}

std::string AbelianGroup::to_string_primary() const {
  AbelianGroup split;
  split.free_rank = free_rank;
  for (Integer d : torsion) {
    for (Integer p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      Integer q = 1;
      while (d % p == 0) {
        q *= p;
        d /= p;
      }
      split.torsion.push_back(q);
    }
    if (d > 1) split.torsion.push_back(d);
  }
  std::sort(split.torsion.begin(), split.torsion.end());
  return split.to_string();
}

AbelianGroup parse_abelian_group(const std::string& s) {
  AbelianGroup g;
  if (s == "0") return g;
  size_t i = 0;
  auto term = [&]() {
    if (s[i] != 'Z') throw ParseError("expected 'Z' in group", i);
    ++i;
    if (i < s.size() && s[i] == '^') {
      ++i;
      long r = 0;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
        r = r * 10 + (s[i++] - '0');
      g.free_rank += r;
    } else if (i < s.size() && s[i] == '/') {
      ++i;
      Integer d = 0;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
        d = d * 10 + (s[i++] - '0');
      if (d <= 1) throw ParseError("torsion coefficient must exceed 1", i);
      g.torsion.push_back(d);
    } else {
      g.free_rank += 1;
    }
  };
  term();
  while (i < s.size()) {
    if (s.compare(i, 3, " + ") != 0)
      throw ParseError("expected ' + ' between group terms", i);
    i += 3;
    term();
  }
  return g;
}

}  // namespace cubecensus
