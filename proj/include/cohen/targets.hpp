#pragma once

#include <charconv>
#include <numeric>
#include <string>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/finite_group.hpp"

namespace cohen {

// A finite group used as a homomorphism target, e.g. "S5".
struct NamedGroup {
  std::string name;
  GroupPtr table;
};

inline NamedGroup cyclic_group(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group of order 0");
  std::vector<std::uint32_t> rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = static_cast<std::uint32_t>((i + 1) % n);
  return {"C" + std::to_string(n), share(FiniteGroupTable::from_permutations({"c"}, {rot}))};
}

// S_n generated by a transposition (a) and an n-cycle (b).
inline NamedGroup symmetric_group(std::size_t n) {
  if (n < 2) throw ValidationError("symmetric groups start at S2");
  std::vector<std::uint32_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  if (n == 2) return {"S2", share(FiniteGroupTable::from_permutations({"a"}, {swap}))};
  return {"S" + std::to_string(n), share(FiniteGroupTable::from_permutations({"a", "b"}, {swap, cycle}))};
}

// A_n generated by the 3-cycles (0 1 k), k = 2..n-1.
inline NamedGroup alternating_group(std::size_t n) {
  if (n < 3) throw ValidationError("alternating groups start at A3");
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::string> names;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(k);
    p[k] = 0;
    gens.push_back(std::move(p));
    names.push_back("t" + std::to_string(k));
  }
  return {"A" + std::to_string(n), share(FiniteGroupTable::from_permutations(names, gens))};
}

// Dihedral group of order 2n.
inline NamedGroup dihedral_group(std::size_t order) {
  if (order < 4 || order % 2 != 0) throw ValidationError("dihedral order must be even and >= 4");
  const std::size_t n = order / 2;
  std::vector<std::uint32_t> rot(n), flip(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    flip[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return {"D" + std::to_string(order), share(FiniteGroupTable::from_permutations({"r", "s"}, {rot, flip}))};
}

// "S5", "A4", "C12", "D10".
inline NamedGroup parse_target(const std::string& text) {
  if (text.size() < 2) throw ParseError("", text, "unknown target group");
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw ParseError("", text, "unknown target group");
  switch (text[0]) {
    case 'S': return symmetric_group(n);
    case 'A': return alternating_group(n);
    case 'C': return cyclic_group(n);
    case 'D': return dihedral_group(n);
    default: throw ParseError("", text, "unknown target group");
  }
}

// Symmetric and alternating groups up to S5 (largest first), then cyclic
// groups of order 2..12.
inline std::vector<std::string> default_target_names() {
  std::vector<std::string> names{"S5", "A5", "S4", "A4", "S3"};
  for (int n = 2; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  return names;
}

inline std::vector<NamedGroup> make_targets(const std::vector<std::string>& names) {
  std::vector<NamedGroup> out;
  for (const auto& n : names) out.push_back(parse_target(n));
  return out;
}

}  // namespace cohen
