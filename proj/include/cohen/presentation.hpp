#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/word.hpp"

namespace cohen {

// <generators | relators>, relator form only.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  std::size_t num_generators() const noexcept { return generators.size(); }

  void validate() const {
    std::set<std::string> seen;
    for (const auto& name : generators) {
      if (name.empty() || name == "1" || name.find_first_of(" \t\n^=") != std::string::npos)
        throw ValidationError("invalid generator name '" + name + "'");
      if (!seen.insert(name).second)
        throw ValidationError("duplicate generator name '" + name + "'");
    }
    for (std::size_t r = 0; r < relators.size(); ++r)
      if (relators[r].alphabet_bound() > generators.size())
        throw ValidationError("relator " + std::to_string(r) +
                              " uses a generator index beyond the alphabet");
  }

  static GroupPresentation parse(std::vector<std::string> generators,
                                 const std::vector<std::string>& relators) {
    GroupPresentation p{std::move(generators), {}};
    for (std::size_t r = 0; r < relators.size(); ++r)
      p.relators.push_back(parse_relator(relators[r], p.generators, "/relators/" + std::to_string(r)));
    p.validate();
    return p;
  }

  std::vector<std::string> relator_strings() const {
    std::vector<std::string> out;
    for (const auto& r : relators) out.push_back(format_word(r, generators));
    return out;
  }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Tietze move: drops generator `g` using relator `r`, in which `g` occurs
// exactly once with exponent +-1. Solves r for g and substitutes elsewhere.
inline GroupPresentation eliminate_generator(const GroupPresentation& p, std::size_t g,
                                             std::size_t r) {
  const FreeWord& rel = p.relators.at(r);
  if (rel.occurrences(g) != 1)
    throw ValidationError("generator '" + p.generators.at(g) +
                          "' must occur exactly once in the eliminating relator");
  // rel = u g^e v  =>  g = (v u)^-e  (cyclic rotation is harmless for relators)
  const auto& ls = rel.letters();
  auto pos = static_cast<std::size_t>(
      std::find_if(ls.begin(), ls.end(), [&](const Letter& l) { return l.generator == g; }) -
      ls.begin());
  FreeWord u(std::vector<Letter>(ls.begin(), ls.begin() + pos));
  FreeWord v(std::vector<Letter>(ls.begin() + pos + 1, ls.end()));
  FreeWord value = v * u;
  if (ls[pos].exponent > 0) value = value.inverse();

  GroupPresentation out;
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (i != g) out.generators.push_back(p.generators[i]);
  auto shift = [g](std::size_t i) { return i > g ? i - 1 : i; };
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == r) continue;
    out.relators.push_back(p.relators[i].substitute(g, value).relabel(shift));
  }
  return out;
}

}  // namespace cohen
