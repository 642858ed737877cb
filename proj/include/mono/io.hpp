#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mono/expansion.hpp"
#include "mono/monoid.hpp"

namespace mono {

  /// \brief Parses the .mon text format.
  ///
  ///     # comment
  ///     elements: 1 a 0
  ///     identity: 1
  ///     table:
  ///     1 a 0
  ///     a 0 0
  ///     0 0 0
  ///
  /// Row x lists x·y for every y in element order. Throws ParseError for
  /// malformed text and InvalidMonoid for identity or associativity failures.
  FiniteMonoid load_table(std::string_view text);

  /// Bit-exact .mon text for m, element order preserved.
  std::string serialize_monoid(FiniteMonoid const& m);

  struct TransformationSpec {
    std::size_t                          degree = 0;
    std::vector<TransformationGenerator> generators;
  };

  /// Parses `degree: <d>` followed by `gen <letter>: <d 1-based images>`.
  TransformationSpec parse_tgen(std::string_view text);

  /// \brief A complete deterministic automaton.
  struct Dfa {
    std::vector<std::string> states;
    std::string              alphabet;
    std::size_t              start = 0;
    std::vector<std::size_t> accepting;
    /// delta[state][letter index] = next state.
    std::vector<std::vector<std::size_t>> delta;
  };

  /// Parses `states:`, `alphabet:`, `start:`, `accept:` and
  /// `delta: <state> <letter> <state>` lines; delta must be total.
  Dfa parse_dfa(std::string_view text);

  /// The transition monoid of d with each letter mapped to its action.
  GeneratedMonoid dfa_to_transition_monoid(Dfa const&  d,
                                           std::size_t cap = default_element_cap);

  /// Parses "a=x,b=y" into a GeneratorMap over m.
  GeneratorMap parse_generator_map(FiniteMonoid const& m, std::string_view spec);

  /// Sidecar text for a serialized expansion: one line per profile giving
  /// its name, η image, representative word and tuples.
  std::string serialize_expansion_mapping(ExpandedMonoid const& e);

  std::string read_file(std::filesystem::path const& path);

  /// Splits on a delimiter keeping empty fields ("a,,b" has three).
  std::vector<std::string> split(std::string_view text, char delimiter);

}  // namespace mono
