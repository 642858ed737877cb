#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mono/monoid.hpp"
#include "mono/words.hpp"

namespace mono {

  inline constexpr std::size_t default_state_cap = 20000;

  /// cut_n of a single letter: its image placed in each of the n slots.
  CutProfile letter_profile(FiniteMonoid const& m,
                            GeneratorMap const& g,
                            char                letter,
                            std::size_t         n);

  /// \brief The profile of uv from the profiles of u and v.
  ///
  /// Merges s and t at every cut index i: tuples (s_1..s_i, 1..1) of s and
  /// (t_1..t_{n-i+1}, 1..1) of t give (s_1..s_{i-1}, s_i·t_1, t_2..t_{n-i+1}).
  CutProfile profile_product(FiniteMonoid const& m,
                             CutProfile const&   s,
                             CutProfile const&   t);

  /// cut_n(w) as the product of its letter profiles.
  CutProfile cut_by_products(FiniteMonoid const& m,
                             GeneratorMap const& g,
                             std::string_view    w,
                             std::size_t         n);

  /// Truncation cut_{n+1}(w) → cut_n(w): keep tuples whose last entry is 1.
  CutProfile truncate_profile(FiniteMonoid const& m, CutProfile const& p);

  struct ExpansionOptions {
    std::size_t cap  = default_state_cap;
    std::size_t jobs = 1;
  };

  /// \brief The cut-profile expansion M^(n) with η : M^(n) → M.
  ///
  /// Elements are the cut_n profiles reachable from the letters, numbered
  /// generation by generation (breadth-first by word length) and, within a
  /// generation, in increasing canonical encoding. Element 0 is the identity
  /// profile {(1, …, 1)}.
  struct ExpandedMonoid {
    FiniteMonoid            base;
    GeneratorMap            generators;
    std::size_t             arity = 0;
    std::vector<CutProfile> profiles;
    FiniteMonoid            monoid;           // names P0, P1, ...
    GeneratorMap            monoid_generators;  // letters into `monoid`
    std::vector<element>    eta;
    std::vector<Word>       representatives;  // shortlex-least words

    std::size_t order() const noexcept {
      return profiles.size();
    }

    /// Index of a profile, if it is an element.
    std::optional<element> find(CutProfile const& p) const;

    /// Sizes of η⁻¹(x) for every base element x (0 outside the image).
    std::vector<std::size_t> fiber_sizes() const;
  };

  /// Throws CapExceeded (carrying the partial count) beyond options.cap.
  ExpandedMonoid build_expansion(FiniteMonoid const&     m,
                                 GeneratorMap const&     g,
                                 std::size_t             n,
                                 ExpansionOptions const& options = {});

  /// An element x of M^(n) whose fiber η⁻¹(η(x)) over an idempotent is not
  /// aperiodic at x, i.e. x^ω ≠ x^ω·x.
  struct EtaCounterexample {
    element profile;
    element base_idempotent;
  };

  /// Nothing when every fiber η⁻¹(e), e idempotent, is aperiodic.
  std::optional<EtaCounterexample> eta_aperiodicity_counterexample(
      ExpandedMonoid const& e);

  inline bool check_eta_aperiodic(ExpandedMonoid const& e) {
    return !eta_aperiodicity_counterexample(e).has_value();
  }

  struct RefinementResult {
    bool                 ok = false;
    std::string          failure;  // empty when ok
    std::vector<element> map;      // hi profile index → lo profile index
  };

  /// Checks that truncation M^(n+1) → M^(n) is a well-defined surjective
  /// morphism commuting with η. Throws InvalidArgument if the two
  /// expansions have different bases, generators, or arities not n+1 and n.
  RefinementResult check_refinement(ExpandedMonoid const& hi,
                                    ExpandedMonoid const& lo);

}  // namespace mono
