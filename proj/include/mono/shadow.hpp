#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mono/ideal.hpp"
#include "mono/monoid.hpp"
#include "mono/omega.hpp"
#include "mono/words.hpp"

namespace mono {

  // Finite shadows of statements about free profinite monoids. Each function
  // checks, inside one finite monoid, exactly what that monoid can see; the
  // profinite statements themselves are not decided here.

  /// An instance a^n = a^{n+λ} where a^n is not a group element.
  struct CorollaryCounterexample {
    element     a;
    std::size_t n;
    std::size_t lambda;

    friend bool operator==(CorollaryCounterexample const&,
                           CorollaryCounterexample const&)
        = default;
  };

  struct CorollaryReport {
    std::size_t                          instances = 0;  // hypotheses met
    std::vector<CorollaryCounterexample> counterexamples;  // sorted

    bool holds() const noexcept {
      return counterexamples.empty();
    }
  };

  /// For all a, 1 ≤ n ≤ |M|+1, 1 ≤ λ ≤ |M|: a^n = a^{n+λ} implies that a^n
  /// is a group element.
  CorollaryReport corollary_shadow(FiniteMonoid const& m);

  enum class Verdict { holds, violated, vacuous };

  char const* to_string(Verdict v) noexcept;

  struct TheoremShadow {
    Verdict              verdict = Verdict::vacuous;
    std::vector<element> alphas;          // evaluated α_i
    element              alpha_product;   // α_1⋯α_m
    std::vector<Ideal>   ideals;          // I_1, …, I_n
    std::vector<element> ideal_product;   // elements of I_1⋯I_n
    /// membership[i][j]: α_{i+1} ∈ I_{j+1}.
    std::vector<std::vector<bool>> membership;
    /// 1-based (i, j) with α_i ∈ I_j: least j, then least i.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
  };

  /// \brief Finite analog of "α_1⋯α_m ∈ I_1⋯I_n implies some α_i ∈ I_j".
  ///
  /// I_j is the ideal generated by the evaluated terms of ideal_gens[j]. The
  /// verdict is vacuous when the product is not in I_1⋯I_n. Throws
  /// InvalidArgument when m > n or any generator list is empty.
  TheoremShadow theorem_shadow(
      FiniteMonoid const&                         m,
      GeneratorMap const&                         g,
      std::vector<OmegaTerm> const&               alphas,
      std::vector<std::vector<OmegaTerm>> const&  ideal_gens);

  struct ReplayResult {
    std::vector<element> targets;        // [w_1]_M, …, [w_n]_M
    Factorization        factorization;  // v_1, …, v_n of u_1⋯u_m
    FactorWitness        witness;        // v_j is a factor of u_i
    element              u_image;        // [u_i]_M
    element              w_image;        // [w_j]_M = [v_j]_M
    bool                 membership;     // [u_i]_M ∈ M [w_j]_M M
  };

  /// \brief Replays the finite core of the product-of-ideals argument.
  ///
  /// Requires m ≤ n and cut_n(u_1⋯u_m) = cut_n(w_1⋯w_n); throws
  /// HypothesisFailure if the profiles differ and InvalidArgument if m > n.
  /// Refactors u_1⋯u_m as v_1⋯v_n with [v_j] = [w_j], then locates some v_j
  /// inside some u_i.
  ReplayResult proof_replay(FiniteMonoid const&      m,
                            GeneratorMap const&      g,
                            std::size_t              n,
                            std::vector<Word> const& us,
                            std::vector<Word> const& ws);

}  // namespace mono
