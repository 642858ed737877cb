#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mono/monoid.hpp"

namespace mono {

  /// \brief Abstract syntax of ω-terms.
  ///
  /// A term is a letter, a concatenation of at least two terms, a positive
  /// integer power, or an ω-power. Text syntax:
  ///
  ///     expr   := factor+
  ///     factor := atom ['^' (integer | 'w')]
  ///     atom   := letter | '(' expr ')'
  ///
  /// so "a^2(ba)^w" is Concat(Power(a, 2), OmegaPower(Concat(b, a))).
  class OmegaTerm {
   public:
    enum class Kind { letter, concat, power, omega_power };

    static OmegaTerm letter(char symbol);
    static OmegaTerm concat(std::vector<OmegaTerm> terms);
    static OmegaTerm power(OmegaTerm base, std::uint64_t exponent);
    static OmegaTerm omega_power(OmegaTerm base);

    Kind kind() const noexcept {
      return kind_;
    }
    char symbol() const noexcept {
      return symbol_;
    }
    std::uint64_t exponent() const noexcept {
      return exponent_;
    }
    std::vector<OmegaTerm> const& children() const noexcept {
      return children_;
    }

    /// Letters occurring in the term, in order of first occurrence.
    std::string letters() const;

    friend bool operator==(OmegaTerm const&, OmegaTerm const&) = default;

   private:
    OmegaTerm() = default;

    Kind                   kind_     = Kind::letter;
    char                   symbol_   = 0;
    std::uint64_t          exponent_ = 0;
    std::vector<OmegaTerm> children_;
  };

  /// Throws ParseError naming the 0-based offending position.
  OmegaTerm parse_term(std::string_view text);

  /// Canonical text form; parse_term(to_string(t)) == t.
  std::string to_string(OmegaTerm const& t);

  /// Homomorphic evaluation with ω-powers mapped to omega_power.
  element evaluate(OmegaTerm const&    t,
                   FiniteMonoid const& m,
                   GeneratorMap const& g);

}  // namespace mono
