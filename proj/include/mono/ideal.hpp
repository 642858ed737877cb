#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mono/monoid.hpp"

namespace mono {

  /// \brief A two-sided ideal of a finite monoid, stored as a sorted set.
  ///
  /// Ideals are non-empty; the constructor checks closure under
  /// multiplication on both sides and throws InvalidArgument otherwise.
  class Ideal {
   public:
    Ideal(FiniteMonoid const& m, std::vector<element> elements);

    std::vector<element> const& elements() const noexcept {
      return elements_;
    }

    std::size_t size() const noexcept {
      return elements_.size();
    }

    bool contains(element x) const;

    /// this ⊆ other.
    bool subset_of(Ideal const& other) const;

    friend bool operator==(Ideal const&, Ideal const&) = default;

   private:
    std::vector<element> elements_;
  };

  /// Sorts, deduplicates and checks that xs is a non-empty ideal of m.
  bool is_ideal(FiniteMonoid const& m, std::vector<element> xs);

  /// MSM for a non-empty set s.
  Ideal ideal_generated(FiniteMonoid const& m, std::vector<element> const& s);

  /// {x·y : x ∈ i, y ∈ j}.
  Ideal ideal_product(FiniteMonoid const& m, Ideal const& i, Ideal const& j);

  /// i_1 ⋯ i_n for a non-empty list.
  Ideal ideal_product(FiniteMonoid const& m, std::vector<Ideal> const& is);

  Ideal ideal_intersection(FiniteMonoid const& m,
                           Ideal const&        i,
                           Ideal const&        j);

  /// The lexicographically least pair (a, b) with a, b ∉ i and a·b ∈ i, or
  /// nothing when i is prime.
  std::optional<std::pair<element, element>> prime_ideal_witness(
      FiniteMonoid const& m,
      Ideal const&        i);

  inline bool is_prime_ideal(FiniteMonoid const& m, Ideal const& i) {
    return !prime_ideal_witness(m, i).has_value();
  }

  /// i² = i.
  bool is_idempotent_ideal(FiniteMonoid const& m, Ideal const& i);

  /// The kernel: the ideal generated by the least J-class.
  Ideal minimal_ideal(FiniteMonoid const& m);

}  // namespace mono
