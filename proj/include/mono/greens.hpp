#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mono/monoid.hpp"

namespace mono {

  /// \brief Green's relations of a finite monoid.
  ///
  /// Each relation is a partition given by a class index per element. Class
  /// indices are assigned in order of the least element of each class, so
  /// class 0 always contains element 0.
  struct GreensData {
    std::vector<std::size_t> r_class;
    std::vector<std::size_t> l_class;
    std::vector<std::size_t> j_class;
    std::vector<std::size_t> h_class;
    /// j_leq[c][d] is true iff the ideal of class c is contained in that of d.
    std::vector<std::vector<bool>> j_leq;

    std::size_t number_of_j_classes() const noexcept {
      return j_leq.size();
    }

    bool r_related(element x, element y) const {
      return r_class[x] == r_class[y];
    }
    bool l_related(element x, element y) const {
      return l_class[x] == l_class[y];
    }
    bool j_related(element x, element y) const {
      return j_class[x] == j_class[y];
    }
    bool h_related(element x, element y) const {
      return h_class[x] == h_class[y];
    }

    /// Elements of each class of a partition, in increasing order.
    static std::vector<std::vector<element>> classes(
        std::vector<std::size_t> const& partition);
  };

  GreensData greens(FiniteMonoid const& m);

  /// Sorted xM, Mx and MxM.
  std::vector<element> right_ideal(FiniteMonoid const& m, element x);
  std::vector<element> left_ideal(FiniteMonoid const& m, element x);
  std::vector<element> two_sided_ideal(FiniteMonoid const& m, element x);

  /// The least b with a·b·a = a, if a is regular.
  std::optional<element> regular_witness(FiniteMonoid const& m, element a);

  inline bool is_regular(FiniteMonoid const& m, element a) {
    return regular_witness(m, a).has_value();
  }

  /// Regularity by the criterion "the R-class of a contains an idempotent".
  bool is_regular_by_idempotent(FiniteMonoid const& m,
                                GreensData const&   g,
                                element             a);

  /// The least a with a^ω ≠ a^ω·a, or nothing when m is aperiodic.
  std::optional<element> aperiodicity_counterexample(FiniteMonoid const& m);

  inline bool is_aperiodic(FiniteMonoid const& m) {
    return !aperiodicity_counterexample(m).has_value();
  }

  /// Aperiodicity as "every H-class is a singleton".
  bool has_trivial_h(GreensData const& g);

  /// a = a^ω·a.
  bool is_group_element(FiniteMonoid const& m, element a);

}  // namespace mono
