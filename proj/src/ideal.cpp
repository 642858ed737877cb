#include "mono/ideal.hpp"

#include <algorithm>

#include "mono/error.hpp"
#include "mono/greens.hpp"

namespace mono {

  namespace {

    void normalize(std::vector<element>& xs) {
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }

    std::vector<element> from_mask(std::vector<bool> const& mask) {
      std::vector<element> out;
      for (std::size_t x = 0; x < mask.size(); ++x) {
        if (mask[x]) {
          out.push_back(static_cast<element>(x));
        }
      }
      return out;
    }

  }  // namespace

  bool is_ideal(FiniteMonoid const& m, std::vector<element> xs) {
    normalize(xs);
    if (xs.empty()) {
      return false;
    }
    std::vector<bool> in(m.order(), false);
    for (auto a : xs) {
      if (a >= m.order()) {
        return false;
      }
      in[a] = true;
    }
    for (auto a : xs) {
      for (element x = 0; x < m.order(); ++x) {
        if (!in[m.multiply(x, a)] || !in[m.multiply(a, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  Ideal::Ideal(FiniteMonoid const& m, std::vector<element> elements)
      : elements_(std::move(elements)) {
    normalize(elements_);
    if (elements_.empty()) {
      throw InvalidArgument("an ideal must be non-empty");
    }
    for (auto a : elements_) {
      m.validate_index(a);
    }
    if (!is_ideal(m, elements_)) {
      throw InvalidArgument("element set is not closed under multiplication "
                            "by the monoid");
    }
  }

  bool Ideal::contains(element x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }

  bool Ideal::subset_of(Ideal const& other) const {
    return std::includes(other.elements_.begin(),
                         other.elements_.end(),
                         elements_.begin(),
                         elements_.end());
  }

  Ideal ideal_generated(FiniteMonoid const& m, std::vector<element> const& s) {
    if (s.empty()) {
      throw InvalidArgument("cannot generate an ideal from the empty set");
    }
    std::vector<bool> mask(m.order(), false);
    for (auto a : s) {
      m.validate_index(a);
      for (element x = 0; x < m.order(); ++x) {
        for (auto z : m.row(m.multiply(x, a))) {
          mask[z] = true;
        }
      }
    }
    return Ideal(m, from_mask(mask));
  }

  Ideal ideal_product(FiniteMonoid const& m, Ideal const& i, Ideal const& j) {
    std::vector<bool> mask(m.order(), false);
    for (auto x : i.elements()) {
      for (auto y : j.elements()) {
        mask[m.multiply(x, y)] = true;
      }
    }
    return Ideal(m, from_mask(mask));
  }

  Ideal ideal_product(FiniteMonoid const& m, std::vector<Ideal> const& is) {
    if (is.empty()) {
      throw InvalidArgument("empty product of ideals");
    }
    Ideal acc = is.front();
    for (std::size_t k = 1; k < is.size(); ++k) {
      acc = ideal_product(m, acc, is[k]);
    }
    return acc;
  }

  Ideal ideal_intersection(FiniteMonoid const& m,
                           Ideal const&        i,
                           Ideal const&        j) {
    std::vector<element> out;
    std::set_intersection(i.elements().begin(),
                          i.elements().end(),
                          j.elements().begin(),
                          j.elements().end(),
                          std::back_inserter(out));
    // Non-empty in a finite monoid: i·j lies in both.
    return Ideal(m, std::move(out));
  }

  std::optional<std::pair<element, element>> prime_ideal_witness(
      FiniteMonoid const& m,
      Ideal const&        i) {
    for (element a = 0; a < m.order(); ++a) {
      if (i.contains(a)) {
        continue;
      }
      for (element b = 0; b < m.order(); ++b) {
        if (!i.contains(b) && i.contains(m.multiply(a, b))) {
          return std::pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  bool is_idempotent_ideal(FiniteMonoid const& m, Ideal const& i) {
    return ideal_product(m, i, i) == i;
  }

  Ideal minimal_ideal(FiniteMonoid const& m) {
    auto const  g = greens(m);
    std::size_t const k = g.number_of_j_classes();
    for (std::size_t c = 0; c < k; ++c) {
      bool below_all = true;
      for (std::size_t d = 0; d < k && below_all; ++d) {
        below_all = g.j_leq[c][d];
      }
      if (below_all) {
        return ideal_generated(m, GreensData::classes(g.j_class)[c]);
      }
    }
    // Unreachable for a finite monoid: the kernel always exists.
    throw InvalidMonoid("no minimum J-class");
  }

}  // namespace mono
