#include "mono/greens.hpp"

#include <algorithm>
#include <map>

namespace mono {

  namespace {

    using Bits = std::vector<bool>;

    // Assigns class ids to equal keys, numbered by first occurrence.
    std::vector<std::size_t> partition_by(std::vector<Bits> const& keys) {
      std::map<Bits, std::size_t> ids;
      std::vector<std::size_t>    out;
      out.reserve(keys.size());
      for (auto const& k : keys) {
        auto [it, fresh] = ids.emplace(k, ids.size());
        out.push_back(it->second);
      }
      return out;
    }

    Bits right_bits(FiniteMonoid const& m, element x) {
      Bits b(m.order(), false);
      for (auto y : m.row(x)) {
        b[y] = true;
      }
      return b;
    }

    Bits left_bits(FiniteMonoid const& m, element x) {
      Bits b(m.order(), false);
      for (element y = 0; y < m.order(); ++y) {
        b[m.multiply(y, x)] = true;
      }
      return b;
    }

    Bits two_sided_bits(FiniteMonoid const& m, element x) {
      Bits b(m.order(), false);
      for (element y = 0; y < m.order(); ++y) {
        for (auto z : m.row(m.multiply(y, x))) {
          b[z] = true;
        }
      }
      return b;
    }

    std::vector<element> to_list(Bits const& b) {
      std::vector<element> out;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i]) {
          out.push_back(static_cast<element>(i));
        }
      }
      return out;
    }

    bool subset(Bits const& a, Bits const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::vector<std::vector<element>> GreensData::classes(
      std::vector<std::size_t> const& partition) {
    std::size_t count = 0;
    for (auto c : partition) {
      count = std::max(count, c + 1);
    }
    std::vector<std::vector<element>> out(count);
    for (std::size_t x = 0; x < partition.size(); ++x) {
      out[partition[x]].push_back(static_cast<element>(x));
    }
    return out;
  }

  std::vector<element> right_ideal(FiniteMonoid const& m, element x) {
    m.validate_index(x);
    return to_list(right_bits(m, x));
  }

  std::vector<element> left_ideal(FiniteMonoid const& m, element x) {
    m.validate_index(x);
    return to_list(left_bits(m, x));
  }

  std::vector<element> two_sided_ideal(FiniteMonoid const& m, element x) {
    m.validate_index(x);
    return to_list(two_sided_bits(m, x));
  }

  GreensData greens(FiniteMonoid const& m) {
    std::size_t const n = m.order();
    std::vector<Bits> rights, lefts, twos;
    for (element x = 0; x < n; ++x) {
      rights.push_back(right_bits(m, x));
      lefts.push_back(left_bits(m, x));
      twos.push_back(two_sided_bits(m, x));
    }
    GreensData g;
    g.r_class = partition_by(rights);
    g.l_class = partition_by(lefts);
    g.j_class = partition_by(twos);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
    for (element x = 0; x < n; ++x) {
      auto [it, fresh]
          = h_ids.emplace(std::pair{g.r_class[x], g.l_class[x]}, h_ids.size());
      g.h_class.push_back(it->second);
    }

    auto const j_classes = GreensData::classes(g.j_class);
    std::size_t const k  = j_classes.size();
    g.j_leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t d = 0; d < k; ++d) {
        g.j_leq[c][d]
            = subset(twos[j_classes[c].front()], twos[j_classes[d].front()]);
      }
    }
    return g;
  }

  std::optional<element> regular_witness(FiniteMonoid const& m, element a) {
    m.validate_index(a);
    for (element b = 0; b < m.order(); ++b) {
      if (m.multiply(m.multiply(a, b), a) == a) {
        return b;
      }
    }
    return std::nullopt;
  }

  bool is_regular_by_idempotent(FiniteMonoid const& m,
                                GreensData const&   g,
                                element             a) {
    m.validate_index(a);
    for (element e = 0; e < m.order(); ++e) {
      if (g.r_related(a, e) && is_idempotent(m, e)) {
        return true;
      }
    }
    return false;
  }

  std::optional<element> aperiodicity_counterexample(FiniteMonoid const& m) {
    for (element a = 0; a < m.order(); ++a) {
      element const w = omega_power(m, a);
      if (m.multiply(w, a) != w) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool has_trivial_h(GreensData const& g) {
    std::vector<bool> seen(g.h_class.size(), false);
    for (auto c : g.h_class) {
      if (seen[c]) {
        return false;
      }
      seen[c] = true;
    }
    return true;
  }

  bool is_group_element(FiniteMonoid const& m, element a) {
    return m.multiply(omega_power(m, a), a) == a;
  }

}  // namespace mono
