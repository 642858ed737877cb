#include "mono/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mono/error.hpp"

namespace mono {

  FiniteMonoid::FiniteMonoid(std::vector<std::string> names,
                             element                  identity,
                             std::vector<element>     table,
                             associative_by_construction_t)
      : names_(std::move(names)), identity_(identity), table_(std::move(table)) {
    check_shape();
  }

  FiniteMonoid::FiniteMonoid(std::vector<std::string> names,
                             element                  identity,
                             std::vector<element>     table)
      : FiniteMonoid(std::move(names),
                     identity,
                     std::move(table),
                     associative_by_construction) {
    if (auto t = associativity_failure()) {
      auto const& [x, y, z] = *t;
      throw InvalidMonoid("not associative: (" + names_[x] + "*" + names_[y]
                          + ")*" + names_[z] + " != " + names_[x] + "*("
                          + names_[y] + "*" + names_[z] + ")");
    }
  }

  void FiniteMonoid::check_shape() const {
    std::size_t const n = names_.size();
    if (n == 0) {
      throw InvalidMonoid("a monoid has at least one element");
    }
    if (table_.size() != n * n) {
      throw InvalidMonoid("table has " + std::to_string(table_.size())
                          + " entries, expected " + std::to_string(n * n));
    }
    std::set<std::string> seen;
    for (auto const& nm : names_) {
      if (nm.empty()) {
        throw InvalidMonoid("empty element name");
      }
      if (!seen.insert(nm).second) {
        throw InvalidMonoid("duplicate element name '" + nm + "'");
      }
    }
    for (auto v : table_) {
      if (v >= n) {
        throw InvalidMonoid("table entry " + std::to_string(v)
                            + " out of range");
      }
    }
    if (identity_ >= n) {
      throw InvalidMonoid("identity index out of range");
    }
    for (element x = 0; x < n; ++x) {
      if (multiply(identity_, x) != x || multiply(x, identity_) != x) {
        throw InvalidMonoid("'" + names_[identity_]
                            + "' is not an identity: fails at '" + names_[x]
                            + "'");
      }
    }
  }

  std::optional<std::array<element, 3>>
  FiniteMonoid::associativity_failure() const {
    element const n = static_cast<element>(order());
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        element const xy = multiply(x, y);
        for (element z = 0; z < n; ++z) {
          if (multiply(xy, z) != multiply(x, multiply(y, z))) {
            return std::array<element, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<element> FiniteMonoid::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<element>(it - names_.begin());
  }

  element FiniteMonoid::element_named(std::string_view name) const {
    if (auto x = find(name)) {
      return *x;
    }
    throw InvalidArgument("unknown element '" + std::string(name) + "'");
  }

  void FiniteMonoid::validate_index(element x) const {
    if (x >= order()) {
      throw InvalidArgument("element index " + std::to_string(x)
                            + " out of range for a monoid of order "
                            + std::to_string(order()));
    }
  }

  GeneratorMap::GeneratorMap(FiniteMonoid const&                          m,
                             std::vector<std::pair<char, element>> const& images) {
    for (auto const& [letter, x] : images) {
      if (contains(letter)) {
        throw InvalidArgument(std::string("letter '") + letter
                              + "' mapped twice");
      }
      m.validate_index(x);
      alphabet_.push_back(letter);
      images_.push_back(x);
    }
  }

  bool GeneratorMap::contains(char letter) const noexcept {
    return alphabet_.find(letter) != std::string::npos;
  }

  std::size_t GeneratorMap::letter_index(char letter) const {
    auto pos = alphabet_.find(letter);
    if (pos == std::string::npos) {
      throw InvalidArgument(std::string("unknown letter '") + letter + "'");
    }
    return pos;
  }

  void GeneratorMap::check_word(std::string_view w) const {
    for (char c : w) {
      letter_index(c);
    }
  }

  element power(FiniteMonoid const& m, element x, std::uint64_t k) {
    m.validate_index(x);
    element result = m.identity();
    element base   = x;
    while (k > 0) {
      if (k & 1U) {
        result = m.multiply(result, base);
      }
      base = m.multiply(base, base);
      k >>= 1U;
    }
    return result;
  }

  std::pair<std::size_t, std::size_t> index_and_period(FiniteMonoid const& m,
                                                       element             x) {
    m.validate_index(x);
    std::vector<std::size_t> first_seen(m.order(), 0);
    element                  p = x;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[p] != 0) {
        return {first_seen[p], k - first_seen[p]};
      }
      first_seen[p] = k;
      p             = m.multiply(p, x);
    }
  }

  element omega_power(FiniteMonoid const& m, element x) {
    m.validate_index(x);
    element p = x;
    while (!is_idempotent(m, p)) {
      p = m.multiply(p, x);
    }
    return p;
  }

  std::vector<element> idempotents(FiniteMonoid const& m) {
    std::vector<element> out;
    for (element e = 0; e < m.order(); ++e) {
      if (is_idempotent(m, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  element product(FiniteMonoid const& m, std::span<element const> xs) {
    element acc = m.identity();
    for (auto x : xs) {
      m.validate_index(x);
      acc = m.multiply(acc, x);
    }
    return acc;
  }

  element evaluate(FiniteMonoid const& m,
                   GeneratorMap const& g,
                   std::string_view    w) {
    element acc = m.identity();
    for (char c : w) {
      acc = m.multiply(acc, g.image(c));
    }
    return acc;
  }

  std::vector<element> generated_submonoid(FiniteMonoid const& m,
                                           GeneratorMap const& g) {
    std::vector<bool>    seen(m.order(), false);
    std::vector<element> queue{m.identity()};
    seen[m.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto a : g.images()) {
        element y = m.multiply(queue[i], a);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  GeneratedMonoid generate_from_transformations(
      std::size_t                                 degree,
      std::vector<TransformationGenerator> const& gens,
      std::size_t                                 cap) {
    if (degree == 0) {
      throw InvalidArgument("degree must be positive");
    }
    std::string letters;
    for (auto const& g : gens) {
      if (g.images.size() != degree) {
        throw InvalidArgument(std::string("generator '") + g.letter
                              + "' has " + std::to_string(g.images.size())
                              + " images, expected " + std::to_string(degree));
      }
      for (auto v : g.images) {
        if (v >= degree) {
          throw InvalidArgument(std::string("generator '") + g.letter
                                + "' maps outside {1.." + std::to_string(degree)
                                + "}");
        }
      }
      if (letters.find(g.letter) != std::string::npos) {
        throw InvalidArgument(std::string("duplicate generator '") + g.letter
                              + "'");
      }
      letters.push_back(g.letter);
    }

    auto compose = [](Transformation const& x, Transformation const& y) {
      Transformation r(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) {
        r[p] = y[x[p]];
      }
      return r;
    };

    Transformation identity(degree);
    for (std::size_t p = 0; p < degree; ++p) {
      identity[p] = static_cast<std::uint32_t>(p);
    }

    // Breadth-first over the right Cayley graph; parents are visited in
    // shortlex order, so the first word reaching an element is shortlex-least.
    std::vector<Transformation>             elems{identity};
    std::vector<Word>                       words{Word{}};
    std::map<Transformation, element>       index{{identity, 0}};
    std::vector<std::vector<element>>       right;  // right[x][g]
    for (std::size_t i = 0; i < elems.size(); ++i) {
      right.emplace_back(gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Transformation y  = compose(elems[i], gens[k].images);
        auto [it, fresh] = index.emplace(y, static_cast<element>(elems.size()));
        if (fresh) {
          if (elems.size() >= cap) {
            throw CapExceeded("transformation monoid exceeds cap of "
                                  + std::to_string(cap) + " elements",
                              elems.size());
          }
          elems.push_back(std::move(y));
          words.push_back(words[i] + gens[k].letter);
        }
        right[i][k] = it->second;
      }
    }

    std::size_t const    n = elems.size();
    std::vector<element> table(n * n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        element acc = x;
        for (char c : words[y]) {
          acc = right[acc][letters.find(c)];
        }
        table[static_cast<std::size_t>(x) * n + y] = acc;
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (auto const& w : words) {
      names.push_back(w.empty() ? std::string("1") : w);
    }
    FiniteMonoid                          m(std::move(names), 0, std::move(table));
    std::vector<std::pair<char, element>> images;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      images.emplace_back(gens[k].letter, right[0][k]);
    }
    GeneratorMap g(m, images);
    return GeneratedMonoid{std::move(m), std::move(g), std::move(words),
                           std::move(elems)};
  }

}  // namespace mono
