#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mono {

  /// Elements of a finite monoid are identified by their index in the table.
  using element = std::uint32_t;

  /// A word over single-character letters; the empty string is the empty word.
  using Word = std::string;

  inline constexpr std::size_t default_element_cap = 512;

  /// \brief A finite monoid given by its complete multiplication table.
  ///
  /// Entry (x, y) of the table holds x·y. The constructor validates that every
  /// entry is in range, that the identity law holds, and that the table is
  /// associative (exhaustively, O(n³)). A FiniteMonoid is immutable once built.
  class FiniteMonoid {
   public:
    FiniteMonoid(std::vector<std::string> names,
                 element                  identity,
                 std::vector<element>     table);

    /// Tag for tables that are associative by construction (quotients of a
    /// free monoid); everything but the O(n³) associativity scan is checked.
    struct associative_by_construction_t {};
    static constexpr associative_by_construction_t associative_by_construction{};

    FiniteMonoid(std::vector<std::string> names,
                 element                  identity,
                 std::vector<element>     table,
                 associative_by_construction_t);

    /// The least triple (x, y, z) with (xy)z ≠ x(yz), if any.
    std::optional<std::array<element, 3>> associativity_failure() const;

    std::size_t order() const noexcept {
      return names_.size();
    }

    element identity() const noexcept {
      return identity_;
    }

    element multiply(element x, element y) const {
      return table_[static_cast<std::size_t>(x) * names_.size() + y];
    }

    std::span<element const> row(element x) const {
      return {table_.data() + static_cast<std::size_t>(x) * order(), order()};
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::string const& name(element x) const {
      return names_.at(x);
    }

    std::optional<element> find(std::string_view name) const;

    /// Like find but throws InvalidArgument for unknown names.
    element element_named(std::string_view name) const;

    std::vector<element> const& table() const noexcept {
      return table_;
    }

    void validate_index(element x) const;

    friend bool operator==(FiniteMonoid const&, FiniteMonoid const&) = default;

   private:
    void check_shape() const;

    std::vector<std::string> names_;
    element                  identity_;
    std::vector<element>     table_;
  };

  /// \brief The morphism A* → M determined by the images of the letters.
  class GeneratorMap {
   public:
    GeneratorMap() = default;

    /// Letters must be distinct and every image a valid element of m.
    GeneratorMap(FiniteMonoid const&                     m,
                 std::vector<std::pair<char, element>> const& images);

    std::string const& alphabet() const noexcept {
      return alphabet_;
    }

    std::size_t size() const noexcept {
      return alphabet_.size();
    }

    bool contains(char letter) const noexcept;

    /// Index of letter in the alphabet; throws InvalidArgument if unknown.
    std::size_t letter_index(char letter) const;

    element image(char letter) const {
      return images_[letter_index(letter)];
    }

    std::vector<element> const& images() const noexcept {
      return images_;
    }

    /// Throws InvalidArgument naming the first letter not in the alphabet.
    void check_word(std::string_view w) const;

    friend bool operator==(GeneratorMap const&, GeneratorMap const&) = default;

   private:
    std::string          alphabet_;
    std::vector<element> images_;
  };

  inline element multiply(FiniteMonoid const& m, element x, element y) {
    m.validate_index(x);
    m.validate_index(y);
    return m.multiply(x, y);
  }

  /// x^k with x^0 the identity.
  element power(FiniteMonoid const& m, element x, std::uint64_t k);

  /// The unique idempotent among x, x², x³, ...
  element omega_power(FiniteMonoid const& m, element x);

  /// Index k ≥ 1 and period p ≥ 1 with x^k = x^{k+p}, both minimal.
  std::pair<std::size_t, std::size_t> index_and_period(FiniteMonoid const& m,
                                                       element x);

  inline bool is_idempotent(FiniteMonoid const& m, element e) {
    return m.multiply(e, e) == e;
  }

  std::vector<element> idempotents(FiniteMonoid const& m);

  /// Product of a sequence of elements; the identity for an empty sequence.
  element product(FiniteMonoid const& m, std::span<element const> xs);

  /// [w]_M, the image of a word under the generator map.
  element evaluate(FiniteMonoid const& m,
                   GeneratorMap const& g,
                   std::string_view    w);

  /// Sorted elements of the submonoid generated by the images of g.
  std::vector<element> generated_submonoid(FiniteMonoid const& m,
                                           GeneratorMap const& g);

  inline bool is_generating(FiniteMonoid const& m, GeneratorMap const& g) {
    return generated_submonoid(m, g).size() == m.order();
  }

  /// A full transformation of {0, ..., degree-1}, stored as its image list.
  using Transformation = std::vector<std::uint32_t>;

  struct TransformationGenerator {
    char           letter;
    Transformation images;
  };

  /// Result of closing a set of transformations under composition.
  struct GeneratedMonoid {
    FiniteMonoid                monoid;
    GeneratorMap                generators;
    std::vector<Word>           words;  // shortlex-least word per element
    std::vector<Transformation> transformations;
  };

  /// \brief The transformation monoid generated by gens, identity adjoined.
  ///
  /// Transformations act on the right: the word ab first applies a, then b.
  /// Elements are numbered in shortlex order of their least representative
  /// word and named by it, with the identity named "1". Throws CapExceeded
  /// if more than cap elements are found.
  GeneratedMonoid generate_from_transformations(
      std::size_t                                 degree,
      std::vector<TransformationGenerator> const& gens,
      std::size_t                                 cap = default_element_cap);

}  // namespace mono
