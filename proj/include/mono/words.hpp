#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mono/monoid.hpp"

namespace mono {

  /// \brief A factorization w = w_1⋯w_n of a word into n possibly empty parts.
  ///
  /// cuts holds the n-1 non-decreasing boundaries; part k spans
  /// [cuts[k-1], cuts[k]) with the implicit outer bounds 0 and |w|.
  struct Factorization {
    std::vector<std::size_t> cuts;
    std::vector<Word>        parts;

    std::size_t arity() const noexcept {
      return parts.size();
    }

    friend bool operator==(Factorization const&, Factorization const&)
        = default;
  };

  /// Builds the factorization of w with the given cut vector; throws
  /// InvalidArgument if the cuts are decreasing or exceed |w|.
  Factorization factorization_at(std::string_view                w,
                                 std::vector<std::size_t> const& cuts);

  Word concatenate(std::span<Word const> parts);

  /// \brief All factorizations of a word into n parts.
  ///
  /// A lazy range yielding the C(|w|+n-1, n-1) factorizations in
  /// lexicographic order of their cut vectors.
  class Factorizations {
   public:
    Factorizations(Word w, std::size_t n);

    class iterator {
     public:
      using value_type      = Factorization;
      using difference_type = std::ptrdiff_t;

      iterator() = default;

      Factorization const& operator*() const noexcept {
        return current_;
      }
      Factorization const* operator->() const noexcept {
        return &current_;
      }
      iterator& operator++();
      void      operator++(int) {
        ++*this;
      }
      bool operator==(std::default_sentinel_t) const noexcept {
        return done_;
      }

     private:
      friend class Factorizations;
      iterator(Word const* w, std::size_t n);
      void refresh();

      Word const*   word_ = nullptr;
      Factorization current_;
      bool          done_ = true;
    };

    iterator begin() const {
      return iterator(&word_, arity_);
    }
    std::default_sentinel_t end() const noexcept {
      return {};
    }

    /// C(|w|+n-1, n-1), computed without enumerating.
    std::size_t count() const noexcept;

   private:
    Word        word_;
    std::size_t arity_;
  };

  /// Throws InvalidArgument when n = 0.
  inline Factorizations factorizations(Word w, std::size_t n) {
    return Factorizations(std::move(w), n);
  }

  /// \brief cut_n(w): the set of n-tuples of images of factorizations of w.
  ///
  /// Tuples are stored flat, sorted lexicographically and deduplicated; two
  /// profiles are equal iff their encodings are equal.
  class CutProfile {
   public:
    CutProfile() = default;

    /// flat holds consecutive n-tuples in any order, duplicates allowed.
    CutProfile(std::size_t arity, std::vector<element> flat);

    /// {(1, …, 1)}.
    static CutProfile identity(FiniteMonoid const& m, std::size_t arity);

    std::size_t arity() const noexcept {
      return arity_;
    }

    std::size_t size() const noexcept {
      return arity_ == 0 ? 0 : data_.size() / arity_;
    }

    std::span<element const> tuple(std::size_t k) const {
      return {data_.data() + k * arity_, arity_};
    }

    std::vector<element> const& encoding() const noexcept {
      return data_;
    }

    bool contains(std::span<element const> t) const;

    friend bool operator==(CutProfile const&, CutProfile const&) = default;
    friend auto operator<=>(CutProfile const&, CutProfile const&) = default;

   private:
    std::size_t          arity_ = 0;
    std::vector<element> data_;
  };

  struct CutProfileHash {
    std::size_t operator()(CutProfile const& p) const noexcept;
  };

  /// cut_n(w) by enumerating every factorization.
  CutProfile cut_brute_force(FiniteMonoid const& m,
                             GeneratorMap const& g,
                             std::string_view    w,
                             std::size_t         n);

  /// cut_n(w) letter by letter: the appended letter ends its part and every
  /// later part is empty.
  CutProfile cut_incremental(FiniteMonoid const& m,
                             GeneratorMap const& g,
                             std::string_view    w,
                             std::size_t         n);

  /// cut_n(wa) from cut_n(w) and the image of a.
  CutProfile extend_profile(FiniteMonoid const& m,
                            CutProfile const&   profile,
                            element             letter_image);

  inline CutProfile cut(FiniteMonoid const& m,
                        GeneratorMap const& g,
                        std::string_view    w,
                        std::size_t         n) {
    return cut_incremental(m, g, w, n);
  }

  /// \brief Locates some v_j inside some u_i.
  ///
  /// i and j are 1-based; offset is the start of v_j within u_i. When v_j is
  /// non-empty the occurrence is position-aligned: in the common word the
  /// span of v_j lies inside the span of u_i.
  struct FactorWitness {
    std::size_t i      = 0;
    std::size_t j      = 0;
    std::size_t offset = 0;

    friend bool operator==(FactorWitness const&, FactorWitness const&)
        = default;
  };

  /// \brief Constructive factorization lemma.
  ///
  /// Given u_1⋯u_m = v_1⋯v_n with m ≤ n, finds i, j with v_j a factor of u_i
  /// via the monotone map sending j to the u-part holding the last letter of
  /// v_j. Throws InvalidArgument when m > n, m = 0, or the concatenations
  /// differ.
  FactorWitness lemma_factor(std::span<Word const> us, std::span<Word const> vs);

  /// Checks the FactorWitness invariant, including position alignment.
  bool witness_holds(std::span<Word const> us,
                     std::span<Word const> vs,
                     FactorWitness const&  witness);

  /// \brief A factorization of w whose parts evaluate to targets.
  ///
  /// Returns the one with lexicographically least cut vector, or nothing if
  /// targets ∉ cut_n(w) for n = |targets|.
  std::optional<Factorization> match_factorization(
      FiniteMonoid const&      m,
      GeneratorMap const&      g,
      std::string_view         w,
      std::span<element const> targets);

}  // namespace mono
