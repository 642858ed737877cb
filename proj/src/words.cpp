#include "mono/words.hpp"

#include <algorithm>
#include <numeric>

#include "mono/error.hpp"

namespace mono {

  Factorization factorization_at(std::string_view                w,
                                 std::vector<std::size_t> const& cuts) {
    Factorization f;
    f.cuts = cuts;
    std::size_t start = 0;
    for (auto c : cuts) {
      if (c < start || c > w.size()) {
        throw InvalidArgument("invalid cut vector");
      }
      f.parts.emplace_back(w.substr(start, c - start));
      start = c;
    }
    f.parts.emplace_back(w.substr(start));
    return f;
  }

  Word concatenate(std::span<Word const> parts) {
    Word out;
    for (auto const& p : parts) {
      out += p;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorizations
  ////////////////////////////////////////////////////////////////////////

  Factorizations::Factorizations(Word w, std::size_t n)
      : word_(std::move(w)), arity_(n) {
    if (n == 0) {
      throw InvalidArgument("factorization arity must be at least 1");
    }
  }

  std::size_t Factorizations::count() const noexcept {
    // C(|w| + n - 1, n - 1), multiplicatively.
    std::size_t const k      = arity_ - 1;
    std::size_t const top    = word_.size() + k;
    std::size_t       result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      result = result * (top - k + i) / i;
    }
    return result;
  }

  Factorizations::iterator::iterator(Word const* w, std::size_t n)
      : word_(w), done_(false) {
    current_.cuts.assign(n - 1, 0);
    refresh();
  }

  void Factorizations::iterator::refresh() {
    current_.parts.clear();
    std::size_t start = 0;
    for (auto c : current_.cuts) {
      current_.parts.push_back(word_->substr(start, c - start));
      start = c;
    }
    current_.parts.push_back(word_->substr(start));
  }

  Factorizations::iterator& Factorizations::iterator::operator++() {
    auto&             cuts = current_.cuts;
    std::size_t const len  = word_->size();
    std::size_t       k    = cuts.size();
    while (k > 0 && cuts[k - 1] == len) {
      --k;
    }
    if (k == 0) {
      done_ = true;
      return *this;
    }
    std::size_t const v = cuts[k - 1] + 1;
    std::fill(cuts.begin() + static_cast<std::ptrdiff_t>(k - 1), cuts.end(), v);
    refresh();
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // CutProfile
  ////////////////////////////////////////////////////////////////////////

  CutProfile::CutProfile(std::size_t arity, std::vector<element> flat)
      : arity_(arity) {
    if (arity == 0) {
      throw InvalidArgument("profile arity must be at least 1");
    }
    if (flat.size() % arity != 0) {
      throw InvalidArgument("profile data is not a whole number of tuples");
    }
    std::size_t const        count = flat.size() / arity;
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(flat.begin() + a * arity,
                                          flat.begin() + (a + 1) * arity,
                                          flat.begin() + b * arity,
                                          flat.begin() + (b + 1) * arity);
    };
    auto same = [&](std::size_t a, std::size_t b) {
      return std::equal(flat.begin() + a * arity,
                        flat.begin() + (a + 1) * arity,
                        flat.begin() + b * arity);
    };
    std::sort(order.begin(), order.end(), less);
    order.erase(std::unique(order.begin(), order.end(), same), order.end());
    data_.reserve(order.size() * arity);
    for (auto k : order) {
      data_.insert(data_.end(),
                   flat.begin() + k * arity,
                   flat.begin() + (k + 1) * arity);
    }
  }

  CutProfile CutProfile::identity(FiniteMonoid const& m, std::size_t arity) {
    return CutProfile(arity, std::vector<element>(arity, m.identity()));
  }

  bool CutProfile::contains(std::span<element const> t) const {
    if (t.size() != arity_) {
      return false;
    }
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      std::size_t const mid = (lo + hi) / 2;
      auto const        x   = tuple(mid);
      if (std::lexicographical_compare(x.begin(), x.end(), t.begin(), t.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < size() && std::ranges::equal(tuple(lo), t);
  }

  std::size_t CutProfileHash::operator()(CutProfile const& p) const noexcept {
    // FNV-1a over the encoding.
    std::size_t h = 1469598103934665603ULL ^ p.arity();
    for (auto x : p.encoding()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  CutProfile cut_brute_force(FiniteMonoid const& m,
                             GeneratorMap const& g,
                             std::string_view    w,
                             std::size_t         n) {
    g.check_word(w);
    std::vector<element> flat;
    for (auto const& f : factorizations(Word(w), n)) {
      for (auto const& part : f.parts) {
        flat.push_back(evaluate(m, g, part));
      }
    }
    return CutProfile(n, std::move(flat));
  }

  CutProfile extend_profile(FiniteMonoid const& m,
                            CutProfile const&   profile,
                            element             letter_image) {
    std::size_t const    n = profile.arity();
    element const        one = m.identity();
    std::vector<element> flat;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      auto const t = profile.tuple(k);
      // The letter may extend part j whenever parts j+1..n are all 1.
      std::size_t j = n;
      while (true) {
        std::vector<element> next(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j));
        next[j - 1] = m.multiply(next[j - 1], letter_image);
        next.resize(n, one);
        flat.insert(flat.end(), next.begin(), next.end());
        if (j == 1 || t[j - 1] != one) {
          break;
        }
        --j;
      }
    }
    return CutProfile(n, std::move(flat));
  }

  CutProfile cut_incremental(FiniteMonoid const& m,
                             GeneratorMap const& g,
                             std::string_view    w,
                             std::size_t         n) {
    g.check_word(w);
    CutProfile p = CutProfile::identity(m, n);
    for (char c : w) {
      p = extend_profile(m, p, g.image(c));
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization lemma
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_lemma_input(std::span<Word const> us, std::span<Word const> vs) {
      if (us.empty()) {
        throw InvalidArgument("the u-sequence must be non-empty");
      }
      if (us.size() > vs.size()) {
        throw InvalidArgument("need m <= n, got m = " + std::to_string(us.size())
                              + ", n = " + std::to_string(vs.size()));
      }
      if (concatenate(us) != concatenate(vs)) {
        throw InvalidArgument("u and v factorizations are of different words");
      }
    }

  }  // namespace

  FactorWitness lemma_factor(std::span<Word const> us,
                             std::span<Word const> vs) {
    check_lemma_input(us, vs);
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vs[j].empty()) {
        return {1, j + 1, 0};
      }
    }
    // Non-empty u-parts with their original 1-based index and start position.
    struct Span {
      std::size_t index, start, end;
    };
    std::vector<Span> u_spans;
    std::size_t       pos = 0;
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (!us[i].empty()) {
        u_spans.push_back({i + 1, pos, pos + us[i].size()});
      }
      pos += us[i].size();
    }
    // f(j): the u-span containing the last letter of v_j.
    std::vector<std::size_t> f;
    std::vector<std::size_t> v_start;
    pos = 0;
    std::size_t owner = 0;
    for (auto const& v : vs) {
      v_start.push_back(pos);
      pos += v.size();
      while (u_spans[owner].end < pos) {
        ++owner;
      }
      f.push_back(owner);
    }
    for (std::size_t j = 1; j < vs.size(); ++j) {
      if (f[j - 1] == f[j]) {
        auto const& u = u_spans[f[j]];
        return {u.index, j + 1, v_start[j] - u.start};
      }
    }
    // f is injective and monotone, so m = n and f is the identity: v_1 is a
    // prefix of u_1.
    return {u_spans.front().index, 1, 0};
  }

  bool witness_holds(std::span<Word const> us,
                     std::span<Word const> vs,
                     FactorWitness const&  witness) {
    if (witness.i < 1 || witness.i > us.size() || witness.j < 1
        || witness.j > vs.size()) {
      return false;
    }
    Word const& u = us[witness.i - 1];
    Word const& v = vs[witness.j - 1];
    if (witness.offset + v.size() > u.size()
        || u.compare(witness.offset, v.size(), v) != 0) {
      return false;
    }
    if (v.empty()) {
      return true;
    }
    std::size_t u_start = 0, v_start = 0;
    for (std::size_t k = 0; k + 1 < witness.i; ++k) {
      u_start += us[k].size();
    }
    for (std::size_t k = 0; k + 1 < witness.j; ++k) {
      v_start += vs[k].size();
    }
    return v_start == u_start + witness.offset;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matching factorizations
  ////////////////////////////////////////////////////////////////////////

  std::optional<Factorization> match_factorization(
      FiniteMonoid const&      m,
      GeneratorMap const&      g,
      std::string_view         w,
      std::span<element const> targets) {
    g.check_word(w);
    std::size_t const n = targets.size();
    if (n == 0) {
      throw InvalidArgument("factorization arity must be at least 1");
    }
    for (auto t : targets) {
      m.validate_index(t);
    }
    std::size_t const len = w.size();
    // dead[k * (len + 1) + pos]: parts k.. cannot match the suffix from pos.
    std::vector<bool>        dead(n * (len + 1), false);
    std::vector<std::size_t> cuts;

    auto solve = [&](auto&& self, std::size_t k, std::size_t pos) -> bool {
      if (dead[k * (len + 1) + pos]) {
        return false;
      }
      if (k + 1 == n) {
        if (evaluate(m, g, w.substr(pos)) == targets[k]) {
          return true;
        }
        dead[k * (len + 1) + pos] = true;
        return false;
      }
      element acc = m.identity();
      for (std::size_t end = pos;; ++end) {
        if (acc == targets[k]) {
          cuts.push_back(end);
          if (self(self, k + 1, end)) {
            return true;
          }
          cuts.pop_back();
        }
        if (end == len) {
          break;
        }
        acc = m.multiply(acc, g.image(w[end]));
      }
      dead[k * (len + 1) + pos] = true;
      return false;
    };

    if (!solve(solve, 0, 0)) {
      return std::nullopt;
    }
    return factorization_at(w, cuts);
  }

}  // namespace mono
