#include "mono/expansion.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

#include "mono/error.hpp"
#include "mono/greens.hpp"

namespace mono {

  CutProfile letter_profile(FiniteMonoid const& m,
                            GeneratorMap const& g,
                            char                letter,
                            std::size_t         n) {
    element const        a = g.image(letter);
    std::vector<element> flat;
    flat.reserve(n * n);
    for (std::size_t slot = 0; slot < n; ++slot) {
      for (std::size_t k = 0; k < n; ++k) {
        flat.push_back(k == slot ? a : m.identity());
      }
    }
    return CutProfile(n, std::move(flat));
  }

  CutProfile profile_product(FiniteMonoid const& m,
                             CutProfile const&   s,
                             CutProfile const&   t) {
    std::size_t const n = s.arity();
    if (t.arity() != n) {
      throw InvalidArgument("profile arity mismatch: "
                            + std::to_string(s.arity()) + " vs "
                            + std::to_string(t.arity()));
    }
    element const one = m.identity();
    // trailing_ones(p) = number of final coordinates equal to 1, so that
    // (p_1..p_k, 1..1) ∈ P for every k ≥ n - trailing_ones(p).
    auto trailing_ones = [&](std::span<element const> p) {
      std::size_t c = 0;
      while (c < n && p[n - 1 - c] == one) {
        ++c;
      }
      return c;
    };
    std::vector<std::size_t> s_trail, t_trail;
    for (std::size_t k = 0; k < s.size(); ++k) {
      s_trail.push_back(trailing_ones(s.tuple(k)));
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
      t_trail.push_back(trailing_ones(t.tuple(k)));
    }

    std::vector<element> flat;
    // Cut index i (1-based): the part straddling the boundary is part i.
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t const t_len = n - i + 1;
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (s_trail[a] < n - i) {
          continue;
        }
        auto const sa = s.tuple(a);
        for (std::size_t b = 0; b < t.size(); ++b) {
          if (t_trail[b] < n - t_len) {
            continue;
          }
          auto const tb = t.tuple(b);
          flat.insert(flat.end(), sa.begin(), sa.begin() + static_cast<std::ptrdiff_t>(i - 1));
          flat.push_back(m.multiply(sa[i - 1], tb[0]));
          flat.insert(flat.end(), tb.begin() + 1, tb.begin() + static_cast<std::ptrdiff_t>(t_len));
        }
      }
    }
    return CutProfile(n, std::move(flat));
  }

  CutProfile cut_by_products(FiniteMonoid const& m,
                             GeneratorMap const& g,
                             std::string_view    w,
                             std::size_t         n) {
    g.check_word(w);
    CutProfile p = CutProfile::identity(m, n);
    for (char c : w) {
      p = profile_product(m, p, letter_profile(m, g, c, n));
    }
    return p;
  }

  CutProfile truncate_profile(FiniteMonoid const& m, CutProfile const& p) {
    std::size_t const n = p.arity();
    if (n < 2) {
      throw InvalidArgument("cannot truncate a profile of arity 1");
    }
    std::vector<element> flat;
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto const t = p.tuple(k);
      if (t[n - 1] == m.identity()) {
        flat.insert(flat.end(), t.begin(), t.end() - 1);
      }
    }
    return CutProfile(n - 1, std::move(flat));
  }

  std::optional<element> ExpandedMonoid::find(CutProfile const& p) const {
    auto it = std::find(profiles.begin(), profiles.end(), p);
    if (it == profiles.end()) {
      return std::nullopt;
    }
    return static_cast<element>(it - profiles.begin());
  }

  std::vector<std::size_t> ExpandedMonoid::fiber_sizes() const {
    std::vector<std::size_t> out(base.order(), 0);
    for (auto x : eta) {
      ++out[x];
    }
    return out;
  }

  namespace {

    // Shortlex comparison of words by alphabet position.
    struct AlphabetOrder {
      std::string const& alphabet;

      bool operator()(Word const& x, Word const& y) const {
        if (x.size() != y.size()) {
          return x.size() < y.size();
        }
        for (std::size_t k = 0; k < x.size(); ++k) {
          auto const a = alphabet.find(x[k]);
          auto const b = alphabet.find(y[k]);
          if (a != b) {
            return a < b;
          }
        }
        return false;
      }
    };

  }  // namespace

  ExpandedMonoid build_expansion(FiniteMonoid const&     m,
                                 GeneratorMap const&     g,
                                 std::size_t             n,
                                 ExpansionOptions const& options) {
    if (n == 0) {
      throw InvalidArgument("expansion arity must be at least 1");
    }
    std::string const&      alphabet = g.alphabet();
    std::size_t const       k        = alphabet.size();
    AlphabetOrder const     shortlex{alphabet};
    std::vector<CutProfile> letters;
    for (char c : alphabet) {
      letters.push_back(letter_profile(m, g, c, n));
    }

    std::vector<CutProfile>                              profiles{CutProfile::identity(m, n)};
    std::vector<Word>                                    reps{Word{}};
    std::unordered_map<CutProfile, element, CutProfileHash> index{{profiles[0], 0}};
    std::vector<std::vector<element>>                    right;
    std::vector<element>                                 frontier{0};

    std::size_t const jobs = std::max<std::size_t>(1, options.jobs);

    while (!frontier.empty()) {
      // Products of this generation; each chunk writes its own slots.
      std::vector<CutProfile> products(frontier.size() * k);
      auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t f = lo; f < hi; ++f) {
          for (std::size_t a = 0; a < k; ++a) {
            products[f * k + a]
                = profile_product(m, profiles[frontier[f]], letters[a]);
          }
        }
      };
      if (jobs == 1 || frontier.size() < 2 * jobs) {
        work(0, frontier.size());
      } else {
        std::vector<std::future<void>> tasks;
        std::size_t const chunk = (frontier.size() + jobs - 1) / jobs;
        for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
          tasks.push_back(std::async(std::launch::async,
                                     work,
                                     lo,
                                     std::min(frontier.size(), lo + chunk)));
        }
        for (auto& t : tasks) {
          t.get();
        }
      }

      // New profiles with the least word reaching them.
      std::unordered_map<CutProfile, Word, CutProfileHash> fresh;
      for (std::size_t f = 0; f < frontier.size(); ++f) {
        for (std::size_t a = 0; a < k; ++a) {
          auto const& p = products[f * k + a];
          if (index.contains(p)) {
            continue;
          }
          Word w = reps[frontier[f]] + alphabet[a];
          auto [it, inserted] = fresh.emplace(p, w);
          if (!inserted && shortlex(w, it->second)) {
            it->second = std::move(w);
          }
        }
      }
      std::vector<CutProfile const*> order;
      for (auto const& [p, w] : fresh) {
        order.push_back(&p);
      }
      std::sort(order.begin(), order.end(), [](auto x, auto y) { return *x < *y; });

      if (profiles.size() + order.size() > options.cap) {
        throw CapExceeded("expansion exceeds cap of "
                              + std::to_string(options.cap)
                              + " profiles (reached "
                              + std::to_string(profiles.size() + order.size())
                              + ")",
                          profiles.size() + order.size());
      }

      std::vector<element> next;
      for (auto const* p : order) {
        auto const id = static_cast<element>(profiles.size());
        index.emplace(*p, id);
        profiles.push_back(*p);
        reps.push_back(fresh.at(*p));
        next.push_back(id);
      }
      right.resize(profiles.size());
      for (std::size_t f = 0; f < frontier.size(); ++f) {
        right[frontier[f]].resize(k);
        for (std::size_t a = 0; a < k; ++a) {
          right[frontier[f]][a] = index.at(products[f * k + a]);
        }
      }
      frontier = std::move(next);
    }

    std::size_t const    order = profiles.size();
    std::vector<element> table(order * order);
    for (element x = 0; x < order; ++x) {
      for (element y = 0; y < order; ++y) {
        element acc = x;
        for (char c : reps[y]) {
          acc = right[acc][alphabet.find(c)];
        }
        table[static_cast<std::size_t>(x) * order + y] = acc;
      }
    }
    std::vector<std::string> names;
    for (std::size_t x = 0; x < order; ++x) {
      names.push_back("P" + std::to_string(x));
    }

    std::vector<element> eta;
    for (auto const& p : profiles) {
      auto const t   = p.tuple(0);
      element    img = product(m, t);
      for (std::size_t r = 1; r < p.size(); ++r) {
        if (product(m, p.tuple(r)) != img) {
          throw InvalidMonoid("profile tuples disagree on their product");
        }
      }
      eta.push_back(img);
    }

    FiniteMonoid expanded(std::move(names),
                          0,
                          std::move(table),
                          FiniteMonoid::associative_by_construction);
    std::vector<std::pair<char, element>> images;
    for (std::size_t a = 0; a < k; ++a) {
      images.emplace_back(alphabet[a], right[0][a]);
    }
    GeneratorMap expanded_gens(expanded, images);

    return ExpandedMonoid{m,
                          g,
                          n,
                          std::move(profiles),
                          std::move(expanded),
                          std::move(expanded_gens),
                          std::move(eta),
                          std::move(reps)};
  }

  std::optional<EtaCounterexample> eta_aperiodicity_counterexample(
      ExpandedMonoid const& e) {
    FiniteMonoid const& x = e.monoid;
    for (element p = 0; p < x.order(); ++p) {
      element const base = e.eta[p];
      if (!is_idempotent(e.base, base)) {
        continue;
      }
      // p^ω lies in the same fiber since η(p^k) = base^k = base.
      element const w = omega_power(x, p);
      if (x.multiply(w, p) != w) {
        return EtaCounterexample{p, base};
      }
    }
    return std::nullopt;
  }

  RefinementResult check_refinement(ExpandedMonoid const& hi,
                                    ExpandedMonoid const& lo) {
    if (!(hi.base == lo.base) || !(hi.generators == lo.generators)) {
      throw InvalidArgument("expansions have different bases or generators");
    }
    if (hi.arity != lo.arity + 1) {
      throw InvalidArgument("refinement needs arities n+1 and n");
    }
    RefinementResult r;
    std::unordered_map<CutProfile, element, CutProfileHash> lo_index;
    for (std::size_t k = 0; k < lo.order(); ++k) {
      lo_index.emplace(lo.profiles[k], static_cast<element>(k));
    }
    for (std::size_t k = 0; k < hi.order(); ++k) {
      auto it = lo_index.find(truncate_profile(hi.base, hi.profiles[k]));
      if (it == lo_index.end()) {
        r.failure = "truncation of P" + std::to_string(k)
                    + " is not an element of the smaller expansion";
        return r;
      }
      r.map.push_back(it->second);
    }
    std::vector<bool> hit(lo.order(), false);
    for (std::size_t k = 0; k < hi.order(); ++k) {
      hit[r.map[k]] = true;
      if (hi.eta[k] != lo.eta[r.map[k]]) {
        r.failure = "truncation does not commute with eta at P"
                    + std::to_string(k);
        return r;
      }
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      r.failure = "truncation is not surjective";
      return r;
    }
    for (element x = 0; x < hi.order(); ++x) {
      for (element y = 0; y < hi.order(); ++y) {
        if (r.map[hi.monoid.multiply(x, y)]
            != lo.monoid.multiply(r.map[x], r.map[y])) {
          r.failure = "truncation is not a morphism at (P" + std::to_string(x)
                      + ", P" + std::to_string(y) + ")";
          return r;
        }
      }
    }
    r.ok = true;
    return r;
  }

}  // namespace mono
