#include "mono/shadow.hpp"

#include <algorithm>

#include "mono/error.hpp"
#include "mono/greens.hpp"

namespace mono {

  CorollaryReport corollary_shadow(FiniteMonoid const& m) {
    CorollaryReport   report;
    std::size_t const order = m.order();
    for (element a = 0; a < order; ++a) {
      for (std::size_t n = 1; n <= order + 1; ++n) {
        element const an = power(m, a, n);
        for (std::size_t lambda = 1; lambda <= order; ++lambda) {
          if (power(m, a, n + lambda) != an) {
            continue;
          }
          ++report.instances;
          if (!is_group_element(m, an)) {
            report.counterexamples.push_back({a, n, lambda});
          }
        }
      }
    }
    return report;
  }

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::violated:
        return "violated";
      case Verdict::vacuous:
        return "vacuous";
    }
    return "?";
  }

  TheoremShadow theorem_shadow(
      FiniteMonoid const&                        m,
      GeneratorMap const&                        g,
      std::vector<OmegaTerm> const&              alphas,
      std::vector<std::vector<OmegaTerm>> const& ideal_gens) {
    if (alphas.empty()) {
      throw InvalidArgument("need at least one alpha");
    }
    if (alphas.size() > ideal_gens.size()) {
      throw InvalidArgument("need m <= n, got m = "
                            + std::to_string(alphas.size()) + ", n = "
                            + std::to_string(ideal_gens.size()));
    }
    TheoremShadow r;
    for (auto const& t : alphas) {
      r.alphas.push_back(evaluate(t, m, g));
    }
    r.alpha_product = product(m, r.alphas);
    for (auto const& gens : ideal_gens) {
      if (gens.empty()) {
        throw InvalidArgument("every ideal needs at least one generator");
      }
      std::vector<element> values;
      for (auto const& t : gens) {
        values.push_back(evaluate(t, m, g));
      }
      r.ideals.push_back(ideal_generated(m, values));
    }
    r.ideal_product = ideal_product(m, r.ideals).elements();
    for (auto a : r.alphas) {
      std::vector<bool> row;
      for (auto const& ideal : r.ideals) {
        row.push_back(ideal.contains(a));
      }
      r.membership.push_back(std::move(row));
    }
    if (!std::binary_search(
            r.ideal_product.begin(), r.ideal_product.end(), r.alpha_product)) {
      r.verdict = Verdict::vacuous;
      return r;
    }
    for (std::size_t j = 0; j < r.ideals.size() && !r.witness; ++j) {
      for (std::size_t i = 0; i < r.alphas.size(); ++i) {
        if (r.membership[i][j]) {
          r.witness = std::pair{i + 1, j + 1};
          break;
        }
      }
    }
    r.verdict = r.witness ? Verdict::holds : Verdict::violated;
    return r;
  }

  ReplayResult proof_replay(FiniteMonoid const&      m,
                            GeneratorMap const&      g,
                            std::size_t              n,
                            std::vector<Word> const& us,
                            std::vector<Word> const& ws) {
    if (ws.size() != n) {
      throw InvalidArgument("expected " + std::to_string(n) + " w-words, got "
                            + std::to_string(ws.size()));
    }
    if (us.empty() || us.size() > n) {
      throw InvalidArgument("need 1 <= m <= n, got m = "
                            + std::to_string(us.size()) + ", n = "
                            + std::to_string(n));
    }
    Word const u = concatenate(us);
    Word const w = concatenate(ws);
    if (cut(m, g, u, n) != cut(m, g, w, n)) {
      throw HypothesisFailure("cut profiles of u_1...u_m and w_1...w_n differ "
                              "at arity "
                              + std::to_string(n));
    }
    ReplayResult r;
    for (auto const& wj : ws) {
      r.targets.push_back(evaluate(m, g, wj));
    }
    auto f = match_factorization(m, g, u, r.targets);
    if (!f) {
      // Equal profiles contain the targets; unreachable unless cut is wrong.
      throw HypothesisFailure("no factorization of u matches the targets");
    }
    r.factorization = std::move(*f);
    r.witness       = lemma_factor(us, r.factorization.parts);
    r.u_image       = evaluate(m, g, us[r.witness.i - 1]);
    r.w_image       = r.targets[r.witness.j - 1];
    r.membership    = ideal_generated(m, {r.w_image}).contains(r.u_image);
    return r;
  }

}  // namespace mono
