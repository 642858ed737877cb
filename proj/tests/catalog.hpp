#pragma once

#include <string>
#include <vector>

#include "mono/io.hpp"
#include "mono/monoid.hpp"

namespace mono::test {

  inline std::string fixture_path(std::string const& name) {
    return std::string(MONO_CATALOG_DIR) + "/" + name;
  }

  inline FiniteMonoid load_fixture(std::string const& name) {
    return load_table(read_file(fixture_path(name)));
  }

  /// A catalog monoid with a map from the alphabet {a, b}.
  struct Entry {
    std::string  name;
    FiniteMonoid monoid;
    GeneratorMap gens;
  };

  inline Entry entry(std::string const& file, std::string const& map) {
    auto m = load_fixture(file);
    auto g = parse_generator_map(m, map);
    return {file, std::move(m), std::move(g)};
  }

  /// trivial, Z2, Z3, N3 and flip-flop over {a, b}.
  inline std::vector<Entry> core_catalog() {
    return {entry("trivial.mon", "a=1,b=1"),
            entry("z2.mon", "a=g,b=g"),
            entry("z3.mon", "a=g,b=h"),
            entry("n3.mon", "a=a,b=0"),
            entry("flipflop.mon", "a=s,b=r")};
  }

  /// Every shipped table, all of order at most 6.
  inline std::vector<Entry> full_catalog() {
    auto out = core_catalog();
    out.push_back(entry("t2.mon", "a=t,b=c1"));
    out.push_back(entry("b21.mon", "a=a,b=b"));
    return out;
  }

  /// All words over {a, b} of length at most max_len, shortlex order.
  inline std::vector<Word> words_up_to(std::size_t max_len,
                                       std::string const& alphabet = "ab") {
    std::vector<Word> out{Word{}};
    std::size_t       start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const end = out.size();
      for (std::size_t k = start; k < end; ++k) {
        for (char c : alphabet) {
          out.push_back(out[k] + c);
        }
      }
      start = end;
    }
    return out;
  }

}  // namespace mono::test
