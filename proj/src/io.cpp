#include "mono/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "mono/error.hpp"

namespace mono {

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::vector<std::string> tokenize(std::string_view s) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t const start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (i > start) {
          out.emplace_back(s.substr(start, i - start));
        }
      }
      return out;
    }

    // Non-blank lines with comments removed.
    std::vector<Line> content_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        auto line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
        pos = end + 1;
      }
      return out;
    }

    // Splits "key: rest" where the key may be glued to the colon.
    std::optional<std::vector<std::string>> keyed(Line const& line,
                                                  std::string const& key) {
      auto const& t = line.tokens;
      if (t[0] == key + ":") {
        return std::vector<std::string>(t.begin() + 1, t.end());
      }
      if (t[0].starts_with(key + ":")) {
        std::vector<std::string> rest{t[0].substr(key.size() + 1)};
        rest.insert(rest.end(), t.begin() + 1, t.end());
        return rest;
      }
      return std::nullopt;
    }

    std::size_t parse_count(std::string const& s, std::size_t line) {
      std::size_t v    = 0;
      auto [ptr, ec]   = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("expected a non-negative integer, got '" + s + "'",
                         line);
      }
      return v;
    }

  }  // namespace

  std::vector<std::string> split(std::string_view text, char delimiter) {
    std::vector<std::string> out;
    std::size_t              pos = 0;
    while (true) {
      auto end = text.find(delimiter, pos);
      if (end == std::string_view::npos) {
        out.emplace_back(text.substr(pos));
        return out;
      }
      out.emplace_back(text.substr(pos, end - pos));
      pos = end + 1;
    }
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .mon
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid load_table(std::string_view text) {
    auto const lines = content_lines(text);
    std::optional<std::vector<std::string>> names;
    std::optional<std::string>              identity;
    std::size_t                             k = 0;
    for (; k < lines.size(); ++k) {
      auto const& line = lines[k];
      if (auto rest = keyed(line, "elements")) {
        if (names) {
          throw ParseError("duplicate 'elements:' line", line.number);
        }
        if (rest->empty()) {
          throw ParseError("'elements:' needs at least one name", line.number);
        }
        names = std::move(*rest);
      } else if (auto rest = keyed(line, "identity")) {
        if (identity) {
          throw ParseError("duplicate 'identity:' line", line.number);
        }
        if (rest->size() != 1) {
          throw ParseError("'identity:' takes exactly one name", line.number);
        }
        identity = rest->front();
      } else if (auto rest = keyed(line, "table")) {
        if (!rest->empty()) {
          throw ParseError("rows go on the lines after 'table:'", line.number);
        }
        ++k;
        break;
      } else {
        throw ParseError("expected 'elements:', 'identity:' or 'table:', got '"
                             + line.tokens[0] + "'",
                         line.number);
      }
    }
    if (!names) {
      throw ParseError("missing 'elements:' line");
    }
    if (!identity) {
      throw ParseError("missing 'identity:' line");
    }
    std::size_t const n = names->size();
    std::map<std::string, element> index;
    for (std::size_t x = 0; x < n; ++x) {
      if (!index.emplace((*names)[x], static_cast<element>(x)).second) {
        throw ParseError("duplicate element name '" + (*names)[x] + "'");
      }
    }
    if (k == 0 || k > lines.size()
        || !keyed(lines[k - 1], "table").has_value()) {
      throw ParseError("missing 'table:' line");
    }
    if (lines.size() - k != n) {
      throw ParseError("expected " + std::to_string(n) + " table rows, got "
                       + std::to_string(lines.size() - k));
    }
    std::vector<element> table;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      auto const& line = lines[k + r];
      if (line.tokens.size() != n) {
        throw ParseError("row for '" + (*names)[r] + "' has "
                             + std::to_string(line.tokens.size())
                             + " entries, expected " + std::to_string(n),
                         line.number);
      }
      for (auto const& tok : line.tokens) {
        auto it = index.find(tok);
        if (it == index.end()) {
          throw ParseError("unknown element '" + tok + "'", line.number);
        }
        table.push_back(it->second);
      }
    }
    auto id = index.find(*identity);
    if (id == index.end()) {
      throw InvalidMonoid("identity '" + *identity + "' is not an element");
    }
    return FiniteMonoid(std::move(*names), id->second, std::move(table));
  }

  std::string serialize_monoid(FiniteMonoid const& m) {
    std::string out = "elements:";
    for (auto const& nm : m.names()) {
      out += ' ';
      out += nm;
    }
    out += "\nidentity: " + m.name(m.identity()) + "\ntable:\n";
    for (element x = 0; x < m.order(); ++x) {
      auto const row = m.row(x);
      for (std::size_t y = 0; y < row.size(); ++y) {
        if (y > 0) {
          out += ' ';
        }
        out += m.name(row[y]);
      }
      out += '\n';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // .tgen
  ////////////////////////////////////////////////////////////////////////

  TransformationSpec parse_tgen(std::string_view text) {
    TransformationSpec spec;
    bool               have_degree = false;
    for (auto const& line : content_lines(text)) {
      if (auto rest = keyed(line, "degree")) {
        if (have_degree || rest->size() != 1) {
          throw ParseError("expected a single 'degree: <d>' line", line.number);
        }
        spec.degree = parse_count(rest->front(), line.number);
        if (spec.degree == 0) {
          throw ParseError("degree must be positive", line.number);
        }
        have_degree = true;
        continue;
      }
      if (line.tokens[0] != "gen" || line.tokens.size() < 2) {
        throw ParseError("expected 'degree:' or 'gen <letter>:'", line.number);
      }
      if (!have_degree) {
        throw ParseError("'degree:' must precede generators", line.number);
      }
      // "gen a: 2 1" or "gen a : 2 1"
      std::vector<std::string> toks(line.tokens.begin() + 1, line.tokens.end());
      std::string              name = toks[0];
      std::size_t              first_image = 1;
      if (name.ends_with(':')) {
        name.pop_back();
      } else if (toks.size() > 1 && toks[1] == ":") {
        first_image = 2;
      } else {
        throw ParseError("expected ':' after generator name", line.number);
      }
      if (name.size() != 1 || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        throw ParseError("generator names must be single letters, got '" + name
                             + "'",
                         line.number);
      }
      Transformation images;
      for (std::size_t t = first_image; t < toks.size(); ++t) {
        std::size_t const v = parse_count(toks[t], line.number);
        if (v < 1 || v > spec.degree) {
          throw ParseError("image " + toks[t] + " outside 1.."
                               + std::to_string(spec.degree),
                           line.number);
        }
        images.push_back(static_cast<std::uint32_t>(v - 1));
      }
      if (images.size() != spec.degree) {
        throw ParseError("generator '" + name + "' has "
                             + std::to_string(images.size())
                             + " images, expected "
                             + std::to_string(spec.degree),
                         line.number);
      }
      for (auto const& g : spec.generators) {
        if (g.letter == name[0]) {
          throw ParseError("duplicate generator '" + name + "'", line.number);
        }
      }
      spec.generators.push_back({name[0], std::move(images)});
    }
    if (!have_degree) {
      throw ParseError("missing 'degree:' line");
    }
    return spec;
  }

  ////////////////////////////////////////////////////////////////////////
  // .dfa
  ////////////////////////////////////////////////////////////////////////

  Dfa parse_dfa(std::string_view text) {
    Dfa                                     d;
    std::optional<std::vector<std::string>> states, alphabet, start, accept;
    std::vector<Line>                       deltas;
    for (auto const& line : content_lines(text)) {
      auto set_once = [&](std::optional<std::vector<std::string>>& slot,
                          std::vector<std::string>                 value,
                          char const*                              key) {
        if (slot) {
          throw ParseError(std::string("duplicate '") + key + ":' line",
                           line.number);
        }
        slot = std::move(value);
      };
      if (auto rest = keyed(line, "states")) {
        set_once(states, std::move(*rest), "states");
      } else if (auto rest = keyed(line, "alphabet")) {
        set_once(alphabet, std::move(*rest), "alphabet");
      } else if (auto rest = keyed(line, "start")) {
        set_once(start, std::move(*rest), "start");
      } else if (auto rest = keyed(line, "accept")) {
        set_once(accept, std::move(*rest), "accept");
      } else if (auto rest = keyed(line, "delta")) {
        deltas.push_back({line.number, std::move(*rest)});
      } else {
        throw ParseError("unexpected '" + line.tokens[0] + "'", line.number);
      }
    }
    if (!states || states->empty()) {
      throw ParseError("missing or empty 'states:' line");
    }
    if (!alphabet) {
      throw ParseError("missing 'alphabet:' line");
    }
    if (!start || start->size() != 1) {
      throw ParseError("expected exactly one start state");
    }
    d.states = std::move(*states);
    std::map<std::string, std::size_t> state_index;
    for (std::size_t s = 0; s < d.states.size(); ++s) {
      if (!state_index.emplace(d.states[s], s).second) {
        throw ParseError("duplicate state '" + d.states[s] + "'");
      }
    }
    for (auto const& a : *alphabet) {
      if (a.size() != 1 || !std::isalpha(static_cast<unsigned char>(a[0]))) {
        throw ParseError("letters must be single alphabetic characters, got '"
                         + a + "'");
      }
      if (d.alphabet.find(a[0]) != std::string::npos) {
        throw ParseError("duplicate letter '" + a + "'");
      }
      d.alphabet.push_back(a[0]);
    }
    auto state = [&](std::string const& s, std::size_t line) {
      auto it = state_index.find(s);
      if (it == state_index.end()) {
        throw ParseError("unknown state '" + s + "'", line);
      }
      return it->second;
    };
    d.start = state(start->front(), 0);
    if (accept) {
      for (auto const& s : *accept) {
        d.accepting.push_back(state(s, 0));
      }
      std::sort(d.accepting.begin(), d.accepting.end());
      d.accepting.erase(std::unique(d.accepting.begin(), d.accepting.end()),
                        d.accepting.end());
    }
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    d.delta.assign(d.states.size(),
                   std::vector<std::size_t>(d.alphabet.size(), unset));
    for (auto const& line : deltas) {
      if (line.tokens.size() != 3) {
        throw ParseError("expected 'delta: <state> <letter> <state>'",
                         line.number);
      }
      std::size_t const from = state(line.tokens[0], line.number);
      auto const&       a    = line.tokens[1];
      auto const        pos  = a.size() == 1 ? d.alphabet.find(a[0])
                                             : std::string::npos;
      if (pos == std::string::npos) {
        throw ParseError("unknown letter '" + a + "'", line.number);
      }
      if (d.delta[from][pos] != unset) {
        throw ParseError("duplicate transition for (" + line.tokens[0] + ", "
                             + a + ")",
                         line.number);
      }
      d.delta[from][pos] = state(line.tokens[2], line.number);
    }
    for (std::size_t s = 0; s < d.states.size(); ++s) {
      for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        if (d.delta[s][a] == unset) {
          throw ParseError("transition function is not total: missing ("
                           + d.states[s] + ", " + d.alphabet[a] + ")");
        }
      }
    }
    return d;
  }

  GeneratedMonoid dfa_to_transition_monoid(Dfa const& d, std::size_t cap) {
    std::vector<TransformationGenerator> gens;
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      Transformation t;
      for (std::size_t s = 0; s < d.states.size(); ++s) {
        t.push_back(static_cast<std::uint32_t>(d.delta[s][a]));
      }
      gens.push_back({d.alphabet[a], std::move(t)});
    }
    return generate_from_transformations(d.states.size(), gens, cap);
  }

  GeneratorMap parse_generator_map(FiniteMonoid const& m, std::string_view spec) {
    std::vector<std::pair<char, element>> images;
    auto const trim = [](std::string_view s) {
      auto const first = s.find_first_not_of(" \t");
      if (first == std::string_view::npos) {
        return std::string();
      }
      return std::string(s.substr(first, s.find_last_not_of(" \t") - first + 1));
    };
    for (auto const& raw : split(spec, ',')) {
      auto const eq = raw.find('=');
      std::string const key =
          trim(std::string_view(raw).substr(0, std::min(eq, raw.size())));
      std::string const value =
          eq == std::string::npos ? "" : trim(std::string_view(raw).substr(eq + 1));
      if (key.size() != 1 || value.empty()) {
        throw ParseError("expected '<letter>=<element>', got '" + raw + "'");
      }
      if (auto x = m.find(value)) {
        images.emplace_back(key[0], *x);
      } else {
        throw ParseError("unknown element '" + value + "'");
      }
    }
    try {
      return GeneratorMap(m, images);
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

  std::string serialize_expansion_mapping(ExpandedMonoid const& e) {
    std::string out = "# arity " + std::to_string(e.arity) + "\n";
    for (std::size_t x = 0; x < e.order(); ++x) {
      out += e.monoid.name(static_cast<element>(x));
      out += " eta=" + e.base.name(e.eta[x]);
      out += " word=" + e.representatives[x];
      out += " tuples=";
      auto const& p = e.profiles[x];
      for (std::size_t k = 0; k < p.size(); ++k) {
        out += k == 0 ? "(" : " (";
        auto const t = p.tuple(k);
        for (std::size_t c = 0; c < t.size(); ++c) {
          if (c > 0) {
            out += ',';
          }
          out += e.base.name(t[c]);
        }
        out += ')';
      }
      out += '\n';
    }
    return out;
  }

}  // namespace mono
