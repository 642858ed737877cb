#include "mono/omega.hpp"

#include <cctype>
#include <limits>

#include "mono/error.hpp"

namespace mono {

  OmegaTerm OmegaTerm::letter(char symbol) {
    OmegaTerm t;
    t.kind_   = Kind::letter;
    t.symbol_ = symbol;
    return t;
  }

  OmegaTerm OmegaTerm::concat(std::vector<OmegaTerm> terms) {
    if (terms.empty()) {
      throw InvalidArgument("empty concatenation");
    }
    if (terms.size() == 1) {
      return std::move(terms.front());
    }
    OmegaTerm t;
    t.kind_     = Kind::concat;
    t.children_ = std::move(terms);
    return t;
  }

  OmegaTerm OmegaTerm::power(OmegaTerm base, std::uint64_t exponent) {
    if (exponent == 0) {
      throw InvalidArgument("exponents must be positive");
    }
    OmegaTerm t;
    t.kind_     = Kind::power;
    t.exponent_ = exponent;
    t.children_.push_back(std::move(base));
    return t;
  }

  OmegaTerm OmegaTerm::omega_power(OmegaTerm base) {
    OmegaTerm t;
    t.kind_ = Kind::omega_power;
    t.children_.push_back(std::move(base));
    return t;
  }

  std::string OmegaTerm::letters() const {
    std::string out;
    auto        walk = [&](auto&& self, OmegaTerm const& t) -> void {
      if (t.kind_ == Kind::letter) {
        if (out.find(t.symbol_) == std::string::npos) {
          out.push_back(t.symbol_);
        }
        return;
      }
      for (auto const& c : t.children_) {
        self(self, c);
      }
    };
    walk(walk, *this);
    return out;
  }

  namespace {

    class TermParser {
     public:
      explicit TermParser(std::string_view text) : text_(text) {}

      OmegaTerm parse() {
        OmegaTerm t = expr();
        skip_space();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("term position " + std::to_string(pos_) + ": " + what);
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) {
          return false;
        }
        char const c = text_[pos_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c));
      }

      OmegaTerm expr() {
        std::vector<OmegaTerm> factors;
        while (at_atom_start()) {
          factors.push_back(factor());
        }
        if (factors.empty()) {
          fail(pos_ < text_.size() ? "expected a letter or '('"
                                   : "unexpected end of term");
        }
        return OmegaTerm::concat(std::move(factors));
      }

      OmegaTerm factor() {
        OmegaTerm base = atom();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '^') {
          return base;
        }
        ++pos_;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
          ++pos_;
          return OmegaTerm::omega_power(std::move(base));
        }
        std::size_t const start = pos_;
        std::uint64_t     k     = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          auto const d = static_cast<std::uint64_t>(text_[pos_] - '0');
          if (k > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
            fail("exponent too large");
          }
          k = k * 10 + d;
          ++pos_;
        }
        if (pos_ == start) {
          fail("expected an integer or 'w' after '^'");
        }
        if (k == 0) {
          pos_ = start;
          fail("exponent 0 is not allowed");
        }
        return OmegaTerm::power(std::move(base), k);
      }

      OmegaTerm atom() {
        skip_space();
        char const c = text_[pos_];
        if (c == '(') {
          ++pos_;
          OmegaTerm inner = expr();
          skip_space();
          if (pos_ >= text_.size() || text_[pos_] != ')') {
            fail("expected ')'");
          }
          ++pos_;
          return inner;
        }
        ++pos_;
        return OmegaTerm::letter(c);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  OmegaTerm parse_term(std::string_view text) {
    return TermParser(text).parse();
  }

  std::string to_string(OmegaTerm const& t) {
    using Kind = OmegaTerm::Kind;
    switch (t.kind()) {
      case Kind::letter:
        return std::string(1, t.symbol());
      case Kind::concat: {
        std::string out;
        for (auto const& c : t.children()) {
          out += c.kind() == Kind::concat ? "(" + to_string(c) + ")"
                                          : to_string(c);
        }
        return out;
      }
      case Kind::power:
      case Kind::omega_power: {
        auto const& base = t.children().front();
        std::string out  = base.kind() == Kind::letter
                               ? to_string(base)
                               : "(" + to_string(base) + ")";
        return out + "^"
               + (t.kind() == Kind::power ? std::to_string(t.exponent())
                                          : std::string("w"));
      }
    }
    return {};
  }

  element evaluate(OmegaTerm const&    t,
                   FiniteMonoid const& m,
                   GeneratorMap const& g) {
    using Kind = OmegaTerm::Kind;
    switch (t.kind()) {
      case Kind::letter:
        return g.image(t.symbol());
      case Kind::concat: {
        element acc = m.identity();
        for (auto const& c : t.children()) {
          acc = m.multiply(acc, evaluate(c, m, g));
        }
        return acc;
      }
      case Kind::power:
        return power(m, evaluate(t.children().front(), m, g), t.exponent());
      case Kind::omega_power:
        return omega_power(m, evaluate(t.children().front(), m, g));
    }
    return m.identity();
  }

}  // namespace mono
