#include "mono/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include "mono/error.hpp"
#include "mono/expansion.hpp"
#include "mono/greens.hpp"
#include "mono/ideal.hpp"
#include "mono/io.hpp"
#include "mono/report.hpp"
#include "mono/shadow.hpp"
#include "mono/words.hpp"

namespace mono {

  namespace {

    struct Options {
      std::string                format = "human";
      std::string                file;
      std::string                map;
      std::size_t                arity = 1;
      std::string                word;
      std::string                targets;
      std::string                us;
      std::string                vs;
      std::string                ws;
      std::string                alphas;
      std::string                ideals;
      std::string                gen;
      std::string                set;
      std::string                product;
      std::string                out;
      bool                       table = false;
      std::size_t                jobs  = 1;
      std::optional<std::size_t> cap;
    };

    std::string set_text(FiniteMonoid const& m, std::vector<element> const& xs) {
      std::string out = "{";
      for (std::size_t k = 0; k < xs.size(); ++k) {
        out += (k ? "," : "") + m.name(xs[k]);
      }
      return out + "}";
    }

    std::string tuple_text(FiniteMonoid const& m, std::span<element const> t) {
      std::string out = "(";
      for (std::size_t k = 0; k < t.size(); ++k) {
        out += (k ? "," : "") + m.name(t[k]);
      }
      return out + ")";
    }

    std::string profile_text(FiniteMonoid const& m, CutProfile const& p) {
      std::string out;
      for (std::size_t k = 0; k < p.size(); ++k) {
        out += (k ? " " : "") + tuple_text(m, p.tuple(k));
      }
      return out;
    }

    std::string words_text(std::vector<Word> const& ws) {
      std::string out;
      for (std::size_t k = 0; k < ws.size(); ++k) {
        out += (k ? "," : "") + ws[k];
      }
      return out;
    }

    std::string classes_text(FiniteMonoid const&             m,
                             std::vector<std::size_t> const& partition) {
      std::string out;
      for (auto const& c : GreensData::classes(partition)) {
        out += (out.empty() ? "" : " ") + set_text(m, c);
      }
      return out;
    }

    std::string table_text(FiniteMonoid const& m) {
      std::size_t width = 0;
      for (auto const& nm : m.names()) {
        width = std::max(width, nm.size());
      }
      auto pad = [&](std::string const& s) {
        return s + std::string(width - s.size(), ' ');
      };
      std::string out = pad("") + " |";
      for (auto const& nm : m.names()) {
        out += " " + pad(nm);
      }
      out += "\n" + std::string(width + 2 + (width + 1) * m.order(), '-') + "\n";
      for (element x = 0; x < m.order(); ++x) {
        out += pad(m.name(x)) + " |";
        for (auto y : m.row(x)) {
          out += " " + pad(m.name(y));
        }
        out += "\n";
      }
      return out;
    }

    std::size_t env_cap(std::optional<std::size_t> flag, std::size_t fallback) {
      if (flag) {
        return *flag;
      }
      if (char const* env = std::getenv("MONO_CAP")) {
        try {
          return static_cast<std::size_t>(std::stoull(env));
        } catch (std::exception const&) {
          throw ParseError(std::string("MONO_CAP is not a number: '") + env
                           + "'");
        }
      }
      return fallback;
    }

    std::vector<element> element_list(FiniteMonoid const& m,
                                      std::string const&  text) {
      std::vector<element> out;
      for (auto const& nm : split(text, ',')) {
        if (auto x = m.find(nm)) {
          out.push_back(*x);
        } else {
          throw ParseError("unknown element '" + nm + "'");
        }
      }
      return out;
    }

    struct Loaded {
      std::string  text;
      FiniteMonoid monoid;
    };

    Loaded load(Report& r, std::string const& path) {
      std::string text = read_file(path);
      r.add_input(text);
      FiniteMonoid m = load_table(text);
      return {std::move(text), std::move(m)};
    }

    GeneratorMap require_map(Report& r, FiniteMonoid const& m, Options const& o) {
      if (o.map.empty()) {
        throw ParseError("--map (or --gens) is required, e.g. --map a=x,b=y");
      }
      r.add_input(o.map);
      return parse_generator_map(m, o.map);
    }

    std::vector<Word> word_list(Report& r, std::string const& text) {
      r.add_input(text);
      return split(text, ',');
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    int cmd_info(Options const& o, Report& r) {
      auto const  m  = load(r, o.file).monoid;
      auto const  g  = greens(m);
      std::vector<element> regular, group;
      for (element a = 0; a < m.order(); ++a) {
        if (is_regular(m, a)) {
          regular.push_back(a);
        }
        if (is_group_element(m, a)) {
          group.push_back(a);
        }
      }
      auto const kernel = minimal_ideal(m);
      r.set("order", m.order());
      r.set("identity", m.name(m.identity()));
      auto const counter = aperiodicity_counterexample(m);
      r.set("aperiodic", !counter.has_value());
      if (counter) {
        r.set("aperiodic_counterexample", m.name(*counter));
      }
      r.set("idempotents", set_text(m, idempotents(m)));
      r.set("regular", set_text(m, regular));
      r.set("group_elements", set_text(m, group));
      r.set("j_classes", g.number_of_j_classes());
      r.set("minimal_ideal", set_text(m, kernel.elements()));
      auto const witness = prime_ideal_witness(m, kernel);
      r.set("minimal_ideal_prime", !witness.has_value());
      if (witness) {
        r.set("minimal_ideal_prime_witness",
              "(" + m.name(witness->first) + "," + m.name(witness->second)
                  + ")");
      }
      r.add_block("table", table_text(m));
      return exit_ok;
    }

    int cmd_greens(Options const& o, Report& r) {
      auto const m = load(r, o.file).monoid;
      auto const g = greens(m);
      r.set("order", m.order());
      r.set("r_classes", classes_text(m, g.r_class));
      r.set("l_classes", classes_text(m, g.l_class));
      r.set("h_classes", classes_text(m, g.h_class));
      r.set("j_classes", classes_text(m, g.j_class));
      auto const  js = GreensData::classes(g.j_class);
      std::string order;
      for (std::size_t c = 0; c < js.size(); ++c) {
        for (std::size_t d = 0; d < js.size(); ++d) {
          if (c != d && g.j_leq[c][d]) {
            order += (order.empty() ? "" : " ") + set_text(m, js[c]) + "<"
                     + set_text(m, js[d]);
          }
        }
      }
      r.set("j_order", order);
      r.set("h_trivial", has_trivial_h(g));
      return exit_ok;
    }

    int cmd_ideal(Options const& o, Report& r) {
      auto const m = load(r, o.file).monoid;
      if (o.gen.empty() == o.set.empty()) {
        throw ParseError("give exactly one of --gen and --set");
      }
      r.add_input(o.gen + "|" + o.set + "|" + o.product);
      Ideal const i = o.gen.empty() ? Ideal(m, element_list(m, o.set))
                                    : ideal_generated(m, element_list(m, o.gen));
      r.set("ideal", set_text(m, i.elements()));
      r.set("size", i.size());
      r.set("idempotent", is_idempotent_ideal(m, i));
      auto const witness = prime_ideal_witness(m, i);
      r.set("prime", !witness.has_value());
      if (witness) {
        r.set("prime_witness", "(" + m.name(witness->first) + ","
                                   + m.name(witness->second) + ")");
      }
      r.set("square", set_text(m, ideal_product(m, i, i).elements()));
      if (!o.product.empty()) {
        Ideal const j  = ideal_generated(m, element_list(m, o.product));
        Ideal const ij = ideal_product(m, i, j);
        r.set("other", set_text(m, j.elements()));
        r.set("product", set_text(m, ij.elements()));
        r.set("product_in_intersection",
              ij.subset_of(ideal_intersection(m, i, j)));
      }
      return exit_ok;
    }

    int cmd_cut(Options const& o, Report& r) {
      auto const m = load(r, o.file).monoid;
      auto const g = require_map(r, m, o);
      r.add_input(o.word + "|" + std::to_string(o.arity) + "|" + o.targets);
      auto const p = cut(m, g, o.word, o.arity);
      r.set("arity", o.arity);
      r.set("word", o.word);
      r.set("image", m.name(evaluate(m, g, o.word)));
      r.set("profile", profile_text(m, p));
      r.set("size", p.size());
      if (o.targets.empty()) {
        return exit_ok;
      }
      auto const targets = element_list(m, o.targets);
      if (targets.size() != o.arity) {
        throw ParseError("--targets needs " + std::to_string(o.arity)
                         + " elements");
      }
      auto const f = match_factorization(m, g, o.word, targets);
      r.set("match_found", f.has_value());
      if (!f) {
        return exit_violated;
      }
      r.set("match", words_text(f->parts));
      std::string cuts;
      for (auto c : f->cuts) {
        cuts += (cuts.empty() ? "" : ",") + std::to_string(c);
      }
      r.set("match_cuts", cuts);
      return exit_ok;
    }

    int cmd_expand(Options const& o, Report& r) {
      auto const m = load(r, o.file).monoid;
      auto const g = require_map(r, m, o);
      r.add_input(std::to_string(o.arity));
      ExpansionOptions opts;
      opts.cap  = env_cap(o.cap, default_state_cap);
      opts.jobs = o.jobs;
      auto const e = build_expansion(m, g, o.arity, opts);

      r.set("arity", o.arity);
      r.set("base_order", m.order());
      r.set("order", e.order());
      auto const  fibers = e.fiber_sizes();
      std::string fiber_text;
      for (element x = 0; x < m.order(); ++x) {
        fiber_text += (x ? " " : "") + m.name(x) + ":"
                      + std::to_string(fibers[x]);
      }
      r.set("eta_fibers", fiber_text);
      auto const image = generated_submonoid(m, g);
      bool       onto  = true;
      for (auto x : image) {
        onto = onto && fibers[x] > 0;
      }
      r.set("eta_onto_generated", onto);
      r.set("generating", image.size() == m.order());
      auto const counter = eta_aperiodicity_counterexample(e);
      r.set("eta_aperiodic", !counter.has_value());
      if (counter) {
        r.set("eta_counterexample", e.monoid.name(counter->profile));
      }
      r.set("aperiodic", is_aperiodic(e.monoid));
      if (o.table) {
        for (element x = 0; x < e.order(); ++x) {
          std::string row;
          for (auto y : e.monoid.row(x)) {
            row += (row.empty() ? "" : " ") + e.monoid.name(y);
          }
          r.set("table." + e.monoid.name(x), row);
        }
        r.add_block("profiles", serialize_expansion_mapping(e));
      }
      if (!o.out.empty()) {
        std::ofstream mon(o.out + ".mon", std::ios::binary);
        std::ofstream map(o.out + ".map", std::ios::binary);
        if (!mon || !map) {
          throw ParseError("cannot write '" + o.out + ".mon/.map'");
        }
        mon << serialize_monoid(e.monoid);
        map << serialize_expansion_mapping(e);
        r.set("written", o.out + ".mon " + o.out + ".map");
      }
      return counter || !onto ? exit_violated : exit_ok;
    }

    int cmd_lemma(Options const& o, Report& r) {
      auto const us = word_list(r, o.us);
      auto const vs = word_list(r, o.vs);
      auto const w  = lemma_factor(us, vs);
      r.set("m", us.size());
      r.set("n", vs.size());
      r.set("i", w.i);
      r.set("j", w.j);
      r.set("offset", w.offset);
      r.set("u_i", us[w.i - 1]);
      r.set("v_j", vs[w.j - 1]);
      r.set("valid", witness_holds(us, vs, w));
      return witness_holds(us, vs, w) ? exit_ok : exit_violated;
    }

    int cmd_replay(Options const& o, Report& r) {
      auto const m  = load(r, o.file).monoid;
      auto const g  = require_map(r, m, o);
      auto const us = word_list(r, o.us);
      auto const ws = word_list(r, o.ws);
      r.add_input(std::to_string(o.arity));
      r.set("arity", o.arity);
      r.set("u", words_text(us));
      r.set("w", words_text(ws));
      for (auto const& x : us) {
        g.check_word(x);
      }
      for (auto const& x : ws) {
        g.check_word(x);
      }
      ReplayResult res;
      try {
        res = proof_replay(m, g, o.arity, us, ws);
      } catch (HypothesisFailure const& e) {
        r.set("hypothesis", std::string("failed"));
        r.set("reason", std::string(e.what()));
        return exit_violated;
      }
      r.set("hypothesis", std::string("holds"));
      std::vector<element> targets = res.targets;
      r.set("targets", tuple_text(m, targets));
      r.set("v", words_text(res.factorization.parts));
      r.set("i", res.witness.i);
      r.set("j", res.witness.j);
      r.set("offset", res.witness.offset);
      r.set("u_image", m.name(res.u_image));
      r.set("w_image", m.name(res.w_image));
      r.set("membership", res.membership);
      return res.membership ? exit_ok : exit_violated;
    }

    int cmd_shadow(Options const& o, Report& r) {
      auto const m = load(r, o.file).monoid;
      if (o.alphas.empty()) {
        if (!o.ideals.empty()) {
          throw ParseError("--ideals needs --alphas");
        }
        auto const c = corollary_shadow(m);
        r.set("corollary", std::string(c.holds() ? "holds" : "violated"));
        r.set("corollary_instances", c.instances);
        if (!c.holds()) {
          auto const& x = c.counterexamples.front();
          r.set("corollary_counterexample",
                m.name(x.a) + " n=" + std::to_string(x.n)
                    + " lambda=" + std::to_string(x.lambda));
        }
        return c.holds() ? exit_ok : exit_violated;
      }
      auto const g = require_map(r, m, o);
      r.add_input(o.alphas + "|" + o.ideals);
      std::vector<OmegaTerm> alphas;
      for (auto const& t : split(o.alphas, ';')) {
        alphas.push_back(parse_term(t));
      }
      std::vector<std::vector<OmegaTerm>> ideal_gens;
      if (o.ideals.empty()) {
        throw ParseError("--ideals is required with --alphas");
      }
      for (auto const& group : split(o.ideals, '|')) {
        std::vector<OmegaTerm> gens;
        for (auto const& t : split(group, ',')) {
          gens.push_back(parse_term(t));
        }
        ideal_gens.push_back(std::move(gens));
      }
      auto const s = theorem_shadow(m, g, alphas, ideal_gens);
      r.set("verdict", std::string(to_string(s.verdict)));
      r.set("alphas", tuple_text(m, s.alphas));
      r.set("product", m.name(s.alpha_product));
      std::string ideals;
      for (auto const& i : s.ideals) {
        ideals += (ideals.empty() ? "" : "|") + set_text(m, i.elements());
      }
      r.set("ideals", ideals);
      r.set("ideal_product", set_text(m, s.ideal_product));
      std::string matrix;
      for (auto const& row : s.membership) {
        matrix += matrix.empty() ? "" : "|";
        for (bool b : row) {
          matrix += b ? '1' : '0';
        }
      }
      r.set("membership", matrix);
      if (s.witness) {
        r.set("i", s.witness->first);
        r.set("j", s.witness->second);
      }
      return s.verdict == Verdict::violated ? exit_violated : exit_ok;
    }

    int emit_generated(Options const& o, Report& r, GeneratedMonoid const& gm) {
      std::string mapping;
      for (std::size_t a = 0; a < gm.generators.size(); ++a) {
        mapping += (a ? "," : "") + std::string(1, gm.generators.alphabet()[a])
                   + "=" + gm.monoid.name(gm.generators.images()[a]);
      }
      std::string const text
          = "# generators: " + mapping + "\n" + serialize_monoid(gm.monoid);
      r.set("order", gm.monoid.order());
      r.set("generators", mapping);
      r.set("aperiodic", is_aperiodic(gm.monoid));
      if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
          throw ParseError("cannot write '" + o.out + "'");
        }
        f << text;
        r.set("written", o.out);
      }
      r.add_block("monoid", text);
      return exit_ok;
    }

    int cmd_from_dfa(Options const& o, Report& r) {
      std::string const text = read_file(o.file);
      r.add_input(text);
      auto const d = parse_dfa(text);
      r.set("states", d.states.size());
      return emit_generated(
          o, r, dfa_to_transition_monoid(d, env_cap(o.cap, default_element_cap)));
    }

    int cmd_from_tgen(Options const& o, Report& r) {
      std::string const text = read_file(o.file);
      r.add_input(text);
      auto const spec = parse_tgen(text);
      r.set("degree", spec.degree);
      return emit_generated(
          o,
          r,
          generate_from_transformations(
              spec.degree, spec.generators, env_cap(o.cap, default_element_cap)));
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Finite monoid workbench: Green's relations, ideals, cut "
                 "profiles, expansions and shadow checks",
                 "mono"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    CLI::Validator const positive(
        [](std::string const& v) -> std::string {
          std::size_t k = 0;
          bool const  ok = CLI::detail::lexical_cast(v, k) && k > 0;
          return ok ? "" : "expected a positive integer, got '" + v + "'";
        },
        "POSITIVE");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--cap", o.cap, "Element/state cap (default: $MONO_CAP)");
    app.add_option("--jobs", o.jobs, "Worker threads for expansions")
        ->check(positive);

    using Handler = std::function<int(Options const&, Report&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](char const* name, char const* help, Handler h) {
      auto* sub = app.add_subcommand(name, help);
      commands.emplace_back(sub, std::move(h));
      return sub;
    };
    auto file = [&](CLI::App* sub, char const* what) {
      sub->add_option("file", o.file, what)->required();
    };
    auto with_map = [&](CLI::App* sub) {
      sub->add_option("--map,--gens", o.map, "Letter images, e.g. a=x,b=y");
    };

    auto* info = add("info", "Summary of a monoid", cmd_info);
    file(info, ".mon file");

    auto* gr = add("greens", "Green's relations", cmd_greens);
    file(gr, ".mon file");

    auto* id = add("ideal", "Ideal generated by elements, primality", cmd_ideal);
    file(id, ".mon file");
    id->add_option("--gen", o.gen, "Generators, comma-separated");
    id->add_option("--set", o.set, "An explicit ideal, comma-separated");
    id->add_option("--product", o.product, "Generators of a second ideal");

    auto* cu = add("cut", "Cut profile of a word", cmd_cut);
    file(cu, ".mon file");
    with_map(cu);
    cu->add_option("-n,--arity", o.arity)->check(positive);
    cu->add_option("--word", o.word, "The word (may be empty)")->required();
    cu->add_option("--targets", o.targets, "Find a factorization onto these");

    auto* ex = add("expand", "Build the expansion M^(n)", cmd_expand);
    file(ex, ".mon file");
    with_map(ex);
    ex->add_option("-n,--arity", o.arity)->check(positive);
    ex->add_flag("--table", o.table, "Include the multiplication table");
    ex->add_option("--out", o.out, "Write <prefix>.mon and <prefix>.map");

    auto* le = add("lemma", "Factorization lemma witness", cmd_lemma);
    le->add_option("--u", o.us, "u_1,...,u_m")->required();
    le->add_option("--v", o.vs, "v_1,...,v_n")->required();

    auto* re = add("replay", "Replay the product-of-ideals argument", cmd_replay);
    file(re, ".mon file");
    with_map(re);
    re->add_option("-n,--arity", o.arity)->check(positive);
    re->add_option("--u", o.us, "u_1,...,u_m")->required();
    re->add_option("--w", o.ws, "w_1,...,w_n")->required();

    auto* sh = add("shadow", "Finite shadow checks", cmd_shadow);
    file(sh, ".mon file");
    with_map(sh);
    sh->add_option("--alphas", o.alphas, "Terms separated by ';'");
    sh->add_option("--ideals", o.ideals,
                   "Ideal generators: ',' within, '|' between ideals");

    auto* fd = add("from-dfa", "Transition monoid of a DFA", cmd_from_dfa);
    file(fd, ".dfa file");
    fd->add_option("--out", o.out, "Write the .mon here");

    auto* ft = add("from-tgen", "Monoid generated by transformations",
                   cmd_from_tgen);
    file(ft, ".tgen file");
    ft->add_option("--out", o.out, "Write the .mon here");

    std::vector<std::string> argv_store{"mono"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "mono: error: " << e.what() << "\n";
      return exit_input;
    }

    for (auto const& [sub, handler] : commands) {
      if (!sub->parsed()) {
        continue;
      }
      Report report(sub->get_name());
      int code = exit_ok;
      try {
        code = handler(o, report);
      } catch (CLI::Error const& e) {
        err << "mono: error: " << e.what() << "\n";
        return exit_input;
      } catch (Error const& e) {
        err << "mono: error: " << e.what() << "\n";
        return exit_input;
      }
      out << (o.format == "machine" ? report.render_machine()
                                    : report.render_human());
      return code;
    }
    return exit_input;
  }

}  // namespace mono
