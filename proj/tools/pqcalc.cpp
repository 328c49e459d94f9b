// pqcalc: normalize, compare and transform quotient expressions, and run the
// bounded hypothesis checker.
//
// Exit codes: 0 ok, 1 domain error, 2 syntax error, 3 verifier counterexample.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pseudoquotient/json_io.hpp"
#include "pseudoquotient/pseudoquotient.hpp"

namespace pq = pseudoquotient;
using pq::json;

namespace {

  enum Exit { ok = 0, domain = 1, syntax = 2, counterexample = 3 };

  struct Options {
    std::string                instance;
    std::optional<std::size_t> depth;
    std::string                config;
    std::string                output = "json";
  };

  json read_config(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw pq::usage_error("cannot open config file " + path);
    }
    return json::parse(in);
  }

  pq::TowerConfig tower_config(Options const& opt) {
    return opt.config.empty() ? pq::TowerConfig{}
                              : pq::tower_config_from_json(read_config(opt.config));
  }

  //! The point of "pq(<point>; ...)" fixes the dimension.
  std::size_t affine_dim(std::string const& pq_text) {
    pq::Cursor c(pq_text);
    c.expect("pq");
    c.expect('(');
    auto x = pq::Grammar<pq::AffineLattice>::vector(c);
    if (x.empty()) {
      throw pq::usage_error("affine-lattice points need dimension >= 1");
    }
    return x.size();
  }

  //! Calls f with the instance named in opt.
  template <typename F>
  auto with_instance(Options const& opt, std::string const& pq_text, F&& f) {
    if (opt.instance == "power-affine") {
      return f(pq::PowerAffine{});
    }
    if (opt.instance == "affine-lattice") {
      return f(pq::AffineLattice(affine_dim(pq_text)));
    }
    if (opt.instance == "dyadic-steps") {
      return f(pq::DyadicSteps{});
    }
    if (opt.instance == "tower") {
      return f(pq::Tower(tower_config(opt)));
    }
    throw pq::usage_error("unknown instance \"" + opt.instance
                          + "\"; expected power-affine, affine-lattice, "
                            "dyadic-steps or tower");
  }

  template <typename I>
  json witness_json(pq::witness_t<I> const& w) {
    return json{{"f_prime", pq::print_element<I>(w.f_prime)},
                {"g_prime", pq::print_element<I>(w.g_prime)}};
  }

  json cmd_normalize(Options const& opt, std::string const& text) {
    return with_instance(opt, text, [&](auto const& in) {
      using I = std::decay_t<decltype(in)>;
      auto p  = pq::parse_pq(text, in);
      return json{{"instance", std::string(I::name)},
                  {"canonical", pq::to_json(pq::canonical_value(in, p))}};
    });
  }

  json cmd_equiv(Options const&     opt,
                 std::string const& a,
                 std::string const& b) {
    return with_instance(opt, a, [&](auto const& in) {
      using I = std::decay_t<decltype(in)>;
      auto p  = pq::parse_pq(a, in);
      auto q  = pq::parse_pq(b, in);
      auto w  = pq::ore_complete(in, p.denominator, q.denominator);
      return json{{"instance", std::string(I::name)},
                  {"equivalent", pq::pq_equivalent_with(in, p, q, w)},
                  {"witness", witness_json<I>(w)}};
    });
  }

  //! <element>, inv(<element>) or frac(<den>, <num>).
  json cmd_apply(Options const&     opt,
                 std::string const& op,
                 std::string const& text) {
    return with_instance(opt, text, [&](auto const& in) {
      using I = std::decay_t<decltype(in)>;
      auto p  = pq::parse_pq(text, in);

      pq::Cursor probe(op);
      pq::pq_t<I> r;
      std::string shown;
      if (probe.accept("frac")) {
        auto F = pq::parse_fraction(op, in);
        r      = pq::frac_apply(in, F, p);
        shown  = pq::print_fraction<I>(F);
      } else if (probe.accept("inv")) {
        auto g = pq::detail::parse_all<typename I::element_type>(
            op, [&in](pq::Cursor& c) {
              c.expect("inv");
              c.expect('(');
              auto e = pq::Grammar<I>::element(c, in);
              c.expect(')');
              return e;
            });
        r     = pq::extend_inverse_apply(in, g, p);
        shown = "inv(" + pq::print_element<I>(g) + ")";
      } else {
        auto g = pq::parse_element(op, in);
        r      = pq::extend_apply(in, g, p);
        shown  = pq::print_element<I>(g);
      }
      return json{{"instance", std::string(I::name)},
                  {"operator", shown},
                  {"result", pq::print_pq<I>(r)},
                  {"canonical", pq::to_json(pq::canonical_value(in, r))}};
    });
  }

  template <typename Point>
  std::pair<json, bool> run_verifier(pq::Presentation<Point> p) {
    pq::Verifier<Point> v(std::move(p));
    auto                report = v.run();
    return {pq::to_json(report, v), report.has_counterexample()};
  }

  std::pair<json, bool> cmd_verify(Options const& opt, std::string preset) {
    if (preset.empty()) {
      preset = opt.instance;
    }
    auto depth = opt.depth.value_or(pq::default_max_depth);
    if (preset.empty() && !opt.config.empty()) {
      auto j = read_config(opt.config);
      if (!j.contains("generators")) {
        throw pq::usage_error("config has no \"generators\"; name a preset "
                              "to use it as a tower config");
      }
      auto p = pq::integer_presentation_from_json(j);
      if (opt.depth) {
        p.max_depth = *opt.depth;
      }
      return run_verifier(std::move(p));
    }
    if (preset == "dyadic-steps") {
      return run_verifier(pq::dyadic_preset(depth));
    }
    if (preset == "power-affine") {
      return run_verifier(pq::power_affine_preset(depth));
    }
    if (preset == "affine-lattice" || preset == "affine-lattice-1") {
      return run_verifier(pq::affine_lattice_preset(1, depth));
    }
    if (preset == "affine-lattice-2") {
      return run_verifier(pq::affine_lattice_preset(2, depth));
    }
    if (preset == "tower") {
      return run_verifier(pq::tower_preset(tower_config(opt), depth));
    }
    if (preset.empty()) {
      throw pq::usage_error("verify needs a preset or --config");
    }
    throw pq::usage_error("unknown preset \"" + preset
                          + "\"; expected dyadic-steps, power-affine, "
                            "affine-lattice, affine-lattice-2 or tower");
  }

  void print_text(json const& j, std::string const& prefix, std::ostream& out) {
    if (j.is_object()) {
      for (auto const& [k, v] : j.items()) {
        print_text(v, prefix.empty() ? k : prefix + "." + k, out);
      }
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
      for (std::size_t i = 0; i < j.size(); ++i) {
        print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
      }
    } else {
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump())
          << '\n';
    }
  }

  void emit(json const& j, Options const& opt) {
    if (opt.output == "text") {
      print_text(j, "", std::cout);
    } else {
      std::cout << j.dump(2) << '\n';
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of quotients x/f for semigroups of injective "
               "maps with the Ore condition"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--instance", opt.instance,
                 "power-affine, affine-lattice, dyadic-steps or tower");
  app.add_option("--depth", opt.depth, "word length bound for verify")
      ->check(CLI::PositiveNumber);
  app.add_option("--config", opt.config,
                 "JSON file: tower rules, or a verifier presentation");
  app.add_option("--output", opt.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string a, b, preset;

  auto* normalize = app.add_subcommand("normalize", "canonical value of pq(x; f)");
  normalize->add_option("pq", a, "pq(<point>; <element>)")->required();

  auto* equiv = app.add_subcommand("equiv", "decide pq(x; f) ~ pq(y; g)");
  equiv->add_option("p", a)->required();
  equiv->add_option("q", b)->required();

  auto* apply = app.add_subcommand(
      "apply", "apply <element>, inv(<element>) or frac(<den>, <num>)");
  apply->add_option("operator", a)->required();
  apply->add_option("pq", b)->required();

  auto* verify = app.add_subcommand(
      "verify", "bounded check of injectivity, Ore condition and cancellation");
  verify->add_option("preset", preset);

  for (auto* sub : {normalize, equiv, apply, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return syntax;
  }

  try {
    if (*normalize) {
      emit(cmd_normalize(opt, a), opt);
    } else if (*equiv) {
      emit(cmd_equiv(opt, a, b), opt);
    } else if (*apply) {
      emit(cmd_apply(opt, a, b), opt);
    } else {
      auto [report, failed] = cmd_verify(opt, preset);
      emit(report, opt);
      return failed ? counterexample : ok;
    }
    return ok;
  } catch (pq::syntax_error const& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return syntax;
  } catch (json::parse_error const& e) {
    std::cerr << "syntax error in config: " << e.what() << '\n';
    return syntax;
  } catch (json::exception const& e) {
    std::cerr << "error in config: " << e.what() << '\n';
    return domain;
  } catch (pq::usage_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return domain;
  }
}
