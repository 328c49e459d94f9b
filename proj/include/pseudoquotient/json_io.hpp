// JSON forms of canonical values, verifier reports and verifier configs.
// Every number that is not a small count is written as an exact decimal
// string ("p" or "p/q").

#ifndef PSEUDOQUOTIENT_JSON_IO_HPP_
#define PSEUDOQUOTIENT_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "affine_lattice.hpp"
#include "dyadic_steps.hpp"
#include "exact.hpp"
#include "grammar.hpp"
#include "power_affine.hpp"
#include "presets.hpp"
#include "tower.hpp"
#include "verifier.hpp"

namespace pseudoquotient {

  using json = nlohmann::ordered_json;

  namespace detail {
    inline Rational rational_from_json(json const& j) {
      if (j.is_number_integer()) {
        return Rational(j.get<long long>());
      }
      if (!j.is_string()) {
        throw usage_error("expected an exact number string, got " + j.dump());
      }
      auto q = parse_rational(j.get<std::string>());
      if (!q) {
        throw usage_error("malformed rational \"" + j.get<std::string>()
                          + "\"");
      }
      return *q;
    }

    inline BigInt integer_from_json(json const& j) {
      auto q = rational_from_json(j);
      if (denominator_of(q) != 1) {
        throw usage_error("expected an integer, got " + to_string(q));
      }
      return numerator_of(q);
    }

    //! Small integers as JSON numbers, anything wider as a string.
    inline json integer_to_json(BigInt const& n) {
      if (n >= std::numeric_limits<std::int64_t>::min()
          && n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
      }
      return n.str();
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Canonical values
  ////////////////////////////////////////////////////////////////////////

  inline json root_to_json(RootValue const& r) {
    return json{{"radicand", to_string(r.radicand)}, {"index", r.index}};
  }

  //! Raw and reduced forms; equality of roots is decided on the raw pair by
  //! the cross-power rule, the reduced pair is for reading.
  inline json to_json(RootValue const& r) {
    auto j       = root_to_json(r);
    j["reduced"] = root_to_json(r.reduced());
    return j;
  }

  inline json to_json(RationalVector const& v) {
    json arr = json::array();
    for (auto const& q : v) {
      arr.push_back(to_string(q));
    }
    return json{{"vector", arr}};
  }

  inline json to_json(DyadicStepValue const& v) {
    json arr = json::array();
    for (auto const& q : v.values) {
      arr.push_back(to_string(q));
    }
    return json{{"scale", v.scale},
                {"start", detail::integer_to_json(v.start)},
                {"values", arr}};
  }

  inline json to_json(TowerValue const& v) {
    return json{{"level", v.level}, {"payload", to_string(v.payload)}};
  }

  inline RootValue root_from_json(json const& j) {
    return RootValue{detail::rational_from_json(j.at("radicand")),
                     j.at("index").get<std::uint64_t>()};
  }

  inline RationalVector rational_vector_from_json(json const& j) {
    RationalVector v;
    for (auto const& q : j.at("vector")) {
      v.push_back(detail::rational_from_json(q));
    }
    return v;
  }

  inline DyadicStepValue dyadic_value_from_json(json const& j) {
    DyadicStepValue v;
    v.scale = j.at("scale").get<std::uint64_t>();
    v.start = detail::integer_from_json(j.at("start"));
    for (auto const& q : j.at("values")) {
      v.values.push_back(detail::rational_from_json(q));
    }
    return v;
  }

  inline TowerValue tower_value_from_json(json const& j) {
    return TowerValue{j.at("level").get<std::int64_t>(),
                      detail::rational_from_json(j.at("payload"))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Verifier reports
  ////////////////////////////////////////////////////////////////////////

  template <typename Point>
  json to_json(VerifyReport const& r, Verifier<Point> const& v) {
    auto const& p = v.presentation();
    json        samples = json::array();
    for (auto const& x : p.sample_points) {
      samples.push_back(p.show(x));
    }
    json gens = json::array();
    for (auto const& g : p.generators) {
      gens.push_back(g.name);
    }
    json j;
    j["presentation"] = r.label;
    j["generators"]   = gens;
    j["samples"]      = samples;
    j["depth_used"]   = r.depth_used;
    j["words_checked"] = r.words_checked;
    j["note"] = "bounded check: pass means no counterexample among words of "
                "length <= depth_used on the listed samples";

    json inj{{"status", r.injectivity.pass ? "pass" : "fail"}};
    if (auto const& cx = r.injectivity.counterexample) {
      inj["counterexample"] = json{{"word", v.word_to_string(cx->word)},
                                   {"x", p.show(p.sample_points[cx->x])},
                                   {"y", p.show(p.sample_points[cx->y])}};
    }
    j["injectivity"] = inj;

    json ore = json::array();
    for (auto const& o : r.ore) {
      json e{{"f", v.word_to_string(o.f)}, {"g", v.word_to_string(o.g)}};
      if (o.found()) {
        e["status"]    = "found";
        e["f_prime"]   = v.word_to_string(*o.f_prime);
        e["g_prime"]   = v.word_to_string(*o.g_prime);
        e["validated"] = o.validated;
      } else {
        e["status"] = "not-found-within-depth";
      }
      ore.push_back(e);
    }
    j["ore"] = ore;

    json canc{{"status", r.cancellation.pass ? "pass" : "fail"}};
    if (auto const& cx = r.cancellation.counterexample) {
      canc["counterexample"]
          = json{{"f1", v.word_to_string(cx->f1)},
                 {"f2", v.word_to_string(cx->f2)},
                 {"g", v.word_to_string(cx->g)},
                 {"differ_at", p.show(p.sample_points[cx->witness_point])}};
    }
    j["cancellation"] = canc;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Configs
  ////////////////////////////////////////////////////////////////////////

  //! {"phi": {"sign": 1, "offset": "1", "slope": "0"},
  //!  "psi": {"mul": "2", "offset": "0", "slope": "-1"}}; missing keys keep
  //! their defaults.
  inline TowerConfig tower_config_from_json(json const& j) {
    TowerConfig c;
    if (j.contains("phi")) {
      auto const& phi = j.at("phi");
      if (phi.contains("sign")) {
        c.phi_sign = phi.at("sign").get<int>();
      }
      if (phi.contains("offset")) {
        c.phi_offset = detail::integer_from_json(phi.at("offset"));
      }
      if (phi.contains("slope")) {
        c.phi_slope = detail::integer_from_json(phi.at("slope"));
      }
    }
    if (j.contains("psi")) {
      auto const& psi = j.at("psi");
      if (psi.contains("mul")) {
        c.psi_mul = detail::integer_from_json(psi.at("mul"));
      }
      if (psi.contains("offset")) {
        c.psi_offset = detail::integer_from_json(psi.at("offset"));
      }
      if (psi.contains("slope")) {
        c.psi_slope = detail::integer_from_json(psi.at("slope"));
      }
    }
    c.validate();
    return c;
  }

  //! A generator of an integer presentation:
  //!   {"name": "g", "mul": 2, "add": 0}
  //!   {"name": "g", "even": [1, 0], "odd": [-1, 0]}     (mul, add per parity)
  //!   {"name": "g", "table": {"1": "2", "2": "4"}}
  inline Generator<BigInt> integer_generator_from_json(json const& j) {
    IntegerMapSpec spec;
    auto           name = j.at("name").get<std::string>();
    if (j.contains("table")) {
      spec.kind = IntegerMapSpec::Kind::table;
      for (auto const& [k, val] : j.at("table").items()) {
        auto key = parse_rational(k);
        if (!key || denominator_of(*key) != 1) {
          throw usage_error("table keys must be integers, got \"" + k + "\"");
        }
        spec.table.emplace(numerator_of(*key),
                           detail::integer_from_json(val));
      }
    } else if (j.contains("even") || j.contains("odd")) {
      spec.kind    = IntegerMapSpec::Kind::parity;
      auto even    = j.at("even");
      auto odd     = j.at("odd");
      spec.mul     = detail::integer_from_json(even.at(0));
      spec.add     = detail::integer_from_json(even.at(1));
      spec.odd_mul = detail::integer_from_json(odd.at(0));
      spec.odd_add = detail::integer_from_json(odd.at(1));
    } else {
      spec.kind = IntegerMapSpec::Kind::affine;
      spec.mul  = detail::integer_from_json(j.value("mul", json(1)));
      spec.add  = detail::integer_from_json(j.value("add", json(0)));
    }
    return integer_generator(std::move(name), std::move(spec));
  }

  //! {"label": ..., "generators": [...], "samples": ["1", "2"],
  //!  "max_depth": 3}
  inline Presentation<BigInt> integer_presentation_from_json(json const& j) {
    Presentation<BigInt> p;
    p.label = j.value("label", std::string("config"));
    for (auto const& g : j.at("generators")) {
      p.generators.push_back(integer_generator_from_json(g));
    }
    for (auto const& x : j.at("samples")) {
      p.sample_points.push_back(detail::integer_from_json(x));
    }
    p.max_depth = j.value("max_depth", default_max_depth);
    p.show      = [](BigInt const& x) { return x.str(); };
    return p;
  }

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_JSON_IO_HPP_
