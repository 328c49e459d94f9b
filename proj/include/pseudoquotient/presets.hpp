// Verifier presentations for the built-in instances, plus a small family of
// integer maps used for user-supplied presentations.

#ifndef PSEUDOQUOTIENT_PRESETS_HPP_
#define PSEUDOQUOTIENT_PRESETS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "affine_lattice.hpp"
#include "dyadic_steps.hpp"
#include "grammar.hpp"
#include "power_affine.hpp"
#include "tower.hpp"
#include "verifier.hpp"

namespace pseudoquotient {

  constexpr std::size_t default_max_depth = 5;

  template <OreInstance I>
  Generator<typename I::point_type> generator_of(I const&                 inst,
                                                 typename I::element_type f,
                                                 std::string              name) {
    return {std::move(name),
            [inst, f = std::move(f)](typename I::point_type const& x) {
              return inst.apply(f, x);
            }};
  }

  template <OreInstance I>
  Presentation<typename I::point_type>
  instance_presentation(std::string                                  label,
                        I const&                                     inst,
                        std::vector<typename I::element_type> const& gens,
                        std::vector<std::string> const&              names,
                        std::vector<typename I::point_type>          samples,
                        std::size_t                                  depth) {
    Presentation<typename I::point_type> p;
    p.label = std::move(label);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      p.generators.push_back(generator_of(inst, gens[i], names[i]));
    }
    p.sample_points = std::move(samples);
    p.max_depth     = depth;
    p.show          = [](typename I::point_type const& x) {
      return print_point<I>(x);
    };
    return p;
  }

  //! delta and tau on five fixed step functions.
  inline Presentation<StepFunction>
  dyadic_preset(std::size_t depth = default_max_depth) {
    DyadicSteps inst;
    auto        q = [](long n, long d = 1) { return Rational(n, d); };
    return instance_presentation(
        "dyadic-steps", inst,
        {DyadicStepMap::delta(), DyadicStepMap::tau()}, {"d", "t"},
        {StepFunction({q(1)}), StepFunction({q(3), q(1)}),
         StepFunction({q(1, 2), q(-2), q(5)}), StepFunction({q(0), q(7)}),
         StepFunction({q(2), q(0), q(0), q(-1, 3)})},
        depth);
  }

  inline Presentation<BigInt>
  power_affine_preset(std::size_t depth = default_max_depth) {
    PowerAffine inst;
    return instance_presentation("power-affine", inst,
                                 {PowerAffineMap(2, 1), PowerAffineMap(1, 2)},
                                 {"2*x", "x^2"}, {BigInt(1), BigInt(2), BigInt(3)},
                                 depth);
  }

  inline Presentation<IntVector>
  affine_lattice_preset(std::size_t dim   = 1,
                        std::size_t depth = default_max_depth) {
    AffineLattice inst(dim);
    auto          v = [](std::initializer_list<long> xs) {
      IntVector r;
      for (auto x : xs) {
        r.emplace_back(x);
      }
      return r;
    };
    if (dim == 1) {
      return instance_presentation(
          "affine-lattice-1", inst,
          {AffineLatticeMap(IntMatrix::from_rows({{2}}), v({1})),
           AffineLatticeMap(IntMatrix::from_rows({{3}}), v({0}))},
          {"2x+1", "3x"}, {v({0}), v({1}), v({5}), v({-3})}, depth);
    }
    if (dim == 2) {
      return instance_presentation(
          "affine-lattice-2", inst,
          {AffineLatticeMap(IntMatrix::from_rows({{1, 1}, {0, 1}}), v({0, 0})),
           AffineLatticeMap(IntMatrix::from_rows({{2, 0}, {0, 1}}), v({1, 0}))},
          {"shear", "stretch"},
          {v({0, 0}), v({1, 0}), v({0, 1}), v({2, -3})}, depth);
    }
    throw usage_error("affine-lattice presets exist for dimensions 1 and 2");
  }

  //! Phi, Psi_1, Psi_2, Psi_3 on points at levels 1..4.
  inline Presentation<TowerPoint>
  tower_preset(TowerConfig const& config = {},
               std::size_t        depth  = default_max_depth) {
    Tower                   inst(config);
    std::vector<TowerPoint> samples;
    for (std::int64_t level = 1; level <= 4; ++level) {
      for (long x : {0L, 3L, -2L}) {
        samples.push_back(TowerPoint{level, BigInt(x)});
      }
    }
    return instance_presentation(
        "tower", inst,
        {TowerMap::Phi(), TowerMap::Psi(1), TowerMap::Psi(2),
         TowerMap::Psi(3)},
        {"F", "P1", "P2", "P3"}, std::move(samples), depth);
  }

  ////////////////////////////////////////////////////////////////////////
  // Integer maps for user presentations
  ////////////////////////////////////////////////////////////////////////

  //! One of
  //!   affine:  x -> mul x + add
  //!   parity:  x -> even_mul x + even_add  (x even)
  //!               odd_mul x + odd_add    (x odd)
  //!   table:   finite lookup; evaluating outside the table is a usage error
  struct IntegerMapSpec {
    enum class Kind { affine, parity, table };

    Kind                     kind = Kind::affine;
    BigInt                   mul  = 1;
    BigInt                   add  = 0;
    BigInt                   odd_mul = 1;
    BigInt                   odd_add = 0;
    std::map<BigInt, BigInt> table;

    BigInt operator()(BigInt const& x, std::string const& name) const {
      switch (kind) {
        case Kind::affine:
          return mul * x + add;
        case Kind::parity:
          if (boost::multiprecision::bit_test(boost::multiprecision::abs(x),
                                              0)) {
            return odd_mul * x + odd_add;
          }
          return mul * x + add;
        case Kind::table: {
          auto it = table.find(x);
          if (it == table.end()) {
            throw usage_error("generator " + name + " is undefined at "
                              + x.str());
          }
          return it->second;
        }
      }
      throw usage_error("unknown map kind");
    }
  };

  inline Generator<BigInt> integer_generator(std::string    name,
                                             IntegerMapSpec spec) {
    return {name, [name, spec = std::move(spec)](BigInt const& x) {
              return spec(x, name);
            }};
  }

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_PRESETS_HPP_
