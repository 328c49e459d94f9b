// Maps x -> m x^n on the positive integers.  The quotient is the set of
// positive real roots (k/m)^(1/n).

#ifndef PSEUDOQUOTIENT_POWER_AFFINE_HPP_
#define PSEUDOQUOTIENT_POWER_AFFINE_HPP_

#include <cstdint>
#include <string>

#include "core.hpp"
#include "exact.hpp"

namespace pseudoquotient {

  namespace detail {
    inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw usage_error("exponent overflow");
      }
      return a * b;
    }
  }  // namespace detail

  //! x -> m x^n with m, n >= 1.
  struct PowerAffineMap {
    BigInt        m = 1;
    std::uint64_t n = 1;

    PowerAffineMap() = default;
    PowerAffineMap(BigInt mult, std::uint64_t exponent)
        : m(std::move(mult)), n(exponent) {
      if (m < 1 || n < 1) {
        throw usage_error("power-affine map needs m >= 1 and n >= 1");
      }
    }

    bool operator==(PowerAffineMap const&) const = default;
  };

  //! The positive real radicand^(1/index).  Two roots are equal iff
  //! q1^n2 == q2^n1; the representation itself is not unique.
  struct RootValue {
    Rational      radicand;
    std::uint64_t index = 1;

    friend bool operator==(RootValue const& a, RootValue const& b) {
      if (a.index == b.index) {
        return a.radicand == b.radicand;
      }
      return ipow(a.radicand, b.index) == ipow(b.radicand, a.index);
    }

    //! The same value with the smallest index, i.e. the largest t dividing
    //! index such that radicand is a perfect t-th power is stripped.
    RootValue reduced() const {
      auto num = numerator_of(radicand);
      auto den = denominator_of(radicand);
      for (std::uint64_t t = index; t > 1; --t) {
        if (index % t != 0) {
          continue;
        }
        auto rn = exact_root(num, t);
        if (!rn) {
          continue;
        }
        auto rd = exact_root(den, t);
        if (!rd) {
          continue;
        }
        return RootValue{Rational(*rn, *rd), index / t};
      }
      return *this;
    }
  };

  class PowerAffine {
   public:
    using element_type   = PowerAffineMap;
    using point_type     = BigInt;
    using canonical_type = RootValue;

    static constexpr std::string_view name = "power-affine";

    PowerAffineMap compose(PowerAffineMap const& f,
                           PowerAffineMap const& g) const {
      return PowerAffineMap(f.m * ipow(g.m, f.n), detail::checked_mul(f.n, g.n));
    }

    BigInt apply(PowerAffineMap const& f, BigInt const& x) const {
      if (x < 1) {
        throw usage_error("power-affine points are positive integers, got "
                          + x.str());
      }
      return f.m * ipow(x, f.n);
    }

    //! f = (a, p), g = (b, q): f' = (a^q, p), g' = (b^p, q); both composites
    //! equal (a^q b^p, pq).
    OreWitness<PowerAffineMap> ore_complete(PowerAffineMap const& f,
                                            PowerAffineMap const& g) const {
      return {PowerAffineMap(ipow(f.m, g.n), f.n),
              PowerAffineMap(ipow(g.m, f.n), g.n)};
    }

    PowerAffineMap designated() const {
      return PowerAffineMap{};
    }

    RootValue canonical(Pseudoquotient<BigInt, PowerAffineMap> const& p) const {
      return RootValue{Rational(p.numerator, p.denominator.m),
                       p.denominator.n};
    }
  };

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_POWER_AFFINE_HPP_
