// Step functions sum_k c_k chi_[k, k+1) with rational coefficients, acted on
// by the semigroup generated by
//
//   delta: c_k chi_[k,k+1)  ->  (c_k / 2) chi_[2k, 2k+2)
//   tau:   c_k chi_[k,k+1)  ->  c_k chi_[k+1, k+2)
//
// Since delta tau = tau^2 delta, every element has the unique normal form
// tau^m delta^n.  A quotient x/(tau^m delta^n) is the dyadic step function
// xi(t) = 2^n x(2^n t + m).

#ifndef PSEUDOQUOTIENT_DYADIC_STEPS_HPP_
#define PSEUDOQUOTIENT_DYADIC_STEPS_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "core.hpp"
#include "exact.hpp"

namespace pseudoquotient {

  //! tau^m delta^n.
  struct DyadicStepMap {
    BigInt        m = 0;
    std::uint64_t n = 0;

    DyadicStepMap() = default;
    DyadicStepMap(BigInt tau_power, std::uint64_t delta_power)
        : m(std::move(tau_power)), n(delta_power) {
      if (m < 0) {
        throw usage_error("tau exponent must be >= 0");
      }
    }

    static DyadicStepMap tau(BigInt k = 1) {
      return DyadicStepMap(std::move(k), 0);
    }

    static DyadicStepMap delta(std::uint64_t k = 1) {
      return DyadicStepMap(0, k);
    }

    bool operator==(DyadicStepMap const&) const = default;
  };

  //! sum_k coefficients[k] chi_[k, k+1); trailing zeros are always trimmed so
  //! equal functions have equal coefficient lists.
  class StepFunction {
   public:
    StepFunction() = default;

    explicit StepFunction(std::vector<Rational> coefficients)
        : _coeffs(std::move(coefficients)) {
      trim();
    }

    std::vector<Rational> const& coefficients() const noexcept {
      return _coeffs;
    }

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }

    StepFunction delta(std::uint64_t times = 1) const {
      if (times == 0 || _coeffs.empty()) {
        return *this;
      }
      if (times > 24) {
        throw usage_error("delta power too large to expand");
      }
      std::size_t const copies = std::size_t(1) << times;
      Rational const    scale(1, pow2(times));
      StepFunction      result;
      result._coeffs.reserve(_coeffs.size() * copies);
      for (auto const& c : _coeffs) {
        result._coeffs.insert(result._coeffs.end(), copies, c * scale);
      }
      return result;
    }

    StepFunction tau(BigInt const& times = 1) const {
      if (times == 0 || _coeffs.empty()) {
        return *this;
      }
      if (times > (1 << 24)) {
        throw usage_error("tau power too large to expand");
      }
      StepFunction result;
      auto         k = times.convert_to<std::size_t>();
      result._coeffs.reserve(k + _coeffs.size());
      result._coeffs.assign(k, Rational(0));
      result._coeffs.insert(result._coeffs.end(), _coeffs.begin(),
                            _coeffs.end());
      return result;
    }

    Rational integral() const {
      Rational s = 0;
      for (auto const& c : _coeffs) {
        s += c;
      }
      return s;
    }

    Rational l1_norm() const {
      Rational s = 0;
      for (auto const& c : _coeffs) {
        s += abs(c);
      }
      return s;
    }

    bool operator==(StepFunction const&) const = default;

   private:
    void trim() {
      while (!_coeffs.empty() && _coeffs.back() == 0) {
        _coeffs.pop_back();
      }
    }

    std::vector<Rational> _coeffs;
  };

  //! The function equal to values[j] on [(start + j) 2^-scale,
  //! (start + j + 1) 2^-scale) and zero elsewhere.  Equality is pointwise
  //! (decided on the common refinement), not structural.
  struct DyadicStepValue {
    std::uint64_t         scale = 0;
    BigInt                start = 0;
    std::vector<Rational> values;

    //! The same function at the finer grid 2^-new_scale.
    DyadicStepValue refined(std::uint64_t new_scale) const {
      if (new_scale < scale) {
        throw usage_error("cannot refine to a coarser grid");
      }
      auto const   shift = new_scale - scale;
      auto const   copies = std::size_t(1) << shift;
      DyadicStepValue r{new_scale, start * pow2(shift), {}};
      r.values.reserve(values.size() * copies);
      for (auto const& v : values) {
        r.values.insert(r.values.end(), copies, v);
      }
      return r;
    }

    //! Zeros stripped from both ends; the zero function has start 0.
    DyadicStepValue trimmed() const {
      auto first = std::find_if(values.begin(), values.end(),
                                [](Rational const& v) { return v != 0; });
      if (first == values.end()) {
        return DyadicStepValue{scale, 0, {}};
      }
      auto last = std::find_if(values.rbegin(), values.rend(),
                               [](Rational const& v) { return v != 0; })
                      .base();
      return DyadicStepValue{
          scale, start + (first - values.begin()), {first, last}};
    }

    //! Unique representative: trimmed, on the coarsest grid that still
    //! resolves the function.
    DyadicStepValue normalized() const {
      auto v = trimmed();
      if (v.values.empty()) {
        return DyadicStepValue{0, 0, {}};
      }
      while (v.scale > 0) {
        // pad to whole cells of the grid one level up
        std::vector<Rational> padded;
        BigInt                s = v.start;
        if (boost::multiprecision::bit_test(boost::multiprecision::abs(s), 0)) {
          padded.push_back(0);
          s -= 1;
        }
        padded.insert(padded.end(), v.values.begin(), v.values.end());
        if (padded.size() % 2 == 1) {
          padded.push_back(0);
        }
        std::vector<Rational> coarse;
        coarse.reserve(padded.size() / 2);
        bool ok = true;
        for (std::size_t j = 0; j < padded.size(); j += 2) {
          if (padded[j] != padded[j + 1]) {
            ok = false;
            break;
          }
          coarse.push_back(padded[j]);
        }
        if (!ok) {
          break;
        }
        v = DyadicStepValue{v.scale - 1, s / 2, std::move(coarse)}.trimmed();
      }
      return v;
    }

    Rational integral() const {
      Rational s = 0;
      for (auto const& v : values) {
        s += v;
      }
      return s / Rational(pow2(scale));
    }

    Rational l1_norm() const {
      Rational s = 0;
      for (auto const& v : values) {
        s += abs(v);
      }
      return s / Rational(pow2(scale));
    }

    friend bool operator==(DyadicStepValue const& a,
                           DyadicStepValue const& b) {
      auto const s  = std::max(a.scale, b.scale);
      auto       ra = a.refined(s).trimmed();
      auto       rb = b.refined(s).trimmed();
      return ra.start == rb.start && ra.values == rb.values;
    }
  };

  class DyadicSteps {
   public:
    using element_type   = DyadicStepMap;
    using point_type     = StepFunction;
    using canonical_type = DyadicStepValue;

    static constexpr std::string_view name = "dyadic-steps";

    //! tau^m1 delta^n1 tau^m2 delta^n2 = tau^(m1 + 2^n1 m2) delta^(n1 + n2).
    DyadicStepMap compose(DyadicStepMap const& f,
                          DyadicStepMap const& g) const {
      return DyadicStepMap(f.m + pow2(f.n) * g.m, f.n + g.n);
    }

    StepFunction apply(DyadicStepMap const& f, StepFunction const& x) const {
      return x.delta(f.n).tau(f.m);
    }

    //! For n1 <= n2 and d = n2 - n1: f' = tau^(2^d m1), g' = tau^m2 delta^d,
    //! both composites being tau^(2^d m1 + m2) delta^n2.  Mirrored otherwise.
    OreWitness<DyadicStepMap> ore_complete(DyadicStepMap const& f,
                                           DyadicStepMap const& g) const {
      if (f.n <= g.n) {
        auto d = g.n - f.n;
        return {DyadicStepMap(pow2(d) * f.m, 0), DyadicStepMap(g.m, d)};
      }
      auto d = f.n - g.n;
      return {DyadicStepMap(f.m, d), DyadicStepMap(pow2(d) * g.m, 0)};
    }

    DyadicStepMap designated() const {
      return DyadicStepMap{};
    }

    DyadicStepValue
    canonical(Pseudoquotient<StepFunction, DyadicStepMap> const& p) const {
      auto const&     f = p.denominator;
      Rational const  factor(pow2(f.n));
      DyadicStepValue v{f.n, -f.m, {}};
      for (auto const& c : p.numerator.coefficients()) {
        v.values.push_back(c * factor);
      }
      return v.normalized();
    }
  };

  //! The integral of a quotient is the integral of its numerator.
  template <typename Element>
  Rational step_integral(Pseudoquotient<StepFunction, Element> const& p) {
    return p.numerator.integral();
  }

  template <typename Element>
  Rational step_l1_norm(Pseudoquotient<StepFunction, Element> const& p) {
    return p.numerator.l1_norm();
  }

  inline Rational step_integral(DyadicStepValue const& v) {
    return v.integral();
  }

  inline Rational step_l1_norm(DyadicStepValue const& v) {
    return v.l1_norm();
  }

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_DYADIC_STEPS_HPP_
