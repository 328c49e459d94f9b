// A tower X = X_1 u X_2 u ... of copies of Z with bijections
// phi_n : X_n -> X_{n+1} and injections psi_n : X_n -> X_n such that
// phi_n psi_n = psi_{n+1} phi_n.  Phi acts as phi_n on X_n, and Psi_j acts as
// psi_j on X_j and as the identity elsewhere.  Since Phi Psi_j = Psi_{j+1} Phi
// and the Psi_j commute, every element of the generated semigroup is
// Psi_1^k1 ... Psi_m^km Phi^n.
//
// Both families are affine in x with coefficients affine in the level n:
//
//   phi_n(x) = s x + b0 + b1 n      (s = +-1)
//   psi_n(x) = mu x + a0 + a1 n     (mu != 0)
//
// The default is phi_n(x) = x + 1, psi_n(x) = 2x - n.

#ifndef PSEUDOQUOTIENT_TOWER_HPP_
#define PSEUDOQUOTIENT_TOWER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core.hpp"
#include "exact.hpp"

namespace pseudoquotient {

  //! (payload, level) with level >= 1.
  struct TowerPoint {
    std::int64_t level = 1;
    BigInt       payload = 0;

    bool operator==(TowerPoint const&) const = default;
  };

  //! Psi_1^P[1] Psi_2^P[2] ... Phi^phi.  Levels with exponent zero are never
  //! stored, so structural equality is equality of normal forms.
  class TowerMap {
   public:
    using exponent_map = std::map<std::uint64_t, std::uint64_t>;

    TowerMap() = default;

    TowerMap(exponent_map psi, std::uint64_t phi)
        : _psi(std::move(psi)), _phi(phi) {
      for (auto it = _psi.begin(); it != _psi.end();) {
        if (it->first == 0) {
          throw usage_error("Psi levels start at 1");
        }
        it = it->second == 0 ? _psi.erase(it) : std::next(it);
      }
    }

    static TowerMap Phi(std::uint64_t power = 1) {
      return TowerMap({}, power);
    }

    static TowerMap Psi(std::uint64_t level, std::uint64_t power = 1) {
      return TowerMap({{level, power}}, 0);
    }

    exponent_map const& psi() const noexcept {
      return _psi;
    }

    std::uint64_t phi() const noexcept {
      return _phi;
    }

    std::uint64_t psi_power(std::uint64_t level) const {
      auto it = _psi.find(level);
      return it == _psi.end() ? 0 : it->second;
    }

    //! Psi exponents moved up by k levels: Phi^k Psi^P = Psi^shift(P,k) Phi^k.
    exponent_map shifted_psi(std::uint64_t k) const {
      exponent_map r;
      for (auto const& [level, e] : _psi) {
        r.emplace_hint(r.end(), level + k, e);
      }
      return r;
    }

    bool operator==(TowerMap const&) const = default;

   private:
    exponent_map  _psi;
    std::uint64_t _phi = 0;
  };

  //! The extension of a quotient class to the level-indexed rationals: the
  //! unique (payload, level) whose image under the denominator is the
  //! numerator, with levels below 1 allowed.
  struct TowerValue {
    std::int64_t level = 1;
    Rational     payload;

    bool operator==(TowerValue const&) const = default;
  };

  struct TowerConfig {
    int    phi_sign   = 1;
    BigInt phi_offset = 1;
    BigInt phi_slope  = 0;
    BigInt psi_mul    = 2;
    BigInt psi_offset = 0;
    BigInt psi_slope  = -1;

    //! Throws unless the rules define bijections phi_n, injections psi_n, and
    //! the squares commute at every level.  Both sides of the square are
    //! affine in (x, n), so comparing coefficients is exact.
    void validate() const {
      if (phi_sign != 1 && phi_sign != -1) {
        throw usage_error("phi sign must be +1 or -1 for phi_n to be onto");
      }
      if (psi_mul == 0) {
        throw usage_error("psi multiplier must be nonzero for psi_n to be "
                          "injective");
      }
      // phi_n psi_n(x)     = s mu x + s a0 + b0 + (s a1 + b1) n
      // psi_{n+1} phi_n(x) = mu s x + mu b0 + a0 + a1 + (mu b1 + a1) n
      BigInt const s = phi_sign;
      if (s * psi_offset + phi_offset != psi_mul * phi_offset + psi_offset
                                             + psi_slope
          || s * psi_slope + phi_slope != psi_mul * phi_slope + psi_slope) {
        throw usage_error("tower rules do not satisfy phi_n psi_n = "
                          "psi_{n+1} phi_n");
      }
    }

    BigInt phi(std::int64_t level, BigInt const& x) const {
      return phi_sign * x + phi_offset + phi_slope * level;
    }

    Rational phi_inverse(std::int64_t level, Rational const& y) const {
      return Rational(phi_sign) * (y - Rational(phi_offset + phi_slope * level));
    }

    BigInt psi(std::int64_t level, BigInt const& x) const {
      return psi_mul * x + psi_offset + psi_slope * level;
    }

    Rational psi_inverse(std::int64_t level, Rational const& y) const {
      return (y - Rational(psi_offset + psi_slope * level)) / Rational(psi_mul);
    }

    bool operator==(TowerConfig const&) const = default;
  };

  class Tower {
   public:
    using element_type   = TowerMap;
    using point_type     = TowerPoint;
    using canonical_type = TowerValue;

    static constexpr std::string_view name = "tower";

    static constexpr std::uint64_t max_phi_steps = 1'000'000;

    explicit Tower(TowerConfig config = {}) : _config(std::move(config)) {
      _config.validate();
    }

    TowerConfig const& config() const noexcept {
      return _config;
    }

    //! True iff phi_n psi_n(x) == psi_{n+1} phi_n(x) for every level and
    //! sample given; a pointwise check independent of validate().
    bool commuting_squares_hold(std::vector<std::int64_t> const& levels,
                                std::vector<BigInt> const&       xs) const {
      for (auto n : levels) {
        for (auto const& x : xs) {
          if (_config.phi(n, _config.psi(n, x))
              != _config.psi(n + 1, _config.phi(n, x))) {
            return false;
          }
        }
      }
      return true;
    }

    TowerMap compose(TowerMap const& f, TowerMap const& g) const {
      auto psi = g.shifted_psi(f.phi());
      for (auto const& [level, e] : f.psi()) {
        psi[level] += e;
      }
      return TowerMap(std::move(psi), f.phi() + g.phi());
    }

    TowerPoint apply(TowerMap const& f, TowerPoint const& x) const {
      if (x.level < 1) {
        throw usage_error("tower points live on levels >= 1");
      }
      if (f.phi() > max_phi_steps) {
        throw usage_error("Phi power too large to evaluate");
      }
      TowerPoint y = x;
      for (std::uint64_t i = 0; i < f.phi(); ++i) {
        y.payload = _config.phi(y.level, y.payload);
        ++y.level;
      }
      auto k = f.psi_power(static_cast<std::uint64_t>(y.level));
      for (std::uint64_t i = 0; i < k; ++i) {
        y.payload = _config.psi(y.level, y.payload);
      }
      return y;
    }

    //! f = (P1, n1), g = (P2, n2): f' = (shift(P1, n2), n1) and
    //! g' = (shift(P2, n1), n2); both composites are
    //! (shift(P1, n2) + shift(P2, n1), n1 + n2).
    OreWitness<TowerMap> ore_complete(TowerMap const& f,
                                      TowerMap const& g) const {
      return {TowerMap(f.shifted_psi(g.phi()), f.phi()),
              TowerMap(g.shifted_psi(f.phi()), g.phi())};
    }

    TowerMap designated() const {
      return TowerMap{};
    }

    TowerValue canonical(Pseudoquotient<TowerPoint, TowerMap> const& p) const {
      auto const& f     = p.denominator;
      auto        level = p.numerator.level;
      Rational    y(p.numerator.payload);
      if (level < 1) {
        throw usage_error("tower points live on levels >= 1");
      }
      auto k = f.psi_power(static_cast<std::uint64_t>(level));
      for (std::uint64_t i = 0; i < k; ++i) {
        y = _config.psi_inverse(level, y);
      }
      if (f.phi() > max_phi_steps) {
        throw usage_error("Phi power too large to evaluate");
      }
      for (std::uint64_t i = 0; i < f.phi(); ++i) {
        --level;
        y = _config.phi_inverse(level, y);
      }
      return TowerValue{level, y};
    }

   private:
    TowerConfig _config;
  };

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_TOWER_HPP_
