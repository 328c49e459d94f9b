// Exact integer and rational arithmetic shared by every instance.

#ifndef PSEUDOQUOTIENT_EXACT_HPP_
#define PSEUDOQUOTIENT_EXACT_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pseudoquotient {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  //! Raised when an operation receives values it cannot act on: a point
  //! outside the instance's X, a singular matrix, elements of different
  //! dimensions, and so on.
  class usage_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  inline BigInt numerator_of(Rational const& q) {
    return boost::multiprecision::numerator(q);
  }

  inline BigInt denominator_of(Rational const& q) {
    return boost::multiprecision::denominator(q);
  }

  //! n/d for any nonzero d; the Boost constructor rejects negative d.
  inline Rational make_rational(BigInt n, BigInt d) {
    if (d == 0) {
      throw usage_error("zero denominator");
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  }

  inline std::string to_string(BigInt const& n) {
    return n.str();
  }

  //! "p" when the denominator is one, "p/q" otherwise.
  inline std::string to_string(Rational const& q) {
    if (denominator_of(q) == 1) {
      return numerator_of(q).str();
    }
    return numerator_of(q).str() + "/" + denominator_of(q).str();
  }

  //! Parses "[-]digits" or "[-]digits/digits"; nullopt on malformed text or a
  //! zero denominator.
  inline std::optional<Rational> parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
      if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    };
    auto slash = text.find('/');
    auto num   = text.substr(0, slash);
    if (!is_int(num, true)) {
      return std::nullopt;
    }
    std::string num_str(num);
    if (num_str[0] == '+') {
      num_str.erase(0, 1);
    }
    BigInt n(num_str);
    if (slash == std::string_view::npos) {
      return Rational(n);
    }
    auto den = text.substr(slash + 1);
    if (!is_int(den, false)) {
      return std::nullopt;
    }
    BigInt d{std::string(den)};
    if (d == 0) {
      return std::nullopt;
    }
    return Rational(n, d);
  }

  inline BigInt ipow(BigInt const& base, std::uint64_t exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
  }

  inline Rational ipow(Rational const& base, std::uint64_t exp) {
    return Rational(ipow(numerator_of(base), exp),
                    ipow(denominator_of(base), exp));
  }

  inline BigInt pow2(std::uint64_t exp) {
    BigInt r = 1;
    r <<= static_cast<unsigned>(exp);
    return r;
  }

  //! floor(n^(1/k)) for n >= 0, k >= 1.
  inline BigInt iroot(BigInt const& n, std::uint64_t k) {
    if (n < 0 || k == 0) {
      throw usage_error("iroot: needs n >= 0 and k >= 1");
    }
    if (n < 2 || k == 1) {
      return n;
    }
    auto bits = boost::multiprecision::msb(n) + 1;
    if (k >= bits) {
      return 1;
    }
    // 2^(floor(bits/k)+1) bounds the root from above.
    BigInt lo = 1;
    BigInt hi = pow2(bits / k + 1);
    while (lo < hi) {
      BigInt mid = (lo + hi + 1) / 2;
      if (ipow(mid, k) <= n) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }

  //! The exact k-th root of n when n is a perfect k-th power.
  inline std::optional<BigInt> exact_root(BigInt const& n, std::uint64_t k) {
    auto r = iroot(n, k);
    if (ipow(r, k) == n) {
      return r;
    }
    return std::nullopt;
  }

  inline std::uint64_t to_u64(BigInt const& n) {
    if (n < 0 || n > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      throw usage_error("integer out of range: " + n.str());
    }
    return n.convert_to<std::uint64_t>();
  }

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_EXACT_HPP_
