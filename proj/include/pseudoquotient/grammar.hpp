// Textual syntax for elements, points, pseudoquotients and fractions of the
// built-in instances.
//
//   power-affine    element  3*x^2   (also x, 3*x, x^2)      point  12
//   affine-lattice  element  aff([[2,0],[0,1]],[1,0])        point  [5,7]
//   dyadic-steps    element  t^2 d^1 (any word in t, d)      point  [3,1/2]
//   tower           element  P1^2 P3 F^1 (any word in F, Pk) point  5@2
//
//   pseudoquotient  pq(<point>; <element>)
//   fraction        frac(<den>, <num>)        denotes den~^-1 o num~
//
// Words are read left to right as composition: "d t" is delta o tau.
// print_* always emits the normal form, which parses back to the same value.

#ifndef PSEUDOQUOTIENT_GRAMMAR_HPP_
#define PSEUDOQUOTIENT_GRAMMAR_HPP_

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "affine_lattice.hpp"
#include "core.hpp"
#include "dyadic_steps.hpp"
#include "exact.hpp"
#include "power_affine.hpp"
#include "tower.hpp"

namespace pseudoquotient {

  //! Malformed text.  Distinct from usage_error, which is raised for
  //! well-formed text denoting an invalid value (det M = 0, exponent 0, ...).
  class syntax_error : public std::runtime_error {
   public:
    syntax_error(std::string const& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)),
          _offset(offset) {}

    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  class Cursor {
   public:
    explicit Cursor(std::string_view text) : _text(text) {}

    std::size_t offset() const noexcept {
      return _pos;
    }

    void skip_ws() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    bool at_end() {
      skip_ws();
      return _pos == _text.size();
    }

    char peek() {
      skip_ws();
      return _pos < _text.size() ? _text[_pos] : '\0';
    }

    bool accept(char c) {
      if (peek() == c) {
        ++_pos;
        return true;
      }
      return false;
    }

    bool accept(std::string_view word) {
      skip_ws();
      if (_text.substr(_pos, word.size()) == word) {
        _pos += word.size();
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!accept(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    void expect(std::string_view word) {
      if (!accept(word)) {
        fail("expected \"" + std::string(word) + "\"");
      }
    }

    [[noreturn]] void fail(std::string const& msg) const {
      throw syntax_error(msg, _pos);
    }

    BigInt integer() {
      skip_ws();
      auto start = _pos;
      if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
        ++_pos;
      }
      auto digits = _pos;
      while (_pos < _text.size()
             && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
      if (_pos == digits) {
        _pos = start;
        fail("expected an integer");
      }
      std::string s(_text.substr(start, _pos - start));
      if (s[0] == '+') {
        s.erase(0, 1);
      }
      return BigInt(s);
    }

    std::uint64_t natural() {
      auto start = offset();
      auto n     = integer();
      if (n < 0) {
        throw syntax_error("expected a nonnegative integer", start);
      }
      return to_u64(n);
    }

    Rational rational() {
      auto     n = integer();
      BigInt   d = 1;
      if (peek() == '/') {
        ++_pos;
        auto at = offset();
        d       = integer();
        if (d == 0) {
          throw syntax_error("zero denominator", at);
        }
      }
      return Rational(n, d);
    }

    template <typename T, typename F>
    std::vector<T> bracketed_list(F&& item) {
      std::vector<T> r;
      expect('[');
      if (accept(']')) {
        return r;
      }
      do {
        r.push_back(item());
      } while (accept(','));
      expect(']');
      return r;
    }

   private:
    std::string_view _text;
    std::size_t      _pos = 0;
  };

  template <typename Instance>
  struct Grammar;

  ////////////////////////////////////////////////////////////////////////
  // power-affine
  ////////////////////////////////////////////////////////////////////////

  template <>
  struct Grammar<PowerAffine> {
    static PowerAffineMap element(Cursor& c, PowerAffine const&) {
      BigInt m = 1;
      if (c.peek() != 'x') {
        m = c.integer();
        c.expect('*');
      }
      c.expect('x');
      std::uint64_t n = 1;
      if (c.accept('^')) {
        n = c.natural();
      }
      return PowerAffineMap(m, n);
    }

    static BigInt point(Cursor& c, PowerAffine const&) {
      auto n = c.integer();
      if (n < 1) {
        throw usage_error("power-affine points are positive integers");
      }
      return n;
    }

    static std::string print(PowerAffineMap const& f) {
      return f.m.str() + "*x^" + std::to_string(f.n);
    }

    static std::string print(BigInt const& x) {
      return x.str();
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // affine-lattice
  ////////////////////////////////////////////////////////////////////////

  template <>
  struct Grammar<AffineLattice> {
    static IntVector vector(Cursor& c) {
      return c.bracketed_list<BigInt>([&c] { return c.integer(); });
    }

    static AffineLatticeMap element(Cursor& c, AffineLattice const& inst) {
      c.expect("aff");
      c.expect('(');
      auto rows = c.bracketed_list<IntVector>([&c] { return vector(c); });
      c.expect(',');
      auto at = c.offset();
      auto b  = vector(c);
      c.expect(')');
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw syntax_error("matrix must be square", at);
        }
      }
      if (rows.size() != inst.dim()) {
        throw usage_error("affine map of dimension "
                          + std::to_string(rows.size())
                          + " in a dimension " + std::to_string(inst.dim())
                          + " instance");
      }
      return AffineLatticeMap(IntMatrix(rows), std::move(b));
    }

    static IntVector point(Cursor& c, AffineLattice const& inst) {
      auto x = vector(c);
      if (x.size() != inst.dim()) {
        throw usage_error("point of dimension " + std::to_string(x.size())
                          + " in a dimension " + std::to_string(inst.dim())
                          + " instance");
      }
      return x;
    }

    static std::string print(IntVector const& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].str();
      }
      return s + "]";
    }

    static std::string print(AffineLatticeMap const& f) {
      std::string s = "aff([";
      auto const& M = f.matrix();
      for (std::size_t i = 0; i < M.dim(); ++i) {
        IntVector row;
        for (std::size_t j = 0; j < M.dim(); ++j) {
          row.push_back(M.at(i, j));
        }
        s += (i ? "," : "") + print(row);
      }
      return s + "]," + print(f.offset()) + ")";
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // dyadic-steps
  ////////////////////////////////////////////////////////////////////////

  template <>
  struct Grammar<DyadicSteps> {
    static DyadicStepMap element(Cursor& c, DyadicSteps const& inst) {
      std::optional<DyadicStepMap> acc;
      while (true) {
        auto ch = c.peek();
        if (ch != 't' && ch != 'd') {
          break;
        }
        c.accept(ch);
        std::uint64_t k = 1;
        if (c.accept('^')) {
          k = c.natural();
        }
        auto letter = ch == 't' ? DyadicStepMap(k, 0) : DyadicStepMap(0, k);
        acc         = acc ? inst.compose(*acc, letter) : letter;
      }
      if (!acc) {
        c.fail("expected a word in t and d");
      }
      return *acc;
    }

    static StepFunction point(Cursor& c, DyadicSteps const&) {
      return StepFunction(
          c.bracketed_list<Rational>([&c] { return c.rational(); }));
    }

    static std::string print(DyadicStepMap const& f) {
      return "t^" + f.m.str() + " d^" + std::to_string(f.n);
    }

    static std::string print(StepFunction const& x) {
      std::string s = "[";
      auto const& v = x.coefficients();
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + to_string(v[i]);
      }
      return s + "]";
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // tower
  ////////////////////////////////////////////////////////////////////////

  template <>
  struct Grammar<Tower> {
    static TowerMap element(Cursor& c, Tower const& inst) {
      std::optional<TowerMap> acc;
      while (true) {
        auto     ch = c.peek();
        TowerMap letter;
        if (ch == 'F') {
          c.accept('F');
          std::uint64_t k = 1;
          if (c.accept('^')) {
            k = c.natural();
          }
          letter = TowerMap::Phi(k);
        } else if (ch == 'P') {
          c.accept('P');
          auto at    = c.offset();
          auto level = c.natural();
          if (level == 0) {
            throw syntax_error("Psi levels start at 1", at);
          }
          std::uint64_t k = 1;
          if (c.accept('^')) {
            k = c.natural();
          }
          letter = TowerMap::Psi(level, k);
        } else {
          break;
        }
        acc = acc ? inst.compose(*acc, letter) : letter;
      }
      if (!acc) {
        c.fail("expected a word in F and P<level>");
      }
      return *acc;
    }

    static TowerPoint point(Cursor& c, Tower const&) {
      auto payload = c.integer();
      c.expect('@');
      auto at    = c.offset();
      auto level = c.integer();
      if (level < 1) {
        throw usage_error("tower levels start at 1");
      }
      if (level > BigInt(std::numeric_limits<std::int64_t>::max())) {
        throw syntax_error("level out of range", at);
      }
      return TowerPoint{level.convert_to<std::int64_t>(), payload};
    }

    static std::string print(TowerMap const& f) {
      std::string s;
      for (auto const& [level, e] : f.psi()) {
        s += "P" + std::to_string(level) + "^" + std::to_string(e) + " ";
      }
      return s + "F^" + std::to_string(f.phi());
    }

    static std::string print(TowerPoint const& x) {
      return x.payload.str() + "@" + std::to_string(x.level);
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Generic entry points
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename T, typename F>
    T parse_all(std::string_view text, F&& f) {
      Cursor c(text);
      T      value = f(c);
      if (!c.at_end()) {
        c.fail("unexpected trailing input");
      }
      return value;
    }
  }  // namespace detail

  template <OreInstance I>
  typename I::element_type parse_element(std::string_view text, I const& inst) {
    return detail::parse_all<typename I::element_type>(
        text, [&inst](Cursor& c) { return Grammar<I>::element(c, inst); });
  }

  template <OreInstance I>
  typename I::point_type parse_point(std::string_view text, I const& inst) {
    return detail::parse_all<typename I::point_type>(
        text, [&inst](Cursor& c) { return Grammar<I>::point(c, inst); });
  }

  template <OreInstance I>
  pq_t<I> parse_pq(Cursor& c, I const& inst) {
    c.expect("pq");
    c.expect('(');
    auto x = Grammar<I>::point(c, inst);
    c.expect(';');
    auto f = Grammar<I>::element(c, inst);
    c.expect(')');
    return {std::move(x), std::move(f)};
  }

  template <OreInstance I>
  pq_t<I> parse_pq(std::string_view text, I const& inst) {
    return detail::parse_all<pq_t<I>>(
        text, [&inst](Cursor& c) { return parse_pq(c, inst); });
  }

  template <OreInstance I>
  fraction_t<I> parse_fraction(Cursor& c, I const& inst) {
    c.expect("frac");
    c.expect('(');
    auto den = Grammar<I>::element(c, inst);
    c.expect(',');
    auto num = Grammar<I>::element(c, inst);
    c.expect(')');
    return {std::move(den), std::move(num)};
  }

  template <OreInstance I>
  fraction_t<I> parse_fraction(std::string_view text, I const& inst) {
    return detail::parse_all<fraction_t<I>>(
        text, [&inst](Cursor& c) { return parse_fraction(c, inst); });
  }

  template <OreInstance I>
  std::string print_element(typename I::element_type const& f) {
    return Grammar<I>::print(f);
  }

  template <OreInstance I>
  std::string print_point(typename I::point_type const& x) {
    return Grammar<I>::print(x);
  }

  template <OreInstance I>
  std::string print_pq(pq_t<I> const& p) {
    return "pq(" + Grammar<I>::print(p.numerator) + "; "
           + Grammar<I>::print(p.denominator) + ")";
  }

  template <OreInstance I>
  std::string print_fraction(fraction_t<I> const& F) {
    return "frac(" + Grammar<I>::print(F.den) + ", "
           + Grammar<I>::print(F.num) + ")";
  }

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_GRAMMAR_HPP_
