// Pseudoquotients x/f of a set X by a semigroup S of injections that satisfies
// the Ore condition (for f, g there are f', g' with f'g = g'f) and right
// cancellation (f1 g = f2 g implies f1 = f2).
//
// Everything here is generic over an *instance*: a type bundling X, S, the
// action, an Ore-witness oracle, a designated element of S used to embed X,
// and a canonical value deciding equality of classes.  The calculus
// (equivalence, embedding, extension of S to bijections of the quotient, and
// the group of left fractions) uses nothing else.

#ifndef PSEUDOQUOTIENT_CORE_HPP_
#define PSEUDOQUOTIENT_CORE_HPP_

#include <concepts>
#include <string_view>
#include <utility>

#include "exact.hpp"

namespace pseudoquotient {

  //! A pair (f', g') with f' * g == g' * f for some declared (f, g).
  template <typename Element>
  struct OreWitness {
    Element f_prime;
    Element g_prime;

    bool operator==(OreWitness const&) const = default;
  };

  //! The class x/f, represented by any (x, f).  Equality here is equality of
  //! representatives; use pq_equivalent for equality of classes.
  template <typename Point, typename Element>
  struct Pseudoquotient {
    Point   numerator;
    Element denominator;

    bool operator==(Pseudoquotient const&) const = default;
  };

  //! The bijection den~^-1 o num~ of the quotient space.  Every element of the
  //! group generated by the extended maps has this form.
  template <typename Element>
  struct GroupFraction {
    Element den;
    Element num;

    bool operator==(GroupFraction const&) const = default;
  };

  template <typename I>
  concept OreInstance = requires(I const&                       inst,
                                 typename I::element_type const& f,
                                 typename I::point_type const&   x) {
    typename I::canonical_type;
    { I::name } -> std::convertible_to<std::string_view>;
    { inst.compose(f, f) } -> std::same_as<typename I::element_type>;
    { inst.apply(f, x) } -> std::same_as<typename I::point_type>;
    {
      inst.ore_complete(f, f)
    } -> std::same_as<OreWitness<typename I::element_type>>;
    { inst.designated() } -> std::same_as<typename I::element_type>;
    {
      inst.canonical(
          Pseudoquotient<typename I::point_type, typename I::element_type>{x,
                                                                           f})
    } -> std::same_as<typename I::canonical_type>;
    requires std::equality_comparable<typename I::element_type>;
    requires std::equality_comparable<typename I::point_type>;
    requires std::equality_comparable<typename I::canonical_type>;
  };

  template <OreInstance I>
  using pq_t = Pseudoquotient<typename I::point_type, typename I::element_type>;

  template <OreInstance I>
  using witness_t = OreWitness<typename I::element_type>;

  template <OreInstance I>
  using fraction_t = GroupFraction<typename I::element_type>;

  ////////////////////////////////////////////////////////////////////////
  // Ore witnesses
  ////////////////////////////////////////////////////////////////////////

  //! (f', g') with f' g = g' f.
  template <OreInstance I>
  witness_t<I> ore_complete(I const&                        inst,
                            typename I::element_type const& f,
                            typename I::element_type const& g) {
    return inst.ore_complete(f, g);
  }

  template <OreInstance I>
  bool is_ore_witness(I const&                        inst,
                      typename I::element_type const& f,
                      typename I::element_type const& g,
                      witness_t<I> const&             w) {
    return inst.compose(w.f_prime, g) == inst.compose(w.g_prime, f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Pseudoquotients
  ////////////////////////////////////////////////////////////////////////

  //! Decides (x, f) ~ (y, g) given one witness (f', g') for (f, g): the
  //! classes agree iff f' y == g' x.  Right cancellation makes the answer
  //! independent of which witness is used.
  template <OreInstance I>
  bool pq_equivalent_with(I const&            inst,
                          pq_t<I> const&      p,
                          pq_t<I> const&      q,
                          witness_t<I> const& w) {
    return inst.apply(w.f_prime, q.numerator)
           == inst.apply(w.g_prime, p.numerator);
  }

  template <OreInstance I>
  bool pq_equivalent(I const& inst, pq_t<I> const& p, pq_t<I> const& q) {
    if (p == q) {
      return true;
    }
    return pq_equivalent_with(
        inst, p, q, inst.ore_complete(p.denominator, q.denominator));
  }

  //! x/f == gx/gf.
  template <OreInstance I>
  pq_t<I> pq_left_multiply(I const&                        inst,
                           pq_t<I> const&                  p,
                           typename I::element_type const& g) {
    return {inst.apply(g, p.numerator), inst.compose(g, p.denominator)};
  }

  //! x -> ex/e for the instance's designated e; the class does not depend on
  //! the choice of e.
  template <OreInstance I>
  pq_t<I> embed(I const& inst, typename I::point_type const& x) {
    auto e = inst.designated();
    return {inst.apply(e, x), e};
  }

  template <OreInstance I>
  pq_t<I> embed_with(I const&                        inst,
                     typename I::point_type const&   x,
                     typename I::element_type const& f) {
    return {inst.apply(f, x), f};
  }

  template <OreInstance I>
  typename I::canonical_type canonical_value(I const& inst, pq_t<I> const& p) {
    return inst.canonical(p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Extension of S to bijections of the quotient
  ////////////////////////////////////////////////////////////////////////

  //! g~(x/f) = g'x / f' using the given witness (f', g') with f' g = g' f.
  template <OreInstance I>
  pq_t<I> extend_apply_with(I const&            inst,
                            pq_t<I> const&      p,
                            witness_t<I> const& w) {
    return {inst.apply(w.g_prime, p.numerator), w.f_prime};
  }

  template <OreInstance I>
  pq_t<I> extend_apply(I const&                        inst,
                       typename I::element_type const& g,
                       pq_t<I> const&                  p) {
    return extend_apply_with(inst, p, inst.ore_complete(p.denominator, g));
  }

  //! g~^-1(x/f) = x/(fg).
  template <OreInstance I>
  pq_t<I> extend_inverse_apply(I const&                        inst,
                               typename I::element_type const& g,
                               pq_t<I> const&                  p) {
    return {p.numerator, inst.compose(p.denominator, g)};
  }

  //! The unique class xi with f~(xi) == embed(x), namely x/f.
  template <OreInstance I>
  pq_t<I> solve(I const&,
                typename I::element_type const& f,
                typename I::point_type const&   x) {
    return {x, f};
  }

  ////////////////////////////////////////////////////////////////////////
  // Group of left fractions
  ////////////////////////////////////////////////////////////////////////

  template <OreInstance I>
  fraction_t<I> frac_from_element(I const&                        inst,
                                  typename I::element_type const& g) {
    auto e = inst.designated();
    return {e, inst.compose(e, g)};
  }

  template <OreInstance I>
  fraction_t<I> frac_identity(I const& inst) {
    auto e = inst.designated();
    return {e, e};
  }

  template <OreInstance I>
  pq_t<I> frac_apply(I const& inst, fraction_t<I> const& F, pq_t<I> const& p) {
    return extend_inverse_apply(inst, F.den, extend_apply(inst, F.num, p));
  }

  //! F1 o F2.  With h num1 == k den2 we have num1~ den2~^-1 == h~^-1 k~, so
  //! F1 o F2 == (h den1)~^-1 (k num2)~.
  template <OreInstance I>
  fraction_t<I> frac_compose(I const&             inst,
                             fraction_t<I> const& F1,
                             fraction_t<I> const& F2) {
    auto [h, k] = inst.ore_complete(F2.den, F1.num);
    return {inst.compose(h, F1.den), inst.compose(k, F2.num)};
  }

  template <OreInstance I>
  fraction_t<I> frac_inverse(I const&, fraction_t<I> const& F) {
    return {F.num, F.den};
  }

  //! With u den1 == v den2, the fractions agree iff u num1 == v num2.
  template <OreInstance I>
  bool frac_equal(I const&             inst,
                  fraction_t<I> const& F1,
                  fraction_t<I> const& F2) {
    if (F1 == F2) {
      return true;
    }
    auto [u, v] = inst.ore_complete(F2.den, F1.den);
    return inst.compose(u, F1.num) == inst.compose(v, F2.num);
  }

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_CORE_HPP_
