// Integer affine maps x -> Mx + b on Z^n with det M != 0.  The quotient is
// Q^n: x/(M, b) is the rational solution of M xi + b = x.

#ifndef PSEUDOQUOTIENT_AFFINE_LATTICE_HPP_
#define PSEUDOQUOTIENT_AFFINE_LATTICE_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "core.hpp"
#include "exact.hpp"

namespace pseudoquotient {

  using IntVector      = std::vector<BigInt>;
  using RationalVector = std::vector<Rational>;

  //! Dense row-major square integer matrix.
  class IntMatrix {
   public:
    IntMatrix() = default;

    explicit IntMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim) {}

    explicit IntMatrix(std::vector<std::vector<BigInt>> const& rows)
        : IntMatrix(rows.size()) {
      for (std::size_t i = 0; i < _dim; ++i) {
        if (rows[i].size() != _dim) {
          throw usage_error("matrix must be square");
        }
        for (std::size_t j = 0; j < _dim; ++j) {
          at(i, j) = rows[i][j];
        }
      }
    }

    static IntMatrix
    from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
      std::vector<std::vector<BigInt>> r;
      for (auto const& row : rows) {
        r.emplace_back(row.begin(), row.end());
      }
      return IntMatrix(r);
    }

    static IntMatrix identity(std::size_t dim) {
      IntMatrix I(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        I.at(i, i) = 1;
      }
      return I;
    }

    std::size_t dim() const noexcept {
      return _dim;
    }

    BigInt& at(std::size_t i, std::size_t j) {
      return _entries[i * _dim + j];
    }

    BigInt const& at(std::size_t i, std::size_t j) const {
      return _entries[i * _dim + j];
    }

    bool operator==(IntMatrix const&) const = default;

    IntMatrix operator*(IntMatrix const& that) const {
      check_dim(that._dim);
      IntMatrix result(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        for (std::size_t k = 0; k < _dim; ++k) {
          if (at(i, k) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < _dim; ++j) {
            result.at(i, j) += at(i, k) * that.at(k, j);
          }
        }
      }
      return result;
    }

    IntVector operator*(IntVector const& v) const {
      check_dim(v.size());
      IntVector result(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        for (std::size_t j = 0; j < _dim; ++j) {
          result[i] += at(i, j) * v[j];
        }
      }
      return result;
    }

    IntMatrix scaled(BigInt const& c) const {
      IntMatrix result(*this);
      for (auto& x : result._entries) {
        x *= c;
      }
      return result;
    }

    //! Fraction-free Gaussian elimination (Bareiss); exact over Z.
    BigInt determinant() const {
      if (_dim == 0) {
        return 1;
      }
      IntMatrix a(*this);
      BigInt    sign  = 1;
      BigInt    pivot = 1;
      for (std::size_t k = 0; k + 1 < _dim; ++k) {
        if (a.at(k, k) == 0) {
          std::size_t r = k + 1;
          while (r < _dim && a.at(r, k) == 0) {
            ++r;
          }
          if (r == _dim) {
            return 0;
          }
          for (std::size_t j = 0; j < _dim; ++j) {
            std::swap(a.at(k, j), a.at(r, j));
          }
          sign = -sign;
        }
        for (std::size_t i = k + 1; i < _dim; ++i) {
          for (std::size_t j = k + 1; j < _dim; ++j) {
            a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j))
                         / pivot;
          }
        }
        pivot = a.at(k, k);
      }
      return sign * a.at(_dim - 1, _dim - 1);
    }

    //! adj(M), so that M adj(M) = det(M) I.
    IntMatrix adjugate() const {
      IntMatrix result(_dim);
      if (_dim == 1) {
        result.at(0, 0) = 1;
        return result;
      }
      for (std::size_t i = 0; i < _dim; ++i) {
        for (std::size_t j = 0; j < _dim; ++j) {
          IntMatrix minor(_dim - 1);
          for (std::size_t r = 0, mr = 0; r < _dim; ++r) {
            if (r == i) {
              continue;
            }
            for (std::size_t c = 0, mc = 0; c < _dim; ++c) {
              if (c == j) {
                continue;
              }
              minor.at(mr, mc++) = at(r, c);
            }
            ++mr;
          }
          auto cofactor = minor.determinant();
          // transpose of the cofactor matrix
          result.at(j, i) = (i + j) % 2 == 0 ? cofactor : BigInt(-cofactor);
        }
      }
      return result;
    }

   private:
    void check_dim(std::size_t d) const {
      if (d != _dim) {
        throw usage_error("dimension mismatch: " + std::to_string(_dim)
                          + " vs " + std::to_string(d));
      }
    }

    std::size_t         _dim = 0;
    std::vector<BigInt> _entries;
  };

  inline IntVector operator+(IntVector const& a, IntVector const& b) {
    if (a.size() != b.size()) {
      throw usage_error("dimension mismatch");
    }
    IntVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] += b[i];
    }
    return r;
  }

  //! x -> Mx + b.
  class AffineLatticeMap {
   public:
    AffineLatticeMap() = default;

    AffineLatticeMap(IntMatrix M, IntVector b)
        : _M(std::move(M)), _b(std::move(b)) {
      if (_M.dim() == 0) {
        throw usage_error("affine map needs dimension >= 1");
      }
      if (_b.size() != _M.dim()) {
        throw usage_error("offset length does not match matrix dimension");
      }
      if (_M.determinant() == 0) {
        throw usage_error("matrix is singular (det M = 0)");
      }
    }

    static AffineLatticeMap identity(std::size_t dim) {
      return AffineLatticeMap(IntMatrix::identity(dim), IntVector(dim));
    }

    std::size_t dim() const noexcept {
      return _M.dim();
    }

    IntMatrix const& matrix() const noexcept {
      return _M;
    }

    IntVector const& offset() const noexcept {
      return _b;
    }

    bool operator==(AffineLatticeMap const&) const = default;

   private:
    IntMatrix _M;
    IntVector _b;
  };

  class AffineLattice {
   public:
    using element_type   = AffineLatticeMap;
    using point_type     = IntVector;
    using canonical_type = RationalVector;

    static constexpr std::string_view name = "affine-lattice";

    explicit AffineLattice(std::size_t dim = 1) : _dim(dim) {
      if (dim == 0) {
        throw usage_error("affine-lattice dimension must be >= 1");
      }
    }

    std::size_t dim() const noexcept {
      return _dim;
    }

    AffineLatticeMap compose(AffineLatticeMap const& f,
                             AffineLatticeMap const& g) const {
      check(f);
      check(g);
      return AffineLatticeMap(f.matrix() * g.matrix(),
                              f.matrix() * g.offset() + f.offset());
    }

    IntVector apply(AffineLatticeMap const& f, IntVector const& x) const {
      check(f);
      check(x);
      return f.matrix() * x + f.offset();
    }

    //! For f = M1 x + b1, g = M2 x + b2 with m_i = det M_i:
    //!   f'(x) = m1 m2 M2^-1 x + m1 m2 M1^-1 b1
    //!   g'(x) = m1 m2 M1^-1 x + m1 m2 M2^-1 b2
    //! computed as m1 adj(M2) etc., so every entry is an integer.
    OreWitness<AffineLatticeMap> ore_complete(AffineLatticeMap const& f,
                                              AffineLatticeMap const& g) const {
      check(f);
      check(g);
      auto m1    = f.matrix().determinant();
      auto m2    = g.matrix().determinant();
      auto adj1  = f.matrix().adjugate();
      auto adj2  = g.matrix().adjugate();
      auto fp_M  = adj2.scaled(m1);
      auto fp_b  = adj1.scaled(m2) * f.offset();
      auto gp_M  = adj1.scaled(m2);
      auto gp_b  = adj2.scaled(m1) * g.offset();
      return {AffineLatticeMap(std::move(fp_M), std::move(fp_b)),
              AffineLatticeMap(std::move(gp_M), std::move(gp_b))};
    }

    AffineLatticeMap designated() const {
      return AffineLatticeMap::identity(_dim);
    }

    //! M^-1 (x - b) = adj(M)(x - b) / det M.
    RationalVector
    canonical(Pseudoquotient<IntVector, AffineLatticeMap> const& p) const {
      auto const& f = p.denominator;
      check(f);
      check(p.numerator);
      IntVector diff(p.numerator);
      for (std::size_t i = 0; i < _dim; ++i) {
        diff[i] -= f.offset()[i];
      }
      auto           det = f.matrix().determinant();
      auto           num = f.matrix().adjugate() * diff;
      RationalVector result(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        result[i] = make_rational(num[i], det);
      }
      return result;
    }

   private:
    void check(AffineLatticeMap const& f) const {
      if (f.dim() != _dim) {
        throw usage_error("affine map of dimension " + std::to_string(f.dim())
                          + " used in a dimension " + std::to_string(_dim)
                          + " instance");
      }
    }

    void check(IntVector const& x) const {
      if (x.size() != _dim) {
        throw usage_error("point of dimension " + std::to_string(x.size())
                          + " used in a dimension " + std::to_string(_dim)
                          + " instance");
      }
    }

    std::size_t _dim;
  };

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_AFFINE_LATTICE_HPP_
