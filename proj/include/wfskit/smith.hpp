#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wfskit {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Smith normal form U * A * V = D with U, V unimodular and the diagonal of D
/// nonnegative, each entry dividing the next.
template <typename Scalar>
struct SmithForm {
  IntMatrix<Scalar> D;
  IntMatrix<Scalar> U;
  IntMatrix<Scalar> V;
  IntMatrix<Scalar> U_inv;
  IntMatrix<Scalar> V_inv;
  Eigen::Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar floor_div(Scalar a, Scalar b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <typename Scalar>
void checked(Scalar value) {
  constexpr Scalar limit = Scalar(1) << (sizeof(Scalar) * 8 / 2 - 2);
  if (value > limit || value < -limit) throw std::overflow_error("Smith normal form coefficient overflow");
}

}  // namespace detail

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  SmithForm<Scalar> sf;
  IntMatrix<Scalar>& A = sf.D;
  A = input;
  const Index rows = A.rows(), cols = A.cols();
  sf.U = IntMatrix<Scalar>::Identity(rows, rows);
  sf.U_inv = IntMatrix<Scalar>::Identity(rows, rows);
  sf.V = IntMatrix<Scalar>::Identity(cols, cols);
  sf.V_inv = IntMatrix<Scalar>::Identity(cols, cols);

  // Row op: row_i += k * row_j  (U <- E U, U_inv <- U_inv E^-1).
  auto add_row = [&](Index i, Index j, Scalar k) {
    A.row(i) += k * A.row(j);
    sf.U.row(i) += k * sf.U.row(j);
    sf.U_inv.col(j) -= k * sf.U_inv.col(i);
  };
  auto add_col = [&](Index i, Index j, Scalar k) {
    A.col(i) += k * A.col(j);
    sf.V.col(i) += k * sf.V.col(j);
    sf.V_inv.row(j) -= k * sf.V_inv.row(i);
  };
  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    A.row(i).swap(A.row(j));
    sf.U.row(i).swap(sf.U.row(j));
    sf.U_inv.col(i).swap(sf.U_inv.col(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    A.col(i).swap(A.col(j));
    sf.V.col(i).swap(sf.V.col(j));
    sf.V_inv.row(i).swap(sf.V_inv.row(j));
  };
  auto negate_row = [&](Index i) {
    A.row(i) *= Scalar(-1);
    sf.U.row(i) *= Scalar(-1);
    sf.U_inv.col(i) *= Scalar(-1);
  };

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index c = t; c < cols; ++c)
      for (Index r = t; r < rows; ++r) {
        Scalar v = A(r, c) < 0 ? -A(r, c) : A(r, c);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (Index r = t + 1; r < rows; ++r) {
        if (A(r, t) == 0) continue;
        add_row(r, t, -detail::floor_div(A(r, t), A(t, t)));
        if (A(r, t) != 0) {
          clean = false;
          swap_rows(t, r);
        }
      }
      for (Index c = t + 1; c < cols; ++c) {
        if (A(t, c) == 0) continue;
        add_col(c, t, -detail::floor_div(A(t, c), A(t, t)));
        if (A(t, c) != 0) {
          clean = false;
          swap_cols(t, c);
        }
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      bool divides = true;
      for (Index r = t + 1; r < rows && divides; ++r)
        for (Index c = t + 1; c < cols; ++c)
          if (A(r, c) % A(t, t) != 0) {
            add_row(t, r, Scalar(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A(t, t) < 0) negate_row(t);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) detail::checked(A(r, c));
  }
  sf.rank = t;
  return sf;
}

/// Integer solution x of A x = b, if one exists.
template <typename Scalar>
std::optional<IntVector<Scalar>> solve_integer(const SmithForm<Scalar>& sf, const IntVector<Scalar>& b) {
  IntVector<Scalar> c = sf.U * b;
  IntVector<Scalar> y = IntVector<Scalar>::Zero(sf.V.rows());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i < sf.rank) {
      if (c(i) % sf.D(i, i) != 0) return std::nullopt;
      y(i) = c(i) / sf.D(i, i);
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  return IntVector<Scalar>(sf.V * y);
}

/// Columns spanning the integer kernel of the factored matrix.
template <typename Scalar>
IntMatrix<Scalar> kernel_basis(const SmithForm<Scalar>& sf) {
  const Eigen::Index cols = sf.V.cols();
  return sf.V.rightCols(cols - sf.rank);
}

}  // namespace wfskit
