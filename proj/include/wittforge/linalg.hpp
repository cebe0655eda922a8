#pragma once

// Small dense exact linear algebra over Q and Z.

#include "wittforge/qarith.hpp"

#include <vector>

namespace wittforge::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;
using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;

/// Basis of {x : rows * x = 0}, with `ncols` unknowns. Basis vectors are
/// e_free - (pivot contributions), one per free column, in column order.
Mat nullspace(const Mat& rows, std::size_t ncols);

/// Diagonal entries of a congruent diagonalization of a nondegenerate
/// symmetric matrix. Throws DomainError if the matrix is singular.
Vec diagonalize_symmetric(Mat g);

/// Gram matrix of diag(weights) restricted to span(basis).
Mat restricted_gram(const Vec& weights, const Mat& basis);

/// Inverse of a square nonsingular matrix.
Mat inverse(Mat m);

Rational dot(const Vec& x, const Vec& y);

/// Row-style Hermite normal form of the lattice spanned by `rows`:
/// upper echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IMat hermite_normal_form(IMat rows);

}  // namespace wittforge::linalg
