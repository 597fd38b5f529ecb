#pragma once

#include "fusion/category.hpp"

namespace fusion {

/// Datum of the tensor product of two vertex operator algebras.
///
/// Labels are all pairs of indecomposables, flattened into tuples in
/// left-to-right factor order. A pair is simple, projective, or a projective
/// cover exactly when both components are. Composition multisets, twists
/// (added mod 1), duals and hom dimensions are taken componentwise, and the
/// fusion of two pairs is the componentwise fusion expanded bilinearly.
/// Fusion is computed on demand and memoized.
///
/// Every pair of indecomposables is treated as indecomposable: endomorphism
/// algebras multiply, and a tensor product of local algebras with
/// one-dimensional residue fields is local.
///
/// Both inputs must pass validation (InvalidDatum otherwise).
CategoryPtr product(CategoryPtr left, CategoryPtr right);

/// Left-nested iterated product with d-tuple labels; power(cat, 1) is cat.
/// Throws std::invalid_argument for d == 0.
CategoryPtr power(CategoryPtr cat, unsigned d);

}  // namespace fusion
