#ifndef QREFL_LINALG_HPP
#define QREFL_LINALG_HPP

#include "qrefl/eigen_scalar.hpp"
#include "qrefl/scalar.hpp"
#include "qrefl/tensor.hpp"

namespace qrefl {

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = Vector<Scalar>;
using Operator = TensorOperator<Scalar>;
using OperatorVector = TensorVector<Scalar>;

// Bareiss elimination on the matrix with each row's denominators cleared.
Scalar det_fraction_free(const ScalarMatrix& a);
inline Scalar det_fraction_free(const Operator& a) { return det_fraction_free(a.matrix()); }

// Gauss-Jordan; throws SingularMatrix.
ScalarMatrix inverse(const ScalarMatrix& a);
inline Operator inverse(const Operator& a) { return Operator(a.n(), a.legs(), inverse(a.matrix())); }

ScalarMatrix diagonal_matrix(const std::vector<Scalar>& diag);
ScalarMatrix scaled(const Scalar& c, const ScalarMatrix& a);

}  // namespace qrefl

#endif  // QREFL_LINALG_HPP
