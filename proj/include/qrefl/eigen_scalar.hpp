#ifndef QREFL_EIGEN_SCALAR_HPP
#define QREFL_EIGEN_SCALAR_HPP

#include <Eigen/Core>

#include "qrefl/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<qrefl::Scalar> : GenericNumTraits<qrefl::Scalar> {
    using Real = qrefl::Scalar;
    using NonInteger = qrefl::Scalar;
    using Nested = qrefl::Scalar;
    using Literal = qrefl::Scalar;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 100,
        MulCost = 100
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // QREFL_EIGEN_SCALAR_HPP
