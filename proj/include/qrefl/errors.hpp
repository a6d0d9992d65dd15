#ifndef QREFL_ERRORS_HPP
#define QREFL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrefl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
   public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

   private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

#define QREFL_SIMPLE_ERROR(Name)         \
    class Name : public Error {          \
       public:                           \
        using Error::Error;              \
    };

QREFL_SIMPLE_ERROR(DimensionMismatch)
QREFL_SIMPLE_ERROR(BadPositions)
QREFL_SIMPLE_ERROR(SingularMatrix)
QREFL_SIMPLE_ERROR(RootOrderIncompatible)
QREFL_SIMPLE_ERROR(UnknownGenerator)
QREFL_SIMPLE_ERROR(NotProportional)
QREFL_SIMPLE_ERROR(WordTooLong)
QREFL_SIMPLE_ERROR(TooLarge)
QREFL_SIMPLE_ERROR(OddDimension)
QREFL_SIMPLE_ERROR(ZeroQdet)

#undef QREFL_SIMPLE_ERROR

}  // namespace qrefl

#endif  // QREFL_ERRORS_HPP
