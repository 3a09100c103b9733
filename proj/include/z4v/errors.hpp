#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace z4v {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define Z4V_ERROR(Name)                          \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

Z4V_ERROR(ParseError);
Z4V_ERROR(LengthMismatch);
Z4V_ERROR(DimensionMismatch);
Z4V_ERROR(ModulusMismatch);
Z4V_ERROR(NonUnitLeadingCoeff);
Z4V_ERROR(EvenLength);
Z4V_ERROR(NotAFactor);
Z4V_ERROR(NotCoprime);
Z4V_ERROR(BadFactorization);
Z4V_ERROR(NotIdempotent);
Z4V_ERROR(NotFree);
Z4V_ERROR(BadPrime);
Z4V_ERROR(WrongCode);
Z4V_ERROR(NotSymmetric);
Z4V_ERROR(BadBorder);
Z4V_ERROR(LimitExceeded);
Z4V_ERROR(NonIntegerTransform);

#undef Z4V_ERROR

// Thrown when an enumeration would exceed the codeword budget.
class CapExceeded : public Error {
public:
    CapExceeded(unsigned log2_size, std::uint64_t cap)
        : Error("code has 2^" + std::to_string(log2_size) +
                " codewords, above the enumeration cap of " + std::to_string(cap)),
          log2_size_(log2_size), cap_(cap) {}

    unsigned log2_size() const noexcept { return log2_size_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    unsigned log2_size_;
    std::uint64_t cap_;
};

} // namespace z4v
