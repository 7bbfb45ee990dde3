#pragma once

#include <stdexcept>
#include <string>

namespace kss {

/// Base class for every error raised by the library.
class KssError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominator : public KssError {
public:
    ZeroDenominator() : KssError("zero denominator") {}
};

class DimensionMismatch : public KssError {
public:
    using KssError::KssError;
};

class IndexOutOfRange : public KssError {
public:
    using KssError::KssError;
};

class NotLogFano : public KssError {
public:
    using KssError::KssError;
};

}  // namespace kss
