#pragma once

#include <stdexcept>
#include <string>

namespace krull {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class RingMismatch : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class BothZero : public Error { public: using Error::Error; };
class ZeroElement : public Error { public: using Error::Error; };
class ZeroPolynomial : public Error { public: using Error::Error; };
class ConstantPolynomial : public Error { public: using Error::Error; };
class NotIrreducible : public Error { public: using Error::Error; };
class NotPrimitive : public Error { public: using Error::Error; };
class NotProper : public Error { public: using Error::Error; };
class NotPrimeIdeal : public Error { public: using Error::Error; };
class UnsupportedShape : public Error { public: using Error::Error; };
class InfiniteResidueField : public Error { public: using Error::Error; };
class NoIrreducibles : public Error { public: using Error::Error; };
class CapacityError : public Error { public: using Error::Error; };

} // namespace krull
