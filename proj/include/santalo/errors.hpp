#pragma once

#include <stdexcept>
#include <string>

namespace santalo {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DegenerateBasis : public Error {
public:
    explicit DegenerateBasis(const std::string& msg = "generator matrix is singular")
        : Error(msg) {}
};

class NonZeroApex : public Error {
public:
    explicit NonZeroApex(const std::string& msg = "cone apex must be the origin")
        : Error(msg) {}
};

class MalformedTree : public Error {
public:
    explicit MalformedTree(const std::string& msg) : Error(msg) {}
};

class FormNotCentered : public Error {
public:
    explicit FormNotCentered(const std::string& msg = "affine form does not vanish at the tree center")
        : Error(msg) {}
};

class ZeroNormal : public Error {
public:
    explicit ZeroNormal(const std::string& msg = "hyperplane normal is zero")
        : Error(msg) {}
};

class EmptySupport : public Error {
public:
    explicit EmptySupport(const std::string& msg = "measure has empty support")
        : Error(msg) {}
};

class DirectionInHyperplane : public Error {
public:
    explicit DirectionInHyperplane(const std::string& msg = "direction lies in the hyperplane")
        : Error(msg) {}
};

class NonIntegrable : public Error {
public:
    explicit NonIntegrable(const std::string& msg = "weight quadrature failed to converge")
        : Error(msg) {}
};

class SupportOutsideOrthant : public Error {
public:
    explicit SupportOutsideOrthant(const std::string& msg = "field support leaves the positive orthant")
        : Error(msg) {}
};

class OriginNotInterior : public Error {
public:
    explicit OriginNotInterior(const std::string& msg = "origin is not strictly interior")
        : Error(msg) {}
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(const std::string& msg) : Error(msg) {}
};

class DegenerateBody : public Error {
public:
    explicit DegenerateBody(const std::string& msg = "polytope is not full-dimensional")
        : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

} // namespace santalo
