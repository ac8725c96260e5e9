#pragma once

#include <stdexcept>
#include <string>

namespace csfcat {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotATree : public Error {
public:
    explicit NotATree(const std::string& what) : Error(what) {}
};

class BadLabel : public Error {
public:
    explicit BadLabel(const std::string& what) : Error(what) {}
};

class NoTrunk : public Error {
public:
    explicit NoTrunk(const std::string& what) : Error(what) {}
};

class BoundExceeded : public Error {
public:
    explicit BoundExceeded(const std::string& what) : Error(what) {}
};

class EdgeNotInTree : public Error {
public:
    explicit EdgeNotInTree(const std::string& what) : Error(what) {}
};

class WeightMismatch : public Error {
public:
    explicit WeightMismatch(const std::string& what) : Error(what) {}
};

class CoefficientOverflow : public Error {
public:
    explicit CoefficientOverflow(const std::string& what) : Error(what) {}
};

class BadExponent : public Error {
public:
    explicit BadExponent(const std::string& what) : Error(what) {}
};

class IdentityComposition : public Error {
public:
    explicit IdentityComposition(const std::string& what) : Error(what) {}
};

class BadComposition : public Error {
public:
    explicit BadComposition(const std::string& what) : Error(what) {}
};

class NotAProperQCaterpillar : public Error {
public:
    explicit NotAProperQCaterpillar(const std::string& what) : Error(what) {}
};

class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace csfcat
