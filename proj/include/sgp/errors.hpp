#pragma once

#include <stdexcept>
#include <string>

namespace sgp {

/// Shape mismatch between matrices, vectors or point coordinates.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the domain of an operation (empty index set, bad family, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The exhaustive checker was asked to walk more points than it is allowed to.
class OracleBoundError : public std::runtime_error {
public:
    explicit OracleBoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (JSON documents, rational literals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgp
