#pragma once

#include <stdexcept>
#include <string>

namespace mi {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (empty generator sets, dimension
/// mismatches, non-positive weights, negative entries, bad JSON fields).
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// Requested operation is only supported up to a fixed ambient dimension.
class UnsupportedDimension : public Error {
public:
  explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

/// Restriction of an ideal to a coordinate subspace contained in its zero
/// locus: the image ideal vanishes and the restriction hypothesis fails.
class RestrictionVanishes : public Error {
public:
  explicit RestrictionVanishes(const std::string& what) : Error(what) {}
};

/// A fan passed as a resolution is not smooth or does not refine the
/// normal fan of the region it is supposed to resolve.
class InvalidResolution : public Error {
public:
  explicit InvalidResolution(const std::string& what) : Error(what) {}
};

/// A graded family member is not primary to the maximal monomial ideal, so
/// colength-based volume data diverges.
class InfiniteVolume : public Error {
public:
  explicit InfiniteVolume(const std::string& what) : Error(what) {}
};

} // namespace mi
