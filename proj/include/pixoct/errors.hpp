#pragma once

#include <stdexcept>
#include <string>

namespace pixoct {

/// Argument outside an operation's domain (non-positive diameter, d = 1 for
/// the perimeter theorem, odd d for the compact even form, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two shapes live on different pixel-center lattices and cannot be
/// concentric.
class ParityMismatch : public std::invalid_argument {
public:
    ParityMismatch() : std::invalid_argument("shapes on incompatible lattices") {}
};

class EmptyShapeError : public std::invalid_argument {
public:
    EmptyShapeError() : std::invalid_argument("empty shape has no metrics") {}
};

/// A half-plane system whose solution set reaches the edge of the search box.
class UnboundedRegion : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lookup of a diameter that the proximity matrix does not contain.
class MissingDiameter : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace pixoct
