#pragma once

#include <stdexcept>
#include <string>

namespace kostka {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input values (not partitions, pairs outside the cone, bad sequences).
class InvalidPartition : public Error { using Error::Error; };
class InvalidPair : public Error { using Error::Error; };
class InvalidSequence : public Error { using Error::Error; };
class InvalidInstance : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class WidthTooSmall : public Error { using Error::Error; };
class NotAWitness : public Error { using Error::Error; };

// Desk-scale caps on the exhaustive searches.
class SizeCapExceeded : public Error { using Error::Error; };
class WidthCapExceeded : public Error { using Error::Error; };
class LengthCapExceeded : public Error { using Error::Error; };
class RankCapExceeded : public Error { using Error::Error; };

// Internal consistency failures: a theorem-backed check did not hold.
// These indicate a bug, never bad user input.
class AssertionFailure : public Error { using Error::Error; };
class MalformedStarMatrix : public AssertionFailure { using AssertionFailure::AssertionFailure; };
class InconsistentExtremalityTests : public AssertionFailure {
    using AssertionFailure::AssertionFailure;
};
class OverflowError : public AssertionFailure { using AssertionFailure::AssertionFailure; };

inline void ensure(bool cond, const std::string& what)
{
    if (!cond)
        throw AssertionFailure(what);
}

}  // namespace kostka
