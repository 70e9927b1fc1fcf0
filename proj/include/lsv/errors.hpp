#pragma once

#include <stdexcept>
#include <string>

namespace lsv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dimension / shape disagreement between arguments
struct DimensionMismatch : Error {
    using Error::Error;
};

// base point does not satisfy the generators
struct NotOnVariety : Error {
    using Error::Error;
};

// Jacobian rank at the point differs from the declared codimension
struct SingularOrExcessCodim : Error {
    using Error::Error;
};

// the candidate space is not tangent to the variety at the base point
struct NotOsculatingOrder1 : Error {
    using Error::Error;
};

// the tangent space of L is not in the base locus of the quadric system
struct NotOsculatingOrder2 : Error {
    using Error::Error;
};

// a two-quadric system that does not vanish on the given hyperplane
struct NotAPencilOnHyperplane : Error {
    using Error::Error;
};

// the quadric system does not pair the distinguished block with a
// complementary block nondegenerately
struct PairingDegenerate : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

}  // namespace lsv
