#pragma once

#include <stdexcept>
#include <string>

namespace cirng {

/// A logistic orbit reached 0 or 1 and can no longer be iterated.
class DegenerateOrbit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An invariant the generator relies on was broken at run time.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input file (Netpbm image, key file, bit file).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cirng
