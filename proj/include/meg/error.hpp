#pragma once

#include <stdexcept>
#include <string>

namespace meg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex ids, self-loops, duplicate edges, bad parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is not connected") {}
    using Error::Error;
};

/// A configured size or search limit would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class UnrecognizedClass : public Error {
public:
    using Error::Error;
};

class CountOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace meg
