#pragma once

#include <stdexcept>
#include <string>

namespace fakeclass {

// field outside what the exact engines handle (non-abelian without Hecke data)
class UnsupportedField : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed or missing database content
class DatabaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// an interval comparison that stayed inconclusive after the precision retry
class Undecided : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fakeclass
