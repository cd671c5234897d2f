#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace offsetsing {

using Int = mpz_class;
using Rat = mpq_class;

// Bad user input (curve files, CLI arguments). Maps to exit code 3.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The offset splits into two components; the method does not apply. Exit code 2.
class ReducibleOffsetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Exit code 4.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bit length of |n|; 0 for n = 0.
std::size_t bit_length(const Int& n);

// Accepts "p/q", integers and plain decimals ("0.3" -> 3/10).
Rat parse_rat(std::string_view text);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

double to_double(const Rat& q);

// floor(q * 2^k) / 2^k and the matching ceiling.
Rat round_down(const Rat& q, unsigned bits);
Rat round_up(const Rat& q, unsigned bits);

int sign(const Int& n);
int sign(const Rat& q);

}  // namespace offsetsing
