#pragma once

#include "quadrics/kclass.hpp"

#include <stdexcept>
#include <string>

namespace quadrics {

// Parser for the K-class expression grammar shared by the CLI and the tests:
//
//   expr := term (('+'|'-') term)*
//   term := [int '*'] atom ['^' int]
//   atom := 'O(' int ')' | 'O(' int ',' int ')' | 'S(' int ')' | 'S'
//         | 'T4' | 'Om4' | 'O_H' | 'O_L' | 'k(p)'
//
// Whitespace is insignificant. 'A^n' means the n-fold direct sum of A. 'O'
// without an argument list is accepted as O(0) on the threefold and O(0,0)
// on the surface.

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KClass3 parse_kclass3(const std::string& text);
KClass2 parse_kclass2(const std::string& text);

}  // namespace quadrics
