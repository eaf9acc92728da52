#pragma once

/*
 * Expression grammar for polynomials:
 *
 *   expr     := ('+'|'-')? term (('+'|'-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := base ('^' uint)?
 *   base     := rational | 'sqrt' '(' uint ')' | var | '(' expr ')'
 *   rational := int ('/' uint)?
 *   var      := 'x' uint | 'x' | 'y' | 'z' | 'w'
 *
 * Implicit multiplication is not supported.  x..w alias x1..x4; x<i> is
 * variable i (1-based).  Failures raise ParseError with a byte offset and the
 * expected-token set.
 *
 * Map sources:
 *
 *   source := name | 'map(' expr {',' expr} ')'
 *           | 'diagonal(' source ',' source ',' rational ')'
 *           | 'product(' source ',' source ',' rational ')'
 *           | 'dstack(' source ',' source ')'
 *           | 'xg(' source ')' | 'tmap(' source ')' | 'rmul(' source ',' uint ')'
 *
 * where name is a gallery name, optionally prefixed "gallery:".
 */

#include <string>

#include "sphmap/polymap.hpp"

namespace sphmap {

// nvars < 0 infers the variable count from the highest index used.
Polynomial parse_polynomial(const std::string& text, int nvars = -1);

Rational parse_rational(const std::string& text);

struct MapSource {
    PolyMap map;
    SphereMapMeta meta;
    std::string description;
};

MapSource parse_map_source(const std::string& text);

}  // namespace sphmap
