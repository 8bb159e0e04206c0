#pragma once

#include <string>
#include <vector>

#include "ftex/polynomial.hpp"

namespace ftex {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                             what_),
          line(line_),
          column(col_)
    {
    }
};

// poly   := term (("+"|"-") term)*
// term   := integer ("*" factor)* | factor ("*" factor)*
// factor := ident ("^" nat)?
// Integers are reduced mod p; "-" is the additive inverse mod p.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// "f; g; h" convenience splitter used by the CLI --ideal flag.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring);

// Canonical printer; parse(print(f)) == f.
std::string print_polynomial(const Polynomial& f);
std::string print_monomial(const Monomial& m, const RingPtr& ring);

bool valid_identifier(const std::string& s);

}  // namespace ftex
