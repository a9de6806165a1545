#pragma once

#include <stdexcept>
#include <string>

#include "lf/monodromy.hpp"

namespace lf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"genus":2,"base_genus":0,"order":"application","twists":[{"base":"c1","conj":["t3","T2"]}]}
// "order" is optional; the stored list is always in application order.
Factorization parse_factorization(const std::string& text);
std::string serialize(const Factorization& f);

// Parses "t3"/"T3"/"s1"/"S1" for the given genus.
Twist parse_twist_token(const std::string& tok, int genus);
// Whitespace- or comma-separated tokens.
TwistWord parse_twist_word(const std::string& text, int genus);

// "catalog:<name>" or a file path.
Factorization load_source(const std::string& src);
void save_factorization(const Factorization& f, const std::string& path);

}  // namespace lf
