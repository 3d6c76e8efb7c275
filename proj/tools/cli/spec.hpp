#pragma once

// Generator and function spec mini-language.
//
//   generator:  canonical:b,p,a | gamma | harmonic:a | file:<path.csv>
//   function g: affine-log:c,d,p | log | klog:k | identity | square | exp |
//               lgamma | file:<path.csv>
//
// Parse failures throw ParseError naming the character position.

#include <string_view>

#include "betalab/function.hpp"
#include "betalab/generator.hpp"

namespace betalab::cli {

Generator parse_generator_spec(std::string_view spec);
RealFunction parse_function_spec(std::string_view spec);

}  // namespace betalab::cli
