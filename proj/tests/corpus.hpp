#pragma once

// Fifty univariate polynomials for the condition-equivalence suites. The
// list mixes fixed divisors 1, 2, 3, 6, 24 and 30, negative leading
// coefficients and constants.

#include <array>
#include <string_view>

namespace primerep_tests {

inline constexpr std::array<std::string_view, 50> kPolynomialCorpus = {
    "x",           "x+1",          "x+2",         "2*x+1",       "3*x+2",       "6*x+1",       "2*x",
    "2*x+4",       "x^2",          "x^2+1",       "x^2+x",       "x^2+x+1",     "x^2+x+2",     "x^2+x+41",
    "x^2-2",       "x^2+2",        "x^2+3",       "x^2+4*x+3",   "2*x^2+1",     "x^3+1",       "x^3+2",
    "x^3-x",       "x^3-x+1",      "x^3+x+1",     "x^3+3",       "x^4+1",       "x^4-x^2",     "x^4+x^2+1",
    "x^5-x",       "x^5-x+1",      "x^5+x^4+1",   "x^2+x+4",     "x*(x+1)*(x+2)", "x*(x+1)*(x+2)*(x+3)",
    "x^2+6*x+5",   "x^6+1",        "x^3+x^2+x+1", "4*x^2+1",     "x^2+5*x+6",   "9*x+3",       "x^2-x+1",
    "-x^2+6",      "-x+10",        "-2*x^2+x+15", "7",           "12",          "1",           "x^7-x",
    "x^2+10*x+1",  "x^4+4",
};

}  // namespace primerep_tests
