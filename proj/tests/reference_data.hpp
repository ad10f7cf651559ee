#pragma once

// Worked cases transcribed as data: the 40 listed solution pairs for
// degree 5 with a single 5-fold ramification point, and their grouping.

#include <string>
#include <utility>
#include <vector>

namespace reference {

struct Sheet {
  const char* alpha;
  const char* beta;
};

// Sheet k (1-based) is g3d5_sheets[k - 1].
inline const std::vector<Sheet> g3d5_sheets = {
    {"(1 2)(3 4)", "(1 2 3 4 5)"}, {"(1 2)(3 5)", "(1 2 3 4 5)"}, {"(1 2 4)", "(1 2 3 4 5)"},
    {"(1 4 2)", "(1 2 3 4 5)"},    {"(1 2 4 5 3)", "(1 2 3 4 5)"}, {"(1 3 2 5 4)", "(1 2 3 4 5)"},
    {"(1 4)(2 5)", "(1 2 3)"},     {"(1 2 4 3 5)", "(1 2 3)"},     {"(1 3 4 2 5)", "(1 2 3)"},
    {"(1 5)(2 3)", "(1 2)(3 4)"},  {"(1 3 5)", "(1 2)(3 4)"},      {"(1 2 3 4 5)", "(1 2)(3 4)"},
    {"(1 2 3 5 4)", "(1 2)(3 4)"}, {"(1 2 4 3)", "(1 2 3 4 5)"},   {"(1 3 4 2)", "(1 2 3 4 5)"},
    {"(1 5)(2 3)", "(1 2 3 4)"},   {"(1 5)(2 4)", "(1 2 3 4)"},    {"(1 5)(3 4)", "(1 2 3 4)"},
    {"(1 3 5)", "(1 2 3 4)"},      {"(1 2 5)(3 4)", "(1 2 3 4)"},  {"(1 5 2)(3 4)", "(1 2 3 4)"},
    {"(1 3 2 5)", "(1 2 3 4)"},    {"(1 3 5 2)", "(1 2 3 4)"},     {"(1 5 2 3)", "(1 2 3 4)"},
    {"(1 2 5 3)", "(1 2 3 4)"},    {"(1 2 4 3 5)", "(1 2 3 4)"},   {"(1 4 2 3 5)", "(1 2 3 4)"},
    {"(1 4)(2 3)", "(1 2 3)(4 5)"}, {"(1 2 4)", "(1 2 3)(4 5)"},   {"(1 3 4)", "(1 2 3)(4 5)"},
    {"(1 4 5)(2 3)", "(1 2 3)(4 5)"}, {"(1 2 4 5)", "(1 2 3)(4 5)"}, {"(1 3 4 5)", "(1 2 3)(4 5)"},
    {"(1 4 2 5)", "(1 2 3)"},      {"(1 2 4)(3 5)", "(1 2 3)"},    {"(1 4 2)(3 5)", "(1 2 3)"},
    {"(1 4 3)(2 5)", "(1 2)(3 4)"}, {"(1 3 4 5)", "(1 2)(3 4)"},   {"(1 3 5 4)", "(1 2)(3 4)"},
    {"(1 5 3 4)", "(1 2)(3 4)"},
};

// Sheet numbers per component, in the listed order.
inline const std::vector<std::vector<int>> g3d5_components = {
    {2, 10, 13},
    {1, 3, 4, 5, 6, 7, 8, 9, 11, 12},
    {14, 15, 16, 18, 22, 23, 24, 25, 26, 27, 38, 40},
    {17, 19, 20, 21, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 39},
};

// Degree 3, one triple point.
inline const std::vector<Sheet> g2d3_sheets = {
    {"(1 3)", "(1 2)"}, {"(1 2 3)", "(1 2)"}, {"(1 2)", "(1 2 3)"}};

}  // namespace reference
