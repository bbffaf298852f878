// Generated by tests/oracle/nichols_oracle.py; do not edit.
// Symmetrizer ranks at q = 2/3, q13 = 5/7, q23 = 3/11, a = -4/5;
// PBW series by sympy expansion.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace frozen {

inline const std::map<std::string, std::vector<long long>> symmetrizer_dims = {
    {"E3-", {1, 4, 8, 13, 20, 28}},
    {"E3+", {1, 4, 9, 18, 33}},
    {"Emn(+,+)", {1, 4, 10, 20}},
    {"S20", {1, 4, 8, 12, 16}},
    {"E+", {1, 3, 5, 7, 8, 8}},
    {"S1p(-1/2)", {1, 4, 10, 20, 33}},
    {"V(-1,3)", {1, 3, 7, 16, 35, 75, 158}},
    {"V(-1,2)", {1, 2, 3, 4, 5, 6, 7}},
    {"V(1,2)", {1, 2, 3, 4, 5, 6, 7}},
};

inline const std::map<std::string, std::vector<long long>> pbw_series = {
    {"E3-", {1, 4, 8, 13, 20, 28, 36, 44, 52, 60, 68}},
    {"E3+", {1, 4, 9, 18, 33, 55, 87, 131, 189, 265, 361}},
    {"E+", {1, 3, 5, 7, 8, 8, 8, 8, 8, 8, 8}},
    {"E-", {1, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4}},
    {"Estar", {1, 3, 5, 8, 12, 16, 20, 24, 28, 32, 36}},
    {"Emn(+,+)", {1, 4, 10, 20, 33, 48, 64, 80, 96, 112, 128}},
    {"Emn(+,-)", {1, 4, 9, 16, 24, 32, 40, 48, 56, 64, 72}},
    {"Emn(-,+)", {1, 4, 9, 16, 24, 32, 40, 48, 56, 64, 72}},
    {"Emn(-,-)", {1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40}},
    {"Einf", {1, 4, 10, 22, 42, 73, 120, 187, 280, 406, 572}},
    {"S20", {1, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40}},
    {"S1p(-1/2)", {1, 4, 10, 20, 33, 48, 64, 80, 96, 112, 128}},
    {"S1p(-1)", {1, 4, 10, 22, 43, 76, 125, 194, 287, 408, 561}},
    {"S1m", {1, 4, 10, 22, 43, 76, 125, 194, 287, 408, 561}},
};

} // namespace frozen
