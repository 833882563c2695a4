#pragma once

#include "support.hpp"

namespace testing {

using Factors = std::vector<std::pair<std::string, std::string>>;

// plt triples with a smooth centre C through the origin
inline const std::vector<Factors> kPltCorpus = {
    {{"(x)", "1"}},
    {{"(x)", "1"}, {"(x, y)", "1/2"}},
    {{"(x)", "1"}, {"(y)", "1/4"}, {"(x, y)", "1/4"}},
    {{"(y - x^2)", "1"}, {"(x, y)", "1/2"}},
    {{"(x)", "1"}, {"(y)", "1/2"}, {"(x, y)", "1/3"}},
    {{"(y - x^3)", "1"}, {"(x)", "1/8"}, {"(y)", "1/8"}},
    {{"(x)", "1"}, {"(y^2, x^3)", "1/3"}},
    {{"(y - x^2)", "1"}, {"(y^2 - x^3)", "1/5"}},
    {{"(x)", "1"}, {"(y)", "1/3"}, {"(y - x)", "1/3"}},
    {{"(y)", "1"}, {"(x^2, y^3)", "1/4"}},
    {{"(x + y)", "1"}, {"(x^3, y^2)", "1/3"}},
    {{"(x)", "1"}, {"(x, y^2)", "1/4"}},
    {{"(y - x^2)", "1"}, {"(x^2, y)", "1/3"}},
    {{"(x)", "1"}, {"(y)", "2/3"}},
    {{"(y + 2*x)", "1"}, {"(x*y)", "1/3"}},
    {{"(x - y^2)", "1"}, {"(x, y)", "3/4"}},
    {{"(x)", "1"}, {"(y - x^2)", "1/2"}},
    {{"(y)", "1"}, {"(y - x^2)", "1/3"}},
    {{"(x)", "1"}, {"(x^2, y^5)", "1/10"}},
    {{"(y)", "1"}, {"(x^3, x*y, y^2)", "1/4"}},
    {{"(x - y)", "1"}, {"(x^2 - y^3)", "1/4"}, {"(x, y)", "1/5"}},
    {{"(y - x^2 - x^3)", "1"}, {"(x)", "1/2"}},
};

// lc triples with mld 0
inline const std::vector<Factors> kZeroCorpus = {
    {{"(x^2, y^3)", "5/6"}},
    {{"(x*y)", "1"}},
    {{"(x, y)", "2"}},
    {{"(x^2*y + x*y^2)", "2/3"}},
    {{"(y^2 - x^3)", "5/6"}},
    {{"(x^2, y^2)", "1"}},
    {{"(x)", "1"}, {"(y)", "1"}},
    {{"(x, y^3)", "4/3"}},
    {{"(x^3, y^4)", "7/12"}},
    {{"(x)", "1/2"}, {"(y)", "1/2"}, {"(x, y)", "1"}},
    {{"(x^2 - y^2)", "1"}},
    {{"(y - x^2)", "1"}, {"(y + x^2)", "1/2"}},
};

} // namespace testing
