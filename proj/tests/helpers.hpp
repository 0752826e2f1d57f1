#pragma once

#include "hq/daha.hpp"

inline hq::FieldElement R(long a, long b = 1) { return hq::FieldElement(hq::Rational(a, b)); }

// a + b sqrt(d)
inline hq::FieldElement Q2(hq::Rational a, hq::Rational b, long d) { return hq::FieldElement(a, b, hq::FieldContext(d)); }

inline hq::ExactMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<hq::FieldElement>> r;
    for (auto row : rows) {
        std::vector<hq::FieldElement> v;
        for (long x : row) v.push_back(hq::FieldElement(x));
        r.push_back(v);
    }
    return hq::ExactMatrix::from_rows(r);
}

inline hq::KParams flagship_k() { return {R(1, 4), R(3), R(7), R(5)}; }
