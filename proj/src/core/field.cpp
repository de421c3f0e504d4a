#include "indlift/core/field.hpp"

#include <array>

namespace indlift {

namespace {

// GF(4) represented as {0, 1, x, x+1} with x^2 = x + 1.
int gf4_mul(int a, int b) {
    static const int table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    return table[a][b];
}

} // namespace

Field::Field(int q) : q_(q) {
    if (!supported(q)) throw std::invalid_argument("unsupported field order");
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (q == 4) {
                add_[a * q + b] = a ^ b; // char 2, componentwise
                mul_[a * q + b] = gf4_mul(a, b);
            } else {
                add_[a * q + b] = (a + b) % q;
                mul_[a * q + b] = (a * b) % q;
            }
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add(a, b) == 0) neg_[a] = b;
            if (mul(a, b) == 1) inv_[a] = b;
        }
    }
    inv_[0] = -1;
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return inv_[a];
}

const Field& Field::get(int q) {
    static const Field f2(2), f3(3), f4(4), f5(5);
    switch (q) {
        case 2: return f2;
        case 3: return f3;
        case 4: return f4;
        case 5: return f5;
        default: throw std::invalid_argument("unsupported field order");
    }
}

} // namespace indlift
