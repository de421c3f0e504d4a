#pragma once

#include <cstdint>
#include <stdexcept>

namespace indlift {

// Arithmetic for the small finite fields F_q, q in {2,3,4,5}.
// GF(4) is the proper field extension (x^2 + x + 1), not Z/4.
class Field {
public:
    explicit Field(int q);

    int order() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

    static bool supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5; }
    static const Field& get(int q);

private:
    int q_;
    int add_[25];
    int mul_[25];
    int neg_[5];
    int inv_[5];
};

} // namespace indlift
