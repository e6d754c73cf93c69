#pragma once

#include <algorithm>
#include <cmath>

#include "knotcv/multipoly.hpp"
#include "knotcv/word.hpp"

namespace knotcv {

// Complex 2x2 matrix, row major. Inversion assumes determinant 1.
struct Mat2 {
    Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    static Mat2 identity() { return {}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 sl2_inverse() const { return {d, -b, -c, a}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }

    double distance_to_identity() const {
        return std::max(std::max(std::abs(a - 1.0), std::abs(b)),
                        std::max(std::abs(c), std::abs(d - 1.0)));
    }
};

inline Mat2 eval_word(const GroupWord& w, const Mat2& A, const Mat2& B) {
    Mat2 acc = Mat2::identity();
    Mat2 inv_a = A.sl2_inverse();
    Mat2 inv_b = B.sl2_inverse();
    for (int l : w.letters()) {
        switch (l) {
            case 1: acc = acc * A; break;
            case -1: acc = acc * inv_a; break;
            case 2: acc = acc * B; break;
            default: acc = acc * inv_b; break;
        }
    }
    return acc;
}

}  // namespace knotcv
