#pragma once

#include <random>

#include "qf/forms.hpp"

namespace qf::testing {

// Random unimodular matrix: product of shears, permutations and sign flips.
// Entries stay small enough for the 64-bit coefficient arithmetic.
inline Mat3 random_unimodular(std::mt19937_64& rng, int steps = 8) {
    std::uniform_int_distribution<int> op(0, 2);
    std::uniform_int_distribution<int> idx(0, 2);
    std::uniform_int_distribution<i64> shear(-2, 2);
    Mat3 u = Mat3::identity();
    for (int i = 0; i < steps; ++i) {
        Mat3 step = Mat3::identity();
        switch (op(rng)) {
            case 0: {  // shear
                int a = idx(rng), b = idx(rng);
                if (a == b) b = (b + 1) % 3;
                step.m[a][b] = shear(rng);
                break;
            }
            case 1: {  // swap two axes
                int a = idx(rng), b = idx(rng);
                if (a == b) b = (b + 1) % 3;
                step.m[a][a] = step.m[b][b] = 0;
                step.m[a][b] = step.m[b][a] = 1;
                break;
            }
            case 2: {  // flip a sign
                step.m[idx(rng)][idx(rng) % 3] = 1;
                int a = idx(rng);
                step = Mat3::identity();
                step.m[a][a] = -1;
                break;
            }
        }
        u = u * step;
    }
    return u;
}

inline Mat2 random_unimodular2(std::mt19937_64& rng, int steps = 8) {
    std::uniform_int_distribution<int> op(0, 2);
    std::uniform_int_distribution<i64> shear(-3, 3);
    Mat2 u = Mat2::identity();
    for (int i = 0; i < steps; ++i) {
        Mat2 step = Mat2::identity();
        switch (op(rng)) {
            case 0:
                step.m[0][1] = shear(rng);
                break;
            case 1:
                step.m[0][0] = step.m[1][1] = 0;
                step.m[0][1] = step.m[1][0] = 1;
                break;
            case 2:
                step.m[1][1] = -1;
                break;
        }
        u = u * step;
    }
    return u;
}

}  // namespace qf::testing
