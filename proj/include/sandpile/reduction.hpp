#pragma once

#include "sandpile/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Staged unimodular reduction of the C4 x Cn relations matrix down to small
// blocks whose Smith forms are known in closed form.
//
//   M1 = relations matrix with first row and column removed
//   M2 = L1 * M1 * R1
//   odd n = 2s+1:  L2 * U^{s+1} * M2 * R2 = X (+) Y
//   even n = 2s:   L3 * U^{s+1} * M2 * R3 = M3, M3 rescales to M3',
//                  L4 * M3' * R4 = E (+) F
namespace sandpile::reduction {

namespace constants {
const IntegerMatrix& L1();
const IntegerMatrix& R1();
const IntegerMatrix& U();
const IntegerMatrix& L2();
const IntegerMatrix& R2();
const IntegerMatrix& L3();
const IntegerMatrix& R3();
const IntegerMatrix& L4();
const IntegerMatrix& R4();

struct Named {
    const char* name;
    const IntegerMatrix& matrix;
};
std::vector<Named> all();
} // namespace constants

/// p_i = e_i + e_{n-i}; negative indices use u_{-k} = -u_k.
Integer p_term(std::size_t n, long i);
/// q_i = f_i + f_{n-i}.
Integer q_term(std::size_t n, long i);

/// Expected U^i * L1 * M1 * R1 for the given n (i = 0 gives M2 itself).
IntegerMatrix stage_template(std::size_t n, unsigned i);

IntegerMatrix odd_block_x(std::size_t n);
IntegerMatrix odd_block_y(std::size_t n);
IntegerMatrix even_m3(std::size_t n);
IntegerMatrix even_m3_prime(std::size_t n);
IntegerMatrix even_block_e(std::size_t n);
IntegerMatrix even_block_f(std::size_t n);

/// Undoes the power-of-two scaling that turns M3' into M3: rows 1, 2, 5 and
/// columns 3, 7 halved, column 4 divided by 8 (1-based). Throws on inexact division.
IntegerMatrix unscale_m3(const IntegerMatrix& m3);

struct StageCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PipelineReport {
    std::size_t n = 0;
    std::vector<StageCheck> stage_checks;
    bool all_passed = false;
};

PipelineReport verify_reduction_pipeline(std::size_t n);

} // namespace sandpile::reduction
