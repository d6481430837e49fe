// SPDX-License-Identifier: Apache-2.0
// Gaussian elimination over GF(2^m).
#pragma once

#include <optional>
#include <vector>

#include "rslab/gf.hpp"

namespace rslab {

using Matrix = std::vector<std::vector<Elem>>;

Elem determinant(const Arith& ar, Matrix a);
int matrix_rank(const Field& f, Matrix a);
// Solves a x = b for square nonsingular a; nullopt when a is singular.
std::optional<std::vector<Elem>> solve_linear(const Arith& ar, Matrix a, std::vector<Elem> b);
std::vector<Elem> mat_vec(const Field& f, const Matrix& a, const std::vector<Elem>& x);

}  // namespace rslab
