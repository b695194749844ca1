#pragma once

#include <vector>

#include "zpk/matrix.hpp"

namespace zpk {

// Factor tags: the group is generated by permutation matrices together
// with the subgroup fixing the first m coordinates.
enum class FactorKind { permutation, gl_m };

struct Factor {
  FactorKind kind;
  GroupElement element;
};

bool is_permutation_matrix(const GroupElement& g);

// Factorization of g into permutation matrices and elements of GL^[m]
// whose ordered product equals g exactly. Every permutation factor is a
// block swap theta; every GL^[m] factor fixes the first m coordinates.
std::vector<Factor> generator_factorization(const GroupElement& g, Index m);

// ordered product of the factor list
GroupElement factor_product(const std::vector<Factor>& factors, const Modulus& m);

}  // namespace zpk
