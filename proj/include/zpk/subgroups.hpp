#pragma once

#include "zpk/matrix.hpp"

namespace zpk {

// Distinguished subgroups of the finitary group, each given by a
// verifiable block or congruence condition on the padded window.
enum class SubgroupKind {
  gl_m,        // identity on the first m rows and columns: diag(1_m, *)
  gl_km,       // blocks [[1 + p^j A, p^j B], [p^j C, D]] at corner size m
  congruence,  // g = 1 + p^j Q entrywise
  orthogonal,  // g^t g = 1
  symplectic,  // g^t I g = I for I = blockdiag([[0,1],[-1,0]], ...)
};

struct SubgroupSpec {
  SubgroupKind kind;
  Index m = 0;     // corner size for gl_m / gl_km
  unsigned j = 1;  // congruence exponent for gl_km / congruence
  // literal reading of the symplectic condition (g^t I g = 1); the default
  // compares against the form itself
  bool literal_identity_rhs = false;

  static SubgroupSpec gl(Index m) { return {SubgroupKind::gl_m, m, 1, false}; }
  static SubgroupSpec gl_corner(Index m, unsigned j) { return {SubgroupKind::gl_km, m, j, false}; }
  static SubgroupSpec congruence_level(unsigned j) { return {SubgroupKind::congruence, 0, j, false}; }
  static SubgroupSpec orthogonal() { return {SubgroupKind::orthogonal, 0, 1, false}; }
  static SubgroupSpec symplectic(bool literal_identity_rhs = false) {
    return {SubgroupKind::symplectic, 0, 1, literal_identity_rhs};
  }
};

// blockdiag([[0,1],[-1,0]], ...) on an even window
ResidueMatrix symplectic_gram(Index window, const Modulus& m);

bool member(const GroupElement& g, const SubgroupSpec& s);

}  // namespace zpk
