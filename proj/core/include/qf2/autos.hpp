#pragma once

#include <utility>
#include <vector>

#include "qf2/algebra.hpp"
#include "qf2/normalform.hpp"
#include "qf2/pencil.hpp"

namespace qf2 {

/// phi(s) for an algebra element s. `catalecticant` is the (m+1) x m block
/// S(k, i) = s_{i+k} built from the d-coordinates of s; `kronecker` is
/// [[I, S], [0, I]] in the Kronecker basis and `matrix` the same map in
/// standard coordinates. When a group was obtained by descent from an
/// extension, only `matrix` is filled.
struct AutomorphismRep {
  Vec s;
  Matrix catalecticant;
  Matrix kronecker;
  Matrix matrix;
};

/// The Kronecker-coordinate matrix of phi(s); A must have dimension n.
Matrix kronecker_phi(const EtaleAlgebra& A, const Vec& s);

AutomorphismRep phi(const EtaleAlgebra& A, const Vec& s, const KroneckerBasis& basis);

/// q_i(g v) = q_i(v) for i = 0, 1, compared coefficientwise.
bool preserves(const Pencil& p, const Matrix& g);

/// span(q0 o g, q1 o g) = span(q0, q1).
bool preserves_pencil(const Pencil& p, const Matrix& g);

/// phi(eps) over the 2^(l-1) classes of idempotents modulo 1, indexed by
/// subsets of the first l - 1 primitive idempotents (identity first). If no
/// rational non-root of Delta exists, the group is computed over an extension
/// and the rational elements are kept.
std::vector<AutomorphismRep> automorphism_group(const Pencil& p);

struct Reflection {
  std::pair<Elem, Elem> root;  // over ext, normalized
  Vec z;                       // Omega(root)
  Matrix matrix;
};

/// One reflection per root of Delta over ext, in projective_roots order.
/// Throws "not_split" unless Delta has n roots in ext.
std::vector<Reflection> reflections(const Pencil& p, const Field& ext);

/// phi(eps_i) for the primitive idempotents over ext, reordered so entry i
/// belongs to the same root as reflections(p, ext)[i].
std::vector<Matrix> idempotent_automorphisms(const Pencil& p, const Field& ext);

/// Aut(X) as R x| G over ext. `lifts[i]` realizes the projective
/// transformation `g[i]` of the pencil line; `elements` are the products
/// r * lift, projectively normalized, with multiplication table `table`
/// (left empty for groups above 1024 elements).
struct AutXGroup {
  Field field;
  std::vector<Matrix> r;
  std::vector<Mat2> g;
  std::vector<Matrix> lifts;
  std::vector<Matrix> elements;
  std::vector<std::vector<std::size_t>> table;
};

/// Throws "not_quasi_split" if X has no generator over ext.
AutXGroup aut_X(const Pencil& p, const Field& ext);

/// Normalized g in PGL_2(F) with Delta o g proportional to Delta.
std::vector<Mat2> binary_form_stabilizer(const Field& F, const BinaryForm& delta);

}  // namespace qf2
