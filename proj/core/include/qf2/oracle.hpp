#pragma once

// Brute-force reference implementations. They are deliberately naive and
// share as little code as possible with the algorithms they check.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qf2/algebra.hpp"
#include "qf2/field.hpp"
#include "qf2/matrix.hpp"
#include "qf2/pencil.hpp"
#include "qf2/poly.hpp"
#include "qf2/quadform.hpp"

namespace qf2::oracle {

/// Sum over all perfect matchings of prod gram(i, j).
Elem pfaffian_matching(const Field& F, const Matrix& gram);

/// a11 a23^2 + a22 a13^2 + a33 a12^2 + a12 a23 a13 for n = 3.
Elem half_disc_n3(const Field& F, const QuadraticForm& q);

/// Irreducibility by locating a root in GF(q^d) outside every proper
/// subfield (k d <= 24), or by trial division otherwise.
bool irreducible_bruteforce(const Polynomial& p);

/// Visits every normalized point of P^(n-1)(F).
void for_each_projective_point(const Field& F, std::size_t n, const std::function<void(const Vec&)>& fn);

/// Points of X = V(q0, q1) over F by a full scan of P^(n-1)(F).
std::vector<Vec> points_full_scan(const Pencil& p);

/// True iff X has a point over GF(q^j), j <= max_degree, at which the rows
/// b0(x, .) and b1(x, .) have rank < 2. Full scan of projective space.
bool singular_point_full_scan(const Pencil& p, int max_degree);

/// All invertible n x n matrices over F (n <= 3, |F| <= 4).
std::vector<Matrix> general_linear_group(const Field& F, std::size_t n);

/// Does some g in GL_n(F) satisfy q'_i = q_i o g for i = 0, 1?
std::optional<Matrix> isomorphism_search(const Pencil& p1, const Pencil& p2, const std::vector<Matrix>& group);

/// |{g : q_i o g = q_i}|.
std::size_t stabilizer_order(const Pencil& p, const std::vector<Matrix>& group);

/// Projective classes of g in GL_3(F) permuting the given point set.
std::size_t pgl3_point_set_stabilizer(const Field& F, const std::vector<Vec>& points);

/// Lines (2-dim subspaces, as canonical RREF pairs) contained in X over F,
/// found by testing every pair of points of X.
std::vector<std::vector<Vec>> lines_through_point_pairs(const Pencil& p);

/// Common totally singular 2-dim subspaces of q0, q1 on F^3, searched over
/// all planes (n = 3 only).
std::vector<std::vector<Vec>> common_singular_planes_n3(const Pencil& p);

/// Visits every element of A (q^n of them).
void for_each_algebra_element(const EtaleAlgebra& A, const std::function<void(const Vec&)>& fn);

/// |{x in A : x^2 = x}| by enumeration.
std::size_t idempotent_count(const EtaleAlgebra& A);

/// Is r = s^2 + s + c for some s in A, c in k? Enumerates all s.
bool in_coset_space(const EtaleAlgebra& A, const Vec& r);

}  // namespace qf2::oracle
