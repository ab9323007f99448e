#pragma once

#include <optional>
#include <vector>

#include "qf2/algebra.hpp"
#include "qf2/normalform.hpp"
#include "qf2/pencil.hpp"

namespace qf2 {

struct RInvariant {
  EtaleAlgebra algebra;
  Vec value;  // sum r_i d_i
};

/// Throws "an_zero" if a_n = 0.
RInvariant r_invariant(const Field& F, const NormalForm& nf);

struct IsoResult {
  bool isomorphic = false;
  std::optional<Matrix> witness;  // q_i(h v) = q'_i(v)
};

/// Decides whether (q0, q1) and (q0', q1') are isomorphic, with a verified
/// witness when they are. Pencils whose base field has no non-root of Delta
/// are handled over an extension and the witness is descended.
IsoResult is_isomorphic(const Pencil& p1, const Pencil& p2);

/// The normal form of a pencil with a_n != 0 whose r is made zero by an
/// Artin-Schreier shift of the basis, or nullopt if the class of r is
/// nontrivial. `s` receives the shift.
std::optional<NormalForm> trivialize_r(const Pencil& p, Vec* s = nullptr);

/// X contains a generator over the base field.
bool is_quasi_split(const Pencil& p);

/// Smallest j such that X is quasi-split over the degree-j extension.
int quasi_split_degree(const Pencil& p);

/// Realizes nf, pulls it back by phi(s), re-extracts, and compares the new r
/// with the d-coordinates of r + s^2 + s (constants dropped).
bool transformation_law_check(const Field& F, const NormalForm& nf, const Vec& s);

struct ArfData {
  std::vector<Vec> qa_w;  // q_A(w'_{i+1}), i = 0..m-1
  std::vector<Vec> qa_v;  // q_A(v'_i)
  Vec arf;
  CosetClass arf_class;
  bool matches_r = false;  // arf and r agree modulo P(A) + k
};

/// Throws "an_zero" if a_n = 0; throws internal errors if a structural
/// identity of q_A fails.
ArfData arf_invariant(const Field& F, const NormalForm& nf);

}  // namespace qf2
