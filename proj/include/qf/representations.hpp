#pragma once

#include "qf/forms.hpp"

namespace qf {

// R_n(q) with vectors in lexicographic order, closed under negation.
struct RepresentationSet {
    i64 target = 0;
    std::vector<Vec3> vectors;
    std::vector<Vec3> primitive_vectors;
};

struct RepresentationSet2 {
    i64 target = 0;
    std::vector<Vec2> vectors;
    std::vector<Vec2> primitive_vectors;
};

// Complete finite enumeration of q(v) = n; square-completion bounds, exact
// integer arithmetic. When primitive_only is set, `vectors` is restricted to
// the primitive ones. Parallel kernel (OpenMP over the outer coordinate).
RepresentationSet representations(const TernaryForm& q, i64 n, bool primitive_only = false);
RepresentationSet2 representations(const BinaryForm& q, i64 n, bool primitive_only = false);

// All v with 0 < q(v) <= bound, lexicographically sorted.
std::vector<Vec3> vectors_up_to(const TernaryForm& q, i64 bound);

i64 representation_count(const TernaryForm& q, i64 n);  // r_n(q)
bool represents(const TernaryForm& q, i64 n);
bool represents_primitively(const TernaryForm& q, i64 n);
bool represents(const BinaryForm& q, i64 n);
bool represents_primitively(const BinaryForm& q, i64 n);

// a(q) = max(1, r_4(q), 3 r_4(q) - 12)
i64 a_invariant(const TernaryForm& q);

// Primitive representation of a binary form by a ternary form: vectors u, v
// with f(u) = q.a, f(v) = q.b, polar value q.t, and the 2x2 minors of the
// coordinate matrix coprime. Both polar signs are searched; the witness is
// normalized so the polar value is exactly q.t.
std::optional<std::pair<Vec3, Vec3>> represents_binary(const TernaryForm& f, const BinaryForm& q);

namespace reference {
// Plain box-scan enumeration kept as the serial reference for the parallel
// kernel; coordinate bounds from the adjugate of the coefficient matrix.
RepresentationSet representations_serial(const TernaryForm& q, i64 n, bool primitive_only = false);
}  // namespace reference

}  // namespace qf
