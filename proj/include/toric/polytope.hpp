#pragma once

#include <vector>

#include "toric/fan.hpp"
#include "toric/rational.hpp"

namespace toric {

// A (possibly lower dimensional) rational polytope given by inequalities
// <m, normal_i> >= rhs_i together with its computed vertex set.
struct Polytope {
    int ambient_rank = 0;
    std::vector<IVec> normals;
    IVec rhs;
    std::vector<QVec> vertices;  // sorted lexicographically, deduplicated
    int affine_dim = -1;         // -1 for the empty polytope

    bool empty() const { return vertices.empty(); }
};

struct PolytopeFace {
    int dim = 0;
    std::vector<int> tight;        // full set of inequality indices tight on the face
    std::vector<int> vertex_ids;   // indices into Polytope::vertices
    std::vector<int> interior_points;  // ids of lattice points whose minimal face is this one
    long interior_count() const { return long(interior_points.size()); }
};

// The face lattice of a nonempty polytope, with every lattice point
// assigned to its minimal containing face.
struct FaceLattice {
    std::vector<PolytopeFace> faces;  // sorted by (dim, tight set); the last entry is the whole polytope
    int whole_face = -1;              // id of the improper face
    std::vector<IVec> points;         // all lattice points, sorted lexicographically
    std::vector<int> point_face;      // minimal face per point

    // face a contained in face b (as sets)
    bool face_leq(int a, int b) const;
    // ids of all lattice points lying on the (closed) face
    std::vector<int> points_on_face(int face) const;
};

// Builds a polytope from inequalities, enumerating vertices exactly.
// Throws UNBOUNDED when a nonzero recession direction exists.
Polytope polytope_from_inequalities(int rank, std::vector<IVec> normals, IVec rhs);

// The polytope { m : <m, e_i> >= -a_i } of a divisor on a fan.
Polytope divisor_polytope(const Fan& fan, const IVec& coeffs);

FaceLattice face_lattice(const Polytope& p);

struct NormalFanResult {
    Fan fan;
    std::vector<int> face_to_cone;  // face id -> cone id of the normal fan
    std::vector<int> cone_to_face;
};

// Inner-normal fan of a full dimensional polytope; the bijection with the
// face lattice is inclusion reversing. Throws NONSIMPLICIAL when some
// normal cone is not simplicial and DIM_MISMATCH when target_rank differs
// from the polytope's dimension.
NormalFanResult normal_fan(const Polytope& p, const FaceLattice& fl, int target_rank);

}  // namespace toric
