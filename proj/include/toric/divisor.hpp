#pragma once

#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

// A torus-invariant divisor sum a_i D_i, one coefficient per fan ray.
struct Divisor {
    IVec coeffs;
};

// Per maximal cone, the linear functional the support function restricts
// to: <m_sigma, e_i> = -a_i for every ray e_i of sigma.
struct SupportFunction {
    std::vector<QVec> m;  // aligned with Fan::max_cone_ids()
};

struct Classification {
    bool cartier = false;
    bool semiample = false;
    std::optional<int> iitaka_dim;  // set exactly when semiample
};

// Everything the canonical contraction N -> N_D of a semiample divisor
// carries: the collapsed sublattice, the quotient map, the divisor
// polytope in coordinates of the section lattice M_X, its normal fan and
// the cone correspondence.
struct ContractionData {
    int iitaka_dim = 0;
    std::vector<IVec> lineality;   // basis rows of N'
    std::vector<IVec> m_x_basis;   // rows spanning M_X = N'^perp cap M
    ZMat projection;               // pi~: rows = m_x_basis, surjective N -> Z^i
    IVec base_vertex;              // lex-min vertex of the divisor polytope (integral)
    std::vector<IVec> ray_images;  // pi~(e_j) per ray of the fan
    Polytope delta_x;              // divisor polytope in M_X coordinates (full dimensional)
    FaceLattice faces_x;
    Fan sigma_fan;                 // normal fan Sigma_X in N_D
    std::vector<int> face_to_cone;
    std::vector<int> cone_to_face;
    std::vector<int> cone_image;   // fan cone id -> minimal Sigma_X cone containing its image

    // ambient lattice point of M from a point of delta_x
    IVec ambient_point(const IVec& coords) const;
};

SupportFunction support_function(const Fan& fan, const Divisor& d);

Classification classify(const Fan& fan, const Divisor& d);

// Throws NOT_SEMIAMPLE unless classify(fan, d).semiample.
ContractionData contraction(const Fan& fan, const Divisor& d);

// Coefficientwise shift by the character m: a_i + <m, e_i>. The divisor
// class is unchanged.
Divisor divisor_plus_character(const Fan& fan, const Divisor& d, const IVec& m);

}  // namespace toric
