#include "toric/divisor.hpp"

#include <algorithm>

namespace toric {

IVec ContractionData::ambient_point(const IVec& coords) const {
    IVec out = base_vertex;
    for (size_t t = 0; t < m_x_basis.size(); ++t)
        for (size_t j = 0; j < out.size(); ++j) out[j] += coords[t] * m_x_basis[t][j];
    return out;
}

SupportFunction support_function(const Fan& fan, const Divisor& d) {
    if (d.coeffs.size() != fan.rays().size())
        throw Error(ErrorCode::DIM_MISMATCH, "divisor length differs from the number of rays");
    SupportFunction sf;
    const int dim = fan.rank();
    for (int mc : fan.max_cone_ids()) {
        const Cone& sigma = fan.cone(mc);
        QMat gens(dim, dim);
        QVec rhs(size_t(dim));
        for (int r = 0; r < dim; ++r) {
            const IVec& g = fan.ray(sigma.rays[size_t(r)]);
            for (int j = 0; j < dim; ++j) gens(r, j) = Rat(g[size_t(j)]);
            rhs[size_t(r)] = -Rat(d.coeffs[size_t(sigma.rays[size_t(r)])]);
        }
        auto m = solve_square(gens, rhs);
        if (!m) throw Error(ErrorCode::NONSIMPLICIAL, "maximal cone with dependent generators");
        sf.m.push_back(*m);
    }
    return sf;
}

Classification classify(const Fan& fan, const Divisor& d) {
    SupportFunction sf = support_function(fan, d);
    Classification cls;
    cls.cartier = true;
    for (const auto& m : sf.m)
        for (const auto& x : m)
            if (!is_integral(x)) cls.cartier = false;

    // Convexity of the support function, tested globally: the local linear
    // data of every chamber must underestimate the divisor on every ray.
    bool convex = true;
    for (const auto& m : sf.m)
        for (size_t j = 0; j < fan.rays().size(); ++j)
            if (dot(m, fan.ray(int(j))) < -Rat(d.coeffs[j])) convex = false;

    cls.semiample = cls.cartier && convex;
    if (cls.semiample) {
        Polytope delta = divisor_polytope(fan, d.coeffs);
        cls.iitaka_dim = delta.affine_dim;
    }
    return cls;
}

ContractionData contraction(const Fan& fan, const Divisor& d) {
    Classification cls = classify(fan, d);
    if (!cls.semiample)
        throw Error(ErrorCode::NOT_SEMIAMPLE, "contraction needs a semiample Cartier divisor");

    SupportFunction sf = support_function(fan, d);
    const int dim = fan.rank();

    ContractionData cd;

    // N' is where all the local linear forms agree.
    std::vector<IVec> diff_rows;
    for (size_t s = 1; s < sf.m.size(); ++s) {
        IVec row(size_t(dim));
        for (int j = 0; j < dim; ++j) row[size_t(j)] = int_of(sf.m[s][size_t(j)] - sf.m[0][size_t(j)]);
        diff_rows.push_back(std::move(row));
    }
    cd.lineality = z_kernel_basis(ZMat::from_rows(diff_rows, dim));
    cd.m_x_basis = z_kernel_basis(ZMat::from_rows(cd.lineality, dim));
    cd.projection = ZMat::from_rows(cd.m_x_basis, dim);
    const int q = int(cd.m_x_basis.size());

    Polytope delta = divisor_polytope(fan, d.coeffs);
    if (delta.empty() || delta.affine_dim != q)
        throw Error(ErrorCode::INTERNAL, "polytope dimension disagrees with the section lattice");
    cd.iitaka_dim = q;
    cd.base_vertex = to_ivec(delta.vertices[0]);  // lex-min; integral since Cartier

    for (size_t j = 0; j < fan.rays().size(); ++j)
        cd.ray_images.push_back(cd.projection.apply(fan.ray(int(j))));

    // The polytope in M_X coordinates: <c, pi~(e_j)> >= -a_j - <v0, e_j>.
    std::vector<IVec> normals;
    IVec rhs;
    for (size_t j = 0; j < fan.rays().size(); ++j) {
        normals.push_back(cd.ray_images[j]);
        rhs.push_back(-d.coeffs[j] - dot(cd.base_vertex, fan.ray(int(j))));
    }
    cd.delta_x = polytope_from_inequalities(q, std::move(normals), std::move(rhs));
    if (cd.delta_x.affine_dim != q)
        throw Error(ErrorCode::INTERNAL, "coordinate polytope is not full dimensional");
    cd.faces_x = face_lattice(cd.delta_x);

    NormalFanResult nf = normal_fan(cd.delta_x, cd.faces_x, q);
    cd.sigma_fan = std::move(nf.fan);
    cd.face_to_cone = std::move(nf.face_to_cone);
    cd.cone_to_face = std::move(nf.cone_to_face);

    ValidationReport rep = fan_validate(cd.sigma_fan, true);
    if (!rep.ok())
        throw Error(ErrorCode::INTERNAL, "normal fan failed validation: " + rep.to_string());

    cd.cone_image.assign(size_t(fan.num_cones()), -1);
    for (int id = 0; id < fan.num_cones(); ++id) {
        std::vector<QVec> imgs;
        for (int r : fan.cone(id).rays) imgs.push_back(to_qvec(cd.ray_images[size_t(r)]));
        cd.cone_image[size_t(id)] = minimal_containing_cone(cd.sigma_fan, imgs);
    }
    return cd;
}

Divisor divisor_plus_character(const Fan& fan, const Divisor& d, const IVec& m) {
    Divisor out = d;
    for (size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += dot(m, fan.ray(int(j)));
    return out;
}

}  // namespace toric
