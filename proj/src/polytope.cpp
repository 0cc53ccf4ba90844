#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

bool satisfies_all(const Polytope& p, const QVec& m) {
    for (size_t i = 0; i < p.normals.size(); ++i)
        if (dot(m, p.normals[i]) < Rat(p.rhs[i])) return false;
    return true;
}

std::vector<int> tight_set(const Polytope& p, const QVec& m) {
    std::vector<int> t;
    for (size_t i = 0; i < p.normals.size(); ++i)
        if (dot(m, p.normals[i]) == Rat(p.rhs[i])) t.push_back(int(i));
    return t;
}

int affine_dim_of(const std::vector<QVec>& pts, int ambient) {
    if (pts.empty()) return -1;
    std::vector<QVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec d(size_t(ambient));
        for (int j = 0; j < ambient; ++j) d[size_t(j)] = pts[i][size_t(j)] - pts[0][size_t(j)];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rank(QMat::from_rows(diffs, ambient));
}

// Nonzero recession direction of {m : <m, n_i> >= rhs_i}? The recession
// cone is {m : <m, n_i> >= 0}; it is nonzero iff some (rank-1)-subset of
// the normals has a kernel line one of whose halves satisfies everything.
bool has_nonzero_recession(int rank, const std::vector<IVec>& normals) {
    if (rank == 0) return false;
    const int n = int(normals.size());
    if (::toric::rank(QMat::from_int_rows(normals, rank)) < rank) return true;
    for (const auto& sub : subsets_of_size(n, rank - 1)) {
        std::vector<IVec> rows;
        for (int i : sub) rows.push_back(normals[size_t(i)]);
        std::vector<QVec> kern = q_kernel_basis(QMat::from_rows(
            [&] {
                std::vector<QVec> q;
                for (const auto& r : rows) q.push_back(to_qvec(r));
                return q;
            }(),
            rank));
        if (kern.size() != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
            QVec v = kern[0];
            if (sign)
                for (auto& x : v) x = -x;
            bool ok = true;
            for (const auto& nrm : normals)
                if (dot(v, nrm) < 0) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace

Polytope polytope_from_inequalities(int rank, std::vector<IVec> normals, IVec rhs) {
    Polytope p;
    p.ambient_rank = rank;
    p.normals = std::move(normals);
    p.rhs = std::move(rhs);

    if (rank == 0) {
        // the ambient space is a single point; feasible iff all rhs <= 0
        bool feasible = true;
        for (const auto& r : p.rhs)
            if (r > 0) feasible = false;
        if (feasible) {
            p.vertices.push_back(QVec{});
            p.affine_dim = 0;
        }
        return p;
    }

    if (has_nonzero_recession(rank, p.normals))
        throw Error(ErrorCode::UNBOUNDED, "polytope has a nonzero recession direction");

    // Desk-scale vertex enumeration: solve every rank-subset of tight
    // inequalities and keep the feasible solutions.
    std::set<QVec> verts;
    const int n = int(p.normals.size());
    for (const auto& sub : subsets_of_size(n, rank)) {
        QMat a(rank, rank);
        QVec b(size_t(rank));
        for (int r = 0; r < rank; ++r) {
            for (int c = 0; c < rank; ++c) a(r, c) = Rat(p.normals[size_t(sub[size_t(r)])][size_t(c)]);
            b[size_t(r)] = Rat(p.rhs[size_t(sub[size_t(r)])]);
        }
        auto m = solve_square(a, b);
        if (m && satisfies_all(p, *m)) verts.insert(*m);
    }
    p.vertices.assign(verts.begin(), verts.end());
    p.affine_dim = affine_dim_of(p.vertices, rank);
    return p;
}

Polytope divisor_polytope(const Fan& fan, const IVec& coeffs) {
    if (coeffs.size() != fan.rays().size())
        throw Error(ErrorCode::DIM_MISMATCH, "divisor length differs from the number of rays");
    std::vector<IVec> normals = fan.rays();
    IVec rhs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) rhs[i] = -coeffs[i];
    return polytope_from_inequalities(fan.rank(), std::move(normals), std::move(rhs));
}

namespace {

std::vector<IVec> enumerate_lattice_points(const Polytope& p) {
    std::vector<IVec> out;
    if (p.empty()) return out;
    const int d = p.ambient_rank;
    if (d == 0) {
        out.push_back(IVec{});
        return out;
    }
    IVec lo(size_t(d)), hi(size_t(d));
    for (int j = 0; j < d; ++j) {
        Rat mn = p.vertices[0][size_t(j)], mx = mn;
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[size_t(j)]);
            mx = std::max(mx, v[size_t(j)]);
        }
        // ceil(mn), floor(mx)
        Int num = numerator(mn), den = denominator(mn);
        lo[size_t(j)] = num >= 0 ? (num + den - 1) / den : num / den;
        if (Rat(lo[size_t(j)]) < mn) lo[size_t(j)] += 1;
        num = numerator(mx), den = denominator(mx);
        hi[size_t(j)] = num / den;
        if (Rat(hi[size_t(j)]) > mx) hi[size_t(j)] -= 1;
    }
    IVec cur = lo;
    while (true) {
        QVec q = to_qvec(cur);
        if (satisfies_all(p, q)) out.push_back(cur);
        int j = d - 1;
        while (j >= 0) {
            cur[size_t(j)] += 1;
            if (cur[size_t(j)] <= hi[size_t(j)]) break;
            cur[size_t(j)] = lo[size_t(j)];
            --j;
        }
        if (j < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool FaceLattice::face_leq(int a, int b) const {
    const auto& ta = faces[size_t(a)].tight;
    const auto& tb = faces[size_t(b)].tight;
    // smaller face = larger tight set
    return std::includes(ta.begin(), ta.end(), tb.begin(), tb.end());
}

std::vector<int> FaceLattice::points_on_face(int face) const {
    std::vector<int> out;
    const auto& t = faces[size_t(face)].tight;
    for (size_t pid = 0; pid < points.size(); ++pid) {
        const auto& pt = faces[size_t(point_face[pid])].tight;
        if (std::includes(pt.begin(), pt.end(), t.begin(), t.end())) out.push_back(int(pid));
    }
    return out;
}

FaceLattice face_lattice(const Polytope& p) {
    if (p.empty()) throw Error(ErrorCode::OUT_OF_RANGE, "face lattice of an empty polytope");
    FaceLattice fl;

    const int n = int(p.normals.size());
    std::vector<std::vector<int>> vertex_tight;
    for (const auto& v : p.vertices) vertex_tight.push_back(tight_set(p, v));

    // Faces arise as the vertex sets common to a set of tight inequalities.
    // Enumerating subsets of inequalities reaches every face; faces are
    // canonicalized by their full tight set.
    std::set<std::vector<int>> seen_vertex_sets;
    std::vector<std::vector<int>> face_vertex_sets;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> vs;
        for (size_t vid = 0; vid < p.vertices.size(); ++vid) {
            bool all = true;
            for (int i = 0; i < n && all; ++i)
                if (mask & (1 << i))
                    all = std::binary_search(vertex_tight[vid].begin(), vertex_tight[vid].end(), i);
            if (all) vs.push_back(int(vid));
        }
        if (!vs.empty() && seen_vertex_sets.insert(vs).second) face_vertex_sets.push_back(vs);
    }

    for (const auto& vs : face_vertex_sets) {
        PolytopeFace f;
        f.vertex_ids = vs;
        // full tight set = inequalities tight at every vertex of the face
        f.tight = vertex_tight[size_t(vs[0])];
        for (size_t t = 1; t < vs.size(); ++t) {
            std::vector<int> inter;
            std::set_intersection(f.tight.begin(), f.tight.end(),
                                  vertex_tight[size_t(vs[t])].begin(),
                                  vertex_tight[size_t(vs[t])].end(), std::back_inserter(inter));
            f.tight = std::move(inter);
        }
        std::vector<QVec> pts;
        for (int vid : vs) pts.push_back(p.vertices[size_t(vid)]);
        f.dim = affine_dim_of(pts, p.ambient_rank);
        fl.faces.push_back(std::move(f));
    }
    std::sort(fl.faces.begin(), fl.faces.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.tight < b.tight;
    });
    for (size_t i = 0; i < fl.faces.size(); ++i)
        if (int(fl.faces[i].vertex_ids.size()) == int(p.vertices.size())) fl.whole_face = int(i);

    fl.points = enumerate_lattice_points(p);
    fl.point_face.assign(fl.points.size(), -1);
    std::map<std::vector<int>, int> tight_to_face;
    for (size_t i = 0; i < fl.faces.size(); ++i) tight_to_face[fl.faces[i].tight] = int(i);
    for (size_t pid = 0; pid < fl.points.size(); ++pid) {
        std::vector<int> t = tight_set(p, to_qvec(fl.points[pid]));
        auto it = tight_to_face.find(t);
        if (it == tight_to_face.end())
            throw Error(ErrorCode::INTERNAL, "lattice point with no matching face");
        fl.point_face[pid] = it->second;
        fl.faces[size_t(it->second)].interior_points.push_back(int(pid));
    }
    return fl;
}

NormalFanResult normal_fan(const Polytope& p, const FaceLattice& fl, int target_rank) {
    if (p.affine_dim != target_rank)
        throw Error(ErrorCode::DIM_MISMATCH, "target lattice rank differs from the polytope dimension");
    if (p.affine_dim != p.ambient_rank)
        throw Error(ErrorCode::DIM_MISMATCH, "normal fan expects a full dimensional polytope");
    const int q = p.ambient_rank;

    NormalFanResult out;
    if (q == 0) {
        out.fan = Fan::from_data(0, {}, {{}});
        out.face_to_cone.assign(fl.faces.size(), 0);
        out.cone_to_face.assign(1, fl.whole_face);
        return out;
    }

    // facets and their primitive inner normals
    std::vector<int> facet_ids;
    std::vector<IVec> rays;
    const auto& whole_tight = fl.faces[size_t(fl.whole_face)].tight;
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        if (fl.faces[i].dim != q - 1) continue;
        facet_ids.push_back(int(i));
        IVec normal;
        for (int t : fl.faces[i].tight) {
            if (std::binary_search(whole_tight.begin(), whole_tight.end(), t)) continue;
            if (is_zero(p.normals[size_t(t)])) continue;
            IVec cand = primitive(p.normals[size_t(t)]);
            if (normal.empty())
                normal = cand;
            else if (normal != cand)
                throw Error(ErrorCode::INTERNAL, "facet with inconsistent normals");
        }
        if (normal.empty()) throw Error(ErrorCode::INTERNAL, "facet without a defining inequality");
        rays.push_back(normal);
    }

    // cone of a face = normals of the facets containing it
    auto cone_rays_of_face = [&](int face) {
        std::vector<int> rs;
        for (size_t fi = 0; fi < facet_ids.size(); ++fi)
            if (fl.face_leq(face, facet_ids[fi])) rs.push_back(int(fi));
        return rs;
    };

    std::vector<std::vector<int>> max_cones;
    for (size_t i = 0; i < fl.faces.size(); ++i)
        if (fl.faces[i].dim == 0) max_cones.push_back(cone_rays_of_face(int(i)));

    out.fan = Fan::from_data(q, rays, max_cones);

    out.face_to_cone.assign(fl.faces.size(), -1);
    out.cone_to_face.assign(size_t(out.fan.num_cones()), -1);
    for (size_t i = 0; i < fl.faces.size(); ++i) {
        std::vector<int> rs = cone_rays_of_face(int(i));
        if (int(rs.size()) != q - fl.faces[i].dim)
            throw Error(ErrorCode::NONSIMPLICIAL, "normal fan has a non-simplicial cone");
        int cid = out.fan.cone_id(rs);
        if (cid < 0) throw Error(ErrorCode::NONSIMPLICIAL, "normal cone missing from the face closure");
        out.face_to_cone[i] = cid;
        if (out.cone_to_face[size_t(cid)] != -1)
            throw Error(ErrorCode::INTERNAL, "two faces share a normal cone");
        out.cone_to_face[size_t(cid)] = int(i);
    }
    for (int cid = 0; cid < out.fan.num_cones(); ++cid)
        if (out.cone_to_face[size_t(cid)] == -1)
            throw Error(ErrorCode::INTERNAL, "normal cone without a face");
    return out;
}

}  // namespace toric
