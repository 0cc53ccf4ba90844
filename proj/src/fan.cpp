#include "toric/fan.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace toric {

const char* fan_defect_name(FanDefect d) {
    switch (d) {
        case FanDefect::NONSIMPLICIAL: return "NONSIMPLICIAL";
        case FanDefect::NONPRIMITIVE_RAY: return "NONPRIMITIVE_RAY";
        case FanDefect::BAD_INTERSECTION: return "BAD_INTERSECTION";
        case FanDefect::NOT_COMPLETE: return "NOT_COMPLETE";
    }
    return "UNKNOWN";
}

bool ValidationReport::has(FanDefect kind) const {
    for (const auto& e : entries)
        if (e.kind == kind) return true;
    return false;
}

std::string ValidationReport::to_string() const {
    if (entries.empty()) return "valid";
    std::ostringstream os;
    for (const auto& e : entries) os << fan_defect_name(e.kind) << ": " << e.detail << "\n";
    return os.str();
}

Fan Fan::from_data(int rank, std::vector<IVec> rays,
                   std::vector<std::vector<int>> max_cones) {
    Fan fan;
    fan.rank_ = rank;
    for (const auto& r : rays)
        if (int(r.size()) != rank)
            throw Error(ErrorCode::PARSE_ERROR, "ray length differs from rank");
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j])
                throw Error(ErrorCode::PARSE_ERROR, "duplicate ray at indices " +
                                                        std::to_string(i) + " and " + std::to_string(j));
    fan.rays_ = std::move(rays);

    std::set<std::vector<int>> face_sets;
    std::vector<std::vector<int>> max_sorted;
    for (auto mc : max_cones) {
        std::sort(mc.begin(), mc.end());
        mc.erase(std::unique(mc.begin(), mc.end()), mc.end());
        for (int idx : mc)
            if (idx < 0 || idx >= int(fan.rays_.size()))
                throw Error(ErrorCode::PARSE_ERROR, "cone ray index out of range");
        if (std::find(max_sorted.begin(), max_sorted.end(), mc) == max_sorted.end())
            max_sorted.push_back(mc);
        // Closure under faces: all subsets of the ray set.
        const int n = int(mc.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> face;
            for (int t = 0; t < n; ++t)
                if (mask & (1 << t)) face.push_back(mc[size_t(t)]);
            face_sets.insert(face);
        }
    }
    face_sets.insert({});  // the zero cone is always present

    for (const auto& s : face_sets) fan.cones_.push_back(Cone{s});
    std::sort(fan.cones_.begin(), fan.cones_.end());
    for (int id = 0; id < int(fan.cones_.size()); ++id)
        fan.cone_index_[fan.cones_[size_t(id)].rays] = id;

    // A cone may list more rays than the rank; fan_validate reports it as
    // NONSIMPLICIAL rather than refusing to build.
    int max_dim = rank;
    for (const auto& c : fan.cones_) max_dim = std::max(max_dim, c.dim());
    fan.cones_by_dim_.assign(size_t(max_dim) + 1, {});
    for (int id = 0; id < int(fan.cones_.size()); ++id)
        fan.cones_by_dim_[size_t(fan.cones_[size_t(id)].dim())].push_back(id);

    for (const auto& mc : max_sorted) fan.max_cone_ids_.push_back(fan.cone_index_.at(mc));
    std::sort(fan.max_cone_ids_.begin(), fan.max_cone_ids_.end());

    fan.facets_.assign(fan.cones_.size(), {});
    fan.cofacets_.assign(fan.cones_.size(), {});
    for (int id = 0; id < int(fan.cones_.size()); ++id) {
        const auto& s = fan.cones_[size_t(id)].rays;
        for (size_t t = 0; t < s.size(); ++t) {
            std::vector<int> facet = s;
            facet.erase(facet.begin() + long(t));
            int fid = fan.cone_index_.at(facet);
            fan.facets_[size_t(id)].push_back(fid);
            fan.cofacets_[size_t(fid)].push_back(id);
        }
    }
    for (auto& v : fan.cofacets_) std::sort(v.begin(), v.end());

    // Annihilator bases, eagerly: downstream modules ask for them per cone
    // many times.
    fan.perp_.resize(fan.cones_.size());
    for (int id = 0; id < int(fan.cones_.size()); ++id) {
        const auto& s = fan.cones_[size_t(id)].rays;
        std::vector<IVec> gen_rows;
        for (int r : s) gen_rows.push_back(fan.rays_[size_t(r)]);
        QMat gens = QMat::from_int_rows(gen_rows, rank);
        std::vector<QVec> kernel = q_kernel_basis(gens);
        Perp p;
        p.basis = rref(QMat::from_rows(kernel, rank), &p.pivots);
        fan.perp_[size_t(id)] = std::move(p);
    }

    fan.compute_completeness();
    return fan;
}

const std::vector<int>& Fan::cones_of_dim(int k) const {
    static const std::vector<int> empty;
    if (k < 0 || k >= int(cones_by_dim_.size())) return empty;
    return cones_by_dim_[size_t(k)];
}

int Fan::cone_id(const std::vector<int>& sorted_rays) const {
    auto it = cone_index_.find(sorted_rays);
    return it == cone_index_.end() ? -1 : it->second;
}

bool Fan::is_face_of(int a, int b) const {
    const auto& sa = cones_[size_t(a)].rays;
    const auto& sb = cones_[size_t(b)].rays;
    return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

void Fan::compute_completeness() {
    complete_ = false;
    if (max_cone_ids_.empty()) return;
    if (rank_ == 0) {
        complete_ = true;  // the zero fan is complete in N = 0
        return;
    }
    for (int id : max_cone_ids_)
        if (cones_[size_t(id)].dim() != rank_) return;
    // every (d-1)-cone must be a facet of exactly two maximal cones
    std::map<int, std::vector<int>> incidence;
    for (int id : max_cone_ids_)
        for (int f : facets_[size_t(id)]) incidence[f].push_back(id);
    for (int fid : cones_of_dim(rank_ - 1)) {
        auto it = incidence.find(fid);
        if (it == incidence.end() || it->second.size() != 2) return;
    }
    // facet-adjacency graph of maximal cones must be connected
    std::map<int, std::vector<int>> adj;
    for (const auto& [fid, mcs] : incidence)
        if (mcs.size() == 2) {
            adj[mcs[0]].push_back(mcs[1]);
            adj[mcs[1]].push_back(mcs[0]);
        }
    std::set<int> seen;
    std::queue<int> q;
    q.push(max_cone_ids_[0]);
    seen.insert(max_cone_ids_[0]);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int n : adj[c])
            if (seen.insert(n).second) q.push(n);
    }
    complete_ = seen.size() == max_cone_ids_.size();
}

bool FanSubset::contains(int id) const {
    return std::binary_search(cone_ids.begin(), cone_ids.end(), id);
}

FanSubset FanSubset::whole(const Fan& fan) {
    FanSubset s;
    s.parent = &fan;
    s.cone_ids.resize(size_t(fan.num_cones()));
    for (int i = 0; i < fan.num_cones(); ++i) s.cone_ids[size_t(i)] = i;
    s.kind = SubsetKind::WHOLE;
    return s;
}

QMat cone_perp_basis(const Fan& fan, int cone_id) { return fan.perp_basis(cone_id); }

QVec dual_covector(const Fan& fan, int tau_id, int ray_index) {
    const Cone& tau = fan.cone(tau_id);
    if (tau.dim() != fan.rank())
        throw Error(ErrorCode::DIM_ERROR, "dual covector requires a maximal cone");
    QVec zero(size_t(fan.rank()), Rat(0));
    auto pos = std::find(tau.rays.begin(), tau.rays.end(), ray_index);
    if (pos == tau.rays.end()) return zero;
    const int d = fan.rank();
    QMat gens(d, d);  // rows are the generators of tau
    QVec rhs(size_t(d), Rat(0));
    for (int r = 0; r < d; ++r) {
        const IVec& g = fan.ray(tau.rays[size_t(r)]);
        for (int j = 0; j < d; ++j) gens(r, j) = Rat(g[size_t(j)]);
        if (tau.rays[size_t(r)] == ray_index) rhs[size_t(r)] = 1;
    }
    auto m = solve_square(gens, rhs);
    if (!m) throw Error(ErrorCode::INTERNAL, "degenerate maximal cone");
    return *m;
}

namespace {

// Extreme-ray test for the pointed cone {z >= 0 : E z = 0}: checks whether
// the intersection of two simplicial cones lies inside the span of their
// shared rays. Enumerates candidate supports of extreme rays.
bool intersection_inside_shared_span(const Fan& fan, const Cone& a, const Cone& b) {
    std::vector<int> shared;
    std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                          std::back_inserter(shared));
    if (shared == a.rays || shared == b.rays) return true;  // one is a face of the other

    const int d = fan.rank();
    const int sa = a.dim(), sb = b.dim();
    const int n = sa + sb;
    // E z = 0 encodes sum_i z_i g_i - sum_j z_{sa+j} h_j = 0.
    QMat eq(d, n);
    for (int i = 0; i < sa; ++i) {
        const IVec& g = fan.ray(a.rays[size_t(i)]);
        for (int r = 0; r < d; ++r) eq(r, i) = Rat(g[size_t(r)]);
    }
    for (int j = 0; j < sb; ++j) {
        const IVec& h = fan.ray(b.rays[size_t(j)]);
        for (int r = 0; r < d; ++r) eq(r, sa + j) = -Rat(h[size_t(r)]);
    }

    QMat shared_gens(int(shared.size()), d);
    for (size_t i = 0; i < shared.size(); ++i) {
        const IVec& g = fan.ray(shared[i]);
        for (int j = 0; j < d; ++j) shared_gens(int(i), j) = Rat(g[size_t(j)]);
    }

    // Candidate supports of size up to rank+1 carry all extreme rays.
    for (int size = 1; size <= std::min(n, d + 1); ++size) {
        for (const auto& supp : subsets_of_size(n, size)) {
            QMat sub(d, size);
            for (int c = 0; c < size; ++c)
                for (int r = 0; r < d; ++r) sub(r, c) = eq(r, supp[size_t(c)]);
            std::vector<QVec> kern = q_kernel_basis(sub);
            if (kern.size() != 1) continue;
            const QVec& z = kern[0];
            bool nonneg = true, nonpos = true;
            for (const auto& v : z) {
                if (v < 0) nonneg = false;
                if (v > 0) nonpos = false;
            }
            if (!nonneg && !nonpos) continue;
            // z (or -z) is a candidate extreme direction; its image must lie
            // in the span of the shared rays.
            QVec x(size_t(d), Rat(0));
            for (int c = 0; c < size; ++c) {
                if (supp[size_t(c)] >= sa) continue;
                const IVec& g = fan.ray(a.rays[size_t(supp[size_t(c)])]);
                for (int r = 0; r < d; ++r) x[size_t(r)] += z[size_t(c)] * Rat(g[size_t(r)]);
            }
            if (is_zero(x)) continue;
            // x in span(shared)?
            QMat aug(d, int(shared.size()) + 1);
            for (int r = 0; r < d; ++r) {
                for (size_t c = 0; c < shared.size(); ++c) aug(r, int(c)) = shared_gens(int(c), r);
                aug(r, int(shared.size())) = x[size_t(r)];
            }
            std::vector<int> piv;
            rref(aug, &piv);
            bool consistent = true;
            for (int c : piv)
                if (c == int(shared.size())) consistent = false;
            if (!consistent) return false;
        }
    }
    return true;
}

}  // namespace

ValidationReport fan_validate(const Fan& fan, bool require_complete) {
    ValidationReport rep;
    for (size_t i = 0; i < fan.rays().size(); ++i) {
        const IVec& r = fan.rays()[i];
        if (is_zero(r) || !is_primitive(r))
            rep.entries.push_back({FanDefect::NONPRIMITIVE_RAY,
                                   "ray " + std::to_string(i) + " is not primitive"});
    }
    for (int id = 0; id < fan.num_cones(); ++id) {
        const Cone& c = fan.cone(id);
        if (c.dim() == 0) continue;
        std::vector<IVec> rows;
        for (int r : c.rays) rows.push_back(fan.ray(r));
        if (rank(QMat::from_int_rows(rows, fan.rank())) != c.dim()) {
            std::ostringstream os;
            os << "cone {";
            for (size_t t = 0; t < c.rays.size(); ++t) os << (t ? "," : "") << c.rays[t];
            os << "} has dependent generators";
            rep.entries.push_back({FanDefect::NONSIMPLICIAL, os.str()});
        }
    }
    if (rep.ok()) {
        // Pairwise intersections only make sense once cones are simplicial.
        const auto& mc = fan.max_cone_ids();
        for (size_t i = 0; i < mc.size(); ++i)
            for (size_t j = i + 1; j < mc.size(); ++j)
                if (!intersection_inside_shared_span(fan, fan.cone(mc[i]), fan.cone(mc[j]))) {
                    std::ostringstream os;
                    os << "maximal cones " << mc[i] << " and " << mc[j]
                       << " do not meet in a common face";
                    rep.entries.push_back({FanDefect::BAD_INTERSECTION, os.str()});
                }
    }
    if (require_complete && !fan.is_complete())
        rep.entries.push_back({FanDefect::NOT_COMPLETE,
                               "support is not all of the ambient space"});
    return rep;
}

QuotientStar quotient_star(const Fan& fan, int gamma_id) {
    const Cone& gamma = fan.cone(gamma_id);
    const int d = fan.rank();

    std::vector<IVec> gen_rows;
    for (int r : gamma.rays) gen_rows.push_back(fan.ray(r));
    std::vector<IVec> proj_rows = z_kernel_basis(ZMat::from_rows(gen_rows, d));
    const int q = int(proj_rows.size());
    ZMat proj = ZMat::from_rows(proj_rows, d);

    // Quotient rays: images of the parent rays appearing in star cones,
    // in parent index order, deduplicated.
    std::vector<IVec> qrays;
    std::map<int, int> ray_image;  // parent ray -> quotient ray index
    std::vector<int> star_ids;
    for (int id = 0; id < fan.num_cones(); ++id)
        if (fan.is_face_of(gamma_id, id)) star_ids.push_back(id);

    std::set<int> star_rays;
    for (int id : star_ids)
        for (int r : fan.cone(id).rays)
            if (!std::binary_search(gamma.rays.begin(), gamma.rays.end(), r)) star_rays.insert(r);
    for (int r : star_rays) {
        IVec img = primitive(proj.apply(fan.ray(r)));
        int found = -1;
        for (size_t t = 0; t < qrays.size(); ++t)
            if (qrays[t] == img) found = int(t);
        if (found < 0) {
            found = int(qrays.size());
            qrays.push_back(img);
        }
        ray_image[r] = found;
    }

    std::vector<std::vector<int>> qmax;
    for (int id : star_ids) {
        std::vector<int> img;
        for (int r : fan.cone(id).rays)
            if (ray_image.count(r)) img.push_back(ray_image[r]);
        std::sort(img.begin(), img.end());
        qmax.push_back(std::move(img));
    }
    // keep inclusion-maximal images only
    std::vector<std::vector<int>> maximal;
    for (const auto& c : qmax) {
        bool dominated = false;
        for (const auto& o : qmax)
            if (o.size() > c.size() && std::includes(o.begin(), o.end(), c.begin(), c.end()))
                dominated = true;
        if (!dominated && std::find(maximal.begin(), maximal.end(), c) == maximal.end())
            maximal.push_back(c);
    }

    QuotientStar out{Fan::from_data(q, qrays, maximal), {}, proj};
    out.cone_map.assign(size_t(fan.num_cones()), -1);
    for (int id : star_ids) {
        std::vector<int> img;
        for (int r : fan.cone(id).rays)
            if (ray_image.count(r)) img.push_back(ray_image[r]);
        std::sort(img.begin(), img.end());
        int qid = out.fan.cone_id(img);
        if (qid < 0) throw Error(ErrorCode::INTERNAL, "quotient star image cone missing");
        out.cone_map[size_t(id)] = qid;
    }
    return out;
}

namespace {

bool cone_contains(const Fan& fan, int cone_id, const QVec& v) {
    const Cone& c = fan.cone(cone_id);
    if (c.dim() == 0) return is_zero(v);
    const int d = fan.rank();
    QMat gens(d, c.dim());
    for (int t = 0; t < c.dim(); ++t) {
        const IVec& g = fan.ray(c.rays[size_t(t)]);
        for (int r = 0; r < d; ++r) gens(r, t) = Rat(g[size_t(r)]);
    }
    auto coeff = solve_independent_columns(gens, v);
    if (!coeff) return false;
    for (const auto& x : *coeff)
        if (x < 0) return false;
    return true;
}

}  // namespace

int minimal_containing_cone(const Fan& fan, const std::vector<QVec>& points) {
    // Cones containing a given set are closed under pairwise intersection,
    // so the first hit in (dim, lex) order is the minimal one.
    for (int k = 0; k <= fan.rank(); ++k)
        for (int id : fan.cones_of_dim(k)) {
            bool all = true;
            for (const auto& p : points)
                if (!cone_contains(fan, id, p)) {
                    all = false;
                    break;
                }
            if (all) return id;
        }
    throw Error(ErrorCode::NOT_IN_SUPPORT, "no cone of the fan contains the input");
}

int minimal_containing_cone(const Fan& fan, const QVec& point) {
    return minimal_containing_cone(fan, std::vector<QVec>{point});
}

}  // namespace toric
