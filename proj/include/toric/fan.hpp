#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/matrix.hpp"
#include "toric/rational.hpp"

namespace toric {

// A cone of a simplicial fan, identified by the sorted list of indices of
// its extreme rays in the parent fan. The zero cone is the empty list.
struct Cone {
    std::vector<int> rays;  // sorted, indices into Fan::rays()

    int dim() const { return int(rays.size()); }
    bool operator==(const Cone& o) const { return rays == o.rays; }
    bool operator<(const Cone& o) const {
        if (rays.size() != o.rays.size()) return rays.size() < o.rays.size();
        return rays < o.rays;
    }
};

enum class FanDefect { NONSIMPLICIAL, NONPRIMITIVE_RAY, BAD_INTERSECTION, NOT_COMPLETE };

const char* fan_defect_name(FanDefect d);

struct ValidationReport {
    struct Entry {
        FanDefect kind;
        std::string detail;
    };
    std::vector<Entry> entries;

    bool ok() const { return entries.empty(); }
    bool has(FanDefect kind) const;
    std::string to_string() const;
};

// A finite simplicial fan. The full face closure of the listed maximal
// cones is stored eagerly, sorted by (dimension, ray set); cone ids index
// into that list and are stable for the lifetime of the fan.
class Fan {
  public:
    static Fan from_data(int rank, std::vector<IVec> rays,
                         std::vector<std::vector<int>> max_cones);

    int rank() const { return rank_; }
    const std::vector<IVec>& rays() const { return rays_; }
    const IVec& ray(int i) const { return rays_[size_t(i)]; }

    int num_cones() const { return int(cones_.size()); }
    const Cone& cone(int id) const { return cones_[size_t(id)]; }
    const std::vector<int>& cones_of_dim(int k) const;
    const std::vector<int>& max_cone_ids() const { return max_cone_ids_; }

    // Id of the cone with the given sorted ray set; -1 if absent.
    int cone_id(const std::vector<int>& sorted_rays) const;

    // Face relation by ray-set inclusion.
    bool is_face_of(int a, int b) const;
    const std::vector<int>& facets_of(int id) const { return facets_[size_t(id)]; }
    const std::vector<int>& cofacets_of(int id) const { return cofacets_[size_t(id)]; }

    bool is_complete() const { return complete_; }

    // Canonical Q-basis of the annihilator of the cone in M_Q, as the rows
    // of a matrix in reduced row echelon form, plus its pivot columns.
    const QMat& perp_basis(int cone_id) const { return perp_[size_t(cone_id)].basis; }
    const std::vector<int>& perp_pivots(int cone_id) const { return perp_[size_t(cone_id)].pivots; }

  private:
    int rank_ = 0;
    std::vector<IVec> rays_;
    std::vector<Cone> cones_;
    std::vector<int> max_cone_ids_;
    std::map<std::vector<int>, int> cone_index_;
    std::vector<std::vector<int>> cones_by_dim_;
    std::vector<std::vector<int>> facets_, cofacets_;
    bool complete_ = false;

    struct Perp {
        QMat basis;
        std::vector<int> pivots;
    };
    std::vector<Perp> perp_;

    void compute_completeness();
};

enum class SubsetKind { STAR_CLOSED, STAR_OPEN, WHOLE };

// A subset of the cones of a fan (the fan itself when kind == WHOLE).
struct FanSubset {
    const Fan* parent;
    std::vector<int> cone_ids;  // sorted
    SubsetKind kind;

    bool contains(int id) const;
    static FanSubset whole(const Fan& fan);
};

// ---- operations -----------------------------------------------------------

QMat cone_perp_basis(const Fan& fan, int cone_id);

// The covector m with <m, e_i> = 1 and <m, e_j> = 0 for the other rays
// e_j of the maximal cone tau; the zero covector when e_i is not in tau.
QVec dual_covector(const Fan& fan, int tau_id, int ray_index);

ValidationReport fan_validate(const Fan& fan, bool require_complete);

struct QuotientStar {
    Fan fan;                    // the star of gamma in the quotient lattice
    std::vector<int> cone_map;  // parent cone id -> quotient cone id (-1 if gamma is not a face)
    ZMat projection;            // N -> N / N_gamma, rows form a basis of the annihilator lattice
};

QuotientStar quotient_star(const Fan& fan, int gamma_id);

// The unique minimal cone containing all the given points; throws
// NOT_IN_SUPPORT when no cone contains them all.
int minimal_containing_cone(const Fan& fan, const std::vector<QVec>& points);
int minimal_containing_cone(const Fan& fan, const QVec& point);

}  // namespace toric
