// Bound quivers: finite acyclic quivers with a minimal set of relations,
// their Tits form, path enumeration, and the path category (paths modulo the
// relation ideal), which yields Hom bases between projectives.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "semicanon/matrix.hpp"

namespace semicanon {

struct Arrow {
    std::string id;
    std::string source;
    std::string target;
};

// One summand of a relation: coeff times a path, the path stored in traversal
// order (path[0] is applied first). Coefficients stay rational in the algebra
// definition and are reduced into the working field on demand.
struct RelationTerm {
    mpq_class coeff;
    std::vector<std::string> path;
};
using Relation = std::vector<RelationTerm>;

// Dimension vectors are indexed by the quiver's vertex order.
using DimVector = std::vector<long long>;

DimVector dim_add(const DimVector& a, const DimVector& b);
DimVector dim_sub(const DimVector& a, const DimVector& b);
DimVector dim_scale(long long k, const DimVector& a);
bool sincere(const DimVector& d);

class BoundQuiver {
public:
    // Validates on construction: unique names, arrows between known vertices,
    // no oriented cycles, relations of composable length >= 2 paths with a
    // common source and target, and minimality of the relation set (dropping
    // any relation must shrink the generated ideal). Throws InvalidQuiver.
    BoundQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                std::vector<Relation> relations);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::size_t vertex_index(const std::string& name) const;
    const Arrow& arrow(const std::string& id) const;

    // Source/target of a traversal-order path; the empty path is not allowed
    // here (it has no intrinsic endpoints).
    const std::string& path_source(const std::vector<std::string>& path) const;
    const std::string& path_target(const std::vector<std::string>& path) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> arrow_index_;

    void validate() const;
};

// <d1,d2> = sum_x d1(x)d2(x) - sum_a d1(sa)d2(ta) + sum_r d1(sr)d2(tr).
long long tits_form(const BoundQuiver& q, const DimVector& d1, const DimVector& d2);

// All paths x -> y (the empty path included when x = y), in lexicographic
// order of arrow-id sequences. Finite by acyclicity.
std::vector<std::vector<std::string>> enumerate_paths(const BoundQuiver& q,
                                                      const std::string& x,
                                                      const std::string& y);

// A k-linear combination of parallel paths, written in coordinates over the
// full enumerate_paths(q, source, target) list.
struct AlgebraElement {
    std::string source;
    std::string target;
    std::vector<Fe> coords;
};

// The same element with rational coordinates reduced into f. Coordinates
// already in f pass through; prime-field coordinates cannot be lifted back,
// so converting across prime fields throws FieldMismatch.
AlgebraElement element_to_field(const AlgebraElement& a, const Field& f);

// The quotient path category over a fixed field: for every vertex pair the
// path list, a basis of paths modulo the relation ideal, and the reduction
// map onto that basis. All spaces are precomputed, so reads are concurrent-
// safe.
class PathCategory {
public:
    PathCategory(std::shared_ptr<const BoundQuiver> q, const Field& f);

    const BoundQuiver& quiver() const { return *q_; }
    const std::shared_ptr<const BoundQuiver>& quiver_ptr() const { return q_; }
    const Field& field() const { return field_; }

    struct PathSpace {
        std::vector<std::vector<std::string>> paths;
        std::map<std::vector<std::string>, std::size_t> path_index;
        std::vector<std::size_t> basis;  // indices of the basis paths
        Matrix reduce;                   // |basis| x |paths|, coords -> quotient coords
    };

    const PathSpace& space(const std::string& x, const std::string& y) const;
    std::size_t hom_dim(const std::string& x, const std::string& y) const;
    // Basis of Hom(P_x, P_y) as algebra elements (unit coordinates at the
    // basis paths).
    std::vector<AlgebraElement> hom_basis(const std::string& x, const std::string& y) const;

    AlgebraElement zero_element(const std::string& x, const std::string& y) const;
    // The element of one nonempty path; use trivial_path for length zero.
    AlgebraElement path_element(const std::vector<std::string>& path) const;
    AlgebraElement trivial_path(const std::string& x) const;
    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(const Fe& s, const AlgebraElement& a) const;
    // "a then b": a runs x -> y, b runs y -> z, result runs x -> z.
    AlgebraElement compose(const AlgebraElement& a, const AlgebraElement& b) const;

    // Coordinates of a modulo the relation ideal, over the basis of its
    // (source, target) space.
    std::vector<Fe> reduced_coords(const AlgebraElement& a) const;
    bool equal_mod_ideal(const AlgebraElement& a, const AlgebraElement& b) const;

    // Entry at y = hom_dim(x, y); the dimension vector of the projective P_x.
    DimVector projective_dim_vector(const std::string& x) const;

private:
    std::shared_ptr<const BoundQuiver> q_;
    Field field_;
    std::map<std::pair<std::string, std::string>, PathSpace> spaces_;
};

// Convenience over the rationals.
std::vector<AlgebraElement> hom_basis_between_projectives(const BoundQuiver& q,
                                                          const std::string& x,
                                                          const std::string& y);
DimVector projective_dim_vector(const BoundQuiver& q, const std::string& x);

}  // namespace semicanon
