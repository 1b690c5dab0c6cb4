// Concrete representations of a bound quiver over an exact field, and their
// homological linear algebra: relation checking, algebra-element evaluation,
// Hom spaces (intertwiner systems), direct sums, the base-change group
// action, and minimal projective presentations.
#pragma once

#include "semicanon/quiver.hpp"
#include "semicanon/rng.hpp"

namespace semicanon {

class Representation {
public:
    // Starts with all-zero arrow matrices of the shapes dim forces.
    Representation(std::shared_ptr<const BoundQuiver> q, const Field& f, DimVector dim);

    const BoundQuiver& quiver() const { return *q_; }
    const std::shared_ptr<const BoundQuiver>& quiver_ptr() const { return q_; }
    const Field& field() const { return field_; }
    const DimVector& dim() const { return dim_; }
    long long dim_at(const std::string& vertex) const;

    const Matrix& matrix(const std::string& arrow_id) const;
    // Shape must be dim(target) x dim(source).
    void set_matrix(const std::string& arrow_id, Matrix m);

private:
    std::shared_ptr<const BoundQuiver> q_;
    Field field_;
    DimVector dim_;
    std::vector<Matrix> mats_;  // by arrow index
};

// True iff every relation evaluates to the zero matrix.
bool check_relations(const Representation& m);

// Evaluate a k-linear combination of parallel paths; the result has shape
// dim(target) x dim(source). The trivial path gives the identity.
Matrix apply_element(const Representation& m, const AlgebraElement& a);

Representation direct_sum(const Representation& m, const Representation& n);

// One invertible matrix per vertex; acts by (g*M)(a) = g(ta) M(a) g(sa)^-1.
struct GroupElement {
    std::map<std::string, Matrix> blocks;
};

Representation group_act(const GroupElement& g, const Representation& m);
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inverse(const GroupElement& g);  // throws SingularBlock
GroupElement random_group_element(Rng& rng, const BoundQuiver& q, const Field& f,
                                  const DimVector& d);

// Basis of {phi: M -> N} with N(a) phi_s = phi_t M(a); each basis element
// maps vertex x to a dimN(x) x dimM(x) matrix.
struct HomSpace {
    std::size_t dim;
    std::vector<std::map<std::string, Matrix>> basis;
};

HomSpace hom_space(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

// A projective presentation P1 -f-> P0 -> V -> 0 with f stored as algebra
// elements, so one presentation evaluates against modules of any dimension
// vector. Block (i, j) runs from the j-th P0 summand's vertex to the i-th P1
// summand's vertex, and Hom(f, M) maps +M(P0 vertices) -> +M(P1 vertices).
struct PresentationMap {
    std::vector<std::string> p1_vertices;
    std::vector<std::string> p0_vertices;
    std::vector<std::vector<AlgebraElement>> blocks;
};

// The projective at x as a concrete representation: basis paths out of x,
// arrows acting by composition.
Representation projective_rep(const PathCategory& cat, const std::string& x);

// Deterministic minimal presentation: P0 covers top(V), P1 covers top(ker),
// summands ordered by vertex order then generator index.
PresentationMap minimal_projective_presentation(const PathCategory& cat,
                                                const Representation& v);

// The matrix of Hom(f, M): +M(P0 vertices) -> +M(P1 vertices).
Matrix hom_f_matrix(const PresentationMap& pm, const Representation& m);

}  // namespace semicanon
