// Determinantal semi-invariants over a tube system: weights, c^V through a
// cached projective presentation, the Kronecker coefficient family f^(j),
// pencil forms with their fixed-factor reduction, generator sets, seeded
// samplers of relation-satisfying representations, and certified
// weight-space dimensions.
#pragma once

#include <optional>
#include <vector>

#include "semicanon/regular.hpp"
#include "semicanon/representation.hpp"
#include "semicanon/rng.hpp"

namespace semicanon {

// A linear form on dimension vectors, one integer per vertex.
struct Weight {
    std::vector<long long> coeffs;
    long long operator()(const DimVector& d) const;
};

// Total dimension vector of a direct sum of tube module specs.
DimVector modules_dim(const TubeSystem& ts, const std::vector<TubeModuleSpec>& modules);
// The weight <dim V, -> of the direct sum V.
Weight weight_of(const TubeSystem& ts, const std::vector<TubeModuleSpec>& modules);

// c^V pinned to a concrete scalar by the deterministic minimal presentation
// of V over the rationals; evaluation reduces it into the module's field.
struct SemiInvariant {
    std::vector<TubeModuleSpec> modules;
    DimVector d;
    Weight weight;
    PresentationMap presentation;
};

// Builds V over the rationals and caches its presentation. Throws
// NonSquareHom when the weight does not vanish on d.
SemiInvariant make_semi_invariant(const TubeSystem& ts, std::vector<TubeModuleSpec> modules,
                                  DimVector d);
// det Hom(f, m); zero iff Hom(V, m) is nonzero. Throws NonSquareHom when the
// assembled matrix is not square (the weight does not vanish on dim m).
Fe eval_c(const SemiInvariant& si, const Representation& m);

// Homogeneous binary form sum_j coeffs[j] S^j T^(degree-j).
struct BinaryForm {
    std::vector<Fe> coeffs;
    long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
    Field field() const { return coeffs.front().field(); }
    bool is_zero() const;
    Fe eval(const Fe& s, const Fe& t) const;
};

BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b);
// Quotient a / b when the division is exact; throws InvalidParams otherwise
// (DivisionByZero when b is zero).
BinaryForm form_divide_exact(const BinaryForm& a, const BinaryForm& b);
// Greatest common divisor, normalized. gcd(a, 0) = normalize(a).
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);
// Scales so the highest nonzero coefficient is one.
BinaryForm form_normalize(const BinaryForm& a);

// det(S*V_alpha - T*V_beta) of Kronecker-shaped data, by exact interpolation.
BinaryForm kronecker_form(const Representation& v);
// Coefficient of S^j T^(p-j) in kronecker_form.
Fe kronecker_f(long long j, const Representation& v);

// det(S*M(w1) - T*M(w2)), degree dim(0). A module concentrated at the
// homogeneous point (zeta:xi) contributes the factor zeta*S - xi*T, so the
// form's root is the point with swapped coordinates. Throws NonSquarePencil
// when dim(0) != dim(w).
BinaryForm pencil_form(const TubeSystem& ts, const Representation& m);

// The fixed factor g (gcd of pencil forms over independent samples of the
// regular locus, normalized) and the target degree p of the reduced form.
struct ReducedPencil {
    BinaryForm g;
    long long p = 0;
};

// Throws ZeroMass when d has no homogeneous mass, DegenerateSamples when the
// reduced degree does not stabilize at p across verification samples.
ReducedPencil reduced_pencil(const TubeSystem& ts, const DimVector& d, const Field& f, Rng& rng,
                             long long samples = 3);
// C_d(m) = pencil_form(m) / g, of degree p; the coefficient of S^j T^(p-j)
// is the generator f_d^(j) evaluated at m. Throws DegenerateSamples when the
// division is not exact.
BinaryForm reduced_form(const ReducedPencil& rp, const TubeSystem& ts, const Representation& m);

// One generator c^R per exceptional tube and return index (module with socle
// index+1 and the return length), plus one at a generic homogeneous point.
struct Generator {
    SemiInvariant si;
    std::optional<std::size_t> tube;  // empty for the generic point
    long long index = 0;
    long long length = 1;
    DimVector degree;  // graded degree: the module's dimension vector
};

// Throws NotRegular, or ZeroMass when d has no homogeneous part.
std::vector<Generator> generator_set(const TubeSystem& ts, const DimVector& d);

// A random point of the regular locus R(d): the residual segments plus a
// random split of the homogeneous mass over random non-exceptional points.
Representation sample_regular(const TubeSystem& ts, const DimVector& d, const Field& f, Rng& rng);
// A random relation-satisfying representation: all arrows random, one arrow
// per relation solved exactly; falls back to a group twist of a regular
// sample when the random slice admits no solution.
Representation sample_unconstrained(const TubeSystem& ts, const DimVector& d, const Field& f,
                                    Rng& rng);

struct WeightSpaceReport {
    DimVector r;
    long long p_r = 0;            // homogeneous mass of r
    std::size_t monomials = 0;    // monomials of graded degree r
    std::size_t samples = 0;      // evaluation points used
    std::size_t rank = 0;         // certified lower bound for the dimension
    long long prediction = 0;     // binomial(p_r + p, p_r)
    bool certified = false;       // rank stable under 50% more samples
};

// Rank of the evaluation matrix of all degree-r monomials in the generators
// f_d^(0..p) and the exceptional c^R family. Throws WeightNotClosed when
// <r, d> != 0, NotRegular when r is not regular.
WeightSpaceReport weight_space_dim(const TubeSystem& ts, const DimVector& d, const DimVector& r,
                                   const Field& f, Rng& rng);

long long binomial(long long n, long long k);

}  // namespace semicanon
