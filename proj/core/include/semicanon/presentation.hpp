// The ring presentation for a regular dimension vector: the homogeneous
// family S_0..S_p in degree h, one exceptional generator per tube return
// index, one graded relation per exceptional tube, complete-intersection
// statistics, and exact numerical certification of the relations and of the
// graded dimension counts.
#pragma once

#include <vector>

#include "semicanon/semiinv.hpp"

namespace semicanon {

struct TGenerator {
    std::size_t tube = 0;
    long long index = 0;   // return index i
    long long length = 1;  // return length n_i
    DimVector degree;
    TubeModuleSpec module;  // socle index+1, length n_i
};

// The graded relation at one exceptional tube: the linear combination of
// S_0..S_p with coefficients xi^j zeta^(p-j) equals (a scalar times) the
// product of the T generators over the zero-return indices.
struct RelationRecord {
    std::size_t tube = 0;
    TubePoint point;                  // rational normal form (zeta : xi)
    std::vector<Fe> coefficients;     // rational; entry j is xi^j zeta^(p-j)
    std::vector<long long> monomial;  // zero-return indices of the tube
    bool eliminates_variable = false;  // single-index monomial
};

struct PresentationReport {
    long long p = 0;  // S_0..S_p, each of degree h
    std::vector<TGenerator> t_generators;
    std::vector<RelationRecord> relations;
    // Count of tubes with more than one return index (the cardinality
    // reading of the complete-intersection threshold).
    std::size_t i_of_d = 0;
    long long reduced_equations = 0;  // max(0, i_of_d - p - 1)
    bool is_polynomial = true;        // i_of_d <= p + 1
};

// Throws NotRegular, or ZeroMass when d has no homogeneous mass.
PresentationReport presentation(const TubeSystem& ts, const DimVector& d);

struct RelationCertificate {
    std::size_t tube = 0;
    TubePoint recovered;  // over the sampling field, normal form
    bool matches_calibrated = false;
    Fe scalar;  // fitted proportionality constant
    bool residual_zero = false;
};

struct VerifyReport {
    std::vector<RelationCertificate> certificates;
    std::size_t samples = 0;
};

// Certifies each relation by exact evaluation at sampled points of the
// regular locus: fits the scalar against the report's coefficients (any
// nonzero residual throws RelationFailure naming the witness sample), then
// recovers the pencil point from an independent kernel fit. Throws
// DegenerateSamples when the sample set cannot pin the fit down.
VerifyReport verify_relations(const TubeSystem& ts, const DimVector& d,
                              const PresentationReport& report, const Field& f, Rng& rng,
                              std::size_t samples = 12);

struct HilbertRow {
    DimVector r;
    std::size_t monomials = 0;          // degree-r monomials in the generators
    long long monomials_predicted = 0;  // binomial(p_r + p + #tubes, p_r)
    long long quotient_predicted = 0;   // binomial(p_r + p, p_r)
    std::size_t measured = 0;           // certified weight-space rank
    bool certified = false;
};

// One row per r: the free-algebra monomial count with its closed form, the
// predicted quotient dimension, and the measured weight-space dimension.
std::vector<HilbertRow> hilbert_check(const TubeSystem& ts, const DimVector& d,
                                      const std::vector<DimVector>& r_list, const Field& f,
                                      Rng& rng);

}  // namespace semicanon
