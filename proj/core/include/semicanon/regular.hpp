// Regular dimension vectors over a tube system: the unique decomposition
// d = p*h + sum_{k,i} p_{k,i} * e_{k,i} with per-tube minimum zero, the index
// sets that drive generator selection, ext-minimal witness construction, the
// preprojective/regular/preinjective sign classification, and the
// segment-overlap Hom dimension formula.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "semicanon/canonical.hpp"

namespace semicanon {

// The data (p, {p_{k,i}}) of a regular vector: d = p*h + sum p_{k,i} e_{k,i},
// residual indexed like TubeSystem::tubes, normalized so every tube's minimum
// residual is zero.
struct RegularProfile {
    long long p = 0;
    std::vector<std::vector<long long>> residual;
};

// One uniserial tube segment: the module with the given socle index and
// number of composition factors in the given exceptional tube.
struct SegmentSpec {
    std::size_t tube = 0;
    long long socle = 0;
    long long length = 1;
};

// Index sets of a profile, per tube: cal_i holds the indices whose residual
// value recurs after a strictly larger interior, with that return length in
// n_strict; cal_i0 holds the zero indices, with the distance to the next
// zero in n_to_zero. On cal_i0 the two lengths agree; both are kept so any
// divergence would be observable.
struct IndexData {
    std::vector<std::vector<long long>> cal_i;
    std::vector<std::vector<long long>> cal_i0;
    std::vector<std::map<long long, long long>> n_strict;
    std::vector<std::map<long long, long long>> n_to_zero;
};

// The unique normalized profile of d; throws NotRegular when d is not a
// nonnegative combination of h and the tube classes.
RegularProfile decompose(const TubeSystem& ts, const DimVector& d);
// The dimension vector of a profile (shape-checked, entries must be >= 0).
DimVector compose(const TubeSystem& ts, const RegularProfile& profile);
IndexData index_data(const RegularProfile& profile);

// An ext-minimal witness: disjoint residual segments peeled tube by tube,
// plus all homogeneous mass as one module of length p at a generic point.
struct ExtMinimal {
    std::vector<SegmentSpec> segments;
    long long homogeneous_length = 0;
    std::optional<TubePoint> generic_point;  // rational; set iff the length is > 0
};

// Segments are peeled in rounds: every index whose predecessor residual is
// zero starts a segment running to the next zero, all residuals on it drop
// by one, and the rounds repeat until the tube is exhausted. The generic
// point is (1 : xi) for the smallest nonnegative integer xi avoiding the
// exceptional points and the caller's avoid list. Throws NotRegular.
ExtMinimal ext_minimal(const TubeSystem& ts, const DimVector& d,
                       const std::vector<TubePoint>& avoid = {});
// Direct sum of the witness's tube modules, in listed order, homogeneous
// part last; the zero representation when the witness is empty.
Representation realize_ext_minimal(const TubeSystem& ts, const ExtMinimal& em, const Field& f);

enum class VectorClass { Preprojective, Regular, Preinjective, Mixed };

// Signs of the pairings with h, and the class they indicate: Regular needs
// both pairings zero and a valid decomposition.
struct ClassifyReport {
    long long d_h = 0;  // <d, h>
    long long h_d = 0;  // <h, d>
    VectorClass cls = VectorClass::Mixed;
};
ClassifyReport classify(const TubeSystem& ts, const DimVector& d);

// Hom dimension between uniserial segments (socle i, length n) ->
// (socle j, length m) of one tube of the given rank: the multiplicity of the
// source's top among the target's factors, capped by the multiplicity of the
// target's socle among the source's factors. Modules in different tubes
// admit no nonzero maps. Rank 1 gives min(n, m).
long long tube_hom_dim(long long rank, long long i, long long n, long long j, long long m);

}  // namespace semicanon
