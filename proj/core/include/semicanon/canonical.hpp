// Canonical algebras as bound quivers: a star of t weighted arms running from
// a common source "0" to a common sink "w", with one relation tying each arm
// beyond the second to a pencil spanned by the first two arm composites.
// Exposes the tubular structure of the regular modules: one exceptional tube
// per arm of weight >= 2, located at a point of the projective line computed
// by calibration, plus homogeneous (rank-one) tubes at all remaining points.
// Tube modules are built as iterated extensions of the simple regulars;
// homogeneous modules come from Kronecker representations via the pencil
// embedding.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semicanon/representation.hpp"

namespace semicanon {

// The two-vertex double-arrow quiver: vertices "1" (sink) and "2" (source),
// arrows "alpha" and "beta" from "2" to "1". One shared instance, so
// representations built on it are mutually compatible.
std::shared_ptr<const BoundQuiver> kronecker_quiver();

// True when q has two vertices joined by two parallel arrows and no
// relations, whatever the names. kronecker_embed accepts any such quiver;
// the first listed arrow plays the role of the first arm.
bool is_kronecker_shape(const BoundQuiver& q);

// Weights p_1..p_t (t >= 2, each >= 1) and parameters lambda_3..lambda_t
// (one per arm beyond the second; pairwise distinct, none equal to 0 or 1).
// When t >= 3 the first two arms must have weight >= 2: they carry the
// pencil, and the relations need their composites to be honest paths.
// An arm of weight 1 beyond the second contributes no arrow and no relation
// (its single arrow would be forced into the pencil, so the reduced
// presentation omits it); its parameter is validated but otherwise unused.
struct CanonicalSpec {
    std::vector<long long> weights;
    std::vector<mpq_class> params;
};

// A point of the projective line in normal form: (1 : xi) or (0 : 1).
struct TubePoint {
    Fe zeta, xi;
};

// Normal form of (zeta : xi); throws UnknownPoint on (0, 0).
TubePoint normalize_point(const Fe& zeta, const Fe& xi);
bool same_point(const TubePoint& a, const TubePoint& b);
// Reduce a rational point into the given field.
TubePoint point_to_field(const TubePoint& rational_point, const Field& f);

// One exceptional tube: its point (rational coordinates, normal form), its
// rank r (= the arm weight), the 1-based index of the arm carrying it, and
// the dimension vectors e[0..r-1] of its simple regular modules. e[0] is the
// class supported off the arm; e[j] for j >= 1 is the unit at arm vertex
// (arm, weight - j). Indices follow the extension order: the module with
// socle index i and length n has composition factors i, i+1, ..., i+n-1
// (mod r) from the socle up.
struct ExceptionalTube {
    TubePoint point;
    long long rank = 1;
    std::size_t arm = 0;
    std::vector<DimVector> e;
};

// Per-arm layout: the internal vertices "i.1".."i.(p-1)" and the arrow chain
// "ai.1".."ai.p" from "0" to "w". Arms of weight 1 beyond the second are not
// realized (no vertices, no arrows).
struct ArmLayout {
    long long weight = 1;
    std::vector<std::string> vertices;
    std::vector<std::string> arrows;
    bool realized = true;
};

// A canonical algebra together with its tube data. Vertices are ordered
// "0", then arm internals arm by arm, then "w"; h is the all-ones vector.
// w1 and w2 are the first two arm composites as algebra elements over the
// rationals; every tube point is a rational point in normal form.
struct TubeSystem {
    std::shared_ptr<const BoundQuiver> quiver;
    CanonicalSpec spec;
    DimVector h;
    std::vector<ArmLayout> arms;
    std::vector<ExceptionalTube> tubes;
    AlgebraElement w1, w2;

    // The exceptional tube at a rational point, or nullptr.
    const ExceptionalTube* tube_at(const TubePoint& rational_point) const;
    // Dimension vector e_i + e_{i+1} + ... + e_{i+n-1} (indices mod rank)
    // of segment modules in the given tube.
    DimVector segment_dim(std::size_t tube, long long socle, long long length) const;
};

// Builds the bound quiver, locates the exceptional tubes by calibration
// (each thick arm's composite degenerates at exactly one point of the
// pencil), and verifies the calibration against Hom spaces. Throws
// InvalidParams on malformed weights or parameters.
TubeSystem build_canonical(const CanonicalSpec& spec);

// Selects an indecomposable tube module: either a segment of an exceptional
// tube (index into TubeSystem::tubes, socle taken mod rank) or a homogeneous
// module at a point (zeta : xi) away from the exceptional points. Point
// coordinates may be rational (reduced into the working field) or already in
// the working field. length counts composition factors; it must be >= 1.
struct TubeModuleSpec {
    std::optional<std::size_t> exceptional;
    std::optional<std::pair<Fe, Fe>> homogeneous;
    long long socle = 0;
    long long length = 1;
};

// The indecomposable regular module the spec selects, over field f.
// Exceptional segments are built by iterated one-step extensions (each step
// solves the cocycle system and picks the first kernel vector outside the
// coboundaries); homogeneous modules embed a Jordan-block Kronecker module.
// Throws BadTubeIndex, UnknownPoint, or InvalidParams on a bad spec.
Representation tube_module(const TubeSystem& ts, const TubeModuleSpec& m, const Field& f);

// The pencil embedding: a Kronecker representation N with equal dimensions p
// at both vertices becomes the representation with all spaces K^p, identity
// matrices along each arm except the last arrow, the first arm ending in
// N(first arrow), the second in N(second arrow), and every further arm's
// last arrow solved from its relation. Fully faithful and exact on such N.
// Throws ShapeMismatch unless N lives on a Kronecker-shaped quiver, and
// DimensionMismatch unless its two dimensions agree.
Representation kronecker_embed(const TubeSystem& ts, const Representation& n);

}  // namespace semicanon
