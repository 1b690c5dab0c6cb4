// JSON documents for every type that crosses the command-line boundary.
// Scalars serialize as strings ("a/b" or "a" over the rationals, the decimal
// residue over a prime field) so no reader ever rounds them; the field itself
// is recorded once per document, with the modulus as a decimal string.
// Serialization is deterministic: keys keep their schema order and
// dump_document fixes the layout, so equal values give byte-identical files.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicanon/presentation.hpp"
#include "semicanon/regular.hpp"

namespace semicanon {

using json = nlohmann::ordered_json;

json field_to_json(const Field& f);
// Accepts {"kind": "rational"} or {"kind": "prime", "modulus"?: string|int};
// a prime document without a modulus gets the default one.
Field field_from_json(const json& j);

// { "vertices": [...], "arrows": [{"id","from","to"}],
//   "relations": [[{"coeff","path"}]] }
json algebra_to_json(const BoundQuiver& q);
std::shared_ptr<const BoundQuiver> algebra_from_json(const json& j);

// Dimension vectors as {vertex: n}. Writing lists every vertex; reading
// defaults missing vertices to zero and rejects unknown names.
json dim_to_json(const BoundQuiver& q, const DimVector& d);
DimVector dim_from_json(const BoundQuiver& q, const json& j);

// { "algebra": <inline>, "dim": {...}, "matrices": {arrowId: [[scalar]]},
//   "field": {...} }; matrix shapes are dim(target) x dim(source).
json representation_to_json(const Representation& m);
Representation representation_from_json(const json& j);
// Reuse an existing algebra (the document's inline algebra, if any, is
// ignored) so representations stay comparable against its other modules.
Representation representation_from_json(const json& j,
                                        std::shared_ptr<const BoundQuiver> quiver);

json canonical_spec_to_json(const CanonicalSpec& spec);
CanonicalSpec canonical_spec_from_json(const json& j);

json tube_point_to_json(const TubePoint& pt);
TubePoint tube_point_from_json(const json& j, const Field& f);

// { "point": {"exceptional": k} | {"zeta","xi"}, "socle": i, "length": n }
json tube_module_to_json(const TubeModuleSpec& spec);
TubeModuleSpec tube_module_from_json(const json& j, const Field& f);

// The full calibrated picture: spec, algebra, h, and the exceptional tubes
// with their points, ranks, arms, and simple regular classes.
json tube_system_to_json(const TubeSystem& ts);

// { "p": n, "residual": {"tubeIndex": [p_0, ...]} }, every tube explicit.
json profile_to_json(const RegularProfile& profile);

json ext_minimal_to_json(const ExtMinimal& em);

json weight_report_to_json(const BoundQuiver& q, const WeightSpaceReport& report);
json presentation_to_json(const BoundQuiver& q, const PresentationReport& report);
json verify_to_json(const VerifyReport& report);
json hilbert_rows_to_json(const BoundQuiver& q, const std::vector<HilbertRow>& rows);

// { "error": { "code": ..., "message": ... } }
json error_to_json(const Error& e);

// Canonical dump: two-space indent plus a trailing newline.
std::string dump_document(const json& j);

}  // namespace semicanon
