#include "semicanon/json_io.hpp"

#include <cstdint>
#include <utility>

namespace semicanon {

namespace {

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(errc::ParseError, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string str_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_string())
        throw Error(errc::ParseError, std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

long long int_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_integer())
        throw Error(errc::ParseError, std::string("key '") + key + "' must be an integer");
    return v.get<long long>();
}

std::vector<std::string> str_array(const json& v, const char* what) {
    if (!v.is_array())
        throw Error(errc::ParseError, std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const json& e : v) {
        if (!e.is_string())
            throw Error(errc::ParseError, std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

mpq_class rational_from_string(const std::string& s) {
    return Field::rationals().parse(s).rational_value();
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& rows, std::size_t nr, std::size_t nc, const Field& f,
                        const std::string& what) {
    if (!rows.is_array() || rows.size() != nr)
        throw Error(errc::ParseError, "matrix for " + what + " must have " + std::to_string(nr) +
                                          " rows");
    Matrix m(nr, nc, f);
    for (std::size_t r = 0; r < nr; ++r) {
        const json& row = rows.at(r);
        if (!row.is_array() || row.size() != nc)
            throw Error(errc::ParseError, "matrix row for " + what + " must have " +
                                              std::to_string(nc) + " entries");
        for (std::size_t c = 0; c < nc; ++c) {
            if (!row.at(c).is_string())
                throw Error(errc::ParseError, "matrix entries for " + what + " must be strings");
            m.at(r, c) = f.parse(row.at(c).get<std::string>());
        }
    }
    return m;
}

}  // namespace

json field_to_json(const Field& f) {
    json j;
    j["kind"] = f.is_rational() ? "rational" : "prime";
    if (!f.is_rational()) j["modulus"] = std::to_string(f.modulus());
    return j;
}

Field field_from_json(const json& j) {
    std::string kind = str_member(j, "kind");
    if (kind == "rational") return Field::rationals();
    if (kind != "prime") throw Error(errc::ParseError, "unknown field kind '" + kind + "'");
    if (!j.contains("modulus")) return Field::prime();
    const json& m = j.at("modulus");
    if (m.is_number_unsigned()) return Field::prime(m.get<std::uint64_t>());
    if (m.is_number_integer() && m.get<long long>() > 0)
        return Field::prime(static_cast<std::uint64_t>(m.get<long long>()));
    if (m.is_string()) {
        const std::string& s = m.get<std::string>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw Error(errc::ParseError, "bad modulus '" + s + "'");
        try {
            return Field::prime(std::stoull(s));
        } catch (const std::out_of_range&) {
            throw Error(errc::ParseError, "modulus '" + s + "' out of range");
        }
    }
    throw Error(errc::ParseError, "modulus must be a positive integer or decimal string");
}

json algebra_to_json(const BoundQuiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"from", a.source}, {"to", a.target}});
    json relations = json::array();
    for (const Relation& rel : q.relations()) {
        json terms = json::array();
        for (const RelationTerm& t : rel)
            terms.push_back({{"coeff", t.coeff.get_str()}, {"path", t.path}});
        relations.push_back(std::move(terms));
    }
    return {{"vertices", q.vertices()}, {"arrows", arrows}, {"relations", relations}};
}

std::shared_ptr<const BoundQuiver> algebra_from_json(const json& j) {
    std::vector<std::string> vertices = str_array(member(j, "vertices"), "vertices");
    const json& ja = member(j, "arrows");
    if (!ja.is_array()) throw Error(errc::ParseError, "arrows must be an array");
    std::vector<Arrow> arrows;
    arrows.reserve(ja.size());
    for (const json& a : ja)
        arrows.push_back({str_member(a, "id"), str_member(a, "from"), str_member(a, "to")});
    const json& jr = member(j, "relations");
    if (!jr.is_array()) throw Error(errc::ParseError, "relations must be an array");
    std::vector<Relation> relations;
    relations.reserve(jr.size());
    for (const json& r : jr) {
        if (!r.is_array()) throw Error(errc::ParseError, "each relation must be an array");
        Relation rel;
        for (const json& t : r)
            rel.push_back({rational_from_string(str_member(t, "coeff")),
                           str_array(member(t, "path"), "path")});
        relations.push_back(std::move(rel));
    }
    return std::make_shared<BoundQuiver>(std::move(vertices), std::move(arrows),
                                         std::move(relations));
}

json dim_to_json(const BoundQuiver& q, const DimVector& d) {
    if (d.size() != q.vertices().size())
        throw Error(errc::VertexMismatch, "dimension vector length mismatch");
    json j = json::object();
    for (std::size_t i = 0; i < d.size(); ++i) j[q.vertices()[i]] = d[i];
    return j;
}

DimVector dim_from_json(const BoundQuiver& q, const json& j) {
    if (!j.is_object()) throw Error(errc::ParseError, "dim must be an object");
    DimVector d(q.vertices().size(), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer())
            throw Error(errc::ParseError, "dim entries must be integers");
        d[q.vertex_index(it.key())] = it.value().get<long long>();
    }
    return d;
}

json representation_to_json(const Representation& m) {
    const BoundQuiver& q = *m.quiver_ptr();
    json mats = json::object();
    for (const Arrow& a : q.arrows()) mats[a.id] = matrix_to_json(m.matrix(a.id));
    json dims = json::object();
    for (const std::string& v : q.vertices()) dims[v] = m.dim_at(v);
    return {{"algebra", algebra_to_json(q)},
            {"dim", dims},
            {"matrices", mats},
            {"field", field_to_json(m.field())}};
}

Representation representation_from_json(const json& j) {
    return representation_from_json(j, algebra_from_json(member(j, "algebra")));
}

Representation representation_from_json(const json& j,
                                        std::shared_ptr<const BoundQuiver> quiver) {
    Field f = field_from_json(member(j, "field"));
    DimVector d = dim_from_json(*quiver, member(j, "dim"));
    Representation m(quiver, f, std::move(d));
    const json& mats = member(j, "matrices");
    if (!mats.is_object()) throw Error(errc::ParseError, "matrices must be an object");
    for (const Arrow& a : quiver->arrows()) {
        if (!mats.contains(a.id))
            throw Error(errc::ParseError, "missing matrix for arrow '" + a.id + "'");
        m.set_matrix(a.id, matrix_from_json(
                               mats.at(a.id), static_cast<std::size_t>(m.dim_at(a.target)),
                               static_cast<std::size_t>(m.dim_at(a.source)), f, a.id));
    }
    if (mats.size() != quiver->arrows().size())
        throw Error(errc::ParseError, "matrices object has entries for unknown arrows");
    return m;
}

json canonical_spec_to_json(const CanonicalSpec& spec) {
    json params = json::array();
    for (const mpq_class& p : spec.params) params.push_back(p.get_str());
    return {{"weights", spec.weights}, {"params", params}};
}

CanonicalSpec canonical_spec_from_json(const json& j) {
    CanonicalSpec spec;
    const json& w = member(j, "weights");
    if (!w.is_array()) throw Error(errc::ParseError, "weights must be an array");
    for (const json& e : w) {
        if (!e.is_number_integer())
            throw Error(errc::ParseError, "weights entries must be integers");
        spec.weights.push_back(e.get<long long>());
    }
    const json& p = member(j, "params");
    if (!p.is_array()) throw Error(errc::ParseError, "params must be an array");
    for (const json& e : p) {
        if (e.is_number_integer())
            spec.params.emplace_back(static_cast<long>(e.get<long long>()));
        else if (e.is_string())
            spec.params.push_back(rational_from_string(e.get<std::string>()));
        else
            throw Error(errc::ParseError, "params entries must be strings or integers");
    }
    return spec;
}

json tube_point_to_json(const TubePoint& pt) {
    return {{"zeta", pt.zeta.str()}, {"xi", pt.xi.str()}};
}

TubePoint tube_point_from_json(const json& j, const Field& f) {
    return normalize_point(f.parse(str_member(j, "zeta")), f.parse(str_member(j, "xi")));
}

json tube_module_to_json(const TubeModuleSpec& spec) {
    json point;
    if (spec.exceptional)
        point = json{{"exceptional", *spec.exceptional}};
    else if (spec.homogeneous)
        point = json{{"zeta", spec.homogeneous->first.str()},
                     {"xi", spec.homogeneous->second.str()}};
    else
        throw Error(errc::InvalidParams, "module spec carries no point");
    return {{"point", point}, {"socle", spec.socle}, {"length", spec.length}};
}

TubeModuleSpec tube_module_from_json(const json& j, const Field& f) {
    TubeModuleSpec spec;
    const json& pt = member(j, "point");
    if (pt.is_object() && pt.contains("exceptional")) {
        long long k = int_member(pt, "exceptional");
        if (k < 0) throw Error(errc::ParseError, "exceptional index must be nonnegative");
        spec.exceptional = static_cast<std::size_t>(k);
    } else {
        TubePoint p = tube_point_from_json(pt, f);
        spec.homogeneous = {p.zeta, p.xi};
    }
    spec.socle = int_member(j, "socle");
    spec.length = int_member(j, "length");
    return spec;
}

json tube_system_to_json(const TubeSystem& ts) {
    json tubes = json::array();
    for (const ExceptionalTube& t : ts.tubes) {
        json evs = json::array();
        for (const DimVector& e : t.e) evs.push_back(dim_to_json(*ts.quiver, e));
        tubes.push_back({{"point", tube_point_to_json(t.point)},
                         {"rank", t.rank},
                         {"arm", t.arm},
                         {"e", evs}});
    }
    return {{"spec", canonical_spec_to_json(ts.spec)},
            {"algebra", algebra_to_json(*ts.quiver)},
            {"h", dim_to_json(*ts.quiver, ts.h)},
            {"tubes", tubes}};
}

json profile_to_json(const RegularProfile& profile) {
    json residual = json::object();
    for (std::size_t k = 0; k < profile.residual.size(); ++k)
        residual[std::to_string(k)] = profile.residual[k];
    return {{"p", profile.p}, {"residual", residual}};
}

json ext_minimal_to_json(const ExtMinimal& em) {
    json segments = json::array();
    for (const SegmentSpec& s : em.segments)
        segments.push_back({{"tube", s.tube}, {"socle", s.socle}, {"length", s.length}});
    json j = {{"segments", segments}, {"homogeneousLength", em.homogeneous_length}};
    j["genericPoint"] = em.generic_point ? tube_point_to_json(*em.generic_point) : json(nullptr);
    return j;
}

json weight_report_to_json(const BoundQuiver& q, const WeightSpaceReport& report) {
    return {{"r", dim_to_json(q, report.r)},
            {"pR", report.p_r},
            {"monomials", report.monomials},
            {"samples", report.samples},
            {"rank", report.rank},
            {"binomialPrediction", report.prediction},
            {"certified", report.certified}};
}

json presentation_to_json(const BoundQuiver& q, const PresentationReport& report) {
    json gens = json::array();
    for (const TGenerator& g : report.t_generators)
        gens.push_back({{"tube", g.tube},
                        {"index", g.index},
                        {"length", g.length},
                        {"degree", dim_to_json(q, g.degree)},
                        {"module", tube_module_to_json(g.module)}});
    json rels = json::array();
    for (const RelationRecord& r : report.relations) {
        json coeffs = json::array();
        for (const Fe& c : r.coefficients) coeffs.push_back(c.str());
        rels.push_back({{"tube", r.tube},
                        {"point", tube_point_to_json(r.point)},
                        {"coefficients", coeffs},
                        {"monomial", r.monomial},
                        {"eliminatesVariable", r.eliminates_variable}});
    }
    return {{"p", report.p},
            {"tGenerators", gens},
            {"relations", rels},
            {"iOfD", report.i_of_d},
            {"reducedEquations", report.reduced_equations},
            {"isPolynomial", report.is_polynomial}};
}

json verify_to_json(const VerifyReport& report) {
    json certs = json::array();
    for (const RelationCertificate& c : report.certificates)
        certs.push_back({{"tube", c.tube},
                         {"recovered", tube_point_to_json(c.recovered)},
                         {"matchesCalibrated", c.matches_calibrated},
                         {"scalar", c.scalar.str()},
                         {"residualZero", c.residual_zero}});
    return {{"certificates", certs}, {"samples", report.samples}};
}

json hilbert_rows_to_json(const BoundQuiver& q, const std::vector<HilbertRow>& rows) {
    json out = json::array();
    for (const HilbertRow& row : rows)
        out.push_back({{"r", dim_to_json(q, row.r)},
                       {"monomials", row.monomials},
                       {"monomialsPredicted", row.monomials_predicted},
                       {"quotientPredicted", row.quotient_predicted},
                       {"measured", row.measured},
                       {"certified", row.certified}});
    return out;
}

json error_to_json(const Error& e) {
    std::string message = e.what();
    std::string prefix = e.code() + ": ";
    if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
    return {{"error", {{"code", e.code()}, {"message", message}}}};
}

std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

}  // namespace semicanon
