// Command-line front end. Every run prints exactly one JSON document to
// stdout (and to --json-out when given); identical invocations produce
// byte-identical documents. Exit codes: 0 ok, 1 verification failure
// (DegenerateSamples, RelationFailure, RankMismatch), 2 input error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semicanon/json_io.hpp"
#include "semicanon/rng.hpp"

using namespace semicanon;

namespace {

struct Options {
    std::vector<long long> weights;
    std::vector<std::string> params;
    std::string field_kind = "prime";
    std::uint64_t modulus = kDefaultModulus;
    std::uint64_t seed = 0;
    std::size_t samples = 12;
    std::string json_out;
    std::string dim_text;
    std::string profile_text;
    std::string r_text;
    std::string module_text;
    std::string modules_text;
    std::string rep_path;
    std::string module_out;
};

void add_spec_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--weights", o.weights, "arm weights, comma separated")
        ->required()
        ->delimiter(',');
    cmd->add_option("--params", o.params, "arm parameters beyond the second, comma separated")
        ->delimiter(',');
}

void add_run_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--field", o.field_kind, "working field")
        ->check(CLI::IsMember({"prime", "rational"}));
    cmd->add_option("--modulus", o.modulus, "prime field modulus");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--samples", o.samples, "verification sample count");
    cmd->add_option("--json-out", o.json_out, "also write the document here");
}

void add_dim_flags(CLI::App* cmd, Options& o) {
    auto* d = cmd->add_option("--dim", o.dim_text,
                              "dimension vector: comma list in algebra vertex order, 0, h, or kh");
    auto* p = cmd->add_option("--profile", o.profile_text,
                              "profile p:r,..;r,..;.. (one residual group per tube)");
    d->excludes(p);
    p->excludes(d);
}

TubeSystem build(const Options& o) {
    CanonicalSpec spec;
    spec.weights = o.weights;
    Field rat = Field::rationals();
    for (const std::string& s : o.params) spec.params.push_back(rat.parse(s).rational_value());
    return build_canonical(spec);
}

Field make_field(const Options& o) {
    return o.field_kind == "rational" ? Field::rationals() : Field::prime(o.modulus);
}

long long parse_count(const std::string& s, const char* what) {
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw Error(errc::InvalidParams, std::string("bad ") + what + " '" + s + "'");
    return std::stoll(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t from = 0;
    while (true) {
        std::size_t at = s.find(sep, from);
        out.push_back(s.substr(from, at - from));
        if (at == std::string::npos) return out;
        from = at + 1;
    }
}

RegularProfile parse_profile(const TubeSystem& ts, const std::string& text) {
    RegularProfile prof;
    std::size_t colon = text.find(':');
    prof.p = parse_count(text.substr(0, colon), "profile mass");
    prof.residual.resize(ts.tubes.size());
    for (std::size_t k = 0; k < ts.tubes.size(); ++k)
        prof.residual[k].assign(static_cast<std::size_t>(ts.tubes[k].rank), 0);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (rest.empty()) return prof;
    std::vector<std::string> groups = split(rest, ';');
    if (groups.size() != ts.tubes.size())
        throw Error(errc::InvalidParams, "profile needs one residual group per tube");
    for (std::size_t k = 0; k < groups.size(); ++k) {
        std::vector<std::string> entries = split(groups[k], ',');
        if (entries.size() != prof.residual[k].size())
            throw Error(errc::InvalidParams, "residual group size must match the tube rank");
        for (std::size_t i = 0; i < entries.size(); ++i)
            prof.residual[k][i] = parse_count(entries[i], "residual entry");
    }
    return prof;
}

DimVector parse_dim(const TubeSystem& ts, const std::string& text) {
    if (text.empty()) throw Error(errc::InvalidParams, "empty dimension vector");
    if (text == "0") return DimVector(ts.quiver->vertices().size(), 0);
    if (text == "h") return ts.h;
    if (text.back() == 'h')
        return dim_scale(parse_count(text.substr(0, text.size() - 1), "dimension shorthand"),
                         ts.h);
    if (text.find(':') != std::string::npos) return compose(ts, parse_profile(ts, text));
    std::vector<std::string> entries = split(text, ',');
    if (entries.size() != ts.quiver->vertices().size())
        throw Error(errc::DimensionMismatch,
                    "expected " + std::to_string(ts.quiver->vertices().size()) +
                        " entries in the algebra vertex order");
    DimVector d;
    for (const std::string& e : entries) d.push_back(parse_count(e, "dimension entry"));
    return d;
}

DimVector dim_arg(const TubeSystem& ts, const Options& o) {
    if (!o.profile_text.empty()) return compose(ts, parse_profile(ts, o.profile_text));
    if (o.dim_text.empty())
        throw Error(errc::InvalidParams, "give the dimension vector with --dim or --profile");
    return parse_dim(ts, o.dim_text);
}

DimVector dims_of(const Representation& m) {
    DimVector d;
    for (const std::string& v : m.quiver_ptr()->vertices()) d.push_back(m.dim_at(v));
    return d;
}

json parse_json_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(errc::ParseError, std::string("malformed JSON in ") + what);
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::ParseError, "cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(errc::ParseError, "malformed JSON in '" + path + "'");
    return j;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::ParseError, "cannot write '" + path + "'");
    out << bytes;
}

void emit(const json& doc, const Options& o) {
    std::string bytes = dump_document(doc);
    std::cout << bytes;
    if (!o.json_out.empty()) write_file(o.json_out, bytes);
}

const char* class_name(VectorClass c) {
    switch (c) {
        case VectorClass::Preprojective: return "preprojective";
        case VectorClass::Regular: return "regular";
        case VectorClass::Preinjective: return "preinjective";
        default: return "mixed";
    }
}

json run_decompose(const TubeSystem& ts, const DimVector& d) {
    ClassifyReport cr = classify(ts, d);
    json doc = {{"dim", dim_to_json(*ts.quiver, d)},
                {"dH", cr.d_h},
                {"hD", cr.h_d},
                {"class", class_name(cr.cls)}};
    doc["profile"] =
        cr.cls == VectorClass::Regular ? profile_to_json(decompose(ts, d)) : json(nullptr);
    return doc;
}

json run_module(const TubeSystem& ts, const Options& o) {
    json list = parse_json_text(o.modules_text, "--modules");
    if (!list.is_array() || list.empty())
        throw Error(errc::InvalidParams, "--modules needs a nonempty JSON array");
    Field f = make_field(o);
    Representation sum = tube_module(ts, tube_module_from_json(list.at(0), f), f);
    for (std::size_t i = 1; i < list.size(); ++i)
        sum = direct_sum(sum, tube_module(ts, tube_module_from_json(list.at(i), f), f));
    return representation_to_json(sum);
}

json run_eval(const TubeSystem& ts, const Options& o) {
    TubeModuleSpec vspec = tube_module_from_json(
        parse_json_text(o.module_text, "--module"), Field::rationals());
    Representation m = representation_from_json(read_json_file(o.rep_path), ts.quiver);
    DimVector d = dims_of(m);
    SemiInvariant si = make_semi_invariant(ts, {vspec}, d);
    Fe value = eval_c(si, m);
    return {{"module", tube_module_to_json(vspec)},
            {"dim", dim_to_json(*ts.quiver, d)},
            {"field", field_to_json(m.field())},
            {"value", value.str()}};
}

json run_verify(const TubeSystem& ts, const DimVector& d, const Options& o) {
    PresentationReport report = presentation(ts, d);
    Field f = make_field(o);
    Rng rng(o.seed);
    VerifyReport v = verify_relations(ts, d, report, f, rng, o.samples);
    json doc = {{"spec", canonical_spec_to_json(ts.spec)},
                {"dim", dim_to_json(*ts.quiver, d)},
                {"field", field_to_json(f)},
                {"seed", o.seed}};
    json body = verify_to_json(v);
    doc["samples"] = body["samples"];
    doc["certificates"] = body["certificates"];
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semi-invariant rings of canonical algebras"};
    app.require_subcommand(1);
    Options o;

    CLI::App* algebra = app.add_subcommand("algebra", "build the algebra and its tube system");
    add_spec_flags(algebra, o);
    add_run_flags(algebra, o);

    CLI::App* decomp =
        app.add_subcommand("decompose", "classify a dimension vector and profile it");
    add_spec_flags(decomp, o);
    add_run_flags(decomp, o);
    add_dim_flags(decomp, o);

    CLI::App* module_cmd =
        app.add_subcommand("module", "realize a direct sum of tube modules");
    add_spec_flags(module_cmd, o);
    add_run_flags(module_cmd, o);
    module_cmd->add_option("--modules", o.modules_text, "JSON array of module specs")
        ->required();

    CLI::App* extmin = app.add_subcommand(
        "extminimal", "ext-minimal witness of a regular vector, with a realized module");
    add_spec_flags(extmin, o);
    add_run_flags(extmin, o);
    add_dim_flags(extmin, o);
    extmin->add_option("--module-out", o.module_out, "write the realized module here");

    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate a tube module's semi-invariant on a module file");
    add_spec_flags(eval_cmd, o);
    add_run_flags(eval_cmd, o);
    eval_cmd->add_option("--module", o.module_text, "tube module spec (JSON)")->required();
    eval_cmd->add_option("--rep", o.rep_path, "representation JSON file")->required();

    CLI::App* weightdim =
        app.add_subcommand("weightdim", "certified dimension of one weight space");
    add_spec_flags(weightdim, o);
    add_run_flags(weightdim, o);
    add_dim_flags(weightdim, o);
    weightdim->add_option("--r", o.r_text, "graded degree (same forms as --dim)")->required();

    CLI::App* pres =
        app.add_subcommand("presentation", "generators, relations, and intersection counts");
    add_spec_flags(pres, o);
    add_run_flags(pres, o);
    add_dim_flags(pres, o);

    CLI::App* verify =
        app.add_subcommand("verify", "certify the relations against sampled modules");
    add_spec_flags(verify, o);
    add_run_flags(verify, o);
    add_dim_flags(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << dump_document(
            json{{"error", {{"code", errc::InvalidParams}, {"message", e.what()}}}});
        return 2;
    }

    try {
        TubeSystem ts = build(o);
        if (*algebra) {
            emit(tube_system_to_json(ts), o);
        } else if (*decomp) {
            emit(run_decompose(ts, dim_arg(ts, o)), o);
        } else if (*module_cmd) {
            emit(run_module(ts, o), o);
        } else if (*extmin) {
            DimVector d = dim_arg(ts, o);
            ExtMinimal em = ext_minimal(ts, d);
            Representation m = realize_ext_minimal(ts, em, make_field(o));
            json jrep = representation_to_json(m);
            if (!o.module_out.empty()) write_file(o.module_out, dump_document(jrep));
            emit(json{{"dim", dim_to_json(*ts.quiver, d)},
                      {"witness", ext_minimal_to_json(em)},
                      {"module", jrep}},
                 o);
        } else if (*eval_cmd) {
            emit(run_eval(ts, o), o);
        } else if (*weightdim) {
            DimVector d = dim_arg(ts, o);
            DimVector r = parse_dim(ts, o.r_text);
            Field f = make_field(o);
            Rng rng(o.seed);
            emit(weight_report_to_json(*ts.quiver, weight_space_dim(ts, d, r, f, rng)), o);
        } else if (*pres) {
            emit(presentation_to_json(*ts.quiver, presentation(ts, dim_arg(ts, o))), o);
        } else if (*verify) {
            emit(run_verify(ts, dim_arg(ts, o), o), o);
        }
        return 0;
    } catch (const Error& e) {
        emit(error_to_json(e), o);
        const std::string& code = e.code();
        bool verification = code == errc::DegenerateSamples || code == errc::RelationFailure ||
                            code == errc::RankMismatch;
        return verification ? 1 : 2;
    }
}
