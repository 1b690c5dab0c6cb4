#include "semicanon/presentation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "semicanon/error.hpp"
#include "semicanon/matrix.hpp"

namespace semicanon {

PresentationReport presentation(const TubeSystem& ts, const DimVector& d) {
    RegularProfile prof = decompose(ts, d);
    if (prof.p <= 0) throw Error(errc::ZeroMass, "no homogeneous mass in d");
    IndexData id = index_data(prof);

    PresentationReport rep;
    rep.p = prof.p;
    for (std::size_t k = 0; k < id.cal_i.size(); ++k) {
        for (long long i : id.cal_i[k]) {
            long long n = id.n_strict[k].at(i);
            TubeModuleSpec spec;
            spec.exceptional = k;
            spec.socle = i + 1;
            spec.length = n;
            rep.t_generators.push_back({k, i, n, ts.segment_dim(k, i + 1, n), spec});
        }
        if (id.cal_i[k].size() > 1) ++rep.i_of_d;

        RelationRecord rel;
        rel.tube = k;
        rel.point = ts.tubes[k].point;
        for (long long j = 0; j <= prof.p; ++j)
            rel.coefficients.push_back(rel.point.xi.pow(j) * rel.point.zeta.pow(prof.p - j));
        rel.monomial = id.cal_i0[k];
        rel.eliminates_variable = rel.monomial.size() == 1;
        rep.relations.push_back(std::move(rel));
    }
    rep.reduced_equations = std::max<long long>(
        0, static_cast<long long>(rep.i_of_d) - rep.p - 1);
    rep.is_polynomial = static_cast<long long>(rep.i_of_d) <= rep.p + 1;
    return rep;
}

namespace {

Fe into_field(const Fe& rational, const Field& f) {
    return f.from_rational(rational.rational_value());
}

}  // namespace

VerifyReport verify_relations(const TubeSystem& ts, const DimVector& d,
                              const PresentationReport& report, const Field& f, Rng& rng,
                              std::size_t samples) {
    VerifyReport out;
    if (report.relations.empty()) return out;
    std::size_t n = std::max<std::size_t>(samples, static_cast<std::size_t>(report.p) + 4);
    out.samples = n;

    std::map<std::pair<std::size_t, long long>, SemiInvariant> gens;
    for (const TGenerator& g : report.t_generators)
        gens.emplace(std::make_pair(g.tube, g.index), make_semi_invariant(ts, {g.module}, d));

    ReducedPencil rp = reduced_pencil(ts, d, f, rng);
    std::vector<Representation> mods;
    std::vector<BinaryForm> forms;
    for (std::size_t k = 0; k < n; ++k) {
        mods.push_back(sample_regular(ts, d, f, rng));
        forms.push_back(reduced_form(rp, ts, mods.back()));
    }

    for (const RelationRecord& rel : report.relations) {
        std::vector<Fe> lhs, rhs;
        for (std::size_t k = 0; k < n; ++k) {
            Fe prod = f.one();
            for (long long i : rel.monomial) {
                auto it = gens.find({rel.tube, i});
                if (it == gens.end())
                    throw Error(errc::InvalidParams, "relation monomial names a missing generator");
                prod *= eval_c(it->second, mods[k]);
            }
            lhs.push_back(prod);
            Fe combo = f.zero();
            for (long long j = 0; j <= report.p; ++j)
                combo += into_field(rel.coefficients[static_cast<std::size_t>(j)], f) *
                         forms[k].coeffs[static_cast<std::size_t>(j)];
            rhs.push_back(combo);
        }

        std::size_t pivot = n;
        for (std::size_t k = 0; k < n; ++k)
            if (!rhs[k].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot == n) {
            if (std::all_of(lhs.begin(), lhs.end(), [](const Fe& v) { return v.is_zero(); }))
                throw Error(errc::DegenerateSamples, "relation sides vanish on every sample");
            throw Error(errc::RelationFailure,
                        "tube " + std::to_string(rel.tube) + ": coefficient side vanishes but the "
                        "generator product does not (witness sample " +
                            std::to_string(pivot) + ")");
        }
        Fe kappa = lhs[pivot] / rhs[pivot];
        for (std::size_t k = 0; k < n; ++k)
            if (lhs[k] != kappa * rhs[k])
                throw Error(errc::RelationFailure, "tube " + std::to_string(rel.tube) +
                                                       ": nonzero residual at witness sample " +
                                                       std::to_string(k));
        if (kappa.is_zero())
            throw Error(errc::RelationFailure,
                        "tube " + std::to_string(rel.tube) + ": generator product vanishes on "
                        "every sample");

        // Independent point recovery: kernel of [f_0 .. f_p, -lhs].
        std::size_t w = static_cast<std::size_t>(report.p) + 2;
        Matrix sys(n, w, f);
        for (std::size_t k = 0; k < n; ++k) {
            for (long long j = 0; j <= report.p; ++j)
                sys.at(k, static_cast<std::size_t>(j)) = forms[k].coeffs[static_cast<std::size_t>(j)];
            sys.at(k, w - 1) = -lhs[k];
        }
        Matrix ker = sys.kernel();
        if (ker.rows() != 1)
            throw Error(errc::DegenerateSamples,
                        "relation fit is not unique; increase the sample count");
        Fe scale = ker.at(0, w - 1);
        if (scale.is_zero())
            throw Error(errc::DegenerateSamples, "degenerate kernel fit for the relation scalar");
        std::vector<Fe> u;
        for (long long j = 0; j <= report.p; ++j)
            u.push_back(ker.at(0, static_cast<std::size_t>(j)) / scale);

        TubePoint rec = u[0].is_zero() ? normalize_point(f.zero(), f.one())
                                       : normalize_point(u[0], u[1]);
        Fe check_scale;
        bool have_scale = false;
        for (long long j = 0; j <= report.p; ++j) {
            Fe wj = rec.xi.pow(j) * rec.zeta.pow(report.p - j);
            if (!have_scale && !wj.is_zero()) {
                check_scale = u[static_cast<std::size_t>(j)] / wj;
                have_scale = true;
            }
            if (u[static_cast<std::size_t>(j)] !=
                (wj.is_zero() ? f.zero() : check_scale * wj))
                throw Error(errc::DegenerateSamples,
                            "recovered coefficients are not powers of one point");
        }

        TubePoint calib = point_to_field(ts.tubes[rel.tube].point, f);
        out.certificates.push_back({rel.tube, rec,
                                    rec.zeta == calib.zeta && rec.xi == calib.xi, kappa, true});
    }
    return out;
}

std::vector<HilbertRow> hilbert_check(const TubeSystem& ts, const DimVector& d,
                                      const std::vector<DimVector>& r_list, const Field& f,
                                      Rng& rng) {
    std::vector<HilbertRow> rows;
    long long tubes = static_cast<long long>(ts.tubes.size());
    for (const DimVector& r : r_list) {
        WeightSpaceReport w = weight_space_dim(ts, d, r, f, rng);
        HilbertRow row;
        row.r = r;
        row.monomials = w.monomials;
        long long pd = decompose(ts, d).p;
        row.monomials_predicted = binomial(w.p_r + pd + tubes, w.p_r);
        row.quotient_predicted = w.prediction;
        row.measured = w.rank;
        row.certified = w.certified;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace semicanon
