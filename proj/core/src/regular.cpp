#include "semicanon/regular.hpp"

#include <algorithm>

#include "semicanon/error.hpp"

namespace semicanon {

namespace {

// The unique vertex where a unit class sits.
std::size_t unit_vertex(const DimVector& e) {
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] != 0) return v;
    throw Error(errc::InvalidParams, "zero tube class");
}

long long wrap(long long i, long long r) { return ((i % r) + r) % r; }

// Multiplicity of the factor index among the composition factors of the
// segment (socle, length) in a rank-r tube.
long long factor_count(long long rank, long long socle, long long length, long long idx) {
    long long c = 0;
    for (long long s = 0; s < length; ++s)
        if (wrap(socle + s, rank) == idx) ++c;
    return c;
}

}  // namespace

RegularProfile decompose(const TubeSystem& ts, const DimVector& d) {
    const BoundQuiver& q = *ts.quiver;
    if (d.size() != q.vertices().size())
        throw Error(errc::VertexMismatch, "dimension vector length mismatch");
    long long d0 = d[q.vertex_index("0")];
    RegularProfile prof;
    long long base_sum = 0;
    for (const ExceptionalTube& tube : ts.tubes) {
        // p_{k,i} - p_{k,0} = d(v_i) - d(0) at the unit vertex of e_{k,i};
        // the tube minimum being zero then pins p_{k,0}.
        std::vector<long long> res(static_cast<std::size_t>(tube.rank), 0);
        long long mn = 0;
        for (long long i = 1; i < tube.rank; ++i) {
            std::size_t v = unit_vertex(tube.e[static_cast<std::size_t>(i)]);
            res[static_cast<std::size_t>(i)] = d[v] - d0;
            mn = std::min(mn, res[static_cast<std::size_t>(i)]);
        }
        for (long long& x : res) x -= mn;
        base_sum += res[0];
        prof.residual.push_back(std::move(res));
    }
    prof.p = d0 - base_sum;
    if (prof.p < 0 || compose(ts, prof) != d)
        throw Error(errc::NotRegular, "not a nonnegative combination of h and tube classes");
    return prof;
}

DimVector compose(const TubeSystem& ts, const RegularProfile& profile) {
    if (profile.residual.size() != ts.tubes.size())
        throw Error(errc::InvalidParams, "profile tube count mismatch");
    if (profile.p < 0)
        throw Error(errc::InvalidParams, "negative homogeneous coefficient");
    DimVector d = dim_scale(profile.p, ts.h);
    for (std::size_t k = 0; k < ts.tubes.size(); ++k) {
        const auto& res = profile.residual[k];
        if (static_cast<long long>(res.size()) != ts.tubes[k].rank)
            throw Error(errc::InvalidParams, "profile rank mismatch");
        for (std::size_t i = 0; i < res.size(); ++i) {
            if (res[i] < 0) throw Error(errc::InvalidParams, "negative residual");
            if (res[i] != 0) d = dim_add(d, dim_scale(res[i], ts.tubes[k].e[i]));
        }
    }
    return d;
}

IndexData index_data(const RegularProfile& profile) {
    IndexData out;
    for (const auto& p : profile.residual) {
        long long r = static_cast<long long>(p.size());
        std::vector<long long> ci, ci0;
        std::map<long long, long long> ns, nz;
        for (long long i = 0; i < r; ++i) {
            std::size_t ui = static_cast<std::size_t>(i);
            if (p[ui] == 0) {
                ci0.push_back(i);
                long long n = 1;
                while (p[static_cast<std::size_t>(wrap(i + n, r))] != 0) ++n;
                nz[i] = n;
            }
            // The first return of the value decides membership: a later
            // return would hold this index in its interior without excess.
            for (long long n = 1; n <= r; ++n) {
                if (p[static_cast<std::size_t>(wrap(i + n, r))] != p[ui]) continue;
                bool strict = true;
                for (long long j = 1; j < n; ++j)
                    strict = strict && p[static_cast<std::size_t>(wrap(i + j, r))] > p[ui];
                if (strict) {
                    ci.push_back(i);
                    ns[i] = n;
                }
                break;
            }
        }
        out.cal_i.push_back(std::move(ci));
        out.cal_i0.push_back(std::move(ci0));
        out.n_strict.push_back(std::move(ns));
        out.n_to_zero.push_back(std::move(nz));
    }
    return out;
}

ExtMinimal ext_minimal(const TubeSystem& ts, const DimVector& d,
                       const std::vector<TubePoint>& avoid) {
    RegularProfile prof = decompose(ts, d);
    ExtMinimal out;
    out.homogeneous_length = prof.p;
    for (std::size_t k = 0; k < prof.residual.size(); ++k) {
        std::vector<long long> p = prof.residual[k];
        long long r = static_cast<long long>(p.size());
        while (true) {
            std::vector<long long> starts;
            for (long long i = 0; i < r; ++i)
                if (p[static_cast<std::size_t>(i)] != 0 &&
                    p[static_cast<std::size_t>(wrap(i - 1, r))] == 0)
                    starts.push_back(i);
            if (starts.empty()) break;
            for (long long i : starts) {
                long long m = 1;
                while (p[static_cast<std::size_t>(wrap(i + m, r))] != 0) ++m;
                out.segments.push_back({k, i, m});
                for (long long j = 0; j < m; ++j) --p[static_cast<std::size_t>(wrap(i + j, r))];
            }
        }
    }
    if (prof.p > 0) {
        Field rat = Field::rationals();
        for (long long xi = 0;; ++xi) {
            TubePoint cand = normalize_point(rat.one(), rat.from_int(xi));
            bool taken = ts.tube_at(cand) != nullptr;
            for (const TubePoint& a : avoid) taken = taken || same_point(cand, a);
            if (!taken) {
                out.generic_point = cand;
                break;
            }
        }
    }
    return out;
}

Representation realize_ext_minimal(const TubeSystem& ts, const ExtMinimal& em, const Field& f) {
    std::optional<Representation> acc;
    auto add = [&](const Representation& r) {
        acc = acc ? direct_sum(*acc, r) : r;
    };
    for (const SegmentSpec& seg : em.segments) {
        TubeModuleSpec spec;
        spec.exceptional = seg.tube;
        spec.socle = seg.socle;
        spec.length = seg.length;
        add(tube_module(ts, spec, f));
    }
    if (em.homogeneous_length > 0) {
        if (!em.generic_point)
            throw Error(errc::InvalidParams, "homogeneous mass without a point");
        TubeModuleSpec spec;
        spec.homogeneous = {em.generic_point->zeta, em.generic_point->xi};
        spec.length = em.homogeneous_length;
        add(tube_module(ts, spec, f));
    }
    if (!acc) return Representation(ts.quiver, f, DimVector(ts.quiver->vertices().size(), 0));
    return *acc;
}

ClassifyReport classify(const TubeSystem& ts, const DimVector& d) {
    ClassifyReport rep;
    rep.d_h = tits_form(*ts.quiver, d, ts.h);
    rep.h_d = tits_form(*ts.quiver, ts.h, d);
    if (rep.d_h == 0 && rep.h_d == 0) {
        bool regular = true;
        try {
            decompose(ts, d);
        } catch (const Error&) {
            regular = false;
        }
        rep.cls = regular ? VectorClass::Regular : VectorClass::Mixed;
    } else if (rep.d_h > 0 && rep.h_d <= 0) {
        rep.cls = VectorClass::Preprojective;
    } else if (rep.h_d > 0 && rep.d_h <= 0) {
        rep.cls = VectorClass::Preinjective;
    } else {
        rep.cls = VectorClass::Mixed;
    }
    return rep;
}

long long tube_hom_dim(long long rank, long long i, long long n, long long j, long long m) {
    if (rank < 1 || n < 1 || m < 1)
        throw Error(errc::InvalidParams, "rank and lengths must be positive");
    long long top = wrap(i + n - 1, rank);
    return std::min(factor_count(rank, j, m, top), factor_count(rank, i, n, wrap(j, rank)));
}

}  // namespace semicanon
