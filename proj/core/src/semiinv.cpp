#include "semicanon/semiinv.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "semicanon/error.hpp"
#include "semicanon/matrix.hpp"

namespace semicanon {

namespace {

// Univariate polynomials, coefficients low to high, trailing zeros stripped.
using Poly = std::vector<Fe>;

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_rem(Poly a, const Poly& b) {
    a = poly_trim(std::move(a));
    while (a.size() >= b.size()) {
        Fe q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        a = poly_trim(std::move(a));
    }
    return a;
}

// Monic gcd; both inputs nonzero.
Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    Fe lead = a.back();
    for (Fe& c : a) c = c / lead;
    return a;
}

// Exact quotient, or nullopt when the remainder is nonzero.
std::optional<Poly> poly_divide(const Poly& a0, const Poly& b) {
    Poly a = poly_trim(a0);
    if (a.size() < b.size()) return a.empty() ? std::optional<Poly>(Poly{}) : std::nullopt;
    Poly q(a.size() - b.size() + 1, b.front().field().zero());
    while (a.size() >= b.size()) {
        Fe c = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = c;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        a = poly_trim(std::move(a));
    }
    if (!a.empty()) return std::nullopt;
    return q;
}

// F = S^s T^t * core(S, T) with core's extreme coefficients nonzero; the
// dehomogenized core (T = 1) is a univariate polynomial in S with nonzero
// constant term.
struct SplitForm {
    std::size_t s = 0, t = 0;
    Poly core;
};

std::optional<SplitForm> split_form(const BinaryForm& f) {
    std::size_t lo = 0, hi = f.coeffs.size();
    while (lo < hi && f.coeffs[lo].is_zero()) ++lo;
    if (lo == hi) return std::nullopt;
    while (f.coeffs[hi - 1].is_zero()) --hi;
    return SplitForm{lo, f.coeffs.size() - hi, Poly(f.coeffs.begin() + lo, f.coeffs.begin() + hi)};
}

BinaryForm assemble_form(std::size_t s, std::size_t t, const Poly& core, const Field& f) {
    BinaryForm out;
    out.coeffs.assign(s + core.size() + t, f.zero());
    for (std::size_t i = 0; i < core.size(); ++i) out.coeffs[s + i] = core[i];
    return out;
}

BinaryForm zero_form(long long degree, const Field& f) {
    BinaryForm out;
    out.coeffs.assign(static_cast<std::size_t>(degree) + 1, f.zero());
    return out;
}

Fe fe_pow(const Fe& base, long long e) { return base.pow(e); }

// det(S*a - T*b) by interpolation at S = 0..n, T = 1.
BinaryForm det_pencil(const Matrix& a, const Matrix& b) {
    Field f = a.field();
    std::size_t n = a.rows();
    if (n == 0) {
        BinaryForm one;
        one.coeffs = {f.one()};
        return one;
    }
    Matrix vander(n + 1, n + 1, f);
    Matrix rhs(n + 1, 1, f);
    for (std::size_t i = 0; i <= n; ++i) {
        Fe x = f.from_int(static_cast<long long>(i));
        Fe pw = f.one();
        for (std::size_t j = 0; j <= n; ++j) {
            vander.at(i, j) = pw;
            pw = pw * x;
        }
        rhs.at(i, 0) = (a.scaled(x) - b).det();
    }
    auto sol = vander.solve(rhs);
    BinaryForm out;
    out.coeffs.assign(n + 1, f.zero());
    for (std::size_t j = 0; j <= n; ++j) out.coeffs[j] = sol->at(j, 0);
    return out;
}

// Product M(path[L-1]) ... M(path[from]); from < path.size().
Matrix path_product(const Representation& m, const std::vector<std::string>& path,
                    std::size_t from) {
    const BoundQuiver& q = m.quiver();
    std::size_t start = static_cast<std::size_t>(m.dim_at(q.path_source({path[from]})));
    Matrix acc = Matrix::identity(start, m.field());
    for (std::size_t i = from; i < path.size(); ++i) acc = m.matrix(path[i]) * acc;
    return acc;
}

// Solves relation rel for the first arrow of term u; false when the suffix
// system has no solution for the current random slice.
bool solve_relation_arrow(Representation& m, const Relation& rel, std::size_t u) {
    const BoundQuiver& q = m.quiver();
    const Field& f = m.field();
    const std::vector<std::string>& upath = rel[u].path;
    std::size_t src = static_cast<std::size_t>(m.dim_at(q.path_source(upath)));
    std::size_t tgt = static_cast<std::size_t>(m.dim_at(q.path_target(upath)));
    Matrix rhs(tgt, src, f);
    for (std::size_t t = 0; t < rel.size(); ++t) {
        if (t == u) continue;
        rhs = rhs + path_product(m, rel[t].path, 0).scaled(f.from_rational(rel[t].coeff));
    }
    Fe cu = f.from_rational(rel[u].coeff);
    rhs = rhs.scaled(-cu.inverse());
    Matrix suffix = path_product(m, upath, 1);
    auto sol = suffix.solve(rhs);
    if (!sol) return false;
    m.set_matrix(upath[0], *sol);
    return true;
}

}  // namespace

long long Weight::operator()(const DimVector& d) const {
    if (d.size() != coeffs.size()) throw Error(errc::VertexMismatch, "weight size mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) s += coeffs[i] * d[i];
    return s;
}

DimVector modules_dim(const TubeSystem& ts, const std::vector<TubeModuleSpec>& modules) {
    DimVector d(ts.quiver->vertices().size(), 0);
    for (const TubeModuleSpec& m : modules) {
        if (m.exceptional) {
            d = dim_add(d, ts.segment_dim(*m.exceptional, m.socle, m.length));
        } else if (m.homogeneous) {
            d = dim_add(d, dim_scale(m.length, ts.h));
        } else {
            throw Error(errc::InvalidParams, "module spec selects neither kind");
        }
    }
    return d;
}

Weight weight_of(const TubeSystem& ts, const std::vector<TubeModuleSpec>& modules) {
    const BoundQuiver& q = *ts.quiver;
    DimVector v = modules_dim(ts, modules);
    Weight w;
    w.coeffs.assign(v.begin(), v.end());
    for (const Arrow& a : q.arrows())
        w.coeffs[q.vertex_index(a.target)] -= v[q.vertex_index(a.source)];
    for (const Relation& rel : q.relations())
        w.coeffs[q.vertex_index(q.path_target(rel.front().path))] +=
            v[q.vertex_index(q.path_source(rel.front().path))];
    return w;
}

SemiInvariant make_semi_invariant(const TubeSystem& ts, std::vector<TubeModuleSpec> modules,
                                  DimVector d) {
    if (modules.empty()) throw Error(errc::InvalidParams, "empty module list");
    Weight w = weight_of(ts, modules);
    if (w(d) != 0)
        throw Error(errc::NonSquareHom, "weight of the module list does not vanish on d");
    Field rat = Field::rationals();
    std::optional<Representation> v;
    for (const TubeModuleSpec& spec : modules) {
        Representation part = tube_module(ts, spec, rat);
        v = v ? direct_sum(*v, part) : std::move(part);
    }
    PathCategory cat(ts.quiver, rat);
    return {std::move(modules), std::move(d), std::move(w),
            minimal_projective_presentation(cat, *v)};
}

Fe eval_c(const SemiInvariant& si, const Representation& m) {
    PresentationMap pm = si.presentation;
    for (auto& row : pm.blocks)
        for (AlgebraElement& e : row) e = element_to_field(e, m.field());
    Matrix h = hom_f_matrix(pm, m);
    if (h.rows() != h.cols())
        throw Error(errc::NonSquareHom, "weight does not vanish on the module's dimension");
    return h.det();
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Fe& c) { return c.is_zero(); });
}

Fe BinaryForm::eval(const Fe& s, const Fe& t) const {
    Fe acc = field().zero();
    long long n = degree();
    for (long long j = 0; j <= n; ++j)
        acc += coeffs[static_cast<std::size_t>(j)] * fe_pow(s, j) * fe_pow(t, n - j);
    return acc;
}

BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b) {
    Field f = a.field();
    BinaryForm out = zero_form(a.degree() + b.degree(), f);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

BinaryForm form_divide_exact(const BinaryForm& a, const BinaryForm& b) {
    auto sb = split_form(b);
    if (!sb) throw Error(errc::DivisionByZero, "binary form division by zero");
    if (a.degree() < b.degree())
        throw Error(errc::InvalidParams, "binary form division is not exact");
    if (a.is_zero()) return zero_form(a.degree() - b.degree(), a.field());
    auto sa = split_form(a);
    if (sa->s < sb->s || sa->t < sb->t)
        throw Error(errc::InvalidParams, "binary form division is not exact");
    auto q = poly_divide(sa->core, sb->core);
    if (!q) throw Error(errc::InvalidParams, "binary form division is not exact");
    return assemble_form(sa->s - sb->s, sa->t - sb->t, *q, a.field());
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return form_normalize(b);
    if (b.is_zero()) return form_normalize(a);
    auto sa = split_form(a);
    auto sb = split_form(b);
    Poly core = poly_gcd(sa->core, sb->core);
    return assemble_form(std::min(sa->s, sb->s), std::min(sa->t, sb->t), core, a.field());
}

BinaryForm form_normalize(const BinaryForm& a) {
    auto sa = split_form(a);
    if (!sa) return a;
    Fe lead = sa->core.back();
    BinaryForm out = a;
    for (Fe& c : out.coeffs) c = c / lead;
    return out;
}

BinaryForm kronecker_form(const Representation& v) {
    const BoundQuiver& q = v.quiver();
    if (!is_kronecker_shape(q)) throw Error(errc::ShapeMismatch, "not a Kronecker-shaped quiver");
    const Arrow& alpha = q.arrows()[0];
    const Arrow& beta = q.arrows()[1];
    if (v.dim_at(alpha.source) != v.dim_at(alpha.target))
        throw Error(errc::DimensionMismatch, "Kronecker dimensions differ");
    return det_pencil(v.matrix(alpha.id), v.matrix(beta.id));
}

Fe kronecker_f(long long j, const Representation& v) {
    BinaryForm f = kronecker_form(v);
    if (j < 0 || j > f.degree()) throw Error(errc::InvalidParams, "coefficient index out of range");
    return f.coeffs[static_cast<std::size_t>(j)];
}

BinaryForm pencil_form(const TubeSystem& ts, const Representation& m) {
    if (m.quiver_ptr().get() != ts.quiver.get())
        throw Error(errc::VertexMismatch, "module lives on a different quiver");
    if (m.dim_at("0") != m.dim_at("w"))
        throw Error(errc::NonSquarePencil, "endpoint dimensions differ");
    Matrix a = apply_element(m, element_to_field(ts.w1, m.field()));
    Matrix b = apply_element(m, element_to_field(ts.w2, m.field()));
    return det_pencil(a, b);
}

ReducedPencil reduced_pencil(const TubeSystem& ts, const DimVector& d, const Field& f, Rng& rng,
                             long long samples) {
    RegularProfile prof = decompose(ts, d);
    if (prof.p <= 0) throw Error(errc::ZeroMass, "no homogeneous mass in d");
    long long n = std::max<long long>(3, samples);
    std::optional<BinaryForm> g;
    for (long long i = 0; i < n; ++i) {
        BinaryForm fm = pencil_form(ts, sample_regular(ts, d, f, rng));
        if (fm.is_zero()) throw Error(errc::DegenerateSamples, "singular pencil sample");
        g = g ? form_gcd(*g, fm) : form_normalize(fm);
    }
    for (int i = 0; i < 2; ++i) {
        BinaryForm fm = pencil_form(ts, sample_regular(ts, d, f, rng));
        if (fm.is_zero() || form_gcd(*g, fm).degree() != g->degree())
            throw Error(errc::DegenerateSamples, "fixed factor varies across samples");
    }
    long long reduced = d[ts.quiver->vertex_index("0")] - g->degree();
    if (reduced != prof.p)
        throw Error(errc::DegenerateSamples, "reduced degree does not match homogeneous mass");
    return {*g, prof.p};
}

BinaryForm reduced_form(const ReducedPencil& rp, const TubeSystem& ts, const Representation& m) {
    BinaryForm f = pencil_form(ts, m);
    try {
        return form_divide_exact(f, rp.g);
    } catch (const Error&) {
        throw Error(errc::DegenerateSamples, "pencil form is not divisible by the fixed factor");
    }
}

std::vector<Generator> generator_set(const TubeSystem& ts, const DimVector& d) {
    RegularProfile prof = decompose(ts, d);
    if (prof.p <= 0) throw Error(errc::ZeroMass, "no homogeneous mass in d");
    IndexData id = index_data(prof);
    std::vector<Generator> out;
    for (std::size_t k = 0; k < id.cal_i.size(); ++k) {
        for (long long i : id.cal_i[k]) {
            long long n = id.n_strict[k].at(i);
            TubeModuleSpec spec;
            spec.exceptional = k;
            spec.socle = i + 1;
            spec.length = n;
            out.push_back({make_semi_invariant(ts, {spec}, d), k, i, n,
                           ts.segment_dim(k, i + 1, n)});
        }
    }
    ExtMinimal em = ext_minimal(ts, d);
    TubeModuleSpec spec;
    spec.homogeneous = {em.generic_point->zeta, em.generic_point->xi};
    spec.length = 1;
    out.push_back({make_semi_invariant(ts, {spec}, d), std::nullopt, 0, 1, ts.h});
    return out;
}

Representation sample_regular(const TubeSystem& ts, const DimVector& d, const Field& f, Rng& rng) {
    ExtMinimal em = ext_minimal(ts, d);
    std::vector<Fe> forbidden;  // xi of exceptional points with zeta = 1
    for (const auto& tube : ts.tubes) {
        TubePoint p = point_to_field(tube.point, f);
        if (!p.zeta.is_zero()) forbidden.push_back(p.xi);
    }
    std::optional<Representation> acc;
    auto add = [&](const TubeModuleSpec& spec) {
        Representation part = tube_module(ts, spec, f);
        acc = acc ? direct_sum(*acc, part) : std::move(part);
    };
    for (const SegmentSpec& seg : em.segments) {
        TubeModuleSpec spec;
        spec.exceptional = seg.tube;
        spec.socle = seg.socle;
        spec.length = seg.length;
        add(spec);
    }
    long long rem = em.homogeneous_length;
    while (rem > 0) {
        long long len = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(rem)));
        Fe xi = rng.scalar(f);
        auto bad = [&] {
            return std::any_of(forbidden.begin(), forbidden.end(),
                               [&](const Fe& c) { return c == xi; });
        };
        while (bad()) xi = rng.scalar(f);
        TubeModuleSpec spec;
        spec.homogeneous = {f.one(), xi};
        spec.length = len;
        add(spec);
        rem -= len;
    }
    if (!acc) return Representation(ts.quiver, f, DimVector(ts.quiver->vertices().size(), 0));
    return *acc;
}

Representation sample_unconstrained(const TubeSystem& ts, const DimVector& d, const Field& f,
                                    Rng& rng) {
    const BoundQuiver& q = *ts.quiver;
    if (d.size() != q.vertices().size())
        throw Error(errc::VertexMismatch, "dimension vector size mismatch");
    for (int attempt = 0; attempt < 6; ++attempt) {
        Representation m(ts.quiver, f, d);
        for (const Arrow& a : q.arrows()) {
            Matrix mat(static_cast<std::size_t>(d[q.vertex_index(a.target)]),
                       static_cast<std::size_t>(d[q.vertex_index(a.source)]), f);
            for (std::size_t r = 0; r < mat.rows(); ++r)
                for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = rng.scalar(f);
            m.set_matrix(a.id, std::move(mat));
        }
        bool ok = true;
        for (const Relation& rel : q.relations()) {
            std::size_t pick =
                q.relations().size() == 1 ? static_cast<std::size_t>(attempt) % rel.size() : 0;
            if (!solve_relation_arrow(m, rel, pick)) {
                ok = false;
                break;
            }
        }
        if (ok && check_relations(m)) return m;
    }
    GroupElement g = random_group_element(rng, q, f, d);
    return group_act(g, sample_regular(ts, d, f, rng));
}

namespace {

// All monomials of graded degree r in the exceptional generators and the
// p + 1 homogeneous-family coefficients: exceptional exponents first (the
// leftover must be a multiple of h), then weak compositions for the family.
struct Monomial {
    std::vector<long long> texp;  // one per exceptional generator
    std::vector<long long> sexp;  // p + 1 entries
};

std::vector<Monomial> enumerate_monomials(const TubeSystem& ts,
                                          const std::vector<const Generator*>& texc,
                                          const DimVector& r, long long p) {
    std::vector<Monomial> out;
    std::size_t zero_idx = ts.quiver->vertex_index("0");
    std::vector<long long> cur(texc.size(), 0);
    std::function<void(std::size_t, DimVector)> rec = [&](std::size_t idx, DimVector rem) {
        if (idx == texc.size()) {
            long long q = rem[zero_idx];
            if (q < 0 || rem != dim_scale(q, ts.h)) return;
            std::vector<long long> sc(static_cast<std::size_t>(p) + 1, 0);
            std::function<void(std::size_t, long long)> srec = [&](std::size_t j, long long left) {
                if (j + 1 == sc.size()) {
                    sc[j] = left;
                    out.push_back({cur, sc});
                    return;
                }
                for (long long e = 0; e <= left; ++e) {
                    sc[j] = e;
                    srec(j + 1, left - e);
                }
            };
            srec(0, q);
            return;
        }
        for (long long e = 0;; ++e) {
            cur[idx] = e;
            rec(idx + 1, rem);
            bool fits = true;
            for (std::size_t v = 0; v < rem.size(); ++v)
                if (rem[v] < texc[idx]->degree[v]) fits = false;
            if (!fits) break;
            rem = dim_sub(rem, texc[idx]->degree);
        }
        cur[idx] = 0;
    };
    rec(0, r);
    return out;
}

}  // namespace

WeightSpaceReport weight_space_dim(const TubeSystem& ts, const DimVector& d, const DimVector& r,
                                   const Field& f, Rng& rng) {
    const BoundQuiver& q = *ts.quiver;
    if (tits_form(q, r, d) != 0)
        throw Error(errc::WeightNotClosed, "<r, d> does not vanish");
    RegularProfile rprof = decompose(ts, r);
    std::vector<Generator> gens = generator_set(ts, d);
    ReducedPencil rp = reduced_pencil(ts, d, f, rng);
    std::vector<const Generator*> texc;
    for (const Generator& g : gens)
        if (g.tube) texc.push_back(&g);
    std::vector<Monomial> monos = enumerate_monomials(ts, texc, r, rp.p);

    WeightSpaceReport rep;
    rep.r = r;
    rep.p_r = rprof.p;
    rep.monomials = monos.size();
    rep.prediction = binomial(rprof.p + rp.p, rprof.p);
    if (monos.empty()) {
        rep.certified = true;
        return rep;
    }

    std::vector<std::vector<Fe>> rows;
    auto add_row = [&](std::size_t k) {
        for (int attempt = 0;; ++attempt) {
            Representation m = (k + attempt) % 2 == 0 ? sample_regular(ts, d, f, rng)
                                                      : sample_unconstrained(ts, d, f, rng);
            BinaryForm c;
            try {
                c = reduced_form(rp, ts, m);
            } catch (const Error&) {
                if (attempt >= 8) throw;
                continue;
            }
            std::vector<Fe> tv;
            tv.reserve(texc.size());
            for (const Generator* g : texc) tv.push_back(eval_c(g->si, m));
            std::vector<Fe> row;
            row.reserve(monos.size());
            for (const Monomial& mono : monos) {
                Fe val = f.one();
                for (std::size_t i = 0; i < tv.size(); ++i) val *= fe_pow(tv[i], mono.texp[i]);
                for (std::size_t j = 0; j < mono.sexp.size(); ++j)
                    val *= fe_pow(c.coeffs[j], mono.sexp[j]);
                row.push_back(val);
            }
            rows.push_back(std::move(row));
            return;
        }
    };

    std::size_t base = std::max<std::size_t>(2 * monos.size(), 4);
    for (std::size_t k = 0; k < base; ++k) add_row(k);
    auto rank_of = [&](std::size_t nrows) {
        Matrix m(nrows, monos.size(), f);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < monos.size(); ++j) m.at(i, j) = rows[i][j];
        return m.rank();
    };
    std::size_t rank0 = rank_of(rows.size());
    std::size_t extra = (base + 1) / 2;
    for (std::size_t k = 0; k < extra; ++k) add_row(base + k);
    std::size_t rank1 = rank_of(rows.size());

    rep.samples = rows.size();
    rep.rank = rank1;
    rep.certified = rank1 == rank0;
    return rep;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace semicanon
