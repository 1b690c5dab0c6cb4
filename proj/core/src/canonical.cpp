// Construction of canonical algebras and their tube modules. Exceptional
// points are calibrated by computation: evaluated on the one-dimensional
// pencil representations, each thick arm's composite is a linear form
// u*zeta + v*xi, and the arm's tube sits at its unique zero (-v : u).
// Extensions inside a tube are built by solving the cocycle equations of the
// relations and picking a class outside the coboundary span.
#include "semicanon/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semicanon {

namespace {

Fe to_field(const Fe& x, const Field& f) {
    if (x.field() == f) return x;
    if (x.is_rational_kind()) return f.from_rational(x.rational_value());
    throw Error(errc::FieldMismatch, "cannot lift a prime-field scalar");
}

std::string arm_vertex(std::size_t arm, long long j) {
    return std::to_string(arm) + "." + std::to_string(j);
}

std::string arm_arrow(std::size_t arm, long long k) {
    return "a" + std::to_string(arm) + "." + std::to_string(k);
}

Matrix scalar_matrix(const Fe& v) {
    Matrix m(1, 1, v.field());
    m.at(0, 0) = v;
    return m;
}

// Product of the matrices along a traversal-order path: M(a_L) ... M(a_1).
Matrix path_product(const Representation& rep, const std::vector<std::string>& path) {
    Matrix p = Matrix::identity((std::size_t)rep.dim_at(rep.quiver().path_source(path)),
                                rep.field());
    for (const auto& id : path) p = rep.matrix(id) * p;
    return p;
}

// Solves a relation with exactly one unset arrow matrix for that matrix:
// the unknown appears once, in one term, flanked by invertible products.
Matrix solve_relation_for(const Representation& rep, const Relation& rel,
                          const std::string& unknown) {
    const Field& f = rep.field();
    const BoundQuiver& q = rep.quiver();
    const RelationTerm* uterm = nullptr;
    std::size_t upos = 0;
    for (const auto& term : rel)
        for (std::size_t j = 0; j < term.path.size(); ++j)
            if (term.path[j] == unknown) {
                uterm = &term;
                upos = j;
            }
    if (!uterm) throw Error(errc::InvalidQuiver, "arrow does not occur in the relation");

    Matrix a = Matrix::identity((std::size_t)rep.dim_at(q.arrow(unknown).target), f);
    for (std::size_t j = upos + 1; j < uterm->path.size(); ++j)
        a = rep.matrix(uterm->path[j]) * a;
    Matrix b = Matrix::identity((std::size_t)rep.dim_at(q.path_source(uterm->path)), f);
    for (std::size_t j = 0; j < upos; ++j) b = rep.matrix(uterm->path[j]) * b;

    Matrix c(a.rows(), b.cols(), f);
    for (const auto& term : rel) {
        if (&term == uterm) continue;
        c = c - path_product(rep, term.path).scaled(f.from_rational(term.coeff));
    }
    c = c.scaled(f.from_rational(uterm->coeff).inverse());

    auto z = a.solve(c);  // a * (d * b) = c
    if (!z) throw Error(errc::SingularBlock, "path product after the unknown is singular");
    auto d = b.solve_left(*z);  // d * b = z
    if (!d) throw Error(errc::SingularBlock, "path product before the unknown is singular");
    return *d;
}

// All spaces K^p, identities along the arms except each arm's last arrow;
// the first two arms end in x and y, later arms solve their relation.
Representation pencil_rep(const std::shared_ptr<const BoundQuiver>& q,
                          const std::vector<ArmLayout>& arms, const Matrix& x, const Matrix& y) {
    const Field& f = x.field();
    if (!(y.field() == f)) throw Error(errc::FieldMismatch, "pencil blocks over different fields");
    if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
        throw Error(errc::DimensionMismatch, "pencil blocks must be square of equal size");
    const auto p = (long long)x.rows();
    Representation rep(q, f, DimVector(q->vertices().size(), p));
    Matrix id = Matrix::identity((std::size_t)p, f);
    for (const auto& arm : arms) {
        if (!arm.realized) continue;
        for (std::size_t k = 0; k + 1 < arm.arrows.size(); ++k) rep.set_matrix(arm.arrows[k], id);
    }
    rep.set_matrix(arms[0].arrows.back(), x);
    rep.set_matrix(arms[1].arrows.back(), y);
    for (const auto& rel : q->relations()) {
        const std::string& unknown = rel.front().path.back();
        rep.set_matrix(unknown, solve_relation_for(rep, rel, unknown));
    }
    return rep;
}

Representation simple_at(const std::shared_ptr<const BoundQuiver>& q, const Field& f,
                         const std::string& v) {
    DimVector d(q->vertices().size(), 0);
    d[q->vertex_index(v)] = 1;
    return Representation(q, f, d);
}

// The simple regular supported off the tube's arm: dimension one outside the
// arm, anchors pinned to the point coordinates. The cut arm's own relation
// holds automatically because the point is its degeneration point.
Representation cut_arm_module(const TubeSystem& ts, const ExceptionalTube& tube, const Field& f) {
    DimVector d(ts.quiver->vertices().size(), 1);
    for (const auto& v : ts.arms[tube.arm - 1].vertices) d[ts.quiver->vertex_index(v)] = 0;
    Representation rep(ts.quiver, f, d);
    Matrix one = Matrix::identity(1, f);
    TubePoint pt = point_to_field(tube.point, f);
    for (std::size_t ai = 0; ai < ts.arms.size(); ++ai) {
        const ArmLayout& arm = ts.arms[ai];
        if (!arm.realized || ai + 1 == tube.arm) continue;
        for (std::size_t k = 0; k + 1 < arm.arrows.size(); ++k) rep.set_matrix(arm.arrows[k], one);
        if (ai == 0) rep.set_matrix(arm.arrows.back(), scalar_matrix(pt.zeta));
        if (ai == 1) rep.set_matrix(arm.arrows.back(), scalar_matrix(pt.xi));
    }
    const std::string& cut_last =
        ts.arms[tube.arm - 1].arrows.empty() ? std::string() : ts.arms[tube.arm - 1].arrows.back();
    for (const auto& rel : ts.quiver->relations()) {
        const std::string& unknown = rel.front().path.back();
        if (unknown == cut_last) continue;
        rep.set_matrix(unknown, solve_relation_for(rep, rel, unknown));
    }
    return rep;
}

Representation simple_regular(const TubeSystem& ts, const ExceptionalTube& tube, long long i,
                              const Field& f) {
    if (i == 0) return cut_arm_module(ts, tube, f);
    const ArmLayout& arm = ts.arms[tube.arm - 1];
    return simple_at(ts.quiver, f, arm.vertices[(std::size_t)(arm.weight - i - 1)]);
}

// Middle term of a nonsplit extension 0 -> sub -> e -> quot -> 0: block
// matrices [[sub(a), g_a], [0, quot(a)]] with g a relation cocycle outside
// the coboundary span. Throws RankMismatch when every cocycle splits.
Representation glue_top(const Representation& sub, const Representation& quot) {
    if (sub.quiver_ptr().get() != quot.quiver_ptr().get())
        throw Error(errc::ShapeMismatch, "extension factors live on different quivers");
    if (!(sub.field() == quot.field()))
        throw Error(errc::FieldMismatch, "extension factors over different fields");
    const Field& f = sub.field();
    const BoundQuiver& q = sub.quiver();
    const auto& arrows = q.arrows();

    std::map<std::string, std::size_t> arrow_pos;
    std::vector<std::size_t> offset(arrows.size() + 1, 0);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        arrow_pos[arrows[i].id] = i;
        offset[i + 1] = offset[i] + (std::size_t)sub.dim_at(arrows[i].target) *
                                        (std::size_t)quot.dim_at(arrows[i].source);
    }
    const std::size_t nunk = offset.back();

    std::size_t nrows = 0;
    for (const auto& rel : q.relations())
        nrows += (std::size_t)sub.dim_at(q.path_target(rel.front().path)) *
                 (std::size_t)quot.dim_at(q.path_source(rel.front().path));
    Matrix sys(nrows, nunk, f);
    std::size_t row0 = 0;
    for (const auto& rel : q.relations()) {
        std::size_t br = (std::size_t)sub.dim_at(q.path_target(rel.front().path));
        std::size_t bc = (std::size_t)quot.dim_at(q.path_source(rel.front().path));
        for (const auto& term : rel) {
            Fe coeff = f.from_rational(term.coeff);
            const auto& path = term.path;
            std::vector<Matrix> pre(path.size()), suf(path.size());
            pre[0] = Matrix::identity(bc, f);
            for (std::size_t j = 1; j < path.size(); ++j)
                pre[j] = quot.matrix(path[j - 1]) * pre[j - 1];
            suf[path.size() - 1] = Matrix::identity(br, f);
            for (std::size_t j = path.size() - 1; j > 0; --j)
                suf[j - 1] = suf[j] * sub.matrix(path[j]);
            for (std::size_t j = 0; j < path.size(); ++j) {
                std::size_t gi = arrow_pos.at(path[j]);
                std::size_t gc = (std::size_t)quot.dim_at(arrows[gi].source);
                for (std::size_t r = 0; r < br; ++r)
                    for (std::size_t c = 0; c < bc; ++c)
                        for (std::size_t a = 0; a < suf[j].cols(); ++a)
                            for (std::size_t b = 0; b < gc; ++b)
                                sys.at(row0 + r * bc + c, offset[gi] + a * gc + b) +=
                                    coeff * suf[j].at(r, a) * pre[j].at(b, c);
            }
        }
        row0 += br * bc;
    }

    std::size_t nphi = 0;
    for (const auto& v : q.vertices())
        nphi += (std::size_t)sub.dim_at(v) * (std::size_t)quot.dim_at(v);
    Matrix cob(nphi, nunk, f);
    std::size_t prow = 0;
    for (const auto& v : q.vertices()) {
        std::size_t dn = (std::size_t)sub.dim_at(v), dm = (std::size_t)quot.dim_at(v);
        for (std::size_t a = 0; a < dn; ++a)
            for (std::size_t b = 0; b < dm; ++b) {
                std::size_t row = prow++;
                for (std::size_t i = 0; i < arrows.size(); ++i) {
                    std::size_t gr = (std::size_t)sub.dim_at(arrows[i].target);
                    std::size_t gc = (std::size_t)quot.dim_at(arrows[i].source);
                    if (arrows[i].target == v)
                        for (std::size_t b2 = 0; b2 < gc; ++b2)
                            cob.at(row, offset[i] + a * gc + b2) +=
                                quot.matrix(arrows[i].id).at(b, b2);
                    if (arrows[i].source == v)
                        for (std::size_t a2 = 0; a2 < gr; ++a2)
                            cob.at(row, offset[i] + a2 * gc + b) -=
                                sub.matrix(arrows[i].id).at(a2, a);
                }
            }
    }

    Matrix coc = sys.kernel();
    std::size_t base = cob.rank();
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < coc.rows(); ++i)
        if (Matrix::vconcat(cob, coc.submatrix(i, 0, 1, nunk)).rank() > base) {
            pick = i;
            break;
        }
    if (!pick) throw Error(errc::RankMismatch, "no nonsplit extension by this quotient");

    Representation out(sub.quiver_ptr(), f, dim_add(sub.dim(), quot.dim()));
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        std::size_t gr = (std::size_t)sub.dim_at(arrows[i].target);
        std::size_t gc = (std::size_t)quot.dim_at(arrows[i].source);
        Matrix g(gr, gc, f);
        for (std::size_t a = 0; a < gr; ++a)
            for (std::size_t b = 0; b < gc; ++b) g.at(a, b) = coc.at(*pick, offset[i] + a * gc + b);
        Matrix zero((std::size_t)quot.dim_at(arrows[i].target),
                    (std::size_t)sub.dim_at(arrows[i].source), f);
        out.set_matrix(arrows[i].id, Matrix::assemble({{sub.matrix(arrows[i].id), g},
                                                       {zero, quot.matrix(arrows[i].id)}}));
    }
    return out;
}

}  // namespace

std::shared_ptr<const BoundQuiver> kronecker_quiver() {
    static const std::shared_ptr<const BoundQuiver> q = std::make_shared<const BoundQuiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<Arrow>{{"alpha", "2", "1"}, {"beta", "2", "1"}}, std::vector<Relation>{});
    return q;
}

bool is_kronecker_shape(const BoundQuiver& q) {
    if (q.vertices().size() != 2 || q.arrows().size() != 2 || !q.relations().empty()) return false;
    const Arrow& a = q.arrows()[0];
    const Arrow& b = q.arrows()[1];
    return a.source == b.source && a.target == b.target && a.source != a.target;
}

TubePoint normalize_point(const Fe& zeta, const Fe& xi) {
    if (!(zeta.field() == xi.field()))
        throw Error(errc::FieldMismatch, "point coordinates in different fields");
    if (zeta.is_zero() && xi.is_zero()) throw Error(errc::UnknownPoint, "(0 : 0) is not a point");
    const Field f = zeta.field();
    if (zeta.is_zero()) return {f.zero(), f.one()};
    return {f.one(), xi / zeta};
}

bool same_point(const TubePoint& a, const TubePoint& b) {
    return a.zeta == b.zeta && a.xi == b.xi;
}

TubePoint point_to_field(const TubePoint& rational_point, const Field& f) {
    return {to_field(rational_point.zeta, f), to_field(rational_point.xi, f)};
}

const ExceptionalTube* TubeSystem::tube_at(const TubePoint& rational_point) const {
    for (const auto& t : tubes)
        if (same_point(t.point, rational_point)) return &t;
    return nullptr;
}

DimVector TubeSystem::segment_dim(std::size_t tube, long long socle, long long length) const {
    if (tube >= tubes.size()) throw Error(errc::BadTubeIndex, "no such exceptional tube");
    if (length < 1) throw Error(errc::InvalidParams, "length must be at least 1");
    const ExceptionalTube& t = tubes[tube];
    long long s0 = ((socle % t.rank) + t.rank) % t.rank;
    DimVector d(quiver->vertices().size(), 0);
    for (long long j = 0; j < length; ++j)
        d = dim_add(d, t.e[(std::size_t)((s0 + j) % t.rank)]);
    return d;
}

TubeSystem build_canonical(const CanonicalSpec& spec) {
    const std::size_t t = spec.weights.size();
    if (t < 2) throw Error(errc::InvalidParams, "need at least two arms");
    for (long long w : spec.weights)
        if (w < 1) throw Error(errc::InvalidParams, "arm weights must be positive");
    if (spec.params.size() + 2 != t)
        throw Error(errc::InvalidParams, "expected one parameter per arm beyond the second");
    for (const auto& lam : spec.params)
        if (lam == 0 || lam == 1)
            throw Error(errc::InvalidParams, "arm parameters must avoid 0 and 1");
    std::set<mpq_class> distinct(spec.params.begin(), spec.params.end());
    if (distinct.size() != spec.params.size())
        throw Error(errc::InvalidParams, "arm parameters must be pairwise distinct");
    if (t >= 3 && (spec.weights[0] < 2 || spec.weights[1] < 2))
        throw Error(errc::InvalidParams,
                    "the first two arms must have weight at least 2 when there are more than two");

    TubeSystem ts;
    ts.spec = spec;
    ts.arms.resize(t);
    std::vector<std::string> vertices{"0"};
    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < t; ++a) {
        ArmLayout& arm = ts.arms[a];
        arm.weight = spec.weights[a];
        arm.realized = a < 2 || arm.weight >= 2;
        if (!arm.realized) continue;
        std::string prev = "0";
        for (long long k = 1; k <= arm.weight; ++k) {
            std::string next = k == arm.weight ? std::string("w") : arm_vertex(a + 1, k);
            if (k < arm.weight) arm.vertices.push_back(next);
            arm.arrows.push_back(arm_arrow(a + 1, k));
            arrows.push_back({arm.arrows.back(), prev, next});
            prev = next;
        }
        vertices.insert(vertices.end(), arm.vertices.begin(), arm.vertices.end());
    }
    vertices.push_back("w");

    std::vector<Relation> relations;
    for (std::size_t a = 2; a < t; ++a) {
        if (!ts.arms[a].realized) continue;
        relations.push_back({{mpq_class(1), ts.arms[a].arrows},
                             {mpq_class(-1), ts.arms[0].arrows},
                             {-spec.params[a - 2], ts.arms[1].arrows}});
    }
    ts.quiver = std::make_shared<const BoundQuiver>(vertices, arrows, relations);
    ts.h = DimVector(vertices.size(), 1);

    const Field rat = Field::rationals();
    auto paths = enumerate_paths(*ts.quiver, "0", "w");
    auto composite = [&](const std::vector<std::string>& arm_path) {
        AlgebraElement e{"0", "w", std::vector<Fe>(paths.size(), rat.zero())};
        auto it = std::find(paths.begin(), paths.end(), arm_path);
        if (it == paths.end()) throw Error(errc::InvalidQuiver, "arm path is not a path");
        e.coords[(std::size_t)(it - paths.begin())] = rat.one();
        return e;
    };
    ts.w1 = composite(ts.arms[0].arrows);
    ts.w2 = composite(ts.arms[1].arrows);

    // Locate each thick arm's tube: the arm composite u*zeta + v*xi
    // degenerates exactly at (-v : u).
    Representation v10 = pencil_rep(ts.quiver, ts.arms, Matrix::identity(1, rat),
                                    Matrix(1, 1, rat));
    Representation v01 = pencil_rep(ts.quiver, ts.arms, Matrix(1, 1, rat),
                                    Matrix::identity(1, rat));
    for (std::size_t a = 0; a < t; ++a) {
        if (spec.weights[a] < 2) continue;
        ExceptionalTube tube;
        tube.rank = spec.weights[a];
        tube.arm = a + 1;
        AlgebraElement comp = composite(ts.arms[a].arrows);
        Fe u = apply_element(v10, comp).at(0, 0);
        Fe v = apply_element(v01, comp).at(0, 0);
        tube.point = normalize_point(-v, u);
        tube.e.assign((std::size_t)tube.rank, DimVector());
        DimVector e0 = ts.h;
        for (long long j = 1; j < tube.rank; ++j) {
            DimVector ej(vertices.size(), 0);
            ej[ts.quiver->vertex_index(arm_vertex(a + 1, tube.rank - j))] = 1;
            tube.e[(std::size_t)j] = ej;
            e0 = dim_sub(e0, ej);
        }
        tube.e[0] = e0;
        ts.tubes.push_back(std::move(tube));
    }

    for (std::size_t i = 0; i < ts.tubes.size(); ++i)
        for (std::size_t j = i + 1; j < ts.tubes.size(); ++j)
            if (same_point(ts.tubes[i].point, ts.tubes[j].point))
                throw Error(errc::InvalidParams, "arm parameters give coinciding tube points");

    // Cross-check the calibration: the pencil module at a tube's point meets
    // exactly that tube's arm simples in Hom.
    for (const auto& tube : ts.tubes) {
        Representation vp = pencil_rep(ts.quiver, ts.arms, scalar_matrix(tube.point.zeta),
                                       scalar_matrix(tube.point.xi));
        for (const auto& other : ts.tubes) {
            std::size_t total = 0;
            for (const auto& vx : ts.arms[other.arm - 1].vertices) {
                Representation s = simple_at(ts.quiver, rat, vx);
                total += hom_dim(s, vp) + hom_dim(vp, s);
            }
            if ((other.arm == tube.arm) != (total > 0))
                throw Error(errc::InvalidParams, "tube calibration failed its Hom check");
        }
    }
    return ts;
}

Representation tube_module(const TubeSystem& ts, const TubeModuleSpec& m, const Field& f) {
    if (m.exceptional.has_value() == m.homogeneous.has_value())
        throw Error(errc::InvalidParams, "specify exactly one of exceptional or homogeneous");
    if (m.length < 1) throw Error(errc::InvalidParams, "length must be at least 1");
    if (m.exceptional) {
        if (*m.exceptional >= ts.tubes.size())
            throw Error(errc::BadTubeIndex, "no such exceptional tube");
        const ExceptionalTube& tube = ts.tubes[*m.exceptional];
        long long s0 = ((m.socle % tube.rank) + tube.rank) % tube.rank;
        Representation e = simple_regular(ts, tube, s0, f);
        for (long long step = 1; step < m.length; ++step)
            e = glue_top(e, simple_regular(ts, tube, (s0 + step) % tube.rank, f));
        return e;
    }

    TubePoint pt =
        normalize_point(to_field(m.homogeneous->first, f), to_field(m.homogeneous->second, f));
    for (const auto& tube : ts.tubes)
        if (same_point(pt, point_to_field(tube.point, f)))
            throw Error(errc::UnknownPoint, "the point carries an exceptional tube");
    const auto n = (std::size_t)m.length;
    Matrix jn(n, n, f);
    for (std::size_t i = 0; i + 1 < n; ++i) jn.at(i, i + 1) = f.one();
    Matrix idn = Matrix::identity(n, f);
    Representation k2(kronecker_quiver(), f, {(long long)n, (long long)n});
    if (pt.xi.is_zero()) {
        k2.set_matrix("alpha", idn);
        k2.set_matrix("beta", jn);
    } else {
        k2.set_matrix("alpha", idn.scaled(pt.zeta / pt.xi) + jn);
        k2.set_matrix("beta", idn);
    }
    return kronecker_embed(ts, k2);
}

Representation kronecker_embed(const TubeSystem& ts, const Representation& n) {
    if (!is_kronecker_shape(n.quiver()))
        throw Error(errc::ShapeMismatch, "expected a Kronecker-shaped quiver");
    const auto& arrows = n.quiver().arrows();
    if (n.dim_at(arrows[0].source) != n.dim_at(arrows[0].target))
        throw Error(errc::DimensionMismatch, "pencil embedding needs equal dimensions");
    return pencil_rep(ts.quiver, ts.arms, n.matrix(arrows[0].id), n.matrix(arrows[1].id));
}

}  // namespace semicanon
