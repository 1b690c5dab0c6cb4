#include "semicanon/representation.hpp"

namespace semicanon {

Representation::Representation(std::shared_ptr<const BoundQuiver> q, const Field& f,
                               DimVector dim)
    : q_(std::move(q)), field_(f), dim_(std::move(dim)) {
    if (dim_.size() != q_->vertices().size())
        throw Error(errc::VertexMismatch, "dimension vector does not match vertex count");
    for (long long v : dim_)
        if (v < 0) throw Error(errc::InvalidParams, "negative dimension");
    for (const auto& a : q_->arrows())
        mats_.emplace_back(static_cast<std::size_t>(dim_at(a.target)),
                           static_cast<std::size_t>(dim_at(a.source)), field_);
}

long long Representation::dim_at(const std::string& vertex) const {
    return dim_[q_->vertex_index(vertex)];
}

const Matrix& Representation::matrix(const std::string& arrow_id) const {
    for (std::size_t i = 0; i < q_->arrows().size(); ++i)
        if (q_->arrows()[i].id == arrow_id) return mats_[i];
    throw Error(errc::InvalidQuiver, "unknown arrow '" + arrow_id + "'");
}

void Representation::set_matrix(const std::string& arrow_id, Matrix m) {
    const Arrow& a = q_->arrow(arrow_id);
    if (m.rows() != static_cast<std::size_t>(dim_at(a.target)) ||
        m.cols() != static_cast<std::size_t>(dim_at(a.source)))
        throw Error(errc::ShapeMismatch, "arrow matrix shape for '" + arrow_id + "'");
    if (!(m.field() == field_)) throw Error(errc::FieldMismatch, "arrow matrix field");
    for (std::size_t i = 0; i < q_->arrows().size(); ++i)
        if (q_->arrows()[i].id == arrow_id) {
            mats_[i] = std::move(m);
            return;
        }
    throw Error(errc::InvalidQuiver, "unknown arrow '" + arrow_id + "'");
}

namespace {

Matrix eval_path(const Representation& m, const std::vector<std::string>& path,
                 const std::string& source) {
    Matrix acc = Matrix::identity(static_cast<std::size_t>(m.dim_at(source)), m.field());
    for (const auto& id : path) acc = m.matrix(id) * acc;
    return acc;
}

}  // namespace

bool check_relations(const Representation& m) {
    const BoundQuiver& q = m.quiver();
    for (const auto& rel : q.relations()) {
        const auto& src = q.path_source(rel.front().path);
        const auto& tgt = q.path_target(rel.front().path);
        Matrix acc(static_cast<std::size_t>(m.dim_at(tgt)),
                   static_cast<std::size_t>(m.dim_at(src)), m.field());
        for (const auto& term : rel)
            acc = acc + eval_path(m, term.path, src).scaled(m.field().from_rational(term.coeff));
        if (!acc.is_zero()) return false;
    }
    return true;
}

Matrix apply_element(const Representation& m, const AlgebraElement& a) {
    auto paths = enumerate_paths(m.quiver(), a.source, a.target);
    if (paths.size() != a.coords.size())
        throw Error(errc::ShapeMismatch, "element coordinates do not match path count");
    Matrix acc(static_cast<std::size_t>(m.dim_at(a.target)),
               static_cast<std::size_t>(m.dim_at(a.source)), m.field());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (a.coords[i].is_zero()) continue;
        acc = acc + eval_path(m, paths[i], a.source).scaled(a.coords[i]);
    }
    return acc;
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (m.quiver_ptr().get() != n.quiver_ptr().get())
        throw Error(errc::VertexMismatch, "direct sum over different quivers");
    if (!(m.field() == n.field())) throw Error(errc::FieldMismatch, "direct sum fields");
    Representation r(m.quiver_ptr(), m.field(), dim_add(m.dim(), n.dim()));
    for (const auto& a : m.quiver().arrows()) {
        const Matrix& am = m.matrix(a.id);
        const Matrix& an = n.matrix(a.id);
        Matrix block(am.rows() + an.rows(), am.cols() + an.cols(), m.field());
        block.set_block(0, 0, am);
        block.set_block(am.rows(), am.cols(), an);
        r.set_matrix(a.id, std::move(block));
    }
    return r;
}

Representation group_act(const GroupElement& g, const Representation& m) {
    const BoundQuiver& q = m.quiver();
    std::map<std::string, Matrix> inverses;
    for (const auto& x : q.vertices()) {
        auto it = g.blocks.find(x);
        if (it == g.blocks.end())
            throw Error(errc::VertexMismatch, "group element missing vertex '" + x + "'");
        const Matrix& b = it->second;
        std::size_t d = static_cast<std::size_t>(m.dim_at(x));
        if (b.rows() != d || b.cols() != d)
            throw Error(errc::ShapeMismatch, "group block shape at '" + x + "'");
        auto inv = b.solve(Matrix::identity(d, m.field()));
        if (!inv) throw Error(errc::SingularBlock, "non-invertible block at '" + x + "'");
        inverses.emplace(x, std::move(*inv));
    }
    Representation r(m.quiver_ptr(), m.field(), m.dim());
    for (const auto& a : q.arrows())
        r.set_matrix(a.id, g.blocks.at(a.target) * m.matrix(a.id) * inverses.at(a.source));
    return r;
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    for (const auto& [x, gb] : g.blocks) {
        auto it = h.blocks.find(x);
        if (it == h.blocks.end())
            throw Error(errc::VertexMismatch, "group elements over different vertex sets");
        r.blocks.emplace(x, gb * it->second);
    }
    return r;
}

GroupElement group_inverse(const GroupElement& g) {
    GroupElement r;
    for (const auto& [x, b] : g.blocks) {
        if (b.rows() != b.cols()) throw Error(errc::NonSquare, "group block not square");
        auto inv = b.solve(Matrix::identity(b.rows(), b.field()));
        if (!inv) throw Error(errc::SingularBlock, "non-invertible block at '" + x + "'");
        r.blocks.emplace(x, std::move(*inv));
    }
    return r;
}

GroupElement random_group_element(Rng& rng, const BoundQuiver& q, const Field& f,
                                  const DimVector& d) {
    if (d.size() != q.vertices().size())
        throw Error(errc::VertexMismatch, "dimension vector does not match vertex count");
    GroupElement g;
    for (std::size_t i = 0; i < q.vertices().size(); ++i) {
        std::size_t n = static_cast<std::size_t>(d[i]);
        for (;;) {
            Matrix b(n, n, f);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) b.at(r, c) = rng.scalar(f);
            if (!b.det().is_zero()) {
                g.blocks.emplace(q.vertices()[i], std::move(b));
                break;
            }
        }
    }
    return g;
}

HomSpace hom_space(const Representation& m, const Representation& n) {
    if (m.quiver_ptr().get() != n.quiver_ptr().get())
        throw Error(errc::VertexMismatch, "hom over different quivers");
    if (!(m.field() == n.field())) throw Error(errc::FieldMismatch, "hom fields");
    const BoundQuiver& q = m.quiver();
    const Field& f = m.field();

    // Unknowns: entries of phi_x (shape dimN(x) x dimM(x)), vertex by vertex.
    std::vector<std::size_t> offset(q.vertices().size() + 1, 0);
    for (std::size_t x = 0; x < q.vertices().size(); ++x)
        offset[x + 1] = offset[x] + static_cast<std::size_t>(n.dim()[x] * m.dim()[x]);
    std::size_t unknowns = offset.back();

    std::size_t equations = 0;
    for (const auto& a : q.arrows())
        equations += static_cast<std::size_t>(n.dim_at(a.target) * m.dim_at(a.source));

    Matrix sys(equations, unknowns, f);
    std::size_t row = 0;
    for (const auto& a : q.arrows()) {
        std::size_t s = q.vertex_index(a.source), t = q.vertex_index(a.target);
        std::size_t ms = static_cast<std::size_t>(m.dim()[s]), mt = static_cast<std::size_t>(m.dim()[t]);
        std::size_t ns = static_cast<std::size_t>(n.dim()[s]), nt = static_cast<std::size_t>(n.dim()[t]);
        const Matrix& ma = m.matrix(a.id);
        const Matrix& na = n.matrix(a.id);
        // For each (i, j): sum_k na[i,k] phi_s[k,j] - sum_l phi_t[i,l] ma[l,j] = 0.
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < ms; ++j) {
                for (std::size_t k = 0; k < ns; ++k)
                    sys.at(row, offset[s] + k * ms + j) += na.at(i, k);
                for (std::size_t l = 0; l < mt; ++l)
                    sys.at(row, offset[t] + i * mt + l) -= ma.at(l, j);
                ++row;
            }
    }

    Matrix kernel = sys.kernel();
    HomSpace hs;
    hs.dim = kernel.rows();
    for (std::size_t b = 0; b < kernel.rows(); ++b) {
        std::map<std::string, Matrix> phi;
        for (std::size_t x = 0; x < q.vertices().size(); ++x) {
            std::size_t nr = static_cast<std::size_t>(n.dim()[x]);
            std::size_t nc = static_cast<std::size_t>(m.dim()[x]);
            Matrix px(nr, nc, f);
            for (std::size_t i = 0; i < nr; ++i)
                for (std::size_t j = 0; j < nc; ++j)
                    px.at(i, j) = kernel.at(b, offset[x] + i * nc + j);
            phi.emplace(q.vertices()[x], std::move(px));
        }
        hs.basis.push_back(std::move(phi));
    }
    return hs;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
    return hom_space(m, n).dim;
}

Representation projective_rep(const PathCategory& cat, const std::string& x) {
    const BoundQuiver& q = cat.quiver();
    Representation p(cat.quiver_ptr(), cat.field(), cat.projective_dim_vector(x));
    for (const auto& a : q.arrows()) {
        const auto& from = cat.space(x, a.source);
        const auto& to = cat.space(x, a.target);
        Matrix mat(to.basis.size(), from.basis.size(), cat.field());
        for (std::size_t j = 0; j < from.basis.size(); ++j) {
            AlgebraElement e = cat.zero_element(x, a.source);
            e.coords[from.basis[j]] = cat.field().one();
            auto composed = cat.reduced_coords(cat.compose(e, cat.path_element({a.id})));
            for (std::size_t i = 0; i < to.basis.size(); ++i) mat.at(i, j) = composed[i];
        }
        p.set_matrix(a.id, std::move(mat));
    }
    return p;
}

namespace {

// Standard-basis indices greedily completing the radical to the full space;
// the chosen unit vectors generate top(V) at this vertex.
std::vector<std::size_t> top_indices_at(const Representation& v, const std::string& x) {
    const BoundQuiver& q = v.quiver();
    std::size_t d = static_cast<std::size_t>(v.dim_at(x));
    if (d == 0) return {};
    Matrix rad(d, 0, v.field());
    for (const auto& a : q.arrows())
        if (a.target == x) rad = Matrix::hconcat(rad, v.matrix(a.id));
    std::size_t r = rad.rank();
    std::vector<std::size_t> chosen;
    Matrix acc = rad;
    for (std::size_t i = 0; i < d && r + chosen.size() < d; ++i) {
        Matrix unit(d, 1, v.field());
        unit.at(i, 0) = v.field().one();
        Matrix cand = Matrix::hconcat(acc, unit);
        if (cand.rank() > acc.rank()) {
            chosen.push_back(i);
            acc = std::move(cand);
        }
    }
    return chosen;
}

struct Cover {
    std::vector<std::string> vertices;       // one entry per summand
    std::vector<std::vector<Fe>> generators; // generating vector in V(vertex)
};

Cover top_cover(const Representation& v) {
    Cover c;
    for (const auto& x : v.quiver().vertices())
        for (std::size_t i : top_indices_at(v, x)) {
            std::vector<Fe> gen(static_cast<std::size_t>(v.dim_at(x)), v.field().zero());
            gen[i] = v.field().one();
            c.vertices.push_back(x);
            c.generators.push_back(std::move(gen));
        }
    return c;
}

// The map P_x -> V sending the trivial path to gen, evaluated at vertex y:
// columns indexed by the basis paths of (x, y).
Matrix cover_map_at(const PathCategory& cat, const Representation& v, const std::string& x,
                    const std::vector<Fe>& gen, const std::string& y) {
    const auto& ps = cat.space(x, y);
    std::size_t dy = static_cast<std::size_t>(v.dim_at(y));
    Matrix block(dy, ps.basis.size(), cat.field());
    for (std::size_t j = 0; j < ps.basis.size(); ++j) {
        AlgebraElement e = cat.zero_element(x, y);
        e.coords[ps.basis[j]] = cat.field().one();
        Matrix img = apply_element(v, e);  // dy x d(x)
        for (std::size_t i = 0; i < dy; ++i) {
            Fe acc = cat.field().zero();
            for (std::size_t k = 0; k < gen.size(); ++k) acc += img.at(i, k) * gen[k];
            block.at(i, j) = acc;
        }
    }
    return block;
}

}  // namespace

PresentationMap minimal_projective_presentation(const PathCategory& cat,
                                                const Representation& v) {
    if (cat.quiver_ptr().get() != v.quiver_ptr().get())
        throw Error(errc::VertexMismatch, "category and representation quivers differ");
    if (!(cat.field() == v.field()))
        throw Error(errc::FieldMismatch, "category and representation fields differ");
    const BoundQuiver& q = v.quiver();
    const Field& f = v.field();

    Cover top = top_cover(v);

    // P0 as a concrete representation, and the surjection pi: P0 -> V.
    Representation p0(v.quiver_ptr(), f, DimVector(q.vertices().size(), 0));
    bool first = true;
    for (std::size_t j = 0; j < top.vertices.size(); ++j) {
        Representation summand = projective_rep(cat, top.vertices[j]);
        p0 = first ? summand : direct_sum(p0, summand);
        first = false;
    }

    std::map<std::string, Matrix> pi;  // vertex -> d(y) x P0dim(y)
    for (const auto& y : q.vertices()) {
        Matrix block(static_cast<std::size_t>(v.dim_at(y)), 0, f);
        for (std::size_t j = 0; j < top.vertices.size(); ++j)
            block = Matrix::hconcat(
                block, cover_map_at(cat, v, top.vertices[j], top.generators[j], y));
        if (block.rank() != static_cast<std::size_t>(v.dim_at(y)))
            throw Error(errc::ShapeMismatch, "projective cover is not surjective");
        pi.emplace(y, std::move(block));
    }

    // Kernel K as a subrepresentation of P0: basis rows per vertex, arrow
    // action by solving in the target basis.
    std::map<std::string, Matrix> kbasis;
    for (const auto& y : q.vertices()) kbasis.emplace(y, pi.at(y).kernel());
    Representation krep(v.quiver_ptr(), f, [&] {
        DimVector kd(q.vertices().size(), 0);
        for (std::size_t i = 0; i < q.vertices().size(); ++i)
            kd[i] = static_cast<long long>(kbasis.at(q.vertices()[i]).rows());
        return kd;
    }());
    for (const auto& a : q.arrows()) {
        const Matrix& bs = kbasis.at(a.source);
        const Matrix& bt = kbasis.at(a.target);
        auto coords = bt.transpose().solve((p0.matrix(a.id) * bs.transpose()));
        if (!coords)
            throw Error(errc::ShapeMismatch, "kernel is not arrow-stable");
        krep.set_matrix(a.id, *coords);
    }

    Cover ktop = top_cover(krep);

    PresentationMap pm;
    pm.p0_vertices = top.vertices;
    pm.p1_vertices = ktop.vertices;
    for (std::size_t i = 0; i < ktop.vertices.size(); ++i) {
        const std::string& w = ktop.vertices[i];
        // Generator as a vector in P0(w): embed the K-coordinates.
        const Matrix& bw = kbasis.at(w);
        std::vector<Fe> in_p0(bw.cols(), f.zero());
        for (std::size_t c = 0; c < bw.cols(); ++c)
            for (std::size_t k = 0; k < bw.rows(); ++k)
                in_p0[c] += bw.at(k, c) * ktop.generators[i][k];
        // Slice per P0 summand and lift basis coordinates to path coordinates.
        std::vector<AlgebraElement> row;
        std::size_t col0 = 0;
        for (std::size_t j = 0; j < top.vertices.size(); ++j) {
            const auto& ps = cat.space(top.vertices[j], w);
            AlgebraElement e = cat.zero_element(top.vertices[j], w);
            for (std::size_t b = 0; b < ps.basis.size(); ++b)
                e.coords[ps.basis[b]] = in_p0[col0 + b];
            row.push_back(std::move(e));
            col0 += ps.basis.size();
        }
        pm.blocks.push_back(std::move(row));
    }
    return pm;
}

Matrix hom_f_matrix(const PresentationMap& pm, const Representation& m) {
    std::size_t rows = 0, cols = 0;
    for (const auto& w : pm.p1_vertices) rows += static_cast<std::size_t>(m.dim_at(w));
    for (const auto& x : pm.p0_vertices) cols += static_cast<std::size_t>(m.dim_at(x));
    Matrix out(rows, cols, m.field());
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < pm.p1_vertices.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < pm.p0_vertices.size(); ++j) {
            Matrix block = apply_element(m, pm.blocks[i][j]);
            out.set_block(r0, c0, block);
            c0 += block.cols();
        }
        r0 += static_cast<std::size_t>(m.dim_at(pm.p1_vertices[i]));
    }
    return out;
}

}  // namespace semicanon
