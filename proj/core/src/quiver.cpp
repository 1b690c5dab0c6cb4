#include "semicanon/quiver.hpp"

#include <algorithm>
#include <set>

namespace semicanon {

namespace {

void check_sizes(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw Error(errc::VertexMismatch, "dimension vector lengths differ");
}

}  // namespace

DimVector dim_add(const DimVector& a, const DimVector& b) {
    check_sizes(a, b);
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector dim_sub(const DimVector& a, const DimVector& b) {
    check_sizes(a, b);
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

DimVector dim_scale(long long k, const DimVector& a) {
    DimVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool sincere(const DimVector& d) {
    for (long long v : d)
        if (v <= 0) return false;
    return true;
}

BoundQuiver::BoundQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                         std::vector<Relation> relations)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw Error(errc::InvalidQuiver, "duplicate vertex '" + vertices_[i] + "'");
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (!arrow_index_.emplace(arrows_[i].id, i).second)
            throw Error(errc::InvalidQuiver, "duplicate arrow '" + arrows_[i].id + "'");
    validate();
}

std::size_t BoundQuiver::vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end())
        throw Error(errc::VertexMismatch, "unknown vertex '" + name + "'");
    return it->second;
}

const Arrow& BoundQuiver::arrow(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end())
        throw Error(errc::InvalidQuiver, "unknown arrow '" + id + "'");
    return arrows_[it->second];
}

const std::string& BoundQuiver::path_source(const std::vector<std::string>& path) const {
    if (path.empty()) throw Error(errc::InvalidQuiver, "empty path has no endpoints");
    return arrow(path.front()).source;
}

const std::string& BoundQuiver::path_target(const std::vector<std::string>& path) const {
    if (path.empty()) throw Error(errc::InvalidQuiver, "empty path has no endpoints");
    return arrow(path.back()).target;
}

void BoundQuiver::validate() const {
    for (const auto& a : arrows_) {
        vertex_index(a.source);
        vertex_index(a.target);
    }

    // Acyclicity by Kahn's algorithm.
    std::vector<std::size_t> indeg(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indeg[vertex_index(a.target)];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++seen;
        for (const auto& a : arrows_)
            if (vertex_index(a.source) == v && --indeg[vertex_index(a.target)] == 0)
                queue.push_back(vertex_index(a.target));
    }
    if (seen != vertices_.size())
        throw Error(errc::InvalidQuiver, "quiver has an oriented cycle");

    for (const auto& rel : relations_) {
        if (rel.empty()) throw Error(errc::InvalidQuiver, "empty relation");
        for (const auto& term : rel) {
            if (term.coeff == 0) throw Error(errc::InvalidQuiver, "zero coefficient in relation");
            if (term.path.size() < 2)
                throw Error(errc::InvalidQuiver, "relation path shorter than 2");
            for (std::size_t k = 0; k + 1 < term.path.size(); ++k)
                if (arrow(term.path[k]).target != arrow(term.path[k + 1]).source)
                    throw Error(errc::InvalidQuiver, "non-composable relation path");
            if (path_source(term.path) != path_source(rel.front().path) ||
                path_target(term.path) != path_target(rel.front().path))
                throw Error(errc::InvalidQuiver, "relation terms with different endpoints");
        }
    }

    // Minimality: dropping any relation must change the generated ideal at
    // some vertex pair.
    if (relations_.empty()) return;
    Field f = Field::rationals();
    for (std::size_t drop = 0; drop < relations_.size(); ++drop) {
        bool changed = false;
        for (const auto& x : vertices_) {
            for (const auto& y : vertices_) {
                auto paths = enumerate_paths(*this, x, y);
                if (paths.empty()) continue;
                std::map<std::vector<std::string>, std::size_t> index;
                for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
                auto span_rows = [&](bool with_dropped) {
                    std::vector<std::vector<Fe>> rows;
                    for (std::size_t r = 0; r < relations_.size(); ++r) {
                        if (!with_dropped && r == drop) continue;
                        const auto& rel = relations_[r];
                        const auto& sr = path_source(rel.front().path);
                        const auto& tr = path_target(rel.front().path);
                        for (const auto& u : enumerate_paths(*this, x, sr))
                            for (const auto& v : enumerate_paths(*this, tr, y)) {
                                std::vector<Fe> row(paths.size(), f.zero());
                                for (const auto& term : rel) {
                                    std::vector<std::string> whole = u;
                                    whole.insert(whole.end(), term.path.begin(), term.path.end());
                                    whole.insert(whole.end(), v.begin(), v.end());
                                    row[index.at(whole)] += f.from_rational(term.coeff);
                                }
                                rows.push_back(std::move(row));
                            }
                    }
                    return rows;
                };
                auto to_matrix = [&](const std::vector<std::vector<Fe>>& rows) {
                    Matrix m(rows.size(), paths.size(), f);
                    for (std::size_t i = 0; i < rows.size(); ++i)
                        for (std::size_t j = 0; j < paths.size(); ++j) m.at(i, j) = rows[i][j];
                    return m;
                };
                if (to_matrix(span_rows(true)).rank() != to_matrix(span_rows(false)).rank()) {
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
        if (!changed)
            throw Error(errc::InvalidQuiver, "relation set is not minimal");
    }
}

long long tits_form(const BoundQuiver& q, const DimVector& d1, const DimVector& d2) {
    if (d1.size() != q.vertices().size() || d2.size() != q.vertices().size())
        throw Error(errc::VertexMismatch, "dimension vector does not match vertex count");
    long long acc = 0;
    for (std::size_t x = 0; x < d1.size(); ++x) acc += d1[x] * d2[x];
    for (const auto& a : q.arrows())
        acc -= d1[q.vertex_index(a.source)] * d2[q.vertex_index(a.target)];
    for (const auto& rel : q.relations()) {
        const auto& sr = q.path_source(rel.front().path);
        const auto& tr = q.path_target(rel.front().path);
        acc += d1[q.vertex_index(sr)] * d2[q.vertex_index(tr)];
    }
    return acc;
}

std::vector<std::vector<std::string>> enumerate_paths(const BoundQuiver& q, const std::string& x,
                                                      const std::string& y) {
    q.vertex_index(y);
    // Out-arrows sorted by id, so DFS emits paths in lexicographic order.
    std::map<std::string, std::vector<const Arrow*>> out;
    for (const auto& a : q.arrows()) out[a.source].push_back(&a);
    for (auto& [v, list] : out)
        std::sort(list.begin(), list.end(),
                  [](const Arrow* a, const Arrow* b) { return a->id < b->id; });

    std::vector<std::vector<std::string>> result;
    std::vector<std::string> current;
    auto dfs = [&](auto&& self, const std::string& v) -> void {
        if (v == y) result.push_back(current);
        auto it = out.find(v);
        if (it == out.end()) return;
        for (const Arrow* a : it->second) {
            current.push_back(a->id);
            self(self, a->target);
            current.pop_back();
        }
    };
    dfs(dfs, x);
    return result;
}

AlgebraElement element_to_field(const AlgebraElement& a, const Field& f) {
    AlgebraElement out{a.source, a.target, {}};
    out.coords.reserve(a.coords.size());
    for (const Fe& c : a.coords) {
        if (c.field() == f)
            out.coords.push_back(c);
        else if (c.is_rational_kind())
            out.coords.push_back(f.from_rational(c.rational_value()));
        else
            throw Error(errc::FieldMismatch, "cannot lift a prime-field coordinate");
    }
    return out;
}

PathCategory::PathCategory(std::shared_ptr<const BoundQuiver> q, const Field& f)
    : q_(std::move(q)), field_(f) {
    for (const auto& x : q_->vertices()) {
        for (const auto& y : q_->vertices()) {
            PathSpace ps;
            ps.paths = enumerate_paths(*q_, x, y);
            for (std::size_t i = 0; i < ps.paths.size(); ++i) ps.path_index[ps.paths[i]] = i;

            std::vector<std::vector<Fe>> rows;
            for (const auto& rel : q_->relations()) {
                const auto& sr = q_->path_source(rel.front().path);
                const auto& tr = q_->path_target(rel.front().path);
                for (const auto& u : enumerate_paths(*q_, x, sr))
                    for (const auto& v : enumerate_paths(*q_, tr, y)) {
                        std::vector<Fe> row(ps.paths.size(), field_.zero());
                        for (const auto& term : rel) {
                            std::vector<std::string> whole = u;
                            whole.insert(whole.end(), term.path.begin(), term.path.end());
                            whole.insert(whole.end(), v.begin(), v.end());
                            row[ps.path_index.at(whole)] += field_.from_rational(term.coeff);
                        }
                        rows.push_back(std::move(row));
                    }
            }
            Matrix ideal(rows.size(), ps.paths.size(), field_);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < ps.paths.size(); ++j) ideal.at(i, j) = rows[i][j];

            std::vector<std::size_t> pivots;
            Matrix r = ideal.rref(&pivots);
            std::vector<long long> pivot_row(ps.paths.size(), -1);
            for (std::size_t k = 0; k < pivots.size(); ++k) pivot_row[pivots[k]] = (long long)k;
            for (std::size_t i = 0; i < ps.paths.size(); ++i)
                if (pivot_row[i] < 0) ps.basis.push_back(i);

            ps.reduce = Matrix(ps.basis.size(), ps.paths.size(), field_);
            for (std::size_t i = 0; i < ps.paths.size(); ++i) {
                if (pivot_row[i] < 0) {
                    auto k = std::lower_bound(ps.basis.begin(), ps.basis.end(), i) -
                             ps.basis.begin();
                    ps.reduce.at(k, i) = field_.one();
                } else {
                    for (std::size_t k = 0; k < ps.basis.size(); ++k)
                        ps.reduce.at(k, i) = -r.at(pivot_row[i], ps.basis[k]);
                }
            }
            spaces_.emplace(std::make_pair(x, y), std::move(ps));
        }
    }
}

const PathCategory::PathSpace& PathCategory::space(const std::string& x,
                                                   const std::string& y) const {
    auto it = spaces_.find(std::make_pair(x, y));
    if (it == spaces_.end()) throw Error(errc::VertexMismatch, "unknown vertex pair");
    return it->second;
}

std::size_t PathCategory::hom_dim(const std::string& x, const std::string& y) const {
    return space(x, y).basis.size();
}

std::vector<AlgebraElement> PathCategory::hom_basis(const std::string& x,
                                                    const std::string& y) const {
    const PathSpace& ps = space(x, y);
    std::vector<AlgebraElement> out;
    for (std::size_t b : ps.basis) {
        AlgebraElement e = zero_element(x, y);
        e.coords[b] = field_.one();
        out.push_back(std::move(e));
    }
    return out;
}

AlgebraElement PathCategory::zero_element(const std::string& x, const std::string& y) const {
    return AlgebraElement{x, y, std::vector<Fe>(space(x, y).paths.size(), field_.zero())};
}

AlgebraElement PathCategory::path_element(const std::vector<std::string>& path) const {
    const std::string& x = q_->path_source(path);
    const std::string& y = q_->path_target(path);
    AlgebraElement e = zero_element(x, y);
    e.coords[space(x, y).path_index.at(path)] = field_.one();
    return e;
}

AlgebraElement PathCategory::trivial_path(const std::string& x) const {
    AlgebraElement e = zero_element(x, x);
    e.coords[space(x, x).path_index.at({})] = field_.one();
    return e;
}

AlgebraElement PathCategory::add(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.source != b.source || a.target != b.target)
        throw Error(errc::VertexMismatch, "adding elements with different endpoints");
    AlgebraElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

AlgebraElement PathCategory::scale(const Fe& s, const AlgebraElement& a) const {
    AlgebraElement r = a;
    for (auto& c : r.coords) c *= s;
    return r;
}

AlgebraElement PathCategory::compose(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.target != b.source)
        throw Error(errc::VertexMismatch, "composing elements with mismatched endpoints");
    const PathSpace& pa = space(a.source, a.target);
    const PathSpace& pb = space(b.source, b.target);
    AlgebraElement r = zero_element(a.source, b.target);
    const PathSpace& pr = space(a.source, b.target);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j].is_zero()) continue;
            std::vector<std::string> whole = pa.paths[i];
            whole.insert(whole.end(), pb.paths[j].begin(), pb.paths[j].end());
            r.coords[pr.path_index.at(whole)] += a.coords[i] * b.coords[j];
        }
    }
    return r;
}

std::vector<Fe> PathCategory::reduced_coords(const AlgebraElement& a) const {
    const PathSpace& ps = space(a.source, a.target);
    if (a.coords.size() != ps.paths.size())
        throw Error(errc::ShapeMismatch, "element coordinate length");
    std::vector<Fe> out(ps.basis.size(), field_.zero());
    for (std::size_t k = 0; k < ps.basis.size(); ++k)
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            out[k] += ps.reduce.at(k, i) * a.coords[i];
    return out;
}

bool PathCategory::equal_mod_ideal(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.source != b.source || a.target != b.target) return false;
    return reduced_coords(a) == reduced_coords(b);
}

DimVector PathCategory::projective_dim_vector(const std::string& x) const {
    DimVector d(q_->vertices().size(), 0);
    for (std::size_t i = 0; i < q_->vertices().size(); ++i)
        d[i] = static_cast<long long>(hom_dim(x, q_->vertices()[i]));
    return d;
}

std::vector<AlgebraElement> hom_basis_between_projectives(const BoundQuiver& q,
                                                          const std::string& x,
                                                          const std::string& y) {
    auto copy = std::make_shared<BoundQuiver>(q);
    return PathCategory(copy, Field::rationals()).hom_basis(x, y);
}

DimVector projective_dim_vector(const BoundQuiver& q, const std::string& x) {
    auto copy = std::make_shared<BoundQuiver>(q);
    return PathCategory(copy, Field::rationals()).projective_dim_vector(x);
}

}  // namespace semicanon
