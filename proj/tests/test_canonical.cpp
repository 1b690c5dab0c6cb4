#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "semicanon/canonical.hpp"

using namespace semicanon;

namespace {

CanonicalSpec three(long long p1, long long p2, long long p3, long lam) {
    return {{p1, p2, p3}, {mpq_class(lam)}};
}

Fe Q(long long v) { return Field::rationals().from_int(v); }

// Multiplicity of each simple-regular index among the composition factors of
// the segment with the given socle and length.
std::vector<long long> seg_profile(long long r, long long socle, long long n) {
    std::vector<long long> q(static_cast<std::size_t>(r), 0);
    for (long long s = 0; s < n; ++s) q[static_cast<std::size_t>((socle + s) % r)]++;
    return q;
}

// Hom dimension between segments of one tube: the number of top factors of
// the source matching factors of the target, capped by the target's socle
// multiplicity in the source.
long long overlap_formula(long long r, long long i, long long n, long long j, long long m) {
    auto qt = seg_profile(r, j, m);
    auto qs = seg_profile(r, i, n);
    long long top = (i + n - 1) % r;
    return std::min(qt[static_cast<std::size_t>(top)], qs[static_cast<std::size_t>(j % r)]);
}

Matrix random_square(Rng& rng, const Field& f, std::size_t n) {
    Matrix m(n, n, f);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.scalar(f);
    return m;
}

Representation k2_module(const Matrix& a, const Matrix& b) {
    Representation n(kronecker_quiver(), a.field(),
                     {(long long)a.rows(), (long long)a.cols()});
    n.set_matrix("alpha", a);
    n.set_matrix("beta", b);
    return n;
}

}  // namespace

TEST_CASE("kronecker_quiver is shared and Kronecker-shaped") {
    auto q = kronecker_quiver();
    CHECK(q.get() == kronecker_quiver().get());
    CHECK(is_kronecker_shape(*q));
    CHECK(q->arrows()[0].id == "alpha");
    CHECK(is_kronecker_shape(*testing::kronecker()));
    CHECK_FALSE(is_kronecker_shape(*testing::three_arms(2)));
}

TEST_CASE("build_canonical shapes the star quiver") {
    TubeSystem ts = build_canonical(three(2, 2, 2, 2));
    CHECK(ts.quiver->vertices() == std::vector<std::string>{"0", "1.1", "2.1", "3.1", "w"});
    CHECK(ts.quiver->arrows().size() == 6);
    CHECK(ts.quiver->relations().size() == 1);
    CHECK(ts.h == DimVector{1, 1, 1, 1, 1});
    CHECK(tits_form(*ts.quiver, ts.h, ts.h) == 0);
    CHECK(ts.tubes.size() == 3);
    CHECK(ts.w1.source == "0");
    CHECK(ts.w1.target == "w");

    TubeSystem pair = build_canonical({{3, 3}, {}});
    CHECK(pair.quiver->vertices().size() == 6);
    CHECK(pair.quiver->relations().empty());
    CHECK(pair.tubes.size() == 2);
    CHECK(tits_form(*pair.quiver, pair.h, pair.h) == 0);

    TubeSystem k2 = build_canonical({{1, 1}, {}});
    CHECK(k2.quiver->vertices() == std::vector<std::string>{"0", "w"});
    CHECK(is_kronecker_shape(*k2.quiver));
    CHECK(k2.tubes.empty());
}

TEST_CASE("weight-one arms beyond the second vanish from the presentation") {
    TubeSystem ts = build_canonical(three(3, 3, 1, 5));
    CHECK(ts.quiver->vertices().size() == 6);
    CHECK(ts.quiver->arrows().size() == 6);
    CHECK(ts.quiver->relations().empty());
    CHECK_FALSE(ts.arms[2].realized);
    CHECK(ts.arms[2].arrows.empty());
    CHECK(ts.tubes.size() == 2);
    CHECK(tits_form(*ts.quiver, ts.h, ts.h) == 0);

    TubeSystem plain = build_canonical({{3, 3}, {}});
    CHECK(ts.quiver->vertices() == plain.quiver->vertices());
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(same_point(ts.tubes[k].point, plain.tubes[k].point));
        CHECK(ts.tubes[k].e == plain.tubes[k].e);
    }
}

TEST_CASE("build_canonical rejects malformed specs") {
    CHECK_THROWS_AS(build_canonical({{}, {}}), Error);
    CHECK_THROWS_AS(build_canonical({{2}, {}}), Error);
    CHECK_THROWS_AS(build_canonical({{2, 0}, {}}), Error);
    CHECK_THROWS_AS(build_canonical({{2, 2}, {mpq_class(2)}}), Error);
    CHECK_THROWS_AS(build_canonical({{2, 2, 2}, {}}), Error);
    CHECK_THROWS_AS(build_canonical(three(2, 2, 2, 0)), Error);
    CHECK_THROWS_AS(build_canonical(three(2, 2, 2, 1)), Error);
    CHECK_THROWS_AS(build_canonical({{2, 2, 2, 2}, {mpq_class(3), mpq_class(3)}}), Error);
    CHECK_THROWS_AS(build_canonical({{1, 2, 2}, {mpq_class(2)}}), Error);
    CHECK_THROWS_AS(build_canonical({{2, 1, 2}, {mpq_class(2)}}), Error);
}

TEST_CASE("tube points sit where the arm composites degenerate") {
    Field rat = Field::rationals();
    TubeSystem ts = build_canonical(three(2, 2, 2, 2));
    CHECK(same_point(ts.tubes[0].point, normalize_point(Q(0), Q(1))));
    CHECK(same_point(ts.tubes[1].point, normalize_point(Q(1), Q(0))));
    CHECK(same_point(ts.tubes[2].point, normalize_point(Q(-2), Q(1))));
    CHECK(ts.tubes[2].point.xi == rat.from_ratio(-1, 2));
    CHECK(ts.tube_at(normalize_point(Q(-2), Q(1)))->arm == 3);
    CHECK(ts.tube_at(normalize_point(Q(1), Q(1))) == nullptr);

    TubeSystem big = build_canonical(three(3, 3, 3, 7));
    CHECK(same_point(big.tubes[2].point, normalize_point(Q(-7), Q(1))));
}

TEST_CASE("pencil modules at tube points meet exactly that arm") {
    for (CanonicalSpec spec : {three(2, 2, 2, 2), three(3, 3, 3, 7)}) {
        TubeSystem ts = build_canonical(spec);
        Field rat = Field::rationals();
        for (const auto& tube : ts.tubes) {
            Matrix z(1, 1, rat), x(1, 1, rat);
            z.at(0, 0) = tube.point.zeta;
            x.at(0, 0) = tube.point.xi;
            Representation v = kronecker_embed(ts, k2_module(z, x));
            for (const auto& other : ts.tubes) {
                std::size_t met = 0;
                for (const auto& vx : ts.arms[other.arm - 1].vertices) {
                    DimVector d(ts.quiver->vertices().size(), 0);
                    d[ts.quiver->vertex_index(vx)] = 1;
                    Representation s(ts.quiver, rat, d);
                    met += hom_dim(s, v) + hom_dim(v, s);
                }
                CHECK((met > 0) == (other.arm == tube.arm));
            }
        }
    }
}

TEST_CASE("segment dimension vectors tile the period") {
    for (CanonicalSpec spec : {three(2, 2, 2, 2), three(3, 3, 3, 7), {{4, 2}, {}}}) {
        TubeSystem ts = build_canonical(spec);
        long long rank_sum = 0;
        for (std::size_t k = 0; k < ts.tubes.size(); ++k) {
            const ExceptionalTube& tube = ts.tubes[k];
            rank_sum += tube.rank - 1;
            CHECK(ts.segment_dim(k, 0, tube.rank) == ts.h);
            DimVector total(ts.quiver->vertices().size(), 0);
            for (const auto& e : tube.e) total = dim_add(total, e);
            CHECK(total == ts.h);
            for (long long j = 1; j < tube.rank; ++j) {
                long long sum = 0;
                for (long long x : tube.e[(std::size_t)j]) sum += x;
                CHECK(sum == 1);
            }
        }
        CHECK(rank_sum == (long long)ts.quiver->vertices().size() - 2);
    }
}

TEST_CASE("segment classes pair with regular vectors through the Tits form") {
    // <e_{i}^n, d> = p_{(i+n-1) mod r} - p_{(i-1) mod r} for a regular d
    // whose per-tube profile p is supported on the listed segments.
    struct Pick {
        std::size_t tube;
        long long socle, len;
    };
    auto run = [](const CanonicalSpec& spec, long long qh, const std::vector<Pick>& picks) {
        TubeSystem ts = build_canonical(spec);
        DimVector d = dim_scale(qh, ts.h);
        std::vector<std::vector<long long>> prof;
        for (const auto& tube : ts.tubes)
            prof.emplace_back((std::size_t)tube.rank, 0);
        for (const auto& pick : picks) {
            d = dim_add(d, ts.segment_dim(pick.tube, pick.socle, pick.len));
            long long r = ts.tubes[pick.tube].rank;
            for (long long s = 0; s < pick.len; ++s)
                prof[pick.tube][(std::size_t)((pick.socle + s) % r)]++;
        }
        for (std::size_t k = 0; k < ts.tubes.size(); ++k) {
            long long r = ts.tubes[k].rank;
            for (long long i = 0; i < r; ++i)
                for (long long n = 1; n <= 2 * r; ++n) {
                    long long lhs = tits_form(*ts.quiver, ts.segment_dim(k, i, n), d);
                    long long rhs = prof[k][(std::size_t)((i + n - 1) % r)] -
                                    prof[k][(std::size_t)(((i - 1) % r + r) % r)];
                    CHECK(lhs == rhs);
                }
        }
    };
    run(three(2, 2, 2, 2), 1, {{0, 1, 1}});
    run(three(2, 2, 2, 2), 2, {{1, 0, 1}, {2, 1, 1}});
    run({{3, 3}, {}}, 1, {{0, 2, 2}});
    run(three(3, 3, 3, 7), 2, {{0, 0, 2}, {2, 1, 1}});
}

TEST_CASE("exceptional tube modules: simples and segments") {
    TubeSystem ts = build_canonical(three(2, 2, 2, 2));
    for (const Field& f : {Field::rationals(), Field::prime()}) {
        for (std::size_t k = 0; k < ts.tubes.size(); ++k) {
            for (long long socle = 0; socle < ts.tubes[k].rank; ++socle)
                for (long long len = 1; len <= 4; ++len) {
                    Representation m = tube_module(ts, {k, {}, socle, len}, f);
                    CHECK(m.dim() == ts.segment_dim(k, socle, len));
                    CHECK(check_relations(m));
                }
            // simples have trivial endomorphisms
            Representation s0 = tube_module(ts, {k, {}, 0, 1}, f);
            CHECK(hom_dim(s0, s0) == 1);
        }
    }

    // A full period has dimension h and trivial endomorphisms.
    Representation period = tube_module(ts, {0ul, {}, 0, 2}, Field::rationals());
    CHECK(period.dim() == ts.h);
    CHECK(hom_dim(period, period) == 1);

    // The defining sequence is nonsplit: the socle embeds and the top
    // projects, but the top does not embed and the socle is no quotient.
    Field f = Field::prime();
    Representation sub = tube_module(ts, {0ul, {}, 0, 1}, f);
    Representation quot = tube_module(ts, {0ul, {}, 1, 1}, f);
    Representation ext = tube_module(ts, {0ul, {}, 0, 2}, f);
    CHECK(hom_dim(sub, ext) == 1);
    CHECK(hom_dim(ext, quot) == 1);
    CHECK(hom_dim(quot, ext) == 0);
    CHECK(hom_dim(ext, sub) == 0);

    // The other dimension-h segment is the pencil module at the tube point.
    Representation other = tube_module(ts, {0ul, {}, 1, 2}, f);
    TubePoint pt = point_to_field(ts.tubes[0].point, f);
    Matrix z(1, 1, f), x(1, 1, f);
    z.at(0, 0) = pt.zeta;
    x.at(0, 0) = pt.xi;
    Representation pencil = kronecker_embed(ts, k2_module(z, x));
    CHECK(hom_dim(other, pencil) == 1);
    CHECK(hom_dim(pencil, other) == 1);
    CHECK(hom_dim(other, other) == 1);
}

TEST_CASE("tube Hom dimensions match the segment-overlap formula") {
    TubeSystem ts = build_canonical(three(2, 2, 2, 2));
    Field f = Field::prime();
    struct Entry {
        std::size_t tube;
        long long socle, len;
        Representation rep;
    };
    std::vector<Entry> mods;
    for (std::size_t k = 0; k < ts.tubes.size(); ++k)
        for (long long socle = 0; socle < ts.tubes[k].rank; ++socle)
            for (long long len = 1; len <= 4; ++len)
                mods.push_back({k, socle, len, tube_module(ts, {k, {}, socle, len}, f)});
    for (const auto& a : mods)
        for (const auto& b : mods) {
            long long expect = a.tube == b.tube
                                   ? overlap_formula(ts.tubes[a.tube].rank, a.socle, a.len,
                                                     b.socle, b.len)
                                   : 0;
            CHECK((long long)hom_dim(a.rep, b.rep) == expect);
        }
}

TEST_CASE("rank-three tube segments over a prime field") {
    TubeSystem ts = build_canonical(three(3, 3, 3, 7));
    Field f = Field::prime();
    for (long long socle : {0LL, 2LL})
        for (long long len : {1LL, 3LL, 4LL}) {
            Representation m = tube_module(ts, {1ul, {}, socle, len}, f);
            CHECK(m.dim() == ts.segment_dim(1, socle, len));
            CHECK(check_relations(m));
            CHECK((long long)hom_dim(m, m) == overlap_formula(3, socle, len, socle, len));
        }
}

TEST_CASE("homogeneous modules and the pencil embedding") {
    TubeSystem ts = build_canonical(three(2, 2, 2, 2));
    Field f = Field::prime();

    auto homog = [&](long long z, long long x, long long len) {
        TubeModuleSpec spec;
        spec.homogeneous = {f.from_int(z), f.from_int(x)};
        spec.length = len;
        return tube_module(ts, spec, f);
    };
    Representation m1 = homog(1, 1, 1);
    Representation m2 = homog(1, 1, 2);
    Representation n1 = homog(1, 3, 1);
    CHECK(m1.dim() == ts.h);
    CHECK(m2.dim() == dim_scale(2, ts.h));
    CHECK(check_relations(m2));
    CHECK(hom_dim(m1, m1) == 1);
    CHECK(hom_dim(m2, m2) == 2);
    CHECK(hom_dim(m1, m2) == 1);
    CHECK(hom_dim(m2, m1) == 1);
    CHECK(hom_dim(m1, n1) == 0);
    CHECK(hom_dim(n1, m2) == 0);
    for (std::size_t k = 0; k < ts.tubes.size(); ++k) {
        Representation seg = tube_module(ts, {k, {}, 0, 2}, f);
        CHECK(hom_dim(m1, seg) == 0);
        CHECK(hom_dim(seg, m1) == 0);
    }

    // The point at infinity uses the nilpotent convention.
    TubeSystem pair = build_canonical({{1, 1}, {}});
    TubeModuleSpec inf_spec;
    inf_spec.homogeneous = {f.one(), f.zero()};
    inf_spec.length = 2;
    Representation at_inf = tube_module(pair, inf_spec, f);
    CHECK(at_inf.dim() == DimVector{2, 2});
    CHECK(hom_dim(at_inf, at_inf) == 2);

    // Embedding preserves Hom spaces of equal-dimension Kronecker modules.
    Rng rng(7);
    for (std::size_t n = 2; n <= 3; ++n) {
        Representation a = k2_module(random_square(rng, f, n), random_square(rng, f, n));
        Representation b = k2_module(random_square(rng, f, n), random_square(rng, f, n));
        CHECK(hom_dim(a, b) == hom_dim(kronecker_embed(ts, a), kronecker_embed(ts, b)));
        CHECK(hom_dim(b, a) == hom_dim(kronecker_embed(ts, b), kronecker_embed(ts, a)));
        CHECK(hom_dim(a, a) == hom_dim(kronecker_embed(ts, a), kronecker_embed(ts, a)));
    }
    Matrix j2(2, 2, f);
    j2.at(0, 1) = f.one();
    Representation jordan = k2_module(Matrix::identity(2, f), j2);
    CHECK(hom_dim(jordan, jordan) == 2);
    Representation emb = kronecker_embed(ts, jordan);
    CHECK(hom_dim(emb, emb) == 2);
    CHECK(check_relations(emb));
}

TEST_CASE("tube_module input validation") {
    TubeSystem ts = build_canonical(three(2, 2, 2, 2));
    Field f = Field::prime();
    CHECK_THROWS_AS(tube_module(ts, {}, f), Error);  // neither point kind
    TubeModuleSpec both;
    both.exceptional = 0;
    both.homogeneous = {f.one(), f.one()};
    CHECK_THROWS_AS(tube_module(ts, both, f), Error);
    CHECK_THROWS_AS(tube_module(ts, {5ul, {}, 0, 1}, f), Error);
    CHECK_THROWS_AS(tube_module(ts, {0ul, {}, 0, 0}, f), Error);
    TubeModuleSpec zero_pt;
    zero_pt.homogeneous = {f.zero(), f.zero()};
    CHECK_THROWS_AS(tube_module(ts, zero_pt, f), Error);
    TubeModuleSpec on_tube;
    on_tube.homogeneous = {f.zero(), f.one()};
    CHECK_THROWS_AS(tube_module(ts, on_tube, f), Error);

    // socle indices wrap around the rank
    Representation a = tube_module(ts, {0ul, {}, 2, 1}, f);
    Representation b = tube_module(ts, {0ul, {}, 0, 1}, f);
    CHECK(a.dim() == b.dim());
    CHECK_THROWS_AS(normalize_point(f.zero(), f.zero()), Error);

    Representation off(testing::three_arms(2), f, {1, 1, 1, 1, 1});
    CHECK_THROWS_AS(kronecker_embed(ts, off), Error);
    Representation lop(kronecker_quiver(), f, {2, 3});
    CHECK_THROWS_AS(kronecker_embed(ts, lop), Error);
}

TEST_CASE("construction is deterministic") {
    TubeSystem a = build_canonical(three(2, 2, 2, 2));
    TubeSystem b = build_canonical(three(2, 2, 2, 2));
    CHECK(a.quiver->vertices() == b.quiver->vertices());
    for (std::size_t k = 0; k < a.tubes.size(); ++k) {
        CHECK(same_point(a.tubes[k].point, b.tubes[k].point));
        CHECK(a.tubes[k].e == b.tubes[k].e);
    }
    Field f = Field::prime();
    Representation m1 = tube_module(a, {0ul, {}, 0, 3}, f);
    Representation m2 = tube_module(a, {0ul, {}, 0, 3}, f);
    for (const auto& arrow : a.quiver->arrows())
        CHECK(m1.matrix(arrow.id) == m2.matrix(arrow.id));
}
