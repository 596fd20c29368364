#include <doctest.h>

#include "gen.hpp"
#include "tits/classify.hpp"

#include <map>
#include <set>

using namespace tits;

namespace {

std::vector<Vec4> box(long b) {
    std::vector<Vec4> out;
    for (long a = -b; a <= b; ++a)
        for (long c = -b; c <= b; ++c)
            for (long d = -b; d <= b; ++d)
                for (long e = -b; e <= b; ++e)
                    if (std::gcd(std::gcd(a, c), std::gcd(d, e)) == 1) out.push_back(vec(a, c, d, e));
    return out;
}

bool replays(const LineReduction& r, const Vec4& v, const GroupSpec& g) {
    Vec4 expect = r.sign < 0 ? -r.canonical : r.canonical;
    if (r.word.apply(v) != expect || !is_member(r.word.eval(), g)) return false;
    for (const auto& t : r.word.tokens)
        if (!is_member(t.matrix(), t.tag)) return false;
    return true;
}

// Saturated isotropic planes from pairs of small vectors, one per Plücker class.
std::vector<Lattice2Basis> small_planes(long t, long b) {
    std::vector<Vec4> vs;
    for (const auto& v : box(b)) {
        auto nz = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
        if (*nz > 0) vs.push_back(v);
    }
    std::set<Lattice2Basis, bool (*)(const Lattice2Basis&, const Lattice2Basis&)> seen(
        [](const Lattice2Basis& x, const Lattice2Basis& y) {
            if (auto c = cmp(x.b1, y.b1); c != 0) return c < 0;
            return cmp(x.b2, y.b2) < 0;
        });
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (pairing(vs[i], vs[j], t) == 0) seen.insert(saturate_plane(vs[i], vs[j]));
    return {seen.begin(), seen.end()};
}

Lattice2Basis moved(const Lattice2Basis& h, const Mat4& m) { return hnf_rank2(act(h.b1, m), act(h.b2, m)); }

}  // namespace

TEST_CASE("circ reduction examples") {
    auto r = reduce_line_circ(vec(1, 0, 0, 0), 10);
    CHECK(r.canonical == vec(1, 1, 0, 0));
    CHECK(replays(r, vec(1, 0, 0, 0), GroupSpec::circ(10)));
    CHECK(reduce_line_circ(vec(0, 1, 0, 0), 10).canonical == vec(10, 1, 0, 0));
    auto s = reduce_line_circ(vec(2, 3, 4, 5), 10);
    CHECK(s.canonical == vec(2, 1, 0, 0));
    CHECK(replays(s, vec(2, 3, 4, 5), GroupSpec::circ(10)));
    CHECK_THROWS_AS(reduce_line_circ(vec(2, 4, 6, 8), 10), DomainError);
}

TEST_CASE("lev reduction examples") {
    auto a = reduce_line_lev(vec(1, 0, 0, 0), 10);
    CHECK(a.canonical[0] == 1);
    CHECK(a.canonical[2] == 0);
    auto b = reduce_line_lev(vec(0, 1, 0, 0), 10);
    CHECK(b.canonical == vec(10, 1, 0, 0));
    CHECK(b.label == LineLabel{LevLine{10, ResidueClassM{10, 1, 0}}});
    auto c = reduce_line_lev(vec(5, 2, 15, 3), 10);
    CHECK(c.label == LineLabel{LevLine{5, class_M(2, 3, 5)}});
    CHECK(replays(c, vec(5, 2, 15, 3), GroupSpec::lev(10)));
    CHECK(line_label(vec(1, 0, 0, 0), GroupSpec::lev(10)) == LineLabel{LevLine{1, ResidueClassM{1, 0, 0}}});
}

TEST_CASE("pq reduction examples") {
    auto g = GroupSpec::pq(3, 2);
    auto a = reduce_line_pq(vec(3, 2, 4, 6), 3, 2);  // residue v0, short
    CHECK(a.canonical == vec(1, 0, 0, 0));
    CHECK(replays(a, vec(3, 2, 4, 6), g));
    CHECK(reduce_line_pq(vec(0, 1, 0, 0), 3, 2).canonical == vec(0, 1, 0, 0));
    auto b = reduce_line_pq(vec(6, 1, 12, 0), 3, 2);
    CHECK(b.canonical == vec(0, 1, 0, 0));
    CHECK(replays(b, vec(6, 1, 12, 0), g));
    auto l = std::get<PQLine>(line_label(vec(0, 1, 0, 0), g));
    CHECK(l.is_long);
    CHECK_FALSE(l.has_refine);
    CHECK(l.res == std::array<long, 4>{0, 1, 0, 0});
    auto g3 = GroupSpec::pq(3, 3);
    CHECK(line_label(vec(3, 1, 0, 0), g3) != line_label(vec(6, 1, 0, 0), g3));
    auto e = std::get<PQLine>(line_label(vec(0, 1, 0, 0), g3));
    CHECK(e.has_refine);
    CHECK(e.refine == std::array<long, 2>{0, 0});
    CHECK_THROWS_AS(reduce_line(vec(1, 0, 0, 0), GroupSpec::lev_n(6, 2)), UsageError);
}

TEST_CASE("witness soundness over the height-6 box") {
    const auto vs = box(6);
    std::vector<GroupSpec> groups;
    for (long t : {1L, 2L, 3L, 5L, 6L, 7L, 10L, 15L}) {
        groups.push_back(GroupSpec::circ(t));
        groups.push_back(GroupSpec::lev(t));
    }
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 2}, {3, 3}, {5, 2}, {3, 5}, {5, 3}})
        groups.push_back(GroupSpec::pq(p, q));
    for (const auto& g : groups) {
        CAPTURE(g.name());
        long bad = 0;
        for (const auto& v : vs) {
            auto r = reduce_line(v, g);
            if (!replays(r, v, g) || !(line_label(r.canonical, g) == r.label)) {
                if (bad++ < 3) FAIL_CHECK("witness fails for " << to_string(v));
            }
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("lev labels are complete: one canonical vector per label") {
    const auto vs = box(6);
    for (long t : {2L, 3L, 6L, 10L, 15L}) {
        std::map<LineLabel, Vec4> canon;
        std::set<Vec4, VecLess> values;
        for (const auto& v : vs) {
            auto r = reduce_line_lev(v, t);
            auto [it, fresh] = canon.emplace(r.label, r.canonical);
            if (fresh) values.insert(r.canonical);
            else CHECK(it->second == r.canonical);
        }
        CHECK(values.size() == canon.size());
    }
}

TEST_CASE("labels computed from residues agree with full labels") {
    Rng rng(41);
    for (const auto& g : gen::sample_groups()) {
        const long m = label_modulus(g);
        for (int i = 0; i < 150; ++i) {
            Vec4 v = gen::big_primitive(rng, g, 9);
            std::array<long, 4> x{mod_long(v[0], m), mod_long(v[1], m), mod_long(v[2], m), mod_long(v[3], m)};
            CHECK(line_label_mod(x, g) == line_label(v, g));
        }
    }
}

TEST_CASE("line labels are invariant under 500 member words") {
    Rng rng(42);
    for (const auto& g : gen::sample_groups()) {
        CAPTURE(g.name());
        for (int i = 0; i < 500; ++i) {
            Vec4 v = gen::primitive(rng, 8);
            Mat4 m = random_word(g, rng).eval();
            CHECK(line_label(act(v, m), g) == line_label(v, g));
        }
    }
}

TEST_CASE("plane labels are invariant under 500 member words") {
    Rng rng(43);
    for (const auto& g : gen::sample_groups()) {
        CAPTURE(g.name());
        auto planes = small_planes(g.form_t(), 2);
        for (int i = 0; i < 500; ++i) {
            const auto& h = planes[rng.below(static_cast<long>(planes.size()))];
            Mat4 m = random_word(g, rng).eval();
            CHECK(plane_label(moved(h, m), g) == plane_label(h, g));
        }
    }
}

TEST_CASE("isotropy_check examples") {
    CHECK(isotropy_check(vec(1, 0, 0, 0), vec(0, 1, 0, 0), 10));
    CHECK_FALSE(isotropy_check(vec(1, 0, 0, 0), vec(0, 0, 1, 0), 10));
    CHECK(isotropy_check(vec(1, 0, 0, 0), vec(0, 5, 0, 0), 10));
}

TEST_CASE("plane_basis_split") {
    Lattice2Basis h0 = hnf_rank2(vec(1, 0, 0, 0), vec(0, 1, 0, 0));
    auto s0 = plane_basis_split(h0, 10);
    CHECK(s0.v == vec(1, 0, 0, 0));
    CHECK(s0.w == vec(0, 1, 0, 0));
    // this pair pairs to 10, so it spans no isotropic plane
    CHECK_THROWS_AS(plane_basis_split(hnf_rank2(vec(1, 1, 0, 0), vec(0, 2, 0, 1)), 10), DomainError);
    for (long t : {1L, 2L, 6L, 10L, 15L}) {
        for (const auto& h : small_planes(t, 2)) {
            auto s = plane_basis_split(h, t);
            CHECK(t_divisor(s.v, t) == 1);
            CHECK(t_divisor(s.w, t) == t);
            CHECK(det2(s.change) == 1);
            CHECK(s.v == s.change.a * h.b1 + s.change.b * h.b2);
            CHECK(s.w == s.change.c * h.b1 + s.change.d * h.b2);
        }
    }
}

TEST_CASE("basis divisors of saturated isotropic planes are coprime") {
    for (long t : {2L, 3L, 5L, 6L, 7L, 10L, 11L, 13L, 14L, 15L})
        for (const auto& h : small_planes(t, 2)) {
            CAPTURE(to_string(h.b1));
            CAPTURE(to_string(h.b2));
            CHECK(std::gcd(t_divisor(h.b1, t), t_divisor(h.b2, t)) == 1);
        }
}

TEST_CASE("plane label examples") {
    auto g = GroupSpec::lev(10);
    auto h1 = hnf_rank2(vec(1, 0, 0, 0), vec(0, 1, 0, 0));
    CHECK(plane_label(h1, g) == PlaneLabel{LevPlane{class_O(1, 0, 10)}});
    CHECK(plane_label(hnf_rank2(vec(1, 0, 0, 0), vec(0, 1, 0, 1)), g) == PlaneLabel{LevPlane{class_O(1, 1, 10)}});
    CHECK(plane_label(hnf_rank2(vec(1, 1, 0, 0), vec(0, 1, 0, 0)), g) == plane_label(h1, g));
    CHECK(plane_label(h1, GroupSpec::circ(10)) == PlaneLabel{CircPlane{}});
    CHECK_THROWS_AS(plane_label(hnf_rank2(vec(1, 0, 0, 0), vec(0, 0, 1, 0)), g), DomainError);
}

TEST_CASE("lev plane labels realize exactly the classes of O(t)") {
    for (long t = 1; t <= 15; ++t) {
        if (square_factor(t) != 0) continue;
        std::set<PlaneLabel> labels;
        for (const auto& h : small_planes(t, t <= 7 ? 2 : t <= 10 ? 3 : 4)) labels.insert(plane_label(h, GroupSpec::lev(t)));
        CAPTURE(t);
        CHECK(Int(static_cast<long>(labels.size())) == nu_tilde(t));
    }
}

TEST_CASE("line representatives carry their labels") {
    for (const auto& g : gen::sample_groups()) {
        CAPTURE(g.name());
        const long m = label_modulus(g);
        std::set<LineLabel> labels;
        for (long a = 0; a < std::min(m, 10L); ++a)
            for (const auto& v : box(2)) {
                Vec4 w = v;
                w[0] += a;
                if (w != Vec4{0, 0, 0, 0} && is_primitive(w)) labels.insert(line_label(w, g));
            }
        for (const auto& l : labels) CHECK(line_label(line_representative(l, g), g) == l);
    }
}
