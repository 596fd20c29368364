#include <doctest.h>

#include "tits/oracle.hpp"

using namespace tits;

namespace {

long sp4_order(long q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }

std::vector<long> sizes(const OrbitReport& r) {
    std::vector<long> s;
    for (const auto& o : r.orbits) s.push_back(o.size);
    return s;
}

}  // namespace

TEST_CASE("orbit BFS mod q") {
    CHECK(sizes(orbit_bfs_modq(3, 2)) == std::vector<long>{15});
    CHECK(sizes(orbit_bfs_modq(5, 2)) == std::vector<long>{15});
    CHECK(sizes(orbit_bfs_modq(5, 3)) == std::vector<long>{80});
    CHECK(sizes(orbit_bfs_modq(3, 5)) == std::vector<long>{624});
    CHECK(sizes(orbit_bfs_modq(3, 3)) == std::vector<long>{8, 72});
    CHECK(sizes(orbit_bfs_modq(5, 5)) == std::vector<long>{24, 600});
    // for q = p the small orbit is ker Λ̄ without 0
    auto r = orbit_bfs_modq(3, 3);
    CHECK(r.orbits[0].rep == std::array<long, 4>{0, 0, 0, 1});
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 2}, {3, 3}, {7, 5}, {7, 7}}) {
        auto o = orbit_bfs_modq(p, q);
        long total = 0;
        for (long s : sizes(o)) total += s;
        CHECK(total == o.ground);
        CHECK(o.ground == q * q * q * q - 1);
    }
    CHECK_THROWS_AS(orbit_bfs_modq(2, 3), DomainError);
    CHECK_THROWS_AS(orbit_bfs_modq(3, 4), DomainError);
}

TEST_CASE("group closure equals the symplectic group order") {
    for (long p : {3L, 5L, 7L}) CHECK(group_closure_modq(p, 2) == 720);
    for (long p : {5L, 7L}) CHECK(group_closure_modq(p, 3) == 51840);
    for (long p : {3L, 5L}) CHECK(symplectic_basis_count(p, 2) == sp4_order(2));
    for (long p : {5L, 7L}) CHECK(symplectic_basis_count(p, 3) == sp4_order(3));
    CHECK_THROWS_AS(group_closure_modq(3, 3), DomainError);
    CHECK_THROWS_AS(group_closure_modq(3, 5), DomainError);
    CHECK_THROWS_AS(symplectic_basis_count(3, 3), DomainError);
}

TEST_CASE("line check examples") {
    auto c = exhaustive_line_check(GroupSpec::circ(10), 5);
    CHECK(c.ok());
    std::set<LineLabel> want{CircLine{1}, CircLine{2}, CircLine{5}, CircLine{10}};
    CHECK(c.labels == want);
    auto l = exhaustive_line_check(GroupSpec::lev(2), 3);
    CHECK(l.ok());
    CHECK(l.labels.size() == 4);
    CHECK(l.complete());
    auto p = exhaustive_line_check(GroupSpec::pq(3, 2), 4);
    CHECK(p.ok());
    CHECK(p.labels.size() == 30);
    CHECK_THROWS_AS(exhaustive_line_check(GroupSpec::lev_n(6, 2), 2), UsageError);
}

TEST_CASE("plane check examples") {
    auto l = exhaustive_plane_check(GroupSpec::lev(10), 5);
    CHECK(l.ok());
    CHECK(l.labels.size() == 18);
    CHECK(l.lines_per_plane == std::set<long>{6});
    auto c = exhaustive_plane_check(GroupSpec::circ(6), 4);
    CHECK(c.ok());
    CHECK(c.labels.size() == 1);
    auto p = exhaustive_plane_check(GroupSpec::pq(3, 2), 4);
    CHECK(p.ok());
    CHECK(p.labels.size() == 15);
    CHECK(p.lines_per_plane == std::set<long>{6});
    CHECK(p.planes_per_line == std::set<long>{3});
}

TEST_CASE("count check") {
    auto r = count_check(1, 60);
    CHECK(r.ok());
    const auto& n10 = r.rows[9];
    CHECK(n10.n == 10);
    CHECK(n10.N == 72);
    CHECK(n10.M == 36);
    CHECK(n10.O == 18);
    const auto& n2 = r.rows[1];
    CHECK(n2.N == 3);
    CHECK(n2.M == 3);
    CHECK(n2.O == 3);
    CHECK(r.rows[14].psi_enum == 113);
    CHECK(count_check(1, 30, true).rows.size() == 19);
    CHECK_THROWS_AS(count_check(5, 2), UsageError);
}

TEST_CASE("predictions") {
    CHECK(predicted_configuration(GroupSpec::pq(3, 2)) == Config{30, 15, 3, 6});
    CHECK(predicted_configuration(GroupSpec::pq(3, 3)) == Config{72, 48, 4, 6});
    CHECK(predicted_configuration(GroupSpec::circ(10)) == Config{4, 1, 1, 4});
    CHECK(expected_lines_per_plane(GroupSpec::lev(10)) == 6);
    CHECK(expected_line_labels(GroupSpec::lev(10)) == 52);
}

TEST_CASE("seeded runs are reproducible") {
    auto g = GroupSpec::pq(3, 3);
    CHECK(to_json(exhaustive_line_check(g, 2, 7)) == to_json(exhaustive_line_check(g, 2, 7)));
    CHECK(to_json(exhaustive_plane_check(g, 2, 7)) == to_json(exhaustive_plane_check(g, 2, 7)));
    CHECK(to_text(orbit_bfs_modq(3, 3)) == to_text(orbit_bfs_modq(3, 3)));
    CHECK(to_json(count_check(1, 10)).find("\"violations\": []") != std::string::npos);
}
