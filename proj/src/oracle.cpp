#include "tits/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace tits {

namespace {

using json = nlohmann::json;
using SmallMat = std::array<long, 16>;
using Clock = std::chrono::steady_clock;

SmallMat small(const Mat4& m, long q) {
    SmallMat s;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s[4 * i + j] = mod_long(m[i][j], q);
    return s;
}

SmallMat mul(const SmallMat& a, const SmallMat& b, long q) {
    SmallMat c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long s = 0;
            for (int k = 0; k < 4; ++k) s += a[4 * i + k] * b[4 * k + j];
            c[4 * i + j] = s % q;
        }
    return c;
}

void require_pq(long p, long q) {
    if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
    if (!is_prime(q)) throw DomainError("q must be prime, got " + std::to_string(q));
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs body(begin, end, slot) over [0, n) split into contiguous chunks, one per worker.
template <class F>
void parallel_chunks(std::size_t n, unsigned workers, F body) {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi, w);
    }
    for (auto& t : pool) t.join();
}

std::vector<Word> seeded_words(const GroupSpec& g, std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<Word> w;
    for (int i = 0; i < count; ++i) w.push_back(random_word(g, rng));
    return w;
}

void require_building_group(const GroupSpec& g) {
    if (g.family == Family::LevN) throw UsageError("no orbit labels for " + g.name());
}

long lint(const Int& x) { return x.get_si(); }

}  // namespace

Config predicted_configuration(const GroupSpec& g) {
    Config c;
    switch (g.family) {
        case Family::Circ:
            c.a = mu(g.t);
            c.b = 1;
            c.c = 1;
            c.d = mu(g.t);
            return c;
        case Family::Lev: {
            c.a = lint(psi(g.t));
            c.c = lint(nu_tilde(g.t));
            if (g.t == 1) c.b = 1;
            c.d = expected_lines_per_plane(g);
            return c;
        }
        case Family::PQ: {
            const long q = g.q, q2 = q * q;
            if (q == 2) {
                c = {30, 15, 3, 6};
            } else if (q == g.p) {
                c = {q2 * q2 - q2, (q2 - 1) * (q2 + q) / 2, (q2 - 1) / 2, q2 - q};
            } else {
                c = {q2 * q2 - 1, (q2 * q2 - 1) / 2, (q2 - 1) / 2, q2 - 1};
            }
            return c;
        }
        case Family::LevN: break;
    }
    throw UsageError("no building for " + g.name());
}

long expected_line_labels(const GroupSpec& g) { return predicted_configuration(g).a; }
long expected_plane_labels(const GroupSpec& g) { return predicted_configuration(g).c; }

long expected_lines_per_plane(const GroupSpec& g) {
    switch (g.family) {
        case Family::Circ: return mu(g.t);
        case Family::Lev: {
            Int s = 0;
            for (long r : divisors(g.t)) s += phi_tilde(r);
            return lint(s);
        }
        case Family::PQ: return *predicted_configuration(g).d;
        case Family::LevN: break;
    }
    throw UsageError("no building for " + g.name());
}

std::vector<Mat4> modq_generators(long p, long q) {
    require_pq(p, q);
    std::vector<Mat4> gens;
    for (const auto& t : circ_alphabet(p)) gens.push_back(t.matrix());
    if (q != p) {
        gens.push_back(lift_weyl(p, q));
        gens.push_back(lift_shear(1, 0, 0, p, q));
        gens.push_back(lift_shear(0, 1, 0, p, q));
        gens.push_back(lift_shear(0, 0, 1, p, q));
    }
    return gens;
}

OrbitReport orbit_bfs_modq(long p, long q) {
    const auto start = Clock::now();
    OrbitReport r;
    r.p = p;
    r.q = q;
    std::vector<SmallMat> gens;
    for (const auto& m : modq_generators(p, q)) gens.push_back(small(m, q));
    const long n = q * q * q * q;
    r.ground = n - 1;
    auto decode = [q](long code) {
        std::array<long, 4> x;
        for (int i = 3; i >= 0; --i) {
            x[i] = code % q;
            code /= q;
        }
        return x;
    };
    auto encode = [q](const std::array<long, 4>& x) {
        return ((x[0] * q + x[1]) * q + x[2]) * q + x[3];
    };
    std::vector<char> seen(n, 0);
    for (long s = 1; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<long> queue{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            auto x = decode(queue[i]);
            for (const auto& g : gens) {
                std::array<long, 4> y;
                for (int j = 0; j < 4; ++j) {
                    long acc = 0;
                    for (int k = 0; k < 4; ++k) acc += x[k] * g[4 * k + j];
                    y[j] = acc % q;
                }
                long c = encode(y);
                if (!seen[c]) {
                    seen[c] = 1;
                    queue.push_back(c);
                }
            }
        }
        r.orbits.push_back({static_cast<long>(queue.size()), decode(s)});
    }
    std::sort(r.orbits.begin(), r.orbits.end(), [](const Orbit& a, const Orbit& b) {
        return std::tie(a.size, a.rep) < std::tie(b.size, b.rep);
    });
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

long group_closure_modq(long p, long q, bool force) {
    require_pq(p, q);
    if (q == p) throw DomainError("group_closure_modq: q = p is unsupported (image is not symplectic)");
    if (q >= 5 && !force) throw DomainError("group_closure_modq: q >= 5 is refused without force");
    if (q > 15) throw DomainError("group_closure_modq: q > 15 does not fit the packed key");
    std::vector<SmallMat> gens;
    for (const auto& m : modq_generators(p, q)) gens.push_back(small(m, q));
    auto pack = [](const SmallMat& m) {
        std::uint64_t k = 0;
        for (long x : m) k = (k << 4) | static_cast<std::uint64_t>(x);
        return k;
    };
    SmallMat id{};
    for (int i = 0; i < 4; ++i) id[5 * i] = 1;
    std::unordered_set<std::uint64_t> seen{pack(id)};
    std::vector<SmallMat> frontier{id};
    while (!frontier.empty()) {
        std::vector<SmallMat> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                SmallMat y = mul(x, g, q);
                if (seen.insert(pack(y)).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return static_cast<long>(seen.size());
}

long symplectic_basis_count(long p, long q) {
    require_pq(p, q);
    if (q == p) throw DomainError("symplectic_basis_count: form is degenerate for q = p");
    const long pm = p % q;
    long lam[4][4] = {{0, 0, 1, 0}, {0, 0, 0, pm}, {q - 1, 0, 0, 0}, {0, q - pm, 0, 0}};
    const long n = q * q * q * q;
    std::vector<std::array<long, 4>> all(n);
    for (long c = 0; c < n; ++c) {
        long x = c;
        for (int i = 3; i >= 0; --i) {
            all[c][i] = x % q;
            x /= q;
        }
    }
    auto form = [&](const std::array<long, 4>& v, const std::array<long, 4>& w) {
        return (v[0] * w[2] - v[2] * w[0] + pm * (v[1] * w[3] - v[3] * w[1]) % q + 2 * q * q) % q;
    };
    std::array<const std::array<long, 4>*, 4> rows{};
    long count = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == 4) {
            ++count;
            return;
        }
        for (const auto& v : all) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = form(*rows[j], v) == lam[j][i];
            if (!ok) continue;
            rows[i] = &v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

LineCheckReport exhaustive_line_check(const GroupSpec& g, int bound, std::uint64_t seed, int words) {
    require_building_group(g);
    if (bound < 1) throw UsageError("bound must be >= 1");
    LineCheckReport rep;
    rep.group = g;
    rep.bound = bound;
    rep.seed = seed;
    rep.words = words;
    rep.expected_labels = expected_line_labels(g);

    const auto ws = seeded_words(g, seed, words);
    std::vector<Mat4> mats;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        mats.push_back(ws[i].eval());
        if (!is_member(mats.back(), g))
            rep.violations.push_back("random word " + std::to_string(i) + " is not a member: " + ws[i].str());
    }

    std::vector<Vec4> vs;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d)
                    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) == 1) vs.push_back(vec(a, b, c, d));
    rep.vectors = static_cast<long>(vs.size());

    const unsigned workers = worker_count();
    std::vector<std::vector<std::string>> bad(workers);
    std::vector<std::set<LineLabel>> seen(workers);
    parallel_chunks(vs.size(), workers, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        auto fail = [&](const Vec4& v, const std::string& what) {
            bad[slot].push_back(to_string(v) + ": " + what);
        };
        for (std::size_t i = lo; i < hi; ++i) {
            const Vec4& v = vs[i];
            try {
                const LineLabel lab = line_label(v, g);
                seen[slot].insert(lab);
                LineReduction r = reduce_line(v, g);
                Vec4 expect = r.canonical;
                if (r.sign < 0) expect = -1 * expect;
                if (r.word.apply(v) != expect) fail(v, "witness does not replay: " + r.word.str());
                if (!(r.group == g)) fail(v, "witness tagged with " + r.group.name());
                for (const auto& t : r.word.tokens)
                    if (!is_member(t.matrix(), t.tag)) fail(v, "token " + t.str() + " not in " + t.tag.name());
                if (!is_member(r.word.eval(), g)) fail(v, "witness not in " + g.name());
                if (!(r.label == lab)) fail(v, "reduction label differs from line label");
                if (!(line_label(r.canonical, g) == lab)) fail(v, "canonical form has another label");
                for (std::size_t k = 0; k < mats.size(); ++k)
                    if (!(line_label(act(v, mats[k]), g) == lab))
                        fail(v, "label not invariant under word " + std::to_string(k));
            } catch (const std::exception& e) {
                fail(v, std::string("exception: ") + e.what());
            }
        }
    });
    for (unsigned w = 0; w < workers; ++w) {
        rep.violations.insert(rep.violations.end(), bad[w].begin(), bad[w].end());
        rep.labels.insert(seen[w].begin(), seen[w].end());
    }
    if (static_cast<long>(rep.labels.size()) > rep.expected_labels)
        rep.violations.push_back("more line labels than orbits: " + std::to_string(rep.labels.size()));
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

namespace {

using PlkKey = std::array<long, 6>;

PlkKey primitive_plucker(const std::array<long, 4>& v, const std::array<long, 4>& w) {
    static constexpr int I[6] = {0, 0, 0, 1, 1, 2}, J[6] = {1, 2, 3, 2, 3, 3};
    PlkKey k;
    long g = 0;
    for (int i = 0; i < 6; ++i) {
        k[i] = v[I[i]] * w[J[i]] - v[J[i]] * w[I[i]];
        g = std::gcd(g, k[i]);
    }
    for (auto& x : k) x /= g;
    auto nz = std::find_if(k.begin(), k.end(), [](long x) { return x != 0; });
    if (*nz < 0)
        for (auto& x : k) x = -x;
    return k;
}

}  // namespace

PlaneCheckReport exhaustive_plane_check(const GroupSpec& g, int bound, std::uint64_t seed) {
    require_building_group(g);
    if (bound < 1) throw UsageError("bound must be >= 1");
    PlaneCheckReport rep;
    rep.group = g;
    rep.bound = bound;
    rep.seed = seed;
    rep.expected_labels = expected_plane_labels(g);
    rep.expected_lines_per_plane = expected_lines_per_plane(g);
    if (g.family == Family::PQ || g.family == Family::Circ || g.t == 1)
        rep.expected_planes_per_line = predicted_configuration(g).b;
    const long t = g.form_t();

    // one vector per ± pair: first nonzero entry positive
    std::vector<std::array<long, 4>> vs;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d) {
                    std::array<long, 4> x{a, b, c, d};
                    auto nz = std::find_if(x.begin(), x.end(), [](long y) { return y != 0; });
                    if (nz == x.end() || *nz < 0) continue;
                    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) continue;
                    vs.push_back(x);
                }

    const unsigned workers = worker_count();
    std::vector<std::map<PlkKey, std::pair<std::size_t, std::size_t>>> found(workers);
    std::vector<long> pairs(workers, 0);
    parallel_chunks(vs.size(), workers, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const auto &v = vs[i], &w = vs[j];
                if (v[0] * w[2] - v[2] * w[0] + t * (v[1] * w[3] - v[3] * w[1]) != 0) continue;
                ++pairs[slot];
                found[slot].emplace(primitive_plucker(v, w), std::pair{i, j});
            }
    });
    std::map<PlkKey, std::pair<std::size_t, std::size_t>> planes;
    for (unsigned w = 0; w < workers; ++w) {
        rep.isotropic_pairs += pairs[w];
        for (const auto& [k, ij] : found[w]) {
            auto [it, fresh] = planes.emplace(k, ij);
            if (!fresh) it->second = std::min(it->second, ij);
        }
    }
    rep.planes = static_cast<long>(planes.size());

    const auto ws = seeded_words(g, seed, 100);
    std::vector<Mat4> mats;
    for (const auto& w : ws) mats.push_back(w.eval());
    std::vector<std::pair<PlkKey, std::pair<std::size_t, std::size_t>>> list(planes.begin(), planes.end());

    std::vector<std::vector<std::string>> bad(workers);
    std::vector<std::map<PlaneLabel, std::vector<LineLabel>>> seen(workers);
    std::vector<std::set<long>> lpp(workers);
    parallel_chunks(list.size(), workers, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        for (std::size_t n = lo; n < hi; ++n) {
            const auto& [key, ij] = list[n];
            const auto& a = vs[ij.first];
            const auto& b = vs[ij.second];
            const Vec4 v = vec(a[0], a[1], a[2], a[3]), w = vec(b[0], b[1], b[2], b[3]);
            auto fail = [&](const std::string& what) {
                bad[slot].push_back(to_string(v) + "^" + to_string(w) + ": " + what);
            };
            try {
                Lattice2Basis h = saturate_plane(v, w);
                auto pk = plucker_int(h.b1, h.b2);
                bool same = true, opp = true;
                for (int i = 0; i < 6; ++i) {
                    same = same && pk[i] == key[i];
                    opp = opp && pk[i] == -key[i];
                }
                if (!same && !opp) fail("saturated basis has the wrong Plücker vector");
                PlaneLabel lab = plane_label(h, g);
                auto lines = lines_in_plane(h, g);
                lpp[slot].insert(static_cast<long>(lines.size()));
                if (static_cast<long>(lines.size()) != rep.expected_lines_per_plane)
                    fail("contains " + std::to_string(lines.size()) + " line orbits");
                auto [it, fresh] = seen[slot].emplace(lab, lines);
                if (!fresh && it->second != lines) fail("same label, different line orbits");
                for (int k = 0; k < 3; ++k) {
                    const std::size_t m = (n + k) % mats.size();
                    Lattice2Basis hm = hnf_rank2(act(h.b1, mats[m]), act(h.b2, mats[m]));
                    if (!(plane_label(hm, g) == lab))
                        fail("label not invariant under word " + std::to_string(m));
                }
            } catch (const std::exception& e) {
                fail(std::string("exception: ") + e.what());
            }
        }
    });
    std::map<PlaneLabel, std::vector<LineLabel>> all;
    for (unsigned w = 0; w < workers; ++w) {
        rep.violations.insert(rep.violations.end(), bad[w].begin(), bad[w].end());
        rep.lines_per_plane.insert(lpp[w].begin(), lpp[w].end());
        for (const auto& [lab, lines] : seen[w]) {
            auto [it, fresh] = all.emplace(lab, lines);
            if (!fresh && it->second != lines)
                rep.violations.push_back(plane_label_text(lab) + ": same label, different line orbits");
        }
    }
    std::map<LineLabel, long> per_line;
    for (const auto& [lab, lines] : all) {
        rep.labels.insert(lab);
        for (const auto& l : lines) ++per_line[l];
    }
    for (const auto& [l, n] : per_line) rep.planes_per_line.insert(n);
    if (static_cast<long>(rep.labels.size()) > rep.expected_labels)
        rep.violations.push_back("more plane labels than orbits: " + std::to_string(rep.labels.size()));
    if (rep.complete() && rep.expected_planes_per_line &&
        (rep.planes_per_line.size() != 1 || *rep.planes_per_line.begin() != *rep.expected_planes_per_line))
        rep.violations.push_back("planes per line orbit differ from " +
                                 std::to_string(*rep.expected_planes_per_line));
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

CountReport count_check(long lo, long hi, bool squarefree_only) {
    if (lo < 1 || hi < lo) throw UsageError("count_check: bad range");
    CountReport rep;
    for (long n = lo; n <= hi; ++n) {
        if (squarefree_only && square_factor(n) != 0) continue;
        CountRow row;
        row.n = n;
        row.N = static_cast<long>(enumerate_N(n).size());
        row.M = static_cast<long>(enumerate_M(n).size());
        row.O = static_cast<long>(enumerate_O(n).size());
        for (long r : divisors(n)) row.psi_enum += static_cast<long>(enumerate_M(r).size());
        row.N_formula = jordan2(n);
        row.nu = nu(n);
        row.nu_tilde = nu_tilde(n);
        row.psi = psi(n);
        row.psi_closed = (Int(n) * n + (n % 2 ? 1 : 4)) / 2;
        const std::string at = "n=" + std::to_string(n) + ": ";
        if (row.N != row.N_formula) rep.violations.push_back(at + "|N| differs from the product formula");
        if (row.M != row.nu) rep.violations.push_back(at + "|M| != nu");
        if (row.O != row.nu_tilde) rep.violations.push_back(at + "|O| != nu~");
        if (row.psi_enum != row.psi) rep.violations.push_back(at + "enumerated psi != sum of nu");
        if (row.psi != row.psi_closed) rep.violations.push_back(at + "psi != closed form");
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

json group_json(const GroupSpec& g) {
    if (g.family == Family::PQ) return {{"family", "GammaPQ"}, {"p", g.p}, {"q", g.q}};
    return {{"family", g.family == Family::Circ ? "GammaCirc" : "GammaLev"}, {"t", g.t}};
}

template <class L, class F>
json labels_json(const std::set<L>& s, F text) {
    json a = json::array();
    for (const auto& l : s) a.push_back(text(l));
    return a;
}

std::string opt_text(const std::optional<long>& x) { return x ? std::to_string(*x) : "-"; }

template <class S>
std::string join(const S& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

}  // namespace

std::string to_json(const OrbitReport& r) {
    json j = {{"p", r.p}, {"q", r.q}, {"ground", r.ground}, {"orbits", json::array()}};
    for (const auto& o : r.orbits) j["orbits"].push_back({{"size", o.size}, {"rep", o.rep}});
    return j.dump(2) + "\n";
}

std::string to_json(const LineCheckReport& r) {
    json j = {{"check", "lines"},
              {"group", group_json(r.group)},
              {"bound", r.bound},
              {"seed", r.seed},
              {"words", r.words},
              {"vectors", r.vectors},
              {"violations", r.violations},
              {"labels_realized", r.labels.size()},
              {"labels_expected", r.expected_labels},
              {"labels", labels_json(r.labels, line_label_text)}};
    return j.dump(2) + "\n";
}

std::string to_json(const PlaneCheckReport& r) {
    json j = {{"check", "planes"},
              {"group", group_json(r.group)},
              {"bound", r.bound},
              {"seed", r.seed},
              {"isotropic_pairs", r.isotropic_pairs},
              {"planes", r.planes},
              {"violations", r.violations},
              {"labels_realized", r.labels.size()},
              {"labels_expected", r.expected_labels},
              {"lines_per_plane", r.lines_per_plane},
              {"lines_per_plane_expected", r.expected_lines_per_plane},
              {"planes_per_line", r.planes_per_line},
              {"labels", labels_json(r.labels, plane_label_text)}};
    j["planes_per_line_expected"] =
        r.expected_planes_per_line ? json(*r.expected_planes_per_line) : json(nullptr);
    return j.dump(2) + "\n";
}

std::string to_json(const CountReport& r) {
    json j = {{"check", "counts"}, {"rows", json::array()}, {"violations", r.violations}};
    for (const auto& x : r.rows)
        j["rows"].push_back({{"n", x.n},
                             {"N", x.N},
                             {"M", x.M},
                             {"O", x.O},
                             {"psi", x.psi_enum},
                             {"N_formula", x.N_formula.get_str()},
                             {"nu", x.nu.get_str()},
                             {"nu_tilde", x.nu_tilde.get_str()},
                             {"psi_formula", x.psi.get_str()}});
    return j.dump(2) + "\n";
}

std::string to_text(const OrbitReport& r) {
    std::ostringstream os;
    os << "orbits of Z_" << r.q << "^4 \\ {0} under GammaPQ(p=" << r.p << ",q=" << r.q << ") mod " << r.q
       << ": " << r.orbits.size() << "\n";
    for (const auto& o : r.orbits)
        os << "  size " << o.size << "  rep (" << o.rep[0] << "," << o.rep[1] << "," << o.rep[2] << ","
           << o.rep[3] << ")\n";
    return os.str();
}

std::string to_text(const LineCheckReport& r) {
    std::ostringstream os;
    os << "lines " << r.group.name() << " B=" << r.bound << " seed=" << r.seed << ": " << r.vectors
       << " vectors, " << r.violations.size() << " violations, labels " << r.labels.size() << "/"
       << r.expected_labels << "\n";
    for (const auto& v : r.violations) os << "  violation " << v << "\n";
    return os.str();
}

std::string to_text(const PlaneCheckReport& r) {
    std::ostringstream os;
    os << "planes " << r.group.name() << " B=" << r.bound << " seed=" << r.seed << ": " << r.planes
       << " planes, " << r.violations.size() << " violations, labels " << r.labels.size() << "/"
       << r.expected_labels << ", lines/plane {" << join(r.lines_per_plane) << "} expected "
       << r.expected_lines_per_plane << ", planes/line {" << join(r.planes_per_line) << "} expected "
       << opt_text(r.expected_planes_per_line) << "\n";
    for (const auto& v : r.violations) os << "  violation " << v << "\n";
    return os.str();
}

std::string to_text(const CountReport& r) {
    std::ostringstream os;
    os << "    n     |N|     |M|     |O|     psi\n";
    for (const auto& x : r.rows) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%5ld %7ld %7ld %7ld %7ld\n", x.n, x.N, x.M, x.O, x.psi_enum);
        os << buf;
    }
    for (const auto& v : r.violations) os << "violation " << v << "\n";
    return os.str();
}

}  // namespace tits
