#include "tits/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tits;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Params {
    std::optional<long> t, p, q;
    std::string family = "lev";
    std::string format;
    std::optional<int> bound;
    std::uint64_t seed = 1;
    std::string out;
    bool force = false;
    bool verify = false;
    bool check = false;
    std::vector<std::string> vector;
};

void add_group(CLI::App* app, Params& P) {
    auto* t = app->add_option("--t", P.t, "polarization parameter t (squarefree)");
    auto* p = app->add_option("--p", P.p, "odd prime p");
    auto* q = app->add_option("--q", P.q, "level prime q");
    t->excludes(p)->excludes(q);
    p->needs(q);
    q->needs(p);
    app->add_option("--family", P.family, "group for --t: circ or lev")
        ->check(CLI::IsMember({"circ", "lev"}))
        ->capture_default_str();
}

GroupSpec group_of(const Params& P) {
    if (P.t) return P.family == "circ" ? GroupSpec::circ(*P.t) : GroupSpec::lev(*P.t);
    if (P.p && P.q) return GroupSpec::pq(*P.p, *P.q);
    throw UsageError("select a group with --t T or --p P --q Q");
}

void emit(const Params& P, const std::string& text) {
    if (P.out.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("cannot write to stdout");
        return;
    }
    std::ofstream f(P.out, std::ios::binary);
    if (!f) throw IoError("cannot open " + P.out + " for writing");
    f << text;
    f.close();
    if (!f) throw IoError("write to " + P.out + " failed");
}

std::string opt(const std::optional<long>& x) { return x ? std::to_string(*x) : "-"; }

json opt_json(const std::optional<long>& x) { return x ? json(*x) : json(nullptr); }

json config_json(const Config& c) {
    return {{"a", c.a}, {"b", opt_json(c.b)}, {"c", c.c}, {"d", opt_json(c.d)}};
}

std::string config_text(const Config& c) {
    return "(a,b,c,d) = (" + std::to_string(c.a) + "," + opt(c.b) + "," + std::to_string(c.c) + "," +
           opt(c.d) + ")";
}

int cmd_counts(const Params& P) {
    const bool as_json = P.format == "json";
    if (!P.format.empty() && P.format != "json" && P.format != "text")
        throw UsageError("counts: --format must be text or json");
    std::ostringstream os;
    json j;
    bool ok = true;
    if (P.t) {
        const long t = *P.t;
        require_squarefree(t);
        Int sphi = 0;
        for (long r : divisors(t)) sphi += phi_tilde(r);
        const Config circ = predicted_configuration(GroupSpec::circ(t));
        const Config lev = predicted_configuration(GroupSpec::lev(t));
        j = {{"t", t},
             {"mu", mu(t)},
             {"nu", nu(t).get_str()},
             {"nu_tilde", nu_tilde(t).get_str()},
             {"phi_tilde", phi_tilde(t).get_str()},
             {"phi_tilde_sum", sphi.get_str()},
             {"psi", psi(t).get_str()},
             {"GammaCirc", config_json(circ)},
             {"GammaLev", config_json(lev)}};
        os << "t        " << t << "\n"
           << "mu       " << mu(t) << "\n"
           << "nu       " << nu(t) << "\n"
           << "nu~      " << nu_tilde(t) << "\n"
           << "phi~     " << phi_tilde(t) << "\n"
           << "sum phi~ " << sphi << "\n"
           << "psi      " << psi(t) << "\n"
           << "GammaCirc " << config_text(circ) << "\n"
           << "GammaLev  " << config_text(lev) << "\n";
        if (P.verify) {
            CountReport cr = count_check(1, t);
            std::vector<std::string> bad = cr.violations;
            for (const auto& g : {GroupSpec::circ(t), GroupSpec::lev(t)}) {
                Config got = configuration(build(g)), want = predicted_configuration(g);
                if (!(got == want))
                    bad.push_back(g.name() + ": built " + config_text(got) + ", predicted " + config_text(want));
            }
            ok = bad.empty();
            j["verify"] = {{"ok", ok}, {"violations", bad}};
            os << "verify   " << (ok ? "ok" : "FAILED") << "\n";
            for (const auto& b : bad) os << "  " << b << "\n";
        }
    } else {
        const GroupSpec g = group_of(P);
        const Config c = predicted_configuration(g);
        j = {{"p", g.p}, {"q", g.q}, {"config", config_json(c)}};
        os << g.name() << "\n"
           << "lines  a = " << c.a << "\n"
           << "planes c = " << c.c << "\n"
           << "planes per line b = " << opt(c.b) << "\n"
           << "lines per plane d = " << opt(c.d) << "\n";
        if (P.verify) {
            Config got = configuration(build(g));
            ok = got == c;
            j["verify"] = {{"ok", ok}, {"built", config_json(got)}};
            os << "verify " << (ok ? "ok" : "FAILED") << ", built " << config_text(got) << "\n";
        }
    }
    emit(P, as_json ? j.dump(2) + "\n" : os.str());
    return ok ? kOk : kVerifyFailed;
}

int cmd_build(const Params& P) {
    const BuildingGraph g = build(group_of(P));
    if (P.format.empty() || P.format == "dot") emit(P, export_dot(g));
    else if (P.format == "json") emit(P, export_json(g));
    else throw UsageError("build: --format must be dot or json");
    return kOk;
}

int cmd_reduce(const Params& P) {
    const GroupSpec g = group_of(P);
    if (P.vector.size() != 4) throw UsageError("reduce: expected four integers");
    Vec4 v;
    for (int i = 0; i < 4; ++i) {
        if (v[i].set_str(P.vector[i], 10) != 0) throw UsageError("reduce: not an integer: " + P.vector[i]);
    }
    if (v == Vec4{0, 0, 0, 0}) throw DomainError("reduce: zero vector");
    if (!is_primitive(v)) throw DomainError("reduce: " + to_string(v) + " is not primitive");
    const LineReduction r = reduce_line(v, g);
    Vec4 expect = r.sign < 0 ? -r.canonical : r.canonical;
    const bool replay = r.word.apply(v) == expect && is_member(r.word.eval(), g);
    const long d = t_divisor(v, g.form_t());
    if (P.format == "json") {
        json j = {{"group", g.name()},
                  {"vector", to_string(v)},
                  {"t_divisor", d},
                  {"label", line_label_text(r.label)},
                  {"canonical", to_string(r.canonical)},
                  {"sign", r.sign},
                  {"witness", r.word.str()}};
        if (P.check) j["check"] = replay;
        emit(P, j.dump(2) + "\n");
    } else if (P.format.empty() || P.format == "text") {
        std::ostringstream os;
        os << "group     " << g.name() << "\n"
           << "vector    " << to_string(v) << "\n"
           << "r         " << d << "\n"
           << "label     " << line_label_text(r.label) << "\n"
           << "canonical " << to_string(r.canonical) << "\n"
           << "sign      " << (r.sign < 0 ? "-1" : "+1") << "\n"
           << "witness   " << r.word.str() << "\n";
        if (P.check) os << "check     " << (replay ? "ok" : "FAILED") << "\n";
        emit(P, os.str());
    } else {
        throw UsageError("reduce: --format must be text or json");
    }
    return P.check && !replay ? kVerifyFailed : kOk;
}

int cmd_verify(const Params& P) {
    const GroupSpec g = group_of(P);
    if (!P.format.empty() && P.format != "json" && P.format != "text")
        throw UsageError("verify: --format must be text or json");
    const int lb = P.bound.value_or(5), pb = P.bound.value_or(4);
    bool ok = true;
    std::ostringstream os;
    json j = json::object();
    j["group"] = g.name();

    CountReport cr = count_check(1, g.family == Family::PQ ? std::max(g.q, g.p) : g.t);
    ok = ok && cr.ok();
    j["counts"] = json::parse(to_json(cr))["violations"];
    os << "counts " << cr.rows.size() << " moduli, " << cr.violations.size() << " violations\n";
    for (const auto& v : cr.violations) os << "  violation " << v << "\n";

    LineCheckReport lr = exhaustive_line_check(g, lb, P.seed);
    PlaneCheckReport pr = exhaustive_plane_check(g, pb, P.seed);
    ok = ok && lr.ok() && pr.ok();
    j["lines"] = json::parse(to_json(lr));
    j["planes"] = json::parse(to_json(pr));
    os << to_text(lr);
    if (!lr.complete()) os << "  incomplete: raise --bound to realize all line labels\n";
    os << to_text(pr);
    if (!pr.complete()) os << "  incomplete: raise --bound to realize all plane labels\n";

    const BuildingGraph b = build(g);
    const Config got = configuration(b), want = predicted_configuration(g);
    ok = ok && got == want;
    j["config"] = {{"built", config_json(got)}, {"predicted", config_json(want)}};
    os << "building " << config_text(got) << (got == want ? " matches" : " DIFFERS FROM") << " prediction\n";

    if (g.family == Family::PQ) {
        OrbitReport orb = orbit_bfs_modq(g.p, g.q);
        std::vector<long> want_sizes = g.q == g.p ? std::vector<long>{g.q * g.q - 1, orb.ground + 1 - g.q * g.q}
                                                  : std::vector<long>{orb.ground};
        std::vector<long> sizes;
        for (const auto& o : orb.orbits) sizes.push_back(o.size);
        ok = ok && sizes == want_sizes;
        j["orbits"] = json::parse(to_json(orb));
        os << to_text(orb);
        if (g.q != g.p && (g.q < 5 || P.force)) {
            long order = group_closure_modq(g.p, g.q, P.force), sp = symplectic_basis_count(g.p, g.q);
            ok = ok && order == sp;
            j["closure"] = {{"order", order}, {"symplectic_bases", sp}};
            os << "closure order " << order << ", symplectic bases " << sp << "\n";
        }
    }
    j["ok"] = ok;
    os << (ok ? "verify ok\n" : "verify FAILED\n");
    emit(P, P.format == "json" ? j.dump(2) + "\n" : os.str());
    return ok ? kOk : kVerifyFailed;
}

std::string tetra_tag(TetraKind k) {
    switch (k) {
        case TetraKind::Vertex: return "vertex";
        case TetraKind::EdgeMid: return "edge";
        case TetraKind::FaceMid: return "face";
        case TetraKind::Centroid: return "centroid";
    }
    return "?";
}

template <std::size_t N>
std::string tuple(const std::array<long, N>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

int cmd_plucker(const Params& P) {
    if (!P.q || (*P.q != 2 && *P.q != 3)) throw UsageError("plucker: --q must be 2 or 3");
    const long q = *P.q, p = P.p.value_or(q == 3 ? 5 : 3);
    if (p == q) throw UsageError("plucker: needs p != q");
    const BuildingGraph b = build_pq(p, q);
    const TetraModel tm = tetrahedron_model();
    json rows = json::array();
    std::ostringstream os;
    os << "plane orbits of " << b.group.name() << ": " << b.planes.size() << ", quadric points "
       << isotropic_quadric_points(q).size() << "\n";
    for (const auto& pl : b.planes) {
        std::array<long, 4> v, w;
        for (int i = 0; i < 4; ++i) {
            v[i] = mod_long(pl.rep.b1[i], q);
            w[i] = mod_long(pl.rep.b2[i], q);
        }
        PluckerPoint x = plucker(v, w, q);
        auto y = plucker_to_quadric(x, p, q);
        json row = {{"label", plane_label_text(pl.label)}, {"plucker", x}, {"quadric", y}};
        os << plane_label_text(pl.label) << "  plucker " << tuple(x) << "  quadric " << tuple(y);
        if (q == 2) {
            std::array<std::array<long, 4>, 3> pts{v, w, {}};
            for (int i = 0; i < 4; ++i) pts[2][i] = (v[i] + w[i]) % 2;
            json tags = json::array();
            os << "  tetra";
            for (const auto& pt : pts)
                for (const auto& tp : tm.points)
                    if (tp.coords == pt) {
                        tags.push_back(tetra_tag(tp.kind));
                        os << " " << tuple(pt) << ":" << tetra_tag(tp.kind);
                    }
            row["tetra"] = tags;
        }
        os << "\n";
        rows.push_back(row);
    }
    emit(P, P.format == "json" ? rows.dump(2) + "\n" : os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tits buildings of Sp(4) subgroups for polarization type (1,t)", "tits"};
    app.require_subcommand(1);
    Params P;

    auto* counts = app.add_subcommand("counts", "orbit-count formulas and predicted configurations");
    add_group(counts, P);
    counts->add_flag("--verify", P.verify, "cross-check against enumeration and the built graph");
    counts->add_option("--format", P.format, "text or json");
    counts->add_option("--out", P.out, "output file");

    auto* buildc = app.add_subcommand("build", "building graph as DOT or JSON");
    add_group(buildc, P);
    buildc->add_option("--format", P.format, "dot or json");
    buildc->add_option("--out", P.out, "output file");

    auto* reduce = app.add_subcommand("reduce", "canonical form and reduction witness of a primitive vector");
    add_group(reduce, P);
    reduce->add_option("vector", P.vector, "four integers")->expected(4)->required();
    reduce->add_flag("--check", P.check, "replay the witness");
    reduce->add_option("--format", P.format, "text or json");
    reduce->add_option("--out", P.out, "output file");

    auto* verify = app.add_subcommand("verify", "run the brute-force oracle suite");
    add_group(verify, P);
    verify->add_option("--bound", P.bound, "height bound (default 5 for lines, 4 for planes)");
    verify->add_option("--seed", P.seed, "seed for random member words")->capture_default_str();
    verify->add_flag("--force", P.force, "allow group closure for q >= 5");
    verify->add_option("--format", P.format, "text or json");
    verify->add_option("--out", P.out, "output file");

    auto* pl = app.add_subcommand("plucker", "Plücker and quadric models of the plane orbits");
    pl->add_option("--q", P.q, "2 or 3")->required();
    pl->add_option("--p", P.p, "odd prime p != q");
    pl->add_option("--format", P.format, "text or json");
    pl->add_option("--out", P.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (*counts) return cmd_counts(P);
        if (*buildc) return cmd_build(P);
        if (*reduce) return cmd_reduce(P);
        if (*verify) return cmd_verify(P);
        if (*pl) return cmd_plucker(P);
    } catch (const IoError& e) {
        std::cerr << "tits: " << e.what() << "\n";
        return kIo;
    } catch (const UsageError& e) {
        std::cerr << "tits: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "tits: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
