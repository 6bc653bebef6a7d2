// Acceptance checks, one pass/fail line per criterion. Exit 0 iff all pass.
// argv[1] is the path of the command line binary, used by the determinism
// criterion. Time budgets are pinned here; all arithmetic checks are exact.

#include "oracles.hpp"
#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/errors.hpp"
#include "toric/io.hpp"
#include "toric/nash.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>
#include <vector>

using namespace toric;

namespace {

const double kShortBudget = 1.0;  // seconds, criteria 1-3
const double kChainBudget = 30.0; // seconds, criterion 10

int failures = 0;

void line(int n, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
    if (!ok) ++failures;
}

void criterion(int n, const std::function<std::pair<bool, std::string>()>& f) {
    try {
        auto [ok, detail] = f();
        line(n, ok, detail);
    } catch (const std::exception& e) {
        line(n, false, std::string("unexpected exception: ") + e.what());
    }
}

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

Vec v(std::vector<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(x);
    return out;
}

Mat m(std::vector<std::vector<long>> rows) {
    Mat out;
    for (auto& r : rows) out.push_back(v(r));
    return out;
}

ToricTriple single_chart(const AffineSemigroup& s, const std::string& id) {
    return build_triple(s.dim, {{id, dual_cone(s.cone).rays, s.gens}});
}

ToricTriple umbrella_triple() {
    return single_chart(make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}})), "u");
}

ToricTriple mirror_triple() {
    return build_triple(2, {{"u", m({{1, 0}, {0, 1}}), m({{0, 2}, {1, 0}, {1, 1}})},
                            {"m", m({{1, 0}, {0, -1}}), m({{0, -2}, {1, 0}, {1, -1}})}});
}

// Rebuilding from scratch reruns every axiom, chart and gluing check.
bool revalidates(const ToricTriple& t) {
    std::vector<ChartInput> inputs;
    for (const Chart& ch : t.charts) inputs.push_back({ch.id, ch.cone.rays, ch.semigroup.gens});
    ToricTriple again = build_triple(t.rank, inputs);
    return again.charts.size() == t.charts.size() && again.fan.size() == t.fan.size();
}

// Shared corpus for the smoothness and saturation criteria: free charts, the
// classic curve and surface singularities, and random pointed semigroups of
// rank 2-3 with at most 5 generators of height at most 4 (sampled inside the
// nonnegative orthant, so every cone is pointed and coordinate sums grow
// monotonically, which the box oracles rely on).
struct CorpusEntry {
    std::string label;
    AffineSemigroup s;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    out.push_back({"free-1", make_semigroup(1, m({{1}}))});
    out.push_back({"free-2", make_semigroup(2, m({{1, 0}, {0, 1}}))});
    out.push_back({"free-3", make_semigroup(3, m({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))});
    out.push_back({"numeric-2-3", make_semigroup(1, m({{2}, {3}}))});
    out.push_back({"numeric-3-4-5", make_semigroup(1, m({{3}, {4}, {5}}))});
    out.push_back({"quadric-cone", make_semigroup(2, m({{1, 0}, {1, 1}, {1, 2}}))});
    out.push_back({"umbrella", make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}}))});

    oracle::Rng rng(9203);
    int want2 = 8, want3 = 5, attempts = 0, label = 0;
    while (want2 + want3 > 0 && attempts < 10000) {
        ++attempts;
        int dim = want2 > 0 ? 2 : 3;
        int count = static_cast<int>(rng.pick(2, 5));
        Mat gens;
        for (int i = 0; i < count; ++i) gens.push_back(rng.vec(dim, 0, 4));
        try {
            AffineSemigroup s = make_semigroup(dim, gens);
            out.push_back({"random-" + std::to_string(label++), std::move(s)});
            (dim == 2 ? want2 : want3)--;
        } catch (const Error&) {
            // not a full-rank generating set; draw again
        }
    }
    return out;
}

bool in_cone(const Cone& c, const Vec& p) {
    for (const Vec& f : c.facets)
        if (dot(f, p) < 0) return false;
    return true;
}

std::vector<Vec> box_points(int dim, long lo, long hi) {
    std::vector<Vec> out;
    Vec cur(static_cast<size_t>(dim), Int(lo));
    while (true) {
        out.push_back(cur);
        int k = 0;
        while (k < dim && cur[k] == hi) cur[k++] = lo;
        if (k == dim) break;
        cur[k] += 1;
    }
    return out;
}

std::string shell_capture(const std::string& cmd, int& code) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<CorpusEntry> corpus = build_corpus();

    criterion(1, [&]() -> std::pair<bool, std::string> {
        auto t0 = Clock::now();
        AffineSemigroup cusp = make_semigroup(1, m({{2}, {3}}));
        NashReport rep = nash_iterate(single_chart(cusp, "c"));
        bool ok = rep.terminated && rep.reason == "smooth" && rep.steps.size() == 1 &&
                  rep.result.charts.size() == 1;
        // hand blowup of the ideal {2,3}: adjoin the difference 3-2=1
        AffineSemigroup hand = make_semigroup(1, m({{2}, {3}, {1}}));
        ok = ok && same_members(rep.result.charts[0].semigroup, hand);
        ok = ok && minimal_generators(rep.result.charts[0].semigroup) == m({{1}});
        double dt = secs(t0);
        ok = ok && dt < kShortBudget;
        return {ok, "cusp resolves in 1 step to the free chart (" + fmt_secs(dt) + ")"};
    });

    criterion(2, [&]() -> std::pair<bool, std::string> {
        auto t0 = Clock::now();
        AffineSemigroup quadric = make_semigroup(2, m({{1, 0}, {1, 1}, {1, 2}}));
        NashReport rep = nash_iterate(single_chart(quadric, "c"));
        bool ok = rep.terminated && rep.reason == "smooth" && rep.steps.size() == 1 &&
                  rep.result.charts.size() == 2;
        for (const Chart& ch : rep.result.charts) {
            std::vector<Vec> mg = minimal_generators(ch.semigroup);
            ok = ok && mg.size() == 2 && abs(oracle::det_cofactor(mg)) == 1;
        }
        NewtonPolyhedron np = newton_polyhedron(log_jacobian(quadric));
        std::set<Vec> verts(np.vertices.begin(), np.vertices.end());
        ok = ok && verts == std::set<Vec>{v({2, 1}), v({2, 3})};
        // the non-vertex exponent (2,2) contributes the difference (0,1):
        // present in a blowup chart, absent if only vertex differences join
        bool non_vertex_used = false;
        for (const Chart& ch : rep.result.charts)
            if (contains(ch.semigroup, v({0, 1}))) non_vertex_used = true;
        AffineSemigroup vertex_only = make_semigroup(2, m({{1, 0}, {1, 1}, {1, 2}, {0, 2}}));
        ok = ok && non_vertex_used && !contains(vertex_only, v({0, 1}));
        double dt = secs(t0);
        ok = ok && dt < kShortBudget;
        return {ok, "quadric cone resolves in 1 step to 2 basis charts (" + fmt_secs(dt) + ")"};
    });

    criterion(3, [&]() -> std::pair<bool, std::string> {
        auto t0 = Clock::now();
        NashReport rep = nash_iterate(umbrella_triple());
        bool ok = rep.terminated && rep.reason == "smooth" && rep.steps.size() == 1 &&
                  rep.result.charts.size() == 2;
        for (const Chart& ch : rep.result.charts) ok = ok && is_free_semigroup(ch.semigroup);
        double dt = secs(t0);
        ok = ok && dt < kShortBudget;
        return {ok, "pinched plane resolves in 1 step to 2 free charts (" + fmt_secs(dt) + ")"};
    });

    criterion(4, [&]() -> std::pair<bool, std::string> {
        int disagreements = 0;
        for (const CorpusEntry& e : corpus) {
            bool smooth = is_smooth_chart(e.s);
            ToricTriple t = single_chart(e.s, "c");
            ToricTriple t2 = nash_step(t);
            bool fixed_point = t2.charts.size() == 1 && t2.charts[0].cone == t.charts[0].cone &&
                               same_members(t2.charts[0].semigroup, t.charts[0].semigroup);
            std::vector<Vec> mg = minimal_generators(e.s);
            bool basis = mg.size() == static_cast<size_t>(e.s.dim) &&
                         abs(oracle::det_cofactor(mg)) == 1;
            if (smooth != fixed_point || smooth != basis) ++disagreements;
        }
        bool ok = corpus.size() >= 20 && disagreements == 0;
        return {ok, "smoothness = blowup fixed point = generator basis on " +
                        std::to_string(corpus.size()) + " charts, " +
                        std::to_string(disagreements) + " disagreements"};
    });

    criterion(5, [&]() -> std::pair<bool, std::string> {
        int bad = 0;
        for (const CorpusEntry& e : corpus) {
            const AffineSemigroup& s = e.s;
            bool entry_ok = true;

            // membership: breadth-first box enumeration against contains
            std::set<Vec> dp = oracle::members_in_box(s.gens, 4);
            for (const Vec& p : box_points(s.dim, -4, 4))
                if (contains(s, p) != (dp.count(p) > 0)) entry_ok = false;

            // saturation: irreducible cone points inside the ray-zonotope box.
            // Any reducible point has an irreducible summand, and irreducible
            // points lie in the box, so testing summands from the box with a
            // half-grading cutoff is exhaustive.
            long R = 0;
            for (const Vec& ray : s.cone.rays) {
                long best = 0;
                for (const Int& x : ray) {
                    long a = abs(x).convert_to<long>();
                    best = std::max(best, a);
                }
                R += best;
            }
            if (R == 0) R = 1;
            std::set<Vec> box = oracle::cone_points_in_box(s.cone.facets, s.dim, R);
            Vec ell(static_cast<size_t>(s.dim), Int(0));
            for (const Vec& f : s.cone.facets)
                for (int i = 0; i < s.dim; ++i) ell[i] += f[i];
            std::vector<Vec> pts(box.begin(), box.end());
            std::erase_if(pts, [](const Vec& p) { return is_zero(p); });
            std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
                Int la = dot(ell, a), lb = dot(ell, b);
                return la != lb ? la < lb : a < b;
            });
            std::set<Vec> irred;
            for (const Vec& p : pts) {
                Int lp = dot(ell, p);
                bool reducible = false;
                for (const Vec& a : pts) {
                    if (2 * dot(ell, a) > lp) break;
                    Vec rest = vec_sub(p, a);
                    if (!is_zero(rest) && in_cone(s.cone, rest)) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) irred.insert(p);
            }
            std::vector<Vec> hb = minimal_generators(saturation(s));
            entry_ok = entry_ok && std::set<Vec>(hb.begin(), hb.end()) == irred;
            if (!entry_ok) ++bad;
        }
        return {bad == 0, "saturation and membership match brute force on " +
                              std::to_string(corpus.size()) + " semigroups, " +
                              std::to_string(bad) + " mismatches"};
    });

    criterion(6, [&]() -> std::pair<bool, std::string> {
        AffineSemigroup plane = make_semigroup(2, m({{0, 1}, {1, 0}}));
        MonomialIdeal max_ideal = make_monomial_ideal(plane, m({{0, 1}, {1, 0}}));
        ToricTriple t = blowup_affine(max_ideal, "c");
        bool ok = t.charts.size() == 2 && revalidates(t);
        std::set<Mat> cones, charts;
        for (const Chart& ch : t.charts) {
            cones.insert(ch.cone.rays);
            std::vector<Vec> mg = minimal_generators(ch.semigroup);
            charts.insert(Mat(mg.begin(), mg.end()));
        }
        ok = ok && cones == std::set<Mat>{m({{0, 1}, {1, 1}}), m({{1, 0}, {1, 1}})};
        ok = ok && charts == std::set<Mat>{m({{-1, 1}, {1, 0}}), m({{0, 1}, {1, -1}})};
        // gluing identity at the shared ray: both localizations agree
        ok = ok && t.charts.size() == 2 &&
             same_members(localize(t.charts[0].semigroup, m({{1, 1}})),
                          localize(t.charts[1].semigroup, m({{1, 1}})));
        return {ok, "origin blowup of the plane gives the standard two-chart subdivision"};
    });

    criterion(7, [&]() -> std::pair<bool, std::string> {
        CartierData cubic = gkz_triple(m({{0}, {2}, {3}}));
        bool ok = is_ample(cubic) && is_very_ample(cubic);
        ok = ok && global_sections(cubic) == m({{0}, {2}, {3}});

        // independent sections oracle: polytope box points kept iff every
        // chart accepts the shifted exponent
        std::vector<Vec> expected;
        for (const Vec& p : box_points(1, 0, 3)) {
            bool member = true;
            for (size_t i = 0; i < cubic.variety.charts.size(); ++i)
                if (!contains(cubic.variety.charts[i].semigroup, vec_sub(p, cubic.data[i])))
                    member = false;
            if (member) expected.push_back(p);
        }
        ok = ok && expected == m({{0}, {2}, {3}});

        CartierData square = gkz_triple(m({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
        ok = ok && square.variety.charts.size() == 4;
        for (const Chart& ch : square.variety.charts)
            ok = ok && is_free_semigroup(ch.semigroup);
        std::vector<Vec> sq_sections;
        for (const Vec& p : box_points(2, 0, 1)) {
            bool member = true;
            for (size_t i = 0; i < square.variety.charts.size(); ++i)
                if (!contains(square.variety.charts[i].semigroup, vec_sub(p, square.data[i])))
                    member = false;
            if (member) sq_sections.push_back(p);
        }
        ok = ok && global_sections(square).size() == 4 && sq_sections.size() == 4;
        return {ok, "twisted cubic model is very ample with sections {0,2,3}; the unit square "
                    "gives 4 free charts"};
    });

    criterion(8, [&]() -> std::pair<bool, std::string> {
        ToricTriple t = mirror_triple();
        bool strong = true;
        try {
            make_cartier(t, {{"u", v({0, 0})}, {"m", v({0, 2})}});
        } catch (const NotCartierError&) {
            strong = false;
        }
        bool fails = false, names_groups = false, weak = false;
        try {
            make_cartier(t, {{"u", v({0, 0})}, {"m", v({0, 1})}});
        } catch (const NotCartierError& e) {
            fails = true;
            std::string msg = e.what();
            names_groups = msg.find("Z{[0,2]}") != std::string::npos &&
                           msg.find("Z{[0,1]}") != std::string::npos;
        }
        try {
            make_cartier(normalization(t), {{"u", v({0, 0})}, {"m", v({0, 1})}});
            weak = true;
        } catch (const NotCartierError&) {
        }
        bool ok = strong && fails && names_groups && weak;
        return {ok, "mirror pair: (0,2) is locally trivial, (0,1) only after saturation, "
                    "diagnostic names both face groups"};
    });

    criterion(9, [&]() -> std::pair<bool, std::string> {
        ToricTriple t = umbrella_triple();
        const Cone& tau = find_fan_cone(t, m({{1, 0}}));
        LiftResult one = lifts_to_normalization(t, tau, m({{1}}), 1);
        LiftResult two = lifts_to_normalization(t, tau, m({{2}}), 1);
        bool ok = !one.lifts && two.lifts && two.extension == m({{1}});
        return {ok, "orbit map with value 1 on (0,2) does not extend to the saturation, "
                    "value 2 extends with value 1 on (0,1)"};
    });

    criterion(10, [&]() -> std::pair<bool, std::string> {
        auto t0 = Clock::now();
        bool ok = true;
        std::ostringstream counts;
        counts << "step counts";
        for (int n = 1; n <= 5; ++n) {
            Mat gens;
            for (int k = 0; k <= n; ++k) gens.push_back(v({1, k}));
            AffineSemigroup s = make_semigroup(2, gens);
            ok = ok && is_saturated(s);
            NashReport rep = nash_iterate(single_chart(s, "c"), 20, true);
            ok = ok && rep.terminated && rep.reason == "smooth";
            counts << " n=" << n << ":" << rep.steps.size();
        }
        double dt = secs(t0);
        ok = ok && dt < kChainBudget;
        return {ok, "normalized iteration smooths every cone over [0,n], n<=5; " +
                        counts.str() + " (" + fmt_secs(dt) + ")"};
    });

    criterion(11, [&]() -> std::pair<bool, std::string> {
        if (cli.empty()) return {false, "no command line binary path given"};
        mkdir("acc_examples", 0755);
        std::vector<std::string> cmds = {
            "--emit-examples --dir acc_examples",
            "validate acc_examples/umbrella.json",
            "nash acc_examples/umbrella.json --steps 10",
            "divisor acc_examples/mirror-umbrella.json --data "
            "'{\"m\":[0,1],\"u\":[0,0]}' --check cartier",
            "gkz --points '[[0],[2],[3]]'",
        };
        std::vector<std::string> prefixes = {"", "", "", "env OMP_NUM_THREADS=1 ",
                                             "env OMP_NUM_THREADS=2 ", "env OMP_NUM_THREADS=4 "};
        bool ok = true;
        int runs = 0;
        for (const std::string& cmd : cmds) {
            std::string base_out;
            int base_code = 0;
            for (size_t i = 0; i < prefixes.size(); ++i) {
                int code = 0;
                std::string full = prefixes[i] + "\"" + cli + "\" " + cmd + " 2>&1";
                std::string out = shell_capture(full, code);
                ++runs;
                if (i == 0) {
                    base_out = out;
                    base_code = code;
                    ok = ok && !out.empty();
                } else {
                    ok = ok && out == base_out && code == base_code;
                }
            }
        }
        return {ok, "reports byte-identical over " + std::to_string(runs) +
                        " runs across repeats and thread settings"};
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
