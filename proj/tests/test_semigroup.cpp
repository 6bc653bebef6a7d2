#include "doctest.h"

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/semigroup.hpp"

#include <set>

using namespace toric;

namespace {

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

AffineSemigroup random_full_semigroup(oracle::Rng& rng, int dim, int ngens, long lo, long hi) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Mat gens = rng.mat(ngens, dim, lo, hi);
        try {
            return make_semigroup(dim, gens);
        } catch (const GroupNotFullError&) {
        }
    }
    throw std::runtime_error("could not draw a full-group semigroup");
}

// True membership restricted to the small box, via the breadth-first oracle
// run on a much larger box so that every decomposition can be reordered to
// stay inside it.
std::set<Vec> oracle_box3(const std::vector<Vec>& gens, long big, long small) {
    std::set<Vec> out;
    for (const Vec& p : oracle::members_in_box(gens, big)) {
        bool in = true;
        for (const Int& x : p)
            if (x > small || x < -small) { in = false; break; }
        if (in) out.insert(p);
    }
    return out;
}

} // namespace

TEST_CASE("generators are cleaned and must span the lattice") {
    AffineSemigroup s = make_semigroup(2, m({{1, 0}, {1, 0}, {0, 0}, {0, 1}}));
    CHECK(s.gens == m({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(make_semigroup(2, m({{2, 0}, {0, 1}})), GroupNotFullError);
    CHECK_THROWS_AS(make_semigroup(2, m({{1, 1}})), GroupNotFullError);
    CHECK_THROWS_AS(make_semigroup(2, m({{1, 1}, {1, -1}})), GroupNotFullError);
    CHECK_THROWS_AS(make_semigroup(1, m({{2}})), GroupNotFullError);
}

TEST_CASE("numerical semigroup of the cuspidal cubic") {
    AffineSemigroup s = make_semigroup(1, m({{2}, {3}}));
    CHECK(contains(s, v({0})));
    CHECK(!contains(s, v({1})));
    for (long k = 2; k <= 9; ++k) CHECK(contains(s, v({k})));
    CHECK(!contains(s, v({-2})));

    CHECK(minimal_generators(s) == m({{2}, {3}}));
    CHECK(!is_saturated(s));
    CHECK(saturation(s).gens == m({{1}}));
}

TEST_CASE("inverting the cusp at the origin face gives the full group") {
    AffineSemigroup s = make_semigroup(1, m({{2}, {3}}));
    CHECK(localization_shift(s, {}) == v({2}));
    AffineSemigroup loc = localize(s, {});
    CHECK(loc.gens == m({{-2}, {2}, {3}}));
    CHECK(contains(loc, v({1})));
    CHECK(contains(loc, v({-5})));
    CHECK(is_saturated(loc));

    // the top face inverts nothing
    CHECK(localization_shift(s, m({{1}})) == v({0}));
    CHECK(localize(s, m({{1}})) == s);
}

TEST_CASE("quadric cone chart is saturated") {
    AffineSemigroup s = make_semigroup(2, m({{0, 1}, {1, 0}, {2, -1}}));
    CHECK(contains(s, v({3, -1})));
    CHECK(contains(s, v({1, 1})));
    CHECK(!contains(s, v({1, -1})));
    CHECK(is_saturated(s));
    CHECK(minimal_generators(s) == m({{0, 1}, {1, 0}, {2, -1}}));
    CHECK(hilbert_basis(s.cone) == m({{0, 1}, {1, 0}, {2, -1}}));
}

TEST_CASE("pinch point chart membership") {
    AffineSemigroup s = make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}}));
    CHECK(contains(s, v({0, 2})));
    CHECK(contains(s, v({2, 1})));
    CHECK(contains(s, v({2, 3})));
    CHECK(!contains(s, v({0, 1})));
    CHECK(!contains(s, v({0, 3})));
    CHECK(contains(s, v({0, 4})));
    CHECK(minimal_generators(s) == m({{0, 2}, {1, 0}, {1, 1}}));
    CHECK(!is_saturated(s));
    CHECK(saturation(s).gens == m({{0, 1}, {1, 0}}));
}

TEST_CASE("pinch point face data detects the index two face") {
    AffineSemigroup s = make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}}));

    FaceLattices horizontal = face_data(s, m({{1, 0}}));
    CHECK(horizontal.span.basis == m({{0, 2}}));
    CHECK(horizontal.sat.basis == m({{0, 1}}));
    CHECK(horizontal.index.finite);
    CHECK(horizontal.index.value == 2);

    FaceLattices vertical = face_data(s, m({{0, 1}}));
    CHECK(vertical.span.basis == m({{1, 0}}));
    CHECK(vertical.sat.basis == m({{1, 0}}));
    CHECK(vertical.index.value == 1);

    FaceLattices origin = face_data(s, {});
    CHECK(origin.sat.rank() == 2);
    CHECK(origin.index.value == 1);
}

TEST_CASE("pinch point localized at the singular ray is not splittable") {
    AffineSemigroup s = make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}}));
    CHECK(localization_shift(s, m({{1, 0}})) == v({0, 2}));
    AffineSemigroup loc = localize(s, m({{1, 0}}));
    CHECK(loc.gens == m({{0, -2}, {0, 2}, {1, 0}, {1, 1}}));
    CHECK(contains(loc, v({0, -2})));
    CHECK(!contains(loc, v({0, -1})));
    CHECK(!contains(loc, v({0, 1})));
    CHECK(contains(loc, v({1, -7})));
    CHECK(!contains(loc, v({-1, 0})));
    CHECK(!is_saturated(loc));
    CHECK_THROWS_AS(split_lineality(loc), NotSplittableError);
    CHECK_THROWS_AS(minimal_generators(loc), NotPointedError);
}

TEST_CASE("pinch point localized at the smooth ray splits off a line") {
    AffineSemigroup s = make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}}));
    CHECK(localization_shift(s, m({{0, 1}})) == v({1, 0}));
    AffineSemigroup loc = localize(s, m({{0, 1}}));
    CHECK(loc.gens == m({{-1, 0}, {0, 2}, {1, 0}, {1, 1}}));
    CHECK(contains(loc, v({0, 1})));
    CHECK(contains(loc, v({-3, 5})));
    CHECK(!contains(loc, v({0, -1})));
    CHECK(is_saturated(loc));

    LinealitySplit split = split_lineality(loc);
    CHECK(split.unit_group.basis == m({{1, 0}}));
    CHECK(split.pointed.dim == 1);
    bool plus = split.pointed.gens == m({{1}, {2}});
    bool minus = split.pointed.gens == m({{-2}, {-1}});
    CHECK((plus || minus));
}

TEST_CASE("inverting the pinch point at the origin recovers the whole lattice") {
    AffineSemigroup s = make_semigroup(2, m({{0, 2}, {1, 0}, {1, 1}}));
    CHECK(localization_shift(s, {}) == v({1, 1}));
    AffineSemigroup loc = localize(s, {});
    CHECK(loc.gens == m({{-1, -1}, {0, 2}, {1, 0}, {1, 1}}));
    CHECK(contains(loc, v({0, 1})));
    CHECK(contains(loc, v({-5, 3})));
    CHECK(loc.pos_gens.empty());

    LinealitySplit split = split_lineality(loc);
    CHECK(split.unit_group.rank() == 2);
    CHECK(split.pointed.dim == 0);
    CHECK(split.pointed.gens.empty());
    CHECK(split.basis == identity_mat(2));
}

TEST_CASE("split of a pointed semigroup is trivial") {
    AffineSemigroup s = make_semigroup(2, m({{0, 1}, {1, 0}, {2, -1}}));
    LinealitySplit split = split_lineality(s);
    CHECK(split.unit_group.rank() == 0);
    CHECK(split.pointed == s);
    CHECK(split.basis == identity_mat(2));
}

TEST_CASE("half-line times line is saturated once the odd section appears") {
    AffineSemigroup loc = make_semigroup(2, m({{-1, 0}, {0, 2}, {1, 0}, {1, 1}}));
    AffineSemigroup sat = saturation(loc);
    CHECK(sat.gens == m({{-1, 0}, {0, 1}, {1, 0}}));
    CHECK(is_saturated(loc));
}

TEST_CASE("random membership agrees with breadth-first closure") {
    oracle::Rng rng(9901);
    for (int trial = 0; trial < 25; ++trial) {
        AffineSemigroup s =
            random_full_semigroup(rng, 2, static_cast<int>(rng.pick(2, 4)), -3, 3);
        auto members = oracle_box3(s.gens, 40, 3);
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                Vec p = v({x, y});
                CHECK(contains(s, p) == (members.count(p) > 0));
            }
    }
}

TEST_CASE("random membership in three dimensions") {
    oracle::Rng rng(9906);
    for (int trial = 0; trial < 6; ++trial) {
        AffineSemigroup s =
            random_full_semigroup(rng, 3, static_cast<int>(rng.pick(3, 5)), -2, 2);
        auto members = oracle_box3(s.gens, 30, 2);
        for (long x = -2; x <= 2; ++x)
            for (long y = -2; y <= 2; ++y)
                for (long z = -2; z <= 2; ++z) {
                    Vec p = v({x, y, z});
                    CHECK(contains(s, p) == (members.count(p) > 0));
                }
    }
}

TEST_CASE("random saturations fill the cone exactly") {
    oracle::Rng rng(9902);
    for (int trial = 0; trial < 12; ++trial) {
        AffineSemigroup s =
            random_full_semigroup(rng, 2, static_cast<int>(rng.pick(2, 4)), -3, 3);
        AffineSemigroup sat = saturation(s);
        CHECK(sat.cone == s.cone);
        auto sat_members = oracle_box3(sat.gens, 40, 3);
        auto cone_members = oracle::cone_points_in_box(s.cone.facets, 2, 3);
        CHECK(sat_members == cone_members);
        for (const Vec& g : s.gens) CHECK(contains(sat, g));
        CHECK(is_saturated(sat));
    }
}

TEST_CASE("random minimal generating sets generate the same semigroup minimally") {
    oracle::Rng rng(9904);
    int done = 0;
    while (done < 10) {
        AffineSemigroup s =
            random_full_semigroup(rng, 2, static_cast<int>(rng.pick(3, 5)), -3, 3);
        if (!is_strictly_convex(s.cone)) continue;
        ++done;
        std::vector<Vec> mg = minimal_generators(s);
        CHECK(!mg.empty());
        AffineSemigroup r = make_semigroup(2, mg);
        CHECK(oracle_box3(r.gens, 40, 3) == oracle_box3(s.gens, 40, 3));
        for (const Vec& g : mg) {
            std::vector<Vec> rest;
            for (const Vec& q : mg)
                if (q != g) rest.push_back(q);
            try {
                AffineSemigroup smaller = make_semigroup(2, rest);
                CHECK(!contains(smaller, g));
            } catch (const GroupNotFullError&) {
            }
        }
    }
}

TEST_CASE("random localizations invert exactly the chosen face") {
    oracle::Rng rng(9903);
    int done = 0;
    while (done < 8) {
        AffineSemigroup s =
            random_full_semigroup(rng, 2, static_cast<int>(rng.pick(2, 4)), -3, 3);
        if (!is_strictly_convex(s.cone) || s.cone.cone_dim != 2) continue;
        ++done;
        bool sat = is_saturated(s);
        Cone sigma = dual_cone(s.cone);
        for (const Cone& f : all_faces(sigma)) {
            FaceLattices fd = face_data(s, f.rays);
            CHECK(fd.index.finite);
            CHECK(fd.span.rank() == 2 - f.cone_dim);
            if (sat) CHECK(fd.index.value == 1);

            Vec shift = localization_shift(s, f.rays);
            AffineSemigroup loc = localize(s, f.rays);
            if (f.cone_dim == 2) {
                CHECK(is_zero(shift));
                CHECK(loc == s);
                continue;
            }
            CHECK(relint_contains(intersect_orthogonal(s.cone, f.rays), shift));
            for (long x = -3; x <= 3; ++x)
                for (long y = -3; y <= 3; ++y) {
                    Vec p = v({x, y});
                    bool in_loc = contains(loc, p);
                    bool witnessed = false;
                    for (long k = 0; k <= 60 && !witnessed; ++k)
                        witnessed = contains(s, vec_add(p, vec_scale(k, shift)));
                    CHECK(in_loc == witnessed);
                }
        }
    }
}

TEST_CASE("random lineality splits are product decompositions") {
    oracle::Rng rng(9905);
    int done = 0;
    while (done < 10) {
        AffineSemigroup s0 =
            random_full_semigroup(rng, 2, static_cast<int>(rng.pick(2, 3)), -3, 3);
        std::vector<Vec> gens = s0.gens;
        gens.push_back(vec_neg(gens[static_cast<size_t>(rng.pick(0, static_cast<long>(gens.size()) - 1))]));
        AffineSemigroup s = make_semigroup(2, gens);
        if (s.min_face.rank() == 0) continue;
        ++done;
        try {
            LinealitySplit split = split_lineality(s);
            CHECK(split.unit_group == s.min_face);
            Mat winv = inverse_unimodular(split.basis);
            int r = split.unit_group.rank();
            for (long x = -3; x <= 3; ++x)
                for (long y = -3; y <= 3; ++y) {
                    Vec p = v({x, y});
                    Vec coords = row_times_mat(p, winv);
                    Vec tail(coords.begin() + r, coords.end());
                    CHECK(contains(s, p) == contains(split.pointed, tail));
                }
        } catch (const NotSplittableError&) {
            CHECK(!(lattice_saturation(s.min_face) == s.min_face));
        }
    }
}
