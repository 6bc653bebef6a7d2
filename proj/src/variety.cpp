#include "toric/variety.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace toric {

namespace {

bool cone_subset(const Cone& a, const Cone& b) {
    for (const Vec& r : a.rays)
        if (!cone_contains(b, r)) return false;
    return true;
}

bool orthogonal_to_cone(const std::vector<Vec>& rays, const Vec& v) {
    for (const Vec& r : rays)
        if (dot(r, v) != 0) return false;
    return true;
}

} // namespace

ToricTriple build_triple(int rank, const std::vector<ChartInput>& inputs) {
    if (rank < 0) throw MalformedDocumentError("rank must be nonnegative");
    if (inputs.empty()) throw MalformedDocumentError("at least one cone is required");
    {
        std::set<std::string> ids;
        for (const ChartInput& in : inputs)
            if (!ids.insert(in.id).second)
                throw MalformedDocumentError("duplicate cone id " + in.id);
    }
    std::vector<Chart> charts;
    charts.reserve(inputs.size());
    for (const ChartInput& in : inputs) {
        Chart ch;
        ch.id = in.id;
        ch.cone = cone_from_rays(rank, in.rays);
        if (!is_strictly_convex(ch.cone))
            throw FanAxiomError("cone " + in.id + " is not strictly convex");
        ch.semigroup = make_semigroup(rank, in.gens);
        if (!(ch.semigroup.cone == dual_cone(ch.cone)))
            throw SemigroupConeMismatchError("semigroup of cone " + in.id +
                                             " does not generate the dual cone");
        charts.push_back(std::move(ch));
    }
    std::sort(charts.begin(), charts.end(),
              [](const Chart& a, const Chart& b) { return cone_less(a.cone, b.cone); });
    for (size_t i = 0; i < charts.size(); ++i)
        for (size_t j = 0; j < charts.size(); ++j)
            if (i != j && cone_subset(charts[i].cone, charts[j].cone))
                throw FanAxiomError("cone " + charts[i].id + " is contained in cone " +
                                    charts[j].id);
    for (size_t i = 0; i < charts.size(); ++i)
        for (size_t j = i + 1; j < charts.size(); ++j) {
            Cone shared = intersect(charts[i].cone, charts[j].cone);
            if (!is_face_of(shared, charts[i].cone) || !is_face_of(shared, charts[j].cone))
                throw FanAxiomError("cones " + charts[i].id + " and " + charts[j].id +
                                    " do not meet in a common face");
        }
    // Localizations at a shared face must agree from both sides and equal the
    // sum of the two chart semigroups; agreement at the intersection face
    // propagates to its subfaces by transitivity of localization.
    for (size_t i = 0; i < charts.size(); ++i)
        for (size_t j = i + 1; j < charts.size(); ++j) {
            Cone shared = intersect(charts[i].cone, charts[j].cone);
            AffineSemigroup a = localize(charts[i].semigroup, shared.rays);
            AffineSemigroup b = localize(charts[j].semigroup, shared.rays);
            if (!same_members(a, b))
                throw GluingError("charts " + charts[i].id + " and " + charts[j].id +
                                  " induce different semigroups on their shared face " +
                                  cone_key(shared));
            std::vector<Vec> sum = charts[i].semigroup.gens;
            sum.insert(sum.end(), charts[j].semigroup.gens.begin(),
                       charts[j].semigroup.gens.end());
            if (!same_members(a, make_semigroup(rank, sum)))
                throw GluingError("shared face semigroup of charts " + charts[i].id +
                                  " and " + charts[j].id +
                                  " is not the sum of the chart semigroups");
        }
    ToricTriple v;
    v.rank = rank;
    v.charts = std::move(charts);
    std::vector<Cone> fan;
    for (const Chart& ch : v.charts) {
        std::vector<Cone> faces = all_faces(ch.cone);
        fan.insert(fan.end(), faces.begin(), faces.end());
    }
    std::sort(fan.begin(), fan.end(), cone_less);
    fan.erase(std::unique(fan.begin(), fan.end()), fan.end());
    v.fan = std::move(fan);
    return v;
}

const Chart& chart_above(const ToricTriple& v, const Cone& tau) {
    for (const Chart& ch : v.charts)
        if (is_face_of(tau, ch.cone)) return ch;
    throw UnknownConeError("cone " + cone_key(tau) + " is not a face of any chart");
}

const Cone& find_fan_cone(const ToricTriple& v, const std::vector<Vec>& rays) {
    Cone key = cone_from_rays(v.rank, rays);
    for (const Cone& c : v.fan)
        if (c == key) return c;
    throw UnknownConeError("no fan cone with rays " + cone_key(key));
}

AffineSemigroup face_semigroup(const ToricTriple& v, const Cone& tau) {
    return localize(chart_above(v, tau).semigroup, tau.rays);
}

std::vector<OrbitDescriptor> orbits(const ToricTriple& v) {
    std::vector<OrbitDescriptor> out;
    out.reserve(v.fan.size());
    for (const Cone& tau : v.fan) {
        const Chart& ch = chart_above(v, tau);
        FaceLattices fd = face_data(ch.semigroup, tau.rays);
        out.push_back({tau, fd.span, fd.sat, fd.index, fd.sat.rank()});
    }
    return out;
}

ToricTriple orbit_closure(const ToricTriple& v, const Cone& tau) {
    const Cone& t = find_fan_cone(v, tau.rays);
    FaceLattices fd = face_data(chart_above(v, t).semigroup, t.rays);
    int k = fd.span.rank();
    std::vector<ChartInput> inputs;
    for (const Chart& ch : v.charts) {
        if (!is_face_of(t, ch.cone)) continue;
        std::vector<Vec> gens;
        for (const Vec& g : ch.semigroup.gens) {
            if (!orthogonal_to_cone(t.rays, g)) continue;
            auto co = lattice_coords(fd.span, g);
            if (!co) throw InternalError("face generator outside the face span lattice");
            gens.push_back(*co);
        }
        Cone image = dual_cone(cone_from_rays(k, gens));
        inputs.push_back({ch.id, image.rays, std::move(gens)});
    }
    return build_triple(k, inputs);
}

ToricTriple normalization(const ToricTriple& v) {
    std::vector<ChartInput> inputs;
    inputs.reserve(v.charts.size());
    for (const Chart& ch : v.charts)
        inputs.push_back({ch.id, ch.cone.rays, saturation(ch.semigroup).gens});
    return build_triple(v.rank, inputs);
}

std::vector<Cone> smooth_locus(const ToricTriple& v) {
    std::vector<Cone> out;
    for (const Cone& tau : v.fan) {
        if (static_cast<int>(tau.rays.size()) != tau.cone_dim) continue;
        if (!is_saturated(lattice_span(v.rank, tau.rays))) continue;
        const Chart& ch = chart_above(v, tau);
        FaceLattices fd = face_data(ch.semigroup, tau.rays);
        if (!fd.index.finite || fd.index.value != 1) continue;
        if (!is_free_semigroup(localize(ch.semigroup, tau.rays))) continue;
        out.push_back(tau);
    }
    return out;
}

bool limit_exists(const ToricTriple& v, const Vec& dir) {
    for (const Chart& ch : v.charts)
        if (cone_contains(ch.cone, dir)) return true;
    return false;
}

ToricIdealData toric_ideal_lattice(const AffineSemigroup& s) {
    LinearMap m{static_cast<int>(s.gens.size()), s.dim, s.gens};
    ToricIdealData out;
    out.relations = kernel_lattice(m);
    size_t n = s.gens.size();
    for (const Vec& w : out.relations.basis) {
        Vec plus = zero_vec(static_cast<int>(n));
        Vec minus = zero_vec(static_cast<int>(n));
        for (size_t i = 0; i < n; ++i) {
            if (w[i] > 0) plus[i] = w[i];
            if (w[i] < 0) minus[i] = -w[i];
        }
        out.binomials.emplace_back(std::move(plus), std::move(minus));
    }
    return out;
}

FanMapCheck check_fan_map(const LinearMap& push, const ToricTriple& source,
                          const ToricTriple& target) {
    if (push.src != source.rank || push.dst != target.rank)
        throw MalformedDocumentError("pushforward shape does not match the two fans");
    LinearMap pull = push.transpose_map();
    FanMapCheck out;
    for (const Chart& sc : source.charts) {
        const Chart* found = nullptr;
        for (const Chart& tc : target.charts) {
            bool ok = true;
            for (const Vec& g : tc.semigroup.gens)
                if (!contains(sc.semigroup, pull.apply(g))) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = &tc;
                break;
            }
        }
        if (!found) {
            out.ok = false;
            out.failing = sc.id;
            return out;
        }
        out.assignment.emplace_back(sc.id, found->id);
    }
    return out;
}

LiftResult lifts_to_normalization(const ToricTriple& v, const Cone& tau,
                                  const Mat& images, int target_rank) {
    const Cone& t = find_fan_cone(v, tau.rays);
    FaceLattices fd = face_data(chart_above(v, t).semigroup, t.rays);
    int k = fd.span.rank();
    if (static_cast<int>(images.size()) != k)
        throw MalformedDocumentError("expected one image per basis vector of the face lattice");
    for (const Vec& row : images)
        if (static_cast<int>(row.size()) != target_rank)
            throw MalformedDocumentError("image width does not match the stated rank");
    Mat x;
    x.reserve(static_cast<size_t>(k));
    for (const Vec& b : fd.span.basis) {
        auto co = lattice_coords(fd.sat, b);
        if (!co) throw InternalError("face span does not sit inside its saturation");
        x.push_back(*co);
    }
    Mat xt = transpose(x);
    Mat y_cols;
    for (int j = 0; j < target_rank; ++j) {
        Vec col(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) col[static_cast<size_t>(i)] = images[static_cast<size_t>(i)][static_cast<size_t>(j)];
        auto sol = solve_left(xt, col);
        if (!sol) return {false, {}};
        y_cols.push_back(*sol);
    }
    LiftResult out;
    out.lifts = true;
    out.extension.assign(static_cast<size_t>(k), Vec(static_cast<size_t>(target_rank)));
    for (int j = 0; j < target_rank; ++j)
        for (int i = 0; i < k; ++i)
            out.extension[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                y_cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return out;
}

} // namespace toric
