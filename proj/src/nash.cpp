#include "toric/nash.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <utility>

namespace toric {

namespace {

void sums_of_independent(const std::vector<Vec>& gens, int need, size_t from,
                         std::vector<Vec>& picked, std::vector<Vec>& out) {
    if (need == 0) {
        if (wedge_nonzero(picked)) {
            Vec s = zero_vec(static_cast<int>(picked[0].size()));
            for (const Vec& p : picked) s = vec_add(s, p);
            out.push_back(std::move(s));
        }
        return;
    }
    for (size_t i = from; i + static_cast<size_t>(need) <= gens.size(); ++i) {
        picked.push_back(gens[i]);
        sums_of_independent(gens, need - 1, i + 1, picked, out);
        picked.pop_back();
    }
}

} // namespace

MonomialIdeal log_jacobian(const AffineSemigroup& s) {
    if (s.dim == 0) return make_monomial_ideal(s, {zero_vec(0)});
    std::vector<Vec> gens = s.lin_gens.empty() ? minimal_generators(s) : s.gens;
    std::vector<Vec> sums;
    std::vector<Vec> picked;
    sums_of_independent(gens, s.dim, 0, picked, sums);
    if (sums.empty())
        throw InternalError("generators of a full-group semigroup must contain a basis");
    return make_monomial_ideal(s, std::move(sums));
}

namespace {

NashStepSummary summarize(const ToricTriple& v) {
    NashStepSummary out;
    out.chart_count = static_cast<int>(v.charts.size());
    for (const Chart& ch : v.charts) {
        size_t n = ch.semigroup.lin_gens.empty() ? minimal_generators(ch.semigroup).size()
                                                 : ch.semigroup.gens.size();
        out.generator_counts.push_back(static_cast<int>(n));
        out.smooth_flags.push_back(is_smooth_chart(ch.semigroup));
    }
    return out;
}

} // namespace

std::map<std::string, std::vector<Vec>> log_jacobian_sheaf(const ToricTriple& v) {
    std::map<std::string, std::vector<Vec>> out;
    std::vector<MonomialIdeal> ideals;
    for (const Chart& ch : v.charts) {
        MonomialIdeal ideal = log_jacobian(ch.semigroup);
        out[ch.id] = ideal.exponents;
        ideals.push_back(std::move(ideal));
    }
    for (size_t i = 0; i < v.charts.size(); ++i)
        for (size_t j = i + 1; j < v.charts.size(); ++j) {
            Cone shared = intersect(v.charts[i].cone, v.charts[j].cone);
            AffineSemigroup face = localize(v.charts[i].semigroup, shared.rays);
            auto covered = [&](const Vec& e, const MonomialIdeal& other) {
                for (const Vec& f : other.exponents)
                    if (contains(face, vec_sub(e, f))) return true;
                return false;
            };
            for (const Vec& e : ideals[i].exponents)
                if (!covered(e, ideals[j]))
                    throw InternalIncompatibilityError(
                        "jacobian ideals of charts " + v.charts[i].id + " and " +
                        v.charts[j].id + " disagree on their shared face");
            for (const Vec& e : ideals[j].exponents)
                if (!covered(e, ideals[i]))
                    throw InternalIncompatibilityError(
                        "jacobian ideals of charts " + v.charts[i].id + " and " +
                        v.charts[j].id + " disagree on their shared face");
        }
    return out;
}

ToricTriple nash_step(const ToricTriple& v) {
    return blowup_sheaf(v, log_jacobian_sheaf(v));
}

bool is_smooth_chart(const AffineSemigroup& s) {
    MonomialIdeal j = log_jacobian(s);
    std::vector<ChartInput> inputs = blowup_chart_inputs(j, "t");
    bool identity = inputs.size() == 1 &&
                    cone_from_rays(s.dim, inputs[0].rays) == dual_cone(s.cone) &&
                    same_members(make_semigroup(s.dim, inputs[0].gens), s);
    if (identity != is_free_semigroup(s))
        throw InternalError("blowup and basis smoothness tests disagree");
    return identity;
}

NashReport nash_iterate(const ToricTriple& v, int max_steps, bool normalize_between) {
    if (max_steps < 0) throw MalformedDocumentError("step limit must be nonnegative");
    NashReport rep;
    ToricTriple cur = v;
    NashStepSummary state = summarize(cur);
    int done = 0;
    while (true) {
        bool all_smooth = std::all_of(state.smooth_flags.begin(), state.smooth_flags.end(),
                                      [](bool b) { return b; });
        if (all_smooth) {
            rep.terminated = true;
            rep.reason = "smooth";
            break;
        }
        if (done == max_steps) {
            rep.terminated = false;
            rep.reason = "step-limit";
            break;
        }
        cur = nash_step(cur);
        if (normalize_between) cur = normalization(cur);
        state = summarize(cur);
        rep.steps.push_back(state);
        ++done;
    }
    rep.result = std::move(cur);
    return rep;
}

} // namespace toric
