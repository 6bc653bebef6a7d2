#pragma once

#include "toric/blowup.hpp"

#include <map>
#include <string>
#include <vector>

namespace toric {

// Ideal of sums of rank-many generators with nonzero wedge. Pointed charts
// use their minimal generators, charts with units their stored generator
// list; the generated ideal does not depend on the choice.
MonomialIdeal log_jacobian(const AffineSemigroup& s);

// One exponent list per chart, keyed by chart id, cross-checked to satisfy
// the blowup_sheaf compatibility condition. A failure there means a bug, not
// bad data, and raises InternalIncompatibilityError.
std::map<std::string, std::vector<Vec>> log_jacobian_sheaf(const ToricTriple& v);

ToricTriple nash_step(const ToricTriple& v);

// True iff blowing up the chart's jacobian ideal changes nothing: a single
// region of linearity and every exponent difference already in the chart.
// Cross-checked against is_free_semigroup; disagreement raises InternalError.
bool is_smooth_chart(const AffineSemigroup& s);

struct NashStepSummary {
    int chart_count = 0;
    std::vector<int> generator_counts;
    std::vector<bool> smooth_flags;
};

struct NashReport {
    std::vector<NashStepSummary> steps;
    bool terminated = false;
    std::string reason;
    ToricTriple result;
};

// Repeats nash_step (optionally followed by normalization) until every chart
// is smooth or max_steps is reached. A step limit is reported, not thrown.
NashReport nash_iterate(const ToricTriple& v, int max_steps = 20,
                        bool normalize_between = false);

} // namespace toric
