#pragma once

#include <string>
#include <vector>

#include "kmstar/tuple.hpp"

namespace kmstar {

// Individually disengageable speedups of the fundamental-tuple search; every
// configuration returns the same set.
struct PruneFlags {
    bool first_part_bound = true;   // cap on the leading part from the SS budget
    bool three_point = true;        // leading-part sum condition for large orders
    bool ss_jump = true;            // early abort + skip once the SS budget is exceeded
    bool ss_jump_dense = true;      // skip via squared-sum gain; false = plain successor
    bool mincod_backtrack = true;   // roll the previous leg when no codimension fits
};

struct ClassifyOptions {
    int ord = 0;          // 0 = all orders (2 .. 3|idx|+6)
    int parts_min = 0;    // 0 = unbounded
    int parts_max = 0;
    PruneFlags prune;
    int workers = 1;      // leading-part classes searched concurrently
};

// All ordered monotone fundamental tuples with the given (non-positive,
// even) index of rigidity, sorted by ascending order then ascending tuple
// order; indivisibility is required only at index zero. An invalid index or
// an out-of-range order yields the empty list.
std::vector<Tuple> classify(long long idx_target, const ClassifyOptions& opt = {});

// Exhaustive reference enumeration with no pruning beyond the stated bounds.
// Guards against runaway budgets: ord_max <= 12, parts_max <= 6.
std::vector<Tuple> oracle_classify(long long idx_target, int ord_max, int parts_max);

struct BenchResult {
    size_t count = 0;
    double seconds = 0;
};

// Runs classify with one stage disabled. Stage names: "none",
// "first-part-bound", "three-point", "ss-jump", "ss-jump-linear",
// "backtrack" (numeric aliases "1.5", "2.1", "2.3.1", "2.3.1*", "2.6.1").
BenchResult benchmark_ablation(long long idx_target, const std::string& stage);

PruneFlags ablation_flags(const std::string& stage);  // throws on unknown stage

}  // namespace kmstar
