#pragma once

#include <string>
#include <vector>

#include "kmstar/root_lattice.hpp"
#include "kmstar/tuple.hpp"

namespace kmstar {

enum class AnalysisStatus { Ok, Illegal, NotRealizable };

// The seven analysis fields: parts count, order, index of rigidity, the
// (placeholder) relation slot, order drop of one reduction, the chosen
// 0-based positions per leg, and the fundamental endpoint.
struct Analysis {
    AnalysisStatus status = AnalysisStatus::Ok;
    int pts = 0;
    int ord = 0;
    long long index = 0;
    int fuchs = 0;
    int rod = 0;
    std::vector<int> redsp;
    Tuple fundamental;
};

// Swap the parts at positions nu and nu+1 (1-based) of one leg; nu may point
// one past the leg end (swap with an implicit zero), and leg may equal the
// current leg count (append a fresh leg first).
Tuple reflect_leg(const Tuple& m, size_t leg, size_t nu);

// Order change of the reduction at the given 1-based positions:
// sum_j (n - m_{j,pos_j}) - 2n.
long long reduce_delta(const Tuple& m, const std::vector<int>& positions);

// Subtract 2n - sum_j (n - m_{j,pos_j}) from each chosen part. Positions are
// 1-based, one per leg (missing entries default to 1); position len+1 uses
// the implicit zero slot. Throws std::invalid_argument when a part would
// turn negative.
Tuple reduce_raw(const Tuple& m, const std::vector<int>& positions);

// reduce_raw followed by per-leg monotone sort and zero stripping.
Tuple reduce_step(const Tuple& m, const std::vector<int>& positions);

Analysis analyze(const Tuple& m);

// Reduction chain from the fundamental endpoint up to monotone(m); a
// fundamental tuple yields the one-element chain. Throws
// std::invalid_argument when m is not realizable.
std::vector<Tuple> construct_chain(const Tuple& m);

struct ReflectionRecord {
    long long c;  // coefficient increment at the node
    int leg;      // 0-based leg, with (0,0) standing for the central node
    int pos;      // 1-based node position on the leg
};

struct RootTrace {
    Tuple base;
    Tuple given;
    std::vector<ReflectionRecord> steps;
};

// Expression of m as a reflection word applied to the base spectral type.
RootTrace construct_root_trace(const Tuple& m);

struct OrbitOptions {
    int max_ord = 1;
    bool eq_only = false;
    int parts_min = 0;
    int parts_max = 0;  // 0 = unbounded
};

// Monotone representatives of the orbit of `seed` under the reflection
// group, restricted to orders <= max_ord (== with eq_only), deduplicated in
// ordered normal form with trivial legs stripped.
std::vector<Tuple> orbit_members(const Tuple& seed, const OrbitOptions& opt);

// Orbit of the trivial spectral type: all rigid tuples in the order range.
std::vector<Tuple> rigid_tuples(const OrbitOptions& opt);

}  // namespace kmstar
