#pragma once

#include <string>
#include <vector>

#include "kmstar/tuple.hpp"

namespace kmstar {

// Coefficient vector of a lattice element on the star diagram: one central
// node plus one chain of nodes per leg. Trailing zero coefficients are
// trimmed; absent legs are implicit zeros.
struct RootVector {
    long long n = 0;                            // central coefficient
    std::vector<std::vector<long long>> legs;   // legs[j][v-1] = coefficient at node (j, v)

    void trim();
    bool operator==(const RootVector& o) const;
};

enum class RootKind {
    RigidRealRoot,
    IndivisibleImaginary,
    DivisibleImaginary,
    TypeA,       // support misses the central node
    NotARoot,
};

struct TupleClass {
    RootKind kind = RootKind::NotARoot;
    long long index = 0;
};

// n_{j,k} = m_{j,k+1} + ... (partial sums below the top part).
RootVector tuple_to_root(const Tuple& m);

// Inverse map; pads with trivial legs up to p_min. Throws
// std::invalid_argument unless n >= n_{j,1} >= n_{j,2} >= ...
Tuple root_to_tuple(const RootVector& a, size_t p_min);

// The symmetric bilinear form: 2 on the diagonal of simple roots, -1 between
// diagram neighbours, 0 otherwise, extended bilinearly.
long long inner(const RootVector& a, const RootVector& b);

bool is_zero(const RootVector& a);
bool in_positive_cone(const RootVector& a);
bool support_connected(const RootVector& a);

// Coefficientwise convexity along chains plus the center inequality; the
// orbit representative test for positive imaginary roots.
bool in_fundamental_region(const RootVector& a);

// Full classification of a nonzero element of +/- the positive cone.
TupleClass classify_root(const RootVector& a);

std::string format_kac(const RootVector& a);  // "[4,[3,1],[2],[3,2,1]]"
RootVector kac_from_list(const ListForm& lf);

}  // namespace kmstar
