#pragma once

#include <optional>
#include <vector>

namespace kmstar {

// A partition is a non-increasing sequence of positive integers.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);

// Successor in descending lexicographic order among partitions of the same
// sum; nothing once the all-ones partition is reached.
std::optional<Partition> next_partition(const Partition& p);

// Greatest partition of n (descending lex) with all parts <= max_part:
// [max_part,...,max_part,r] with 0 < r <= max_part.
Partition top_partition(int n, int max_part);

long long sum_sq(const Partition& p);

// codim p = n^2 - sum of squared parts; even, zero iff p == [n].
long long codim(const Partition& p);

// codim of top_partition(n, max_part); the minimum codimension among
// partitions of n with parts <= max_part.
long long min_codim(int n, int max_part);

// First partition after p (descending lex) whose squared-part sum is at
// least sum_sq(p) + gain; nothing if no such partition exists.
// A gain <= 0 degenerates to next_partition.
std::optional<Partition> next_with_square_gain(const Partition& p, long long gain);

}  // namespace kmstar
