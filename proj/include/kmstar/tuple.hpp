#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmstar/partition.hpp"

namespace kmstar {

// A spectral type: a tuple of partitions of one common integer (its order).
// Legs are stored in the user's order; parts may temporarily contain zeros
// (the strip operation removes them).
using Tuple = std::vector<Partition>;

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t pos) : std::runtime_error(what), pos(pos) {}
};

// Common sum of the legs. Throws std::invalid_argument on unequal sums or an
// empty tuple ("illegal partitions").
int ord(const Tuple& m);

bool legs_equal_sums(const Tuple& m);

// 2 n^2 - sum of leg codimensions.
long long idx(const Tuple& m);

// sum_j (n - m_{j,1}) - 2n over monotone legs; >= 0 characterizes basic
// tuples among monotone indivisible ones.
long long tuple_s(const Tuple& m);

// sum_j sum_nu (m_{j,1} - m_{j,nu}) m_{j,nu}; with tuple_s satisfies
// s*n + ss = -idx on monotone tuples.
long long tuple_ss(const Tuple& m);

// Each leg sorted non-increasing; leg order untouched.
Tuple normalize_monotone(const Tuple& m);

// Legs sorted so lexicographically larger partitions come first (stable).
Tuple normalize_ordered(const Tuple& m);

// Remove zero parts and sort each leg non-increasing.
Tuple strip_zeros(const Tuple& m);

bool is_monotone(const Tuple& m);
bool is_trivial_leg(const Partition& leg, int n);

// Largest k > 1 dividing every part; nothing when indivisible.
std::optional<int> is_divisible(const Tuple& m);

// Descending lexicographic comparison of partitions (larger first part wins,
// then the next, ...; a proper prefix loses).
bool partition_less(const Partition& a, const Partition& b);
// Tuples compare leg by leg with partition_less.
bool tuple_less(const Tuple& a, const Tuple& b);

// --- string codec ---------------------------------------------------------
// Compact form: legs separated by ','; one character per part with a=10 ...
// z=35; "(40)" for larger parts; "m^k" repeats the preceding part. Pipe and
// paren input belongs to the irregular-spectrum codec.

Tuple parse_tuple(const std::string& s);
std::string format_part(int v);
std::string format_tuple(const Tuple& m);

// Bracketed list form. "[[1,2],[3,...]]" is a tuple of partitions;
// "[n,[...],...]" (integer head) is a root-coefficient vector handled by the
// root-lattice module.
struct ListForm {
    bool kac = false;
    long long head = 0;          // coefficient of the central node when kac
    std::vector<std::vector<int>> legs;
};
ListForm parse_list_form(const std::string& s);

std::string format_list(const Tuple& m);  // "[[2,1],[1,1,1]]"

}  // namespace kmstar
