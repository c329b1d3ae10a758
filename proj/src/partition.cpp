#include "kmstar/partition.hpp"

#include <numeric>

namespace kmstar {

bool is_valid_partition(const Partition& p) {
    if (p.empty()) return false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition top_partition(int n, int max_part) {
    Partition r(n / max_part, max_part);
    if (int rem = n % max_part) r.push_back(rem);
    return r;
}

std::optional<Partition> next_partition(const Partition& p) {
    if (p.empty() || p.front() <= 1) return std::nullopt;
    // Take the last part k exceeding 1 together with the trailing ones;
    // redistribute their total as the top partition by parts <= k-1.
    size_t i = p.size();
    while (p[i - 1] == 1) --i;
    int k = p[i - 1];
    int total = k + static_cast<int>(p.size() - i);
    Partition r(p.begin(), p.begin() + (i - 1));
    Partition tail = top_partition(total, k - 1);
    r.insert(r.end(), tail.begin(), tail.end());
    return r;
}

long long sum_sq(const Partition& p) {
    long long s = 0;
    for (int x : p) s += static_cast<long long>(x) * x;
    return s;
}

long long codim(const Partition& p) {
    long long n = std::accumulate(p.begin(), p.end(), 0LL);
    return n * n - sum_sq(p);
}

long long min_codim(int n, int max_part) {
    long long k = n % max_part;
    return static_cast<long long>(n) * n - static_cast<long long>(max_part) * (n - k) - k * k;
}

std::optional<Partition> next_with_square_gain(const Partition& p, long long gain) {
    if (gain <= 0) return next_partition(p);
    // Scan suffixes from the tail: replacing the suffix of total t and head
    // part w by the top partition with parts <= w-1 maximizes the suffix
    // squared sum at t^2 - min_codim(t, w-1).
    long long t = 0, s = 0;
    for (size_t i = p.size(); i-- > 0;) {
        int w = p[i];
        t += w;
        s += static_cast<long long>(w) * w;
        if (w > 2 && t * t - min_codim(static_cast<int>(t), w - 1) >= s + gain) {
            Partition r(p.begin(), p.begin() + i);
            Partition tail = top_partition(static_cast<int>(t), w - 1);
            r.insert(r.end(), tail.begin(), tail.end());
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace kmstar
