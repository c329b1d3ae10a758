#include <doctest.h>

#include <algorithm>
#include <vector>

#include "kmstar/partition.hpp"

using namespace kmstar;

namespace {

// Reference generator, recursive and independent of the successor logic.
void gen_all(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(maxp, n); k >= 1; --k) {
        cur.push_back(k);
        gen_all(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n, int maxp = 0) {
    std::vector<Partition> out;
    Partition cur;
    gen_all(n, maxp ? maxp : n, cur, out);
    return out;
}

}  // namespace

TEST_CASE("successor walks the documented chain for n=5") {
    std::vector<Partition> chain = {{5}};
    while (auto nx = next_partition(chain.back())) chain.push_back(*nx);
    std::vector<Partition> expect = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(chain == expect);
}

TEST_CASE("successor edge cases") {
    CHECK(!next_partition({1}).has_value());
    CHECK(!next_partition({1, 1, 1}).has_value());
    CHECK(*next_partition({3, 3, 1}) == Partition{3, 2, 2});
    CHECK(*next_partition({2, 1, 1, 1}) == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("successor visits every partition in descending order") {
    for (int n : {6, 10}) {
        auto ref = all_partitions(n);
        std::vector<Partition> walk = {{n}};
        while (auto nx = next_partition(walk.back())) walk.push_back(*nx);
        CHECK(walk == ref);  // recursion already yields descending order
    }
    // partition counts: p(10) = 42, p(29) = 4565
    CHECK(all_partitions(10).size() == 42);
    Partition p = {29};
    size_t count = 1;
    while (auto nx = next_partition(p)) {
        p = *nx;
        ++count;
    }
    CHECK(count == 4565);
}

TEST_CASE("top partition") {
    CHECK(top_partition(5, 3) == Partition{3, 2});
    CHECK(top_partition(5, 5) == Partition{5});
    CHECK(top_partition(7, 3) == Partition{3, 3, 1});
    CHECK(top_partition(6, 2) == Partition{2, 2, 2});
}

TEST_CASE("codim values and parity") {
    CHECK(codim({2, 2}) == 8);
    CHECK(codim({7}) == 0);
    CHECK(codim({1, 1, 1, 1, 1, 1}) == 30);
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : all_partitions(n)) CHECK(codim(p) % 2 == 0);
}

TEST_CASE("min_codim equals the codim of the top partition") {
    CHECK(min_codim(5, 3) == 12);
    CHECK(min_codim(7, 7) == 0);
    CHECK(min_codim(6, 2) == 24);
    for (int n = 1; n <= 20; ++n)
        for (int t = 1; t <= n; ++t) CHECK(min_codim(n, t) == codim(top_partition(n, t)));
}

TEST_CASE("everything after the top partition has strictly larger codim") {
    for (int n = 2; n <= 20; ++n)
        for (int t = 1; t < n; ++t) {
            Partition p = top_partition(n, t);
            long long floor = min_codim(n, t);
            while (auto nx = next_partition(p)) {
                p = *nx;
                CHECK(codim(p) > floor);
            }
        }
}

TEST_CASE("next_with_square_gain against brute force") {
    CHECK(*next_with_square_gain({4, 1}, 0) == Partition{3, 2});
    CHECK(!next_with_square_gain({1, 1}, 2).has_value());
    CHECK(!next_with_square_gain({5, 1}, 10).has_value());  // no successor of 51 is square-richer by 10

    for (int n = 3; n <= 12; ++n) {
        auto all = all_partitions(n);
        for (size_t i = 0; i < all.size(); ++i) {
            for (long long gain : {1, 2, 3, 5, 8, 13, 40}) {
                // first successor with sum of squares >= current + gain
                std::optional<Partition> want;
                for (size_t j = i + 1; j < all.size(); ++j)
                    if (sum_sq(all[j]) >= sum_sq(all[i]) + gain) {
                        want = all[j];
                        break;
                    }
                auto got = next_with_square_gain(all[i], gain);
                CHECK(got == want);
            }
        }
    }
}
