#include <doctest.h>

#include <random>

#include "kmstar/tuple.hpp"

using namespace kmstar;

namespace {

void gen_parts(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(maxp, n); k >= 1; --k) {
        cur.push_back(k);
        gen_parts(n - k, k, cur, out);
        cur.pop_back();
    }
}

// every monotone tuple of order n with at most pmax legs (legs may repeat,
// order of legs immaterial -> non-increasing sequences)
void for_each_tuple(int n, int pmax, const std::function<void(const Tuple&)>& fn) {
    std::vector<Partition> parts;
    Partition cur;
    gen_parts(n, n, cur, parts);
    Tuple t;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (!t.empty()) fn(t);
        if (static_cast<int>(t.size()) == pmax) return;
        for (size_t i = start; i < parts.size(); ++i) {
            t.push_back(parts[i]);
            self(self, i);
            t.pop_back();
        }
    };
    rec(rec, 0);
}

Tuple random_tuple(std::mt19937& rng, int max_ord = 12, int max_p = 5) {
    std::uniform_int_distribution<int> ordd(1, max_ord), pd(1, max_p);
    int n = ordd(rng), p = pd(rng);
    Tuple t;
    for (int j = 0; j < p; ++j) {
        Partition leg;
        int rest = n;
        while (rest > 0) {
            std::uniform_int_distribution<int> part(1, rest);
            int v = part(rng);
            leg.push_back(v);
            rest -= v;
        }
        std::sort(leg.begin(), leg.end(), std::greater<int>());
        t.push_back(leg);
    }
    return t;
}

}  // namespace

TEST_CASE("ord and idx on documented tuples") {
    CHECK(ord(parse_tuple("11,11,11,11")) == 2);
    CHECK(ord(parse_tuple("1")) == 1);
    CHECK(ord(parse_tuple("66,444,2222211")) == 12);
    CHECK(idx(parse_tuple("21,21,111,111")) == -2);
    CHECK(idx(parse_tuple("33,222,111111")) == 0);
    CHECK(idx(parse_tuple("44,2222,22211")) == -2);
    CHECK_THROWS_AS(ord(Tuple{{3, 2}, {2, 2, 1}, {1, 1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("normalization") {
    CHECK(normalize_monotone(parse_tuple("121,22,1111")) == parse_tuple("211,22,1111"));
    Tuple m = parse_tuple("211,22,1111");
    CHECK(normalize_monotone(m) == m);
    CHECK(normalize_monotone(parse_tuple("12,21")) == parse_tuple("21,21"));
    CHECK(normalize_ordered(parse_tuple("22,31,31,211")) == parse_tuple("31,31,22,211"));
    CHECK(normalize_ordered(parse_tuple("3331,541")) == parse_tuple("541,3331"));
    CHECK(normalize_ordered(Tuple{{5, 4, 1}}) == Tuple{{5, 4, 1}});
}

TEST_CASE("tuple comparison follows the documented ordering") {
    // aa431 > a99 > a981 as single-leg tuples
    Tuple a = parse_tuple("aa431"), b = parse_tuple("a99"), c = parse_tuple("a981");
    CHECK(tuple_less(b, a));
    CHECK(tuple_less(c, b));
    CHECK(tuple_less(parse_tuple("532,433"), parse_tuple("541,3331")));
}

TEST_CASE("divisibility") {
    CHECK(*is_divisible(parse_tuple("22,22,22,22")) == 2);
    CHECK(!is_divisible(parse_tuple("11,11,11,11")).has_value());
    CHECK(!is_divisible(parse_tuple("66,444,2222211")).has_value());
    CHECK(*is_divisible(parse_tuple("63,333,33111")) == 3);
}

TEST_CASE("string codec") {
    CHECK(parse_tuple("121,22,1111") == Tuple{{1, 2, 1}, {2, 2}, {1, 1, 1, 1}});
    CHECK(parse_tuple("121,22,1^4") == Tuple{{1, 2, 1}, {2, 2}, {1, 1, 1, 1}});
    CHECK(parse_tuple("bb9") == Tuple{{11, 11, 9}});
    CHECK(parse_tuple("(40)") == Tuple{{40}});
    CHECK(parse_tuple("3^22,2^4") == Tuple{{3, 3, 2}, {2, 2, 2, 2}});
    CHECK(format_tuple(Tuple{{3, 3}, {2, 2, 2}, {1, 1, 1, 1, 1, 1}}) == "33,222,111111");
    CHECK(format_tuple(Tuple{{11, 11, 9}}) == "bb9");
    CHECK(format_tuple(Tuple{{40}}) == "(40)");
    CHECK_THROWS_AS(parse_tuple("12,,3"), ParseError);
    CHECK_THROWS_AS(parse_tuple("1x2"), ParseError);
    CHECK_THROWS_AS(parse_tuple("(12"), ParseError);
}

TEST_CASE("codec round trip on random tuples") {
    std::mt19937 rng(7);
    for (int it = 0; it < 2000; ++it) {
        Tuple m = random_tuple(rng, 50, 4);
        CHECK(parse_tuple(format_tuple(m)) == m);
    }
}

TEST_CASE("list form") {
    auto lf = parse_list_form("[[1,2,1],[2,2],[1,1,1,1]]");
    CHECK(!lf.kac);
    CHECK(lf.legs == std::vector<std::vector<int>>{{1, 2, 1}, {2, 2}, {1, 1, 1, 1}});
    auto kf = parse_list_form("[4,[3,1],[2],[3,2,1]]");
    CHECK(kf.kac);
    CHECK(kf.head == 4);
    CHECK(kf.legs.size() == 3);
    CHECK(format_list(Tuple{{2, 1, 1}, {2, 2}}) == "[[2,1,1],[2,2]]");
}

TEST_CASE("idx scales quadratically and stays even") {
    std::mt19937 rng(11);
    for (int it = 0; it < 500; ++it) {
        Tuple m = random_tuple(rng, 10, 4);
        long long base = idx(m);
        CHECK(base % 2 == 0);
        for (int k = 2; k <= 4; ++k) {
            Tuple km = m;
            for (auto& leg : km)
                for (auto& x : leg) x *= k;
            CHECK(idx(km) == k * k * base);
        }
    }
}

TEST_CASE("s*n + ss identity, exhaustive to order 8") {
    for (int n = 1; n <= 8; ++n) {
        for_each_tuple(n, 5, [&](const Tuple& m) {
            CHECK(tuple_s(m) * n + tuple_ss(m) == -idx(m));
        });
    }
}

TEST_CASE("normalizations preserve ord, idx and multisets") {
    std::mt19937 rng(13);
    for (int it = 0; it < 500; ++it) {
        Tuple m = random_tuple(rng);
        Tuple mono = normalize_monotone(m), ord_ = normalize_ordered(mono);
        CHECK(normalize_monotone(mono) == mono);
        CHECK(normalize_ordered(ord_) == ord_);
        CHECK(ord(m) == ord(mono));
        CHECK(idx(m) == idx(ord_));
        for (size_t j = 0; j < m.size(); ++j) {
            Partition a = m[j], b = mono[j];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}
