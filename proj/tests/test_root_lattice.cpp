#include <doctest.h>

#include <functional>

#include "kmstar/root_lattice.hpp"
#include "kmstar/weyl.hpp"

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

RootVector center() {
    RootVector a;
    a.n = 1;
    return a;
}

}  // namespace

TEST_CASE("tuple to lattice coordinates") {
    RootVector a = tuple_to_root(parse_tuple("121,22,1111"));
    CHECK(a.n == 4);
    CHECK(a.legs == std::vector<std::vector<long long>>{{3, 1}, {2}, {3, 2, 1}});
    RootVector triv = tuple_to_root(parse_tuple("1,1,1"));
    CHECK(triv.n == 1);
    CHECK(triv.legs.empty());
    RootVector d = tuple_to_root(parse_tuple("21,21,21,21"));
    CHECK(d.n == 3);
    CHECK(d.legs == std::vector<std::vector<long long>>{{1}, {1}, {1}, {1}});
    CHECK(format_kac(a) == "[4,[3,1],[2],[3,2,1]]");
}

TEST_CASE("lattice coordinates back to tuples") {
    RootVector a;
    a.n = 4;
    a.legs = {{3, 1}, {2}, {3, 2, 1}};
    CHECK(root_to_tuple(a, 3) == Tuple{{1, 2, 1}, {2, 2}, {1, 1, 1, 1}});
    RootVector one;
    one.n = 1;
    CHECK(root_to_tuple(one, 3) == parse_tuple("1,1,1"));
    RootVector d4;
    d4.n = 2;
    d4.legs = {{1}, {1}, {1}, {1}};
    CHECK(root_to_tuple(d4, 4) == parse_tuple("11,11,11,11"));
    RootVector bad;
    bad.n = 2;
    bad.legs = {{3}};
    CHECK_THROWS_AS(root_to_tuple(bad, 1), std::invalid_argument);
}

TEST_CASE("bilinear form on simple roots") {
    RootVector a0 = center();
    CHECK(inner(a0, a0) == 2);
    RootVector a11;
    a11.legs = {{1}};
    CHECK(inner(a0, a11) == -1);
    RootVector a12;
    a12.legs = {{0, 1}};
    CHECK(inner(a11, a12) == -1);
    CHECK(inner(a12, a12) == 2);
    RootVector other_leg;
    other_leg.legs = {{}, {1}};
    CHECK(inner(a11, other_leg) == 0);
    CHECK(inner(tuple_to_root(parse_tuple("11,11,11,11")), tuple_to_root(parse_tuple("11,11,11,11"))) == 0);
}

TEST_CASE("norm equals index of rigidity, exhaustive to order 6") {
    for (int n = 1; n <= 6; ++n)
        for_each_tuple(n, 4, [&](const Tuple& m) {
            RootVector a = tuple_to_root(m);
            CHECK(inner(a, a) == idx(m));
            CHECK(root_to_tuple(a, m.size()) == m);
        });
}

TEST_CASE("fundamental-region test matches the tuple-side condition") {
    for (int n = 1; n <= 6; ++n)
        for_each_tuple(n, 4, [&](const Tuple& m) {
            RootVector a = tuple_to_root(m);
            bool root_side = in_fundamental_region(a) && support_connected(a);
            bool tuple_side = tuple_s(m) >= 0;  // monotone by construction
            CHECK(root_side == tuple_side);
        });
}

TEST_CASE("support connectivity") {
    CHECK(support_connected(center()));
    RootVector lone;
    lone.legs = {{0, 1}};
    CHECK(support_connected(lone));  // a single node is connected
    RootVector gap;
    gap.n = 1;
    gap.legs = {{0, 1}};
    CHECK(!support_connected(gap));  // the center and a detached node
    RootVector hole;
    hole.n = 1;
    hole.legs = {{1, 0, 1}};
    CHECK(!support_connected(hole));
}

TEST_CASE("classification of lattice vectors") {
    CHECK(classify_root(center()).kind == RootKind::RigidRealRoot);
    CHECK(classify_root(tuple_to_root(parse_tuple("21,21,21,21"))).kind == RootKind::RigidRealRoot);
    CHECK(classify_root(tuple_to_root(parse_tuple("31,31,31,22"))).kind == RootKind::NotARoot);
    CHECK(classify_root(tuple_to_root(parse_tuple("11,11,11,11"))).kind == RootKind::IndivisibleImaginary);
    CHECK(classify_root(tuple_to_root(parse_tuple("22,22,22,22"))).kind == RootKind::DivisibleImaginary);
    CHECK(classify_root(tuple_to_root(parse_tuple("21,21,111,111"))).kind == RootKind::IndivisibleImaginary);
    CHECK(classify_root(tuple_to_root(parse_tuple("43,322,1111111"))).kind == RootKind::IndivisibleImaginary);

    RootVector typea;
    typea.legs = {{0, 1, 1, 1}};
    CHECK(classify_root(typea).kind == RootKind::TypeA);
    CHECK(classify_root(typea).index == 2);
    RootVector nota;
    nota.legs = {{0, 2, 1}};
    CHECK(classify_root(nota).kind == RootKind::NotARoot);

    RootVector neg = tuple_to_root(parse_tuple("11,11,11,11"));
    neg.n = -neg.n;
    for (auto& leg : neg.legs)
        for (auto& c : leg) c = -c;
    CHECK(classify_root(neg).kind == RootKind::IndivisibleImaginary);

    RootVector zero;
    CHECK_THROWS_AS(classify_root(zero), std::invalid_argument);

    RootVector twice_center;
    twice_center.n = 2;
    CHECK(classify_root(twice_center).kind == RootKind::NotARoot);
}

TEST_CASE("positive roots generated by the reflection group satisfy the leg bound") {
    OrbitOptions opt;
    opt.max_ord = 8;
    for (const Tuple& m : rigid_tuples(opt)) {
        RootVector a = tuple_to_root(m);
        if (a.legs.empty()) continue;
        long long best = 0, sum = 0;
        for (const auto& leg : a.legs) {
            long long prev = a.n;
            for (long long c : leg) {
                CHECK(c <= prev);
                prev = c;
            }
            if (!leg.empty()) {
                sum += leg[0];
                best = std::max(best, leg[0]);
            }
        }
        CHECK(a.n <= sum - best);
    }
}
