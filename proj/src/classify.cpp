#include "kmstar/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kmstar/partition.hpp"

namespace kmstar {

namespace {

struct SearchCtx {
    long long aidx;   // absolute index, >= 2
    int D;
    int L;            // slot count = maximal leg count
    int parts_min;
    PruneFlags f;
    int T;                           // leading-part cap
    std::vector<Partition> np;       // np[i] = top partition of D by parts <= i
};

// Staged walk over ordered tuples in descending order, restricted to the
// leading-part class t0 (0 = whole range, starting at np[T]). Hits are
// appended in discovery order, i.e. descending.
void search_class(const SearchCtx& c, int t0, std::vector<Tuple>& hits) {
    const int D = c.D, L = c.L;
    const long long aidx = c.aidx;
    std::vector<Partition> V(L, c.np[t0 ? t0 : c.T]);
    const bool fs = c.f.three_point && (D > aidx + 2 || (L == 3 && D > aidx));

    for (;;) {
        if (t0 && V[0][0] != t0) break;

        if (fs) {
            // Only triples whose leading parts sum to the order can work here.
            if (3 * V[0][0] < D) break;
            if (V[0][0] + V[1][0] >= D) {
                int t = D - V[0][0] - 1;
                if (t > 0) V[1] = V[2] = c.np[t];
            }
            long long s3 = D - V[0][0] - V[1][0] - V[2][0];
            if (V[0][0] + 2 * V[1][0] < D || (V[1][0] == 1 && s3 != 0)) {
                if (V[0][0] == 1) break;
                V[0] = *next_partition(V[0]);
                V[1] = V[2] = V[0];
                continue;
            }
            if (s3 > 0 || V[2][0] + s3 < 1) {
                V[1] = *next_partition(V[1]);
                V[2] = V[1];
                continue;
            }
            if (s3 < 0) V[2] = c.np[V[2][0] + s3];
        }

        // Least slot count making the basic-condition sum non-negative.
        long long S = -2LL * D;
        int IL = 0;
        for (; IL < L; ++IL) {
            S += D - V[IL][0];
            if (S >= 0) break;
        }
        if (IL == L) {
            // Deficit even with every slot: shrink the deepest leading part
            // that can absorb it, deeper slots following along.
            int LL = L - 1;
            for (; LL >= 0; --LL) {
                long long k = V[LL][0];
                if (k + S > 0) {
                    V[LL] = c.np[k + S];
                    break;
                }
                S += k - 1;
            }
            if (LL < 0) break;
            for (int i = LL + 1; i < L; ++i) V[i] = V[LL];
            continue;
        }

        // Accumulated square defect; must stay within the index budget.
        long long SS = 0, SS0 = 0;
        int K = 0;
        for (; K <= IL; ++K) {
            SS0 = SS;
            int st = V[K][0];
            for (size_t i = 1; i < V[K].size(); ++i) SS += static_cast<long long>(st - V[K][i]) * V[K][i];
            if (SS > aidx) break;
        }
        if (c.f.ss_jump && K <= IL && V[K][0] != 1) {
            Partition w;
            if (c.f.ss_jump_dense) {
                if (auto nx = next_with_square_gain(V[K], SS - aidx)) {
                    w = std::move(*nx);
                } else {
                    // No partition with this leading part fits; drop to the
                    // largest leading part whose best case stays in budget.
                    int t = V[K][0] - 1;
                    for (; t > 1; --t) {
                        long long j = D % t;
                        if (SS0 + j * (t - j) <= aidx) break;
                    }
                    w = c.np[t];
                }
            } else {
                w = *next_partition(V[K]);
            }
            for (int i = K; i < L; ++i) V[i] = w;
            continue;
        }

        // Least slot count reaching the index target; overshoot means the
        // prefix cannot match.
        long long ix = 2LL * D * D + aidx, ixf = ix;
        int J = 0;
        for (; J < L; ++J) {
            ixf = ix;
            ix -= static_cast<long long>(D) * D;
            ix += sum_sq(V[J]);
            if (ix <= 0) break;
        }
        if (J < L && ix == 0 && J >= IL && J + 1 >= c.parts_min)
            hits.emplace_back(V.begin(), V.begin() + J + 1);

        // Advance: when even the densest choice at slot J overshoots, roll
        // the slot before it.
        if (ix < 0 && J < L && c.f.mincod_backtrack && ixf - min_codim(D, V[J][0]) < 0)
            --J;
        else if (J >= L)
            J = L - 1;
        int I = J;
        while (I >= 0 && V[I][0] == 1) --I;
        if (I < 0) break;
        V[I] = *next_partition(V[I]);
        for (int i = I + 1; i < L; ++i) V[i] = V[I];
    }
}

void classify_one_order(long long aidx, int D, const ClassifyOptions& opt, std::vector<Tuple>& out) {
    if (D < 2 || D > 3 * aidx + 6) return;
    auto parts_ok = [&](int p) {
        return (!opt.parts_min || p >= opt.parts_min) && (!opt.parts_max || p <= opt.parts_max);
    };

    if (aidx == 0) {
        Tuple r;
        if (D == 2 && parts_ok(4)) r = parse_tuple("11,11,11,11");
        if (parts_ok(3)) {
            if (D == 3) r = parse_tuple("111,111,111");
            if (D == 4) r = parse_tuple("22,1111,1111");
            if (D == 6) r = parse_tuple("33,222,111111");
        }
        if (!r.empty()) out.push_back(std::move(r));
        return;
    }

    int L = D > aidx + 2 ? 3 : static_cast<int>(aidx / 2 + 4);
    if (opt.parts_max) L = std::min<int>(L, opt.parts_max);
    if (L < 3) return;

    if (D > aidx + 2 && D == 3 * aidx + 6) {
        // The extremal order is attained by exactly one tuple.
        if (parts_ok(3)) {
            int m = D / 6;
            Tuple r = {{3 * m, 3 * m}, {2 * m, 2 * m, 2 * m}, {m, m, m, m, m, m - 1, 1}};
            out.push_back(std::move(r));
        }
        return;
    }

    SearchCtx c;
    c.aidx = aidx;
    c.D = D;
    c.L = L;
    c.parts_min = opt.parts_min;
    c.f = opt.prune;
    c.T = D - 1;
    if (opt.prune.first_part_bound) {
        for (int t = D - 1; t > 1; --t) {
            long long k = D % t;
            if ((t - k) * k <= aidx) {
                c.T = t;
                break;
            }
            c.T = t - 1;
        }
    }
    c.np.resize(c.T + 1);
    for (int i = 1; i <= c.T; ++i) c.np[i] = top_partition(D, i);

    std::vector<Tuple> found;
    if (opt.workers <= 1) {
        search_class(c, 0, found);
    } else {
        // Leading-part classes are independent subtrees; discovery order is
        // descending within each class and across classes.
        std::vector<std::vector<Tuple>> per(c.T + 1);
        std::atomic<int> next{1};
        auto body = [&] {
            for (;;) {
                int t = next.fetch_add(1);
                if (t > c.T) return;
                search_class(c, t, per[t]);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < opt.workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
        for (int t = c.T; t >= 1; --t)
            for (auto& m : per[t]) found.push_back(std::move(m));
    }
    out.insert(out.end(), found.rbegin(), found.rend());
}

}  // namespace

std::vector<Tuple> classify(long long idx_target, const ClassifyOptions& opt) {
    std::vector<Tuple> out;
    if (idx_target > 0 || idx_target % 2 != 0) return out;
    long long aidx = -idx_target;
    if (opt.ord != 0) {
        classify_one_order(aidx, opt.ord, opt, out);
    } else {
        for (int d = 2; d <= 3 * aidx + 6; ++d) classify_one_order(aidx, d, opt, out);
    }
    return out;
}

std::vector<Tuple> oracle_classify(long long idx_target, int ord_max, int parts_max) {
    if (ord_max > 12 || parts_max > 6) throw std::invalid_argument("oracle bounds exceeded");
    if (idx_target > 0 || idx_target % 2 != 0) return {};
    std::vector<Tuple> out;
    for (int d = 2; d <= ord_max; ++d) {
        std::vector<Partition> parts;
        for (Partition p = {d};;) {
            if (p.size() > 1) parts.push_back(p);  // non-trivial legs only
            auto nx = next_partition(p);
            if (!nx) break;
            p = *nx;
        }
        std::vector<Tuple> found;
        Tuple cur;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (cur.size() >= 3 && idx(cur) == idx_target && tuple_s(cur) >= 0 &&
                (idx_target != 0 || !is_divisible(cur)))
                found.push_back(cur);
            if (static_cast<int>(cur.size()) == parts_max) return;
            for (size_t i = start; i < parts.size(); ++i) {
                cur.push_back(parts[i]);
                self(self, i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        std::sort(found.begin(), found.end(), [](const Tuple& a, const Tuple& b) { return tuple_less(a, b); });
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

PruneFlags ablation_flags(const std::string& stage) {
    PruneFlags f;
    if (stage == "none" || stage.empty()) return f;
    if (stage == "first-part-bound" || stage == "1.5") {
        f.first_part_bound = false;
    } else if (stage == "three-point" || stage == "2.1") {
        f.three_point = false;
    } else if (stage == "ss-jump" || stage == "2.3.1") {
        f.ss_jump = false;
    } else if (stage == "ss-jump-linear" || stage == "2.3.1*") {
        f.ss_jump_dense = false;
    } else if (stage == "backtrack" || stage == "2.6.1") {
        f.mincod_backtrack = false;
    } else {
        throw std::invalid_argument("unknown ablation stage: " + stage);
    }
    return f;
}

BenchResult benchmark_ablation(long long idx_target, const std::string& stage) {
    ClassifyOptions opt;
    opt.prune = ablation_flags(stage);
    auto t0 = std::chrono::steady_clock::now();
    auto r = classify(idx_target, opt);
    auto t1 = std::chrono::steady_clock::now();
    return {r.size(), std::chrono::duration<double>(t1 - t0).count()};
}

}  // namespace kmstar
