#include "kmstar/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kmstar {

Tuple reflect_leg(const Tuple& m, size_t leg, size_t nu) {
    Tuple r = m;
    if (leg == r.size()) r.push_back({ord(m)});  // fresh trivial leg
    if (leg > r.size() || nu < 1) throw std::out_of_range("reflect_leg");
    auto& l = r[leg];
    if (nu > l.size() + 1) throw std::out_of_range("reflect_leg");
    if (nu + 1 > l.size()) l.resize(nu + 1, 0);
    std::swap(l[nu - 1], l[nu]);
    while (!l.empty() && l.back() == 0) l.pop_back();
    return r;
}

namespace {

int part_at(const Partition& leg, int pos1) {
    // 1-based position; one past the end reads the implicit zero slot.
    if (pos1 < 1 || static_cast<size_t>(pos1) > leg.size() + 1) throw std::out_of_range("position");
    return static_cast<size_t>(pos1) <= leg.size() ? leg[pos1 - 1] : 0;
}

std::vector<int> padded_positions(const Tuple& m, const std::vector<int>& positions) {
    std::vector<int> pos(m.size(), 1);
    if (positions.size() > m.size()) throw std::invalid_argument("more positions than legs");
    for (size_t j = 0; j < positions.size(); ++j) pos[j] = positions[j];
    return pos;
}

}  // namespace

long long reduce_delta(const Tuple& m, const std::vector<int>& positions) {
    long long n = ord(m);
    auto pos = padded_positions(m, positions);
    long long d = -2 * n;
    for (size_t j = 0; j < m.size(); ++j) d += n - part_at(m[j], pos[j]);
    return d;
}

Tuple reduce_raw(const Tuple& m, const std::vector<int>& positions) {
    long long dec = -reduce_delta(m, positions);  // amount subtracted from each chosen part
    auto pos = padded_positions(m, positions);
    Tuple r = m;
    for (size_t j = 0; j < r.size(); ++j) {
        auto& leg = r[j];
        if (static_cast<size_t>(pos[j]) == leg.size() + 1) leg.push_back(0);
        long long v = leg[pos[j] - 1] - dec;
        if (v < 0) throw std::invalid_argument("step not applicable");
        leg[pos[j] - 1] = static_cast<int>(v);
    }
    return r;
}

Tuple reduce_step(const Tuple& m, const std::vector<int>& positions) {
    return strip_zeros(reduce_raw(m, positions));
}

namespace {

struct ReductionOutcome {
    bool realizable = false;
    Tuple endpoint;                 // legs in input positions, monotone
    std::vector<Tuple> chain;       // snapshots, input first
    int first_rod = 0;
    std::vector<int> first_positions;
};

Tuple drop_zero_parts(const Tuple& m) {
    Tuple r;
    for (const auto& leg : m) {
        Partition l;
        for (int x : leg)
            if (x != 0) l.push_back(x);
        r.push_back(std::move(l));
    }
    return r;
}

// Iterate greedy order-decreasing steps until the endpoint (fundamental
// tuple or the order-one tuple) or a negative multiplicity.
ReductionOutcome reduce_to_endpoint(const Tuple& input) {
    ReductionOutcome out;
    // Parts keep the caller's ordering here so the first step reports
    // positions against the input's own legs.
    Tuple work = drop_zero_parts(input);
    for (auto& leg : work)
        if (leg.empty()) return out;
    // First step works on the legs as given so the reported positions refer
    // to the caller's ordering; afterwards legs stay monotone.
    bool first = true;
    out.first_positions.assign(work.size(), 0);
    long long n = ord(work);
    Tuple snapshot = normalize_monotone(work);
    out.chain.push_back(snapshot);
    while (n > 1 && tuple_s(work) < 0) {
        std::vector<size_t> at(work.size());
        long long dec = 2 * n;
        for (size_t j = 0; j < work.size(); ++j) {
            at[j] = std::max_element(work[j].begin(), work[j].end()) - work[j].begin();
            dec -= n - work[j][at[j]];
        }
        if (first) {
            for (size_t j = 0; j < work.size(); ++j) out.first_positions[j] = static_cast<int>(at[j]);
        }
        for (size_t j = 0; j < work.size(); ++j) {
            if (work[j][at[j]] < dec) return out;  // negative multiplicity: not a root
            work[j][at[j]] -= static_cast<int>(dec);
        }
        n -= dec;
        if (n < 1) return out;
        work = strip_zeros(work);
        for (auto& leg : work)
            if (leg.empty()) return out;
        if (first) {
            out.first_rod = static_cast<int>(dec);
            first = false;
        }
        out.chain.push_back(work);
    }
    out.realizable = true;
    out.endpoint = work;
    return out;
}

bool tuple_well_formed(const Tuple& m) {
    if (m.empty()) return false;
    for (const auto& leg : m) {
        if (leg.empty()) return false;
        for (int x : leg)
            if (x < 0) return false;
    }
    return legs_equal_sums(m);
}

}  // namespace

Analysis analyze(const Tuple& m) {
    Analysis a;
    if (!tuple_well_formed(m)) {
        a.status = AnalysisStatus::Illegal;
        return a;
    }
    a.pts = static_cast<int>(m.size());
    a.ord = ord(m);
    a.index = idx(m);
    auto red = reduce_to_endpoint(m);
    bool divisible_null = a.index == 0 && is_divisible(strip_zeros(m)).has_value();
    if (!red.realizable || divisible_null) {
        a.status = AnalysisStatus::NotRealizable;
        return a;
    }
    a.rod = red.first_rod;
    a.redsp = red.first_positions;
    a.fundamental = red.endpoint;
    return a;
}

std::vector<Tuple> construct_chain(const Tuple& m) {
    Analysis a = analyze(m);
    if (a.status != AnalysisStatus::Ok) throw std::invalid_argument("not realizable");
    auto red = reduce_to_endpoint(m);
    std::vector<Tuple> chain(red.chain.rbegin(), red.chain.rend());
    return chain;
}

RootTrace construct_root_trace(const Tuple& m) {
    Analysis a = analyze(m);
    if (a.status != AnalysisStatus::Ok) throw std::invalid_argument("not realizable");

    Tuple work = normalize_monotone(strip_zeros(m));
    RootTrace out;
    out.given = work;
    size_t p = work.size();

    // Reduction word in simple reflections; zero parts are kept so node
    // positions stay aligned with the lattice coordinates.
    std::vector<std::pair<int, int>> word;  // (leg, pos); (0,0) = central node
    long long n = ord(work);
    while (n > 1 && tuple_s(strip_zeros(work)) < 0) {
        long long dec = 2 * n;
        for (auto& leg : work) dec -= n - leg[0];
        for (auto& leg : work) leg[0] -= static_cast<int>(dec);
        word.emplace_back(0, 0);
        n -= dec;
        for (size_t j = 0; j < p; ++j) {
            auto& leg = work[j];
            for (size_t pass = 0; pass + 1 < leg.size(); ++pass)
                for (size_t i = 0; i + 1 < leg.size(); ++i)
                    if (leg[i] < leg[i + 1]) {
                        std::swap(leg[i], leg[i + 1]);
                        word.emplace_back(static_cast<int>(j), static_cast<int>(i) + 1);
                    }
        }
    }
    out.base = strip_zeros(work);

    // Replay the reversed word from the base in lattice coordinates.
    RootVector v = tuple_to_root(out.base);
    v.legs.resize(p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto [leg, pos] = *it;
        long long pr;
        if (leg == 0 && pos == 0) {
            pr = 2 * v.n;
            for (const auto& l : v.legs) pr -= l.empty() ? 0 : l[0];
            v.n -= pr;
        } else {
            auto& l = v.legs[leg];
            if (l.size() < static_cast<size_t>(pos) + 1) l.resize(pos + 1, 0);
            long long prev = pos == 1 ? v.n : l[pos - 2];
            pr = 2 * l[pos - 1] - prev - l[pos];
            l[pos - 1] -= pr;
        }
        out.steps.push_back({-pr, leg, pos});
    }
    return out;
}

namespace {

// Ordered normal form with trivial legs dropped; the order-one tuple keeps
// one leg so it stays printable.
Tuple orbit_canonical(const Tuple& m) {
    Tuple t = strip_zeros(m);
    int n = ord(t);
    Tuple kept;
    for (auto& leg : t)
        if (!is_trivial_leg(leg, n)) kept.push_back(leg);
    if (kept.empty()) kept.push_back({n});
    return normalize_ordered(kept);
}

size_t max_leg_len(const Tuple& m) {
    size_t r = 0;
    for (const auto& leg : m) r = std::max(r, leg.size());
    return r;
}

}  // namespace

std::vector<Tuple> orbit_members(const Tuple& seed, const OrbitOptions& opt) {
    Tuple start = orbit_canonical(seed);
    int n0 = ord(start);
    std::set<Tuple> seen;
    std::vector<Tuple> queue;
    if (n0 <= opt.max_ord) {
        seen.insert(start);
        queue.push_back(start);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Tuple t = queue[qi];
        int n = ord(t);
        size_t p = t.size();
        // Slot choices per leg: one index per distinct part value, plus the
        // appended zero slot. Extra trivial legs enter through their zero slot.
        std::vector<std::vector<int>> slots(p);  // contribution n - value
        for (size_t j = 0; j < p; ++j) {
            for (size_t i = 0; i < t[j].size(); ++i)
                if (i == 0 || t[j][i] != t[j][i - 1]) slots[j].push_back(n - t[j][i]);
            slots[j].push_back(n);
        }
        int max_extra = opt.max_ord / n + 2;
        std::vector<size_t> pick(p, 0);
        for (;;) {
            long long base = -2LL * n;
            for (size_t j = 0; j < p; ++j) base += slots[j][pick[j]];
            for (int e = 0; e <= max_extra; ++e) {
                long long d = base + static_cast<long long>(e) * n;
                if (d < 1) continue;
                if (n + d > opt.max_ord) break;
                Tuple child = t;
                for (size_t j = 0; j < p; ++j) {
                    long long c = slots[j][pick[j]];
                    if (c == n) {
                        child[j].push_back(static_cast<int>(d));
                    } else {
                        int want = static_cast<int>(n - c);
                        for (auto& x : child[j])
                            if (x == want) {
                                x += static_cast<int>(d);
                                break;
                            }
                    }
                }
                for (int k = 0; k < e; ++k) child.push_back({n, static_cast<int>(d)});
                Tuple c = orbit_canonical(child);
                if (seen.insert(c).second) queue.push_back(c);
            }
            size_t j = 0;
            while (j < p && ++pick[j] == slots[j].size()) pick[j++] = 0;
            if (j == p) break;
        }
    }
    std::vector<Tuple> out;
    for (const auto& t : queue) {
        int n = ord(t);
        if (opt.eq_only && n != opt.max_ord) continue;
        int p = static_cast<int>(t.size());
        if (opt.parts_min && p < opt.parts_min) continue;
        if (opt.parts_max && p > opt.parts_max) continue;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const Tuple& x, const Tuple& y) {
        int nx = ord(x), ny = ord(y);
        if (nx != ny) return nx < ny;
        if (x.size() != y.size()) return x.size() < y.size();
        size_t lx = max_leg_len(x), ly = max_leg_len(y);
        if (lx != ly) return lx > ly;
        return tuple_less(x, y);
    });
    return out;
}

std::vector<Tuple> rigid_tuples(const OrbitOptions& opt) {
    auto out = orbit_members({{1}}, opt);
    std::sort(out.begin(), out.end(), [](const Tuple& x, const Tuple& y) {
        int nx = ord(x), ny = ord(y);
        if (nx != ny) return nx < ny;
        return tuple_less(x, y);
    });
    return out;
}

}  // namespace kmstar
