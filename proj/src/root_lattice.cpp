#include "kmstar/root_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kmstar {

void RootVector::trim() {
    for (auto& leg : legs)
        while (!leg.empty() && leg.back() == 0) leg.pop_back();
    while (!legs.empty() && legs.back().empty()) legs.pop_back();
}

bool RootVector::operator==(const RootVector& o) const {
    RootVector a = *this, b = o;
    a.trim();
    b.trim();
    return a.n == b.n && a.legs == b.legs;
}

RootVector tuple_to_root(const Tuple& m) {
    RootVector a;
    a.n = ord(m);
    for (const auto& leg : m) {
        std::vector<long long> c;
        long long tail = 0;
        for (size_t k = leg.size(); k-- > 1;) {
            tail += leg[k];
            c.push_back(tail);
        }
        std::reverse(c.begin(), c.end());
        a.legs.push_back(std::move(c));
    }
    a.trim();
    return a;
}

Tuple root_to_tuple(const RootVector& a, size_t p_min) {
    Tuple m;
    for (const auto& leg : a.legs) {
        long long prev = a.n;
        Partition part;
        for (long long c : leg) {
            if (c > prev) throw std::invalid_argument("not a dominant-shaped vector");
            if (prev - c > 0) part.push_back(static_cast<int>(prev - c));
            prev = c;
        }
        if (prev < 0) throw std::invalid_argument("not a dominant-shaped vector");
        if (prev > 0) part.push_back(static_cast<int>(prev));
        m.push_back(std::move(part));
    }
    while (m.size() < p_min) m.push_back({static_cast<int>(a.n)});
    return m;
}

long long inner(const RootVector& a, const RootVector& b) {
    long long r = 2 * a.n * b.n;
    size_t p = std::max(a.legs.size(), b.legs.size());
    for (size_t j = 0; j < p; ++j) {
        static const std::vector<long long> none;
        const auto& x = j < a.legs.size() ? a.legs[j] : none;
        const auto& y = j < b.legs.size() ? b.legs[j] : none;
        auto at = [](const std::vector<long long>& v, size_t i) { return i < v.size() ? v[i] : 0; };
        size_t len = std::max(x.size(), y.size());
        if (len == 0) continue;
        r -= a.n * at(y, 0) + b.n * at(x, 0);
        for (size_t i = 0; i < len; ++i) {
            r += 2 * at(x, i) * at(y, i);
            r -= at(x, i) * at(y, i + 1) + at(x, i + 1) * at(y, i);
        }
    }
    return r;
}

bool is_zero(const RootVector& a) {
    if (a.n != 0) return false;
    for (const auto& leg : a.legs)
        for (long long c : leg)
            if (c != 0) return false;
    return true;
}

bool in_positive_cone(const RootVector& a) {
    if (a.n < 0) return false;
    for (const auto& leg : a.legs)
        for (long long c : leg)
            if (c < 0) return false;
    return true;
}

bool support_connected(const RootVector& a) {
    size_t touched = 0;
    for (const auto& leg : a.legs) {
        size_t first = leg.size(), last = 0;
        for (size_t i = 0; i < leg.size(); ++i)
            if (leg[i] != 0) {
                first = std::min(first, i);
                last = i;
            }
        if (first == leg.size()) continue;
        ++touched;
        for (size_t i = first; i <= last; ++i)
            if (leg[i] == 0) return false;
        if (a.n != 0 && first != 0) return false;   // leg run must reach the center
    }
    if (a.n == 0) return touched <= 1;              // center absent: one chain segment at most
    return true;
}

bool in_fundamental_region(const RootVector& a) {
    // 2c_i <= sum of neighbour coefficients at every node.
    long long center_nb = 0;
    for (const auto& leg : a.legs) center_nb += leg.empty() ? 0 : leg[0];
    if (2 * a.n > center_nb) return false;
    for (const auto& leg : a.legs) {
        for (size_t i = 0; i < leg.size(); ++i) {
            long long prev = i == 0 ? a.n : leg[i - 1];
            long long next = i + 1 < leg.size() ? leg[i + 1] : 0;
            if (2 * leg[i] > prev + next) return false;
        }
    }
    return true;
}

namespace {

bool is_simple_root(const RootVector& a) {
    long long total = std::abs(a.n), nonzero = a.n != 0;
    for (const auto& leg : a.legs)
        for (long long c : leg) {
            total += std::abs(c);
            nonzero += c != 0;
        }
    return total == 1 && nonzero == 1;
}

long long gcd_all(const RootVector& a) {
    long long g = std::abs(a.n);
    for (const auto& leg : a.legs)
        for (long long c : leg) g = std::gcd(g, c);
    return g;
}

// One step of the dominance walk: find a node with positive pairing and
// reflect there. Returns false when no such node exists.
bool reflect_down(RootVector& v) {
    long long center_nb = 0;
    for (const auto& leg : v.legs) center_nb += leg.empty() ? 0 : leg[0];
    if (2 * v.n - center_nb > 0) {
        v.n -= 2 * v.n - center_nb;
        return true;
    }
    for (auto& leg : v.legs) {
        for (size_t i = 0; i < leg.size(); ++i) {
            long long prev = i == 0 ? v.n : leg[i - 1];
            long long next = i + 1 < leg.size() ? leg[i + 1] : 0;
            long long pr = 2 * leg[i] - prev - next;
            if (pr > 0) {
                leg[i] -= pr;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

TupleClass classify_root(const RootVector& input) {
    if (is_zero(input)) throw std::invalid_argument("zero vector");
    RootVector a = input;
    a.trim();
    RootVector neg = a;
    neg.n = -neg.n;
    for (auto& leg : neg.legs)
        for (auto& c : leg) c = -c;
    if (!in_positive_cone(a)) {
        if (!in_positive_cone(neg)) return {RootKind::NotARoot, inner(a, a)};
        a = neg;
    }

    TupleClass out;
    out.index = inner(a, a);

    if (a.n == 0) {
        // Type-A territory: a single consecutive run of ones on one leg.
        bool ok = support_connected(a);
        for (const auto& leg : a.legs)
            for (long long c : leg)
                if (c != 0 && c != 1) ok = false;
        out.kind = ok ? RootKind::TypeA : RootKind::NotARoot;
        return out;
    }

    RootVector v = a;
    for (;;) {
        if (is_simple_root(v)) {
            out.kind = RootKind::RigidRealRoot;
            return out;
        }
        if (!reflect_down(v)) {
            if (support_connected(v) && in_positive_cone(v) && !is_zero(v)) {
                out.kind = gcd_all(a) > 1 ? RootKind::DivisibleImaginary : RootKind::IndivisibleImaginary;
            } else {
                out.kind = RootKind::NotARoot;
            }
            return out;
        }
        if (!in_positive_cone(v)) {
            out.kind = RootKind::NotARoot;
            return out;
        }
        v.trim();
    }
}

std::string format_kac(const RootVector& a) {
    std::string s = "[" + std::to_string(a.n);
    for (const auto& leg : a.legs) {
        s += ",[";
        for (size_t i = 0; i < leg.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(leg[i]);
        }
        s += ']';
    }
    return s + "]";
}

RootVector kac_from_list(const ListForm& lf) {
    RootVector a;
    a.n = lf.head;
    for (const auto& leg : lf.legs) a.legs.emplace_back(leg.begin(), leg.end());
    a.trim();
    return a;
}

}  // namespace kmstar
