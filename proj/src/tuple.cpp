#include "kmstar/tuple.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kmstar {

bool legs_equal_sums(const Tuple& m) {
    if (m.empty()) return false;
    long long n = std::accumulate(m[0].begin(), m[0].end(), 0LL);
    for (const auto& leg : m)
        if (std::accumulate(leg.begin(), leg.end(), 0LL) != n) return false;
    return n >= 1;
}

int ord(const Tuple& m) {
    if (!legs_equal_sums(m)) throw std::invalid_argument("illegal partitions");
    return static_cast<int>(std::accumulate(m[0].begin(), m[0].end(), 0LL));
}

long long idx(const Tuple& m) {
    long long n = ord(m);
    long long r = 2 * n * n;
    for (const auto& leg : m) r -= n * n - sum_sq(leg);
    return r;
}

long long tuple_s(const Tuple& m) {
    long long n = ord(m);
    long long s = -2 * n;
    for (const auto& leg : m) s += n - (leg.empty() ? 0 : *std::max_element(leg.begin(), leg.end()));
    return s;
}

long long tuple_ss(const Tuple& m) {
    long long ss = 0;
    for (const auto& leg : m) {
        if (leg.empty()) continue;
        long long top = *std::max_element(leg.begin(), leg.end());
        for (int x : leg) ss += (top - x) * static_cast<long long>(x);
    }
    return ss;
}

Tuple normalize_monotone(const Tuple& m) {
    Tuple r = m;
    for (auto& leg : r) std::sort(leg.begin(), leg.end(), std::greater<int>());
    return r;
}

bool partition_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool tuple_less(const Tuple& a, const Tuple& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Partition& x, const Partition& y) { return partition_less(x, y); });
}

Tuple normalize_ordered(const Tuple& m) {
    Tuple r = m;
    std::stable_sort(r.begin(), r.end(), [](const Partition& a, const Partition& b) { return partition_less(b, a); });
    return r;
}

Tuple strip_zeros(const Tuple& m) {
    Tuple r;
    for (const auto& leg : m) {
        Partition l;
        for (int x : leg)
            if (x != 0) l.push_back(x);
        std::sort(l.begin(), l.end(), std::greater<int>());
        r.push_back(std::move(l));
    }
    return r;
}

bool is_monotone(const Tuple& m) {
    for (const auto& leg : m)
        if (!std::is_sorted(leg.begin(), leg.end(), std::greater<int>())) return false;
    return true;
}

bool is_trivial_leg(const Partition& leg, int n) {
    return leg.size() == 1 && leg[0] == n;
}

std::optional<int> is_divisible(const Tuple& m) {
    int g = 0;
    for (const auto& leg : m)
        for (int x : leg) g = std::gcd(g, x);
    if (g > 1) return g;
    return std::nullopt;
}

// --- string codec ---------------------------------------------------------

Tuple parse_tuple(const std::string& s) {
    Tuple out;
    Partition leg;
    size_t i = 0;
    auto finish_leg = [&](size_t at) {
        if (leg.empty()) throw ParseError("empty leg", at);
        out.push_back(leg);
        leg.clear();
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == ',') {
            finish_leg(i);
            ++i;
        } else if (c >= '1' && c <= '9') {
            leg.push_back(c - '0');
            ++i;
        } else if (c >= 'a' && c <= 'z') {
            leg.push_back(c - 'a' + 10);
            ++i;
        } else if (c == '(') {
            size_t j = s.find(')', i);
            if (j == std::string::npos) throw ParseError("unbalanced '('", i);
            int v = 0;
            for (size_t k = i + 1; k < j; ++k) {
                if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad number", k);
                v = v * 10 + (s[k] - '0');
            }
            if (v < 1) throw ParseError("part must be positive", i);
            leg.push_back(v);
            i = j + 1;
        } else if (c == '^') {
            if (leg.empty()) throw ParseError("'^' with no preceding part", i);
            size_t j = i + 1;
            int k = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) k = k * 10 + (s[j++] - '0');
            if (j == i + 1 || k < 1) throw ParseError("bad exponent", i);
            int v = leg.back();
            for (int t = 1; t < k; ++t) leg.push_back(v);
            i = j;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    finish_leg(s.size());
    return out;
}

std::string format_part(int v) {
    if (v >= 1 && v <= 9) return std::string(1, static_cast<char>('0' + v));
    if (v >= 10 && v <= 35) return std::string(1, static_cast<char>('a' + v - 10));
    return "(" + std::to_string(v) + ")";
}

std::string format_tuple(const Tuple& m) {
    std::string s;
    for (size_t j = 0; j < m.size(); ++j) {
        if (j) s += ',';
        for (int x : m[j]) s += format_part(x);
    }
    return s;
}

ListForm parse_list_form(const std::string& s) {
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= s.size() || s[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto number = [&]() -> long long {
        skip();
        bool neg = i < s.size() && s[i] == '-';
        if (neg) ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected number", i);
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    };
    auto int_list = [&]() -> std::vector<int> {
        std::vector<int> v;
        expect('[');
        skip();
        if (i < s.size() && s[i] == ']') { ++i; return v; }
        for (;;) {
            v.push_back(static_cast<int>(number()));
            skip();
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            expect(']');
            return v;
        }
    };

    ListForm out;
    expect('[');
    skip();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        out.kac = true;
        out.head = number();
    } else {
        out.legs.push_back(int_list());
    }
    for (;;) {
        skip();
        if (i < s.size() && s[i] == ',') {
            ++i;
            out.legs.push_back(int_list());
            continue;
        }
        expect(']');
        break;
    }
    skip();
    if (i != s.size()) throw ParseError("trailing input", i);
    return out;
}

std::string format_list(const Tuple& m) {
    std::string s = "[";
    for (size_t j = 0; j < m.size(); ++j) {
        if (j) s += ',';
        s += '[';
        for (size_t k = 0; k < m[j].size(); ++k) {
            if (k) s += ',';
            s += std::to_string(m[j][k]);
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace kmstar
