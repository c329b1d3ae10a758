#include "kmstar/irregular.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kmstar {

bool refines_positionally(const std::vector<int>& fine, const std::vector<int>& coarse) {
    size_t i = 0;
    for (int c : coarse) {
        long long s = 0;
        while (s < c) {
            if (i >= fine.size()) return false;
            s += fine[i++];
        }
        if (s != c) return false;
    }
    return i == fine.size();
}

void validate_spectrum(const IrregularSpectrum& s) {
    if (s.points.empty()) throw std::invalid_argument("empty spectrum");
    long long n = -1;
    for (const auto& ch : s.points) {
        if (ch.levels.empty()) throw std::invalid_argument("empty chain");
        for (const auto& lv : ch.levels) {
            if (lv.empty()) throw std::invalid_argument("empty level");
            for (int x : lv)
                if (x < 1) throw std::invalid_argument("parts must be positive");
            long long t = std::accumulate(lv.begin(), lv.end(), 0LL);
            if (n < 0) n = t;
            if (t != n) throw std::invalid_argument("illegal partitions");
        }
        for (size_t i = 0; i + 1 < ch.levels.size(); ++i)
            if (!refines_positionally(ch.levels[i], ch.levels[i + 1]))
                throw std::invalid_argument("inconsistent refinement grouping");
    }
}

Tuple unfold(const IrregularSpectrum& s) {
    Tuple m;
    for (const auto& ch : s.points)
        for (const auto& lv : ch.levels) m.emplace_back(lv.begin(), lv.end());
    return m;
}

// --- enumeration -----------------------------------------------------------

namespace {

// Positional arrangements of `pool` into blocks matching `coarse` in order;
// each block is sorted non-increasing, block choices enumerated ascending.
void block_arrangements(const std::vector<int>& pool, const std::vector<int>& coarse,
                        std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> rest = pool;
    std::sort(rest.begin(), rest.end(), std::greater<int>());

    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == coarse.size()) {
            if (rest.empty()) out.push_back(blocks);
            return;
        }
        // enumerate non-increasing selections from `rest` summing to coarse[ci]
        std::vector<std::vector<int>> choices;
        std::vector<int> sel;
        auto pick = [&](auto&& me, size_t from, int remaining) -> void {
            if (remaining == 0) {
                choices.push_back(sel);
                return;
            }
            for (size_t i = from; i < rest.size(); ++i) {
                if (i > from && rest[i] == rest[i - 1]) continue;  // skip duplicate values at this depth
                if (rest[i] > remaining) continue;
                sel.push_back(rest[i]);
                int v = rest[i];
                std::vector<int> saved = rest;
                rest.erase(rest.begin() + i);
                // keep scanning after the removed slot's position
                me(me, i, remaining - v);
                rest = saved;
                sel.pop_back();
            }
        };
        pick(pick, 0, coarse[ci]);
        std::sort(choices.begin(), choices.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return partition_less(a, b); });
        choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
        for (const auto& c : choices) {
            // remove the chosen multiset from rest
            std::vector<int> saved = rest;
            for (int v : c) rest.erase(std::find(rest.begin(), rest.end(), v));
            blocks.push_back(c);
            self(self, ci + 1);
            blocks.pop_back();
            rest = saved;
        }
    };
    rec(rec, 0);
}

// All positional level stacks for the partition sequence fine...coarse.
void chain_arrangements(const std::vector<Partition>& seq, std::vector<Chain>& out) {
    size_t k = seq.size();
    Chain ch;
    ch.levels.assign(k, {});
    ch.levels[k - 1].assign(seq[k - 1].begin(), seq[k - 1].end());
    std::sort(ch.levels[k - 1].begin(), ch.levels[k - 1].end(), std::greater<int>());
    auto rec = [&](auto&& self, size_t lvl) -> void {
        if (lvl == 0 || k == 1) {
            out.push_back(ch);
            return;
        }
        std::vector<std::vector<std::vector<int>>> arrs;
        std::vector<int> pool(seq[lvl - 1].begin(), seq[lvl - 1].end());
        block_arrangements(pool, ch.levels[lvl], arrs);
        for (const auto& blocks : arrs) {
            ch.levels[lvl - 1].clear();
            for (const auto& b : blocks)
                ch.levels[lvl - 1].insert(ch.levels[lvl - 1].end(), b.begin(), b.end());
            self(self, lvl - 1);
        }
    };
    if (k == 1) {
        out.push_back(ch);
        return;
    }
    rec(rec, k - 1);
}

std::string canonical_key(const IrregularSpectrum& s) {
    std::string k;
    for (const auto& ch : s.points) {
        for (const auto& lv : ch.levels) {
            for (int x : lv) k += std::to_string(x) + ".";
            k += "|";
        }
        k += ";";
    }
    return k;
}

bool chain_display_less(const Chain& a, const Chain& b) {
    if (a.levels.size() != b.levels.size()) return a.levels.size() < b.levels.size();
    return a.levels < b.levels;
}

IrregularSpectrum display_sorted(IrregularSpectrum s) {
    std::sort(s.points.begin(), s.points.end(), chain_display_less);
    return s;
}

}  // namespace

std::vector<IrregularSpectrum> refinements(const Tuple& m) {
    Tuple legs = normalize_monotone(strip_zeros(m));
    ord(legs);  // validates equal sums
    std::sort(legs.begin(), legs.end(), partition_less);  // ascending

    // Chain partitions of a multiset of legs: the all-singleton pattern
    // first, then patterns whose first chain (containing leg 0) shrinks from
    // the full set down to pairs, the remainder handled recursively.
    auto patterns = [&](auto&& self, const std::vector<Partition>& pool)
        -> std::vector<std::vector<Chain>> {
        std::vector<std::vector<Chain>> out;
        std::vector<Chain> singles;
        for (const auto& leg : pool) {
            Chain c;
            c.levels.push_back({leg.begin(), leg.end()});
            singles.push_back(c);
        }
        out.push_back(singles);
        size_t n = pool.size();
        for (size_t size = n; size >= 2; --size) {
            // index subsets of `size` containing 0, ascending lexicographic
            std::vector<size_t> pickidx(size);
            pickidx[0] = 0;
            auto subsets = [&](auto&& me, size_t depth, size_t from) -> void {
                if (depth == size) {
                    std::vector<Partition> chosen, rest;
                    size_t pi = 0;
                    for (size_t i = 0; i < n; ++i) {
                        if (pi < size && pickidx[pi] == i) {
                            chosen.push_back(pool[i]);
                            ++pi;
                        } else {
                            rest.push_back(pool[i]);
                        }
                    }
                    // valid chain orders of `chosen` (fine -> coarse)
                    std::vector<Partition> perm = chosen;
                    std::sort(perm.begin(), perm.end());
                    std::set<std::vector<Partition>> seen_orders;
                    std::vector<std::vector<Chain>> rest_patterns;
                    bool rest_done = false;
                    do {
                        if (!seen_orders.insert(perm).second) continue;
                        std::vector<Chain> arrs;
                        chain_arrangements(perm, arrs);
                        if (arrs.empty()) continue;
                        if (!rest_done) {
                            rest_patterns = self(self, rest);
                            rest_done = true;
                        }
                        for (const auto& ch : arrs)
                            for (const auto& rp : rest_patterns) {
                                std::vector<Chain> pat;
                                pat.push_back(ch);
                                pat.insert(pat.end(), rp.begin(), rp.end());
                                out.push_back(pat);
                            }
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    return;
                }
                for (size_t i = from; i + (size - depth) <= n; ++i) {
                    pickidx[depth] = i;
                    me(me, depth + 1, i + 1);
                }
            };
            subsets(subsets, 1, 1);
        }
        return out;
    };

    std::vector<IrregularSpectrum> out;
    std::set<std::string> seen;
    for (auto& pat : patterns(patterns, legs)) {
        IrregularSpectrum s;
        s.points = pat;
        s = display_sorted(s);
        if (seen.insert(canonical_key(s)).second) out.push_back(std::move(s));
    }
    return out;
}

// --- rendering and parsing -------------------------------------------------

namespace {

std::string compact_level(const std::vector<int>& lv) {
    std::string s;
    for (int x : lv) s += format_part(x);
    return s;
}

// Nested groups of the level below each part of level `lvl`.
void paren_rec(const Chain& ch, size_t lvl, size_t from, size_t upto, std::string& out) {
    if (lvl == 0) {
        for (size_t i = from; i < upto; ++i) {
            if (i > from) out += ' ';
            out += format_part(ch.levels[0][i]);
        }
        return;
    }
    const auto& coarse = ch.levels[lvl];
    const auto& fine = ch.levels[lvl - 1];
    // block boundaries of `fine` against coarse[from..upto)
    size_t fi = 0;
    for (size_t c = 0; c < from; ++c) {
        long long s = 0;
        while (s < coarse[c]) s += fine[fi++];
    }
    for (size_t c = from; c < upto; ++c) {
        size_t f0 = fi;
        long long s = 0;
        while (s < coarse[c]) s += fine[fi++];
        if (c > from) out += ' ';
        out += '(';
        paren_rec(ch, lvl - 1, f0, fi, out);
        out += ')';
    }
}

}  // namespace

std::string render(const IrregularSpectrum& s, RefineStyle style) {
    std::string out;
    for (size_t p = 0; p < s.points.size(); ++p) {
        if (p) out += ',';
        const Chain& ch = s.points[p];
        if (style == RefineStyle::Pipe) {
            for (size_t l = 0; l < ch.levels.size(); ++l) {
                if (l) out += '|';
                out += compact_level(ch.levels[l]);
            }
        } else {
            if (ch.rank() == 0) {
                for (size_t i = 0; i < ch.levels[0].size(); ++i) {
                    if (i) out += ' ';
                    out += format_part(ch.levels[0][i]);
                }
            } else {
                paren_rec(ch, ch.levels.size() - 1, 0, ch.levels.back().size(), out);
            }
        }
    }
    return out;
}

namespace {

std::vector<int> parse_compact_level(const std::string& s, size_t& i, const std::string& stops) {
    std::vector<int> lv;
    while (i < s.size() && stops.find(s[i]) == std::string::npos) {
        char c = s[i];
        if (c == ' ') {
            ++i;
        } else if (c >= '1' && c <= '9') {
            lv.push_back(c - '0');
            ++i;
        } else if (c >= 'a' && c <= 'z') {
            lv.push_back(c - 'a' + 10);
            ++i;
        } else if (c == '(') {
            size_t j = s.find(')', i);
            if (j == std::string::npos) throw ParseError("unbalanced '('", i);
            int v = 0;
            for (size_t k = i + 1; k < j; ++k) {
                if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad number", k);
                v = v * 10 + (s[k] - '0');
            }
            lv.push_back(v);
            i = j + 1;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    return lv;
}

// Paren form of one point: returns the nested tree flattened into levels.
struct ParenNode {
    int value = 0;  // leaf
    std::vector<ParenNode> kids;
};

ParenNode parse_paren_group(const std::string& s, size_t& i);

std::vector<ParenNode> parse_paren_seq(const std::string& s, size_t& i) {
    std::vector<ParenNode> seq;
    while (i < s.size() && s[i] != ',' && s[i] != ')') {
        if (s[i] == ' ') {
            ++i;
        } else if (s[i] == '(') {
            seq.push_back(parse_paren_group(s, i));
        } else {
            char c = s[i];
            ParenNode leaf;
            if (c >= '1' && c <= '9')
                leaf.value = c - '0';
            else if (c >= 'a' && c <= 'z')
                leaf.value = c - 'a' + 10;
            else
                throw ParseError(std::string("unexpected character '") + c + "'", i);
            ++i;
            seq.push_back(leaf);
        }
    }
    return seq;
}

ParenNode parse_paren_group(const std::string& s, size_t& i) {
    ++i;  // consume '('
    ParenNode n;
    n.kids = parse_paren_seq(s, i);
    if (i >= s.size() || s[i] != ')') throw ParseError("unbalanced '('", i);
    ++i;
    return n;
}

int node_depth(const ParenNode& n) {
    if (n.kids.empty()) return 0;
    int d = node_depth(n.kids[0]);
    for (const auto& k : n.kids)
        if (node_depth(k) != d) throw std::invalid_argument("ragged refinement depth");
    return d + 1;
}

int node_sum(const ParenNode& n) {
    if (n.kids.empty()) return n.value;
    int s = 0;
    for (const auto& k : n.kids) s += node_sum(k);
    return s;
}

void collect_level(const std::vector<ParenNode>& seq, int depth, std::vector<int>& out) {
    for (const auto& n : seq) {
        if (depth == 0)
            out.push_back(node_sum(n));
        else
            collect_level(n.kids, depth - 1, out);
    }
}

Chain chain_from_paren(const std::vector<ParenNode>& seq) {
    if (seq.empty()) throw std::invalid_argument("empty point");
    int d = node_depth(seq[0]);
    for (const auto& n : seq)
        if (node_depth(n) != d) throw std::invalid_argument("ragged refinement depth");
    Chain ch;
    ch.levels.resize(d + 1);
    for (int lvl = d; lvl >= 0; --lvl) collect_level(seq, d - lvl, ch.levels[lvl]);
    return ch;
}

}  // namespace

IrregularSpectrum parse_spectrum(const std::string& text) {
    IrregularSpectrum s;
    bool paren = text.find('(') != std::string::npos && text.find('|') == std::string::npos &&
                 text.find(' ') != std::string::npos;
    // Parenthesised parts like "(40)" only appear inside levels; grouped
    // style is recognised by spaces between members.
    if (text.find('|') == std::string::npos &&
        (paren || text.find(' ') != std::string::npos)) {
        size_t i = 0;
        for (;;) {
            auto seq = parse_paren_seq(text, i);
            s.points.push_back(chain_from_paren(seq));
            if (i >= text.size()) break;
            if (text[i] != ',') throw ParseError("expected ','", i);
            ++i;
        }
    } else {
        size_t i = 0;
        for (;;) {
            Chain ch;
            for (;;) {
                ch.levels.push_back(parse_compact_level(text, i, ",|"));
                if (i < text.size() && text[i] == '|') {
                    ++i;
                    continue;
                }
                break;
            }
            s.points.push_back(ch);
            if (i >= text.size()) break;
            ++i;  // ','
        }
    }
    validate_spectrum(s);
    return s;
}

IrregularAnalysis analyze_irregular(const IrregularSpectrum& s) {
    IrregularAnalysis a;
    try {
        validate_spectrum(s);
    } catch (const std::invalid_argument&) {
        a.status = AnalysisStatus::Illegal;
        return a;
    }
    a.original = s;
    a.points = static_cast<int>(s.points.size());
    for (const auto& ch : s.points) a.poincare_ranks.push_back(ch.rank());
    Tuple unfolded = unfold(s);
    a.rank = ord(unfolded);
    a.index = idx(unfolded);

    Analysis plain = analyze(unfolded);
    if (plain.status != AnalysisStatus::Ok) {
        a.status = plain.status;
        return a;
    }

    int n = a.rank;
    if (n == 1 || tuple_s(unfolded) >= 0) {
        a.rod = 0;
        a.redsp.assign(s.points.size(), 0);
        a.reduced = s;
        return a;
    }

    // Choose, per chain, the finest position whose block path has the
    // largest total value; ties go to the leftmost.
    long long dec = 2 * n;
    std::vector<size_t> chosen(s.points.size());
    std::vector<std::vector<size_t>> path(s.points.size());  // block index per level
    for (size_t c = 0; c < s.points.size(); ++c) {
        const Chain& ch = s.points[c];
        long long best = -1;
        for (size_t i = 0; i < ch.levels[0].size(); ++i) {
            long long tot = 0;
            size_t pos = i;
            std::vector<size_t> pp;
            for (size_t l = 0; l < ch.levels.size(); ++l) {
                tot += ch.levels[l][pos];
                pp.push_back(pos);
                if (l + 1 < ch.levels.size()) {
                    // block of `pos` within the next level
                    size_t fi = 0, block = 0;
                    for (;; ++block) {
                        long long sum = 0;
                        while (sum < ch.levels[l + 1][block]) sum += ch.levels[l][fi++];
                        if (pos < fi) break;
                    }
                    pos = block;
                }
            }
            if (tot > best) {
                best = tot;
                chosen[c] = i;
                path[c] = pp;
            }
        }
        for (size_t l = 0; l < ch.levels.size(); ++l) dec -= n - ch.levels[l][path[c][l]];
    }

    if (dec <= 0) {  // no decreasing step
        a.rod = 0;
        a.redsp.assign(s.points.size(), 0);
        a.reduced = s;
        return a;
    }

    IrregularSpectrum red = s;
    for (size_t c = 0; c < s.points.size(); ++c) {
        auto& ch = red.points[c];
        for (size_t l = 0; l < ch.levels.size(); ++l) {
            int& v = ch.levels[l][path[c][l]];
            v -= static_cast<int>(dec);
            if (v < 0) {
                a.status = AnalysisStatus::NotRealizable;
                return a;
            }
        }
        for (auto& lv : ch.levels) lv.erase(std::remove(lv.begin(), lv.end(), 0), lv.end());
    }
    a.rod = static_cast<int>(dec);
    for (size_t c = 0; c < s.points.size(); ++c) a.redsp.push_back(static_cast<int>(chosen[c]));
    a.reduced = red;
    return a;
}

namespace {

void list_rec(const Chain& ch, size_t lvl, size_t from, size_t upto, std::string& out) {
    if (lvl == 0) {
        for (size_t i = from; i < upto; ++i) {
            if (i > from) out += ',';
            out += std::to_string(ch.levels[0][i]);
        }
        return;
    }
    const auto& coarse = ch.levels[lvl];
    const auto& fine = ch.levels[lvl - 1];
    size_t fi = 0;
    for (size_t c = 0; c < from; ++c) {
        long long s = 0;
        while (s < coarse[c]) s += fine[fi++];
    }
    for (size_t c = from; c < upto; ++c) {
        size_t f0 = fi;
        long long s = 0;
        while (s < coarse[c]) s += fine[fi++];
        if (c > from) out += ',';
        out += '[';
        out += std::to_string(coarse[c]);
        out += ",[";
        list_rec(ch, lvl - 1, f0, fi, out);
        out += "]]";
    }
}

}  // namespace

std::string format_spectrum_list(const IrregularSpectrum& s) {
    std::string out = "[";
    for (size_t p = 0; p < s.points.size(); ++p) {
        if (p) out += ',';
        const Chain& ch = s.points[p];
        out += '[';
        if (ch.rank() == 0) {
            for (size_t i = 0; i < ch.levels[0].size(); ++i) {
                if (i) out += ',';
                out += std::to_string(ch.levels[0][i]);
            }
        } else {
            list_rec(ch, ch.levels.size() - 1, 0, ch.levels.back().size(), out);
        }
        out += ']';
    }
    return out + "]";
}

}  // namespace kmstar
