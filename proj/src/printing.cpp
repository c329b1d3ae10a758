#include "kmstar/printing.hpp"

#include <algorithm>

namespace kmstar {

std::string format_analysis(const Analysis& a) {
    std::string s = "[" + std::to_string(a.pts) + "," + std::to_string(a.ord) + "," +
                    std::to_string(a.index) + "," + std::to_string(a.fuchs) + "," + std::to_string(a.rod) + ",[ ";
    for (int p : a.redsp) s += std::to_string(p) + " ";
    s += "],";
    s += format_list(a.fundamental);
    return s + "]";
}

std::string format_chain_list(const std::vector<Tuple>& chain) {
    std::string s = "[";
    for (size_t i = 0; i < chain.size(); ++i) {
        if (i) s += ',';
        s += format_list(chain[i]);
    }
    return s + "]";
}

std::string format_root_trace(const RootTrace& t) {
    std::string s = "[" + format_list(t.base) + "," + format_list(t.given) + ",[";
    for (size_t i = 0; i < t.steps.size(); ++i) {
        if (i) s += ',';
        s += "[" + std::to_string(t.steps[i].c) + "," + std::to_string(t.steps[i].leg) + "," +
             std::to_string(t.steps[i].pos) + "]";
    }
    return s + "]]";
}

std::string format_tuple_vector_strings(const std::vector<Tuple>& v) {
    std::string s = "[ ";
    for (const auto& m : v) s += format_tuple(m) + " ";
    return s + "]";
}

std::string format_tuple_vector_lists(const std::vector<Tuple>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_list(v[i]);
    }
    return s + "]";
}

std::string format_irregular_analysis(const IrregularAnalysis& a) {
    auto int_list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    std::string s = "[" + std::to_string(a.points) + "," + int_list(a.poincare_ranks) + "," +
                    std::to_string(a.rank) + "," + std::to_string(a.index) + "," + std::to_string(a.rod) + "," +
                    int_list(a.redsp) + ",";
    s += render(a.original, RefineStyle::Pipe) + ",";
    s += format_spectrum_list(a.original) + ",";
    s += render(a.reduced, RefineStyle::Pipe) + ",";
    s += format_spectrum_list(a.reduced);
    return s + "]";
}

std::string format_irregular_show(const IrregularAnalysis& a) {
    auto int_list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    std::string s;
    s += render(a.original, RefineStyle::Pipe) + "   " + render(a.original, RefineStyle::Paren) + "\n";
    s += "points:    " + std::to_string(a.points) + "  with Poincare ranks  " + int_list(a.poincare_ranks) + "\n";
    s += "rank:      " + std::to_string(a.rank) + "\n";
    s += "index:     " + std::to_string(a.index) + "\n";
    s += "reduct:    " + std::to_string(a.rod) + " at " + int_list(a.redsp) + " -> " +
         render(a.reduced, RefineStyle::Pipe) + "   " + render(a.reduced, RefineStyle::Paren) + "\n";
    return s;
}

Tuple display_tuple(const Tuple& m, int direction) {
    Tuple t = normalize_ordered(normalize_monotone(m));
    if (direction > 0) std::reverse(t.begin(), t.end());
    return t;
}

}  // namespace kmstar
