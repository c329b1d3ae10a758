#pragma once

#include <string>
#include <vector>

#include "kmstar/irregular.hpp"
#include "kmstar/weyl.hpp"

namespace kmstar {

// "[3,4,2,0,1,[ 1 0 0 ],[[1],[1],[1]]]"
std::string format_analysis(const Analysis& a);

// "[[[1],[1],[1]],[[1,1],[1,1],[1,1]],...]"
std::string format_chain_list(const std::vector<Tuple>& chain);

// "[[[1],[1],[1],[1]],[[2,1],...],[[1,3,1],...,[2,0,0]]]"
std::string format_root_trace(const RootTrace& t);

// "[ 22,22,22,31 22,31,31,211 ]" (string form) and the nested list form.
std::string format_tuple_vector_strings(const std::vector<Tuple>& v);
std::string format_tuple_vector_lists(const std::vector<Tuple>& v);

// Eight-slot analysis line of the irregular checker.
std::string format_irregular_analysis(const IrregularAnalysis& a);

// Multi-line human-readable block of the irregular checker.
std::string format_irregular_show(const IrregularAnalysis& a);

// Legs ascending (direction > 0) or descending; parts always non-increasing.
Tuple display_tuple(const Tuple& m, int direction);

}  // namespace kmstar
