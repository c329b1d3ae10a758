#pragma once

#include <string>
#include <vector>

#include "kmstar/tuple.hpp"
#include "kmstar/weyl.hpp"

namespace kmstar {

// One (possibly confluent) singular point: partitions of the common order
// from finest to coarsest. Parts are positional: consecutive levels are
// linked by summing contiguous blocks of the finer level, in writing order.
struct Chain {
    std::vector<std::vector<int>> levels;
    int rank() const { return static_cast<int>(levels.size()) - 1; }
    bool operator==(const Chain& o) const { return levels == o.levels; }
    bool operator<(const Chain& o) const { return levels < o.levels; }
};

struct IrregularSpectrum {
    std::vector<Chain> points;
    bool operator==(const IrregularSpectrum& o) const { return points == o.points; }
};

// Contiguous blocks of `fine` must sum to the parts of `coarse` in order.
bool refines_positionally(const std::vector<int>& fine, const std::vector<int>& coarse);

// Throws std::invalid_argument on inconsistent grouping or unequal sums.
void validate_spectrum(const IrregularSpectrum& s);

// All partitions of every chain, as a plain spectral tuple.
Tuple unfold(const IrregularSpectrum& s);

enum class RefineStyle { Pipe, Paren };

// Every merging of the legs of m into refinement chains, including the
// unrefined tuple, deduplicated up to chain reordering.
std::vector<IrregularSpectrum> refinements(const Tuple& m);

std::string render(const IrregularSpectrum& s, RefineStyle style);
IrregularSpectrum parse_spectrum(const std::string& text);  // pipe or paren form

struct IrregularAnalysis {
    AnalysisStatus status = AnalysisStatus::Ok;
    int points = 0;
    std::vector<int> poincare_ranks;
    int rank = 0;
    long long index = 0;
    int rod = 0;
    std::vector<int> redsp;  // chosen 0-based position in each chain's finest level
    IrregularSpectrum original;
    IrregularSpectrum reduced;
};

IrregularAnalysis analyze_irregular(const IrregularSpectrum& s);

// The bracketed nested list form used beside the strings, e.g.
// [[[2,[1,1]],[1,[1]],[1,[1]]],[2,2]].
std::string format_spectrum_list(const IrregularSpectrum& s);

}  // namespace kmstar
