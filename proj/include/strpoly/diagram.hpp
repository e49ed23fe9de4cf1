// String (wiring) diagram of a reduced word.
//
// Strands U_1..U_{n+1} start in columns 1..n+1 at the top. Crossing t_p
// (p = 1..N, top to bottom) swaps the occupants of columns c_p and c_p + 1,
// where c_p is the p-th letter. Since the word is reduced, the strand on the
// left above a crossing always has the smaller id.
#pragma once

#include <utility>
#include <vector>

#include "strpoly/weyl.hpp"

namespace strpoly {

struct Crossing {
    int level = 0;     // p, 1-based
    int corridor = 0;  // c_p
    int left = 0;      // strand entering from the upper left (smaller id)
    int right = 0;     // strand entering from the upper right

    int other(int strand) const { return strand == left ? right : left; }
};

struct Box {
    int top = 0;  // crossing index t_top
    int bot = 0;  // crossing index t_bot
    int corridor = 0;

    auto operator<=>(const Box&) const = default;
};

struct BraidRegion {
    enum class Kind { R121, R212 };
    Box box;
    int i = 0, j = 0, k = 0;  // consecutive word positions of the 3-move
    Kind kind = Kind::R121;
};

class StringDiagram {
public:
    explicit StringDiagram(ReducedWord word);

    const ReducedWord& word() const { return word_; }
    int rank() const { return word_.rank(); }
    int size() const { return word_.length(); }
    int strands() const { return word_.rank() + 1; }

    /// 1-based crossing access.
    const Crossing& crossing(int p) const { return crossings_.at(static_cast<std::size_t>(p - 1)); }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    /// Crossings met by strand s, top to bottom.
    const IntVec& strand_crossings(int s) const { return strand_crossings_.at(static_cast<std::size_t>(s - 1)); }

    /// (level, column) pairs occupied by strand s for levels 0..N.
    const std::vector<std::pair<int, int>>& trajectory(int s) const
    {
        return trajectories_.at(static_cast<std::size_t>(s - 1));
    }

    int top_column(int s) const { return s; }
    int bottom_column(int s) const { return strands() + 1 - s; }

private:
    ReducedWord word_;
    std::vector<Crossing> crossings_;
    std::vector<IntVec> strand_crossings_;
    std::vector<std::vector<std::pair<int, int>>> trajectories_;
};

StringDiagram build_diagram(const ReducedWord& word);

/// Consecutive same-corridor crossing pairs, ordered by top crossing.
std::vector<Box> enumerate_boxes(const StringDiagram& diagram);

BraidRegion braid_region(const ReducedWord& word, const BraidMove& move);

}  // namespace strpoly
