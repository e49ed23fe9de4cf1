#include "strpoly/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace strpoly {

StringDiagram::StringDiagram(ReducedWord word) : word_(std::move(word))
{
    const int m = strands();
    IntVec columns(static_cast<std::size_t>(m));
    std::iota(columns.begin(), columns.end(), 1);
    strand_crossings_.resize(static_cast<std::size_t>(m));
    trajectories_.resize(static_cast<std::size_t>(m));
    for (int s = 1; s <= m; ++s)
        trajectories_[static_cast<std::size_t>(s - 1)].emplace_back(0, s);

    for (int p = 1; p <= word_.length(); ++p) {
        const int c = word_.letter(p);
        auto& l = columns[static_cast<std::size_t>(c - 1)];
        auto& r = columns[static_cast<std::size_t>(c)];
        if (l > r)
            throw Error("diagram: crossing " + std::to_string(p) + " meets strands twice");
        crossings_.push_back({p, c, l, r});
        strand_crossings_[static_cast<std::size_t>(l - 1)].push_back(p);
        strand_crossings_[static_cast<std::size_t>(r - 1)].push_back(p);
        std::swap(l, r);
        for (int col = 1; col <= m; ++col)
            trajectories_[static_cast<std::size_t>(columns[static_cast<std::size_t>(col - 1)] - 1)]
                .emplace_back(p, col);
    }
    for (int s = 1; s <= m; ++s) {
        if (trajectories_[static_cast<std::size_t>(s - 1)].back().second != bottom_column(s))
            throw Error("diagram: endpoint permutation is not the order reversal");
        if (static_cast<int>(strand_crossings_[static_cast<std::size_t>(s - 1)].size()) != m - 1)
            throw Error("diagram: strand does not cross every other strand once");
    }
}

StringDiagram build_diagram(const ReducedWord& word)
{
    return StringDiagram(word);
}

std::vector<Box> enumerate_boxes(const StringDiagram& diagram)
{
    std::vector<Box> boxes;
    std::vector<int> last(static_cast<std::size_t>(diagram.rank()) + 1, 0);
    for (const auto& x : diagram.crossings()) {
        int& prev = last[static_cast<std::size_t>(x.corridor)];
        if (prev != 0)
            boxes.push_back({prev, x.level, x.corridor});
        prev = x.level;
    }
    std::sort(boxes.begin(), boxes.end());
    return boxes;
}

BraidRegion braid_region(const ReducedWord& word, const BraidMove& move)
{
    if (move.kind != BraidMove::Kind::Three || !is_applicable(word, move))
        throw MoveNotApplicable(to_string(move) + " is not a 3-move on [" + word.str() + "]");
    BraidRegion region;
    region.i = move.pos;
    region.j = move.pos + 1;
    region.k = move.pos + 2;
    region.box = {region.i, region.k, word.letter(region.i)};
    region.kind = word.letter(region.j) == word.letter(region.i) + 1 ? BraidRegion::Kind::R121
                                                                      : BraidRegion::Kind::R212;
    return region;
}

}  // namespace strpoly
