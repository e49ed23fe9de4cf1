#include "strpoly/cones.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

namespace strpoly {

Fragment classify_straight_traversal(const Crossing& x, int strand, bool strand_up, bool other_up)
{
    if (strand_up != other_up)
        return Fragment::None;
    if (strand_up && strand == x.left)
        return Fragment::UpThroughLeft;
    if (!strand_up && strand == x.right)
        return Fragment::DownThroughRight;
    return Fragment::None;
}

namespace {

class PathSearch {
public:
    PathSearch(const StringDiagram& d, int k)
        : d_(d), k_(k), visited_(static_cast<std::size_t>(d.size()) + 1, false)
    {
    }

    std::vector<RigorousPath> run()
    {
        // b_k is the lower end of U_k, which is oriented upward.
        follow(k_, std::nullopt);
        std::sort(out_.begin(), out_.end(),
                  [](const RigorousPath& a, const RigorousPath& b) { return a.crossings < b.crossings; });
        return out_;
    }

private:
    bool up(int strand) const { return strand <= k_; }

    // Travel along `strand` in its orientation starting just after crossing
    // `from` (or from the strand's lower end when `from` is empty).
    void follow(int strand, std::optional<int> from)
    {
        const IntVec& xs = d_.strand_crossings(strand);
        int next = -1;
        if (!from) {
            if (!xs.empty())
                next = xs.back();
        } else {
            const auto it = std::find(xs.begin(), xs.end(), *from);
            const auto idx = it - xs.begin();
            if (up(strand) && idx > 0)
                next = xs[static_cast<std::size_t>(idx - 1)];
            else if (!up(strand) && idx + 1 < static_cast<long>(xs.size()))
                next = xs[static_cast<std::size_t>(idx + 1)];
        }
        if (next < 0) {
            // Reached an endpoint: only b_{k+1} (lower end, travelling down) counts.
            if (!up(strand) && strand == k_ + 1)
                out_.push_back({k_, cur_, switches_});
            return;
        }
        if (visited_[static_cast<std::size_t>(next)])
            return;
        visited_[static_cast<std::size_t>(next)] = true;
        cur_.push_back(next);

        const Crossing& x = d_.crossing(next);
        const int other = x.other(strand);
        if (classify_straight_traversal(x, strand, up(strand), up(other)) == Fragment::None)
            follow(strand, next);
        switches_.push_back({next, strand, other});
        follow(other, next);
        switches_.pop_back();

        cur_.pop_back();
        visited_[static_cast<std::size_t>(next)] = false;
    }

    const StringDiagram& d_;
    int k_;
    std::vector<bool> visited_;
    IntVec cur_;
    std::vector<Switch> switches_;
    std::vector<RigorousPath> out_;
};

}  // namespace

std::vector<RigorousPath> rigorous_paths(const StringDiagram& diagram, int k)
{
    if (k < 1 || k > diagram.rank())
        throw InvalidInput("k must lie in [1, n]");
    return PathSearch(diagram, k).run();
}

Inequality path_inequality(const RigorousPath& path, int N)
{
    Inequality ineq;
    ineq.M.assign(static_cast<std::size_t>(N), 0);
    for (const auto& s : path.switches)
        ineq.M[static_cast<std::size_t>(s.crossing - 1)] += s.from < s.to ? -1 : 1;
    ineq.rhs = 0;
    ineq.kind = Inequality::Kind::String;
    ineq.index = path.k;
    ineq.path = path.crossings;
    return ineq;
}

std::vector<Inequality> lambda_inequalities(const StringDiagram& diagram)
{
    const int N = diagram.size();
    std::vector<Inequality> out;
    for (int i = 1; i <= N; ++i) {
        Inequality ineq;
        ineq.M.assign(static_cast<std::size_t>(N), 0);
        ineq.M[static_cast<std::size_t>(i - 1)] = 1;
        const int ci = diagram.crossing(i).corridor;
        for (int j = i + 1; j <= N; ++j) {
            const int cj = diagram.crossing(j).corridor;
            // x_i <= 2 + sum c_j x_j moved to the left-hand side
            if (cj == ci)
                ineq.M[static_cast<std::size_t>(j - 1)] = 2;
            else if (std::abs(cj - ci) == 1)
                ineq.M[static_cast<std::size_t>(j - 1)] = -1;
        }
        ineq.rhs = 2;
        ineq.kind = Inequality::Kind::Lambda;
        ineq.index = i;
        ineq.id = "L" + std::to_string(i);
        out.push_back(std::move(ineq));
    }
    return out;
}

std::vector<Inequality> delta_hrep(const ReducedWord& word)
{
    const StringDiagram d(word);
    std::vector<Inequality> out = lambda_inequalities(d);
    std::map<IntVec, std::size_t> seen;
    for (int k = 1; k <= d.rank(); ++k) {
        const auto paths = rigorous_paths(d, k);
        for (std::size_t s = 0; s < paths.size(); ++s) {
            Inequality ineq = path_inequality(paths[s], d.size());
            if (auto it = seen.find(ineq.M); it != seen.end()) {
                ++out[it->second].multiplicity;
                continue;
            }
            ineq.id = "S" + std::to_string(k) + "." + std::to_string(s + 1);
            seen.emplace(ineq.M, out.size());
            out.push_back(std::move(ineq));
        }
    }
    return out;
}

std::string format_inequality(const Inequality& ineq)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < ineq.M.size(); ++i) {
        const int c = ineq.M[i];
        if (c == 0)
            continue;
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (std::abs(c) != 1)
            out << std::abs(c);
        out << "x" << i + 1;
        first = false;
    }
    if (first)
        out << "0";
    out << " <= " << ineq.rhs;
    return out.str();
}

}  // namespace strpoly
