#include "strpoly/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace strpoly {

ReducedWord unchecked_word(int n, IntVec letters)
{
    return ReducedWord(n, std::move(letters));
}

std::string ReducedWord::str() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        out << (i ? " " : "") << letters_[i];
    return out.str();
}

std::string to_string(const BraidMove& m)
{
    return (m.kind == BraidMove::Kind::Two ? "Two@" : "Three@") + std::to_string(m.pos);
}

ReducedWord validate_reduced(int n, const IntVec& letters)
{
    if (n < 1)
        throw InvalidInput("rank must be positive");
    for (int c : letters)
        if (c < 1 || c > n)
            throw InvalidInput("letter " + std::to_string(c) + " outside [1, " + std::to_string(n) + "]");
    const std::size_t expected = static_cast<std::size_t>(n) * (n + 1) / 2;
    if (letters.size() != expected)
        throw NotReduced("word has length " + std::to_string(letters.size()) + ", expected " +
                         std::to_string(expected));
    // columns[c] is the strand occupying column c; a step is length-increasing
    // exactly when it swaps an ordered pair.
    IntVec columns(static_cast<std::size_t>(n) + 1);
    std::iota(columns.begin(), columns.end(), 1);
    for (std::size_t p = 0; p < letters.size(); ++p) {
        const auto c = static_cast<std::size_t>(letters[p] - 1);
        if (columns[c] > columns[c + 1])
            throw NotReduced("step " + std::to_string(p + 1) + " decreases length");
        std::swap(columns[c], columns[c + 1]);
    }
    if (!std::is_sorted(columns.rbegin(), columns.rend()))
        throw NotReduced("final permutation is not the order reversal");
    return unchecked_word(n, letters);
}

ReducedWord parse_word(const std::string& text, std::optional<int> rank)
{
    std::istringstream in(text);
    IntVec letters;
    std::string tok;
    while (in >> tok) {
        char* end = nullptr;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0')
            throw InvalidInput("malformed letter '" + tok + "'");
        letters.push_back(static_cast<int>(v));
    }
    if (letters.empty())
        throw InvalidInput("empty word");
    const int n = rank.value_or(*std::max_element(letters.begin(), letters.end()));
    return validate_reduced(n, letters);
}

bool is_applicable(const ReducedWord& word, const BraidMove& move)
{
    const int p = move.pos;
    if (move.kind == BraidMove::Kind::Two) {
        if (p < 1 || p + 1 > word.length())
            return false;
        return std::abs(word.letter(p) - word.letter(p + 1)) > 1;
    }
    if (p < 1 || p + 2 > word.length())
        return false;
    return word.letter(p) == word.letter(p + 2) && std::abs(word.letter(p) - word.letter(p + 1)) == 1;
}

ReducedWord apply_move(const ReducedWord& word, const BraidMove& move)
{
    if (!is_applicable(word, move))
        throw MoveNotApplicable(to_string(move) + " on [" + word.str() + "]");
    IntVec letters = word.letters();
    const auto p = static_cast<std::size_t>(move.pos - 1);
    if (move.kind == BraidMove::Kind::Two) {
        std::swap(letters[p], letters[p + 1]);
    } else {
        const int a = letters[p], b = letters[p + 1];
        letters[p] = b;
        letters[p + 1] = a;
        letters[p + 2] = b;
    }
    return unchecked_word(word.rank(), std::move(letters));
}

std::vector<BraidMove> applicable_moves(const ReducedWord& word)
{
    std::vector<BraidMove> out;
    for (int p = 1; p <= word.length(); ++p)
        for (auto kind : {BraidMove::Kind::Two, BraidMove::Kind::Three}) {
            const BraidMove m{kind, p};
            if (is_applicable(word, m))
                out.push_back(m);
        }
    return out;
}

std::vector<BraidMove> find_move_sequence(const ReducedWord& a, const ReducedWord& b)
{
    if (a.rank() != b.rank())
        throw InvalidInput("words have different ranks");
    std::map<ReducedWord, std::pair<ReducedWord, BraidMove>> parent;
    std::queue<ReducedWord> frontier;
    frontier.push(a);
    parent.emplace(a, std::make_pair(a, BraidMove{}));
    while (!frontier.empty() && !parent.contains(b)) {
        const ReducedWord cur = frontier.front();
        frontier.pop();
        for (const auto& m : applicable_moves(cur)) {
            ReducedWord next = apply_move(cur, m);
            if (parent.contains(next))
                continue;
            parent.emplace(next, std::make_pair(cur, m));
            frontier.push(std::move(next));
        }
    }
    if (!parent.contains(b))
        std::abort();  // the braid graph of w0 is connected
    std::vector<BraidMove> moves;
    for (ReducedWord w = b; w != a;) {
        const auto& [prev, m] = parent.at(w);
        moves.push_back(m);
        w = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
}

namespace {

void extend(int n, IntVec& columns, IntVec& letters, std::size_t target, std::set<ReducedWord>& out)
{
    if (letters.size() == target) {
        out.insert(unchecked_word(n, letters));
        return;
    }
    for (int c = 1; c <= n; ++c) {
        auto& lo = columns[static_cast<std::size_t>(c - 1)];
        auto& hi = columns[static_cast<std::size_t>(c)];
        if (lo > hi)
            continue;
        std::swap(lo, hi);
        letters.push_back(c);
        extend(n, columns, letters, target, out);
        letters.pop_back();
        std::swap(lo, hi);
    }
}

}  // namespace

std::set<ReducedWord> enumerate_words(int n, int rank_cap)
{
    if (n < 1)
        throw InvalidInput("rank must be positive");
    if (n > rank_cap)
        throw RankTooLarge("rank " + std::to_string(n) + " exceeds cap " + std::to_string(rank_cap));
    IntVec columns(static_cast<std::size_t>(n) + 1);
    std::iota(columns.begin(), columns.end(), 1);
    IntVec letters;
    std::set<ReducedWord> out;
    extend(n, columns, letters, static_cast<std::size_t>(n) * (n + 1) / 2, out);
    return out;
}

ReducedWord standard_word(int n)
{
    IntVec letters;
    for (int top = 1; top <= n; ++top)
        for (int c = top; c >= 1; --c)
            letters.push_back(c);
    return validate_reduced(n, letters);
}

}  // namespace strpoly
