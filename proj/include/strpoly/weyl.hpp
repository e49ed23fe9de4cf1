// Reduced decompositions of the longest element of S_{n+1} and braid moves.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strpoly/types.hpp"

namespace strpoly {

class NotReduced : public Error {
public:
    using Error::Error;
};
class MoveNotApplicable : public Error {
public:
    using Error::Error;
};
class RankTooLarge : public Error {
public:
    using Error::Error;
};

inline constexpr int kDefaultRankCap = 4;

/// A reduced word for w0 in S_{n+1}. Letters are 1-based simple reflections.
/// Only constructible through validate_reduced / apply_move, so every
/// instance is known to be reduced.
class ReducedWord {
public:
    int rank() const { return n_; }
    /// N = n(n+1)/2
    int length() const { return static_cast<int>(letters_.size()); }
    const IntVec& letters() const { return letters_; }
    /// 1-based access, matching crossing labels t_1..t_N.
    int letter(int pos) const { return letters_.at(static_cast<std::size_t>(pos - 1)); }

    std::string str() const;

    auto operator<=>(const ReducedWord&) const = default;
    bool operator==(const ReducedWord&) const = default;

private:
    friend ReducedWord validate_reduced(int n, const IntVec& letters);
    friend ReducedWord unchecked_word(int n, IntVec letters);
    ReducedWord(int n, IntVec letters) : n_(n), letters_(std::move(letters)) {}

    int n_ = 0;
    IntVec letters_;
};

struct BraidMove {
    enum class Kind { Two, Three };
    Kind kind = Kind::Three;
    int pos = 1;  // 1-based index of the leftmost affected letter

    auto operator<=>(const BraidMove&) const = default;
    bool operator==(const BraidMove&) const = default;
};

std::string to_string(const BraidMove& m);

ReducedWord validate_reduced(int n, const IntVec& letters);

/// Parses "3 1 2 1 3 2". The rank defaults to the largest letter.
ReducedWord parse_word(const std::string& text, std::optional<int> rank = std::nullopt);

bool is_applicable(const ReducedWord& word, const BraidMove& move);
ReducedWord apply_move(const ReducedWord& word, const BraidMove& move);
std::vector<BraidMove> applicable_moves(const ReducedWord& word);

/// Shortest braid-move sequence from a to b (breadth-first search).
std::vector<BraidMove> find_move_sequence(const ReducedWord& a, const ReducedWord& b);

std::set<ReducedWord> enumerate_words(int n, int rank_cap = kDefaultRankCap);

/// s_1 s_2 s_1 s_3 s_2 s_1 ... s_n ... s_1
ReducedWord standard_word(int n);

}  // namespace strpoly
