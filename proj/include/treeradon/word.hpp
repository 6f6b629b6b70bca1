#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <vector>

#include "treeradon/errors.hpp"

namespace treeradon {

using Letter = std::int32_t;

/// Global parameters of the (q+1)-homogeneous tree.
///
/// The tree is realized as the Cayley graph of the free product of q+1
/// copies of Z/2Z: vertices are reduced words over the alphabet {0..q}
/// (no two consecutive letters equal), the root o is the empty word, and
/// every vertex has exactly q+1 neighbours.
struct TreeParams {
    int q;

    explicit TreeParams(int q_) : q(q_) {
        if (q < 2) throw UsageError("branching parameter q must be >= 2, got " + std::to_string(q));
    }

    /// Period of the frequency torus, T = 2*pi / ln(q).
    double period() const { return 2.0 * M_PI / std::log(static_cast<double>(q)); }

    /// c_q = q / (2(q+1)).
    double cq() const { return static_cast<double>(q) / (2.0 * (q + 1)); }
};

/// A vertex of the tree: a reduced word over {0..q}. The empty word is the
/// root o. Reducedness (word[i] != word[i+1]) is enforced on construction.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
        for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
            if (letters_[i] == letters_[i + 1])
                throw UsageError("word is not reduced: repeated letter at position " + std::to_string(i));
        for (Letter a : letters_)
            if (a < 0) throw UsageError("word letters must be nonnegative");
    }

    static Word root() { return Word(); }

    int length() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    Letter last() const { return letters_.back(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    Word prefix(int len) const {
        return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + len));
    }

    Word parent() const {
        if (empty()) throw UsageError("root has no parent");
        return prefix(length() - 1);
    }

    /// Child w.a; requires a != last() so the result stays reduced.
    Word child(Letter a) const {
        std::vector<Letter> v = letters_;
        v.push_back(a);
        return Word(std::move(v));
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    std::vector<Letter> letters_;
};

/// Length of the longest common prefix of two words.
inline int common_prefix_length(const Word& a, const Word& b) {
    int n = std::min(a.length(), b.length());
    int i = 0;
    while (i < n && a.at(i) == b.at(i)) ++i;
    return i;
}

/// Tree distance: path from a climbs to the common prefix, then descends to b.
inline int distance(const Word& a, const Word& b) {
    return a.length() + b.length() - 2 * common_prefix_length(a, b);
}

/// Product in the free product of involutions: concatenate and cancel.
/// Left multiplication by a reduced word is an isometry of the tree.
inline Word concat_reduce(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters();
    for (Letter x : b.letters()) {
        if (!out.empty() && out.back() == x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return Word(std::move(out));
}

/// Group inverse: letters are involutions, so the inverse is the reversal.
inline Word inverse_word(const Word& w) {
    std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(rev));
}

/// All vertices at distance exactly m from `center`.
std::vector<Word> sphere(const TreeParams& tree, const Word& center, int m);

/// All vertices at distance <= radius from `center`, in BFS order from the
/// center (radius 0 first).
std::vector<Word> ball(const TreeParams& tree, const Word& center, int radius);

/// Neighbours of a vertex (parent first if it exists, then children).
std::vector<Word> neighbors(const TreeParams& tree, const Word& w);

} // namespace treeradon
