#include "treeradon/word.hpp"

namespace treeradon {

std::vector<Word> neighbors(const TreeParams& tree, const Word& w) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(tree.q) + 1);
    if (!w.empty()) out.push_back(w.parent());
    for (Letter a = 0; a <= tree.q; ++a) {
        if (!w.empty() && a == w.last()) continue;
        out.push_back(w.child(a));
    }
    return out;
}

std::vector<Word> sphere(const TreeParams& tree, const Word& center, int m) {
    if (m < 0) throw UsageError("sphere radius must be >= 0");
    std::vector<Word> ring{center};
    for (int step = 0; step < m; ++step) {
        std::vector<Word> next;
        for (const Word& w : ring) {
            for (const Word& n : neighbors(tree, w)) {
                if (distance(n, center) == step + 1) next.push_back(n);
            }
        }
        ring = std::move(next);
    }
    return ring;
}

std::vector<Word> ball(const TreeParams& tree, const Word& center, int radius) {
    if (radius < 0) throw UsageError("ball radius must be >= 0");
    std::vector<Word> out;
    for (int m = 0; m <= radius; ++m) {
        std::vector<Word> ring = sphere(tree, center, m);
        out.insert(out.end(), ring.begin(), ring.end());
    }
    return out;
}

} // namespace treeradon
