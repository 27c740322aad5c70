#include "qtet/basis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace qtet {

BasisLabel BasisLabel::swapped(int pos) const {
    if (pos < 0 || pos > 2) throw std::domain_error("swap position out of range");
    BasisLabel b = *this;
    std::swap(b.v[pos], b.v[pos + 1]);
    return b;
}

std::string BasisLabel::str() const {
    std::ostringstream os;
    os << "[" << v[0] << "," << v[1] << "," << v[2] << "," << v[3] << "]";
    return os.str();
}

BasisLabel basis(int i, int j, int k, int l) {
    BasisLabel b{{((i % 4) + 4) % 4, ((j % 4) + 4) % 4, ((k % 4) + 4) % 4,
                  ((l % 4) + 4) % 4}};
    std::array<int, 4> sorted = b.v;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3})
        throw std::domain_error("basis label must be a permutation of 0..3");
    return b;
}

const std::vector<BasisLabel>& all_bases() {
    static const std::vector<BasisLabel> bases = [] {
        std::array<int, 4> p = {0, 1, 2, 3};
        std::vector<BasisLabel> out;
        do out.push_back(BasisLabel{p});
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return bases;
}

BasisLabel parse_basis(const std::string& text) {
    std::array<int, 4> v{};
    char sep = 0;
    std::istringstream is(text);
    if (!(is >> v[0] >> sep >> v[1] >> sep >> v[2] >> sep >> v[3]))
        throw std::invalid_argument("cannot parse basis label: '" + text + "'");
    return basis(v[0], v[1], v[2], v[3]);
}

PatternMatch classify_basis(const BasisLabel& b) {
    const int i = b[0], j = b[1], k = b[2], l = b[3];
    const auto diff = [](int x, int y) { return ((x - y) % 4 + 4) % 4; };
    if (diff(j, i) == 1) {
        // [r,r+1,...]: k = r+2 gives P1, k = r+3 gives P3
        if (diff(k, j) == 1) return {Pattern::P1, i};
        return {Pattern::P3, i};
    }
    if (diff(i, j) == 1) {
        // [r+1,r,...]: k = r+2 gives P2, k = r+3 gives P4
        if (diff(k, j) == 2) return {Pattern::P2, j};
        return {Pattern::P4, j};
    }
    // j - i = 2
    if (diff(k, i) == 1) return {Pattern::P5, i};
    (void)l;
    return {Pattern::P6, j};
}

namespace {
constexpr Orientation kQ = Orientation::plus;
constexpr Orientation kQi = Orientation::minus;

// Rows: P1..P6. Columns: generator slots (r,r+1), (r+1,r+2), (r+2,r+3),
// (r+3,r), (r,r+2), (r+1,r+3), (r+2,r), (r+3,r+1). Stated for even r.
const RepSpec kRepTable[6][8] = {
    // P1 [r,r+1,r+2,r+3]
    {{MatrixTag::S, kQi, -1, true},
     {MatrixTag::E, kQ, 0, false},
     {MatrixTag::K, kQ, 0, false},
     {MatrixTag::G, kQi, +1, true},
     {MatrixTag::L, kQ, +1, false},
     {MatrixTag::Einv, kQi, 0, true},
     {MatrixTag::Linv, kQ, +1, false},
     {MatrixTag::E, kQi, 0, true}},
    // P2 [r+1,r,r+2,r+3]
    {{MatrixTag::S, kQ, -1, false},
     {MatrixTag::G, kQ, +1, false},
     {MatrixTag::K, kQ, 0, false},
     {MatrixTag::E, kQi, 0, true},
     {MatrixTag::E, kQ, 0, false},
     {MatrixTag::Linv, kQi, +1, true},
     {MatrixTag::Einv, kQ, 0, false},
     {MatrixTag::L, kQi, +1, true}},
    // P3 [r,r+1,r+3,r+2]
    {{MatrixTag::S, kQi, -1, false},
     {MatrixTag::E, kQ, 0, true},
     {MatrixTag::K, kQi, 0, false},
     {MatrixTag::G, kQi, +1, false},
     {MatrixTag::L, kQ, +1, true},
     {MatrixTag::Einv, kQi, 0, false},
     {MatrixTag::Linv, kQ, +1, true},
     {MatrixTag::E, kQi, 0, false}},
    // P4 [r+1,r,r+3,r+2]
    {{MatrixTag::S, kQ, -1, true},
     {MatrixTag::G, kQ, +1, true},
     {MatrixTag::K, kQi, 0, false},
     {MatrixTag::E, kQi, 0, false},
     {MatrixTag::E, kQ, 0, true},
     {MatrixTag::Linv, kQi, +1, false},
     {MatrixTag::Einv, kQ, 0, true},
     {MatrixTag::L, kQi, +1, false}},
    // P5 [r,r+2,r+1,r+3]
    {{MatrixTag::F, kQ, -1, false},
     {MatrixTag::E, kQi, 0, false},
     {MatrixTag::E, kQ, 0, true},
     {MatrixTag::F, kQi, +1, true},
     {MatrixTag::M, kQi, -1, true},
     {MatrixTag::K, kQ, 0, false},
     {MatrixTag::M, kQ, +1, false},
     {MatrixTag::K, kQi, 0, false}},
    // P6 [r+2,r,r+1,r+3]
    {{MatrixTag::E, kQ, 0, false},
     {MatrixTag::F, kQi, +1, false},
     {MatrixTag::F, kQ, -1, true},
     {MatrixTag::E, kQi, 0, true},
     {MatrixTag::M, kQ, +1, true},
     {MatrixTag::K, kQ, 0, false},
     {MatrixTag::M, kQi, -1, false},
     {MatrixTag::K, kQi, 0, false}},
};
}  // namespace

const RepSpec& rep_spec(Pattern p, int slot) {
    return kRepTable[static_cast<int>(p)][slot];
}

int generator_slot(const GeneratorLabel& g, int r) {
    static const std::array<std::pair<int, int>, 8> offsets = {
        std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {2, 0}, {3, 1}};
    for (int s = 0; s < 8; ++s)
        if (gen(r + offsets[s].first, r + offsets[s].second) == g) return s;
    throw std::domain_error("generator does not fit any slot");
}

std::vector<Move> move_path(const BasisLabel& from, const BasisLabel& to) {
    if (from == to) return {};
    // BFS over the 24 labels; neighbor order fixes the tie-break.
    std::map<BasisLabel, std::pair<BasisLabel, Move>> parent;
    std::queue<BasisLabel> queue;
    queue.push(from);
    parent.emplace(from, std::pair{from, Move::swap01});
    while (!queue.empty()) {
        const BasisLabel cur = queue.front();
        queue.pop();
        if (cur == to) break;
        for (Move m : {Move::swap01, Move::swap12, Move::swap23}) {
            const BasisLabel next = apply_move(cur, m);
            if (parent.count(next)) continue;
            parent.emplace(next, std::pair{cur, m});
            queue.push(next);
        }
    }
    std::vector<Move> path;
    for (BasisLabel cur = to; cur != from;) {
        const auto& [prev, mv] = parent.at(cur);
        path.push_back(mv);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace qtet
