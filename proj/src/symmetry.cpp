#include "ew/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace ew {

std::string generator_name(GenKind g) {
    switch (g) {
        case GenKind::exchange: return "exchange";
        case GenKind::transpose_first: return "transpose-first";
        case GenKind::M1: return "M1";
        case GenKind::M2: return "M2";
        case GenKind::M3: return "M3";
        case GenKind::M1sq: return "M1^2";
        case GenKind::M2sq: return "M2^2";
    }
    throw SymmetryError("unknown generator");
}

GenKind generator_by_name(const std::string& name) {
    for (GenKind g : {GenKind::exchange, GenKind::transpose_first, GenKind::M1, GenKind::M2,
                      GenKind::M3, GenKind::M1sq, GenKind::M2sq})
        if (generator_name(g) == name) return g;
    throw SymmetryError("unknown generator: " + name);
}

CMat exchange_op() {
    CMat pi = CMat::identity(9) * cd(1.0 / 3.0);
    for (int k = 1; k <= 8; ++k) pi = pi + kron(gellmann(k), gellmann(k)) * cd(0.5);
    return pi;
}

CMat m_matrix(int i) {
    CMat m(3);
    const cd I(0.0, 1.0);
    switch (i) {
        case 1: m(0, 0) = I;   m(1, 1) = 1.0; m(2, 2) = -1.0; break;
        case 2: m(0, 0) = 1.0; m(1, 1) = I;   m(2, 2) = -1.0; break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; m(2, 2) = I;   break;
        default: throw SymmetryError("m_matrix: index must be 1..3");
    }
    return m;
}

std::pair<int, int> m_action(int i, int k) {
    if (k < 1 || k > 8) throw SymmetryError("m_action: Gell-Mann index must be 1..8");
    // rows: k = 1..8; entries: signed target index
    static const int table[3][8] = {
        {-2, +1, +3, +5, -4, -6, -7, +8},  // M1
        {+2, -1, +3, -4, -5, +7, -6, +8},  // M2
        {-1, -2, +3, +5, -4, -7, +6, +8},  // M3
    };
    if (i < 1 || i > 3) throw SymmetryError("m_action: operator index must be 1..3");
    int t = table[i - 1][k - 1];
    return {std::abs(t), t > 0 ? +1 : -1};
}

WitnessCoeffs act(GenKind g, const WitnessCoeffs& w) {
    if (g == GenKind::M1sq) return act(GenKind::M1, act(GenKind::M1, w));
    if (g == GenKind::M2sq) return act(GenKind::M2, act(GenKind::M2, w));
    WitnessCoeffs out;
    out.a0 = w.a0;
    out.name = w.name;
    for (const auto& [l, c] : w.terms) {
        OperatorLabel nl = l;
        double nc = c;
        switch (g) {
            case GenKind::exchange:
                std::swap(nl.i, nl.j);
                break;
            case GenKind::transpose_first:
                if (l.i == 2 || l.i == 5 || l.i == 7) nc = -nc;
                break;
            case GenKind::M1:
            case GenKind::M2:
            case GenKind::M3: {
                int mi = g == GenKind::M1 ? 1 : g == GenKind::M2 ? 2 : 3;
                auto [t, s] = m_action(mi, l.i);
                nl.i = t;
                nc *= s;
                break;
            }
            default:
                throw SymmetryError("unreachable");
        }
        out.add(nl, nc);
    }
    return out;
}

const std::vector<GenKind>& generators_first_category() {
    static const std::vector<GenKind> g{GenKind::exchange, GenKind::transpose_first, GenKind::M1,
                                        GenKind::M2, GenKind::M3};
    return g;
}

const std::vector<GenKind>& generators_second_category() {
    static const std::vector<GenKind> g{GenKind::exchange, GenKind::transpose_first, GenKind::M1sq,
                                        GenKind::M2sq};
    return g;
}

namespace {

std::vector<long long> canonical_key(const WitnessCoeffs& w) {
    std::vector<long long> key;
    key.push_back(std::llround(w.a0 * 1e12));
    double grid[8][8] = {};
    for (const auto& [l, c] : w.terms)
        grid[l.i - 1][l.j - 1] += c * label_scale(l);  // fold the basis scale in
    for (auto& row : grid)
        for (double v : row) key.push_back(std::llround(v * 1e12));
    return key;
}

}  // namespace

Orbit orbit(const WitnessCoeffs& w, const std::vector<GenKind>& gens, size_t cap) {
    Orbit o;
    o.representative = w;
    o.generators = gens;
    std::set<std::vector<long long>> seen;
    std::deque<WitnessCoeffs> queue;
    seen.insert(canonical_key(w));
    queue.push_back(w);
    o.members.push_back(w);
    while (!queue.empty()) {
        WitnessCoeffs cur = queue.front();
        queue.pop_front();
        for (GenKind g : gens) {
            WitnessCoeffs next = act(g, cur);
            if (seen.insert(canonical_key(next)).second) {
                if (o.members.size() >= cap)
                    throw SymmetryError("orbit exceeds cap of " + std::to_string(cap));
                o.members.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return o;
}

}  // namespace ew
