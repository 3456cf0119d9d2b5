#include "dimerlab/gf2.hpp"

#include <stdexcept>

#include "dimerlab/error.hpp"

namespace dimerlab {

namespace {

struct BitRow {
    std::vector<std::uint64_t> bits;
    std::uint8_t target = 0;
    std::vector<std::uint64_t> combo;  // which original rows sum to this one

    bool get(int i) const { return (bits[i >> 6] >> (i & 63)) & 1ull; }
    void flip(int i) { bits[i >> 6] ^= 1ull << (i & 63); }
    void add(const BitRow& o) {
        for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= o.bits[w];
        for (std::size_t w = 0; w < combo.size(); ++w) combo[w] ^= o.combo[w];
        target ^= o.target;
    }
    bool empty_support() const {
        for (auto w : bits)
            if (w != 0) return false;
        return true;
    }
};

}  // namespace

Gf2Solution gf2_solve(const Gf2System& sys) {
    const int n = sys.nvars;
    const int m = static_cast<int>(sys.rows.size());
    if (sys.targets.size() != sys.rows.size())
        throw Error("DimensionMismatch", "row/target count mismatch");
    const std::size_t words = (n + 63) / 64;
    const std::size_t cwords = (m + 63) / 64;

    std::vector<BitRow> rows(m);
    for (int r = 0; r < m; ++r) {
        rows[r].bits.assign(words, 0);
        rows[r].combo.assign(cwords, 0);
        rows[r].target = sys.targets[r] & 1;
        if (m > 0) rows[r].combo[r >> 6] = 1ull << (r & 63);
        for (int v : sys.rows[r]) {
            if (v < 0 || v >= n) throw Error("IndexOutOfRange", "variable index out of range");
            rows[r].flip(v);  // repeated indices cancel mod 2
        }
    }

    std::vector<int> pivot_row_of(n, -1);
    std::vector<bool> used(m, false);
    for (int v = 0; v < n; ++v) {
        int pr = -1;
        for (int r = 0; r < m; ++r)
            if (!used[r] && rows[r].get(v)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        used[pr] = true;
        pivot_row_of[v] = pr;
        for (int r = 0; r < m; ++r)
            if (r != pr && rows[r].get(v)) rows[r].add(rows[pr]);
    }

    Gf2Solution sol;
    for (int r = 0; r < m; ++r) {
        if (!used[r] && rows[r].empty_support() && rows[r].target) {
            for (int k = 0; k < m; ++k)
                if ((rows[r].combo[k >> 6] >> (k & 63)) & 1ull) sol.certificate.push_back(k);
            sol.feasible = false;
            return sol;
        }
    }

    sol.feasible = true;
    sol.x.assign(n, 0);
    // After full reduction each pivot row contains its pivot variable and free
    // variables only; with free variables fixed to 0 the value is the target.
    for (int v = 0; v < n; ++v)
        if (pivot_row_of[v] >= 0) sol.x[v] = rows[pivot_row_of[v]].target;
    return sol;
}

}  // namespace dimerlab
