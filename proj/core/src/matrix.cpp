#include "dimerlab/matrix.hpp"

namespace dimerlab {

int rational_rank(Mat<Rat> m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        Rat inv = m.at(rank, c).inverse();
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.at(r, c).is_zero()) continue;
            Rat f = m.at(r, c) * inv;
            for (int j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace dimerlab
