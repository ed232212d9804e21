#include "quatinterp/point_set.hpp"

#include <algorithm>
#include <sstream>

#include "quatinterp/errors.hpp"

namespace quatinterp {

PointSet::PointSet(std::vector<Quaternion> points, Tolerance tol)
    : points_(std::move(points)), tol_(tol) {
    const std::size_t n = points_.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const double scale = std::max({1.0, abs(points_[a]), abs(points_[b])});
            if (abs(points_[a] - points_[b]) <= tol_.eps * scale) {
                std::ostringstream msg;
                msg << "duplicate points at indices " << a << " and " << b;
                throw MathError(ErrorReason::InvalidPointSet, msg.str());
            }
        }
    }

    // Similarity is an equivalence up to tolerance; group greedily against
    // class representatives.
    class_index_.assign(n, -1);
    std::vector<std::size_t> reps;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t r = 0; r < reps.size(); ++r) {
            if (similar(points_[a], points_[reps[r]], tol_)) {
                class_index_[a] = static_cast<int>(r);
                break;
            }
        }
        if (class_index_[a] < 0) {
            class_index_[a] = static_cast<int>(reps.size());
            reps.push_back(a);
        }
    }
    class_count_ = static_cast<int>(reps.size());
}

std::size_t PointSet::max_class_size() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(class_count_), 0);
    for (int c : class_index_) counts[static_cast<std::size_t>(c)]++;
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

} // namespace quatinterp
