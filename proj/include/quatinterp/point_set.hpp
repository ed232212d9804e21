#pragma once

#include <cstddef>
#include <vector>

#include "quatinterp/quaternion.hpp"

namespace quatinterp {

/// Ordered list of pairwise distinct quaternions together with their
/// similarity classes (grouped by equal real part and modulus, within
/// tolerance). Construction rejects duplicate points.
class PointSet {
public:
    explicit PointSet(std::vector<Quaternion> points, Tolerance tol = {});

    const std::vector<Quaternion>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Quaternion& operator[](std::size_t i) const { return points_[i]; }
    Tolerance tolerance() const { return tol_; }

    /// Similarity-class id of point i; ids are dense in [0, class_count).
    int class_of(std::size_t i) const { return class_index_[i]; }
    int class_count() const { return class_count_; }
    /// Size of the largest similarity class.
    std::size_t max_class_size() const;

private:
    std::vector<Quaternion> points_;
    std::vector<int> class_index_;
    int class_count_ = 0;
    Tolerance tol_;
};

} // namespace quatinterp
