#include "s3q/mat2.hpp"

namespace s3q {

Mat2 Mat2::inverse() const {
    const CycloNum det_inv = det().inv();
    return {det_inv * d, -(det_inv * b), -(det_inv * c), det_inv * a};
}

std::string Mat2::to_string() const {
    return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

}  // namespace s3q
