#include "orbit/gallery.hpp"

namespace orbit::gallery {

JordanSystem example2() {
  return JordanSystem::from_diagonal({Scalar::imaginary_unit()}, {Scalar(0)}, {Scalar(1)});
}

JordanSystem example3() {
  return JordanSystem({{Scalar::imaginary_unit(), 2}}, {{Scalar(0), Scalar(1)}},
                      {{Scalar(1), Scalar(0)}});
}

WeightedShift example1(std::size_t truncation) { return WeightedShift{truncation}; }

}  // namespace orbit::gallery
