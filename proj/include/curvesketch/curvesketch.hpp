#ifndef CURVESKETCH_CURVESKETCH_HPP
#define CURVESKETCH_CURVESKETCH_HPP

#include "curvesketch/analysis.hpp"
#include "curvesketch/datasets.hpp"
#include "curvesketch/descriptors.hpp"
#include "curvesketch/distances.hpp"
#include "curvesketch/features.hpp"
#include "curvesketch/geometry.hpp"
#include "curvesketch/io.hpp"
#include "curvesketch/polyline.hpp"
#include "curvesketch/rng.hpp"

#endif  // CURVESKETCH_CURVESKETCH_HPP
