#pragma once

#include "njcones/dissimilarity.hpp"
#include "njcones/random.hpp"

namespace njcones {

/// Uniform draw from {x in R^d : ||x||_2 <= 1, x >= 0}, d = (n choose 2),
/// returned as a dissimilarity map on n taxa (labels "1".."n").
///
/// A standard Gaussian vector is normalized to the sphere, folded into the
/// positive orthant componentwise, and scaled by U^(1/d). The fold maps all
/// 2^d orthants onto the positive one measure-preservingly, so the result is
/// uniform on the intersection; plain rejection would accept only 2^-d of
/// the ball and is hopeless already at d = 28.
DissimilarityMap sample_uniform(int n, RandomStream& rng);

}  // namespace njcones
