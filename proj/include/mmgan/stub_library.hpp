#pragma once

#include <vector>

#include "mmgan/generator.hpp"

namespace mmgan {

/// Hand-authored segments whose geometry matches `type`: floor corridors for
/// horizontal, a full-height ladder shaft for up, an open drop with ledges
/// for down, and walled L-shapes with a ladder for the corners. Every
/// library shares the ladder columns 7-8 so vertical stacks line up.
std::vector<Segment> stub_library(SegmentType type);

/// Union of all seven libraries, in kSegmentTypes order.
std::vector<Segment> stub_union_library();

/// Seven type-correct stub generators.
GeneratorSuite stub_multi_gan_suite();

/// A single stub over the union library: the latent picks any segment
/// regardless of the type the layout needs.
GeneratorSuite stub_one_gan_suite();

/// Mirror image across the vertical axis.
Segment mirror_horizontal(const Segment& seg);

}  // namespace mmgan
