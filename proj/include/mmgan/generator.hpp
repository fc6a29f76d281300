#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mmgan/corpus.hpp"
#include "mmgan/tiles.hpp"
#include "mmgan/weights.hpp"

namespace mmgan {

inline constexpr int kLatentSize = 5;

/// Generator input: five reals in [-1, 1].
class LatentVector {
public:
    LatentVector() { values_.fill(0.0); }
    explicit LatentVector(const std::array<double, kLatentSize>& values);
    /// Takes exactly five values; throws ContractViolation otherwise.
    static LatentVector from_span(std::span<const double> values);

    double operator[](std::size_t i) const { return values_[i]; }
    const std::array<double, kLatentSize>& values() const noexcept { return values_; }

private:
    std::array<double, kLatentSize> values_{};
};

/// Dense channels x rows x cols activation volume.
struct Volume {
    int channels = 0;
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Volume() = default;
    Volume(int c, int r, int w) : channels(c), rows(r), cols(w), data(static_cast<std::size_t>(c) * r * w, 0.0) {}

    double& at(int c, int r, int w) { return data[(static_cast<std::size_t>(c) * rows + r) * cols + w]; }
    double at(int c, int r, int w) const { return data[(static_cast<std::size_t>(c) * rows + r) * cols + w]; }
};

/// Runs the layer stack in inference mode. Output is 12x32x32 in (-1, 1).
Volume forward(const GeneratorWeights& weights, const LatentVector& z);

/// Sets each batch-norm layer's running mean and variance to the statistics
/// its input actually has over `samples` seeded random latents.
void calibrate_batch_norm(GeneratorWeights& weights, int samples, std::uint64_t seed);

/// Four-block DCGAN generator: z -> base*4 x4x4 -> base*2 x8x8 -> base x16x16
/// -> 12x32x32, batch-norm + ReLU between blocks and tanh at the end.
/// `base` = 64 gives the reference 256/128/64 widths. Parameters are drawn
/// from a seeded normal distribution (std 0.02) and the batch-norm running
/// statistics are calibrated on seeded latents, so the result is a usable,
/// reproducible stand-in for trained weights.
GeneratorWeights make_dcgan_weights(std::uint64_t seed, int base = 64);

/// Crops the top-left 14x16 of a 12x32x32 volume and takes the per-tile
/// argmax (ties to the lower code). Cannon becomes solid; orb and player
/// become air.
Segment decode_segment(const Volume& volume);

class SegmentGenerator {
public:
    virtual ~SegmentGenerator() = default;
    virtual Segment generate(const LatentVector& z) const = 0;
    virtual std::string describe() const = 0;
};

class NeuralGenerator final : public SegmentGenerator {
public:
    explicit NeuralGenerator(GeneratorWeights weights);
    Segment generate(const LatentVector& z) const override;
    std::string describe() const override;
    const GeneratorWeights& weights() const noexcept { return weights_; }

private:
    GeneratorWeights weights_;
};

/// Deterministic test double: z[0] picks a segment out of a fixed library.
class StubGenerator final : public SegmentGenerator {
public:
    explicit StubGenerator(std::vector<Segment> library, std::string name = "stub");
    Segment generate(const LatentVector& z) const override;
    std::string describe() const override;

    /// floor(((z0 + 1) / 2) * n), clamped to n - 1.
    static std::size_t index_for(double z0, std::size_t n);
    const std::vector<Segment>& library() const noexcept { return library_; }

private:
    std::vector<Segment> library_;
    std::string name_;
};

using GeneratorPtr = std::shared_ptr<const SegmentGenerator>;

/// One generator for everything (OneGAN) or one per segment type (MultiGAN).
class GeneratorSuite {
public:
    static GeneratorSuite one_gan(GeneratorPtr generator);
    /// Throws ConfigError unless all seven types are present.
    static GeneratorSuite multi_gan(std::map<SegmentType, GeneratorPtr> generators);

    GanMode mode() const noexcept { return mode_; }
    Segment generate(SegmentType type, const LatentVector& z) const;
    const SegmentGenerator& generator_for(SegmentType type) const;

private:
    GeneratorSuite() = default;
    GanMode mode_ = GanMode::OneGAN;
    std::map<SegmentType, GeneratorPtr> generators_;
};

}  // namespace mmgan
