#include "mmgan/generator.hpp"

#include <algorithm>
#include <random>

#include <algorithm>
#include <cmath>

namespace mmgan {

LatentVector::LatentVector(const std::array<double, kLatentSize>& values) : values_(values) {
    for (double v : values_)
        if (!(v >= -1.0 && v <= 1.0)) throw ContractViolation("latent component outside [-1, 1]");
}

LatentVector LatentVector::from_span(std::span<const double> values) {
    if (values.size() != kLatentSize)
        throw ContractViolation("latent vector needs 5 values, got " + std::to_string(values.size()));
    std::array<double, kLatentSize> a{};
    std::copy(values.begin(), values.end(), a.begin());
    return LatentVector(a);
}

namespace {

Volume apply(const ConvTransposeLayer& l, const Volume& in) {
    const int out_rows = conv_transpose_extent(in.rows, l.kernel, l.stride, l.padding);
    const int out_cols = conv_transpose_extent(in.cols, l.kernel, l.stride, l.padding);
    Volume out(l.out_channels, out_rows, out_cols);
    const int k = l.kernel;
    for (int ic = 0; ic < l.in_channels; ++ic) {
        for (int iy = 0; iy < in.rows; ++iy) {
            for (int ix = 0; ix < in.cols; ++ix) {
                const double x = in.at(ic, iy, ix);
                if (x == 0.0) continue;
                for (int oc = 0; oc < l.out_channels; ++oc) {
                    const float* w = &l.weight[((static_cast<std::size_t>(ic) * l.out_channels + oc) * k) * k];
                    for (int ky = 0; ky < k; ++ky) {
                        const int oy = iy * l.stride - l.padding + ky;
                        if (oy < 0 || oy >= out_rows) continue;
                        for (int kx = 0; kx < k; ++kx) {
                            const int ox = ix * l.stride - l.padding + kx;
                            if (ox < 0 || ox >= out_cols) continue;
                            out.at(oc, oy, ox) += x * static_cast<double>(w[ky * k + kx]);
                        }
                    }
                }
            }
        }
    }
    if (!l.bias.empty()) {
        const std::size_t plane = static_cast<std::size_t>(out_rows) * out_cols;
        for (int oc = 0; oc < l.out_channels; ++oc)
            for (std::size_t i = 0; i < plane; ++i) out.data[oc * plane + i] += l.bias[oc];
    }
    return out;
}

void apply(const BatchNormLayer& l, Volume& v) {
    const std::size_t plane = static_cast<std::size_t>(v.rows) * v.cols;
    for (int c = 0; c < v.channels; ++c) {
        const double scale = l.gamma[c] / std::sqrt(static_cast<double>(l.running_var[c]) + l.eps);
        const double shift = l.beta[c] - l.running_mean[c] * scale;
        for (std::size_t i = 0; i < plane; ++i) v.data[c * plane + i] = v.data[c * plane + i] * scale + shift;
    }
}

void apply(const ActivationLayer& l, Volume& v) {
    switch (l.function) {
        case Activation::ReLU:
            for (auto& x : v.data) x = std::max(x, 0.0);
            break;
        case Activation::LeakyReLU:
            for (auto& x : v.data) x = x > 0.0 ? x : x * l.slope;
            break;
        case Activation::Tanh:
            for (auto& x : v.data) x = std::tanh(x);
            break;
    }
}

}  // namespace

namespace {

Volume run_layers(const std::vector<Layer>& layers, std::size_t count, const LatentVector& z) {
    Volume v(kLatentSize, 1, 1);
    for (int i = 0; i < kLatentSize; ++i) v.data[i] = z[i];
    for (std::size_t k = 0; k < count; ++k) {
        std::visit(
            [&](const auto& l) {
                using T = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<T, ConvTransposeLayer>) v = apply(l, v);
                else apply(l, v);
            },
            layers[k]);
    }
    return v;
}

}  // namespace

Volume forward(const GeneratorWeights& weights, const LatentVector& z) {
    return run_layers(weights.layers, weights.layers.size(), z);
}

void calibrate_batch_norm(GeneratorWeights& weights, int samples, std::uint64_t seed) {
    if (samples < 2) throw ContractViolation("batch-norm calibration needs at least two samples");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<LatentVector> batch;
    for (int s = 0; s < samples; ++s) batch.emplace_back(std::array<double, kLatentSize>{u(rng), u(rng), u(rng), u(rng), u(rng)});

    for (std::size_t k = 0; k < weights.layers.size(); ++k) {
        auto* bn = std::get_if<BatchNormLayer>(&weights.layers[k]);
        if (!bn) continue;
        std::vector<double> sum(static_cast<std::size_t>(bn->channels), 0.0), sq(sum.size(), 0.0);
        double per_channel = 0.0;
        for (const auto& z : batch) {
            const Volume v = run_layers(weights.layers, k, z);
            const std::size_t plane = static_cast<std::size_t>(v.rows) * v.cols;
            per_channel += static_cast<double>(plane);
            for (std::size_t c = 0; c < sum.size(); ++c)
                for (std::size_t i = 0; i < plane; ++i) {
                    const double x = v.data[c * plane + i];
                    sum[c] += x;
                    sq[c] += x * x;
                }
        }
        for (std::size_t c = 0; c < sum.size(); ++c) {
            const double mean = sum[c] / per_channel;
            bn->running_mean[c] = static_cast<float>(mean);
            bn->running_var[c] = static_cast<float>(std::max(sq[c] / per_channel - mean * mean, 0.0));
        }
    }
}


Segment decode_segment(const Volume& volume) {
    if (volume.channels != 12 || volume.rows != 32 || volume.cols != 32)
        throw ContractViolation("decode expects a 12x32x32 volume");
    Segment seg;
    for (int r = 0; r < kSegmentRows; ++r) {
        for (int c = 0; c < kSegmentCols; ++c) {
            int best = 0;
            for (int ch = 1; ch < volume.channels; ++ch)
                if (volume.at(ch, r, c) > volume.at(best, r, c)) best = ch;
            Tile t = static_cast<Tile>(best);
            if (t == Tile::Cannon) t = Tile::Solid;
            else if (t == Tile::Orb || t == Tile::Player) t = Tile::Air;
            seg.at(r, c) = t;
        }
    }
    return seg;
}

NeuralGenerator::NeuralGenerator(GeneratorWeights weights) : weights_(std::move(weights)) { validate_weights(weights_); }

Segment NeuralGenerator::generate(const LatentVector& z) const { return decode_segment(forward(weights_, z)); }

std::string NeuralGenerator::describe() const {
    return "neural(" + (weights_.checksum.empty() ? std::string("in-memory") : weights_.checksum.substr(0, 16)) + ")";
}

StubGenerator::StubGenerator(std::vector<Segment> library, std::string name)
    : library_(std::move(library)), name_(std::move(name)) {
    if (library_.empty()) throw ConfigError("stub generator '" + name_ + "' has an empty library");
}

std::size_t StubGenerator::index_for(double z0, std::size_t n) {
    const double scaled = std::floor((z0 + 1.0) / 2.0 * static_cast<double>(n));
    if (scaled <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(scaled), n - 1);
}

Segment StubGenerator::generate(const LatentVector& z) const { return library_[index_for(z[0], library_.size())]; }

std::string StubGenerator::describe() const { return name_ + "[" + std::to_string(library_.size()) + "]"; }

GeneratorSuite GeneratorSuite::one_gan(GeneratorPtr generator) {
    if (!generator) throw ConfigError("OneGAN suite needs a generator");
    GeneratorSuite s;
    s.mode_ = GanMode::OneGAN;
    for (auto t : kSegmentTypes) s.generators_[t] = generator;
    return s;
}

GeneratorSuite GeneratorSuite::multi_gan(std::map<SegmentType, GeneratorPtr> generators) {
    for (auto t : kSegmentTypes) {
        auto it = generators.find(t);
        if (it == generators.end() || !it->second)
            throw ConfigError("MultiGAN suite is missing a generator for " + std::string(type_name(t)));
    }
    GeneratorSuite s;
    s.mode_ = GanMode::MultiGAN;
    s.generators_ = std::move(generators);
    return s;
}

const SegmentGenerator& GeneratorSuite::generator_for(SegmentType type) const {
    auto it = generators_.find(type);
    if (it == generators_.end()) throw ConfigError("no generator for " + std::string(type_name(type)));
    return *it->second;
}

Segment GeneratorSuite::generate(SegmentType type, const LatentVector& z) const {
    return generator_for(type).generate(z);
}

GeneratorWeights make_dcgan_weights(std::uint64_t seed, int base) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<float> init(0.0f, 0.02f);
    std::normal_distribution<float> gamma_init(1.0f, 0.02f);

    GeneratorWeights w;
    auto conv = [&](int in, int out, int k, int s, int p) {
        ConvTransposeLayer c{in, out, k, s, p, {}, {}};
        c.weight.resize(static_cast<std::size_t>(in) * out * k * k);
        for (auto& v : c.weight) v = init(rng);
        w.layers.emplace_back(std::move(c));
    };
    auto norm_relu = [&](int ch) {
        BatchNormLayer b;
        b.channels = ch;
        for (int i = 0; i < ch; ++i) {
            b.gamma.push_back(gamma_init(rng));
            b.beta.push_back(0.0f);
            b.running_mean.push_back(0.0f);
            b.running_var.push_back(1.0f);
        }
        w.layers.emplace_back(std::move(b));
        w.layers.emplace_back(ActivationLayer{Activation::ReLU, 0.0});
    };
    conv(5, base * 4, 4, 1, 0);
    norm_relu(base * 4);
    conv(base * 4, base * 2, 4, 2, 1);
    norm_relu(base * 2);
    conv(base * 2, base, 4, 2, 1);
    norm_relu(base);
    conv(base, 12, 4, 2, 1);
    w.layers.emplace_back(ActivationLayer{Activation::Tanh, 0.0});
    validate_weights(w);
    calibrate_batch_norm(w, 32, seed ^ 0x9e3779b97f4a7c15ULL);
    return w;
}

}  // namespace mmgan
