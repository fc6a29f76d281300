#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace mmgan {

/// Transposed 2-D convolution. `weight` is laid out [in][out][kh][kw], the
/// same order the trainer's framework stores it in.
struct ConvTransposeLayer {
    int in_channels = 0;
    int out_channels = 0;
    int kernel = 0;
    int stride = 1;
    int padding = 0;
    std::vector<float> weight;
    std::vector<float> bias;  // empty when the layer has no bias
};

/// Batch normalization in inference mode (running statistics).
struct BatchNormLayer {
    int channels = 0;
    double eps = 1e-5;
    std::vector<float> gamma;
    std::vector<float> beta;
    std::vector<float> running_mean;
    std::vector<float> running_var;
};

enum class Activation { ReLU, LeakyReLU, Tanh };

struct ActivationLayer {
    Activation function = Activation::ReLU;
    double slope = 0.2;  // LeakyReLU only
};

using Layer = std::variant<ConvTransposeLayer, BatchNormLayer, ActivationLayer>;

struct GeneratorMetadata {
    int latent_size = 5;
    int channels = 12;
    int canvas_rows = 32;
    int canvas_cols = 32;
    int crop_rows = 14;
    int crop_cols = 16;
};

struct VolumeShape {
    int channels = 0;
    int rows = 0;
    int cols = 0;
    friend bool operator==(const VolumeShape&, const VolumeShape&) = default;
};

struct GeneratorWeights {
    GeneratorMetadata metadata;
    std::vector<Layer> layers;
    std::string checksum;  // sha256 of the file this was loaded from
};

enum class WeightEncoding { Text, Binary };

inline constexpr const char* kWeightFormatTag = "mmgan-generator";
inline constexpr int kWeightFormatVersion = 1;

/// Checks metadata compatibility and walks layer shapes from the latent
/// input to the output canvas. Returns the per-layer output shapes.
/// Throws IncompatibleError for foreign metadata and ValidationError for
/// inconsistent layers.
std::vector<VolumeShape> validate_weights(const GeneratorWeights& w);

/// Reads either encoding (detected from the leading bytes) and validates.
GeneratorWeights load_weights(const std::filesystem::path& file);

/// Parses an in-memory file image. `origin` only feeds error messages.
GeneratorWeights parse_weights(const std::string& bytes, const std::string& origin = "<memory>");

std::string serialize_weights(const GeneratorWeights& w, WeightEncoding encoding);
void save_weights(const std::filesystem::path& file, const GeneratorWeights& w, WeightEncoding encoding);

std::string sha256_hex(const std::string& bytes);

/// Transposed-convolution output extent: (in-1)*stride - 2*pad + kernel.
constexpr int conv_transpose_extent(int in, int kernel, int stride, int padding) {
    return (in - 1) * stride - 2 * padding + kernel;
}


}  // namespace mmgan
