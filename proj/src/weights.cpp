#include "mmgan/weights.hpp"

#include <openssl/evp.h>

#include <array>
#include <bit>
#include <cstring>
#include <iomanip>
#include <random>
#include <sstream>

#include "mmgan/corpus.hpp"
#include "mmgan/errors.hpp"
#include "mmgan/json_io.hpp"

namespace mmgan {

namespace {

constexpr std::array<char, 4> kMagic{'M', 'M', 'G', 'W'};

std::string layer_label(std::size_t index, const Layer& layer) {
    const char* kind = std::visit(
        [](const auto& l) -> const char* {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, ConvTransposeLayer>) return "conv_transpose";
            else if constexpr (std::is_same_v<T, BatchNormLayer>) return "batch_norm";
            else return "activation";
        },
        layer);
    return "layer " + std::to_string(index) + " (" + kind + ")";
}

void expect_count(const std::string& label, const char* field, std::size_t got, std::size_t want) {
    if (got != want)
        throw ValidationError(label + ": " + field + " has " + std::to_string(got) + " values, expected " +
                              std::to_string(want));
}

const char* activation_key(Activation a) {
    switch (a) {
        case Activation::ReLU: return "relu";
        case Activation::LeakyReLU: return "leaky_relu";
        case Activation::Tanh: return "tanh";
    }
    return "?";
}

Activation activation_from_key(const std::string& key, const std::string& label) {
    if (key == "relu") return Activation::ReLU;
    if (key == "leaky_relu") return Activation::LeakyReLU;
    if (key == "tanh") return Activation::Tanh;
    throw ValidationError(label + ": unknown activation '" + key + "'");
}

/// Serializes float arrays either inline or into a shared little-endian blob.
class ParamWriter {
public:
    explicit ParamWriter(WeightEncoding enc) : enc_(enc) {}

    json put(const std::vector<float>& values) {
        if (enc_ == WeightEncoding::Text) {
            json arr = json::array();
            for (float v : values) arr.push_back(v);
            return arr;
        }
        json ref = {{"offset", count_}, {"count", values.size()}};
        for (float v : values) append(v);
        return ref;
    }

    const std::string& blob() const { return blob_; }

private:
    void append(float v) {
        auto bits = std::bit_cast<std::uint32_t>(v);
        for (int i = 0; i < 4; ++i) blob_.push_back(static_cast<char>((bits >> (8 * i)) & 0xFFu));
        ++count_;
    }
    WeightEncoding enc_;
    std::string blob_;
    std::size_t count_ = 0;
};

class ParamReader {
public:
    ParamReader(WeightEncoding enc, std::string_view blob) : enc_(enc), blob_(blob) {}

    std::vector<float> get(const json& layer, const char* field, const std::string& label) const {
        if (!layer.contains(field)) throw ValidationError(label + ": missing '" + field + "'");
        const json& v = layer.at(field);
        std::vector<float> out;
        if (enc_ == WeightEncoding::Text) {
            if (!v.is_array()) throw ValidationError(label + ": '" + field + "' must be a list of numbers");
            out.reserve(v.size());
            for (const auto& x : v) {
                if (!x.is_number()) throw ValidationError(label + ": non-numeric entry in '" + field + "'");
                out.push_back(x.get<float>());
            }
            return out;
        }
        if (!v.is_object() || !v.contains("offset") || !v.contains("count"))
            throw ValidationError(label + ": '" + field + "' must reference the blob with offset/count");
        const auto offset = v.at("offset").get<std::size_t>();
        const auto count = v.at("count").get<std::size_t>();
        const std::size_t avail = blob_.size() / 4;
        if (offset > avail || count > avail - offset)
            throw ValidationError(label + ": '" + field + "' is truncated (blob holds " + std::to_string(avail) +
                                  " floats, need " + std::to_string(offset + count) + ")");
        out.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::uint32_t bits = 0;
            for (int b = 0; b < 4; ++b)
                bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(blob_[(offset + i) * 4 + b])) << (8 * b);
            out[i] = std::bit_cast<float>(bits);
        }
        return out;
    }

private:
    WeightEncoding enc_;
    std::string_view blob_;
};

std::uint64_t read_le(std::string_view bytes, std::size_t pos, int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
    return v;
}

void write_le(std::string& out, std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

int get_int(const json& j, const char* key, const std::string& label) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ValidationError(label + ": missing integer '" + key + "'");
    return j.at(key).get<int>();
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("internal", "sha256 digest failed");
    std::ostringstream ss;
    for (unsigned i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return ss.str();
}

std::vector<VolumeShape> validate_weights(const GeneratorWeights& w) {
    const auto& m = w.metadata;
    if (m.latent_size != 5)
        throw IncompatibleError("latent size " + std::to_string(m.latent_size) + " is not supported (expected 5)");
    if (m.channels != 12)
        throw IncompatibleError("channel count " + std::to_string(m.channels) + " is not supported (expected 12)");
    if (m.canvas_rows != 32 || m.canvas_cols != 32)
        throw IncompatibleError("canvas " + std::to_string(m.canvas_rows) + "x" + std::to_string(m.canvas_cols) +
                                " is not supported (expected 32x32)");
    if (m.crop_rows != 14 || m.crop_cols != 16)
        throw IncompatibleError("crop " + std::to_string(m.crop_rows) + "x" + std::to_string(m.crop_cols) +
                                " is not supported (expected 14x16)");
    if (w.layers.empty()) throw ValidationError("generator has no layers");

    std::vector<VolumeShape> shapes;
    VolumeShape cur{m.latent_size, 1, 1};
    for (std::size_t i = 0; i < w.layers.size(); ++i) {
        const auto label = layer_label(i, w.layers[i]);
        std::visit(
            [&](const auto& l) {
                using T = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<T, ConvTransposeLayer>) {
                    if (l.in_channels != cur.channels)
                        throw ValidationError(label + ": expects " + std::to_string(l.in_channels) +
                                              " input channels, previous layer yields " + std::to_string(cur.channels));
                    if (l.kernel <= 0 || l.stride <= 0 || l.padding < 0 || l.out_channels <= 0)
                        throw ValidationError(label + ": invalid kernel/stride/padding/out_channels");
                    expect_count(label, "weight", l.weight.size(),
                                 static_cast<std::size_t>(l.in_channels) * l.out_channels * l.kernel * l.kernel);
                    if (!l.bias.empty()) expect_count(label, "bias", l.bias.size(), static_cast<std::size_t>(l.out_channels));
                    VolumeShape next{l.out_channels, conv_transpose_extent(cur.rows, l.kernel, l.stride, l.padding),
                                     conv_transpose_extent(cur.cols, l.kernel, l.stride, l.padding)};
                    if (next.rows <= 0 || next.cols <= 0) throw ValidationError(label + ": output extent is not positive");
                    cur = next;
                } else if constexpr (std::is_same_v<T, BatchNormLayer>) {
                    if (l.channels != cur.channels)
                        throw ValidationError(label + ": normalizes " + std::to_string(l.channels) +
                                              " channels, previous layer yields " + std::to_string(cur.channels));
                    const auto n = static_cast<std::size_t>(l.channels);
                    expect_count(label, "gamma", l.gamma.size(), n);
                    expect_count(label, "beta", l.beta.size(), n);
                    expect_count(label, "running_mean", l.running_mean.size(), n);
                    expect_count(label, "running_var", l.running_var.size(), n);
                    for (float v : l.running_var)
                        if (!(v >= 0.0f)) throw ValidationError(label + ": negative running variance");
                    if (!(l.eps > 0.0)) throw ValidationError(label + ": eps must be positive");
                }
            },
            w.layers[i]);
        shapes.push_back(cur);
    }
    const VolumeShape want{m.channels, m.canvas_rows, m.canvas_cols};
    if (!(cur == want))
        throw ValidationError("final output is " + std::to_string(cur.channels) + "x" + std::to_string(cur.rows) + "x" +
                              std::to_string(cur.cols) + ", expected 12x32x32");
    const auto* last = std::get_if<ActivationLayer>(&w.layers.back());
    if (last == nullptr || last->function != Activation::Tanh)
        throw ValidationError("last layer must be a tanh activation");
    return shapes;
}

GeneratorWeights parse_weights(const std::string& bytes, const std::string& origin) {
    WeightEncoding enc = WeightEncoding::Text;
    std::string_view header;
    std::string_view blob;
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic.data(), 4) == 0) {
        enc = WeightEncoding::Binary;
        if (bytes.size() < 16) throw ValidationError(origin + ": truncated binary header");
        const auto version = read_le(bytes, 4, 4);
        if (version != kWeightFormatVersion)
            throw IncompatibleError(origin + ": binary container version " + std::to_string(version));
        const auto hlen = read_le(bytes, 8, 8);
        if (hlen > bytes.size() - 16) throw ValidationError(origin + ": truncated binary header");
        header = std::string_view(bytes).substr(16, hlen);
        blob = std::string_view(bytes).substr(16 + hlen);
    } else {
        header = bytes;
    }

    json doc;
    try {
        doc = json::parse(header);
    } catch (const json::parse_error& e) {
        throw FormatError(origin + ": " + e.what());
    }
    if (doc.value("format", "") != kWeightFormatTag) throw IncompatibleError(origin + ": not a generator weight file");
    if (doc.value("version", 0) != kWeightFormatVersion)
        throw IncompatibleError(origin + ": unsupported format version " + std::to_string(doc.value("version", 0)));
    const std::string declared = doc.value("encoding", "text");
    if ((declared == "binary") != (enc == WeightEncoding::Binary))
        throw ValidationError(origin + ": encoding tag '" + declared + "' does not match file layout");

    GeneratorWeights w;
    const json& meta = doc.at("metadata");
    w.metadata.latent_size = get_int(meta, "latent_size", "metadata");
    w.metadata.channels = get_int(meta, "channels", "metadata");
    const auto& canvas = meta.at("canvas");
    const auto& crop = meta.at("crop");
    w.metadata.canvas_rows = canvas.at(0).get<int>();
    w.metadata.canvas_cols = canvas.at(1).get<int>();
    w.metadata.crop_rows = crop.at(0).get<int>();
    w.metadata.crop_cols = crop.at(1).get<int>();

    const ParamReader params(enc, blob);
    const json& layers = doc.at("layers");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const json& l = layers[i];
        const std::string kind = l.value("kind", "");
        const std::string label = "layer " + std::to_string(i) + " (" + kind + ")";
        if (kind == "conv_transpose") {
            ConvTransposeLayer c;
            c.in_channels = get_int(l, "in_channels", label);
            c.out_channels = get_int(l, "out_channels", label);
            c.kernel = get_int(l, "kernel", label);
            c.stride = get_int(l, "stride", label);
            c.padding = get_int(l, "padding", label);
            c.weight = params.get(l, "weight", label);
            if (l.contains("bias") && !l.at("bias").is_null()) c.bias = params.get(l, "bias", label);
            w.layers.emplace_back(std::move(c));
        } else if (kind == "batch_norm") {
            BatchNormLayer b;
            b.channels = get_int(l, "channels", label);
            b.eps = l.value("eps", 1e-5);
            b.gamma = params.get(l, "gamma", label);
            b.beta = params.get(l, "beta", label);
            b.running_mean = params.get(l, "running_mean", label);
            b.running_var = params.get(l, "running_var", label);
            w.layers.emplace_back(std::move(b));
        } else if (kind == "activation") {
            ActivationLayer a;
            a.function = activation_from_key(l.value("function", ""), label);
            a.slope = l.value("slope", 0.2);
            w.layers.emplace_back(a);
        } else {
            throw ValidationError(label + ": unknown layer kind");
        }
    }
    try {
        validate_weights(w);
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    } catch (const IncompatibleError& e) {
        throw IncompatibleError(origin + ": " + e.what());
    }
    w.checksum = sha256_hex(bytes);
    return w;
}

GeneratorWeights load_weights(const std::filesystem::path& file) {
    return parse_weights(read_text_file(file), file.string());
}

std::string serialize_weights(const GeneratorWeights& w, WeightEncoding encoding) {
    ParamWriter params(encoding);
    json doc;
    doc["format"] = kWeightFormatTag;
    doc["version"] = kWeightFormatVersion;
    doc["encoding"] = encoding == WeightEncoding::Binary ? "binary" : "text";
    const auto& m = w.metadata;
    doc["metadata"] = {{"latent_size", m.latent_size},
                       {"channels", m.channels},
                       {"canvas", {m.canvas_rows, m.canvas_cols}},
                       {"crop", {m.crop_rows, m.crop_cols}}};
    json layers = json::array();
    for (const auto& layer : w.layers) {
        std::visit(
            [&](const auto& l) {
                using T = std::decay_t<decltype(l)>;
                json j;
                if constexpr (std::is_same_v<T, ConvTransposeLayer>) {
                    j = {{"kind", "conv_transpose"}, {"in_channels", l.in_channels}, {"out_channels", l.out_channels},
                         {"kernel", l.kernel},       {"stride", l.stride},           {"padding", l.padding}};
                    j["weight"] = params.put(l.weight);
                    j["bias"] = l.bias.empty() ? json(nullptr) : params.put(l.bias);
                } else if constexpr (std::is_same_v<T, BatchNormLayer>) {
                    j = {{"kind", "batch_norm"}, {"channels", l.channels}, {"eps", l.eps}};
                    j["gamma"] = params.put(l.gamma);
                    j["beta"] = params.put(l.beta);
                    j["running_mean"] = params.put(l.running_mean);
                    j["running_var"] = params.put(l.running_var);
                } else {
                    j = {{"kind", "activation"}, {"function", activation_key(l.function)}};
                    if (l.function == Activation::LeakyReLU) j["slope"] = l.slope;
                }
                layers.push_back(std::move(j));
            },
            layer);
    }
    doc["layers"] = std::move(layers);

    if (encoding == WeightEncoding::Text) return doc.dump() + "\n";
    const std::string header = doc.dump();
    std::string out(kMagic.begin(), kMagic.end());
    write_le(out, kWeightFormatVersion, 4);
    write_le(out, header.size(), 8);
    out += header;
    out += params.blob();
    return out;
}

void save_weights(const std::filesystem::path& file, const GeneratorWeights& w, WeightEncoding encoding) {
    write_text_file(file, serialize_weights(w, encoding));
}

}  // namespace mmgan
