#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "mmgan/generator.hpp"
#include "mmgan/json_io.hpp"
#include "mmgan/stub_library.hpp"
#include "support/oracles.hpp"

using namespace mmgan;

namespace {

const GeneratorWeights& small_weights() {
    static const GeneratorWeights w = make_dcgan_weights(7, 8);
    return w;
}

Volume flat_volume(double low) {
    Volume v(12, 32, 32);
    std::fill(v.data.begin(), v.data.end(), low);
    return v;
}

json fixture_json(const std::string& name) {
    return json::parse(read_text_file(std::filesystem::path(MMGAN_FIXTURE_DIR) / name));
}

}  // namespace

TEST_CASE("layer shape walk of the reference architecture") {
    const auto shapes = validate_weights(make_dcgan_weights(1));
    std::vector<VolumeShape> conv_outputs;
    const auto w = make_dcgan_weights(1);
    for (std::size_t i = 0; i < w.layers.size(); ++i)
        if (std::holds_alternative<ConvTransposeLayer>(w.layers[i])) conv_outputs.push_back(shapes[i]);
    REQUIRE(conv_outputs.size() == 4);
    CHECK(conv_outputs[0] == VolumeShape{256, 4, 4});
    CHECK(conv_outputs[1] == VolumeShape{128, 8, 8});
    CHECK(conv_outputs[2] == VolumeShape{64, 16, 16});
    CHECK(conv_outputs[3] == VolumeShape{12, 32, 32});
    CHECK(conv_transpose_extent(1, 4, 1, 0) == 4);
    CHECK(conv_transpose_extent(4, 4, 2, 1) == 8);
}

TEST_CASE("forward pass") {
    const auto& w = small_weights();
    SUBCASE("deterministic") {
        const LatentVector z;
        const Volume a = forward(w, z);
        const Volume b = forward(w, z);
        CHECK(a.channels == 12);
        CHECK(a.rows == 32);
        CHECK(a.cols == 32);
        CHECK(a.data == b.data);
    }
    SUBCASE("output strictly inside the tanh range") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int seed = 0; seed < 5; ++seed) {
            const auto w2 = make_dcgan_weights(static_cast<std::uint64_t>(seed), 4 + 4 * seed);
            const Volume v = forward(w2, LatentVector({u(rng), u(rng), u(rng), u(rng), u(rng)}));
            const auto [lo, hi] = std::minmax_element(v.data.begin(), v.data.end());
            CHECK(*lo > -1.0);
            CHECK(*hi < 1.0);
            CHECK(*hi - *lo > 0.1);  // not a constant volume
        }
    }
    SUBCASE("latent validation") {
        CHECK_THROWS_AS(LatentVector({1.5, 0, 0, 0, 0}), ContractViolation);
        const std::vector<double> four{0, 0, 0, 0};
        CHECK_THROWS_AS(LatentVector::from_span(four), ContractViolation);
    }
}

TEST_CASE("parity with the training framework") {
    const GeneratorWeights w = load_weights(std::filesystem::path(MMGAN_FIXTURE_DIR) / "parity_weights.json");
    const json cases = fixture_json("parity_cases.json");
    const auto& latents = cases.at("latents");
    const auto& outputs = cases.at("outputs");
    REQUIRE(latents.size() == 10);
    double worst = 0.0;
    for (std::size_t k = 0; k < latents.size(); ++k) {
        const auto z = LatentVector::from_span(latents[k].get<std::vector<double>>());
        const Volume v = forward(w, z);
        const auto expected = outputs[k].get<std::vector<double>>();
        REQUIRE(expected.size() == v.data.size());
        for (std::size_t i = 0; i < expected.size(); ++i) worst = std::max(worst, std::abs(expected[i] - v.data[i]));
        const Segment s = decode_segment(v);
        for (auto t : s.tiles()) {
            const int c = code_of(t);
            CHECK((c != 6 && c != 7 && c != 8 && c != 12 && c != 13));
        }
    }
    INFO("max abs deviation " << worst);
    CHECK(worst <= 1e-4);
}

TEST_CASE("segment decoding") {
    SUBCASE("solid channel everywhere") {
        Volume v = flat_volume(-1.0);
        for (int r = 0; r < 32; ++r)
            for (int c = 0; c < 32; ++c) v.at(1, r, c) = 1.0;
        CHECK(decode_segment(v) == Segment(Tile::Solid));
    }
    SUBCASE("ties go to the lower code") {
        Volume v = flat_volume(-1.0);
        v.at(4, 2, 3) = 0.5;
        v.at(10, 2, 3) = 0.5;
        v.at(5, 0, 0) = 0.9;
        v.at(2, 0, 0) = 0.9;
        const Segment s = decode_segment(v);
        CHECK(s.at(2, 3) == Tile::Breakable);
        CHECK(s.at(0, 0) == Tile::Ladder);
        CHECK(s.at(5, 5) == Tile::Air);  // all equal: code 0
    }
    SUBCASE("post filter on cannon, orb and player") {
        Volume v = flat_volume(-1.0);
        v.at(7, 4, 4) = 1.0;
        v.at(6, 5, 5) = 1.0;
        v.at(8, 6, 6) = 1.0;
        const Segment s = decode_segment(v);
        CHECK(s.at(4, 4) == Tile::Air);
        CHECK(s.at(5, 5) == Tile::Solid);
        CHECK(s.at(6, 6) == Tile::Air);
    }
    SUBCASE("only the top-left 14x16 is read") {
        Volume v = flat_volume(-1.0);
        v.at(3, 20, 20) = 1.0;
        v.at(3, 13, 15) = 1.0;
        const Segment s = decode_segment(v);
        CHECK(s.at(13, 15) == Tile::Hazard);
        CHECK(std::count(s.tiles().begin(), s.tiles().end(), Tile::Hazard) == 1);
    }
    SUBCASE("bad shape") {
        CHECK_THROWS_AS(decode_segment(Volume(11, 32, 32)), ContractViolation);
    }
}

TEST_CASE("weight file round trips and errors") {
    const auto& w = small_weights();
    SUBCASE("text and binary encodings reproduce the same forward pass") {
        const LatentVector z({0.3, -0.2, 0.9, -1.0, 0.0});
        const Volume ref = forward(w, z);
        for (auto enc : {WeightEncoding::Text, WeightEncoding::Binary}) {
            const std::string bytes = serialize_weights(w, enc);
            const GeneratorWeights back = parse_weights(bytes);
            CHECK(back.checksum == sha256_hex(bytes));
            CHECK(forward(back, z).data == ref.data);
        }
        CHECK(serialize_weights(w, WeightEncoding::Binary).substr(0, 4) == "MMGW");
    }
    SUBCASE("files on disk") {
        oracle::TempDir tmp("weights");
        save_weights(tmp.path / "g.bin", w, WeightEncoding::Binary);
        CHECK(load_weights(tmp.path / "g.bin").layers.size() == w.layers.size());
        CHECK_THROWS_AS(load_weights(tmp.path / "missing.json"), IoError);
    }
    SUBCASE("truncated parameter array names the layer") {
        json doc = json::parse(serialize_weights(w, WeightEncoding::Text));
        doc["layers"][3]["weight"].erase(doc["layers"][3]["weight"].size() - 1);
        try {
            parse_weights(doc.dump());
            FAIL("expected validation error");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("layer 3 (conv_transpose)") != std::string::npos);
        }
    }
    SUBCASE("truncated binary blob") {
        std::string bytes = serialize_weights(w, WeightEncoding::Binary);
        bytes.resize(bytes.size() - 8);
        CHECK_THROWS_AS(parse_weights(bytes), ValidationError);
    }
    SUBCASE("foreign canvas") {
        json doc = json::parse(serialize_weights(w, WeightEncoding::Text));
        doc["metadata"]["canvas"] = {16, 16};
        CHECK_THROWS_AS(parse_weights(doc.dump()), IncompatibleError);
    }
    SUBCASE("wrong tags") {
        json doc = json::parse(serialize_weights(w, WeightEncoding::Text));
        doc["version"] = 2;
        CHECK_THROWS_AS(parse_weights(doc.dump()), IncompatibleError);
        doc["format"] = "something-else";
        CHECK_THROWS_AS(parse_weights(doc.dump()), IncompatibleError);
        CHECK_THROWS_AS(parse_weights("{not json"), FormatError);
    }
    SUBCASE("missing final tanh") {
        GeneratorWeights bad = w;
        bad.layers.pop_back();
        CHECK_THROWS_AS(validate_weights(bad), ValidationError);
    }
    SUBCASE("channel mismatch between layers") {
        GeneratorWeights bad = w;
        std::get<BatchNormLayer>(bad.layers[1]).channels += 1;
        CHECK_THROWS_AS(validate_weights(bad), ValidationError);
    }
}

TEST_CASE("stub generators") {
    CHECK(StubGenerator::index_for(-1.0, 4) == 0);
    CHECK(StubGenerator::index_for(1.0, 4) == 3);
    CHECK(StubGenerator::index_for(0.0, 4) == 2);
    CHECK(StubGenerator::index_for(-0.5, 4) == 1);
    CHECK_THROWS_AS(StubGenerator({}), ConfigError);

    std::vector<Segment> lib{Segment(Tile::Air), Segment(Tile::Solid), Segment(Tile::Water), Segment(Tile::Ladder)};
    const StubGenerator stub(lib);
    CHECK(stub.generate(LatentVector({0.0, 0.4, -0.4, 1, 1})) == Segment(Tile::Water));
}

TEST_CASE("generator suites") {
    SUBCASE("onegan ignores the type") {
        const auto suite = stub_one_gan_suite();
        const LatentVector z({0.1, 0, 0, 0, 0});
        CHECK(suite.generate(SegmentType::Horizontal, z) == suite.generate(SegmentType::Up, z));
    }
    SUBCASE("multigan up segments have a full-height ladder column") {
        const auto suite = stub_multi_gan_suite();
        for (double z0 : {-1.0, -0.3, 0.2, 1.0}) {
            const Segment s = suite.generate(SegmentType::Up, LatentVector({z0, 0, 0, 0, 0}));
            bool found = false;
            for (int c = 0; c < kSegmentCols && !found; ++c) {
                bool full = true;
                for (int r = 0; r < kSegmentRows; ++r) full = full && s.at(r, c) == Tile::Ladder;
                found = full;
            }
            CHECK(found);
        }
    }
    SUBCASE("multigan dispatches by type") {
        const auto suite = stub_multi_gan_suite();
        for (auto t : kSegmentTypes) {
            const auto lib = stub_library(t);
            CHECK(suite.generate(t, LatentVector({-1, 0, 0, 0, 0})) == lib.front());
        }
    }
    SUBCASE("multigan missing a type") {
        std::map<SegmentType, GeneratorPtr> gens;
        for (auto t : kSegmentTypes)
            if (t != SegmentType::LowerLeft) gens[t] = std::make_shared<StubGenerator>(stub_library(t));
        CHECK_THROWS_AS(GeneratorSuite::multi_gan(gens), ConfigError);
    }
    SUBCASE("neural suite runs through decode") {
        const auto gen = std::make_shared<NeuralGenerator>(small_weights());
        const auto suite = GeneratorSuite::one_gan(gen);
        const LatentVector z({0.5, 0.5, -0.5, 0, 0.25});
        CHECK(suite.generate(SegmentType::Down, z) == decode_segment(forward(small_weights(), z)));
    }
}

TEST_CASE("stub libraries are clean training-style segments") {
    for (auto t : kSegmentTypes) {
        const auto lib = stub_library(t);
        CHECK(lib.size() >= 2);
        for (const auto& s : lib)
            for (auto tile : s.tiles()) CHECK(is_training_code(tile));
    }
    CHECK(stub_union_library().size() == 15);
    const auto ll = stub_library(SegmentType::LowerLeft);
    const auto lr = stub_library(SegmentType::LowerRight);
    CHECK(ll.front() == mirror_horizontal(lr.front()));
}
