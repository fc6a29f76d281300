#include "mmgan/stub_library.hpp"

#include <string>

namespace mmgan {

Segment mirror_horizontal(const Segment& seg) {
    Segment out;
    for (int r = 0; r < kSegmentRows; ++r)
        for (int c = 0; c < kSegmentCols; ++c) out.at(r, c) = seg.at(r, kSegmentCols - 1 - c);
    return out;
}

namespace {

std::vector<Segment> horizontal() {
    return {
        Segment::from_rows({
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "################",
        }),
        Segment::from_rows({
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "---####---------",
            "----------------",
            "----------------",
            "-------##-------",
            "----G--##-------",
            "################",
        }),
        Segment::from_rows({
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "-----------BB---",
            "----------------",
            "----------------",
            "----------------",
            "######HHH#######",
        }),
    };
}

std::vector<Segment> up() {
    return {
        Segment::from_rows({
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "#######||#######",
        }),
        Segment::from_rows({
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "-------||--###--",
            "-------||-------",
            "-------||-------",
            "-------||-------",
            "--###--||-------",
            "-------||-------",
            "-------||-------",
            "-------||----G--",
            "-------||--#####",
            "-------||-------",
            "#######||#######",
        }),
    };
}

std::vector<Segment> down() {
    return {
        Segment::from_rows({
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "####--------####",
        }),
        Segment::from_rows({
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "----------------",
            "###-------------",
            "----------------",
            "----------------",
            "-----------WWWW-",
            "-----------WWWW-",
            "-----------WWWW-",
            "-----------WWWW-",
            "####--------####",
        }),
    };
}

// Right-walled corners; the left-walled ones are mirror images.
std::vector<Segment> lower_right() {
    return {
        Segment::from_rows({
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "################",
        }),
        Segment::from_rows({
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-###-##",
            "-------||-----##",
            "--G----||-----##",
            "################",
        }),
    };
}

std::vector<Segment> upper_right() {
    return {
        Segment::from_rows({
            "################",
            "---------------#",
            "---------------#",
            "---------------#",
            "---------------#",
            "-------||------#",
            "#######||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
            "-------||------#",
        }),
        Segment::from_rows({
            "################",
            "################",
            "--------------##",
            "--------------##",
            "--------------##",
            "-------||-----##",
            "#######||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
            "-------||--#####",
            "-------||-----##",
            "-------||-----##",
            "-------||-----##",
        }),
    };
}

std::vector<Segment> mirrored(const std::vector<Segment>& segs) {
    std::vector<Segment> out;
    for (const auto& s : segs) out.push_back(mirror_horizontal(s));
    return out;
}

}  // namespace

std::vector<Segment> stub_library(SegmentType type) {
    switch (type) {
        case SegmentType::Horizontal: return horizontal();
        case SegmentType::Up: return up();
        case SegmentType::Down: return down();
        case SegmentType::LowerRight: return lower_right();
        case SegmentType::LowerLeft: return mirrored(lower_right());
        case SegmentType::UpperRight: return upper_right();
        case SegmentType::UpperLeft: return mirrored(upper_right());
    }
    return {};
}

std::vector<Segment> stub_union_library() {
    std::vector<Segment> all;
    for (auto t : kSegmentTypes) {
        auto lib = stub_library(t);
        all.insert(all.end(), lib.begin(), lib.end());
    }
    return all;
}

GeneratorSuite stub_multi_gan_suite() {
    std::map<SegmentType, GeneratorPtr> gens;
    for (auto t : kSegmentTypes)
        gens[t] = std::make_shared<StubGenerator>(stub_library(t), "stub-" + std::string(type_key(t)));
    return GeneratorSuite::multi_gan(std::move(gens));
}

GeneratorSuite stub_one_gan_suite() {
    return GeneratorSuite::one_gan(std::make_shared<StubGenerator>(stub_union_library(), "stub-union"));
}

}  // namespace mmgan
