#include "mmgan/charmap.hpp"

namespace mmgan {

CharMap::CharMap() {
    decode_.fill(-1);
    auto both = [this](char c, Tile t) {
        set(c, t);
        encode_[static_cast<std::size_t>(t)] = c;
    };
    both('-', Tile::Air);
    both('#', Tile::Solid);
    both('|', Tile::Ladder);
    both('H', Tile::Hazard);
    both('B', Tile::Breakable);
    both('M', Tile::MovingPlatform);
    both('C', Tile::Cannon);
    both('Z', Tile::Orb);
    both('@', Tile::Null);
    both('W', Tile::Water);
    both('G', Tile::Enemy);
    both('w', Tile::WallEnemy);
    both('F', Tile::FlyingEnemy);
    both('P', Tile::Player);
    set('P', Tile::Air);  // spawn points are stripped on input
    set('E', Tile::Enemy);
}

const CharMap& CharMap::standard() {
    static const CharMap map;
    return map;
}

std::optional<Tile> CharMap::decode(char c) const noexcept {
    int v = decode_[static_cast<unsigned char>(c)];
    if (v < 0) return std::nullopt;
    return static_cast<Tile>(v);
}

}  // namespace mmgan
