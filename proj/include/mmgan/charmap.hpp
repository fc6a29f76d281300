#pragma once

#include <array>
#include <optional>

#include "mmgan/tiles.hpp"

namespace mmgan {

/// Bidirectional mapping between level-text characters and tile codes.
///
/// The standard map covers the original corpus characters plus the
/// enhancement characters for water (`W`), enemies (`G`/`E` generic,
/// `w` wall, `F` flying) and the orb (`Z`). The player spawn `P` decodes to
/// air; generated levels carry their spawn as a coordinate instead.
class CharMap {
public:
    static const CharMap& standard();

    std::optional<Tile> decode(char c) const noexcept;
    char encode(Tile t) const noexcept { return encode_[static_cast<std::size_t>(t)]; }

    /// Adds or overrides a decoding. Encoding is left untouched.
    void set(char c, Tile t) noexcept { decode_[static_cast<unsigned char>(c)] = static_cast<int>(t); }

private:
    CharMap();
    std::array<int, 256> decode_{};
    std::array<char, kTileCodeCount> encode_{};
};

}  // namespace mmgan
