#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

namespace cama {

/// Dense integer identifier tagged by the entity it names. After a corpus is
/// indexed, ids of each kind are exactly 0..count-1.
template <typename Tag>
struct DenseId {
    std::uint32_t value{};

    [[nodiscard]] constexpr std::size_t index() const noexcept { return value; }

    static constexpr DenseId from_index(std::size_t i) noexcept {
        return DenseId{static_cast<std::uint32_t>(i)};
    }

    friend constexpr auto operator<=>(DenseId, DenseId) = default;
};

struct ListenerTag;
struct SongTag;
struct ArtistTag;

using ListenerId = DenseId<ListenerTag>;
using SongId = DenseId<SongTag>;
using ArtistId = DenseId<ArtistTag>;

/// Index into the listener+song node space: listeners occupy [0, n), songs
/// occupy [n, n + m).
using NodeIndex = std::size_t;

}  // namespace cama
