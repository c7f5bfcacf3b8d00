#pragma once

#include <cama/corpus.hpp>

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace cama {

/// Listener and song nodes with listener-song edges (from playlists) and
/// song-song edges (between songs sharing an artist).
///
/// Adjacency is compressed: each node's neighbors are stored sorted and
/// ascending. Edges are undirected and unweighted; there are no
/// listener-listener edges and no self-loops.
class HeteroGraph {
public:
    HeteroGraph() = default;

    [[nodiscard]] std::size_t listener_count() const noexcept { return listeners_; }
    [[nodiscard]] std::size_t song_count() const noexcept { return songs_; }
    [[nodiscard]] std::size_t node_count() const noexcept { return listeners_ + songs_; }

    [[nodiscard]] NodeIndex listener_node(ListenerId l) const noexcept { return l.index(); }
    [[nodiscard]] NodeIndex song_node(SongId s) const noexcept { return listeners_ + s.index(); }
    [[nodiscard]] bool is_listener(NodeIndex node) const noexcept { return node < listeners_; }
    [[nodiscard]] SongId song_at(NodeIndex node) const noexcept { return SongId::from_index(node - listeners_); }

    [[nodiscard]] std::span<const NodeIndex> neighbors(NodeIndex node) const;
    [[nodiscard]] std::size_t degree(NodeIndex node) const { return neighbors(node).size(); }
    [[nodiscard]] bool has_edge(NodeIndex a, NodeIndex b) const;

    [[nodiscard]] std::size_t listener_song_edge_count() const noexcept { return ls_edges_; }
    [[nodiscard]] std::size_t song_song_edge_count() const noexcept { return ss_edges_; }

    friend HeteroGraph build_graph(const Corpus& corpus);

private:
    std::size_t listeners_ = 0;
    std::size_t songs_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeIndex> adjacency_;
    std::size_t ls_edges_ = 0;
    std::size_t ss_edges_ = 0;
};

/// Unordered song pair stored with first < second.
using SongPair = std::pair<SongId, SongId>;

/// Every pair of distinct songs whose artist sets intersect, sorted.
/// Built from an artist -> songs inverted index.
[[nodiscard]] std::vector<SongPair> common_artist_pairs(const Corpus& corpus);

[[nodiscard]] HeteroGraph build_graph(const Corpus& corpus);

struct DegreeBucket {
    std::size_t listeners = 0;
    std::size_t songs = 0;
};

/// degree -> node counts by kind
[[nodiscard]] std::map<std::size_t, DegreeBucket> degree_histogram(const HeteroGraph& graph);

}  // namespace cama
