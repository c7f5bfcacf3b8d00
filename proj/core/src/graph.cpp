#include <cama/graph.hpp>

#include <cama/error.hpp>

#include <algorithm>

namespace cama {

std::span<const NodeIndex> HeteroGraph::neighbors(NodeIndex node) const {
    if (node >= node_count()) throw ValidationError("node index " + std::to_string(node) + " out of range");
    return std::span<const NodeIndex>(adjacency_).subspan(offsets_[node], offsets_[node + 1] - offsets_[node]);
}

bool HeteroGraph::has_edge(NodeIndex a, NodeIndex b) const {
    const auto adj = neighbors(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<SongPair> common_artist_pairs(const Corpus& corpus) {
    std::vector<std::vector<SongId>> songs_by_artist(corpus.artist_count());
    for (std::size_t s = 0; s < corpus.song_count(); ++s) {
        const auto song = SongId::from_index(s);
        for (ArtistId a : corpus.artists(song)) songs_by_artist[a.index()].push_back(song);
    }

    std::vector<SongPair> pairs;
    for (const auto& songs : songs_by_artist) {
        // songs is ascending because songs were visited in id order.
        for (std::size_t i = 0; i < songs.size(); ++i) {
            for (std::size_t j = i + 1; j < songs.size(); ++j) pairs.emplace_back(songs[i], songs[j]);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

HeteroGraph build_graph(const Corpus& corpus) {
    HeteroGraph g;
    g.listeners_ = corpus.listener_count();
    g.songs_ = corpus.song_count();

    std::vector<std::vector<NodeIndex>> adj(g.node_count());
    for (std::size_t l = 0; l < g.listeners_; ++l) {
        const auto listener = ListenerId::from_index(l);
        for (SongId s : corpus.playlist(listener)) {
            adj[g.listener_node(listener)].push_back(g.song_node(s));
            adj[g.song_node(s)].push_back(g.listener_node(listener));
            ++g.ls_edges_;
        }
    }
    for (const auto& [a, b] : common_artist_pairs(corpus)) {
        adj[g.song_node(a)].push_back(g.song_node(b));
        adj[g.song_node(b)].push_back(g.song_node(a));
        ++g.ss_edges_;
    }

    g.offsets_.assign(1, 0);
    g.offsets_.reserve(adj.size() + 1);
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        g.adjacency_.insert(g.adjacency_.end(), row.begin(), row.end());
        g.offsets_.push_back(g.adjacency_.size());
    }
    return g;
}

std::map<std::size_t, DegreeBucket> degree_histogram(const HeteroGraph& graph) {
    std::map<std::size_t, DegreeBucket> histogram;
    for (NodeIndex v = 0; v < graph.node_count(); ++v) {
        auto& bucket = histogram[graph.degree(v)];
        if (graph.is_listener(v)) {
            ++bucket.listeners;
        } else {
            ++bucket.songs;
        }
    }
    return histogram;
}

}  // namespace cama
