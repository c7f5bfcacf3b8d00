#include <cama/target_selector.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace cama {

namespace {

__extension__ typedef unsigned __int128 u128;

int bit_width(u128 x) {
    const auto high = static_cast<std::uint64_t>(x >> 64);
    if (high != 0) return 64 + static_cast<int>(std::bit_width(high));
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(x)));
}

}  // namespace

bool Ratio::exceeds(double threshold) const noexcept {
    if (std::isnan(threshold)) return false;
    if (threshold < 0.0) return true;
    if (threshold == 0.0) return num > 0;
    if (std::isinf(threshold) || num == 0) return false;

    // threshold = mantissa * 2^(exp - 53) with an integral 53-bit mantissa,
    // so num/den > threshold  <=>  num * 2^(53 - exp) > mantissa * den.
    int exp = 0;
    const double fraction = std::frexp(threshold, &exp);
    const auto mantissa = static_cast<std::uint64_t>(std::ldexp(fraction, 53));
    const u128 rhs = static_cast<u128>(mantissa) * den;  // < 2^117
    const u128 lhs = num;
    const int shift = 53 - exp;

    if (shift >= 0) {
        if (bit_width(lhs) + shift > 117) return true;
        return (lhs << shift) > rhs;
    }
    if (bit_width(rhs) - shift > 64) return false;  // rhs * 2^-shift >= 2^64 > num
    return lhs > (rhs << -shift);
}

void Thresholds::validate() const {
    for (double t : {cama1, cama2}) {
        if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("thresholds must lie in [0, 1]");
    }
}

namespace {

bool share_artist(std::span<const ArtistId> a, std::span<const ArtistId> b) {
    for (ArtistId x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    }
    return false;
}

}  // namespace

CamaScores cama_scores(std::span<const SongId> playlist, const Corpus& corpus) {
    const std::size_t k = playlist.size();
    if (k < 2) {
        throw IneligibleListener("cama scores need at least two songs, playlist has " +
                                 std::to_string(k));
    }

    std::uint64_t related_pairs = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto artists_i = corpus.artists(playlist[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            if (share_artist(artists_i, corpus.artists(playlist[j]))) ++related_pairs;
        }
    }

    std::unordered_map<std::uint32_t, std::uint64_t> occurrences;
    std::uint64_t most_frequent = 0;
    for (SongId s : playlist) {
        for (ArtistId a : corpus.artists(s)) {
            most_frequent = std::max(most_frequent, ++occurrences[a.value]);
        }
    }

    const std::uint64_t k64 = k;
    return CamaScores{Ratio{related_pairs, k64 * (k64 - 1) / 2}, Ratio{most_frequent, k64}};
}

CamaScores cama_scores(ListenerId listener, const Corpus& corpus) {
    if (listener.index() >= corpus.listener_count()) {
        throw ValidationError("listener id " + std::to_string(listener.value) + " out of range");
    }
    return cama_scores(corpus.playlist(listener), corpus);
}

bool is_target(const CamaScores& scores, const Thresholds& thresholds) {
    return scores.cama1.exceeds(thresholds.cama1) && scores.cama2.exceeds(thresholds.cama2);
}

std::vector<ListenerAssessment> assess_listeners(const Corpus& corpus, const Thresholds& thresholds) {
    thresholds.validate();
    std::vector<ListenerAssessment> out;
    out.reserve(corpus.listener_count());
    for (std::size_t l = 0; l < corpus.listener_count(); ++l) {
        ListenerAssessment entry{ListenerId::from_index(l), std::nullopt, false};
        if (corpus.playlist(entry.listener).size() >= 2) {
            entry.scores = cama_scores(entry.listener, corpus);
            entry.selected = is_target(*entry.scores, thresholds);
        }
        out.push_back(entry);
    }
    return out;
}

std::vector<ListenerId> select_targets(const Corpus& corpus, const Thresholds& thresholds) {
    std::vector<ListenerId> targets;
    for (const auto& entry : assess_listeners(corpus, thresholds)) {
        if (entry.selected) targets.push_back(entry.listener);
    }
    return targets;
}

}  // namespace cama
