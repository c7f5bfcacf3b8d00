#include "fixtures.hpp"

#include <cama/datagen.hpp>
#include <cama/target_selector.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace cama;
using namespace cama::testing;

namespace {

// Exhaustive oracle: std::set intersection over every unordered pair.
std::uint64_t brute_force_related_pairs(std::span<const SongId> playlist, const Corpus& c) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < playlist.size(); ++i) {
        for (std::size_t j = 0; j < playlist.size(); ++j) {
            if (j <= i) continue;
            const auto ai = c.artists(playlist[i]);
            const auto aj = c.artists(playlist[j]);
            std::set<ArtistId> si(ai.begin(), ai.end());
            std::set<ArtistId> common;
            for (ArtistId a : aj) {
                if (si.count(a)) common.insert(a);
            }
            if (!common.empty()) ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("worked example scores") {
    const auto c = example_corpus();
    const auto s = cama_scores(ListenerId{0}, c);
    CHECK(s.cama1 == Ratio{5, 10});
    CHECK(s.cama2 == Ratio{3, 5});
    CHECK(s.cama1.value() == 0.5);
    CHECK(s.cama2.value() == 0.6);
    CHECK(brute_force_related_pairs(c.playlist(ListenerId{0}), c) == 5);
    CHECK(select_targets(c, Thresholds{0.4, 0.5}) == std::vector<ListenerId>{ListenerId{0}});
}

TEST_CASE("chain counterexample passes cama1 but not cama2") {
    const auto c = chain_corpus();
    const auto s = cama_scores(ListenerId{0}, c);
    CHECK(s.cama1 == Ratio{9, 45});
    CHECK(s.cama2 == Ratio{2, 10});
    CHECK(s.cama1.exceeds(0.1));
    CHECK(select_targets(c, Thresholds{0.1, 0.5}).empty());
}

TEST_CASE("split counterexample reaches cama2 = 0.5 with low cama1") {
    const auto c = split_corpus();
    const auto s = cama_scores(ListenerId{0}, c);
    CHECK(s.cama2 == Ratio{25, 50});
    CHECK(s.cama1 == Ratio{300, 1225});
    // Exactly at the threshold is not "larger than".
    CHECK_FALSE(s.cama2.exceeds(0.5));
}

TEST_CASE("Ratio::exceeds is exact") {
    CHECK_FALSE((Ratio{1, 2}).exceeds(0.5));
    CHECK((Ratio{1, 2}).exceeds(0.49999999999999994));
    // 0.2 as a double is slightly above 1/5.
    CHECK_FALSE((Ratio{9, 45}).exceeds(0.2));
    CHECK((Ratio{9, 45}).exceeds(0.19999999999999998));
    // 0.3 as a double is slightly below 3/10.
    CHECK((Ratio{3, 10}).exceeds(0.3));
    CHECK_FALSE((Ratio{0, 7}).exceeds(0.0));
    CHECK((Ratio{1, 1000000}).exceeds(0.0));
    CHECK_FALSE((Ratio{1, 1}).exceeds(1.0));
    CHECK((Ratio{1, 1}).exceeds(5e-324));
    CHECK_FALSE((Ratio{1, 3}).exceeds(1e300));
    CHECK((Ratio{UINT64_MAX, 1}).exceeds(1e19));
    CHECK_FALSE((Ratio{UINT64_MAX, 1}).exceeds(1.9e19));
    // Agrees with long division on non-boundary values.
    for (std::uint64_t den = 1; den < 40; ++den) {
        for (std::uint64_t num = 0; num <= den; ++num) {
            for (double t : {0.05, 0.3, 0.45, 0.77, 0.99}) {
                const double v = static_cast<double>(num) / static_cast<double>(den);
                if (std::abs(v - t) > 1e-12) CHECK((Ratio{num, den}).exceeds(t) == (v > t));
            }
        }
    }
}

TEST_CASE("short playlists are ineligible") {
    const auto c = make_corpus({{0}, {0, 1}}, {{0}, {0}}, 1);
    CHECK_THROWS_AS((void)cama_scores(ListenerId{0}, c), IneligibleListener);
    const auto a = assess_listeners(c, Thresholds{0.0, 0.0});
    CHECK_FALSE(a[0].scores.has_value());
    CHECK_FALSE(a[0].selected);
    CHECK(a[1].selected);
}

TEST_CASE("thresholds of 1.0 select nobody") {
    CHECK(select_targets(generate(GenConfig{}), Thresholds{1.0, 1.0}).empty());
    CHECK(select_targets(make_corpus({{0, 1}}, {{0}, {0}}, 1), Thresholds{1.0, 1.0}).empty());
}

TEST_CASE("threshold validation") {
    CHECK_THROWS_AS((void)select_targets(example_corpus(), Thresholds{-0.1, 0.5}), ConfigError);
    CHECK_THROWS_AS((void)select_targets(example_corpus(), Thresholds{0.4, 1.5}), ConfigError);
}

TEST_CASE("properties on random playlists") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = random_corpus(rng, 40, 2);
        for (std::size_t l = 0; l < c.listener_count(); ++l) {
            const auto id = ListenerId::from_index(l);
            const auto p = c.playlist(id);
            const auto s = cama_scores(id, c);
            const std::uint64_t k = p.size();

            if (k <= 8) CHECK(s.cama1.num == brute_force_related_pairs(p, c));
            CHECK(s.cama1.den == k * (k - 1) / 2);
            CHECK(s.cama1.num <= s.cama1.den);
            CHECK(s.cama2.den == k);
            CHECK(s.cama2.num >= 1);
            CHECK(s.cama2.num <= k);

            // Order of the playlist does not matter.
            std::vector<SongId> reversed(p.rbegin(), p.rend());
            const auto r = cama_scores(reversed, c);
            CHECK(r.cama1 == s.cama1);
            CHECK(r.cama2 == s.cama2);
        }
    }
}

TEST_CASE("adding an artist never lowers cama1") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = random_corpus(rng, 30, 2);
        auto artists = c.song_artists();
        const auto song = rng.below(c.song_count());
        const auto extra = ArtistId::from_index(rng.below(c.artist_count()));
        if (std::find(artists[song].begin(), artists[song].end(), extra) != artists[song].end()) continue;
        artists[song].push_back(extra);

        std::vector<std::string> ln, sn, an;
        for (std::size_t i = 0; i < c.listener_count(); ++i) ln.push_back(c.listener_name(ListenerId::from_index(i)));
        for (std::size_t i = 0; i < c.song_count(); ++i) sn.push_back(c.song_name(SongId::from_index(i)));
        for (std::size_t i = 0; i < c.artist_count(); ++i) an.push_back(c.artist_name(ArtistId::from_index(i)));
        const Corpus richer(ln, c.playlists(), sn, artists, an);

        for (std::size_t l = 0; l < c.listener_count(); ++l) {
            const auto id = ListenerId::from_index(l);
            CHECK(cama_scores(id, richer).cama1.num >= cama_scores(id, c).cama1.num);
        }
    }
}

TEST_CASE("selection is antitone in both thresholds") {
    const auto c = generate(GenConfig{});
    std::size_t previous = c.listener_count() + 1;
    for (int i = 0; i <= 10; ++i) {
        const auto count = select_targets(c, Thresholds{i / 10.0, 0.3}).size();
        CHECK(count <= previous);
        previous = count;
    }
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const auto low = select_targets(c, Thresholds{i / 10.0, j / 10.0});
            const auto high = select_targets(c, Thresholds{std::min(1.0, (i + 1) / 10.0), j / 10.0});
            CHECK(std::includes(low.begin(), low.end(), high.begin(), high.end()));
        }
    }
}
