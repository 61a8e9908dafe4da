#include <catch2/catch_amalgamated.hpp>
#include <lrmosaic/migrate.hpp>
#include <lrmosaic/mosaic.hpp>

#include <map>
#include <set>

using namespace lrm;

namespace {

// every mosaic for every boundary triple in the box
std::vector<Mosaic> all_mosaics(const BoxParams& box) {
    std::vector<Mosaic> all;
    auto parts = partitions_in_box(box);
    for (const Partition& nu : parts)
        for (const Partition& mu : parts)
            for (const Partition& lc : parts)
                enumerate_mosaics(string_of_partition(nu, box), string_of_partition(mu, box),
                                  string_of_partition(lc, box),
                                  [&](const Mosaic& m) { all.push_back(m); });
    return all;
}

// (entry, column) key giving the standard order of a flock rhombus
std::pair<int, int> order_key(const HexRegion& reg, const Flock& F, const FlockRhombus& b) {
    auto s = slot_of(reg.nest[F.nest], b.tile);
    REQUIRE(s);
    return {b.entry, cell_of_slot(reg.nest[F.nest], F.orient, s->first, s->second).col};
}

// run `fn` on every migration of every canonical flock of every mosaic
template <class Fn>
void for_each_migration(int nmax, Fn fn) {
    for (int n = 2; n <= nmax; n++)
        for (int d = 1; d < n; d++) {
            BoxParams box{d, n};
            HexRegion reg = build_hex_region(box);
            for (const Mosaic& m0 : all_mosaics(box))
                for (int nest = 0; nest < 3; nest++) {
                    if (occupied_slots(m0.tiles, reg.nest[nest]).empty()) continue;
                    for (const Orientation& o : nest_orientations(reg.nest[nest])) {
                        Flock F = canonical_flock(reg, m0.tiles, nest, o);
                        bool ne = std::set<int>{o.dirE, o.dirN} ==
                                  std::set<int>{reg.nest[nest].dirE, reg.nest[nest].dirN};
                        Compass dirs[2] = {ne ? Compass::North : Compass::South,
                                           ne ? Compass::East : Compass::West};
                        for (Compass c : dirs) fn(reg, m0, F, c);
                    }
                }
        }
}

}  // namespace

TEST_CASE("migration is sound: lands in one nest, stays a flock, keeps content and order "
          "(n <= 4)") {
    long runs = 0;
    for_each_migration(4, [&](const HexRegion& reg, const Mosaic& m0, const Flock& F, Compass c) {
        Patch tiles = m0.tiles;
        MigrationResult res = migrate_flock(tiles, reg, F, c);
        runs++;

        // the moved tiles still tile the region edge-to-edge
        REQUIRE_NOTHROW(validate_patch_tiling(tiles, reg.poly));

        // all rhombi landed in a single nest different from the source, and
        // the result is again a flock with the same content
        REQUIRE(res.flock.nest != F.nest);
        REQUIRE(flock_is_valid(reg, res.flock));
        REQUIRE(flock_content(res.flock) == flock_content(F));
        for (const Journey& j : res.journeys) REQUIRE(j.to_nest == res.flock.nest);

        // the rhombus-by-rhombus map preserves the standard order: result
        // boxes are listed in processing order, so their keys must be
        // strictly monotone in the same sense as the input ordering
        bool fwd = c == Compass::North || c == Compass::East;
        for (size_t i = 0; i + 1 < res.flock.boxes.size(); i++) {
            auto a = order_key(reg, res.flock, res.flock.boxes[i]);
            auto b = order_key(reg, res.flock, res.flock.boxes[i + 1]);
            REQUIRE(a != b);
            REQUIRE((fwd ? b < a : a < b));
        }

        // the induced orientation is one of the landing nest's four
        auto valid = nest_orientations(reg.nest[res.flock.nest]);
        REQUIRE(std::count(valid.begin(), valid.end(), res.flock.orient) == 1);
    });
    REQUIRE(runs == 816);
}

TEST_CASE("migration is invertible: the return trip restores mosaic and flock (n <= 4)") {
    for_each_migration(4, [&](const HexRegion& reg, const Mosaic& m0, const Flock& F, Compass c) {
        Patch tiles = m0.tiles;
        MigrationResult res = migrate_flock(tiles, reg, F, c);
        Compass back = inverse_compass(F.orient, res.flock.orient, c);
        MigrationResult res2 = migrate_flock(tiles, reg, res.flock, back);

        Patch a = tiles, b = m0.tiles;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);

        REQUIRE(res2.flock.nest == F.nest);
        REQUIRE(res2.flock.orient == F.orient);
        std::map<Tile, int> before, after;
        for (const FlockRhombus& r : F.boxes) before[r.tile] = r.entry;
        for (const FlockRhombus& r : res2.flock.boxes) after[r.tile] = r.entry;
        REQUIRE(before == after);
    });
}

TEST_CASE("every journey's wake splits into two chains and later rhombi obey the "
          "midline (n <= 4)") {
    long wakes = 0, guarded = 0;
    for_each_migration(4, [&](const HexRegion& reg, const Mosaic& m0, const Flock& F, Compass c) {
        Patch tiles = m0.tiles;
        MigrationResult res = migrate_flock(tiles, reg, F, c);
        int dir_m = compass_dir(F.orient, c);

        std::vector<std::vector<Wake>> wake(res.journeys.size());
        for (size_t i = 0; i < res.journeys.size(); i++) {
            if (res.journeys[i].events.empty()) continue;
            wake[i] = wake_splits(res.journeys[i], dir_m);
            REQUIRE(!wake[i].empty());
            for (const Wake& w : wake[i]) {
                REQUIRE(!w.upper.empty());
                REQUIRE(!w.lower.empty());
                REQUIRE(w.midline.size() >= 2);
            }
            wakes++;
        }

        // Crossing property: if an earlier journey's wake on one side is
        // intact when a later rhombus starts its journey on that side of the
        // midline, the later rhombus never reaches the far side.  Straight
        // wake stretches admit several equally valid decompositions, so we
        // check that at least one of them satisfies the property against all
        // later journeys at once.
        for (size_t i = 0; i < res.journeys.size(); i++) {
            if (wake[i].empty()) continue;
            bool some_split_ok = false;
            long best_guarded = 0;
            for (const Wake& wk : wake[i]) {
                // which sign of midline_side is the upper chain's side?
                auto chain_sign = [&](const Patch& chain) {
                    for (const Tile& t : chain)
                        for (const ExactPoint& v : t.verts)
                            if (int s = midline_side(wk.midline, v)) return s;
                    return 0;
                };
                int usign = chain_sign(wk.upper);
                REQUIRE(usign != 0);
                REQUIRE(chain_sign(wk.lower) == -usign);
                std::set<Tile> upper(wk.upper.begin(), wk.upper.end());
                std::set<Tile> lower(wk.lower.begin(), wk.lower.end());
                bool ok = true;
                long pairs = 0;
                for (size_t j = i + 1; ok && j < res.journeys.size(); j++) {
                    // intactness of each side for journey j
                    bool up_ok = true, lo_ok = true;
                    for (size_t k = i + 1; k < j; k++)
                        for (const Tile& t : journey_touched(res.journeys[k])) {
                            if (upper.count(t)) up_ok = false;
                            if (lower.count(t)) lo_ok = false;
                        }
                    // which side of the midline does journey j start on?
                    int lo_side = 0, hi_side = 0;
                    for (const ExactPoint& v : res.journeys[j].start.verts) {
                        int s = usign * midline_side(wk.midline, v);
                        lo_side = std::min(lo_side, s);
                        hi_side = std::max(hi_side, s);
                    }
                    int side = (lo_side >= 0 && hi_side > 0)   ? 1
                               : (hi_side <= 0 && lo_side < 0) ? -1
                                                               : 0;
                    if (side == 0) continue;
                    if ((side > 0 && !up_ok) || (side < 0 && !lo_ok)) continue;
                    pairs++;
                    // no position along journey j pokes through to the far side
                    auto crosses = [&](const Tile& t) {
                        for (const ExactPoint& v : t.verts)
                            if (usign * midline_side(wk.midline, v) == -side) return true;
                        return false;
                    };
                    if (crosses(res.journeys[j].start)) ok = false;
                    for (const RotationEvent& ev : res.journeys[j].events)
                        if (crosses(ev.r_after)) ok = false;
                }
                if (ok) {
                    some_split_ok = true;
                    best_guarded = std::max(best_guarded, pairs);
                }
            }
            REQUIRE(some_split_ok);
            guarded += best_guarded;
        }
    });
    REQUIRE(wakes > 0);
    REQUIRE(guarded > 0);
}

TEST_CASE("packed rhombi carry a unique filling with the same content under both "
          "orientations") {
    // a staircase diagram packed in a nest of the d=5, n=9 box: its unique
    // fillings under (E,N) and (-E,-N) both have content (4,4,2,1,1)
    BoxParams box{5, 9};
    HexRegion reg = build_hex_region(box);
    Partition alpha(std::vector<int>{4, 4, 2, 1, 1});
    for (int nest = 0; nest < 3; nest++) {
        const Nest& x = reg.nest[nest];
        Orientation en{x.dirE, x.dirN};
        Orientation rev{(x.dirE + 6) % 12, (x.dirN + 6) % 12};
        // pack alpha: row t (from the nest corner) holds alpha_t rhombi
        Patch tiles;
        for (int t = 0; t < alpha.size(); t++)
            for (int u = 0; u < (int)alpha.part(t); u++) tiles.push_back(nest_slot(x, u, t));
        for (const Orientation& o : {en, rev}) {
            Flock F = canonical_flock(reg, tiles, nest, o);
            REQUIRE(flock_is_valid(reg, F));
            REQUIRE(flock_content(F) == alpha);
        }
    }
}
