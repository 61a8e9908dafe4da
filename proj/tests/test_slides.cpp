#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "lrmosaic/partition.hpp"
#include "lrmosaic/schur.hpp"
#include "lrmosaic/slides.hpp"
#include "lrmosaic/tableau.hpp"

using namespace lrm;

TEST_CASE("forward and reverse slides are mutually inverse") {
    for (int n = 2; n <= 4; n++) {
        for (int d = 0; d <= n; d++) {
            BoxParams box{d, n};
            auto parts = partitions_in_box(box);
            for (const auto& lam : parts) {
                for (const auto& mu : parts) {
                    if (!lam.contains(mu)) continue;
                    for (const auto& t : enumerate_lr(SkewShape(lam, mu), box.d)) {
                        for (Cell c : inner_corners(t.shape)) {
                            Cell vac;
                            LRTableau s = schuetzenberger_slide_forward(t, c, &vac);
                            REQUIRE(s.shape.cell_count() == t.shape.cell_count());
                            REQUIRE(s.content() == t.content());
                            Cell back;
                            LRTableau u = schuetzenberger_slide_reverse(s, vac, &back);
                            REQUIRE(back == c);
                            REQUIRE(u == t);
                        }
                        for (Cell c : outer_corners(t.shape)) {
                            Cell vac;
                            LRTableau s = schuetzenberger_slide_reverse(t, c, &vac);
                            REQUIRE(s.content() == t.content());
                            Cell back;
                            LRTableau u = schuetzenberger_slide_forward(s, vac, &back);
                            REQUIRE(back == c);
                            REQUIRE(u == t);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("rectification of an LR tableau is the superstandard tableau of its content") {
    for (int n = 2; n <= 4; n++) {
        for (int d = 0; d <= n; d++) {
            BoxParams box{d, n};
            auto parts = partitions_in_box(box);
            for (const auto& lam : parts) {
                for (const auto& mu : parts) {
                    if (!lam.contains(mu)) continue;
                    for (const auto& t : enumerate_lr(SkewShape(lam, mu), box.d)) {
                        LRTableau r = rectify(t);
                        REQUIRE(r.shape.inner == Partition{});
                        REQUIRE(r == superstandard(t.content()));
                    }
                }
            }
        }
    }
}

TEST_CASE("slides preserve semistandardness and the lattice property") {
    BoxParams box{3, 6};
    Partition lam{{3, 2, 1}}, mu{{1, 1}};
    auto ts = enumerate_lr(SkewShape(lam, mu), box.d);
    REQUIRE(!ts.empty());
    for (const auto& t : ts) {
        for (Cell c : inner_corners(t.shape)) REQUIRE(validate_lr(schuetzenberger_slide_forward(t, c)));
        for (Cell c : outer_corners(t.shape)) REQUIRE(validate_lr(schuetzenberger_slide_reverse(t, c)));
    }
}

TEST_CASE("rotation transform: sanity on small cases") {
    SECTION("empty filling on a straight inner shape gives the superstandard complement") {
        BoxParams box{2, 4};
        Partition sigma{{2, 1}};
        LRTableau f{SkewShape(sigma, sigma)};
        LRTableau g = rotate_transform_tableau(f, box);
        REQUIRE(g == superstandard(sigma.complement(box)));
    }
    SECTION("two boxes in a 2x2 box") {
        // f: shape (2,1)/(1), both entries 1 (content (2)); the transform has
        // outer (1)^c = (2,1), content (2,1)^c = (1), inner (2)
        BoxParams box{2, 4};
        LRTableau f{SkewShape(Partition{{2, 1}}, Partition{{1}})};
        f.entry_ref(0, 1) = 1;
        f.entry_ref(1, 0) = 1;
        LRTableau g = rotate_transform_tableau(f, box);
        REQUIRE(g.shape == SkewShape(Partition{{2, 1}}, Partition{{2}}));
        REQUIRE(g.entry(1, 0) == 1);
    }
}

TEST_CASE("rotation transform cycles boundary data and has period three") {
    for (int n = 2; n <= 5; n++) {
        for (int d = 0; d <= n; d++) {
            BoxParams box{d, n};
            auto parts = partitions_in_box(box);
            for (const auto& lam : parts) {
                for (const auto& mu : parts) {
                    if (!lam.contains(mu)) continue;
                    for (const auto& t : enumerate_lr(SkewShape(lam, mu), box.d)) {
                        LRTableau g = rotate_transform_tableau(t, box);
                        REQUIRE(validate_lr(g));
                        REQUIRE(g.shape.outer == mu.complement(box));
                        REQUIRE(g.content() == lam.complement(box));
                        REQUIRE(g.shape.inner == t.content());
                        LRTableau h = rotate_transform_tableau(g, box);
                        LRTableau back = rotate_transform_tableau(h, box);
                        REQUIRE(back == t);
                    }
                }
            }
        }
    }
}
