#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <sphlab/sphlab.hpp>

using namespace sphlab;

TEST_CASE("coset counts match hand-derived values") {
    CHECK(coset_count(PrimeContext(2, 2), DominantCoweight({1, -1})) == 6);
    CHECK(coset_count(PrimeContext(3, 2), DominantCoweight({1, -1})) == 12);
    CHECK(coset_count(PrimeContext(2, 2), DominantCoweight({2, -2})) == 24);
    CHECK(coset_count(PrimeContext(2, 3), DominantCoweight({1, 0, -1})) == 42);
    CHECK(coset_count(PrimeContext(3, 3), DominantCoweight({1, 0, -1})) == 156);
    CHECK(coset_count(PrimeContext(2, 2), DominantCoweight({0, 0})) == 1);
}

TEST_CASE("index-8 sublattices of Z^3 split across three labels") {
    // 155 sublattices of index 8 in total, partitioned by elementary divisor
    // type: (8), (4,2) and (2,2,2) up to the determinant-one shift.
    PrimeContext ctx(2, 3);
    std::size_t split = coset_count(ctx, DominantCoweight({2, -1, -1})) +
                        coset_count(ctx, DominantCoweight({1, 0, -1})) +
                        coset_count(ctx, DominantCoweight({0, 0, 0}));
    CHECK(coset_count(ctx, DominantCoweight({2, -1, -1})) == 112);
    CHECK(split == 155);
}

TEST_CASE("enumeration agrees with the finite-quotient orbit oracle") {
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            PrimeContext ctx(p, n);
            for (const DominantCoweight& m : dominant_labels_up_to(n, 2)) {
                CAPTURE(p, n, m.str());
                CHECK(coset_count(ctx, m) == quotient_coset_count(ctx, m));
                CHECK(coset_count(ctx, m.inverse_label()) ==
                      quotient_coset_count(ctx, m.inverse_label()));
            }
        }
    }
    // spot checks beyond the grid
    CHECK(coset_count(PrimeContext(2, 2), DominantCoweight({2, -2})) ==
          quotient_coset_count(PrimeContext(2, 2), DominantCoweight({2, -2})));
    CHECK(coset_count(PrimeContext(2, 3), DominantCoweight({1, 1, -2})) ==
          quotient_coset_count(PrimeContext(2, 3), DominantCoweight({1, 1, -2})));
    CHECK(coset_count(PrimeContext(2, 3), DominantCoweight({2, -1, -1})) ==
          quotient_coset_count(PrimeContext(2, 3), DominantCoweight({2, -1, -1})));
}

TEST_CASE("left and right coset counts agree label by label") {
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            PrimeContext ctx(p, n);
            // Spread-3 labels at p=3, n=3 exceed the default coset cap.
            const long bound = (p == 2 || n == 2) ? 3 : 2;
            for (const DominantCoweight& m : dominant_labels_up_to(n, bound)) {
                CAPTURE(p, n, m.str());
                CHECK(delta_ratio(ctx, m) == 1);
            }
        }
    }
}

TEST_CASE("representatives are distinct and lie in the right double coset") {
    for (long p : {2L, 3L}) {
        PrimeContext ctx(p, 3);
        for (const DominantCoweight& m :
             {DominantCoweight({1, 0, -1}), DominantCoweight({1, 1, -2})}) {
            auto list = left_coset_reps(ctx, m);
            CAPTURE(p, m.str());
            CHECK(list->size() > 0);
            CHECK(reps_lie_in_double_coset(*list));
            CHECK(reps_pairwise_distinct(*list));
        }
    }
}

TEST_CASE("stored inverse-hval histogram matches the decompositions") {
    for (long p : {2L, 3L}) {
        for (int n : {2, 3}) {
            PrimeContext ctx(p, n);
            for (const DominantCoweight& m : dominant_labels_up_to(n, 2)) {
                auto list = left_coset_reps(ctx, m);
                std::map<IntVector, std::size_t> recomputed;
                for (const GroupElement& w : list->reps)
                    recomputed[iwasawa_hval(w.inverse())] += 1;
                CAPTURE(p, n, m.str());
                CHECK(recomputed == list->inverse_hval_histogram);
            }
        }
    }
}

TEST_CASE("histogram masses add up to the coset count") {
    PrimeContext ctx(2, 3);
    for (const DominantCoweight& m : dominant_labels_up_to(3, 4)) {
        auto list = left_coset_reps(ctx, m);
        std::size_t total = 0;
        for (const auto& [h, count] : list->inverse_hval_histogram) {
            CHECK(vector_sum(h) == 0);
            total += count;
        }
        CHECK(total == list->size());
    }
}

TEST_CASE("caps turn runaway enumerations into errors") {
    Limits tight;
    tight.coset_cap = 3;
    CHECK_THROWS_AS(left_coset_reps(PrimeContext(5, 2), DominantCoweight({1, -1}), tight),
                    ResourceLimitError);
    Limits starved;
    starved.candidate_cap = 2;
    CHECK_THROWS_AS(left_coset_reps(PrimeContext(5, 2), DominantCoweight({1, -1}), starved),
                    ResourceLimitError);
    // the failure is remembered: the retry throws the same error
    CHECK_THROWS_AS(left_coset_reps(PrimeContext(5, 2), DominantCoweight({1, -1}), starved),
                    ResourceLimitError);
    // a more generous cap still succeeds afterwards
    CHECK(coset_count(PrimeContext(5, 2), DominantCoweight({1, -1})) ==
          quotient_coset_count(PrimeContext(5, 2), DominantCoweight({1, -1})));
    // a cache hit honors the cap the same way a fresh enumeration would
    CHECK_THROWS_AS(left_coset_reps(PrimeContext(5, 2), DominantCoweight({1, -1}), tight),
                    ResourceLimitError);
}

TEST_CASE("rank mismatches are rejected") {
    CHECK_THROWS_AS(left_coset_reps(PrimeContext(2, 3), DominantCoweight({1, -1})),
                    DimensionMismatchError);
}

TEST_CASE("quotient oracle guards its caps") {
    Limits l;
    l.oracle_level_cap = 1;
    CHECK_THROWS_AS(quotient_coset_count(PrimeContext(2, 2), DominantCoweight({2, -2}), l),
                    ResourceLimitError);
    Limits g;
    g.oracle_group_cap = 10.0;
    CHECK_THROWS_AS(quotient_coset_count(PrimeContext(2, 2), DominantCoweight({1, -1}), g),
                    ResourceLimitError);
}

TEST_CASE("group order formula matches the enumerated lift count") {
    CHECK(sl_group_order(2, 2, 2) == 48);
    CHECK(congruence_reps(PrimeContext(2, 2), 2).size() == 48);
    CHECK(sl_group_order(2, 2, 1) == 6);
    CHECK(congruence_reps(PrimeContext(2, 2), 1).size() == 6);
    CHECK(sl_group_order(3, 2, 1) == 24);
    CHECK(congruence_reps(PrimeContext(3, 2), 1).size() == 24);
    CHECK(sl_group_order(2, 3, 2) == 43008);
}

TEST_CASE("congruence lifts are unimodular and distinct mod p^N") {
    PrimeContext ctx(3, 2);
    auto lifts = congruence_reps(ctx, 1);
    for (const GroupElement& u : lifts) CHECK(u.is_integral());
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = i + 1; j < lifts.size(); ++j) {
            bool same = true;
            for (int r = 0; r < 2 && same; ++r)
                for (int c = 0; c < 2 && same; ++c) {
                    Rational diff =
                        lifts[i].entries()(r, c) - lifts[j].entries()(r, c);
                    if (!(diff == 0)) {
                        auto v = valuation(diff, 3);
                        same = v && *v >= 1;
                    }
                }
            CHECK_FALSE(same);
        }
}
