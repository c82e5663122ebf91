#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "golod/corpus.hpp"
#include "golod/errors.hpp"
#include "golod/golod.hpp"
#include "sweep.hpp"

using golod::Coefficient;
using golod::GolodReport;
using golod::GolodWitness;
using golod::SimplicialComplex;
using golod::Simplex;
namespace corpus = golod::corpus;

namespace {

const Coefficient Z = Coefficient::integers();
const Coefficient Q = Coefficient::rationals();
const Coefficient F2 = Coefficient::prime_field(2);
const Coefficient F3 = Coefficient::prime_field(3);
const Coefficient Z4 = Coefficient::cyclic(4);

std::vector<std::string> schedule_strings(const SimplicialComplex& K, int n) {
    std::vector<std::string> out;
    for (const auto& c : golod::coefficient_schedule(K, n)) out.push_back(c.to_string());
    return out;
}

}  // namespace

TEST_CASE("coefficient schedule follows the torsion exponents") {
    CHECK(schedule_strings(corpus::moore_M(), 2) ==
          std::vector<std::string>{"Z", "Z/2", "Z/4", "Z/8"});
    SimplicialComplex w =
        golod::wedge(corpus::boundary_simplex(3), corpus::boundary_simplex(3), 1, 1);
    CHECK(schedule_strings(w, 2) == std::vector<std::string>{"Z"});
    // RP^2: H_1 = Z/2 puts the prime 2 on the schedule with cap 1+1
    CHECK(schedule_strings(corpus::rp2_6(), 2) == std::vector<std::string>{"Z", "Z/2", "Z/4"});
}

TEST_CASE("vertex breakability over fixed coefficients") {
    auto bd3 = golod::vertex_breakable(corpus::boundary_simplex(3), 2, Z);
    CHECK(bd3.breakable);
    CHECK(bd3.coker.to_string() == "Z");

    auto m4 = golod::vertex_breakable(corpus::moore_M(), 2, Z4);
    CHECK(m4.breakable);
    CHECK(m4.coker.to_string() == "Z/2");

    CHECK_FALSE(golod::vertex_breakable(corpus::moore_M(), 2, F3).breakable);
    CHECK_FALSE(golod::vertex_breakable(corpus::moore_M(), 2, F2).breakable);
    CHECK_FALSE(golod::vertex_breakable(corpus::moore_M(), 2, Z).breakable);
}

TEST_CASE("vertex breakability over some finitely generated group") {
    auto m = golod::vertex_breakable_any(corpus::moore_M(), 2);
    CHECK(m.breakable);
    REQUIRE(m.witness_coefficient.has_value());
    CHECK(m.witness_coefficient->to_string() == "Z/4");

    SimplicialComplex w =
        golod::wedge(corpus::boundary_simplex(3), corpus::boundary_simplex(3), 1, 1);
    CHECK_FALSE(golod::vertex_breakable_any(w, 2).breakable);

    auto rp2 = golod::vertex_breakable_any(corpus::rp2_6(), 2);
    CHECK(rp2.breakable);
    CHECK(rp2.witness_coefficient->to_string() == "Z/2");

    auto t7 = golod::vertex_breakable_any(corpus::torus_7(), 2);
    CHECK(t7.breakable);
    CHECK(t7.witness_coefficient->to_string() == "Z");
}

TEST_CASE("schedule cap cross-validation") {
    setenv("GOLOD_SCHEDULE_XCHECK", "1", 1);
    for (const auto& nc : corpus::all()) {
        if (nc.complex.vertex_count() < 2) continue;
        CHECK_NOTHROW(golod::vertex_breakable_any(nc.complex, 2));
    }
    unsetenv("GOLOD_SCHEDULE_XCHECK");
}

TEST_CASE("pair breakability") {
    CHECK(golod::pair_breakable(corpus::moore_M(), 1, 7, 2, Z4));
    CHECK(golod::pair_breakable(corpus::boundary_simplex(3), 1, 2, 2, Z));
    CHECK_FALSE(golod::pair_breakable(corpus::simplex(2), 1, 2, 2, Z));
    CHECK_THROWS_AS(golod::pair_breakable(corpus::simplex(2), 1, 1, 2, Z),
                    golod::OutOfRangeError);
}

TEST_CASE("edge/product criterion") {
    // the non-edge {A,d} of the Moore complex carries a nonvanishing product
    auto m = golod::edge_product_criterion(corpus::moore_M(), 1, 7, 2, Z4);
    CHECK_FALSE(m.is_edge);
    CHECK_FALSE(m.product_trivial);

    // an edge of a breakable pair has trivial product (the join is a cone)
    auto b = golod::edge_product_criterion(corpus::boundary_simplex(3), 1, 2, 2, Z);
    CHECK(b.is_edge);
    CHECK(b.product_trivial);

    CHECK_THROWS_AS(golod::edge_product_criterion(corpus::simplex(2), 1, 2, 2, Z),
                    golod::HypothesisNotMetError);
}

TEST_CASE("edge/product criterion iff, across breakable pairs") {
    // wherever the hypothesis holds, is_edge must equal product_trivial
    std::vector<std::pair<SimplicialComplex, Coefficient>> cases = {
        {corpus::moore_M(), Z4},        {corpus::moore_M(), Coefficient::cyclic(8)},
        {corpus::rp2_6(), Coefficient::cyclic(2)},
        {corpus::boundary_simplex(3), Z}, {corpus::torus_9(), Z},
    };
    int verified = 0;
    for (const auto& [K, coeff] : cases) {
        golod::HomologyCache cache;
        for (int v = 1; v <= K.vertex_count(); ++v) {
            for (int w = v + 1; w <= K.vertex_count(); ++w) {
                if (!golod::pair_breakable(K, v, w, 2, coeff, &cache)) continue;
                auto r = golod::edge_product_criterion(K, v, w, 2, coeff, &cache);
                CHECK(r.is_edge == r.product_trivial);
                ++verified;
            }
        }
    }
    CHECK(verified > 10);
}

TEST_CASE("integral Golod decision on the corpus") {
    auto M = golod::check_golod_integral_2dim(corpus::moore_M());
    CHECK(M.verdict == GolodReport::Verdict::NotGolod);
    REQUIRE(M.witness.has_value());
    CHECK(M.witness->kind == GolodWitness::Kind::BreakableNotNeighborly);
    CHECK(M.witness->subset == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(M.witness->missing_pair == std::pair<int, int>{1, 7});  // {A,d}
    REQUIRE(M.witness->breakability.has_value());
    CHECK(M.witness->breakability->witness_coefficient->to_string() == "Z/4");
    CHECK(M.witness->breakability->coker.to_string() == "Z/2");

    SimplicialComplex w =
        golod::wedge(corpus::boundary_simplex(3), corpus::boundary_simplex(3), 1, 1);
    CHECK(golod::check_golod_integral_2dim(w).golod());

    CHECK(golod::check_golod_integral_2dim(corpus::rp2_6()).golod());
    CHECK(golod::check_golod_integral_2dim(corpus::boundary_simplex(3)).golod());
    CHECK(golod::check_golod_integral_2dim(corpus::torus_7()).golod());

    auto c4 = golod::check_golod_integral_2dim(corpus::cycle(4));
    CHECK(c4.verdict == GolodReport::Verdict::NotGolod);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->kind == GolodWitness::Kind::NonChordalCycle);
    CHECK(c4.witness->cycle == std::vector<int>{1, 2, 3, 4});

    auto t9 = golod::check_golod_integral_2dim(corpus::torus_9());
    CHECK(t9.verdict == GolodReport::Verdict::NotGolod);

    CHECK_THROWS_AS(golod::check_golod_integral_2dim(corpus::simplex(3)),
                    golod::DimensionTooHighError);
}

TEST_CASE("field Golod decision") {
    CHECK(golod::check_golod_field(corpus::moore_M(), F2).golod());
    CHECK(golod::check_golod_field(corpus::moore_M(), F3).golod());
    CHECK(golod::check_golod_field(corpus::moore_M(), Q).golod());

    auto c4 = golod::check_golod_field(corpus::cycle(4), Q);
    CHECK(c4.verdict == GolodReport::Verdict::NotGolod);
    CHECK(c4.witness->kind == GolodWitness::Kind::NonChordalCycle);

    CHECK_THROWS_AS(golod::check_golod_field(corpus::moore_M(), Z), golod::Error);
}

TEST_CASE("product scan") {
    auto c4 = golod::product_scan(corpus::cycle(4), Q);
    CHECK(c4.verdict == GolodReport::Verdict::NotGolod);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->kind == GolodWitness::Kind::NonvanishingProduct);
    CHECK(c4.witness->I1 == std::vector<int>{1, 3});
    CHECK(c4.witness->I2 == std::vector<int>{2, 4});
    CHECK(c4.witness->degree == 1);

    CHECK(golod::product_scan(corpus::path(3), Q).golod());
    CHECK(golod::product_scan(corpus::path(3), F2).golod());
    CHECK(golod::product_scan(corpus::moore_M(), F2).golod());

    CHECK_THROWS_AS(golod::product_scan(corpus::simplex(4), Q), golod::DimensionTooHighError);
    // dimension 3 is allowed
    CHECK(golod::product_scan(corpus::simplex(3), Q).golod());
    CHECK(golod::product_scan(corpus::simplex(4).skeleton(3), Q).golod());
}

TEST_CASE("ring product search") {
    auto M = golod::ring_product_search(corpus::moore_M(), 4);
    CHECK(M.verdict == GolodReport::Verdict::NotGolod);
    REQUIRE(M.witness.has_value());
    CHECK(M.witness->kind == GolodWitness::Kind::NonvanishingProduct);
    CHECK(M.witness->I1 == std::vector<int>{1, 7});
    CHECK(M.witness->coefficient->to_string() == "Z/4");

    // over Z/3 the Moore complex shows no obstruction of this shape
    CHECK(golod::ring_product_search(corpus::moore_M(), 3).verdict ==
          GolodReport::Verdict::NoObstruction);
    // a Golod complex never yields one
    CHECK(golod::ring_product_search(corpus::rp2_6(), 4).verdict ==
          GolodReport::Verdict::NoObstruction);
}

TEST_CASE("bigraded Betti tables") {
    auto c4 = golod::bigraded_betti(corpus::cycle(4), Q);
    std::map<std::pair<int, std::vector<int>>, long> expect_c4 = {
        {{3, {1, 3}}, 1}, {{3, {2, 4}}, 1}, {{6, {1, 2, 3, 4}}, 1}};
    CHECK(c4.entries == expect_c4);
    auto agg = c4.aggregated();
    CHECK(agg == std::map<std::pair<int, int>, long>{{{3, 2}, 2}, {{6, 4}, 1}});

    auto bd3 = golod::bigraded_betti(corpus::boundary_simplex(3), Q);
    std::map<std::pair<int, std::vector<int>>, long> expect_bd3 = {{{7, {1, 2, 3, 4}}, 1}};
    CHECK(bd3.entries == expect_bd3);

    auto pts = golod::bigraded_betti(corpus::two_points(), Q);
    std::map<std::pair<int, std::vector<int>>, long> expect_pts = {{{3, {1, 2}}, 1}};
    CHECK(pts.entries == expect_pts);

    // join multiplicativity on the S^0 * S^0 example: the generating
    // function of C4 = S^0 * S^0 is the square of the S^0 one
    // (single entry (3, 2-set): 1) => entries (3+3, 4-set) with rank 1*1
    // plus the two (3, 2-set) entries from the factors
    CHECK(c4.total_rank(3) == 2);
    CHECK(c4.total_rank(6) == 1);
}

TEST_CASE("surface specialization: Golod iff 1-neighborly") {
    for (const char* name : {"rp2_6", "torus_7", "torus_9"}) {
        const auto* nc = corpus::find(name);
        REQUIRE(nc != nullptr);
        CHECK(corpus::is_closed_surface(nc->complex));
        bool neighborly = nc->complex.is_k_neighborly(1);
        CHECK(golod::check_golod_integral_2dim(nc->complex).golod() == neighborly);
    }
}

TEST_CASE("1-neighborly 2-complexes are Golod") {
    std::mt19937 rng(85);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 15; ++trial) {
        int m = 4 + trial % 3;
        std::vector<Simplex> fac;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) {
                fac.push_back({a, b});
                for (int c = b + 1; c <= m; ++c)
                    if (coin(rng) == 0) fac.push_back({a, b, c});
            }
        SimplicialComplex K = SimplicialComplex::from_facets(m, std::move(fac));
        REQUIRE(K.is_k_neighborly(1));
        CHECK(golod::check_golod_integral_2dim(K).golod());
    }
}

TEST_CASE("graphs: product vanishing iff chordal") {
    long checked = 0;
    sweep::enumerate_complexes(5, [&](const SimplicialComplex& K) {
        if (K.dim() <= 1) {
            bool chordal = golod::is_chordal(K).chordal;
            CHECK(golod::product_scan(K, Q).golod() == chordal);
            ++checked;
        }
        return true;
    });
    // there are exactly 52 graphs on at most 5 unlabeled vertices
    CHECK(checked == 52);
}

TEST_CASE("field characterization agrees with the product oracle (small sweep)") {
    const std::vector<Coefficient> fields = {Q, F2, F3};
    long checked = 0;
    sweep::enumerate_complexes(4, [&](const SimplicialComplex& K) {
        for (const auto& f : fields) {
            bool via_breakability = golod::check_golod_field(K, f).golod();
            bool via_products = golod::product_scan(K, f).golod();
            CHECK(via_breakability == via_products);
        }
        ++checked;
        return true;
    });
    // 27 = all 2-complexes on at most 4 unlabeled vertices
    CHECK(checked == 27);
    // corpus complexes of dimension <= 2 too
    for (const auto& nc : corpus::all()) {
        if (nc.complex.dim() > 2) continue;
        for (const auto& f : fields)
            CHECK(golod::check_golod_field(nc.complex, f).golod() ==
                  golod::product_scan(nc.complex, f).golod());
    }
}

TEST_CASE("integral Golod implies Golod over every tested field") {
    const std::vector<Coefficient> fields = {Q, F2, F3};
    sweep::enumerate_complexes(4, [&](const SimplicialComplex& K) {
        if (golod::check_golod_integral_2dim(K).golod())
            for (const auto& f : fields) CHECK(golod::check_golod_field(K, f).golod());
        return true;
    });
    for (const auto& nc : corpus::all()) {
        if (nc.complex.dim() > 2) continue;
        if (golod::check_golod_integral_2dim(nc.complex).golod())
            for (const auto& f : fields) CHECK(golod::check_golod_field(nc.complex, f).golod());
    }
}

TEST_CASE("pruning thresholds are conservative (brute force)") {
    // H_2 of any 2-complex on < 4 vertices vanishes over the whole schedule
    sweep::enumerate_complexes(3, [&](const SimplicialComplex& K) {
        if (K.vertex_count() < 2) return true;
        CHECK_FALSE(golod::vertex_breakable_any(K, 2).breakable);
        for (const auto& c : {Z4, F2, Coefficient::cyclic(6)})
            CHECK_FALSE(golod::vertex_breakable(K, 2, c).breakable);
        return true;
    });
}

TEST_CASE("NotGolod witnesses re-verify") {
    for (const char* name : {"cycle_4", "moore_M", "torus_9"}) {
        const auto* nc = corpus::find(name);
        REQUIRE(nc);
        auto rep = golod::check_golod_integral_2dim(nc->complex);
        REQUIRE(rep.verdict == GolodReport::Verdict::NotGolod);
        REQUIRE(rep.witness.has_value());
        const auto& w = *rep.witness;
        if (w.kind == GolodWitness::Kind::NonChordalCycle) {
            CHECK(golod::is_induced_cycle(nc->complex, w.cycle));
        } else {
            REQUIRE(w.kind == GolodWitness::Kind::BreakableNotNeighborly);
            // the named pair is a genuine non-edge inside I
            CHECK_FALSE(nc->complex.has_edge(w.missing_pair.first, w.missing_pair.second));
            SimplicialComplex KI = nc->complex.full_subcomplex(w.subset);
            CHECK_FALSE(KI.is_k_neighborly(1));
            // breakability over the named coefficient re-checks
            REQUIRE(w.breakability.has_value());
            auto again =
                golod::vertex_breakable(KI, 2, *w.breakability->witness_coefficient);
            CHECK(again.breakable);
            CHECK(again.coker == w.breakability->coker);
        }
    }
}
