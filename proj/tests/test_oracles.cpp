#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "macforge/cubical.hpp"
#include "macforge/enumerate.hpp"
#include "macforge/gw.hpp"
#include "macforge/io.hpp"
#include "macforge/koszul.hpp"
#include "macforge/motivic.hpp"
#include "macforge/random_complex.hpp"
#include "macforge/splitting.hpp"

using namespace macforge;

namespace {

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2{0, {Int(2)}};

/// Drop trailing trivial groups so vectors of different nominal length
/// compare by content.
std::vector<AbelianGroup> trimmed(std::vector<AbelianGroup> groups) {
    while (!groups.empty() && groups.back().is_trivial()) groups.pop_back();
    return groups;
}

/// Unreduced groups from reduced ones for a nonempty space:
/// H_0 = Z^{1 + rank H̃_0} and H_i = H̃_i above.
std::vector<AbelianGroup> unreduced_from(const std::vector<AbelianGroup>& reduced) {
    std::vector<AbelianGroup> out = reduced;
    if (out.empty()) out.push_back(AbelianGroup::trivial());
    out[0].rank += 1;
    return out;
}

long long alternating_rank_sum(const std::vector<AbelianGroup>& groups) {
    long long chi = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
        chi += (i % 2 == 0) ? groups[i].rank : -groups[i].rank;
    return chi;
}

std::vector<std::size_t> basis_sizes(const KoszulStrand& strand) {
    std::vector<std::size_t> sizes;
    for (const auto& basis : strand.bases) sizes.push_back(basis.size());
    return sizes;
}

}  // namespace

TEST_CASE("cubical model of two points is a circle") {
    const SimplicialComplex K = disjoint_points(2);
    const ChainComplex cells = cubical_complex_real_mac(K);

    // Four corners of the square joined by the four boundary edges.
    CHECK(cells.top_degree() == 1);
    CHECK(cells.dim(0) == 4);
    CHECK(cells.dim(1) == 4);
    CHECK(cells.euler_characteristic() == 0);

    CHECK(trimmed(cubical_homology(K)) == std::vector<AbelianGroup>{Z, Z});
}

TEST_CASE("cubical model of the square is a torus") {
    const SimplicialComplex K = square_complex();
    const ChainComplex cells = cubical_complex_real_mac(K);

    // One vertex count per face size: 16 + 4·8 + 4·4 cells.
    CHECK(cells.dim(0) == 16);
    CHECK(cells.dim(1) == 32);
    CHECK(cells.dim(2) == 16);
    CHECK(cells.euler_characteristic() == 0);

    CHECK(trimmed(cubical_homology(K)) ==
          std::vector<AbelianGroup>{Z, AbelianGroup::free(2), Z});
}

TEST_CASE("cubical model frozen values") {
    // A single simplex gives a contractible product of intervals.
    CHECK(trimmed(cubical_homology(full_simplex(1))) == std::vector<AbelianGroup>{Z});
    CHECK(trimmed(cubical_homology(full_simplex(3))) == std::vector<AbelianGroup>{Z});

    // Three isolated points: wedge-like 1-complex with b_1 = 5.
    CHECK(trimmed(cubical_homology(disjoint_points(3))) ==
          std::vector<AbelianGroup>{Z, AbelianGroup::free(5)});

    // The real model of ∂Δ^{m-1} is S^{m-1}; here m = 4.
    CHECK(trimmed(cubical_homology(boundary_of_simplex(4))) ==
          std::vector<AbelianGroup>{Z, AbelianGroup::trivial(), AbelianGroup::trivial(), Z});

    CHECK(cubical_euler_characteristic(disjoint_points(3)) == -4);
    CHECK(cubical_euler_characteristic(square_complex()) == 0);
    CHECK(cubical_euler_characteristic(full_simplex(2)) == 1);
    CHECK(cubical_euler_characteristic(boundary_of_simplex(3)) == 2);  // S²

    // Cell enumeration is capped; the alternating count is not.
    CHECK_THROWS_AS(cubical_complex_real_mac(full_simplex(15)), validation_error);
    CHECK_THROWS_AS(cubical_homology(full_simplex(15)), validation_error);
    CHECK(cubical_euler_characteristic(full_simplex(20)) ==
          chi_classical_polyhedral(1, 2, full_simplex(20)));
}

TEST_CASE("cubical homology matches the subcomplex decomposition") {
    auto check_match = [](const SimplicialComplex& K) {
        CAPTURE(complex_to_json(K).dump());
        CHECK(trimmed(cubical_homology(K)) ==
              trimmed(unreduced_from(rzk_homology_groups(K))));
    };

    for (int m = 1; m <= 4; ++m)
        for (const SimplicialComplex& K : all_complexes_on(m)) check_match(K);
    for (std::uint64_t seed = 10; seed < 16; ++seed) check_match(random_complex(5, seed));
}

TEST_CASE("cubical model detects the torsion of the projective plane") {
    // The full subcomplex on all six vertices is RP² itself, so the
    // decomposition places its Z/2 in degree 2.  The cell-by-cell model must
    // reproduce that without ever looking at subcomplexes.
    const std::vector<AbelianGroup> reduced = rzk_homology_groups(rp2_complex());
    REQUIRE(reduced.size() >= 3);
    CHECK(reduced[2].torsion == std::vector<Int>{Int(2)});

    CHECK(trimmed(cubical_homology(rp2_complex())) == trimmed(unreduced_from(reduced)));
}

TEST_CASE("alternating cell count equals the polyhedral euler characteristic") {
    auto check_shadow = [](const SimplicialComplex& K) {
        CAPTURE(complex_to_json(K).dump());
        const long long chi = cubical_euler_characteristic(K);
        CHECK(chi == chi_classical_polyhedral(1, 2, K));
        CHECK(chi == cubical_complex_real_mac(K).euler_characteristic());
        CHECK(chi == alternating_rank_sum(cubical_homology(K)));
    };

    for (int m = 1; m <= 4; ++m)
        for (const SimplicialComplex& K : all_complexes_on(m)) check_shadow(K);
    for (std::uint64_t seed = 3; seed < 7; ++seed) check_shadow(random_complex(5, seed));
    check_shadow(rp2_complex());
}

TEST_CASE("koszul strand of the square, frozen") {
    const SimplicialComplex K = square_complex();

    SECTION("missing edge {1,2}") {
        const KoszulStrand strand = koszul_strand(K, 0b0011u);
        CHECK(strand.mask == 0b0011u);
        // x1·x2 = 0 in the face ring, so the degree-0 slot u_∅ ⊗ x1x2 is absent.
        CHECK(basis_sizes(strand) == std::vector<std::size_t>{0, 2, 1});
        CHECK(strand.differentials[1].rows() == 0);
        CHECK(strand.differentials[2].rows() == 2);
        CHECK(strand.differentials[2].cols() == 1);
        CHECK(strand.homology_rank == std::vector<long long>{0, 1, 0});
    }

    SECTION("full vertex set") {
        const KoszulStrand strand = koszul_strand(K, 0b1111u);
        CHECK(basis_sizes(strand) == std::vector<std::size_t>{0, 0, 4, 4, 1});
        // Hochster: homology at degree t is H̃^{|I|-t-1}(K_I), here H̃^1(S¹).
        CHECK(strand.homology_rank == std::vector<long long>{0, 0, 1, 0, 0});
    }

    SECTION("a face gives an exact strand") {
        const KoszulStrand strand = koszul_strand(K, 0b0101u);  // edge {1,3}
        CHECK(basis_sizes(strand) == std::vector<std::size_t>{1, 2, 1});
        CHECK(strand.homology_rank == std::vector<long long>{0, 0, 0});
    }

    SECTION("empty multidegree carries Tor_0 = k") {
        const KoszulStrand strand = koszul_strand(K, 0u);
        CHECK(basis_sizes(strand) == std::vector<std::size_t>{1});
        CHECK(strand.homology_rank == std::vector<long long>{1});
    }
}

TEST_CASE("koszul tor table frozen values") {
    BigradedTable square_table;
    square_table.add(0, 0, 1);
    square_table.add(3, 2, 2);
    square_table.add(6, 4, 1);
    CHECK(koszul_tor_ranks(square_complex()) == square_table);

    BigradedTable points_table;
    points_table.add(0, 0, 1);
    points_table.add(3, 2, 3);
    points_table.add(4, 3, 2);
    CHECK(koszul_tor_ranks(disjoint_points(3)) == points_table);

    BigradedTable simplex_table;
    simplex_table.add(0, 0, 1);
    CHECK(koszul_tor_ranks(full_simplex(3)) == simplex_table);

    BigradedTable sphere_table;  // ∂Δ⁴ realizes S³, one top class
    sphere_table.add(0, 0, 1);
    sphere_table.add(9, 5, 1);
    CHECK(koszul_tor_ranks(boundary_of_simplex(5)) == sphere_table);
}

TEST_CASE("koszul tor ranks equal the betti table") {
    // The strand route never computes subcomplex homology and the table
    // route never builds a Koszul differential, so agreement on every
    // complex through five vertices pins both gradings at once.
    long long counted = 0;
    for (int m = 1; m <= 5; ++m)
        for (const SimplicialComplex& K : all_complexes_on(m)) {
            ++counted;
            if (koszul_tor_ranks(K) != a1_betti_numbers(K)) {
                CAPTURE(complex_to_json(K).dump());
                REQUIRE(koszul_tor_ranks(K).to_string() == a1_betti_numbers(K).to_string());
            }
        }
    CHECK(counted == 7020);

    CHECK(koszul_tor_ranks(rp2_complex()) == a1_betti_numbers(rp2_complex()));
    for (std::uint64_t seed = 40; seed < 44; ++seed) {
        const SimplicialComplex K = random_complex(6, seed);
        CHECK(koszul_tor_ranks(K) == a1_betti_numbers(K));
    }
}

TEST_CASE("prime field coefficients see the torsion the rationals miss") {
    const SimplicialComplex K = rp2_complex();
    const std::uint32_t full = 0b111111u;

    // Rationally RP² is acyclic, so the full strand is exact.
    const KoszulStrand over_q = koszul_strand(K, full);
    CHECK(over_q.homology_rank == std::vector<long long>(7, 0));

    // Over F₂ both H̃¹ and H̃² light up (the class and its Bockstein image),
    // at strand degrees t = |I| - 1 - d.
    const KoszulStrand over_f2 = koszul_strand(K, full, KoszulCoefficients::prime_field, 2);
    CHECK(over_f2.homology_rank == std::vector<long long>{0, 0, 0, 1, 1, 0, 0});

    // Odd primes behave like the rationals here.
    const KoszulStrand over_f3 = koszul_strand(K, full, KoszulCoefficients::prime_field, 3);
    CHECK(over_f3.homology_rank == over_q.homology_rank);

    // All proper subcomplexes are torsion-free (torsion needs six vertices),
    // so the whole-table difference is exactly the full strand's two classes.
    BigradedTable expected = koszul_tor_ranks(K);
    expected.add(8, 6, 1);  // t = 4
    expected.add(9, 6, 1);  // t = 3
    CHECK(koszul_tor_ranks(K, KoszulCoefficients::prime_field, 2) == expected);
    CHECK(koszul_tor_ranks(K, KoszulCoefficients::prime_field, 5) == koszul_tor_ranks(K));
}

TEST_CASE("prime field coefficients on torsion-free input change nothing") {
    for (long long p : {2LL, 3LL, 7LL})
        CHECK(koszul_tor_ranks(square_complex(), KoszulCoefficients::prime_field, p) ==
              koszul_tor_ranks(square_complex()));
}

TEST_CASE("prime field oracle validates its modulus") {
    const SimplicialComplex K = square_complex();
    for (long long p : {0LL, 1LL, 4LL, 9LL, -3LL})
        CHECK_THROWS_AS(koszul_strand(K, 0b0011u, KoszulCoefficients::prime_field, p),
                        validation_error);
    // The failure also surfaces through the parallel table assembly.
    CHECK_THROWS_AS(koszul_tor_ranks(K, KoszulCoefficients::prime_field, 6), validation_error);
}
