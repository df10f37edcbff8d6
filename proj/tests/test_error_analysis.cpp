#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homcode/builders.hpp"
#include "homcode/dense_sim.hpp"
#include "homcode/error_analysis.hpp"
#include "homcode/errors.hpp"
#include "homcode/homology.hpp"
#include "homcode/smith.hpp"
#include "oracles.hpp"

using namespace homcode;

namespace {

ErrorConfig random_error(const HomologicalCode& code, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> value(0, code.modulus() - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    ErrorConfig e;
    e.d = code.modulus();
    e.x_part.degree = code.degree();
    e.z_part.degree = code.degree();
    for (const auto& site : code.sites()) {
        if (coin(rng) == 0) e.x_part.add(site, value(rng));
        if (coin(rng) == 0) e.z_part.add(site, value(rng));
    }
    e.x_part.reduce_mod(e.d);
    e.z_part.reduce_mod(e.d);
    return e;
}

} // namespace

TEST_CASE("syndromes of boundaries are empty, single errors break two checks") {
    auto code = build_code(builders::torus_grid(2, 2), 1, 2);

    ErrorConfig boundary_error;
    boundary_error.d = 2;
    boundary_error.x_part.degree = 1;
    for (const auto& e : code.complex().cell("f000_000").boundary)
        boundary_error.x_part.add(e.cell, e.sign);
    boundary_error.x_part.reduce_mod(2);
    boundary_error.z_part.degree = 1;
    CHECK(syndrome(code, boundary_error).empty());

    ErrorConfig single;
    single.d = 2;
    single.x_part.degree = 1;
    single.z_part.degree = 1;
    single.x_part.add("h000_000", 1);
    auto s = syndrome(code, single);
    CHECK(s.v_violations.size() == 2);
    CHECK(s.p_violations.empty());

    // a logical representative has empty syndrome but a nontrivial class
    ErrorConfig logical;
    logical.d = 2;
    logical.x_part = code.x_logical_chains().front();
    logical.z_part.degree = 1;
    CHECK(syndrome(code, logical).empty());
    CHECK_FALSE(is_boundary(logical.x_part, code.complex(), 2));

    // z-part errors break the face checks
    ErrorConfig zerr;
    zerr.d = 2;
    zerr.x_part.degree = 1;
    zerr.z_part.degree = 1;
    zerr.z_part.add("h000_000", 1);
    auto sz = syndrome(code, zerr);
    CHECK(sz.v_violations.empty());
    CHECK(sz.p_violations.size() == 2);
}

TEST_CASE("syndrome equals the commutation exponent with each check") {
    std::mt19937_64 rng(2024);
    for (std::int64_t d : {2, 3}) {
        auto code = build_code(builders::torus_grid(2, 2), 1, d);
        for (int t = 0; t < 25; ++t) {
            ErrorConfig e = random_error(code, rng);
            auto s = syndrome(code, e);
            QuditPauliOperator err(d);
            for (const auto& [cell, v] : e.x_part.coeffs)
                err.multiply_x(cell, static_cast<std::int64_t>(v));
            for (const auto& [cell, v] : e.z_part.coeffs)
                err.multiply_z(cell, static_cast<std::int64_t>(v));
            for (const auto& [alpha, check] : code.v_stabilizers()) {
                std::int64_t expected = symplectic_phase(check, err);
                auto it = s.v_violations.find(alpha);
                CHECK((it == s.v_violations.end() ? 0 : it->second) == expected);
            }
            for (const auto& [gamma, check] : code.p_stabilizers()) {
                std::int64_t expected = symplectic_phase(err, check);
                auto it = s.p_violations.find(gamma);
                CHECK((it == s.p_violations.end() ? 0 : it->second) == expected);
            }
        }
    }
}

TEST_CASE("syndrome is additive") {
    std::mt19937_64 rng(555);
    for (std::int64_t d : {2, 3}) {
        auto code = build_code(builders::torus_grid(2, 2), 1, d);
        for (int t = 0; t < 20; ++t) {
            ErrorConfig a = random_error(code, rng), b = random_error(code, rng);
            auto sum = syndrome(code, a.plus(b));
            auto sa = syndrome(code, a);
            auto sb = syndrome(code, b);
            for (const auto& alpha : code.complex().cells_of_dim(0)) {
                auto get = [&](const Syndrome& s) {
                    auto it = s.v_violations.find(alpha);
                    return it == s.v_violations.end() ? 0 : it->second;
                };
                CHECK(get(sum) == (get(sa) + get(sb)) % d);
            }
        }
    }
}

TEST_CASE("decomposition: pinned small cases") {
    auto code3 = build_code(builders::torus_grid(2, 2), 1, 3);

    // single degree-1 error: one component whose erb is the cell boundary
    ErrorConfig single;
    single.d = 3;
    single.x_part.degree = 1;
    single.z_part.degree = 1;
    single.x_part.add("h000_000", 1);
    auto comps = decompose_error(code3, single);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].kind == ErrorComponent::Kind::V);
    CHECK(comps[0].support.size() == 1);
    auto s = syndrome(code3, single);
    CHECK(comps[0].erb.size() == s.v_violations.size());

    // two adjacent errors whose contributions cancel at the shared vertex:
    // one two-cell component, interior check unviolated
    ErrorConfig pair;
    pair.d = 3;
    pair.x_part.degree = 1;
    pair.z_part.degree = 1;
    pair.x_part.add("h000_000", 1);
    pair.x_part.add("h001_000", 1); // same row, consecutive in x
    auto pcomps = decompose_error(code3, pair);
    REQUIRE(pcomps.size() == 1);
    CHECK(pcomps[0].support.size() == 2);
    auto ps = syndrome(code3, pair);
    for (const auto& [cell, v] : pcomps[0].erb) CHECK(ps.v_violations.count(cell) == 1);

    // degree-2 on one cell: two stacked degree-1 components
    ErrorConfig stacked;
    stacked.d = 3;
    stacked.x_part.degree = 1;
    stacked.z_part.degree = 1;
    stacked.x_part.add("h000_000", 2);
    auto scomps = decompose_error(code3, stacked);
    REQUIRE(scomps.size() == 2);
    for (const auto& comp : scomps) {
        CHECK(comp.support.size() == 1);
        CHECK(comp.support.begin()->second == 1);
    }
}

TEST_CASE("decomposition reassembles the error and the syndrome") {
    std::mt19937_64 rng(77);
    for (const auto& complex :
         {builders::torus_grid(2, 2), builders::torus_grid(3, 2), builders::sphere_cube(),
          builders::projective_plane_min(), builders::circle(5)}) {
        for (std::int64_t d : {2, 3}) {
            auto code = build_code(complex, 1, d);
            for (int t = 0; t < 20; ++t) {
                ErrorConfig e = random_error(code, rng);
                auto comps = decompose_error(code, e);
                ChainVector x_sum, z_sum;
                x_sum.degree = z_sum.degree = 1;
                std::map<std::string, std::int64_t> v_sum, p_sum;
                for (const auto& comp : comps) {
                    auto& chain = comp.kind == ErrorComponent::Kind::V ? x_sum : z_sum;
                    auto& bd = comp.kind == ErrorComponent::Kind::V ? v_sum : p_sum;
                    for (const auto& [cell, v] : comp.support) chain.add(cell, v);
                    for (const auto& [cell, v] : comp.erb) bd[cell] = (bd[cell] + v) % d;
                }
                x_sum.reduce_mod(d);
                z_sum.reduce_mod(d);
                CHECK(x_sum == e.x_part);
                CHECK(z_sum == e.z_part);
                auto s = syndrome(code, e);
                for (auto& [cell, v] : v_sum)
                    CHECK(v == (s.v_violations.count(cell) ? s.v_violations[cell] : 0));
                for (auto& [cell, v] : p_sum)
                    CHECK(v == (s.p_violations.count(cell) ? s.p_violations[cell] : 0));
                // every component is connected and degree-1
                for (const auto& comp : comps)
                    for (const auto& [cell, v] : comp.support)
                        CHECK((v == 1 || v == d - 1));
            }
        }
    }
}

TEST_CASE("distance equals the systole on the standard fixtures") {
    for (long n = 2; n <= 3; ++n) {
        auto code = build_code(builders::torus_grid(n, n), 1, 2);
        auto result = code_distance(code, 6);
        CHECK(result.status == DistanceResult::Status::exact);
        CHECK(result.value == n);
        REQUIRE(result.witness.has_value());
        CHECK(result.witness->weight() == n);
        CHECK(is_cycle(*result.witness, code.complex(), 2));
        CHECK_FALSE(is_boundary(*result.witness, code.complex(), 2));
    }
    for (long m : {3, 5}) {
        for (std::int64_t d : {2, 3}) {
            auto result = code_distance(build_code(builders::circle(m), 1, d), m + 1);
            CHECK(result.status == DistanceResult::Status::exact);
            CHECK(result.value == m);
        }
    }
    auto sphere = code_distance(build_code(builders::sphere_cube(), 1, 2), 4);
    CHECK(sphere.status == DistanceResult::Status::no_logicals);

    auto capped = code_distance(build_code(builders::torus_grid(3, 3), 1, 2), 2);
    CHECK(capped.status == DistanceResult::Status::lower_bound);
    CHECK(capped.value == 3);
}

TEST_CASE("distance agrees with the coset-minimum oracle") {
    for (const auto& complex : {builders::torus_grid(2, 2), builders::torus_grid(3, 2),
                                builders::projective_plane_min()}) {
        for (std::int64_t d : {2, 3}) {
            auto code = build_code(complex, 1, d);
            if (code_dimension(code) == 1) continue;
            auto result = code_distance(code, 8);
            REQUIRE(result.status == DistanceResult::Status::exact);

            const auto& sites = complex.cells_of_dim(1);
            auto reps = class_representatives(complex, 1, d);
            auto orders = class_representative_orders(complex, 1, d);
            std::vector<std::vector<std::int64_t>> dense_reps;
            for (const auto& r : reps) {
                auto vec = chain_to_vector(r, sites);
                std::vector<std::int64_t> dense;
                for (const auto& v : vec) dense.push_back(static_cast<std::int64_t>(v));
                dense_reps.push_back(std::move(dense));
            }
            std::vector<std::int64_t> dense_orders;
            for (const auto& o : orders) dense_orders.push_back(static_cast<std::int64_t>(o));
            auto chain_min = oracles::coset_minimum_weight(dense_reps, dense_orders,
                                                           complex.boundary_matrix(2), d);

            // cochain side
            auto coreps = cocycle_representatives(complex, 1, d);
            auto coorders = cocycle_representative_orders(complex, 1, d);
            std::vector<std::vector<std::int64_t>> dense_coreps;
            for (const auto& r : coreps) {
                auto vec = chain_to_vector(r, sites);
                std::vector<std::int64_t> dense;
                for (const auto& v : vec) dense.push_back(static_cast<std::int64_t>(v));
                dense_coreps.push_back(std::move(dense));
            }
            std::vector<std::int64_t> dense_coorders;
            for (const auto& o : coorders) dense_coorders.push_back(static_cast<std::int64_t>(o));
            auto cochain_min = oracles::coset_minimum_weight(dense_coreps, dense_coorders,
                                                             complex.coboundary_matrix(0), d);

            long oracle = std::min(chain_min.value_or(1000), cochain_min.value_or(1000));
            CHECK_MESSAGE(result.value == oracle, complex.label(), " d=", d);
        }
    }
}

TEST_CASE("decoding single errors succeeds; class-crossing errors fail") {
    auto code = build_code(builders::torus_grid(2, 2), 1, 2);

    Syndrome empty;
    auto zero = decode_min_weight(code, empty, 4);
    CHECK(zero.found);
    CHECK(zero.correction.x_part.is_zero());
    CHECK(zero.correction.z_part.is_zero());

    ErrorConfig single;
    single.d = 2;
    single.x_part.degree = 1;
    single.z_part.degree = 1;
    single.x_part.add("h000_000", 1);
    auto dec = decode_min_weight(code, syndrome(code, single), 4);
    REQUIRE(dec.found);
    CHECK(dec.correction.x_part == single.x_part);
    CHECK(decode_success(code, single, dec.correction));

    // exhaustive search for an undecodable error at weight ceil(n/2) = 1..2:
    // the nontrivial cycles themselves decode to the wrong class
    bool found_failure = false;
    const auto& sites = code.sites();
    for (std::size_t i = 0; i < sites.size() && !found_failure; ++i)
        for (std::size_t j = i; j < sites.size() && !found_failure; ++j) {
            ErrorConfig e;
            e.d = 2;
            e.x_part.degree = 1;
            e.z_part.degree = 1;
            e.x_part.add(sites[i], 1);
            if (j != i) e.x_part.add(sites[j], 1);
            auto r = decode_min_weight(code, syndrome(code, e), 4);
            if (r.found && !decode_success(code, e, r.correction)) found_failure = true;
        }
    CHECK(found_failure);

    // success is invariant under adding boundaries to the injected error
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 10; ++t) {
        ErrorConfig e = random_error(code, rng);
        auto r = decode_min_weight(code, syndrome(code, e), 8);
        REQUIRE(r.found);
        bool base = decode_success(code, e, r.correction);
        ErrorConfig shifted = e;
        for (const auto& gamma : code.complex().cells_of_dim(2))
            if (coin(rng)) {
                for (const auto& b : code.complex().cell(gamma).boundary)
                    shifted.x_part.add(b.cell, b.sign);
            }
        shifted.x_part.reduce_mod(2);
        CHECK(syndrome(code, shifted) == syndrome(code, e));
        CHECK(decode_success(code, shifted, r.correction) == base);
    }

    // inconsistent syndrome: a lone violated vertex is outside the image
    Syndrome bad;
    bad.v_violations["v000_000"] = 1;
    CHECK_THROWS_AS(decode_min_weight(code, bad, 4), SpecError);
}

TEST_CASE("energy barrier fixtures and oracle agreement") {
    for (long m = 3; m <= 6; ++m) {
        auto result = energy_barrier(build_code(builders::circle(m), 1, 2));
        CHECK(result.has_logicals);
        CHECK(result.barrier == 2);
    }
    auto torus = energy_barrier(build_code(builders::torus_grid(2, 2), 1, 2));
    CHECK(torus.has_logicals);
    CHECK(torus.barrier == 2);

    auto sphere = energy_barrier(build_code(builders::sphere_cube(), 1, 2));
    CHECK_FALSE(sphere.has_logicals);

    CHECK_THROWS_AS(energy_barrier(build_code(builders::circle(3), 1, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(energy_barrier(build_code(builders::torus_grid(4, 3), 1, 2)),
                    CapacityError);

    // independent threshold-sweep oracle on the chain side of circle(4):
    // reproduce the library's barrier from raw masks
    {
        auto complex = builders::circle(4);
        const auto& sites = complex.cells_of_dim(1);
        const auto& checks = complex.cells_of_dim(0);
        std::vector<std::uint32_t> masks;
        for (const auto& s : sites) {
            std::uint32_t m = 0;
            for (std::size_t a = 0; a < checks.size(); ++a)
                if (complex.incidence(s, checks[a]) % 2 != 0) m |= (1u << a);
            masks.push_back(m);
        }
        // nontrivial cycles over GF(2): the full loop only
        std::vector<std::uint32_t> targets{(1u << 4) - 1};
        auto oracle = oracles::threshold_barrier(masks, targets, 8);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == energy_barrier(build_code(complex, 1, 2)).barrier);
    }
}

TEST_CASE("closed errors act on the ground space by homology class only") {
    auto code = build_code(builders::torus_grid(2, 2), 1, 2);
    auto basis = ground_space_basis(code);
    REQUIRE(basis.cols() == 4);
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> coin(0, 1);
    auto reps = class_representatives(code.complex(), 1, 2);

    for (int t = 0; t < 10; ++t) {
        // pick a random closed chain: a class representative plus a boundary
        ChainVector c;
        c.degree = 1;
        if (coin(rng)) c = c.plus(reps[0]);
        if (coin(rng)) c = c.plus(reps[1]);
        ChainVector shifted = c;
        for (const auto& gamma : code.complex().cells_of_dim(2))
            if (coin(rng))
                for (const auto& b : code.complex().cell(gamma).boundary)
                    shifted.add(b.cell, b.sign);
        c.reduce_mod(2);
        shifted.reduce_mod(2);
        REQUIRE(is_cycle(shifted, code.complex(), 2));

        QuditPauliOperator op_a(2), op_b(2);
        for (const auto& [cell, v] : c.coeffs) op_a.multiply_x(cell, 1);
        for (const auto& [cell, v] : shifted.coeffs) op_b.multiply_x(cell, 1);
        for (Eigen::Index col = 0; col < basis.cols(); ++col) {
            DenseState psi = zero_state(code);
            psi.amplitudes = basis.col(col);
            DenseState a = apply_pauli(psi, op_a);
            DenseState b = apply_pauli(psi, op_b);
            CHECK((a.amplitudes - b.amplitudes).norm() < 1e-9);
        }
    }
}
