#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "conefix/minkowski.hpp"
#include "conefix/solid_space.hpp"

/**
 * @file axioms.hpp
 *
 * Seeded property suites for the ordering, gauge and cone-metric axioms.
 * Each suite reports how many sampled instances it checked and, on failure,
 * the first counterexample found.
 *
 * Ordering suites draw coordinates and scalars from a dyadic lattice
 * (m / 64 with |m| <= 4096, scalars k / 8) on which addition and scaling are
 * exact in double precision, so the algebraic axioms are checked with exact
 * comparisons.
 */

namespace conefix {

struct AxiomResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string counterexample;
};

struct AxiomReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    int min_dim = 1;
    int max_dim = 1;
    std::vector<AxiomResult> results;

    bool all_passed() const;
    const AxiomResult* find(const std::string& name) const;
};

/// The ordering pair under test; defaults to leq / lt. Tests inject mutants.
struct OrderingUnderTest {
    std::function<bool(const OrderedVector&, const OrderedVector&)> leq;
    std::function<bool(const OrderedVector&, const OrderedVector&)> lt;

    static OrderingUnderTest standard();
};

struct AxiomOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    int min_dim = 1;
    int max_dim = 8;
    OrderingUnderTest ordering = OrderingUnderTest::standard();
};

/// Runs every suite `samples` times in each dimension min_dim … max_dim.
/// Per-dimension generators are seeded deterministically from the root seed.
AxiomReport run_axioms(const AxiomOptions& opts);

/// min{λ >= 0 : -λb ⪯ x ⪯ λb} by bisection on [0, bounding_scale({x})]
/// using only leq. Reference oracle for the closed-form gauge.
double gauge_by_bisection(const OrderedVector& x, const SpaceSpec& spec, int iterations = 50);

} // namespace conefix
