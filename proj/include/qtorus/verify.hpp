#pragma once

#include "qtorus/graded_modules.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace qtorus {

/// Outcome of a seeded randomized identity suite.
struct SuiteReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::map<std::string, std::size_t> counters;

    bool ok() const noexcept { return failures == 0; }
};

inline constexpr std::uint64_t default_seed = 20240601;

/// Homogeneous element of tau-hat(d,q): a matrix term X (x) t^a with |a| <= bound,
/// an HC_1 symbol on a rad f generator, or a derivation.
ToroidalElement random_homogeneous(std::mt19937_64& rng, const QMatrixPtr& q, std::size_t d, std::int64_t bound = 2);

/// f(a,b) = f(b,a)^{-1}, bimultiplicativity of sigma and f, f(ka,a) = f(a,ka) = 1
/// and f = sigma(a,b) / sigma(b,a), on random (a,b,c,k) with entries in [-bound, bound].
SuiteReport cocycle_suite(const QMatrixPtr& q, std::size_t trials, std::uint64_t seed, std::int64_t bound = 10);

/// split_center recombines, the central part commutes with `probes` random
/// elements, and t^a is central exactly when a is in rad f.
SuiteReport center_suite(const QMatrixPtr& q, std::size_t trials, std::uint64_t seed, std::size_t probes = 20);

/// graded_dim is 0, n-1 or n by rad f membership, and agrees with
/// bruteforce_dim(support) for every |r| <= radius.
SuiteReport hc1_dim_suite(const QMatrixPtr& q, std::int64_t radius, std::int64_t support);

/// Jacobi, antisymmetry and [x,x] = 0 on random homogeneous triples; the
/// counter "hc1_triples" records triples whose brackets carry HC_1 terms.
SuiteReport jacobi_suite(const QMatrixPtr& q, std::size_t d, std::size_t trials, std::uint64_t seed);

/// act([x,y], v) = act(x, act(y,v)) - act(y, act(x,v)) on random triples.
SuiteReport module_axiom_suite(const FinRep& rep, std::size_t trials, std::uint64_t seed);

} // namespace qtorus
