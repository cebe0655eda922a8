#pragma once

// Seeded instance generators and property suites. The CLI `selftest`
// command and the acceptance binary both run these.

#include "wittforge/invol12.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wittforge::selftest {

using Rng = std::mt19937_64;

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t nonzero = 0;  // suite-specific counter (e.g. nonzero f3 values)
    std::vector<std::string> failures;  // first few, for diagnostics

    bool ok() const { return cases > 0 && passed == cases; }
    void record(bool pass, const std::string& what);
};

// Generators.
long random_nonzero(Rng& rng, long max_abs);
SquareClass random_class(Rng& rng, long max_abs);  // never trivial
Rational random_rational(Rng& rng, long max_num, long max_den);
QuaternionAlgebra random_algebra(Rng& rng, long max_abs);
QuaternionAlgebra random_split_algebra(Rng& rng, long max_abs);
/// Pure invertible element with small integer coordinates.
QuatElem random_pure(Rng& rng, const QuaternionAlgebra& h, long max_coord);
QuadForm random_form(Rng& rng, std::size_t dim, long max_abs);
/// psi = <<d>> (x) phi6 with e1(phi6) = d0, (d, d0) = 0, entries <= max_abs.
QuadForm random_split12(Rng& rng, long max_abs);
/// (Split6(phi), (H, i)) with H split.
ProductPresentation random_split_presentation(Rng& rng, long max_abs);
/// (M3H(<q1,q2,q3>) over H', (H, i)) with H split and (d, d0) = 0.
ProductPresentation random_split_h_presentation(Rng& rng, long max_abs);
SkewHermForm random_skewherm(Rng& rng, const QuaternionAlgebra& h, std::size_t rank, long max_coord);

// Suites. Each draws `count` cases from rng.
SuiteResult reciprocity(Rng& rng, std::size_t count, long max_abs = 10000);
SuiteResult steinberg(Rng& rng, std::size_t count);
SuiteResult witt_identity(Rng& rng, std::size_t count);
SuiteResult pfister_roundtrip(Rng& rng, std::size_t count);
/// f3 agreement on existence witnesses and split-H presentations.
SuiteResult f3_agreement(Rng& rng, std::size_t count);
/// Both f3 routes vanish in the three vanishing cases (A split, A0 split,
/// A0 split by Q(sqrt d0)); `count` instances of each.
SuiteResult f3_vanishing(Rng& rng, std::size_t count);
/// Additive-decomposition aggregate identity on existence witnesses.
SuiteResult additive_identity(Rng& rng, std::size_t count);
/// n_Q - n_H - <d> n_H' = <e> <<c, e', de>> for H = (c,e), H' = (c,e'), Q = (c,ee').
SuiteResult chain_identity(Rng& rng, std::size_t count);
SuiteResult tao_split_oracle(Rng& rng, std::size_t count);
SuiteResult existence_soundness(Rng& rng, std::size_t count);
SuiteResult hermitian_disc_oracle(Rng& rng, std::size_t count);

nlohmann::json to_json(const SuiteResult& r);

/// Runs every suite with `count` cases each; with `timing`, each suite
/// reports its wall-clock time.
nlohmann::json run_selftest(std::uint64_t seed, std::size_t count, bool timing = false);

}  // namespace wittforge::selftest
