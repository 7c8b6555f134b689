#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeact/group.hpp"
#include "freeact/marked.hpp"

namespace freeact {

// One equivalence (or weak equivalence) class of actions.
struct ActionClass {
    MarkedVector rep;
    ActionKind kind = ActionKind::OrientationPreserving;
    std::optional<Character> character;  // absent iff nonorientable
    std::uint64_t orbit_size = 0;
};

struct ClassificationReport {
    std::string group;  // descriptor text
    int n = 0;
    std::int64_t genus = 0;
    int mu_value = 0;
    int h1_rank = 0;

    std::int64_t op_classes = 0;
    std::int64_t or_classes = 0;
    std::int64_t nonor_classes = 0;
    std::int64_t op_weak = 0;
    std::int64_t or_weak = 0;
    std::int64_t nonor_weak = 0;

    // empty for closed-form reports; otherwise ordered by canonical rep
    std::vector<ActionClass> classes;
    std::vector<ActionClass> weak_classes;

    bool counts_equal(const ClassificationReport& other) const;
};

struct OrientabilityResult {
    ActionKind kind = ActionKind::OrientationPreserving;
    std::optional<Character> character;
};

// The sign criterion: orientation-preserving when the trivial character maps
// g_i to v_i for all i, orientation-reversing when a nontrivial character
// does, nonorientable when none does. At most one character can match.
OrientabilityResult orientability_class(const FiniteGroup& G, const MarkedVector& x);
OrientabilityResult orientability_class(const FiniteGroup& G, const MarkedVector& x,
                                        const std::vector<Character>& chars);

// Fills the kind/character tags of every orbit record.
void tag_partition(const FiniteGroup& G, OrbitPartition& partition);

// Enumerates both orbit partitions, tags each orbit, and aggregates counts.
ClassificationReport classify_actions(const FiniteGroup& G, int n,
                                      std::uint64_t state_cap = kDefaultStateCap);

// Invariant factors c_1, c_2, ... with c_{i+1} | c_i (trivial factors
// dropped; empty for the trivial group). Throws if G is not abelian.
std::vector<int> invariant_factors(const FiniteGroup& G);

// Closed-form counts for abelian G, independent of orbit enumeration.
// Representative lists are left empty.
ClassificationReport abelian_formula(const FiniteGroup& G, int n);

struct GenusSpectrum {
    std::string group;
    std::int64_t bound = 0;
    int mu_value = 0;
    int h1_rank = 0;
    std::vector<std::int64_t> orientation_preserving;
    std::vector<std::int64_t> orientation_reversing;
    std::vector<std::int64_t> nonorientable;
};

// Which genera up to the bound admit an action of each kind, from the
// arithmetic criteria on mu and the C2-cohomology rank alone.
GenusSpectrum genus_spectrum(const FiniteGroup& G, std::int64_t genus_bound);

// Whether all generating n-vectors fall in a single move-closure class.
// When true and n > mu(G), the classification is cross-checked against the
// forced counts (1 orientation-preserving class, one weak class per
// character orbit, 1 nonorientable class).
bool single_class_check(const FiniteGroup& G, int n,
                        std::uint64_t state_cap = kDefaultStateCap);

// Exhaustive agreement sweep between the sign criterion and the covering
// cycle test over every marked generating vector at width n.
struct OracleCheckResult {
    std::uint64_t states = 0;
    std::uint64_t agree = 0;
    std::uint64_t mismatch = 0;
    // [algebraic orientable?][covering orientable?]
    std::uint64_t matrix[2][2] = {{0, 0}, {0, 0}};
    bool genus_ok = true;  // cycle-basis sizes all matched 1 + |G|(n-1)
};

OracleCheckResult oracle_check(const FiniteGroup& G, int n,
                               std::uint64_t state_cap = kDefaultStateCap);

}  // namespace freeact
