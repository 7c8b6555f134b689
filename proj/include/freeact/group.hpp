#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace freeact {

inline constexpr int kDefaultOrderCap = 64;

// Thrown when a build or enumeration would exceed a configured cap.
// Never a silent truncation: the caller raises the cap or shrinks the input.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GroupKind { Cyclic, Abelian, Dihedral, Quaternion, Perm };

// Parsed form of the group descriptor mini-language:
//   cyclic:K | abelian:D1,D2,... | dihedral:R | quaternion | perm:(a b c)(d e),...
// perm points are 1-based; commas separate generators.
struct GroupDescriptor {
    GroupKind kind = GroupKind::Cyclic;
    std::vector<int> params;                  // cyclic/abelian/dihedral numbers
    std::vector<std::vector<int>> perm_gens;  // 0-based images, perm kind only
    std::string text;                         // descriptor as written

    static GroupDescriptor parse(const std::string& descriptor);
};

// A concrete finite group: dense element indices 0..order-1, total
// multiplication table, identity at index 0. Immutable after construction,
// safe to share across threads.
class FiniteGroup {
public:
    FiniteGroup(GroupDescriptor descriptor, std::vector<int> mul_table,
                std::vector<std::string> names, std::vector<int> generators);

    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // a^e for any integer e (e may be negative).
    int power(int a, int e) const;
    int element_order(int a) const { return elem_order_[a]; }
    bool is_abelian() const { return abelian_; }

    const std::string& name(int a) const { return names_[a]; }
    // Index of the element with the given name, or -1 if unknown.
    int element_index(const std::string& name) const;

    const GroupDescriptor& descriptor() const { return descriptor_; }
    const std::string& descriptor_text() const { return descriptor_.text; }
    // Canonical generators from the descriptor (s for cyclic, s1..sm for
    // abelian, s1,s2 for dihedral, i,j for quaternion, g1..gk for perm).
    const std::vector<int>& generators() const { return generators_; }

private:
    GroupDescriptor descriptor_;
    int order_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<int> elem_order_;
    std::vector<std::string> names_;
    std::vector<int> generators_;
    bool abelian_ = false;
};

FiniteGroup build_group(const GroupDescriptor& descriptor, int order_cap = kDefaultOrderCap);
FiniteGroup build_group(const std::string& descriptor, int order_cap = kDefaultOrderCap);

// True iff the subgroup closure of the entries is the whole group.
bool generates(const FiniteGroup& G, const std::vector<int>& tuple);

// Least n such that some n-tuple generates G (memoized subgroup search).
int mu(const FiniteGroup& G);

// A generating tuple of size mu(G); deterministic for a given group.
std::vector<int> minimal_generating_tuple(const FiniteGroup& G);

// A homomorphism G -> {-1,+1}, stored as the full value vector.
struct Character {
    std::vector<std::int8_t> values;  // one of -1,+1 per element index

    int value(int x) const { return values[x]; }
    bool trivial() const;
    // Orders characters with the trivial one first (+1 sorts before -1).
    bool operator<(const Character& other) const;
    bool operator==(const Character& other) const { return values == other.values; }
};

// All homomorphisms G -> C2, found by testing each sign assignment on a
// minimal generating tuple for homomorphic extendability. Sorted; the
// trivial character comes first. Size is always a power of two.
std::vector<Character> homs_to_C2(const FiniteGroup& G);

// log2 of |Hom(G,C2)|.
int h1_rank(const FiniteGroup& G);

struct Automorphism {
    std::vector<int> images;  // permutation of element indices

    int operator()(int x) const { return images[x]; }
    Automorphism inverse() const;
    bool operator<(const Automorphism& other) const { return images < other.images; }
    bool operator==(const Automorphism& other) const { return images == other.images; }
};

// The full automorphism group, enumerated by assigning images (of matching
// element order) to a minimal generating tuple and extending along the
// Cayley graph. Sorted; identity first.
std::vector<Automorphism> automorphisms(const FiniteGroup& G,
                                        int order_cap = kDefaultOrderCap);

// Orbits of the nontrivial characters under w -> w∘α⁻¹ over Aut(G).
// Each orbit is sorted, orbits ordered by their least member.
std::vector<std::vector<Character>> epi_orbits_under_aut(const FiniteGroup& G);

}  // namespace freeact
