#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeact/group.hpp"

namespace freeact {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

using GenVector = std::vector<int>;           // element indices, length n
using OrientVector = std::vector<std::int8_t>;  // entries -1/+1, length n

// A generating n-vector together with orientation signs.
struct MarkedVector {
    GenVector g;
    OrientVector v;

    int n() const { return static_cast<int>(g.size()); }
    bool operator==(const MarkedVector& other) const = default;
};

// Text form used by the CLI: g=(name1,name2,...);v=(+,-,...)
std::string to_text(const FiniteGroup& G, const MarkedVector& x);
MarkedVector parse_marked_vector(const FiniteGroup& G, const std::string& text);

enum class MoveKind { Invert, Compose, Swap, Rotate };
enum class Side { Left, Right };

// One elementary move. All four kinds are periodic on marked vectors:
// Invert, Compose and Swap are involutions, Rotate has order n.
//   Invert(i):            g_i <- g_i^-1, signs unchanged
//   Compose(i,j,side,e):  g_i <- g_i^-1 and g_j <- g_i^e * g_j (Left) or
//                         g_j * g_i^e (Right), with the old g_i; v_j <- v_i*v_j
//   Swap(i,j):            exchange entries i and j of both parts
//   Rotate:               cyclic shift of both parts
struct Move {
    MoveKind kind = MoveKind::Invert;
    int i = 0;
    int j = 0;
    Side side = Side::Left;
    int exp = +1;

    static Move invert(int i) { return {MoveKind::Invert, i, 0, Side::Left, +1}; }
    static Move compose(int i, int j, Side side, int exp) {
        return {MoveKind::Compose, i, j, side, exp};
    }
    static Move swap(int i, int j) { return {MoveKind::Swap, i, j, Side::Left, +1}; }
    static Move rotate() { return {MoveKind::Rotate, 0, 0, Side::Left, +1}; }
};

// Image of a marked vector under one move. The sign part transforms as the
// product of signs over the letters of the move's basis words, so for every
// kind the new v_k is the sign evaluation of the word that the new g_k is
// the group evaluation of. Generation of the g part is preserved.
MarkedVector apply_move(const FiniteGroup& G, const Move& m, const MarkedVector& x);

// All moves applicable at width n ({Invert(0)} alone when n == 1).
std::vector<Move> all_moves(int n);

// Packs a marked vector into one machine word so orbit closure can run over
// flat arrays. The integer order of codes equals the lexicographic order of
// (g_1..g_n, v_1..v_n) with +1 < -1, so the minimum code in an orbit is its
// canonical representative.
class StateCodec {
public:
    StateCodec(const FiniteGroup& G, int n, std::uint64_t state_cap = kDefaultStateCap);

    std::uint64_t encode(const MarkedVector& x) const;
    MarkedVector decode(std::uint64_t state) const;
    std::uint64_t encode_g(const GenVector& g) const;
    GenVector decode_g(std::uint64_t gcode) const;

    std::uint64_t state_count() const { return count_; }
    std::uint64_t g_count() const { return gcount_; }
    int n() const { return n_; }
    int order() const { return order_; }

private:
    int n_;
    int order_;
    std::uint64_t gcount_;
    std::uint64_t count_;
};

enum class EquivMode { Equivalence, Weak };

enum class ActionKind { OrientationPreserving, OrientationReversing, Nonorientable };

struct OrbitRecord {
    MarkedVector rep;  // lexicographically least member
    std::uint64_t size = 0;
    // classification tags, filled by the classifier
    std::optional<ActionKind> kind;
    std::optional<Character> character;
};

struct OrbitPartition {
    int n = 0;
    EquivMode mode = EquivMode::Equivalence;
    std::vector<OrbitRecord> orbits;  // ordered by canonical representative
    std::uint64_t state_count = 0;
    std::uint64_t generating_states = 0;
    // state -> orbit index (-1 for non-generating states); only populated
    // when requested, for verification sweeps
    std::vector<std::int32_t> membership;
};

// Partitions all marked generating vectors into move-closure orbits
// (Equivalence) or move-plus-automorphism orbits (Weak). n < mu(G) yields
// an empty partition. Single-threaded and deterministic.
OrbitPartition enumerate_orbits(const FiniteGroup& G, int n, EquivMode mode,
                                std::uint64_t state_cap = kDefaultStateCap,
                                bool keep_membership = false);

struct NielsenClass {
    GenVector rep;
    std::uint64_t size = 0;
};

// Move-closure classes of generating n-vectors (the all-ones sign sector,
// where every move fixes the signs).
std::vector<NielsenClass> nielsen_classes(const FiniteGroup& G, int n,
                                          std::uint64_t state_cap = kDefaultStateCap);

// Single-orbit closure from x; agrees with the matching orbit of
// enumerate_orbits. x must be a well-formed marked generating vector.
OrbitRecord orbit_of(const FiniteGroup& G, const MarkedVector& x, EquivMode mode,
                     std::uint64_t state_cap = kDefaultStateCap);

}  // namespace freeact
