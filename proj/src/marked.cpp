#include "freeact/marked.hpp"

#include <algorithm>
#include <set>

namespace freeact {

std::string to_text(const FiniteGroup& G, const MarkedVector& x) {
    std::string s = "g=(";
    for (int k = 0; k < x.n(); k++) {
        if (k) s += ",";
        s += G.name(x.g[k]);
    }
    s += ");v=(";
    for (int k = 0; k < x.n(); k++) {
        if (k) s += ",";
        s += x.v[k] > 0 ? "+" : "-";
    }
    s += ")";
    return s;
}

namespace {

std::vector<std::string> split_list(const std::string& body) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string expect_section(const std::string& text, size_t& pos, const std::string& prefix) {
    if (text.compare(pos, prefix.size(), prefix) != 0)
        throw std::invalid_argument("bad marked vector: expected '" + prefix + "' in '" + text + "'");
    pos += prefix.size();
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
        throw std::invalid_argument("bad marked vector: unclosed '(' in '" + text + "'");
    std::string body = text.substr(pos, close - pos);
    pos = close + 1;
    return body;
}

}  // namespace

MarkedVector parse_marked_vector(const FiniteGroup& G, const std::string& text) {
    size_t pos = 0;
    const std::string gbody = expect_section(text, pos, "g=(");
    const std::string vbody = expect_section(text, pos, ";v=(");
    if (pos != text.size())
        throw std::invalid_argument("bad marked vector: trailing characters in '" + text + "'");

    MarkedVector x;
    for (const auto& name : split_list(gbody)) {
        int idx = G.element_index(name);
        if (idx < 0)
            throw std::invalid_argument("bad marked vector: unknown element '" + name + "'");
        x.g.push_back(idx);
    }
    for (const auto& tok : split_list(vbody)) {
        if (tok == "+" || tok == "+1")
            x.v.push_back(+1);
        else if (tok == "-" || tok == "-1")
            x.v.push_back(-1);
        else
            throw std::invalid_argument("bad marked vector: bad sign '" + tok + "'");
    }
    if (x.g.empty() || x.g.size() != x.v.size())
        throw std::invalid_argument("bad marked vector: length mismatch in '" + text + "'");
    return x;
}

namespace {

void check_move(const Move& m, int n) {
    auto in_range = [n](int c) { return c >= 0 && c < n; };
    switch (m.kind) {
        case MoveKind::Invert:
            if (!in_range(m.i)) throw std::invalid_argument("move coordinate out of range");
            return;
        case MoveKind::Compose:
            if (!in_range(m.i) || !in_range(m.j) || m.i == m.j)
                throw std::invalid_argument("move coordinates must be distinct and in range");
            if (m.exp != 1 && m.exp != -1)
                throw std::invalid_argument("move exponent must be +1 or -1");
            break;
        case MoveKind::Swap:
            if (!in_range(m.i) || !in_range(m.j) || m.i == m.j)
                throw std::invalid_argument("move coordinates must be distinct and in range");
            break;
        case MoveKind::Rotate:
            break;
    }
    if (n < 2) throw std::invalid_argument("only Invert applies at n = 1");
}

void apply_move_inplace(const FiniteGroup& G, const Move& m, GenVector& g, OrientVector& v) {
    switch (m.kind) {
        case MoveKind::Invert:
            g[m.i] = G.inv(g[m.i]);
            return;
        case MoveKind::Compose: {
            const int gi = g[m.i];
            const int factor = m.exp > 0 ? gi : G.inv(gi);
            g[m.j] = m.side == Side::Left ? G.mul(factor, g[m.j]) : G.mul(g[m.j], factor);
            g[m.i] = G.inv(gi);
            v[m.j] = static_cast<std::int8_t>(v[m.i] * v[m.j]);
            return;
        }
        case MoveKind::Swap:
            std::swap(g[m.i], g[m.j]);
            std::swap(v[m.i], v[m.j]);
            return;
        case MoveKind::Rotate:
            std::rotate(g.begin(), g.end() - 1, g.end());
            std::rotate(v.begin(), v.end() - 1, v.end());
            return;
    }
}

}  // namespace

MarkedVector apply_move(const FiniteGroup& G, const Move& m, const MarkedVector& x) {
    if (x.g.empty() || x.g.size() != x.v.size())
        throw std::invalid_argument("malformed marked vector");
    for (int e : x.g)
        if (e < 0 || e >= G.order()) throw std::invalid_argument("element index out of range");
    check_move(m, x.n());
    MarkedVector y = x;
    apply_move_inplace(G, m, y.g, y.v);
    return y;
}

std::vector<Move> all_moves(int n) {
    std::vector<Move> moves;
    for (int i = 0; i < n; i++) moves.push_back(Move::invert(i));
    if (n >= 2) {
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                if (i == j) continue;
                for (Side side : {Side::Left, Side::Right})
                    for (int exp : {+1, -1}) moves.push_back(Move::compose(i, j, side, exp));
            }
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++) moves.push_back(Move::swap(i, j));
        moves.push_back(Move::rotate());
    }
    return moves;
}

StateCodec::StateCodec(const FiniteGroup& G, int n, std::uint64_t state_cap) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    n_ = n;
    order_ = G.order();
    if (n >= 48)
        throw CapExceeded("state space exceeds cap: n too large");
    gcount_ = 1;
    for (int k = 0; k < n; k++) {
        if (gcount_ > state_cap)  // avoid overflow before the final check
            throw CapExceeded("state space exceeds cap " + std::to_string(state_cap));
        gcount_ *= static_cast<std::uint64_t>(order_);
    }
    if (gcount_ > (state_cap >> n))
        throw CapExceeded("state space exceeds cap " + std::to_string(state_cap));
    count_ = gcount_ << n;
}

std::uint64_t StateCodec::encode(const MarkedVector& x) const {
    std::uint64_t code = encode_g(x.g) << n_;
    for (int k = 0; k < n_; k++)
        if (x.v[k] < 0) code |= std::uint64_t{1} << (n_ - 1 - k);
    return code;
}

std::uint64_t StateCodec::encode_g(const GenVector& g) const {
    if (static_cast<int>(g.size()) != n_) throw std::invalid_argument("tuple length mismatch");
    std::uint64_t code = 0;
    for (int k = 0; k < n_; k++) {
        if (g[k] < 0 || g[k] >= order_) throw std::invalid_argument("element index out of range");
        code = code * static_cast<std::uint64_t>(order_) + static_cast<std::uint64_t>(g[k]);
    }
    return code;
}

MarkedVector StateCodec::decode(std::uint64_t state) const {
    MarkedVector x;
    x.g = decode_g(state >> n_);
    x.v.resize(static_cast<size_t>(n_));
    for (int k = 0; k < n_; k++)
        x.v[k] = (state >> (n_ - 1 - k)) & 1 ? -1 : +1;
    return x;
}

GenVector StateCodec::decode_g(std::uint64_t gcode) const {
    GenVector g(static_cast<size_t>(n_));
    for (int k = n_ - 1; k >= 0; k--) {
        g[k] = static_cast<int>(gcode % static_cast<std::uint64_t>(order_));
        gcode /= static_cast<std::uint64_t>(order_);
    }
    return g;
}

namespace {

// A small generating set of the listed automorphisms; closing under it
// yields the same orbits as applying every automorphism, at a fraction of
// the BFS fan-out.
std::vector<std::vector<int>> automorphism_generators(const std::vector<Automorphism>& auts,
                                                      int order) {
    std::vector<int> ident(static_cast<size_t>(order));
    for (int x = 0; x < order; x++) ident[x] = x;

    std::set<std::vector<int>> closed = {ident};
    std::vector<std::vector<int>> gens;
    for (const auto& a : auts) {
        if (closed.count(a.images)) continue;
        gens.push_back(a.images);
        std::vector<std::vector<int>> frontier(closed.begin(), closed.end());
        for (size_t head = 0; head < frontier.size(); head++) {
            for (const auto& g : gens) {
                std::vector<int> prod(static_cast<size_t>(order));
                for (int x = 0; x < order; x++) prod[x] = g[static_cast<size_t>(frontier[head][x])];
                if (closed.insert(prod).second) frontier.push_back(std::move(prod));
            }
        }
    }
    return gens;
}

// Shared BFS workhorse over packed states. The sign bits ride in the low n
// bits, so sign updates are bit twiddles on the code.
struct OrbitEngine {
    const FiniteGroup& G;
    StateCodec codec;
    int n;
    std::vector<Move> moves;
    std::vector<std::vector<int>> aut_images;  // generators of Aut(G) in weak mode

    OrbitEngine(const FiniteGroup& g, int n_arg, EquivMode mode, std::uint64_t cap)
        : G(g), codec(g, n_arg, cap), n(n_arg), moves(all_moves(n_arg)) {
        if (mode == EquivMode::Weak)
            aut_images = automorphism_generators(automorphisms(G, G.order()), G.order());
    }

    template <typename Visit>
    void neighbors(std::uint64_t state, Visit&& visit) const {
        MarkedVector x = codec.decode(state);
        GenVector g(static_cast<size_t>(n));
        OrientVector v(static_cast<size_t>(n));
        for (const Move& m : moves) {
            g = x.g;
            v = x.v;
            apply_move_inplace(G, m, g, v);
            visit(codec.encode(MarkedVector{g, v}));
        }
        for (const auto& images : aut_images) {
            g = x.g;
            for (int k = 0; k < n; k++) g[k] = images[static_cast<size_t>(g[k])];
            visit(codec.encode(MarkedVector{g, x.v}));
        }
    }

    // BFS closure from seed over unvisited states; returns orbit size and the
    // minimum code seen (equal to seed when seeding in increasing order).
    std::uint64_t close(std::uint64_t seed, std::vector<std::uint8_t>& visited,
                        std::vector<std::uint64_t>& queue, std::uint64_t& min_code,
                        std::int32_t orbit_index, std::vector<std::int32_t>* membership) const {
        queue.clear();
        queue.push_back(seed);
        visited[seed] = 1;
        min_code = seed;
        size_t head = 0;
        while (head < queue.size()) {
            std::uint64_t cur = queue[head++];
            neighbors(cur, [&](std::uint64_t next) {
                if (!visited[next]) {
                    visited[next] = 1;
                    queue.push_back(next);
                    min_code = std::min(min_code, next);
                }
            });
        }
        if (membership)
            for (std::uint64_t s : queue) (*membership)[s] = orbit_index;
        return queue.size();
    }
};

bool g_part_generates(const FiniteGroup& G, const StateCodec& codec, std::uint64_t gcode,
                      std::vector<std::int8_t>& memo) {
    std::int8_t& slot = memo[gcode];
    if (slot < 0) slot = generates(G, codec.decode_g(gcode)) ? 1 : 0;
    return slot == 1;
}

}  // namespace

OrbitPartition enumerate_orbits(const FiniteGroup& G, int n, EquivMode mode,
                                std::uint64_t state_cap, bool keep_membership) {
    OrbitEngine engine(G, n, mode, state_cap);
    const StateCodec& codec = engine.codec;

    OrbitPartition part;
    part.n = n;
    part.mode = mode;
    part.state_count = codec.state_count();
    if (keep_membership) part.membership.assign(codec.state_count(), -1);

    std::vector<std::uint8_t> visited(codec.state_count(), 0);
    std::vector<std::int8_t> genmemo(codec.g_count(), -1);
    std::vector<std::uint64_t> queue;

    const std::uint64_t sectors = std::uint64_t{1} << n;
    for (std::uint64_t gcode = 0; gcode < codec.g_count(); gcode++) {
        if (!g_part_generates(G, codec, gcode, genmemo)) continue;
        part.generating_states += sectors;
        for (std::uint64_t vbits = 0; vbits < sectors; vbits++) {
            const std::uint64_t seed = gcode << n | vbits;
            if (visited[seed]) continue;
            std::uint64_t min_code = 0;
            const std::int32_t index = static_cast<std::int32_t>(part.orbits.size());
            std::uint64_t size = engine.close(seed, visited, queue, min_code, index,
                                              keep_membership ? &part.membership : nullptr);
            OrbitRecord rec;
            rec.rep = codec.decode(min_code);
            rec.size = size;
            part.orbits.push_back(std::move(rec));
        }
    }
    return part;
}

std::vector<NielsenClass> nielsen_classes(const FiniteGroup& G, int n,
                                          std::uint64_t state_cap) {
    StateCodec codec(G, n, state_cap);
    const auto moves = all_moves(n);

    std::vector<std::uint8_t> visited(codec.g_count(), 0);
    std::vector<std::int8_t> genmemo(codec.g_count(), -1);
    std::vector<NielsenClass> classes;
    std::vector<std::uint64_t> queue;
    OrientVector ones(static_cast<size_t>(n), +1);

    for (std::uint64_t seed = 0; seed < codec.g_count(); seed++) {
        if (visited[seed] || !g_part_generates(G, codec, seed, genmemo)) continue;
        queue.clear();
        queue.push_back(seed);
        visited[seed] = 1;
        size_t head = 0;
        GenVector g;
        OrientVector v;
        while (head < queue.size()) {
            const GenVector base = codec.decode_g(queue[head++]);
            for (const Move& m : moves) {
                g = base;
                v = ones;
                apply_move_inplace(G, m, g, v);
                std::uint64_t next = codec.encode_g(g);
                if (!visited[next]) {
                    visited[next] = 1;
                    queue.push_back(next);
                }
            }
        }
        classes.push_back(NielsenClass{codec.decode_g(seed), queue.size()});
    }
    return classes;
}

OrbitRecord orbit_of(const FiniteGroup& G, const MarkedVector& x, EquivMode mode,
                     std::uint64_t state_cap) {
    if (x.g.empty() || x.g.size() != x.v.size())
        throw std::invalid_argument("malformed marked vector");
    for (std::int8_t s : x.v)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    if (!generates(G, x.g))
        throw std::invalid_argument("tuple does not generate the group");

    OrbitEngine engine(G, x.n(), mode, state_cap);
    std::vector<std::uint8_t> visited(engine.codec.state_count(), 0);
    std::vector<std::uint64_t> queue;
    std::uint64_t min_code = 0;
    std::uint64_t size =
        engine.close(engine.codec.encode(x), visited, queue, min_code, 0, nullptr);

    OrbitRecord rec;
    rec.rep = engine.codec.decode(min_code);
    rec.size = size;
    return rec;
}

}  // namespace freeact
