#include "freeact/group.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace freeact {

namespace {

int parse_positive_int(const std::string& token, const std::string& what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad group descriptor: " + what + " is not a number: '" + token + "'");
    long value = 0;
    try {
        value = std::stol(token);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group descriptor: " + what + " out of range: '" + token + "'");
    }
    if (value < 1 || value > 1 << 20)
        throw std::invalid_argument("bad group descriptor: " + what + " out of range: '" + token + "'");
    return static_cast<int>(value);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// One permutation generator written as disjoint cycles, e.g. "(1 2 3)(4 5)".
std::vector<int> parse_perm_generator(const std::string& text, int& degree) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') pos++;
    if (pos >= text.size())
        throw std::invalid_argument("bad group descriptor: empty permutation generator");
    while (pos < text.size()) {
        if (text[pos] == ' ') { pos++; continue; }
        if (text[pos] != '(')
            throw std::invalid_argument("bad group descriptor: expected '(' in permutation");
        size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("bad group descriptor: unclosed cycle in permutation");
        std::istringstream body(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cycle;
        std::string tok;
        while (body >> tok) cycle.push_back(parse_positive_int(tok, "permutation point"));
        if (cycle.empty())
            throw std::invalid_argument("bad group descriptor: empty cycle in permutation");
        cycles.push_back(cycle);
        pos = close + 1;
    }
    int max_point = 0;
    for (const auto& c : cycles)
        for (int p : c) max_point = std::max(max_point, p);
    if (max_point > 4096)
        throw std::invalid_argument("bad group descriptor: permutation point exceeds 4096");
    degree = std::max(degree, max_point);

    std::vector<int> image(static_cast<size_t>(max_point));
    for (int p = 0; p < max_point; p++) image[p] = p;
    std::vector<char> seen(static_cast<size_t>(max_point), 0);
    for (const auto& c : cycles) {
        for (size_t k = 0; k < c.size(); k++) {
            int from = c[k] - 1;
            int to = c[(k + 1) % c.size()] - 1;
            if (seen[from])
                throw std::invalid_argument("bad group descriptor: point repeated within a permutation");
            seen[from] = 1;
            image[from] = to;
        }
    }
    return image;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(const std::string& descriptor) {
    GroupDescriptor desc;
    desc.text = descriptor;
    const size_t colon = descriptor.find(':');
    const std::string head = descriptor.substr(0, colon);
    const std::string rest =
        colon == std::string::npos ? std::string() : descriptor.substr(colon + 1);

    if (head == "quaternion") {
        if (colon != std::string::npos)
            throw std::invalid_argument("bad group descriptor: quaternion takes no parameters");
        desc.kind = GroupKind::Quaternion;
        return desc;
    }
    if (colon == std::string::npos || rest.empty())
        throw std::invalid_argument("bad group descriptor: '" + descriptor + "'");

    if (head == "cyclic") {
        desc.kind = GroupKind::Cyclic;
        desc.params.push_back(parse_positive_int(rest, "cyclic order"));
    } else if (head == "abelian") {
        desc.kind = GroupKind::Abelian;
        for (const auto& tok : split(rest, ','))
            desc.params.push_back(parse_positive_int(tok, "abelian factor"));
    } else if (head == "dihedral") {
        desc.kind = GroupKind::Dihedral;
        const int r = parse_positive_int(rest, "dihedral parameter");
        if (r < 3)
            throw std::invalid_argument("bad group descriptor: dihedral requires r >= 3");
        desc.params.push_back(r);
    } else if (head == "perm") {
        desc.kind = GroupKind::Perm;
        int degree = 0;
        for (const auto& tok : split(rest, ','))
            desc.perm_gens.push_back(parse_perm_generator(tok, degree));
        // pad every generator to the common degree with fixed points
        for (auto& g : desc.perm_gens) {
            size_t old = g.size();
            g.resize(static_cast<size_t>(degree));
            for (size_t p = old; p < g.size(); p++) g[p] = static_cast<int>(p);
        }
    } else {
        throw std::invalid_argument("bad group descriptor: unknown family '" + head + "'");
    }
    return desc;
}

FiniteGroup::FiniteGroup(GroupDescriptor desc, std::vector<int> mul_table,
                         std::vector<std::string> names, std::vector<int> generators)
    : descriptor_(std::move(desc)),
      mul_(std::move(mul_table)),
      names_(std::move(names)),
      generators_(std::move(generators)) {
    order_ = static_cast<int>(names_.size());
    if (order_ < 1 || mul_.size() != static_cast<size_t>(order_) * order_)
        throw std::logic_error("group table size mismatch");
    for (int v : mul_)
        if (v < 0 || v >= order_) throw std::logic_error("group table entry out of range");
    for (int a = 0; a < order_; a++)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::logic_error("index 0 is not a two-sided identity");

    inv_.assign(static_cast<size_t>(order_), -1);
    for (int a = 0; a < order_; a++) {
        for (int b = 0; b < order_; b++) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw std::logic_error("element without inverse");
    }

    elem_order_.assign(static_cast<size_t>(order_), 0);
    for (int a = 0; a < order_; a++) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul(x, a);
            k++;
        }
        elem_order_[a] = k;
    }

    abelian_ = true;
    for (int a = 0; a < order_ && abelian_; a++)
        for (int b = a + 1; b < order_; b++)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }

    std::set<std::string> unique(names_.begin(), names_.end());
    if (static_cast<int>(unique.size()) != order_)
        throw std::logic_error("element names are not unique");
    for (int g : generators_)
        if (g < 0 || g >= order_) throw std::logic_error("generator index out of range");
}

int FiniteGroup::power(int a, int e) const {
    int base = e < 0 ? inv(a) : a;
    long long reps = e < 0 ? -static_cast<long long>(e) : e;
    int acc = 0;
    for (long long k = 0; k < reps; k++) acc = mul(acc, base);
    return acc;
}

int FiniteGroup::element_index(const std::string& name) const {
    for (int a = 0; a < order_; a++)
        if (names_[a] == name) return a;
    return -1;
}

namespace {

// Shortest-word names over the canonical generators, BFS from the identity.
std::vector<std::string> bfs_word_names(int order, const std::vector<int>& mul,
                                        const std::vector<int>& gens,
                                        const std::vector<std::string>& gen_names) {
    std::vector<std::string> word(static_cast<size_t>(order));
    std::vector<char> named(static_cast<size_t>(order), 0);
    named[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (size_t i = 0; i < gens.size(); i++) {
            int y = mul[static_cast<size_t>(x) * order + gens[i]];
            if (!named[y]) {
                named[y] = 1;
                word[y] = word[x] + gen_names[i];
                q.push(y);
            }
        }
    }
    std::vector<std::string> names(static_cast<size_t>(order));
    names[0] = "1";
    for (int a = 1; a < order; a++) {
        if (!named[a]) throw std::logic_error("generators do not reach every element");
        names[a] = word[a];
    }
    return names;
}

FiniteGroup build_cyclic(const GroupDescriptor& desc, int k) {
    std::vector<int> mul(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; a++)
        for (int b = 0; b < k; b++) mul[static_cast<size_t>(a) * k + b] = (a + b) % k;
    std::vector<std::string> names(static_cast<size_t>(k));
    names[0] = "1";
    for (int a = 1; a < k; a++)
        names[a] = a == 1 ? "s" : "s^" + std::to_string(a);
    std::vector<int> gens;
    if (k > 1) gens.push_back(1);
    return FiniteGroup(desc, std::move(mul), std::move(names), std::move(gens));
}

FiniteGroup build_abelian(const GroupDescriptor& desc, const std::vector<int>& factors, int order_cap) {
    long long order = 1;
    for (int d : factors) {
        order *= d;
        if (order > order_cap)
            throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
    }
    const int n = static_cast<int>(order);
    const int m = static_cast<int>(factors.size());

    std::vector<int> stride(static_cast<size_t>(m), 1);
    for (int i = m - 2; i >= 0; i--) stride[i] = stride[i + 1] * factors[i + 1];
    auto tuple_of = [&](int idx) {
        std::vector<int> t(static_cast<size_t>(m));
        for (int i = 0; i < m; i++) {
            t[i] = idx / stride[i];
            idx %= stride[i];
        }
        return t;
    };
    auto index_of = [&](const std::vector<int>& t) {
        int idx = 0;
        for (int i = 0; i < m; i++) idx += t[i] * stride[i];
        return idx;
    };

    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; a++) {
        auto ta = tuple_of(a);
        for (int b = 0; b < n; b++) {
            auto tb = tuple_of(b);
            std::vector<int> tc(static_cast<size_t>(m));
            for (int i = 0; i < m; i++) tc[i] = (ta[i] + tb[i]) % factors[i];
            mul[static_cast<size_t>(a) * n + b] = index_of(tc);
        }
    }

    std::vector<std::string> names(static_cast<size_t>(n));
    for (int a = 0; a < n; a++) {
        auto t = tuple_of(a);
        std::string s;
        for (int i = 0; i < m; i++) {
            if (t[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "s" + std::to_string(i + 1);
            if (t[i] > 1) s += "^" + std::to_string(t[i]);
        }
        names[a] = s.empty() ? "1" : s;
    }

    std::vector<int> gens;
    for (int i = 0; i < m; i++)
        if (factors[i] > 1) gens.push_back(stride[i]);
    return FiniteGroup(desc, std::move(mul), std::move(names), std::move(gens));
}

// Order 2r: indices 0..r-1 are rotations rho^j (rho = s1*s2), r..2r-1 are
// rho^j*s1. Relations s1^2 = s2^2 = (s1 s2)^r = 1.
FiniteGroup build_dihedral(const GroupDescriptor& desc, int r, int order_cap) {
    const int n = 2 * r;
    if (n > order_cap)
        throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
    std::vector<int> mul(static_cast<size_t>(n) * n);
    auto at = [&](int a, int b) -> int& { return mul[static_cast<size_t>(a) * n + b]; };
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++) {
            at(i, j) = (i + j) % r;                       // rho^i * rho^j
            at(i, r + j) = r + (i + j) % r;               // rho^i * rho^j s1
            at(r + i, j) = r + ((i - j) % r + r) % r;     // rho^i s1 * rho^j
            at(r + i, r + j) = ((i - j) % r + r) % r;     // rho^i s1 * rho^j s1
        }
    }
    const int s1 = r;
    const int s2 = r + r - 1;  // rho^{-1} s1
    auto names = bfs_word_names(n, mul, {s1, s2}, {"s1", "s2"});
    return FiniteGroup(desc, std::move(mul), std::move(names), {s1, s2});
}

FiniteGroup build_quaternion(const GroupDescriptor& desc) {
    // index = axis*2 + (sign<0), axes 1,i,j,k
    auto idx = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
    // axis multiplication: result axis and sign
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
    std::vector<int> mul(64);
    for (int a = 0; a < 8; a++)
        for (int b = 0; b < 8; b++) {
            int ax = a / 2, bx = b / 2;
            int sa = a % 2 ? -1 : +1, sb = b % 2 ? -1 : +1;
            mul[static_cast<size_t>(a) * 8 + b] =
                idx(axis_mul[ax][bx], sa * sb * sign_mul[ax][bx]);
        }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup(desc, std::move(mul), std::move(names), {idx(1, +1), idx(2, +1)});
}

FiniteGroup build_perm(const GroupDescriptor& desc, int order_cap) {
    if (desc.perm_gens.empty())
        throw std::invalid_argument("bad group descriptor: perm needs at least one generator");
    size_t degree = 0;
    for (const auto& g : desc.perm_gens) degree = std::max(degree, g.size());
    std::vector<std::vector<int>> gens = desc.perm_gens;
    for (auto& g : gens) {
        size_t old = g.size();
        g.resize(degree);
        for (size_t p = old; p < degree; p++) g[p] = static_cast<int>(p);
    }

    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (size_t p = 0; p < degree; p++) c[p] = a[static_cast<size_t>(b[p])];
        return c;
    };

    std::vector<int> ident(degree);
    for (size_t p = 0; p < degree; p++) ident[p] = static_cast<int>(p);

    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    elems.push_back(ident);
    index[ident] = 0;
    for (size_t head = 0; head < elems.size(); head++) {
        for (const auto& g : gens) {
            auto y = compose(elems[head], g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                elems.push_back(y);
                if (static_cast<int>(elems.size()) > order_cap)
                    throw CapExceeded("permutation closure exceeds order cap " +
                                      std::to_string(order_cap));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            mul[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));

    std::vector<int> gen_idx;
    std::vector<std::string> gen_names;
    for (size_t i = 0; i < gens.size(); i++) {
        gen_idx.push_back(index.at(gens[i]));
        gen_names.push_back("g" + std::to_string(i + 1));
    }
    auto names = bfs_word_names(n, mul, gen_idx, gen_names);
    return FiniteGroup(desc, std::move(mul), std::move(names), std::move(gen_idx));
}

}  // namespace

FiniteGroup build_group(const GroupDescriptor& desc, int order_cap) {
    switch (desc.kind) {
        case GroupKind::Cyclic: {
            const int k = desc.params.at(0);
            if (k > order_cap)
                throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
            return build_cyclic(desc, k);
        }
        case GroupKind::Abelian:
            return build_abelian(desc, desc.params, order_cap);
        case GroupKind::Dihedral:
            return build_dihedral(desc, desc.params.at(0), order_cap);
        case GroupKind::Quaternion:
            if (order_cap < 8)
                throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
            return build_quaternion(desc);
        case GroupKind::Perm:
            return build_perm(desc, order_cap);
    }
    throw std::logic_error("unreachable group kind");
}

FiniteGroup build_group(const std::string& descriptor, int order_cap) {
    return build_group(GroupDescriptor::parse(descriptor), order_cap);
}

namespace {

// Members of the subgroup generated by a set, via BFS from the identity.
// Finite order makes inverses redundant (x^-1 is a positive power of x).
std::vector<int> subgroup_members(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<size_t>(G.order()), 0);
    std::vector<int> members;
    in[0] = 1;
    members.push_back(0);
    for (size_t head = 0; head < members.size(); head++)
        for (int g : gens) {
            int y = G.mul(members[head], g);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

// Memoized minimum number of extra generators needed to grow a subgroup to G.
struct MuSolver {
    const FiniteGroup& G;
    std::map<std::vector<int>, int> memo;

    explicit MuSolver(const FiniteGroup& g) : G(g) {}

    int deficit(const std::vector<int>& members) {
        if (static_cast<int>(members.size()) == G.order()) return 0;
        auto it = memo.find(members);
        if (it != memo.end()) return it->second;
        memo[members] = G.order();  // guard against re-entry
        std::vector<char> in(static_cast<size_t>(G.order()), 0);
        for (int x : members) in[x] = 1;
        int best = G.order();
        for (int g = 0; g < G.order(); g++) {
            if (in[g]) continue;
            auto grown = extend(members, g);
            best = std::min(best, 1 + deficit(grown));
        }
        memo[members] = best;
        return best;
    }

    std::vector<int> extend(const std::vector<int>& members, int g) {
        std::vector<int> gens = members;
        gens.push_back(g);
        return subgroup_members(G, gens);
    }
};

}  // namespace

bool generates(const FiniteGroup& G, const std::vector<int>& tuple) {
    for (int x : tuple)
        if (x < 0 || x >= G.order()) throw std::invalid_argument("element index out of range");
    return static_cast<int>(subgroup_members(G, tuple).size()) == G.order();
}

int mu(const FiniteGroup& G) {
    MuSolver solver(G);
    return std::max(1, solver.deficit({0}));
}

std::vector<int> minimal_generating_tuple(const FiniteGroup& G) {
    MuSolver solver(G);
    std::vector<int> members = {0};
    std::vector<int> tuple;
    int remaining = solver.deficit(members);
    while (remaining > 0) {
        std::vector<char> in(static_cast<size_t>(G.order()), 0);
        for (int x : members) in[x] = 1;
        for (int g = 0; g < G.order(); g++) {
            if (in[g]) continue;
            auto grown = solver.extend(members, g);
            if (solver.deficit(grown) == remaining - 1) {
                tuple.push_back(g);
                members = std::move(grown);
                break;
            }
        }
        remaining--;
    }
    if (tuple.empty()) tuple.push_back(0);  // trivial group: the 1-tuple (1)
    return tuple;
}

bool Character::trivial() const {
    for (int8_t v : values)
        if (v != 1) return false;
    return true;
}

bool Character::operator<(const Character& other) const {
    // +1 sorts before -1 so the trivial character is least
    for (size_t k = 0; k < values.size(); k++)
        if (values[k] != other.values[k]) return values[k] > other.values[k];
    return false;
}

std::vector<Character> homs_to_C2(const FiniteGroup& G) {
    const auto gens = minimal_generating_tuple(G);
    const int m = static_cast<int>(gens.size());
    const int N = G.order();
    std::vector<Character> result;

    for (int mask = 0; mask < (1 << m); mask++) {
        std::vector<int8_t> val(static_cast<size_t>(N), 0);
        val[0] = 1;
        std::vector<int> frontier = {0};
        bool ok = true;
        for (size_t head = 0; head < frontier.size() && ok; head++) {
            int x = frontier[head];
            for (int i = 0; i < m; i++) {
                int y = G.mul(x, gens[i]);
                int8_t want = static_cast<int8_t>(val[x] * ((mask >> i & 1) ? -1 : 1));
                if (val[y] == 0) {
                    val[y] = want;
                    frontier.push_back(y);
                } else if (val[y] != want) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        // full homomorphism check; cheap at these orders
        for (int a = 0; a < N && ok; a++)
            for (int b = 0; b < N; b++)
                if (val[G.mul(a, b)] != val[a] * val[b]) {
                    ok = false;
                    break;
                }
        if (ok) result.push_back(Character{std::move(val)});
    }

    std::sort(result.begin(), result.end());
    return result;
}

int h1_rank(const FiniteGroup& G) {
    size_t count = homs_to_C2(G).size();
    int r = 0;
    while ((size_t{1} << r) < count) r++;
    return r;
}

Automorphism Automorphism::inverse() const {
    std::vector<int> inv(images.size());
    for (size_t x = 0; x < images.size(); x++) inv[static_cast<size_t>(images[x])] = static_cast<int>(x);
    return Automorphism{std::move(inv)};
}

namespace {

// Extends generator images to a map on the subgroup they generate.
// Returns false on any inconsistency or injectivity failure.
bool extend_images(const FiniteGroup& G, const std::vector<int>& gens,
                   const std::vector<int>& images, std::vector<int>& map_out,
                   int& covered) {
    const int N = G.order();
    map_out.assign(static_cast<size_t>(N), -1);
    std::vector<char> used(static_cast<size_t>(N), 0);
    map_out[0] = 0;
    used[0] = 1;
    std::vector<int> frontier = {0};
    for (size_t head = 0; head < frontier.size(); head++) {
        int x = frontier[head];
        for (size_t i = 0; i < gens.size(); i++) {
            int y = G.mul(x, gens[i]);
            int w = G.mul(map_out[x], images[i]);
            if (map_out[y] == -1) {
                if (used[w]) return false;
                map_out[y] = w;
                used[w] = 1;
                frontier.push_back(y);
            } else if (map_out[y] != w) {
                return false;
            }
        }
    }
    covered = static_cast<int>(frontier.size());
    return true;
}

void search_automorphisms(const FiniteGroup& G, const std::vector<int>& gens,
                          const std::vector<std::vector<int>>& candidates,
                          std::vector<int>& images, size_t depth,
                          std::vector<Automorphism>& out) {
    if (depth == gens.size()) {
        std::vector<int> map;
        int covered = 0;
        if (extend_images(G, gens, images, map, covered) && covered == G.order())
            out.push_back(Automorphism{std::move(map)});
        return;
    }
    std::vector<int> prefix_gens(gens.begin(), gens.begin() + static_cast<long>(depth) + 1);
    for (int cand : candidates[depth]) {
        images.push_back(cand);
        std::vector<int> map;
        int covered = 0;
        if (extend_images(G, prefix_gens, images, map, covered))
            search_automorphisms(G, gens, candidates, images, depth + 1, out);
        images.pop_back();
    }
}

}  // namespace

std::vector<Automorphism> automorphisms(const FiniteGroup& G, int order_cap) {
    if (G.order() > order_cap)
        throw CapExceeded("automorphism enumeration: group order exceeds cap " +
                          std::to_string(order_cap));
    const auto gens = minimal_generating_tuple(G);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); i++) {
        int want = G.element_order(gens[i]);
        for (int h = 0; h < G.order(); h++)
            if (G.element_order(h) == want) candidates[i].push_back(h);
    }
    std::vector<Automorphism> out;
    std::vector<int> images;
    search_automorphisms(G, gens, candidates, images, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Character>> epi_orbits_under_aut(const FiniteGroup& G) {
    auto chars = homs_to_C2(G);
    std::vector<Character> epis;
    for (auto& c : chars)
        if (!c.trivial()) epis.push_back(c);

    const auto auts = automorphisms(G);
    std::vector<std::vector<int>> aut_inv;
    for (const auto& a : auts) aut_inv.push_back(a.inverse().images);

    std::set<Character> unseen(epis.begin(), epis.end());
    std::vector<std::vector<Character>> orbits;
    while (!unseen.empty()) {
        std::set<Character> orbit;
        std::vector<Character> frontier = {*unseen.begin()};
        orbit.insert(frontier[0]);
        for (size_t head = 0; head < frontier.size(); head++) {
            for (const auto& ainv : aut_inv) {
                std::vector<int8_t> moved(frontier[head].values.size());
                for (size_t x = 0; x < moved.size(); x++)
                    moved[x] = frontier[head].values[static_cast<size_t>(ainv[x])];
                Character c{std::move(moved)};
                if (orbit.insert(c).second) frontier.push_back(c);
            }
        }
        std::vector<Character> sorted_orbit(orbit.begin(), orbit.end());
        orbits.push_back(std::move(sorted_orbit));
        for (const auto& c : orbits.back()) unseen.erase(c);
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

}  // namespace freeact
