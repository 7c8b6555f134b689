#include "freeact/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "freeact/schreier.hpp"

namespace freeact {

bool ClassificationReport::counts_equal(const ClassificationReport& other) const {
    return n == other.n && genus == other.genus && mu_value == other.mu_value &&
           h1_rank == other.h1_rank && op_classes == other.op_classes &&
           or_classes == other.or_classes && nonor_classes == other.nonor_classes &&
           op_weak == other.op_weak && or_weak == other.or_weak &&
           nonor_weak == other.nonor_weak;
}

OrientabilityResult orientability_class(const FiniteGroup& G, const MarkedVector& x) {
    return orientability_class(G, x, homs_to_C2(G));
}

OrientabilityResult orientability_class(const FiniteGroup& G, const MarkedVector& x,
                                        const std::vector<Character>& chars) {
    if (x.g.empty() || x.g.size() != x.v.size())
        throw std::invalid_argument("malformed marked vector");
    for (int e : x.g)
        if (e < 0 || e >= G.order()) throw std::invalid_argument("element index out of range");
    for (const Character& chr : chars) {
        bool match = true;
        for (int k = 0; k < x.n(); k++)
            if (chr.value(x.g[k]) != x.v[k]) {
                match = false;
                break;
            }
        if (match) {
            OrientabilityResult res;
            res.kind = chr.trivial() ? ActionKind::OrientationPreserving
                                     : ActionKind::OrientationReversing;
            res.character = chr;
            return res;
        }
    }
    return OrientabilityResult{ActionKind::Nonorientable, std::nullopt};
}

void tag_partition(const FiniteGroup& G, OrbitPartition& partition) {
    const auto chars = homs_to_C2(G);
    for (OrbitRecord& orbit : partition.orbits) {
        auto res = orientability_class(G, orbit.rep, chars);
        // preserving iff the representative lives in the all-ones sector
        bool all_ones = std::all_of(orbit.rep.v.begin(), orbit.rep.v.end(),
                                    [](std::int8_t s) { return s == 1; });
        if (all_ones != (res.kind == ActionKind::OrientationPreserving))
            throw std::logic_error("sign sector and character triviality disagree");
        orbit.kind = res.kind;
        orbit.character = std::move(res.character);
    }
}

namespace {

std::vector<ActionClass> to_classes(const OrbitPartition& partition) {
    std::vector<ActionClass> classes;
    classes.reserve(partition.orbits.size());
    for (const OrbitRecord& orbit : partition.orbits)
        classes.push_back(ActionClass{orbit.rep, *orbit.kind, orbit.character, orbit.size});
    return classes;
}

void count_kinds(const std::vector<ActionClass>& classes, std::int64_t& op,
                 std::int64_t& orient_rev, std::int64_t& nonor) {
    op = orient_rev = nonor = 0;
    for (const ActionClass& c : classes) {
        switch (c.kind) {
            case ActionKind::OrientationPreserving: op++; break;
            case ActionKind::OrientationReversing: orient_rev++; break;
            case ActionKind::Nonorientable: nonor++; break;
        }
    }
}

}  // namespace

ClassificationReport classify_actions(const FiniteGroup& G, int n, std::uint64_t state_cap) {
    OrbitPartition eq = enumerate_orbits(G, n, EquivMode::Equivalence, state_cap);
    OrbitPartition weak = enumerate_orbits(G, n, EquivMode::Weak, state_cap);
    tag_partition(G, eq);
    tag_partition(G, weak);

    ClassificationReport report;
    report.group = G.descriptor_text();
    report.n = n;
    report.genus = covering_genus(G, n);
    report.mu_value = mu(G);
    report.h1_rank = h1_rank(G);
    report.classes = to_classes(eq);
    report.weak_classes = to_classes(weak);
    count_kinds(report.classes, report.op_classes, report.or_classes, report.nonor_classes);
    count_kinds(report.weak_classes, report.op_weak, report.or_weak, report.nonor_weak);
    return report;
}

std::vector<int> invariant_factors(const FiniteGroup& G) {
    if (!G.is_abelian()) throw std::invalid_argument("group is not abelian");

    // p-power factor multisets, one list per prime
    std::map<int, std::vector<int>> prime_powers;

    const GroupKind kind = G.descriptor().kind;
    if (kind == GroupKind::Cyclic || kind == GroupKind::Abelian) {
        // elementary-divisor merge of the descriptor's cyclic factors
        for (int d : G.descriptor().params) {
            for (int p = 2; p <= d; p++) {
                if (d % p) continue;
                int pe = 1;
                while (d % p == 0) {
                    pe *= p;
                    d /= p;
                }
                prime_powers[p].push_back(pe);
            }
        }
    } else {
        // from element-order counts: the number of cyclic p-factors of
        // exponent >= k equals log_p of the p^k-torsion size minus log_p of
        // the p^(k-1)-torsion size
        const int N = G.order();
        for (int p = 2; p <= N; p++) {
            if (N % p) continue;
            bool prime = true;
            for (int q = 2; q * q <= p; q++)
                if (p % q == 0) prime = false;
            if (!prime) continue;

            std::vector<int> m = {0};  // m[k] = log_p #{x : x^(p^k) = 1}
            long long pk = 1;
            long long prev = 1;
            while (true) {
                pk *= p;
                long long count = 0;
                for (int x = 0; x < N; x++)
                    if (pk % G.element_order(x) == 0) count++;
                int lg = 0;
                for (long long v = 1; v < count; v *= p) lg++;
                m.push_back(lg);
                if (count == prev) break;
                prev = count;
            }
            for (size_t k = 1; k < m.size(); k++) {
                int at_least_k = m[k] - m[k - 1];
                int at_least_next = k + 1 < m.size() ? m[k + 1] - m[k] : 0;
                int pe = 1;
                for (size_t t = 0; t < k; t++) pe *= p;
                for (int c = 0; c < at_least_k - at_least_next; c++)
                    prime_powers[p].push_back(pe);
            }
        }
    }

    size_t slots = 0;
    for (auto& [p, list] : prime_powers) {
        std::sort(list.begin(), list.end(), std::greater<int>());
        slots = std::max(slots, list.size());
    }
    std::vector<int> factors(slots, 1);
    for (auto& [p, list] : prime_powers)
        for (size_t i = 0; i < list.size(); i++) factors[i] *= list[i];
    while (!factors.empty() && factors.back() == 1) factors.pop_back();

    long long product = 1;
    for (int f : factors) product *= f;
    if (product != G.order()) throw std::logic_error("invariant factor product mismatch");
    return factors;
}

ClassificationReport abelian_formula(const FiniteGroup& G, int n) {
    const std::vector<int> factors = invariant_factors(G);  // throws if nonabelian
    if (n < 1) throw std::invalid_argument("n must be positive");

    std::vector<int> even, odd;
    for (int f : factors) (f % 2 == 0 ? even : odd).push_back(f);
    // divisibility ordering puts every even factor before every odd one
    const int k = static_cast<int>(even.size());
    const int l = static_cast<int>(odd.size());

    std::int64_t N = 1;
    if (k > 0 && even.back() == 2)
        N = 1;
    else if (l > 0)
        N = [&] {
            int d = odd.back(), phi = 0;
            for (int m = 1; m <= d; m++)
                if (std::gcd(m, d) == 1) phi++;
            return phi / 2;
        }();
    else if (k > 0)
        N = [&] {
            int e = even.back(), phi = 0;
            for (int m = 1; m <= e; m++)
                if (std::gcd(m, e) == 1) phi++;
            return phi / 2;
        }();

    const std::int64_t even_kinds =
        static_cast<std::int64_t>(std::set<int>(even.begin(), even.end()).size());

    ClassificationReport report;
    report.group = G.descriptor_text();
    report.n = n;
    report.genus = 1 + static_cast<std::int64_t>(G.order()) * (n - 1);
    report.mu_value = mu(G);
    report.h1_rank = k;

    if (n < k + l) return report;  // no generating n-vectors, all counts zero

    if (n == k + l) {
        report.op_classes = N;
        report.op_weak = 1;
        report.or_classes = ((std::int64_t{1} << k) - 1) * N;
        report.or_weak = report.or_classes > 0 ? even_kinds : 0;
        report.nonor_classes = l > 0 ? N : 0;
        report.nonor_weak = l > 0 ? 1 : 0;
    } else {
        report.op_classes = 1;
        report.op_weak = 1;
        report.or_classes = (std::int64_t{1} << k) - 1;
        report.or_weak = report.or_classes > 0 ? even_kinds : 0;
        report.nonor_classes = 1;
        report.nonor_weak = 1;
    }
    return report;
}

GenusSpectrum genus_spectrum(const FiniteGroup& G, std::int64_t genus_bound) {
    GenusSpectrum spectrum;
    spectrum.group = G.descriptor_text();
    spectrum.bound = genus_bound;
    spectrum.mu_value = mu(G);
    spectrum.h1_rank = h1_rank(G);

    const std::int64_t order = G.order();
    const std::int64_t minimal = 1 + order * (spectrum.mu_value - 1);
    for (std::int64_t n = spectrum.mu_value;; n++) {
        const std::int64_t m = 1 + order * (n - 1);
        if (m > genus_bound) break;
        spectrum.orientation_preserving.push_back(m);
        if (spectrum.h1_rank > 0) spectrum.orientation_reversing.push_back(m);
        if (m > minimal || spectrum.h1_rank < spectrum.mu_value)
            spectrum.nonorientable.push_back(m);
    }
    return spectrum;
}

bool single_class_check(const FiniteGroup& G, int n, std::uint64_t state_cap) {
    const auto classes = nielsen_classes(G, n, state_cap);
    const bool single = classes.size() == 1;
    if (single && n > mu(G)) {
        const ClassificationReport report = classify_actions(G, n, state_cap);
        const auto epi_orbits = epi_orbits_under_aut(G);
        if (report.op_classes != 1 ||
            report.or_weak != static_cast<std::int64_t>(epi_orbits.size()) ||
            report.nonor_classes != 1)
            throw std::logic_error("single-class consistency check failed for " +
                                   G.descriptor_text() + " at n=" + std::to_string(n));
    }
    return single;
}

OracleCheckResult oracle_check(const FiniteGroup& G, int n, std::uint64_t state_cap) {
    StateCodec codec(G, n, state_cap);
    const auto chars = homs_to_C2(G);
    const std::int64_t expected_genus = covering_genus(G, n);

    OracleCheckResult result;
    const std::uint64_t sectors = std::uint64_t{1} << n;
    for (std::uint64_t gcode = 0; gcode < codec.g_count(); gcode++) {
        const GenVector g = codec.decode_g(gcode);
        if (!generates(G, g)) continue;
        const SchreierGraph graph = schreier_graph(G, g);
        if (static_cast<std::int64_t>(graph.basis_cycles.size()) != expected_genus)
            result.genus_ok = false;

        for (std::uint64_t vbits = 0; vbits < sectors; vbits++) {
            MarkedVector x = codec.decode(gcode << n | vbits);
            const bool algebraic =
                orientability_class(G, x, chars).kind != ActionKind::Nonorientable;
            bool covering = true;
            for (const BasisCycle& cycle : graph.basis_cycles)
                if (word_sign(cycle.word, x.v) != 1) {
                    covering = false;
                    break;
                }
            result.states++;
            result.matrix[algebraic ? 1 : 0][covering ? 1 : 0]++;
            if (algebraic == covering)
                result.agree++;
            else
                result.mismatch++;
        }
    }
    return result;
}

}  // namespace freeact
