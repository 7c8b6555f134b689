#include "freeact/report.hpp"

#include <iomanip>
#include <sstream>

namespace freeact {

using nlohmann::ordered_json;

std::string kind_name(ActionKind kind) {
    switch (kind) {
        case ActionKind::OrientationPreserving: return "orientation_preserving";
        case ActionKind::OrientationReversing: return "orientation_reversing";
        case ActionKind::Nonorientable: return "nonorientable";
    }
    return "?";
}

std::string character_text(const FiniteGroup& G, const Character& chr) {
    if (chr.trivial()) return "trivial";
    std::string s;
    for (size_t i = 0; i < G.generators().size(); i++) {
        if (i) s += ",";
        const int gen = G.generators()[i];
        s += G.name(gen) + ":" + (chr.value(gen) > 0 ? "+" : "-");
    }
    return s;
}

namespace {

std::string class_header() {
    std::ostringstream out;
    out << "  " << std::left << std::setw(24) << "kind" << std::right << std::setw(8) << "size"
        << "  " << std::left << std::setw(20) << "character"
        << "  representative\n";
    return out.str();
}

std::string class_line(const FiniteGroup& G, const ActionClass& cls) {
    std::ostringstream out;
    out << "  " << std::left << std::setw(24) << kind_name(cls.kind) << std::right
        << std::setw(8) << cls.orbit_size << "  " << std::left << std::setw(20)
        << (cls.character ? character_text(G, *cls.character) : "-") << "  "
        << to_text(G, cls.rep) << "\n";
    return out.str();
}

ordered_json class_json(const FiniteGroup& G, const ActionClass& cls) {
    ordered_json j;
    j["kind"] = kind_name(cls.kind);
    j["orbit_size"] = cls.orbit_size;
    if (cls.character)
        j["character"] = character_text(G, *cls.character);
    else
        j["character"] = nullptr;
    j["vector"] = to_text(G, cls.rep);
    return j;
}

}  // namespace

std::string render_report_table(const FiniteGroup& G, const ClassificationReport& report) {
    std::ostringstream out;
    out << "group: " << report.group << "\n"
        << "n: " << report.n << "  genus: " << report.genus << "  mu: " << report.mu_value
        << "  h1_rank: " << report.h1_rank << "\n\n";
    out << "  kind                    classes    weak\n";
    out << "  orientation_preserving" << std::setw(9) << report.op_classes << std::setw(8)
        << report.op_weak << "\n";
    out << "  orientation_reversing " << std::setw(9) << report.or_classes << std::setw(8)
        << report.or_weak << "\n";
    out << "  nonorientable         " << std::setw(9) << report.nonor_classes << std::setw(8)
        << report.nonor_weak << "\n";

    if (!report.classes.empty()) {
        out << "\nequivalence classes\n" << class_header();
        for (const ActionClass& cls : report.classes) out << class_line(G, cls);
        out << "\nweak equivalence classes\n" << class_header();
        for (const ActionClass& cls : report.weak_classes) out << class_line(G, cls);
    }
    return out.str();
}

ordered_json report_to_json(const FiniteGroup& G, const ClassificationReport& report) {
    ordered_json j;
    j["group"] = report.group;
    j["n"] = report.n;
    j["genus"] = report.genus;
    j["mu"] = report.mu_value;
    j["h1_rank"] = report.h1_rank;
    j["op"] = report.op_classes;
    j["or"] = report.or_classes;
    j["nonor"] = report.nonor_classes;
    j["op_weak"] = report.op_weak;
    j["or_weak"] = report.or_weak;
    j["nonor_weak"] = report.nonor_weak;
    ordered_json reps;
    reps["equivalence"] = ordered_json::array();
    for (const ActionClass& cls : report.classes)
        reps["equivalence"].push_back(class_json(G, cls));
    reps["weak"] = ordered_json::array();
    for (const ActionClass& cls : report.weak_classes)
        reps["weak"].push_back(class_json(G, cls));
    j["representatives"] = std::move(reps);
    return j;
}

namespace {

std::string genus_list(const std::vector<std::int64_t>& genera) {
    if (genera.empty()) return "(none)";
    std::string s;
    for (size_t i = 0; i < genera.size(); i++) {
        if (i) s += ",";
        s += std::to_string(genera[i]);
    }
    return s;
}

}  // namespace

std::string render_spectrum_table(const GenusSpectrum& spectrum) {
    std::ostringstream out;
    out << "group: " << spectrum.group << "\n"
        << "bound: " << spectrum.bound << "  mu: " << spectrum.mu_value
        << "  h1_rank: " << spectrum.h1_rank << "\n\n"
        << "  orientation_preserving  " << genus_list(spectrum.orientation_preserving) << "\n"
        << "  orientation_reversing   " << genus_list(spectrum.orientation_reversing) << "\n"
        << "  nonorientable           " << genus_list(spectrum.nonorientable) << "\n";
    return out.str();
}

ordered_json spectrum_to_json(const GenusSpectrum& spectrum) {
    ordered_json j;
    j["group"] = spectrum.group;
    j["bound"] = spectrum.bound;
    j["mu"] = spectrum.mu_value;
    j["h1_rank"] = spectrum.h1_rank;
    j["op"] = spectrum.orientation_preserving;
    j["or"] = spectrum.orientation_reversing;
    j["nonor"] = spectrum.nonorientable;
    return j;
}

std::string render_partition_table(const FiniteGroup& G, const OrbitPartition& partition) {
    std::ostringstream out;
    out << "group: " << G.descriptor_text() << "\n"
        << "n: " << partition.n << "  mode: "
        << (partition.mode == EquivMode::Weak ? "weak" : "equivalence")
        << "  orbits: " << partition.orbits.size()
        << "  generating_states: " << partition.generating_states << "\n\n";
    out << "  #       size  kind                    representative\n";
    for (size_t i = 0; i < partition.orbits.size(); i++) {
        const OrbitRecord& orbit = partition.orbits[i];
        out << "  " << std::left << std::setw(4) << i << std::right << std::setw(8)
            << orbit.size << "  " << std::left << std::setw(24)
            << (orbit.kind ? kind_name(*orbit.kind) : "-") << std::left << to_text(G, orbit.rep)
            << "\n";
    }
    return out.str();
}

ordered_json partition_to_json(const FiniteGroup& G, const OrbitPartition& partition) {
    ordered_json j;
    j["group"] = G.descriptor_text();
    j["n"] = partition.n;
    j["mode"] = partition.mode == EquivMode::Weak ? "weak" : "equivalence";
    j["orbit_count"] = partition.orbits.size();
    j["generating_states"] = partition.generating_states;
    j["orbits"] = ordered_json::array();
    for (const OrbitRecord& orbit : partition.orbits) {
        ordered_json rec;
        rec["size"] = orbit.size;
        rec["kind"] = orbit.kind ? ordered_json(kind_name(*orbit.kind)) : ordered_json(nullptr);
        rec["vector"] = to_text(G, orbit.rep);
        j["orbits"].push_back(std::move(rec));
    }
    return j;
}

std::string render_orbit_table(const FiniteGroup& G, const OrbitRecord& orbit) {
    std::ostringstream out;
    out << "orbit_size: " << orbit.size << "\n"
        << "kind: " << (orbit.kind ? kind_name(*orbit.kind) : "-") << "\n"
        << "representative: " << to_text(G, orbit.rep) << "\n";
    return out.str();
}

ordered_json orbit_to_json(const FiniteGroup& G, const OrbitRecord& orbit) {
    ordered_json j;
    j["size"] = orbit.size;
    j["kind"] = orbit.kind ? ordered_json(kind_name(*orbit.kind)) : ordered_json(nullptr);
    j["vector"] = to_text(G, orbit.rep);
    return j;
}

std::string render_nielsen_table(const FiniteGroup& G, int n,
                                 const std::vector<NielsenClass>& classes) {
    std::ostringstream out;
    out << "group: " << G.descriptor_text() << "\n"
        << "n: " << n << "  classes: " << classes.size() << "\n\n";
    out << "  #       size  representative\n";
    for (size_t i = 0; i < classes.size(); i++) {
        out << "  " << std::left << std::setw(4) << i << std::right << std::setw(8)
            << classes[i].size << "  (";
        for (size_t k = 0; k < classes[i].rep.size(); k++) {
            if (k) out << ",";
            out << G.name(classes[i].rep[k]);
        }
        out << ")\n";
    }
    return out.str();
}

ordered_json nielsen_to_json(const FiniteGroup& G, int n,
                             const std::vector<NielsenClass>& classes) {
    ordered_json j;
    j["group"] = G.descriptor_text();
    j["n"] = n;
    j["class_count"] = classes.size();
    j["classes"] = ordered_json::array();
    for (const NielsenClass& cls : classes) {
        ordered_json rec;
        rec["size"] = cls.size;
        std::string rep = "(";
        for (size_t k = 0; k < cls.rep.size(); k++) {
            if (k) rep += ",";
            rep += G.name(cls.rep[k]);
        }
        rep += ")";
        rec["representative"] = rep;
        j["classes"].push_back(std::move(rec));
    }
    return j;
}

std::string render_oracle_table(const FiniteGroup& G, int n, const OracleCheckResult& result) {
    std::ostringstream out;
    out << "group: " << G.descriptor_text() << "\n"
        << "n: " << n << "  states: " << result.states << "  agree: " << result.agree
        << "  mismatch: " << result.mismatch << "\n"
        << "genus_ok: " << (result.genus_ok ? "yes" : "no") << "\n\n"
        << "  algebraic \\ covering     orientable  nonorientable\n"
        << "  orientable              " << std::setw(10) << result.matrix[1][1] << std::setw(15)
        << result.matrix[1][0] << "\n"
        << "  nonorientable           " << std::setw(10) << result.matrix[0][1] << std::setw(15)
        << result.matrix[0][0] << "\n";
    return out.str();
}

ordered_json oracle_to_json(const FiniteGroup& G, int n, const OracleCheckResult& result) {
    ordered_json j;
    j["group"] = G.descriptor_text();
    j["n"] = n;
    j["states"] = result.states;
    j["agree"] = result.agree;
    j["mismatch"] = result.mismatch;
    j["genus_ok"] = result.genus_ok;
    j["matrix"] = {{"both_orientable", result.matrix[1][1]},
                   {"algebraic_only", result.matrix[1][0]},
                   {"covering_only", result.matrix[0][1]},
                   {"both_nonorientable", result.matrix[0][0]}};
    return j;
}

}  // namespace freeact
