#include "stralg/report.hpp"

#include "json.hpp"

#include <sstream>

namespace stralg {

std::string render_text(const Verdict& v) {
    std::ostringstream out;
    out << v.title << "\n";
    for (const auto& [k, val] : v.config) out << "  " << k << " = " << val << "\n";
    for (const auto& a : v.axioms) {
        out << (a.pass ? "[pass] " : "[FAIL] ") << a.tag;
        if (a.checked > 0) out << " (" << a.checked << " checked)";
        if (a.probabilistic) out << " [probabilistic]";
        if (!a.detail.empty()) out << " - " << a.detail;
        out << "\n";
        for (const auto& c : a.counterexamples) out << "    counterexample: " << c << "\n";
    }
    out << "result: " << (v.pass() ? "PASS" : "FAIL") << " (" << v.axioms.size()
        << " axioms)\n";
    return out.str();
}

std::string render_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["title"] = v.title;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, val] : v.config) cfg[k] = val;
    j["config"] = cfg;
    j["axioms"] = nlohmann::ordered_json::array();
    for (const auto& a : v.axioms) {
        nlohmann::ordered_json ja;
        ja["tag"] = a.tag;
        ja["status"] = a.pass ? "pass" : "fail";
        ja["checked"] = a.checked;
        if (a.probabilistic) ja["probabilistic"] = true;
        if (!a.detail.empty()) ja["detail"] = a.detail;
        if (!a.counterexamples.empty()) ja["counterexamples"] = a.counterexamples;
        j["axioms"].push_back(ja);
    }
    j["result"] = v.pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string render_text(const ReportTable& t) {
    std::ostringstream out;
    out << t.title << "\n";
    for (const auto& [k, val] : t.config) out << "  " << k << " = " << val << "\n";
    for (const auto& line : t.lines) out << line << "\n";
    out << "result: " << (t.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace stralg
