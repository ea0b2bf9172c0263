#pragma once

#include <string>
#include <utility>
#include <vector>

namespace stralg {

// One verified axiom or property, with machine-readable tag.
struct AxiomResult {
    std::string tag;
    bool pass = false;
    long checked = 0;                       // number of instances examined
    std::string detail;                     // short human-readable summary
    std::vector<std::string> counterexamples;
    bool probabilistic = false;             // some verdicts used randomized fallback
};

struct Verdict {
    std::string title;
    std::vector<std::pair<std::string, std::string>> config; // ordered
    std::vector<AxiomResult> axioms;

    bool pass() const {
        for (const auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
    void add(AxiomResult a) { axioms.push_back(std::move(a)); }
};

// Plain-text and structured renderings. Both are byte-stable for a fixed
// (input, config, seed); wall-clock timing never enters a report.
std::string render_text(const Verdict& v);
std::string render_json(const Verdict& v);

// Wideness reports share the same rendering pipeline via a generic table.
struct ReportTable {
    std::string title;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> lines;
    bool pass = true;
};

std::string render_text(const ReportTable& t);

} // namespace stralg
