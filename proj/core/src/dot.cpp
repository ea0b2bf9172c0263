#include "stralg/dot.hpp"

#include <sstream>

namespace stralg {

std::string string_module_dot(const BoundQuiverAlgebra& alg, const Word& w) {
    const Quiver& q = alg.quiver();
    StringCheck sc = is_string(alg, w);
    if (!sc.ok) throw NotAString("cannot draw a non-string: " + sc.reason);

    std::ostringstream out;
    out << "digraph string_module {\n  rankdir=LR;\n  node [shape=circle];\n";
    const int n = w.length();
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[i] = letter_target(q, w.letters[i]);
    pos[n] = letter_source(q, w.letters[n - 1]);
    for (int i = 0; i <= n; ++i)
        out << "  z" << i + 1 << " [label=\"z" << i + 1 << "@" << q.vertices[pos[i]]
            << "\"];\n";
    for (int i = 0; i < n; ++i) {
        const Letter c = w.letters[i];
        const std::string name = q.arrows[c.arrow].name;
        if (!c.inverse)
            out << "  z" << i + 2 << " -> z" << i + 1 << " [label=\"" << name << "\"];\n";
        else
            out << "  z" << i + 1 << " -> z" << i + 2 << " [label=\"" << name << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string hasse_dot(const std::vector<std::string>& labels,
                      const std::vector<std::vector<bool>>& le) {
    const int n = static_cast<int>(labels.size());
    std::ostringstream out;
    out << "digraph fragment {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < n; ++i) out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
    // covering edges: i < j with nothing strictly between
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !le[i][j] || le[j][i]) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k) {
                if (k == i || k == j) continue;
                if (le[i][k] && !le[k][i] && le[k][j] && !le[j][k]) cover = false;
            }
            if (cover) out << "  n" << i << " -> n" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace stralg
