#include "cards/dot.hpp"

#include <ostream>

#include "cards/rules.hpp"

namespace cards {
namespace {

constexpr const char* kBottomName = "BOT";

std::string shot_text(const ShotVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

void write_arc(std::ostream& os, const std::string& from,
               const std::string& to, int pos, int p) {
    os << "  \"" << from << "\" -> \"" << to << "\"";
    if (pos == p) os << " [style=dashed]";
    os << ";\n";
}

}  // namespace

void write_dot(std::ostream& os, const TransitionGraph& g) {
    os << "digraph cards {\n";
    for (const Configuration& node : g.nodes) {
        os << "  \"" << node.str() << "\"";
        if (is_dual(node, g.params)) os << " [peripheries=2]";
        os << ";\n";
    }
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        for (const Arc& arc : g.out[u]) {
            write_arc(os, g.nodes[u].str(),
                      g.nodes[static_cast<std::size_t>(arc.to)].str(), arc.pos,
                      g.params.p);
        }
    }
    os << "}\n";
}

void write_dot(std::ostream& os, const ReducedGraph& rg) {
    os << "digraph cards_reduced {\n";
    for (const Configuration& node : rg.nodes) {
        os << "  \"" << node.str() << "\";\n";
    }
    if (rg.has_bottom) os << "  \"" << kBottomName << "\" [peripheries=2];\n";
    for (std::size_t u = 0; u < rg.nodes.size(); ++u) {
        for (const Arc& arc : rg.out[u]) {
            const std::string to =
                (rg.has_bottom && arc.to == rg.bottom_vertex())
                    ? kBottomName
                    : rg.nodes[static_cast<std::size_t>(arc.to)].str();
            write_arc(os, rg.nodes[u].str(), to, arc.pos, rg.params.p);
        }
    }
    os << "}\n";
}

void write_dot(std::ostream& os, const PosetView& pv) {
    os << "digraph hasse {\n";
    for (std::size_t i = 0; i < pv.elements.size(); ++i) {
        os << "  \"" << pv.elements[i].str() << "\" [label=\""
           << pv.elements[i].str() << " | " << shot_text(pv.shots[i])
           << "\"];\n";
    }
    if (pv.has_bottom) os << "  \"" << kBottomName << "\";\n";
    auto name_of = [&](int id) -> std::string {
        if (pv.has_bottom && id == pv.bottom_id()) return kBottomName;
        return pv.elements[static_cast<std::size_t>(id)].str();
    };
    for (int u = 0; u < pv.element_count(); ++u) {
        for (int v : pv.covers[static_cast<std::size_t>(u)]) {
            os << "  \"" << name_of(u) << "\" -> \"" << name_of(v) << "\";\n";
        }
    }
    os << "}\n";
}

void write_records(std::ostream& os, const TransitionGraph& g) {
    for (const Configuration& node : g.nodes) {
        os << "node " << node.str();
        if (is_dual(node, g.params)) os << " dual";
        if (is_fixed_point(node)) os << " fixed";
        os << "\n";
    }
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        for (const Arc& arc : g.out[u]) {
            os << "arc " << g.nodes[u].str() << " "
               << g.nodes[static_cast<std::size_t>(arc.to)].str()
               << " pos=" << arc.pos << "\n";
        }
    }
}

void write_records(std::ostream& os, const ReducedGraph& rg) {
    for (const Configuration& node : rg.nodes) {
        os << "node " << node.str();
        if (is_fixed_point(node)) os << " fixed";
        os << "\n";
    }
    if (rg.has_bottom) os << "node " << kBottomName << "\n";
    for (std::size_t u = 0; u < rg.nodes.size(); ++u) {
        for (const Arc& arc : rg.out[u]) {
            const std::string to =
                (rg.has_bottom && arc.to == rg.bottom_vertex())
                    ? kBottomName
                    : rg.nodes[static_cast<std::size_t>(arc.to)].str();
            os << "arc " << rg.nodes[u].str() << " " << to << " pos=" << arc.pos
               << "\n";
        }
    }
}

void write_records(std::ostream& os, const PosetView& pv, bool pair_table) {
    os << "origin " << pv.origin.str() << "\n";
    for (std::size_t i = 0; i < pv.elements.size(); ++i) {
        os << "element " << pv.elements[i].str() << " shot="
           << shot_text(pv.shots[i]) << "\n";
    }
    if (pv.has_bottom) os << "element " << kBottomName << "\n";
    auto name_of = [&](int id) -> std::string {
        if (pv.has_bottom && id == pv.bottom_id()) return kBottomName;
        return pv.elements[static_cast<std::size_t>(id)].str();
    };
    for (int u = 0; u < pv.element_count(); ++u) {
        for (int v : pv.covers[static_cast<std::size_t>(u)]) {
            os << "cover " << name_of(u) << " " << name_of(v) << "\n";
        }
    }
    if (pair_table) {
        const int count = static_cast<int>(pv.elements.size());
        for (int i = 0; i < count; ++i) {
            for (int j = i; j < count; ++j) {
                const Configuration& a = pv.elements[static_cast<std::size_t>(i)];
                const Configuration& b = pv.elements[static_cast<std::size_t>(j)];
                const auto glb = inf_gc(pv, a, b);
                const Configuration lub = sup_gc(pv, a, b);
                os << "pair " << a.str() << " " << b.str() << " inf="
                   << (glb ? glb->str() : kBottomName) << " sup=" << lub.str()
                   << "\n";
            }
        }
    }
}

}  // namespace cards
