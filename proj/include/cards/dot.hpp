#pragma once

#include <iosfwd>

#include "cards/graph.hpp"
#include "cards/order.hpp"

namespace cards {

// Graphviz exports. Nodes appear in lexicographic order and are named by
// their comma-separated text form; dual nodes get peripheries=2; the
// bottom element is the node "BOT". Arcs fired by the last player are
// dashed, every other arc is solid.
void write_dot(std::ostream& os, const TransitionGraph& g);
void write_dot(std::ostream& os, const ReducedGraph& rg);

// Hasse diagram of GC(origin); elements are labeled "cfg | shot vector".
void write_dot(std::ostream& os, const PosetView& pv);

// Line-oriented record exports with a stable field order.
void write_records(std::ostream& os, const TransitionGraph& g);
void write_records(std::ostream& os, const ReducedGraph& rg);
void write_records(std::ostream& os, const PosetView& pv,
                   bool pair_table = false);

}  // namespace cards
