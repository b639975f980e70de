#pragma once

#include <istream>
#include <ostream>

#include "snsgraph/graph.hpp"
#include "snsgraph/layout.hpp"
#include "snsgraph/model.hpp"

namespace snsgraph {

/// Optional per-node data attached to an export. Each present item must
/// cover every graph node.
struct GexfAnnotations {
    const LayoutFrame* positions = nullptr;
    const Partition* partition = nullptr;
    const CentralityVector* centrality = nullptr;
};

/**
 * GEXF 1.2 document with one directed edge per ordered pair. The edge
 * `weight` is the total over interaction kinds; per-kind counts travel as
 * integer edge attributes `reply`, `mention` and `follow`. Node ids are the
 * bare handles, labels the '@' form. `community` (integer) and `eigenvector`
 * (float) node attributes and `viz:position` appear when annotations are
 * given. Throws DataError for incomplete annotations, IoError for a failed
 * sink.
 */
void export_gexf(const InteractionGraph& graph, std::ostream& out, const GexfAnnotations& annotations = {});

/**
 * Reads nodes and weighted edges. Per-kind edge attributes are honoured when
 * present; otherwise an edge becomes a Mention with its weight rounded to a
 * count of at least 1. Undirected or mutual edges become two directed edges.
 * Unknown attributes are ignored; self-loops dropped. Throws ParseError with
 * the line for malformed XML.
 */
InteractionGraph import_gexf(std::istream& in);
InteractionGraph import_gexf_file(const std::string& path);

} // namespace snsgraph
