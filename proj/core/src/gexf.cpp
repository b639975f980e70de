#include "snsgraph/gexf.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "snsgraph/error.hpp"
#include "xml_util.hpp"

namespace snsgraph {

namespace pt = boost::property_tree;
using detail::xml_escape;

namespace {

template <typename Annotation>
void require_cover(const InteractionGraph& graph, const Annotation* a, const char* what) {
    if (a == nullptr) return;
    for (const auto& h : graph.nodes()) {
        auto it = std::lower_bound(a->nodes.begin(), a->nodes.end(), h);
        if (it == a->nodes.end() || *it != h)
            throw DataError(std::string(what) + " does not cover node " + h.display());
    }
}

struct KindCounts {
    std::uint64_t reply = 0, mention = 0, follow = 0;
    std::uint64_t total() const { return reply + mention + follow; }
};

} // namespace

void export_gexf(const InteractionGraph& graph, std::ostream& out, const GexfAnnotations& annotations) {
    require_cover(graph, annotations.positions, "layout");
    require_cover(graph, annotations.partition, "partition");
    require_cover(graph, annotations.centrality, "centrality");

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<gexf xmlns=\"http://www.gexf.net/1.2draft\" xmlns:viz=\"http://www.gexf.net/1.2draft/viz\" "
           "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
           "xsi:schemaLocation=\"http://www.gexf.net/1.2draft http://www.gexf.net/1.2draft/gexf.xsd\" "
           "version=\"1.2\">\n"
           "  <meta>\n    <creator>snsgraph</creator>\n  </meta>\n"
           "  <graph mode=\"static\" defaultedgetype=\"directed\">\n";

    const bool node_attrs = annotations.partition != nullptr || annotations.centrality != nullptr;
    if (node_attrs) {
        out << "    <attributes class=\"node\">\n";
        if (annotations.partition) out << "      <attribute id=\"community\" title=\"community\" type=\"integer\"/>\n";
        if (annotations.centrality) out << "      <attribute id=\"eigenvector\" title=\"eigenvector\" type=\"float\"/>\n";
        out << "    </attributes>\n";
    }
    out << "    <attributes class=\"edge\">\n"
           "      <attribute id=\"reply\" title=\"reply\" type=\"integer\"/>\n"
           "      <attribute id=\"mention\" title=\"mention\" type=\"integer\"/>\n"
           "      <attribute id=\"follow\" title=\"follow\" type=\"integer\"/>\n"
           "    </attributes>\n";

    out << "    <nodes>\n";
    for (const auto& h : graph.nodes()) {
        out << "      <node id=\"" << xml_escape(h.value()) << "\" label=\"" << xml_escape(h.display()) << "\"";
        if (!node_attrs && !annotations.positions) {
            out << "/>\n";
            continue;
        }
        out << ">\n";
        if (node_attrs) {
            out << "        <attvalues>\n";
            if (annotations.partition)
                out << "          <attvalue for=\"community\" value=\"" << annotations.partition->community_of(h)
                    << "\"/>\n";
            if (annotations.centrality)
                out << fmt::format("          <attvalue for=\"eigenvector\" value=\"{}\"/>\n",
                                   annotations.centrality->score_of(h));
            out << "        </attvalues>\n";
        }
        if (annotations.positions) {
            const auto p = annotations.positions->position_of(h);
            out << fmt::format("        <viz:position x=\"{}\" y=\"{}\" z=\"0.0\"/>\n", p.x, p.y);
        }
        out << "      </node>\n";
    }
    out << "    </nodes>\n";

    std::map<std::pair<Handle, Handle>, KindCounts> pairs;
    for (const auto& [key, w] : graph.edges()) {
        auto& counts = pairs[{key.source, key.target}];
        switch (key.kind) {
        case InteractionKind::Reply: counts.reply += w; break;
        case InteractionKind::Mention: counts.mention += w; break;
        case InteractionKind::Follow: counts.follow += w; break;
        }
    }
    out << "    <edges>\n";
    std::size_t id = 0;
    for (const auto& [ends, counts] : pairs) {
        out << fmt::format("      <edge id=\"{}\" source=\"{}\" target=\"{}\" weight=\"{}\">\n", id++,
                           xml_escape(ends.first.value()), xml_escape(ends.second.value()), counts.total());
        out << "        <attvalues>\n";
        if (counts.reply) out << "          <attvalue for=\"reply\" value=\"" << counts.reply << "\"/>\n";
        if (counts.mention) out << "          <attvalue for=\"mention\" value=\"" << counts.mention << "\"/>\n";
        if (counts.follow) out << "          <attvalue for=\"follow\" value=\"" << counts.follow << "\"/>\n";
        out << "        </attvalues>\n      </edge>\n";
    }
    out << "    </edges>\n  </graph>\n</gexf>\n";
    if (!out) throw IoError("GEXF sink is not writable");
}

namespace {

double parse_number(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid ") + what + " '" + text + "'");
    }
}

std::uint64_t to_count(double w) {
    const double r = std::llround(w);
    return r < 1.0 ? 1 : static_cast<std::uint64_t>(r);
}

} // namespace

InteractionGraph import_gexf(std::istream& in) {
    const auto tree = detail::read_xml_document(in, "GEXF document");
    auto root = tree.get_child_optional("gexf");
    if (!root) throw ParseError("document has no <gexf> root");
    auto graph_node = root->get_child_optional("graph");
    if (!graph_node) throw ParseError("GEXF document has no <graph>");
    const std::string default_type = detail::attribute(*graph_node, "defaultedgetype", "directed");

    // attribute id -> title, edge class only
    std::map<std::string, std::string> edge_attr_title;
    for (const auto& [name, attrs] : *graph_node) {
        if (name != "attributes" || detail::attribute(attrs, "class") != "edge") continue;
        for (const auto& [child_name, attr] : attrs)
            if (child_name == "attribute")
                edge_attr_title[detail::attribute(attr, "id")] = detail::attribute(attr, "title");
    }

    InteractionGraph g;
    std::map<std::string, Handle> by_id;
    if (auto nodes = graph_node->get_child_optional("nodes")) {
        for (const auto& [name, node] : *nodes) {
            if (name != "node") continue;
            const auto id = detail::attribute(node, "id");
            if (id.empty()) throw ParseError("GEXF node without id");
            const auto label = detail::attribute(node, "label");
            try {
                Handle h = Handle::from_display_name(label.empty() ? id : label);
                g.add_node(h);
                by_id.insert_or_assign(id, h);
            } catch (const DataError& e) {
                throw ParseError(std::string("GEXF node '") + id + "': " + e.what());
            }
        }
    }

    auto endpoint = [&](const std::string& id) -> Handle {
        if (auto it = by_id.find(id); it != by_id.end()) return it->second;
        try {
            Handle h = Handle::from_display_name(id);
            g.add_node(h);
            by_id.insert_or_assign(id, h);
            return h;
        } catch (const DataError& e) {
            throw ParseError(std::string("GEXF edge endpoint '") + id + "': " + e.what());
        }
    };

    if (auto edges = graph_node->get_child_optional("edges")) {
        for (const auto& [name, edge] : *edges) {
            if (name != "edge") continue;
            const auto source = endpoint(detail::attribute(edge, "source"));
            const auto target = endpoint(detail::attribute(edge, "target"));
            const auto weight_text = detail::attribute(edge, "weight");
            const double weight = weight_text.empty() ? 1.0 : parse_number(weight_text, "edge weight");
            auto type = detail::attribute(edge, "type", default_type);

            KindCounts counts;
            bool has_kinds = false;
            if (auto values = edge.get_child_optional("attvalues")) {
                for (const auto& [vname, value] : *values) {
                    if (vname != "attvalue") continue;
                    auto key = detail::attribute(value, "for");
                    if (auto t = edge_attr_title.find(key); t != edge_attr_title.end()) key = t->second;
                    std::uint64_t* slot = key == "reply" ? &counts.reply
                                          : key == "mention" ? &counts.mention
                                          : key == "follow" ? &counts.follow
                                                              : nullptr;
                    if (slot == nullptr) continue;
                    const double v = parse_number(detail::attribute(value, "value"), "edge attribute");
                    if (v > 0.0) {
                        *slot += to_count(v);
                        has_kinds = true;
                    }
                }
            }
            if (!has_kinds) counts.mention = to_count(weight);

            auto add = [&](const Handle& a, const Handle& b) {
                if (counts.reply) g.add_edge(a, b, InteractionKind::Reply, counts.reply);
                if (counts.mention) g.add_edge(a, b, InteractionKind::Mention, counts.mention);
                if (counts.follow) g.add_edge(a, b, InteractionKind::Follow, counts.follow);
            };
            add(source, target);
            if (type == "undirected" || type == "mutual") add(target, source);
        }
    }
    return g;
}

InteractionGraph import_gexf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open GEXF file '" + path + "'");
    return import_gexf(in);
}

} // namespace snsgraph
