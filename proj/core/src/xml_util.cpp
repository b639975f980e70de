#include "xml_util.hpp"

#include <boost/property_tree/xml_parser.hpp>
#include <fmt/format.h>

#include "snsgraph/error.hpp"

namespace snsgraph::detail {

namespace pt = boost::property_tree;

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default:
            if ((c < 0x20 && ch != '\t' && ch != '\n') || c == 0x7F)
                out += fmt::format("&#x{:X};", static_cast<unsigned>(c));
            else
                out.push_back(ch);
        }
    }
    return out;
}

pt::ptree read_xml_document(std::istream& in, const std::string& what) {
    if (!in) throw IoError(what + " stream is not readable");
    pt::ptree tree;
    try {
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError("malformed " + what + ": " + e.message(), e.line());
    }
    return tree;
}

std::string child_text(const pt::ptree& node, const std::string& name, const std::string& fallback) {
    auto child = node.get_child_optional(pt::ptree::path_type(name, '\0'));
    return child ? child->data() : fallback;
}

std::string attribute(const pt::ptree& node, const std::string& name, const std::string& fallback) {
    auto attrs = node.get_child_optional("<xmlattr>");
    if (!attrs) return fallback;
    auto value = attrs->get_child_optional(pt::ptree::path_type(name, '\0'));
    return value ? value->data() : fallback;
}

} // namespace snsgraph::detail
