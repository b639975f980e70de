#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <boost/property_tree/ptree.hpp>

namespace snsgraph::detail {

/// Escapes markup characters; control characters other than tab and newline
/// become numeric references so they survive a parse.
std::string xml_escape(std::string_view text);

/// Reads a whole XML document. Throws ParseError carrying the line number.
boost::property_tree::ptree read_xml_document(std::istream& in, const std::string& what);

/// Child text or `fallback` when the child is missing.
std::string child_text(const boost::property_tree::ptree& node, const std::string& name,
                       const std::string& fallback = {});

/// Attribute value or `fallback`.
std::string attribute(const boost::property_tree::ptree& node, const std::string& name,
                      const std::string& fallback = {});

} // namespace snsgraph::detail
