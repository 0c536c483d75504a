#pragma once
// Well-formedness check through Boost's XML reader.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <sstream>
#include <string>

namespace testgen {

inline bool well_formed(const std::string& doc, boost::property_tree::ptree* out = nullptr) {
    std::istringstream in(doc);
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_xml(in, tree);
    } catch (const boost::property_tree::xml_parser_error&) {
        return false;
    }
    if (tree.size() != 1) return false;
    if (out) *out = std::move(tree);
    return true;
}

}  // namespace testgen
