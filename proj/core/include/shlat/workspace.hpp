#ifndef SHLAT_WORKSPACE_HPP
#define SHLAT_WORKSPACE_HPP

#include <map>
#include <string>
#include <vector>

#include "shlat/probability.hpp"

namespace shlat {

// On-disk workspace: outcome masses as exact rational strings plus named
// label arrays, one label per outcome. Serialization is canonical, so
// serialize(parse(text)) == serialize(parse(serialize(parse(text)))).
struct WorkspaceDocument {
    std::vector<Rational> masses;
    std::map<std::string, std::vector<std::string>> variables;

    SpacePtr space() const;  // memoized
    RandomVariable variable(const std::string& name) const;

private:
    mutable SpacePtr space_;
};

// Throws ParseError on malformed text (bad JSON, wrong types, non-rational
// mass strings) and ValidationError on semantic violations (masses not
// summing to 1, label arrays of the wrong length). Messages carry the field
// path of the first offending element.
WorkspaceDocument parse_workspace(const std::string& text);

std::string serialize_workspace(const WorkspaceDocument& doc);

WorkspaceDocument load_workspace_file(const std::string& path);

}  // namespace shlat

#endif
