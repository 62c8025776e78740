#include "shlat/workspace.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shlat {

SpacePtr WorkspaceDocument::space() const {
    if (!space_) space_ = new_space(masses);
    return space_;
}

RandomVariable WorkspaceDocument::variable(const std::string& name) const {
    auto it = variables.find(name);
    if (it == variables.end())
        throw ValidationError("unknown variable \"" + name + "\"");
    return rv(space(), it->second);
}

WorkspaceDocument parse_workspace(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("workspace: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("workspace: top level must be an object");
    if (!doc.contains("masses") || !doc["masses"].is_array())
        throw ParseError("workspace: \"masses\" must be an array of rational strings");

    WorkspaceDocument ws;
    const auto& masses = doc["masses"];
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (!masses[i].is_string())
            throw ParseError("masses[" + std::to_string(i) + "]: expected a rational string");
        auto r = parse_rational(masses[i].get<std::string>());
        if (!r)
            throw ParseError("masses[" + std::to_string(i) + "]: \"" +
                             masses[i].get<std::string>() +
                             "\" is not a rational \"p/q\" (decimals are rejected)");
        ws.masses.push_back(*r);
    }

    if (doc.contains("variables")) {
        if (!doc["variables"].is_object())
            throw ParseError("workspace: \"variables\" must be an object");
        for (const auto& [name, labels] : doc["variables"].items()) {
            if (!labels.is_array())
                throw ParseError("variables." + name + ": expected an array of labels");
            std::vector<std::string> out;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (!labels[i].is_string())
                    throw ParseError("variables." + name + "[" + std::to_string(i) +
                                     "]: expected a string label");
                out.push_back(labels[i].get<std::string>());
            }
            ws.variables.emplace(name, std::move(out));
        }
    }

    // Semantic validation, with field paths.
    try {
        ws.space();
    } catch (const Error& e) {
        throw ValidationError(std::string("masses: ") + e.what());
    }
    for (const auto& [name, labels] : ws.variables) {
        if (labels.size() != ws.masses.size())
            throw ValidationError("variables." + name + ": " + std::to_string(labels.size()) +
                                  " labels over " + std::to_string(ws.masses.size()) +
                                  " outcomes");
    }
    return ws;
}

std::string serialize_workspace(const WorkspaceDocument& doc) {
    nlohmann::json out;
    out["masses"] = nlohmann::json::array();
    for (const auto& m : doc.masses) out["masses"].push_back(to_string(m));
    out["variables"] = nlohmann::json::object();
    for (const auto& [name, labels] : doc.variables) out["variables"][name] = labels;
    return out.dump(2) + "\n";
}

WorkspaceDocument load_workspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open workspace file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

}  // namespace shlat
