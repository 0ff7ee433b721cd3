#include "kmap/map_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kmap/errors.hpp"

namespace kmap {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

std::size_t concept_index(const json& value, const std::string& field) {
    if (!value.is_number_integer())
        throw ParseError(0, field, "expected an integer concept id");
    const auto id = value.get<long long>();
    if (id < 1)
        throw ParseError(0, field, "concept ids are 1-based");
    return static_cast<std::size_t>(id);
}

const json& member(const json& object, const char* key, const std::string& path) {
    const auto it = object.find(key);
    if (it == object.end())
        throw ParseError(0, path + "." + key, "missing field");
    return *it;
}

CognitiveMap parse_json(std::string_view text, std::string name) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "", e.what());
    }
    if (!doc.is_object())
        throw ParseError(1, "$", "map document must be a JSON object");

    if (const auto v = doc.find("version"); v != doc.end()) {
        if (!v->is_string() || v->get<std::string>() != "1")
            throw ParseError(0, "$.version", "unsupported format version (expected \"1\")");
    }
    if (const auto nm = doc.find("name"); nm != doc.end()) {
        if (!nm->is_string())
            throw ParseError(0, "$.name", "expected a string");
        name = nm->get<std::string>();
    }

    const json& concepts_node = member(doc, "concepts", "$");
    if (!concepts_node.is_array())
        throw ParseError(0, "$.concepts", "expected an array");
    std::vector<Concept> concepts;
    for (std::size_t i = 0; i < concepts_node.size(); ++i) {
        const std::string path = "$.concepts[" + std::to_string(i) + "]";
        const json& c = concepts_node[i];
        if (!c.is_object())
            throw ParseError(0, path, "expected an object");
        Concept concept_entry;
        concept_entry.id = ConceptId::from_external(concept_index(member(c, "id", path), path + ".id"));
        if (const auto l = c.find("label"); l != c.end()) {
            if (!l->is_string())
                throw ParseError(0, path + ".label", "expected a string");
            concept_entry.label = l->get<std::string>();
        }
        concepts.push_back(std::move(concept_entry));
    }

    std::vector<Relation> relations;
    if (const auto rel = doc.find("relations"); rel != doc.end()) {
        if (!rel->is_array())
            throw ParseError(0, "$.relations", "expected an array");
        for (std::size_t i = 0; i < rel->size(); ++i) {
            const std::string path = "$.relations[" + std::to_string(i) + "]";
            const json& r = (*rel)[i];
            if (!r.is_object())
                throw ParseError(0, path, "expected an object");
            const json& w = member(r, "weight", path);
            if (!w.is_number())
                throw ParseError(0, path + ".weight", "expected a number");
            relations.push_back(
                {ConceptId::from_external(concept_index(member(r, "from", path), path + ".from")),
                 ConceptId::from_external(concept_index(member(r, "to", path), path + ".to")),
                 w.get<double>()});
        }
    }
    return build_map(std::move(concepts), std::move(relations), std::move(name));
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view field, std::size_t line, const char* name) {
    field = trim(field);
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line, name, "cannot parse '" + std::string(field) + "'");
    return value;
}

CognitiveMap parse_csv(std::string_view text, std::string name) {
    std::vector<Relation> relations;
    std::size_t max_id = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (line.empty() || line.front() == '#')
            continue;

        std::string_view fields[3];
        std::size_t count = 0;
        while (true) {
            const auto comma = line.find(',');
            if (count == 3)
                throw ParseError(line_no, "", "expected exactly 3 fields: from,to,weight");
            fields[count++] = line.substr(0, comma);
            if (comma == std::string_view::npos)
                break;
            line = line.substr(comma + 1);
        }
        if (count != 3)
            throw ParseError(line_no, "", "expected exactly 3 fields: from,to,weight");

        const auto from = parse_number<std::size_t>(fields[0], line_no, "from");
        const auto to = parse_number<std::size_t>(fields[1], line_no, "to");
        const auto weight = parse_number<double>(fields[2], line_no, "weight");
        if (from < 1)
            throw ParseError(line_no, "from", "concept ids are 1-based");
        if (to < 1)
            throw ParseError(line_no, "to", "concept ids are 1-based");
        max_id = std::max({max_id, from, to});
        relations.push_back(
            {ConceptId::from_external(from), ConceptId::from_external(to), weight});
    }

    std::vector<Concept> concepts(max_id);
    for (std::size_t i = 0; i < max_id; ++i)
        concepts[i].id = ConceptId{i};
    return build_map(std::move(concepts), std::move(relations), std::move(name));
}

}  // namespace

CognitiveMap parse_map(std::string_view text, MapFormat format, std::string name) {
    return format == MapFormat::json ? parse_json(text, std::move(name))
                                     : parse_csv(text, std::move(name));
}

MapFormat format_for_path(const std::filesystem::path& path) {
    auto e = path.extension().string();
    std::transform(e.begin(), e.end(), e.begin(), [](unsigned char c) { return std::tolower(c); });
    return e == ".csv" ? MapFormat::csv_edges : MapFormat::json;
}

CognitiveMap load_map(const std::filesystem::path& path, std::optional<MapFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map(buf.str(), format.value_or(format_for_path(path)), path.stem().string());
}

std::string write_map_json(const CognitiveMap& map) {
    json doc;
    doc["version"] = "1";
    doc["name"] = map.name();
    doc["concepts"] = json::array();
    for (const Concept& c : map.concepts())
        doc["concepts"].push_back({{"id", c.id.external()}, {"label", c.label}});
    doc["relations"] = json::array();
    for (const Relation& r : map.relations())
        doc["relations"].push_back(
            {{"from", r.source.external()}, {"to", r.target.external()}, {"weight", r.weight}});
    return doc.dump(2) + "\n";
}

std::string write_map_csv(const CognitiveMap& map) {
    std::string out;
    for (const Relation& r : map.relations()) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, r.weight);
        out += std::to_string(r.source.external()) + "," + std::to_string(r.target.external()) +
               "," + std::string(buf, res.ptr) + "\n";
    }
    return out;
}

}  // namespace kmap
