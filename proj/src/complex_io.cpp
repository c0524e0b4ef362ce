#include "spherekit/complex_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spherekit/error.hpp"

namespace spherekit {

using ordered_json = nlohmann::ordered_json;

Complex parse_json_complex(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("facets")) {
        throw Error(ErrorCode::ParseError, "expected an object with a \"facets\" array");
    }
    try {
        std::vector<std::vector<std::string>> facets = doc.at("facets").get<std::vector<std::vector<std::string>>>();
        std::vector<std::string> labels;
        if (doc.contains("vertices")) {
            labels = doc.at("vertices").get<std::vector<std::string>>();
        } else {
            std::set<std::string> seen;
            for (const auto& f : facets) seen.insert(f.begin(), f.end());
            labels.assign(seen.begin(), seen.end());
        }
        return Complex::from_facets(std::move(labels), facets);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Complex parse_text_complex(std::string_view text) {
    std::vector<std::vector<std::string>> facets;
    std::set<std::string> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string> facet;
        std::size_t i = 0;
        while (i < line.size()) {
            const char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r') {
                ++i;
                continue;
            }
            if (static_cast<unsigned char>(c) < 0x20) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                                       std::to_string(i + 1) + ": unexpected control character");
            }
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            std::string label(line.substr(start, i - start));
            for (const auto& existing : facet) {
                if (existing == label) {
                    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                                           std::to_string(start + 1) + ": repeated label '" +
                                                           label + "' in facet");
                }
            }
            facet.push_back(std::move(label));
        }
        if (!facet.empty()) {
            seen.insert(facet.begin(), facet.end());
            facets.push_back(std::move(facet));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return Complex::from_facets({seen.begin(), seen.end()}, facets);
}

Complex parse_complex(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_complex(text);
    return parse_text_complex(text);
}

Complex read_complex_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

std::string to_json(const Complex& complex) {
    ordered_json doc;
    doc["vertices"] = complex.labels();
    ordered_json facets = ordered_json::array();
    for (const Face& f : complex.facets()) facets.push_back(complex.labels_of(f));
    doc["facets"] = std::move(facets);
    return doc.dump() + "\n";
}

std::string to_text(const Complex& complex) {
    std::string out;
    for (const Face& f : complex.facets()) {
        bool first = true;
        for (const std::string& l : complex.labels_of(f)) {
            if (!first) out += ' ';
            out += l;
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace spherekit
