#include "oospc/code_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace oospc {

using nlohmann::json;

std::string to_json_text(const Code& code, const CodeMetadata& meta) {
    json words = json::array();
    for (const auto& c : code.codewords) {
        json w = json::array();
        for (const auto& e : c.elements) w.push_back({e.x, e.y});
        words.push_back(std::move(w));
    }
    json doc = {{"m", code.group.m()},
                {"n", code.group.n()},
                {"lambda_a", code.lambda_a},
                {"lambda_c", code.lambda_c},
                {"codewords", std::move(words)}};
    json md = json::object();
    if (!meta.construction.empty()) md["construction"] = meta.construction;
    if (meta.regularity) md["regularity"] = {meta.regularity->first, meta.regularity->second};
    if (!md.empty()) doc["metadata"] = std::move(md);
    return doc.dump(1) + "\n";
}

CodeFile from_json_text(const std::string& text) {
    CodeFile out;
    try {
        const json doc = json::parse(text);
        const int m = doc.at("m").get<int>();
        const int n = doc.at("n").get<int>();
        out.code = Code{GridGroup(m, n), doc.at("lambda_a").get<int>(), doc.at("lambda_c").get<int>(), {}};
        if (out.code.lambda_a < 1 || out.code.lambda_c < 1) throw std::invalid_argument("lambda values must be >= 1");
        for (const auto& w : doc.at("codewords")) {
            if (w.size() != 3) throw std::invalid_argument("a codeword must have 3 elements");
            Codeword c;
            for (size_t i = 0; i < 3; ++i) {
                const auto& e = w.at(i);
                if (e.size() != 2) throw std::invalid_argument("an element must be an [x,y] pair");
                c.elements[i] = {e.at(0).get<int>(), e.at(1).get<int>()};
                if (!out.code.group.contains(c.elements[i]))
                    throw std::invalid_argument("element " + to_string(c.elements[i]) + " is out of range");
            }
            out.code.codewords.push_back(c);
        }
        if (auto md = doc.find("metadata"); md != doc.end()) {
            if (auto it = md->find("construction"); it != md->end()) out.metadata.construction = it->get<std::string>();
            if (auto it = md->find("regularity"); it != md->end() && it->is_array() && it->size() == 2)
                out.metadata.regularity = std::pair{it->at(0).get<int>(), it->at(1).get<int>()};
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed code file: ") + e.what());
    }
    return out;
}

void save_code(const std::filesystem::path& path, const Code& code, const CodeMetadata& meta) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << to_json_text(code, meta);
    if (!f) throw std::runtime_error("write failed for " + path.string());
}

CodeFile load_code(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_json_text(ss.str());
}

std::string matrix_export(const Code& code) {
    const GridGroup& g = code.group;
    std::ostringstream os;
    for (size_t k = 0; k < code.size(); ++k) {
        if (k > 0) os << '\n';
        std::vector<std::string> rows(static_cast<size_t>(g.m()), std::string(static_cast<size_t>(g.n()), '0'));
        for (const auto& e : code.codewords[k].elements) rows[static_cast<size_t>(e.x)][static_cast<size_t>(e.y)] = '1';
        for (const auto& r : rows) os << r << '\n';
    }
    return os.str();
}

}  // namespace oospc
