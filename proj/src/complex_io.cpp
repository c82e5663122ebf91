#include "golod/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "golod/errors.hpp"

namespace golod {

SimplicialComplex parse_complex_text(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    int m = -1;
    std::vector<Simplex> facets;
    std::map<int, std::string> names;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // `# vertices: 1=A 2=B ...` is emitted by this tool and read back
            std::string comment = line.substr(hash + 1);
            std::istringstream cs(comment);
            std::string tok;
            if (cs >> tok && tok == "vertices:") {
                while (cs >> tok) {
                    auto eq = tok.find('=');
                    if (eq == std::string::npos) continue;
                    try {
                        names[std::stoi(tok.substr(0, eq))] = tok.substr(eq + 1);
                    } catch (const std::logic_error&) {
                    }
                }
            }
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        if (m < 0) {
            std::string tok;
            if (!(ls >> tok)) continue;  // blank/comment before header
            if (tok.rfind("m=", 0) != 0) throw ParseError(lineno, "expected header m=<count>");
            try {
                m = std::stoi(tok.substr(2));
            } catch (const std::logic_error&) {
                throw ParseError(lineno, "invalid vertex count in header");
            }
            if (m < 0) throw ParseError(lineno, "vertex count must be non-negative");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "unexpected token after header");
            continue;
        }
        Simplex f;
        long v;
        while (ls >> v) {
            if (v < 1 || v > m)
                throw ParseError(lineno, "vertex label " + std::to_string(v) + " outside [1," +
                                             std::to_string(m) + "]");
            f.push_back(static_cast<int>(v));
        }
        if (!ls.eof()) throw ParseError(lineno, "expected integer vertex labels");
        if (!f.empty()) facets.push_back(canonical_simplex(std::move(f)));
    }
    if (m < 0) throw ParseError(lineno, "missing m=<count> header");
    std::vector<std::string> name_vec;
    if (!names.empty()) {
        name_vec.resize(m);
        for (int v = 1; v <= m; ++v) {
            auto it = names.find(v);
            name_vec[v - 1] = it != names.end() ? it->second : std::to_string(v);
        }
    }
    try {
        return SimplicialComplex::from_facets(m, std::move(facets), std::move(name_vec));
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

SimplicialComplex parse_complex_json(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    try {
        int m = j.at("m").get<int>();
        std::vector<Simplex> facets;
        for (const auto& f : j.at("facets")) facets.push_back(canonical_simplex(f.get<Simplex>()));
        std::vector<std::string> names;
        if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
        return SimplicialComplex::from_facets(m, std::move(facets), std::move(names));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("bad complex document: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(1, e.what());
    }
}

SimplicialComplex parse_complex(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_complex_json(content) : parse_complex_text(content);
    }
    throw ParseError(1, "empty input");
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

std::string emit_complex_text(const SimplicialComplex& K, const std::string& header_comment) {
    std::ostringstream os;
    if (!header_comment.empty()) os << "# " << header_comment << "\n";
    if (!K.vertex_names().empty()) {
        os << "# vertices:";
        for (int v = 1; v <= K.vertex_count(); ++v) os << " " << v << "=" << K.vertex_name(v);
        os << "\n";
    }
    os << "m=" << K.vertex_count() << "\n";
    for (const auto& f : K.facets()) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << "\n";
    }
    return os.str();
}

std::string emit_complex_json(const SimplicialComplex& K) {
    nlohmann::ordered_json j;
    j["m"] = K.vertex_count();
    j["facets"] = K.facets();
    if (!K.vertex_names().empty()) j["names"] = K.vertex_names();
    return j.dump(2) + "\n";
}

}  // namespace golod
