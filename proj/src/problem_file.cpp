#include "slcheb/problem_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace slcheb {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

Expr parse_key(const std::map<std::string, std::string>& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error("problem definition: missing key '" + key + "'");
    try {
        return parse(it->second);
    } catch (const ParseError& e) {
        throw Error("problem definition: key '" + key + "': " + e.what());
    }
}

double constant_key(const std::map<std::string, std::string>& kv, const std::string& key,
                    std::optional<double> fallback = std::nullopt) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        if (fallback) return *fallback;
        throw Error("problem definition: missing key '" + key + "'");
    }
    Expr e = parse_key(kv, key);
    if (e.depends_on_x())
        throw Error("problem definition: key '" + key + "' must be constant, got '" +
                    it->second + "'");
    return e.eval(0.0);
}

}  // namespace

SLProblem parse_problem_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream lines(text);
    std::string line;
    int line_number = 0;
    while (std::getline(lines, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("problem definition: line " + std::to_string(line_number) +
                        " is not of the form 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error("problem definition: line " + std::to_string(line_number) +
                        " has an empty key or value");
        kv[key] = value;
    }

    static const char* known[] = {"p",         "q",         "w",          "a",
                                  "b",         "bc_left_c", "bc_left_d",  "bc_right_c",
                                  "bc_right_d", "label"};
    for (const auto& [key, value] : kv) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw Error("problem definition: unknown key '" + key + "'");
    }

    Expr p = parse_key(kv, "p");
    Expr q = parse_key(kv, "q");
    Expr w = parse_key(kv, "w");
    const double a = constant_key(kv, "a");
    const double b = constant_key(kv, "b");
    const BoundaryCondition bc_left{constant_key(kv, "bc_left_c", 1.0),
                                    constant_key(kv, "bc_left_d", 0.0)};
    const BoundaryCondition bc_right{constant_key(kv, "bc_right_c", 1.0),
                                     constant_key(kv, "bc_right_d", 0.0)};
    const auto label = kv.count("label") ? kv.at("label") : "";
    return make_problem(std::move(p), std::move(q), std::move(w), Domain(a, b), bc_left,
                        bc_right, label);
}

SLProblem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open problem file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_problem_text(buffer.str());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace slcheb
