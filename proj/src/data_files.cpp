#include "k3mw/data_files.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#ifndef K3MW_SOURCE_DATA_DIR
#define K3MW_SOURCE_DATA_DIR ""
#endif

namespace k3mw {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

// Reduce integer coefficients of a polynomial mod m into [0, m).
Polynomial reduce_mod_int(const Polynomial& f, long long m) {
    Polynomial r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (den(c) != 1) throw std::domain_error("congruence check needs integer coefficients");
        BigInt v = num(c) % m;
        if (v < 0) v += m;
        if (v != 0) r.add_term(e, Rational(v));
    }
    return r;
}

} // namespace

Polynomial load_curve_file(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::domain_error("empty curve file: " + path);
    auto words = split_ws(header);
    if (words.size() < 2 || words[0] != "vars:")
        throw std::domain_error("curve file must start with a `vars:` header: " + path);
    std::vector<std::string> vars(words.begin() + 1, words.end());
    std::ostringstream rest;
    rest << is.rdbuf();
    return parse_poly(rest.str(), vars);
}

QuarticBundle load_quartic_bundle(const std::string& path) {
    auto j = nlohmann::json::parse(slurp(path));
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    QuarticBundle b;
    for (int i = 0; i < 3; ++i) {
        b.q[i] = parse_poly(j.at("q").at(i).get<std::string>(), vars);
        b.f[i] = parse_poly(j.at("f").at(i).get<std::string>(), vars);
    }
    // verify the stated congruences
    for (const auto& [key, m] : {std::pair<std::string, long long>{"congruences_mod2", 2},
                                 {"congruences_mod3", 3}}) {
        const auto& arr = j.at(key);
        for (int i = 0; i < 3; ++i) {
            Polynomial expected = parse_poly(arr.at(i).get<std::string>(), vars);
            if (!(reduce_mod_int(b.q[i], m) == reduce_mod_int(expected, m)))
                throw std::domain_error("bundled quartic fails its mod-" + std::to_string(m) +
                                        " congruence for q" + std::to_string(i + 1));
        }
    }
    Polynomial s(vars);
    for (int i = 0; i < 3; ++i) s = s + b.q[i] * b.f[i];
    b.surface = s;
    return b;
}

std::string data_dir() {
    if (const char* env = std::getenv("K3_DATA_DIR"); env && *env) return env;
    namespace fs = std::filesystem;
    if (fs::exists("data") && fs::is_directory("data")) return "data";
    std::string src = K3MW_SOURCE_DATA_DIR;
    if (!src.empty() && fs::exists(src)) return src;
    throw std::runtime_error("cannot locate the bundled data directory");
}

} // namespace k3mw
