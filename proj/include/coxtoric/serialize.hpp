#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxtoric/class_function.hpp"
#include "coxtoric/euler.hpp"
#include "coxtoric/partition.hpp"
#include "coxtoric/polynomial.hpp"
#include "coxtoric/root_system.hpp"
#include "coxtoric/symn.hpp"
#include "coxtoric/weyl_group.hpp"

namespace coxtoric {

using json = nlohmann::ordered_json;

inline json scalar_to_json(long long v) { return json(v); }
inline json scalar_to_json(const Rational& v) { return json(v.to_string()); }
template <class T>
json scalar_to_json(const Polynomial<T>& p) {
    json coeffs = json::array();
    for (const T& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
    return coeffs;
}

// 1-based generator word, the exported convention.
inline json word_json(const std::vector<int>& word) {
    json w = json::array();
    for (int g : word) w.push_back(g + 1);
    return w;
}

inline json roots_json(const RootSystem& rs) {
    json j;
    j["type"] = std::string(1, rs.type_label);
    j["rank"] = rs.rank;
    json cartan = json::array();
    for (int i = 0; i < rs.rank; ++i) {
        json row = json::array();
        for (int k = 0; k < rs.rank; ++k) row.push_back(rs.cartan.at(i, k));
        cartan.push_back(row);
    }
    j["cartan"] = cartan;
    json roots = json::array();
    for (const Root& r : rs.roots) {
        json coords = json::array();
        for (const Rational& c : r.coords) coords.push_back(c.to_string());
        roots.push_back(coords);
    }
    j["roots"] = roots;
    j["simple_indices"] = rs.simple_indices;
    return j;
}

inline json group_json(const WeylGroup& g) {
    json j;
    j["order"] = g.order();
    j["num_classes"] = g.num_classes();
    json sizes = json::array();
    for (int c = 0; c < g.num_classes(); ++c) sizes.push_back(g.class_size(c));
    j["class_sizes"] = sizes;
    j["descent_histogram"] = g.descent_histogram();
    return j;
}

template <class T>
json class_function_json(const ClassFunction<T>& f) {
    const WeylGroup& g = f.group();
    json j;
    j["group"] = {{"type", std::string(1, g.root_system().type_label)},
                  {"rank", g.root_system().rank}};
    json classes = json::array();
    for (int c = 0; c < g.num_classes(); ++c) {
        json entry;
        entry["word"] = word_json(g.word(g.class_rep(c)));
        entry["size"] = g.class_size(c);
        entry["value"] = scalar_to_json(f.value(c));
        classes.push_back(entry);
    }
    j["classes"] = classes;
    return j;
}

inline json euler_json(const WeylGroup& g, const EulerReport& rep) {
    json j;
    j["type"] = std::string(1, g.root_system().type_label);
    j["rank"] = g.root_system().rank;
    j["chi"] = rep.chi_descents;
    j["chi_descents"] = rep.chi_descents;
    j["chi_orbits"] = rep.chi_orbits;
    j["poincare_cells"] = scalar_to_json(rep.poincare_cells);
    j["poincare_orbits"] = scalar_to_json(rep.poincare_orbits);
    j["lambda"] = class_function_json(rep.lambda);
    return j;
}

template <class T>
json cycle_type_function_json(const CycleTypeFunction<T>& f) {
    json values;
    const auto& ps = partitions_of(f.n());
    for (size_t i = 0; i < ps.size(); ++i)
        values[ps[i].to_string()] = scalar_to_json(f.at(static_cast<int>(i)));
    json j;
    j["n"] = f.n();
    j["values"] = values;
    return j;
}

template <class T>
json series_json(const GradedSeries<T>& s) {
    json terms = json::array();
    for (int d = 0; d <= s.truncation(); ++d) {
        json t = cycle_type_function_json(s.term(d));
        terms.push_back(json{{"degree", d}, {"values", t["values"]}});
    }
    return json{{"truncation", s.truncation()}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// CSV and aligned-table renderings. JSON is the canonical machine format;
// these are sugar and share its orderings.

template <class T>
std::string class_function_csv(const ClassFunction<T>& f) {
    const WeylGroup& g = f.group();
    std::ostringstream os;
    os << "word,size,value\n";
    for (int c = 0; c < g.num_classes(); ++c) {
        auto w = g.word(g.class_rep(c));
        std::string ws;
        for (size_t i = 0; i < w.size(); ++i) ws += (i ? " " : "") + std::to_string(w[i] + 1);
        os << (ws.empty() ? "e" : ws) << "," << g.class_size(c) << ","
           << scalar_to_string(f.value(c)) << "\n";
    }
    return os.str();
}

template <class T>
std::string class_function_table(const ClassFunction<T>& f) {
    const WeylGroup& g = f.group();
    std::vector<std::string> words;
    size_t width = 5;
    for (int c = 0; c < g.num_classes(); ++c) {
        auto w = g.word(g.class_rep(c));
        std::string ws;
        for (size_t i = 0; i < w.size(); ++i)
            ws += (i ? "." : "") + std::string("s") + std::to_string(w[i] + 1);
        if (ws.empty()) ws = "e";
        width = std::max(width, ws.size());
        words.push_back(std::move(ws));
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width) + 2) << "class" << std::setw(8)
       << "size" << "value\n";
    for (int c = 0; c < g.num_classes(); ++c)
        os << std::left << std::setw(static_cast<int>(width) + 2) << words[static_cast<size_t>(c)]
           << std::setw(8) << g.class_size(c) << scalar_to_string(f.value(c)) << "\n";
    return os.str();
}

template <class T>
std::string cycle_type_function_csv(const CycleTypeFunction<T>& f) {
    std::ostringstream os;
    os << "cycle_type,value\n";
    const auto& ps = partitions_of(f.n());
    for (size_t i = 0; i < ps.size(); ++i)
        os << ps[i].to_string() << "," << scalar_to_string(f.at(static_cast<int>(i))) << "\n";
    return os.str();
}

template <class T>
std::string cycle_type_function_table(const CycleTypeFunction<T>& f) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "cycle type" << "value\n";
    const auto& ps = partitions_of(f.n());
    for (size_t i = 0; i < ps.size(); ++i)
        os << std::left << std::setw(20) << ps[i].to_string()
           << scalar_to_string(f.at(static_cast<int>(i))) << "\n";
    return os.str();
}

inline std::string key_value_csv(const json& j) {
    std::ostringstream os;
    os << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
        os << it.key() << "," << it.value().dump() << "\n";
    return os.str();
}

inline std::string key_value_table(const json& j) {
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it)
        os << std::left << std::setw(20) << it.key() << it.value().dump() << "\n";
    return os.str();
}

} // namespace coxtoric
