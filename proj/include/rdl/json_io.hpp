#pragma once

// JSON views of the library's result types.  Counts and series
// coefficients serialize as decimal strings so values round-trip losslessly
// at any magnitude.

#include "json.hpp"
#include "rdl/analysis.hpp"
#include "rdl/enumeration.hpp"
#include "rdl/tableaux.hpp"
#include "rdl/verify.hpp"
#include "rdl/viennot.hpp"

namespace rdl {

inline nlohmann::json to_json(const BigInt& v) { return v.str(); }

inline nlohmann::json to_json(const std::vector<BigInt>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline nlohmann::json to_json(const LinearRecurrenceSpec& s) {
    return {{"coeffs", s.coefficients},
            {"constant", s.constant},
            {"n0", s.n0},
            {"base", to_json(s.base)}};
}

inline nlohmann::json to_json(const RationalGF& g) {
    return {{"num", to_json(g.num)}, {"den", to_json(g.den)}};
}

inline nlohmann::json to_json(const StandardTableau& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

inline nlohmann::json to_json(const ShadowDiagram& d) {
    nlohmann::json iterations = nlohmann::json::array();
    for (const auto& lines : d.iterations) {
        nlohmann::json jlines = nlohmann::json::array();
        for (const auto& line : lines) {
            nlohmann::json jline = nlohmann::json::array();
            for (const auto& pt : line) jline.push_back({{"x", pt.x}, {"y", pt.y}});
            jlines.push_back(std::move(jline));
        }
        iterations.push_back(std::move(jlines));
    }
    return {{"iterations", std::move(iterations)}};
}

inline nlohmann::json to_json(const WilfClassReport& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : r.classes) {
        nlohmann::json patterns = nlohmann::json::array();
        for (const auto& p : cls.patterns) patterns.push_back(to_string(p));
        classes.push_back({{"patterns", std::move(patterns)},
                           {"sequence", to_json(cls.sequence)},
                           {"orbits", cls.orbits.size()},
                           {"merged", cls.merged}});
    }
    return {{"k", r.k},
            {"n_probe", r.n_probe},
            {"trivial_orbits", r.trivial_orbit_count},
            {"classes", std::move(classes)}};
}

inline nlohmann::json to_json(const VerifySuiteResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"description", c.description},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    return {{"suite", r.suite}, {"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace rdl
