#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelian_group.hpp"
#include "affine.hpp"
#include "errors.hpp"
#include "gw.hpp"
#include "monomial_ideal.hpp"
#include "motivic.hpp"
#include "sheaf.hpp"
#include "simplicial_complex.hpp"
#include "splitting.hpp"

namespace macforge {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing --

namespace detail {

inline long long parse_integer_token(const std::string& token, const char* what) {
    std::size_t consumed = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &consumed);
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + ": expected an integer, got \"" + token + "\"");
    }
    if (consumed != token.size())
        throw parse_error(std::string(what) + ": trailing characters in \"" + token + "\"");
    return value;
}

}  // namespace detail

/// JSON input: {"m": 4, "facets": [[1,3],[2,3],[2,4],[1,4]]}, 1-based
/// vertices.  Malformed JSON or schema violations raise parse_error; values
/// that parse but fail the complex invariants (vertex out of range, ghost
/// vertex without allow_ghost) raise validation_error from from_facets.
inline SimplicialComplex parse_complex_json(const std::string& text, bool allow_ghost = false) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("top-level JSON value must be an object");
    if (!j.contains("m")) throw parse_error("missing required key \"m\"");
    if (!j.contains("facets")) throw parse_error("missing required key \"facets\"");
    if (!j["m"].is_number_integer()) throw parse_error("\"m\" must be an integer");
    if (!j["facets"].is_array()) throw parse_error("\"facets\" must be an array of vertex lists");
    const long long m = j["m"].get<long long>();
    if (m < 1 || m > max_vertices)
        throw parse_error("\"m\" out of range [1, " + std::to_string(max_vertices) + "]");
    std::vector<std::vector<int>> facets;
    for (const Json& facet : j["facets"]) {
        if (!facet.is_array()) throw parse_error("each facet must be an array of integers");
        std::vector<int> vertices;
        for (const Json& v : facet) {
            if (!v.is_number_integer()) throw parse_error("facet entries must be integers");
            vertices.push_back(v.get<int>());
        }
        facets.push_back(std::move(vertices));
    }
    return SimplicialComplex::from_facets(static_cast<int>(m), facets, allow_ghost);
}

/// Plain-text input: first nonblank line "m=<int>", then one facet per line
/// as space-separated vertices.  Blank lines and lines starting with '#' are
/// skipped.
inline SimplicialComplex parse_complex_text(const std::string& text, bool allow_ghost = false) {
    std::istringstream stream(text);
    std::string line;
    long long m = -1;
    std::vector<std::vector<int>> facets;
    while (std::getline(stream, line)) {
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        if (line[0] == '#') continue;
        if (m < 0) {
            if (line.rfind("m=", 0) != 0)
                throw parse_error("first line must be m=<int>, got \"" + line + "\"");
            m = detail::parse_integer_token(line.substr(2), "m");
            if (m < 1 || m > max_vertices)
                throw parse_error("m out of range [1, " + std::to_string(max_vertices) + "]");
            continue;
        }
        std::istringstream words(line);
        std::vector<int> vertices;
        std::string token;
        while (words >> token)
            vertices.push_back(static_cast<int>(detail::parse_integer_token(token, "facet vertex")));
        facets.push_back(std::move(vertices));
    }
    if (m < 0) throw parse_error("empty input: expected a first line m=<int>");
    return SimplicialComplex::from_facets(static_cast<int>(m), facets, allow_ghost);
}

/// Reads a complex from a file, auto-detecting JSON (first non-whitespace
/// byte '{') versus the plain-text format.
inline SimplicialComplex parse_complex_file(const std::string& path, bool allow_ghost = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty input file: " + path);
    if (text[first] == '{') return parse_complex_json(text, allow_ghost);
    return parse_complex_text(text, allow_ghost);
}

/// FNV-1a 64-bit hash over (m, ascending face masks); identifies the input
/// complex in reports independently of facet ordering in the source file.
inline std::string input_hash(const SimplicialComplex& K) {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](std::uint32_t word) {
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (word >> (8 * byte)) & 0xffu;
            h *= 1099511628211ULL;
        }
    };
    feed(static_cast<std::uint32_t>(K.vertex_count()));
    for (std::uint32_t face : K.face_masks()) feed(face);
    std::ostringstream out;
    out << "0x" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

// ---------------------------------------------------------- serialization --

/// cpp_int as a JSON number when it fits in 64 bits, else a decimal string.
inline Json json_int(const Int& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

inline Json to_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const Int& t : g.torsion) torsion.push_back(json_int(t));
    return Json{{"rank", g.rank}, {"torsion", std::move(torsion)}, {"text", g.to_string()}};
}

/// Graded list of groups with explicit degrees; trivial degrees are kept so
/// the array index always equals the degree.
inline Json graded_groups_json(const std::vector<AbelianGroup>& groups) {
    Json out = Json::array();
    for (std::size_t d = 0; d < groups.size(); ++d) {
        Json entry = to_json(groups[d]);
        Json with_degree{{"deg", d}};
        with_degree.update(entry);
        out.push_back(std::move(with_degree));
    }
    return out;
}

inline Json vertices_json(std::uint32_t mask) {
    Json out = Json::array();
    for (int v : mask_vertices(mask)) out.push_back(v);
    return out;
}

inline Json to_json(const Summand& s) {
    Json homology = Json::array();
    for (std::size_t d = 0; d < s.homology.size(); ++d) {
        if (s.homology[d].is_trivial()) continue;
        Json torsion = Json::array();
        for (const Int& t : s.homology[d].torsion) torsion.push_back(json_int(t));
        homology.push_back(Json{{"deg", d},
                                {"rank", s.homology[d].rank},
                                {"torsion", std::move(torsion)}});
    }
    return Json{{"I", vertices_json(s.mask)},
                {"shift", s.shift},
                {"homology", std::move(homology)},
                {"trivial", s.trivial}};
}

inline Json to_json(const DecompositionReport& report) {
    Json summands = Json::array();
    for (const Summand& s : report.summands) summands.push_back(to_json(s));
    Json excluded = Json::array();
    for (std::uint32_t mask : report.excluded_masks) excluded.push_back(vertices_json(mask));
    return Json{{"flavor", flavor_name(report.flavor)},
                {"m", report.m},
                {"summands", std::move(summands)},
                {"excluded", std::move(excluded)}};
}

inline Json to_json(const SheafExpression& e) {
    Json terms = Json::array();
    for (const SheafTerm& t : e.terms()) {
        Json torsion = Json::array();
        for (const Int& d : t.group.torsion) torsion.push_back(json_int(d));
        terms.push_back(Json{{"weight", t.weight},
                             {"rank", t.group.rank},
                             {"torsion", std::move(torsion)}});
    }
    return Json{{"text", e.to_string()}, {"terms", std::move(terms)}};
}

inline Json graded_sheaf_json(const std::vector<SheafExpression>& graded) {
    Json out = Json::array();
    for (std::size_t d = 0; d < graded.size(); ++d) {
        Json entry{{"deg", d}};
        entry.update(to_json(graded[d]));
        out.push_back(std::move(entry));
    }
    return out;
}

inline Json to_json(const BigradedTable& table) {
    Json out = Json::array();
    for (const auto& [key, value] : table.entries)
        out.push_back(Json{{"i", key.first}, {"j", key.second}, {"rank", value}});
    return out;
}

inline Json to_json(const GWElement& x) {
    return Json{{"a", x.one},
                {"b", x.minus_one},
                {"rank", x.rank()},
                {"signature", x.signature()},
                {"text", x.to_string()}};
}

inline Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (std::uint32_t g : ideal.generators()) gens.push_back(vertices_json(g));
    return Json{{"m", ideal.ambient()}, {"generators", std::move(gens)}, {"text", ideal.to_string()}};
}

inline Json to_json(const RingPresentation& ring) {
    Json relations = Json::array();
    for (const Polynomial& rel : ring.relations) {
        Json terms = Json::array();
        for (const PolynomialTerm& t : rel) {
            Json vars = Json::array();
            for (int idx : t.variables) vars.push_back(ring.variables[static_cast<std::size_t>(idx)]);
            terms.push_back(Json{{"coefficient", t.coefficient}, {"variables", std::move(vars)}});
        }
        relations.push_back(Json{{"text", ring.render_relation(rel)}, {"terms", std::move(terms)}});
    }
    return Json{{"variables", ring.variables},
                {"relations", std::move(relations)},
                {"text", ring.render()}};
}

inline Json to_json(const FiltrationReport& report) {
    Json strata = Json::array();
    for (const FiltrationStratum& s : report.strata)
        strata.push_back(Json{{"level", s.level},
                              {"strata", s.stratum_count},
                              {"torus_rank", s.torus_rank},
                              {"torus_rank_ambient", s.torus_rank_ambient}});
    return Json{{"strata", std::move(strata)}, {"chi_from_strata", to_json(report.chi_from_strata)}};
}

inline Json to_json(const MotivicCohomologyDecomposition& d) {
    Json modules = Json::array();
    for (const ModuleShift& s : d.modules)
        modules.push_back(Json{{"p", s.p}, {"q", s.q}, {"multiplicity", s.multiplicity}});
    Json terms = Json::array();
    for (const MotivicGroupTerm& t : d.group_terms) {
        Json cohomology = Json::array();
        for (std::size_t deg = 0; deg < t.cohomology.size(); ++deg) {
            if (t.cohomology[deg].is_trivial()) continue;
            Json entry{{"deg", deg}};
            entry.update(to_json(t.cohomology[deg]));
            cohomology.push_back(std::move(entry));
        }
        terms.push_back(Json{{"I", vertices_json(t.mask)},
                             {"p", t.p_shift},
                             {"q", t.q_shift},
                             {"cohomology", std::move(cohomology)}});
    }
    return Json{{"module_form_available", d.module_form_available},
                {"modules", std::move(modules)},
                {"group_terms", std::move(terms)},
                {"caveat", d.caveat}};
}

inline Json complex_to_json(const SimplicialComplex& K) {
    Json facets = Json::array();
    for (std::uint32_t facet : K.facet_masks()) facets.push_back(vertices_json(facet));
    return Json{{"m", K.vertex_count()}, {"facets", std::move(facets)}};
}

// -------------------------------------------------------------- markdown --

/// (i, j) grid of a bigraded table as a markdown table: rows are i, columns
/// are j, blank cells for absent entries.
inline std::string bigraded_markdown(const BigradedTable& table) {
    if (table.entries.empty()) return "(empty table)\n";
    int i_min = 0, i_max = 0, j_min = 0, j_max = 0;
    bool first = true;
    for (const auto& [key, value] : table.entries) {
        (void)value;
        if (first) {
            i_min = i_max = key.first;
            j_min = j_max = key.second;
            first = false;
        } else {
            i_min = std::min(i_min, key.first);
            i_max = std::max(i_max, key.first);
            j_min = std::min(j_min, key.second);
            j_max = std::max(j_max, key.second);
        }
    }
    std::ostringstream out;
    out << "| i \\ j |";
    for (int j = j_min; j <= j_max; ++j) out << " " << j << " |";
    out << "\n|---|";
    for (int j = j_min; j <= j_max; ++j) out << "---|";
    out << "\n";
    for (int i = i_min; i <= i_max; ++i) {
        out << "| " << i << " |";
        for (int j = j_min; j <= j_max; ++j) {
            const long long value = table.at(i, j);
            out << " " << (value == 0 ? std::string() : std::to_string(value)) << " |";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace macforge
