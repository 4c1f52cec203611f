#ifndef POWERHAM_SERIALIZE_HPP
#define POWERHAM_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "powerham/absorber.hpp"
#include "powerham/constants.hpp"
#include "powerham/generators.hpp"
#include "powerham/hamiltonian.hpp"
#include "powerham/pathcover.hpp"
#include "powerham/properties.hpp"

namespace powerham {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) {
    return to_string(r);
}

inline Json to_json(const Magnitude& m) {
    Json j;
    j["exact"] = m.exact ? Json(to_string(*m.exact)) : Json(nullptr);
    j["log2"] = m.log2;
    return j;
}

inline Json to_json(const DensenessReport& r) {
    return Json{{"d", to_string(r.d)}, {"rho_star", to_string(r.rho_star)}, {"witness", r.witness},
                {"mode", to_string(r.mode)}};
}

inline Json to_json(const InseparabilityReport& r) {
    return Json{{"mu_star", to_string(r.mu_star)}, {"witness", r.witness}, {"mode", to_string(r.mode)}};
}

inline Json to_json(const RobustMatchingReport& r) {
    return Json{{"rho", to_string(r.rho)}, {"d", to_string(r.d)}, {"matchable", r.matchable}, {"witness", r.witness}};
}

inline Json to_json(const PairedDensityReport& r) {
    return Json{{"d", to_string(r.d)}, {"rho_star", to_string(r.rho_star)}, {"x", r.x}, {"y", r.y}};
}

inline Json to_json(const ConnectableSet& s) {
    return Json{{"k", s.k}, {"zeta", to_string(s.zeta)}, {"threshold", s.threshold}, {"cliques", s.cliques}};
}

inline Json to_json(const KPath& p) {
    return Json{{"k", p.k}, {"vertices", p.vertices}};
}

inline Json to_json(const PathCover& c) {
    Json paths = Json::array();
    for (const auto& p : c.paths) {
        paths.push_back(to_json(p));
    }
    return Json{{"paths", paths}, {"leftover", c.leftover}, {"reached_stop", c.reached_stop},
                {"stop_reason", c.stop_reason}};
}

inline Json to_json(const AbsorbingPath& pa) {
    Json segments = Json::array();
    for (std::size_t s = 0; s < pa.segments.size(); ++s) {
        const auto& seg = pa.segments[s];
        const auto& member = pa.members[seg.member];
        segments.push_back(Json{{"start", seg.start},
                                {"v", member.v},
                                {"tuple", member.tuple},
                                {"spent", s < pa.spent.size() && pa.spent[s] != 0}});
    }
    return Json{{"path", to_json(pa.path)}, {"segments", segments}, {"x_end", pa.x_end}, {"y_end", pa.y_end}};
}

inline Json to_json(const Certificate& c) {
    return Json{{"k", c.k}, {"ordering", c.ordering}};
}

inline Certificate certificate_from_json(const Json& j) {
    try {
        Certificate c;
        c.k = j.at("k").get<std::size_t>();
        c.ordering = j.at("ordering").get<std::vector<Vertex>>();
        return c;
    }
    catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
}

inline Json to_json(const StageEntry& st, bool timings) {
    Json counts = Json::object();
    for (const auto& [key, value] : st.counts) {
        counts[key] = value;
    }
    Json j{{"name", st.name}, {"ok", st.ok}, {"seed", st.seed}, {"counts", counts}, {"note", st.note}};
    if (timings) {
        j["millis"] = st.millis;
    }
    return j;
}

inline Json to_json(const StageReport& r, bool timings = false) {
    Json attempts = Json::array();
    for (const auto& a : r.attempts) {
        Json stages = Json::array();
        for (const auto& st : a.stages) {
            stages.push_back(to_json(st, timings));
        }
        attempts.push_back(Json{{"attempt", a.attempt},
                                {"seed", a.seed},
                                {"ok", a.ok},
                                {"failed_stage", a.failed_stage},
                                {"message", a.message},
                                {"stages", stages}});
    }
    return Json{{"n", r.n},
                {"k", r.k},
                {"max_inner", r.max_inner},
                {"success", r.success},
                {"failed_stage", r.failed_stage},
                {"message", r.message},
                {"attempts", attempts}};
}

inline Json to_json(const GenSpec& spec) {
    Json j{{"family", to_string(spec.family)}, {"n", spec.n}, {"seed", spec.seed}};
    switch (spec.family) {
    case Family::two_cliques:
    case Family::clique_complement:
        j["mu"] = to_string(spec.mu);
        break;
    case Family::gnp:
    case Family::random_bipartite:
        j["p"] = to_string(spec.p);
        break;
    case Family::multipartite:
        j["parts"] = spec.parts;
        break;
    }
    return j;
}

inline Json to_json(const ConnectingConstants& c) {
    Json xi = Json::array();
    for (const auto& m : c.xi) {
        xi.push_back(to_json(m));
    }
    return Json{{"L", c.walk.L}, {"c", to_string(c.walk.c)}, {"xi", xi}, {"xi_final", to_json(c.xi_final)},
                {"rho", to_json(c.rho)}, {"M", c.M}};
}

inline Json to_json(const MainConstants& m) {
    Json delta = Json::array();
    for (const auto& d : m.connect.walk.delta) {
        delta.push_back(to_string(d));
    }
    return Json{{"d", to_string(m.d)},
                {"mu", to_string(m.mu)},
                {"k", m.k},
                {"path", Json{{"rho", to_string(m.path.rho)}, {"zeta", to_string(m.path.zeta)}}},
                {"absorbing",
                 Json{{"zeta", to_string(m.absorbing.zeta)},
                      {"alpha", to_string(m.absorbing.alpha)},
                      {"rho", to_json(m.absorbing.rho)},
                      {"sample_coefficient", to_string(m.absorbing.sample_coefficient)},
                      {"connecting", to_json(m.absorbing.inner)}}},
                {"zeta_connect", to_string(m.zeta_connect)},
                {"connecting", to_json(m.connect)},
                {"rho", to_json(m.rho)},
                {"reservoir_p", to_string(m.reservoir_p)},
                {"log2_n0", m.log2_n0}};
}

}

#endif /* POWERHAM_SERIALIZE_HPP */
