#pragma once

// JSON serialization: point-set files, check reports, incidence exports,
// isomorphism classes, run manifests. Files are self-describing (they embed
// the field metadata) and reproducible: the manifest carries a digest of the
// payload and no timestamps, so identical runs write identical bytes.

#include <fstream>

#include <json.hpp>

#include "movoid/classify.hpp"
#include "movoid/report.hpp"
#include "movoid/sha256.hpp"
#include "movoid/verify.hpp"

namespace movoid {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "movoid 0.1.0";

inline json field_json(const Field& f) {
    return json{{"degree", f.degree()}, {"reduction_polynomial", f.modulus()}};
}

inline json manifest_json(const std::string& command, const json& constants,
                          const std::string& payload_digest) {
    return json{{"version", kVersion},
                {"command", command},
                {"constants", constants},
                {"payload_digest", "sha256:" + payload_digest}};
}

// payload + manifest, digest over the canonical payload dump
inline json stamp(json payload, const std::string& command, const json& constants) {
    std::string digest = Sha256::of(payload.dump());
    payload["manifest"] = manifest_json(command, constants, digest);
    return payload;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot open " + path + " for writing");
    out << contents;
}

inline json pointset_json(const PointSet& X, const std::string& space_kind,
                          std::optional<uint64_t> m) {
    const ProjectiveSpace& S = X.space->space();
    json pts = json::array();
    for (uint32_t i : X.indices) {
        json row = json::array();
        for (uint32_t c : S.point(i)) row.push_back(c);
        pts.push_back(std::move(row));
    }
    json j{{"format", "movoid.pointset"},
           {"space", space_kind},
           {"q", S.q()},
           {"n", X.space->n()},
           {"field", field_json(S.field())},
           {"size", X.size()}};
    if (m) j["m"] = *m;
    j["points"] = std::move(pts);
    return j;
}

// loaders re-normalize coordinates and reject duplicate points
inline std::vector<uint32_t> load_point_indices(const json& j, const ProjectiveSpace& S) {
    if (!j.contains("points")) throw usage_error("point-set file has no \"points\" field");
    std::vector<uint32_t> idx;
    std::unordered_set<uint32_t> seen;
    for (const auto& row : j.at("points")) {
        Vec v;
        for (const auto& c : row) v.push_back(c.get<uint32_t>());
        if (v.size() != S.dim()) throw usage_error("point with wrong coordinate count");
        uint32_t i = S.index_of(v);
        if (!seen.insert(i).second) throw usage_error("duplicate point in point-set file");
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

inline json report_json(const Report& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return json{{"format", "movoid.report"},
                {"all_passed", rep.all_passed()},
                {"checks", std::move(checks)}};
}

inline json spectrum_json(const SpectrumReport& r) {
    auto dump_map = [](const std::map<uint64_t, uint64_t>& m) {
        json j = json::object();
        for (auto [k, v] : m) j[std::to_string(k)] = v;
        return j;
    };
    return json{{"generator_spectrum", dump_map(r.generator_spectrum)},
                {"line_spectrum", dump_map(r.line_spectrum)},
                {"full_line_count", r.full_line_count},
                {"hyperplane_spectrum_on", dump_map(r.hyperplane_spectrum_on)},
                {"hyperplane_spectrum_off", dump_map(r.hyperplane_spectrum_off)}};
}

inline json incidence_json(const IncidenceSystem& sys, const ProjectiveSpace& S) {
    json pts = json::array();
    for (uint32_t i = 0; i < S.size(); ++i) {
        json row = json::array();
        for (uint32_t c : S.point(i)) row.push_back(c);
        pts.push_back(std::move(row));
    }
    json cols = json::array();
    for (const auto& col : sys.column_points) cols.push_back(col);
    return json{{"format", "movoid.incidence"},
                {"rows", sys.rows},
                {"cols", sys.cols},
                {"q", S.q()},
                {"field", field_json(S.field())},
                {"points", std::move(pts)},
                {"columns", std::move(cols)}};
}

inline json classes_json(const std::vector<IsoClass>& classes, const PolarSpace& W) {
    auto dump_map = [](const std::map<uint64_t, uint64_t>& m) {
        json j = json::object();
        for (auto [k, v] : m) j[std::to_string(k)] = v;
        return j;
    };
    json out = json::array();
    for (const auto& c : classes) {
        json rep_pts = json::array();
        for (uint32_t i : c.representative) {
            json row = json::array();
            for (uint32_t x : W.space().point(i)) row.push_back(x);
            rep_pts.push_back(std::move(row));
        }
        out.push_back(json{{"m", c.generator_intersection},
                           {"orbit_size", c.orbit_size},
                           {"stabilizer_order", c.stabilizer_order},
                           {"full_line_count", c.full_line_count},
                           {"hyperplane_spectrum_on", dump_map(c.hyperplane_spectrum_on)},
                           {"hyperplane_spectrum_off", dump_map(c.hyperplane_spectrum_off)},
                           {"representative_indices", c.representative},
                           {"representative", std::move(rep_pts)}});
    }
    return out;
}

inline std::string solutions_text(const std::vector<std::vector<uint32_t>>& sols) {
    std::string out;
    for (const auto& s : sols) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace movoid
