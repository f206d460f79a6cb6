#ifndef STABRING_JSON_IO_HPP
#define STABRING_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "classify.hpp"
#include "graph.hpp"
#include "lattice_ring.hpp"
#include "oracle.hpp"
#include "polytope.hpp"

// JSON report schemas. Key order is fixed (ordered_json) so identical inputs
// produce byte-identical output.

namespace stabring {

inline constexpr int kSchemaVersion = 1;

using ojson = nlohmann::ordered_json;

inline ojson to_json(const LatticeFunction& mu) {
    ojson j;
    j["values"] = mu.values;
    j["deg"] = mu.deg;
    return j;
}

inline LatticeFunction lattice_function_from_json(const nlohmann::json& j) {
    LatticeFunction mu;
    mu.values = j.at("values").get<std::vector<long long>>();
    mu.deg = j.at("deg").get<long long>();
    return mu;
}

inline ojson to_json(const GorensteinVerdict& v) {
    ojson j;
    j["value"] = v.value;
    if (v.value) {
        j["witness"] = nullptr;
    } else {
        ojson w;
        if (!v.clique_a.empty()) {
            w["cliqueA"] = v.clique_a;
            w["cliqueB"] = v.clique_b;
        }
        if (!v.hole.empty()) w["hole"] = v.hole;
        w["reason"] = v.reason;
        j["witness"] = w;
    }
    return j;
}

inline ojson to_json(const GpsReport& r) {
    ojson j;
    j["verdict"] = gps_verdict_name(r.verdict);
    j["classSpectrum"] = r.primed_classes ? "size-<=3-clique" : "clique";
    ojson classes = ojson::array();
    for (const auto& c : r.classes) {
        ojson cj;
        cj["d"] = c.d;
        cj["gorenstein"] = to_json(c.gorenstein);
        classes.push_back(cj);
    }
    j["classes"] = classes;
    j["note"] = r.note;
    return j;
}

inline ojson to_json(const NearlyReport& r) {
    ojson j;
    j["verdict"] = nearly_verdict_name(r.verdict);
    j["u"] = r.u;
    j["I"] = r.I;
    ojson classes = ojson::array();
    for (const auto& c : r.classes) {
        ojson cj;
        cj["d"] = c.d;
        cj["gorenstein"] = to_json(c.gorenstein);
        classes.push_back(cj);
    }
    j["classes"] = classes;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline ojson spectrum_to_json(const ComponentSpectrum& s) {
    ojson j;
    j["components"] = s.components;
    j["cliqueNumbers"] = s.clique_numbers;
    j["I"] = s.I;
    j["u"] = s.u();
    j["IPrime"] = s.I_prime;
    return j;
}

inline ojson to_json(const ClassificationReport& rep) {
    ojson j;
    j["schemaVersion"] = kSchemaVersion;
    j["hPerfect"] = h_perfect_name(rep.h_status);
    j["spectrum"] = spectrum_to_json(rep.spectrum);
    ojson reports = ojson::array();
    for (const auto& vr : rep.variants) {
        ojson v;
        v["variant"] = variant_name(vr.variant);
        v["gorenstein"] = to_json(vr.gorenstein);
        v["gps"] = to_json(vr.gps);
        v["aInvariant"] = vr.a_invariant;
        if (vr.variant == Variant::HSTAB) {
            v["nearly"] = to_json(rep.nearly);
        } else {
            v["nearly"] = nullptr;  // only offered for the stable-set ring
        }
        v["spectrum"] = spectrum_to_json(rep.spectrum);
        v["hPerfect"] = h_perfect_name(rep.h_status);
        reports.push_back(v);
    }
    j["reports"] = reports;
    return j;
}

inline ojson to_json(const TraceQuery& q) {
    ojson j;
    j["mu"] = to_json(q.mu);
    j["member"] = q.member;
    if (q.member) {
        j["eta"] = to_json(q.canonical_part);
        j["zeta"] = to_json(q.inverse_part);
    }
    return j;
}

inline ojson to_json(const CrossCheckReport& rep) {
    ojson j;
    j["schemaVersion"] = kSchemaVersion;
    j["hPerfect"] = h_perfect_name(rep.h_status);
    ojson claims = ojson::array();
    for (const auto& e : rep.entries) {
        ojson c;
        c["claim"] = e.claim;
        c["classifier"] = e.classifier;
        c["oracle"] = e.oracle;
        c["agree"] = e.agree;
        if (!e.detail.empty()) c["detail"] = e.detail;
        claims.push_back(c);
    }
    j["claims"] = claims;
    j["allAgree"] = rep.all_agree();
    return j;
}

}  // namespace stabring

#endif
