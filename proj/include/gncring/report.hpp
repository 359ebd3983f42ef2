#pragma once

/**
 * @file report.hpp
 * @brief JSON payloads for profiles, decompositions, scans and suite results, and their
 *        markdown rendering.
 *
 * Markdown is produced from the JSON value alone. Elements appear as carrier indices with
 * their structured form alongside.
 */

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "gncring/classifiers.hpp"
#include "gncring/harness.hpp"
#include "gncring/validate.hpp"

namespace gncring {

using Json = nlohmann::ordered_json;

inline Json element_json(const FiniteRing& ring, Index x) { return Json{{"index", x}, {"text", ring.format(x)}}; }

inline Json refutation_json(const FiniteRing& ring, const Refutation& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"idempotent", element_json(ring, row.idempotent)},
                            {"difference", element_json(ring, row.difference)},
                            {"reason", to_string(row.reason)}});
    return Json{{"element", element_json(ring, r.element)}, {"kind", to_string(r.kind)}, {"rows", rows}};
}

inline Json certificate_json(const FiniteRing& ring, const Certificate& c) {
    Json j{{"kind", to_string(c.kind)}};
    Json els = Json::array();
    for (Index x : c.elements) els.push_back(element_json(ring, x));
    j["elements"] = els;
    if (c.refutation) j["refutation"] = refutation_json(ring, *c.refutation);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline Json verdict_json(const FiniteRing& ring, const Verdict& v) {
    Json j{{"holds", v.holds}};
    if (v.certificate) j["certificate"] = certificate_json(ring, *v.certificate);
    return j;
}

inline Json validation_json(const ValidationReport& rep) {
    Json j{{"valid", rep.valid}, {"mode", to_string(rep.mode)}};
    if (!rep.valid) {
        j["axiom"] = rep.axiom;
        j["witness"] = rep.witness;
    }
    return j;
}

inline Json profile_json(const FiniteRing& ring, const RingProfile& p) {
    Json v = Json::object();
    for (const auto& [prop, verdict] : p.verdicts) v[to_string(prop)] = verdict_json(ring, verdict);
    return v;
}

inline Json decomposition_json(const FiniteRing& ring, const DecompositionResult& r) {
    if (const auto* d = std::get_if<Decomposition>(&r))
        return Json{{"found", true},
                    {"element", element_json(ring, d->element)},
                    {"kind", to_string(d->kind)},
                    {"idempotent_part", element_json(ring, d->idempotent_part)},
                    {"other_part", element_json(ring, d->other_part)},
                    {"commuting", d->commuting}};
    const auto& ref = std::get<Refutation>(r);
    return Json{{"found", false}, {"refutation", refutation_json(ring, ref)}};
}

inline Json scan_json(const std::vector<ZnScanRow>& rows) {
    Json a = Json::array();
    for (const auto& r : rows)
        a.push_back(Json{{"n", r.n}, {"gnc", r.gnc}, {"prime_power", r.prime_power}, {"branch", to_string(r.branch)},
                         {"agrees", r.gnc == r.prime_power}});
    return a;
}

inline Json check_certificate_json(const CheckCertificate& c) {
    Json facts = Json::array();
    for (const auto& f : c.facts) {
        Json j{{"ring", f.ring}, {"fact", f.fact}, {"value", f.value}};
        if (!f.note.empty()) j["note"] = f.note;
        facts.push_back(j);
    }
    Json j{{"ring", c.ring}, {"claim", c.claim}, {"facts", facts}};
    if (c.detail) {
        Json d{{"ring", c.detail_ring}, {"kind", to_string(c.detail->kind)}, {"elements", c.detail->elements},
               {"decoded", c.decoded}};
        if (!c.detail->note.empty()) d["note"] = c.detail->note;
        if (c.detail->refutation) {
            Json rows = Json::array();
            for (const auto& row : c.detail->refutation->rows)
                rows.push_back(Json{{"idempotent", row.idempotent}, {"difference", row.difference},
                                    {"reason", to_string(row.reason)}});
            d["refutation"] = rows;
        }
        j["detail"] = d;
    }
    return j;
}

/// Suite results; runtimes are omitted when `timing` is false so that output is byte-stable.
inline Json suite_json(const SuiteReport& rep, bool timing = true) {
    Json results = Json::array();
    for (const auto& r : rep.results) {
        Json j{{"id", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"rings_examined", r.rings_examined}};
        if (r.counterexample) j["counterexample"] = check_certificate_json(*r.counterexample);
        if (!r.skipped.empty()) j["skipped"] = r.skipped;
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", r.runtime_ms);
            j["runtime_ms"] = std::stod(buf);
        }
        results.push_back(j);
    }
    return Json{{"results", results},
                {"summary",
                 {{"total", rep.results.size()},
                  {"pass", rep.summary.pass},
                  {"fail", rep.summary.fail},
                  {"skipped", rep.summary.skipped}}}};
}

namespace detail {

inline std::string md_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out;
    for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
    return out;
}

inline std::string md_element(const Json& e) {
    return std::to_string(e.at("index").get<unsigned long long>()) + " (" + md_cell(e.at("text")) + ")";
}

inline void md_refutation(std::string& out, const Json& r) {
    out += "\n| idempotent | difference | reason |\n|---|---|---|\n";
    for (const auto& row : r.at("rows"))
        out += "| " + md_element(row.at("idempotent")) + " | " + md_element(row.at("difference")) + " | " +
               md_cell(row.at("reason")) + " |\n";
}

} // namespace detail

/// Markdown view of any report produced by the command-line front end.
inline std::string render_markdown(const Json& report) {
    std::string out;
    const std::string command = report.value("command", std::string("report"));
    out += "# " + command + "\n\n";
    if (report.contains("ring")) out += "Ring: `" + detail::md_cell(report["ring"]) + "`";
    if (report.contains("size")) out += " (" + detail::md_cell(report["size"]) + " elements)";
    if (report.contains("ring")) out += "\n\n";
    if (report.contains("validation")) {
        const auto& v = report["validation"];
        out += "Validation: " + std::string(v.at("valid").get<bool>() ? "valid" : "invalid") + " (" +
               detail::md_cell(v.at("mode")) + ")\n\n";
    }
    if (report.contains("verdicts")) {
        out += "| property | holds | certificate |\n|---|---|---|\n";
        for (const auto& [name, v] : report["verdicts"].items()) {
            std::string cert;
            if (v.contains("certificate")) {
                const auto& c = v["certificate"];
                for (const auto& e : c.at("elements")) cert += (cert.empty() ? "" : ", ") + detail::md_element(e);
                if (c.contains("note")) cert += (cert.empty() ? "" : ": ") + detail::md_cell(c["note"]);
            }
            out += "| " + name + " | " + (v.at("holds").get<bool>() ? "yes" : "no") + " | " + cert + " |\n";
        }
        out += "\n";
    }
    if (report.contains("semilocal_branch")) out += "Semilocal branch: " + detail::md_cell(report["semilocal_branch"]) + "\n\n";
    if (report.contains("decomposition")) {
        const auto& d = report["decomposition"];
        if (d.at("found").get<bool>()) {
            out += "Decomposition (" + detail::md_cell(d.at("kind")) + "): " + detail::md_element(d.at("element")) +
                   " = " + detail::md_element(d.at("idempotent_part")) + " + " + detail::md_element(d.at("other_part")) +
                   "\n";
        } else {
            const auto& r = d.at("refutation");
            out += "No " + detail::md_cell(r.at("kind")) + " decomposition of " + detail::md_element(r.at("element")) +
                   "\n";
            detail::md_refutation(out, r);
        }
        out += "\n";
    }
    if (report.contains("rows")) {
        out += "| n | gnc | prime power | branch |\n|---|---|---|---|\n";
        for (const auto& r : report["rows"])
            out += "| " + detail::md_cell(r.at("n")) + " | " + (r.at("gnc").get<bool>() ? "yes" : "no") + " | " +
                   (r.at("prime_power").get<bool>() ? "yes" : "no") + " | " + detail::md_cell(r.at("branch")) + " |\n";
        out += "\n";
    }
    if (report.contains("results")) {
        const bool timing = !report["results"].empty() && report["results"][0].contains("runtime_ms");
        out += timing ? "| ID | Result | Status | Rings | Runtime (ms) |\n|---|---|---|---|---|\n"
                      : "| ID | Result | Status | Rings |\n|---|---|---|---|\n";
        for (const auto& r : report["results"]) {
            out += "| " + detail::md_cell(r.at("id")) + " | " + detail::md_cell(r.at("anchor")) + " | " +
                   detail::md_cell(r.at("status")) + " | " + detail::md_cell(r.at("rings_examined"));
            if (timing) out += " | " + detail::md_cell(r.at("runtime_ms"));
            out += " |\n";
        }
        out += "\n";
        for (const auto& r : report["results"]) {
            if (!r.contains("counterexample")) continue;
            const auto& c = r["counterexample"];
            out += "## " + detail::md_cell(r.at("id")) + " counterexample\n\nRing `" + detail::md_cell(c.at("ring")) +
                   "` violates `" + detail::md_cell(c.at("claim")) + "`.\n\n| ring | fact | value |\n|---|---|---|\n";
            for (const auto& f : c.at("facts"))
                out += "| `" + detail::md_cell(f.at("ring")) + "` | " + detail::md_cell(f.at("fact")) + " | " +
                       (f.at("value").get<bool>() ? "true" : "false") + " |\n";
            if (c.contains("detail")) out += "\nDetail: `" + c["detail"].dump() + "`\n";
            out += "\n";
        }
        for (const auto& r : report["results"])
            if (r.contains("skipped"))
                for (const auto& s : r["skipped"]) out += "- " + detail::md_cell(r.at("id")) + " skipped " + detail::md_cell(s) + "\n";
        if (report.contains("summary")) {
            const auto& s = report["summary"];
            out += "\n**Summary:** " + detail::md_cell(s.at("pass")) + " pass, " + detail::md_cell(s.at("fail")) +
                   " fail, " + detail::md_cell(s.at("skipped")) + " skipped of " + detail::md_cell(s.at("total")) + "\n";
        }
    }
    return out;
}

} // namespace gncring
