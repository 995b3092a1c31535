#include "jensenlab/report_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace jensenlab {

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw std::invalid_argument("unknown output format: '" + name + "'");
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

nlohmann::json report_to_json(const ExperimentReport& rep) {
    nlohmann::json j;
    j["experiment"] = rep.experiment;
    j["group"] = rep.group;
    j["params"] = rep.params;
    j["c_measured"] = rep.c_measured;
    j["ladder"] = rep.ladder_head;
    nlohmann::json res = nlohmann::json::object();
    for (const auto& r : rep.residuals) {
        nlohmann::json entry{{"value", r.value}, {"tolerance", r.tolerance}, {"pass", r.pass}};
        if (r.informational) entry["informational"] = true;
        res[r.name] = std::move(entry);
    }
    j["residuals"] = std::move(res);
    nlohmann::json wit = nlohmann::json::array();
    for (const auto& w : rep.witnesses) {
        nlohmann::json entry{{"label", w.label}, {"value", w.value}, {"x", w.x}};
        if (!w.y.empty()) entry["y"] = w.y;
        wit.push_back(std::move(entry));
    }
    j["witnesses"] = std::move(wit);
    j["pass"] = rep.pass;
    j["seed"] = rep.seed;
    j["wall_clock_ms"] = rep.wall_clock_ms;
    return j;
}

std::string comparable_json(const ExperimentReport& rep) {
    nlohmann::json j = report_to_json(rep);
    j.erase("wall_clock_ms");
    return j.dump(2);
}

std::string emit_report(const ExperimentReport& rep, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return report_to_json(rep).dump(2) + "\n";
        case ReportFormat::csv: {
            std::string out = "experiment,group,check,value,tolerance,pass\n";
            for (const auto& r : rep.residuals) {
                out += rep.experiment + "," + rep.group + "," + r.name + "," +
                       fmt_double(r.value) + "," + fmt_double(r.tolerance) + "," +
                       (r.pass ? "true" : "false") + "\n";
            }
            return out;
        }
        case ReportFormat::text: {
            std::ostringstream os;
            os << "experiment: " << rep.experiment << "\n";
            os << "group:      " << rep.group << "\n";
            os << (rep.pass ? "PASS" : "FAIL") << "\n";
            os << "c_measured: " << fmt_double(rep.c_measured) << "\n";
            os << "ladder:     c1=" << fmt_double(rep.ladder_head[0])
               << " c2=" << fmt_double(rep.ladder_head[1])
               << " c3=" << fmt_double(rep.ladder_head[2])
               << " c4=" << fmt_double(rep.ladder_head[3]) << "\n";
            os << "seed:       " << rep.seed << "\n";
            os << "params:     " << rep.params.dump() << "\n";
            os << "residuals:\n";
            for (const auto& r : rep.residuals) {
                os << "  " << r.name << ": " << fmt_double(r.value);
                if (!r.informational) os << " (tol " << fmt_double(r.tolerance) << ")";
                os << "  [" << (r.informational ? "info" : (r.pass ? "ok" : "VIOLATION")) << "]\n";
            }
            os << "witnesses:\n";
            if (rep.witnesses.empty()) os << "  (none)\n";
            for (const auto& w : rep.witnesses) {
                os << "  " << w.label << ": x=" << w.x;
                if (!w.y.empty()) os << " y=" << w.y;
                os << " value=" << fmt_double(w.value) << "\n";
            }
            os << "wall_clock_ms: " << fmt_double(rep.wall_clock_ms) << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace jensenlab
