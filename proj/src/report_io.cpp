#include "vimo/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vimo {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vec_to_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(v[i]);
    return arr;
}

Vector vec_from_json(const ordered_json& arr) {
    std::vector<double> coords;
    for (const auto& x : arr) coords.push_back(x.get<double>());
    return Vector(std::move(coords));
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict: " + s);
}

SolveStatus status_from_string(const std::string& s) {
    if (s == "converged") return SolveStatus::Converged;
    if (s == "max_iter") return SolveStatus::MaxIter;
    if (s == "infeasible") return SolveStatus::Infeasible;
    throw std::invalid_argument("unknown status: " + s);
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "table") return ReportFormat::Table;
    if (name == "records") return ReportFormat::Records;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown report format: " + name);
}

std::string emit_report(const SolveReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Records: {
            ordered_json j;
            j["record"] = "solve_report";
            j["status"] = to_string(report.status);
            j["method"] = report.method;
            j["y"] = vec_to_json(report.y);
            j["residual"] = report.residual;
            j["iterations"] = report.iterations;
            j["witness_w"] = vec_to_json(report.witness_w);
            ordered_json trace = ordered_json::array();
            for (const auto& [k, r] : report.trace) trace.push_back(ordered_json::array({k, r}));
            j["trace"] = trace;
            j["notes"] = report.notes;
            return j.dump();
        }
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "iteration,residual\n";
            for (const auto& [k, r] : report.trace) os << k << "," << r << "\n";
            return os.str();
        }
        case ReportFormat::Table: {
            std::ostringstream os;
            os << "solve report (" << report.method << ")\n";
            os << "  status     : " << to_string(report.status) << "\n";
            os << "  y          : " << report.y.str() << "\n";
            os << "  residual   : " << report.residual << "\n";
            os << "  iterations : " << report.iterations << "\n";
            os << "  witness w  : " << report.witness_w.str() << "\n";
            for (const auto& n : report.notes) os << "  note       : " << n << "\n";
            return os.str();
        }
    }
    throw std::invalid_argument("emit_report: unknown format");
}

std::string emit_report(const ClassReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Records: {
            ordered_json j;
            j["record"] = "class_report";
            j["check"] = report.check_name;
            j["verdict"] = to_string(report.verdict);
            j["margin"] = report.margin;
            j["samples_used"] = report.samples_used;
            if (report.witness) {
                ordered_json w;
                ordered_json pts = ordered_json::array();
                for (const auto& p : report.witness->points) pts.push_back(vec_to_json(p));
                w["points"] = pts;
                w["values"] = report.witness->values;
                w["detail"] = report.witness->detail;
                j["witness"] = w;
            } else {
                j["witness"] = nullptr;
            }
            j["notes"] = report.notes;
            return j.dump();
        }
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "index,value\n";
            if (report.witness) {
                for (std::size_t i = 0; i < report.witness->values.size(); ++i) {
                    os << i << "," << report.witness->values[i] << "\n";
                }
            }
            return os.str();
        }
        case ReportFormat::Table: {
            std::ostringstream os;
            os << "class check: " << report.check_name << "\n";
            os << "  verdict : " << to_string(report.verdict) << "\n";
            os << "  margin  : " << report.margin << "\n";
            os << "  samples : " << report.samples_used << "\n";
            if (report.witness) {
                os << "  witness : " << report.witness->detail << "\n";
                for (const auto& p : report.witness->points) os << "    point " << p.str() << "\n";
                for (double v : report.witness->values) os << "    value " << v << "\n";
            }
            for (const auto& n : report.notes) os << "  note    : " << n << "\n";
            return os.str();
        }
    }
    throw std::invalid_argument("emit_report: unknown format");
}

SolveReport parse_solve_report(const std::string& records_line) {
    auto j = ordered_json::parse(records_line);
    if (j.value("record", "") != "solve_report") {
        throw std::invalid_argument("parse_solve_report: not a solve_report record");
    }
    SolveReport r;
    r.status = status_from_string(j.at("status").get<std::string>());
    r.method = j.at("method").get<std::string>();
    r.y = vec_from_json(j.at("y"));
    r.residual = j.at("residual").get<double>();
    r.iterations = j.at("iterations").get<int>();
    r.witness_w = vec_from_json(j.at("witness_w"));
    for (const auto& t : j.at("trace")) {
        r.trace.emplace_back(t.at(0).get<int>(), t.at(1).get<double>());
    }
    for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
    return r;
}

ClassReport parse_class_report(const std::string& records_line) {
    auto j = ordered_json::parse(records_line);
    if (j.value("record", "") != "class_report") {
        throw std::invalid_argument("parse_class_report: not a class_report record");
    }
    ClassReport r;
    r.check_name = j.at("check").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.margin = j.at("margin").get<double>();
    r.samples_used = j.at("samples_used").get<int>();
    if (!j.at("witness").is_null()) {
        ClassWitness w;
        for (const auto& p : j.at("witness").at("points")) w.points.push_back(vec_from_json(p));
        for (const auto& v : j.at("witness").at("values")) w.values.push_back(v.get<double>());
        w.detail = j.at("witness").at("detail").get<std::string>();
        r.witness = std::move(w);
    }
    for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
    return r;
}

bool operator==(const SolveReport& a, const SolveReport& b) {
    return a.status == b.status && a.method == b.method && a.y.coords() == b.y.coords() &&
           a.residual == b.residual && a.iterations == b.iterations &&
           a.witness_w.coords() == b.witness_w.coords() && a.trace == b.trace &&
           a.notes == b.notes;
}

bool operator==(const ClassReport& a, const ClassReport& b) {
    if (!(a.check_name == b.check_name && a.verdict == b.verdict && a.margin == b.margin &&
          a.samples_used == b.samples_used && a.notes == b.notes &&
          a.witness.has_value() == b.witness.has_value())) {
        return false;
    }
    if (a.witness) {
        if (a.witness->values != b.witness->values || a.witness->detail != b.witness->detail ||
            a.witness->points.size() != b.witness->points.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.witness->points.size(); ++i) {
            if (a.witness->points[i].coords() != b.witness->points[i].coords()) return false;
        }
    }
    return true;
}

}  // namespace vimo
