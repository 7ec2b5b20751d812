#include "qlucas/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qlucas {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const VerifyRecord& r)
{
    ordered_json j;
    j["b"] = r.b;
    j["d"] = r.d;
    j["p"] = r.p;
    const bool has_rep = r.rep.has_value();
    j["case"] = r.case_id ? ordered_json(r.case_id->to_string()) : ordered_json(nullptr);
    j["x"] = has_rep ? ordered_json(r.rep->x) : ordered_json(nullptr);
    j["y"] = has_rep ? ordered_json(r.rep->y) : ordered_json(nullptr);
    j["u"] = has_rep ? ordered_json(r.rep->u) : ordered_json(nullptr);
    j["v"] = has_rep ? ordered_json(r.rep->v) : ordered_json(nullptr);
    const bool computed = r.checked() && r.error.empty();
    j["eta"] = computed ? ordered_json(r.eta_extracted.eta.to_string()) : ordered_json(nullptr);
    j["u_pred"] = computed ? ordered_json(r.predicted.u_pred) : ordered_json(nullptr);
    j["v_pred"] = computed ? ordered_json(r.predicted.v_pred) : ordered_json(nullptr);
    j["u_actual"] = computed ? ordered_json(r.actual.u) : ordered_json(nullptr);
    j["v_actual"] = computed ? ordered_json(r.actual.v) : ordered_json(nullptr);
    j["status"] = std::string(to_string(r.status));
    return j;
}

std::string csv_cell(const ordered_json& v)
{
    if (v.is_null()) return {};
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

std::string to_jsonl(const VerifyRecord& r)
{
    return to_json(r).dump();
}

std::string to_csv_row(const VerifyRecord& r)
{
    const ordered_json j = to_json(r);
    std::string out;
    bool first = true;
    for (const auto& item : j.items()) {
        if (!first) out += ',';
        first = false;
        out += csv_cell(item.value());
    }
    return out;
}

void write_records(std::ostream& out, const std::vector<VerifyRecord>& records, ReportFormat format)
{
    if (format == ReportFormat::csv) out << csv_header << '\n';
    for (const VerifyRecord& r : records)
        out << (format == ReportFormat::csv ? to_csv_row(r) : to_jsonl(r)) << '\n';
}

void write_report(const std::string& path, const std::vector<VerifyRecord>& records, ReportFormat format)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_records(out, records, format);
    out.flush();
    if (!out) throw IoError("write to " + path + " failed");
}

std::string describe(const VerifyRecord& r)
{
    std::ostringstream out;
    out << "b = " << r.b << ", p = " << r.p;
    if (r.d != 0) out << ", d = " << r.d;
    out << '\n';
    if (r.status == Status::skipped) {
        out << "skipped: " << r.skip_reason << '\n';
        return out.str();
    }
    if (r.rep) {
        const NormalizedRep& rep = *r.rep;
        auto sq = [](i64 n) { return (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n)) + "^2"; };
        out << "p = " << sq(rep.x) << " + " << rep.d << "*" << sq(rep.y) << " = " << sq(rep.u) << " + " << sq(rep.v)
            << "  (" << to_string(rep.parity) << ")\n";
    }
    if (r.case_id) out << "case: " << r.case_id->to_string() << '\n';
    if (!r.error.empty()) {
        out << "error: " << r.error << '\n';
    } else {
        out << "predicted (U, V) = (" << r.predicted.u_pred << ", " << r.predicted.v_pred << ")  ["
            << r.predicted.case_label << "]\n";
        out << "actual    (U, V) = (" << r.actual.u << ", " << r.actual.v << ")\n";
        out << "eta predicted = " << r.eta_pred.to_string() << ", extracted = " << r.eta_extracted.eta.to_string()
            << ", conjugate = " << r.eta_extracted.eta_bar.to_string() << '\n';
    }
    out << to_string(r.status) << '\n';
    return out.str();
}

} // namespace qlucas
