#include "eaqmds/report.hpp"

#include <ctime>
#include <sstream>

#include "json.hpp"

namespace eaqmds {
namespace {

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string digit_string(const std::vector<std::uint64_t>& digits) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(digits[i]);
    }
    return out;
}

}  // namespace

bool record_all_pass(const ReportRecord& rec) {
    for (const auto& [name, result] : rec.checks) {
        if (result.rfind("fail", 0) == 0) return false;
    }
    return true;
}

std::string describe_delta(const ConstacyclicCode& code) {
    const FieldDescriptor* f = code.splitting;
    std::string out = "GF(" + std::to_string(f->characteristic()) + "^" +
                      std::to_string(f->degree()) + ") modulus [" +
                      digit_string(f->modulus()) + "] delta [" +
                      digit_string(f->digits(code.delta.code)) + "]";
    return out;
}

ReportRecord make_report(const FamilyInstance& inst, const VerificationReport& rep,
                         bool reproducible) {
    ReportRecord rec;
    rec.family = inst.family;
    rec.q = inst.q;
    rec.lambda = inst.lambda;
    rec.n = inst.computed.n;
    rec.k = inst.computed.k;
    rec.d = inst.computed.d;
    rec.c = inst.computed.c;
    rec.singleton_defect = singleton_defect(inst.computed);
    rec.checks = rep.checks;
    rec.delta_repr = describe_delta(inst.code);
    rec.timestamp = reproducible ? "" : iso8601_utc_now();
    return rec;
}

std::string render_text(const ReportRecord& rec) {
    std::ostringstream os;
    os << "family " << rec.family << "  q " << rec.q << "  lambda " << rec.lambda
       << "\n";
    os << "  [[" << rec.n << ", " << rec.k << ", " << rec.d << "; " << rec.c
       << "]]_" << rec.q << "  defect " << rec.singleton_defect << "\n";
    os << "  delta: " << rec.delta_repr << "\n";
    for (const auto& [name, result] : rec.checks) {
        os << "  check " << name << ": " << result << "\n";
    }
    if (!rec.timestamp.empty()) os << "  time: " << rec.timestamp << "\n";
    os << "  status: " << (record_all_pass(rec) ? "pass" : "fail") << "\n";
    return os.str();
}

std::string render_json(const ReportRecord& rec) {
    nlohmann::ordered_json j;
    j["family"] = rec.family;
    j["q"] = rec.q;
    j["lambda"] = rec.lambda;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["d"] = rec.d;
    j["c"] = rec.c;
    j["singleton_defect"] = rec.singleton_defect;
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, result] : rec.checks) checks[name] = result;
    j["checks"] = checks;
    j["delta_repr"] = rec.delta_repr;
    j["timestamp"] = rec.timestamp;
    return j.dump(2) + "\n";
}

std::string csv_header() { return "family,q,lambda,n,k,d,c,defect,status"; }

std::string render_csv_row(const ReportRecord& rec) {
    std::ostringstream os;
    os << rec.family << ',' << rec.q << ',' << rec.lambda << ',' << rec.n << ','
       << rec.k << ',' << rec.d << ',' << rec.c << ',' << rec.singleton_defect
       << ',' << (record_all_pass(rec) ? "pass" : "fail");
    return os.str();
}

ReportRecord report_from_json_text(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    ReportRecord rec;
    rec.family = j.at("family").get<int>();
    rec.q = j.at("q").get<std::uint64_t>();
    rec.lambda = j.at("lambda").get<std::uint64_t>();
    rec.n = j.at("n").get<std::uint64_t>();
    rec.k = j.at("k").get<std::int64_t>();
    rec.d = j.at("d").get<std::uint64_t>();
    rec.c = j.at("c").get<std::uint64_t>();
    rec.singleton_defect = j.at("singleton_defect").get<std::int64_t>();
    for (const auto& [name, result] : j.at("checks").items()) {
        rec.checks.emplace_back(name, result.get<std::string>());
    }
    rec.delta_repr = j.at("delta_repr").get<std::string>();
    rec.timestamp = j.at("timestamp").get<std::string>();
    return rec;
}

}  // namespace eaqmds
