// Command-line surface for the EAQMDS construction library.
//
// Subcommands: families, enumerate, verify, tables, code, lemmas.
// Exit codes: 0 success, 1 check failure, 2 usage/admissibility error,
// 3 budget/magnitude exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eaqmds/report.hpp"

namespace {

using eaqmds::OracleLevel;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Writes either to --out or to stdout.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw eaqmds::Error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string params_str(std::uint64_t n, std::int64_t k, std::uint64_t d,
                       std::uint64_t c) {
    return "[[" + std::to_string(n) + ", " + std::to_string(k) + ", " +
           std::to_string(d) + "; " + std::to_string(c) + "]]";
}

json family_json(const eaqmds::FamilySpec& spec) {
    json j;
    j["id"] = spec.id;
    j["parity"] = spec.even_q ? "even" : "odd";
    j["divisor"] = spec.divisor;
    j["c"] = spec.c;
    j["congruence"] = spec.congruence;
    j["lambda_range"] = spec.lambda_range;
    return j;
}

int cmd_families(int family, const std::string& format, Output& out) {
    std::vector<const eaqmds::FamilySpec*> specs;
    if (family != 0) {
        specs.push_back(&eaqmds::family_spec(family));
    } else {
        for (const auto& spec : eaqmds::list_families()) specs.push_back(&spec);
    }
    std::ostream& os = out.stream();
    if (format == "json") {
        json arr = json::array();
        for (const auto* spec : specs) arr.push_back(family_json(*spec));
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "family,divisor,c,parity,congruence,lambda_range\n";
        for (const auto* spec : specs) {
            os << spec->id << ',' << spec->divisor << ',' << spec->c << ','
               << (spec->even_q ? "even" : "odd") << ",\"" << spec->congruence
               << "\",\"" << spec->lambda_range << "\"\n";
        }
    } else {
        for (const auto* spec : specs) {
            os << "family " << spec->id << ": n = (q^2+1)/" << spec->divisor
               << ", c = " << spec->c << ", " << spec->congruence << ", "
               << spec->lambda_range << "\n";
        }
    }
    return kExitOk;
}

int render_records(const std::vector<eaqmds::ReportRecord>& records,
                   const std::string& format, Output& out) {
    std::ostream& os = out.stream();
    if (format == "json") {
        json arr = json::array();
        for (const auto& rec : records) arr.push_back(json::parse(eaqmds::render_json(rec)));
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << eaqmds::csv_header() << "\n";
        for (const auto& rec : records) os << eaqmds::render_csv_row(rec) << "\n";
    } else {
        bool first = true;
        for (const auto& rec : records) {
            if (!first) os << "\n";
            first = false;
            os << eaqmds::render_text(rec);
        }
    }
    for (const auto& rec : records) {
        if (!eaqmds::record_all_pass(rec)) return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_enumerate(int family, std::uint64_t q_max, OracleLevel level,
                  const std::string& format, bool reproducible, Output& out) {
    const eaqmds::OracleBudget budget;
    std::vector<eaqmds::ReportRecord> records;
    for (const auto& e : eaqmds::enumerate_expected(family, q_max)) {
        const eaqmds::FamilyInstance inst =
            eaqmds::build_instance(family, e.q, e.lambda);
        const eaqmds::VerificationReport rep =
            eaqmds::verify_instance(inst, level, budget);
        records.push_back(eaqmds::make_report(inst, rep, reproducible));
    }
    return render_records(records, format, out);
}

int cmd_verify(int family, std::uint64_t q, std::uint64_t lambda, OracleLevel level,
               const std::string& format, bool reproducible, Output& out) {
    const eaqmds::FamilyInstance inst = eaqmds::build_instance(family, q, lambda);
    const eaqmds::VerificationReport rep =
        eaqmds::verify_instance(inst, level, eaqmds::OracleBudget{});
    const eaqmds::ReportRecord rec = eaqmds::make_report(inst, rep, reproducible);
    const int status = render_records({rec}, format, out);
    if (status != kExitOk) {
        for (const auto& [name, result] : rec.checks) {
            if (result.rfind("fail", 0) == 0) {
                std::cerr << "failed check: " << name << " (" << result << ")\n";
            }
        }
    }
    return status;
}

int cmd_tables(int family, const std::string& format, Output& out) {
    std::vector<int> fams;
    if (family != 0) {
        fams.push_back(family);
    } else {
        for (int f = 1; f <= 8; ++f) fams.push_back(f);
    }
    std::ostream& os = out.stream();
    json arr = json::array();
    if (format == "csv") os << "n,k,d,c,q,family,lambda\n";
    for (int f : fams) {
        if (format == "text") os << "family " << f << " table\n";
        for (const eaqmds::TableRow& row : eaqmds::regenerate_table(f)) {
            const auto& g = row.regenerated;
            const auto& p = row.reference;
            if (!row.matches) {
                std::cerr << "note: family " << f << " q " << p.q << " lambda "
                          << p.lambda << ": reference row "
                          << params_str(p.n, p.k, p.d, p.c)
                          << " differs from the formula value "
                          << params_str(g.n, g.k, g.d, g.c) << "\n";
            }
            if (format == "json") {
                json j;
                j["family"] = f;
                j["q"] = g.q;
                j["lambda"] = g.lambda;
                j["n"] = g.n;
                j["k"] = g.k;
                j["d"] = g.d;
                j["c"] = g.c;
                j["discrepant"] = !row.matches;
                if (!row.matches) {
                    json ref;
                    ref["n"] = p.n;
                    ref["k"] = p.k;
                    ref["d"] = p.d;
                    ref["c"] = p.c;
                    j["reference"] = ref;
                }
                arr.push_back(j);
            } else if (format == "csv") {
                os << g.n << ',' << g.k << ',' << g.d << ',' << g.c << ',' << g.q
                   << ',' << f << ',' << g.lambda << "\n";
            } else {
                os << "  q " << g.q << "  lambda " << g.lambda << ": "
                   << params_str(g.n, g.k, g.d, g.c);
                if (!row.matches) {
                    os << "  DISCREPANT (reference "
                       << params_str(p.n, p.k, p.d, p.c) << ")";
                }
                os << "\n";
            }
        }
    }
    if (format == "json") os << arr.dump(2) << "\n";
    return kExitOk;
}

json digits_json(const eaqmds::FieldDescriptor* f, std::uint64_t code) {
    json arr = json::array();
    for (std::uint64_t digit : f->digits(code)) arr.push_back(digit);
    return arr;
}

int cmd_code(int family, std::uint64_t q, std::uint64_t lambda, bool matrices,
             Output& out) {
    const eaqmds::FamilyInstance inst = eaqmds::build_instance(family, q, lambda);
    const eaqmds::ConstacyclicCode& code = inst.code;
    json j;
    j["family"] = family;
    j["q"] = q;
    j["lambda"] = lambda;
    j["n"] = code.n;
    j["classical_k"] = code.k;
    j["defining_set"] = code.defining_set;
    j["delta"] = eaqmds::describe_delta(code);
    j["alpha"] = digits_json(code.field, code.alpha.code);
    json gen = json::array();
    for (std::uint64_t coeff : code.generator.coeffs) {
        gen.push_back(digits_json(code.field, coeff));
    }
    j["generator"] = gen;
    if (matrices) {
        if (code.k * code.n > 10'000 || (code.n - code.k) * code.n > 10'000) {
            throw eaqmds::MagnitudeExceeded(
                "matrices too large to emit; use a smaller instance");
        }
        const eaqmds::Matrix g = eaqmds::generator_matrix(code);
        const eaqmds::Matrix h = eaqmds::parity_check_matrix(code);
        auto mat_json = [&](const eaqmds::Matrix& m) {
            json rows = json::array();
            for (std::size_t r = 0; r < m.rows; ++r) {
                json row = json::array();
                for (std::size_t col = 0; col < m.cols; ++col) {
                    row.push_back(digits_json(m.field, m.at(r, col)));
                }
                rows.push_back(row);
            }
            return rows;
        };
        j["generator_matrix"] = mat_json(g);
        j["parity_check_matrix"] = mat_json(h);
    }
    out.stream() << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_lemmas(int family, std::uint64_t q_max, const std::string& format,
               Output& out) {
    std::vector<int> fams;
    if (family != 0) {
        fams.push_back(family);
    } else {
        for (int f = 1; f <= 8; ++f) fams.push_back(f);
    }
    bool all_pass = true;
    std::vector<eaqmds::LemmaRangeReport> ladders;
    std::vector<eaqmds::CosetImageReport> images;
    for (int f : fams) {
        for (std::uint64_t q : eaqmds::admissible_q_values(f, q_max)) {
            ladders.push_back(eaqmds::check_lemma_ranges(f, q));
            all_pass = all_pass && ladders.back().pass;
        }
    }
    // The -q image identities live in the odd-q D = 10 space; run them once
    // per congruence class representative family.
    for (int f : fams) {
        if (f != 1 && f != 3) continue;
        for (std::uint64_t q : eaqmds::admissible_q_values(f, q_max)) {
            images.push_back(eaqmds::check_coset_images(q));
            all_pass = all_pass && images.back().pass;
        }
    }

    std::ostream& os = out.stream();
    if (format == "json") {
        json j;
        json jl = json::array();
        for (const auto& rep : ladders) {
            json r;
            r["family"] = rep.family;
            r["q"] = rep.q;
            r["steps_checked"] = rep.steps_checked;
            r["stated_steps"] = rep.stated_steps;
            r["boundary_fails"] = rep.boundary_fails;
            r["shifted_checked"] = rep.shifted_checked;
            r["pass"] = rep.pass;
            jl.push_back(r);
        }
        j["ladders"] = jl;
        json ji = json::array();
        for (const auto& rep : images) {
            json r;
            r["q"] = rep.q;
            r["identities_checked"] = rep.identities_checked;
            r["pass"] = rep.pass;
            ji.push_back(r);
        }
        j["images"] = ji;
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "kind,family,q,checked,stated,boundary_fails,shifted,status\n";
        for (const auto& rep : ladders) {
            os << "ladder," << rep.family << ',' << rep.q << ','
               << rep.steps_checked << ',' << rep.stated_steps << ','
               << (rep.boundary_fails ? "yes" : "no") << ','
               << rep.shifted_checked << ',' << (rep.pass ? "pass" : "fail")
               << "\n";
        }
        for (const auto& rep : images) {
            os << "images,," << rep.q << ',' << rep.identities_checked << ",,,,"
               << (rep.pass ? "pass" : "fail") << "\n";
        }
    } else {
        for (const auto& rep : ladders) {
            os << "family " << rep.family << "  q " << rep.q << ": ladder "
               << rep.steps_checked << " of " << rep.stated_steps
               << " stated steps, boundary fails: "
               << (rep.boundary_fails ? "yes" : "no") << ", shifted "
               << rep.shifted_checked << " steps: "
               << (rep.pass ? "pass" : "FAIL") << "\n";
        }
        for (const auto& rep : images) {
            os << "images  q " << rep.q << ": " << rep.identities_checked
               << " identities: " << (rep.pass ? "pass" : "FAIL") << "\n";
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic MDS code constructions and their"
                 " entanglement-assisted quantum derivations"};
    app.require_subcommand(1);

    int family = 0;
    std::uint64_t q = 0;
    std::uint64_t lambda = 0;
    std::uint64_t q_max = 512;
    OracleLevel level = OracleLevel::none;
    std::string format = "text";
    std::string out_path;
    bool reproducible = false;
    bool matrices = false;

    const std::map<std::string, OracleLevel> level_names{
        {"none", OracleLevel::none},
        {"rank", OracleLevel::rank},
        {"mds", OracleLevel::mds},
        {"exhaustive", OracleLevel::exhaustive}};

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--out", out_path, "write output to a file");
        if (with_format) {
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "json", "csv"}));
        }
        cmd->add_flag("--reproducible", reproducible,
                      "omit timestamps for byte-stable output");
    };

    CLI::App* c_families = app.add_subcommand("families", "list the eight families");
    c_families->add_option("--family", family, "restrict to one family id");
    add_common(c_families);

    CLI::App* c_enum = app.add_subcommand("enumerate", "build and verify instances");
    c_enum->add_option("--family", family, "family id (1-8)")->required();
    c_enum->add_option("--q-max", q_max, "largest q to include");
    c_enum->add_option("--oracle", level, "verification level")
        ->transform(CLI::CheckedTransformer(level_names));
    add_common(c_enum);

    CLI::App* c_verify = app.add_subcommand("verify", "verify one instance");
    c_verify->add_option("--family", family, "family id (1-8)")->required();
    c_verify->add_option("--q", q, "prime power q")->required();
    c_verify->add_option("--lambda", lambda, "step parameter")->required();
    c_verify->add_option("--oracle", level, "verification level")
        ->transform(CLI::CheckedTransformer(level_names));
    add_common(c_verify);

    CLI::App* c_tables = app.add_subcommand(
        "tables", "regenerate the reference parameter tables");
    c_tables->add_option("--family", family, "restrict to one family id");
    add_common(c_tables);

    CLI::App* c_code = app.add_subcommand("code", "emit one instance's code data");
    c_code->add_option("--family", family, "family id (1-8)")->required();
    c_code->add_option("--q", q, "prime power q")->required();
    c_code->add_option("--lambda", lambda, "step parameter")->required();
    c_code->add_flag("--matrices", matrices, "include G and H matrices");
    add_common(c_code, /*with_format=*/false);

    CLI::App* c_lemmas = app.add_subcommand(
        "lemmas", "check the dual-containment ladders and coset-image identities");
    c_lemmas->add_option("--family", family, "restrict to one family id");
    c_lemmas->add_option("--q-max", q_max, "largest q to include");
    add_common(c_lemmas);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        Output out(out_path);
        if (c_families->parsed()) return cmd_families(family, format, out);
        if (c_enum->parsed())
            return cmd_enumerate(family, q_max, level, format, reproducible, out);
        if (c_verify->parsed())
            return cmd_verify(family, q, lambda, level, format, reproducible, out);
        if (c_tables->parsed()) return cmd_tables(family, format, out);
        if (c_code->parsed()) return cmd_code(family, q, lambda, matrices, out);
        if (c_lemmas->parsed()) return cmd_lemmas(family, q_max, format, out);
        return kExitUsage;
    } catch (const eaqmds::OracleBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const eaqmds::MagnitudeExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const eaqmds::NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eaqmds::LambdaOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eaqmds::NonpositiveLogicalDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
