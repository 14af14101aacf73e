#include "chowdiv/cli.hpp"

#include "chowdiv/divisibility.hpp"
#include "chowdiv/families.hpp"
#include "chowdiv/graded_ring.hpp"
#include "chowdiv/splitting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace chowdiv {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + path);
        out << bytes;
        if (!out) throw std::runtime_error("cannot write file: " + path);
    }
    std::filesystem::rename(tmp, path);
}

// --family accepts inline JSON or @path.
FamilyPtr family_from_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return parse_family(read_file(arg.substr(1)));
    return parse_family(arg);
}

GradedRingModel model_from_args(const std::string& ring_path, const std::string& family_arg) {
    if (!ring_path.empty() && !family_arg.empty())
        throw ParseError("give either --ring or --family, not both");
    if (!ring_path.empty()) return deserialize(read_file(ring_path));
    if (!family_arg.empty()) return build_family(*family_from_arg(family_arg));
    throw ParseError("one of --ring or --family is required");
}

json element_json(const GradedRingModel& R, const Element& e) {
    json j;
    j["degree"] = e.degree;
    json coeffs = json::array();
    for (const Int& c : e.coeffs) coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    j["text"] = format_element(R, e);
    return j;
}

std::string witness_text(const GradedRingModel& R, const Witness& w) {
    std::ostringstream os;
    os << "x = " << format_element(R, w.x) << " (deg " << w.x.degree << "), y = "
       << format_element(R, w.y) << " (deg " << w.y.degree << ")";
    return os.str();
}

json witness_json(const GradedRingModel& R, const Witness& w) {
    json j;
    j["x"] = element_json(R, w.x);
    j["y"] = element_json(R, w.y);
    return j;
}

const char* pair_status_name(PairStatus s) {
    switch (s) {
        case PairStatus::Certified: return "certified";
        case PairStatus::Refuted: return "refuted";
        case PairStatus::Unknown: return "unknown";
    }
    return "?";
}

json pair_json(const GradedRingModel& R, const PairVerdict& v) {
    json j;
    j["i"] = v.i;
    j["j"] = v.j;
    j["status"] = pair_status_name(v.status);
    j["method"] = v.method;
    if (v.witness) j["witness"] = witness_json(R, *v.witness);
    return j;
}

const char* verdict_status_name(DivisibilityVerdict::Status s) {
    switch (s) {
        case DivisibilityVerdict::Status::CertifiedUpTo: return "certified-up-to";
        case DivisibilityVerdict::Status::RefutedAt: return "refuted-at";
        case DivisibilityVerdict::Status::UnknownFrom: return "unknown-from";
    }
    return "?";
}

json verdict_json(const GradedRingModel& R, const DivisibilityVerdict& v, bool with_pairs) {
    json j;
    j["max_degree"] = v.max_degree;
    j["bound"] = v.bound;
    j["status"] = verdict_status_name(v.status);
    j["at"] = v.at;
    j["exact"] = v.exact;
    if (v.refuted_at) j["refuted_at"] = *v.refuted_at;
    if (v.unknown_from) j["unknown_from"] = *v.unknown_from;
    if (v.witness) j["witness"] = witness_json(R, *v.witness);
    if (with_pairs) {
        json pairs = json::array();
        for (const PairVerdict& p : v.pairs) pairs.push_back(pair_json(R, p));
        j["pairs"] = std::move(pairs);
    }
    return j;
}

void verdict_text(std::ostream& out, const GradedRingModel& R, const DivisibilityVerdict& v,
                  bool with_pairs) {
    if (with_pairs) {
        for (const PairVerdict& p : v.pairs) {
            std::ostringstream head;
            head << "(" << p.i << "," << p.j << ")";
            out << std::left << std::setw(8) << head.str() << std::setw(11)
                << pair_status_name(p.status) << p.method;
            if (p.witness) out << "  witness: " << witness_text(R, *p.witness);
            out << "\n";
        }
    }
    out << "certified-up-to " << v.bound;
    if (v.status == DivisibilityVerdict::Status::RefutedAt)
        out << "; refuted-at " << v.at << ": " << witness_text(R, *v.witness);
    else if (v.status == DivisibilityVerdict::Status::UnknownFrom)
        out << "; unknown-from " << v.at;
    if (!v.exact && v.unknown_from)
        out << " (bounded search undecided from degree " << *v.unknown_from << ")";
    out << "\n";
}

json tree_json(const CertNode& n) {
    json j;
    j["rule"] = n.rule;
    j["bound"] = n.bound;
    j["display"] = n.display;
    json ch = json::array();
    for (const CertNode& c : n.children) ch.push_back(tree_json(c));
    if (!ch.empty()) j["children"] = std::move(ch);
    return j;
}

std::string ranks_csv(const std::vector<int>& ranks) {
    std::ostringstream os;
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (i) os << ",";
        os << ranks[i];
    }
    return os.str();
}

// ---- table ------------------------------------------------------------

struct TableRow {
    SpaceSpec space;
    int s_paper = 0;
    CrossValidation cv;
};

TableRow make_row(const SpaceSpec& s, int height) {
    TableRow row;
    row.space = s;
    row.s_paper = s_closed_form(s);
    row.cv = cross_validate(vmrt_of(s), height);
    return row;
}

std::vector<SpaceSpec> acceptance_rows() {
    std::vector<SpaceSpec> rows;
    for (int n = 2; n <= 8; ++n) rows.push_back(make_space(SpaceSpec::Kind::Pn, 0, n));
    for (int n : {3, 5, 7, 9}) rows.push_back(make_space(SpaceSpec::Kind::Qn, 0, n));
    for (auto [k, n] : {std::pair{1, 3}, {2, 5}, {2, 6}, {3, 7}})
        rows.push_back(make_space(SpaceSpec::Kind::G, k, n));
    for (auto [k, n] : {std::pair{1, 7}, {2, 9}, {3, 11}})
        rows.push_back(make_space(SpaceSpec::Kind::OG, k, n));
    for (auto [k, n] : {std::pair{1, 7}, {2, 9}})
        rows.push_back(make_space(SpaceSpec::Kind::SG, k, n));
    for (int m : {3, 4, 5}) rows.push_back(make_space(SpaceSpec::Kind::SGmax, 0, m));
    return rows;
}

std::vector<SpaceSpec> parse_rows(const std::string& rows_arg) {
    if (rows_arg == "acceptance") return acceptance_rows();
    std::vector<SpaceSpec> rows;
    std::istringstream is(rows_arg);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        if (tok.empty()) continue;
        rows.push_back(parse_space(tok));
    }
    if (rows.empty()) throw ParseError("table: empty row list");
    return rows;
}

std::string checker_bound_cell(const CrossValidation& cv) {
    return cv.checked ? std::to_string(cv.checked->bound) : std::string("-");
}

std::string checker_status_cell(const CrossValidation& cv) {
    if (!cv.checked) return "unbuildable";
    if (cv.checked->exact) return "exact";
    return "unknown-from=" + std::to_string(*cv.checked->unknown_from);
}

std::vector<std::vector<std::string>> table_cells(const std::vector<TableRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"space", "s_paper", "cert_paper", "cert_checked", "checker",
                     "checker_status", "agree_paper", "agree_checked", "discrepancy"});
    for (const TableRow& r : rows) {
        cells.push_back({space_name(r.space), std::to_string(r.s_paper),
                         std::to_string(r.cv.cert_paper.bound),
                         std::to_string(r.cv.cert_checked.bound), checker_bound_cell(r.cv),
                         checker_status_cell(r.cv), r.cv.agree_paper, r.cv.agree_checked,
                         r.cv.discrepancy ? "yes" : "no"});
    }
    return cells;
}

json crossval_json(const CrossValidation& cv);

json table_json(const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const TableRow& r : rows) {
        json j;
        j["space"] = space_name(r.space);
        j["s_paper"] = r.s_paper;
        j["cert_paper"] = r.cv.cert_paper.bound;
        j["cert_checked"] = r.cv.cert_checked.bound;
        if (r.cv.checked) {
            j["checker"] = r.cv.checked->bound;
            j["checker_exact"] = r.cv.checked->exact;
            if (r.cv.checked->unknown_from) j["unknown_from"] = *r.cv.checked->unknown_from;
            if (r.cv.checked->refuted_at) j["refuted_at"] = *r.cv.checked->refuted_at;
        } else {
            j["checker"] = nullptr;
            j["build_error"] = r.cv.build_error;
        }
        j["agree_paper"] = r.cv.agree_paper;
        j["agree_checked"] = r.cv.agree_checked;
        j["discrepancy"] = r.cv.discrepancy;
        arr.push_back(std::move(j));
    }
    return arr;
}

json crossval_json(const CrossValidation& cv) {
    json j;
    j["family"] = json::parse(cv.family);
    j["cert_paper"] = cv.cert_paper.bound;
    j["cert_checked"] = cv.cert_checked.bound;
    if (cv.checked) {
        GradedRingModel R = build_family(*parse_family(cv.family));
        j["checker"] = verdict_json(R, *cv.checked, false);
    } else {
        j["checker"] = nullptr;
        j["build_error"] = cv.build_error;
    }
    j["agree_paper"] = cv.agree_paper;
    j["agree_checked"] = cv.agree_checked;
    j["discrepancy"] = cv.discrepancy;
    return j;
}

// ---- commands ----------------------------------------------------------

struct CommonOpts {
    std::string ring_path, family_arg, format = "text";
    int height = 3;
    int max_degree = -1;
    int expect = INT32_MIN;
};

int cmd_div(const CommonOpts& o, bool with_pairs, std::ostream& out) {
    GradedRingModel R = model_from_args(o.ring_path, o.family_arg);
    DivisibilityVerdict v = gd_bound_checked(R, o.height, o.max_degree);
    if (o.format == "json")
        out << verdict_json(R, v, with_pairs).dump(2) << "\n";
    else
        verdict_text(out, R, v, with_pairs);
    if (o.expect != INT32_MIN) return v.bound == o.expect ? 0 : 1;
    return 0;
}

int cmd_certify(const std::string& family_arg, const std::string& space_arg,
                const std::string& axioms_name, const std::string& format, std::ostream& out) {
    FamilyPtr expr;
    if (!family_arg.empty() && !space_arg.empty())
        throw ParseError("give either --family or --space, not both");
    if (!family_arg.empty())
        expr = family_from_arg(family_arg);
    else if (!space_arg.empty())
        expr = FamilyExpr::vmrt(parse_space(space_arg));
    else
        throw ParseError("one of --family or --space is required");
    AxiomSet axioms = parse_axiom_set(axioms_name);
    StructuralCertificate cert = certify_structural(*expr, axioms);
    StructuralCertificate other = certify_structural(
        *expr, axioms == AxiomSet::Paper ? AxiomSet::Checked : AxiomSet::Paper);
    int bound_paper = axioms == AxiomSet::Paper ? cert.bound : other.bound;
    int bound_checked = axioms == AxiomSet::Paper ? other.bound : cert.bound;
    bool flagged = bound_paper != bound_checked;
    if (format == "json") {
        json j;
        j["axioms"] = axiom_set_name(axioms);
        j["bound"] = cert.bound;
        j["bound_paper"] = bound_paper;
        j["bound_checked"] = bound_checked;
        j["axiom_sets_disagree"] = flagged;
        j["tree"] = tree_json(cert.root);
        out << j.dump(2) << "\n";
    } else {
        out << certificate_to_text(cert);
        if (flagged)
            out << "note: axiom sets disagree on this family: paper=" << bound_paper
                << " checked=" << bound_checked << "\n";
    }
    return 0;
}

int cmd_crossval(const std::string& family_arg, const std::string& space_arg, int height,
                 const std::string& format, std::ostream& out) {
    FamilyPtr expr;
    if (!family_arg.empty() && !space_arg.empty())
        throw ParseError("give either --family or --space, not both");
    if (!family_arg.empty())
        expr = family_from_arg(family_arg);
    else if (!space_arg.empty())
        expr = FamilyExpr::vmrt(parse_space(space_arg));
    else
        throw ParseError("one of --family or --space is required");
    CrossValidation cv = cross_validate(*expr, height);
    if (format == "json") {
        out << crossval_json(cv).dump(2) << "\n";
        return 0;
    }
    out << "family: " << cv.family << "\n";
    out << "certified: paper=" << cv.cert_paper.bound << " checked=" << cv.cert_checked.bound
        << "\n";
    if (cv.checked) {
        GradedRingModel R = build_family(*expr);
        out << "checker: bound=" << cv.checked->bound << (cv.checked->exact ? " exact" : " bounded");
        if (cv.checked->refuted_at)
            out << " refuted-at=" << *cv.checked->refuted_at << " witness: "
                << witness_text(R, *cv.checked->witness);
        if (cv.checked->unknown_from) out << " unknown-from=" << *cv.checked->unknown_from;
        out << "\n";
    } else {
        out << "checker: model not built (" << cv.build_error << ")\n";
    }
    out << "agreement: paper=" << cv.agree_paper << " checked=" << cv.agree_checked << "\n";
    out << "discrepancy: " << (cv.discrepancy ? "yes" : "no") << "\n";
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"explicit Chow-ring models, good divisibility, uniform-bundle splitting bounds"};
    app.require_subcommand(1);

    // ring build / ring ranks
    auto* ring = app.add_subcommand("ring", "build and inspect ring model files");
    ring->require_subcommand(1);
    auto* build = ring->add_subcommand("build", "build a ring model and write it as JSON");
    std::string b_family, b_out, b_format = "text";
    int b_cutoff = -1;
    build->add_option("--family", b_family, "family expression (inline JSON or @file)")
        ->required();
    build->add_option("--out", b_out, "output path")->required();
    build->add_option("--cutoff", b_cutoff, "truncate the model to this cutoff");
    build->add_option("--format", b_format, "text|json");

    auto* ranks_cmd = ring->add_subcommand("ranks", "print the rank vector");
    std::string rk_ring, rk_family, rk_format = "text";
    ranks_cmd->add_option("--ring", rk_ring, "ring model file");
    ranks_cmd->add_option("--family", rk_family, "family expression");
    ranks_cmd->add_option("--format", rk_format, "text|json");

    // div check / div bound
    auto* div = app.add_subcommand("div", "good-divisibility checks on explicit models");
    div->require_subcommand(1);
    CommonOpts dc, db;
    auto* check = div->add_subcommand("check", "per-pair zero-divisor report");
    check->add_option("--ring", dc.ring_path, "ring model file");
    check->add_option("--family", dc.family_arg, "family expression");
    check->add_option("--max-degree", dc.max_degree, "scan pairs up to this total degree");
    check->add_option("--height", dc.height, "search height for rank>=3 pairs");
    check->add_option("--expect", dc.expect, "exit 0 iff the certified bound equals this");
    check->add_option("--format", dc.format, "text|json");
    auto* bound = div->add_subcommand("bound", "aggregated good-divisibility bound");
    bound->add_option("--ring", db.ring_path, "ring model file");
    bound->add_option("--family", db.family_arg, "family expression");
    bound->add_option("--max-degree", db.max_degree, "scan pairs up to this total degree");
    bound->add_option("--height", db.height, "search height for rank>=3 pairs");
    bound->add_option("--expect", db.expect, "exit 0 iff the certified bound equals this");
    bound->add_option("--format", db.format, "text|json");

    // certify
    auto* certify = app.add_subcommand("certify", "structural good-divisibility certificate");
    std::string c_family, c_space, c_axioms = "paper", c_format = "text";
    certify->add_option("--family", c_family, "family expression");
    certify->add_option("--space", c_space, "space spec (certifies its VMRT)");
    certify->add_option("--axioms", c_axioms, "paper|checked");
    certify->add_option("--format", c_format, "text|json");

    // crossval
    auto* crossval = app.add_subcommand("crossval", "checker vs certificates on one family");
    std::string x_family, x_space, x_format = "text";
    int x_height = 3;
    crossval->add_option("--family", x_family, "family expression");
    crossval->add_option("--space", x_space, "space spec (validates its VMRT)");
    crossval->add_option("--height", x_height, "search height");
    crossval->add_option("--format", x_format, "text|json");

    // table
    auto* table = app.add_subcommand("table", "splitting-bound table with cross-validation");
    std::string t_rows, t_format = "tsv";
    int t_height = 3;
    table->add_option("--rows", t_rows, "semicolon list of space specs, or 'acceptance'")
        ->required();
    table->add_option("--height", t_height, "search height");
    table->add_option("--format", t_format, "tsv|json|text");

    // split verdict
    auto* split = app.add_subcommand("split", "uniform-bundle splitting verdicts");
    split->require_subcommand(1);
    auto* verdict = split->add_subcommand("verdict", "splitting verdict for a space and rank");
    std::string s_space, s_axioms = "paper", s_format = "text", s_type;
    int s_rank = 0;
    verdict->add_option("--space", s_space, "space spec")->required();
    verdict->add_option("--rank", s_rank, "bundle rank");
    verdict->add_option("--type", s_type,
                        "splitting type as comma-separated integers (rank = its length)");
    verdict->add_option("--axioms", s_axioms, "paper|checked");
    verdict->add_option("--format", s_format, "text|json");

    // unit-factor
    auto* uf = app.add_subcommand("unit-factor", "search truncated factorizations of 1");
    std::string u_ring, u_family, u_format = "text";
    int u_k = 0, u_l = 0, u_height = 3;
    unsigned long long u_guard = 100000000ull;
    uf->add_option("--ring", u_ring, "ring model file");
    uf->add_option("--family", u_family, "family expression");
    uf->add_option("--k", u_k, "components in the first factor")->required();
    uf->add_option("--l", u_l, "components in the second factor")->required();
    uf->add_option("--height", u_height, "coefficient height");
    uf->add_option("--guard", u_guard, "candidate-space guard");
    uf->add_option("--format", u_format, "text|json");

    std::vector<const char*> argv;
    argv.push_back("chowdiv");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    }

    if (build->parsed()) {
        GradedRingModel R = build_family(*family_from_arg(b_family));
        if (b_cutoff >= 0) {
            if (b_cutoff > R.cutoff)
                throw std::invalid_argument("cutoff override exceeds the model cutoff");
            std::vector<int> ranks(R.ranks.begin(), R.ranks.begin() + b_cutoff + 1);
            std::vector<std::vector<std::string>> labels(R.basis_labels.begin(),
                                                         R.basis_labels.begin() + b_cutoff + 1);
            std::map<std::pair<int, int>, std::vector<Int>> tables;
            for (const auto& [key, t] : R.tables)
                if (key.first + key.second <= b_cutoff) tables[key] = t;
            R = make_ring(b_cutoff, std::move(ranks), std::move(labels), std::move(tables));
        }
        write_file_atomic(b_out, serialize(R));
        if (b_format == "json") {
            json j;
            j["cutoff"] = R.cutoff;
            j["ranks"] = R.ranks;
            j["out"] = b_out;
            out << j.dump(2) << "\n";
        } else {
            out << "cutoff " << R.cutoff << "\n";
            out << "ranks " << ranks_csv(R.ranks) << "\n";
            out << "wrote " << b_out << "\n";
        }
        return 0;
    }
    if (ranks_cmd->parsed()) {
        GradedRingModel R = model_from_args(rk_ring, rk_family);
        if (rk_format == "json") {
            json j;
            j["cutoff"] = R.cutoff;
            j["ranks"] = R.ranks;
            out << j.dump(2) << "\n";
        } else {
            out << "cutoff " << R.cutoff << "\n";
            out << "ranks " << ranks_csv(R.ranks) << "\n";
        }
        return 0;
    }
    if (check->parsed()) return cmd_div(dc, true, out);
    if (bound->parsed()) return cmd_div(db, false, out);
    if (certify->parsed()) return cmd_certify(c_family, c_space, c_axioms, c_format, out);
    if (crossval->parsed()) return cmd_crossval(x_family, x_space, x_height, x_format, out);
    if (table->parsed()) {
        std::vector<TableRow> rows;
        for (const SpaceSpec& s : parse_rows(t_rows)) rows.push_back(make_row(s, t_height));
        if (t_format == "json") {
            out << table_json(rows).dump(2) << "\n";
        } else {
            auto cells = table_cells(rows);
            if (t_format == "tsv") {
                for (const auto& row : cells) {
                    for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
                    out << "\n";
                }
            } else {
                std::vector<size_t> width(cells[0].size(), 0);
                for (const auto& row : cells)
                    for (size_t i = 0; i < row.size(); ++i)
                        width[i] = std::max(width[i], row[i].size());
                for (const auto& row : cells) {
                    for (size_t i = 0; i < row.size(); ++i)
                        out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
                    out << "\n";
                }
            }
        }
        return 0;
    }
    if (verdict->parsed()) {
        std::optional<SplittingType> st;
        if (!s_type.empty()) {
            if (s_rank != 0) throw ParseError("give either --rank or --type, not both");
            std::vector<int> raw;
            std::istringstream is(s_type);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                try {
                    size_t pos = 0;
                    raw.push_back(std::stoi(tok, &pos));
                    if (pos != tok.size()) throw std::invalid_argument("");
                } catch (...) {
                    throw ParseError("bad splitting type entry '" + tok + "'");
                }
            }
            st = normalize_splitting_type(raw);
            s_rank = static_cast<int>(st->type.size());
        }
        SplitVerdict v = splitting_verdict(parse_space(s_space), s_rank, parse_axiom_set(s_axioms));
        if (s_format == "json") {
            json j;
            j["space"] = space_name(parse_space(s_space));
            j["rank"] = v.rank;
            j["axioms"] = axiom_set_name(v.axioms);
            j["bound"] = v.bound;
            j["status"] = v.status == SplitStatus::Splits ? "splits" : "unknown";
            j["note"] = v.note;
            j["provenance"] = tree_json(v.certificate.root);
            if (st) {
                j["splitting_type"] = st->type;
                j["twist"] = st->twist;
                j["leading_trivial"] = st->leading_trivial;
            }
            out << j.dump(2) << "\n";
        } else {
            out << "space " << space_name(parse_space(s_space)) << "  rank " << v.rank
                << "  axioms " << axiom_set_name(v.axioms) << "\n";
            if (st) {
                out << "normalized type:";
                for (int a : st->type) out << " " << a;
                out << "  (twist " << st->twist << ", leading trivial " << st->leading_trivial
                    << ")\n";
            }
            out << "verdict: " << (v.status == SplitStatus::Splits ? "splits" : "unknown") << " ("
                << v.note << ")\n";
            out << certificate_to_text(v.certificate);
        }
        return 0;
    }
    if (uf->parsed()) {
        GradedRingModel R = model_from_args(u_ring, u_family);
        auto sols = find_unit_factorizations(R, u_k, u_l, u_height, u_guard);
        if (u_format == "json") {
            json j;
            j["k"] = u_k;
            j["l"] = u_l;
            j["height"] = u_height;
            j["count"] = sols.size();
            json arr = json::array();
            for (const WhitneyPair& p : sols) {
                json s;
                json c = json::array(), ct = json::array();
                for (const Element& e : p.c) c.push_back(element_json(R, e));
                for (const Element& e : p.ctilde) ct.push_back(element_json(R, e));
                s["c"] = std::move(c);
                s["ctilde"] = std::move(ct);
                arr.push_back(std::move(s));
            }
            j["solutions"] = std::move(arr);
            out << j.dump(2) << "\n";
        } else {
            out << sols.size() << " nontrivial factorization" << (sols.size() == 1 ? "" : "s")
                << " (k=" << u_k << " l=" << u_l << " height=" << u_height << ")\n";
            for (const WhitneyPair& p : sols) {
                out << "c:";
                for (const Element& e : p.c) out << " [" << format_element(R, e) << "]";
                out << "  ctilde:";
                for (const Element& e : p.ctilde) out << " [" << format_element(R, e) << "]";
                out << "\n";
            }
        }
        return 0;
    }
    err << "no command\n";
    return 64;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    }
}

}  // namespace chowdiv
