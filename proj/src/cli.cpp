#include "qrefl/cli.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrefl/characters.hpp"
#include "qrefl/noumi.hpp"
#include "qrefl/relations.hpp"
#include "qrefl/uqsln.hpp"

namespace qrefl::cli {

using json = nlohmann::ordered_json;

namespace {

// largest tensor power braidb will build
constexpr std::size_t kMaxBraidDim = 512;

class ReportBuilder {
   public:
    explicit ReportBuilder(std::string command) : command_(std::move(command)) {}

    void add(const Report& r) {
        json check;
        check["relation"] = r.relation;
        check["passed"] = r.passed;
        if (r.witness) {
            const Witness& w = *r.witness;
            check["witness"] = {{"row", w.row},
                                {"col", w.col},
                                {"lhs", print_scalar(w.lhs)},
                                {"rhs", print_scalar(w.rhs)},
                                {"residual", print_scalar(w.residual)}};
        }
        passed_ = passed_ && r.passed;
        checks_.push_back(std::move(check));
    }

    void value(const std::string& name, const Scalar& x) { values_[name] = print_scalar(x); }

    int finish(std::ostream& out) const {
        json doc;
        doc["command"] = command_;
        doc["passed"] = passed_;
        doc["checks"] = checks_.empty() ? json::array() : checks_;
        doc["values"] = values_.empty() ? json::object() : values_;
        out << doc.dump(2) << '\n';
        return passed_ ? kPass : kCheckFailed;
    }

   private:
    std::string command_;
    bool passed_ = true;
    json checks_ = json::array();
    json values_ = json::object();
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int root_order_of(const ScalarMatrix& m, int base) {
    int order = base;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) order = std::lcm(order, m(i, j).root_order());
    return order;
}

Variant pick_variant(const std::string& flag, Variant from_doc) {
    return flag.empty() ? from_doc : variant_from_string(flag);
}

void require_variant_r(const CharacterMatrix& m, const std::string& command) {
    if (m.variant != Variant::r) throw UsageError(command + " supports only variant r");
}

int cmd_verify_re(const std::string& path, const std::string& variant_flag, std::ostream& out) {
    MatrixDocument doc = load_document_file(path);
    doc.matrix.variant = pick_variant(variant_flag, doc.matrix.variant);
    ReportBuilder report("verify-re");
    report.add(check_reflection(r_prime(doc.matrix.n(), doc.matrix.variant), doc.matrix));
    return report.finish(out);
}

int cmd_qybe(int n, std::ostream& out) {
    if (n < 2 || n > 4) throw UsageError("--n must lie in 2..4");
    ReportBuilder report("qybe");
    report.add(check_qybe(r_matrix(n)));
    Operator rh = rhat(n);
    report.add(check_braid(rh));
    report.add(check_hecke(rh));
    return report.finish(out);
}

int cmd_qdet(const std::string& path, const std::string& variant_flag, bool oracle, std::ostream& out,
             std::ostream& err) {
    MatrixDocument doc = load_document_file(path);
    doc.matrix.variant = pick_variant(variant_flag, doc.matrix.variant);
    const CharacterMatrix& m = doc.matrix;
    ReportBuilder report("qdet");
    try {
        CriterionResult c = check_invertibility_criterion(m);
        report.value("qdet", c.qdet);
        report.value("det", c.det);
        report.add(c.report);
        if (oracle) {
            if (m.n() > 3) {
                err << "note: the monomial route is limited to n <= 3; skipped\n";
            } else {
                Scalar other = qdet_monomial_oracle(m);
                report.value("qdet_oracle", other);
                Report agree = Report::pass("dual_route");
                if (!(other == c.qdet)) {
                    agree.passed = false;
                    agree.witness = Witness{{}, {}, c.qdet, other, c.qdet - other};
                }
                report.add(agree);
            }
        }
    } catch (const NotProportional& e) {
        err << "note: " << e.what() << '\n';
        report.add(Report{false, "qdet_proportional", std::nullopt});
    }
    return report.finish(out);
}

int cmd_grassmann(int m, const std::string& s_text, const std::string& emit_path, std::ostream& out,
                  std::ostream& err) {
    if (m < 1) throw UsageError("--m must be at least 1");
    const int n = 2 * m;
    Scalar s;
    try {
        s = parse_scalar(s_text, n);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--s: ") + e.what());
    }
    CharacterMatrix g = grassmann_matrix(n, s);
    MatrixDocument doc{root_order_of(g.entries, n), g};

    ReportBuilder report("grassmann");
    report.add(check_grassmann_invariance(omega_from_character(g), s));
    report.value("det", det_fraction_free(g.entries));

    const std::string text = emit_document(doc);
    if (emit_path.empty()) {
        out << text;
        return report.finish(err);
    }
    std::ofstream file(emit_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + emit_path + "'");
    file << text;
    return report.finish(out);
}

int cmd_central(const std::string& path, std::ostream& out) {
    MatrixDocument doc = load_document_file(path);
    require_variant_r(doc.matrix, "central");
    const int n = doc.matrix.n();
    OperatorMatrix k = build_k_operator(doc.matrix);
    ReportBuilder report("central");
    report.add(check_operator_reflection(k, r_matrix(n)));
    report.add(check_centrality_bf(k));
    if (auto match = match_grassmann(doc.matrix)) {
        report.value("s", match->second);
        report.add(check_centrality_bs(k, grassmann_coideal_generators(n, match->second)));
    }
    ScalarMatrix c = qtrace_aux(k).matrix();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            report.value("C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", c(i, j));
    return report.finish(out);
}

int cmd_braidb(const std::string& path, int strands, std::ostream& out) {
    if (strands < 2) throw UsageError("--strands must be at least 2");
    MatrixDocument doc = load_document_file(path);
    require_variant_r(doc.matrix, "braidb");
    const int n = doc.matrix.n();
    if (ipow(n, strands) > kMaxBraidDim) throw UsageError("n^strands exceeds " + std::to_string(kMaxBraidDim));
    const Scalar scale = Scalar::q_power(Rational(n * n - 1, n), n);
    TypeBRepresentation rep = type_b_rep(n, strands, doc.matrix.entries, scale);
    ReportBuilder report("braidb");
    for (const auto& r : rep.relations) report.add(r);
    report.value("scale", scale);
    return report.finish(out);
}

}  // namespace

MatrixDocument load_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw UsageError("document must be a JSON object");
    auto field = [&](const char* name) -> const json& {
        if (!doc.contains(name)) throw UsageError(std::string("missing field '") + name + "'");
        return doc.at(name);
    };
    const json& jn = field("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 1 || jn.get<long long>() > 64)
        throw UsageError("'n' must be an integer in 1..64");
    const int n = jn.get<int>();
    int root_order = 1;
    if (doc.contains("root_order")) {
        const json& jr = doc.at("root_order");
        if (!jr.is_number_integer() || jr.get<long long>() < 1 || jr.get<long long>() > 1000)
            throw UsageError("'root_order' must be a positive integer");
        root_order = jr.get<int>();
    }
    Variant variant = Variant::r;
    if (doc.contains("variant")) {
        const json& jv = doc.at("variant");
        if (!jv.is_string()) throw UsageError("'variant' must be a string");
        try {
            variant = variant_from_string(jv.get<std::string>());
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    const json& rows = field("entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw UsageError("'entries' must be an array of n rows");
    ScalarMatrix m = zero_matrix<Scalar>(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw UsageError("row " + std::to_string(i + 1) + " must have n entries");
        for (int j = 0; j < n; ++j) {
            const json& e = row[static_cast<std::size_t>(j)];
            const std::string where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (!e.is_string()) throw UsageError(where + " must be a string");
            try {
                m(i, j) = parse_scalar(e.get<std::string>(), root_order);
            } catch (const ParseError& err) {
                throw UsageError(where + ": " + err.what());
            }
            if (m(i, j).root_order() != root_order)
                throw UsageError(where + " needs root order " + std::to_string(m(i, j).root_order()));
        }
    }
    return MatrixDocument{root_order, CharacterMatrix(std::move(m), variant)};
}

MatrixDocument load_document_file(const std::string& path) { return load_document(read_file(path)); }

std::string emit_document(const MatrixDocument& doc) {
    json out;
    const int n = doc.matrix.n();
    out["n"] = n;
    out["root_order"] = doc.root_order;
    out["variant"] = to_string(doc.matrix.variant);
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(print_scalar(doc.matrix(i, j)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out.dump(2) + '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for reflection equation data of U_q(sl_n)", "qrefl"};
    app.require_subcommand(1);

    std::string input, variant, s_text = "s", emit;
    int n = 0, m = 0, strands = 0;
    bool oracle = false;
    const auto variants = CLI::IsMember({"r", "rbar21"});

    auto* verify = app.add_subcommand("verify-re", "check the reflection equation for a matrix document");
    verify->add_option("input", input, "matrix document")->required();
    verify->add_option("--variant", variant, "r or rbar21 (default: the document's)")->check(variants);

    auto* qybe = app.add_subcommand("qybe", "Yang-Baxter, braid and Hecke relations of the R-matrix");
    qybe->add_option("--n", n, "rank + 1, 2..4")->required();

    auto* qdet = app.add_subcommand("qdet", "quantum determinant of a character and the invertibility criterion");
    qdet->add_option("input", input, "matrix document")->required();
    qdet->add_option("--variant", variant, "r or rbar21 (default: the document's)")->check(variants);
    qdet->add_flag("--oracle", oracle, "also evaluate through monomials (n <= 3)");

    auto* grass = app.add_subcommand("grassmann", "emit the Grassmannian solution for n = 2m");
    grass->add_option("--m", m, "half the dimension")->required();
    grass->add_option("--s", s_text, "parameter, a scalar string (default s)");
    grass->add_option("--emit", emit, "write the document here; the report then goes to stdout");

    auto* central = app.add_subcommand("central", "L-operator, its q-trace and centrality checks");
    central->add_option("input", input, "matrix document")->required();

    auto* braidb = app.add_subcommand("braidb", "type-B braid group relations with cylinder scaling");
    braidb->add_option("input", input, "matrix document")->required();
    braidb->add_option("--strands", strands, "number of strands")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsage;
    }

    try {
        if (*verify) return cmd_verify_re(input, variant, out);
        if (*qybe) return cmd_qybe(n, out);
        if (*qdet) return cmd_qdet(input, variant, oracle, out, err);
        if (*grass) return cmd_grassmann(m, s_text, emit, out, err);
        if (*central) return cmd_central(input, out);
        if (*braidb) return cmd_braidb(input, strands, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace qrefl::cli
