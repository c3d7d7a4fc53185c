#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pil/bijection.hpp"
#include "pil/generators.hpp"
#include "pil/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

int default_order() {
    if (const char* env = std::getenv("PIL_DEFAULT_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw pil::ParseError("PIL_DEFAULT_N is not an integer");
        }
    }
    return 40;
}

std::string join_int_list(const std::vector<int>& values) {
    if (values.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw pil::ParseError("bad integer list entry '" + tok + "'");
        }
    }
    return out;
}

/* Starred items mark what moved, standing in for the boldface of
 * hand-written traces; the stars hug the values so the brackets keep
 * reading as structure: [*9,12*], *15*, !*1*. */
std::string item_str(const pil::Item& it, bool starred = false) {
    const char* s = starred ? "*" : "";
    if (it.anchor) return "!" + std::string(s) + std::to_string(it.low) + s;
    if (it.pair)
        return "[" + std::string(s) + std::to_string(it.low) + "," +
               std::to_string(it.high) + s + "]";
    return std::string(s) + std::to_string(it.low) + s;
}

/* Items absent from the previous snapshot are the ones a step touched. */
std::string render_snapshot(const std::vector<pil::Item>& prev,
                            const std::vector<pil::Item>& cur) {
    std::vector<bool> used(prev.size(), false);
    std::string out;
    for (size_t i = 0; i < cur.size(); ++i) {
        bool fresh = true;
        for (size_t j = 0; j < prev.size(); ++j) {
            if (!used[j] && prev[j] == cur[i]) {
                used[j] = true;
                fresh = false;
                break;
            }
        }
        if (i) out += ",";
        out += item_str(cur[i], fresh);
    }
    return out;
}

void print_trace(const pil::MoveTrace& trace) {
    std::printf("start: %s\n", pil::items_to_string(trace.start).c_str());
    const std::vector<pil::Item>* prev = &trace.start;
    if (trace.after_placement) {
        std::printf("place: %s\n", render_snapshot(*prev, *trace.after_placement).c_str());
        prev = &*trace.after_placement;
    }
    for (const pil::TraceStep& step : trace.steps) {
        std::string label = pil::case_label_to_string(step.label);
        if (step.transient) label += " (temporarily)";
        std::printf("%s: %s\n", label.c_str(), render_snapshot(*prev, step.snapshot).c_str());
        prev = &step.snapshot;
    }
}

void emit_rows(const std::vector<std::vector<std::string>>& rows,
               const std::vector<std::string>& keys, const std::string& format) {
    for (const auto& row : rows) {
        if (format == "csv") {
            for (size_t i = 0; i < row.size(); ++i)
                std::printf("%s%s", i ? "," : "", row[i].c_str());
            std::printf("\n");
        } else {
            json line = json::object();
            for (size_t i = 0; i < row.size(); ++i) {
                /* indices and counts are honest integers; series
                 * coefficients may not fit and stay strings */
                if (keys[i] == "coeff")
                    line[keys[i]] = row[i];
                else
                    line[keys[i]] = std::stoll(row[i]);
            }
            std::printf("%s\n", line.dump().c_str());
        }
    }
}

int do_verify(const std::string& identity, int order, const std::string& format) {
    const pil::VerificationReport rep = pil::run_identity(identity, order);
    for (const pil::TimedSide& side : rep.sides)
        std::fprintf(stderr, "# %s computed in %.3fs\n", side.name.c_str(), side.seconds);

    if (format == "csv") {
        for (const pil::SideComparison& c : rep.comparisons) {
            const std::string n = c.pass ? "" : std::to_string(c.first_n);
            const std::string m = c.pass || c.first_m < 0 ? "" : std::to_string(c.first_m);
            std::printf("%s,%s,%s,%s,%s,%s,%s\n", c.left.c_str(), c.right.c_str(),
                        c.pass ? "pass" : "fail", n.c_str(), m.c_str(),
                        c.left_value.c_str(), c.right_value.c_str());
        }
    } else {
        json out;
        out["identity"] = rep.identity;
        out["max_n"] = rep.order;
        out["status"] = rep.pass() ? "pass" : "fail";
        out["comparisons"] = json::array();
        for (const pil::SideComparison& c : rep.comparisons) {
            json jc;
            jc["left"] = c.left;
            jc["right"] = c.right;
            jc["status"] = c.pass ? "pass" : "fail";
            if (!c.pass) {
                jc["first_mismatch"] = {{"n", c.first_n},
                                        {"m", c.first_m},
                                        {"left_value", c.left_value},
                                        {"right_value", c.right_value}};
            }
            out["comparisons"].push_back(jc);
        }
        std::printf("%s\n", out.dump(2).c_str());
    }
    return rep.pass() ? 0 : 1;
}

int do_counts(const std::string& family, int n_max, const std::string& format) {
    const pil::Family f = pil::family_from_string(family);
    const pil::CountTable table = pil::count_table(f, n_max);
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m < static_cast<int>(table[n].size()); ++m)
            if (table[n][m] != 0)
                rows.push_back({std::to_string(n), std::to_string(m),
                                std::to_string(table[n][m])});
    emit_rows(rows, {"n", "m", "count"}, format);
    return 0;
}

int do_expand(const std::string& name, int order, const std::string& format) {
    std::optional<pil::TruncatedSeries> uni;
    std::optional<pil::BivariateSeries> bi;

    if (name == "aag") {
        uni = pil::aag_capparelli_series(order);
    } else if (name == "sills") {
        uni = pil::sills_capparelli_series(order);
    } else if (name == "classical-gg1" || name == "classical-gg2") {
        bi = pil::classical_gg_series(name.back() == '1' ? 1 : 2, order);
    } else if (name == "schur-a") {
        bi = pil::schur_series(pil::SchurForm::a, order);
    } else if (name == "schur-alpha") {
        bi = pil::schur_series(pil::SchurForm::alpha, order);
    } else if (name.rfind("product:", 0) == 0) {
        uni = pil::product_side(name.substr(8), order);
    } else if (name.rfind("multisum:", 0) == 0) {
        const pil::Family f = pil::family_from_string(name.substr(9));
        if (f.tag == pil::FamilyTag::gordon)
            bi = pil::andrews_gordon_multisum(f.k, f.a, order);
        else if (pil::is_capparelli_type(f))
            bi = pil::capparelli_family_multisum(f, order);
        else
            bi = pil::gg_family_multisum(f, order);
    } else {
        throw pil::UnknownIdentity("no series named '" + name + "'");
    }

    std::vector<std::vector<std::string>> rows;
    if (uni) {
        for (int n = 0; n <= order; ++n)
            if (uni->coeff(n) != 0) rows.push_back({std::to_string(n), uni->coeff(n).str()});
        emit_rows(rows, {"n", "coeff"}, format);
    } else {
        for (int n = 0; n <= order; ++n)
            for (int m = 0; m <= bi->x_bound(); ++m)
                if (bi->coeff(n, m) != 0)
                    rows.push_back(
                        {std::to_string(n), std::to_string(m), bi->coeff(n, m).str()});
        emit_rows(rows, {"n", "m", "coeff"}, format);
    }
    return 0;
}

int do_bijection(const std::string& direction, const std::string& family,
                 const std::string& input, int n1, int n2, const std::string& mu_text,
                 const std::string& eta_text, const std::string& variant_text, bool trace) {
    const pil::Family f = pil::family_from_string(family);

    if (direction == "backward") {
        const std::vector<pil::Item> items = pil::items_from_string(input);
        const pil::Partition p(pil::flatten_items(items));
        const pil::BackwardResult res = pil::backward_map(f, p);
        if (trace) print_trace(res.trace);
        std::printf("base: %s\n", res.base.to_string().c_str());
        std::printf("weight: %lld\n", static_cast<long long>(res.base.weight()));
        std::printf("variant: %s\n",
                    res.variant == pil::BaseVariant::anchored ? "anchored" : "plain");
        std::printf("n1: %d\n", res.triple.n1);
        std::printf("n2: %d\n", res.triple.n2);
        std::printf("mu: %s\n", join_int_list(res.triple.mu.parts()).c_str());
        std::printf("eta: %s\n", join_int_list(res.triple.eta.parts()).c_str());
        return 0;
    }

    const pil::BaseVariant variant = variant_text == "anchored" ? pil::BaseVariant::anchored
                                                                : pil::BaseVariant::plain;
    const pil::Triple t{n1, n2, pil::PaddedPartition(parse_int_list(mu_text)),
                        pil::PaddedPartition(parse_int_list(eta_text))};
    const pil::ForwardResult res = pil::forward_map(f, t, variant);
    if (trace) print_trace(res.trace);
    std::printf("result: %s\n", res.result.to_string().c_str());
    std::printf("weight: %lld\n", static_cast<long long>(res.result.weight()));
    return 0;
}

int do_fuzz(const std::string& family, int n_max, int seed) {
    const pil::Family f = pil::family_from_string(family);
    const pil::FuzzResult res = pil::fuzz_family(f, n_max);
    std::printf("family: %s\n", pil::family_to_string(res.family).c_str());
    std::printf("max_n: %d\n", res.n_max);
    std::printf("seed: %d\n", seed);
    std::printf("partitions_checked: %lld\n", res.partitions_checked);
    std::printf("triples_checked: %lld\n", res.triples_checked);
    std::printf("failures: %lld\n", res.failures);
    if (res.failures > 0) std::printf("first_failure: %s\n", res.first_failure.c_str());
    return res.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition identity laboratory"};
    app.require_subcommand(1);

    int order = 0;
    try {
        order = default_order();
    } catch (const pil::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::string format = "json";
    std::string identity, family, series, input, direction;
    std::string mu_text, eta_text, variant_text = "plain";
    int n1 = 0, n2 = 0, seed = 0;
    bool trace = false;

    CLI::App* c_verify = app.add_subcommand("verify", "compare all sides of an identity");
    c_verify->add_option("--identity", identity, "identity tag")->required();
    c_verify->add_option("--max-n", order, "truncation order");
    c_verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* c_counts = app.add_subcommand("counts", "emit a family's count table");
    c_counts->add_option("--family", family, "family name")->required();
    c_counts->add_option("--max-n", order, "largest weight");
    c_counts->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* c_expand = app.add_subcommand("expand", "emit coefficients of a named series");
    c_expand->add_option("--series", series, "series name")->required();
    c_expand->add_option("--max-n", order, "truncation order");
    c_expand->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* c_bij = app.add_subcommand("bijection", "run the staircase maps");
    c_bij->add_option("--direction", direction)
        ->required()
        ->check(CLI::IsMember({"forward", "backward"}));
    c_bij->add_option("--family", family, "family name")->required();
    c_bij->add_option("--input", input, "partition text, backward only");
    c_bij->add_option("--n1", n1, "singleton count, forward only");
    c_bij->add_option("--n2", n2, "pair count, forward only");
    c_bij->add_option("--mu", mu_text, "comma list, forward only");
    c_bij->add_option("--eta", eta_text, "comma list, forward only");
    c_bij->add_option("--variant", variant_text)->check(CLI::IsMember({"plain", "anchored"}));
    c_bij->add_flag("--trace", trace, "print every move");

    CLI::App* c_fuzz = app.add_subcommand("fuzz", "exhaustive roundtrip checks");
    c_fuzz->add_option("--family", family, "family name")->required();
    c_fuzz->add_option("--max-n", order, "largest weight");
    c_fuzz->add_option("--seed", seed, "recorded in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_verify->parsed()) return do_verify(identity, order, format);
        if (c_counts->parsed()) return do_counts(family, order, format);
        if (c_expand->parsed()) return do_expand(series, order, format);
        if (c_bij->parsed())
            return do_bijection(direction, family, input, n1, n2, mu_text, eta_text,
                                variant_text, trace);
        if (c_fuzz->parsed()) return do_fuzz(family, order, seed);
    } catch (const pil::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const pil::UnknownIdentity& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const pil::InvalidGordonParams& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const pil::ConstraintViolation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const pil::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
