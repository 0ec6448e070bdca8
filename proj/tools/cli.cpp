#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnkit/bn_numbers.hpp"
#include "bnkit/chain.hpp"
#include "bnkit/error.hpp"
#include "bnkit/lattice.hpp"
#include "bnkit/loci.hpp"
#include "bnkit/normal_bundle.hpp"
#include "bnkit/splitting.hpp"
#include "bnkit/tableaux.hpp"
#include "bnkit/text.hpp"

namespace bnkit::cli {

using json = nlohmann::json;

namespace {

struct Outcome {
    std::string command;
    json inputs = json::object();
    json result;
};

using Action = std::function<Outcome()>;

// Integers that fit in 64 bits stay numbers; larger ones become decimal strings.
json big(const BigInt& v) {
    if (v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max())
        return json(v.convert_to<Int>());
    return json(v.str());
}

json index_json(const BNIndex& idx) { return json{{"g", idx.g}, {"r", idx.r}, {"d", idx.d}}; }

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string csv_cell(const json& v) {
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

bool is_record_list(const json& v) {
    return v.is_array() && !v.empty() &&
           std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

std::vector<std::string> record_keys(const json& rows) {
    std::vector<std::string> keys;
    for (const auto& row : rows)
        for (const auto& [k, _] : row.items())
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    return keys;
}

void render_rows(const json& rows, std::ostream& out, const std::string& indent) {
    const auto keys = record_keys(rows);
    std::vector<std::size_t> width;
    for (const auto& k : keys) width.push_back(k.size());
    for (const auto& row : rows)
        for (std::size_t c = 0; c < keys.size(); ++c)
            width[c] = std::max(width[c], scalar_text(row.value(keys[c], json())).size());
    const auto line = [&](const std::vector<std::string>& cells) {
        std::string s = indent;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << s << '\n';
    };
    line(keys);
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (const auto& k : keys) cells.push_back(scalar_text(row.value(k, json())));
        line(cells);
    }
}

void render_table(const Outcome& o, std::ostream& out) {
    out << "command: " << o.command << '\n';
    std::string in;
    for (const auto& [k, v] : o.inputs.items()) in += (in.empty() ? "" : " ") + k + "=" + scalar_text(v);
    out << "inputs: " << in << '\n';
    const json& r = o.result;
    if (is_record_list(r)) {
        out << "result: " << r.size() << " rows\n";
        render_rows(r, out, "  ");
    } else if (r.is_object()) {
        out << "result:\n";
        for (const auto& [k, v] : r.items()) {
            if (is_record_list(v)) {
                out << "  " << k << ":\n";
                render_rows(v, out, "    ");
            } else {
                out << "  " << k << ": " << scalar_text(v) << '\n';
            }
        }
    } else {
        out << "result: " << scalar_text(r) << '\n';
    }
}

void render_csv(const Outcome& o, std::ostream& out) {
    const json& r = o.result;
    if (is_record_list(r)) {
        const auto keys = record_keys(r);
        for (std::size_t c = 0; c < keys.size(); ++c) out << (c ? "," : "") << keys[c];
        out << '\n';
        for (const auto& row : r) {
            for (std::size_t c = 0; c < keys.size(); ++c) out << (c ? "," : "") << csv_cell(row.value(keys[c], json()));
            out << '\n';
        }
    } else if (r.is_object()) {
        out << "key,value\n";
        for (const auto& [k, v] : r.items()) out << k << ',' << csv_cell(v) << '\n';
    } else {
        out << "result\n" << csv_cell(r) << '\n';
    }
}

void render(const Outcome& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << json{{"command", o.command}, {"format", format}, {"inputs", o.inputs}, {"result", o.result}}.dump(2)
            << '\n';
    } else if (format == "csv") {
        render_csv(o, out);
    } else {
        render_table(o, out);
    }
}

// Holds every option value for the lifetime of one parse.
struct Args {
    Int g = 0, r = 0, d = 0, k = 0;
    std::string type, outer, inner, shape, aspects, dist, bundle, sign = "+";
    Int window = -1, aspect_window = -1, max_genus = 6, g_max = 0, d_max = 0, summand = 0, points = 1;
    unsigned threads = 1;
    bool witnesses = false;
    std::optional<Int> degree_opt;
};

class Builder {
public:
    Builder(CLI::App& app, std::string& format, Action& selected)
        : app_(app), format_(format), selected_(selected) {}

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc,
                   const std::string& full, std::function<Outcome()> body) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->add_option("--format", format_, "table | json | csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->callback([this, full, body]() {
            selected_ = [full, body]() {
                Outcome o = body();
                o.command = full;
                return o;
            };
        });
        return sub;
    }

    CLI::App& app() { return app_; }

private:
    CLI::App& app_;
    std::string& format_;
    Action& selected_;
};

void add_grd(CLI::App* sub, Args& a) {
    sub->add_option("-g,--genus", a.g, "genus")->required();
    sub->add_option("-r,--rank", a.r, "projective dimension")->required();
    sub->add_option("-d,--degree", a.d, "degree")->required();
}

json grd_inputs(const Args& a) { return json{{"g", a.g}, {"r", a.r}, {"d", a.d}}; }

json aspects_json(const LimitLineBundle& L) { return format_limit_bundle(L); }

// The chain degree comes from -d, else from a distribution, else from the
// first exact aspect.
Int infer_degree(const Args& a) {
    if (a.degree_opt) return *a.degree_opt;
    if (!a.dist.empty()) return parse_distribution(a.dist).total();
    // first exact aspect fixes the degree
    std::string body(trim(a.aspects));
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const std::string p(trim(part));
        if (p == "gen") continue;
        const auto xy = parse_int_list(p);
        if (xy.size() == 2) return xy[0] + xy[1];
    }
    fail(ErrorKind::precondition_violation, "every aspect is generic; pass -d");
}

LimitLineBundle chain_bundle(const Args& a) { return parse_limit_bundle(a.aspects, infer_degree(a)); }

Int chain_window(const Args& a, const LimitLineBundle& L) {
    return a.window < 0 ? default_window(L.genus()) : a.window;
}

void build(Builder& b, Args& a) {
    CLI::App& app = b.app();

    add_grd(b.leaf(&app, "rho", "Brill-Noether number", "rho", [&]() {
        return Outcome{"", grd_inputs(a), rho(BNIndex(a.g, a.r, a.d))};
    }), a);

    {
        auto* s = b.leaf(&app, "rho-k", "gonality-refined Brill-Noether number", "rho-k", [&]() {
            const RhoK v = rho_k_detail(BNIndex(a.g, a.r, a.d), a.k);
            json in = grd_inputs(a);
            in["k"] = a.k;
            return Outcome{"", in, json{{"rho_k", v.value}, {"l", v.best_l}}};
        });
        add_grd(s, a);
        s->add_option("-k,--gonality", a.k, "gonality")->required();
    }

    add_grd(b.leaf(&app, "count", "number of g^r_d's when rho = 0", "count", [&]() {
        const BNIndex idx(a.g, a.r, a.d);
        return Outcome{"", grd_inputs(a), big(count_grd(idx))};
    }), a);

    add_grd(b.leaf(&app, "chi", "Euler characteristic of the pulled-back tangent bundle", "chi", [&]() {
        return Outcome{"", grd_inputs(a), chi_pullback_tangent(BNIndex(a.g, a.r, a.d))};
    }), a);

    {
        auto* s = b.leaf(&app, "hilbert", "expected Hilbert function value", "hilbert", [&]() {
            json in = grd_inputs(a);
            in["k"] = a.k;
            return Outcome{"", in, big(hilbert_function(BNIndex(a.g, a.r, a.d), a.k))};
        });
        add_grd(s, a);
        s->add_option("-k,--power", a.k, "power")->required();
    }

    {
        auto* s = b.leaf(&app, "smrc", "expected dimension of the maximal rank failure locus", "smrc", [&]() {
            json in = grd_inputs(a);
            in["k"] = a.k;
            return Outcome{"", in, big(smrc_expected_dim(BNIndex(a.g, a.r, a.d), a.k))};
        });
        add_grd(s, a);
        s->add_option("-k,--power", a.k, "power")->required();
    }

    add_grd(b.leaf(&app, "interp", "number of general points a general curve passes through", "interp", [&]() {
        const InterpolationCount c = interpolation_points(BNIndex(a.g, a.r, a.d));
        json res{{"formula_value", c.formula_value}, {"is_exception", c.is_exception}};
        res["count"] = c.count ? json(*c.count) : json();
        return Outcome{"", grd_inputs(a), res};
    }), a);

    // splitting
    CLI::App* split = app.add_subcommand("splitting", "splitting types of degree-k covers");
    split->require_subcommand(1);
    {
        auto* s = b.leaf(split, "rd", "(r, d) of a splitting type", "splitting rd", [&]() {
            const RD v = rd_from_splitting(a.g, parse_splitting(a.type));
            return Outcome{"", json{{"g", a.g}, {"type", a.type}}, json{{"r", v.r}, {"d", v.d}}};
        });
        s->add_option("-g,--genus", a.g, "genus")->required();
        s->add_option("--type", a.type, "splitting type, e.g. -2,-2,1")->required();
    }
    {
        auto* s = b.leaf(split, "rho", "expected codimension complement of a splitting locus", "splitting rho", [&]() {
            return Outcome{"", json{{"g", a.g}, {"type", a.type}}, rho_splitting(a.g, parse_splitting(a.type))};
        });
        s->add_option("-g,--genus", a.g, "genus")->required();
        s->add_option("--type", a.type, "splitting type")->required();
    }
    {
        auto* s = b.leaf(split, "maximal", "maximal splitting types in W^r_d of a k-gonal curve",
                         "splitting maximal", [&]() {
                             json rows = json::array();
                             for (const auto& m : maximal_splitting_types(a.g, a.r, a.d, a.k))
                                 rows.push_back({{"l", m.l}, {"type", format_splitting(m.type)}});
                             json in = grd_inputs(a);
                             in["k"] = a.k;
                             return Outcome{"", in, rows};
                         });
        add_grd(s, a);
        s->add_option("-k,--gonality", a.k, "gonality")->required();
    }
    {
        auto* s = b.leaf(split, "predicates", "basepoint-free and very-ample tests", "splitting predicates", [&]() {
            const HbnPredicates p = hbn_predicates(parse_splitting(a.type), a.r);
            return Outcome{"", json{{"type", a.type}, {"r", a.r}},
                           json{{"basepoint_free", p.basepoint_free},
                                {"very_ample_sufficient", p.very_ample_sufficient}}};
        });
        s->add_option("--type", a.type, "splitting type")->required();
        s->add_option("-r,--rank", a.r, "projective dimension")->required();
    }
    {
        auto* s = b.leaf(split, "majorizes", "whether inner lies in the splitting locus of outer",
                         "splitting majorizes", [&]() {
                             const Majorization m = majorizes(parse_splitting(a.outer), parse_splitting(a.inner));
                             return Outcome{"", json{{"outer", a.outer}, {"inner", a.inner}},
                                            json{{"holds", m.holds}, {"reason", std::string(to_string(m.reason))}}};
                         });
        s->add_option("--outer", a.outer, "outer splitting type")->required();
        s->add_option("--inner", a.inner, "inner splitting type")->required();
    }

    // loci
    CLI::App* loci = app.add_subcommand("loci", "Brill-Noether loci in moduli");
    loci->require_subcommand(1);
    add_grd(b.leaf(loci, "dual", "Serre-dual index", "loci dual", [&]() {
        return Outcome{"", grd_inputs(a), index_json(serre_dual(BNIndex(a.g, a.r, a.d)))};
    }), a);
    add_grd(b.leaf(loci, "maximal", "expected-maximal test", "loci maximal", [&]() {
        const ExpectedMaximal e = expected_maximal(BNIndex(a.g, a.r, a.d));
        return Outcome{"", grd_inputs(a),
                       json{{"is_expected_maximal", e.is_expected_maximal},
                            {"is_maximal_exception", e.is_maximal_exception},
                            {"rho", e.rho},
                            {"predicted_degree", e.predicted_degree},
                            {"codimension_bounded", e.codimension_bounded}}};
    }), a);
    {
        auto* s = b.leaf(loci, "enumerate", "all expected-maximal loci in genus g", "loci enumerate", [&]() {
            json rows = json::array();
            for (const auto& m : enumerate_expected_maximal(a.g))
                rows.push_back({{"r", m.index.r},
                                {"d", m.index.d},
                                {"rho", m.info.rho},
                                {"exception", m.info.is_maximal_exception}});
            return Outcome{"", json{{"g", a.g}}, rows};
        });
        s->add_option("-g,--genus", a.g, "genus")->required();
    }

    {
        auto* s = b.leaf(&app, "kfill", "k-fillings of a k-core", "kfill", [&]() {
            const Partition target = parse_partition(a.shape);
            const int k = static_cast<int>(a.k);
            const int g = static_cast<int>(a.g);
            json res{{"count", big(count_k_fillings(target, k, g))}};
            if (a.witnesses) {
                json ws = json::array();
                for (const auto& w : enumerate_k_fillings(target, k, g)) ws.push_back(format_witness(w));
                res["witnesses"] = ws;
            }
            return Outcome{"", json{{"shape", a.shape}, {"k", a.k}, {"g", a.g}}, res};
        });
        s->add_option("--shape", a.shape, "target k-core, e.g. 4,2,1,1")->required();
        s->add_option("-k", a.k, "core parameter")->required();
        s->add_option("-g,--symbols", a.g, "number of symbols")->required();
        s->add_flag("--witnesses", a.witnesses, "list residue words");
    }

    {
        auto* s = b.leaf(&app, "syt", "standard Young tableaux on a shape", "syt", [&]() {
            return Outcome{"", json{{"shape", a.shape}}, big(syt_count(parse_partition(a.shape)))};
        });
        s->add_option("--shape", a.shape, "partition, e.g. 2,2")->required();
    }

    // chain
    CLI::App* chain = app.add_subcommand("chain", "limit line bundles on a chain of elliptic curves");
    chain->require_subcommand(1);
    const auto chain_opts = [&](CLI::App* s, bool with_r) {
        s->add_option("--aspects", a.aspects, "aspects, e.g. \"0,4;2,2;0,4\"")->required();
        s->add_option("-d,--degree", a.degree_opt, "total degree (inferred from exact aspects)");
        if (with_r) s->add_option("-r,--rank", a.r, "projective dimension")->required();
        s->add_option("--window", a.window, "prefix-sum window (default g+1)");
    };
    {
        auto* s = b.leaf(chain, "h0", "global sections of one multidegree limit", "chain h0", [&]() {
            const LimitLineBundle L = chain_bundle(a);
            const DegreeDistribution dist = parse_distribution(a.dist);
            return Outcome{"", json{{"aspects", aspects_json(L)}, {"dist", format_distribution(dist)}},
                           h0_chain(L, dist)};
        });
        s->add_option("--aspects", a.aspects, "aspects, e.g. \"0,4;2,2;0,4\"")->required();
        s->add_option("--dist", a.dist, "degree distribution, e.g. 3,0,1")->required();
    }
    {
        auto* s = b.leaf(chain, "min-h0", "least h0 over the window", "chain min-h0", [&]() {
            const LimitLineBundle L = chain_bundle(a);
            const Int w = chain_window(a, L);
            const MinH0 m = min_h0(L, w);
            return Outcome{"", json{{"aspects", aspects_json(L)}, {"d", L.degree()}, {"window", w}},
                           json{{"min_h0", m.value}, {"witness", format_distribution(m.witness)}}};
        });
        chain_opts(s, false);
    }
    {
        auto* s = b.leaf(chain, "tables", "vanishing tables a and b", "chain tables", [&]() {
            const LimitLineBundle L = chain_bundle(a);
            const Int w = chain_window(a, L);
            const VanishingTable t = vanishing_tables(L, a.r, w);
            json rows = json::array();
            for (Int i = 0; i <= t.g; ++i) {
                json row{{"i", i}};
                row["a"] = i < t.g ? json(format_int_list(t.a[static_cast<std::size_t>(i)])) : json();
                row["b"] = i > 0 ? json(format_int_list(t.b[static_cast<std::size_t>(i)])) : json();
                rows.push_back(row);
            }
            return Outcome{"", json{{"aspects", aspects_json(L)}, {"d", L.degree()}, {"r", a.r}, {"window", w}},
                           rows};
        });
        chain_opts(s, true);
    }
    {
        auto* s = b.leaf(chain, "star", "components where the vanishing orders are complementary", "chain star",
                         [&]() {
                             const LimitLineBundle L = chain_bundle(a);
                             const Int w = chain_window(a, L);
                             const StarReport rep = star_components(L, a.r, w);
                             json stars = json::array();
                             for (const Star& st : rep.stars)
                                 stars.push_back({{"i", st.i},
                                                  {"n", st.n},
                                                  {"aspect", format_aspect(st.forced, st.i, L.genus())}});
                             return Outcome{"",
                                            json{{"aspects", aspects_json(L)},
                                                 {"d", L.degree()},
                                                 {"r", a.r},
                                                 {"window", w}},
                                            json{{"stars", stars},
                                                 {"per_n", format_int_list(rep.per_n)},
                                                 {"required", rep.required}}};
                         });
        chain_opts(s, true);
    }
    {
        auto* s = b.leaf(chain, "search", "exhaustive search for r-positive limit line bundles", "chain search",
                         [&]() {
                             SearchOptions opts;
                             opts.window = a.window;
                             opts.aspect_window = a.aspect_window;
                             opts.threads = a.threads;
                             opts.max_genus = a.max_genus;
                             const SearchResult res = search_limit_bundles(a.g, a.r, a.d, opts);
                             json ws = json::array();
                             for (const auto& L : res.witnesses) ws.push_back(format_limit_bundle(L));
                             json in = grd_inputs(a);
                             in["window"] = res.window;
                             in["aspect_window"] = res.aspect_window;
                             return Outcome{"", in,
                                            json{{"tuples", res.tuples},
                                                 {"count_exact", res.count_exact},
                                                 {"count_with_generic", res.count_with_generic},
                                                 {"witnesses", ws}}};
                         });
        add_grd(s, a);
        s->add_option("--window", a.window, "prefix-sum window (default g+1)");
        s->add_option("--aspect-window", a.aspect_window, "interior aspect range (default: the window)");
        s->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--max-genus", a.max_genus, "genus budget");
    }

    // lattice
    CLI::App* lat = app.add_subcommand("lattice", "embedded degenerations in P^r");
    lat->require_subcommand(1);
    {
        auto* s = b.leaf(lat, "min-degree", "least degree with rho >= 0", "lattice min-degree", [&]() {
            return Outcome{"", json{{"r", a.r}, {"g", a.g}}, min_degree(a.r, a.g)};
        });
        s->add_option("-r,--rank", a.r, "projective dimension")->required();
        s->add_option("-g,--genus", a.g, "genus")->required();
    }
    {
        auto* s = b.leaf(lat, "reachable", "points reachable from a rational normal curve", "lattice reachable",
                         [&]() {
                             json rows = json::array();
                             for (const auto& p : reachable_set(a.r, a.g_max, a.d_max))
                                 rows.push_back({{"d", p.d}, {"g", p.g}});
                             return Outcome{"", json{{"r", a.r}, {"g_max", a.g_max}, {"d_max", a.d_max}}, rows};
                         });
        s->add_option("-r,--rank", a.r, "projective dimension")->required();
        s->add_option("--g-max", a.g_max, "largest genus")->required();
        s->add_option("--d-max", a.d_max, "largest degree")->required();
    }
    {
        auto* s = b.leaf(lat, "certificate", "h1-vanishing certificate along a move sequence",
                         "lattice certificate", [&]() {
                             const MoveCertificate c = h1_certificate(a.r, a.d, a.g);
                             json steps = json::array();
                             for (const auto& st : c.steps)
                                 steps.push_back({{"move", std::string(1, static_cast<char>(st.move))},
                                                  {"bundle", format_split_bundle(st.bundle)},
                                                  {"h1", st.h1},
                                                  {"d", st.after.d},
                                                  {"g", st.after.g}});
                             return Outcome{"", json{{"r", a.r}, {"d", a.d}, {"g", a.g}},
                                            json{{"moves", c.moves()},
                                                 {"base", format_split_bundle(c.base)},
                                                 {"base_h1", c.base_h1},
                                                 {"chi", c.chi},
                                                 {"steps", steps}}};
                         });
        s->add_option("-r,--rank", a.r, "projective dimension")->required();
        s->add_option("-d,--degree", a.d, "degree")->required();
        s->add_option("-g,--genus", a.g, "genus")->required();
    }

    // normal bundles
    CLI::App* nb = app.add_subcommand("nb", "normal bundles of rational space curves");
    nb->require_subcommand(1);
    {
        auto* s = b.leaf(nb, "project", "projection-from-a-point ledger", "nb project", [&]() {
            const LedgerSequence l = projection_ledger(a.d);
            json res{{"sub", l.sub.degree()},
                     {"quot", l.quot.degree()},
                     {"total_rank", l.total_rank},
                     {"total_degree", l.total_degree},
                     {"determines_total", l.determines_total()}};
            res["total"] = l.determines_total() ? json(format_split_bundle(l.total())) : json();
            return Outcome{"", json{{"d", a.d}}, res};
        });
        s->add_option("-d,--degree", a.d, "degree")->required();
    }
    {
        auto* s = b.leaf(nb, "odd-cert", "balanced normal bundle certificate for odd degree", "nb odd-cert", [&]() {
            const OddDegreeCertificate c = odd_degree_certificate(a.d);
            return Outcome{"", json{{"d", a.d}},
                           json{{"peels", c.peels},
                                {"reduced_degree", c.reduced_degree},
                                {"sub", c.sub},
                                {"quot", c.quot},
                                {"balanced", c.balanced},
                                {"total", c.total},
                                {"conclusion", format_split_bundle(c.conclusion)}}};
        });
        s->add_option("-d,--degree", a.d, "odd degree >= 3")->required();
    }
    {
        auto* s = b.leaf(nb, "modify", "elementary modification toward a summand", "nb modify", [&]() {
            if (a.sign != "+" && a.sign != "-")
                fail(ErrorKind::parse_error, "sign must be + or -, got '" + a.sign + "'");
            const SplitBundle e = parse_split_bundle(a.bundle);
            const SplitBundle out =
                modify(e, a.summand, a.sign == "+" ? Sign::positive : Sign::negative, a.points);
            return Outcome{"",
                           json{{"bundle", a.bundle}, {"summand", a.summand}, {"sign", a.sign}, {"points", a.points}},
                           json{{"bundle", format_split_bundle(out)}, {"h0", out.h0()}, {"h1", out.h1()}}};
        });
        s->add_option("--bundle", a.bundle, "degrees, e.g. 5,5")->required();
        s->add_option("--summand", a.summand, "0-based summand index")->required();
        s->add_option("--sign", a.sign, "+ or -");
        s->add_option("--points", a.points, "points in the divisor");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brill-Noether invariants and degeneration checks", "bnkit"};
    app.require_subcommand(1);
    std::string format = "table";
    Action selected;
    Args a;
    Builder b(app, format, selected);
    build(b, a);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (!selected) {
        err << "error: no command given\n";
        return 2;
    }
    try {
        const Outcome o = selected();
        render(o, format, out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace bnkit::cli
