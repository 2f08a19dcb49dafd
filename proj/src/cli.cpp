#include "nccr/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nccr/mckay.hpp"
#include "nccr/mf.hpp"
#include "nccr/moduli.hpp"
#include "nccr/rep.hpp"
#include "nccr/skew.hpp"
#include "nccr/stability.hpp"
#include "nccr/toricend.hpp"

namespace nccr::cli {

const char* kVersion = "0.1.0";

namespace {

struct Io {
    std::string out_path;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, bytes)

    std::string read(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read input file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        inputs.emplace_back(path, ss.str());
        return inputs.back().second;
    }

    uint64_t digest(const std::vector<std::string>& args) const {
        uint64_t h = 1469598103934665603ULL;
        auto mix = [&](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ULL;
            }
        };
        for (auto& a : args) mix(a);
        for (auto& [p, bytes] : inputs) mix(bytes);
        return h;
    }
};

void emit(const std::string& text, const Io& io, std::ostream& out) {
    if (io.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    } else {
        std::ofstream f(io.out_path);
        if (!f) throw std::runtime_error("cannot write output file '" + io.out_path + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
}

int degree_bound_default(int fallback) {
    const char* env = std::getenv("NCCR_DEGREE_BOUND");
    if (!env) return fallback;
    int v = std::atoi(env);
    return v > 0 ? v : fallback;
}

StabilityParameter parse_theta(const Quiver& q, const std::string& text) {
    StabilityParameter theta;
    std::stringstream ss(text);
    std::string tok;
    size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= q.vertices().size()) throw std::runtime_error("theta has too many entries");
        theta[q.vertices()[i++]] = std::stoi(tok);
    }
    if (i != q.vertices().size()) throw std::runtime_error("theta has too few entries");
    return theta;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

nlohmann::json chart_json(const Chart& c) {
    nlohmann::json j;
    j["tree"] = c.tree;
    j["free"] = c.free_coords;
    nlohmann::json expr = nlohmann::json::object();
    for (auto& [a, m] : c.expressions) expr[a] = m.to_string();
    j["expressions"] = expr;
    return j;
}

nlohmann::json invariants_json(const InvariantReport& rep) {
    nlohmann::json j;
    j["version"] = 1;
    j["generators"] = nlohmann::json::array();
    for (auto& c : rep.classes) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["degree"] = c.degree();
        nlohmann::json members = nlohmann::json::array();
        for (auto& m : c.members) members.push_back(m.to_string());
        jc["members"] = members;
        j["generators"].push_back(jc);
    }
    j["identities"] = nlohmann::json::array();
    for (auto& id : rep.identities) j["identities"].push_back(id.to_string());
    j["certified"] = rep.certified;
    j["max_generator_degree"] = rep.max_generator_degree;
    j["note"] = "generators of k[Rep]^GL as computed; this ring can differ from the intended "
                "center (compare the generator count and identities)";
    return j;
}

// quiver and relations loaded together everywhere
struct QuiverInput {
    Quiver quiver;
    std::vector<Relation> relations;
};

QuiverInput load_quiver(Io& io, const std::string& path) {
    auto [q, rels] = quiver_from_json(io.read(path));
    return {std::move(q), std::move(rels)};
}

int run_inner(const std::vector<std::string>& args, std::ostream& out, Io& io) {
    CLI::App app{"exact quiver/GIT/McKay toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // parent options remain visible after a subcommand
    std::string seed;   // accepted and ignored by deterministic commands
    app.add_option("--seed", seed);

    // ---- quiver ----
    auto* quiver_cmd = app.add_subcommand("quiver", "quiver utilities");
    quiver_cmd->require_subcommand(1);
    std::string q_in;
    auto* quiver_dot = quiver_cmd->add_subcommand("dot", "render a quiver as DOT");
    quiver_dot->add_option("--quiver", q_in)->required();
    quiver_dot->add_option("--out", io.out_path);

    // ---- rep ----
    auto* rep_cmd = app.add_subcommand("rep", "representation utilities");
    rep_cmd->require_subcommand(1);
    std::string rep_quiver, rep_in;
    auto* rep_check = rep_cmd->add_subcommand("check", "check relations hold");
    rep_check->add_option("--quiver", rep_quiver)->required();
    rep_check->add_option("--rep", rep_in)->required();
    rep_check->add_option("--out", io.out_path);

    // ---- stability ----
    auto* stab = app.add_subcommand("stability", "King stability");
    stab->require_subcommand(1);
    std::string st_quiver, st_rep, st_theta;
    auto* st_classify = stab->add_subcommand("classify", "classify a representation");
    st_classify->add_option("--quiver", st_quiver)->required();
    st_classify->add_option("--rep", st_rep)->required();
    st_classify->add_option("--theta", st_theta)->required();
    st_classify->add_option("--out", io.out_path);
    int ch_vertices = 0;
    std::string ch_quiver;
    bool ch_fan = false;
    auto* st_chambers = stab->add_subcommand("chambers", "GIT chamber decomposition");
    st_chambers->add_option("--vertices", ch_vertices);
    st_chambers->add_option("--quiver", ch_quiver);
    st_chambers->add_flag("--fan", ch_fan, "include the 2-D fan description (3 vertices)");
    st_chambers->add_option("--out", io.out_path);

    // ---- moduli ----
    auto* moduli_cmd = app.add_subcommand("moduli", "quiver-GIT moduli charts");
    moduli_cmd->require_subcommand(1);
    std::string mo_quiver, mo_star, mo_theta;
    bool mo_dot = false, mo_costar = false;
    auto* mo_inv = moduli_cmd->add_subcommand("invariants", "invariant generators and identities");
    mo_inv->add_option("--quiver", mo_quiver)->required();
    mo_inv->add_option("--out", io.out_path);
    auto* mo_charts = moduli_cmd->add_subcommand("charts", "affine chart enumeration");
    mo_charts->add_option("--quiver", mo_quiver)->required();
    mo_charts->add_option("--star", mo_star);
    mo_charts->add_option("--theta", mo_theta);
    mo_charts->add_flag("--costar", mo_costar);
    mo_charts->add_option("--out", io.out_path);
    auto* mo_trans = moduli_cmd->add_subcommand("transitions", "chart transition maps");
    mo_trans->add_option("--quiver", mo_quiver)->required();
    mo_trans->add_option("--star", mo_star);
    mo_trans->add_option("--theta", mo_theta);
    mo_trans->add_flag("--costar", mo_costar);
    mo_trans->add_option("--out", io.out_path);
    auto* mo_dual = moduli_cmd->add_subcommand("dual-graph", "exceptional dual graph");
    mo_dual->add_option("--quiver", mo_quiver)->required();
    mo_dual->add_option("--star", mo_star);
    mo_dual->add_option("--theta", mo_theta);
    mo_dual->add_flag("--costar", mo_costar);
    mo_dual->add_flag("--dot", mo_dot);
    mo_dual->add_option("--out", io.out_path);

    // ---- mckay ----
    auto* mckay_cmd = app.add_subcommand("mckay", "McKay quivers and the ADE dictionary");
    mckay_cmd->require_subcommand(1);
    std::string mk_group;
    bool mk_dot = false, mk_rels = false;
    auto* mk_quiver = mckay_cmd->add_subcommand("quiver", "McKay quiver of a group");
    mk_quiver->add_option("--group", mk_group)->required();
    mk_quiver->add_flag("--dot", mk_dot);
    mk_quiver->add_flag("--with-relations", mk_rels,
                        "include the commutation relations (two-variable cyclic groups)");
    mk_quiver->add_option("--out", io.out_path);
    auto* mk_dual = mckay_cmd->add_subcommand("dual-graph", "dual graph and ADE type");
    mk_dual->add_option("--group", mk_group)->required();
    mk_dual->add_flag("--dot", mk_dot);
    mk_dual->add_option("--out", io.out_path);

    // ---- invariants ----
    std::string inv_group, inv_torus;
    auto* inv_cmd = app.add_subcommand("invariants", "abelian invariant ring generators");
    inv_cmd->add_option("--group", inv_group);
    inv_cmd->add_option("--torus", inv_torus);
    inv_cmd->add_option("--out", io.out_path);

    // ---- endo-quiver ----
    std::string endo_group, endo_summands;
    auto* endo_cmd = app.add_subcommand("endo-quiver", "quiver of End of the weight modules");
    endo_cmd->add_option("--group", endo_group)->required();
    endo_cmd->add_option("--summands", endo_summands, "comma list of weight classes to keep");
    endo_cmd->add_option("--out", io.out_path);

    // ---- skew ----
    auto* skew_cmd = app.add_subcommand("skew", "skew group ring");
    skew_cmd->require_subcommand(1);
    std::string sk_group;
    auto* sk_demo = skew_cmd->add_subcommand("demo", "print sample skew products");
    sk_demo->add_option("--group", sk_group)->required();
    sk_demo->add_option("--out", io.out_path);

    // ---- mf ----
    auto* mf_cmd = app.add_subcommand("mf", "matrix factorizations");
    mf_cmd->require_subcommand(1);
    std::string mf_in, mf_u = "u", mf_v = "v";
    auto* mf_validate = mf_cmd->add_subcommand("validate", "check phi psi = sign f I");
    mf_validate->add_option("--in", mf_in)->required();
    mf_validate->add_option("--out", io.out_path);
    auto* mf_syzygy = mf_cmd->add_subcommand("syzygy", "swap the pair");
    mf_syzygy->add_option("--in", mf_in)->required();
    mf_syzygy->add_option("--out", io.out_path);
    auto* mf_knorrer = mf_cmd->add_subcommand("knorrer", "Knoerrer double over uv - f");
    mf_knorrer->add_option("--in", mf_in)->required();
    mf_knorrer->add_option("--u", mf_u);
    mf_knorrer->add_option("--v", mf_v);
    mf_knorrer->add_option("--out", io.out_path);
    auto* mf_coker = mf_cmd->add_subcommand("cokernel", "presentation of coker(phi)");
    mf_coker->add_option("--in", mf_in)->required();
    mf_coker->add_option("--out", io.out_path);
    auto* mf_partner = mf_cmd->add_subcommand("partner", "solve psi from phi via the adjugate");
    mf_partner->add_option("--in", mf_in)->required();
    mf_partner->add_option("--out", io.out_path);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    if (*quiver_dot) {
        auto qi = load_quiver(io, q_in);
        emit(quiver_to_dot(qi.quiver), io, out);
        return 0;
    }
    if (*rep_check) {
        auto qi = load_quiver(io, rep_quiver);
        Representation r = representation_from_json(qi.quiver, io.read(rep_in));
        RelationCheck rc = check_relations(r, qi.relations);
        nlohmann::json j;
        j["version"] = 1;
        j["ok"] = rc.ok;
        j["violated"] = rc.violated;
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*st_classify) {
        auto qi = load_quiver(io, st_quiver);
        Representation r = representation_from_json(qi.quiver, io.read(st_rep));
        StabilityParameter theta = parse_theta(qi.quiver, st_theta);
        nlohmann::json j;
        j["version"] = 1;
        j["class"] = to_string(classify(r, theta));
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*st_chambers) {
        Quiver q;
        if (!ch_quiver.empty()) {
            q = load_quiver(io, ch_quiver).quiver;
        } else if (ch_vertices > 0) {
            std::vector<std::string> vs;
            for (int i = 0; i < ch_vertices; ++i) vs.push_back(std::to_string(i));
            q = Quiver(vs, {});
        } else {
            throw std::runtime_error("stability chambers: give --vertices or --quiver");
        }
        auto chs = chambers(q);
        nlohmann::json j;
        j["version"] = 1;
        j["count"] = chs.size();
        if (ch_fan && q.vertices().size() == 3) {
            // wall rays in the (theta_1, theta_2) plane
            j["fan_rays"] = {std::vector<int>{1, 0},  std::vector<int>{0, 1},
                             std::vector<int>{-1, 0}, std::vector<int>{0, -1},
                             std::vector<int>{1, -1}, std::vector<int>{-1, 1}};
        }
        j["chambers"] = nlohmann::json::array();
        for (auto& ch : chs) {
            nlohmann::json jc;
            jc["representative"] = ch.representative;
            nlohmann::json conds = nlohmann::json::array();
            for (auto& c : ch.conditions)
                conds.push_back({{"subset", c.subset}, {"sign", c.sign}});
            jc["conditions"] = conds;
            if (ch_fan && q.vertices().size() == 3) {
                // project to (theta_1, theta_2); theta_0 is determined
                jc["fan_point"] = {ch.representative.at(q.vertices()[1]),
                                   ch.representative.at(q.vertices()[2])};
            }
            j["chambers"].push_back(jc);
        }
        emit(j.dump(2), io, out);
        return 0;
    }

    auto resolve_mode = [&](const QuiverInput& qi) -> std::pair<std::string, ChartMode> {
        if (!mo_theta.empty()) return chart_regime(qi.quiver, parse_theta(qi.quiver, mo_theta));
        if (mo_star.empty()) throw std::runtime_error("moduli: give --star (with optional --costar) or --theta");
        return {mo_star, mo_costar ? ChartMode::Costar : ChartMode::Star};
    };

    if (*mo_inv) {
        auto qi = load_quiver(io, mo_quiver);
        InvariantOptions opt;
        opt.degree_bound = degree_bound_default(12);
        auto report = invariant_generators(qi.quiver, commutativize(qi.quiver, qi.relations), opt);
        emit(invariants_json(report).dump(2), io, out);
        return 0;
    }
    if (*mo_charts) {
        auto qi = load_quiver(io, mo_quiver);
        auto [root, mode] = resolve_mode(qi);
        auto en = enumerate_charts(qi.quiver, commutativize(qi.quiver, qi.relations), root, mode);
        nlohmann::json j;
        j["version"] = 1;
        j["mode"] = en.mode == ChartMode::Star ? "star" : "costar";
        j["root"] = en.root;
        j["charts"] = nlohmann::json::array();
        for (auto& c : en.charts) j["charts"].push_back(chart_json(c));
        j["unresolved"] = nlohmann::json::array();
        for (auto& u : en.unresolved)
            j["unresolved"].push_back({{"tree", u.tree}, {"stuck", u.stuck_relations}});
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*mo_trans) {
        auto qi = load_quiver(io, mo_quiver);
        auto [root, mode] = resolve_mode(qi);
        auto en = enumerate_charts(qi.quiver, commutativize(qi.quiver, qi.relations), root, mode);
        nlohmann::json j;
        j["version"] = 1;
        j["transitions"] = nlohmann::json::array();
        for (size_t a = 0; a < en.charts.size(); ++a)
            for (size_t b = 0; b < en.charts.size(); ++b) {
                if (a == b) continue;
                Transition t = transition(qi.quiver, en, en.charts[a], en.charts[b]);
                nlohmann::json jt;
                jt["from"] = a;
                jt["from_tree"] = en.charts[a].tree;
                jt["to"] = b;
                jt["to_tree"] = en.charts[b].tree;
                nlohmann::json imgs = nlohmann::json::object();
                for (auto& [c, m] : t.coordinate_images) imgs[c] = m.to_string();
                jt["images"] = imgs;
                jt["nonzero"] = t.nonzero_domain;
                j["transitions"].push_back(jt);
            }
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*mo_dual) {
        auto qi = load_quiver(io, mo_quiver);
        auto [root, mode] = resolve_mode(qi);
        auto brs = commutativize(qi.quiver, qi.relations);
        auto en = enumerate_charts(qi.quiver, brs, root, mode);
        InvariantOptions opt;
        opt.degree_bound = degree_bound_default(12);
        auto report = invariant_generators(qi.quiver, brs, opt);
        DualGraph g = exceptional_dual_graph(qi.quiver, en, report.classes);
        if (mo_dot) {
            emit(dual_graph_to_dot(g), io, out);
            return 0;
        }
        nlohmann::json j;
        j["version"] = 1;
        j["nodes"] = nlohmann::json::array();
        for (auto& node : g.nodes) {
            nlohmann::json jn = nlohmann::json::array();
            for (auto& [chart, axis] : node) jn.push_back({{"chart", chart}, {"axis", axis}});
            j["nodes"].push_back(jn);
        }
        j["edges"] = g.edges;
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*mk_quiver) {
        GroupData g = character_table(GroupData::parse(mk_group));
        Quiver q = mckay_quiver(g);
        std::vector<Relation> rels;
        if (mk_rels) {
            if (g.kind != GroupData::Kind::Cyclic || g.weights.size() != 2)
                throw std::runtime_error(
                    "--with-relations supports two-variable cyclic groups only");
            int r = g.r, a = g.weights[0], b = g.weights[1];
            auto arrow_name = [&](int i, int w, int which) {
                std::string name = "a_" + std::to_string(i) + "_" + std::to_string((i + w) % r);
                if (a == b) name += "_" + std::to_string(which);
                return name;
            };
            for (int i = 0; i < r; ++i) {
                // x_i y_{i+a} = y_i x_{i+b} with x the weight-a arrows
                AlgebraElement e;
                e.add_term(Path::of_arrows(q, {arrow_name(i, a, 0), arrow_name((i + a) % r, b, 1)}),
                           Rational(1));
                e.add_term(Path::of_arrows(q, {arrow_name(i, b, 1), arrow_name((i + b) % r, a, 0)}),
                           Rational(-1));
                rels.push_back(make_relation(q, e));
            }
        }
        emit(mk_dot ? quiver_to_dot(q) : quiver_to_json(q, rels), io, out);
        return 0;
    }
    if (*mk_dual) {
        GroupData g = character_table(GroupData::parse(mk_group));
        SimpleGraph dg = mckay_to_dual_graph(mckay_quiver(g));
        if (mk_dot) {
            emit(dual_graph_to_dot_graph(dg), io, out);
            return 0;
        }
        nlohmann::json j;
        j["version"] = 1;
        j["nodes"] = dg.nodes;
        j["edges"] = dg.edges;
        j["ade"] = classify_ade(dg).to_string();
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*inv_cmd) {
        AbelianAction act = !inv_group.empty()
                                ? [&] {
                                      GroupData g = GroupData::parse(inv_group);
                                      if (g.kind != GroupData::Kind::Cyclic)
                                          throw std::runtime_error("invariants: cyclic groups only");
                                      std::vector<long long> ws(g.weights.begin(), g.weights.end());
                                      return AbelianAction::cyclic(g.r, ws);
                                  }()
                                : [&] {
                                      if (inv_torus.empty())
                                          throw std::runtime_error("invariants: give --group or --torus");
                                      std::vector<long long> ws;
                                      for (int w : parse_int_list(inv_torus)) ws.push_back(w);
                                      return AbelianAction::torus(ws);
                                  }();
        int fallback = act.kind == AbelianAction::Kind::Cyclic ? 3 * act.r : 16;
        GeneratorList gl = invariant_ring_generators(act, degree_bound_default(fallback));
        nlohmann::json j;
        j["version"] = 1;
        j["generators"] = nlohmann::json::array();
        for (auto& m : gl.generators) j["generators"].push_back(m.to_string());
        j["certified"] = gl.certified;
        j["gorenstein"] = act.gorenstein();
        // relations among the generators (plain monomial identities)
        std::vector<InvariantClass> classes;
        for (auto& m : gl.generators) {
            InvariantClass c;
            c.members = {m};
            c.name = m.to_string();
            classes.push_back(std::move(c));
        }
        BinomialCongruence trivial{BinomialRelationSet{}};
        j["identities"] = nlohmann::json::array();
        for (auto& id : find_identities(classes, trivial, 2 * gl.max_generator_degree + 2))
            j["identities"].push_back(id.to_string());
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*endo_cmd) {
        GroupData g = GroupData::parse(endo_group);
        if (g.kind != GroupData::Kind::Cyclic) throw std::runtime_error("endo-quiver: cyclic groups only");
        std::vector<long long> ws(g.weights.begin(), g.weights.end());
        AbelianAction act = AbelianAction::cyclic(g.r, ws);
        int bound = degree_bound_default(3 * act.r);
        Quiver q = endo_summands.empty() ? endo_quiver(act, bound)
                                         : endo_quiver_summands(act, parse_int_list(endo_summands), bound);
        emit(quiver_to_json(q, {}), io, out);
        return 0;
    }
    if (*sk_demo) {
        GroupData g = GroupData::parse(sk_group);
        if (g.kind != GroupData::Kind::Cyclic) throw std::runtime_error("skew demo: cyclic groups only");
        SkewContext ctx;
        ctx.r = g.r;
        ctx.weights.assign(g.weights.begin(), g.weights.end());
        static const char* names[] = {"x", "y", "z", "w"};
        for (size_t i = 0; i < ctx.weights.size() && i < 4; ++i) ctx.variables.push_back(names[i]);
        nlohmann::json j;
        j["version"] = 1;
        j["group"] = g.name();
        j["products"] = nlohmann::json::array();
        for (size_t i = 0; i < ctx.variables.size(); ++i)
            for (size_t k = 0; k < ctx.variables.size(); ++k) {
                SkewElement a(CycPolynomial(Cyclotomic(1), Monomial(ctx.variables[i])), 1, ctx);
                SkewElement b(CycPolynomial(Cyclotomic(1), Monomial(ctx.variables[k])), 1, ctx);
                SkewProduct p = skew_multiply(ctx, a, b);
                j["products"].push_back({{"lhs", a.to_string()},
                                         {"rhs", b.to_string()},
                                         {"product", p.value.to_string()}});
            }
        emit(j.dump(2), io, out);
        return 0;
    }
    if (*mf_validate) {
        MatrixFactorization m = mf_from_json(io.read(mf_in));
        Validation v = validate(m);
        nlohmann::json j;
        j["version"] = 1;
        j["valid"] = v.ok;
        if (v.ok) j["sign"] = v.sign;
        if (v.witness)
            j["witness"] = {{"product", v.witness->which},
                            {"row", v.witness->row},
                            {"col", v.witness->col},
                            {"found", v.witness->found.to_string()},
                            {"expected", v.witness->expected.to_string()}};
        emit(j.dump(2), io, out);
        return v.ok ? 0 : 1;
    }
    if (*mf_syzygy) {
        emit(mf_to_json(syzygy(mf_from_json(io.read(mf_in)))), io, out);
        return 0;
    }
    if (*mf_knorrer) {
        emit(mf_to_json(knorrer(mf_from_json(io.read(mf_in)), mf_u, mf_v)), io, out);
        return 0;
    }
    if (*mf_coker) {
        emit(cokernel_to_json(cokernel_presentation(mf_from_json(io.read(mf_in)))), io, out);
        return 0;
    }
    if (*mf_partner) {
        MatrixFactorization m = mf_from_json(io.read(mf_in));
        auto solved = solve_partner(m.ring, m.phi);
        if (!solved)
            throw std::runtime_error("partner: phi does not factor f (adjugate division failed)");
        emit(mf_to_json(*solved), io, out);
        return 0;
    }
    throw std::runtime_error("no subcommand executed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Io io;
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        code = run_inner(args, out, io);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::string joined;
    for (auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)io.digest(args));
    err << "{\"command\":\"" << joined << "\",\"input_digest\":\"" << buf
        << "\",\"duration_ms\":" << ms << ",\"version\":\"" << kVersion
        << "\",\"exit\":" << code << "}\n";
    return code;
}

}  // namespace nccr::cli
