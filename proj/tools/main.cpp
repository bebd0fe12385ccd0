#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "rightsplit/groupspec.hpp"
#include "rightsplit/repalg.hpp"
#include "rightsplit/sdp.hpp"
#include "rightsplit/split.hpp"
#include "rightsplit/suites.hpp"

using namespace rsplit;
using json = nlohmann::json;

namespace {

void write_json(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("UsageError", "cannot write " + path);
    out << j.dump(2) << "\n";
}

int run_verify(const std::string& suite, const std::string& json_path,
               const std::string& corpus_path, std::uint64_t seed, std::int64_t samples) {
    SuiteOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    if (!corpus_path.empty()) {
        std::ifstream in(corpus_path);
        if (!in) throw Error("UsageError", "cannot read corpus file " + corpus_path);
        json j = json::parse(in);
        for (const auto& f : j.value("filter", json::array()))
            opts.filter.push_back(f.get<std::string>());
    }
    const VerificationReport report = run_suite(suite, opts);
    if (!json_path.empty()) write_json(report.to_json(), json_path);

    // human-readable fixed-width table
    std::cout << std::left << std::setw(14) << "verdict" << std::setw(64) << "statement"
              << std::right << std::setw(10) << "ms" << "\n";
    std::cout << std::string(88, '-') << "\n";
    for (const auto& c : report.cases)
        std::cout << std::left << std::setw(14) << c.verdict << std::setw(64)
                  << c.statement_id.substr(0, 63) << std::right << std::setw(10) << c.elapsed_ms
                  << "\n";
    std::cout << std::string(88, '-') << "\n";
    std::cout << "suite " << report.suite << ": " << report.verified << " verified, "
              << report.falsified << " falsified, " << report.not_applicable
              << " not applicable, " << report.indeterminate << " indeterminate\n";
    return report.falsified > 0 ? 2 : 0;
}

Transversal aligned_transversal(const SdpFactor& first, const GroupPtr& g, const Subgroup& h) {
    auto found = multiplicative_transversal_search(g, h);
    if (!found) throw Error("SearchBudgetExceeded", "no multiplicatively closed transversal");
    if (first.G == nullptr) return *found;
    // order the representatives so that position matching realizes an
    // isomorphism of the quotients with the first factor
    auto [q1, p1] = quotient(first.G, first.H);
    auto [qi, pi] = quotient(g, h);
    const auto iso = is_isomorphic(qi, q1);
    if (!iso.yes())
        throw Error("MisalignedTransversals", "quotients are not visibly isomorphic");
    // coset (under q1) of the first factor's representative at each position
    std::vector<Elem> want(first.T.reps.size());
    for (size_t k = 0; k < first.T.reps.size(); ++k) want[k] = p1(first.T.reps[k]);
    std::vector<Elem> reps(found->reps.size(), -1);
    for (Elem rep : found->reps) {
        const Elem mapped = (*iso.witness)(pi(rep));
        for (size_t k = 0; k < want.size(); ++k)
            if (want[k] == mapped) reps[k] = rep;
    }
    for (Elem r : reps)
        if (r < 0) throw Error("MisalignedTransversals", "could not align the transversal");
    return Transversal{g, h, std::move(reps)};
}

int run_sdp(const std::string& spec_path, const std::string& json_path) {
    std::ifstream in(spec_path);
    if (!in) throw Error("UsageError", "cannot read spec file " + spec_path);
    const json spec = json::parse(in);
    SdpData data;
    const bool auto_transversal =
        !spec.contains("transversal") ||
        (spec.at("transversal").is_string() && spec.at("transversal") == "auto");
    for (const auto& jf : spec.at("factors")) {
        GroupPtr g = parse_group_spec(jf.at("group").get<std::string>());
        Subgroup h = parse_subgroup_spec(g, jf.at("subgroup").get<std::string>());
        SdpFactor f{g, h, Transversal{}};
        if (auto_transversal) {
            f.T = aligned_transversal(data.factors.empty() ? SdpFactor{} : data.factors[0], g, h);
        } else {
            const auto& all = spec.at("transversal");
            const auto& mine = all.at(data.factors.size());
            std::vector<Elem> reps;
            for (const auto& v : mine) reps.push_back(v.get<Elem>());
            f.T = Transversal{g, h, std::move(reps)};
        }
        data.factors.push_back(std::move(f));
    }
    const std::int64_t n = validate_sdp_closed(data);
    auto sdp = sdp_build(data);
    json out;
    out["order"] = sdp->order();
    out["index"] = n;
    out["law"] = "iterated-two-factor";
    out["factors"] = json::array();
    for (const auto& f : data.factors) {
        json jf{{"group_order", f.G->order()}, {"subgroup_order", f.H.size()}};
        jf["transversal"] = json::array();
        for (Elem rep : f.T.reps) jf["transversal"].push_back(f.G->label(rep));
        out["factors"].push_back(std::move(jf));
    }
    VerifyPolicy pol;
    const auto axioms = verify_group_axioms(*sdp, pol);
    out["associativity"] = {{"ok", axioms.ok}, {"mode", axioms.mode}};
    if (data.factors.size() == 2 &&
        data.factors[0].G->order() * data.factors[1].G->order() <= 4000000) {
        fiber_iso_check(data);
        out["fiber_isomorphism"] = "verified";
    }
    if (spec.contains("export_table")) {
        if (sdp->order() > 5000)
            throw Error("OrderCap", "table export restricted to order <= 5000");
        std::ofstream table(spec.at("export_table").get<std::string>());
        table << export_table(*sdp);
        out["table_exported"] = spec.at("export_table");
    }
    write_json(out, json_path);
    return 0;
}

Mat parse_matrix(const std::string& text, const Field& f) {
    // [[a,b],[c,d]] with integer entries, reduced into the field
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> cur;
    std::string num;
    auto flush_num = [&] {
        if (!num.empty()) {
            cur.push_back(((std::stoll(num) % f.q()) + f.q()) % f.q());
            num.clear();
        }
    };
    for (char ch : text) {
        if (ch == '-' || (ch >= '0' && ch <= '9')) {
            num.push_back(ch);
        } else if (ch == ',') {
            flush_num();
        } else if (ch == ']') {
            flush_num();
            if (!cur.empty()) {
                rows.push_back(cur);
                cur.clear();
            }
        }
    }
    if (rows.empty()) throw Error("UsageError", "empty matrix literal");
    Mat m(static_cast<int>(rows.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw Error("UsageError", "matrix literal is not square");
        for (size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

int run_induce(const std::string& group_spec, const std::string& subgroup_spec,
               const std::string& rep_spec, std::int64_t ell, const std::string& json_path) {
    GroupPtr g = parse_group_spec(group_spec);
    Subgroup h = parse_subgroup_spec(g, subgroup_spec);
    auto hgrp = std::make_shared<SubgroupGroup>(h);
    const auto [p, r] = split_prime_power(ell);
    const Field f = Field::make(p, r);

    Rep sigma = trivial_rep(hgrp, f, 1);
    if (!rep_spec.empty()) {
        std::vector<std::pair<Elem, Mat>> images;
        std::stringstream ss(rep_spec);
        std::string tok;
        int dim = -1;
        while (std::getline(ss, tok, ';')) {
            const auto arrow = tok.find("->");
            if (arrow == std::string::npos)
                throw Error("UsageError", "rep entries look like ELEM->[[..]]");
            const Elem parent = std::stoll(tok.substr(0, arrow));
            if (!h.contains(parent))
                throw Error("UsageError", "rep generator lies outside the subgroup");
            Mat m = parse_matrix(tok.substr(arrow + 2), f);
            if (dim < 0) dim = m.n;
            images.emplace_back(hgrp->to_local(parent), std::move(m));
        }
        sigma = rep_from_images(hgrp, f, dim, images);
    }
    const Transversal t = transversal_identity_first(g, h);
    const BlockRep b = induce(sigma, g, t);
    const ExactSequence seq = exact_sequence_gamma(b);
    const InducedSplit sp = induced_split_check(b);

    json out;
    out["n"] = b.n;
    out["m"] = b.m;
    out["dim"] = b.rho.dim;
    out["coefficients"] = "GF(" + std::to_string(f.q()) + ")";
    out["blocks"] = json::array();
    for (Elem rep : t.reps) {
        json jb;
        jb["representative"] = g->label(rep);
        jb["matrix"] = render_mat(f, b.rho.mats[rep]);
        out["blocks"].push_back(std::move(jb));
    }
    out["image_orders"] = {{"rho_G", seq.rho_G.image->order()},
                           {"rho_H", seq.rho_H.image->order()},
                           {"quotient", seq.quotient->order()}};
    out["exact_sequence"] = "verified";
    out["split"] = split_report_json(sp.report);
    if (!sp.witness_transversal.empty()) {
        out["witness_transversal"] = json::array();
        for (Elem s : sp.witness_transversal)
            out["witness_transversal"].push_back(g->label(s));
    }
    write_json(out, json_path);
    return 0;
}

Rep rep_from_cli(const GroupPtr& g, const std::string& rep_spec, const Field& f) {
    std::vector<std::pair<Elem, Mat>> images;
    std::stringstream ss(rep_spec);
    std::string tok;
    int dim = -1;
    while (std::getline(ss, tok, ';')) {
        const auto arrow = tok.find("->");
        if (arrow == std::string::npos)
            throw Error("UsageError", "rep entries look like ELEM->[[..]]");
        const Elem elem = std::stoll(tok.substr(0, arrow));
        Mat m = parse_matrix(tok.substr(arrow + 2), f);
        if (dim < 0) dim = m.n;
        images.emplace_back(elem, std::move(m));
    }
    if (images.empty()) throw Error("UsageError", "empty rep spec");
    return rep_from_images(g, f, dim, images);
}

int run_repalg(const std::string& op, const std::string& group_spec,
               const std::string& subgroup_spec, const std::string& rep_spec,
               const std::string& rep2_spec, std::int64_t ell, std::int64_t p_arg,
               std::int64_t samples, std::uint64_t seed, const std::string& json_path) {
    json out;
    if (op == "pglpsl") {
        const auto rep = pgl_psl_analysis(p_arg);
        out = {{"p", p_arg},
               {"pgl_order", rep.pgl_order},
               {"psl_order", rep.psl_order},
               {"complement_found", rep.complement_found},
               {"witness", rep.witness_label},
               {"no_complement_centralizes", rep.no_complement_centralizes},
               {"witness_not_inner", rep.witness_not_inner},
               {"no_complement_inner", rep.no_complement_inner},
               {"pgl_not_psl_x_c2", rep.pgl_not_psl_x_c2},
               {"twist_identity_direct", rep.twist_identity_direct},
               {"twist_involution_not_direct", rep.twist_involution_not_direct},
               {"twist_involution_iso_product", rep.twist_involution_iso_product},
               {"twist_involution_not_pgl", rep.twist_involution_not_pgl}};
        write_json(out, json_path);
        return 0;
    }
    GroupPtr g = parse_group_spec(group_spec);
    const auto [p, r] = split_prime_power(ell);
    const Field f = Field::make(p, r);
    if (op == "dsum" || op == "tensor" || op == "iso") {
        if (rep_spec.empty() || rep2_spec.empty())
            throw Error("UsageError", op + " needs --rep and --rep2");
        const Rep a = rep_from_cli(g, rep_spec, f);
        const Rep b = rep_from_cli(g, rep2_spec, f);
        if (op == "iso") {
            const auto iso = tensor_directsum_image_iso({a, b});
            out = {{"dsum_image_order", iso.dsum_image.image->order()},
                   {"tensor_image_order", iso.tensor_image.image->order()},
                   {"isomorphism", "verified"},
                   {"tuple_group_check", tensor_tuple_iso_check({a, b}).ok}};
        } else {
            const Rep c = op == "dsum" ? direct_sum({a, b}) : tensor({a, b});
            out = {{"dim", c.dim},
                   {"image_order", rep_image(c).image->order()},
                   {"projective_image_order", proj_image(c).image->order()}};
        }
        write_json(out, json_path);
        return 0;
    }
    if (op == "pair" || op == "split") {
        if (rep_spec.empty() || subgroup_spec.empty())
            throw Error("UsageError", op + " needs --rep and --subgroup");
        const Rep pi = rep_from_cli(g, rep_spec, f);
        Subgroup h = parse_subgroup_spec(g, subgroup_spec);
        const BlockRep b = induce(restrict_rep(pi, h), g, transversal_identity_first(g, h));
        if (op == "pair") {
            const auto kp = pair_kernel_analysis(pi, b);
            const PairGraph L = pair_group(pi, b.rho);
            out = {{"L_order", L.graph->order()},
                   {"pi_image_order", L.img_first.image->order()},
                   {"rho_image_order", L.img_second.image->order()},
                   {"psi_isomorphism", kp.second_proj_iso},
                   {"first_kernel_order", kp.first_kernel_order},
                   {"kernel_formula", kp.kernel_formula}};
        } else {
            out = split_report_json(graph_split_check(pi, b));
        }
        write_json(out, json_path);
        return 0;
    }
    (void)samples;
    (void)seed;
    throw Error("UsageError", "unknown repalg operation '" + op + "'");
}

int run_splitcheck(const std::string& group_spec, std::int64_t index,
                   const std::string& json_path) {
    GroupPtr g = parse_group_spec(group_spec);
    const Subgroup h = unique_abelian_index_n(g, index);
    const SplitReport rep = cyclic_transversal_search(g, h);
    write_json(split_report_json(rep), json_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group toolkit for right-split exact sequences, induced "
                 "representations and twisted products"};
    app.require_subcommand(1);

    std::string suite = "all", json_path, corpus_path;
    std::uint64_t seed = 42;
    std::int64_t samples = 10000;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "section2 | induce | repalg | all")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--json", json_path, "write the JSON report here");
    verify->add_option("--corpus", corpus_path, "JSON file with a case-id prefix filter");
    verify->add_option("--seed", seed, "seed for sampled checks");
    verify->add_option("--samples", samples, "sample count for sampled checks");

    std::string sdp_spec;
    std::string sdp_json;
    auto* sdp = app.add_subcommand("sdp", "build and verify a twisted product");
    sdp->add_option("--spec", sdp_spec, "JSON description of the factors")->required();
    sdp->add_option("--json", sdp_json, "write the JSON report here");

    std::string ind_group, ind_subgroup, ind_rep, ind_json;
    std::int64_t ind_ell = 0;
    auto* ind = app.add_subcommand("induce", "induce a representation and check splitting");
    ind->add_option("--group", ind_group, "group spec (gl2:q, cyclic:n, sym:n, table:FILE)")
        ->required();
    ind->add_option("--subgroup", ind_subgroup, "subgroup spec (full, derived, det-power:n, gens:i,j)")
        ->required();
    ind->add_option("--rep", ind_rep, "generator images, e.g. '3->[[2]];5->[[1]]'");
    ind->add_option("--ell", ind_ell, "coefficient field size")->required();
    ind->add_option("--json", ind_json, "write the JSON report here");

    std::string sc_group, sc_json;
    std::int64_t sc_index = 0;
    auto* sc = app.add_subcommand("splitcheck", "cyclic coset-transversal search");
    sc->add_option("--group", sc_group, "group spec")->required();
    sc->add_option("--index", sc_index, "index of the unique abelian-quotient subgroup")
        ->required();
    sc->add_option("--json", sc_json, "write the JSON report here");

    std::string ra_op, ra_group, ra_subgroup, ra_rep, ra_rep2, ra_json;
    std::int64_t ra_ell = 5, ra_p = 5, ra_samples = 10000;
    std::uint64_t ra_seed = 42;
    auto* ra = app.add_subcommand("repalg", "representation-algebra operations");
    ra->add_option("--op", ra_op, "dsum | tensor | iso | pair | split | pglpsl")
        ->required()
        ->check(CLI::IsMember({"dsum", "tensor", "iso", "pair", "split", "pglpsl"}));
    ra->add_option("--group", ra_group, "group spec");
    ra->add_option("--subgroup", ra_subgroup, "subgroup spec (pair/split)");
    ra->add_option("--rep", ra_rep, "generator images for the (first) representation");
    ra->add_option("--rep2", ra_rep2, "generator images for the second representation");
    ra->add_option("--ell", ra_ell, "coefficient field size");
    ra->add_option("--p", ra_p, "prime for pglpsl");
    ra->add_option("--samples", ra_samples, "sample count");
    ra->add_option("--seed", ra_seed, "seed");
    ra->add_option("--json", ra_json, "write the JSON report here");

    std::int64_t ps_n = 0, ps_r = 1, ps_limit = 0;
    auto* ps = app.add_subcommand("primesearch", "primes meeting the two congruence conditions");
    ps->add_option("-n", ps_n, "modulus")->required();
    ps->add_option("-r", ps_r, "exponent (coprime to n)");
    ps->add_option("--limit", ps_limit, "upper bound")->required();

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(suite, json_path, corpus_path, seed, samples);
        if (sdp->parsed()) return run_sdp(sdp_spec, sdp_json);
        if (ind->parsed()) return run_induce(ind_group, ind_subgroup, ind_rep, ind_ell, ind_json);
        if (sc->parsed()) return run_splitcheck(sc_group, sc_index, sc_json);
        if (ra->parsed())
            return run_repalg(ra_op, ra_group, ra_subgroup, ra_rep, ra_rep2, ra_ell, ra_p,
                              ra_samples, ra_seed, ra_json);
        if (ps->parsed()) {
            const auto primes = dirichlet_condition_search(ps_n, ps_r, ps_limit);
            for (size_t i = 0; i < primes.size(); ++i)
                std::cout << (i ? " " : "") << primes[i];
            std::cout << "\n";
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
