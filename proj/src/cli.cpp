#include "srpos/cli.hpp"

#include "srpos/chordal.hpp"
#include "srpos/completion.hpp"
#include "srpos/extremality.hpp"
#include "srpos/fixtures.hpp"
#include "srpos/io.hpp"
#include "srpos/maps.hpp"
#include "srpos/rank1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

namespace srpos::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig
{
    std::optional<double> psd_tol, rank_tol, completion_tol;
    std::optional<int> max_iter;
    std::string format = "text";

    std::string complex, matrix, map, graph, out, csv, out_dir, cover;
    std::string apex, facet, edge, method, s1, s2;
    std::string left, right, left_vertex, right_vertex, left_prefix, right_prefix;
    std::vector<std::string> blocks, names;
    std::string witness;
    int trials = 200;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    int max_extra = 2;
    int dim = 2;
    bool list = false;

    Tolerances tolerances() const
    {
        Tolerances t = Tolerances::from_env();
        if (psd_tol)
            t.psd_tol = *psd_tol;
        if (rank_tol)
            t.rank_tol = *rank_tol;
        if (completion_tol)
            t.completion_tol = *completion_tol;
        if (max_iter)
            t.max_iter = *max_iter;
        t.validate();
        return t;
    }
};

std::vector<std::string> split_list(const std::string& s, char sep = ',')
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    if (out.size() == 1 && out[0].empty())
        out.clear();
    return out;
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::string completion_label(const Completion& c)
{
    switch (c.tier) {
    case 0:
        return "face block not PSD";
    case 1:
        return "chordal support";
    case 2:
        return c.kind == CompletionKind::Completable ? "trivial sign class" : "sign obstruction";
    default:
        if (c.kind == CompletionKind::NotCompletable)
            return "separating functional";
        return c.kind == CompletionKind::Completable ? "alternating projections" : "undecided";
    }
}

std::string completable_value(CompletionKind k)
{
    return k == CompletionKind::Completable ? "true" : k == CompletionKind::NotCompletable ? "false" : "inconclusive";
}

std::string join(const std::vector<std::string>& v, const char* sep = ",")
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : sep) + x;
    return s;
}

class Command
{
  public:
    Command(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    int check()
    {
        Tolerances tol = cfg_.tolerances();
        PartialMatrix x = matrix();
        json r;
        r["nonnegative"] = is_nonnegative(x, tol);
        Completion comp = completability(x, tol);
        r["completable"] = completable_value(comp.kind);
        r["reason"] = completion_label(comp);
        r["tier"] = comp.tier;
        if (r["nonnegative"].get<bool>()) {
            r["local_rank"] = local_rank(x, tol);
            r["extreme"] = x.max_abs() > 0 && is_extreme_ray(x, tol);
        } else {
            r["local_rank"] = nullptr;
            r["extreme"] = false;
        }
        emit(r, [&] {
            out_ << "nonnegative: " << yes(r["nonnegative"].get<bool>()) << ", completable: "
                 << r["completable"].get<std::string>() << " (" << r["reason"].get<std::string>()
                 << "), local_rank: " << (r["local_rank"].is_null() ? "-" : r["local_rank"].dump())
                 << ", extreme: " << yes(r["extreme"].get<bool>()) << '\n';
        });
        return kOk;
    }

    int complete()
    {
        Tolerances tol = cfg_.tolerances();
        PartialMatrix x = matrix();
        Completion comp = completability(x, tol);
        json r;
        r["completable"] = completable_value(comp.kind);
        r["reason"] = comp.reason;
        r["tier"] = comp.tier;
        r["iterations"] = comp.iterations;
        if (comp.witness) {
            GramVectors g = psd_factor(*comp.witness, x.complex().vertices(), tol);
            r["witness_dim"] = g.dim();
            r["residual"] = comp.residual;
            if (!cfg_.witness.empty())
                io::save_gram(cfg_.witness, g);
        } else if (!cfg_.witness.empty()) {
            err_ << "no witness: the matrix is not known to be completable\n";
        }
        emit(r, [&] {
            out_ << "completable: " << r["completable"].get<std::string>() << " (" << comp.reason << "), tier "
                 << comp.tier;
            if (r.contains("witness_dim"))
                out_ << ", witness_dim " << r["witness_dim"].get<int>() << ", residual " << comp.residual;
            out_ << '\n';
        });
        return kOk;
    }

    int localrank()
    {
        Tolerances tol = cfg_.tolerances();
        PartialMatrix x = matrix();
        if (!is_nonnegative(x, tol))
            return violation("matrix is not nonnegative");
        json r;
        r["local_rank"] = local_rank(x, tol);
        emit(r, [&] { out_ << "local_rank: " << r["local_rank"].get<int>() << '\n'; });
        return kOk;
    }

    int classify_rank1_cmd()
    {
        Tolerances tol = cfg_.tolerances();
        SimplicialComplex c = io::load_complex(cfg_.complex);
        CohomologySummary h = h1_z2(c);
        json r;
        r["dim_h1"] = h.dim_h1;
        r["classes"] = h.representatives.size();
        if (!cfg_.matrix.empty()) {
            PartialMatrix x = io::load_matrix(cfg_.matrix);
            if (!(x.complex() == c))
                throw Error("the matrix lives on a different complex");
            if (!is_nonnegative(x, tol) || local_rank(x, tol) > 1)
                return violation("matrix is not nonnegative of local rank at most one");
            Rank1Class cls = classify_rank1(x, tol);
            r["class"] = cls.trivial ? "trivial" : "nontrivial";
            r["support"] = x.complex().names_of(cls.support);
        }
        emit(r, [&] {
            out_ << "H1 dim " << h.dim_h1 << ", " << h.representatives.size() << " classes\n";
            if (r.contains("class"))
                out_ << "class: " << r["class"].get<std::string>() << " on support {"
                     << join(r["support"].get<std::vector<std::string>>()) << "}\n";
        });
        return kOk;
    }

    int extremality()
    {
        Tolerances tol = cfg_.tolerances();
        PartialMatrix x = matrix();
        if (!is_nonnegative(x, tol) || x.max_abs() == 0)
            return violation("matrix is not a nonzero nonnegative form");
        FaceSpan span = face_span(x, tol);
        json r;
        r["extreme"] = span.dim == 1;
        r["face_dim"] = span.dim;
        r["local_rank"] = local_rank(x, tol);
        if (span.dim == 1)
            r["kind"] = to_string(classify_ray(x, tol));
        emit(r, [&] {
            out_ << "extreme: " << yes(span.dim == 1) << ", face_dim: " << span.dim
                 << ", local_rank: " << r["local_rank"].get<int>();
            if (r.contains("kind"))
                out_ << ", kind: " << r["kind"].get<std::string>();
            out_ << '\n';
        });
        return span.dim == 1 ? kOk : kViolation;
    }

    int purify_cmd()
    {
        Tolerances tol = cfg_.tolerances();
        if (!cfg_.matrix.empty()) {
            PartialMatrix x = io::load_matrix(cfg_.matrix);
            if (!is_nonnegative(x, tol) || x.max_abs() == 0)
                return violation("matrix is not a nonzero nonnegative form");
            PartialMatrix ray = purify(x, tol, cfg_.seed);
            if (!cfg_.out.empty())
                io::save_matrix(cfg_.out, ray);
            json r;
            r["local_rank"] = local_rank(ray, tol);
            r["kind"] = to_string(classify_ray(ray, tol));
            emit(r, [&] {
                out_ << "local_rank: " << r["local_rank"].get<int>() << ", kind: " << r["kind"].get<std::string>()
                     << '\n';
            });
            return kOk;
        }
        if (cfg_.complex.empty())
            throw Error("purify needs --complex or --matrix");
        SimplicialComplex c = io::load_complex(cfg_.complex);
        ProbeResult p = elocr_probe(c, cfg_.trials, tol, cfg_.seed, cfg_.threads);
        auto histogram = [](const std::map<int, int>& m) {
            json h = json::object();
            for (auto [rank, count] : m)
                h[std::to_string(rank)] = count;
            return h;
        };
        json r;
        r["trials"] = cfg_.trials;
        r["seed"] = cfg_.seed;
        r["failures"] = p.failures;
        r["max_non_sos_local_rank"] = p.max_non_sos_rank();
        r["sos"] = histogram(p.sos);
        r["non_sos"] = histogram(p.non_sos);
        r["inconclusive"] = histogram(p.inconclusive);
        if (!cfg_.csv.empty()) {
            std::ofstream f(cfg_.csv);
            if (!f)
                throw io::IoError(cfg_.csv + ": cannot write file");
            f << "kind,local_rank,count\n";
            for (auto [kind, m] : {std::pair{"sos", &p.sos}, {"non-sos", &p.non_sos}, {"inconclusive", &p.inconclusive}})
                for (auto [rank, count] : *m)
                    f << kind << ',' << rank << ',' << count << '\n';
        }
        emit(r, [&] {
            out_ << "trials " << cfg_.trials << ", seed " << cfg_.seed << ", failures " << p.failures << '\n';
            for (auto [kind, m] : {std::pair{"sos", &p.sos}, {"non-sos", &p.non_sos}, {"inconclusive", &p.inconclusive}})
                for (auto [rank, count] : *m)
                    out_ << kind << " local_rank " << rank << ": " << count << '\n';
            out_ << "extreme local rank lower bound: " << p.max_non_sos_rank() << '\n';
        });
        return kOk;
    }

    int check_sconn()
    {
        SimplicialMap m = io::load_map(cfg_.map);
        if (!validate_map(m).valid)
            return violation("the vertex map does not send faces to faces");
        StrongConnectivityReport s = is_strongly_connected(m);
        json r;
        r["surjective"] = s.surjective;
        r["property1"] = s.property1_ok;
        r["property2"] = s.property2_ok;
        r["strongly_connected"] = s.strongly_connected();
        json w = json::array();
        for (const auto& x : s.witnesses)
            w.push_back({{"fiber", x.fiber}, {"first", x.first}, {"second", x.second}});
        r["witnesses"] = std::move(w);
        json u = json::array();
        for (Face f : s.unreached_facets)
            u.push_back(m.codomain().names_of(f));
        r["unreached_facets"] = std::move(u);
        emit(r, [&] {
            out_ << "surjective: " << yes(s.surjective) << ", property1: " << yes(s.property1_ok)
                 << ", property2: " << yes(s.property2_ok) << ", strongly_connected: " << yes(s.strongly_connected())
                 << '\n';
            for (Face f : s.unreached_facets)
                out_ << "unreached facet {" << join(m.codomain().names_of(f)) << "}\n";
            for (const auto& x : s.witnesses)
                out_ << "fiber over " << x.fiber << " splits: " << x.first << " / " << x.second << '\n';
        });
        return s.strongly_connected() ? kOk : kViolation;
    }

    int sphere_map()
    {
        SimplicialComplex c = io::load_complex(cfg_.complex);
        Face f = c.face_of(split_list(cfg_.facet));
        if (!c.is_facet(f))
            throw Error("{" + cfg_.facet + "} is not a facet");
        SphereConditions s = facet_sphere_conditions(c, f);
        json r;
        r["cond1"] = s.cond1;
        r["cond2"] = s.cond2;
        r["cond3"] = s.cond3;
        if (s.all() && !cfg_.out.empty())
            io::save_map(cfg_.out, build_sphere_map(c, f), io::relative_ref(cfg_.complex, cfg_.out));
        emit(r, [&] {
            out_ << "cond1: " << yes(s.cond1) << ", cond2: " << yes(s.cond2) << ", cond3: " << yes(s.cond3) << '\n';
        });
        return s.all() ? kOk : kViolation;
    }

    int contract()
    {
        SimplicialComplex c = io::load_complex(cfg_.complex);
        auto e = split_list(cfg_.edge);
        if (e.size() != 2)
            throw Error("--edge expects two vertices a,b");
        EdgeContraction k = edge_contraction(c, e[0], e[1]);
        StrongConnectivityReport s = is_strongly_connected(k.map);
        json r;
        r["no_induced_4cycle"] = k.no_induced_4cycle;
        r["strongly_connected"] = s.strongly_connected();
        if (!cfg_.out.empty())
            io::save_map(cfg_.out, k.map, io::relative_ref(cfg_.complex, cfg_.out));
        emit(r, [&] {
            out_ << "no_induced_4cycle: " << yes(k.no_induced_4cycle)
                 << ", strongly_connected: " << yes(s.strongly_connected()) << '\n';
        });
        return kOk;
    }

    int construct(const std::string& kind)
    {
        SimplicialComplex c;
        if (kind == "cone") {
            c = cone(io::load_complex(cfg_.complex), cfg_.apex);
        } else if (kind == "one-sum") {
            SimplicialComplex a = io::load_complex(cfg_.left), b = io::load_complex(cfg_.right);
            if (!cfg_.left_prefix.empty())
                a = prefixed(a, cfg_.left_prefix);
            if (!cfg_.right_prefix.empty())
                b = prefixed(b, cfg_.right_prefix);
            c = one_sum(a, b, cfg_.left_prefix + cfg_.left_vertex, cfg_.right_prefix + cfg_.right_vertex);
        } else if (kind == "thicken") {
            c = io::load_thickening(cfg_.graph).complex;
        } else if (kind == "sphere") {
            if (cfg_.dim < 0)
                throw Error("--dim must be nonnegative");
            c = sphere(cfg_.dim);
        } else {
            SimplicialComplex base = io::load_complex(cfg_.complex);
            std::vector<std::vector<std::string>> partition;
            std::set<std::string> used;
            for (const auto& b : cfg_.blocks) {
                partition.push_back(split_list(b));
                used.insert(partition.back().begin(), partition.back().end());
            }
            for (const auto& v : base.vertices())
                if (!used.count(v))
                    partition.push_back({v});
            c = quotient(base, partition).complex;
        }
        write_complex(c);
        return kOk;
    }

    int deficiency()
    {
        SimplicialComplex c = io::load_complex(cfg_.complex);
        auto d = chordal_deficiency(c, cfg_.max_extra);
        json r;
        r["deficiency"] = d ? json(d->extra) : json(nullptr);
        r["max_extra"] = cfg_.max_extra;
        if (d && !cfg_.out.empty())
            io::save_map(cfg_.out, d->witness.map, std::nullopt, io::relative_ref(cfg_.complex, cfg_.out));
        emit(r, [&] {
            if (d)
                out_ << "deficiency: " << d->extra << '\n';
            else
                out_ << "deficiency: more than " << cfg_.max_extra << '\n';
        });
        return kOk;
    }

    int decompose()
    {
        Tolerances tol = cfg_.tolerances();
        PartialMatrix x = matrix();
        if (!is_nonnegative(x, tol))
            return violation("matrix is not nonnegative");
        std::optional<Split> s;
        if (cfg_.method == "cone") {
            SchurSplit sc = schur_complement_split(x, cfg_.apex, tol);
            s = Split{sc.sos_part, sc.residual};
        } else if (cfg_.method == "cover") {
            ChordalCover cover =
                cfg_.map.empty() ? unroll_cycle_cover(x.complex()) : make_chordal_cover(io::load_map(cfg_.map));
            if (!(cover.map.codomain() == x.complex()))
                throw Error("the cover does not map onto the matrix's complex");
            s = decompose_via_chordal_cover(x, cover, tol);
        } else if (cfg_.method == "thicken") {
            Thickening t = io::load_thickening(cfg_.graph);
            if (!(t.complex == x.complex()))
                throw Error("the thickening does not match the matrix's complex");
            s = thickened_rank1_split(x, t, tol);
        } else {
            OddCliqueGluing g{io::load_complex(cfg_.cover), split_list(cfg_.s1), split_list(cfg_.s2)};
            Quotient q = glue_odd_cliques(g);
            if (!(q.complex == x.complex()))
                throw Error("the glued complex does not match the matrix's complex");
            s = odd_clique_split(x, g, tol);
        }
        json r;
        r["split"] = s.has_value();
        if (s) {
            r["q1_local_rank"] = local_rank(s->q1, tol);
            r["q2_local_rank"] = local_rank(s->q2, tol);
            r["residual"] = max_abs_diff(s->q1 + s->q2, x);
            if (!cfg_.out.empty()) {
                io::save_matrix(cfg_.out + ".q1.json", s->q1);
                io::save_matrix(cfg_.out + ".q2.json", s->q2);
            }
        }
        emit(r, [&] {
            if (!s) {
                out_ << "split: none\n";
                return;
            }
            out_ << "split: q1 local_rank " << r["q1_local_rank"].get<int>() << ", q2 local_rank "
                 << r["q2_local_rank"].get<int>() << ", residual " << r["residual"].get<double>() << '\n';
        });
        return kOk;
    }

    int fixtures()
    {
        if (cfg_.list || cfg_.names.empty()) {
            for (const auto& n : fixture_complex_names())
                out_ << n << '\n';
            for (const auto& n : fixture_matrix_names())
                out_ << n << '\n';
            return kOk;
        }
        fs::path dir = cfg_.out_dir.empty() ? fs::path(".") : fs::path(cfg_.out_dir);
        fs::create_directories(dir);
        auto matrices = fixture_matrix_names();
        for (const auto& name : cfg_.names) {
            if (std::find(matrices.begin(), matrices.end(), name) != matrices.end()) {
                PartialMatrix x = fixture_matrix(name);
                io::save_complex(dir / "c4.json", x.complex());
                io::save_matrix(dir / (name + ".json"), x, "c4.json");
                out_ << (dir / "c4.json").string() << '\n';
            } else {
                io::save_complex(dir / (name + ".json"), fixture_complex(name));
            }
            out_ << (dir / (name + ".json")).string() << '\n';
        }
        return kOk;
    }

  private:
    PartialMatrix matrix() const
    {
        if (cfg_.matrix.empty())
            throw Error("--matrix is required");
        PartialMatrix x = io::load_matrix(cfg_.matrix);
        if (!cfg_.complex.empty() && !(io::load_complex(cfg_.complex) == x.complex()))
            throw Error("the matrix lives on a different complex than " + cfg_.complex);
        return x;
    }

    void write_complex(const SimplicialComplex& c)
    {
        if (cfg_.out.empty())
            out_ << io::complex_json(c) << '\n';
        else
            io::save_complex(cfg_.out, c);
    }

    void emit(const json& r, const std::function<void()>& text)
    {
        if (cfg_.format == "json")
            out_ << r.dump(2) << '\n';
        else
            text();
    }

    int violation(const std::string& what)
    {
        err_ << what << '\n';
        return kViolation;
    }

    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Nonnegative quadratics on Stanley-Reisner varieties"};
    app.require_subcommand(1);
    app.add_option("--tol-psd", cfg.psd_tol, "PSD eigenvalue floor (relative)")->check(CLI::PositiveNumber);
    app.add_option("--tol-rank", cfg.rank_tol, "rank cutoff (relative)")->check(CLI::PositiveNumber);
    app.add_option("--tol-completion", cfg.completion_tol, "completion residual target")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-iter", cfg.max_iter, "alternating projection sweeps")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    std::function<int()> action;
    Command cmd(cfg, out, err);
    auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

    auto* check = app.add_subcommand("check", "nonnegativity, completability, local rank and extremality");
    check->add_option("--matrix", cfg.matrix)->required();
    check->add_option("--complex", cfg.complex);
    bind(check, [&] { return cmd.check(); });

    auto* complete = app.add_subcommand("complete", "PSD completion with a Gram witness");
    complete->add_option("--matrix", cfg.matrix)->required();
    complete->add_option("--complex", cfg.complex);
    complete->add_option("--witness", cfg.witness, "Gram vectors output file");
    bind(complete, [&] { return cmd.complete(); });

    auto* lr = app.add_subcommand("localrank", "largest facet rank");
    lr->add_option("--matrix", cfg.matrix)->required();
    lr->add_option("--complex", cfg.complex);
    bind(lr, [&] { return cmd.localrank(); });

    auto* cr = app.add_subcommand("classify-rank1", "Z/2 classes of locally rank one forms");
    cr->add_option("--complex", cfg.complex)->required();
    cr->add_option("--matrix", cfg.matrix);
    bind(cr, [&] { return cmd.classify_rank1_cmd(); });

    auto* ex = app.add_subcommand("extremality", "extreme ray test");
    ex->add_option("--matrix", cfg.matrix)->required();
    ex->add_option("--complex", cfg.complex);
    bind(ex, [&] { return cmd.extremality(); });

    auto* pu = app.add_subcommand("purify", "purify random interior points to extreme rays");
    pu->add_option("--complex", cfg.complex);
    pu->add_option("--matrix", cfg.matrix, "purify one matrix instead of sampling");
    pu->add_option("--out", cfg.out, "purified matrix output (with --matrix)");
    pu->add_option("--trials", cfg.trials)->check(CLI::NonNegativeNumber);
    pu->add_option("--seed", cfg.seed);
    pu->add_option("--threads", cfg.threads);
    pu->add_option("--csv", cfg.csv, "histogram output");
    bind(pu, [&] { return cmd.purify_cmd(); });

    auto* maps = app.add_subcommand("maps", "simplicial maps");
    maps->require_subcommand(1);
    auto* sc = maps->add_subcommand("check-sconn", "strong connectivity");
    sc->add_option("--map", cfg.map)->required();
    bind(sc, [&] { return cmd.check_sconn(); });
    auto* sp = maps->add_subcommand("sphere", "map onto a sphere through a facet");
    sp->add_option("--complex", cfg.complex)->required();
    sp->add_option("--facet", cfg.facet)->required();
    sp->add_option("--out", cfg.out);
    bind(sp, [&] { return cmd.sphere_map(); });
    auto* ct = maps->add_subcommand("contract", "edge contraction of a clique complex");
    ct->add_option("--complex", cfg.complex)->required();
    ct->add_option("--edge", cfg.edge)->required();
    ct->add_option("--out", cfg.out);
    bind(ct, [&] { return cmd.contract(); });

    auto* cons = app.add_subcommand("construct", "build complexes");
    cons->require_subcommand(1);
    auto* cc = cons->add_subcommand("cone");
    cc->add_option("--complex", cfg.complex)->required();
    cc->add_option("--apex", cfg.apex)->required();
    auto* os = cons->add_subcommand("one-sum");
    os->add_option("--left", cfg.left)->required();
    os->add_option("--right", cfg.right)->required();
    os->add_option("--left-vertex", cfg.left_vertex)->required();
    os->add_option("--right-vertex", cfg.right_vertex)->required();
    os->add_option("--left-prefix", cfg.left_prefix);
    os->add_option("--right-prefix", cfg.right_prefix);
    auto* th = cons->add_subcommand("thicken");
    th->add_option("--graph", cfg.graph)->required();
    auto* sh = cons->add_subcommand("sphere");
    sh->add_option("--dim", cfg.dim)->required();
    auto* qu = cons->add_subcommand("quotient");
    qu->add_option("--complex", cfg.complex)->required();
    qu->add_option("--block", cfg.blocks, "comma separated vertices to identify")->required();
    for (auto* s : {cc, os, th, sh, qu}) {
        s->add_option("--out", cfg.out);
        std::string kind = s->get_name();
        bind(s, [&cmd, kind] { return cmd.construct(kind); });
    }

    auto* de = app.add_subcommand("deficiency", "least number of extra vertices of a chordal cover");
    de->add_option("--complex", cfg.complex)->required();
    de->add_option("--max-extra", cfg.max_extra)->check(CLI::NonNegativeNumber);
    de->add_option("--out", cfg.out, "witness cover map");
    bind(de, [&] { return cmd.deficiency(); });

    auto* dc = app.add_subcommand("decompose", "split off a locally rank one summand");
    dc->add_option("--matrix", cfg.matrix)->required();
    dc->add_option("--method", cfg.method)->required()->check(CLI::IsMember({"cover", "odd-clique", "thicken", "cone"}));
    dc->add_option("--apex", cfg.apex);
    dc->add_option("--cover-map", cfg.map, "chordal cover map (cover)");
    dc->add_option("--graph", cfg.graph, "thickening description (thicken)");
    dc->add_option("--cover", cfg.cover, "chordal complex (odd-clique)");
    dc->add_option("--s1", cfg.s1);
    dc->add_option("--s2", cfg.s2);
    dc->add_option("--out", cfg.out, "prefix for <out>.q1.json and <out>.q2.json");
    bind(dc, [&] { return cmd.decompose(); });

    auto* fx = app.add_subcommand("fixtures", "write canonical fixture files");
    fx->add_option("names", cfg.names);
    fx->add_option("--out-dir", cfg.out_dir);
    fx->add_flag("--list", cfg.list);
    bind(fx, [&] { return cmd.fixtures(); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }

    try {
        return action ? action() : kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace srpos::cli
