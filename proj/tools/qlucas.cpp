// qlucas: check the quartic congruences for Lucas sequences U_n(b,-1), V_n(b,-1).
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qlucas/harness.hpp"
#include "qlucas/report.hpp"
#include "qlucas/witness.hpp"

using namespace qlucas;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2 };

int cmd_predict(i64 b, u64 p)
{
    const VerifyRecord r = verify_one(b, p);
    if (r.status == Status::skipped) {
        std::cout << "skipped: " << r.skip_reason << '\n';
        return ok;
    }
    if (!r.error.empty()) {
        std::cout << "error: " << r.error << '\n';
        return mismatch;
    }
    std::cout << "conjecture " << r.predicted.conjecture << ", " << r.predicted.case_label << '\n'
              << "U = " << r.predicted.u_pred << ", V = " << r.predicted.v_pred << " (mod " << p << ")\n"
              << "eta = " << r.eta_pred.to_string() << '\n';
    return ok;
}

int cmd_verify(i64 b, u64 p)
{
    const VerifyRecord r = verify_one(b, p);
    std::cout << describe(r);
    return r.status == Status::mismatch ? mismatch : ok;
}

int cmd_eta(i64 b, u64 p)
{
    const VerifyRecord r = verify_one(b, p);
    if (r.status == Status::skipped) {
        std::cout << "skipped: " << r.skip_reason << '\n';
        return ok;
    }
    if (!r.error.empty()) {
        std::cout << "error: " << r.error << '\n';
        return mismatch;
    }
    const PrimeField field(p);
    const Embedding emb = make_embedding(*r.rep, field);
    std::cout << "t = " << emb.t << ", s = " << emb.s << '\n'
              << "eta predicted = " << r.eta_pred.to_string() << '\n'
              << "eta extracted = " << r.eta_extracted.eta.to_string() << '\n'
              << "eta conjugate = " << r.eta_extracted.eta_bar.to_string() << '\n';
    return r.eta_agrees ? ok : mismatch;
}

int cmd_classify(i64 b, u64 p)
{
    const VerifyRecord r = verify_one(b, p);
    if (r.status == Status::skipped) {
        std::cout << "skipped: " << r.skip_reason << '\n';
        return ok;
    }
    if (!r.case_id) {
        std::cout << "error: " << r.error << '\n';
        return mismatch;
    }
    std::cout << r.case_id->to_string() << "  (" << to_string(r.rep->parity) << ", x = " << r.rep->x
              << ", y = " << r.rep->y << ", u = " << r.rep->u << ", v = " << r.rep->v << ")\n";
    return ok;
}

int cmd_sweep(SweepSpec spec, bool quiet)
{
    const SweepReport rep = sweep(spec);
    std::cout << "checked " << rep.checked << ", matched " << rep.matched << ", skipped " << rep.skipped
              << ", mismatches " << rep.mismatches.size() << '\n'
              << "eta agreements " << rep.eta_agreements << ", dictionary agreements " << rep.dictionary_agreements
              << '\n'
              << "cases covered " << rep.coverage.size() << "/" << all_case_ids().size() << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", rep.wall_time);
    std::cout << "wall time " << buf << " s\n";
    if (!quiet)
        for (std::size_t i = 0; i < rep.mismatches.size() && i < 20; ++i) std::cout << describe(rep.mismatches[i]);
    return rep.mismatches.empty() ? ok : mismatch;
}

int cmd_witness()
{
    const WitnessReport rep = witness_table();
    std::cout << describe(rep);
    return rep.all_land() && rep.all_match() && rep.all_covered() ? ok : mismatch;
}

int cmd_general_form(i64 a, i64 b, i64 c, u64 p, i64 d, i64 bound)
{
    const GeneralForm f{a, b, c};
    const Section3Data s = section3_pipeline(f, PrimeField(p), d, Section3Options{bound});
    std::cout << "f = (" << a << ", " << b << ", " << c << "), disc " << f.disc() << '\n'
              << "p = f(" << s.x << ", " << s.y << ")\n"
              << "witness (" << s.witness.x1 << ", " << s.witness.y1 << "), a' = " << s.a_prime << " = "
              << s.witness.u1 << "^2 + " << s.witness.v1 << "^2\n"
              << "g = (" << s.g.a << ", " << s.g.b << ", " << s.g.c << "), (x', y') = (" << s.xp << ", " << s.yp
              << ")\n";
    if (s.scale != 1) std::cout << "scale " << s.scale << '\n';
    std::cout << "X = " << s.X << ", Y = " << s.Y << ", U = " << s.U << ", V = " << s.V << '\n'
              << (s.identity_holds(d, p) ? "identity holds" : "identity FAILS") << '\n';
    return s.identity_holds(d, p) ? ok : mismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quartic residue congruences for Lucas sequences"};
    app.require_subcommand(1);

    i64 b = 0;
    u64 p = 0;
    auto pair_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("b", b, "Lucas parameter b (c = -1)")->required();
        sub->add_option("p", p, "prime modulus")->required();
        return sub;
    };
    CLI::App* predict = pair_command("predict", "predicted U, V at (p-1)/4");
    CLI::App* verify = pair_command("verify", "compare prediction with the actual Lucas values");
    CLI::App* eta = pair_command("eta", "predicted and extracted fourth root of unity");
    CLI::App* classify = pair_command("classify", "case id of (b, p)");

    CLI::App* sw = app.add_subcommand("sweep", "verify a range of b against all primes up to p-max");
    std::vector<int> conjectures;
    i64 b_min = 1, b_max = 59;
    u64 p_max = 20000;
    unsigned jobs = 1;
    std::string out, format = "jsonl", config;
    bool quiet = false;
    auto* o_conj = sw->add_option("--conjecture", conjectures, "conjecture number(s) 1-4")->delimiter(',');
    auto* o_bmin = sw->add_option("--b-min", b_min, "smallest b (inclusive)");
    auto* o_bmax = sw->add_option("--b-max", b_max, "largest b (inclusive)");
    auto* o_pmax = sw->add_option("--p-max", p_max, "largest prime (inclusive)");
    auto* o_jobs = sw->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
    auto* o_out = sw->add_option("--out,-o", out, "report file");
    auto* o_fmt = sw->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    sw->add_option("--config", config, "key = value defaults")->check(CLI::ExistingFile);
    sw->add_flag("--quiet,-q", quiet, "do not list mismatches");

    CLI::App* wt = app.add_subcommand("witness", "re-derive the reference witness table");

    CLI::App* gf = app.add_subcommand("general-form", "a'p = X^2 + dY^2 = U^2 + V^2 for a form (a, b, c)");
    i64 fa = 0, fb = 0, fc = 0, fd = 0, bound = default_witness_bound;
    gf->add_option("a", fa)->required();
    gf->add_option("b", fb)->required();
    gf->add_option("c", fc)->required();
    gf->add_option("--p", p, "prime")->required();
    gf->add_option("--d", fd, "d with disc in {-d, -4d}")->required();
    gf->add_option("--witness-bound", bound, "isotropic witness search bound")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*predict) return cmd_predict(b, p);
        if (*verify) return cmd_verify(b, p);
        if (*eta) return cmd_eta(b, p);
        if (*classify) return cmd_classify(b, p);
        if (*wt) return cmd_witness();
        if (*gf) return cmd_general_form(fa, fb, fc, p, fd, bound);
        if (*sw) {
            SweepSpec spec;
            if (!config.empty()) spec = load_config(config, spec);
            if (o_conj->count()) spec.conjectures = {conjectures.begin(), conjectures.end()};
            if (o_bmin->count()) spec.b_min = b_min;
            if (o_bmax->count()) spec.b_max = b_max;
            if (o_pmax->count()) spec.p_max = p_max;
            if (o_jobs->count()) spec.jobs = jobs;
            if (o_out->count()) spec.output = out;
            if (o_fmt->count()) spec.format = format == "csv" ? ReportFormat::csv : ReportFormat::jsonl;
            return cmd_sweep(spec, quiet);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return usage;
    } catch (const InvalidModulus& e) {
        std::cerr << "invalid modulus: " << e.what() << '\n';
        return usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mismatch;
    }
    return usage;
}
