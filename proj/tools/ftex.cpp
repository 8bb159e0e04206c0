// ftex: Frobenius test exponents over F_p from the command line.
//
// Exit codes: 0 on success/PASS, 1 on FAIL or a false check,
// 2 on INCONCLUSIVE (exponent cap hit), 3 on usage/input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftex/experiments.hpp"
#include "ftex/frobenius.hpp"
#include "ftex/parse.hpp"
#include "ftex/reports.hpp"
#include "ftex/ringfile.hpp"

using namespace ftex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct CommonOpts {
    std::string ring_path;
    std::string ideal_text;
    std::string ideal_file;
    std::string seq_text;
    std::string order_name = "grevlex";
    std::string format_name = "text";
    int e = 1;
    int max_exponent = 8;
    int lookahead = 2;
    std::uint64_t seed = 42;
    int samples = 10;
    int max_degree = 2;
    int threads = 1;
};

void add_ring_flag(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--ring", o.ring_path, "ring file (JSON: prime, variables, quotient)")
        ->required()
        ->check(CLI::ExistingFile);
}

void add_ideal_flags(CLI::App* cmd, CommonOpts& o)
{
    auto* a = cmd->add_option("--ideal", o.ideal_text, "generators, e.g. \"y; z\"");
    auto* b = cmd->add_option("--ideal-file", o.ideal_file, "file with one generator per line");
    a->excludes(b);
}

void add_frobenius_flags(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--max-exponent", o.max_exponent, "chain cap e <= N (default 8)");
    cmd->add_option("--lookahead", o.lookahead, "plateau length required to certify (default 2)");
}

MonomialOrder order_of(const CommonOpts& o)
{
    if (o.order_name == "grevlex") return MonomialOrder::grevlex();
    if (o.order_name == "lex") return MonomialOrder::lex();
    throw CLI::ValidationError("--order", "expected grevlex or lex");
}

std::vector<Polynomial> read_ideal(const CommonOpts& o, const RingPtr& ring)
{
    if (!o.ideal_file.empty()) {
        std::ifstream in(o.ideal_file);
        if (!in) throw std::runtime_error("cannot open ideal file: " + o.ideal_file);
        std::vector<Polynomial> gens;
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            gens.push_back(parse_polynomial(line, ring));
        }
        return gens;
    }
    if (o.ideal_text.empty()) throw std::runtime_error("one of --ideal or --ideal-file is required");
    return parse_polynomial_list(o.ideal_text, ring);
}

ElementSequence read_sequence(const CommonOpts& o, const RingPtr& ring)
{
    if (o.seq_text.empty()) throw std::runtime_error("--seq is required");
    return ElementSequence{parse_polynomial_list(o.seq_text, ring)};
}

FrobeniusConfig frob_of(const CommonOpts& o)
{
    FrobeniusConfig cfg;
    cfg.max_exponent = o.max_exponent;
    cfg.lookahead = o.lookahead;
    return cfg;
}

void print_ideal(const IdealHandle& I, const MonomialOrder& order)
{
    const auto& gb = I.groebner(order);
    if (gb.is_zero()) {
        std::cout << "(0)\n";
        return;
    }
    for (const auto& g : gb.gens) std::cout << print_polynomial(g) << "\n";
}

void print_verdict(const SequenceVerdict& v)
{
    std::cout << (v.ok ? "true" : "false") << "\n";
    for (const auto& d : v.diagnostics) std::cout << "  step " << d.index << ": " << d.note << "\n";
    if (v.failing_index) std::cout << "  fails at step " << *v.failing_index << "\n";
}

int status_exit(CertStatus s) { return s == CertStatus::Certified ? kExitOk : kExitInconclusive; }

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::PASS:
    case Verdict::SKIPPED: return kExitOk;
    case Verdict::FAIL: return kExitFail;
    case Verdict::INCONCLUSIVE: return kExitInconclusive;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frobenius closures, test exponents, and HSL numbers over F_p"};
    app.require_subcommand(1);
    CommonOpts o;

    std::string by_text;        // colon / sat
    int t = 1;                  // survey / bound
    int max_n = 3;              // sweep
    int n0 = 0;                 // lemma31
    std::optional<int> opt_h, opt_c;
    bool estimate_h = false;
    int h_samples = 10;

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal in the ambient ring");
    add_ring_flag(gb_cmd, o);
    add_ideal_flags(gb_cmd, o);
    gb_cmd->add_option("--order", o.order_name, "monomial order: grevlex|lex (default grevlex)");

    auto* dim_cmd = app.add_subcommand(
        "dim", "Krull dimension of R/I (of R when --ideal is omitted); the unit ideal reports -1");
    add_ring_flag(dim_cmd, o);
    add_ideal_flags(dim_cmd, o);

    auto* colon_cmd = app.add_subcommand("colon", "colon ideal (I + A : J), printed as a Groebner basis");
    add_ring_flag(colon_cmd, o);
    add_ideal_flags(colon_cmd, o);
    colon_cmd->add_option("--by", by_text, "generators of J")->required();

    auto* sat_cmd =
        app.add_subcommand("sat", "saturation (I + A : J^inf); J defaults to the maximal ideal");
    add_ring_flag(sat_cmd, o);
    add_ideal_flags(sat_cmd, o);
    sat_cmd->add_option("--by", by_text, "generators of J (default: all variables)");

    auto* pre_cmd = app.add_subcommand("preimage", "Frobenius preimage {f : f^(p^e) in I + A}");
    add_ring_flag(pre_cmd, o);
    add_ideal_flags(pre_cmd, o);
    pre_cmd->add_option("--e", o.e, "Frobenius exponent (default 1)");

    auto* fcl_cmd = app.add_subcommand("fclosure", "Frobenius closure of I in R, with the kernel chain");
    add_ring_flag(fcl_cmd, o);
    add_ideal_flags(fcl_cmd, o);
    add_frobenius_flags(fcl_cmd, o);

    auto* fte_cmd = app.add_subcommand("fte", "Frobenius test exponent of I in R");
    add_ring_flag(fte_cmd, o);
    add_ideal_flags(fte_cmd, o);
    add_frobenius_flags(fte_cmd, o);

    auto* hsl_cmd = app.add_subcommand("hsl0", "HSL number of H^0_m(R/I) relative to I");
    add_ring_flag(hsl_cmd, o);
    add_ideal_flags(hsl_cmd, o);
    add_frobenius_flags(hsl_cmd, o);

    auto* filt_cmd = app.add_subcommand("filter-check", "is the sequence filter regular in R?");
    add_ring_flag(filt_cmd, o);
    filt_cmd->add_option("--seq", o.seq_text, "sequence, e.g. \"y; z\"")->required();

    auto* param_cmd = app.add_subcommand("param-check", "is the sequence part of a system of parameters?");
    add_ring_flag(param_cmd, o);
    param_cmd->add_option("--seq", o.seq_text, "sequence, e.g. \"y; z\"")->required();

    auto* survey_cmd = app.add_subcommand(
        "survey", "sample filter regular sequences and aggregate their Frobenius test exponents");
    survey_cmd->set_help_flag("--help", "print help");  // frees -h for the bound input --h
    add_ring_flag(survey_cmd, o);
    survey_cmd->add_option("--t", t, "sequence length")->required();
    survey_cmd->add_option("--samples", o.samples, "number of sequences (default 10)");
    survey_cmd->add_option("--seed", o.seed, "RNG seed (default 42)");
    survey_cmd->add_option("--max-degree", o.max_degree, "max form degree when sampling (default 2)");
    survey_cmd->add_option("--h", opt_h, "HSL-type input h for the bound (d-t)h + c");
    survey_cmd->add_option("--c", opt_c, "additive constant c for the bound");
    survey_cmd->add_flag("--estimate-h", estimate_h, "estimate h as max fte over sampled parameter ideals");
    survey_cmd->add_option("--h-samples", h_samples, "parameter ideals used by --estimate-h (default 10)");
    survey_cmd->add_option("--format", o.format_name, "json|csv|text (default text)");
    survey_cmd->add_option("--threads", o.threads, "parallel samples (default 1)");
    add_frobenius_flags(survey_cmd, o);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "Frobenius test exponents of (x1^n1, ..., xt^nt) over a grid");
    add_ring_flag(sweep_cmd, o);
    sweep_cmd->add_option("--seq", o.seq_text, "base filter regular sequence")->required();
    sweep_cmd->add_option("--max-n", max_n, "grid bound 1 <= n_i <= N (default 3)");
    sweep_cmd->add_option("--format", o.format_name, "json|csv|text (default text)");
    sweep_cmd->add_option("--threads", o.threads, "parallel grid points (default 1)");
    add_frobenius_flags(sweep_cmd, o);

    auto* lem_cmd = app.add_subcommand(
        "lemma31", "check m^(2^i n0) (I_i + A : m^inf) inside closure(I_i) for each prefix i < t");
    add_ring_flag(lem_cmd, o);
    lem_cmd->add_option("--seq", o.seq_text, "filter regular sequence")->required();
    lem_cmd->add_option("--n0", n0, "nilpotency input n0 (default 0)");
    add_frobenius_flags(lem_cmd, o);

    auto* bound_cmd = app.add_subcommand(
        "bound", "run a survey and test max fte <= (d-t)h + c; h and c are inputs, not computed");
    bound_cmd->set_help_flag("--help", "print help");
    add_ring_flag(bound_cmd, o);
    bound_cmd->add_option("--t", t, "sequence length")->required();
    bound_cmd->add_option("--samples", o.samples, "number of sequences (default 10)");
    bound_cmd->add_option("--seed", o.seed, "RNG seed (default 42)");
    bound_cmd->add_option("--max-degree", o.max_degree, "max form degree when sampling (default 2)");
    bound_cmd->add_option("--h", opt_h, "HSL-type input h");
    bound_cmd->add_option("--c", opt_c, "additive constant c");
    bound_cmd->add_flag("--estimate-h", estimate_h, "estimate h as max fte over sampled parameter ideals");
    bound_cmd->add_option("--h-samples", h_samples, "parameter ideals used by --estimate-h (default 10)");
    bound_cmd->add_option("--format", o.format_name, "json|csv|text (default text)");
    bound_cmd->add_option("--threads", o.threads, "parallel samples (default 1)");
    add_frobenius_flags(bound_cmd, o);

    CLI11_PARSE(app, argc, argv);

    try {
        RingSpec ring = load_ring(o.ring_path);
        auto S = ring.ambient();
        MonomialOrder order = order_of(o);

        if (gb_cmd->parsed()) {
            IdealHandle I(S, read_ideal(o, S));
            print_ideal(I, order);
            return kExitOk;
        }

        if (dim_cmd->parsed()) {
            IdealHandle I = (o.ideal_text.empty() && o.ideal_file.empty())
                                ? ring.quotient()
                                : ring.lift(IdealHandle(S, read_ideal(o, S)));
            std::cout << krull_dimension(I) << "\n";
            return kExitOk;
        }

        if (colon_cmd->parsed()) {
            IdealHandle I = ring.lift(IdealHandle(S, read_ideal(o, S)));
            IdealHandle J(S, parse_polynomial_list(by_text, S));
            print_ideal(colon(I, J), order);
            return kExitOk;
        }

        if (sat_cmd->parsed()) {
            IdealHandle I = ring.lift(IdealHandle(S, read_ideal(o, S)));
            IdealHandle J = by_text.empty() ? ring.maximal_ideal()
                                            : IdealHandle(S, parse_polynomial_list(by_text, S));
            SaturationResult r = saturate(I, J);
            std::cout << "stabilized after " << r.steps << " colon step(s)\n";
            print_ideal(r.ideal, order);
            return kExitOk;
        }

        if (pre_cmd->parsed()) {
            IdealHandle I = ring.lift(IdealHandle(S, read_ideal(o, S)));
            print_ideal(frobenius_preimage(I, o.e), order);
            return kExitOk;
        }

        if (fcl_cmd->parsed()) {
            IdealHandle I(S, read_ideal(o, S));
            ClosureResult r = frobenius_closure(ring, I, frob_of(o));
            std::cout << "status: " << to_string(r.status) << "\n";
            if (r.status == CertStatus::Certified)
                std::cout << "stabilized at e = " << r.stabilized_at << "\n";
            std::cout << "closure (Groebner basis of the preimage in the ambient ring):\n";
            print_ideal(r.closure, order);
            return status_exit(r.status);
        }

        if (fte_cmd->parsed()) {
            IdealHandle I(S, read_ideal(o, S));
            FteResult r = fte(ring, I, frob_of(o));
            if (r.status() != CertStatus::Certified) {
                std::cout << "status: " << to_string(r.status()) << "\nfte >= " << r.lower_bound
                          << " (chain still growing at --max-exponent)\n";
                return kExitInconclusive;
            }
            std::cout << "fte = " << r.fte << "\n";
            for (const auto& w : r.witnesses)
                std::cout << "  " << print_polynomial(w.generator) << " absorbed at e = " << w.exponent
                          << "\n";
            return kExitOk;
        }

        if (hsl_cmd->parsed()) {
            IdealHandle I(S, read_ideal(o, S));
            Hsl0Result r = hsl0(ring, I, frob_of(o));
            if (r.status != CertStatus::Certified) {
                std::cout << "status: " << to_string(r.status) << "\n";
                return kExitInconclusive;
            }
            std::cout << "hsl0 = " << r.value << "\n";
            return kExitOk;
        }

        if (filt_cmd->parsed()) {
            SequenceVerdict v = is_filter_regular(ring, read_sequence(o, S));
            print_verdict(v);
            return v.ok ? kExitOk : kExitFail;
        }

        if (param_cmd->parsed()) {
            SequenceVerdict v = is_parameter_part(ring, read_sequence(o, S));
            print_verdict(v);
            return v.ok ? kExitOk : kExitFail;
        }

        if (survey_cmd->parsed() || bound_cmd->parsed()) {
            ExperimentConfig cfg;
            cfg.seed = o.seed;
            cfg.max_degree = o.max_degree;
            cfg.threads = o.threads;
            cfg.frob = frob_of(o);
            if (estimate_h) {
                if (opt_h) throw std::runtime_error("--h and --estimate-h are mutually exclusive");
                cfg.h = estimate_hsl_via_parameter_ideals(ring, h_samples, cfg);
                cfg.h_provenance = "estimated";
            } else if (opt_h) {
                cfg.h = *opt_h;
                cfg.h_provenance = "user";
            }
            cfg.c = opt_c;
            SurveyReport rep = uniform_bound_survey(ring, t, o.samples, cfg);
            std::cout << emit_report(rep, parse_format(o.format_name));
            if (bound_cmd->parsed()) {
                BoundCheck bc = bound_report(ring, t, cfg.h, cfg.c, rep);
                std::cout << "bound check: " << to_string(bc.verdict);
                if (bc.verdict != Verdict::SKIPPED)
                    std::cout << " (max fte " << bc.max_fte << " vs bound " << bc.bound << ")";
                std::cout << "\n";
                return verdict_exit(bc.verdict);
            }
            return verdict_exit(rep.verdict);
        }

        if (sweep_cmd->parsed()) {
            ExperimentConfig cfg;
            cfg.threads = o.threads;
            cfg.frob = frob_of(o);
            SweepReport rep = power_family_sweep(ring, read_sequence(o, S), max_n, cfg);
            std::cout << emit_report(rep, parse_format(o.format_name));
            return verdict_exit(rep.verdict);
        }

        if (lem_cmd->parsed()) {
            ExperimentConfig cfg;
            cfg.frob = frob_of(o);
            auto checks = nilpotent_annihilation_check(ring, read_sequence(o, S), n0, cfg);
            bool all = true;
            for (const auto& c : checks) {
                std::cout << "prefix " << c.prefix << ": " << (c.holds ? "holds" : "violated") << "\n";
                all = all && c.holds;
            }
            std::cout << (all ? "PASS" : "FAIL") << "\n";
            return all ? kExitOk : kExitFail;
        }

        throw std::runtime_error("no subcommand dispatched");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LimitExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
