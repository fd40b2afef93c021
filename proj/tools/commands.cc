// Copyright 2026 The symf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "symf/complexlift.h"
#include "symf/error.h"
#include "symf/hadamard.h"
#include "symf/matrix_io.h"
#include "symf/search.h"

namespace symf {

namespace {

// Bad flags or values that the parser cannot reject on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Report {
   public:
    Report &add(const std::string &key, double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return add(key, std::string(buf));
    }
    Report &add(const std::string &key, int v) {
        return add(key, std::to_string(v));
    }
    Report &add(const std::string &key, std::int64_t v) {
        return add(key, std::to_string(v));
    }
    Report &add(const std::string &key, bool v) {
        return add(key, std::string(v ? "true" : "false"));
    }
    Report &add(const std::string &key, const char *v) {
        return add(key, std::string(v));
    }
    Report &add(const std::string &key, std::string v) {
        pairs_.emplace_back(key, std::move(v));
        return *this;
    }

    void print(std::ostream &out) const {
        for (size_t k = 0; k < pairs_.size(); ++k) {
            out << (k ? " " : "") << pairs_[k].first << '=' << pairs_[k].second;
        }
        out << '\n';
    }

   private:
    std::vector<std::pair<std::string, std::string>> pairs_;
};

struct Options {
    std::string file;
    std::string out;
    std::optional<int> dim;
    std::optional<double> tol;

    std::string verify_kind;
    std::string from;
    std::string to;
    std::string level;
    std::string method;
    std::string mode;
    int n = 0;
    double p = 2.0;
    std::uint64_t seed = 0;
    int restarts = 8;
    int max_iters = 5000;
    int hadamard_order = 0;
};

ToleranceProfile tolerance(const Options &o) {
    ToleranceProfile tol;
    if (o.tol) {
        tol.residual_rel_tol = *o.tol;
        try {
            tol.validate();
        } catch (const SymfError &) {
            throw UsageError("--tol must lie in (0, 1)");
        }
    }
    return tol;
}

int require_even_dim(const Options &o, const char *what) {
    if (!o.dim) {
        throw UsageError(std::string(what) + " needs --dim");
    }
    if (*o.dim < 2 || *o.dim % 2 != 0) {
        throw UsageError("--dim must be an even integer >= 2, got " + std::to_string(*o.dim));
    }
    return *o.dim;
}

// Matrices go to --out when given; otherwise to stdout, with the report moved to stderr.
struct Sink {
    std::ostream &report;
    const Options &opts;
    std::ostream &stdout_stream;

    void matrix(const MatrixFile &m) const {
        if (opts.out.empty()) {
            write_matrix(stdout_stream, m);
        } else {
            write_matrix_file(opts.out, m);
        }
    }
};

Sink make_sink(const Options &o, std::ostream &out, std::ostream &err) {
    return Sink{o.out.empty() ? err : out, o, out};
}

int cmd_verify(const Options &o, std::ostream &out) {
    const ToleranceProfile tol = tolerance(o);
    const std::string &kind = o.verify_kind;
    if (kind == "etf" || kind == "tight" || kind == "signature") {
        require_even_dim(o, kind == "signature" ? "verify signature" : "verify etf/tight");
    }
    MatrixFile f = read_matrix_file(o.file);
    Report r;
    bool ok = false;
    if (kind == "frame") {
        SynthesisMatrix phi(f.as_real());
        if (o.dim && *o.dim != phi.d()) {
            throw UsageError("--dim does not match the row count");
        }
        ok = is_frame(phi, tol);
        r.add("d", phi.d()).add("n", phi.n()).add("frame", ok);
        if (ok) {
            FrameBounds b = frame_bounds(phi, tol);
            r.add("lower", b.lower).add("upper", b.upper);
        }
    } else if (kind == "tight") {
        GramSkew g(f.as_real(), tol);
        std::optional<double> c = is_tight(g, *o.dim, tol);
        ok = c.has_value();
        r.add("d", *o.dim).add("n", g.n()).add("tight", ok);
        if (ok) {
            r.add("c", *c);
        }
    } else if (kind == "etf") {
        GramSkew g(f.as_real(), tol);
        std::optional<EtfCertificate> cert = certify_etf(g, *o.dim, tol);
        ok = cert.has_value();
        r.add("d", *o.dim).add("n", g.n()).add("etf", ok);
        if (ok) {
            r.add("mu", cert->mu).add("c", cert->c);
            r.add("equiangular_residual", cert->equiangular_residual);
            r.add("tightness_residual", cert->tightness_residual);
        }
    } else if (kind == "conference") {
        IntMatrix c = f.as_int();
        ok = is_skew_conference(c);
        r.add("order", static_cast<int>(c.rows())).add("conference", ok);
    } else if (kind == "hadamard") {
        IntMatrix h = f.as_int();
        ok = is_skew_hadamard(h);
        r.add("order", static_cast<int>(h.rows())).add("hadamard", ok);
    } else if (kind == "doubly-regular") {
        SeidelMatrix s(f.as_int());
        ok = is_doubly_regular(s);
        r.add("n", s.n()).add("doubly_regular", ok);
    } else if (kind == "signature") {
        HermitianSignature q(f.as_complex(), tol);
        double residual = signature_residual(q, *o.dim / 2);
        ok = residual <= tol.residual_rel_tol * q.n();
        r.add("n", q.n()).add("d_c", *o.dim / 2).add("signature", ok).add("residual", residual);
    } else {
        throw UsageError("unknown verify kind '" + kind + "'");
    }
    r.print(out);
    return ok ? kExitOk : kExitDomainFailure;
}

int cmd_factor(const Options &o, std::ostream &out, std::ostream &err) {
    const ToleranceProfile tol = tolerance(o);
    if (o.dim) {
        require_even_dim(o, "factor");
    }
    GramSkew g(read_matrix_file(o.file).as_real(), tol);
    SynthesisMatrix phi = factor_gram(g, tol);
    if (o.dim && phi.d() != *o.dim) {
        throw SymfError(ErrorCode::RankMismatch,
                        "Gram has rank " + std::to_string(phi.d()) + ", not " + std::to_string(*o.dim));
    }
    double residual = (gram(phi).matrix() - g.matrix()).norm();
    Sink sink = make_sink(o, out, err);
    sink.matrix(MatrixFile::of(phi.matrix()));
    Report().add("d", phi.d()).add("n", phi.n()).add("residual", residual).print(sink.report);
    return kExitOk;
}

int cmd_convert(const Options &o, std::ostream &out, std::ostream &err) {
    const ToleranceProfile tol = tolerance(o);
    const std::string pair = o.from + "->" + o.to;
    MatrixFile f = read_matrix_file(o.file);
    MatrixFile result;
    Report r;
    r.add("from", o.from).add("to", o.to);
    if (pair == "etf-square->hadamard") {
        SkewHadamard h = etf_to_hadamard_square(GramSkew(f.as_real(), tol), tol);
        result = MatrixFile::of(h.matrix());
        r.add("order", h.order());
    } else if (pair == "etf-core->hadamard") {
        SkewHadamard h = etf_core_to_hadamard(GramSkew(f.as_real(), tol), tol);
        result = MatrixFile::of(h.matrix());
        r.add("order", h.order());
    } else if (pair == "hadamard->etf-square" || pair == "hadamard->etf-core") {
        SkewHadamard h(f.as_int());
        GramSkew g = o.to == "etf-square" ? hadamard_to_etf_square(h) : hadamard_to_etf_core(h);
        IntMatrix k;
        round_to_int(g.matrix(), 0.0, k);
        result = MatrixFile::of(std::move(k));
        r.add("d", o.to == "etf-square" ? g.n() : g.n() - 1).add("n", g.n());
    } else if (pair == "etf-square->complex-signature") {
        SquareLift lift = lift_square(GramSkew(f.as_real(), tol), tol);
        result = MatrixFile::of(lift.signature.matrix());
        r.add("n", lift.signature.n()).add("d_c", lift.d_c).add("alpha", lift.alpha);
        r.add("residual", signature_residual(lift.signature, lift.d_c));
    } else if (pair == "etf-core->complex-signature") {
        CoreLift lift = lift_core(GramSkew(f.as_real(), tol), tol);
        result = MatrixFile::of(lift.signature.matrix());
        r.add("n", lift.signature.n()).add("d_c", lift.d_c).add("alpha", lift.alpha);
        r.add("residual", signature_residual(lift.signature, lift.d_c));
    } else {
        throw UsageError("unsupported conversion " + pair);
    }
    Sink sink = make_sink(o, out, err);
    sink.matrix(result);
    r.print(sink.report);
    return kExitOk;
}

int cmd_double(const Options &o, std::ostream &out, std::ostream &err) {
    const ToleranceProfile tol = tolerance(o);
    MatrixFile f = read_matrix_file(o.file);
    MatrixFile result;
    Report r;
    if (o.level == "hadamard") {
        SkewHadamard h = double_hadamard(SkewHadamard(f.as_int()));
        r.add("order", h.order());
        result = MatrixFile::of(h.matrix());
    } else {
        SynthesisMatrix phi(f.as_real());
        SynthesisMatrix doubled = double_frame(phi, default_b_matrix(phi.d()), tol);
        r.add("d", doubled.d()).add("n", doubled.n());
        result = MatrixFile::of(doubled.matrix());
    }
    Sink sink = make_sink(o, out, err);
    sink.matrix(result);
    r.print(sink.report);
    return kExitOk;
}

int cmd_diamonds(const Options &o, std::ostream &out) {
    SeidelMatrix s(read_matrix_file(o.file).as_int());
    Report r;
    std::int64_t delta = 0;
    bool agree = true;
    if (o.method == "brute") {
        delta = count_diamonds_bruteforce(s);
    } else if (o.method == "formula") {
        delta = count_diamonds_formula(s);
    } else {
        delta = count_diamonds_bruteforce(s);
        std::int64_t formula = count_diamonds_formula(s);
        agree = delta == formula;
        if (!agree) {
            r.add("brute", delta).add("formula", formula).add("agree", false);
        }
    }
    if (agree) {
        r.add("delta", delta);
        if (s.n() % 2 == 1) {
            r.add("bound", diamond_upper_bound(s.n())).add("saturated", saturates_diamond_bound(s));
        }
    }
    r.print(out);
    return agree ? kExitOk : kExitDomainFailure;
}

int cmd_search(const Options &o, std::ostream &out, std::ostream &err) {
    SearchConfig cfg;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.max_iters = o.max_iters;
    try {
        cfg.validate();
    } catch (const SymfError &e) {
        throw UsageError(e.what());
    }
    SearchOutcome result;
    MatrixFile object;
    Report r;
    r.add("mode", o.mode);
    if (o.mode == "continuous") {
        int d = require_even_dim(o, "continuous search");
        if (o.n < d || !(o.p > 1.0)) {
            throw UsageError("continuous search needs --n >= --dim and --p > 1");
        }
        result = continuous_etf_search(d, o.n, o.p, cfg);
        object = MatrixFile::of(std::get<RealMatrix>(result.best_object));
        r.add("d", d).add("n", o.n).add("p", o.p);
    } else {
        if (o.n < 2) {
            throw UsageError("discrete search needs --n >= 2");
        }
        result = discrete_diamond_search(o.n, cfg);
        object = MatrixFile::of(std::get<SeidelMatrix>(result.best_object).matrix());
        r.add("n", o.n);
    }
    r.add("success", result.success).add("best_value", result.best_value);
    r.add("restart", result.restart_index).add("iterations", result.iterations_used);
    r.add("successful_restarts", result.successful_restarts);
    Sink sink = make_sink(o, out, err);
    sink.matrix(object);
    r.print(sink.report);
    return result.success ? kExitOk : kExitDomainFailure;
}

int cmd_gen(const Options &o, std::ostream &out, std::ostream &err) {
    SkewHadamard h = seed_hadamard(o.hadamard_order);
    Sink sink = make_sink(o, out, err);
    sink.matrix(MatrixFile::of(h.matrix()));
    Report().add("order", h.order()).add("hadamard", true).print(sink.report);
    return kExitOk;
}

bool is_input_error(ErrorCode code) {
    return code == ErrorCode::MalformedInput || code == ErrorCode::IoError;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symplectic equiangular tight frames and skew Hadamard matrices"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&o](CLI::App *sub, bool with_out) {
        sub->add_option("file", o.file, "Input matrix file")->required();
        if (with_out) {
            sub->add_option("--out", o.out, "Output matrix file (default: stdout)");
        }
    };

    CLI::App *verify = app.add_subcommand("verify", "Certify a matrix file");
    verify->add_option("kind", o.verify_kind, "What to verify")
        ->required()
        ->check(CLI::IsMember({"frame", "tight", "etf", "conference", "hadamard", "doubly-regular", "signature"}));
    add_io(verify, false);
    verify->add_option("--dim", o.dim, "Real dimension d");
    verify->add_option("--tol", o.tol, "Relative residual tolerance");

    CLI::App *factor = app.add_subcommand("factor", "Factor a skew Gram matrix into a synthesis matrix");
    add_io(factor, true);
    factor->add_option("--dim", o.dim, "Expected rank d");
    factor->add_option("--tol", o.tol, "Relative residual tolerance");

    CLI::App *convert = app.add_subcommand("convert", "Convert between ETFs, Hadamard matrices and signatures");
    convert->add_option("--from", o.from)->required()->check(CLI::IsMember({"etf-square", "etf-core", "hadamard"}));
    convert->add_option("--to", o.to)
        ->required()
        ->check(CLI::IsMember({"hadamard", "etf-square", "etf-core", "complex-signature"}));
    add_io(convert, true);
    convert->add_option("--tol", o.tol, "Relative residual tolerance");

    CLI::App *dbl = app.add_subcommand("double", "Double a skew Hadamard matrix or a square ETF");
    dbl->add_option("--level", o.level)->required()->check(CLI::IsMember({"hadamard", "frame"}));
    add_io(dbl, true);
    dbl->add_option("--tol", o.tol, "Relative residual tolerance");

    CLI::App *diamonds = app.add_subcommand("diamonds", "Count diamonds of a tournament");
    add_io(diamonds, false);
    diamonds->add_option("--method", o.method)->check(CLI::IsMember({"brute", "formula"}));

    CLI::App *search = app.add_subcommand("search", "Search for ETFs or skew conference matrices");
    search->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"continuous", "discrete"}));
    search->add_option("--n", o.n, "Number of vectors or tournament order")->required();
    search->add_option("--dim", o.dim, "Real dimension d (continuous)");
    search->add_option("--p", o.p, "Potential order p > 1 (continuous)");
    search->add_option("--seed", o.seed, "Random seed");
    search->add_option("--restarts", o.restarts, "Number of restarts");
    search->add_option("--max-iters", o.max_iters, "Iterations per restart");
    search->add_option("--out", o.out, "Output matrix file (default: stdout)");

    CLI::App *gen = app.add_subcommand("gen", "Generate a skew Hadamard matrix by doubling");
    gen->add_option("--hadamard-order", o.hadamard_order, "Power-of-two order")->required();
    gen->add_option("--out", o.out, "Output matrix file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (factor->parsed()) {
            return cmd_factor(o, out, err);
        }
        if (convert->parsed()) {
            return cmd_convert(o, out, err);
        }
        if (dbl->parsed()) {
            return cmd_double(o, out, err);
        }
        if (diamonds->parsed()) {
            return cmd_diamonds(o, out);
        }
        if (search->parsed()) {
            return cmd_search(o, out, err);
        }
        return cmd_gen(o, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SymfError &e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.code()) ? kExitUsage : kExitDomainFailure;
    }
}

}  // namespace symf
