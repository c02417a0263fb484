// Copyright 2026 The qcc Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "qcc/classical.hpp"
#include "qcc/clifford.hpp"
#include "qcc/constructions.hpp"
#include "qcc/error.hpp"
#include "qcc/search.hpp"
#include "qcc/smith.hpp"
#include "qcc/stabilizer.hpp"
#include "qcc/synthesis.hpp"
#include "qcc/text_format.hpp"

namespace qcc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by verbs that ran correctly but report a negative verdict.
struct Verdict {
    int code;
};

StabilizerMatrix load_stabilizer(const std::string& path) { return parse_stabilizer(read_file(path)); }
PolyMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }
ConvCode load_code(const std::string& path) { return parse_conv_code(read_file(path)); }

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

Field field_of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int ell = 0;
        int r = q;
        while (r % p == 0) {
            r /= p;
            ++ell;
        }
        if (r != 1) break;
        return Field::make(p, ell);
    }
    throw DomainError("no field of order " + std::to_string(q));
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string stats_line(const char* what, const CircuitStats& s) {
    return std::string(what) + ": gates=" + std::to_string(s.gate_count) + " depth=" + std::to_string(s.depth) + "\n";
}

struct Options {
    std::string input;
    std::string out;
    std::size_t frames = 0;
    bool pauli = false;
    std::string h1, h2;
    std::string classical, quantum;
    std::optional<int> d2;
    int q = 0;
    std::size_t n2 = 0, d = 0, mu = 0;
    std::string alpha, g1;
    std::string stabilizer, circuit;
    std::string inverse_out, encoder_out;
    bool intermediate = false;
    std::optional<int> cap;
    int nu = 0;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0, budget = 0;
    std::size_t keep = 10;
    unsigned threads = 0;
};

class Commands {
   public:
    Commands(Options& o, std::ostream& out) : o_(o), out_(out) {}

    void check() {
        auto s = load_stabilizer(o_.input);
        auto c = symplectic_commutator(s);
        if (c.is_zero()) {
            out_ << "self-orthogonal: yes\n";
            return;
        }
        out_ << "self-orthogonal: no\ncommutator:\n" << format_matrix_rows(c);
        throw Verdict{1};
    }

    void params() {
        auto p = code_params(load_stabilizer(o_.input));
        out_ << "n=" << p.n << " k=" << p.k << " m=" << p.m << "\n";
        out_ << "rows=" << p.nu_i.size() << " nu=" << p.nu << " row_degrees=" << join_ints(p.nu_i) << "\n";
        out_ << "rate=" << p.k << "/" << p.n << "\n";
    }

    void expand() {
        auto slice = expand_semi_infinite(load_stabilizer(o_.input), o_.frames);
        if (o_.pauli) {
            emit(out_, o_.out, render_pauli(slice));
        } else {
            emit(out_, o_.out, format_matrix(slice.band));
        }
    }

    void css() {
        if (o_.h1.empty() && o_.h2.empty()) throw UsageError("css needs --h1, --h2 or both");
        std::optional<PolyMatrix> h1, h2;
        if (!o_.h1.empty()) h1 = load_matrix(o_.h1);
        if (!o_.h2.empty()) h2 = load_matrix(o_.h2);
        const PolyMatrix& ref = h1 ? *h1 : *h2;
        if (!h1) h1 = PolyMatrix(ref.field(), 0, ref.cols());
        if (!h2) h2 = PolyMatrix(ref.field(), 0, ref.cols());
        emit(out_, o_.out, format_stabilizer(css_construct(*h1, *h2)));
    }

    void product() {
        ConvCode g1 = load_code(o_.classical);
        auto s = product_construct(g1, load_stabilizer(o_.quantum));
        std::string text;
        if (o_.d2) {
            text += "# distance bound: min(dual free distance of G1, d2) = " +
                    std::to_string(product_distance_bound(g1, *o_.d2)) + " (not verified)\n";
        }
        emit(out_, o_.out, text + format_stabilizer(s));
    }

    void cyclic() {
        Field f = field_of_order(o_.q);
        Elem alpha = parse_element(f, o_.alpha);
        auto g2 = cyclic_g2(f, o_.n2, o_.d, alpha);
        auto g1 = load_matrix(o_.g1);
        if (g1.field() != f) throw DomainError("G1 is not over F_" + std::to_string(o_.q));
        auto oc = overlapped_generator(g1, g2, o_.mu);
        std::string text = "# catastrophic: " + std::string(oc.catastrophic ? "yes" : "no") + "\n";
        emit(out_, o_.out, text + format_stabilizer(oc.stabilizer));
    }

    void encode() {
        bool css_in = !o_.h1.empty() || !o_.h2.empty();
        bool product_in = !o_.classical.empty() || !o_.quantum.empty();
        bool block_in = !o_.stabilizer.empty();
        if (css_in + product_in + block_in != 1) {
            throw UsageError("encode takes exactly one input: --h1/--h2, --classical/--quantum or --stabilizer");
        }
        std::optional<SynthesisResult> r;
        if (css_in) {
            std::optional<PolyMatrix> h1, h2;
            if (!o_.h1.empty()) h1 = load_matrix(o_.h1);
            if (!o_.h2.empty()) h2 = load_matrix(o_.h2);
            const PolyMatrix& ref = h1 ? *h1 : *h2;
            if (!h1) h1 = PolyMatrix(ref.field(), 0, ref.cols());
            if (!h2) h2 = PolyMatrix(ref.field(), 0, ref.cols());
            r = synthesize_css_encoder(*h1, *h2);
        } else if (product_in) {
            if (o_.classical.empty() || o_.quantum.empty()) throw UsageError("product encoding needs --classical and --quantum");
            r = synthesize_product_encoder(load_code(o_.classical), load_stabilizer(o_.quantum));
        } else {
            auto s = load_stabilizer(o_.stabilizer);
            if (!s.is_constant()) {
                throw DomainError("--stabilizer accepts constant (block) stabilizers; use --h1/--h2 for CSS codes");
            }
            r = synthesize_block_inverse_encoder(s);
        }
        if (!verify_inverse_encoder(r->input, r->inverse_circuit)) throw DomainError("synthesized circuit failed verification");
        out_ << stats_line("inverse encoder", r->inverse_stats) << stats_line("encoder", r->encoder_stats);
        out_ << "gate bound: " << r->gate_bound() << "\n";
        if (o_.intermediate) {
            for (const auto& step : r->intermediates) out_ << "\n# " << step.label << "\n" << format_stabilizer(step.form);
        }
        if (!o_.inverse_out.empty()) write_file(o_.inverse_out, format_circuit(r->inverse_circuit));
        if (!o_.encoder_out.empty()) write_file(o_.encoder_out, format_circuit(r->encoder_circuit));
        if (o_.inverse_out.empty() && o_.encoder_out.empty()) out_ << "\n" << format_circuit(r->inverse_circuit);
    }

    void verify() {
        auto s = load_stabilizer(o_.stabilizer);
        auto c = parse_circuit(read_file(o_.circuit));
        if (verify_inverse_encoder(s, c)) {
            out_ << "inverse encoder: verified\n";
            return;
        }
        out_ << "inverse encoder: not verified\n";
        throw Verdict{1};
    }

    void freedist() {
        auto rep = free_distance(load_code(o_.input), o_.cap);
        out_ << "d_free=" << rep.d_free << " count=" << rep.count << " cap=" << rep.search_bound << "\n";
    }

    void dual() { emit(out_, o_.out, format_conv_code(dual_generator(load_code(o_.input)))); }

    void search_codes() {
        SearchConfig cfg;
        cfg.nu = o_.nu;
        cfg.mode = o_.mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
        cfg.seed = o_.seed;
        cfg.budget = o_.budget;
        cfg.keep = o_.keep;
        cfg.threads = o_.threads;
        auto rs = search(cfg);
        out_ << format_search_table(rs) << "\n" << format_search_records(rs);
        if (!o_.out.empty()) write_file(o_.out, format_search_records(rs));
    }

    void snf() {
        auto m = load_matrix(o_.input);
        auto d = smith_normal_form(m);
        out_ << format_field_header(m.field()) << "\n";
        out_ << "rank " << d.rank << "\n";
        out_ << "invariant factors:";
        for (const auto& e : d.invariant_factors()) out_ << " " << format_poly(e);
        out_ << "\nA:\n" << format_matrix_rows(d.left) << "S:\n" << format_matrix_rows(d.diagonal) << "B:\n"
             << format_matrix_rows(d.right);
    }

   private:
    Options& o_;
    std::ostream& out_;
};

class Formatter : public CLI::Formatter {
   public:
    Formatter() { column_width(34); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quantum convolutional codes: construction, verification, encoder synthesis and code search.", "qcc"};
    app.formatter(std::make_shared<Formatter>());
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every command");

    std::vector<std::pair<CLI::App*, std::function<void(Commands&)>>> verbs;
    auto verb = [&](const char* name, const char* about, std::function<void(Commands&)> fn) {
        CLI::App* sub = app.add_subcommand(name, about);
        verbs.emplace_back(sub, std::move(fn));
        return sub;
    };
    auto file = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", o.input, what)->required()->check(CLI::ExistingFile);
    };

    auto* check = verb("check", "Check symplectic orthogonality; prints the commutator when it is nonzero",
                       &Commands::check);
    file(check, "Stabilizer file");

    auto* params = verb("params", "Report n, k, memory m and constraint lengths", &Commands::params);
    file(params, "Stabilizer file");

    auto* expand = verb("expand", "Expand over a finite number of frames", &Commands::expand);
    file(expand, "Stabilizer file");
    expand->add_option("--frames", o.frames, "Number of frames (at least m + 1)")->required();
    expand->add_flag("--pauli", o.pauli, "Render Pauli letters (or (x,z) pairs) instead of the band matrix");
    expand->add_option("--out", o.out, "Write to this file instead of stdout");

    auto* css = verb("css", "CSS stabilizer (H2 | 0 ; 0 | H1)", &Commands::css);
    css->add_option("--h1", o.h1, "Parity check of C1, (n - k1) x n matrix file")->check(CLI::ExistingFile);
    css->add_option("--h2", o.h2, "Parity check of C2, k2 x n matrix file")->check(CLI::ExistingFile);
    css->add_option("--out", o.out, "Write to this file instead of stdout");

    auto* product = verb("product", "Product stabilizer G1 (x) S2", &Commands::product);
    product->add_option("--classical", o.classical, "Classical code G1 over a prime field")
        ->required()
        ->check(CLI::ExistingFile);
    product->add_option("--quantum", o.quantum, "Stabilizer file S2")->required()->check(CLI::ExistingFile);
    product->add_option("--d2", o.d2, "Distance of S2; adds the unverified distance bound as a comment");
    product->add_option("--out", o.out, "Write to this file instead of stdout");

    auto* cyclic = verb("cyclic", "Overlapped cyclic product code (G1 (x) G2 with mu blocks of overlap)",
                        &Commands::cyclic);
    cyclic->add_option("--q", o.q, "Field order")->required();
    cyclic->add_option("--n2", o.n2, "Length of the inner code (the order of alpha)")->required();
    cyclic->add_option("--d", o.d, "Designed distance of the inner code; 2(d - 1) < n2")->required();
    cyclic->add_option("--alpha", o.alpha, "Field element of multiplicative order n2")->required();
    cyclic->add_option("--mu", o.mu, "Overlap in blocks, 1 <= mu < n1")->required();
    cyclic->add_option("--g1", o.g1, "Constant k1 x n1 generator of the outer code")
        ->required()
        ->check(CLI::ExistingFile);
    cyclic->add_option("--out", o.out, "Write to this file instead of stdout");

    auto* encode = verb("encode", "Synthesize and verify an encoding circuit", &Commands::encode);
    encode->add_option("--h1", o.h1, "CSS input: parity check of C1")->check(CLI::ExistingFile);
    encode->add_option("--h2", o.h2, "CSS input: parity check of C2")->check(CLI::ExistingFile);
    encode->add_option("--classical", o.classical, "Product input: classical code G1")->check(CLI::ExistingFile);
    encode->add_option("--quantum", o.quantum, "Product input: block stabilizer S2")->check(CLI::ExistingFile);
    encode->add_option("--stabilizer", o.stabilizer, "Block input: constant stabilizer")->check(CLI::ExistingFile);
    encode->add_option("--inverse-out", o.inverse_out, "Write the inverse-encoding circuit here");
    encode->add_option("--encoder-out", o.encoder_out, "Write the encoding circuit here");
    encode->add_flag("--intermediate", o.intermediate, "Print the stabilizer after each stage");

    auto* verify = verb("verify", "Check that a circuit maps a stabilizer to (0 | I 0)", &Commands::verify);
    verify->add_option("--stabilizer", o.stabilizer, "Stabilizer file")->required()->check(CLI::ExistingFile);
    verify->add_option("--circuit", o.circuit, "Inverse-encoding circuit file")->required()->check(CLI::ExistingFile);

    auto* freedist = verb("freedist", "Free distance and number of minimum-weight detours", &Commands::freedist);
    file(freedist, "Convolutional code file");
    freedist->add_option("--cap", o.cap, "Give up above this weight (default 2 (nu + 1) n)");

    auto* dual = verb("dual", "Minimal-basic generator of the dual code", &Commands::dual);
    file(dual, "Convolutional code file");
    dual->add_option("--out", o.out, "Write to this file instead of stdout");

    auto* search = verb("search", "Search self-orthogonal binary rate-1/4 codes by dual free distance",
                        &Commands::search_codes);
    search->add_option("--nu", o.nu, "Constraint length")->required();
    search->add_option("--mode", o.mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    search->add_option("--seed", o.seed, "Random mode seed")->capture_default_str();
    search->add_option("--budget", o.budget, "Random mode: number of candidates drawn")->capture_default_str();
    search->add_option("--keep", o.keep, "Number of best records kept")->capture_default_str();
    search->add_option("--threads", o.threads, "Worker threads (0: QCC_THREADS or all cores)")->capture_default_str();
    search->add_option("--out", o.out, "Also write the records to this file");

    auto* snf = verb("snf", "Smith normal form A M B = S with the transforms", &Commands::snf);
    file(snf, "Matrix file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    Commands cmds(o, out);
    try {
        for (auto& [sub, fn] : verbs) {
            if (sub->parsed()) fn(cmds);
        }
    } catch (const Verdict& v) {
        return v.code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qcc::cli
