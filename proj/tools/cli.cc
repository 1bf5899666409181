// Copyright 2026 The ghzcat Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ghzcat/dynamics.h"
#include "ghzcat/errors.h"
#include "ghzcat/full_oracle.h"

namespace ghzcat::cli {

namespace {

int code(ExitCode c) {
    return static_cast<int>(c);
}

std::string format_complex(Complex z) {
    std::string re = format_real(z.real());
    std::string im = format_real(z.imag());
    if (im.front() != '-') {
        im.insert(im.begin(), '+');
    }
    return re + im + "i";
}

void print_state(const DickeState &s, std::ostream &out) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        out << k << ' ' << format_complex(s[k]) << '\n';
    }
}

int cmd_coherent(const RunConfig &cfg, std::ostream &out) {
    print_state(coherent_dicke(AtomCount(cfg.n), {cfg.theta, cfg.phi}), out);
    return code(ExitCode::kOk);
}

int cmd_evolve(const RunConfig &cfg, std::ostream &out) {
    const DickeState start = coherent_dicke(AtomCount(cfg.n), {cfg.theta, cfg.phi});
    print_state(propagate(start, {cfg.tau}), out);
    return code(ExitCode::kOk);
}

int cmd_ghz_fidelity(const RunConfig &cfg, std::ostream &out) {
    const AtomCount n(cfg.n);
    const DickeState evolved = propagate(coherent_dicke(n, {cfg.theta, cfg.phi}), {cfg.tau});
    const double fidelity = std::norm(inner_product(ghz_state(n), embed(evolved)));
    const bool ok = std::abs(1 - fidelity) < cfg.tolerance;
    out << "fidelity " << format_real(fidelity) << '\n';
    out << (ok ? "PASS" : "FAIL") << " |1 - fidelity| " << (ok ? "<" : ">=") << ' ' << cfg.tolerance << '\n';
    return code(ok ? ExitCode::kOk : ExitCode::kCheckFailed);
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    const std::vector<EquivalenceReport> reports = equivalence_sweep(cfg.n);
    out << std::setw(3) << "n" << std::setw(24) << "F(prop,cat)" << std::setw(24) << "F(prop,ghz)" << std::setw(24)
        << "phase(cat/ghz)" << std::setw(24) << "expected" << std::setw(24) << "residual" << "  status\n";
    std::optional<std::size_t> first_failure;
    for (const EquivalenceReport &r : reports) {
        const bool ok = r.passes(cfg.tolerance);
        if (!ok && !first_failure) {
            first_failure = r.n;
        }
        out << std::setw(3) << r.n << std::setw(24) << format_real(r.fidelity_prop_vs_cat) << std::setw(24)
            << format_real(r.fidelity_prop_vs_ghz) << std::setw(24) << format_real(r.phase_cat_over_ghz)
            << std::setw(24) << format_real(r.expected_phase) << std::setw(24) << format_real(r.max_residual)
            << (ok ? "  pass" : "  FAIL") << '\n';
    }
    if (first_failure) {
        out << "equivalence check failed first at n=" << *first_failure << " (tolerance " << cfg.tolerance << ")\n";
        return code(ExitCode::kCheckFailed);
    }
    out << "all " << reports.size() << " atom counts pass at tolerance " << cfg.tolerance << '\n';
    return code(ExitCode::kOk);
}

void write_summary(const FringeSeries &s, std::ostream &out) {
    const ChannelGaps g = channel_gaps(s);
    out << "n=" << s.n << " theta=" << format_real(s.theta) << " phi=" << format_real(s.phi)
        << " tau=" << format_real(s.tau) << " alpha=" << format_real(s.alpha) << " points=" << s.betas.size()
        << '\n';
    out << "max |p_coherent - p_mixture|   = " << format_real(g.coherent_vs_mixture) << '\n';
    out << "max |p_coherent - p_no_cavity| = " << format_real(g.coherent_vs_no_cavity) << '\n';
    out << "max |p_mixture - p_no_cavity|  = " << format_real(g.mixture_vs_no_cavity) << '\n';
    try {
        const auto hc = harmonic_magnitudes(s.betas, s.p_coherent, s.n);
        const auto hm = harmonic_magnitudes(s.betas, s.p_mixture, s.n);
        const auto hn = harmonic_magnitudes(s.betas, s.p_no_cavity, s.n);
        out << "harmonic  coherent  mixture  no_cavity\n";
        for (std::size_t h = 0; h <= s.n; ++h) {
            out << h << ' ' << format_real(hc[h]) << ' ' << format_real(hm[h]) << ' ' << format_real(hn[h])
                << '\n';
        }
    } catch (const std::invalid_argument &e) {
        out << "harmonics skipped: " << e.what() << '\n';
    }
}

int cmd_fringes(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const BetaGrid grid{cfg.beta_min, cfg.beta_max, cfg.beta_steps};
    grid.validate();
    const FringeSeries series =
        compare_channels(AtomCount(cfg.n), {cfg.theta, cfg.phi}, {cfg.tau}, cfg.alpha, grid);

    if (cfg.output_path) {
        std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file " << *cfg.output_path << '\n';
            return code(ExitCode::kUsage);
        }
        write_fringe_csv(series, file);
        file.close();
        if (!file) {
            err << "error: failed writing " << *cfg.output_path << '\n';
            return code(ExitCode::kUsage);
        }
        write_summary(series, out);
    } else {
        // CSV owns standard output; the summary moves to the diagnostic stream.
        write_fringe_csv(series, out);
        write_summary(series, err);
    }
    return code(ExitCode::kOk);
}

}  // namespace

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x + 0.0);
    return buf;
}

void write_fringe_csv(const FringeSeries &series, std::ostream &out) {
    out << "beta,p_coherent,p_mixture,p_no_cavity\n";
    for (std::size_t i = 0; i < series.betas.size(); ++i) {
        out << format_real(series.betas[i]) << ',' << format_real(series.p_coherent[i]) << ','
            << format_real(series.p_mixture[i]) << ',' << format_real(series.p_no_cavity[i]) << '\n';
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Atomic cat / GHZ state generation under eta S+S- and its Ramsey detection signal", "ghzcat"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<std::size_t> n;
    std::string output;
    bool pi_units = false;
    // Options bound per subcommand; remember which were given so --pi-units scales only those.
    std::vector<std::pair<CLI::Option *, double *>> angles;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--n", n, "number of atoms (default 12 for verify, 3 otherwise)")
            ->check(CLI::PositiveNumber);
        angles.emplace_back(sub->add_option("--theta", cfg.theta, "first-zone polar angle")->capture_default_str(),
                            &cfg.theta);
        angles.emplace_back(sub->add_option("--phi", cfg.phi, "first-zone azimuth")->capture_default_str(),
                            &cfg.phi);
        angles.emplace_back(
            sub->add_option("--alpha", cfg.alpha, "second-zone polar angle")->capture_default_str(), &cfg.alpha);
        angles.emplace_back(sub->add_option("--tau", cfg.tau, "scaled interaction time eta*t")->capture_default_str(),
                            &cfg.tau);
        sub->add_flag("--pi-units", pi_units, "interpret angle and time values as multiples of pi");
        angles.emplace_back(sub->add_option("--beta-min", cfg.beta_min, "first beta of the grid")->capture_default_str(),
                            &cfg.beta_min);
        angles.emplace_back(
            sub->add_option("--beta-max", cfg.beta_max, "end of the half-open beta grid")->capture_default_str(),
            &cfg.beta_max);
        sub->add_option("--beta-steps", cfg.beta_steps, "number of beta grid points")->capture_default_str();
        sub->add_option("--tolerance", cfg.tolerance, "pass/fail tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--output", output, "CSV output path (fringes; default standard output)");
    };

    struct Sub {
        const char *name;
        const char *help;
        Command command;
    };
    const Sub subs[] = {
        {"coherent", "print the Dicke amplitudes of |theta, phi>", Command::kCoherent},
        {"evolve", "print the amplitudes of e^{-i tau S+S-}|theta, phi>", Command::kEvolve},
        {"verify", "check propagated, cat and GHZ states agree for n = 1..N", Command::kVerify},
        {"ghz-fidelity", "fidelity of the evolved coherent state with the GHZ state", Command::kGhzFidelity},
        {"fringes", "Ramsey detection fringes for the coherent, mixture and no-cavity channels", Command::kFringes},
    };
    std::vector<std::pair<CLI::App *, Command>> registered;
    for (const Sub &s : subs) {
        CLI::App *sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        registered.emplace_back(sub, s.command);
    }

    std::vector<const char *> argv{"ghzcat"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? code(ExitCode::kOk) : code(ExitCode::kUsage);
    }

    for (const auto &[sub, command] : registered) {
        if (sub->parsed()) {
            cfg.command = command;
        }
    }
    cfg.n = n.value_or(cfg.command == Command::kVerify ? 12 : 3);
    if (!output.empty()) {
        cfg.output_path = output;
    }
    if (pi_units) {
        for (const auto &[opt, value] : angles) {
            if (opt->count() > 0) {
                *value *= kPi;
            }
        }
    }

    try {
        switch (cfg.command) {
            case Command::kCoherent:
                return cmd_coherent(cfg, out);
            case Command::kEvolve:
                return cmd_evolve(cfg, out);
            case Command::kVerify:
                return cmd_verify(cfg, out);
            case Command::kGhzFidelity:
                return cmd_ghz_fidelity(cfg, out);
            case Command::kFringes:
                return cmd_fringes(cfg, out, err);
        }
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << '\n';
        return code(ExitCode::kUsage);
    } catch (const std::invalid_argument &e) {
        err << "invalid arguments: " << e.what() << '\n';
        return code(ExitCode::kUsage);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kCheckFailed);
    }
    return code(ExitCode::kUsage);
}

}  // namespace ghzcat::cli
