#include "logcert/cli/dispatch.hpp"

#include "logcert/analysis/log_shape.hpp"
#include "logcert/analysis/root_checks.hpp"
#include "logcert/cli/custom_def.hpp"
#include "logcert/cli/render.hpp"
#include "logcert/exact/decimal.hpp"
#include "logcert/proof/inductive_step.hpp"
#include "logcert/proof/interlacing.hpp"
#include "logcert/proof/theorem.hpp"
#include "logcert/proof/xia.hpp"
#include "logcert/sequence/bfile.hpp"
#include "logcert/sequence/generate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace logcert {

namespace {

struct RunConfig {
  std::string sequence = "R";
  std::string definition_file;
  std::string format = "plain";
  std::string cache_root;
  std::string output;
  std::string method = "recurrence";
  std::int64_t horizon = 200;
  std::optional<int> digits;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
};

int exit_for(CertificateStatus s) { return s == CertificateStatus::refuted || s == CertificateStatus::inconclusive ? kExitRefuted : kExitOk; }
int exit_for(const CheckResult& r) { return r.holds() ? kExitOk : kExitRefuted; }

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  SequenceDef definition() const {
    if (!cfg_.definition_file.empty()) return load_custom_definition(cfg_.definition_file);
    if (cfg_.sequence == "R") return builtin_R();
    if (cfg_.sequence == "S") return builtin_S();
    throw std::invalid_argument("unknown builtin sequence \"" + cfg_.sequence + "\" (use R or S, or --definition)");
  }

  Method method() const {
    static const std::map<std::string, Method> names{
        {"summation", Method::summation}, {"recurrence", Method::recurrence}, {"both", Method::both}};
    return names.at(cfg_.method);
  }

  TermStore terms(std::int64_t upto) const {
    const SequenceDef def = definition();
    if (upto < def.offset) throw std::invalid_argument("requested terms end before the sequence offset");
    std::optional<std::filesystem::path> root;
    if (!cfg_.cache_root.empty()) root = cfg_.cache_root;
    else root = TermCache::root_from_env();
    if (root) return TermCache(*root).load_or_build(def, upto, method());
    return build_terms(def, upto, method());
  }

  Format format() const { return *parse_format(cfg_.format); }

  void emit(const std::string& text) const {
    if (cfg_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.output);
    if (!file) throw std::invalid_argument("cannot write output file " + cfg_.output);
    file << text;
  }

  IndexRange range(std::int64_t lo, std::int64_t hi) const {
    IndexRange r{cfg_.from.value_or(lo), cfg_.to.value_or(hi)};
    r.validate("--from/--to");
    return r;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

struct Dispatcher {
  RunConfig cfg;
  std::function<int(const Runner&)> action;

  // Subcommand flags
  std::string shape = "convex";
  std::string direction = "increasing";
  bool weak = false;
  bool allow_large = false;
  std::int64_t record_through = 10;
  std::string k0 = "4";
  std::int64_t N0 = 9;
  int depth = 5;
  std::int64_t window = 101;
  std::int64_t start = 6;
  std::string path;

  void common(CLI::App* app) {
    app->add_option("--sequence", cfg.sequence, "builtin sequence: R or S")->check(CLI::IsMember({"R", "S"}));
    app->add_option("--definition", cfg.definition_file, "JSON sequence definition (overrides --sequence)");
    app->add_option("--format", cfg.format, "plain, markdown or csv")
        ->check(CLI::IsMember({"plain", "markdown", "md", "csv"}));
    app->add_option("--cache-root", cfg.cache_root, "term cache directory (default: $LOGCERT_CACHE, else no cache)");
    app->add_option("-o,--output", cfg.output, "write the report to a file instead of stdout");
    app->add_option("--method", cfg.method, "term generation: summation, recurrence or both")
        ->check(CLI::IsMember({"summation", "recurrence", "both"}));
  }

  static void range_opts(CLI::App* app, RunConfig& cfg) {
    app->add_option("--from", cfg.from, "first index");
    app->add_option("--to", cfg.to, "last index");
  }

  static void digit_opt(CLI::App* app, RunConfig& cfg, int fallback) {
    app->add_option("--digits", cfg.digits, "decimal digits (1..1000, default " + std::to_string(fallback) + ")")
        ->check(CLI::Range(1, 1000));
  }

  void build(CLI::App& app) {
    app.require_subcommand(1);
    app.fallthrough();
    common(&app);

    auto* terms = app.add_subcommand("terms", "generate terms; --method both compares sum and recurrence");
    range_opts(terms, cfg);
    terms->add_option("--export", path, "also write the terms as a b-file");
    terms->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(run.definition().offset, 20);
        TermStore store = run.terms(r.hi).slice(r.lo, r.hi);
        if (!path.empty()) write_bfile(store, std::filesystem::path(path));
        Table t{{"n", store.name() + "_n"}, {}};
        for (std::int64_t n = r.lo; n <= r.hi; ++n) t.rows.push_back({std::to_string(n), store[n].to_string()});
        run.emit(render_table(t, run.format()));
        return kExitOk;
      };
    });

    auto* ratios_cmd = app.add_subcommand("ratios", "exact and decimal ratios z[n+1]/z[n]");
    range_opts(ratios_cmd, cfg);
    digit_opt(ratios_cmd, cfg, 6);
    ratios_cmd->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(1, 20);
        TermStore store = run.terms(r.hi + 1);
        auto rs = ratios(store, r.lo, r.hi);
        Table t{{"n", "r_n", "decimal"}, {}};
        for (std::int64_t n = r.lo; n <= r.hi; ++n) {
          const BigRational& q = rs[static_cast<std::size_t>(n - r.lo)];
          t.rows.push_back({std::to_string(n), q.to_string(), to_fixed(q, cfg.digits.value_or(6))});
        }
        run.emit(render_table(t, run.format()));
        return kExitOk;
      };
    });

    auto* table1 = app.add_subcommand("table1", "b(n+1), r_n, b(n) for n = 3..9");
    range_opts(table1, cfg);
    digit_opt(table1, cfg, 5);
    table1->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(3, 9);
        const int digits = cfg.digits.value_or(5);
        TermStore store = run.terms(r.hi + 1);
        Table t{{"n", "b_{n+1}", "r_n", "b_n"}, {}};
        for (const Table1Row& row : table1_rows(store, reference_bound(), r.lo, r.hi)) {
          t.rows.push_back({std::to_string(row.n), to_fixed(row.b_next, digits), to_fixed(row.r, digits),
                            to_fixed(row.b, digits)});
        }
        run.emit(render_table(t, run.format()));
        return kExitOk;
      };
    });

    build_check(app);
    build_certify(app);

    auto* conj = app.add_subcommand("conjectures", "bounded evidence for the open conjectures");
    conj->add_option("--depth", depth, "iterations of L")->check(CLI::Range(0, 64));
    conj->add_option("--window", window, "explorer window width")->check(CLI::PositiveNumber);
    conj->add_option("--start", start, "first index of the explorer window");
    range_opts(conj, cfg);
    conj->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(4, 200);  // {r_n} from r.lo, see ConjectureOptions
        ConjectureOptions o{.ratio_from = r.lo, .ratio_to = r.hi, .explorer_start = start,
                            .explorer_window = window, .explorer_depth = depth};
        TermStore store = run.terms(std::max(r.hi + 2, start + window));
        ConjectureEvidence ev = conjecture_evidence(store, o);
        std::string text = render_report(ev.report, run.format());
        for (const auto& l : ev.ledgers) text += "\n" + render_ledger(l, run.format());
        run.emit(text);
        return exit_for(ev.report.status);
      };
    });

    auto* bfile = app.add_subcommand("bfile", "b-file import and export");
    bfile->require_subcommand(1);
    bfile->fallthrough();
    auto* exp = bfile->add_subcommand("export", "write terms as a b-file");
    range_opts(exp, cfg);
    exp->add_option("path", path, "output file (default: stdout)");
    exp->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(run.definition().offset, 100);
        TermStore store = run.terms(r.hi).slice(r.lo, r.hi);
        if (path.empty()) {
          std::ostringstream s;
          write_bfile(store, s);
          run.emit(s.str());
        } else {
          write_bfile(store, std::filesystem::path(path));
        }
        return kExitOk;
      };
    });
    auto* imp = bfile->add_subcommand("import", "read a b-file and compare it with the selected sequence");
    imp->add_option("path", path, "b-file to read")->required();
    imp->callback([this] {
      action = [this](const Runner& run) {
        TermStore file = read_bfile(std::filesystem::path(path));
        TermStore ref = run.terms(file.last_index());
        CertificateReport report{file.name() + " agrees with " + ref.name() + " on " +
                                 IndexRange{file.first_index(), file.last_index()}.to_string()};
        std::optional<std::int64_t> bad;
        for (std::int64_t n = file.first_index(); n <= file.last_index(); ++n) {
          if (!ref.contains(n) || ref[n] != file[n]) {
            bad = n;
            break;
          }
        }
        CertificateStep s{.id = "bfile.match",
                          .description = bad ? "b-file term differs from the generated term" : "every term matches",
                          .status = bad ? CertificateStatus::refuted : CertificateStatus::certified,
                          .scope = IndexRange{file.first_index(), file.last_index()}.to_string(),
                          .anchor = "b-file import"};
        if (bad) {
          s.index = *bad;
          if (ref.contains(*bad)) s.witness = file[*bad] - ref[*bad];
        } else {
          s.witness = BigInt(static_cast<std::int64_t>(file.size()));
        }
        report.add(s);
        run.emit(render_report(report, run.format()));
        return exit_for(report.status);
      };
    });
  }

  void build_check(CLI::App& app) {
    auto* check = app.add_subcommand("check", "exact log-behaviour checks");
    check->require_subcommand(1);
    check->fallthrough();

    auto* shape_cmd = check->add_subcommand("log-shape", "z[n-1]z[n+1] against z[n]^2");
    range_opts(shape_cmd, cfg);
    shape_cmd->add_option("--shape", shape, "convex or concave")->check(CLI::IsMember({"convex", "concave"}));
    shape_cmd->add_flag("--weak", weak, "accept equality");
    shape_cmd->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(4, cfg.horizon);
        TermStore store = run.terms(r.hi + 1);
        auto res = check_log_shape(store, r, shape == "convex" ? Shape::convex : Shape::concave, !weak);
        run.emit(render_check(res, run.format()));
        return exit_for(res);
      };
    });

    auto* ratio_cmd = check->add_subcommand("ratio-monotone", "consecutive ratios r_n, r_(n+1)");
    range_opts(ratio_cmd, cfg);
    ratio_cmd->add_option("--direction", direction)->check(CLI::IsMember({"increasing", "decreasing"}));
    ratio_cmd->add_flag("--weak", weak, "accept equality");
    ratio_cmd->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(3, cfg.horizon);
        TermStore store = run.terms(r.hi + 1);
        auto res = check_ratio_monotone(store, r, dir(), !weak);
        run.emit(render_check(res, run.format()));
        return exit_for(res);
      };
    });

    auto* rlc = check->add_subcommand("ratio-logconcave", "r_n^2 against r_(n-1) r_(n+1)");
    range_opts(rlc, cfg);
    rlc->add_flag("--weak", weak, "accept equality");
    rlc->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(4, cfg.horizon);
        TermStore store = run.terms(r.hi + 2);
        auto res = check_ratio_log_concave(store, r, !weak);
        run.emit(render_check(res, run.format()));
        return exit_for(res);
      };
    });

    auto* root_cmd = check->add_subcommand("root-monotone", "z_n^(1/n) against z_(n+1)^(1/(n+1))");
    range_opts(root_cmd, cfg);
    root_cmd->add_option("--direction", direction)->check(CLI::IsMember({"increasing", "decreasing"}));
    root_cmd->add_option("--record-through", record_through, "keep the comparisons for n up to this index");
    root_cmd->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(1, 100);
        TermStore store = run.terms(r.hi + 1);
        auto res = check_root_monotone(store, r, dir(), {.record_through = record_through});
        run.emit(render_check(res, run.format()));
        return exit_for(res);
      };
    });

    auto* rlog = check->add_subcommand("root-logconcave", "rho_n > rho_(n+1) by exact powers");
    range_opts(rlog, cfg);
    rlog->add_flag("--allow-large", allow_large, "permit n beyond 60");
    rlog->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(5, kRootLogConcaveCap);
        TermStore store = run.terms(r.hi + 2);
        auto res = check_root_log_concave(store, r, allow_large);
        run.emit(render_check(res, run.format()));
        return exit_for(res);
      };
    });

    auto* trend = check->add_subcommand("root-ratio-trend", "decimal root ratios and their differences");
    range_opts(trend, cfg);
    digit_opt(trend, cfg, 8);
    trend->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(5, 100);
        TermStore store = run.terms(r.hi + 1);
        RootRatioTrend tr = root_ratio_trend(store, r, cfg.digits.value_or(8));
        Table t{{"n", "rho_n", "rho_n - rho_(n+1)"}, {}};
        for (const auto& row : tr.rows) t.rows.push_back({std::to_string(row.n), row.value, row.difference});
        std::string text = render_table(t, run.format());
        if (run.format() != Format::csv) {
          text += "\n" + render_check(tr.decreasing, run.format());
          text += "distance to 1 at n=" + std::to_string(r.hi) + ": " + tr.distance_to_one + "\n";
        }
        run.emit(text);
        return exit_for(tr.decreasing);
      };
    });
  }

  void build_certify(CLI::App& app) {
    auto* certify = app.add_subcommand("certify", "exact certificates");
    certify->require_subcommand(1);
    certify->fallthrough();

    auto* inter = certify->add_subcommand("interlacing", "b(n) < r_n < b(n+1)");
    range_opts(inter, cfg);
    inter->callback([this] {
      action = [this](const Runner& run) {
        IndexRange r = run.range(3, 8);
        TermStore store = run.terms(r.hi + 1);
        CertificateReport rep = check_interlacing(store, reference_bound(), r.lo, r.hi);
        run.emit(render_report(rep, run.format()));
        return exit_for(rep.status);
      };
    });

    auto* step = certify->add_subcommand("inductive-step", "symbolic induction step of the ratio bound");
    step->callback([this] {
      action = [](const Runner& run) {
        InductiveStepCertificate c = verify_inductive_step(reference_bound());
        run.emit(render_report(c.report, run.format()));
        return exit_for(c.report.status);
      };
    });

    auto* xia = certify->add_subcommand("xia", "root log-concavity criterion with f(n) = b(n-1)");
    xia->add_option("--k0", k0, "positive rational k0");
    xia->add_option("--N0", N0, "starting index N0")->check(CLI::Range(2, 1000000));
    xia->add_option("--horizon", cfg.horizon, "check condition (i) up to this index")->check(CLI::PositiveNumber);
    xia->callback([this] {
      action = [this](const Runner& run) {
        XiaParameters p{.f = shifted(reference_bound(), -1), .k0 = parse_k0(), .N0 = N0};
        TermStore store = run.terms(cfg.horizon);
        XiaCertificate c = check_xia(store, p, cfg.horizon);
        run.emit(render_report(c.report, run.format()));
        return exit_for(c.report.status);
      };
    });

    auto* thm = certify->add_subcommand("theorem", "the full ledger");
    thm->add_option("--horizon", cfg.horizon, "largest index checked directly");
    thm->add_option("--k0", k0, "criterion parameter k0");
    thm->add_option("--N0", N0, "criterion parameter N0")->check(CLI::Range(2, 1000000));
    thm->callback([this] {
      action = [this](const Runner& run) {
        if (cfg.horizon < kMinTheoremHorizon) {
          throw std::invalid_argument("--horizon must be at least " + std::to_string(kMinTheoremHorizon));
        }
        TheoremOptions o{.horizon = cfg.horizon, .k0 = parse_k0(), .N0 = N0, .definition = run.definition()};
        TermStore store = run.terms(cfg.horizon + 2);
        CertificateReport rep = assemble_theorem_report(store, o);
        run.emit(render_report(rep, run.format()));
        return exit_for(rep.status);
      };
    });
  }

  Direction dir() const { return direction == "increasing" ? Direction::increasing : Direction::decreasing; }

  BigRational parse_k0() const {
    BigRational v;
    try {
      v = BigRational::from_string(k0);
    } catch (const std::exception&) {
      throw std::invalid_argument("--k0 expects an integer or p/q, got \"" + k0 + "\"");
    }
    if (v.sign() <= 0) throw std::invalid_argument("--k0 must be positive");
    return v;
  }
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact log-behaviour certificates for integer sequences", "logcert"};
  Dispatcher d;
  d.build(app);

  std::vector<std::string> argv_store{"logcert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!d.action) {
    err << "usage error: no command given\n";
    return kExitUsage;
  }

  Runner run(d.cfg, out);
  try {
    return d.action(run);
  } catch (const SequenceError& e) {
    err << "refuted: " << e.what() << '\n';
    return kExitRefuted;
  } catch (const DefinitionError& e) {
    err << "definition error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BFileError& e) {
    err << "b-file error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace logcert
