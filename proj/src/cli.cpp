#include "knotord/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "knotord/alexander.hpp"
#include "knotord/cabling.hpp"
#include "knotord/curve.hpp"
#include "knotord/errors.hpp"
#include "knotord/knot_expr.hpp"
#include "knotord/render.hpp"
#include "knotord/table.hpp"
#include "knotord/verifier.hpp"

namespace knotord {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string parsing;  // text being parsed, for caret diagnostics
};

KnotExpr read_knot(Context& ctx, const std::string& text) {
  ctx.parsing = text;
  KnotExpr k = parse_knot(text);
  ctx.parsing.clear();
  return k;
}

std::pair<std::int64_t, std::int64_t> read_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidityError("expected 'p,q', got '" + text + "'");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ValidityError("expected 'p,q', got '" + text + "'");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path, 0);
  f << content;
}

std::optional<ExternalData> maybe_data(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_external_data(path);
}

const ExternalData* ptr(const std::optional<ExternalData>& d) { return d ? &*d : nullptr; }

std::string text_of(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

int print_suite(Context& ctx, const SuiteResult& s, const std::string& format) {
  if (format == "csv") {
    ctx.out << to_csv(s.records);
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["suite"] = s.name;
    j["records"] = s.records.size();
    j["failures"] = s.failures;
    j["passed"] = s.passed();
    ctx.out << j.dump(2) << '\n';
  } else {
    for (const auto& f : s.failures) ctx.out << "FAIL " << f << '\n';
    ctx.out << "suite " << s.name << ": " << s.records.size() << " records, " << s.failures.size() << " failures, "
            << (s.passed() ? "PASS" : "FAIL") << '\n';
  }
  return s.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, {}};
  CLI::App app{"Knot Floer order of cables of L-space knots"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string knot_text;
  std::string format;
  std::string data_path;

  // alex
  auto* alex = app.add_subcommand("alex", "Print the Alexander polynomial");
  alex->add_option("knot", knot_text, "Knot expression, e.g. \"C(2,3;T(2,3))\"")->required();
  alex->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  alex->callback([&] {
    action = [&] {
      const KnotExpr k = read_knot(ctx, knot_text);
      const LaurentPoly d = alexander(k);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["knot"] = k.to_string();
        j["expr"] = to_json(k);
        j["alexander"] = d.to_string();
        j["lspace_form"] = is_lspace_form(d);
        if (is_lspace_form(d)) j["profile"] = to_json(lspace_profile(d));
        out << j.dump(2) << '\n';
      } else {
        out << d.to_string() << '\n';
      }
      return kExitOk;
    };
  });

  // ord
  auto* ord = app.add_subcommand("ord", "Compute Ord with engine provenance");
  ord->add_option("knot", knot_text)->required();
  ord->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ord->callback([&] {
    action = [&] {
      const KnotExpr k = read_knot(ctx, knot_text);
      const EngineOrds e = engine_ords(k);
      const auto value = e.consensus();
      if (format == "json") {
        nlohmann::ordered_json j;
        j["knot"] = k.to_string();
        j["ord"] = value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
        j["ord_a"] = e.a ? nlohmann::ordered_json(*e.a) : nlohmann::ordered_json(nullptr);
        j["ord_b"] = e.b ? nlohmann::ordered_json(*e.b) : nlohmann::ordered_json(nullptr);
        j["ord_c"] = e.c ? nlohmann::ordered_json(*e.c) : nlohmann::ordered_json(nullptr);
        j["engines_agree"] = e.agree();
        j["notes"] = e.notes;
        out << j.dump(2) << '\n';
      } else if (value) {
        out << *value << " [" << e.provenance() << "]" << (e.agree() ? "" : " engines disagree") << '\n';
      }
      if (!value) {
        for (const auto& n : e.notes) err << n << '\n';
        err << "error: Ord is not computable for " << k.to_string() << '\n';
        return int(kExitUsage);
      }
      return e.agree() ? int(kExitOk) : int(kExitCheckFailed);
    };
  });

  // curve
  std::string svg_path;
  bool from_alexander = false;
  auto* curve = app.add_subcommand("curve", "Print or render the peg curve");
  curve->add_option("knot", knot_text)->required();
  curve->add_option("--svg", svg_path, "Also write an SVG rendering to this path");
  curve->add_flag("--from-alexander", from_alexander, "Read the staircase off the polynomial even for cables");
  curve->add_option("--format", format)->check(CLI::IsMember({"text", "json", "svg"}));
  curve->callback([&] {
    action = [&] {
      const KnotExpr k = read_knot(ctx, knot_text);
      const PegCurve c = from_alexander ? curve_from_alexander(alexander(k)) : geometric_curve(k);
      if (format == "json") {
        out << to_json(c).dump(2) << '\n';
      } else if (format == "svg") {
        out << render_svg(c);
      } else {
        out << to_text(c);
      }
      if (!svg_path.empty()) write_file(svg_path, render_svg(c));
      return kExitOk;
    };
  });

  // cable
  std::int64_t p = 0;
  std::int64_t q = 0;
  auto* cable = app.add_subcommand("cable", "Cross-validate the (p,q)-cable of a knot");
  cable->add_option("knot", knot_text)->required();
  cable->add_option("p", p)->required();
  cable->add_option("q", q)->required();
  cable->add_option("--data", data_path, "CSV table of bridge/braid indices");
  cable->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  cable->callback([&] {
    action = [&] {
      const KnotExpr k = read_knot(ctx, knot_text);
      const auto data = maybe_data(data_path);
      const VerificationRecord r = cross_validate(k, p, q, ptr(data));
      if (format == "csv") {
        out << to_csv({r});
      } else if (format == "text") {
        out << KnotExpr::cable(p, q, k).to_string() << ": ord_a=" << text_of(r.ord_a) << " ord_b=" << text_of(r.ord_b)
            << " ord_c=" << text_of(r.ord_c) << " bounds=[" << r.bounds.low << "," << r.bounds.high << "]\n";
        for (const auto& [name, st] : r.theorem_checks) out << "  " << name << ": " << status_name(st) << '\n';
        for (const auto& f : r.flags) out << "  flag " << f << '\n';
      } else {
        out << to_json(r).dump(2) << '\n';
      }
      return r.ok() ? kExitOk : kExitCheckFailed;
    };
  });

  // verify
  std::string theorem;
  std::int64_t p_max = -1;
  std::int64_t q_max = -1;
  std::int64_t torus_max = -1;
  unsigned threads = 0;
  std::string witness_text = "2,7";
  std::vector<std::string> target_texts;
  auto* verify = app.add_subcommand("verify", "Run a reproduction suite");
  verify->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"mult", "trefoil", "bounds", "alex-bridge", "propagation"}));
  verify->add_option("--p-max", p_max);
  verify->add_option("--q-max", q_max);
  verify->add_option("--torus-max", torus_max);
  verify->add_option("--threads", threads);
  verify->add_option("--data", data_path, "CSV table of bridge/braid indices (alex-bridge)");
  verify->add_option("--knot", knot_text, "Knot for the propagation check")->default_val("T(3,4)");
  verify->add_option("--witness", witness_text, "Witness cable p,q for the propagation check");
  verify->add_option("--target", target_texts, "Target cable p,q (repeatable)");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  verify->callback([&] {
    action = [&]() -> int {
      auto or_default = [](std::int64_t v, std::int64_t d) { return v < 0 ? d : v; };
      if (theorem == "trefoil") {
        return print_suite(ctx, run_trefoil_suite(or_default(p_max, 6), or_default(q_max, 30), threads), format);
      }
      if (theorem == "mult") {
        return print_suite(
            ctx, run_mult_suite(or_default(torus_max, 7), or_default(p_max, 4), or_default(q_max, 40), threads),
            format);
      }
      if (theorem == "bounds") {
        SweepConfig c;
        c.companions = torus_companions(2, or_default(torus_max, 7));
        c.p_min = 2;
        c.p_max = or_default(p_max, 4);
        c.q_min = 1;
        c.q_max = or_default(q_max, 40);
        c.threads = threads;
        return print_suite(ctx, run_bounds_suite(sweep(c)), format);
      }
      if (theorem == "alex-bridge") {
        if (data_path.empty()) {
          err << "error: --theorem alex-bridge needs --data with companion braid indices\n";
          return kExitUsage;
        }
        const ExternalData data = load_external_data(data_path);
        return print_suite(ctx,
                           run_alex_bridge_suite(data, or_default(torus_max, 7), or_default(p_max, 4),
                                                 or_default(q_max, 40), threads),
                           format);
      }
      const KnotExpr k = read_knot(ctx, knot_text);
      std::vector<std::pair<std::int64_t, std::int64_t>> targets;
      for (const auto& t : target_texts) targets.push_back(read_pair(t));
      if (targets.empty()) {
        for (std::int64_t tp = 2; tp <= or_default(p_max, 3); ++tp) {
          for (std::int64_t tq = 1; tq <= or_default(q_max, 40); ++tq) {
            if (gcd64(tp, tq) == 1) targets.emplace_back(tp, tq);
          }
        }
      }
      const PropagationReport rep = verify_mult_propagation(k, read_pair(witness_text), targets);
      if (format == "json") {
        out << to_json(rep).dump(2) << '\n';
      } else {
        for (const auto& row : rep.rows) {
          out << "(" << row.p << "," << row.q << ") " << status_name(row.status);
          if (row.ord) out << " ord=" << *row.ord;
          out << '\n';
        }
        out << "propagation " << k.to_string() << ": " << rep.rows.size() << " targets, " << rep.failures()
            << " failures, " << (rep.failures() ? "FAIL" : "PASS") << '\n';
      }
      return rep.failures() ? kExitCheckFailed : kExitOk;
    };
  });

  // sweep
  std::string config_path;
  std::string out_prefix;
  auto* sw = app.add_subcommand("sweep", "Run a configured parameter sweep");
  sw->add_option("--config", config_path, "JSON sweep configuration")->required();
  sw->add_option("--out", out_prefix, "Write PREFIX.jsonl and PREFIX.csv");
  sw->add_option("--data", data_path, "CSV table of bridge/braid indices");
  sw->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sw->callback([&] {
    action = [&] {
      std::ifstream f(config_path);
      if (!f) throw DataError("cannot read " + config_path, 0);
      const SweepConfig c = sweep_config_from_json(nlohmann::json::parse(f));
      const auto data = maybe_data(data_path);
      const auto records = sweep(c, ptr(data));
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".jsonl", to_jsonl(records));
        write_file(out_prefix + ".csv", to_csv(records));
        out << records.size() << " records written to " << out_prefix << ".{jsonl,csv}\n";
      } else {
        out << (format == "csv" ? to_csv(records) : to_jsonl(records));
      }
      const bool ok = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok(); });
      return ok ? kExitOk : kExitCheckFailed;
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Report Ord + 1 against bridge and braid data");
  bounds->add_option("knot", knot_text)->required();
  bounds->add_option("--data", data_path, "CSV table of bridge/braid indices");
  bounds->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  bounds->callback([&] {
    action = [&] {
      const KnotExpr k = read_knot(ctx, knot_text);
      const auto data = maybe_data(data_path);
      const InvariantReport r = bounds_report(k, ptr(data));
      if (format == "json") {
        out << to_json(r).dump(2) << '\n';
      } else {
        out << r.knot.to_string() << '\n'
            << "  alexander " << r.alexander.to_string() << '\n'
            << "  ord " << text_of(r.ord) << " [" << r.engines.provenance() << "]\n"
            << "  ord+1 " << text_of(r.bridge_lower_bound) << '\n'
            << "  bridge " << text_of(r.bridge_index) << '\n'
            << "  braid " << text_of(r.braid_index) << '\n'
            << "  genus " << r.genus << " tau " << r.tau << " epsilon " << r.epsilon << '\n'
            << "  question_flag " << (r.question_flag ? "true" : "false") << '\n';
        for (const auto& fl : r.flags) out << "  flag " << fl << '\n';
      }
      return kExitOk;
    };
  });

  // ingest
  std::string table_path;
  auto* ingest = app.add_subcommand("ingest", "Validate a knot data table");
  ingest->add_option("path", table_path)->required();
  ingest->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ingest->callback([&] {
    action = [&] {
      const auto rows = ingest_table(table_path);
      if (format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
          nlohmann::ordered_json x;
          x["name"] = r.name;
          x["alexander"] = r.alexander.to_string();
          x["bridge"] = r.bridge ? nlohmann::ordered_json(*r.bridge) : nlohmann::ordered_json(nullptr);
          x["braid"] = r.braid ? nlohmann::ordered_json(*r.braid) : nlohmann::ordered_json(nullptr);
          x["lspace_form"] = r.is_lspace_form;
          x["ord"] = r.ord ? nlohmann::ordered_json(*r.ord) : nlohmann::ordered_json(nullptr);
          j.push_back(std::move(x));
        }
        out << j.dump(2) << '\n';
      } else {
        for (const auto& r : rows) {
          out << r.name << ": " << r.alexander.to_string() << " lspace_form=" << (r.is_lspace_form ? "yes" : "no")
              << " ord=" << text_of(r.ord) << " bridge=" << text_of(r.bridge) << " braid=" << text_of(r.braid)
              << '\n';
        }
        out << rows.size() << " rows\n";
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    if (!ctx.parsing.empty()) err << "  " << ctx.parsing << "\n  " << std::string(e.offset(), ' ') << "^\n";
    return kExitUsage;
  } catch (const WitnessFails& e) {
    err << "witness fails: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace knotord
