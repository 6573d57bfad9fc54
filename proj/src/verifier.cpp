#include "knotord/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>

#include "knotord/alexander.hpp"
#include "knotord/curve.hpp"
#include "knotord/errors.hpp"

namespace knotord {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits one CSV line; double quotes protect commas, "" is a literal quote.
std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  for (auto& f : fields) f = trim(f);
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::optional<std::int64_t> parse_index(const std::string& field, std::size_t row, const char* what) {
  if (field.empty()) return std::nullopt;
  std::int64_t v = 0;
  for (char c : field) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DataError(std::string(what) + " index '" + field + "' is not a positive integer", row);
    }
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000) throw DataError(std::string(what) + " index out of range", row);
  }
  if (v < 1) throw DataError(std::string(what) + " index must be positive", row);
  return v;
}

const LaurentPoly& trefoil_polynomial() {
  static const LaurentPoly p = LaurentPoly::parse("t - 1 + t^-1");
  return p;
}

// Ord + 1 of the (p,q)-cable of the trefoil.
std::int64_t trefoil_cable_ord_plus_one(std::int64_t p, std::int64_t q) {
  if (q < p) return p + 1;
  if (q < 2 * p) return q;
  return 2 * p;
}

void set_check(VerificationRecord& r, const char* name, CheckStatus s) {
  for (auto& [n, st] : r.theorem_checks) {
    if (n == name) {
      st = s;
      return;
    }
  }
  r.theorem_checks.emplace_back(name, s);
}

std::vector<std::int64_t> present(const std::initializer_list<std::optional<std::int64_t>>& values) {
  std::vector<std::int64_t> out;
  for (const auto& v : values) {
    if (v) out.push_back(*v);
  }
  return out;
}

template <typename T>
void put_optional(nlohmann::ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

std::string opt_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::vector<KnotTableRow> parse_knot_table(std::string_view csv) {
  std::vector<KnotTableRow> rows;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      if (end == csv.size()) break;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (!saw_header) {
      if (fields != std::vector<std::string>{"name", "alexander", "bridge", "braid"}) {
        throw DataError("expected header 'name,alexander,bridge,braid'", line_no);
      }
      saw_header = true;
      continue;
    }
    if (fields.size() != 4) {
      throw DataError("expected 4 fields, found " + std::to_string(fields.size()), line_no);
    }
    KnotTableRow row;
    row.name = fields[0];
    if (row.name.empty()) throw DataError("empty name", line_no);
    LaurentPoly poly;
    try {
      poly = LaurentPoly::parse(fields[1]);
    } catch (const ParseError& e) {
      throw DataError(std::string("malformed polynomial: ") + e.what(), line_no);
    }
    try {
      row.alexander = symmetrize(poly);
    } catch (const NotSymmetrizable&) {
      throw DataError("polynomial '" + fields[1] + "' is not symmetrizable", line_no);
    }
    row.bridge = parse_index(fields[2], line_no, "bridge");
    row.braid = parse_index(fields[3], line_no, "braid");
    row.is_lspace_form = is_lspace_form(row.alexander);
    if (row.is_lspace_form) row.ord = ord_from_alexander(row.alexander);
    rows.push_back(std::move(row));
    if (end == csv.size()) break;
  }
  if (!saw_header) throw DataError("missing header 'name,alexander,bridge,braid'", 1);
  return rows;
}

const KnotTableRow* ExternalData::find(const KnotExpr& k) const {
  const std::string text = k.to_string();
  for (const auto& row : rows_) {
    if (row.name == text) return &row;
    if (k.is_raw() && row.name == k.as_raw().label) return &row;
    try {
      if (parse_knot(row.name) == k) return &row;
    } catch (const Error&) {
      // names need not be knot expressions
    }
  }
  if (k.is_cable()) return nullptr;
  const LaurentPoly d = alexander(k);
  for (const auto& row : rows_) {
    if (row.alexander == d) return &row;
  }
  return nullptr;
}

std::optional<std::int64_t> ExternalData::braid_index(const KnotExpr& k) const {
  if (const auto* row = find(k); row && row->braid) return row->braid;
  if (k.is_cable()) {
    if (auto b = braid_index(*k.as_cable().companion)) return k.as_cable().p * *b;
  }
  return std::nullopt;
}

std::optional<std::int64_t> ExternalData::bridge_index(const KnotExpr& k) const {
  if (const auto* row = find(k); row && row->bridge) return row->bridge;
  if (k.is_cable()) {
    if (auto b = bridge_index(*k.as_cable().companion)) return k.as_cable().p * *b;
  }
  return std::nullopt;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

CheckStatus VerificationRecord::check(std::string_view name) const {
  for (const auto& [n, s] : theorem_checks) {
    if (n == name) return s;
  }
  return CheckStatus::NotApplicable;
}

bool VerificationRecord::ok() const {
  return std::none_of(theorem_checks.begin(), theorem_checks.end(), [](const auto& c) {
    return c.first != "question_bb" && c.second == CheckStatus::Fail;
  });
}

std::size_t VerificationRecord::checks_passed() const {
  return std::count_if(theorem_checks.begin(), theorem_checks.end(),
                       [](const auto& c) { return c.second == CheckStatus::Pass; });
}

std::size_t VerificationRecord::checks_applicable() const {
  return std::count_if(theorem_checks.begin(), theorem_checks.end(),
                       [](const auto& c) { return c.second != CheckStatus::NotApplicable; });
}

VerificationRecord cross_validate(const KnotExpr& k, std::int64_t p, std::int64_t q, const ExternalData* data) {
  const KnotExpr cable = KnotExpr::cable(p, q, k);
  const LaurentPoly dk = alexander(k);
  if (!is_lspace_form(dk)) throw NotLSpaceForm("companion " + k.to_string() + " is not of L-space form");

  VerificationRecord r;
  r.knot = k;
  r.p = p;
  r.q = q;
  r.companion_ord = ord_from_alexander(dk);
  r.companion_genus = dk.max_exponent();
  r.bounds = explicit_bounds(r.companion_ord, p);
  for (const char* name : kCheckNames) r.theorem_checks.emplace_back(name, CheckStatus::NotApplicable);

  const bool companion_lspace = is_lspace_knot(k);
  if (!companion_lspace) r.flags.push_back("companion_not_lspace_knot");
  if (q == 1) r.flags.push_back("pattern_unknotted_q1");

  // Engine A.
  const LaurentPoly dc = alexander(cable);
  r.alex_gap_max = gap_maximum(dc);
  r.lspace_guard = companion_lspace && lspace_cable_guard(r.companion_genus, p, q);
  if (r.lspace_guard) {
    if (is_lspace_form(dc)) {
      r.ord_a = r.alex_gap_max;
    } else {
      r.flags.push_back("engine_a: guarded cable polynomial is not of L-space form");
    }
  } else {
    r.flags.push_back("engine_a_form_check_only");
  }

  // Engine B.
  try {
    const auto res = cable_ord_arcrule_detail(lspace_summary(k), p, q);
    r.ord_b = res.ord;
    if (res.floor_dominates) r.flags.push_back("engine_b_floor_dominates");
  } catch (const Error& e) {
    r.flags.push_back(std::string("engine_b: ") + e.what());
  }

  // Engine C.
  try {
    const PegCurve curve = cable_curve_geometric(geometric_curve(k), p, q);
    r.ord_c = ord_from_curve(curve);
    r.cable_monotone = curve.is_monotone();
    if (companion_lspace && *r.cable_monotone != r.lspace_guard) {
      r.flags.push_back("monotone_guard_mismatch");
    }
  } catch (const Error& e) {
    r.flags.push_back(std::string("engine_c: ") + e.what());
  }

  const auto values = present({r.ord_a, r.ord_b, r.ord_c});
  if (values.size() >= 2) {
    const bool same = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
    set_check(r, "engine_agreement", same ? CheckStatus::Pass : CheckStatus::Fail);
    if (!same) r.flags.push_back("engine_disagreement");
  }
  if (!values.empty()) {
    const bool inside = std::all_of(values.begin(), values.end(),
                                    [&](std::int64_t v) { return r.bounds.low <= v && v <= r.bounds.high; });
    set_check(r, "prop_bounds", inside ? CheckStatus::Pass : CheckStatus::Fail);
  }

  const std::optional<std::int64_t> ord = r.ord_b ? r.ord_b : r.ord_c;
  const std::int64_t multiplied = p * (r.companion_ord + 1);
  if (companion_lspace && r.companion_genus > 1 && ord) {
    set_check(r, "thm_mult", *ord + 1 == multiplied ? CheckStatus::Pass : CheckStatus::Fail);
  }
  if (companion_lspace && dk == trefoil_polynomial() && ord) {
    set_check(r, "thm_trefoil",
              *ord + 1 == trefoil_cable_ord_plus_one(p, q) ? CheckStatus::Pass : CheckStatus::Fail);
  }

  if (data && ord) {
    const auto braid_k = data->braid_index(k);
    if (braid_k && r.companion_ord + 1 == *braid_k && r.ord_a && *ord + 1 == multiplied) {
      set_check(r, "thm_alex_bridge",
                leading_form_check(dc, p * *braid_k) ? CheckStatus::Pass : CheckStatus::Fail);
    }
    if (const auto braid_c = data->braid_index(cable)) {
      if (*ord + 1 == *braid_c) {
        set_check(r, "question_bb", CheckStatus::Pass);
      } else {
        set_check(r, "question_bb", CheckStatus::Fail);
        r.flags.push_back(*ord + 1 < *braid_c ? "ord_braid_gap: Ord+1=" + std::to_string(*ord + 1) +
                                                    " < braid index " + std::to_string(*braid_c)
                                              : "external_data_inconsistent: Ord+1 exceeds braid index");
      }
    }
  }
  return r;
}

std::vector<KnotExpr> torus_companions(std::int64_t min, std::int64_t max) {
  std::vector<KnotExpr> out;
  for (std::int64_t a = std::max<std::int64_t>(2, min); a <= max; ++a) {
    for (std::int64_t b = a + 1; b <= max; ++b) {
      if (gcd64(a, b) == 1) out.push_back(KnotExpr::torus(a, b));
    }
  }
  return out;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  if (j.contains("companions")) {
    for (const auto& item : j.at("companions")) {
      c.companions.push_back(item.is_string() ? parse_knot(item.get<std::string>()) : knot_from_json(item));
    }
  }
  if (j.contains("torus_companions")) {
    const auto& t = j.at("torus_companions");
    for (auto& k : torus_companions(t.value("min", std::int64_t{2}), t.at("max").get<std::int64_t>())) {
      c.companions.push_back(std::move(k));
    }
  }
  auto range = [&](const char* key, std::int64_t& lo, std::int64_t& hi) {
    const auto& r = j.at(key);
    if (!r.is_array() || r.size() != 2) throw ValidityError(std::string("'") + key + "' must be [min, max]");
    lo = r[0].get<std::int64_t>();
    hi = r[1].get<std::int64_t>();
  };
  range("p", c.p_min, c.p_max);
  range("q", c.q_min, c.q_max);
  if (c.p_min < 2) throw ValidityError("sweep needs p >= 2");
  if (c.q_min < 1) throw ValidityError("sweep needs q >= 1");
  c.skip_q_equal_p = j.value("skip_q_equal_p", true);
  c.threads = j.value("threads", 0u);
  return c;
}

std::vector<VerificationRecord> sweep(const SweepConfig& config, const ExternalData* data) {
  struct Triple {
    std::size_t companion;
    std::int64_t p;
    std::int64_t q;
  };
  for (const auto& k : config.companions) {
    if (!is_lspace_form(alexander(k))) throw NotLSpaceForm("sweep companion " + k.to_string() + " is not of L-space form");
  }
  std::vector<Triple> work;
  for (std::size_t i = 0; i < config.companions.size(); ++i) {
    for (std::int64_t p = config.p_min; p <= config.p_max; ++p) {
      for (std::int64_t q = config.q_min; q <= config.q_max; ++q) {
        if (gcd64(p, q) != 1) continue;
        if (config.skip_q_equal_p && q == p) continue;
        work.push_back({i, p, q});
      }
    }
  }
  std::vector<VerificationRecord> out(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      const auto& t = work[i];
      out[i] = cross_validate(config.companions[t.companion], t.p, t.q, data);
    }
  };
  unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, work.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  return out;
}

std::size_t PropagationReport::failures() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status == CheckStatus::Fail; });
}

PropagationReport verify_mult_propagation(const KnotExpr& k, std::pair<std::int64_t, std::int64_t> witness,
                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& targets) {
  const ArcSummary summary = lspace_summary(k);
  PropagationReport rep;
  rep.knot = k;
  rep.ord = ord_from_alexander(alexander(k));
  rep.tau = summary.tau;
  rep.witness = witness;
  const auto [wp, wq] = witness;
  const std::int64_t wit_ord = cable_ord_arcrule(summary, wp, wq);
  if (wit_ord + 1 != wp * (rep.ord + 1)) {
    throw WitnessFails("witness (" + std::to_string(wp) + "," + std::to_string(wq) + "): Ord+1 = " +
                       std::to_string(wit_ord + 1) + " but p(Ord(K)+1) = " + std::to_string(wp * (rep.ord + 1)));
  }
  const std::int64_t abs_tau = rep.tau < 0 ? -rep.tau : rep.tau;
  for (const auto& [p, q] : targets) {
    PropagationRow row{p, q, CheckStatus::NotApplicable, std::nullopt};
    if (q > 2 * p * abs_tau) {
      row.ord = cable_ord_arcrule(summary, p, q);
      row.status = *row.ord + 1 == p * (rep.ord + 1) ? CheckStatus::Pass : CheckStatus::Fail;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::optional<std::int64_t> EngineOrds::consensus() const {
  if (b) return b;
  if (c) return c;
  return a;
}

bool EngineOrds::agree() const {
  const auto v = present({a, b, c});
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

std::string EngineOrds::provenance() const {
  std::string s;
  auto add = [&](const char* name, const std::optional<std::int64_t>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += std::string(name) + "=" + std::to_string(*v);
  };
  add("A", a);
  add("B", b);
  add("C", c);
  return s;
}

EngineOrds engine_ords(const KnotExpr& k) {
  EngineOrds e;
  const LaurentPoly d = alexander(k);
  if (is_lspace_knot(k)) {
    e.a = ord_from_alexander(d);
  } else {
    e.notes.push_back("engine_a: not an L-space knot, gap maximum " + std::to_string(gap_maximum(d)) +
                      " is a form check only");
  }
  if (k.is_cable()) {
    try {
      e.b = arcrule_ord(k);
    } catch (const Error& err) {
      e.notes.push_back(std::string("engine_b: ") + err.what());
    }
  }
  try {
    e.c = ord_from_curve(geometric_curve(k));
  } catch (const Error& err) {
    e.notes.push_back(std::string("engine_c: ") + err.what());
  }
  return e;
}

InvariantReport bounds_report(const KnotExpr& k, const ExternalData* data) {
  InvariantReport r;
  r.knot = k;
  r.alexander = alexander(k);
  r.lspace_knot = is_lspace_knot(k);
  r.engines = engine_ords(k);
  r.ord = r.engines.consensus();
  for (const auto& n : r.engines.notes) r.flags.push_back(n);
  if (!r.engines.agree()) r.flags.push_back("engine_disagreement");
  const LSpaceProfile profile = lspace_profile(r.alexander);
  r.genus = profile.genus;
  r.tau = profile.tau;
  r.epsilon = profile.epsilon;
  try {
    const PegCurve c = geometric_curve(k);
    r.tau = tau_from_curve(c);
    r.epsilon = eps_from_curve(c);
  } catch (const Error&) {
    // keep the polynomial read-off
  }
  if (r.ord) r.bridge_lower_bound = *r.ord + 1;
  if (data) {
    r.bridge_index = data->bridge_index(k);
    r.braid_index = data->braid_index(k);
  }
  if (r.bridge_lower_bound && r.braid_index) {
    if (*r.bridge_lower_bound < *r.braid_index) {
      r.question_flag = true;
      r.flags.push_back("ord_braid_gap: Ord+1=" + std::to_string(*r.bridge_lower_bound) +
                        " < braid index " + std::to_string(*r.braid_index));
    } else if (*r.bridge_lower_bound > *r.braid_index) {
      r.flags.push_back("external_data_inconsistent: Ord+1 exceeds braid index");
    }
  }
  if (r.bridge_lower_bound && r.bridge_index && *r.bridge_lower_bound < *r.bridge_index) {
    r.flags.push_back("bridge_gap: Ord+1=" + std::to_string(*r.bridge_lower_bound) + " < bridge index " +
                      std::to_string(*r.bridge_index));
  }
  return r;
}

namespace {

void require_all(SuiteResult& s, const char* check, bool allow_not_applicable) {
  for (const auto& r : s.records) {
    const auto label = r.knot.to_string() + " (" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
    const CheckStatus st = r.check(check);
    if (st == CheckStatus::Fail || (!allow_not_applicable && st == CheckStatus::NotApplicable)) {
      s.failures.push_back(label + ": " + check + " " + status_name(st));
    }
  }
}

}  // namespace

SuiteResult run_trefoil_suite(std::int64_t p_max, std::int64_t q_max, unsigned threads) {
  SweepConfig c;
  c.companions = {KnotExpr::torus(2, 3)};
  c.p_min = 2;
  c.p_max = p_max;
  c.q_min = 1;
  c.q_max = q_max;
  c.threads = threads;
  SuiteResult s{"trefoil", sweep(c), {}};
  require_all(s, "thm_trefoil", false);
  require_all(s, "engine_agreement", true);
  require_all(s, "prop_bounds", false);
  return s;
}

SuiteResult run_mult_suite(std::int64_t torus_max, std::int64_t p_max, std::int64_t q_max, unsigned threads) {
  SweepConfig c;
  for (auto& k : torus_companions(2, torus_max)) {
    if (alexander(k).max_exponent() >= 2) c.companions.push_back(std::move(k));
  }
  c.p_min = 2;
  c.p_max = p_max;
  c.q_min = 2;
  c.q_max = q_max;
  c.threads = threads;
  SuiteResult s{"mult", sweep(c), {}};
  require_all(s, "thm_mult", false);
  require_all(s, "engine_agreement", true);
  require_all(s, "prop_bounds", false);
  return s;
}

SuiteResult run_bounds_suite(std::vector<VerificationRecord> records) {
  SuiteResult s{"bounds", std::move(records), {}};
  require_all(s, "prop_bounds", false);
  return s;
}

SuiteResult run_alex_bridge_suite(const ExternalData& data, std::int64_t torus_max, std::int64_t p_max,
                                  std::int64_t q_max, unsigned threads) {
  SweepConfig c;
  c.companions = torus_companions(2, torus_max);
  c.p_min = 2;
  c.p_max = p_max;
  c.q_min = 1;
  c.q_max = q_max;
  c.threads = threads;
  SuiteResult s{"alex-bridge", sweep(c, &data), {}};
  require_all(s, "thm_alex_bridge", true);
  const bool any = std::any_of(s.records.begin(), s.records.end(),
                               [](const auto& r) { return r.check("thm_alex_bridge") == CheckStatus::Pass; });
  if (!any) s.failures.push_back("no applicable rows: companion braid indices missing from the data");
  return s;
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["knot"] = r.knot.to_string();
  j["companion"] = to_json(r.knot);
  j["p"] = r.p;
  j["q"] = r.q;
  j["companion_ord"] = r.companion_ord;
  j["companion_genus"] = r.companion_genus;
  j["lspace_guard"] = r.lspace_guard;
  put_optional(j, "ord_a", r.ord_a);
  put_optional(j, "ord_b", r.ord_b);
  put_optional(j, "ord_c", r.ord_c);
  j["alex_gap_max"] = r.alex_gap_max;
  put_optional(j, "cable_monotone", r.cable_monotone);
  j["bounds"] = {r.bounds.low, r.bounds.high};
  nlohmann::ordered_json checks;
  for (const auto& [n, s] : r.theorem_checks) checks[n] = status_name(s);
  j["theorem_checks"] = std::move(checks);
  j["flags"] = r.flags;
  return j;
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["knot"] = r.knot.to_string();
  j["alexander"] = r.alexander.to_string();
  j["lspace_knot"] = r.lspace_knot;
  put_optional(j, "ord", r.ord);
  put_optional(j, "ord_a", r.engines.a);
  put_optional(j, "ord_b", r.engines.b);
  put_optional(j, "ord_c", r.engines.c);
  j["engines_agree"] = r.engines.agree();
  j["genus"] = r.genus;
  j["tau"] = r.tau;
  j["epsilon"] = r.epsilon;
  put_optional(j, "bridge_lower_bound", r.bridge_lower_bound);
  put_optional(j, "bridge_index", r.bridge_index);
  put_optional(j, "braid_index", r.braid_index);
  j["question_flag"] = r.question_flag;
  j["flags"] = r.flags;
  return j;
}

nlohmann::ordered_json to_json(const PropagationReport& r) {
  nlohmann::ordered_json j;
  j["knot"] = r.knot.to_string();
  j["ord"] = r.ord;
  j["tau"] = r.tau;
  j["witness"] = {r.witness.first, r.witness.second};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json x;
    x["p"] = row.p;
    x["q"] = row.q;
    x["status"] = status_name(row.status);
    put_optional(x, "ord", row.ord);
    rows.push_back(std::move(x));
  }
  j["targets"] = std::move(rows);
  return j;
}

std::string to_jsonl(const std::vector<VerificationRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream os;
  os << "knot,p,q,ord_a,ord_b,ord_c,low,high,checks_passed,flags\n";
  for (const auto& r : records) {
    std::string flags;
    for (const auto& f : r.flags) {
      if (!flags.empty()) flags += ';';
      flags += f;
    }
    os << csv_field(r.knot.to_string()) << ',' << r.p << ',' << r.q << ',' << opt_text(r.ord_a) << ','
       << opt_text(r.ord_b) << ',' << opt_text(r.ord_c) << ',' << r.bounds.low << ',' << r.bounds.high << ','
       << r.checks_passed() << '/' << r.checks_applicable() << ',' << csv_field(flags) << '\n';
  }
  return os.str();
}

}  // namespace knotord
