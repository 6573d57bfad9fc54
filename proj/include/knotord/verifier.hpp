#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotord/cabling.hpp"
#include "knotord/knot_expr.hpp"
#include "knotord/laurent.hpp"

namespace knotord {

inline constexpr int kRecordSchemaVersion = 1;

// One row of external knot data (name, Alexander polynomial, classical
// indices). Indices are never derived inside the library; they only enter
// through tables like this.
struct KnotTableRow {
  std::string name;
  LaurentPoly alexander;
  std::optional<std::int64_t> bridge;
  std::optional<std::int64_t> braid;
  bool is_lspace_form = false;
  std::optional<std::int64_t> ord;  // present for L-space-form rows
};

// Parses CSV text with header `name,alexander,bridge,braid`. Throws DataError
// with the 1-based line number of the offending row.
std::vector<KnotTableRow> parse_knot_table(std::string_view csv);

// Lookup of external bridge/braid indices. A row applies to an expression
// when its name matches the expression (as text or structurally) or, failing
// that, for non-cables, when the polynomials agree. Cables without their own
// row inherit p times the companion's index.
class ExternalData {
 public:
  ExternalData() = default;
  explicit ExternalData(std::vector<KnotTableRow> rows) : rows_(std::move(rows)) {}

  std::optional<std::int64_t> braid_index(const KnotExpr& k) const;
  std::optional<std::int64_t> bridge_index(const KnotExpr& k) const;
  bool empty() const { return rows_.empty(); }

 private:
  const KnotTableRow* find(const KnotExpr& k) const;
  std::vector<KnotTableRow> rows_;
};

enum class CheckStatus { Pass, Fail, NotApplicable };
const char* status_name(CheckStatus s);

// Names of the checks every record carries, in output order.
inline constexpr const char* kCheckNames[] = {
    "engine_agreement", "prop_bounds", "thm_mult", "thm_trefoil", "thm_alex_bridge", "question_bb",
};

struct VerificationRecord {
  KnotExpr knot = KnotExpr::unknot();  // companion
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t companion_ord = 0;
  std::int64_t companion_genus = 0;
  bool lspace_guard = false;
  std::int64_t alex_gap_max = 0;  // Engine A's formula, asserted only under the guard
  std::optional<std::int64_t> ord_a;
  std::optional<std::int64_t> ord_b;
  std::optional<std::int64_t> ord_c;
  std::optional<bool> cable_monotone;
  OrdBounds bounds;
  std::vector<std::pair<std::string, CheckStatus>> theorem_checks;
  std::vector<std::string> flags;

  CheckStatus check(std::string_view name) const;
  // Every check except the question_bb screen passed or was not applicable.
  bool ok() const;
  std::size_t checks_passed() const;
  std::size_t checks_applicable() const;
};

// Runs Engines A (under the guard), B and C on the (p,q)-cable of k and fills
// the theorem checks. Engine errors become flags. Throws NotLSpaceForm if k's
// polynomial is not of L-space form, ValidityError for bad (p,q).
VerificationRecord cross_validate(const KnotExpr& k, std::int64_t p, std::int64_t q,
                                  const ExternalData* data = nullptr);

struct SweepConfig {
  std::vector<KnotExpr> companions;
  std::int64_t p_min = 2;
  std::int64_t p_max = 2;
  std::int64_t q_min = 1;
  std::int64_t q_max = 1;
  bool skip_q_equal_p = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

// {"companions": [...], "torus_companions": {"min": 2, "max": 7},
//  "p": [min, max], "q": [min, max], "threads": n}
SweepConfig sweep_config_from_json(const nlohmann::json& j);

// One record per coprime triple, ordered by (companion index, p, q) no matter
// how the work was scheduled.
std::vector<VerificationRecord> sweep(const SweepConfig& config, const ExternalData* data = nullptr);

// Coprime torus knots T(a,b), min <= a < b <= max, in lexicographic order.
std::vector<KnotExpr> torus_companions(std::int64_t min, std::int64_t max);

struct PropagationRow {
  std::int64_t p = 0;
  std::int64_t q = 0;
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<std::int64_t> ord;
};

struct PropagationReport {
  KnotExpr knot = KnotExpr::unknot();
  std::int64_t ord = 0;
  std::int64_t tau = 0;
  std::pair<std::int64_t, std::int64_t> witness;
  std::vector<PropagationRow> rows;
  std::size_t failures() const;
};

// Given a witness cable where Ord + 1 is multiplicative, checks the same for
// every target with q > 2p|tau| using the arc rules. Throws WitnessFails.
PropagationReport verify_mult_propagation(const KnotExpr& k, std::pair<std::int64_t, std::int64_t> witness,
                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& targets);

struct EngineOrds {
  std::optional<std::int64_t> a;  // gap formula, only for L-space knots
  std::optional<std::int64_t> b;  // arc rules on the outermost cable
  std::optional<std::int64_t> c;  // geometric curve
  std::vector<std::string> notes;
  std::optional<std::int64_t> consensus() const;
  bool agree() const;
  std::string provenance() const;
};

EngineOrds engine_ords(const KnotExpr& k);

struct InvariantReport {
  KnotExpr knot = KnotExpr::unknot();
  LaurentPoly alexander;
  bool lspace_knot = false;
  EngineOrds engines;
  std::optional<std::int64_t> ord;
  std::int64_t genus = 0;
  std::int64_t tau = 0;
  int epsilon = 0;
  std::optional<std::int64_t> bridge_lower_bound;  // Ord + 1
  std::optional<std::int64_t> bridge_index;
  std::optional<std::int64_t> braid_index;
  bool question_flag = false;  // Ord + 1 < b: candidate counterexample to Ord + 1 = br
  std::vector<std::string> flags;
};

InvariantReport bounds_report(const KnotExpr& k, const ExternalData* data = nullptr);

// Theorem reproduction suites over the standard sweeps.
struct SuiteResult {
  std::string name;
  std::vector<VerificationRecord> records;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

SuiteResult run_trefoil_suite(std::int64_t p_max, std::int64_t q_max, unsigned threads = 0);
SuiteResult run_mult_suite(std::int64_t torus_max, std::int64_t p_max, std::int64_t q_max, unsigned threads = 0);
SuiteResult run_bounds_suite(std::vector<VerificationRecord> records);
SuiteResult run_alex_bridge_suite(const ExternalData& data, std::int64_t torus_max, std::int64_t p_max,
                                  std::int64_t q_max, unsigned threads = 0);

nlohmann::ordered_json to_json(const VerificationRecord& r);
nlohmann::ordered_json to_json(const InvariantReport& r);
nlohmann::ordered_json to_json(const PropagationReport& r);

// JSON lines, one record per line, trailing newline.
std::string to_jsonl(const std::vector<VerificationRecord>& records);
// Columns: knot,p,q,ord_a,ord_b,ord_c,low,high,checks_passed,flags
std::string to_csv(const std::vector<VerificationRecord>& records);

}  // namespace knotord
