#pragma once

// Linear upper-bound fitting over invariant tables, touch-count ranking,
// and verification of the named zero-forcing/vertex-cover statements.

#include <string>
#include <vector>

#include "zf/invariants.hpp"
#include "zf/rational.hpp"

namespace zf {

/// The fixed hypothesis classes conjectures range over. The two classes
/// that mirror statements about "nontrivial" graphs require n >= 2.
enum class Hypothesis {
  Connected,           // connected, n >= 2
  ClawfreeConnected,   // connected and claw-free, n >= 2
  DeltaGe3Connected,   // connected with max degree >= 3
  Subcubic,            // connected, max degree <= 3, not K_4
};

bool hypothesis_holds(Hypothesis h, const InvariantRow& row);
std::string hypothesis_name(Hypothesis h);
Hypothesis parse_hypothesis(std::string_view name);

enum class ConjectureStatus { Unverified, HoldsOnCorpus, Refuted };

/// A candidate inequality lhs <= m * rhs + b over a hypothesis class.
struct ConjectureRecord {
  Hypothesis hypothesis = Hypothesis::Connected;
  std::string lhs;
  std::string rhs;
  Rational m;
  Rational b;
  int touch = 0;    // rows meeting the bound with equality
  int support = 0;  // rows satisfying the hypothesis
  ConjectureStatus status = ConjectureStatus::Unverified;
  std::string witness_id;  // refuting row, when refuted
};

/// Fits candidate upper bounds as the upper convex hull of the point set
/// {(rhs(G), lhs(G))} over the hypothesis rows. Each hull edge gives an
/// exact rational (m, b), tight on at least two corpus points; slopes are
/// filtered to denominator <= 4, dominated candidates are dropped, and the
/// result is ranked by (touch desc, support desc, simpler coefficients).
/// A degenerate corpus with a single rhs value yields only the constant
/// bound lhs <= max(lhs). Requires at least two hypothesis rows.
std::vector<ConjectureRecord> fit_linear_upper_bounds(
    const std::vector<InvariantRow>& rows, Hypothesis hypothesis,
    const std::string& lhs, const std::string& rhs);

/// Re-verifies a record against a corpus: HoldsOnCorpus or Refuted with the
/// first witness in corpus order; the touch count is recomputed.
ConjectureRecord check_conjecture(ConjectureRecord record,
                                  const std::vector<InvariantRow>& rows);

std::string format_record(const ConjectureRecord& record);

/// One named statement checked over a corpus.
struct StatementResult {
  std::string name;
  std::string statement;       // human-readable inequality
  std::string hypothesis;      // human-readable class
  bool proven = false;         // violation means an implementation bug
  bool holds = true;
  std::string witness_id;
  int support = 0;
  int touch = 0;               // equality census
  std::vector<std::string> equality_ids;
  int equality_trees = 0;      // degree-bound statement only
  int equality_nontrees = 0;
};

struct NamedStatementReport {
  std::vector<StatementResult> statements;
  bool proven_theorem_violated = false;
  bool open_conjecture_refuted = false;
};

/// Checks, over the given rows: the claw-free bound Z <= beta (proven), the
/// same inequality over all nontrivial connected graphs (expected to fail,
/// reported informationally), the degree bound Z <= (Delta-2)beta + 1
/// (proven, with a tree census of its equality cases), its Delta = 3 form
/// Z <= beta + 1 (proven), and the open subcubic bound Z <= alpha + 1
/// (a refutation is a headline result, flagged loudly).
NamedStatementReport check_named_statements(
    const std::vector<InvariantRow>& rows);

std::string format_report(const NamedStatementReport& report);

}  // namespace zf
