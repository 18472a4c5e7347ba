#include "zf/conjecture.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zf {

bool hypothesis_holds(Hypothesis h, const InvariantRow& row) {
  switch (h) {
    case Hypothesis::Connected:
      return row.connected && row.n >= 2;
    case Hypothesis::ClawfreeConnected:
      return row.connected && row.claw_free && row.n >= 2;
    case Hypothesis::DeltaGe3Connected:
      return row.connected && row.max_degree >= 3;
    case Hypothesis::Subcubic:
      return row.connected && row.cubic_or_less && !row.is_k4;
  }
  return false;
}

std::string hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::Connected: return "connected";
    case Hypothesis::ClawfreeConnected: return "clawfree-connected";
    case Hypothesis::DeltaGe3Connected: return "deltage3-connected";
    case Hypothesis::Subcubic: return "subcubic";
  }
  return "?";
}

Hypothesis parse_hypothesis(std::string_view name) {
  if (name == "connected") return Hypothesis::Connected;
  if (name == "clawfree-connected") return Hypothesis::ClawfreeConnected;
  if (name == "deltage3-connected") return Hypothesis::DeltaGe3Connected;
  if (name == "subcubic") return Hypothesis::Subcubic;
  throw std::invalid_argument("unknown hypothesis '" + std::string(name) +
                              "'");
}

namespace {

struct Point {
  long long x, y;
};

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational eval(const ConjectureRecord& r, long long x) {
  return r.m * Rational(x) + r.b;
}

void recount(ConjectureRecord& rec, const std::vector<InvariantRow>& rows) {
  rec.touch = 0;
  rec.support = 0;
  for (const auto& row : rows) {
    if (!hypothesis_holds(rec.hypothesis, row)) continue;
    ++rec.support;
    if (Rational(row_value(row, rec.lhs)) == eval(rec, row_value(row, rec.rhs)))
      ++rec.touch;
  }
}

bool simpler(const ConjectureRecord& a, const ConjectureRecord& b) {
  auto key = [](const ConjectureRecord& r) {
    return std::tuple(r.m.denominator(), std::abs(r.m.numerator()),
                      r.m.numerator(), r.b.denominator(),
                      std::abs(r.b.numerator()), r.b.numerator());
  };
  return key(a) < key(b);
}

}  // namespace

std::vector<ConjectureRecord> fit_linear_upper_bounds(
    const std::vector<InvariantRow>& rows, Hypothesis hypothesis,
    const std::string& lhs, const std::string& rhs) {
  std::vector<const InvariantRow*> selected;
  for (const auto& row : rows)
    if (hypothesis_holds(hypothesis, row)) selected.push_back(&row);
  if (selected.size() < 2)
    throw std::invalid_argument(
        "linear bound fitting needs at least two hypothesis rows");

  // one point per rhs value: the largest lhs seen there
  std::map<long long, long long> top;
  for (const auto* row : selected) {
    long long x = row_value(*row, rhs);
    long long y = row_value(*row, lhs);
    auto [it, fresh] = top.emplace(x, y);
    if (!fresh && y > it->second) it->second = y;
  }

  std::vector<ConjectureRecord> candidates;
  auto base = [&]() {
    ConjectureRecord rec;
    rec.hypothesis = hypothesis;
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.status = ConjectureStatus::HoldsOnCorpus;
    return rec;
  };

  if (top.size() == 1) {
    // degenerate vertical point set: only the constant bound applies
    ConjectureRecord rec = base();
    rec.m = Rational(0);
    rec.b = Rational(top.begin()->second);
    candidates.push_back(rec);
  } else {
    std::vector<Point> pts;
    for (auto [x, y] : top) pts.push_back({x, y});
    std::vector<Point> hull;
    for (const Point& p : pts) {
      while (hull.size() >= 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], p) >= 0)
        hull.pop_back();
      hull.push_back(p);
    }
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
      Rational m(hull[i + 1].y - hull[i].y, hull[i + 1].x - hull[i].x);
      if (m.denominator() > 4) continue;  // keep slopes with small denominators
      ConjectureRecord rec = base();
      rec.m = m;
      rec.b = Rational(hull[i].y) - m * Rational(hull[i].x);
      candidates.push_back(rec);
    }
  }

  for (auto& rec : candidates) recount(rec, rows);

  // drop duplicates and pointwise-dominated candidates
  std::vector<ConjectureRecord> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < candidates.size() && !drop; ++j) {
      if (i == j) continue;
      bool all_le = true, some_lt = false, identical = true;
      for (const auto* row : selected) {
        long long x = row_value(*row, rhs);
        Rational a = eval(candidates[j], x), b = eval(candidates[i], x);
        if (a > b) all_le = false;
        if (a < b) some_lt = true;
        if (a != b) identical = false;
      }
      if (identical) {
        drop = j < i;  // keep the first of an identical pair
      } else if (all_le && some_lt) {
        drop = true;  // j is pointwise at least as strong
      }
    }
    if (!drop) kept.push_back(candidates[i]);
  }

  std::sort(kept.begin(), kept.end(),
            [](const ConjectureRecord& a, const ConjectureRecord& b) {
              if (a.touch != b.touch) return a.touch > b.touch;
              if (a.support != b.support) return a.support > b.support;
              return simpler(a, b);
            });
  return kept;
}

ConjectureRecord check_conjecture(ConjectureRecord record,
                                  const std::vector<InvariantRow>& rows) {
  record.status = ConjectureStatus::HoldsOnCorpus;
  record.witness_id.clear();
  record.touch = 0;
  record.support = 0;
  for (const auto& row : rows) {
    if (!hypothesis_holds(record.hypothesis, row)) continue;
    ++record.support;
    Rational value(row_value(row, record.lhs));
    Rational bound = eval(record, row_value(row, record.rhs));
    if (value > bound && record.status != ConjectureStatus::Refuted) {
      record.status = ConjectureStatus::Refuted;
      record.witness_id = row.id;
    } else if (value == bound) {
      ++record.touch;
    }
  }
  return record;
}

std::string format_record(const ConjectureRecord& r) {
  std::ostringstream out;
  out << "hypothesis=" << hypothesis_name(r.hypothesis) << " lhs=" << r.lhs
      << " rhs=" << r.rhs << " m=" << to_string(r.m) << " b=" << to_string(r.b)
      << " touch=" << r.touch << " support=" << r.support << " status=";
  switch (r.status) {
    case ConjectureStatus::Unverified: out << "unverified"; break;
    case ConjectureStatus::HoldsOnCorpus: out << "holds-on-corpus"; break;
    case ConjectureStatus::Refuted:
      out << "refuted witness=" << r.witness_id;
      break;
  }
  return out.str();
}

namespace {

struct NamedStatement {
  std::string name;
  std::string ineq;
  std::string hyp_name;
  bool proven;
  bool (*hyp)(const InvariantRow&);
  long long (*bound)(const InvariantRow&);
  bool tree_census;
};

const NamedStatement kStatements[] = {
    {"clawfree-zbeta", "z<=beta", "clawfree-connected", true,
     [](const InvariantRow& r) {
       return r.connected && r.claw_free && r.n >= 2;
     },
     [](const InvariantRow& r) { return static_cast<long long>(r.beta); },
     false},
    {"z-le-beta-connected", "z<=beta", "connected", false,
     [](const InvariantRow& r) { return r.connected && r.n >= 2; },
     [](const InvariantRow& r) { return static_cast<long long>(r.beta); },
     false},
    {"degree-bound", "z<=(maxdeg-2)*beta+1", "deltage3-connected", true,
     [](const InvariantRow& r) { return r.connected && r.max_degree >= 3; },
     [](const InvariantRow& r) {
       return static_cast<long long>(r.max_degree - 2) * r.beta + 1;
     },
     true},
    {"delta3-bound", "z<=beta+1", "delta3-connected", true,
     [](const InvariantRow& r) { return r.connected && r.max_degree == 3; },
     [](const InvariantRow& r) { return static_cast<long long>(r.beta) + 1; },
     false},
    {"subcubic-alpha", "z<=alpha+1", "subcubic", false,
     [](const InvariantRow& r) {
       return r.connected && r.cubic_or_less && !r.is_k4;
     },
     [](const InvariantRow& r) { return static_cast<long long>(r.alpha) + 1; },
     false},
};

}  // namespace

NamedStatementReport check_named_statements(
    const std::vector<InvariantRow>& rows) {
  NamedStatementReport report;
  for (const auto& st : kStatements) {
    StatementResult res;
    res.name = st.name;
    res.statement = st.ineq;
    res.hypothesis = st.hyp_name;
    res.proven = st.proven;
    for (const auto& row : rows) {
      if (!st.hyp(row)) continue;
      ++res.support;
      long long bound = st.bound(row);
      if (row.z > bound) {
        if (res.holds) {
          res.holds = false;
          res.witness_id = row.id;
        }
      } else if (row.z == bound) {
        ++res.touch;
        res.equality_ids.push_back(row.id);
        if (st.tree_census) {
          if (row.is_tree) ++res.equality_trees;
          else ++res.equality_nontrees;
        }
      }
    }
    if (!res.holds) {
      if (st.proven) report.proven_theorem_violated = true;
      if (st.name == "subcubic-alpha") report.open_conjecture_refuted = true;
    }
    report.statements.push_back(std::move(res));
  }
  return report;
}

std::string format_report(const NamedStatementReport& report) {
  std::ostringstream out;
  for (const auto& st : report.statements) {
    out << "statement=" << st.name << " ineq=" << st.statement
        << " hypothesis=" << st.hypothesis << " proven=" << st.proven
        << " support=" << st.support << " touch=" << st.touch
        << " holds=" << st.holds;
    if (!st.holds) out << " witness=" << st.witness_id;
    if (st.name == "degree-bound")
      out << " equality_trees=" << st.equality_trees
          << " equality_nontrees=" << st.equality_nontrees;
    out << '\n';
  }
  for (const auto& st : report.statements) {
    if (st.holds) continue;
    if (st.proven)
      out << "THEOREM VIOLATION: " << st.name << " witness=" << st.witness_id
          << '\n';
    else if (st.name == "subcubic-alpha")
      out << "HEADLINE: open conjecture " << st.name
          << " refuted, witness=" << st.witness_id << '\n';
  }
  return out.str();
}

}  // namespace zf
