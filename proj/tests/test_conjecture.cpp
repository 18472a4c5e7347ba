#include "doctest.h"

#include "zf/conjecture.hpp"
#include "zf/enumerate.hpp"
#include "zf/families.hpp"
#include "zf/graph6.hpp"

using namespace zf;

namespace {

std::vector<InvariantRow> corpus_rows(int max_n) {
  std::vector<InvariantRow> rows;
  for (int n = 2; n <= max_n; ++n)
    for (const Graph& g : connected_graphs(n))
      rows.push_back(compute_invariants(g, serialize_graph6(g)));
  return rows;
}

const InvariantRow* find_row(const std::vector<InvariantRow>& rows,
                             const Graph& g) {
  // corpus labels may differ from the generator's, so match up to iso
  std::uint64_t key = canonical_key(g);
  for (const auto& row : rows)
    if (row.n == g.order() && canonical_key(parse_graph6(row.id)) == key)
      return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("invariant rows") {
  InvariantRow claw = compute_invariants(star(3), "claw");
  CHECK(claw.n == 4);
  CHECK(claw.max_degree == 3);
  CHECK(claw.alpha == 3);
  CHECK(claw.beta == 1);
  CHECK(claw.z == 2);
  CHECK(!claw.claw_free);
  CHECK(claw.connected);
  CHECK(claw.is_tree);

  InvariantRow c5 = compute_invariants(cycle(5), "c5");
  CHECK(c5.n == 5);
  CHECK(c5.alpha == 2);
  CHECK(c5.beta == 3);
  CHECK(c5.z == 2);
  CHECK(c5.claw_free);

  InvariantRow k4 = compute_invariants(complete(4), "k4");
  CHECK(k4.is_k4);
  CHECK(k4.z == 3);
  CHECK(k4.alpha == 1);
  CHECK(!compute_invariants(complete(5), "k5").is_k4);
  CHECK(!compute_invariants(cycle(4), "c4").is_k4);
}

TEST_CASE("invariant csv") {
  CHECK(invariant_csv_header() ==
        "id,n,max_degree,min_degree,alpha,beta,z,connected,claw_free,"
        "cubic_or_less,is_k4,is_tree");
  InvariantRow row = compute_invariants(star(3), "claw");
  CHECK(to_csv_row(row) == "claw,4,3,1,3,1,2,1,0,1,0,1");
}

TEST_CASE("caro-pepper bound") {
  // construction 2 with k cliques K_2: (12k-1)/5, strictly above 2k
  for (int k = 3; k <= 8; ++k) {
    Graph g = construction2(k, std::vector<int>(static_cast<std::size_t>(k), 2));
    Rational bound = caro_pepper_bound(g);
    CHECK(bound == Rational(12 * k - 1, 5));
    CHECK(Rational(2 * k) < bound);
  }
  // K_n: Delta = delta = n-1 gives ((n-3)n + 2)/(n-2) = n-1, i.e. Z(K_n)
  for (int n : {3, 5, 8})
    CHECK(caro_pepper_bound(complete(n)) == Rational(n - 1));
  for (int n : {3, 4, 7}) CHECK(caro_pepper_bound(cycle(n)) == Rational(2));
  CHECK(caro_pepper_bound(complete(2)) == Rational(1));
  CHECK_THROWS_AS(caro_pepper_bound(Graph(3, {{0, 1}})), HypothesisError);
  CHECK_THROWS_AS(caro_pepper_bound(Graph(1, {})), HypothesisError);
}

TEST_CASE("fit recovers collinear data") {
  std::vector<InvariantRow> rows(2);
  rows[0].id = "a";
  rows[0].n = 2;
  rows[0].connected = true;
  rows[0].z = 1;
  rows[0].beta = 1;
  rows[0].alpha = 1;
  rows[1].id = "b";
  rows[1].n = 3;
  rows[1].connected = true;
  rows[1].z = 2;
  rows[1].beta = 2;
  rows[1].alpha = 1;
  auto recs = fit_linear_upper_bounds(rows, Hypothesis::Connected, "z", "beta");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].m == Rational(1));
  CHECK(recs[0].b == Rational(0));
  CHECK(recs[0].touch == 2);
}

TEST_CASE("fit degenerate vertical corpus emits the constant bound") {
  std::vector<InvariantRow> rows(3);
  for (int i = 0; i < 3; ++i) {
    rows[static_cast<std::size_t>(i)].id = std::to_string(i);
    rows[static_cast<std::size_t>(i)].n = 4;
    rows[static_cast<std::size_t>(i)].connected = true;
    rows[static_cast<std::size_t>(i)].beta = 2;
    rows[static_cast<std::size_t>(i)].z = i + 1;
  }
  auto recs = fit_linear_upper_bounds(rows, Hypothesis::Connected, "z", "beta");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].m == Rational(0));
  CHECK(recs[0].b == Rational(3));
  CHECK(recs[0].touch == 1);
}

TEST_CASE("fit requires two hypothesis rows") {
  std::vector<InvariantRow> rows(1);
  rows[0].connected = true;
  rows[0].n = 2;
  CHECK_THROWS_AS(
      fit_linear_upper_bounds(rows, Hypothesis::Connected, "z", "beta"),
      std::invalid_argument);
}

TEST_CASE("fit over the claw-free corpus recovers z <= beta first") {
  auto rows = corpus_rows(6);
  auto recs = fit_linear_upper_bounds(rows, Hypothesis::ClawfreeConnected,
                                      "z", "beta");
  REQUIRE(!recs.empty());
  CHECK(recs[0].m == Rational(1));
  CHECK(recs[0].b == Rational(0));
  CHECK(recs[0].touch >= 2);
  // every emitted record really holds on its fitting corpus
  for (const auto& rec : recs) {
    ConjectureRecord verified = check_conjecture(rec, rows);
    CHECK(verified.status == ConjectureStatus::HoldsOnCorpus);
    CHECK(verified.touch == rec.touch);
  }
}

TEST_CASE("subcubic fit includes z <= alpha + 1") {
  auto rows = corpus_rows(6);
  auto recs =
      fit_linear_upper_bounds(rows, Hypothesis::Subcubic, "z", "alpha");
  bool found = false;
  for (const auto& rec : recs)
    if (rec.m == Rational(1) && rec.b == Rational(1)) found = true;
  CHECK(found);
}

TEST_CASE("checking refutes z <= beta over all connected graphs at the claw") {
  auto rows = corpus_rows(5);
  ConjectureRecord rec;
  rec.hypothesis = Hypothesis::Connected;
  rec.lhs = "z";
  rec.rhs = "beta";
  rec.m = Rational(1);
  rec.b = Rational(0);
  ConjectureRecord out = check_conjecture(rec, rows);
  CHECK(out.status == ConjectureStatus::Refuted);
  Graph witness = parse_graph6(out.witness_id);
  CHECK(witness.order() == 4);
  CHECK(witness.max_degree() == 3);
  CHECK(witness.edge_count() == 3);  // the claw

  rec.hypothesis = Hypothesis::ClawfreeConnected;
  CHECK(check_conjecture(rec, rows).status ==
        ConjectureStatus::HoldsOnCorpus);
}

TEST_CASE("named statements over the small corpus") {
  auto rows = corpus_rows(6);
  NamedStatementReport report = check_named_statements(rows);
  CHECK(!report.proven_theorem_violated);
  CHECK(!report.open_conjecture_refuted);

  const StatementResult* clawfree_bound = nullptr;
  const StatementResult* variant = nullptr;
  const StatementResult* degree_bound = nullptr;
  const StatementResult* corollary = nullptr;
  const StatementResult* alpha = nullptr;
  for (const auto& st : report.statements) {
    if (st.name == "clawfree-zbeta") clawfree_bound = &st;
    if (st.name == "z-le-beta-connected") variant = &st;
    if (st.name == "degree-bound") degree_bound = &st;
    if (st.name == "delta3-bound") corollary = &st;
    if (st.name == "subcubic-alpha") alpha = &st;
  }
  REQUIRE(clawfree_bound);
  REQUIRE(variant);
  REQUIRE(degree_bound);
  REQUIRE(corollary);
  REQUIRE(alpha);

  CHECK(clawfree_bound->holds);
  CHECK(clawfree_bound->proven);
  CHECK(clawfree_bound->touch > 0);

  CHECK(!variant->holds);
  Graph witness = parse_graph6(variant->witness_id);
  CHECK(witness.order() == 4);
  CHECK(witness.edge_count() == 3);
  CHECK(witness.max_degree() == 3);

  CHECK(degree_bound->holds);
  // the star census: K_{1,3} .. K_{1,5} reach the bound and are trees
  const InvariantRow* k13 = find_row(rows, star(3));
  REQUIRE(k13);
  bool k13_in_census = false;
  for (const auto& id : degree_bound->equality_ids)
    if (id == k13->id) k13_in_census = true;
  CHECK(k13_in_census);
  CHECK(degree_bound->equality_trees > 0);

  CHECK(corollary->holds);
  const InvariantRow* k23 = find_row(rows, complete_bipartite(2, 3));
  REQUIRE(k23);
  bool k23_in_census = false;
  for (const auto& id : corollary->equality_ids)
    if (id == k23->id) k23_in_census = true;
  CHECK(k23_in_census);

  CHECK(alpha->holds);
  CHECK(!alpha->proven);
}

TEST_CASE("report text formats") {
  auto rows = corpus_rows(4);
  NamedStatementReport report = check_named_statements(rows);
  std::string text = format_report(report);
  CHECK(text.find("statement=clawfree-zbeta") != std::string::npos);
  CHECK(text.find("THEOREM VIOLATION") == std::string::npos);
  CHECK(text.find("statement=z-le-beta-connected") != std::string::npos);
  CHECK(text.find("witness=") != std::string::npos);

  ConjectureRecord rec;
  rec.lhs = "z";
  rec.rhs = "beta";
  rec.m = Rational(1, 2);
  rec.b = Rational(3);
  rec.status = ConjectureStatus::HoldsOnCorpus;
  CHECK(format_record(rec).find("m=1/2") != std::string::npos);
}

TEST_CASE("hypothesis names round trip") {
  for (Hypothesis h :
       {Hypothesis::Connected, Hypothesis::ClawfreeConnected,
        Hypothesis::DeltaGe3Connected, Hypothesis::Subcubic})
    CHECK(parse_hypothesis(hypothesis_name(h)) == h);
  CHECK_THROWS_AS(parse_hypothesis("nope"), std::invalid_argument);
}
