#include "cbasis/report.hpp"

#include <ostream>
#include <sstream>

#include "cbasis/enumerate.hpp"
#include "cbasis/freudenthal.hpp"

namespace cbasis {

namespace {

void write_mu(std::ostream& os, const EpsVector& mu, char open, char close) {
  os << open;
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ',';
    os << mu[i];
  }
  os << close;
}

}  // namespace

void write_census_json(std::ostream& os, int ell, const std::vector<int>& lambda, int depth,
                       const GradedCharacter& g) {
  os << "{\"ell\":" << ell << ",\"lambda\":";
  os << '[';
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ',';
    os << lambda[i];
  }
  os << ']';
  os << ",\"depth\":" << depth << ",\"entries\":[";
  bool first = true;
  for (const auto& [key, count] : g.entries()) {
    if (!first) os << ',';
    first = false;
    os << "{\"d\":" << key.first << ",\"mu\":";
    write_mu(os, key.second, '[', ']');
    os << ",\"count\":" << count << '}';
  }
  os << "]}\n";
}

void write_census_csv(std::ostream& os, int ell, const GradedCharacter& g) {
  os << 'd';
  for (int i = 1; i <= ell; ++i) os << ",mu" << i;
  os << ",count\n";
  for (const auto& [key, count] : g.entries()) {
    os << key.first;
    for (int x : key.second) os << ',' << x;
    os << ',' << count << '\n';
  }
}

void write_census_text(std::ostream& os, const GradedCharacter& g) {
  for (const auto& [key, count] : g.entries()) {
    os << "d=" << key.first << " mu=";
    write_mu(os, key.second, '(', ')');
    os << " count=" << count << '\n';
  }
  os << "total entries: " << g.size() << '\n';
  for (const auto& [d, c] : g.totals_by_depth()) os << "dim at d=" << d << ": " << c << '\n';
}

VerifyResult run_verify(const HighestWeight& L, int depth) {
  const SemiInfiniteBasis basis = enumerate_semi_infinite(L, depth);
  const GradedCharacter oracle = character_table(L, depth);

  std::ostringstream os;
  os << "verify ell=" << L.ell() << " lambda=";
  write_mu(os, L.k, '[', ']');
  os << " depth=" << depth << '\n';
  os << "entries: basis=" << basis.census.size() << " oracle=" << oracle.size() << '\n';
  auto bt = basis.census.totals_by_depth();
  auto ot = oracle.totals_by_depth();
  for (long long d = 0; d <= depth; ++d) {
    const long long b = bt.count(d) ? bt.at(d) : 0;
    const long long o = ot.count(d) ? ot.at(d) : 0;
    os << "d=" << d << ": basis_total=" << b << " oracle_total=" << o << '\n';
  }
  if (auto dec = first_total_decrease(oracle))
    os << "note: oracle totals decrease at depth " << *dec << '\n';

  VerifyResult res;
  if (auto miss = first_mismatch(basis.census, oracle)) {
    os << "first mismatch: d=" << miss->first << " mu=";
    write_mu(os, miss->second, '(', ')');
    os << " basis=" << basis.census.count(miss->first, miss->second)
       << " oracle=" << oracle.count(miss->first, miss->second) << '\n';
    os << "graded characters identical: MISMATCH\n";
    res.ok = false;
  } else {
    os << "graded characters identical: OK\n";
    res.ok = true;
  }
  res.report = os.str();
  return res;
}

}  // namespace cbasis
