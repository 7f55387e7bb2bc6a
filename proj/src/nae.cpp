#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "eulercount/errors.hpp"
#include "eulercount/reduction.hpp"

namespace eulercount {

namespace {

const char* role_name(NaeEdgeRole r) {
  switch (r) {
    case NaeEdgeRole::mate: return "mate";
    case NaeEdgeRole::clause_literal: return "clause-literal";
    case NaeEdgeRole::clause_s: return "clause-s";
    case NaeEdgeRole::literal_s: return "literal-s";
  }
  return "?";
}

// Appearance count per literal vertex index (0-based: 2(v-1) for v, 2(v-1)+1 for -v).
std::vector<std::uint32_t> appearances(const CnfInstance& cnf) {
  std::vector<std::uint32_t> count(2 * static_cast<std::size_t>(cnf.variables), 0);
  for (const auto& clause : cnf.clauses)
    for (Literal lit : clause) ++count[2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0)];
  return count;
}

}  // namespace

CnfInstance parse_dimacs(std::string_view text) {
  CnfInstance cnf;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> pending;
  std::size_t line_no = 0;

  auto finish_clause = [&](std::size_t line) {
    if (pending.size() != 3)
      throw MalformedClause("line " + std::to_string(line) + ": clause has " +
                            std::to_string(pending.size()) + " literals, expected 3");
    cnf.clauses.push_back({pending[0], pending[1], pending[2]});
    pending.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line[0] == 'c') continue;
    if (line[0] == '%') break;
    if (line[0] == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate header");
      char fmt[8] = {};
      unsigned long vars = 0, clauses = 0;
      std::string copy(line);
      if (std::sscanf(copy.c_str(), "p %7s %lu %lu", fmt, &vars, &clauses) != 3 ||
          std::string_view(fmt) != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      if (vars > 0x7FFFFFFF) throw ParseError(line_no, "too many variables");
      cnf.variables = static_cast<std::uint32_t>(vars);
      declared_clauses = clauses;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before header");

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc{} || ptr != line.data() + j)
        throw ParseError(line_no, "expected an integer literal, got '" +
                                      std::string(line.substr(i, j - i)) + "'");
      if (value == 0) {
        finish_clause(line_no);
      } else {
        if (static_cast<unsigned long>(std::labs(value)) > cnf.variables)
          throw ParseError(line_no, "literal " + std::to_string(value) + " out of range");
        pending.push_back(static_cast<Literal>(value));
      }
      i = j;
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (!pending.empty()) throw ParseError(line_no, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared_clauses)
    throw ParseError(line_no, "clause-count mismatch: declared " +
                                  std::to_string(declared_clauses) + ", found " +
                                  std::to_string(cnf.clauses.size()));
  validate_cnf(cnf);
  return cnf;
}

void validate_cnf(const CnfInstance& cnf) {
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    const auto& clause = cnf.clauses[c];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto var = static_cast<std::uint32_t>(std::abs(clause[i]));
      if (clause[i] == 0 || var > cnf.variables)
        throw MalformedClause("clause " + std::to_string(c + 1) + " mentions an unknown variable");
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs(clause[j]) == std::abs(clause[i]))
          throw MalformedClause("clause " + std::to_string(c + 1) + " repeats variable " +
                                std::to_string(var));
    }
  }
}

Count count_nae_assignments(const CnfInstance& cnf) {
  validate_cnf(cnf);
  if (cnf.variables > 40) throw InputError("too many variables for exhaustive NAE counting");
  std::uint64_t satisfying = 0;
  const std::uint64_t total = std::uint64_t{1} << cnf.variables;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto value = [&](Literal lit) {
      const bool x = (bits >> (std::abs(lit) - 1)) & 1;
      return lit > 0 ? x : !x;
    };
    const bool ok = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const auto& c) {
      const int trues = value(c[0]) + value(c[1]) + value(c[2]);
      return trues != 0 && trues != 3;
    });
    satisfying += ok;
  }
  return Count(static_cast<unsigned long>(satisfying));
}

std::uint32_t max_literal_appearances(const CnfInstance& cnf) {
  const auto count = appearances(cnf);
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

VertexId NaeGadget::literal_vertex(Literal lit) const {
  const auto var = static_cast<VertexId>(std::abs(lit));
  return lit > 0 ? 2 * var - 1 : 2 * var;
}

VertexId NaeGadget::clause_vertex(std::size_t clause) const {
  return 2 * cnf.variables + 1 + static_cast<VertexId>(clause);
}

VertexId NaeGadget::spare_vertex() const {
  return 2 * cnf.variables + static_cast<VertexId>(cnf.clauses.size()) + 1;
}

std::vector<std::string> NaeGadget::comment_lines() const {
  std::vector<std::string> lines;
  for (std::uint32_t v = 1; v <= cnf.variables; ++v) {
    const auto lit = static_cast<Literal>(v);
    lines.push_back("literal " + std::to_string(literal_vertex(lit)) + ' ' + std::to_string(lit));
    lines.push_back("literal " + std::to_string(literal_vertex(-lit)) + ' ' +
                    std::to_string(-lit));
  }
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c)
    lines.push_back("clause " + std::to_string(clause_vertex(c)) + ' ' + std::to_string(c + 1));
  lines.push_back("spare " + std::to_string(spare_vertex()));
  lines.push_back("p " + std::to_string(p));
  for (std::size_t e = 0; e < role.size(); ++e)
    lines.push_back("role " + std::to_string(e) + ' ' + role_name(role[e]));
  return lines;
}

NaeGadget build_nae_gadget(const CnfInstance& cnf, std::uint64_t p) {
  validate_cnf(cnf);
  const std::uint32_t most = max_literal_appearances(cnf);
  if (p == 0) {
    p = next_odd_prime(most);
  } else {
    if (p % 2 == 0 || !is_prime(p))
      throw InputError("p = " + std::to_string(p) + " is not an odd prime");
    if (p <= most)
      throw PrimeTooSmall("p = " + std::to_string(p) + " does not exceed the " +
                          std::to_string(most) + " appearances of the most frequent literal");
  }

  NaeGadget gadget{cnf, p, {}, {}};
  std::vector<Edge> edges;
  auto add = [&](VertexId a, VertexId b, NaeEdgeRole r) {
    edges.push_back({a, b});
    gadget.role.push_back(r);
  };
  for (std::uint32_t v = 1; v <= cnf.variables; ++v)
    for (std::uint64_t i = 0; i < p; ++i) add(2 * v - 1, 2 * v, NaeEdgeRole::mate);
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    for (Literal lit : cnf.clauses[c])
      add(gadget.clause_vertex(c), gadget.literal_vertex(lit), NaeEdgeRole::clause_literal);
    add(gadget.clause_vertex(c), gadget.spare_vertex(), NaeEdgeRole::clause_s);
  }
  const auto count = appearances(cnf);
  for (std::size_t idx = 0; idx < count.size(); ++idx) {
    const VertexId literal = static_cast<VertexId>(idx + 1);
    for (std::uint64_t i = count[idx]; i < p; ++i)
      add(literal, gadget.spare_vertex(), NaeEdgeRole::literal_s);
  }
  gadget.graph = Multigraph(gadget.spare_vertex(), std::move(edges));
  return gadget;
}

NaeReport verify_nae_congruence(const CnfInstance& cnf, std::uint64_t p,
                                const EngineOptions& options) {
  const NaeGadget gadget = build_nae_gadget(cnf, p);
  NaeReport report{gadget.p, 0, 0, 0, false, false};
  report.eo_count = count_eulerian_orientations(gadget.graph, options, OrbEngine::bundled);
  std::vector<bool> mate(gadget.role.size());
  for (std::size_t e = 0; e < mate.size(); ++e) mate[e] = gadget.role[e] == NaeEdgeRole::mate;
  report.unanimous_count = count_orientations_with_unanimous_bundles(gadget.graph, mate, options);
  report.nae_count = count_nae_assignments(cnf);
  report.congruent = reduce_mod(report.eo_count, gadget.p) == reduce_mod(report.nae_count, gadget.p);
  report.exact_special = report.unanimous_count == report.nae_count;
  return report;
}

}  // namespace eulercount
