#include "garnier/algebra/serialize.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace garnier {

namespace {

void write_vars(std::ostream& os, const VarSetPtr& vars) {
  os << "vars:";
  if (vars)
    for (const auto& n : vars->names()) os << ' ' << n;
  os << '\n';
}

void write_terms(std::ostream& os, const MultiPoly& p) {
  for (const auto& t : p.terms()) {
    os << '[';
    for (std::size_t v = 0; v < p.nvars(); ++v) os << (v ? "," : "") << unsigned(t.mono.exp[v]);
    os << "]: " << t.coeff.get_str() << '\n';
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

VarSetPtr parse_vars(std::string_view line) {
  if (line.substr(0, 5) != "vars:") throw std::invalid_argument("canonical text: expected 'vars:' header");
  std::istringstream is{std::string(line.substr(5))};
  std::vector<std::string> names;
  for (std::string n; is >> n;) names.push_back(n);
  return VarSet::make(std::move(names));
}

Term parse_term(std::string_view line, std::size_t nvars) {
  if (line.empty() || line.front() != '[') throw std::invalid_argument("canonical text: expected '[' in term line");
  auto close = line.find("]:");
  if (close == std::string_view::npos) throw std::invalid_argument("canonical text: expected ']:' in term line");
  Term t;
  std::string_view exps = line.substr(1, close - 1);
  std::size_t v = 0;
  while (!exps.empty()) {
    auto comma = exps.find(',');
    std::string item(exps.substr(0, comma));
    if (v >= nvars) throw std::invalid_argument("canonical text: exponent vector too long");
    unsigned long e = std::stoul(item);
    if (e > 255) throw std::invalid_argument("canonical text: exponent exceeds 255");
    t.mono.exp[v++] = static_cast<std::uint8_t>(e);
    if (comma == std::string_view::npos) break;
    exps.remove_prefix(comma + 1);
  }
  if (v != nvars) throw std::invalid_argument("canonical text: exponent vector length mismatch");
  std::string_view coeff = line.substr(close + 2);
  while (!coeff.empty() && coeff.front() == ' ') coeff.remove_prefix(1);
  t.coeff = parse_scalar(coeff);
  return t;
}

MultiPoly parse_block(const std::vector<std::string_view>& lines, std::size_t begin, std::size_t end, const VarSetPtr& vars) {
  std::vector<Term> terms;
  for (std::size_t i = begin; i < end; ++i) terms.push_back(parse_term(lines[i], vars->size()));
  return MultiPoly::from_terms(vars, std::move(terms));
}

}  // namespace

std::string to_canonical_text(const MultiPoly& p) {
  std::ostringstream os;
  write_vars(os, p.vars());
  write_terms(os, p);
  return os.str();
}

std::string to_canonical_text(const RatFunc& r0) {
  const RatFunc r = r0.normalized();
  std::ostringstream os;
  write_vars(os, r.vars());
  os << "num:\n";
  write_terms(os, r.num());
  os << "den:\n";
  write_terms(os, r.den());
  return os.str();
}

MultiPoly parse_canonical_poly(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw std::invalid_argument("canonical text: empty input");
  VarSetPtr vars = parse_vars(lines[0]);
  return parse_block(lines, 1, lines.size(), vars);
}

RatFunc parse_canonical_ratfunc(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 3) throw std::invalid_argument("canonical text: truncated rational function");
  VarSetPtr vars = parse_vars(lines[0]);
  if (lines[1] != "num:") throw std::invalid_argument("canonical text: expected 'num:'");
  std::size_t den_at = 2;
  while (den_at < lines.size() && lines[den_at] != "den:") ++den_at;
  if (den_at == lines.size()) throw std::invalid_argument("canonical text: expected 'den:'");
  MultiPoly num = parse_block(lines, 2, den_at, vars);
  MultiPoly den = parse_block(lines, den_at + 1, lines.size(), vars);
  return RatFunc::quotient(std::move(num), den);
}

}  // namespace garnier
