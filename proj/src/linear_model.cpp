#include "cdc/linear_model.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cdc {

const char* to_string(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::GreaterEqual:
      return ">=";
    case Sense::Equal:
      return "=";
  }
  return "?";
}

std::string Constraint::family() const { return name.substr(0, name.find('_')); }

LinearModel::LinearModel(std::vector<std::uint32_t> keys, bool binary)
    : keys_(std::move(keys)), objective_(keys_.size(), 1), binary_(keys_.size(), binary ? 1 : 0) {
  for (std::size_t j = 1; j < keys_.size(); ++j) {
    if (keys_[j - 1] >= keys_[j]) throw std::invalid_argument("LinearModel: keys must be strictly ascending");
  }
}

std::optional<std::uint32_t> LinearModel::position_of_key(std::uint32_t key) const {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys_.begin());
}

void LinearModel::relax() { std::fill(binary_.begin(), binary_.end(), 0); }

bool LinearModel::relaxed() const { return std::none_of(binary_.begin(), binary_.end(), [](char b) { return b; }); }

void LinearModel::add_constraint(Constraint c) {
  if (!c.coefs.empty() && c.coefs.size() != c.vars.size()) {
    throw std::invalid_argument("constraint " + c.name + ": coefficient count mismatch");
  }
  for (std::size_t i = 0; i < c.vars.size(); ++i) {
    if (c.vars[i] >= keys_.size()) throw std::invalid_argument("constraint " + c.name + ": unknown variable");
    if (i > 0 && c.vars[i - 1] >= c.vars[i]) throw std::invalid_argument("constraint " + c.name + ": unsorted variables");
  }
  if (!c.coefs.empty() && std::all_of(c.coefs.begin(), c.coefs.end(), [](std::int64_t a) { return a == 1; })) {
    c.coefs.clear();
  }
  constraints_.push_back(std::move(c));
}

void LinearModel::fix(std::uint32_t position, int value) {
  if (position >= keys_.size()) throw std::invalid_argument("fix: unknown variable");
  if (value != 0 && value != 1) throw std::invalid_argument("fix: value must be 0 or 1");
  const auto [it, inserted] = fixings_.emplace(position, value);
  if (!inserted && it->second != value) {
    throw std::invalid_argument("fix: " + var_name(position) + " already fixed to " + std::to_string(it->second));
  }
}

std::vector<std::pair<std::string, std::size_t>> LinearModel::census() const {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& c : constraints_) {
    const auto fam = c.family();
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == fam; });
    if (it == out.end()) {
      out.emplace_back(fam, 1);
    } else {
      ++it->second;
    }
  }
  return out;
}

std::size_t LinearModel::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : constraints_) n += c.vars.size();
  return n;
}

std::int64_t LinearModel::evaluate(std::span<const char> x) const {
  std::int64_t v = objective_constant_;
  for (std::size_t j = 0; j < keys_.size(); ++j) {
    if (x[j]) v += objective_[j];
  }
  return v;
}

std::vector<std::string> LinearModel::violations(std::span<const char> x) const {
  if (x.size() != keys_.size()) throw std::invalid_argument("violations: assignment has wrong length");
  std::vector<std::string> out;
  for (const auto& c : constraints_) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      if (x[c.vars[i]]) lhs += c.coef(i);
    }
    const bool ok = c.sense == Sense::LessEqual      ? lhs <= c.rhs
                    : c.sense == Sense::GreaterEqual ? lhs >= c.rhs
                                                     : lhs == c.rhs;
    if (!ok) out.push_back(c.name);
  }
  for (const auto& [j, value] : fixings_) {
    if ((x[j] != 0) != (value != 0)) out.push_back("fix_" + std::to_string(keys_[j]));
  }
  return out;
}

namespace {

void append_int(std::string& s, std::int64_t v) {
  char buf[24];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  s.append(buf, r.ptr);
}

void append_term(std::string& s, bool first, std::int64_t coef, std::uint32_t key) {
  if (coef < 0) {
    s += first ? "- " : " - ";
    coef = -coef;
  } else if (!first) {
    s += " + ";
  }
  if (coef != 1) {
    append_int(s, coef);
    s += ' ';
  }
  s += 'x';
  append_int(s, key);
}

}  // namespace

void write_lp(std::ostream& out, const LinearModel& m) {
  std::string line;
  if (m.objective_constant() != 0) {
    line = "\\ objective constant: ";
    append_int(line, m.objective_constant());
    out << line << '\n';
  }
  out << "Maximize\n";
  line = " obj:";
  bool first = true;
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    if (m.objective(j) == 0) continue;
    if (first) line += ' ';
    append_term(line, first, m.objective(j), m.key(j));
    first = false;
  }
  out << line << '\n';
  out << "Subject To\n";
  for (const auto& c : m.constraints()) {
    line = " ";
    line += c.name;
    line += ':';
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      if (i == 0) line += ' ';
      append_term(line, i == 0, c.coef(i), m.key(c.vars[i]));
    }
    if (c.vars.empty()) line += " 0";
    line += ' ';
    line += to_string(c.sense);
    line += ' ';
    append_int(line, c.rhs);
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  for (const auto& [j, value] : m.fixings()) {
    out << " fix_" << m.key(j) << ": x" << m.key(j) << " = " << value << '\n';
  }
  bool any_continuous = false;
  for (std::size_t j = 0; j < m.num_vars() && !any_continuous; ++j) any_continuous = !m.is_binary(j);
  if (any_continuous) {
    out << "Bounds\n";
    for (std::size_t j = 0; j < m.num_vars(); ++j) {
      if (!m.is_binary(j)) out << " 0 <= x" << m.key(j) << " <= 1\n";
    }
  }
  if (any_continuous ? !m.relaxed() : m.num_vars() > 0) {
    out << "Binary\n";
    for (std::size_t j = 0; j < m.num_vars(); ++j) {
      if (m.is_binary(j)) out << " x" << m.key(j) << '\n';
    }
  }
  out << "End\n";
}

std::string to_lp_text(const LinearModel& m) {
  std::ostringstream out;
  write_lp(out, m);
  return out.str();
}

namespace {

enum class Section { Preamble, Objective, Constraints, Bounds, Binary, Done };

struct Term {
  std::int64_t coef;
  std::uint32_t key;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("LP line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty()) fail(line, "bad integer '" + std::string(s) + "'");
  return v;
}

std::uint32_t parse_var(std::string_view s, std::size_t line) {
  if (s.size() < 2 || s[0] != 'x') fail(line, "bad variable '" + std::string(s) + "'");
  const auto v = parse_int(s.substr(1), line);
  if (v < 0 || v > UINT32_MAX) fail(line, "variable index out of range");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<Term> parse_terms(std::span<const std::string_view> toks, std::size_t line) {
  std::vector<Term> out;
  std::int64_t sign = 1;
  std::optional<std::int64_t> coef;
  bool expect_sign = false;
  for (auto t : toks) {
    if (t == "+" || t == "-") {
      if (coef) fail(line, "dangling coefficient");
      sign = t == "-" ? -1 : 1;
      expect_sign = false;
      continue;
    }
    if (expect_sign) fail(line, "missing operator between terms");
    if (t[0] == 'x') {
      const std::int64_t c = sign * (coef ? *coef : 1);
      if (c != 0) out.push_back({c, parse_var(t, line)});
      sign = 1;
      coef.reset();
      expect_sign = true;
    } else {
      if (coef) fail(line, "two coefficients in a row");
      coef = parse_int(t, line);
    }
  }
  if (coef && !(out.empty() && *coef == 0)) fail(line, "coefficient without a variable");
  return out;
}

}  // namespace

LinearModel parse_lp(std::istream& in) {
  struct RawRow {
    std::string name;
    std::vector<Term> terms;
    Sense sense;
    std::int64_t rhs;
    std::size_t line;
  };
  std::int64_t constant = 0;
  std::vector<Term> objective;
  std::vector<RawRow> rows;
  std::vector<std::uint32_t> continuous;
  std::vector<std::uint32_t> binary;
  Section section = Section::Preamble;
  std::string text;
  std::size_t line_no = 0;
  const std::string_view constant_tag = "\\ objective constant: ";

  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::string_view s(text);
    if (s.rfind(constant_tag, 0) == 0) {
      constant = parse_int(s.substr(constant_tag.size()), line_no);
      continue;
    }
    if (s.empty() || s[0] == '\\') continue;
    if (s == "Maximize") {
      section = Section::Objective;
      continue;
    }
    if (s == "Subject To") {
      section = Section::Constraints;
      continue;
    }
    if (s == "Bounds") {
      section = Section::Bounds;
      continue;
    }
    if (s == "Binary") {
      section = Section::Binary;
      continue;
    }
    if (s == "End") {
      section = Section::Done;
      continue;
    }
    auto toks = tokens(s);
    if (toks.empty()) continue;
    switch (section) {
      case Section::Objective: {
        if (toks[0] != "obj:") fail(line_no, "expected 'obj:'");
        objective = parse_terms(std::span(toks).subspan(1), line_no);
        break;
      }
      case Section::Constraints: {
        if (toks.size() < 3 || toks[0].back() != ':') fail(line_no, "expected '<name>: <terms> <sense> <rhs>'");
        const auto op = toks[toks.size() - 2];
        Sense sense;
        if (op == "<=") {
          sense = Sense::LessEqual;
        } else if (op == ">=") {
          sense = Sense::GreaterEqual;
        } else if (op == "=") {
          sense = Sense::Equal;
        } else {
          fail(line_no, "unknown sense '" + std::string(op) + "'");
        }
        rows.push_back({std::string(toks[0].substr(0, toks[0].size() - 1)),
                        parse_terms(std::span(toks).subspan(1, toks.size() - 3), line_no), sense,
                        parse_int(toks.back(), line_no), line_no});
        break;
      }
      case Section::Bounds: {
        if (toks.size() != 5 || toks[0] != "0" || toks[1] != "<=" || toks[3] != "<=" || toks[4] != "1") {
          fail(line_no, "expected '0 <= x <= 1'");
        }
        continuous.push_back(parse_var(toks[2], line_no));
        break;
      }
      case Section::Binary: {
        for (auto t : toks) binary.push_back(parse_var(t, line_no));
        break;
      }
      default:
        fail(line_no, "text outside a section");
    }
  }
  if (section != Section::Done) fail(line_no, "missing 'End'");

  std::vector<std::uint32_t> keys = continuous;
  keys.insert(keys.end(), binary.begin(), binary.end());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) fail(line_no, "variable declared twice");
  LinearModel m(keys, true);
  for (auto k : continuous) m.set_binary(*m.position_of_key(k), false);
  for (std::size_t j = 0; j < m.num_vars(); ++j) m.set_objective(j, 0);
  m.set_objective_constant(constant);

  const auto position = [&](std::uint32_t key, std::size_t line) {
    const auto p = m.position_of_key(key);
    if (!p) fail(line, "undeclared variable x" + std::to_string(key));
    return *p;
  };
  for (const auto& t : objective) m.set_objective(position(t.key, 0), t.coef);
  for (auto& r : rows) {
    if (r.name.rfind("fix_", 0) == 0) {
      if (r.terms.size() != 1 || r.terms[0].coef != 1 || r.sense != Sense::Equal) fail(r.line, "malformed fixing");
      m.fix(position(r.terms[0].key, r.line), static_cast<int>(r.rhs));
      continue;
    }
    std::sort(r.terms.begin(), r.terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    Constraint c;
    c.name = r.name;
    c.sense = r.sense;
    c.rhs = r.rhs;
    for (const auto& t : r.terms) {
      c.vars.push_back(position(t.key, r.line));
      c.coefs.push_back(t.coef);
    }
    m.add_constraint(std::move(c));
  }
  return m;
}

LinearModel parse_lp_text(const std::string& text) {
  std::istringstream in(text);
  return parse_lp(in);
}

}  // namespace cdc
