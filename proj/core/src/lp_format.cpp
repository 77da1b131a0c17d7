#include <cstdio>
#include <set>
#include <string>

#include "cutoffmatch/lp.hpp"

namespace cutoffmatch {
namespace {

bool allowed_name_char(char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  static const std::string extra = "!\"#$%&()/,.;?@_`'{}|~";
  return extra.find(c) != std::string::npos;
}

std::string sanitize(const std::string& raw, const std::string& fallback) {
  std::string name;
  for (char c : raw) name += allowed_name_char(c) ? c : '_';
  if (name.empty()) name = fallback;
  if ((name[0] >= '0' && name[0] <= '9') || name[0] == '.') name = "_" + name;
  if (name.size() > 200) name.resize(200);
  return name;
}

// Unique, format-safe names.
std::vector<std::string> unique_names(const std::vector<std::string>& raw, const std::string& prefix) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string name = sanitize(raw[i], prefix + std::to_string(i + 1));
    std::string candidate = name;
    for (int k = 2; used.count(candidate) > 0; ++k) candidate = name + "~" + std::to_string(k);
    used.insert(candidate);
    out.push_back(std::move(candidate));
  }
  return out;
}

struct Number {
  std::string text;
  bool exact = true;
};

Number render(const Rational& value) {
  if (auto dec = exact_decimal(value)) return {*dec, true};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value.get_d());
  return {buf, false};
}

// Linear expression split over lines; inexact coefficients are collected
// into `notes` for a preceding comment.
std::string expression(const std::vector<Term>& terms, const std::vector<std::string>& names,
                       std::vector<std::string>& notes) {
  std::string out;
  int on_line = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const Rational magnitude = abs(t.coef);
    const auto num = render(magnitude);
    if (!num.exact) notes.push_back(names[t.var] + " coefficient " + to_string(t.coef));
    if (i == 0) {
      if (t.coef < 0) out += "- ";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += num.text + " ";
    out += names[t.var];
    if (++on_line == 8 && i + 1 < terms.size()) {
      out += "\n   ";
      on_line = 0;
    }
  }
  return out;
}

void write_notes(std::string& out, const std::vector<std::string>& notes) {
  for (const auto& n : notes) out += "\\ exact " + n + "\n";
}

}  // namespace

std::string to_lp_format(const LinearProgram& lp, std::span<const VarKind> kinds) {
  std::vector<std::string> raw_vars;
  for (const auto& v : lp.variables()) raw_vars.push_back(v.name);
  const auto vars = unique_names(raw_vars, "v");
  std::vector<std::string> raw_rows;
  for (const auto& c : lp.constraints()) raw_rows.push_back(c.name);
  const auto rows = unique_names(raw_rows, "c");

  std::string out = "\\ cutoffmatch LP export\n";
  out += lp.direction() == Direction::kMaximize ? "Maximize\n" : "Minimize\n";
  {
    std::vector<std::string> notes;
    std::string body = expression(lp.objective(), vars, notes);
    if (lp.objective_constant() != 0) {
      const auto c = render(abs(lp.objective_constant()));
      if (!c.exact) notes.push_back("objective constant " + to_string(lp.objective_constant()));
      body += (body.empty() ? (lp.objective_constant() < 0 ? "- " : "")
                            : (lp.objective_constant() < 0 ? " - " : " + ")) +
              c.text;
    }
    write_notes(out, notes);
    out += " obj:" + (body.empty() ? std::string() : " " + body) + "\n";
  }

  out += "Subject To\n";
  for (int k = 0; k < lp.num_constraints(); ++k) {
    const auto& c = lp.constraints()[k];
    std::vector<std::string> notes;
    std::string body = expression(c.terms, vars, notes);
    if (body.empty()) {
      if (lp.num_variables() == 0) {
        out += "\\ " + rows[k] + ": empty row omitted\n";
        continue;
      }
      body = "0 " + vars[0];
    }
    const auto rhs = render(c.rhs);
    if (!rhs.exact) notes.push_back(rows[k] + " rhs " + to_string(c.rhs));
    write_notes(out, notes);
    const char* sense = c.sense == Sense::kLessEqual ? "<=" : c.sense == Sense::kEqual ? "=" : ">=";
    out += " " + rows[k] + ": " + body + " " + sense + " " + rhs.text + "\n";
  }

  out += "Bounds\n";
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto& v = lp.variable(j);
    const bool binary = j < static_cast<int>(kinds.size()) && kinds[j] == VarKind::kBinary;
    if (binary) continue;
    if (!v.lower && !v.upper) {
      out += " " + vars[j] + " free\n";
      continue;
    }
    if (v.lower && *v.lower == 0 && !v.upper) continue;  // default bounds
    std::vector<std::string> notes;
    std::string lo = "-inf";
    std::string hi = "+inf";
    if (v.lower) {
      const auto r = render(*v.lower);
      if (!r.exact) notes.push_back(vars[j] + " lower " + to_string(*v.lower));
      lo = r.text;
    }
    if (v.upper) {
      const auto r = render(*v.upper);
      if (!r.exact) notes.push_back(vars[j] + " upper " + to_string(*v.upper));
      hi = r.text;
    }
    write_notes(out, notes);
    out += " " + lo + " <= " + vars[j] + " <= " + hi + "\n";
  }

  std::string general;
  std::string binary;
  for (int j = 0; j < lp.num_variables() && j < static_cast<int>(kinds.size()); ++j) {
    if (kinds[j] == VarKind::kInteger) general += " " + vars[j] + "\n";
    if (kinds[j] == VarKind::kBinary) binary += " " + vars[j] + "\n";
  }
  if (!general.empty()) out += "General\n" + general;
  if (!binary.empty()) out += "Binary\n" + binary;
  out += "End\n";
  return out;
}

}  // namespace cutoffmatch
