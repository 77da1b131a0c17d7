#include "cutoffmatch/instance_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cutoffmatch {

using nlohmann::json;
using nlohmann::ordered_json;

InputError::InputError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Error anchored at the first occurrence of "token" (quoted) in the text.
[[noreturn]] void fail_at(std::string_view text, const std::string& token, const std::string& message) {
  const auto at = token.empty() ? std::string_view::npos : text.find("\"" + token + "\"");
  if (at == std::string_view::npos) throw InputError(message);
  const auto [line, column] = position_of(text, at);
  throw InputError(message, line, column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    throw InputError("malformed JSON: " + what, line, column);
  }
}

struct Reader {
  std::string_view text;

  [[noreturn]] void fail(const std::string& path, const std::string& message,
                         const std::string& near = "") const {
    fail_at(text, near, path + ": " + message);
  }

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
  }

  std::string string(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  std::vector<std::string> strings(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(string(v[i], path + "/" + std::to_string(i)));
    return out;
  }

  Rational rational(const json& v, const std::string& path, const std::string& near) const {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const std::invalid_argument&) {
        fail(path, "not a rational number: " + v.get<std::string>(), near);
      }
    }
    if (v.is_number_float()) fail(path, "write fractional numbers as strings, e.g. \"7/10\"", near);
    fail(path, "expected a rational number", near);
  }
};

}  // namespace

InstanceSpec parse_instance_spec(std::string_view text) {
  const json doc = parse_json(text);
  Reader r{text};
  if (!doc.is_object()) r.fail("/", "expected an object");
  InstanceSpec spec;
  spec.applicants = r.strings(r.field(doc, "applicants", ""), "/applicants");

  const auto& projects = r.field(doc, "projects", "");
  if (!projects.is_array()) r.fail("/projects", "expected an array");
  for (std::size_t i = 0; i < projects.size(); ++i) {
    const std::string path = "/projects/" + std::to_string(i);
    const auto& p = projects[i];
    ProjectSpec project;
    project.id = r.string(r.field(p, "id", path), path + "/id");
    const auto& cap = r.field(p, "capacity", path);
    if (!cap.is_number_integer()) r.fail(path + "/capacity", "expected an integer", project.id);
    project.capacity = cap.get<long>();
    if (p.contains("prefs")) project.prefs = r.strings(p["prefs"], path + "/prefs");
    spec.projects.push_back(std::move(project));
  }

  const auto& supervisors = r.field(doc, "supervisors", "");
  if (!supervisors.is_array()) r.fail("/supervisors", "expected an array");
  for (std::size_t i = 0; i < supervisors.size(); ++i) {
    const std::string path = "/supervisors/" + std::to_string(i);
    const auto& s = supervisors[i];
    SupervisorSpec sup;
    sup.id = r.string(r.field(s, "id", path), path + "/id");
    sup.budget = r.rational(r.field(s, "budget", path), path + "/budget", sup.id);
    if (s.contains("projects")) sup.projects = r.strings(s["projects"], path + "/projects");
    spec.supervisors.push_back(std::move(sup));
  }

  if (doc.contains("applicant_prefs")) {
    const auto& prefs = doc["applicant_prefs"];
    if (!prefs.is_object()) r.fail("/applicant_prefs", "expected an object");
    for (const auto& [a, list] : prefs.items()) {
      spec.applicant_prefs[a] = r.strings(list, "/applicant_prefs/" + a);
    }
  }
  return spec;
}

Instance parse_instance(std::string_view text) {
  auto result = validate_instance(parse_instance_spec(text));
  if (!result.ok()) {
    const auto& v = result.errors.front();
    std::string message = "invalid instance: [" + v.rule + "] " + v.message;
    if (result.errors.size() > 1) {
      message += " (and " + std::to_string(result.errors.size() - 1) + " more)";
    }
    fail_at(text, v.entity, message);
  }
  return std::move(*result.instance);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string instance_to_json(const InstanceSpec& spec) {
  ordered_json doc;
  doc["applicants"] = spec.applicants;
  doc["projects"] = ordered_json::array();
  for (const auto& p : spec.projects) {
    doc["projects"].push_back({{"id", p.id}, {"capacity", p.capacity}, {"prefs", p.prefs}});
  }
  doc["supervisors"] = ordered_json::array();
  for (const auto& s : spec.supervisors) {
    const auto budget = exact_decimal(s.budget).value_or(to_string(s.budget));
    doc["supervisors"].push_back({{"id", s.id}, {"budget", budget}, {"projects", s.projects}});
  }
  // Applicant order, not map order.
  doc["applicant_prefs"] = ordered_json::object();
  for (const auto& a : spec.applicants) {
    auto it = spec.applicant_prefs.find(a);
    doc["applicant_prefs"][a] = it == spec.applicant_prefs.end() ? std::vector<std::string>{} : it->second;
  }
  return doc.dump(2) + "\n";
}

std::string instance_to_json(const Instance& inst) { return instance_to_json(inst.to_spec()); }

Matching parse_matching(const Instance& inst, std::string_view text) {
  const json doc = parse_json(text);
  Reader r{text};
  const json* pairs = &doc;
  if (doc.is_object()) pairs = &r.field(doc, "pairs", "");
  if (!pairs->is_array()) r.fail("/pairs", "expected an array of pairs");

  std::vector<std::pair<int, int>> index_pairs;
  for (std::size_t i = 0; i < pairs->size(); ++i) {
    const std::string path = "/pairs/" + std::to_string(i);
    const auto& entry = (*pairs)[i];
    std::string a;
    std::string p;
    if (entry.is_array()) {
      if (entry.size() != 2) r.fail(path, "expected [applicant, project]");
      a = r.string(entry[0], path + "/0");
      p = r.string(entry[1], path + "/1");
    } else {
      a = r.string(r.field(entry, "applicant", path), path + "/applicant");
      p = r.string(r.field(entry, "project", path), path + "/project");
    }
    const auto ai = inst.find_applicant(a);
    if (!ai) r.fail(path, "unknown applicant " + a, a);
    const auto pi = inst.find_project(p);
    if (!pi) r.fail(path, "unknown project " + p, p);
    index_pairs.emplace_back(*ai, *pi);
  }
  try {
    return Matching::from_pairs(inst.num_applicants(), inst.num_projects(), index_pairs);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid matching: ") + e.what());
  }
}

Matching load_matching(const Instance& inst, const std::string& path) {
  return parse_matching(inst, read_file(path));
}

TargetProfile parse_targets(const Instance& inst, std::string_view text) {
  const json doc = parse_json(text);
  Reader r{text};
  const auto& list = r.field(doc, "targets", "");
  if (!list.is_array()) r.fail("/targets", "expected an array");
  TargetProfile targets;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/targets/" + std::to_string(i);
    const auto& e = list[i];
    const auto s = r.string(r.field(e, "supervisor", path), path + "/supervisor");
    const auto p = r.string(r.field(e, "project", path), path + "/project");
    const auto si = inst.find_supervisor(s);
    if (!si) r.fail(path, "unknown supervisor " + s, s);
    const auto pi = inst.find_project(p);
    if (!pi) r.fail(path, "unknown project " + p, p);
    if (!targets.emplace(std::pair{*si, *pi}, r.rational(r.field(e, "t", path), path + "/t", s)).second) {
      r.fail(path, "duplicate target for " + s + "/" + p, s);
    }
  }
  return targets;
}

TargetProfile load_targets(const Instance& inst, const std::string& path) {
  return parse_targets(inst, read_file(path));
}

}  // namespace cutoffmatch
