#include "json_io.hpp"

#include <algorithm>
#include <json.hpp>

#include "error.hpp"

namespace locus {

using json = nlohmann::ordered_json;

namespace {

json parse_or_fail(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Status::parse_error, "malformed JSON");
  return doc;
}

uint64_t prime_key(const std::string& key) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    fail(Status::parse_error, "column key is not a prime: \"" + key + "\"");
  uint64_t p = std::stoull(key);
  bool prime = p >= 2;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) fail(Status::parse_error, "column key is not a prime: \"" + key + "\"");
  return p;
}

json threshold_to_json(const Threshold& t) {
  if (!t.has_value()) return nullptr;
  json out;
  if (*t == kInfiniteHeight)
    out["from"] = "inf";
  else
    out["from"] = *t;
  return out;
}

Threshold threshold_from_json(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_object() || !v.contains("from"))
    fail(Status::parse_error, "column rule must be null or {\"from\":...}");
  const json& from = v["from"];
  if (from.is_string() && from.get<std::string>() == "inf") return kInfiniteHeight;
  if (!from.is_number_unsigned())
    fail(Status::parse_error, "\"from\" must be a height or \"inf\"");
  return from.get<uint32_t>();
}

}  // namespace

LocusDoc doc_of(const EqLocus& z) {
  LocusDoc doc;
  doc.group = z.ctx->name;
  doc.op = z.op;
  doc.subject_key = z.subject_key;
  doc.subject = z.subject;
  doc.primes = z.primes;
  for (size_t i = 0; i < z.ctx->classes.size(); ++i) {
    LocusClassEntry entry;
    entry.label = z.ctx->labels[i];
    entry.order = z.ctx->classes[i].order;
    entry.rep = describe_subgroup(z.ctx->group, z.ctx->classes[i].rep);
    entry.columns.assign(z.column[i].begin(), z.column[i].end());
    entry.generic = z.generic[i];
    entry.height_one = z.height_one[i];
    doc.classes.push_back(std::move(entry));
  }
  return doc;
}

std::string locus_to_json(const LocusDoc& doc) {
  json out;
  out["group"] = doc.group;
  out["op"] = doc.op;
  if (!doc.subject_key.empty()) out[doc.subject_key] = doc.subject;
  out["classes"] = json::array();
  for (const LocusClassEntry& entry : doc.classes) {
    json cls;
    cls["label"] = entry.label;
    cls["order"] = entry.order;
    cls["rep"] = entry.rep;
    json columns;
    for (size_t k = 0; k < doc.primes.size(); ++k)
      columns[std::to_string(doc.primes[k])] = static_cast<bool>(entry.columns[k]);
    columns["generic"] = entry.generic;
    cls["columns"] = std::move(columns);
    cls["height_one"] = entry.height_one;
    out["classes"].push_back(std::move(cls));
  }
  return out.dump(2) + "\n";
}

LocusDoc locus_doc_from_json(const std::string& text) {
  json in = parse_or_fail(text);
  LocusDoc doc;
  try {
    if (!in.is_object() || !in.contains("group") || !in.contains("classes"))
      fail(Status::parse_error, "locus document needs \"group\" and \"classes\"");
    doc.group = in["group"].get<std::string>();
    doc.op = in.value("op", std::string{});
    for (const char* key : {"normal", "subgroup"}) {
      if (in.contains(key)) {
        doc.subject_key = key;
        doc.subject = in[key].get<std::string>();
      }
    }
    const json& classes = in["classes"];
    if (!classes.is_array() || classes.empty())
      fail(Status::parse_error, "\"classes\" must be a non-empty array");

    for (const auto& [key, value] : classes[0]["columns"].items()) {
      (void)value;
      if (key != "generic") doc.primes.push_back(prime_key(key));
    }
    std::sort(doc.primes.begin(), doc.primes.end());

    for (const json& cls : classes) {
      LocusClassEntry entry;
      entry.label = cls.value("label", std::string{});
      entry.order = cls.at("order").get<uint64_t>();
      entry.rep = cls.value("rep", std::string{});
      const json& columns = cls.at("columns");
      if (!columns.contains("generic"))
        fail(Status::parse_error, "columns must carry a \"generic\" entry");
      entry.generic = columns["generic"].get<bool>();
      for (uint64_t p : doc.primes) {
        std::string key = std::to_string(p);
        if (!columns.contains(key))
          fail(Status::parse_error, "classes disagree on the prime set");
        entry.columns.push_back(columns[key].get<bool>());
      }
      if (columns.size() != doc.primes.size() + 1)
        fail(Status::parse_error, "classes disagree on the prime set");
      entry.height_one = cls.at("height_one").get<bool>();
      if (entry.height_one) {
        bool all = entry.generic;
        for (bool b : entry.columns) all = all && b;
        if (!all)
          fail(Status::parse_error,
               "height-1 membership without every tower of the class");
      }
      if (entry.label.empty()) entry.label = "order " + std::to_string(entry.order);
      doc.classes.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    fail(Status::parse_error, std::string("locus document: ") + e.what());
  }
  return doc;
}

std::string chromatic_to_json(const ChromaticSubset& s) {
  json out;
  json columns;
  for (const auto& [p, t] : s.columns)
    columns[std::to_string(p)] = threshold_to_json(t);
  out["columns"] = std::move(columns);
  out["default"] = threshold_to_json(s.rest);
  out["generic"] = s.generic;
  return out.dump(2) + "\n";
}

ChromaticSubset chromatic_from_json(const std::string& text) {
  json in = parse_or_fail(text);
  ChromaticSubset s;
  try {
    if (!in.is_object() || !in.contains("columns"))
      fail(Status::parse_error, "chromatic subset needs \"columns\"");
    for (const auto& [key, value] : in["columns"].items())
      s.columns[prime_key(key)] = threshold_from_json(value);
    if (in.contains("default")) s.rest = threshold_from_json(in["default"]);
    s.generic = in.value("generic", false);
  } catch (const json::exception& e) {
    fail(Status::parse_error, std::string("chromatic subset: ") + e.what());
  }
  s.validate(Status::parse_error);
  return s;
}

std::string poset_subset_to_json(const FinitePoset& p, const PointSet& s) {
  json out;
  out["members"] = json::array();
  for (size_t i = 0; i < p.size(); ++i)
    if (s[i]) out["members"].push_back(p.names()[i]);
  out["closed"] = p.is_specialization_closed(s);
  return out.dump(2) + "\n";
}

PointSet poset_subset_from_json(const FinitePoset& p, const std::string& text) {
  json in = parse_or_fail(text);
  std::vector<std::string> members;
  try {
    if (!in.is_object() || !in.contains("members"))
      fail(Status::parse_error, "poset subset needs \"members\"");
    members = in["members"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    fail(Status::parse_error, std::string("poset subset: ") + e.what());
  }
  return point_set_of(p, members);
}

}  // namespace locus
