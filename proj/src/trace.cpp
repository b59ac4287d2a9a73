// Copyright 2026 The fairdiv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Text and JSON encodings of procedure traces.
//
// The text form is whitespace-delimited, so it needs object labels without
// whitespace or any of "{}[],="; the JSON form has no such restriction.

#include <sstream>
#include <string>

#include "fairdiv/errors.hpp"
#include "fairdiv/undercut.hpp"
#include "json.hpp"

namespace fairdiv {
namespace {

std::string AgentField(Agent a) { return "agent=" + std::to_string(Number(a)); }

struct TextFormatter {
  const ObjectUniverse& u;

  std::string operator()(const event::GenerationPick& e) const {
    return "GEN pick " + AgentField(e.agent) + " object=" + u.name(e.object);
  }
  std::string operator()(const event::TieBroken& e) const {
    return "GEN tie-break " + AgentField(e.agent) + " object=" + u.name(e.object);
  }
  std::string operator()(const event::Contested& e) const {
    return "GEN contested object=" + u.name(e.object);
  }
  std::string operator()(const event::ContestedPile& e) const {
    return "PILE set=" + u.Format(e.pile);
  }
  std::string operator()(const event::MinimalBundlesComputed& e) const {
    std::string out = "MB " + AgentField(e.agent) + " bundles=[";
    for (std::size_t i = 0; i < e.bundles.size(); ++i) {
      if (i > 0) out += ',';
      out += u.Format(e.bundles[i]);
    }
    return out + "]";
  }
  std::string operator()(const event::ProposalSelected& e) const {
    return "PROPOSE " + AgentField(e.proposer) + " set=" + u.Format(e.proposal);
  }
  std::string operator()(const event::TrivialSplit& e) const {
    return "TRIVIAL set=" + u.Format(e.agent1_side);
  }
  std::string operator()(const event::Accepted& e) const {
    return "ACCEPT " + AgentField(e.responder);
  }
  std::string operator()(const event::Undercut& e) const {
    return "UNDERCUT " + AgentField(e.responder) + " set=" + u.Format(e.taken);
  }
  std::string operator()(const event::Note& e) const { return "NOTE " + e.text; }
  std::string operator()(const event::Verdict& e) const {
    return "VERDICT " + std::string(ToString(e.classification));
  }
};

class LineParser {
 public:
  LineParser(const ObjectUniverse& u, std::string line, std::size_t lineno)
      : u_(u), line_(std::move(line)), lineno_(lineno) {
    std::istringstream in(line_);
    for (std::string tok; in >> tok;) tokens_.push_back(tok);
  }

  Event Parse() const {
    const std::string& head = tokens_.at(0);
    if (head == "NOTE") {
      const auto pos = line_.find("NOTE");
      const std::size_t start = line_.find_first_not_of(' ', pos + 4);
      return event::Note{start == std::string::npos ? "" : line_.substr(start)};
    }
    if (head == "GEN") {
      const std::string& kind = Token(1);
      if (kind == "pick") {
        Expect(4);
        return event::GenerationPick{AgentAt(2), ObjectAt(3)};
      }
      if (kind == "tie-break") {
        Expect(4);
        return event::TieBroken{AgentAt(2), ObjectAt(3)};
      }
      if (kind == "contested") {
        Expect(3);
        return event::Contested{ObjectAt(2)};
      }
      Fail("unknown GEN event '" + kind + "'");
    }
    if (head == "PILE") {
      Expect(2);
      return event::ContestedPile{SetAt(1, "set")};
    }
    if (head == "MB") {
      Expect(3);
      const std::string list = Value(2, "bundles");
      if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
        Fail("bundle list must be bracketed");
      }
      std::vector<ObjectSet> bundles;
      const std::string body = list.substr(1, list.size() - 2);
      std::size_t pos = 0;
      while (pos < body.size()) {
        const std::size_t close = body.find('}', pos);
        if (body[pos] != '{' || close == std::string::npos) {
          Fail("malformed bundle list");
        }
        bundles.push_back(ParseSet(body.substr(pos, close - pos + 1)));
        pos = close + 1;
        if (pos < body.size()) {
          if (body[pos] != ',') Fail("malformed bundle list");
          ++pos;
        }
      }
      return event::MinimalBundlesComputed{AgentAt(1), std::move(bundles)};
    }
    if (head == "PROPOSE") {
      Expect(3);
      return event::ProposalSelected{AgentAt(1), SetAt(2, "set")};
    }
    if (head == "TRIVIAL") {
      Expect(2);
      return event::TrivialSplit{SetAt(1, "set")};
    }
    if (head == "ACCEPT") {
      Expect(2);
      return event::Accepted{AgentAt(1)};
    }
    if (head == "UNDERCUT") {
      Expect(3);
      return event::Undercut{AgentAt(1), SetAt(2, "set")};
    }
    if (head == "VERDICT") {
      Expect(2);
      const auto c = ClassificationFromString(tokens_[1]);
      if (!c) Fail("unknown classification '" + tokens_[1] + "'");
      return event::Verdict{*c};
    }
    Fail("unknown event '" + head + "'");
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw ParseError("trace line " + std::to_string(lineno_) + ": " + why +
                     " in '" + line_ + "'");
  }
  void Expect(std::size_t n) const {
    if (tokens_.size() != n) Fail("wrong number of fields");
  }
  const std::string& Token(std::size_t i) const {
    if (i >= tokens_.size()) Fail("missing field");
    return tokens_[i];
  }
  std::string Value(std::size_t i, const std::string& key) const {
    const std::string& tok = Token(i);
    if (tok.rfind(key + "=", 0) != 0) Fail("expected " + key + "=...");
    return tok.substr(key.size() + 1);
  }
  Agent AgentAt(std::size_t i) const {
    const std::string v = Value(i, "agent");
    if (v == "1") return Agent::kOne;
    if (v == "2") return Agent::kTwo;
    Fail("agent must be 1 or 2");
  }
  std::size_t ObjectAt(std::size_t i) const { return Label(Value(i, "object")); }
  ObjectSet SetAt(std::size_t i, const std::string& key) const {
    return ParseSet(Value(i, key));
  }
  std::size_t Label(const std::string& label) const {
    const auto idx = u_.IndexOf(label);
    if (!idx) Fail("unknown object '" + label + "'");
    return *idx;
  }
  ObjectSet ParseSet(const std::string& text) const {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      Fail("set must be written {a,b,...}");
    }
    ObjectSet s;
    const std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      s = s.with(Label(body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return s;
  }

  const ObjectUniverse& u_;
  std::string line_;
  std::size_t lineno_;
  std::vector<std::string> tokens_;
};

// JSON ----------------------------------------------------------------------

using nlohmann::ordered_json;

ordered_json SetJson(const ObjectUniverse& u, ObjectSet s) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : s.members()) out.push_back(u.name(i));
  return out;
}

struct JsonFormatter {
  const ObjectUniverse& u;

  ordered_json Head(const char* name) const { return {{"event", name}}; }
  ordered_json operator()(const event::GenerationPick& e) const {
    auto j = Head("pick");
    j["agent"] = Number(e.agent);
    j["object"] = u.name(e.object);
    return j;
  }
  ordered_json operator()(const event::TieBroken& e) const {
    auto j = Head("tie_break");
    j["agent"] = Number(e.agent);
    j["object"] = u.name(e.object);
    return j;
  }
  ordered_json operator()(const event::Contested& e) const {
    auto j = Head("contested");
    j["object"] = u.name(e.object);
    return j;
  }
  ordered_json operator()(const event::ContestedPile& e) const {
    auto j = Head("pile");
    j["set"] = SetJson(u, e.pile);
    return j;
  }
  ordered_json operator()(const event::MinimalBundlesComputed& e) const {
    auto j = Head("minimal_bundles");
    j["agent"] = Number(e.agent);
    j["bundles"] = ordered_json::array();
    for (ObjectSet s : e.bundles) j["bundles"].push_back(SetJson(u, s));
    return j;
  }
  ordered_json operator()(const event::ProposalSelected& e) const {
    auto j = Head("propose");
    j["agent"] = Number(e.proposer);
    j["set"] = SetJson(u, e.proposal);
    return j;
  }
  ordered_json operator()(const event::TrivialSplit& e) const {
    auto j = Head("trivial");
    j["set"] = SetJson(u, e.agent1_side);
    return j;
  }
  ordered_json operator()(const event::Accepted& e) const {
    auto j = Head("accept");
    j["agent"] = Number(e.responder);
    return j;
  }
  ordered_json operator()(const event::Undercut& e) const {
    auto j = Head("undercut");
    j["agent"] = Number(e.responder);
    j["set"] = SetJson(u, e.taken);
    return j;
  }
  ordered_json operator()(const event::Note& e) const {
    auto j = Head("note");
    j["text"] = e.text;
    return j;
  }
  ordered_json operator()(const event::Verdict& e) const {
    auto j = Head("verdict");
    j["classification"] = std::string(ToString(e.classification));
    return j;
  }
};

Agent JsonAgent(const nlohmann::json& j) {
  const auto n = j.at("agent").get<int>();
  if (n != 1 && n != 2) throw ParseError("trace: agent must be 1 or 2");
  return AgentFromNumber(n);
}

std::size_t JsonObject(const ObjectUniverse& u, const nlohmann::json& j) {
  const auto label = j.get<std::string>();
  const auto idx = u.IndexOf(label);
  if (!idx) throw ParseError("trace: unknown object '" + label + "'");
  return *idx;
}

ObjectSet JsonSet(const ObjectUniverse& u, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("trace: set must be a label list");
  ObjectSet s;
  for (const auto& label : j) s = s.with(JsonObject(u, label));
  return s;
}

Event EventFromJson(const ObjectUniverse& u, const nlohmann::json& j) {
  const auto kind = j.at("event").get<std::string>();
  if (kind == "pick") return event::GenerationPick{JsonAgent(j), JsonObject(u, j.at("object"))};
  if (kind == "tie_break") return event::TieBroken{JsonAgent(j), JsonObject(u, j.at("object"))};
  if (kind == "contested") return event::Contested{JsonObject(u, j.at("object"))};
  if (kind == "pile") return event::ContestedPile{JsonSet(u, j.at("set"))};
  if (kind == "minimal_bundles") {
    std::vector<ObjectSet> bundles;
    for (const auto& b : j.at("bundles")) bundles.push_back(JsonSet(u, b));
    return event::MinimalBundlesComputed{JsonAgent(j), std::move(bundles)};
  }
  if (kind == "propose") return event::ProposalSelected{JsonAgent(j), JsonSet(u, j.at("set"))};
  if (kind == "trivial") return event::TrivialSplit{JsonSet(u, j.at("set"))};
  if (kind == "accept") return event::Accepted{JsonAgent(j)};
  if (kind == "undercut") return event::Undercut{JsonAgent(j), JsonSet(u, j.at("set"))};
  if (kind == "note") return event::Note{j.at("text").get<std::string>()};
  if (kind == "verdict") {
    const auto c = ClassificationFromString(j.at("classification").get<std::string>());
    if (!c) throw ParseError("trace: unknown classification");
    return event::Verdict{*c};
  }
  throw ParseError("trace: unknown event '" + kind + "'");
}

}  // namespace

std::string FormatEvent(const ObjectUniverse& universe, const Event& e) {
  return std::visit(TextFormatter{universe}, e);
}

std::string FormatTrace(const ObjectUniverse& universe, const Trace& trace) {
  std::string out;
  for (const Event& e : trace) out += FormatEvent(universe, e) + "\n";
  return out;
}

Trace ParseTrace(const ObjectUniverse& universe, std::string_view text) {
  Trace trace;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    trace.push_back(LineParser(universe, line, lineno).Parse());
  }
  return trace;
}

std::string TraceToJson(const ObjectUniverse& universe, const Trace& trace) {
  ordered_json doc = ordered_json::array();
  for (const Event& e : trace) doc.push_back(std::visit(JsonFormatter{universe}, e));
  return doc.dump(2) + "\n";
}

Trace TraceFromJson(const ObjectUniverse& universe, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("trace: malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("trace: expected a JSON array");
  Trace trace;
  try {
    for (const auto& j : doc) trace.push_back(EventFromJson(universe, j));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("trace: ") + e.what());
  }
  return trace;
}

}  // namespace fairdiv
