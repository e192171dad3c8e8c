#include "fvc/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace fvc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
    if (s.size() == 1) return false;
  }
  long value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    value = value * 10 + (s[i] - '0');
    if (value > 1000000000L) return false;
  }
  out = neg ? -value : value;
  return true;
}

// "3x:" -> 3; anything else -> nullopt
std::optional<long> multiplicity_prefix(std::string_view token) {
  if (token.size() < 3 || token.back() != ':' || token[token.size() - 2] != 'x') return std::nullopt;
  std::string_view digits = token.substr(0, token.size() - 2);
  long value = 0;
  if (!parse_int(digits, value)) return std::nullopt;
  return value;
}

struct VoteLine {
  int line = 0;
  long multiplicity = 1;
  std::vector<std::string> approved;
  std::vector<std::string> disapproved;
};

enum class Section { Plain, Registered, Unregistered };

struct Document {
  std::vector<std::string> candidates;
  std::vector<std::string> spoilers;
  std::optional<std::string> designated;
  std::optional<long> budget;
  int designated_line = 0;
  std::vector<VoteLine> plain, registered, unregistered;
  bool has_spoilers = false;
  bool has_registered = false;
  bool has_unregistered = false;
};

[[noreturn]] void fail(int line, const std::string& message) { throw ParseError(line, message); }

void check_names(const std::vector<std::string>& names, int line) {
  if (names.empty()) fail(line, "at least one name required");
  for (const std::string& n : names) {
    if (!is_valid_candidate_name(n)) fail(line, "invalid candidate name: '" + n + "'");
  }
}

Document parse_document(std::string_view text) {
  Document doc;
  Section section = Section::Plain;
  bool saw_candidates = false;
  bool saw_votes = false;
  bool saw_section = false;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    auto role_value = [&](std::string_view keyword) -> std::optional<std::string_view> {
      if (line.substr(0, keyword.size()) == keyword) return trim(line.substr(keyword.size()));
      return std::nullopt;
    };

    if (auto v = role_value("candidates:")) {
      if (saw_candidates) fail(line_no, "duplicate candidates: line");
      doc.candidates = split_tokens(*v);
      check_names(doc.candidates, line_no);
      saw_candidates = true;
      continue;
    }
    if (!saw_candidates) fail(line_no, "candidates: must be the first directive");

    if (auto v = role_value("spoilers:")) {
      if (doc.has_spoilers) fail(line_no, "duplicate spoilers: line");
      if (saw_votes || saw_section) fail(line_no, "spoilers: must precede votes");
      doc.spoilers = split_tokens(*v);
      check_names(doc.spoilers, line_no);
      doc.has_spoilers = true;
      continue;
    }
    if (auto v = role_value("designated:")) {
      if (doc.designated) fail(line_no, "duplicate designated: line");
      if (saw_votes || saw_section) fail(line_no, "designated: must precede votes");
      auto names = split_tokens(*v);
      if (names.size() != 1) fail(line_no, "designated: takes exactly one name");
      doc.designated = names[0];
      doc.designated_line = line_no;
      continue;
    }
    if (auto v = role_value("budget:")) {
      if (doc.budget) fail(line_no, "duplicate budget: line");
      if (saw_votes || saw_section) fail(line_no, "budget: must precede votes");
      long value = 0;
      if (!parse_int(*v, value) || value < 0) fail(line_no, "budget: needs a non-negative integer");
      doc.budget = value;
      continue;
    }
    if (line == "[registered]") {
      if (doc.has_registered) fail(line_no, "duplicate [registered] section");
      if (saw_votes && !saw_section) fail(line_no, "votes must not precede section markers");
      doc.has_registered = true;
      saw_section = true;
      section = Section::Registered;
      continue;
    }
    if (line == "[unregistered]") {
      if (doc.has_unregistered) fail(line_no, "duplicate [unregistered] section");
      if (saw_votes && !saw_section) fail(line_no, "votes must not precede section markers");
      doc.has_unregistered = true;
      saw_section = true;
      section = Section::Unregistered;
      continue;
    }
    if (line.front() == '[') fail(line_no, "unknown section marker");

    // Vote line.
    const size_t bar = line.find('|');
    if (bar == std::string_view::npos) fail(line_no, "vote line is missing '|'");
    if (line.find('|', bar + 1) != std::string_view::npos) fail(line_no, "vote line has two '|'");
    VoteLine vote;
    vote.line = line_no;
    vote.approved = split_tokens(line.substr(0, bar));
    vote.disapproved = split_tokens(line.substr(bar + 1));
    if (!vote.approved.empty()) {
      if (auto mult = multiplicity_prefix(vote.approved.front())) {
        if (*mult < 1) fail(line_no, "multiplicity must be >= 1");
        if (*mult > 1000000) fail(line_no, "multiplicity too large");
        vote.multiplicity = *mult;
        vote.approved.erase(vote.approved.begin());
      }
    }
    saw_votes = true;
    switch (section) {
      case Section::Plain: doc.plain.push_back(std::move(vote)); break;
      case Section::Registered: doc.registered.push_back(std::move(vote)); break;
      case Section::Unregistered: doc.unregistered.push_back(std::move(vote)); break;
    }
  }
  if (!saw_candidates) fail(line_no, "missing candidates: line");
  return doc;
}

struct Universe {
  std::vector<std::string> names;  // candidates then spoilers
  std::unordered_map<std::string, CandidateId> index;
};

Universe build_universe(const Document& doc) {
  Universe u;
  u.names = doc.candidates;
  u.names.insert(u.names.end(), doc.spoilers.begin(), doc.spoilers.end());
  for (size_t i = 0; i < u.names.size(); ++i) {
    if (!u.index.emplace(u.names[i], static_cast<CandidateId>(i)).second) {
      throw Error("duplicate candidate name: " + u.names[i]);
    }
  }
  return u;
}

std::vector<Vote> expand_votes(const std::vector<VoteLine>& lines, const Universe& u) {
  std::vector<Vote> votes;
  for (const VoteLine& vl : lines) {
    Vote vote;
    std::vector<char> seen(u.names.size(), 0);
    size_t mentioned = 0;
    auto lookup = [&](const std::string& name) {
      auto it = u.index.find(name);
      if (it == u.index.end()) fail(vl.line, "unknown candidate name: " + name);
      if (seen[it->second]) fail(vl.line, "candidate mentioned twice: " + name);
      seen[it->second] = 1;
      ++mentioned;
      return it->second;
    };
    for (const std::string& n : vl.approved) vote.approved.push_back(lookup(n));
    for (const std::string& n : vl.disapproved) lookup(n);
    if (mentioned != u.names.size()) {
      fail(vl.line, "vote must mention every candidate exactly once (approved | disapproved)");
    }
    for (long i = 0; i < vl.multiplicity; ++i) votes.push_back(vote);
  }
  return votes;
}

CandidateId resolve_designated(const Document& doc, const Universe& u) {
  if (!doc.designated) throw Error("designated: line is required for control instances");
  auto it = u.index.find(*doc.designated);
  if (it == u.index.end()) fail(doc.designated_line, "unknown designated candidate");
  if (it->second >= static_cast<CandidateId>(doc.candidates.size())) {
    fail(doc.designated_line, "designated candidate must be qualified, not a spoiler");
  }
  return it->second;
}

int resolve_budget(const Document& doc, std::optional<int> override_value) {
  if (override_value) {
    if (*override_value < 0) throw Error("budget must be >= 0");
    return *override_value;
  }
  if (!doc.budget) throw Error("budget: line is required (or pass -k)");
  return static_cast<int>(*doc.budget);
}

void reject_sections(const Document& doc) {
  if (doc.has_registered || doc.has_unregistered) {
    throw Error("[registered]/[unregistered] sections are not valid for this input kind");
  }
}

void reject_spoilers(const Document& doc) {
  if (doc.has_spoilers) throw Error("spoilers: line is not valid for this input kind");
}

}  // namespace

Election parse_election(std::string_view text) {
  const Document doc = parse_document(text);
  reject_sections(doc);
  const Universe u = build_universe(doc);
  return Election(u.names, expand_votes(doc.plain, u));
}

AddCandidatesInstance parse_add_candidates(std::string_view text,
                                           std::optional<int> budget_override) {
  const Document doc = parse_document(text);
  reject_sections(doc);
  const Universe u = build_universe(doc);
  AddCandidatesInstance inst;
  inst.election = Election(u.names, expand_votes(doc.plain, u));
  for (size_t i = doc.candidates.size(); i < u.names.size(); ++i) {
    inst.spoilers.push_back(static_cast<CandidateId>(i));
  }
  inst.designated = resolve_designated(doc, u);
  inst.budget = resolve_budget(doc, budget_override);
  validate(inst);
  return inst;
}

DeleteCandidatesInstance parse_delete_candidates(std::string_view text,
                                                 std::optional<int> budget_override) {
  const Document doc = parse_document(text);
  reject_sections(doc);
  reject_spoilers(doc);
  const Universe u = build_universe(doc);
  DeleteCandidatesInstance inst;
  inst.election = Election(u.names, expand_votes(doc.plain, u));
  inst.designated = resolve_designated(doc, u);
  inst.budget = resolve_budget(doc, budget_override);
  validate(inst);
  return inst;
}

AddVotersInstance parse_add_voters(std::string_view text, std::optional<int> budget_override) {
  const Document doc = parse_document(text);
  reject_spoilers(doc);
  if (!doc.has_registered || !doc.has_unregistered) {
    throw Error("adding-voters instances need [registered] and [unregistered] sections");
  }
  if (!doc.plain.empty()) {
    fail(doc.plain.front().line, "votes must appear under [registered] or [unregistered]");
  }
  const Universe u = build_universe(doc);
  AddVotersInstance inst;
  inst.registered = Election(u.names, expand_votes(doc.registered, u));
  inst.unregistered = expand_votes(doc.unregistered, u);
  inst.designated = resolve_designated(doc, u);
  inst.budget = resolve_budget(doc, budget_override);
  validate(inst);
  return inst;
}

DeleteVotersInstance parse_delete_voters(std::string_view text,
                                         std::optional<int> budget_override) {
  const Document doc = parse_document(text);
  reject_sections(doc);
  reject_spoilers(doc);
  const Universe u = build_universe(doc);
  DeleteVotersInstance inst;
  inst.election = Election(u.names, expand_votes(doc.plain, u));
  inst.designated = resolve_designated(doc, u);
  inst.budget = resolve_budget(doc, budget_override);
  validate(inst);
  return inst;
}

namespace {

void write_vote(std::ostringstream& out, const Election& e, const Vote& v) {
  std::vector<char> approved(e.num_candidates(), 0);
  for (size_t i = 0; i < v.approved.size(); ++i) {
    out << e.candidate_name(v.approved[i]) << ' ';
    approved[v.approved[i]] = 1;
  }
  out << '|';
  for (CandidateId c = 0; c < e.num_candidates(); ++c) {
    if (!approved[c]) out << ' ' << e.candidate_name(c);
  }
  out << '\n';
}

void write_candidates_line(std::ostringstream& out, const Election& e,
                           std::span<const CandidateId> qualified) {
  out << "candidates:";
  for (CandidateId c : qualified) out << ' ' << e.candidate_name(c);
  out << '\n';
}

std::vector<CandidateId> all_ids(const Election& e) {
  std::vector<CandidateId> ids(e.num_candidates());
  for (int i = 0; i < e.num_candidates(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

std::string format_election(const Election& e) {
  std::ostringstream out;
  write_candidates_line(out, e, all_ids(e));
  for (const Vote& v : e.votes()) write_vote(out, e, v);
  return out.str();
}

std::string format_instance(const AddCandidatesInstance& inst) {
  const Election& e = inst.election;
  std::vector<char> spoiler(e.num_candidates(), 0);
  for (CandidateId d : inst.spoilers) spoiler[d] = 1;
  std::vector<CandidateId> qualified;
  for (CandidateId c = 0; c < e.num_candidates(); ++c) {
    if (!spoiler[c]) qualified.push_back(c);
  }
  std::ostringstream out;
  write_candidates_line(out, e, qualified);
  out << "spoilers:";
  for (CandidateId d : inst.spoilers) out << ' ' << e.candidate_name(d);
  out << '\n';
  out << "designated: " << e.candidate_name(inst.designated) << '\n';
  out << "budget: " << inst.budget << '\n';
  for (const Vote& v : e.votes()) write_vote(out, e, v);
  return out.str();
}

std::string format_instance(const DeleteCandidatesInstance& inst) {
  const Election& e = inst.election;
  std::ostringstream out;
  write_candidates_line(out, e, all_ids(e));
  out << "designated: " << e.candidate_name(inst.designated) << '\n';
  out << "budget: " << inst.budget << '\n';
  for (const Vote& v : e.votes()) write_vote(out, e, v);
  return out.str();
}

std::string format_instance(const AddVotersInstance& inst) {
  const Election& e = inst.registered;
  std::ostringstream out;
  write_candidates_line(out, e, all_ids(e));
  out << "designated: " << e.candidate_name(inst.designated) << '\n';
  out << "budget: " << inst.budget << '\n';
  out << "[registered]\n";
  for (const Vote& v : e.votes()) write_vote(out, e, v);
  out << "[unregistered]\n";
  for (const Vote& v : inst.unregistered) write_vote(out, e, v);
  return out.str();
}

std::string format_instance(const DeleteVotersInstance& inst) {
  const Election& e = inst.election;
  std::ostringstream out;
  write_candidates_line(out, e, all_ids(e));
  out << "designated: " << e.candidate_name(inst.designated) << '\n';
  out << "budget: " << inst.budget << '\n';
  for (const Vote& v : e.votes()) write_vote(out, e, v);
  return out.str();
}

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  size_t pos = 0;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    const auto tokens = split_tokens(raw);
    if (tokens.size() != 2) fail(line_no, "expected two integers");
    long a = 0, b = 0;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      fail(line_no, "expected two integers");
    }
    if (n < 0) {
      if (a < 1 || a > 64) fail(line_no, "vertex count must be in 1..64");
      if (b < 0) fail(line_no, "edge count must be >= 0");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long>(edges.size()) >= m) fail(line_no, "more edges than the header declares");
    if (a < 1 || a > n || b < 1 || b > n) fail(line_no, "edge endpoint out of range");
    if (a == b) fail(line_no, "self-loop");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) fail(line_no, "missing graph header");
  if (static_cast<long>(edges.size()) != m) {
    fail(line_no, "fewer edges than the header declares");
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace fvc
