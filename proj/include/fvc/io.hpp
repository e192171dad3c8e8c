#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fvc/control.hpp"
#include "fvc/graph.hpp"

namespace fvc {

// Line-oriented election format, mirroring the bar notation for ballots:
//
//   # comment (also allowed at end of line)
//   candidates: a b c
//   spoilers: d e              (adding-candidates instances only)
//   designated: a              (control instances)
//   budget: 2                  (control instances)
//   [registered]               (adding-voters instances)
//   [unregistered]
//   a b | c                    one ballot: approved in rank order | disapproved
//   3x: c | a b                multiplicity prefix
//
// Every ballot must mention every candidate (and spoiler) exactly once.
// Role lines precede votes; votes before a section marker are rejected in
// sectioned files.

Election parse_election(std::string_view text);
AddCandidatesInstance parse_add_candidates(std::string_view text,
                                           std::optional<int> budget_override = std::nullopt);
DeleteCandidatesInstance parse_delete_candidates(std::string_view text,
                                                 std::optional<int> budget_override = std::nullopt);
AddVotersInstance parse_add_voters(std::string_view text,
                                   std::optional<int> budget_override = std::nullopt);
DeleteVotersInstance parse_delete_voters(std::string_view text,
                                         std::optional<int> budget_override = std::nullopt);

std::string format_election(const Election& e);
std::string format_instance(const AddCandidatesInstance& inst);
std::string format_instance(const DeleteCandidatesInstance& inst);
std::string format_instance(const AddVotersInstance& inst);
std::string format_instance(const DeleteVotersInstance& inst);

// Graph format: header "n m" then m lines "i j" with 1-based endpoints.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace fvc
