// Rendering of labels, blocks, and reports to JSON, CSV, and human-readable
// text.  All output is deterministic: JSON uses insertion-ordered keys,
// lists are emitted in the library's canonical enumeration order, and no
// timing or environment data ever appears in the payload (the CLI prints
// timing to stderr only).
//
// Every top-level JSON document carries  "schema": "sympblocks/1".

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spb/verify.hpp"

namespace spb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "sympblocks/1";

// Compact canonical strings (round-trippable where a parser exists).
std::string tuple_to_string(const std::vector<Partition>& t);  // "[[2],[],[1,1]]"
std::string ss_label_to_string(const SsContext& ctx, const SemisimpleLabel& s);
std::string family_to_string(Family f);  // unit | self_dual | dual_pair

// JSON builders.
Json json_partition(const Partition& p);
Json json_tuple(const std::vector<Partition>& t);
Json json_ss_label(const SsContext& ctx, const SemisimpleLabel& s);
Json json_block(const SsContext& ctx, const BlockLabel& b);
Json json_ibr_label(const SsContext& ctx, const IBrLabel& chi);
Json json_weight_label(const SsContext& ctx, const WeightLabel& w);
Json json_poly_classes(const SsContext& ctx);
Json json_group_report(const GroupReport& rep, bool withBlocks);
Json json_sylow(const SylowReport& r);
Json json_actions(const SsContext& ctx, const ActionReport& r);

// Top-level document skeleton: schema marker plus the subcommand name.
Json envelope(const std::string& command);

// j.dump with two-space indentation and a trailing newline.
std::string render_json(const Json& j);

// RFC-4180 style quoting (only when the field needs it).
std::string csv_escape(const std::string& field);

// Whole-point renderers shared by the CLI and the tests.
std::string group_report_csv(const std::vector<GroupReport>& reps);
std::string group_report_human(const GroupReport& rep);
std::string sylow_csv(const std::vector<SylowReport>& rows);
std::string sylow_human(const SylowReport& r);

}  // namespace spb
