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


#ifndef FAIRDIV_UNDERCUT_HPP_
#define FAIRDIV_UNDERCUT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairdiv/bundles.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv {

/// A partition of a ground set (the whole universe for full procedures).
struct Split {
  ObjectSet to_agent1;
  ObjectSet to_agent2;

  ObjectSet share(Agent a) const {
    return a == Agent::kOne ? to_agent1 : to_agent2;
  }
  friend bool operator==(const Split&, const Split&) = default;
};

enum class Classification { kEfTrivial, kEfNontrivial, kNoEfExists, kDeadlock };
std::string_view ToString(Classification c);
std::optional<Classification> ClassificationFromString(std::string_view s);
inline bool IsEnvyFree(Classification c) {
  return c == Classification::kEfTrivial || c == Classification::kEfNontrivial;
}

// Trace events, in the order the procedure performs them.
namespace event {
struct GenerationPick {
  Agent agent;
  std::size_t object;
  friend bool operator==(const GenerationPick&,
                         const GenerationPick&) = default;
};
/// Index tie-break used during the generation phase.
struct TieBroken {
  Agent agent;
  std::size_t object;
  friend bool operator==(const TieBroken&, const TieBroken&) = default;
};
struct Contested {
  std::size_t object;
  friend bool operator==(const Contested&, const Contested&) = default;
};
/// The ground set the core procedure operates on.
struct ContestedPile {
  ObjectSet pile;
  friend bool operator==(const ContestedPile&, const ContestedPile&) = default;
};
struct MinimalBundlesComputed {
  Agent agent;
  std::vector<ObjectSet> bundles;
  friend bool operator==(const MinimalBundlesComputed&,
                         const MinimalBundlesComputed&) = default;
};
struct ProposalSelected {
  Agent proposer;
  ObjectSet proposal;
  friend bool operator==(const ProposalSelected&,
                         const ProposalSelected&) = default;
};
/// Both families agree and contain S and its complement; agent 1 gets S.
struct TrivialSplit {
  ObjectSet agent1_side;
  friend bool operator==(const TrivialSplit&, const TrivialSplit&) = default;
};
struct Accepted {
  Agent responder;
  friend bool operator==(const Accepted&, const Accepted&) = default;
};
struct Undercut {
  Agent responder;
  ObjectSet taken;
  friend bool operator==(const Undercut&, const Undercut&) = default;
};
struct Note {
  std::string text;
  friend bool operator==(const Note&, const Note&) = default;
};
struct Verdict {
  Classification classification;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};
}  // namespace event

using Event =
    std::variant<event::GenerationPick, event::TieBroken, event::Contested,
                 event::ContestedPile, event::MinimalBundlesComputed,
                 event::ProposalSelected, event::TrivialSplit, event::Accepted,
                 event::Undercut, event::Note, event::Verdict>;

using Trace = std::vector<Event>;

struct Outcome {
  std::optional<Split> split;
  Classification classification = Classification::kNoEfExists;
  std::optional<Agent> proposer;
  Trace trace;

  std::size_t ties_broken() const;
};

enum class TieBreak { kStrict, kIndex };

struct UndercutOptions {
  Agent first = Agent::kOne;
  TieBreak tie_break = TieBreak::kStrict;
};

struct GenerationResult {
  ObjectSet alloc1;
  ObjectSet alloc2;
  ObjectSet pile;
  Trace trace;
};

/// Sequential naming of top remaining objects by singleton utility. Claims
/// are ignored. Throws TieError on a tied top object in strict mode.
GenerationResult generation_phase(const Profile& profile,
                                  TieBreak tie_break = TieBreak::kStrict);

namespace proposal {
struct Offer { Agent proposer; ObjectSet set; };
struct TrivialSplitFound { ObjectSet set; };
struct NoProposal {};
}  // namespace proposal

using ProposalResult = std::variant<proposal::Offer, proposal::TrivialSplitFound,
                                    proposal::NoProposal>;

/// Step 2/3 selection. When the families differ, interleaves rank positions
/// (each family sorted by its owner's utility, descending, canonical
/// tie-break), `first` before the other at each position, and offers the
/// first bundle missing from the other family. When they agree, looks for a
/// bundle whose complement is also in the family.
ProposalResult propose(const MinimalBundleFamily& mb1,
                       const MinimalBundleFamily& mb2,
                       const PreferenceModel& pref1,
                       const PreferenceModel& pref2, Agent first);

namespace response {
struct Accept {};
struct Undercut { ObjectSet taken; };
/// Responder rejects but no proper subset is acceptable to it. Reachable
/// only with unequal claims.
struct Stalled {};
}  // namespace response

using Response = std::variant<response::Accept, response::Undercut,
                              response::Stalled>;

/// The responder accepts iff the complement of `proposal` in `ground` is
/// claims-acceptable to it; otherwise it takes its highest-utility
/// acceptable proper subset of the proposal (canonical tie-break). Throws
/// InternalInvariantViolation if no such subset exists under equal claims.
Response respond(const Profile& profile, ObjectSet ground, Agent proposer,
                 ObjectSet proposal);

/// Steps 2-4 over `ground`. The returned split partitions `ground`.
Outcome run_core(const Profile& profile, ObjectSet ground,
                 Agent first = Agent::kOne);

/// The whole universe is the contested pile; no generation phase.
Outcome simplified_undercut(const Profile& profile,
                            const UndercutOptions& options = {});

/// Generation phase followed by the core on the contested pile. Reports
/// kDeadlock, with no split, whenever the combined result is not an
/// envy-free split of the universe.
Outcome original_undercut(const Profile& profile,
                          const UndercutOptions& options = {});

// ---------------------------------------------------------------------------
// Trace I/O

/// One event per line, e.g. "PROPOSE agent=1 set={a,d}".
std::string FormatTrace(const ObjectUniverse& universe, const Trace& trace);
std::string FormatEvent(const ObjectUniverse& universe, const Event& e);
/// Inverse of FormatTrace. Blank lines are skipped. Throws ParseError.
Trace ParseTrace(const ObjectUniverse& universe, std::string_view text);

/// JSON array of event objects; sets are label lists as in profiles.
std::string TraceToJson(const ObjectUniverse& universe, const Trace& trace);
Trace TraceFromJson(const ObjectUniverse& universe, std::string_view text);

/// Rebuilds the Outcome a trace describes, checking every recorded step
/// (generation picks, minimal bundles, proposal, response and verdict)
/// against `profile`. Throws ValidationError on the first inconsistency.
Outcome replay(const Profile& profile, const Trace& trace);

}  // namespace fairdiv

#endif  // FAIRDIV_UNDERCUT_HPP_
