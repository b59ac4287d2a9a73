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


#include "fairdiv/undercut.hpp"

#include <algorithm>
#include <array>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::string_view ToString(Classification c) {
  switch (c) {
    case Classification::kEfTrivial:
      return "ef_trivial";
    case Classification::kEfNontrivial:
      return "ef_nontrivial";
    case Classification::kNoEfExists:
      return "no_ef_exists";
    case Classification::kDeadlock:
      return "deadlock";
  }
  return "?";
}

std::optional<Classification> ClassificationFromString(std::string_view s) {
  for (Classification c :
       {Classification::kEfTrivial, Classification::kEfNontrivial,
        Classification::kNoEfExists, Classification::kDeadlock}) {
    if (ToString(c) == s) return c;
  }
  return std::nullopt;
}

std::size_t Outcome::ties_broken() const {
  return static_cast<std::size_t>(
      std::count_if(trace.begin(), trace.end(), [](const Event& e) {
        return std::holds_alternative<event::TieBroken>(e);
      }));
}

// ---------------------------------------------------------------------------
// Generation phase

namespace {

// Highest-singleton object in `pool`; nullopt-free since pool is non-empty.
std::size_t NameTop(const Profile& profile, Agent agent, ObjectSet pool,
                    TieBreak tie_break, Trace& trace) {
  const PreferenceModel& pref = profile.pref(agent);
  Utility best = 0;
  ObjectSet tied;
  for (std::size_t i : pool.members()) {
    const Utility u = pref.singleton(i);
    if (tied.empty() || u > best) {
      best = u;
      tied = ObjectSet::Singleton(i);
    } else if (u == best) {
      tied = tied.with(i);
    }
  }
  const std::size_t top = tied.members().front();
  if (tied.size() > 1) {
    if (tie_break == TieBreak::kStrict) {
      throw TieError("agent " + profile.name(agent) + " has tied top objects " +
                     profile.universe().Format(tied));
    }
    trace.emplace_back(event::TieBroken{agent, top});
  }
  return top;
}

}  // namespace

GenerationResult generation_phase(const Profile& profile, TieBreak tie_break) {
  GenerationResult result;
  ObjectSet pool = profile.universe().all();
  while (!pool.empty()) {
    const std::size_t a = NameTop(profile, Agent::kOne, pool, tie_break, result.trace);
    const std::size_t b = NameTop(profile, Agent::kTwo, pool, tie_break, result.trace);
    if (a == b) {
      result.pile = result.pile.with(a);
      result.trace.emplace_back(event::Contested{a});
      pool = pool.without(a);
    } else {
      result.alloc1 = result.alloc1.with(a);
      result.alloc2 = result.alloc2.with(b);
      result.trace.emplace_back(event::GenerationPick{Agent::kOne, a});
      result.trace.emplace_back(event::GenerationPick{Agent::kTwo, b});
      pool = pool.without(a).without(b);
    }
  }
  result.trace.emplace_back(event::ContestedPile{result.pile});
  return result;
}

// ---------------------------------------------------------------------------
// Proposal and response

namespace {

std::vector<ObjectSet> RankByUtility(const MinimalBundleFamily& family,
                                     const PreferenceModel& pref) {
  std::vector<ObjectSet> ranked = family.bundles;
  std::stable_sort(ranked.begin(), ranked.end(), [&](ObjectSet a, ObjectSet b) {
    return pref.utility(a) > pref.utility(b);
  });
  return ranked;
}

}  // namespace

ProposalResult propose(const MinimalBundleFamily& mb1,
                       const MinimalBundleFamily& mb2,
                       const PreferenceModel& pref1,
                       const PreferenceModel& pref2, Agent first) {
  if (mb1.bundles == mb2.bundles) {
    for (ObjectSet s : mb1.bundles) {
      if (mb1.contains(s.complement_in(mb1.ground))) {
        return proposal::TrivialSplitFound{s};
      }
    }
    return proposal::NoProposal{};
  }

  const std::array<const MinimalBundleFamily*, 2> families{&mb1, &mb2};
  const std::array<std::vector<ObjectSet>, 2> ranked{RankByUtility(mb1, pref1),
                                                     RankByUtility(mb2, pref2)};
  const std::size_t depth = std::max(ranked[0].size(), ranked[1].size());
  for (std::size_t k = 0; k < depth; ++k) {
    for (Agent agent : {first, Other(first)}) {
      const auto& mine = ranked[Index(agent)];
      if (k >= mine.size()) continue;
      if (!families[Index(Other(agent))]->contains(mine[k])) {
        return proposal::Offer{agent, mine[k]};
      }
    }
  }
  throw InternalInvariantViolation(
      "propose: families differ but every bundle is shared");
}

Response respond(const Profile& profile, ObjectSet ground, Agent proposer,
                 ObjectSet proposal) {
  const Agent responder = Other(proposer);
  const PreferenceModel& pref = profile.pref(responder);
  const ClaimPair claims = profile.claims().For(responder);
  if (is_acceptable(pref, proposal.complement_in(ground), ground, claims)) {
    return response::Accept{};
  }
  std::optional<ObjectSet> best;
  ForEachSubset(proposal, [&](ObjectSet t) {
    if (t == proposal || !is_acceptable(pref, t, ground, claims)) return;
    if (!best || pref.utility(t) > pref.utility(*best) ||
        (pref.utility(t) == pref.utility(*best) && CanonicalLess(t, *best))) {
      best = t;
    }
  });
  if (best) return response::Undercut{*best};
  if (profile.claims().equal()) {
    throw InternalInvariantViolation(
        "respond: agent " + profile.name(responder) +
        " rejects " + profile.universe().Format(proposal) +
        " but has no acceptable proper subset to undercut with");
  }
  return response::Stalled{};
}

// ---------------------------------------------------------------------------
// Procedures

namespace {

// nullopt if `split` of `ground` is not envy-free under the profile's claims.
std::optional<Classification> ClassifyEnvyFree(const Profile& profile,
                                               ObjectSet ground,
                                               const Split& split) {
  bool all_indifferent = true;
  for (Agent a : {Agent::kOne, Agent::kTwo}) {
    const PreferenceModel& pref = profile.pref(a);
    const ClaimPair claims = profile.claims().For(a);
    const ObjectSet own = split.share(a);
    if (!is_acceptable(pref, own, ground, claims)) return std::nullopt;
    // Indifferent iff the other side is acceptable too and both are tight.
    const ClaimPair swapped{claims.other, claims.own};
    all_indifferent = all_indifferent &&
                      is_acceptable(pref, own.complement_in(ground), ground,
                                    swapped);
  }
  return all_indifferent ? Classification::kEfTrivial
                         : Classification::kEfNontrivial;
}

struct CoreResult {
  std::optional<Split> split;
  Classification classification = Classification::kNoEfExists;
  std::optional<Agent> proposer;
};

bool Separable(const Profile& profile) {
  return is_separable(profile.pref(Agent::kOne)).holds &&
         is_separable(profile.pref(Agent::kTwo)).holds;
}

CoreResult RunCore(const Profile& profile, ObjectSet ground, Agent first,
                   Trace& trace) {
  const MinimalBundleFamily mb1 = minimal_bundles(profile, Agent::kOne, ground);
  const MinimalBundleFamily mb2 = minimal_bundles(profile, Agent::kTwo, ground);
  trace.emplace_back(event::MinimalBundlesComputed{Agent::kOne, mb1.bundles});
  trace.emplace_back(event::MinimalBundlesComputed{Agent::kTwo, mb2.bundles});

  const ProposalResult proposed =
      propose(mb1, mb2, profile.pref(Agent::kOne), profile.pref(Agent::kTwo),
              first);

  CoreResult result;
  if (std::holds_alternative<proposal::NoProposal>(proposed)) {
    if (!Separable(profile)) {
      trace.emplace_back(event::Note{
          "preferences are not separable; no split found by procedure"});
    }
    result.classification = Classification::kNoEfExists;
    return result;
  }

  Split split;
  if (const auto* trivial = std::get_if<proposal::TrivialSplitFound>(&proposed)) {
    trace.emplace_back(event::TrivialSplit{trivial->set});
    split = {trivial->set, trivial->set.complement_in(ground)};
  } else {
    const auto& offer = std::get<proposal::Offer>(proposed);
    const Agent responder = Other(offer.proposer);
    trace.emplace_back(event::ProposalSelected{offer.proposer, offer.set});
    result.proposer = offer.proposer;
    const Response answer = respond(profile, ground, offer.proposer, offer.set);
    ObjectSet responder_share;
    if (std::holds_alternative<response::Accept>(answer)) {
      trace.emplace_back(event::Accepted{responder});
      responder_share = offer.set.complement_in(ground);
    } else if (const auto* cut = std::get_if<response::Undercut>(&answer)) {
      trace.emplace_back(event::Undercut{responder, cut->taken});
      responder_share = cut->taken;
    } else {
      trace.emplace_back(event::Note{"responder rejects and cannot undercut"});
      result.classification = Classification::kDeadlock;
      return result;
    }
    const ObjectSet proposer_share = responder_share.complement_in(ground);
    split = offer.proposer == Agent::kOne
                ? Split{proposer_share, responder_share}
                : Split{responder_share, proposer_share};
  }

  const auto verdict = ClassifyEnvyFree(profile, ground, split);
  if (!verdict) {
    // Only possible with unequal claims.
    trace.emplace_back(event::Note{"resulting split is not envy-free under claims"});
    result.classification = Classification::kDeadlock;
    return result;
  }
  result.split = split;
  result.classification = *verdict;
  return result;
}

void WarnIfUndesirable(const Profile& profile, Trace& trace) {
  for (Agent a : {Agent::kOne, Agent::kTwo}) {
    const ValidationReport report = all_desirable(profile.pref(a));
    if (!report.holds) {
      trace.emplace_back(event::Note{
          "agent " + std::to_string(Number(a)) + " has an undesirable object " +
          FormatWitness(profile.universe(), *report.witness)});
    }
  }
}

}  // namespace

Outcome run_core(const Profile& profile, ObjectSet ground, Agent first) {
  Outcome outcome;
  outcome.trace.emplace_back(event::ContestedPile{ground});
  CoreResult core = RunCore(profile, ground, first, outcome.trace);
  outcome.split = core.split;
  outcome.classification = core.classification;
  if (core.split) outcome.proposer = core.proposer;
  outcome.trace.emplace_back(event::Verdict{outcome.classification});
  return outcome;
}

Outcome simplified_undercut(const Profile& profile,
                            const UndercutOptions& options) {
  Trace warnings;
  WarnIfUndesirable(profile, warnings);
  Outcome outcome = run_core(profile, profile.universe().all(), options.first);
  outcome.trace.insert(outcome.trace.begin(), warnings.begin(), warnings.end());
  return outcome;
}

Outcome original_undercut(const Profile& profile,
                          const UndercutOptions& options) {
  GenerationResult gen = generation_phase(profile, options.tie_break);
  Outcome outcome;
  outcome.trace = std::move(gen.trace);
  const ObjectSet universe = profile.universe().all();

  Split merged{gen.alloc1, gen.alloc2};
  if (!gen.pile.empty()) {
    CoreResult core = RunCore(profile, gen.pile, options.first, outcome.trace);
    if (!core.split) {
      outcome.classification = Classification::kDeadlock;
      outcome.trace.emplace_back(event::Verdict{outcome.classification});
      return outcome;
    }
    merged.to_agent1 = merged.to_agent1 | core.split->to_agent1;
    merged.to_agent2 = merged.to_agent2 | core.split->to_agent2;
    outcome.proposer = core.proposer;
  }

  if (const auto verdict = ClassifyEnvyFree(profile, universe, merged)) {
    outcome.split = merged;
    outcome.classification = *verdict;
  } else {
    outcome.trace.emplace_back(
        event::Note{"combined allocation is not envy-free"});
    outcome.proposer.reset();
    outcome.classification = Classification::kDeadlock;
  }
  outcome.trace.emplace_back(event::Verdict{outcome.classification});
  return outcome;
}

// ---------------------------------------------------------------------------
// Replay

namespace {

class Replayer {
 public:
  explicit Replayer(const Profile& profile)
      : profile_(profile),
        pool_(profile.universe().all()),
        ground_(profile.universe().all()) {}

  void operator()(const event::GenerationPick& e) {
    CheckTop(e.agent, e.object);
    generated_ = true;
    if (e.agent == Agent::kOne) {
      alloc1_ = alloc1_.with(e.object);
      pending_ = e.object;
    } else {
      if (!pending_) Fail("agent 2 picks before agent 1");
      alloc2_ = alloc2_.with(e.object);
      pool_ = pool_.without(*pending_).without(e.object);
      pending_.reset();
    }
  }
  void operator()(const event::TieBroken& e) { CheckTop(e.agent, e.object); }
  void operator()(const event::Contested& e) {
    CheckTop(Agent::kOne, e.object);
    CheckTop(Agent::kTwo, e.object);
    generated_ = true;
    pile_ = pile_.with(e.object);
    pool_ = pool_.without(e.object);
  }
  void operator()(const event::ContestedPile& e) {
    if (generated_ && (e.pile != pile_ || !pool_.empty())) {
      Fail("contested pile does not match the generation phase");
    }
    ground_ = e.pile;
  }
  void operator()(const event::MinimalBundlesComputed& e) {
    MinimalBundleFamily family = minimal_bundles(profile_, e.agent, ground_);
    if (family.bundles != e.bundles) Fail("minimal bundles differ");
    families_[Index(e.agent)] = std::move(family);
  }
  void operator()(const event::ProposalSelected& e) {
    const ProposalResult want = Propose(e.proposer);
    const auto* offer = std::get_if<proposal::Offer>(&want);
    if (offer == nullptr || offer->proposer != e.proposer || offer->set != e.proposal) {
      Fail("proposal is not the one the procedure selects");
    }
    proposer_ = e.proposer;
    proposal_ = e.proposal;
  }
  void operator()(const event::TrivialSplit& e) {
    const ProposalResult want = Propose(Agent::kOne);
    const auto* trivial = std::get_if<proposal::TrivialSplitFound>(&want);
    if (trivial == nullptr || trivial->set != e.agent1_side) {
      Fail("trivial split is not the one the procedure selects");
    }
    shares_ = Split{e.agent1_side, e.agent1_side.complement_in(ground_)};
  }
  void operator()(const event::Accepted& e) {
    CheckResponder(e.responder);
    if (!std::holds_alternative<response::Accept>(Respond())) {
      Fail("responder would not accept");
    }
    SetShares(proposal_->complement_in(ground_));
  }
  void operator()(const event::Undercut& e) {
    CheckResponder(e.responder);
    const Response r = Respond();
    const auto* cut = std::get_if<response::Undercut>(&r);
    if (cut == nullptr || cut->taken != e.taken) {
      Fail("undercut differs from the responder's best acceptable subset");
    }
    SetShares(e.taken);
  }
  void operator()(const event::Note&) {}
  void operator()(const event::Verdict& e) {
    if (verdict_) Fail("more than one verdict");
    verdict_ = e.classification;
  }

  Outcome Finish(const Trace& trace) const {
    if (!verdict_) Fail("trace has no verdict");
    Outcome outcome;
    outcome.trace = trace;
    outcome.classification = Expected(outcome.split);
    if (outcome.classification != *verdict_) {
      Fail("verdict does not match the recorded steps");
    }
    if (outcome.split) outcome.proposer = proposer_;
    return outcome;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw ValidationError("trace", why);
  }

  // The classification the procedure reaches from the recorded steps;
  // `split` receives the final allocation when it is envy-free.
  Classification Expected(std::optional<Split>& split) const {
    const Classification none =
        generated_ ? Classification::kDeadlock : Classification::kNoEfExists;
    Split core;
    if (!(generated_ && pile_.empty())) {
      if (!shares_) {
        if (proposal_) {
          if (!std::holds_alternative<response::Stalled>(Respond())) {
            Fail("trace has no response");
          }
          return Classification::kDeadlock;
        }
        if (!std::holds_alternative<proposal::NoProposal>(Propose(Agent::kOne))) {
          Fail("trace has no proposal");
        }
        return none;
      }
      if (!ClassifyEnvyFree(profile_, ground_, *shares_)) {
        return Classification::kDeadlock;
      }
      core = *shares_;
    }
    const Split merged{alloc1_ | core.to_agent1, alloc2_ | core.to_agent2};
    const auto verdict = ClassifyEnvyFree(profile_, profile_.universe().all(), merged);
    if (!verdict) return Classification::kDeadlock;
    split = merged;
    return *verdict;
  }

  void CheckTop(Agent agent, std::size_t object) const {
    const PreferenceModel& pref = profile_.pref(agent);
    if (!pool_.contains(object)) Fail("object named twice");
    for (std::size_t i : pool_.members()) {
      if (pref.singleton(i) > pref.singleton(object)) {
        Fail("named object is not the agent's top remaining object");
      }
    }
  }

  ProposalResult Propose(Agent first) const {
    if (!families_[0] || !families_[1]) Fail("proposal before minimal bundles");
    return propose(*families_[0], *families_[1], profile_.pref(Agent::kOne),
                   profile_.pref(Agent::kTwo), first);
  }

  void CheckResponder(Agent responder) const {
    if (!proposer_ || responder != Other(*proposer_)) Fail("unexpected responder");
  }

  Response Respond() const {
    return respond(profile_, ground_, *proposer_, *proposal_);
  }

  void SetShares(ObjectSet responder_share) {
    const ObjectSet proposer_share = responder_share.complement_in(ground_);
    shares_ = *proposer_ == Agent::kOne ? Split{proposer_share, responder_share}
                                        : Split{responder_share, proposer_share};
  }

  const Profile& profile_;
  ObjectSet alloc1_, alloc2_, pile_, pool_, ground_;
  bool generated_ = false;
  std::optional<std::size_t> pending_;
  std::array<std::optional<MinimalBundleFamily>, 2> families_;
  std::optional<Agent> proposer_;
  std::optional<ObjectSet> proposal_;
  std::optional<Split> shares_;
  std::optional<Classification> verdict_;
};

}  // namespace

Outcome replay(const Profile& profile, const Trace& trace) {
  Replayer replayer(profile);
  for (const Event& e : trace) std::visit(replayer, e);
  return replayer.Finish(trace);
}

}  // namespace fairdiv
