// Copyright 2026 The blindtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <algorithm>
#include <unordered_map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blindtele/bits.hpp"
#include "blindtele/random.hpp"
#include "blindtele/state_vector.hpp"

namespace blindtele {

/// The next random event a protocol session is waiting for. Sessions run
/// deterministically between events: Alice drawing pad bits, or Bob
/// measuring.
enum class Await { AlicePads, BobOutcome, Finished };

struct Pending {
    Await what = Await::Finished;
    int bits = 0;
};

template <class S>
concept SteppedSession = std::copyable<S> && requires(S s, const S cs, const Bits &b) {
    { cs.pending() } -> std::same_as<Pending>;
    s.supply_pads(b);
    { cs.outcome_probabilities() } -> std::same_as<std::vector<double>>;
    { s.supply_outcome(b) } -> std::same_as<double>;
    { cs.fingerprint() } -> std::same_as<std::string>;
};

class PadSource {
  public:
    virtual ~PadSource() = default;
    virtual Bits draw(int count) = 0;
};

class RandomPads final : public PadSource {
  public:
    explicit RandomPads(Rng &rng) : rng_(rng) {}
    Bits draw(int count) override { return rng_.bits(count); }

  private:
    Rng &rng_;
};

/// Replays fixed pad words, one per draw; draws past the script are zero.
class ScriptedPads final : public PadSource {
  public:
    explicit ScriptedPads(std::vector<Bits> script = {}) : script_(std::move(script)) {}
    Bits draw(int count) override;

  private:
    std::vector<Bits> script_;
    std::size_t next_ = 0;
};

class OutcomeSource {
  public:
    virtual ~OutcomeSource() = default;
    /// Picks an outcome given the Born probabilities of all 2^bits outcomes.
    virtual Bits choose(std::span<const double> probabilities, int bits) = 0;
};

class SampledOutcomes final : public OutcomeSource {
  public:
    explicit SampledOutcomes(Rng &rng) : rng_(rng) {}
    Bits choose(std::span<const double> probabilities, int bits) override;

  private:
    Rng &rng_;
};

/// Forced-outcome mode: replays fixed outcome words; past the script every
/// outcome is all zeros.
class ScriptedOutcomes final : public OutcomeSource {
  public:
    explicit ScriptedOutcomes(std::vector<Bits> script = {}) : script_(std::move(script)) {}
    Bits choose(std::span<const double> probabilities, int bits) override;

  private:
    std::vector<Bits> script_;
    std::size_t next_ = 0;
};

/// Runs a session to completion. Returns the probability of the realized
/// measurement record (the product of the chosen outcomes' Born weights).
template <SteppedSession S>
double drive(S &session, PadSource &pads, OutcomeSource &outcomes) {
    double weight = 1.0;
    for (;;) {
        const Pending p = session.pending();
        if (p.what == Await::Finished) {
            return weight;
        }
        if (p.what == Await::AlicePads) {
            session.supply_pads(pads.draw(p.bits));
        } else {
            const auto probs = session.outcome_probabilities();
            weight *= session.supply_outcome(outcomes.choose(probs, p.bits));
        }
    }
}

template <class S>
struct Weighted {
    S session;
    double weight = 1.0;
};

/// Expands one random event into every child with its exact weight: 2^-c
/// per pad word of c bits, the Born weight per measurement outcome
/// (outcomes at or below kBranchCutoff are dropped).
template <SteppedSession S>
std::vector<Weighted<S>> expand(const S &session, double weight) {
    std::vector<Weighted<S>> children;
    const Pending p = session.pending();
    if (p.what == Await::AlicePads) {
        const std::uint64_t count = std::uint64_t{1} << p.bits;
        const double w = weight / static_cast<double>(count);
        for (std::uint64_t word = 0; word < count; ++word) {
            S child = session;
            child.supply_pads(from_mask(word, p.bits));
            children.push_back({std::move(child), w});
        }
    } else if (p.what == Await::BobOutcome) {
        const auto probs = session.outcome_probabilities();
        for (std::uint64_t o = 0; o < probs.size(); ++o) {
            if (probs[o] <= kBranchCutoff) {
                continue;
            }
            S child = session;
            const double born = child.supply_outcome(from_mask(o, p.bits));
            children.push_back({std::move(child), weight * born});
        }
    }
    return children;
}

/// Depth-first walk over every pad assignment and measurement branch;
/// `visit(session, weight)` is called for each session where `stop` holds
/// (or that has finished).
template <SteppedSession S, class Stop, class Visit>
void for_each_branch(const S &session, Stop &&stop, Visit &&visit, double weight = 1.0) {
    if (session.pending().what == Await::Finished || stop(session)) {
        visit(session, weight);
        return;
    }
    for (auto &child : expand(session, weight)) {
        for_each_branch(child.session, stop, visit, child.weight);
    }
}

template <SteppedSession S, class Visit>
void for_each_branch(const S &session, Visit &&visit) {
    for_each_branch(session, [](const S &) { return false; }, std::forward<Visit>(visit));
}

/// Breadth-first exhaustive enumeration that merges branches whose
/// fingerprints agree. A fingerprint covers everything either party will
/// still read (Alice's live keys and gates, Bob's register up to global
/// phase), so merged branches have identical futures and their weights add.
/// The frontier is expanded in chunks: the sessions of one chunk expand in
/// parallel and their children are merged in frontier order, so the result
/// does not depend on the thread count.
template <SteppedSession S>
std::vector<Weighted<S>> enumerate_merged(const S &root, std::size_t chunk = 2048) {
    struct Child {
        std::string key;
        Weighted<S> node;
    };
    std::vector<Weighted<S>> frontier{{root, 1.0}};
    for (;;) {
        bool any_open = false;
        for (const auto &w : frontier) {
            any_open = any_open || w.session.pending().what != Await::Finished;
        }
        if (!any_open) {
            return frontier;
        }
        std::vector<Weighted<S>> next;
        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t begin = 0; begin < frontier.size(); begin += chunk) {
            const std::size_t end = std::min(frontier.size(), begin + chunk);
            std::vector<std::vector<Child>> children(end - begin);
            const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < count; ++i) {
                auto &w = frontier[begin + static_cast<std::size_t>(i)];
                auto &out = children[static_cast<std::size_t>(i)];
                if (w.session.pending().what == Await::Finished) {
                    out.push_back({w.session.fingerprint(), std::move(w)});
                    continue;
                }
                for (auto &c : expand(w.session, w.weight)) {
                    std::string key = c.session.fingerprint();
                    out.push_back({std::move(key), std::move(c)});
                }
            }
            for (auto &group : children) {
                for (auto &child : group) {
                    auto [it, inserted] = index.try_emplace(std::move(child.key), next.size());
                    if (inserted) {
                        next.push_back(std::move(child.node));
                    } else {
                        next[it->second].weight += child.node.weight;
                    }
                }
            }
        }
        frontier = std::move(next);
    }
}

/// Register contents up to global phase, quantized to 1e-9, as bytes.
void append_state_fingerprint(std::string &out, const StateVector &state);

}  // namespace blindtele
