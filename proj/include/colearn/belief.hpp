#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colearn/random.hpp"

namespace colearn {

// Three-valued truth. Numerically False = 0, Unknown = 1/2, True = 1.
enum class TruthValue : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr double numeric(TruthValue v) {
    return static_cast<double>(static_cast<std::uint8_t>(v)) * 0.5;
}

constexpr TruthValue from_bool(bool b) {
    return b ? TruthValue::True : TruthValue::False;
}

constexpr bool is_certain(TruthValue v) { return v != TruthValue::Unknown; }

char to_char(TruthValue v);

// Pairwise fusion. Unknown is the identity; conflicting certainties give
// Unknown. Commutative and idempotent but not associative.
constexpr TruthValue fuse_value(TruthValue a, TruthValue b) {
    if (a == b) return a;
    if (a == TruthValue::Unknown) return b;
    if (b == TruthValue::Unknown) return a;
    return TruthValue::Unknown;
}

// An agent's assignment of truth values to n propositions. Length is fixed
// at construction.
class Belief {
public:
    explicit Belief(std::size_t n, TruthValue fill = TruthValue::Unknown)
        : values_(n, fill) {}
    explicit Belief(std::vector<TruthValue> values) : values_(std::move(values)) {}
    Belief(std::initializer_list<TruthValue> values) : values_(values) {}

    std::size_t size() const noexcept { return values_.size(); }
    TruthValue operator[](std::size_t i) const { return values_[i]; }
    TruthValue at(std::size_t i) const { return values_.at(i); }
    void set(std::size_t i, TruthValue v) { values_.at(i) = v; }

    std::span<const TruthValue> values() const noexcept { return values_; }
    std::size_t count_unknown() const noexcept;
    bool fully_certain() const noexcept { return count_unknown() == 0; }

    std::string to_string() const;

    friend bool operator==(const Belief&, const Belief&) = default;

private:
    std::vector<TruthValue> values_;
};

// The ground truth: n certain values.
class WorldState {
public:
    explicit WorldState(std::vector<bool> truths) : truths_(std::move(truths)) {}
    static WorldState all_true(std::size_t n) { return WorldState(std::vector<bool>(n, true)); }

    std::size_t size() const noexcept { return truths_.size(); }
    bool operator[](std::size_t i) const { return truths_[i]; }
    TruthValue value(std::size_t i) const { return from_bool(truths_.at(i)); }

    // The world seen as a fully certain belief.
    Belief as_belief() const;

    friend bool operator==(const WorldState&, const WorldState&) = default;

private:
    std::vector<bool> truths_;
};

// One certain assertion about a single proposition. Stands for the n-tuple
// that is Unknown everywhere except at proposition_index.
struct Evidence {
    std::size_t proposition_index;
    bool asserted_value;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

// Element-wise fusion. Throws std::invalid_argument on length mismatch.
Belief fuse_beliefs(const Belief& a, const Belief& b);

// Uniform choice among the Unknown propositions of b; empty when b is fully
// certain.
std::optional<std::size_t> select_investigation(const Belief& b, Rng& rng);

// Reports world[i] with probability 1 - epsilon, the flipped value otherwise.
// epsilon must lie in [0, 0.5].
Evidence draw_evidence(const WorldState& world, std::size_t i, double epsilon, Rng& rng);

// b fused with the expanded evidence tuple. Only index e.proposition_index
// can change.
Belief apply_evidence(const Belief& b, const Evidence& e);

// In-place form used by the simulation loop. Returns true if b changed.
bool apply_evidence_inplace(Belief& b, const Evidence& e);

// Mean absolute difference between beliefs and the world, over agents and
// propositions. Result lies in [0, 1].
double average_error(std::span<const Belief> beliefs, const WorldState& world);

} // namespace colearn
