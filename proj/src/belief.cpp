#include "colearn/belief.hpp"

#include <algorithm>
#include <stdexcept>

namespace colearn {

char to_char(TruthValue v) {
    switch (v) {
    case TruthValue::False: return '0';
    case TruthValue::Unknown: return '?';
    case TruthValue::True: return '1';
    }
    return '!';
}

std::size_t Belief::count_unknown() const noexcept {
    return static_cast<std::size_t>(
        std::count(values_.begin(), values_.end(), TruthValue::Unknown));
}

std::string Belief::to_string() const {
    std::string s;
    s.reserve(values_.size());
    for (TruthValue v : values_) s.push_back(to_char(v));
    return s;
}

Belief WorldState::as_belief() const {
    std::vector<TruthValue> values(truths_.size());
    for (std::size_t i = 0; i < truths_.size(); ++i) values[i] = from_bool(truths_[i]);
    return Belief(std::move(values));
}

Belief fuse_beliefs(const Belief& a, const Belief& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fuse_beliefs: length mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    std::vector<TruthValue> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = fuse_value(a[i], b[i]);
    return Belief(std::move(out));
}

std::optional<std::size_t> select_investigation(const Belief& b, Rng& rng) {
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == TruthValue::Unknown) unknown.push_back(i);
    }
    if (unknown.empty()) return std::nullopt;
    return unknown[uniform_index(rng, unknown.size())];
}

Evidence draw_evidence(const WorldState& world, std::size_t i, double epsilon, Rng& rng) {
    if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
        throw std::invalid_argument("draw_evidence: epsilon must be in [0, 0.5], got " +
                                    std::to_string(epsilon));
    }
    if (i >= world.size()) {
        throw std::invalid_argument("draw_evidence: proposition index " + std::to_string(i) +
                                    " out of range for n=" + std::to_string(world.size()));
    }
    const bool truth = world[i];
    const bool flipped = bernoulli(rng, epsilon);
    return Evidence{i, flipped ? !truth : truth};
}

bool apply_evidence_inplace(Belief& b, const Evidence& e) {
    if (e.proposition_index >= b.size()) {
        throw std::invalid_argument("apply_evidence: proposition index " +
                                    std::to_string(e.proposition_index) +
                                    " out of range for n=" + std::to_string(b.size()));
    }
    const TruthValue before = b[e.proposition_index];
    const TruthValue after = fuse_value(before, from_bool(e.asserted_value));
    b.set(e.proposition_index, after);
    return before != after;
}

Belief apply_evidence(const Belief& b, const Evidence& e) {
    Belief out = b;
    apply_evidence_inplace(out, e);
    return out;
}

double average_error(std::span<const Belief> beliefs, const WorldState& world) {
    if (beliefs.empty()) throw std::invalid_argument("average_error: empty population");
    const std::size_t n = world.size();
    if (n == 0) throw std::invalid_argument("average_error: world has no propositions");

    // Differences are multiples of 1/2, so count halves as integers and
    // divide once at the end.
    std::uint64_t halves = 0;
    for (std::size_t j = 0; j < beliefs.size(); ++j) {
        const Belief& b = beliefs[j];
        if (b.size() != n) {
            throw std::invalid_argument("average_error: belief " + std::to_string(j) +
                                        " has length " + std::to_string(b.size()) +
                                        ", world has " + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const int target = world[i] ? 2 : 0;
            const int diff = static_cast<int>(b[i]) - target;
            halves += static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
        }
    }
    return static_cast<double>(halves) /
           (2.0 * static_cast<double>(beliefs.size()) * static_cast<double>(n));
}

} // namespace colearn
