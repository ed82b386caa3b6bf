#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcut/graph.hpp"

namespace mcut {

enum class Colour : std::uint8_t { Red, Blue };

inline Colour opposite(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

// Total red-blue assignment, one entry per vertex.
using Colouring = std::vector<Colour>;

// Serialised as one character per vertex, 'R' or 'B'.
std::string colouring_to_string(const Colouring& c);
Colouring colouring_from_string(const std::string& s);

// Partial assignment: every vertex is red (S), blue (T) or uncoloured (Z).
class PartialColouring {
public:
    PartialColouring() = default;
    explicit PartialColouring(int n) : state_(n, kNone) {}
    // Validates range and disjointness of the two sets.
    static PartialColouring from_sets(int n, const std::vector<int>& red,
                                      const std::vector<int>& blue);

    int size() const { return static_cast<int>(state_.size()); }
    bool is_red(int v) const { return state_[v] == kRed; }
    bool is_blue(int v) const { return state_[v] == kBlue; }
    bool is_uncoloured(int v) const { return state_[v] == kNone; }
    bool is_coloured(int v) const { return state_[v] != kNone; }
    void set(int v, Colour c) { state_[v] = (c == Colour::Red ? kRed : kBlue); }

    std::vector<int> red_vertices() const;
    std::vector<int> blue_vertices() const;
    std::vector<int> uncoloured_vertices() const;
    int uncoloured_count() const;
    bool total() const { return uncoloured_count() == 0; }
    Colouring to_colouring() const;  // requires total()

    bool operator==(const PartialColouring&) const = default;

private:
    static constexpr std::int8_t kNone = 0, kRed = 1, kBlue = 2;
    std::vector<std::int8_t> state_;
};

struct PropagationStats {
    long long rule_applications = 0;
};

// Exhaustive application of the degree-threshold rules for d-colourings:
// a vertex with d+1 neighbours of one colour cannot take the other colour.
// Returns the unique fixpoint, or nullopt when a contradiction proves no
// valid (S,T)-d-colouring exists.
std::optional<PartialColouring> apply_rules_r1_r2(const Graph& g, PartialColouring pc, int d,
                                                  PropagationStats* stats = nullptr);

// Adds the perfect-colouring rules (d = 1): a coloured vertex whose whole
// neighbourhood shares its colour can never gain its opposite partner (No),
// and a coloured vertex that already has its partner forces every other
// neighbour to its own colour.
std::optional<PartialColouring> apply_rules_r1_r4(const Graph& g, PartialColouring pc,
                                                  PropagationStats* stats = nullptr);

// Both colours used and every vertex has at most d opposite-coloured
// neighbours. With d = 1 the bichromatic edges form a matching cut.
bool is_valid_d_colouring(const Graph& g, const Colouring& c, int d);

// Every vertex has exactly one opposite-coloured neighbour.
bool is_perfect_colouring(const Graph& g, const Colouring& c);

// Whether some perfect matching of g contains every bichromatic edge of c;
// equivalently the graph minus the bichromatic endpoints has a perfect
// matching. Requires c to be a valid 1-colouring (throws otherwise).
bool is_perfect_extendable(const Graph& g, const Colouring& c);

// Number of bichromatic edges; defined for every total assignment.
int colouring_value(const Graph& g, const Colouring& c);

struct CutCertificate {
    std::vector<std::pair<int, int>> cut;  // bichromatic edges, sorted
    std::vector<int> side_a;               // red side
    std::vector<int> side_b;               // blue side
};

// Requires c to be a valid 1-colouring.
CutCertificate cut_from_colouring(const Graph& g, const Colouring& c);
Colouring colouring_from_cut(const Graph& g, const CutCertificate& cert);

}  // namespace mcut
