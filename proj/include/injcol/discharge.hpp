#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcol/graph.hpp"
#include "injcol/rational.hpp"
#include "injcol/reduce.hpp"

namespace injcol {

/// Donor or recipient id standing for the bank of the second phase.
inline constexpr Vertex kBank = -1;

struct ChargeTransfer {
    std::string rule;
    Vertex donor;
    Vertex recipient;
    Rational amount;
    friend bool operator==(const ChargeTransfer&, const ChargeTransfer&) = default;
};

struct ChargeSnapshot {
    std::string name;
    std::vector<Rational> charges;
};

struct ChargeLedger {
    std::vector<Rational> initial;
    std::vector<Rational> final;
    Rational bank;
    std::vector<ChargeTransfer> log;
    std::vector<ChargeSnapshot> snapshots; ///< charges between rule groups

    /// sum(final) + bank == sum(initial), and every transfer positive.
    bool conserved() const;
    Rational min_final() const;
    const ChargeSnapshot* snapshot(const std::string& name) const;
};

class ConfigPresent : public std::logic_error {
public:
    explicit ConfigPresent(Config c)
        : std::logic_error(to_string(c.tag) + " present at vertex " + std::to_string(c.anchor)), config(std::move(c))
    {
    }
    Config config;
};

class DeficitFound : public std::runtime_error {
public:
    DeficitFound(Vertex v, Rational charge, bool negative_surplus)
        : std::runtime_error("vertex " + std::to_string(v) + " ends with charge " + charge.str() +
                             (negative_surplus ? " (some component surplus is negative)" : "")),
          vertex(v), charge(charge), negative_surplus(negative_surplus)
    {
    }
    Vertex vertex;
    Rational charge;
    bool negative_surplus;
};

/// Order in which vertices are visited when rules fire. Outcomes must not
/// depend on it; the choice exists so tests can check exactly that.
enum class Traversal { Ascending, Descending };

/// Max degree 3, no RC1-RC4. Final charges asserted >= 36/13.
ChargeLedger discharge_thm2(const Graph& g, Traversal order = Traversal::Ascending);

/// Max degree >= 6 (or `delta` >= 6 given explicitly, with max degree <=
/// delta), no bounded configuration. Final charges asserted >= 14/5.
/// Snapshot "R2" holds the charges R3 reads its excess from.
ChargeLedger discharge_lemma6(const Graph& g, std::optional<int> delta = std::nullopt,
                              Traversal order = Traversal::Ascending);

/// First phase on g, second phase through h and the bank. Snapshots "phase1"
/// and "phase2" (the latter before R2.4). DeficitFound carries whether some
/// component of h had negative surplus.
ChargeLedger discharge_two_phase(const Graph& g, const AuxGraph& h, DeltaCase kind,
                                 Traversal order = Traversal::Ascending);

/// True iff the ledger is conserved, the bank is non-negative and every final
/// charge is at least `bound`; then the average degree is at least `bound`.
bool average_degree_certificate(const ChargeLedger& ledger, const Rational& bound);

} // namespace injcol
