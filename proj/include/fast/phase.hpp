#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fast/tribit.hpp"

namespace fast {

// Instantaneous switch drive: phi1 gates the inter-cell transmission path,
// phi2 and the delayed phi2d close the intra-cell restore loop.
struct PhaseVector {
    bool phi1 = false;
    bool phi2 = false;
    bool phi2d = false;

    // Inter-cell and intra-cell switches must never conduct together.
    constexpr bool legal() const { return !(phi1 && (phi2 || phi2d)); }

    bool operator==(const PhaseVector&) const = default;
};

// Canonical shift cycle: transfer, restore, delayed restore.
inline constexpr PhaseVector kPhase1{true, false, false};
inline constexpr PhaseVector kPhase2{false, true, false};
inline constexpr PhaseVector kPhase3{false, true, true};

struct PhaseSchedule {
    std::vector<PhaseVector> steps;

    static PhaseSchedule canonical_cycle() { return {{kPhase1, kPhase2, kPhase3}}; }
};

struct ScheduleViolation {
    enum class Kind { Overlap, DelayOrder };
    std::size_t step = 0;
    Kind kind = Kind::Overlap;
    std::string detail;
};

// Flags every step that either overlaps phi1 with an intra-cell switch or
// raises phi2d while phi2 is low. Switches are assumed all-off before step 0.
std::vector<ScheduleViolation> check_schedule(const PhaseSchedule& sched);

// One shiftable cell: the inverter-loop datum plus node X, the dynamic node
// between the inter-cell gate and the intra-cell switches.
struct CellState {
    TriBit loop_bit = TriBit::Zero;
    TriBit node_x = TriBit::Zero;

    bool operator==(const CellState&) const = default;
};

// Explicit bit fed into a cell during a transfer phase, replacing the
// left-neighbour path (used at loop boundaries).
struct Injection {
    uint32_t cell = 0;
    TriBit bit = TriBit::Zero;
};

// A row of cells stepped at phase granularity. The corruption flag is sticky
// until the next full-row write.
struct RowCells {
    std::vector<CellState> cells;
    bool corrupted = false;
    // True between a transfer phase and the restore that latches it; a second
    // transfer in that window destroys the charge on node X.
    bool mid_transfer = false;
    // Previous switch state, for phi2d edge detection.
    PhaseVector last_pv{};

    RowCells() = default;
    explicit RowCells(std::size_t n) : cells(n) {}

    std::size_t width() const { return cells.size(); }
    bool clean() const { return !corrupted; }

    // Marks the whole row as charge-contended: all nodes Unknown, flag set.
    void poison();
};

// Applies one switch state. Transfer (phi1): each node X takes the left
// neighbour's loop bit, except cells named in `injections`. Restore
// (phi2/phi2d): every loop latches its node X. Illegal drive corrupts the row
// in-band instead of raising an error.
void apply_phase(RowCells& row, PhaseVector pv,
                 std::span<const Injection> injections = {});

// Canonical three-phase cycle with an external feed at cell 0; returns the
// bit shifted out of the rightmost cell. Throws SimError(CorruptedRow) when
// the row is already poisoned.
TriBit step_cycle(RowCells& row, TriBit injected);

}  // namespace fast
