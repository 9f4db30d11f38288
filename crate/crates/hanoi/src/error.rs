//! Error types shared across the crate.

use std::fmt;

/// Why a replayed move was rejected by the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IllegalMoveReason {
    /// The disk exists on `from`, but a smaller disk sits on top of it.
    NotTopmost,
    /// The destination peg's top disk is smaller than the moved disk.
    LargerOntoSmaller,
    /// The disk is not on the claimed source peg at all.
    WrongSourcePeg,
    /// Disk or peg index out of range, or source equals destination.
    MalformedMove,
}

impl fmt::Display for IllegalMoveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IllegalMoveReason::NotTopmost => "disk is not topmost on its source peg",
            IllegalMoveReason::LargerOntoSmaller => "would place a larger disk onto a smaller one",
            IllegalMoveReason::WrongSourcePeg => "disk is not on the claimed source peg",
            IllegalMoveReason::MalformedMove => "disk or peg index is out of range",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("peg count {pegs} is too small: at least 3 pegs are required")]
    PegCountTooSmall { pegs: i64 },

    #[error("disk count {disks} is negative")]
    NegativeDisks { disks: i64 },

    #[error("{disks} disks exceed the exact-arithmetic range ({max} disks for 128-bit counts)")]
    ExactRangeExceeded { disks: u32, max: u32 },

    #[error("instance ({pegs},{disks}) is outside the table bounds (p <= {p_max}, n <= {n_max})")]
    OutOfTableRange {
        pegs: u32,
        disks: u32,
        p_max: u32,
        n_max: u32,
    },

    #[error("no split is defined for ({pegs},{disks}): splits require p >= 4 and n >= 2")]
    NoSplit { pegs: u32, disks: u32 },

    #[error("({pegs},{disks}) is outside the conjecture domain p-1 <= n <= p(p-1)/2")]
    OutsideConjectureDomain { pegs: u32, disks: u32 },

    #[error("excess disk count {excess} is out of range for {pegs} pegs (0 <= a <= {max})")]
    ExcessOutOfRange { pegs: u32, excess: u32, max: u64 },

    #[error("peg index {peg} is out of range for {pegs} pegs")]
    PegOutOfRange { peg: u32, pegs: u32 },

    #[error("source and target pegs must differ (both are {peg})")]
    SourceEqualsTarget { peg: u32 },

    #[error("move generation supports at most {max} pegs, got {pegs}")]
    TooManyPegs { pegs: u32, max: u32 },

    #[error("move {index} is illegal: {reason}")]
    IllegalMove {
        index: usize,
        reason: IllegalMoveReason,
    },

    #[error("sequence has {expected} moves, over the materialization limit of {limit}")]
    SequenceTooLong { expected: u128, limit: u64 },

    #[error("state space of {states} states exceeds the search budget of {max_states}")]
    BudgetExceeded { states: u128, max_states: u64 },

    #[error("invalid sweep bounds: need 3 <= p_min <= p_max and n_max >= p_min (got p_min={p_min}, p_max={p_max}, n_max={n_max})")]
    InvalidSweepBounds { p_min: u32, p_max: u32, n_max: u32 },
}
