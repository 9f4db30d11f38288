//! Core domain types: puzzle instances, exact move counts, disk moves, and
//! full board states.
//!
//! Everything here is an immutable value type. Move counts are kept as exact
//! integers; the widest value any API can produce is `2^MAX_EXACT_DISKS - 1`,
//! which is enforced wherever a three-peg (exponential) count is computed.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// Largest disk count for which `2^n - 1` is exactly representable in the
/// 128-bit counters used throughout the crate.
pub const MAX_EXACT_DISKS: u32 = 127;

/// A `(pegs, disks)` pair. Construction validates `pegs >= 3` and `disks >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PuzzleInstance {
    pegs: u32,
    disks: u32,
}

impl PuzzleInstance {
    /// Validates and builds an instance. Fewer than 3 pegs is rejected:
    /// 2 pegs cannot solve more than one disk and 0 or 1 pegs are degenerate.
    pub fn new(pegs: i64, disks: i64) -> Result<Self, Error> {
        if pegs < 3 {
            return Err(Error::PegCountTooSmall { pegs });
        }
        if disks < 0 {
            return Err(Error::NegativeDisks { disks });
        }
        Ok(Self {
            pegs: pegs as u32,
            disks: disks as u32,
        })
    }

    pub fn pegs(&self) -> u32 {
        self.pegs
    }

    pub fn disks(&self) -> u32 {
        self.disks
    }

    /// Upper edge of the linear (Menon) domain: `p(p-1)/2`.
    pub fn conjecture_domain_max(&self) -> u64 {
        let p = self.pegs as u64;
        p * (p - 1) / 2
    }

    /// True iff `p-1 <= n <= p(p-1)/2`, the domain on which the linear
    /// closed form `4n - 2p + 1` is conjectured to be optimal.
    pub fn in_conjecture_domain(&self) -> bool {
        let n = self.disks as u64;
        n + 1 >= self.pegs as u64 && n <= self.conjecture_domain_max()
    }
}

impl fmt::Display for PuzzleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pegs, self.disks)
    }
}

/// An exact nonnegative move count.
///
/// Backed by `u128`, which holds every value up to `2^127 - 1`; producers of
/// exponential counts bound their input by [`MAX_EXACT_DISKS`] so no silent
/// overflow can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MoveCount(pub u128);

impl MoveCount {
    pub const ZERO: MoveCount = MoveCount(0);

    pub fn get(self) -> u128 {
        self.0
    }

    /// `true` for odd counts; every nonzero optimal Hanoi count is odd.
    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }
}

impl From<u128> for MoveCount {
    fn from(v: u128) -> Self {
        MoveCount(v)
    }
}

impl fmt::Display for MoveCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Plain decimal, never scientific notation.
        self.0.fmt(f)
    }
}

/// Number of disks beyond the peg count: `a` with `n = p + a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExcessDisks(pub u32);

impl ExcessDisks {
    /// Splits `n = p + a` for an instance with at least as many disks as pegs.
    /// Returns `None` when `n < p`.
    pub fn from_instance(inst: &PuzzleInstance) -> Option<Self> {
        inst.disks.checked_sub(inst.pegs).map(ExcessDisks)
    }
}

/// One disk relocation. Disks are numbered `1..=n` with 1 the smallest;
/// pegs are numbered `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub disk: u32,
    pub from: u32,
    pub to: u32,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "disk {} {}->{}", self.disk, self.from, self.to)
    }
}

/// A full board configuration: which peg each disk sits on.
///
/// Within a peg the stacking order is forced by size (smaller above larger),
/// so the disk-to-peg assignment determines every stack completely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PegState {
    pegs: u32,
    assignment: Vec<u32>,
}

impl PegState {
    /// All `n` disks stacked on one peg.
    pub fn all_on(inst: &PuzzleInstance, peg: u32) -> Result<Self, Error> {
        if peg >= inst.pegs() {
            return Err(Error::PegOutOfRange {
                peg,
                pegs: inst.pegs(),
            });
        }
        Ok(Self {
            pegs: inst.pegs(),
            assignment: vec![peg; inst.disks() as usize],
        })
    }

    /// Builds a state from an explicit disk-to-peg assignment
    /// (`assignment[i]` is the peg of disk `i + 1`).
    pub fn from_assignment(pegs: u32, assignment: Vec<u32>) -> Result<Self, Error> {
        if let Some(&bad) = assignment.iter().find(|&&q| q >= pegs) {
            return Err(Error::PegOutOfRange { peg: bad, pegs });
        }
        Ok(Self { pegs, assignment })
    }

    pub fn pegs(&self) -> u32 {
        self.pegs
    }

    pub fn disks(&self) -> u32 {
        self.assignment.len() as u32
    }

    /// Peg of `disk` (1-based). Panics if the disk does not exist.
    pub fn peg_of(&self, disk: u32) -> u32 {
        self.assignment[(disk - 1) as usize]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Smallest (= topmost) disk on `peg`, if any.
    pub fn top_disk(&self, peg: u32) -> Option<u32> {
        self.assignment
            .iter()
            .position(|&q| q == peg)
            .map(|i| i as u32 + 1)
    }

    /// True iff every disk is on `peg`. Vacuously true with zero disks.
    pub fn is_all_on(&self, peg: u32) -> bool {
        self.assignment.iter().all(|&q| q == peg)
    }
}
