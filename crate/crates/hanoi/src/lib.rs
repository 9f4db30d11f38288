//! Multi-peg Tower of Hanoi toolkit.
//!
//! With three pegs the optimal move count for `n` disks is the classic
//! `2^n - 1`. With more pegs the presumed-optimal count comes from the
//! Frame-Stewart recurrence
//!
//! ```text
//! M(p,n) = min over 1 <= k < n of  2*M(p,k) + M(p-1,n-k)
//! ```
//!
//! and, remarkably, collapses to the linear form `4n - 2p + 1` (Menon's
//! conjecture) on the whole band `p-1 <= n <= p(p-1)/2`. This crate computes,
//! cross-checks, and realizes those counts:
//!
//! - [`FsTable`] builds the full dynamic-programming table with the smallest
//!   optimal split per cell, exportable as CSV.
//! - [`closed_form`] evaluates every known closed form, classifies any cell
//!   into its (possibly overlapping) regimes, and checks their consistency.
//! - [`strategy`] turns the recurrence into explicit legal move sequences,
//!   streamed or materialized, and replays arbitrary sequences to validate
//!   them.
//! - [`oracle`] is the independent ground truth: exhaustive breadth-first
//!   search over the full `p^n`-state configuration graph.
//! - [`validation`] sweeps the conjecture domain, compares the table against
//!   the linear formula, and exports plot-ready regime-map grids.
//!
//! # Example
//!
//! ```
//! use hanoi::{FsTable, PuzzleInstance};
//!
//! let table = FsTable::build(5, 8)?;
//! let inst = PuzzleInstance::new(5, 8)?;
//! assert_eq!(table.value(&inst)?.get(), 23);
//! assert_eq!(hanoi::closed_form::menon_value(&inst)?.get(), 23);
//!
//! let moves = hanoi::strategy::generate_moves(&table, &inst, 0, 4)?;
//! assert_eq!(moves.len(), 23);
//! # Ok::<(), hanoi::Error>(())
//! ```
//!
//! The `hanoi` binary exposes all of this as subcommands; see the crate
//! examples for library usage per capability.

pub mod cli;
pub mod closed_form;
pub mod domain;
pub mod error;
pub mod frame_stewart;
pub mod oracle;
pub mod strategy;
pub mod validation;

pub use domain::{ExcessDisks, Move, MoveCount, PegState, PuzzleInstance, MAX_EXACT_DISKS};
pub use error::{Error, IllegalMoveReason};
pub use frame_stewart::FsTable;
pub use oracle::SearchBudget;
pub use strategy::MoveSequence;
