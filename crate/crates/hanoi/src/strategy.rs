//! Explicit move sequences: generation, streaming, and replay validation.
//!
//! Generation interprets the recurrence constructively. To move the top `d`
//! disks from `from` to `to` with the available peg set:
//!
//! 1. park the top `k` disks on a spare peg, using every available peg;
//! 2. move the remaining `d - k` disks to the target with the spare peg
//!    frozen (one fewer peg available);
//! 3. move the parked `k` disks onto the target, using every available peg.
//!
//! `k` is always the table's recorded smallest optimal split, so the emitted
//! sequence length equals the table value by construction. With three
//! available pegs the classic recursion takes over. The spare peg is the
//! lowest-indexed available peg that is neither source nor target.
//!
//! Sequences can be streamed into a callback ([`visit_moves`]) or
//! materialized ([`generate_moves`]); materialization is refused up front
//! when the known length exceeds the caller's limit, since a three-peg tower
//! of 30 disks already exceeds 10^9 moves.

use std::io::{self, Write};

use crate::domain::{Move, MoveCount, PegState, PuzzleInstance};
use crate::error::{Error, IllegalMoveReason};
use crate::frame_stewart::FsTable;

/// Move generation tracks available pegs in a 128-bit mask.
pub const MAX_GENERATION_PEGS: u32 = 128;

/// Default cap for materialized sequences.
pub const DEFAULT_MOVE_LIMIT: u64 = 10_000_000;

/// An ordered list of moves for one puzzle instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub instance: PuzzleInstance,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// CSV export: `step,disk,from,to` with 1-based steps.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "step,disk,from,to")?;
        for (i, mv) in self.moves.iter().enumerate() {
            writeln!(w, "{},{},{},{}", i + 1, mv.disk, mv.from, mv.to)?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }
}

fn check_generation_args(
    table: &FsTable,
    inst: &PuzzleInstance,
    source: u32,
    target: u32,
) -> Result<MoveCount, Error> {
    let expected = table.value(inst)?;
    let pegs = inst.pegs();
    if pegs > MAX_GENERATION_PEGS {
        return Err(Error::TooManyPegs {
            pegs,
            max: MAX_GENERATION_PEGS,
        });
    }
    for peg in [source, target] {
        if peg >= pegs {
            return Err(Error::PegOutOfRange { peg, pegs });
        }
    }
    if source == target {
        return Err(Error::SourceEqualsTarget { peg: source });
    }
    Ok(expected)
}

struct Generator<'t, F> {
    table: &'t FsTable,
    sink: F,
    emitted: u128,
}

impl<F: FnMut(Move)> Generator<'_, F> {
    /// Moves disks `first..=last` (a contiguous block, `first` smallest) from
    /// `from` to `to`. `avail` is the bitmask of usable pegs and always
    /// contains `from` and `to` plus at least one spare.
    fn transfer(&mut self, first: u32, last: u32, from: u32, to: u32, avail: u128) {
        if first == last {
            self.emitted += 1;
            (self.sink)(Move {
                disk: first,
                from,
                to,
            });
            return;
        }
        let spares = avail & !(1u128 << from) & !(1u128 << to);
        let spare = spares.trailing_zeros();
        if avail.count_ones() == 3 {
            self.transfer(first, last - 1, from, spare, avail);
            self.emitted += 1;
            (self.sink)(Move {
                disk: last,
                from,
                to,
            });
            self.transfer(first, last - 1, spare, to, avail);
        } else {
            let d = last - first + 1;
            let k = u32::from(self.table.split_at(avail.count_ones(), d));
            self.transfer(first, first + k - 1, from, spare, avail);
            self.transfer(first + k, last, from, to, avail & !(1u128 << spare));
            self.transfer(first, first + k - 1, spare, to, avail);
        }
    }
}

/// Streams the optimal-length sequence for `inst` into `f` without
/// materializing it. Returns the number of moves emitted, which always
/// equals the table value.
pub fn visit_moves<F: FnMut(Move)>(
    table: &FsTable,
    inst: &PuzzleInstance,
    source: u32,
    target: u32,
    f: F,
) -> Result<MoveCount, Error> {
    check_generation_args(table, inst, source, target)?;
    if inst.disks() == 0 {
        return Ok(MoveCount::ZERO);
    }
    let all_pegs: u128 = !0u128 >> (128 - inst.pegs());
    let mut generator = Generator {
        table,
        sink: f,
        emitted: 0,
    };
    generator.transfer(1, inst.disks(), source, target, all_pegs);
    Ok(MoveCount(generator.emitted))
}

/// Materializes the sequence, refusing when its (precomputed) length exceeds
/// `limit`.
pub fn generate_moves_limited(
    table: &FsTable,
    inst: &PuzzleInstance,
    source: u32,
    target: u32,
    limit: u64,
) -> Result<MoveSequence, Error> {
    let expected = check_generation_args(table, inst, source, target)?;
    if expected.get() > u128::from(limit) {
        return Err(Error::SequenceTooLong {
            expected: expected.get(),
            limit,
        });
    }
    let mut moves = Vec::with_capacity(expected.get() as usize);
    visit_moves(table, inst, source, target, |mv| moves.push(mv))?;
    Ok(MoveSequence {
        instance: *inst,
        moves,
    })
}

/// [`generate_moves_limited`] with the default cap of [`DEFAULT_MOVE_LIMIT`].
pub fn generate_moves(
    table: &FsTable,
    inst: &PuzzleInstance,
    source: u32,
    target: u32,
) -> Result<MoveSequence, Error> {
    generate_moves_limited(table, inst, source, target, DEFAULT_MOVE_LIMIT)
}

/// Incremental legality checker. Feed it moves one at a time; it rejects the
/// first illegal one with its index and reason.
#[derive(Debug, Clone)]
pub struct Simulator {
    pegs: u32,
    disks: u32,
    // stacks[q] lists the disks on peg q, bottom to top
    stacks: Vec<Vec<u32>>,
    steps: usize,
}

impl Simulator {
    pub fn new(inst: &PuzzleInstance, source: u32) -> Result<Self, Error> {
        if source >= inst.pegs() {
            return Err(Error::PegOutOfRange {
                peg: source,
                pegs: inst.pegs(),
            });
        }
        let mut stacks = vec![Vec::new(); inst.pegs() as usize];
        stacks[source as usize] = (1..=inst.disks()).rev().collect();
        Ok(Self {
            pegs: inst.pegs(),
            disks: inst.disks(),
            stacks,
            steps: 0,
        })
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    fn reject(&self, reason: IllegalMoveReason) -> Error {
        Error::IllegalMove {
            index: self.steps,
            reason,
        }
    }

    pub fn apply(&mut self, mv: Move) -> Result<(), Error> {
        if mv.disk == 0
            || mv.disk > self.disks
            || mv.from >= self.pegs
            || mv.to >= self.pegs
            || mv.from == mv.to
        {
            return Err(self.reject(IllegalMoveReason::MalformedMove));
        }
        match self.stacks[mv.from as usize].last() {
            Some(&top) if top == mv.disk => {}
            Some(_) if self.stacks[mv.from as usize].contains(&mv.disk) => {
                return Err(self.reject(IllegalMoveReason::NotTopmost));
            }
            _ => return Err(self.reject(IllegalMoveReason::WrongSourcePeg)),
        }
        if let Some(&dest_top) = self.stacks[mv.to as usize].last() {
            if dest_top < mv.disk {
                return Err(self.reject(IllegalMoveReason::LargerOntoSmaller));
            }
        }
        self.stacks[mv.from as usize].pop();
        self.stacks[mv.to as usize].push(mv.disk);
        self.steps += 1;
        Ok(())
    }

    /// Current configuration as a disk-to-peg assignment.
    pub fn state(&self) -> PegState {
        let mut assignment = vec![0u32; self.disks as usize];
        for (peg, stack) in self.stacks.iter().enumerate() {
            for &disk in stack {
                assignment[(disk - 1) as usize] = peg as u32;
            }
        }
        PegState::from_assignment(self.pegs, assignment).expect("pegs in range by construction")
    }
}

/// Replays a sequence from the all-on-`source` configuration and returns the
/// final state, or the first illegal move. Whether the final state actually
/// sits on `target` is the caller's check ([`PegState::is_all_on`]).
pub fn simulate(seq: &MoveSequence, source: u32, target: u32) -> Result<PegState, Error> {
    if target >= seq.instance.pegs() {
        return Err(Error::PegOutOfRange {
            peg: target,
            pegs: seq.instance.pegs(),
        });
    }
    let mut sim = Simulator::new(&seq.instance, source)?;
    for &mv in &seq.moves {
        sim.apply(mv)?;
    }
    Ok(sim.state())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(p: i64, n: i64) -> PuzzleInstance {
        PuzzleInstance::new(p, n).unwrap()
    }

    fn mv(disk: u32, from: u32, to: u32) -> Move {
        Move { disk, from, to }
    }

    #[test]
    fn classic_two_disk_solution() {
        let table = FsTable::build(3, 2).unwrap();
        let seq = generate_moves(&table, &inst(3, 2), 0, 2).unwrap();
        assert_eq!(seq.moves, vec![mv(1, 0, 1), mv(2, 0, 2), mv(1, 1, 2)]);
        let end = simulate(&seq, 0, 2).unwrap();
        assert!(end.is_all_on(2));
    }

    #[test]
    fn zero_disks_empty_sequence() {
        let table = FsTable::build(5, 3).unwrap();
        let seq = generate_moves(&table, &inst(5, 0), 0, 4).unwrap();
        assert!(seq.is_empty());
        assert!(simulate(&seq, 0, 4).unwrap().is_all_on(4));
    }

    #[test]
    fn four_pegs_four_disks_has_nine_moves() {
        let table = FsTable::build(4, 4).unwrap();
        let seq = generate_moves(&table, &inst(4, 4), 0, 3).unwrap();
        assert_eq!(seq.len(), 9);
        assert!(simulate(&seq, 0, 3).unwrap().is_all_on(3));
    }

    #[test]
    fn generated_sequences_are_legal_and_optimal_length() {
        let table = FsTable::build(8, 12).unwrap();
        for p in 3..=8i64 {
            for n in 0..=12i64 {
                let i = inst(p, n);
                let seq = generate_moves(&table, &i, 0, (p - 1) as u32).unwrap();
                assert_eq!(
                    seq.len() as u128,
                    table.value(&i).unwrap().get(),
                    "length mismatch at ({p},{n})"
                );
                let end = simulate(&seq, 0, (p - 1) as u32).unwrap();
                assert!(end.is_all_on((p - 1) as u32), "not solved at ({p},{n})");
            }
        }
    }

    #[test]
    fn streaming_counts_match_without_materializing() {
        let table = FsTable::build(4, 10).unwrap();
        let mut count = 0u64;
        let emitted = visit_moves(&table, &inst(4, 10), 0, 3, |_| count += 1).unwrap();
        assert_eq!(u128::from(count), emitted.get());
        assert_eq!(emitted, table.value(&inst(4, 10)).unwrap());
    }

    #[test]
    fn generation_is_deterministic() {
        let table = FsTable::build(6, 9).unwrap();
        let a = generate_moves(&table, &inst(6, 9), 0, 5).unwrap();
        let b = generate_moves(&table, &inst(6, 9), 0, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spare_peg_stays_frozen_during_middle_stage() {
        let table = FsTable::build(6, 10).unwrap();
        for (p, n) in [(4i64, 6i64), (5, 8), (6, 10)] {
            let i = inst(p, n);
            let source = 0u32;
            let target = (p - 1) as u32;
            let seq = generate_moves(&table, &i, source, target).unwrap();

            let k = table.best_split(&i).unwrap();
            let stage1 = table.value(&inst(p, i64::from(k))).unwrap().get() as usize;
            let stage2 = table.value(&inst(p - 1, n - i64::from(k))).unwrap().get() as usize;

            // After stage 1 the parked block sits on the spare peg.
            let mut sim = Simulator::new(&i, source).unwrap();
            for &m in &seq.moves[..stage1] {
                sim.apply(m).unwrap();
            }
            let spare = sim.state().peg_of(k);
            assert_ne!(spare, source);
            assert_ne!(spare, target);
            for (offset, m) in seq.moves[stage1..stage1 + stage2].iter().enumerate() {
                assert!(
                    m.from != spare && m.to != spare,
                    "({p},{n}): move {} touches the frozen peg {spare}",
                    stage1 + offset
                );
            }
        }
    }

    #[test]
    fn middle_stage_splits_come_from_the_reduced_row() {
        // For (5,8) the middle stage solves (4,6); its parked block must obey
        // the 4-peg row's split, which the sequence length already certifies:
        // any other k would change the total length away from the table value.
        let table = FsTable::build(5, 8).unwrap();
        let seq = generate_moves(&table, &inst(5, 8), 0, 4).unwrap();
        assert_eq!(seq.len() as u128, 23);
    }

    #[test]
    fn materialization_limit_is_checked_before_generating() {
        let table = FsTable::build(3, 40).unwrap();
        let start = std::time::Instant::now();
        let err = generate_moves_limited(&table, &inst(3, 40), 0, 2, 1000);
        assert_eq!(
            err,
            Err(Error::SequenceTooLong {
                expected: (1 << 40) - 1,
                limit: 1000
            })
        );
        // The refusal must come from the precomputed length, not from
        // attempting to emit 2^40 moves.
        assert!(start.elapsed().as_secs() < 1);
    }

    #[test]
    fn replay_rejects_moving_a_buried_disk() {
        let seq = MoveSequence {
            instance: inst(3, 2),
            moves: vec![mv(2, 0, 1)],
        };
        assert_eq!(
            simulate(&seq, 0, 2),
            Err(Error::IllegalMove {
                index: 0,
                reason: IllegalMoveReason::NotTopmost
            })
        );
    }

    #[test]
    fn replay_rejects_wrong_source_peg() {
        let seq = MoveSequence {
            instance: inst(3, 1),
            moves: vec![mv(1, 1, 2)],
        };
        assert_eq!(
            simulate(&seq, 0, 2),
            Err(Error::IllegalMove {
                index: 0,
                reason: IllegalMoveReason::WrongSourcePeg
            })
        );
    }

    #[test]
    fn replay_rejects_larger_onto_smaller() {
        let seq = MoveSequence {
            instance: inst(3, 2),
            moves: vec![mv(1, 0, 1), mv(2, 0, 1)],
        };
        assert_eq!(
            simulate(&seq, 0, 2),
            Err(Error::IllegalMove {
                index: 1,
                reason: IllegalMoveReason::LargerOntoSmaller
            })
        );
    }

    #[test]
    fn replay_rejects_malformed_moves() {
        let seq = MoveSequence {
            instance: inst(3, 2),
            moves: vec![mv(3, 0, 1)],
        };
        assert_eq!(
            simulate(&seq, 0, 2),
            Err(Error::IllegalMove {
                index: 0,
                reason: IllegalMoveReason::MalformedMove
            })
        );
        let same_peg = MoveSequence {
            instance: inst(3, 2),
            moves: vec![mv(1, 0, 0)],
        };
        assert!(simulate(&same_peg, 0, 2).is_err());
    }

    #[test]
    fn csv_layout() {
        let table = FsTable::build(3, 2).unwrap();
        let seq = generate_moves(&table, &inst(3, 2), 0, 2).unwrap();
        assert_eq!(
            seq.to_csv(),
            "step,disk,from,to\n1,1,0,1\n2,2,0,2\n3,1,1,2\n"
        );
    }

    proptest::proptest! {
        #[test]
        fn arbitrary_peg_pairs_still_solve(p in 3i64..=7, n in 0i64..=9, s in 0u32..7, t in 0u32..7) {
            let source = s % p as u32;
            let target = t % p as u32;
            proptest::prop_assume!(source != target);
            let table = FsTable::build(p as u32, n as u32).unwrap();
            let i = inst(p, n);
            let seq = generate_moves(&table, &i, source, target).unwrap();
            proptest::prop_assert_eq!(seq.len() as u128, table.value(&i).unwrap().get());
            let end = simulate(&seq, source, target).unwrap();
            proptest::prop_assert!(end.is_all_on(target));
        }
    }
}
