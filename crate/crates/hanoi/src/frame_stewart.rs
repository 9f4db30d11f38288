//! Frame-Stewart dynamic-programming table.
//!
//! The table holds `M(p,n)` for every `3 <= p <= p_max`, `0 <= n <= n_max`,
//! filled by the recurrence
//!
//! ```text
//! M(p,n) = min over 1 <= k < n of  2*M(p,k) + M(p-1,n-k)
//! ```
//!
//! with base cases `M(p,0) = 0`, `M(p,1) = 1` and the closed three-peg row
//! `M(3,n) = 2^n - 1`. For `p >= 4`, `n >= 2` the smallest optimal split `k`
//! is recorded alongside the value.
//!
//! Construction is `O(p_max * n_max^2)` and deterministic: identical bounds
//! always produce byte-identical tables.

use std::io::{self, Write};

use crate::domain::{MoveCount, PuzzleInstance, MAX_EXACT_DISKS};
use crate::error::Error;

/// Fully materialized `(p, n) -> move count` table with split metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsTable {
    p_max: u32,
    n_max: u32,
    values: Vec<u128>,
    // Smallest optimal k for p >= 4, n >= 2; 0 where no split is defined.
    splits: Vec<u16>,
}

impl FsTable {
    /// Builds the full table. `p_max` must be at least 3, and `n_max` may not
    /// exceed [`MAX_EXACT_DISKS`] so the three-peg row stays exactly
    /// representable.
    pub fn build(p_max: u32, n_max: u32) -> Result<Self, Error> {
        if p_max < 3 {
            return Err(Error::PegCountTooSmall {
                pegs: i64::from(p_max),
            });
        }
        if n_max > MAX_EXACT_DISKS {
            return Err(Error::ExactRangeExceeded {
                disks: n_max,
                max: MAX_EXACT_DISKS,
            });
        }

        let rows = (p_max - 2) as usize;
        let cols = (n_max + 1) as usize;
        let mut values = vec![0u128; rows * cols];
        let mut splits = vec![0u16; rows * cols];

        // Three-peg row straight from the closed form.
        for (n, slot) in values[..cols].iter_mut().enumerate() {
            *slot = (1u128 << n) - 1;
        }

        for p in 4..=p_max {
            let row = (p - 3) as usize * cols;
            let prev = row - cols;
            if n_max >= 1 {
                values[row + 1] = 1;
            }
            for n in 2..=n_max as usize {
                let mut best = u128::MAX;
                let mut best_k = 0u16;
                for k in 1..n {
                    let cand = 2 * values[row + k] + values[prev + (n - k)];
                    if cand < best {
                        best = cand;
                        best_k = k as u16;
                    }
                }
                values[row + n] = best;
                splits[row + n] = best_k;
            }
        }

        Ok(Self {
            p_max,
            n_max,
            values,
            splits,
        })
    }

    pub fn p_max(&self) -> u32 {
        self.p_max
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn contains(&self, inst: &PuzzleInstance) -> bool {
        inst.pegs() <= self.p_max && inst.disks() <= self.n_max
    }

    fn check_bounds(&self, inst: &PuzzleInstance) -> Result<(), Error> {
        if self.contains(inst) {
            Ok(())
        } else {
            Err(Error::OutOfTableRange {
                pegs: inst.pegs(),
                disks: inst.disks(),
                p_max: self.p_max,
                n_max: self.n_max,
            })
        }
    }

    fn idx(&self, p: u32, n: u32) -> usize {
        (p - 3) as usize * (self.n_max + 1) as usize + n as usize
    }

    pub(crate) fn value_at(&self, p: u32, n: u32) -> u128 {
        self.values[self.idx(p, n)]
    }

    pub(crate) fn split_at(&self, p: u32, n: u32) -> u16 {
        self.splits[self.idx(p, n)]
    }

    /// `M(p,n)` for an instance within the table bounds.
    pub fn value(&self, inst: &PuzzleInstance) -> Result<MoveCount, Error> {
        self.check_bounds(inst)?;
        Ok(MoveCount(self.value_at(inst.pegs(), inst.disks())))
    }

    /// Smallest `k` minimizing `2*M(p,k) + M(p-1,n-k)`. Defined only for
    /// `p >= 4` and `n >= 2`; the three-peg row and single-disk columns have
    /// no split.
    pub fn best_split(&self, inst: &PuzzleInstance) -> Result<u32, Error> {
        self.check_bounds(inst)?;
        if inst.pegs() < 4 || inst.disks() < 2 {
            return Err(Error::NoSplit {
                pegs: inst.pegs(),
                disks: inst.disks(),
            });
        }
        Ok(u32::from(self.split_at(inst.pegs(), inst.disks())))
    }

    /// Writes the whole table as CSV: `p,n,value,best_split`, with the split
    /// column empty where no split is defined. Rows are ordered by `p`, then
    /// `n`, so output is deterministic.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "p,n,value,best_split")?;
        for p in 3..=self.p_max {
            for n in 0..=self.n_max {
                if p >= 4 && n >= 2 {
                    writeln!(
                        w,
                        "{},{},{},{}",
                        p,
                        n,
                        self.value_at(p, n),
                        self.split_at(p, n)
                    )?;
                } else {
                    writeln!(w, "{},{},{},", p, n, self.value_at(p, n))?;
                }
            }
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

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(p: i64, n: i64) -> PuzzleInstance {
        PuzzleInstance::new(p, n).unwrap()
    }

    #[test]
    fn sweep_corner_value() {
        let table = FsTable::build(20, 50).unwrap();
        assert_eq!(table.value(&inst(20, 50)).unwrap(), MoveCount(161));
    }

    #[test]
    fn published_spot_values() {
        let table = FsTable::build(15, 28).unwrap();
        assert_eq!(table.value(&inst(5, 8)).unwrap(), MoveCount(23));
        assert_eq!(table.value(&inst(15, 28)).unwrap(), MoveCount(83));
    }

    #[test]
    fn base_cases() {
        let table = FsTable::build(5, 10).unwrap();
        for p in 3..=5 {
            assert_eq!(table.value(&inst(p, 0)).unwrap(), MoveCount(0));
            assert_eq!(table.value(&inst(p, 1)).unwrap(), MoveCount(1));
        }
    }

    #[test]
    fn three_peg_row_is_exponential() {
        let table = FsTable::build(4, 50).unwrap();
        for n in 0..=50u32 {
            assert_eq!(
                table.value(&inst(3, i64::from(n))).unwrap(),
                MoveCount((1u128 << n) - 1)
            );
        }
        assert_eq!(table.value(&inst(3, 5)).unwrap(), MoveCount(31));
    }

    #[test]
    fn just_past_the_linear_domain() {
        // Independently confirmed by exhaustive search over the 4^7-state graph.
        let table = FsTable::build(4, 7).unwrap();
        assert_eq!(table.value(&inst(4, 7)).unwrap(), MoveCount(25));
    }

    #[test]
    fn smallest_optimal_split_is_reported() {
        let table = FsTable::build(6, 10).unwrap();
        // k=1 -> 2*1+7=9, k=2 -> 2*3+3=9, k=3 -> 2*5+1=11: least argmin is 1.
        assert_eq!(table.best_split(&inst(4, 4)).unwrap(), 1);
        for p in 4..=6 {
            assert_eq!(table.best_split(&inst(p, 2)).unwrap(), 1);
        }
    }

    #[test]
    fn split_attains_the_value() {
        let table = FsTable::build(5, 8).unwrap();
        let k = table.best_split(&inst(5, 8)).unwrap();
        let attained = 2 * table.value_at(5, k) + table.value_at(4, 8 - k);
        assert_eq!(attained, 23);
        // And no k does better.
        let best = (1..8)
            .map(|k| 2 * table.value_at(5, k) + table.value_at(4, 8 - k))
            .min();
        assert_eq!(best, Some(23));
    }

    #[test]
    fn no_split_cases() {
        let table = FsTable::build(5, 5).unwrap();
        assert!(matches!(
            table.best_split(&inst(3, 5)),
            Err(Error::NoSplit { .. })
        ));
        assert!(matches!(
            table.best_split(&inst(4, 1)),
            Err(Error::NoSplit { .. })
        ));
    }

    #[test]
    fn out_of_range_is_rejected() {
        let table = FsTable::build(5, 10).unwrap();
        assert!(matches!(
            table.value(&inst(6, 5)),
            Err(Error::OutOfTableRange { .. })
        ));
        assert!(matches!(
            table.value(&inst(4, 11)),
            Err(Error::OutOfTableRange { .. })
        ));
    }

    #[test]
    fn build_bounds_are_enforced() {
        assert!(matches!(
            FsTable::build(2, 5),
            Err(Error::PegCountTooSmall { pegs: 2 })
        ));
        assert!(matches!(
            FsTable::build(3, 128),
            Err(Error::ExactRangeExceeded { disks: 128, .. })
        ));
        // The widest supported table still builds.
        let table = FsTable::build(3, MAX_EXACT_DISKS).unwrap();
        assert_eq!(
            table.value_at(3, MAX_EXACT_DISKS),
            u128::MAX / 2 // 2^127 - 1
        );
    }

    #[test]
    fn trivial_regime_rows() {
        let table = FsTable::build(9, 8).unwrap();
        for p in 3..=9u32 {
            for n in 1..p.min(9) {
                assert_eq!(
                    table.value_at(p, n),
                    2 * u128::from(n) - 1,
                    "values({p},{n})"
                );
            }
        }
    }

    #[test]
    fn monotonic_and_odd() {
        let table = FsTable::build(10, 30).unwrap();
        for p in 3..=10 {
            for n in 0..30 {
                assert!(table.value_at(p, n + 1) > table.value_at(p, n));
            }
        }
        for p in 3..10 {
            for n in 0..=30 {
                assert!(table.value_at(p + 1, n) <= table.value_at(p, n));
            }
        }
        for p in 3..=10 {
            for n in 1..=30 {
                assert_eq!(table.value_at(p, n) % 2, 1);
            }
        }
    }

    #[test]
    fn identical_bounds_give_identical_tables() {
        let a = FsTable::build(12, 40).unwrap();
        let b = FsTable::build(12, 40).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn csv_shape() {
        let table = FsTable::build(4, 2).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "p,n,value,best_split");
        assert_eq!(lines.len(), 1 + 2 * 3);
        assert_eq!(lines[1], "3,0,0,");
        assert_eq!(lines[3], "3,2,3,");
        assert_eq!(lines[6], "4,2,3,1");
    }
}
