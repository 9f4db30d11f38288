//! Closed-form move counts and the piecewise regime map.
//!
//! Four closed forms are known:
//!
//! | regime                | condition               | count        |
//! |-----------------------|-------------------------|--------------|
//! | three-peg exponential | `p = 3`                 | `2^n - 1`    |
//! | Menon linear          | `p-1 <= n <= p(p-1)/2`  | `4n - 2p + 1`|
//! | peg-disk equality     | `p = n`                 | `2n + 1`     |
//! | infinite-peg trivial  | `p > n`                 | `2n - 1`     |
//!
//! The conditions overlap, and no precedence is meaningful: [`classify`]
//! returns *every* applicable regime together with each closed-form value and
//! a consistency flag, instead of picking one row. Where no closed form
//! applies the recurrence is the only source of truth, marked by the
//! always-present [`Regime::FrameStewartGeneral`] tag.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::domain::{ExcessDisks, MoveCount, PuzzleInstance, MAX_EXACT_DISKS};
use crate::error::Error;

/// Piecewise regimes. A cell may satisfy several at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Regime {
    ThreePegExponential,
    MenonLinear,
    PegDiskEquality,
    InfinitePegTrivial,
    FrameStewartGeneral,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::ThreePegExponential => "ThreePegExponential",
            Regime::MenonLinear => "MenonLinear",
            Regime::PegDiskEquality => "PegDiskEquality",
            Regime::InfinitePegTrivial => "InfinitePegTrivial",
            Regime::FrameStewartGeneral => "FrameStewartGeneral",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which regimes an instance falls into, with every applicable closed-form
/// value. `consistent` is true iff all of those values agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegimeReport {
    pub p: u32,
    pub n: u32,
    pub tags: BTreeSet<Regime>,
    pub values: BTreeMap<Regime, MoveCount>,
    pub consistent: bool,
}

impl RegimeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("regime report serializes")
    }

    /// Tag names joined with `|`, in declaration order.
    pub fn tag_list(&self) -> String {
        let names: Vec<&str> = self.tags.iter().map(|t| t.name()).collect();
        names.join("|")
    }
}

/// Menon's linear count `4n - 2p + 1`, defined only on the conjecture domain
/// `p-1 <= n <= p(p-1)/2`. Out-of-domain instances are refused rather than
/// extrapolated.
pub fn menon_value(inst: &PuzzleInstance) -> Result<MoveCount, Error> {
    if !inst.in_conjecture_domain() {
        return Err(Error::OutsideConjectureDomain {
            pegs: inst.pegs(),
            disks: inst.disks(),
        });
    }
    let n = u128::from(inst.disks());
    let p = u128::from(inst.pegs());
    // n >= p - 1 makes 4n + 1 > 2p, so this cannot underflow.
    Ok(MoveCount(4 * n + 1 - 2 * p))
}

/// The same count parameterized by excess disks: `M(p, p+a) = 2p + 4a + 1`.
/// Requires `p >= 3` and `0 <= a <= p(p-3)/2`.
pub fn menon_value_excess(pegs: u32, excess: ExcessDisks) -> Result<MoveCount, Error> {
    if pegs < 3 {
        return Err(Error::PegCountTooSmall {
            pegs: i64::from(pegs),
        });
    }
    let max = u64::from(pegs) * u64::from(pegs - 3) / 2;
    if u64::from(excess.0) > max {
        return Err(Error::ExcessOutOfRange {
            pegs,
            excess: excess.0,
            max,
        });
    }
    Ok(MoveCount(
        2 * u128::from(pegs) + 4 * u128::from(excess.0) + 1,
    ))
}

/// Classic three-peg count `2^n - 1`, exact up to [`MAX_EXACT_DISKS`] disks.
pub fn three_peg_value(disks: u32) -> Result<MoveCount, Error> {
    if disks > MAX_EXACT_DISKS {
        return Err(Error::ExactRangeExceeded {
            disks,
            max: MAX_EXACT_DISKS,
        });
    }
    Ok(MoveCount((1u128 << disks) - 1))
}

/// Count when pegs equal disks: `2n + 1` (one staging move before and after
/// the largest disk compared with unlimited pegs). Meaningful for `n >= 2`;
/// at `n = 1` the formula gives 3 but a single disk needs only one move.
pub fn equality_value(disks: u32) -> MoveCount {
    MoveCount(2 * u128::from(disks) + 1)
}

/// Count with more pegs than disks: every disk but the largest moves off and
/// back once, `2n - 1`; zero disks need zero moves.
pub fn infinite_peg_value(disks: u32) -> MoveCount {
    if disks == 0 {
        MoveCount::ZERO
    } else {
        MoveCount(2 * u128::from(disks) - 1)
    }
}

/// Tags an instance with every regime it belongs to and evaluates each
/// applicable closed form.
///
/// The only closed form that can leave the exact range is the three-peg
/// exponential; for `p = 3` with more than [`MAX_EXACT_DISKS`] disks the tag
/// is still reported but its value entry is omitted.
pub fn classify(inst: &PuzzleInstance) -> RegimeReport {
    let (p, n) = (inst.pegs(), inst.disks());
    let mut tags = BTreeSet::new();
    let mut values = BTreeMap::new();

    if p == 3 {
        tags.insert(Regime::ThreePegExponential);
        if let Ok(v) = three_peg_value(n) {
            values.insert(Regime::ThreePegExponential, v);
        }
    }
    if inst.in_conjecture_domain() {
        tags.insert(Regime::MenonLinear);
        values.insert(
            Regime::MenonLinear,
            menon_value(inst).expect("instance is in the conjecture domain"),
        );
    }
    if p == n {
        tags.insert(Regime::PegDiskEquality);
        values.insert(Regime::PegDiskEquality, equality_value(n));
    }
    if p > n {
        tags.insert(Regime::InfinitePegTrivial);
        values.insert(Regime::InfinitePegTrivial, infinite_peg_value(n));
    }
    tags.insert(Regime::FrameStewartGeneral);

    let mut vals = values.values();
    let consistent = match vals.next() {
        Some(first) => vals.all(|v| v == first),
        None => true,
    };

    RegimeReport {
        p,
        n,
        tags,
        values,
        consistent,
    }
}

/// The linear count assembled from its three strategy phases plus the final
/// move of the largest disk:
///
/// ```text
/// (n-1)  clearing the largest disk
/// 2(n-p+1)  stack and unstack the disks that exceed the auxiliary pegs
/// (n-1) + 1  reassembly, plus the largest disk itself
/// ```
///
/// Always equals [`menon_value`] on the conjecture domain; both reduce to
/// `4n - 2p + 1`.
pub fn phase_accounting(inst: &PuzzleInstance) -> Result<MoveCount, Error> {
    if !inst.in_conjecture_domain() {
        return Err(Error::OutsideConjectureDomain {
            pegs: inst.pegs(),
            disks: inst.disks(),
        });
    }
    let n = u128::from(inst.disks());
    let p = u128::from(inst.pegs());
    let clearing = n - 1;
    let stacking = 2 * (n + 1 - p); // n >= p - 1 keeps this nonnegative
    let reassembly = (n - 1) + 1;
    Ok(MoveCount(clearing + stacking + reassembly))
}
