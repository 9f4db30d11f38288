//! Conjecture sweep: compare the recurrence table against the linear formula
//! over the whole domain, and export grid datasets for surface plots.
//!
//! A sweep walks `p` from `p_min` to `p_max` and, per `p`, every `n` from the
//! configured lower bound (`p`, or `p-1` for the widest stated domain) up to
//! `min(n_max, p(p-1)/2)`. Domain cells cut off by `n_max` are counted as
//! skipped. Cases are emitted in `(p, n)` order and rendering is fully
//! deterministic, so repeated runs produce byte-identical reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::closed_form::{classify, menon_value};
use crate::domain::{MoveCount, PuzzleInstance};
use crate::error::Error;
use crate::frame_stewart::FsTable;
use crate::oracle::{oracle_value, SearchBudget};

/// Where each peg row of the sweep starts: at `n = p` (the excess-disk
/// parameterization, `a >= 0`) or at `n = p - 1` (the widest domain on which
/// the linear formula is stated).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundMode {
    FromP,
    FromPMinus1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationConfig {
    pub p_min: u32,
    pub p_max: u32,
    pub n_max: u32,
    pub lower_bound_mode: LowerBoundMode,
    pub include_oracle: bool,
    pub format: ReportFormat,
    /// Exhaustive-search budget used when `include_oracle` is set; cells with
    /// more states than this keep an empty oracle column.
    pub max_states: u64,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        Self {
            p_min: 4,
            p_max: 20,
            n_max: 50,
            lower_bound_mode: LowerBoundMode::FromP,
            include_oracle: false,
            format: ReportFormat::Json,
            max_states: SearchBudget::default().max_states,
        }
    }
}

impl ValidationConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.p_min < 3 || self.p_min > self.p_max || self.n_max < self.p_min {
            return Err(Error::InvalidSweepBounds {
                p_min: self.p_min,
                p_max: self.p_max,
                n_max: self.n_max,
            });
        }
        Ok(())
    }
}

/// One sweep cell: the recurrence value against the linear formula.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationCase {
    pub p: u32,
    pub n: u32,
    /// Excess disks `n - p`; `-1` on rows starting at `n = p - 1`.
    pub a: i64,
    pub fs: MoveCount,
    pub menon: MoveCount,
    #[serde(rename = "match")]
    pub is_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<MoveCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agree: Option<bool>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ValidationSummary {
    pub cases: usize,
    pub matches: usize,
    pub mismatches: usize,
    /// In-domain cells excluded because `n > n_max`.
    pub skipped: usize,
}

/// The sweep totals reported by earlier write-ups disagree with each other,
/// so the enumerated count is the only one this crate stands behind.
pub const CASE_COUNT_NOTE: &str = "case count is the direct enumeration of the configured domain; \
previously circulated totals for this sweep (1140 and 475) are mutually inconsistent and are not \
used as expected values";

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub note: &'static str,
    pub config: ValidationConfig,
    pub summary: ValidationSummary,
    pub cases: Vec<ValidationCase>,
}

impl ValidationReport {
    pub fn has_mismatches(&self) -> bool {
        self.summary.mismatches > 0
    }

    pub fn oracle_disagreements(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.oracle_agree == Some(false))
            .count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// CSV body with the same fields as the JSON cases, preceded by `#`
    /// comment lines carrying the note, config, and summary.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# note: {}", self.note);
        let _ = writeln!(
            out,
            "# config: p_min={} p_max={} n_max={} lower_bound_mode={} include_oracle={} max_states={}",
            self.config.p_min,
            self.config.p_max,
            self.config.n_max,
            match self.config.lower_bound_mode {
                LowerBoundMode::FromP => "from_p",
                LowerBoundMode::FromPMinus1 => "from_p_minus1",
            },
            self.config.include_oracle,
            self.config.max_states,
        );
        let _ = writeln!(
            out,
            "# summary: cases={} matches={} mismatches={} skipped={}",
            self.summary.cases, self.summary.matches, self.summary.mismatches, self.summary.skipped
        );
        if self.config.include_oracle {
            out.push_str("p,n,a,fs,menon,match,oracle,oracle_agree\n");
        } else {
            out.push_str("p,n,a,fs,menon,match\n");
        }
        for c in &self.cases {
            let _ = write!(
                out,
                "{},{},{},{},{},{}",
                c.p, c.n, c.a, c.fs, c.menon, c.is_match
            );
            if self.config.include_oracle {
                let oracle = c.oracle.map(|v| v.to_string()).unwrap_or_default();
                let agree = c.oracle_agree.map(|v| v.to_string()).unwrap_or_default();
                let _ = write!(out, ",{},{}", oracle, agree);
            }
            out.push('\n');
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Json => self.to_json(),
        }
    }
}

/// Runs the sweep described by `config`. Mismatches never abort the run;
/// they are tallied so callers can reflect them in an exit status.
pub fn run_validation(config: &ValidationConfig) -> Result<ValidationReport, Error> {
    config.validate()?;
    let table = FsTable::build(config.p_max, config.n_max)?;
    let budget = SearchBudget::new(config.max_states);

    let mut cases = Vec::new();
    let mut matches = 0usize;
    let mut skipped = 0usize;
    for p in config.p_min..=config.p_max {
        let lo = match config.lower_bound_mode {
            LowerBoundMode::FromP => p,
            LowerBoundMode::FromPMinus1 => p - 1,
        };
        let domain_hi = u64::from(p) * u64::from(p - 1) / 2;
        let hi = domain_hi.min(u64::from(config.n_max)) as u32;
        let first_cut = u64::from(lo.max(config.n_max + 1));
        if domain_hi >= first_cut {
            skipped += (domain_hi - first_cut + 1) as usize;
        }
        for n in lo..=hi {
            let inst = PuzzleInstance::new(i64::from(p), i64::from(n))
                .expect("sweep bounds were validated");
            let fs = table.value(&inst).expect("cell is inside the table");
            let menon = menon_value(&inst).expect("cell is inside the conjecture domain");
            let is_match = fs == menon;
            if is_match {
                matches += 1;
            }
            let (oracle, oracle_agree) = if config.include_oracle {
                match oracle_value(&inst, &budget) {
                    Ok(v) => (Some(v), Some(v == fs)),
                    Err(Error::BudgetExceeded { .. }) => (None, None),
                    Err(e) => return Err(e),
                }
            } else {
                (None, None)
            };
            cases.push(ValidationCase {
                p,
                n,
                a: i64::from(n) - i64::from(p),
                fs,
                menon,
                is_match,
                oracle,
                oracle_agree,
            });
        }
    }

    let summary = ValidationSummary {
        cases: cases.len(),
        matches,
        mismatches: cases.len() - matches,
        skipped,
    };
    Ok(ValidationReport {
        note: CASE_COUNT_NOTE,
        config: config.clone(),
        summary,
        cases,
    })
}

/// Header of the grid dataset produced by [`export_regime_map`].
pub const REGIME_MAP_HEADER: &str = "p,n,fs_value,tags,menon_applicable,menon_value_or_blank";

/// Full `(p, n)` grid with the recurrence value, regime tags, and the linear
/// formula where it applies — one row per cell, ready for surface plotting.
/// The grid must lie within the given table.
pub fn export_regime_map(table: &FsTable, p_max: u32, n_max: u32) -> Result<String, Error> {
    if p_max < 3 {
        return Err(Error::PegCountTooSmall {
            pegs: i64::from(p_max),
        });
    }
    if p_max > table.p_max() || n_max > table.n_max() {
        return Err(Error::OutOfTableRange {
            pegs: p_max,
            disks: n_max,
            p_max: table.p_max(),
            n_max: table.n_max(),
        });
    }
    let mut out = String::new();
    out.push_str(REGIME_MAP_HEADER);
    out.push('\n');
    for p in 3..=p_max {
        for n in 0..=n_max {
            let inst = PuzzleInstance::new(i64::from(p), i64::from(n)).expect("p >= 3");
            let fs = table.value(&inst).expect("grid is inside the table");
            let report = classify(&inst);
            let menon_cell = menon_value(&inst)
                .map(|v| v.to_string())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                p,
                n,
                fs,
                report.tag_list(),
                inst.in_conjecture_domain(),
                menon_cell
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_sweep_matches_the_enumerated_domain() {
        let report = run_validation(&ValidationConfig::default()).unwrap();
        // |{(p,n): 4<=p<=20, p<=n<=min(50, p(p-1)/2)}|, enumerated separately.
        assert_eq!(report.summary.cases, 474);
        assert_eq!(report.summary.matches, 474);
        assert_eq!(report.summary.mismatches, 0);
        assert_eq!(report.summary.skipped, 665);
        assert!(!report.has_mismatches());
        assert_eq!(report.cases.len(), report.summary.cases);
    }

    #[test]
    fn widest_domain_sweep_also_matches() {
        let config = ValidationConfig {
            lower_bound_mode: LowerBoundMode::FromPMinus1,
            ..Default::default()
        };
        let report = run_validation(&config).unwrap();
        assert_eq!(report.summary.cases, 491); // 474 plus one n = p-1 cell per p
        assert_eq!(report.summary.mismatches, 0);
        assert_eq!(report.summary.skipped, 665);
    }

    #[test]
    fn single_row_sweep() {
        let config = ValidationConfig {
            p_min: 5,
            p_max: 5,
            n_max: 10,
            lower_bound_mode: LowerBoundMode::FromPMinus1,
            ..Default::default()
        };
        let report = run_validation(&config).unwrap();
        assert_eq!(report.summary.cases, 7); // n = 4..=10
        assert_eq!(report.summary.mismatches, 0);
        let ns: Vec<u32> = report.cases.iter().map(|c| c.n).collect();
        assert_eq!(ns, vec![4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(report.cases[0].a, -1);
    }

    #[test]
    fn cases_are_ordered_and_within_bounds() {
        let report = run_validation(&ValidationConfig::default()).unwrap();
        for pair in report.cases.windows(2) {
            assert!((pair[0].p, pair[0].n) < (pair[1].p, pair[1].n));
        }
        for c in &report.cases {
            assert!(c.p >= 4 && c.p <= 20);
            assert!(u64::from(c.n) <= u64::from(c.p) * u64::from(c.p - 1) / 2);
            assert!(c.n <= 50);
            assert_eq!(c.a, i64::from(c.n) - i64::from(c.p));
        }
    }

    #[test]
    fn repeated_runs_render_identically() {
        let config = ValidationConfig {
            p_max: 8,
            n_max: 20,
            ..Default::default()
        };
        let a = run_validation(&config).unwrap();
        let b = run_validation(&config).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn oracle_column_populates_within_budget() {
        let config = ValidationConfig {
            p_min: 4,
            p_max: 4,
            n_max: 6,
            include_oracle: true,
            ..Default::default()
        };
        let report = run_validation(&config).unwrap();
        assert!(!report.cases.is_empty());
        for c in &report.cases {
            assert_eq!(c.oracle, Some(c.fs), "({},{})", c.p, c.n);
            assert_eq!(c.oracle_agree, Some(true));
        }
        assert_eq!(report.oracle_disagreements(), 0);
        let csv = report.to_csv();
        assert!(csv.contains("p,n,a,fs,menon,match,oracle,oracle_agree"));
    }

    #[test]
    fn over_budget_cells_leave_the_oracle_blank() {
        let config = ValidationConfig {
            p_min: 4,
            p_max: 4,
            n_max: 6,
            include_oracle: true,
            max_states: 100,
            ..Default::default()
        };
        let report = run_validation(&config).unwrap();
        for c in &report.cases {
            assert_eq!(c.oracle, None);
        }
        let csv = report.to_csv();
        assert!(csv
            .lines()
            .any(|l| l.starts_with("4,4,") && l.ends_with(",,")));
    }

    #[test]
    fn formula_fails_strictly_past_each_row_boundary() {
        // One cell past n = p(p-1)/2 the linear formula undershoots, so the
        // upper edge of the domain is sharp. Formula read arithmetically
        // here: the library evaluator refuses out-of-domain cells.
        let table = FsTable::build(8, 50).unwrap();
        for p in 4u32..=8 {
            let n = p * (p - 1) / 2 + 1;
            let inst = PuzzleInstance::new(i64::from(p), i64::from(n)).unwrap();
            let fs = table.value(&inst).unwrap().get();
            let linear = 4 * u128::from(n) + 1 - 2 * u128::from(p);
            assert!(fs > linear, "no strict gap at ({p},{n}): {fs} vs {linear}");
        }
    }

    #[test]
    fn bad_bounds_are_rejected() {
        for config in [
            ValidationConfig {
                p_min: 2,
                ..Default::default()
            },
            ValidationConfig {
                p_min: 10,
                p_max: 9,
                ..Default::default()
            },
            ValidationConfig {
                p_min: 6,
                n_max: 5,
                ..Default::default()
            },
        ] {
            assert!(matches!(
                run_validation(&config),
                Err(Error::InvalidSweepBounds { .. })
            ));
        }
    }

    #[test]
    fn json_schema_fields() {
        let config = ValidationConfig {
            p_min: 4,
            p_max: 5,
            n_max: 8,
            ..Default::default()
        };
        let report = run_validation(&config).unwrap();
        let json = report.to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(value["note"].is_string());
        assert_eq!(value["config"]["p_min"], 4);
        assert_eq!(value["config"]["lower_bound_mode"], "from_p");
        assert_eq!(
            value["summary"]["cases"].as_u64().unwrap() as usize,
            report.summary.cases
        );
        let first = &value["cases"][0];
        assert_eq!(first["p"], 4);
        assert_eq!(first["n"], 4);
        assert_eq!(first["a"], 0);
        assert_eq!(first["fs"], 9);
        assert_eq!(first["menon"], 9);
        assert_eq!(first["match"], true);
        assert!(first.get("oracle").is_none());
    }

    #[test]
    fn regime_map_grid() {
        let table = FsTable::build(6, 10).unwrap();
        let map = export_regime_map(&table, 6, 10).unwrap();
        let lines: Vec<&str> = map.lines().collect();
        assert_eq!(lines[0], REGIME_MAP_HEADER);
        assert_eq!(lines.len(), 1 + 4 * 11);
        assert!(lines.contains(&"3,10,1023,ThreePegExponential|FrameStewartGeneral,false,"));
        assert!(lines.contains(&"4,7,25,FrameStewartGeneral,false,"));
        assert!(lines.contains(&"4,4,9,MenonLinear|PegDiskEquality|FrameStewartGeneral,true,9"));
        assert!(lines.contains(&"6,0,0,InfinitePegTrivial|FrameStewartGeneral,false,"));
    }

    #[test]
    fn regime_map_respects_table_bounds() {
        let table = FsTable::build(5, 10).unwrap();
        assert!(matches!(
            export_regime_map(&table, 6, 10),
            Err(Error::OutOfTableRange { .. })
        ));
        assert!(matches!(
            export_regime_map(&table, 5, 11),
            Err(Error::OutOfTableRange { .. })
        ));
    }
}
