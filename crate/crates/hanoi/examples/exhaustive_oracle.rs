//! Cross-check the recurrence against exhaustive breadth-first search over
//! the full configuration graph.

use hanoi::oracle::{oracle_path, oracle_value, report_line, REPORT_HEADER};
use hanoi::strategy::simulate;
use hanoi::{FsTable, PuzzleInstance, SearchBudget};

fn main() -> Result<(), hanoi::Error> {
    let budget = SearchBudget::default();
    let table = FsTable::build(8, 10)?;

    println!("{REPORT_HEADER}");
    for (p, n) in [(3i64, 7i64), (4, 6), (4, 7), (5, 8), (6, 6), (8, 5)] {
        let inst = PuzzleInstance::new(p, n)?;
        let oracle = oracle_value(&inst, &budget)?;
        let fs = table.value(&inst)?;
        let menon = hanoi::closed_form::menon_value(&inst).ok();
        println!("{}", report_line(&inst, oracle, fs, menon));
    }

    // One shortest sequence, found by the search itself (no recurrence
    // involved), replayed for legality.
    let inst = PuzzleInstance::new(4, 4)?;
    let path = oracle_path(&inst, &budget)?;
    let end = simulate(&path, 0, 3)?;
    println!(
        "\nshortest (4,4) path: {} moves, solved = {}",
        path.len(),
        end.is_all_on(3)
    );
    Ok(())
}
