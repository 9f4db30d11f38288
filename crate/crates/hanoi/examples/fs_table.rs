//! Build the Frame-Stewart table, query values and splits, export CSV.

use hanoi::{FsTable, PuzzleInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = FsTable::build(20, 50)?;

    for (p, n) in [(3i64, 10i64), (4, 7), (5, 8), (15, 28), (20, 50)] {
        let inst = PuzzleInstance::new(p, n)?;
        print!("M({p},{n}) = {}", table.value(&inst)?);
        match table.best_split(&inst) {
            Ok(k) => println!("   (smallest optimal split k = {k})"),
            Err(_) => println!("   (no split: p = 3 or n < 2)"),
        }
    }

    // The whole table as CSV, one row per (p, n) cell.
    let path = std::env::temp_dir().join("fs_table.csv");
    std::fs::write(&path, table.to_csv())?;
    println!(
        "wrote {} rows to {}",
        (table.p_max() - 2) * (table.n_max() + 1),
        path.display()
    );
    Ok(())
}
