//! Export the regime-map grid: every (p, n) cell with its value, regime
//! tags, and the linear formula where applicable — ready for surface
//! plotting, where the exponential wall at p = 3 meets the linear plateau.

use hanoi::validation::export_regime_map;
use hanoi::FsTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = FsTable::build(12, 30)?;
    let map = export_regime_map(&table, 12, 30)?;

    let path = std::env::temp_dir().join("regime_map.csv");
    std::fs::write(&path, &map)?;
    println!(
        "wrote {} grid rows to {}",
        map.lines().count() - 1,
        path.display()
    );

    // A slice of the p = 4 row around the domain boundary n = 6: linear up
    // to 17, then the recurrence pulls away from the formula.
    for line in map.lines().filter(|l| l.starts_with("4,")) {
        let n: u32 = line.split(',').nth(1).unwrap().parse().unwrap();
        if (4..=8).contains(&n) {
            println!("{line}");
        }
    }
    Ok(())
}
