//! Generate explicit optimal-length move sequences and validate them by
//! replay, both materialized and streamed.

use hanoi::strategy::{generate_moves, simulate, visit_moves};
use hanoi::{FsTable, PuzzleInstance};

fn main() -> Result<(), hanoi::Error> {
    let table = FsTable::build(6, 30)?;

    // Materialize a small sequence and replay it.
    let inst = PuzzleInstance::new(4, 6)?;
    let seq = generate_moves(&table, &inst, 0, 3)?;
    println!("(4,6): {} moves", seq.len());
    for mv in &seq.moves[..5] {
        println!("  {mv}");
    }
    println!("  ...");
    let end = simulate(&seq, 0, 3)?;
    println!("replay ends with all disks on peg 3: {}", end.is_all_on(3));

    // Stream a sequence too long to keep in memory all at once; here we just
    // count, but any consumer (writer, incremental checker) fits the closure.
    let big = PuzzleInstance::new(3, 24)?;
    let mut count = 0u64;
    let emitted = visit_moves(&table, &big, 0, 2, |_| count += 1)?;
    println!(
        "(3,24): streamed {emitted} moves (2^24 - 1 = {})",
        (1u64 << 24) - 1
    );
    assert_eq!(u128::from(count), emitted.get());
    Ok(())
}
