//! Evaluate every closed form and classify cells into overlapping regimes.

use hanoi::closed_form::{
    classify, equality_value, infinite_peg_value, menon_value, menon_value_excess,
    phase_accounting, three_peg_value,
};
use hanoi::{ExcessDisks, PuzzleInstance};

fn main() -> Result<(), hanoi::Error> {
    println!("three pegs:    M(3,10) = {}", three_peg_value(10)?);
    println!("equality:      M(7,7)  = {}", equality_value(7));
    println!("many pegs:     M(9,5)  = {}", infinite_peg_value(5));

    let inst = PuzzleInstance::new(5, 8)?;
    println!("linear:        M(5,8)  = {}", menon_value(&inst)?);
    println!(
        "same, via excess disks a = 3:    2p + 4a + 1 = {}",
        menon_value_excess(5, ExcessDisks(3))?
    );
    println!(
        "same, by phase accounting:       (n-1) + 2(n-p+1) + n = {}",
        phase_accounting(&inst)?
    );

    // Overlapping cells: every applicable closed form must agree.
    println!();
    for (p, n) in [(4i64, 4i64), (5, 4), (3, 3), (4, 7)] {
        let report = classify(&PuzzleInstance::new(p, n)?);
        println!("({p},{n}): {}", report.to_json());
    }
    Ok(())
}
