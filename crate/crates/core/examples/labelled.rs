//! Labelled maps and trees: the labelled bijection and the walk-counting
//! series identities.
//!
//! cargo run --release --example labelled

use unimap::bijection::opening_sequences;
use unimap::enumerate::{enum_dominant, EnumOptions};
use unimap::labelled::{all_labellings, labelled_phi, labelled_psi, series_checks, LabelledMap, DEFAULT_SERIES_BOUND};

fn main() -> unimap::Result<()> {
    let maps = enum_dominant(1, 3, &EnumOptions::default())?;
    let m = &maps[0];
    let labellings = all_labellings(m);
    println!("map {m} has {} labellings", labellings.len());
    for l in labellings.iter().take(3) {
        let lm = LabelledMap::new(m.clone(), l.clone())?;
        for seq in opening_sequences(m)? {
            let w = labelled_phi(&lm, &seq)?;
            let (back, _) = labelled_psi(&w)?;
            println!(
                "labels {:?} seq {:?} -> increments {:?}, triple labels {:?}, back {}",
                l.labels.values().collect::<Vec<_>>(),
                seq.nodes,
                w.labelled.increments,
                w.triple_labels(),
                back == lm
            );
        }
    }

    let report = series_checks(12, DEFAULT_SERIES_BOUND, 6)?;
    for c in &report.checks {
        println!("{} {} (order {})", if c.passed { "ok  " } else { "FAIL" }, c.name, c.order);
    }
    Ok(())
}
