//! Exhaustive counts of rooted unicellular maps by genus, dominant maps,
//! trees with triples and schemes, printed as a count table.
//!
//! cargo run --release --example enumerate -- [n_max]

use unimap::enumerate::{
    catalan, count_by_genus, count_dominant_schemes, dominant_schemes, enum_dominant,
    enum_trees_with_triples, CountTable, EnumOptions, Generator,
};

fn main() -> unimap::Result<()> {
    let n_max: u32 = std::env::args().nth(1).map_or(6, |a| a.parse().expect("integer"));
    let opts = EnumOptions::default();
    let mut table = CountTable::default();
    for n in 1..=n_max {
        for (g, c) in count_by_genus(n, &opts)?.into_iter().enumerate() {
            table.push(g as u32, n, c, Generator::BruteForce);
        }
        table.push(0, n, catalan(n as u64), Generator::Formula);
    }
    print!("{}", table.to_csv());
    assert!(table.disagreements().is_empty());

    println!("n,dominant genus-1 maps,trees with one triple");
    for n in 2..=n_max {
        let maps = enum_dominant(1, n, &opts)?.len();
        let trees = enum_trees_with_triples(1, n as usize, &opts)?.len();
        println!("{n},{maps},{trees}");
    }
    println!(
        "genus-1 dominant schemes: {} (formula {})",
        count_dominant_schemes(1, &opts)?,
        dominant_schemes(1)?
    );
    Ok(())
}
