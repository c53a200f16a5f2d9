//! Core, scheme and the decomposition of a map into a scheme plus one
//! doubly marked tree per scheme edge.
//!
//! cargo run --example decomposition

use unimap::enumerate::{enum_unicellular, EnumOptions};
use unimap::io::{to_json, DecompositionFile};
use unimap::scheme::{decompose, is_dominant, prune_core, recompose, scheme_of};

fn main() -> unimap::Result<()> {
    let maps = enum_unicellular(1, 5, &EnumOptions::default())?;
    let m = maps.iter().find(|m| is_dominant(m) && m.vertex_count() == 4).expect("a dominant map");
    println!("map: {m}");

    let core = prune_core(m)?;
    println!("core: {} (root {} in the map)", core.map, core.root_in_parent);
    let scheme = scheme_of(m)?;
    println!("scheme: {} edges {:?} dominant {}", scheme.map, scheme.edges, scheme.is_dominant());

    let d = decompose(m)?;
    for (i, t) in d.trees.iter().enumerate() {
        println!("edge {i}: tree with {} edges marked at {}", t.tree.n(), t.mark);
    }
    println!("root mark {:?}", d.root_mark);
    assert_eq!(&recompose(&d)?, m);
    print!("{}", to_json(&DecompositionFile::from_value(&d))?);
    Ok(())
}
