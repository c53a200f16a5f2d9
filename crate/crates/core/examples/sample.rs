//! Uniform samplers: plane trees, labelled trees, trees with triples,
//! dominant maps and well-labelled trees with triples.
//!
//! cargo run --release --example sample -- [g] [n] [seed]

use unimap::scheme::is_dominant;
use unimap::stats::{
    sample_dominant_map, sample_labelled_tree, sample_plane_tree, sample_tree_with_triples,
    sample_well_labelled, w_statistic, SeededRng,
};

fn main() -> unimap::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let g = *args.first().unwrap_or(&1) as usize;
    let n = *args.get(1).unwrap_or(&200) as usize;
    let mut rng = SeededRng::new(*args.get(2).unwrap_or(&3)).stream(0);

    let t = sample_plane_tree(n, &mut rng)?;
    println!("plane tree: {} vertices", t.vertex_count());
    let lt = sample_labelled_tree(n, &mut rng)?;
    println!("labelled tree: W = {:.4}", w_statistic(&lt));
    let tc = sample_tree_with_triples(g, n, &mut rng)?;
    println!("tree with triples: {:?}", tc.triples());
    let m = sample_dominant_map(g, n, &mut rng)?;
    println!("dominant map: genus {} dominant {}", m.genus()?, is_dominant(&m));
    let w = sample_well_labelled(g, n, &mut rng)?;
    println!("well-labelled: triples {:?} with labels {:?}", w.base.triples(), w.triple_labels());
    Ok(())
}
