//! Open a dominant map into a plane tree with g triples along an opening
//! sequence, and close it back.
//!
//! cargo run --example open_close -- [g] [n] [seed]

use unimap::bijection::{close_psi, intertwined_nodes, open_phi, opening_sequences};
use unimap::stats::{sample_dominant_map, SeededRng};

fn main() -> unimap::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let g = *args.first().unwrap_or(&2) as usize;
    let n = *args.get(1).unwrap_or(&40) as usize;
    let seed = *args.get(2).unwrap_or(&7);

    let m = sample_dominant_map(g, n, &mut SeededRng::new(seed).stream(0))?;
    println!("genus {} map with {} edges, {} vertices", m.genus()?, m.n(), m.vertex_count());
    println!("intertwined nodes: {:?}", intertwined_nodes(&m)?);

    let seqs = opening_sequences(&m)?;
    println!("{} opening sequences", seqs.len());
    for seq in seqs.iter().take(4) {
        let tc = open_phi(&m, seq)?;
        let (back, back_seq) = close_psi(&tc)?;
        println!(
            "sequence {:?} -> triples {:?}, closes back: {}",
            seq.nodes,
            tc.triples(),
            back == m && &back_seq == seq
        );
    }
    Ok(())
}
