//! Build maps from permutations, read off vertices/faces/genus and put a
//! map in canonical form.
//!
//! cargo run --example maps

use unimap::{CombMap, Permutation};

fn main() -> unimap::Result<()> {
    // one vertex, two edges, crossing: the torus with one face
    let alpha = Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]])?;
    let beta = Permutation::from_cycles(4, &[vec![1, 4, 3, 2]])?;
    let m = CombMap::new(alpha, beta)?;
    println!("{m}");
    println!(
        "vertices={} faces={} genus={} unicellular={}",
        m.vertex_count(),
        m.face_count(),
        m.genus()?,
        m.is_unicellular()
    );

    // rerooting at half-edge 3 relabels so that gamma = (1 2 3 4)
    let (rooted, pi) = m.canonicalize(3)?;
    println!("canonical at 3: {rooted}");
    println!("relabelling old -> new: {pi}");
    for v in rooted.vertices() {
        println!("{v}: cycle {:?}", rooted.vertex_cycle(v)?);
    }
    Ok(())
}
