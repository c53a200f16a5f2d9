//! Slice a vertex along some of its half-edges and glue it back.
//!
//! cargo run --example surgery

use unimap::enumerate::{enum_unicellular, EnumOptions};
use unimap::surgery::{glue_halfedges, reglue_spec, slice_vertex, SliceSpec};

fn main() -> unimap::Result<()> {
    let maps = enum_unicellular(1, 3, &EnumOptions::default())?;
    let m = maps.iter().find(|m| m.vertices().len() == 2).expect("a two-vertex torus map");
    println!("map: {m}");
    let v = m.vertices().into_iter().max_by_key(|&v| m.vertex_degree(v).unwrap()).unwrap();
    let cycle = m.vertex_cycle(v)?;
    println!("slicing {v} with cycle {cycle:?}");

    for k in 2..=cycle.len() {
        let spec = SliceSpec::new(v, cycle[..k].iter().copied());
        let sliced = slice_vertex(m, &spec)?;
        let glue = reglue_spec(m, &spec)?;
        let back = glue_halfedges(&sliced, &glue)?;
        println!(
            "cut {:?}: {} vertices, {} faces, glue {:?} restores map: {}",
            spec.cut_set,
            sliced.vertex_count(),
            sliced.face_count(),
            glue.tuple,
            &back == m.map()
        );
    }
    Ok(())
}
