//! Slicing a vertex along some of its half-edges, and the inverse gluing of
//! several vertices along an ordered tuple of half-edges. Both leave `alpha`
//! untouched and return maps with the input's labels.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{CombMap, HalfEdge, Permutation, VertexId};

/// Which vertex to slice, and the half-edges that each start a new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceSpec {
    pub vertex: VertexId,
    pub cut_set: BTreeSet<HalfEdge>,
}

impl SliceSpec {
    pub fn new(vertex: VertexId, cut_set: impl IntoIterator<Item = HalfEdge>) -> Self {
        SliceSpec {
            vertex,
            cut_set: cut_set.into_iter().collect(),
        }
    }
}

/// An ordered tuple of half-edges lying on pairwise distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueSpec {
    pub tuple: Vec<HalfEdge>,
}

impl GlueSpec {
    pub fn new(tuple: impl IntoIterator<Item = HalfEdge>) -> Self {
        GlueSpec {
            tuple: tuple.into_iter().collect(),
        }
    }
}

/// Splits the vertex cycle, rotated to start at `min(C)`, before every
/// element of `C`. The result has `|C| - 1` more vertices and may be
/// disconnected.
pub fn slice_vertex(m: &CombMap, spec: &SliceSpec) -> Result<CombMap> {
    let first = *spec.cut_set.iter().next().ok_or(Error::EmptyCutSet)?;
    let cycle = m.vertex_cycle(spec.vertex)?;
    for &h in &spec.cut_set {
        if !cycle.contains(&h) {
            return Err(Error::HalfEdgeNotOnVertex {
                half_edge: h,
                vertex: spec.vertex.0,
            });
        }
    }
    let offset = cycle.iter().position(|&h| h == first).unwrap();
    let rotated: Vec<HalfEdge> = cycle[offset..]
        .iter()
        .chain(&cycle[..offset])
        .copied()
        .collect();
    let mut beta = m.beta().images().to_vec();
    beta.insert(0, 0);
    let mut start = 0;
    for j in 0..rotated.len() {
        let last_of_block = j + 1 == rotated.len() || spec.cut_set.contains(&rotated[j + 1]);
        beta[rotated[j] as usize] = if last_of_block {
            rotated[start]
        } else {
            rotated[j + 1]
        };
        if last_of_block {
            start = j + 1;
        }
    }
    Ok(CombMap::from_parts_unchecked(
        m.alpha().clone(),
        Permutation::from_raw(beta),
    ))
}

/// The gluing that undoes `slice_vertex(m, spec)`: the cut half-edges in
/// the order met around the vertex starting from `min(C)`.
pub fn reglue_spec(m: &CombMap, spec: &SliceSpec) -> Result<GlueSpec> {
    let first = *spec.cut_set.iter().next().ok_or(Error::EmptyCutSet)?;
    let cycle = m.vertex_cycle(spec.vertex)?;
    let offset = cycle.iter().position(|&h| h == first).ok_or(Error::HalfEdgeNotOnVertex {
        half_edge: first,
        vertex: spec.vertex.0,
    })?;
    Ok(GlueSpec::new(
        cycle[offset..]
            .iter()
            .chain(&cycle[..offset])
            .copied()
            .filter(|h| spec.cut_set.contains(h)),
    ))
}

/// Replaces the vertices `(i_l, j^l_1, ..., j^l_{n_l})` of the tuple entries
/// by the single cycle `(i_1, j^1..., i_2, j^2..., ..., i_k, j^k...)`.
pub fn glue_halfedges(m: &CombMap, spec: &GlueSpec) -> Result<CombMap> {
    let tuple = &spec.tuple;
    if tuple.len() < 2 {
        return Err(Error::GlueTooShort(tuple.len()));
    }
    let mut seen = BTreeSet::new();
    for &h in tuple {
        m.check_half_edge(h)?;
        if !seen.insert(h) {
            return Err(Error::DuplicateHalfEdge(h));
        }
    }
    let table = m.vertex_table();
    for (a, &x) in tuple.iter().enumerate() {
        for &y in &tuple[a + 1..] {
            if table[x as usize] == table[y as usize] {
                return Err(Error::SameVertex(x, y));
            }
        }
    }
    let mut merged = Vec::new();
    for &h in tuple {
        merged.push(h);
        let mut x = m.beta().apply(h);
        while x != h {
            merged.push(x);
            x = m.beta().apply(x);
        }
    }
    let mut beta = m.beta().images().to_vec();
    beta.insert(0, 0);
    for j in 0..merged.len() {
        beta[merged[j] as usize] = merged[(j + 1) % merged.len()];
    }
    Ok(CombMap::from_parts_unchecked(
        m.alpha().clone(),
        Permutation::from_raw(beta),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::RootedMap;

    fn torus() -> RootedMap {
        RootedMap::from_alpha(Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap())
            .unwrap()
    }

    #[test]
    fn single_cut_is_identity() {
        let m = torus();
        for h in 1..=4 {
            let s = slice_vertex(&m, &SliceSpec::new(VertexId(1), [h])).unwrap();
            assert_eq!(&s, m.map());
        }
    }

    #[test]
    fn slicing_the_torus_vertex() {
        let m = torus();
        let s = slice_vertex(&m, &SliceSpec::new(VertexId(1), [1, 3])).unwrap();
        // beta = (1,4,3,2) splits into (1,4)(3,2)
        assert_eq!(s.beta().cycles(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(s.vertex_count(), 2);
        // one more vertex forces the face count to change parity
        assert_eq!(s.face_count(), 2);
        assert_eq!(s.genus().unwrap(), 0);
        assert_eq!(s.alpha(), m.alpha());
    }

    #[test]
    fn slice_errors() {
        let m = torus();
        assert!(matches!(
            slice_vertex(&m, &SliceSpec::new(VertexId(1), [])),
            Err(Error::EmptyCutSet)
        ));
        let tree = RootedMap::from_alpha(Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap())
            .unwrap();
        let v = tree.vertex_of(1).unwrap();
        assert!(matches!(
            slice_vertex(&tree, &SliceSpec::new(v, [1, 2])),
            Err(Error::HalfEdgeNotOnVertex { half_edge: 2, .. })
        ));
    }

    #[test]
    fn gluing_one_edge_tree() {
        let tree = RootedMap::from_alpha(Permutation::from_cycles(2, &[vec![1, 2]]).unwrap()).unwrap();
        let g = glue_halfedges(&tree, &GlueSpec::new([1, 2])).unwrap();
        assert_eq!(g.beta().cycles(), vec![vec![1, 2]]);
        assert_eq!(g.vertex_count(), tree.vertex_count() - 1);
        assert_eq!(g.n(), 1);
    }

    #[test]
    fn glue_errors() {
        let m = torus();
        assert!(matches!(
            glue_halfedges(&m, &GlueSpec::new([1])),
            Err(Error::GlueTooShort(1))
        ));
        assert!(matches!(
            glue_halfedges(&m, &GlueSpec::new([1, 1])),
            Err(Error::DuplicateHalfEdge(1))
        ));
        assert!(matches!(
            glue_halfedges(&m, &GlueSpec::new([1, 3])),
            Err(Error::SameVertex(1, 3))
        ));
    }

    #[test]
    fn three_half_edge_glue_then_slice() {
        // star with three leaves rooted at the centre
        let star = RootedMap::from_alpha(
            Permutation::from_cycles(6, &[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap(),
        )
        .unwrap();
        let glued = glue_halfedges(&star, &GlueSpec::new([2, 4, 6])).unwrap();
        assert_eq!(glued.vertex_count(), 2);
        let v = glued.vertex_of(2).unwrap();
        let back = slice_vertex(&glued, &SliceSpec::new(v, [2, 4, 6])).unwrap();
        assert_eq!(&back, star.map());
    }
}
