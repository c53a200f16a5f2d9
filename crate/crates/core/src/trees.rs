//! Rooted plane trees in canonical form.
//!
//! In a canonical tree the face tour `1, 2, ..., 2n` is the contour walk
//! from the root, so an edge `{h, alpha(h)}` with `h < alpha(h)` is first
//! walked away from the root: `h` sits at the parent, `alpha(h)` at the child.

use crate::error::{Error, Result};
use crate::perm::{HalfEdge, Permutation, RootedMap, VertexId};

/// The canonical tree whose contour is the Dyck word `steps`
/// (`true` = step away from the root).
pub fn tree_from_dyck(steps: &[bool]) -> Result<RootedMap> {
    let len = steps.len();
    if len == 0 || len % 2 != 0 {
        return Err(Error::Format(format!("Dyck word of odd or zero length {len}")));
    }
    let mut images = vec![0u32; len + 1];
    let mut stack = Vec::with_capacity(len / 2);
    for (i, &up) in steps.iter().enumerate() {
        let h = i as u32 + 1;
        if up {
            stack.push(h);
        } else {
            let open = stack
                .pop()
                .ok_or_else(|| Error::Format("Dyck word goes negative".into()))?;
            images[open as usize] = h;
            images[h as usize] = open;
        }
    }
    if !stack.is_empty() {
        return Err(Error::Format("Dyck word does not return to zero".into()));
    }
    Ok(RootedMap::from_alpha_unchecked(Permutation::from_raw(images)))
}

/// The contour word of a canonical tree.
pub fn dyck_word(t: &RootedMap) -> Vec<bool> {
    (1..=t.half_edge_count() as u32)
        .map(|h| h < t.alpha().apply(h))
        .collect()
}

/// Parent/child structure of a canonical plane tree.
#[derive(Clone, Debug)]
pub struct TreeView<'a> {
    tree: &'a RootedMap,
    vertex: Vec<u32>,
    parent_half: Vec<u32>,
}

impl<'a> TreeView<'a> {
    pub fn new(tree: &'a RootedMap) -> Result<Self> {
        if tree.vertex_count() != tree.n() + 1 {
            return Err(Error::InvalidTriples(format!(
                "expected a plane tree, got genus {}",
                tree.genus()?
            )));
        }
        let vertex = tree.vertex_table();
        let mut parent_half = vec![0u32; vertex.len()];
        for h in 1..vertex.len() as u32 {
            if h > tree.alpha().apply(h) {
                parent_half[vertex[h as usize] as usize] = h;
            }
        }
        Ok(TreeView {
            tree,
            vertex,
            parent_half,
        })
    }

    pub fn tree(&self) -> &RootedMap {
        self.tree
    }

    #[inline]
    pub fn vertex_of(&self, h: HalfEdge) -> VertexId {
        VertexId(self.vertex[h as usize])
    }

    pub fn vertex_table(&self) -> &[u32] {
        &self.vertex
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v.0 as usize) < self.vertex.len() && v.0 != 0 && self.vertex[v.0 as usize] == v.0
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.0))
        }
    }

    /// The half-edge at `v` on the edge toward the root.
    #[inline]
    pub fn parent_half_edge(&self, v: VertexId) -> Option<HalfEdge> {
        match self.parent_half[v.0 as usize] {
            0 => None,
            h => Some(h),
        }
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent_half_edge(v)
            .map(|h| self.vertex_of(self.tree.alpha().apply(h)))
    }

    /// Half-edges leaving the root-to-`v` path, in order from the root.
    pub fn path_from_root(&self, v: VertexId) -> Vec<HalfEdge> {
        let mut path = Vec::new();
        let mut x = v;
        while let Some(h) = self.parent_half_edge(x) {
            let down = self.tree.alpha().apply(h);
            path.push(down);
            x = self.vertex_of(down);
        }
        path.reverse();
        path
    }

    pub fn depth(&self, v: VertexId) -> usize {
        let mut d = 0;
        let mut x = v;
        while let Some(p) = self.parent(x) {
            d += 1;
            x = p;
        }
        d
    }

    /// Vertices in increasing id order.
    pub fn vertices(&self) -> Vec<VertexId> {
        (1..self.vertex.len() as u32)
            .filter(|&h| self.vertex[h as usize] == h)
            .map(VertexId)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyck_roundtrip() {
        let word = [true, true, false, true, false, false];
        let t = tree_from_dyck(&word).unwrap();
        assert_eq!(t.genus().unwrap(), 0);
        assert_eq!(dyck_word(&t), word);
        let view = TreeView::new(&t).unwrap();
        assert_eq!(view.vertices().len(), 4);
        let leaf = view.vertex_of(3);
        assert_eq!(view.depth(leaf), 2);
        assert_eq!(view.path_from_root(leaf), vec![1, 2]);
    }

    #[test]
    fn bad_words() {
        assert!(tree_from_dyck(&[false, true]).is_err());
        assert!(tree_from_dyck(&[true, true]).is_err());
        assert!(tree_from_dyck(&[]).is_err());
    }
}
