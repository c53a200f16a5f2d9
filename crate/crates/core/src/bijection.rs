//! Intertwined nodes, opening sequences and the opening/closing bijection
//! between dominant unicellular maps with an opening sequence and plane
//! trees carrying `g` vertex triples.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{CombMap, HalfEdge, Permutation, RootedMap, VertexId};
use crate::scheme::{contract_chains, core_mask, is_dominant, restrict, transfer_root};
use crate::surgery::{glue_halfedges, slice_vertex, GlueSpec, SliceSpec};
use crate::trees::TreeView;

/// `nodes[i]` is `v_{i+1}`, named in the canonical labels of the map from
/// which it is sliced (so `nodes[g-1]` is a vertex of the input map).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpeningSequence {
    pub nodes: Vec<VertexId>,
}

impl OpeningSequence {
    pub fn new(nodes: Vec<VertexId>) -> Self {
        OpeningSequence { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// A rooted plane tree with `g` ordered, pairwise disjoint vertex triples
/// whose union is non-singular.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeWithTriples {
    tree: RootedMap,
    triples: Vec<[VertexId; 3]>,
}

impl TreeWithTriples {
    /// Validates and normalizes (each triple sorted).
    pub fn new(tree: RootedMap, triples: Vec<[VertexId; 3]>) -> Result<Self> {
        let tc = Self::check_disjoint(tree, triples)?;
        if !tc.triples.is_empty() && !is_non_singular(&tc.tree, &tc.marked())? {
            return Err(Error::Singular);
        }
        Ok(tc)
    }

    fn check_disjoint(tree: RootedMap, mut triples: Vec<[VertexId; 3]>) -> Result<Self> {
        let view = TreeView::new(&tree)?;
        let mut seen = BTreeSet::new();
        for t in &mut triples {
            t.sort();
            for &v in t.iter() {
                view.check_vertex(v)?;
                if !seen.insert(v) {
                    return Err(Error::InvalidTriples(format!("vertex {v} used twice")));
                }
            }
        }
        Ok(TreeWithTriples { tree, triples })
    }

    pub(crate) fn from_parts_unchecked(tree: RootedMap, mut triples: Vec<[VertexId; 3]>) -> Self {
        for t in &mut triples {
            t.sort();
        }
        TreeWithTriples { tree, triples }
    }

    pub fn tree(&self) -> &RootedMap {
        &self.tree
    }

    pub fn triples(&self) -> &[[VertexId; 3]] {
        &self.triples
    }

    pub fn genus(&self) -> usize {
        self.triples.len()
    }

    /// All marked vertices, sorted.
    pub fn marked(&self) -> Vec<VertexId> {
        let mut w: Vec<VertexId> = self.triples.iter().flatten().copied().collect();
        w.sort();
        w
    }
}

/// Core half-edges of a node, clockwise from the smallest.
fn node_core_half_edges(m: &CombMap, keep: &[bool], v: VertexId) -> Result<Vec<HalfEdge>> {
    let mut e: Vec<HalfEdge> = m
        .vertex_cycle(v)?
        .into_iter()
        .filter(|&h| keep[h as usize])
        .collect();
    if let Some(k) = e.iter().enumerate().min_by_key(|p| p.1).map(|p| p.0) {
        e.rotate_left(k);
    }
    Ok(e)
}

fn is_intertwined_triple(e: &[HalfEdge]) -> bool {
    e.len() == 3 && e[0] < e[2] && e[2] < e[1]
}

/// Intertwined nodes of a dominant map, by increasing id.
pub fn intertwined_nodes(m: &RootedMap) -> Result<Vec<VertexId>> {
    if !is_dominant(m) {
        return Err(Error::NotDominant);
    }
    let keep = core_mask(m);
    let mut out = Vec::new();
    for v in m.vertices() {
        if is_intertwined_triple(&node_core_half_edges(m, &keep, v)?) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Number of increasing half-edges among core half-edges at nodes, where
/// `h` is increasing when the next such half-edge clockwise is larger.
pub fn increasing_half_edges(m: &RootedMap) -> Result<usize> {
    if !is_dominant(m) {
        return Err(Error::NotDominant);
    }
    let keep = core_mask(m);
    let mut count = 0;
    for v in m.vertices() {
        let e = node_core_half_edges(m, &keep, v)?;
        if e.len() == 3 {
            count += (0..3).filter(|&j| e[j] < e[(j + 1) % 3]).count();
        }
    }
    Ok(count)
}

/// Slices an intertwined node by its three core half-edges and re-roots
/// at half-edge 1. Also returns the relabelling and the sliced half-edges
/// in the new labels.
pub fn slice_intertwined(m: &RootedMap, v: VertexId) -> Result<(RootedMap, Permutation, [HalfEdge; 3])> {
    let keep = core_mask(m);
    let e = node_core_half_edges(m, &keep, v)?;
    if !is_intertwined_triple(&e) {
        return Err(Error::NotIntertwined(v.0));
    }
    let sliced = slice_vertex(m, &SliceSpec::new(v, e.iter().copied()))?;
    let (next, pi) = sliced.canonicalize(1)?;
    let born = [pi.apply(e[0]), pi.apply(e[1]), pi.apply(e[2])];
    Ok((next, pi, born))
}

/// All `2^g g!` opening sequences, in lexicographic order of choices.
pub fn opening_sequences(m: &RootedMap) -> Result<Vec<OpeningSequence>> {
    fn rec(m: &RootedMap, suffix: &mut Vec<VertexId>, out: &mut Vec<OpeningSequence>) -> Result<()> {
        if m.vertex_count() == m.n() + 1 {
            let mut nodes = suffix.clone();
            nodes.reverse();
            out.push(OpeningSequence { nodes });
            return Ok(());
        }
        for v in intertwined_nodes(m)? {
            let (next, _, _) = slice_intertwined(m, v)?;
            suffix.push(v);
            rec(&next, suffix, out)?;
            suffix.pop();
        }
        Ok(())
    }
    if !is_dominant(m) {
        return Err(Error::NotDominant);
    }
    let mut out = Vec::new();
    rec(m, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// The result of opening a map, with the data needed to transport
/// anything attached to half-edges.
#[derive(Clone, Debug)]
pub struct PhiTrace {
    pub result: TreeWithTriples,
    /// For each triple, the three sliced core half-edges, in tree labels.
    pub recorded: Vec<[HalfEdge; 3]>,
    /// map label ↦ tree label
    pub relabel: Permutation,
}

pub fn open_phi(m: &RootedMap, seq: &OpeningSequence) -> Result<TreeWithTriples> {
    Ok(open_phi_traced(m, seq)?.result)
}

pub fn open_phi_traced(m: &RootedMap, seq: &OpeningSequence) -> Result<PhiTrace> {
    if !is_dominant(m) {
        return Err(Error::NotDominant);
    }
    let g = m.genus()? as usize;
    if seq.len() != g {
        return Err(Error::InvalidSequence(format!(
            "expected {g} nodes, got {}",
            seq.len()
        )));
    }
    let mut cur = m.clone();
    let mut relabel = Permutation::identity(m.half_edge_count());
    let mut recorded = vec![[0u32; 3]; g];
    for i in (0..g).rev() {
        let v = seq.nodes[i];
        let (next, pi, born) = slice_intertwined(&cur, v).map_err(|e| match e {
            Error::NotIntertwined(_) | Error::UnknownVertex(_) => {
                Error::InvalidSequence(format!("v{} = {v} is not an intertwined node", i + 1))
            }
            e => e,
        })?;
        for r in &mut recorded[i + 1..] {
            for h in r.iter_mut() {
                *h = pi.apply(*h);
            }
        }
        recorded[i] = born;
        relabel = pi.compose(&relabel)?;
        cur = next;
    }
    let triples = recorded
        .iter()
        .map(|r| r.map(|h| cur.vertex_of(h).unwrap()))
        .collect();
    Ok(PhiTrace {
        result: TreeWithTriples::from_parts_unchecked(cur, triples),
        recorded,
        relabel,
    })
}

/// Tree vertices reached through edges with marks on both sides.
#[derive(Clone, Debug)]
pub(crate) struct Reduced {
    /// per half-edge, whether its edge lies on a path between marks
    pub in_r: Vec<bool>,
    /// per vertex id, degree in the reduced tree
    pub degree: Vec<usize>,
}

pub(crate) fn reduced_tree(view: &TreeView<'_>, w: &[VertexId]) -> Reduced {
    let t = view.tree();
    let size = t.half_edge_count();
    let mut count = vec![0usize; size + 1];
    for v in w {
        count[v.0 as usize] += 1;
    }
    let mut in_r = vec![false; size + 1];
    let mut degree = vec![0usize; size + 1];
    let total = w.len();
    for v in view.vertices().into_iter().rev() {
        if let Some(p) = view.parent_half_edge(v) {
            let up = t.alpha().apply(p);
            let parent = view.vertex_of(up);
            let c = count[v.0 as usize];
            count[parent.0 as usize] += c;
            if c > 0 && c < total {
                in_r[p as usize] = true;
                in_r[up as usize] = true;
                degree[v.0 as usize] += 1;
                degree[parent.0 as usize] += 1;
            }
        }
    }
    Reduced { in_r, degree }
}

fn marked_mask(size: usize, w: &[VertexId]) -> Vec<bool> {
    let mut marked = vec![false; size + 1];
    for v in w {
        marked[v.0 as usize] = true;
    }
    marked
}

fn check_marks(view: &TreeView<'_>, w: &[VertexId]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in w {
        view.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(Error::InvalidTriples(format!("vertex {v} marked twice")));
        }
    }
    if w.len() < 2 {
        return Err(Error::TooFewMarks(w.len()));
    }
    Ok(())
}

/// Every mark is a leaf of the reduced tree, and every other vertex of the
/// reduced tree has degree 2 or 3.
pub fn is_non_singular(t: &RootedMap, w: &[VertexId]) -> Result<bool> {
    let view = TreeView::new(t)?;
    check_marks(&view, w)?;
    let r = reduced_tree(&view, w);
    let marked = marked_mask(t.half_edge_count(), w);
    Ok(view.vertices().into_iter().all(|v| {
        let d = r.degree[v.0 as usize];
        if marked[v.0 as usize] {
            d == 1
        } else {
            d == 0 || d == 2 || d == 3
        }
    }))
}

/// A vertex of the skeleton and where it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonVertex {
    pub id: VertexId,
    pub tree_vertex: VertexId,
    pub degree: usize,
    pub marked: bool,
}

#[derive(Clone, Debug)]
pub struct SkeletonReport {
    pub skeleton: RootedMap,
    pub vertices: Vec<SkeletonVertex>,
    pub non_singular: bool,
}

/// Union of the paths between marks, rooted by the counterclockwise
/// transfer rule, with chains of unmarked degree-2 vertices contracted.
pub fn skeleton(t: &RootedMap, w: &[VertexId]) -> Result<SkeletonReport> {
    let view = TreeView::new(t)?;
    check_marks(&view, w)?;
    let r = reduced_tree(&view, w);
    let marked = marked_mask(t.half_edge_count(), w);
    let root = transfer_root(t, &r.in_r, 1);
    let restricted = restrict(t, &r.in_r);
    let (reduced, pi) = restricted.map.canonicalize(restricted.from_parent[root as usize])?;
    let pi_inv = pi.inverse();
    let to_tree = |x: HalfEdge| restricted.to_parent[pi_inv.apply(x) as usize];
    let c = contract_chains(&reduced, &|v, deg| deg != 2 || marked[view.vertex_of(to_tree(v)).0 as usize]);
    let (skel, sigma) = c.map.canonicalize(c.chain_of[1])?;
    let sigma_inv = sigma.inverse();
    let mut vertices = Vec::new();
    for v in skel.vertices() {
        let tree_vertex = view.vertex_of(to_tree(c.to_input[sigma_inv.apply(v.0) as usize]));
        vertices.push(SkeletonVertex {
            id: v,
            tree_vertex,
            degree: skel.vertex_degree(v)?,
            marked: marked[tree_vertex.0 as usize],
        });
    }
    let non_singular = vertices
        .iter()
        .all(|s| if s.marked { s.degree == 1 } else { s.degree == 3 })
        && view.vertices().into_iter().all(|v| {
            !marked[v.0 as usize] || r.degree[v.0 as usize] == 1
        });
    Ok(SkeletonReport {
        skeleton: skel,
        vertices,
        non_singular,
    })
}

/// The half-edge at `v` on the paths toward the other marks.
pub fn incoming_half_edge(t: &RootedMap, triples: &[[VertexId; 3]], v: VertexId) -> Result<HalfEdge> {
    let w: Vec<VertexId> = triples.iter().flatten().copied().collect();
    if !w.contains(&v) {
        return Err(Error::InvalidTriples(format!("{v} is not marked")));
    }
    let view = TreeView::new(t)?;
    check_marks(&view, &w)?;
    let r = reduced_tree(&view, &w);
    incoming_from(t, &r, v)
}

fn incoming_from(t: &RootedMap, r: &Reduced, v: VertexId) -> Result<HalfEdge> {
    let mut found = None;
    for h in t.vertex_cycle(v)? {
        if r.in_r[h as usize] {
            if found.is_some() {
                return Err(Error::Singular);
            }
            found = Some(h);
        }
    }
    found.ok_or(Error::Singular)
}

/// How `close_psi` orders each gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GluingRule {
    /// Increasing current labels, asserting the result has one face.
    #[default]
    Increasing,
    /// Try both cyclic orders and keep the one with a single face.
    Trial,
}

#[derive(Clone, Debug)]
pub struct PsiTrace {
    pub map: RootedMap,
    pub sequence: OpeningSequence,
    /// tree label ↦ map label
    pub relabel: Permutation,
    /// `intermediate[i]` is the map after `i + 1` gluings.
    pub intermediate: Vec<RootedMap>,
}

pub fn close_psi(tc: &TreeWithTriples) -> Result<(RootedMap, OpeningSequence)> {
    let trace = close_psi_traced(tc, GluingRule::Increasing)?;
    Ok((trace.map, trace.sequence))
}

pub fn close_psi_traced(tc: &TreeWithTriples, rule: GluingRule) -> Result<PsiTrace> {
    let t = tc.tree();
    let w = tc.marked();
    let mut labels: Vec<[HalfEdge; 3]> = Vec::with_capacity(tc.genus());
    if !tc.triples.is_empty() {
        let view = TreeView::new(t)?;
        let r = reduced_tree(&view, &w);
        for triple in tc.triples() {
            let mut h = [0u32; 3];
            for (j, &v) in triple.iter().enumerate() {
                h[j] = incoming_from(t, &r, v)?;
            }
            labels.push(h);
        }
    }
    let mut cur: RootedMap = t.clone();
    let mut relabel = Permutation::identity(t.half_edge_count());
    let mut nodes = Vec::with_capacity(tc.genus());
    let mut intermediate = Vec::with_capacity(tc.genus());
    for i in 0..tc.genus() {
        let mut h = labels[i];
        h.sort();
        let glued = match rule {
            GluingRule::Increasing => {
                let glued = glue_halfedges(&cur, &GlueSpec::new(h))?;
                if !glued.is_unicellular() {
                    return Err(Error::InvalidTriples(format!(
                        "gluing triple {} gives {} faces",
                        i + 1,
                        glued.face_count()
                    )));
                }
                glued
            }
            GluingRule::Trial => {
                let a = glue_halfedges(&cur, &GlueSpec::new(h))?;
                let b = glue_halfedges(&cur, &GlueSpec::new([h[0], h[2], h[1]]))?;
                match (a.is_unicellular(), b.is_unicellular()) {
                    (true, false) => a,
                    (false, true) => b,
                    (x, y) => {
                        return Err(Error::InvalidTriples(format!(
                            "triple {}: orders give one face {x}/{y}",
                            i + 1
                        )))
                    }
                }
            }
        };
        let (next, pi) = glued.canonicalize(1)?;
        for l in &mut labels[i + 1..] {
            for x in l.iter_mut() {
                *x = pi.apply(*x);
            }
        }
        nodes.push(next.vertex_of(pi.apply(h[0]))?);
        relabel = pi.compose(&relabel)?;
        intermediate.push(next.clone());
        cur = next;
    }
    Ok(PsiTrace {
        map: cur,
        sequence: OpeningSequence { nodes },
        relabel,
        intermediate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::tree_from_dyck;

    fn theta() -> RootedMap {
        RootedMap::from_alpha(Permutation::from_cycles(6, &[vec![1, 4], vec![2, 5], vec![3, 6]]).unwrap())
            .unwrap()
    }

    fn star3() -> RootedMap {
        tree_from_dyck(&[true, false, true, false, true, false]).unwrap()
    }

    #[test]
    fn theta_has_two_intertwined_nodes() {
        let m = theta();
        assert_eq!(intertwined_nodes(&m).unwrap().len(), 2);
        assert_eq!(increasing_half_edges(&m).unwrap(), 2);
        assert_eq!(opening_sequences(&m).unwrap().len(), 2);
    }

    #[test]
    fn non_dominant_rejected() {
        let torus =
            RootedMap::from_alpha(Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap()).unwrap();
        assert!(matches!(intertwined_nodes(&torus), Err(Error::NotDominant)));
    }

    #[test]
    fn theta_opens_to_a_star() {
        let m = theta();
        for seq in opening_sequences(&m).unwrap() {
            let trace = open_phi_traced(&m, &seq).unwrap();
            let tc = &trace.result;
            assert_eq!(tc.tree().genus().unwrap(), 0);
            assert_eq!(tc.genus(), 1);
            let view = TreeView::new(tc.tree()).unwrap();
            for &v in &tc.triples()[0] {
                assert_eq!(tc.tree().vertex_degree(v).unwrap(), 1);
                assert!(view.contains(v));
            }
            for (j, &v) in tc.triples()[0].iter().enumerate() {
                let h = incoming_half_edge(tc.tree(), tc.triples(), v).unwrap();
                assert!(trace.recorded[0].contains(&h), "{j}");
            }
            let (back, back_seq) = close_psi(tc).unwrap();
            assert_eq!(back, m);
            assert_eq!(back_seq, seq);
        }
    }

    #[test]
    fn star_leaves_are_non_singular() {
        let t = star3();
        let leaves = [VertexId(2), VertexId(4), VertexId(6)];
        assert!(is_non_singular(&t, &leaves).unwrap());
        let report = skeleton(&t, &leaves).unwrap();
        assert!(report.non_singular);
        assert_eq!(report.skeleton.n(), 3);
        let mut degrees: Vec<usize> = report.vertices.iter().map(|s| s.degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 3]);
        for &v in &leaves {
            assert_eq!(incoming_half_edge(&t, &[leaves], v).unwrap(), v.0);
        }
    }

    #[test]
    fn path_with_middle_mark_is_singular() {
        let path = tree_from_dyck(&[true, true, false, false]).unwrap();
        let ends = [VertexId(1), VertexId(3)];
        let report = skeleton(&path, &ends).unwrap();
        assert_eq!(report.skeleton.n(), 1);
        assert!(report.non_singular);
        let all = [VertexId(1), VertexId(2), VertexId(3)];
        assert!(!is_non_singular(&path, &all).unwrap());
        assert!(matches!(
            incoming_half_edge(&path, &[all], VertexId(2)),
            Err(Error::Singular)
        ));
        assert!(matches!(
            TreeWithTriples::new(path, vec![all]),
            Err(Error::Singular)
        ));
        assert!(matches!(
            is_non_singular(&star3(), &[VertexId(2)]),
            Err(Error::TooFewMarks(1))
        ));
    }

    #[test]
    fn wrong_order_gives_three_faces() {
        let tc = TreeWithTriples::new(star3(), vec![[VertexId(2), VertexId(4), VertexId(6)]]).unwrap();
        let good = glue_halfedges(tc.tree(), &GlueSpec::new([2, 4, 6])).unwrap();
        let bad = glue_halfedges(tc.tree(), &GlueSpec::new([2, 6, 4])).unwrap();
        assert_eq!(good.face_count(), 1);
        assert_eq!(bad.face_count(), 3);
        let a = close_psi_traced(&tc, GluingRule::Increasing).unwrap();
        let b = close_psi_traced(&tc, GluingRule::Trial).unwrap();
        assert_eq!(a.map, b.map);
    }
}
