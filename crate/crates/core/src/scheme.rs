//! Cores, schemes and the decomposition of a unicellular map into a scheme
//! whose edges are replaced by doubly marked plane trees.
//!
//! Orientation conventions: clockwise around a vertex is the `beta` cycle,
//! counterclockwise is `beta` read backward. Scheme edges are indexed by the
//! smaller of their two canonical labels, which is also taken as the origin;
//! the root edge (origin 1) is edge 0.

use crate::error::{Error, Result};
use crate::perm::{CombMap, HalfEdge, Permutation, RootedMap, VertexId};
use crate::surgery::{glue_halfedges, slice_vertex, GlueSpec, SliceSpec};
use crate::trees::TreeView;

/// The restriction of a map to an `alpha`-closed set of half-edges, with
/// compact labels.
#[derive(Clone, Debug)]
pub(crate) struct Restriction {
    pub map: CombMap,
    /// compact label → parent label (slot 0 unused)
    pub to_parent: Vec<HalfEdge>,
    /// parent label → compact label, 0 when dropped
    pub from_parent: Vec<HalfEdge>,
}

pub(crate) fn restrict(m: &CombMap, keep: &[bool]) -> Restriction {
    let size = m.half_edge_count();
    let mut to_parent = vec![0u32];
    let mut from_parent = vec![0u32; size + 1];
    for h in 1..=size as u32 {
        if keep[h as usize] {
            to_parent.push(h);
            from_parent[h as usize] = to_parent.len() as u32 - 1;
        }
    }
    let mut alpha = vec![0u32; to_parent.len()];
    let mut beta = vec![0u32; to_parent.len()];
    for c in 1..to_parent.len() {
        let h = to_parent[c];
        alpha[c] = from_parent[m.alpha().apply(h) as usize];
        let mut x = m.beta().apply(h);
        while !keep[x as usize] {
            x = m.beta().apply(x);
        }
        beta[c] = from_parent[x as usize];
    }
    Restriction {
        map: CombMap::from_parts_unchecked(Permutation::from_raw(alpha), Permutation::from_raw(beta)),
        to_parent,
        from_parent,
    }
}

/// Moves a root that lies outside the kept part onto it: find the vertex
/// where the dropped subtree carrying `root` is attached, then turn
/// counterclockwise from that subtree to the first kept half-edge.
pub(crate) fn transfer_root(m: &CombMap, keep: &[bool], root: HalfEdge) -> HalfEdge {
    if keep[root as usize] {
        return root;
    }
    let table = m.vertex_table();
    let size = m.half_edge_count();
    let has_kept = |v: u32| {
        let mut x = v;
        loop {
            if keep[x as usize] {
                return true;
            }
            x = m.beta().apply(x);
            if x == v {
                return false;
            }
        }
    };
    // search the dropped forest from the root vertex
    let mut visited = vec![false; size + 1];
    let mut stack = vec![root];
    let mut attach = 0;
    while let Some(entry) = stack.pop() {
        let v = table[entry as usize];
        if visited[v as usize] {
            continue;
        }
        visited[v as usize] = true;
        if has_kept(v) {
            attach = entry;
            break;
        }
        let mut x = v;
        loop {
            let opp = m.alpha().apply(x);
            if !visited[table[opp as usize] as usize] {
                stack.push(opp);
            }
            x = m.beta().apply(x);
            if x == v {
                break;
            }
        }
    }
    debug_assert!(attach != 0, "dropped part not attached to the kept part");
    let beta_inv = m.beta().inverse();
    let mut x = beta_inv.apply(attach);
    while !keep[x as usize] {
        x = beta_inv.apply(x);
    }
    x
}

/// Result of replacing maximal chains of non-branch degree-2 vertices by
/// single edges.
#[derive(Clone, Debug)]
pub(crate) struct Contraction {
    pub map: CombMap,
    /// contracted label → half-edge of the input at a branch vertex
    pub to_input: Vec<HalfEdge>,
    /// per contracted label, the input half-edges walked forward along the chain
    pub chains: Vec<Vec<HalfEdge>>,
    /// input half-edge → contracted label of the chain walking through it
    pub chain_of: Vec<HalfEdge>,
}

pub(crate) fn contract_chains(m: &CombMap, is_branch: &dyn Fn(u32, usize) -> bool) -> Contraction {
    let table = m.vertex_table();
    let size = m.half_edge_count();
    let mut degree = vec![0usize; size + 1];
    for h in 1..=size {
        degree[table[h] as usize] += 1;
    }
    let branch: Vec<bool> = (0..=size)
        .map(|h| h > 0 && is_branch(table[h], degree[table[h] as usize]))
        .collect();
    let mut to_input = vec![0u32];
    let mut from_input = vec![0u32; size + 1];
    for h in 1..=size as u32 {
        if branch[h as usize] {
            to_input.push(h);
            from_input[h as usize] = to_input.len() as u32 - 1;
        }
    }
    let k = to_input.len();
    let mut alpha = vec![0u32; k];
    let mut beta = vec![0u32; k];
    let mut chains = vec![Vec::new(); k];
    let mut chain_of = vec![0u32; size + 1];
    for c in 1..k {
        let h = to_input[c];
        beta[c] = from_input[m.beta().apply(h) as usize];
        let mut x = h;
        let mut chain = Vec::new();
        loop {
            chain.push(x);
            chain_of[x as usize] = c as u32;
            let y = m.alpha().apply(x);
            if branch[y as usize] {
                alpha[c] = from_input[y as usize];
                break;
            }
            x = m.beta().apply(y);
        }
        chains[c] = chain;
    }
    Contraction {
        map: CombMap::from_parts_unchecked(Permutation::from_raw(alpha), Permutation::from_raw(beta)),
        to_input,
        chains,
        chain_of,
    }
}

/// The core of a unicellular map: what remains after recursively erasing
/// vertices of degree 1.
#[derive(Clone, Debug)]
pub struct Core {
    /// The core, canonical and rooted by the root-transfer rule.
    pub map: RootedMap,
    /// core label → label in the original map
    pub to_parent: Vec<HalfEdge>,
    /// per original half-edge, whether its edge survives
    pub is_core: Vec<bool>,
    /// The core root, in the original map's labels.
    pub root_in_parent: HalfEdge,
}

impl Core {
    /// For each core half-edge (core label), the non-core half-edges of the
    /// original map that follow it clockwise before the next core
    /// half-edge: the roots of the plane trees hanging in that corner.
    pub fn attached(&self, m: &CombMap) -> Vec<Vec<HalfEdge>> {
        let mut out = vec![Vec::new(); self.to_parent.len()];
        for c in 1..self.to_parent.len() {
            let mut x = m.beta().apply(self.to_parent[c]);
            while !self.is_core[x as usize] {
                out[c].push(x);
                x = m.beta().apply(x);
            }
        }
        out
    }
}

/// Per-half-edge core membership after leaf pruning.
pub(crate) fn core_mask(m: &CombMap) -> Vec<bool> {
    let size = m.half_edge_count();
    let table = m.vertex_table();
    let mut degree = vec![0usize; size + 1];
    for h in 1..=size {
        degree[table[h] as usize] += 1;
    }
    let mut keep = vec![true; size + 1];
    keep[0] = false;
    let mut leaves: Vec<u32> = (1..=size as u32)
        .filter(|&h| table[h as usize] == h && degree[h as usize] == 1)
        .collect();
    while let Some(v) = leaves.pop() {
        if degree[v as usize] != 1 {
            continue;
        }
        let mut x = v;
        while !keep[x as usize] {
            x = m.beta().apply(x);
        }
        let y = m.alpha().apply(x);
        keep[x as usize] = false;
        keep[y as usize] = false;
        degree[v as usize] = 0;
        let w = table[y as usize];
        degree[w as usize] -= 1;
        if degree[w as usize] == 1 {
            leaves.push(w);
        }
    }
    keep
}

/// Erases degree-1 vertices recursively and roots the result.
pub fn prune_core(m: &RootedMap) -> Result<Core> {
    if m.genus()? == 0 {
        return Err(Error::GenusZero);
    }
    let keep = core_mask(m);
    let root = transfer_root(m, &keep, 1);
    let r = restrict(m, &keep);
    let (map, pi) = r.map.canonicalize(r.from_parent[root as usize])?;
    let pi_inv = pi.inverse();
    let mut to_parent = vec![0u32; r.to_parent.len()];
    for c in 1..to_parent.len() as u32 {
        to_parent[c as usize] = r.to_parent[pi_inv.apply(c) as usize];
    }
    Ok(Core {
        map,
        to_parent,
        is_core: keep,
        root_in_parent: root,
    })
}

/// Degrees of core vertices, keyed by original vertex id (0 for pruned).
pub(crate) fn core_degrees(m: &CombMap) -> Vec<usize> {
    let keep = core_mask(m);
    let table = m.vertex_table();
    let mut degree = vec![0usize; m.half_edge_count() + 1];
    for h in 1..keep.len() {
        if keep[h] {
            degree[table[h] as usize] += 1;
        }
    }
    degree
}

/// A unicellular map without vertices of degree 1 or 2, with indexed and
/// oriented edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scheme {
    pub map: RootedMap,
    /// `edges[i] = (origin, end)` with `origin < end`, sorted by origin.
    pub edges: Vec<(HalfEdge, HalfEdge)>,
}

impl Scheme {
    /// Wraps a canonical map, checking the minimum degree.
    pub fn new(map: RootedMap) -> Result<Self> {
        for v in map.vertices() {
            if map.vertex_degree(v)? < 3 {
                return Err(Error::InconsistentDecomposition(format!(
                    "scheme vertex {v} has degree < 3"
                )));
            }
        }
        let edges = (1..=map.half_edge_count() as u32)
            .filter_map(|h| {
                let o = map.alpha().apply(h);
                (h < o).then_some((h, o))
            })
            .collect();
        Ok(Scheme { map, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn genus(&self) -> u32 {
        self.map.genus().expect("schemes are unicellular")
    }

    /// `degree_counts()[i]` is the number of vertices of degree `i`.
    pub fn degree_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; 2 * self.edges.len() + 1];
        for c in self.map.beta().cycles() {
            counts[c.len()] += 1;
        }
        counts
    }

    pub fn is_dominant(&self) -> bool {
        self.map.beta().cycles().iter().all(|c| c.len() == 3)
    }

    /// Index of the scheme edge containing half-edge `h` and whether `h` is
    /// its origin.
    pub fn edge_of(&self, h: HalfEdge) -> (usize, bool) {
        let o = h.min(self.map.alpha().apply(h));
        let i = self.edges.binary_search_by_key(&o, |e| e.0).unwrap();
        (i, o == h)
    }
}

/// How the core's chains map onto scheme edges.
#[derive(Clone, Debug)]
pub struct Chains {
    /// scheme label → core label of the same half-edge
    pub scheme_to_core: Vec<HalfEdge>,
    /// per scheme edge, core half-edges walked from origin to end
    pub edge_chains: Vec<Vec<HalfEdge>>,
}

/// Contracts every maximal chain of degree-2 vertices of the core into one
/// edge. The scheme root is the chain carrying the core root.
pub fn contract_to_scheme(core: &RootedMap) -> Result<(Scheme, Chains)> {
    let c = contract_chains(core, &|_, deg| deg != 2);
    if c.to_input.len() <= 1 {
        return Err(Error::GenusZero);
    }
    let root = c.chain_of[1];
    let (map, pi) = c.map.canonicalize(root)?;
    let scheme = Scheme::new(map)?;
    let pi_inv = pi.inverse();
    let mut scheme_to_core = vec![0u32; c.to_input.len()];
    for s in 1..scheme_to_core.len() as u32 {
        scheme_to_core[s as usize] = c.to_input[pi_inv.apply(s) as usize];
    }
    let edge_chains = scheme
        .edges
        .iter()
        .map(|&(o, _)| c.chains[pi_inv.apply(o) as usize].clone())
        .collect();
    Ok((
        scheme,
        Chains {
            scheme_to_core,
            edge_chains,
        },
    ))
}

/// The scheme of a unicellular map of positive genus.
pub fn scheme_of(m: &RootedMap) -> Result<Scheme> {
    let core = prune_core(m)?;
    Ok(contract_to_scheme(&core.map)?.0)
}

/// Dominance: every node has core degree 3.
pub fn is_dominant(m: &CombMap) -> bool {
    if !m.is_unicellular() || m.vertex_count() == m.n() + 1 {
        return false;
    }
    core_degrees(m).iter().all(|&d| d <= 3)
}

/// A rooted plane tree with a marked vertex `ν` such that the path from
/// the root vertex to `ν` starts with the root edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoublyMarkedTree {
    pub tree: RootedMap,
    pub mark: VertexId,
}

pub fn is_in_t(t: &RootedMap, nu: VertexId) -> Result<bool> {
    let view = TreeView::new(t)?;
    view.check_vertex(nu)?;
    let path = view.path_from_root(nu);
    Ok(path.first() == Some(&1))
}

/// Whether the oriented edge leaving through half-edge `eps` is at the
/// right of `ν`: path edges must point toward `ν`; other edges hang from a
/// path vertex `v` and count when `v` is the root vertex, or when `v ≠ ν`
/// and they hang in the corner after the outgoing path half-edge.
pub fn is_right_of(t: &RootedMap, nu: VertexId, eps: HalfEdge) -> Result<bool> {
    let view = TreeView::new(t)?;
    view.check_vertex(nu)?;
    t.check_half_edge(eps)?;
    let path = view.path_from_root(nu);
    let alpha = t.alpha();
    let size = t.half_edge_count();
    let mut on_path_edge = vec![false; size + 1];
    let mut path_vertex = vec![usize::MAX; size + 1];
    path_vertex[1] = 0;
    for (j, &d) in path.iter().enumerate() {
        on_path_edge[d as usize] = true;
        on_path_edge[alpha.apply(d) as usize] = true;
        path_vertex[view.vertex_of(alpha.apply(d)).0 as usize] = j + 1;
    }
    if on_path_edge[eps as usize] {
        return Ok(path.contains(&eps));
    }
    // climb from the edge of eps to the path
    let mut x = eps.min(alpha.apply(eps));
    while path_vertex[view.vertex_of(x).0 as usize] == usize::MAX {
        let v = view.vertex_of(x);
        x = alpha.apply(view.parent_half_edge(v).expect("root is on the path"));
    }
    let j = path_vertex[view.vertex_of(x).0 as usize];
    if j == 0 {
        return Ok(true);
    }
    if j == path.len() {
        return Ok(false);
    }
    let outgoing = path[j];
    let incoming = alpha.apply(path[j - 1]);
    let mut y = t.beta().apply(outgoing);
    while y != incoming {
        if y == x {
            return Ok(true);
        }
        y = t.beta().apply(y);
    }
    Ok(false)
}

/// A map cut into its scheme and one doubly marked tree per scheme edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub scheme: Scheme,
    pub trees: Vec<DoublyMarkedTree>,
    /// The map's root as an oriented edge of `trees[0]`: (leaving half-edge,
    /// opposite half-edge).
    pub root_mark: (HalfEdge, HalfEdge),
}

/// Slices every node along its core half-edges and collects one tree per
/// scheme edge, rooted at the edge's origin and marked at its end.
pub fn decompose(m: &RootedMap) -> Result<Decomposition> {
    let core = prune_core(m)?;
    let (scheme, chains) = contract_to_scheme(&core.map)?;
    let to_m = |s: HalfEdge| core.to_parent[chains.scheme_to_core[s as usize] as usize];

    let mut sliced: CombMap = m.map().clone();
    for v in scheme.map.vertices() {
        let cut: Vec<HalfEdge> = scheme.map.vertex_cycle(v)?.into_iter().map(to_m).collect();
        let vertex = sliced.vertex_of(cut[0])?;
        sliced = slice_vertex(&sliced, &SliceSpec::new(vertex, cut))?;
    }

    let size = m.half_edge_count();
    let mut component = vec![usize::MAX; size + 1];
    let mut trees = Vec::with_capacity(scheme.edge_count());
    let mut root_mark = None;
    for (i, &(o, e)) in scheme.edges.iter().enumerate() {
        let (origin, end) = (to_m(o), to_m(e));
        let mut keep = vec![false; size + 1];
        let mut stack = vec![origin];
        while let Some(h) = stack.pop() {
            if keep[h as usize] {
                continue;
            }
            keep[h as usize] = true;
            component[h as usize] = i;
            stack.push(sliced.alpha().apply(h));
            stack.push(sliced.beta().apply(h));
        }
        let r = restrict(&sliced, &keep);
        let (tree, pi) = r.map.canonicalize(r.from_parent[origin as usize])?;
        let mark = tree.vertex_of(pi.apply(r.from_parent[end as usize]))?;
        if component[1] == i && root_mark.is_none() {
            let eps = pi.apply(r.from_parent[1]);
            root_mark = Some((eps, tree.alpha().apply(eps)));
        }
        trees.push(DoublyMarkedTree { tree, mark });
    }
    let root_mark = root_mark.ok_or_else(|| Error::InconsistentDecomposition("root not found".into()))?;
    if component[1] != 0 {
        return Err(Error::InconsistentDecomposition(
            "root does not lie in the first tree".into(),
        ));
    }
    Ok(Decomposition {
        scheme,
        trees,
        root_mark,
    })
}

/// Replaces each scheme edge by its tree and re-roots at `root_mark`.
pub fn recompose(d: &Decomposition) -> Result<RootedMap> {
    let k = d.scheme.edge_count();
    if d.trees.len() != k {
        return Err(Error::InconsistentDecomposition(format!(
            "{} trees for {k} scheme edges",
            d.trees.len()
        )));
    }
    let mut offsets = Vec::with_capacity(k);
    let mut total = 0u32;
    let mut ends = Vec::with_capacity(k);
    for (i, t) in d.trees.iter().enumerate() {
        if !is_in_t(&t.tree, t.mark)? {
            return Err(Error::InconsistentDecomposition(format!(
                "tree {i} is not doubly marked"
            )));
        }
        let view = TreeView::new(&t.tree)?;
        ends.push(view.parent_half_edge(t.mark).unwrap());
        offsets.push(total);
        total += t.tree.half_edge_count() as u32;
    }
    let (eps, opp) = d.root_mark;
    let first = &d.trees[0];
    first.tree.check_half_edge(eps)?;
    if first.tree.alpha().apply(eps) != opp || !is_right_of(&first.tree, first.mark, eps)? {
        return Err(Error::InconsistentDecomposition(
            "root mark is not at the right of the mark".into(),
        ));
    }

    let mut alpha = vec![0u32; total as usize + 1];
    let mut beta = vec![0u32; total as usize + 1];
    for (t, &off) in d.trees.iter().zip(&offsets) {
        for h in 1..=t.tree.half_edge_count() as u32 {
            alpha[(h + off) as usize] = t.tree.alpha().apply(h) + off;
            beta[(h + off) as usize] = t.tree.beta().apply(h) + off;
        }
    }
    let mut glued = CombMap::new(Permutation::new(&alpha[1..])?, Permutation::new(&beta[1..])?)?;
    for v in d.scheme.map.vertices() {
        let tuple: Vec<HalfEdge> = d
            .scheme
            .map
            .vertex_cycle(v)?
            .into_iter()
            .map(|s| {
                let (i, is_origin) = d.scheme.edge_of(s);
                offsets[i] + if is_origin { 1 } else { ends[i] }
            })
            .collect();
        glued = glue_halfedges(&glued, &GlueSpec::new(tuple))?;
    }
    if !glued.is_unicellular() {
        return Err(Error::InconsistentDecomposition(
            "recomposed map is not unicellular".into(),
        ));
    }
    Ok(glued.canonicalize(eps + offsets[0])?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_cycles(len: usize, cycles: &[&[u32]]) -> RootedMap {
        let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
        RootedMap::from_alpha(Permutation::from_cycles(len, &cycles).unwrap()).unwrap()
    }

    fn torus() -> RootedMap {
        from_cycles(4, &[&[1, 3], &[2, 4]])
    }

    /// The trivalent genus-1 scheme: theta graph on a torus.
    fn theta() -> RootedMap {
        from_cycles(6, &[&[1, 4], &[2, 5], &[3, 6]])
    }

    #[test]
    fn theta_is_trivalent_genus_one() {
        let m = theta();
        assert_eq!(m.genus().unwrap(), 1);
        assert_eq!(m.vertex_count(), 2);
        assert!(m.beta().cycles().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn nothing_to_prune() {
        let m = theta();
        let core = prune_core(&m).unwrap();
        assert_eq!(&core.map, &m);
        assert_eq!(core.root_in_parent, 1);
        let (s, _) = contract_to_scheme(&core.map).unwrap();
        assert_eq!(s.map, m);
        assert!(s.is_dominant());
        assert_eq!(s.edge_count(), 3);
    }

    #[test]
    fn torus_vertex_is_not_dominant() {
        let m = torus();
        let s = scheme_of(&m).unwrap();
        assert_eq!(s.degree_counts()[4], 1);
        assert!(!s.is_dominant());
        assert!(!is_dominant(&m));
        assert!(is_dominant(&theta()));
    }

    #[test]
    fn genus_zero_has_no_core() {
        let t = from_cycles(2, &[&[1, 2]]);
        assert!(matches!(prune_core(&t), Err(Error::GenusZero)));
        assert!(matches!(decompose(&t), Err(Error::GenusZero)));
    }

    #[test]
    fn pendant_root_transfers_counterclockwise() {
        // torus vertex (1,4,3,2) with a pendant edge inserted: glue a leaf
        // edge into the torus and root on the leaf.
        let torus = torus();
        // torus plus a separate edge {5,6}, glued at half-edges 1 and 5
        let alpha = Permutation::from_cycles(6, &[vec![1, 3], vec![2, 4], vec![5, 6]]).unwrap();
        let beta = Permutation::from_cycles(6, &[vec![1, 4, 3, 2]]).unwrap();
        let union = CombMap::new(alpha, beta).unwrap();
        let glued = glue_halfedges(&union, &GlueSpec::new([1, 5])).unwrap();
        assert!(glued.is_unicellular());
        // vertex (1,4,3,2,5): the pendant half-edge 5 follows 2 clockwise,
        // so turning counterclockwise from 5 meets 2 first.
        let (m, pi) = glued.canonicalize(6).unwrap();
        let core = prune_core(&m).unwrap();
        assert_eq!(core.root_in_parent, pi.apply(2));
        assert_eq!(core.map.n(), 2);
        assert_eq!(core.map.genus().unwrap(), torus.genus().unwrap());
        let attached = core.attached(&m);
        assert_eq!(attached.iter().map(Vec::len).sum::<usize>(), 1);
    }

    #[test]
    fn decompose_scheme_gives_single_edges() {
        let m = theta();
        let d = decompose(&m).unwrap();
        assert_eq!(d.trees.len(), 3);
        for t in &d.trees {
            assert_eq!(t.tree.n(), 1);
            assert_eq!(t.mark, VertexId(2));
        }
        assert_eq!(d.root_mark, (1, 2));
        assert_eq!(recompose(&d).unwrap(), m);
    }

    #[test]
    fn right_of_on_a_path() {
        let t = from_cycles(2, &[&[1, 2]]);
        assert!(is_in_t(&t, VertexId(2)).unwrap());
        assert!(!is_in_t(&t, VertexId(1)).unwrap());
        assert!(is_right_of(&t, VertexId(2), 1).unwrap());
        assert!(!is_right_of(&t, VertexId(2), 2).unwrap());
    }
}
