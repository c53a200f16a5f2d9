//! Permutations of `1..=2n` and the permutation-triple model of maps.
//!
//! A map of size `n` is a triple `(alpha, beta, gamma)` of permutations of the
//! half-edges `1..=2n` with `gamma = beta ∘ alpha` and `alpha` a fixed-point-free
//! involution. Cycles of `alpha`, `beta` and `gamma` are the edges, vertices and
//! faces of the map. Half-edges around a vertex are listed by `beta` in
//! clockwise order.
//!
//! Half-edge labels are 1-based everywhere in the public API.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A half-edge label, `1..=2n`.
pub type HalfEdge = u32;

/// A permutation of `1..=len`, stored 1-based (slot 0 is unused).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its image list: `images[i - 1] = σ(i)`.
    pub fn new(images: &[u32]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size + 1];
        for &x in images {
            if x == 0 || x as usize > size {
                return Err(Error::NotPermutation {
                    size,
                    reason: format!("image {x} out of range"),
                });
            }
            if std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::NotPermutation {
                    size,
                    reason: format!("image {x} repeated"),
                });
            }
        }
        let mut v = Vec::with_capacity(size + 1);
        v.push(0);
        v.extend_from_slice(images);
        Ok(Permutation { images: v })
    }

    /// Builds from a 1-based buffer whose slot 0 is ignored. The caller
    /// guarantees bijectivity.
    pub(crate) fn from_raw(mut images: Vec<u32>) -> Self {
        images[0] = 0;
        debug_assert!(Permutation::new(&images[1..]).is_ok());
        Permutation { images }
    }

    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..=len as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(len: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..=len as u32).collect();
        let mut used = vec![false; len + 1];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x as usize > len {
                    return Err(Error::HalfEdgeOutOfRange(x));
                }
                if std::mem::replace(&mut used[x as usize], true) {
                    return Err(Error::NotPermutation {
                        size: len,
                        reason: format!("{x} appears in two cycles"),
                    });
                }
                images[x as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The cyclic permutation `(1, 2, ..., len)`.
    pub fn long_cycle(len: usize) -> Self {
        let mut images: Vec<u32> = std::iter::once(0).chain(2..=len as u32 + 1).collect();
        if len > 0 {
            images[len] = 1;
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// Images in index order, `σ(1), σ(2), ...`.
    pub fn images(&self) -> &[u32] {
        &self.images[1..]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for i in 1..self.images.len() {
            inv[self.images[i] as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let mut images = vec![0; self.images.len()];
        for i in 1..images.len() {
            images[i] = self.images[other.images[i] as usize];
        }
        Ok(Permutation { images })
    }

    /// Conjugation by a relabelling `pi`: returns `pi ∘ self ∘ pi⁻¹`.
    pub fn conjugate(&self, pi: &Permutation) -> Self {
        let mut images = vec![0; self.images.len()];
        for i in 1..images.len() {
            images[pi.apply(i as u32) as usize] = pi.apply(self.images[i]);
        }
        Permutation { images }
    }

    /// Cycles, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 1..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut count = 0;
        for start in 1..self.images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
            }
        }
        count
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        (1..self.images.len()).all(|i| {
            let j = self.images[i] as usize;
            j != i && self.images[j] as usize == i
        })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A vertex, named by the minimum half-edge label of its `beta`-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A map as a permutation triple with `gamma = beta ∘ alpha`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CombMap {
    n: usize,
    alpha: Permutation,
    beta: Permutation,
    gamma: Permutation,
}

impl CombMap {
    /// Builds a map from its edge and vertex permutations; `gamma` is
    /// computed as `beta ∘ alpha`.
    pub fn new(alpha: Permutation, beta: Permutation) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::LengthMismatch {
                expected: alpha.len(),
                got: beta.len(),
            });
        }
        if alpha.is_empty() || alpha.len() % 2 != 0 {
            return Err(Error::LengthMismatch {
                expected: alpha.len() + alpha.len() % 2,
                got: alpha.len(),
            });
        }
        if let Some(bad) = (1..=alpha.len() as u32).find(|&i| {
            let j = alpha.apply(i);
            j == i || alpha.apply(j) != i
        }) {
            return Err(Error::NotInvolution(bad));
        }
        let gamma = beta.compose(&alpha)?;
        Ok(CombMap {
            n: alpha.len() / 2,
            alpha,
            beta,
            gamma,
        })
    }

    /// The map with face permutation `(1, 2, ..., 2n)` and the given edges.
    pub fn from_canonical_alpha(alpha: Permutation) -> Result<Self> {
        let gamma = Permutation::long_cycle(alpha.len());
        let beta = gamma.compose(&alpha)?;
        CombMap::new(alpha, beta)
    }

    pub(crate) fn from_parts_unchecked(alpha: Permutation, beta: Permutation) -> Self {
        let mut g = vec![0; alpha.images.len()];
        for i in 1..g.len() {
            g[i] = beta.images[alpha.images[i] as usize];
        }
        let gamma = Permutation { images: g };
        CombMap {
            n: alpha.len() / 2,
            alpha,
            beta,
            gamma,
        }
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.n
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn gamma(&self) -> &Permutation {
        &self.gamma
    }

    pub fn vertex_count(&self) -> usize {
        self.beta.cycle_count()
    }

    pub fn face_count(&self) -> usize {
        self.gamma.cycle_count()
    }

    pub fn is_unicellular(&self) -> bool {
        self.face_count() == 1
    }

    /// Transitivity of the group generated by `alpha` and `gamma` (which
    /// also contains `beta = gamma ∘ alpha`).
    pub fn is_connected(&self) -> bool {
        let size = self.half_edge_count();
        let mut seen = vec![false; size + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let mut count = 1;
        while let Some(h) = stack.pop() {
            for next in [self.alpha.apply(h), self.gamma.apply(h)] {
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count == size
    }

    /// Genus from `|beta| + |gamma| = |alpha| + 2 - 2g`.
    pub fn genus(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let chi = self.vertex_count() + self.face_count();
        let twice = self.n + 2 - chi;
        debug_assert!(twice % 2 == 0);
        Ok((twice / 2) as u32)
    }

    pub fn is_canonical(&self) -> bool {
        let len = self.half_edge_count() as u32;
        (1..=len).all(|i| self.gamma.apply(i) == i % len + 1)
    }

    /// `table[h]` is the id of the vertex containing `h` (slot 0 unused).
    pub fn vertex_table(&self) -> Vec<u32> {
        let mut table = vec![0u32; self.half_edge_count() + 1];
        for start in 1..table.len() as u32 {
            if table[start as usize] != 0 {
                continue;
            }
            let mut x = start;
            loop {
                table[x as usize] = start;
                x = self.beta.apply(x);
                if x == start {
                    break;
                }
            }
        }
        table
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let table = self.vertex_table();
        (1..table.len() as u32)
            .filter(|&h| table[h as usize] == h)
            .map(VertexId)
            .collect()
    }

    pub fn check_half_edge(&self, h: HalfEdge) -> Result<()> {
        if h == 0 || h as usize > self.half_edge_count() {
            return Err(Error::HalfEdgeOutOfRange(h));
        }
        Ok(())
    }

    pub fn vertex_of(&self, h: HalfEdge) -> Result<VertexId> {
        self.check_half_edge(h)?;
        let mut min = h;
        let mut x = self.beta.apply(h);
        while x != h {
            min = min.min(x);
            x = self.beta.apply(x);
        }
        Ok(VertexId(min))
    }

    /// The `beta`-cycle of `v`, starting at `v`'s id.
    pub fn vertex_cycle(&self, v: VertexId) -> Result<Vec<HalfEdge>> {
        if self.vertex_of(v.0).map_err(|_| Error::UnknownVertex(v.0))? != v {
            return Err(Error::UnknownVertex(v.0));
        }
        let mut cycle = vec![v.0];
        let mut x = self.beta.apply(v.0);
        while x != v.0 {
            cycle.push(x);
            x = self.beta.apply(x);
        }
        Ok(cycle)
    }

    pub fn vertex_degree(&self, v: VertexId) -> Result<usize> {
        self.vertex_cycle(v).map(|c| c.len())
    }

    /// Relabels by `pi` (old label ↦ new label).
    pub fn relabel(&self, pi: &Permutation) -> CombMap {
        CombMap {
            n: self.n,
            alpha: self.alpha.conjugate(pi),
            beta: self.beta.conjugate(pi),
            gamma: self.gamma.conjugate(pi),
        }
    }

    /// The canonical representative rooted at `root`: relabels half-edges
    /// along the face tour from `root` so that `gamma = (1, ..., 2n)`.
    /// Returns the relabelling `pi` with `pi(old) = new`.
    pub fn canonicalize(&self, root: HalfEdge) -> Result<(RootedMap, Permutation)> {
        self.check_half_edge(root)?;
        let size = self.half_edge_count();
        let mut pi = vec![0u32; size + 1];
        let mut x = root;
        for k in 1..=size as u32 {
            if pi[x as usize] != 0 {
                return Err(Error::NotUnicellular {
                    faces: self.face_count(),
                });
            }
            pi[x as usize] = k;
            x = self.gamma.apply(x);
        }
        let pi = Permutation::from_raw(pi);
        let alpha = self.alpha.conjugate(&pi);
        let map = CombMap::from_canonical_alpha(alpha)?;
        debug_assert_eq!(map.beta, self.beta.conjugate(&pi));
        Ok((RootedMap(map), pi))
    }
}

impl fmt::Display for CombMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} alpha={} beta={} gamma={}",
            self.n, self.alpha, self.beta, self.gamma
        )
    }
}

/// A rooted unicellular map in canonical form: `gamma = (1, ..., 2n)`,
/// root half-edge 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedMap(CombMap);

impl RootedMap {
    /// Wraps a map that is already canonical.
    pub fn new(map: CombMap) -> Result<Self> {
        if !map.is_canonical() {
            return Err(Error::NotCanonical);
        }
        Ok(RootedMap(map))
    }

    /// The canonical map with the given edge involution.
    pub fn from_alpha(alpha: Permutation) -> Result<Self> {
        Ok(RootedMap(CombMap::from_canonical_alpha(alpha)?))
    }

    pub(crate) fn from_alpha_unchecked(alpha: Permutation) -> Self {
        let len = alpha.len() as u32;
        let mut beta = vec![0u32; alpha.images.len()];
        for i in 1..beta.len() {
            beta[i] = alpha.images[i] % len + 1;
        }
        RootedMap(CombMap::from_parts_unchecked(
            alpha,
            Permutation { images: beta },
        ))
    }

    pub fn map(&self) -> &CombMap {
        &self.0
    }

    pub fn into_map(self) -> CombMap {
        self.0
    }

    pub fn root(&self) -> HalfEdge {
        1
    }

    pub fn root_vertex(&self) -> VertexId {
        VertexId(1)
    }
}

impl Deref for RootedMap {
    type Target = CombMap;

    fn deref(&self) -> &CombMap {
        &self.0
    }
}

impl fmt::Display for RootedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
