//! Labelled trees and maps, well-labelled triples, the labelled version of
//! the opening/closing bijection, and exact Motzkin-walk series checks.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijection::{close_psi_traced, open_phi_traced, GluingRule, OpeningSequence, TreeWithTriples};
use crate::error::{Error, Result};
use crate::perm::{CombMap, Permutation, RootedMap, VertexId};
use crate::scheme::is_in_t;

/// Integer labels on vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Labelling {
    pub labels: BTreeMap<VertexId, i64>,
}

impl Labelling {
    pub fn get(&self, v: VertexId) -> Result<i64> {
        self.labels.get(&v).copied().ok_or(Error::MissingLabel(v.0))
    }

    /// All vertices of `m` labelled 0.
    pub fn zero(m: &CombMap) -> Self {
        Labelling {
            labels: m.vertices().into_iter().map(|v| (v, 0)).collect(),
        }
    }

    /// The label of each half-edge's vertex (slot 0 unused).
    pub fn per_half_edge(&self, m: &CombMap) -> Result<Vec<i64>> {
        let table = m.vertex_table();
        let mut out = vec![0i64; table.len()];
        for h in 1..table.len() {
            out[h] = self.get(VertexId(table[h]))?;
        }
        Ok(out)
    }

    /// Reads vertex labels back from per-half-edge values.
    pub fn from_half_edges(m: &CombMap, values: &[i64]) -> Self {
        Labelling {
            labels: m.vertices().into_iter().map(|v| (v, values[v.0 as usize])).collect(),
        }
    }
}

/// Root vertex (the one carrying half-edge 1) labelled 0, and labels of
/// the two ends of every edge differing by at most 1.
pub fn validate_labelling(m: &CombMap, l: &Labelling) -> Result<bool> {
    let per = l.per_half_edge(m)?;
    if per[1] != 0 {
        return Ok(false);
    }
    Ok((1..per.len()).all(|h| (per[h] - per[m.alpha().apply(h as u32) as usize]).abs() <= 1))
}

/// A rooted plane tree with an increment in `{-1, 0, 1}` per edge. Edge
/// `k` is the edge whose parent-side half-edge is the `k`-th step away
/// from the root along the contour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelledTree {
    pub tree: RootedMap,
    pub increments: Vec<i8>,
}

impl LabelledTree {
    pub fn new(tree: RootedMap, increments: Vec<i8>) -> Result<Self> {
        if tree.vertex_count() != tree.n() + 1 {
            return Err(Error::InvalidLabelling("not a plane tree".into()));
        }
        if increments.len() != tree.n() {
            return Err(Error::LengthMismatch {
                expected: tree.n(),
                got: increments.len(),
            });
        }
        if let Some(bad) = increments.iter().find(|d| d.abs() > 1) {
            return Err(Error::InvalidLabelling(format!("increment {bad}")));
        }
        Ok(LabelledTree { tree, increments })
    }

    /// The label of each half-edge's vertex, by a contour walk.
    pub fn half_edge_labels(&self) -> Vec<i64> {
        let len = self.tree.half_edge_count();
        let mut out = vec![0i64; len + 1];
        let mut stack = Vec::with_capacity(len / 2);
        let mut cur = 0i64;
        let mut k = 0;
        for h in 1..=len as u32 {
            out[h as usize] = cur;
            if h < self.tree.alpha().apply(h) {
                stack.push(cur);
                cur += self.increments[k] as i64;
                k += 1;
            } else {
                cur = stack.pop().expect("canonical tree");
            }
        }
        out
    }

    pub fn labelling(&self) -> Labelling {
        Labelling::from_half_edges(&self.tree, &self.half_edge_labels())
    }

    /// Inverse of `labelling` on valid tree labellings.
    pub fn from_labelling(tree: RootedMap, l: &Labelling) -> Result<Self> {
        let per = l.per_half_edge(&tree)?;
        if per[1] != 0 {
            return Err(Error::InvalidLabelling("root label is not 0".into()));
        }
        let mut increments = Vec::with_capacity(tree.n());
        for h in 1..=tree.half_edge_count() as u32 {
            let o = tree.alpha().apply(h);
            if h < o {
                increments.push((per[o as usize] - per[h as usize]) as i8);
            }
        }
        LabelledTree::new(tree, increments)
    }
}

/// A unicellular map with a valid labelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelledMap {
    pub map: RootedMap,
    pub labelling: Labelling,
}

impl LabelledMap {
    pub fn new(map: RootedMap, labelling: Labelling) -> Result<Self> {
        if !validate_labelling(&map, &labelling)? {
            return Err(Error::InvalidLabelling("root label or edge jump".into()));
        }
        Ok(LabelledMap { map, labelling })
    }
}

/// A tree with triples whose labelling is constant on every triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WellLabelledTriples {
    pub base: TreeWithTriples,
    pub labelled: LabelledTree,
}

impl WellLabelledTriples {
    pub fn new(base: TreeWithTriples, increments: Vec<i8>) -> Result<Self> {
        let labelled = LabelledTree::new(base.tree().clone(), increments)?;
        let w = WellLabelledTriples { base, labelled };
        w.check_equal()?;
        Ok(w)
    }

    fn check_equal(&self) -> Result<()> {
        let l = self.labelled.labelling();
        for (i, t) in self.base.triples().iter().enumerate() {
            let a = l.get(t[0])?;
            if l.get(t[1])? != a || l.get(t[2])? != a {
                return Err(Error::UnequalTripleLabels(i + 1));
            }
        }
        Ok(())
    }

    pub fn labelling(&self) -> Labelling {
        self.labelled.labelling()
    }

    /// Common label of each triple.
    pub fn triple_labels(&self) -> Vec<i64> {
        let per = self.labelled.half_edge_labels();
        self.base.triples().iter().map(|t| per[t[0].0 as usize]).collect()
    }
}

fn transport(values: &[i64], relabel: &Permutation) -> Vec<i64> {
    let mut out = vec![0i64; values.len()];
    for h in 1..values.len() as u32 {
        out[relabel.apply(h) as usize] = values[h as usize];
    }
    out
}

/// Opens a labelled dominant map; labels ride along unchanged.
pub fn labelled_phi(m: &LabelledMap, seq: &OpeningSequence) -> Result<WellLabelledTriples> {
    let trace = open_phi_traced(&m.map, seq)?;
    let per = transport(&m.labelling.per_half_edge(&m.map)?, &trace.relabel);
    let tree = trace.result.tree().clone();
    let labelled = LabelledTree::from_labelling(tree, &Labelling::from_half_edges(trace.result.tree(), &per))?;
    let w = WellLabelledTriples {
        base: trace.result,
        labelled,
    };
    w.check_equal()?;
    Ok(w)
}

/// Closes well-labelled triples; each glued vertex keeps the common label.
pub fn labelled_psi(w: &WellLabelledTriples) -> Result<(LabelledMap, OpeningSequence)> {
    w.check_equal()?;
    let trace = close_psi_traced(&w.base, GluingRule::Increasing)?;
    let per = transport(&w.labelled.half_edge_labels(), &trace.relabel);
    let labelling = Labelling::from_half_edges(&trace.map, &per);
    Ok((LabelledMap::new(trace.map, labelling)?, trace.sequence))
}

/// All valid labellings of a connected map, root labelled 0.
pub fn all_labellings(m: &CombMap) -> Vec<Labelling> {
    let table = m.vertex_table();
    let root = table[1];
    // breadth-first order with a parent per non-root vertex
    let mut order = vec![root];
    let mut parent = vec![0u32; table.len()];
    let mut seen = vec![false; table.len()];
    seen[root as usize] = true;
    let mut k = 0;
    while k < order.len() {
        let v = order[k];
        k += 1;
        for h in m.vertex_cycle(VertexId(v)).unwrap() {
            let w = table[m.alpha().apply(h) as usize];
            if !seen[w as usize] {
                seen[w as usize] = true;
                parent[w as usize] = v;
                order.push(w);
            }
        }
    }
    let mut out = Vec::new();
    let mut label = vec![0i64; table.len()];
    fn rec(
        m: &CombMap,
        table: &[u32],
        order: &[u32],
        parent: &[u32],
        k: usize,
        label: &mut Vec<i64>,
        out: &mut Vec<Labelling>,
    ) {
        if k == order.len() {
            let ok = (1..table.len())
                .all(|h| (label[table[h] as usize] - label[table[m.alpha().apply(h as u32) as usize] as usize]).abs() <= 1);
            if ok {
                out.push(Labelling {
                    labels: order.iter().map(|&v| (VertexId(v), label[v as usize])).collect(),
                });
            }
            return;
        }
        let v = order[k] as usize;
        for d in -1..=1 {
            label[v] = label[parent[v] as usize] + d;
            rec(m, table, order, parent, k + 1, label, out);
        }
    }
    rec(m, &table, &order, &parent, 1, &mut label, &mut out);
    out
}

/// All `3^n` increment vectors of length `n`.
pub fn all_increments(n: usize) -> Vec<Vec<i8>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1i8, 0, 1].into_iter().map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

/// Counts of Motzkin walks: `M[m][i]`, walks of `m` steps in `{-1,0,1}`
/// from 0 to `i`.
#[derive(Clone, Debug)]
pub struct MotzkinTable {
    max_len: usize,
    rows: Vec<Vec<BigUint>>,
}

impl MotzkinTable {
    pub fn new(max_len: usize) -> Self {
        let width = 2 * max_len + 1;
        let mut rows = vec![vec![BigUint::zero(); width]];
        rows[0][max_len] = BigUint::one();
        for m in 1..=max_len {
            let prev = &rows[m - 1];
            let mut row = vec![BigUint::zero(); width];
            for j in 0..width {
                let mut acc = prev[j].clone();
                if j > 0 {
                    acc += &prev[j - 1];
                }
                if j + 1 < width {
                    acc += &prev[j + 1];
                }
                row[j] = acc;
            }
            rows.push(row);
        }
        MotzkinTable { max_len, rows }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn get(&self, m: usize, i: i64) -> BigUint {
        if m > self.max_len || i.unsigned_abs() as usize > m {
            return BigUint::zero();
        }
        self.rows[m][(self.max_len as i64 + i) as usize].clone()
    }
}

pub fn motzkin_count(m: usize, i: i64) -> BigUint {
    MotzkinTable::new(m).get(m, i)
}

pub const DEFAULT_SERIES_BOUND: usize = 30;

type Series = Vec<BigUint>;

fn mul(a: &[BigUint], b: &[BigUint], order: usize) -> Series {
    let mut out = vec![BigUint::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn shift(a: &[BigUint], k: usize, order: usize) -> Series {
    let mut out = vec![BigUint::zero(); order + 1];
    for i in 0..=order.saturating_sub(k) {
        if i < a.len() && i + k <= order {
            out[i + k] = a[i].clone();
        }
    }
    out
}

fn add(a: &[BigUint], b: &[BigUint]) -> Series {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `f(t(z))` for a series `t` without constant term.
fn compose(f: &[BigUint], t: &[BigUint], order: usize) -> Series {
    let mut out = vec![BigUint::zero(); order + 1];
    let mut power = vec![BigUint::zero(); order + 1];
    power[0] = BigUint::one();
    for coeff in f.iter().take(order + 1) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += coeff * p;
        }
        power = mul(&power, t, order);
    }
    out
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCheck {
    pub name: String,
    pub order: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub checks: Vec<SeriesCheck>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Motzkin excursions `E_m` by a direct walk count.
pub fn excursions(order: usize) -> Series {
    let mut out = Vec::with_capacity(order + 1);
    let mut heights = vec![BigUint::one()];
    for _ in 0..=order {
        out.push(heights[0].clone());
        let mut next = vec![BigUint::zero(); heights.len() + 1];
        for (h, c) in heights.iter().enumerate() {
            next[h] += c;
            next[h + 1] += c;
            if h > 0 {
                next[h - 1] += c;
            }
        }
        heights = next;
    }
    out
}

/// Number of labelled rooted trees per size: `3^n Cat(n)`.
pub fn labelled_trees(order: usize) -> Series {
    (0..=order)
        .map(|n| BigUint::from(3u32).pow(n as u32) * crate::enumerate::catalan(n as u64))
        .collect()
}

/// Brute-force `[z^n] N_i` for `n <= n_max`: labelled doubly marked trees
/// whose mark carries label `i`.
pub fn n_i_brute_force(i: i64, n_max: usize) -> Series {
    let mut out = vec![BigUint::zero(); n_max + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        let incs = all_increments(n);
        let mut count = 0u64;
        for t in crate::enumerate::plane_trees(n) {
            let marks: Vec<VertexId> = t.vertices().into_iter().filter(|&v| is_in_t(&t, v).unwrap()).collect();
            for inc in &incs {
                let lt = LabelledTree {
                    tree: t.clone(),
                    increments: inc.clone(),
                };
                let per = lt.half_edge_labels();
                count += marks.iter().filter(|v| per[v.0 as usize] == i).count() as u64;
            }
        }
        *slot = count.into();
    }
    out
}

/// Exact coefficient checks up to `max_order` (bounded by `bound`), with
/// brute-force comparisons up to `brute_max` edges.
pub fn series_checks(max_order: usize, bound: usize, brute_max: usize) -> Result<SeriesReport> {
    if max_order > bound {
        return Err(Error::OrderTooLarge {
            requested: max_order,
            bound,
        });
    }
    let order = max_order;
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(SeriesCheck { name, order, passed });

    let table = MotzkinTable::new(order);
    let e = excursions(order);
    let one: Series = (0..=order).map(|k| if k == 0 { BigUint::one() } else { BigUint::zero() }).collect();
    // E = 1 + tE + t^2 E^2
    let e2 = mul(&e, &e, order);
    let rhs = add(&add(&one, &shift(&e, 1, order)), &shift(&e2, 2, order));
    push("E = 1 + tE + t^2E^2".into(), rhs == e);

    let m0: Series = (0..=order).map(|m| table.get(m, 0)).collect();
    // M0 (1 - t - 2t^2 E) = 1, written as M0 = 1 + t M0 + 2 t^2 E M0
    let m0e = mul(&m0, &e, order);
    let rhs = add(
        &add(&one, &shift(&m0, 1, order)),
        &shift(&add(&m0e, &m0e), 2, order),
    );
    push("M0 = 1/(1 - t - 2t^2E)".into(), rhs == m0);

    // M0^2 (1 + t)(1 - 3t) = 1, i.e. M0^2 = 1 + 2t M0^2 + 3t^2 M0^2
    let sq = mul(&m0, &m0, order);
    let sq2 = add(&sq, &sq);
    let rhs = add(&add(&one, &shift(&sq2, 1, order)), &shift(&add(&sq2, &sq), 2, order));
    push("M0^2 (1+t)(1-3t) = 1".into(), rhs == sq);

    // U = tE solves t U^2 - (1 - t) U + t = 0, i.e. U = t + tU + tU^2
    let u = shift(&e, 1, order);
    let u2 = mul(&u, &u, order);
    let rhs = add(&add(&shift(&one, 1, order), &shift(&u, 1, order)), &shift(&u2, 1, order));
    push("U = tE solves tU^2 - (1-t)U + t = 0".into(), rhs == u);

    let mut te_power = one.clone();
    let mut m_series = Vec::new();
    for i in 0..=order as i64 {
        let mi: Series = (0..=order).map(|m| table.get(m, i)).collect();
        let symmetric = (0..=order).all(|m| table.get(m, -i) == mi[m]);
        push(format!("M_{i} = M_0 (tE)^{i}"), mul(&m0, &te_power, order) == mi && symmetric);
        te_power = mul(&te_power, &u, order);
        m_series.push(mi);
    }

    // C = 1 + 3z C^2
    let c = labelled_trees(order);
    let c2 = mul(&c, &c, order);
    let c2_3: Series = c2.iter().map(|x| x * 3u32).collect();
    push("C = 1 + 3zC^2".into(), add(&one, &shift(&c2_3, 1, order)) == c);

    let t_of_z = shift(&c2, 1, order);
    let brute_order = brute_max.min(order);
    for i in 0..=brute_order as i64 {
        let mut ni = compose(&m_series[i as usize], &t_of_z, order);
        if i == 0 {
            ni[0] -= 1u32;
        }
        let brute = n_i_brute_force(i, brute_order);
        push(
            format!("N_{i} = M_{i}(zC^2) vs brute force, n <= {brute_order}"),
            ni[..=brute_order] == brute[..],
        );
    }
    Ok(SeriesReport { checks })
}
