//! Exhaustive generators and closed-form counters.
//!
//! Unicellular maps of size `n` are enumerated through their canonical
//! representative: every fixed-point-free involution `alpha` of `1..=2n`
//! together with `gamma = (1, ..., 2n)` is one rooted unicellular map.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bijection::{is_non_singular, TreeWithTriples};
use crate::error::{Error, Result};
use crate::perm::{Permutation, RootedMap, VertexId};
use crate::scheme::{is_dominant, is_in_t, Scheme};
use crate::trees::tree_from_dyck;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Worker count and visit budget for exhaustive runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub workers: usize,
    pub budget: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: DEFAULT_BUDGET,
        }
    }
}

impl EnumOptions {
    fn pool(&self) -> Result<rayon::ThreadPool> {
        if self.workers == 0 {
            return Err(Error::OutOfRange("workers must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::OutOfRange(e.to_string()))
    }

    fn check(&self, visits: &BigUint) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::OutOfRange("budget must be positive".into()));
        }
        if *visits > BigUint::from(self.budget) {
            return Err(Error::ResourceBound(self.budget));
        }
        Ok(())
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(2n - 1)!!`, the number of perfect matchings of `2n` points.
pub fn double_factorial_odd(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Plane trees with `n` edges carrying `g` ordered disjoint vertex triples,
/// singular or not: `(2n)! / (6^g n! (n+1-3g)!)`.
pub fn marked_trees(g: u64, n: u64) -> Result<BigUint> {
    if n + 1 < 3 * g {
        return Err(Error::OutOfRange(format!("n + 1 < 3g for g = {g}, n = {n}")));
    }
    Ok(factorial(2 * n) / (BigUint::from(6u32).pow(g as u32) * factorial(n) * factorial(n + 1 - 3 * g)))
}

/// Rooted trivalent schemes of genus `g`: `2 (6g-3)! / (12^g g! (3g-2)!)`.
pub fn dominant_schemes(g: u64) -> Result<BigUint> {
    if g == 0 {
        return Err(Error::OutOfRange("genus must be positive".into()));
    }
    Ok(BigUint::from(2u32) * factorial(6 * g - 3)
        / (BigUint::from(12u32).pow(g as u32) * factorial(g) * factorial(3 * g - 2)))
}

/// Plane trees with `6g-3` edges and `g` triples on the leaves whose union
/// is non-singular: `2 (6g-3)! / ((3g)! (3g-2)!)`.
pub fn tstar(g: u64) -> Result<BigUint> {
    if g == 0 {
        return Err(Error::OutOfRange("genus must be positive".into()));
    }
    Ok(BigUint::from(2u32) * factorial(6 * g - 3) / (factorial(3 * g) * factorial(3 * g - 2)))
}

/// Doubly marked trees with `n` edges: `C(2n, n) / 2`.
pub fn half_t(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    Ok(binomial(2 * n, n) / 2u32)
}

/// Leading asymptotic of the number of rooted unicellular maps of genus
/// `g` with `n` edges (floating point, not exact).
pub fn u_asym(g: u64, n: u64) -> f64 {
    let n = n as f64;
    let g_fact: f64 = (1..=g).map(|k| k as f64).product();
    n.powf(3.0 * g as f64 - 1.5) * 4f64.powf(n)
        / (12f64.powi(g as i32) * g_fact * std::f64::consts::PI.sqrt())
}

fn check_genus(g: u32, n: u32) -> Result<()> {
    if n == 0 || 2 * g > n {
        return Err(Error::GenusOutOfRange { g, n });
    }
    Ok(())
}

/// Partial matchings fixing the first pairs, used to split the search.
fn prefixes(len: usize, depth: usize) -> Vec<Vec<u32>> {
    fn rec(alpha: &mut Vec<u32>, depth: usize, out: &mut Vec<Vec<u32>>) {
        let Some(i) = (1..alpha.len()).find(|&i| alpha[i] == 0) else {
            out.push(alpha.clone());
            return;
        };
        if depth == 0 {
            out.push(alpha.clone());
            return;
        }
        for j in i + 1..alpha.len() {
            if alpha[j] == 0 {
                alpha[i] = j as u32;
                alpha[j] = i as u32;
                rec(alpha, depth - 1, out);
                alpha[i] = 0;
                alpha[j] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0; len + 1], depth, &mut out);
    out
}

fn complete<F: FnMut(&[u32])>(alpha: &mut [u32], from: usize, visit: &mut F) {
    let Some(i) = (from..alpha.len()).find(|&i| alpha[i] == 0) else {
        visit(alpha);
        return;
    };
    for j in i + 1..alpha.len() {
        if alpha[j] == 0 {
            alpha[i] = j as u32;
            alpha[j] = i as u32;
            complete(alpha, i + 1, visit);
            alpha[i] = 0;
            alpha[j] = 0;
        }
    }
}

/// Visits every fixed-point-free involution of `1..=2n` (as a 1-based
/// image buffer) in lexicographic matching order, splitting the work over
/// the pool. Per-prefix accumulators are merged in prefix order, so the
/// result does not depend on the worker count.
pub fn fold_involutions<A, I, F, M>(n: usize, opts: &EnumOptions, init: I, fold: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &[u32]) + Sync,
    M: Fn(A, A) -> A,
{
    opts.check(&double_factorial_odd(n as u64))?;
    let pool = opts.pool()?;
    let parts: Vec<A> = pool.install(|| {
        prefixes(2 * n, 2)
            .into_par_iter()
            .map(|mut alpha| {
                let mut acc = init();
                complete(&mut alpha, 1, &mut |a: &[u32]| fold(&mut acc, a));
                acc
            })
            .collect()
    });
    Ok(parts.into_iter().fold(init(), merge))
}

/// Vertex degrees of the canonical map with edge involution `alpha`,
/// written into `degrees` (cleared first); returns the vertex count.
fn vertex_degrees(alpha: &[u32], degrees: &mut Vec<u32>) -> usize {
    let len = alpha.len() - 1;
    degrees.clear();
    let mut seen = vec![false; len + 1];
    for start in 1..=len {
        if seen[start] {
            continue;
        }
        let mut d = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            d += 1;
            x = alpha[x] as usize % len + 1;
        }
        degrees.push(d);
    }
    degrees.len()
}

fn vertex_count(alpha: &[u32]) -> usize {
    let len = alpha.len() - 1;
    if len > 64 {
        return vertex_degrees(alpha, &mut Vec::new());
    }
    let mut seen = 0u64;
    let mut count = 0;
    for start in 1..=len {
        if seen >> (start - 1) & 1 == 1 {
            continue;
        }
        count += 1;
        let mut x = start;
        while seen >> (x - 1) & 1 == 0 {
            seen |= 1 << (x - 1);
            x = alpha[x] as usize % len + 1;
        }
    }
    count
}

fn to_map(alpha: &[u32]) -> RootedMap {
    RootedMap::from_alpha_unchecked(Permutation::from_raw(alpha.to_vec()))
}

/// `counts[g]` = number of rooted unicellular maps of genus `g` with `n` edges.
pub fn count_by_genus(n: u32, opts: &EnumOptions) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Err(Error::GenusOutOfRange { g: 0, n });
    }
    let n = n as usize;
    let counts = fold_involutions(
        n,
        opts,
        || vec![0u64; n / 2 + 1],
        |acc, alpha| {
            let v = vertex_count(alpha);
            acc[(n + 1 - v) / 2] += 1;
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?;
    Ok(counts.into_iter().map(BigUint::from).collect())
}

pub fn count_unicellular(g: u32, n: u32, opts: &EnumOptions) -> Result<BigUint> {
    check_genus(g, n)?;
    Ok(count_by_genus(n, opts)?.swap_remove(g as usize))
}

/// All rooted unicellular maps of genus `g` with `n` edges.
pub fn enum_unicellular(g: u32, n: u32, opts: &EnumOptions) -> Result<Vec<RootedMap>> {
    check_genus(g, n)?;
    let target = n as usize + 1 - 2 * g as usize;
    fold_involutions(
        n as usize,
        opts,
        Vec::new,
        |acc, alpha| {
            if vertex_count(alpha) == target {
                acc.push(to_map(alpha));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

/// Dominant maps of genus `g >= 1` with `n` edges.
pub fn enum_dominant(g: u32, n: u32, opts: &EnumOptions) -> Result<Vec<RootedMap>> {
    check_genus(g, n)?;
    if g == 0 {
        return Ok(Vec::new());
    }
    let target = n as usize + 1 - 2 * g as usize;
    fold_involutions(
        n as usize,
        opts,
        Vec::new,
        |acc, alpha| {
            if vertex_count(alpha) == target {
                let m = to_map(alpha);
                if is_dominant(&m) {
                    acc.push(m);
                }
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

/// Rooted schemes of genus `g` (every vertex of degree at least 3), over
/// all sizes `2g <= n <= 6g - 3`; only trivalent ones when `dominant`.
pub fn enum_schemes(g: u32, dominant: bool, opts: &EnumOptions) -> Result<Vec<Scheme>> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { g, n: 0 });
    }
    let sizes = if dominant { 6 * g - 3..=6 * g - 3 } else { 2 * g..=6 * g - 3 };
    let mut out = Vec::new();
    for n in sizes {
        let target = (n + 1 - 2 * g) as usize;
        let found = fold_involutions(
            n as usize,
            opts,
            Vec::new,
            |acc: &mut Vec<RootedMap>, alpha| {
                let mut degrees = Vec::new();
                if vertex_count(alpha) == target
                    && vertex_degrees(alpha, &mut degrees) == target
                    && degrees.iter().all(|&d| if dominant { d == 3 } else { d >= 3 })
                {
                    acc.push(to_map(alpha));
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        )?;
        for m in found {
            out.push(Scheme::new(m)?);
        }
    }
    Ok(out)
}

/// Number of rooted trivalent schemes of genus `g`, by exhaustive search.
pub fn count_dominant_schemes(g: u32, opts: &EnumOptions) -> Result<BigUint> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { g, n: 0 });
    }
    let n = (6 * g - 3) as usize;
    let target = n + 1 - 2 * g as usize;
    let count = fold_involutions(
        n,
        opts,
        || 0u64,
        |acc, alpha| {
            if vertex_count(alpha) != target {
                return;
            }
            let mut degrees = Vec::with_capacity(target);
            vertex_degrees(alpha, &mut degrees);
            if degrees.iter().all(|&d| d == 3) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )?;
    Ok(count.into())
}

/// Dyck words of length `2n`, lexicographic with `true < false` reversed
/// (up-steps first).
pub fn dyck_words(n: usize) -> Vec<Vec<bool>> {
    fn rec(word: &mut Vec<bool>, ups: usize, downs: usize, n: usize, out: &mut Vec<Vec<bool>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        if ups < n {
            word.push(true);
            rec(word, ups + 1, downs, n, out);
            word.pop();
        }
        if downs < ups {
            word.push(false);
            rec(word, ups, downs + 1, n, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    out
}

/// All rooted plane trees with `n >= 1` edges.
pub fn plane_trees(n: usize) -> Vec<RootedMap> {
    dyck_words(n)
        .iter()
        .map(|w| tree_from_dyck(w).expect("valid Dyck word"))
        .collect()
}

/// All 3-subsets of `items`, in lexicographic order.
pub fn triples_of<T: Copy>(items: &[T]) -> Vec<[T; 3]> {
    let k = items.len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                out.push([items[a], items[b], items[c]]);
            }
        }
    }
    out
}

/// Every ordered sequence of `g` disjoint triples of `vertices`.
pub fn triple_sequences(vertices: &[VertexId], g: usize) -> Vec<Vec<[VertexId; 3]>> {
    fn rec(
        vertices: &[VertexId],
        g: usize,
        used: &mut Vec<VertexId>,
        acc: &mut Vec<[VertexId; 3]>,
        out: &mut Vec<Vec<[VertexId; 3]>>,
    ) {
        if acc.len() == g {
            out.push(acc.clone());
            return;
        }
        let free: Vec<VertexId> = vertices.iter().copied().filter(|v| !used.contains(v)).collect();
        for t in triples_of(&free) {
            used.extend(t);
            acc.push(t);
            rec(vertices, g, used, acc, out);
            acc.pop();
            used.truncate(used.len() - 3);
        }
    }
    let mut out = Vec::new();
    rec(vertices, g, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Number of plane trees with `n` edges carrying `g` ordered disjoint
/// triples, singular or not, by enumeration.
pub fn count_marked_trees(g: usize, n: usize) -> u64 {
    plane_trees(n)
        .iter()
        .map(|t| triple_sequences(&t.vertices(), g).len() as u64)
        .sum()
}

/// All trees with `g` triples and `n` edges.
pub fn enum_trees_with_triples(g: usize, n: usize, opts: &EnumOptions) -> Result<Vec<TreeWithTriples>> {
    opts.check(&(catalan(n as u64) * marked_trees(g as u64, n as u64).unwrap_or_default()))?;
    let pool = opts.pool()?;
    let trees = plane_trees(n);
    let parts: Vec<Vec<TreeWithTriples>> = pool.install(|| {
        trees
            .into_par_iter()
            .map(|t| {
                let vertices = t.vertices();
                let mut out = Vec::new();
                if g == 0 {
                    out.push(TreeWithTriples::from_parts_unchecked(t, Vec::new()));
                    return out;
                }
                for seq in triple_sequences(&vertices, g) {
                    let w: Vec<VertexId> = seq.iter().flatten().copied().collect();
                    if is_non_singular(&t, &w).unwrap() {
                        out.push(TreeWithTriples::from_parts_unchecked(t.clone(), seq));
                    }
                }
                out
            })
            .collect()
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Fraction of (tree, 3-subset) pairs with `n` edges that are singular.
pub fn singular_fraction(n: usize) -> f64 {
    let mut singular = 0u64;
    let mut total = 0u64;
    for t in plane_trees(n) {
        for w in triples_of(&t.vertices()) {
            total += 1;
            if !is_non_singular(&t, &w).unwrap() {
                singular += 1;
            }
        }
    }
    singular as f64 / total as f64
}

/// All pairs `(t, nu)` of class T with `n` edges.
pub fn doubly_marked_trees(n: usize) -> Vec<(RootedMap, VertexId)> {
    let mut out = Vec::new();
    for t in plane_trees(n) {
        for v in t.vertices() {
            if is_in_t(&t, v).unwrap() {
                out.push((t.clone(), v));
            }
        }
    }
    out
}

/// Where a count came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    BruteForce,
    Formula,
}

impl Generator {
    pub fn as_str(self) -> &'static str {
        match self {
            Generator::BruteForce => "brute-force",
            Generator::Formula => "formula",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountEntry {
    pub g: u32,
    pub n: u32,
    pub count: BigUint,
    pub generator: Generator,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub entries: Vec<CountEntry>,
}

impl CountTable {
    pub fn push(&mut self, g: u32, n: u32, count: BigUint, generator: Generator) {
        self.entries.push(CountEntry { g, n, count, generator });
    }

    /// Pairs `(g, n)` whose generators disagree.
    pub fn disagreements(&self) -> Vec<(u32, u32)> {
        let mut bad = Vec::new();
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i + 1..] {
                if a.g == b.g && a.n == b.n && a.count != b.count && !bad.contains(&(a.g, a.n)) {
                    bad.push((a.g, a.n));
                }
            }
        }
        bad
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("g,n,count,generator\n");
        for e in &self.entries {
            writeln!(s, "{},{},{},{}", e.g, e.n, e.count, e.generator.as_str()).unwrap();
        }
        s
    }
}

/// Power-series coefficients `[z^0..=z^order]`.
fn series_mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let order = a.len().min(b.len());
    let mut out = vec![BigUint::zero(); order];
    for i in 0..order {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..order - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleRootingRow {
    pub n: u32,
    pub brute_force: BigUint,
    /// `sum_s (n / |s|) [z^n] T^|s|`
    pub derivative_form: BigRational,
    /// `sum_s [z^n] T~ T^(|s|-1)`
    pub product_form: BigUint,
}

impl DoubleRootingRow {
    pub fn agrees(&self) -> bool {
        let b = BigRational::from_integer(self.brute_force.clone().into());
        b == self.derivative_form && self.brute_force == self.product_form
    }
}

/// Compares brute-force counts of genus-`g` maps with the scheme
/// decomposition: each scheme edge is replaced by a doubly marked tree and
/// the root by an oriented edge on the right of the first tree's mark.
pub fn eq_doublerooting_check(g: u32, n_max: u32, opts: &EnumOptions) -> Result<Vec<DoubleRootingRow>> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { g, n: n_max });
    }
    let schemes = enum_schemes(g, false, opts)?;
    let order = n_max as usize + 1;
    let t: Vec<BigUint> = (0..order)
        .map(|k| if k == 0 { BigUint::zero() } else { half_t(k as u64).unwrap() })
        .collect();
    let t_tilde: Vec<BigUint> = t.iter().enumerate().map(|(k, c)| c * k).collect();
    let mut powers = vec![{
        let mut one = vec![BigUint::zero(); order];
        one[0] = BigUint::one();
        one
    }];
    let max_edges = schemes.iter().map(Scheme::edge_count).max().unwrap_or(0);
    for k in 1..=max_edges {
        let next = series_mul(&powers[k - 1], &t);
        powers.push(next);
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let brute_force = if 2 * g <= n {
            count_unicellular(g, n, opts)?
        } else {
            BigUint::zero()
        };
        let mut derivative_form = BigRational::zero();
        let mut product_form = BigUint::zero();
        for s in &schemes {
            let k = s.edge_count();
            derivative_form += BigRational::new(
                (BigUint::from(n) * &powers[k][n as usize]).into(),
                BigUint::from(k).into(),
            );
            product_form += &series_mul(&t_tilde, &powers[k - 1])[n as usize];
        }
        rows.push(DoubleRootingRow {
            n,
            brute_force,
            derivative_form,
            product_form,
        });
    }
    Ok(rows)
}

/// `[z^n] T~ = n [z^n] T` checked through the doubly marked tree count
/// weighted by its size.
pub fn t_tilde_matches(n: u64) -> bool {
    let direct = BigUint::from(doubly_marked_trees(n as usize).len()) * n;
    direct == half_t(n).unwrap() * n
}

/// Convenience for reports.
pub fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> EnumOptions {
        EnumOptions { workers: 2, budget: DEFAULT_BUDGET }
    }

    #[test]
    fn small_counts() {
        let c = count_by_genus(2, &opts()).unwrap();
        assert_eq!(c, vec![BigUint::from(2u32), BigUint::from(1u32)]);
        let c = count_by_genus(3, &opts()).unwrap();
        assert_eq!(c, vec![BigUint::from(5u32), BigUint::from(10u32)]);
    }

    #[test]
    fn formulas() {
        assert_eq!(marked_trees(1, 3).unwrap(), BigUint::from(20u32));
        assert_eq!(marked_trees(1, 4).unwrap(), BigUint::from(140u32));
        assert_eq!(dominant_schemes(1).unwrap(), BigUint::from(1u32));
        assert_eq!(dominant_schemes(2).unwrap(), BigUint::from(105u32));
        assert_eq!(tstar(1).unwrap(), BigUint::from(2u32));
        assert_eq!(half_t(3).unwrap(), BigUint::from(10u32));
        assert_eq!(catalan(7), BigUint::from(429u32));
        assert!(marked_trees(2, 3).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let tight = EnumOptions { workers: 1, budget: 100 };
        assert!(matches!(count_by_genus(5, &tight), Err(Error::ResourceBound(100))));
        assert!(count_by_genus(3, &tight).is_ok());
    }

    #[test]
    fn worker_count_does_not_change_order() {
        let a = enum_unicellular(1, 4, &EnumOptions { workers: 1, budget: DEFAULT_BUDGET }).unwrap();
        let b = enum_unicellular(1, 4, &EnumOptions { workers: 3, budget: DEFAULT_BUDGET }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn genus_one_schemes() {
        let s = enum_schemes(1, false, &opts()).unwrap();
        let mut shapes: Vec<(usize, usize)> = s
            .iter()
            .map(|s| {
                let d = s.degree_counts();
                (d.get(3).copied().unwrap_or(0), d.get(4).copied().unwrap_or(0))
            })
            .collect();
        shapes.sort();
        assert_eq!(shapes, vec![(0, 1), (2, 0)]);
    }

    #[test]
    fn doublerooting_small() {
        let rows = eq_doublerooting_check(1, 4, &opts()).unwrap();
        assert!(rows.iter().all(DoubleRootingRow::agrees));
        assert_eq!(rows[1].product_form, BigUint::from(1u32));
        assert_eq!(rows[2].product_form, BigUint::from(10u32));
    }

    #[test]
    fn csv_layout() {
        let mut t = CountTable::default();
        t.push(1, 3, BigUint::from(10u32), Generator::BruteForce);
        assert_eq!(t.to_csv(), "g,n,count,generator\n1,3,10,brute-force\n");
        t.push(1, 3, BigUint::from(11u32), Generator::Formula);
        assert_eq!(t.disagreements(), vec![(1, 3)]);
    }
}
