//! Uniform samplers for trees, trees with triples and dominant maps, and
//! Monte-Carlo estimators built on label histograms of random labelled
//! trees.
//!
//! Every sampler draws from a `ChaCha8` stream selected by `(seed, batch)`.
//! Parallel runs split the sample count into fixed batches and combine the
//! batch results in batch order, so output never depends on the number of
//! workers.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bijection::{
    close_psi, intertwined_nodes, is_non_singular, slice_intertwined, OpeningSequence, TreeWithTriples,
};
use crate::scheme::is_dominant;
use crate::error::{Error, Result};
use crate::labelled::{LabelledTree, WellLabelledTriples};
use crate::perm::{RootedMap, VertexId};
use crate::trees::tree_from_dyck;

/// `gamma^2 = 3 / sqrt(2)`, the label scaling constant squared.
pub fn gamma_sq() -> f64 {
    3.0 / std::f64::consts::SQRT_2
}

pub fn gamma() -> f64 {
    gamma_sq().sqrt()
}

/// A seed and the generator it drives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeededRng {
    pub seed: u64,
    pub algorithm: &'static str,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            algorithm: "chacha8",
        }
    }

    /// The independent stream used for batch `batch`.
    pub fn stream(&self, batch: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(batch);
        rng
    }
}

/// Samples per batch in parallel runs.
pub const BATCH: usize = 1000;

/// Runs `f(rng, size)` once per batch and returns the batch results in
/// order.
pub fn run_batches<T, F>(samples: usize, seed: SeededRng, workers: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, usize) -> Result<T> + Sync,
{
    if workers == 0 {
        return Err(Error::OutOfRange("workers must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::OutOfRange(e.to_string()))?;
    let batches = samples.div_ceil(BATCH);
    pool.install(|| {
        (0..batches)
            .into_par_iter()
            .map(|b| {
                let size = BATCH.min(samples - b * BATCH);
                f(&mut seed.stream(b as u64), size)
            })
            .collect()
    })
}

/// Two independent uniform indices below `a` and `b`, from a single 32-bit
/// draw when `a * b` fits (Lemire's multiply-and-reject).
fn index_pair<R: Rng + ?Sized>(a: u64, b: u64, rng: &mut R) -> (usize, usize) {
    let p = a * b;
    if p > u32::MAX as u64 {
        return (rng.gen_range(0..a as usize), rng.gen_range(0..b as usize));
    }
    let mut m = rng.next_u32() as u64 * p;
    if (m as u32 as u64) < p {
        let t = (1u64 << 32) % p;
        while (m as u32 as u64) < t {
            m = rng.next_u32() as u64 * p;
        }
    }
    let v = m >> 32;
    ((v % a) as usize, (v / a) as usize)
}

/// Fisher-Yates, two positions per random draw.
fn shuffle<T, R: Rng + ?Sized>(xs: &mut [T], rng: &mut R) {
    let mut i = xs.len();
    while i >= 3 {
        let (j, k) = index_pair(i as u64, i as u64 - 1, rng);
        xs.swap(i - 1, j);
        xs.swap(i - 2, k);
        i -= 2;
    }
    if i == 2 {
        let j = rng.gen_range(0..2);
        xs.swap(1, j);
    }
}

/// Uniform Dyck word of length `2n` (`true` = away from the root): shuffle
/// `n` up-steps and `n + 1` down-steps, rotate to the unique good
/// conjugate, drop the last step.
pub fn sample_dyck<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<bool> {
    let mut steps = vec![false; 2 * n + 1];
    steps[..n].fill(true);
    shuffle(&mut steps, rng);
    let mut height = 0i64;
    let mut min = 0i64;
    let mut at = 0;
    for (k, &up) in steps.iter().enumerate() {
        height += if up { 1 } else { -1 };
        if height < min {
            min = height;
            at = k + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(at % len);
    steps.pop();
    steps
}

pub fn sample_plane_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<RootedMap> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    tree_from_dyck(&sample_dyck(n, rng))
}

pub fn sample_increments<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i8> {
    (0..n).map(|_| rng.gen_range(-1i8..=1)).collect()
}

pub fn sample_labelled_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<LabelledTree> {
    let tree = sample_plane_tree(n, rng)?;
    LabelledTree::new(tree, sample_increments(n, rng))
}

/// Number of vertices per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelHistogram {
    /// Smallest label.
    pub min_label: i64,
    /// `counts[j]` = vertices with label `min_label + j`.
    pub counts: Vec<u64>,
    pub n: usize,
}

impl LabelHistogram {
    pub fn from_labels(n: usize, labels: impl IntoIterator<Item = i64>) -> Self {
        let labels: Vec<i64> = labels.into_iter().collect();
        let min = labels.iter().copied().min().unwrap_or(0);
        let max = labels.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0u64; (max - min + 1) as usize];
        for l in labels {
            counts[(l - min) as usize] += 1;
        }
        LabelHistogram {
            min_label: min,
            counts,
            n,
        }
    }

    /// Histogram of the canonical tree of `word` with the given increments,
    /// without listing the labels.
    pub fn from_word(word: &[bool], increments: &[i8]) -> Self {
        let n = increments.len();
        let mut counts = vec![0u64; 2 * n + 1];
        let mut stack = Vec::with_capacity(n);
        let (mut cur, mut lo, mut hi) = (n, n, n);
        counts[n] = 1;
        let mut k = 0;
        for &up in word {
            if up {
                stack.push(cur);
                cur = (cur as i64 + increments[k] as i64) as usize;
                k += 1;
                counts[cur] += 1;
                lo = lo.min(cur);
                hi = hi.max(cur);
            } else {
                cur = stack.pop().expect("Dyck word");
            }
        }
        counts.truncate(hi + 1);
        counts.drain(..lo);
        LabelHistogram {
            min_label: lo as i64 - n as i64,
            counts,
            n,
        }
    }

    pub fn of_tree(t: &LabelledTree) -> Self {
        let l = t.labelling();
        LabelHistogram::from_labels(t.tree.n(), l.labels.values().copied())
    }

    pub fn max_label(&self) -> i64 {
        self.min_label + self.counts.len() as i64 - 1
    }

    pub fn get(&self, k: i64) -> u64 {
        let j = k - self.min_label;
        if j < 0 || j as usize >= self.counts.len() {
            0
        } else {
            self.counts[j as usize]
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `sum_k X(k)^3`, exact.
    pub fn cube_sum(&self) -> u128 {
        self.counts.iter().map(|&x| (x as u128).pow(3)).sum()
    }
}

/// `(vertex id, label)` for the canonical tree of `word` with the given
/// increments, root first. The child reached by the up-step at half-edge
/// `h` has id `h + 1`.
pub fn vertex_labels(word: &[bool], increments: &[i8]) -> Vec<(VertexId, i64)> {
    let mut labels = Vec::with_capacity(increments.len() + 1);
    labels.push((VertexId(1), 0i64));
    let mut stack = Vec::with_capacity(increments.len());
    let mut cur = 0i64;
    let mut k = 0;
    for (i, &up) in word.iter().enumerate() {
        if up {
            stack.push(cur);
            cur += increments[k] as i64;
            k += 1;
            labels.push((VertexId(i as u32 + 2), cur));
        } else {
            cur = stack.pop().expect("Dyck word");
        }
    }
    labels
}

/// Vertex labels of a uniform labelled tree, drawing the same random
/// values as `sample_labelled_tree` without building the tree.
pub fn sample_vertex_labels<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i64> {
    let word = sample_dyck(n, rng);
    let increments = sample_increments(n, rng);
    vertex_labels(&word, &increments).into_iter().map(|(_, l)| l).collect()
}

/// Label histogram of a uniform labelled tree with `n` edges.
pub fn sample_histogram<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LabelHistogram {
    let word = sample_dyck(n, rng);
    let increments = sample_increments(n, rng);
    LabelHistogram::from_word(&word, &increments)
}

/// `W = sum_k X(k)^3 / (gamma^2 n^(5/2))`.
pub fn w_statistic(t: &LabelledTree) -> f64 {
    w_of_cube_sum(LabelHistogram::of_tree(t).cube_sum(), t.tree.n())
}

pub fn w_of_cube_sum(s: u128, n: usize) -> f64 {
    s as f64 / (gamma_sq() * (n as f64).powf(2.5))
}

fn check_class(g: usize, n: usize) -> Result<()> {
    if g > 0 && n + 3 < 6 * g {
        return Err(Error::EmptyClass {
            g: g as u32,
            n: n as u32,
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    Ok(())
}

/// `k` distinct uniform elements of `0..len`, in draw order.
fn distinct<R: Rng + ?Sized>(len: usize, k: usize, rng: &mut R) -> Vec<usize> {
    rand::seq::index::sample(rng, len, k).into_vec()
}

/// Uniform element of the class of plane trees with `n` edges and `g`
/// ordered disjoint triples whose union is non-singular, by rejection.
pub fn sample_tree_with_triples<R: Rng + ?Sized>(g: usize, n: usize, rng: &mut R) -> Result<TreeWithTriples> {
    check_class(g, n)?;
    loop {
        let tree = sample_plane_tree(n, rng)?;
        if g == 0 {
            return Ok(TreeWithTriples::from_parts_unchecked(tree, Vec::new()));
        }
        let vertices = tree.vertices();
        let picks = distinct(vertices.len(), 3 * g, rng);
        let triples: Vec<[VertexId; 3]> = picks
            .chunks(3)
            .map(|c| [vertices[c[0]], vertices[c[1]], vertices[c[2]]])
            .collect();
        let w: Vec<VertexId> = triples.iter().flatten().copied().collect();
        if is_non_singular(&tree, &w)? {
            return Ok(TreeWithTriples::from_parts_unchecked(tree, triples));
        }
    }
}

/// Uniform dominant unicellular map of genus `g` with `n` edges.
pub fn sample_dominant_map<R: Rng + ?Sized>(g: usize, n: usize, rng: &mut R) -> Result<RootedMap> {
    let tc = sample_tree_with_triples(g, n, rng)?;
    Ok(close_psi(&tc)?.0)
}

/// A uniform opening sequence of a dominant map: slice a uniform
/// intertwined node, `g` times.
pub fn sample_opening_sequence<R: Rng + ?Sized>(m: &RootedMap, rng: &mut R) -> Result<OpeningSequence> {
    if !is_dominant(m) {
        return Err(Error::NotDominant);
    }
    let g = m.genus()? as usize;
    let mut nodes = vec![VertexId(0); g];
    let mut cur = m.clone();
    for i in (0..g).rev() {
        let choices = intertwined_nodes(&cur)?;
        let v = *choices.choose(rng).ok_or(Error::NotDominant)?;
        nodes[i] = v;
        cur = slice_intertwined(&cur, v)?.0;
    }
    Ok(OpeningSequence::new(nodes))
}

/// Uniform element of the well-labelled class. A uniform labelled tree is
/// kept with probability `(sum_k X(k)^3 / (n+1)^3)^g`; then each triple
/// picks a label class with probability `X(k)^3 / sum_j X(j)^3` and three
/// independent uniform vertices of that class. Any repeated vertex or a
/// singular union restarts from a fresh tree.
pub fn sample_well_labelled<R: Rng + ?Sized>(g: usize, n: usize, rng: &mut R) -> Result<WellLabelledTriples> {
    check_class(g, n)?;
    let denom = ((n + 1) as f64).powi(3);
    loop {
        let word = sample_dyck(n, rng);
        let increments = sample_increments(n, rng);
        if g == 0 {
            let base = TreeWithTriples::from_parts_unchecked(tree_from_dyck(&word)?, Vec::new());
            return WellLabelledTriples::new(base, increments);
        }
        let hist = LabelHistogram::from_word(&word, &increments);
        let s = hist.cube_sum();
        let accept = (s as f64 / denom).powi(g as i32);
        if rng.gen::<f64>() >= accept {
            continue;
        }
        let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); hist.counts.len()];
        for (v, l) in vertex_labels(&word, &increments) {
            classes[(l - hist.min_label) as usize].push(v);
        }
        let mut triples = Vec::with_capacity(g);
        let mut used = Vec::with_capacity(3 * g);
        let mut clash = false;
        for _ in 0..g {
            let mut r = rng.gen_range(0..s);
            let mut j = 0;
            while r >= (hist.counts[j] as u128).pow(3) {
                r -= (hist.counts[j] as u128).pow(3);
                j += 1;
            }
            let class = &classes[j];
            let t: [VertexId; 3] = std::array::from_fn(|_| class[rng.gen_range(0..class.len())]);
            for v in t {
                if used.contains(&v) {
                    clash = true;
                }
                used.push(v);
            }
            triples.push(t);
        }
        if clash {
            continue;
        }
        let tree = tree_from_dyck(&word)?;
        if !is_non_singular(&tree, &used)? {
            continue;
        }
        let base = TreeWithTriples::from_parts_unchecked(tree, triples);
        return WellLabelledTriples::new(base, increments);
    }
}

/// A Monte-Carlo estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub target: String,
    pub g: usize,
    pub n: usize,
    pub samples: usize,
    pub mean: f64,
    pub std_error: f64,
    pub seed: u64,
}

impl Estimate {
    pub const CSV_HEADER: &'static str = "target,g,n,samples,mean,stderr,seed";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.12e},{:.6e},{}",
            self.target, self.g, self.n, self.samples, self.mean, self.std_error, self.seed
        )
    }

    /// Number of combined standard errors between two estimates.
    pub fn z_score(&self, other: &Estimate) -> f64 {
        let s = (self.std_error.powi(2) + other.std_error.powi(2)).sqrt();
        if s == 0.0 {
            if self.mean == other.mean {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.mean - other.mean).abs() / s
        }
    }
}

/// Running count, mean and sum of squared deviations.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Moments {
    pub count: u64,
    pub mean: f64,
    pub m2: f64,
}

impl Moments {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    /// Pairwise combination of two disjoint samples.
    pub fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let d = other.mean - self.mean;
        Moments {
            count,
            mean: self.mean + d * other.count as f64 / count as f64,
            m2: self.m2 + other.m2 + d * d * (self.count as f64 * other.count as f64) / count as f64,
        }
    }

    pub fn std_error(&self) -> f64 {
        if self.count < 2 {
            return f64::NAN;
        }
        (self.m2 / (self.count - 1) as f64).sqrt() / (self.count as f64).sqrt()
    }
}

fn tg_prefactor(g: usize) -> f64 {
    let g_fact: f64 = (1..=g).map(|k| k as f64).product();
    2.0 / (12f64.powi(g as i32) * g_fact * std::f64::consts::PI.sqrt())
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < 100 {
        return Err(Error::OutOfRange(format!("need at least 100 samples, got {samples}")));
    }
    Ok(())
}

fn estimate_with<F>(target: &str, g: usize, n: usize, samples: usize, seed: u64, workers: usize, value: F) -> Result<Estimate>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    check_samples(samples)?;
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let parts = run_batches(samples, SeededRng::new(seed), workers, |rng, size| {
        let mut m = Moments::default();
        for _ in 0..size {
            m.push(value(rng));
        }
        Ok(m)
    })?;
    let m = parts.into_iter().fold(Moments::default(), Moments::merge);
    Ok(Estimate {
        target: target.into(),
        g,
        n,
        samples,
        mean: m.mean,
        std_error: m.std_error(),
        seed,
    })
}

/// `2 gamma^(2g) / (12^g g! sqrt(pi)) E[W^g]` over uniform labelled trees.
pub fn estimate_tg_moment(g: usize, n: usize, samples: usize, seed: u64, workers: usize) -> Result<Estimate> {
    let pre = tg_prefactor(g);
    let norm = (n as f64).powf(2.5);
    estimate_with("tg-moment", g, n, samples, seed, workers, |rng| {
        if g == 0 {
            return pre;
        }
        let s = sample_histogram(n, rng).cube_sum() as f64;
        pre * (s / norm).powi(g as i32)
    })
}

/// `2 n^(g/2) / (12^g g! sqrt(pi)) P(each of g triples of independent
/// uniform vertices shares one label)`.
pub fn estimate_tg_probability(g: usize, n: usize, samples: usize, seed: u64, workers: usize) -> Result<Estimate> {
    let scale = tg_prefactor(g) * (n as f64).powf(g as f64 / 2.0);
    estimate_with("tg-probability", g, n, samples, seed, workers, |rng| {
        if g == 0 {
            return scale;
        }
        let labels = sample_vertex_labels(n, rng);
        let hit = (0..g).all(|_| {
            let a = labels[rng.gen_range(0..labels.len())];
            let b = labels[rng.gen_range(0..labels.len())];
            let c = labels[rng.gen_range(0..labels.len())];
            a == b && b == c
        });
        if hit {
            scale
        } else {
            0.0
        }
    })
}

/// A signed discrete measure with exact integer masses over a common
/// denominator; atom `k` sits at `k * scale`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileMeasure {
    pub counts: Vec<i64>,
    pub denominator: u64,
    pub scale: f64,
}

impl ProfileMeasure {
    pub fn atoms(&self) -> Vec<(f64, f64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k as f64 * self.scale, c as f64 / self.denominator as f64))
            .collect()
    }

    /// Exact total mass as a fraction.
    pub fn total(&self) -> (i64, u64) {
        (self.counts.iter().sum(), self.denominator)
    }

    pub fn has_unit_mass(&self) -> bool {
        let (num, den) = self.total();
        num >= 0 && num as u64 == den
    }
}

/// Distance profile of the quadrangulation coded by `w`, read off the
/// tree: shifted label histogram plus the correction for the `g` glued
/// triples and the pointed vertex, normalized by `n + 2 - 2g`.
pub fn profile_statistics(w: &WellLabelledTriples) -> ProfileMeasure {
    let n = w.labelled.tree.n();
    let g = w.base.genus();
    let per = w.labelled.half_edge_labels();
    let labels: Vec<i64> = w.labelled.tree.vertices().iter().map(|v| per[v.0 as usize]).collect();
    let hist = LabelHistogram::from_labels(n, labels);
    let lambda = hist.min_label;
    let mut counts = vec![0i64; hist.counts.len() + 1];
    counts[0] += 1;
    for (j, &x) in hist.counts.iter().enumerate() {
        counts[j + 1] += x as i64;
    }
    for l in w.triple_labels() {
        counts[(l - lambda + 1) as usize] -= 2;
    }
    ProfileMeasure {
        counts,
        denominator: (n + 2 - 2 * g) as u64,
        scale: gamma() * (n as f64).powf(-0.25),
    }
}

/// `gamma n^(-1/4) (max label - min label + 1)`.
pub fn radius(w: &WellLabelledTriples) -> f64 {
    let n = w.labelled.tree.n();
    let per = w.labelled.half_edge_labels();
    let max = per[1..].iter().max().copied().unwrap_or(0);
    let min = per[1..].iter().min().copied().unwrap_or(0);
    gamma() * (n as f64).powf(-0.25) * (max - min + 1) as f64
}

/// Profiles pooled over many samples of one `(g, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PooledProfile {
    pub g: usize,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Summed integer counts per atom index.
    pub counts: Vec<i64>,
    pub denominator: u64,
    pub scale: f64,
    pub radii: Vec<f64>,
    /// Whether every individual profile had mass exactly 1.
    pub all_unit_mass: bool,
}

impl PooledProfile {
    /// `bins` equal-width bins over atom indices `0..counts.len()`; each
    /// row is `(bin centre position, pooled mass)`.
    pub fn histogram(&self, bins: usize) -> Vec<(f64, f64)> {
        let bins = bins.max(1);
        let len = self.counts.len().max(1);
        let total = self.denominator as f64 * self.samples as f64;
        let mut mass = vec![0i64; bins];
        for (k, &c) in self.counts.iter().enumerate() {
            mass[k * bins / len] += c;
        }
        (0..bins)
            .map(|b| {
                let centre = (b as f64 + 0.5) * len as f64 / bins as f64;
                (centre * self.scale, mass[b] as f64 / total)
            })
            .collect()
    }

    pub fn mean_radius(&self) -> f64 {
        self.radii.iter().sum::<f64>() / self.radii.len() as f64
    }

    pub fn to_csv(&self, bins: usize) -> String {
        let mut s = String::from("position,mass\n");
        for (x, m) in self.histogram(bins) {
            writeln!(s, "{x:.9},{m:.12e}").unwrap();
        }
        s
    }

    /// Whitespace-separated `position mass` lines.
    pub fn to_gnuplot(&self, bins: usize) -> String {
        let mut s = format!("# g={} n={} samples={} seed={}\n", self.g, self.n, self.samples, self.seed);
        for (x, m) in self.histogram(bins) {
            writeln!(s, "{x:.9} {m:.12e}").unwrap();
        }
        s
    }
}

pub fn pooled_profile(g: usize, n: usize, samples: usize, seed: u64, workers: usize) -> Result<PooledProfile> {
    check_class(g, n)?;
    let parts = run_batches(samples, SeededRng::new(seed), workers, |rng, size| {
        let mut out = Vec::with_capacity(size);
        for _ in 0..size {
            let w = sample_well_labelled(g, n, rng)?;
            out.push((profile_statistics(&w), radius(&w)));
        }
        Ok(out)
    })?;
    let mut pooled = PooledProfile {
        g,
        n,
        samples,
        seed,
        counts: Vec::new(),
        denominator: (n + 2 - 2 * g) as u64,
        scale: gamma() * (n as f64).powf(-0.25),
        radii: Vec::with_capacity(samples),
        all_unit_mass: true,
    };
    for (p, r) in parts.into_iter().flatten() {
        pooled.all_unit_mass &= p.has_unit_mass();
        if pooled.counts.len() < p.counts.len() {
            pooled.counts.resize(p.counts.len(), 0);
        }
        for (a, b) in pooled.counts.iter_mut().zip(&p.counts) {
            *a += b;
        }
        pooled.radii.push(r);
    }
    Ok(pooled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn shuffle_hits_every_permutation_evenly() {
        let mut rng = SeededRng::new(9).stream(0);
        let mut seen: HashMap<[u8; 5], u32> = HashMap::new();
        let draws = 120_000;
        for _ in 0..draws {
            let mut xs = [0u8, 1, 2, 3, 4];
            shuffle(&mut xs, &mut rng);
            *seen.entry(xs).or_default() += 1;
        }
        assert_eq!(seen.len(), 120);
        // expected 1000 each, sd about 31.6
        assert!(seen.values().all(|&c| (850..1150).contains(&c)));
    }

    #[test]
    fn index_pair_covers_large_bounds() {
        let mut rng = SeededRng::new(3).stream(0);
        for _ in 0..1000 {
            let (a, b) = index_pair(70_000, 69_999, &mut rng);
            assert!(a < 70_000 && b < 69_999);
        }
    }

    #[test]
    fn dyck_words_are_valid() {
        let mut rng = SeededRng::new(1).stream(0);
        for n in 1..30 {
            let w = sample_dyck(n, &mut rng);
            assert_eq!(w.len(), 2 * n);
            let mut h = 0i64;
            for up in w {
                h += if up { 1 } else { -1 };
                assert!(h >= 0);
            }
            assert_eq!(h, 0);
        }
    }

    #[test]
    fn fast_histogram_matches_tree_path() {
        for seed in 0..20 {
            let a = sample_histogram(50, &mut SeededRng::new(seed).stream(3));
            let t = sample_labelled_tree(50, &mut SeededRng::new(seed).stream(3)).unwrap();
            assert_eq!(a, LabelHistogram::of_tree(&t));
            assert_eq!(a.total(), 51);
        }
    }

    #[test]
    fn w_small_cases() {
        let t = tree_from_dyck(&[true, false, true, false]).unwrap();
        let flat = LabelledTree::new(t.clone(), vec![0, 0]).unwrap();
        assert_eq!(LabelHistogram::of_tree(&flat).cube_sum(), 27);
        let one = LabelledTree::new(tree_from_dyck(&[true, false]).unwrap(), vec![1]).unwrap();
        assert_eq!(LabelHistogram::of_tree(&one).cube_sum(), 2);
        assert!(w_statistic(&flat) > 0.0);
    }

    #[test]
    fn genus_zero_estimators_are_exact() {
        let exact = 2.0 / std::f64::consts::PI.sqrt();
        let a = estimate_tg_moment(0, 10, 200, 7, 1).unwrap();
        let b = estimate_tg_probability(0, 10, 200, 7, 1).unwrap();
        assert_eq!(a.mean, exact);
        assert_eq!(b.mean, exact);
        assert_eq!(a.std_error, 0.0);
        assert!(estimate_tg_moment(1, 10, 50, 7, 1).is_err());
    }

    #[test]
    fn estimates_ignore_worker_count() {
        let a = estimate_tg_moment(1, 40, 2500, 11, 1).unwrap();
        let b = estimate_tg_moment(1, 40, 2500, 11, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn moments_merge_matches_sequential() {
        let xs: Vec<f64> = (0..100).map(|i| ((i * 37) % 11) as f64).collect();
        let mut all = Moments::default();
        xs.iter().for_each(|&x| all.push(x));
        let mut a = Moments::default();
        let mut b = Moments::default();
        xs[..30].iter().for_each(|&x| a.push(x));
        xs[30..].iter().for_each(|&x| b.push(x));
        let m = a.merge(b);
        assert!((m.mean - all.mean).abs() < 1e-12);
        assert!((m.m2 - all.m2).abs() < 1e-9);
    }

    #[test]
    fn empty_class() {
        let mut rng = SeededRng::new(0).stream(0);
        assert!(matches!(
            sample_tree_with_triples(1, 2, &mut rng),
            Err(Error::EmptyClass { g: 1, n: 2 })
        ));
        assert!(matches!(
            sample_well_labelled(2, 8, &mut rng),
            Err(Error::EmptyClass { .. })
        ));
    }

    #[test]
    fn profiles_have_unit_mass() {
        let mut rng = SeededRng::new(5).stream(0);
        for g in 0..=2 {
            for _ in 0..20 {
                let w = sample_well_labelled(g, 40, &mut rng).unwrap();
                let p = profile_statistics(&w);
                assert!(p.has_unit_mass());
                assert!(radius(&w) > 0.0);
                for t in w.triple_labels() {
                    assert!(w.labelled.labelling().labels.values().any(|&l| l == t));
                }
            }
        }
    }
}
