use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use unimap::bijection::{close_psi, open_phi};
use unimap::io::{from_json, to_json, MapFile, TreeWithTriplesFile, WellLabelledFile};
use unimap::labelled::{labelled_phi, labelled_psi, validate_labelling};
use unimap::scheme::{decompose, recompose};
use unimap::stats::{
    profile_statistics, sample_dominant_map, sample_histogram, sample_labelled_tree,
    sample_opening_sequence, sample_plane_tree, sample_tree_with_triples, sample_well_labelled,
    LabelHistogram, SeededRng,
};
use unimap::surgery::{glue_halfedges, reglue_spec, slice_vertex, SliceSpec};
use unimap::{CombMap, Permutation};

fn perm(len: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=len as u32).collect::<Vec<_>>()).prop_shuffle()
}

fn involution(n: usize) -> impl Strategy<Value = Vec<u32>> {
    perm(2 * n).prop_map(move |order| {
        let mut alpha = vec![0u32; order.len()];
        for p in order.chunks(2) {
            alpha[p[0] as usize - 1] = p[1];
            alpha[p[1] as usize - 1] = p[0];
        }
        alpha
    })
}

fn any_map() -> impl Strategy<Value = CombMap> {
    (1usize..10)
        .prop_flat_map(|n| (involution(n), perm(2 * n)))
        .prop_map(|(a, b)| CombMap::new(Permutation::new(&a).unwrap(), Permutation::new(&b).unwrap()).unwrap())
}

/// Unicellular maps: a random face cycle gamma and beta = gamma . alpha.
fn unicellular_map() -> impl Strategy<Value = CombMap> {
    (1usize..10)
        .prop_flat_map(|n| (involution(n), perm(2 * n)))
        .prop_map(|(a, order)| {
            let mut gamma = vec![0u32; order.len()];
            for (i, &h) in order.iter().enumerate() {
                gamma[h as usize - 1] = order[(i + 1) % order.len()];
            }
            let beta: Vec<u32> = a.iter().map(|&x| gamma[x as usize - 1]).collect();
            CombMap::new(Permutation::new(&a).unwrap(), Permutation::new(&beta).unwrap()).unwrap()
        })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn permutation_algebra(p in perm(9), q in perm(9)) {
        let p = Permutation::new(&p).unwrap();
        let q = Permutation::new(&q).unwrap();
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(9));
        let pq = p.compose(&q).unwrap();
        for x in 1..=9 {
            prop_assert_eq!(pq.apply(x), p.apply(q.apply(x)));
        }
        let total: usize = p.cycles().iter().map(Vec::len).sum();
        prop_assert_eq!(total, 9);
        prop_assert_eq!(Permutation::from_cycles(9, &p.cycles()).unwrap(), p);
    }

    #[test]
    fn map_invariants(m in any_map()) {
        for i in 1..=m.half_edge_count() as u32 {
            prop_assert_eq!(m.gamma().apply(i), m.beta().apply(m.alpha().apply(i)));
            prop_assert_ne!(m.alpha().apply(i), i);
            prop_assert_eq!(m.alpha().apply(m.alpha().apply(i)), i);
        }
        let degrees: usize = m.vertices().iter().map(|&v| m.vertex_degree(v).unwrap()).sum();
        prop_assert_eq!(degrees, 2 * m.n());
        if m.is_connected() {
            let chi = (m.vertex_count() + m.face_count()) as i64 - m.n() as i64;
            prop_assert!(chi <= 2 && chi % 2 == 0);
            let g = m.genus().unwrap() as i64;
            prop_assert_eq!(chi, 2 - 2 * g);
            if m.is_unicellular() {
                prop_assert_eq!(m.n() as i64, 2 * g - 1 + m.vertex_count() as i64);
            }
        } else {
            prop_assert!(m.genus().is_err());
        }
    }

    #[test]
    fn canonical_form(m in unicellular_map(), r in 1u32..20) {
        prop_assert!(m.is_unicellular());
        let root = (r - 1) % m.half_edge_count() as u32 + 1;
        let (c, pi) = m.canonicalize(root).unwrap();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.alpha(), &m.alpha().conjugate(&pi));
        prop_assert_eq!(c.beta(), &m.beta().conjugate(&pi));
        prop_assert_eq!(pi.apply(root), 1);
        let (again, id) = c.canonicalize(1).unwrap();
        prop_assert_eq!(again, c);
        prop_assert_eq!(id, Permutation::identity(m.half_edge_count()));
    }

    #[test]
    fn slice_then_glue(m in any_map(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let vertices = m.vertices();
        let v = *vertices.choose(&mut r).unwrap();
        let cycle = m.vertex_cycle(v).unwrap();
        prop_assume!(cycle.len() >= 2);
        let k = 2 + (seed as usize) % (cycle.len() - 1);
        let cut: Vec<u32> = cycle.choose_multiple(&mut r, k).copied().collect();
        let spec = SliceSpec::new(v, cut);
        let sliced = slice_vertex(&m, &spec).unwrap();
        prop_assert_eq!(sliced.vertex_count(), m.vertex_count() + k - 1);
        prop_assert_eq!(sliced.alpha(), m.alpha());
        prop_assert_eq!(glue_halfedges(&sliced, &reglue_spec(&m, &spec).unwrap()).unwrap(), m);
    }

    #[test]
    fn map_json_roundtrip(m in any_map()) {
        let text = to_json(&MapFile::from_map(&m, None)).unwrap();
        prop_assert_eq!(from_json::<MapFile>(&text).unwrap().to_map().unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bijection_roundtrips(g in 1usize..=3, extra in 0usize..40, seed in any::<u64>()) {
        let n = 6 * g + extra;
        let mut r = rng(seed);
        let tc = sample_tree_with_triples(g, n, &mut r).unwrap();
        let (m, seq) = close_psi(&tc).unwrap();
        prop_assert_eq!(m.genus().unwrap() as usize, g);
        prop_assert_eq!(open_phi(&m, &seq).unwrap(), tc.clone());
        let other = sample_opening_sequence(&m, &mut r).unwrap();
        let (back, back_seq) = close_psi(&open_phi(&m, &other).unwrap()).unwrap();
        prop_assert_eq!(back, m);
        prop_assert_eq!(back_seq, other);
        let text = to_json(&TreeWithTriplesFile::from_value(&tc)).unwrap();
        prop_assert_eq!(from_json::<TreeWithTriplesFile>(&text).unwrap().to_value().unwrap(), tc);
    }

    #[test]
    fn decomposition_roundtrip(g in 1usize..=3, extra in 0usize..40, seed in any::<u64>()) {
        let m = sample_dominant_map(g, 6 * g + extra, &mut rng(seed)).unwrap();
        prop_assert_eq!(recompose(&decompose(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn labelled_roundtrips(g in 1usize..=2, extra in 0usize..30, seed in any::<u64>()) {
        let w = sample_well_labelled(g, 6 * g + extra, &mut rng(seed)).unwrap();
        let labels = w.triple_labels();
        let l = w.labelling();
        for (t, &x) in w.base.triples().iter().zip(&labels) {
            for &v in t {
                prop_assert_eq!(l.get(v).unwrap(), x);
            }
        }
        let (lm, seq) = labelled_psi(&w).unwrap();
        prop_assert!(validate_labelling(&lm.map, &lm.labelling).unwrap());
        prop_assert_eq!(labelled_phi(&lm, &seq).unwrap(), w.clone());
        let text = to_json(&WellLabelledFile::from_value(&w)).unwrap();
        prop_assert_eq!(from_json::<WellLabelledFile>(&text).unwrap().to_value().unwrap(), w.clone());
        prop_assert!(profile_statistics(&w).has_unit_mass());
    }

    #[test]
    fn trees_and_histograms(n in 1usize..300, seed in any::<u64>()) {
        let t = sample_plane_tree(n, &mut rng(seed)).unwrap();
        prop_assert_eq!(t.vertex_count(), n + 1);
        prop_assert_eq!(t.genus().unwrap(), 0);
        let lt = sample_labelled_tree(n, &mut rng(seed)).unwrap();
        let h = LabelHistogram::of_tree(&lt);
        prop_assert_eq!(h.total(), n as u64 + 1);
        prop_assert!(h.cube_sum() >= n as u128 + 1);
        prop_assert_eq!(sample_histogram(n, &mut rng(seed)), h);
        prop_assert_eq!(&lt.tree, &t);
    }

    #[test]
    fn same_seed_same_stream(seed in any::<u64>(), batch in 0u64..5) {
        let a = sample_well_labelled(1, 20, &mut SeededRng::new(seed).stream(batch)).unwrap();
        let b = sample_well_labelled(1, 20, &mut SeededRng::new(seed).stream(batch)).unwrap();
        prop_assert_eq!(a, b);
    }
}
