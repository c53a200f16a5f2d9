use unimap::enumerate::{doubly_marked_trees, enum_unicellular, half_t, EnumOptions};
use unimap::scheme::{decompose, is_right_of, prune_core, recompose};

fn opts() -> EnumOptions {
    EnumOptions::default()
}

#[test]
fn roundtrip_all_small_maps() {
    for g in 1..=2u32 {
        for n in 2 * g..=7 {
            for m in enum_unicellular(g, n, &opts()).unwrap() {
                let d = decompose(&m).unwrap_or_else(|e| panic!("{m}: {e}"));
                let total: usize = d.trees.iter().map(|t| t.tree.n()).sum();
                assert_eq!(total, m.n());
                assert_eq!(d.scheme.genus(), g);
                let back = recompose(&d).unwrap_or_else(|e| panic!("{m}: {e}"));
                assert_eq!(back, m);
            }
        }
    }
}

#[test]
fn core_is_a_fixpoint() {
    for m in enum_unicellular(1, 6, &opts()).unwrap() {
        let core = prune_core(&m).unwrap();
        let again = prune_core(&core.map).unwrap();
        assert_eq!(again.map, core.map);
        assert_eq!(again.root_in_parent, 1);
    }
}

#[test]
fn right_of_covers_half_the_oriented_edges() {
    for n in 1..=6usize {
        let pairs = doubly_marked_trees(n);
        assert_eq!(pairs.len() as u64, unimap::enumerate::to_u64(&half_t(n as u64).unwrap()));
        let mut right = 0usize;
        for (t, nu) in &pairs {
            for eps in 1..=2 * n as u32 {
                if is_right_of(t, *nu, eps).unwrap() {
                    right += 1;
                }
            }
        }
        assert_eq!(right, n * pairs.len(), "n = {n}");
    }
}
