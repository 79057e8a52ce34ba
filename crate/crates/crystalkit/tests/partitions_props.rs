use crystalkit::partitions::{lr_coefficient, lr_product, pair_order_ge, Partition, PartitionPair};
use crystalkit::tableaux::lr_by_crystal;
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 0..=4)
        .prop_map(Partition::from_unsorted)
        .prop_filter("size bound", move |p| p.size() <= max)
}

fn pair() -> impl Strategy<Value = PartitionPair> {
    (partition(4), partition(4)).prop_map(|(a, b)| PartitionPair::new(a, b))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().len(), p.part(1));
    }

    #[test]
    fn pair_order_is_reflexive(a in pair()) {
        prop_assert!(pair_order_ge(&a, &a));
    }

    #[test]
    fn pair_order_is_antisymmetric(a in pair(), b in pair()) {
        if pair_order_ge(&a, &b) && pair_order_ge(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn pair_order_is_transitive(a in pair()) {
        // Random triples almost never chain, so walk down from `a`.
        for b in a.below() {
            prop_assert!(pair_order_ge(&a, &b));
            for c in b.below() {
                prop_assert!(pair_order_ge(&b, &c));
                prop_assert!(pair_order_ge(&a, &c));
            }
        }
    }

    #[test]
    fn text_round_trip(p in partition(12)) {
        let s = p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(s.parse::<Partition>().unwrap(), p);
    }
}

#[test]
fn lr_symmetry_up_to_eight() {
    for n in 0..=8 {
        for lam in Partition::all_of_size(n) {
            for mu in lam.subpartitions() {
                for nu in Partition::all_of_size(n - mu.size()) {
                    assert_eq!(
                        lr_coefficient(&lam, &mu, &nu),
                        lr_coefficient(&lam, &nu, &mu),
                        "{lam} {mu} {nu}"
                    );
                }
            }
        }
    }
}

#[test]
fn lr_product_matches_crystal_count() {
    for a in 0..=3 {
        for b in 0..=3 {
            for mu in Partition::all_of_size(a) {
                for nu in Partition::all_of_size(b) {
                    let by_tableaux = lr_product(&mu, &nu);
                    let by_crystal = lr_by_crystal(&mu, &nu, None).unwrap();
                    assert_eq!(by_tableaux, by_crystal, "{mu} ⊗ {nu}");
                }
            }
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_size(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn hook_dimension_sum() {
    // Σ_λ (f^λ)^2 = n!, with f^λ = Σ_μ c^λ_{μ,(1)} f^μ computed by branching.
    let mut f: std::collections::BTreeMap<Partition, u64> = [(Partition::empty(), 1)].into();
    let one: Partition = "1".parse().unwrap();
    let mut fact = 1u64;
    for n in 1..=7usize {
        fact *= n as u64;
        let mut next = std::collections::BTreeMap::new();
        for lam in Partition::all_of_size(n) {
            let v: u64 = f
                .iter()
                .map(|(mu, c)| c * lr_coefficient(&lam, mu, &one))
                .sum();
            next.insert(lam, v);
        }
        let total: u64 = next.values().map(|v| v * v).sum();
        assert_eq!(total, fact);
        f = next;
    }
}
