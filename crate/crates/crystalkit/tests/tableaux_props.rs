use std::collections::HashSet;

use crystalkit::crystal::{Crystal, Op};
use crystalkit::partitions::{lr_coefficient, Partition, PartitionPair};
use crystalkit::tableaux::{
    bitableau_condition, bitableaux_crystal, sst_crystal, tensor_multiplicities,
    verify_bitableaux_iso,
};

const BUDGET: usize = 5_000_000;

/// Hook length formula for the number of semistandard tableaux over `n` letters.
fn hook_content(shape: &Partition, n: u32) -> u64 {
    let conj = shape.conjugate();
    let (mut num, mut den) = (1u64, 1u64);
    for i in 1..=shape.len() {
        for j in 1..=shape.part(i) {
            num *= (n as i64 + j as i64 - i as i64) as u64;
            den *= (shape.part(i) - j + conj.part(j) - i + 1) as u64;
        }
    }
    num / den
}

#[test]
fn sst_counts_match_hook_content() {
    for size in 0..=5 {
        for shape in Partition::all_of_size(size) {
            for n in (shape.len() as u32).max(1)..=4 {
                let c = sst_crystal(&shape, n).unwrap();
                assert_eq!(
                    c.elements().len() as u64,
                    hook_content(&shape, n),
                    "{shape} over {n}"
                );
            }
        }
    }
}

#[test]
fn bitableaux_are_closed_under_operators() {
    for a in 0..=3 {
        for b in 0..=3 {
            for mu in Partition::all_of_size(a) {
                for nu in Partition::all_of_size(b) {
                    let lo = (mu.len() + nu.len()).max(1) as u32;
                    for n in lo..=5 {
                        let bt = bitableaux_crystal(&mu, &nu, n).unwrap();
                        let elems = bt.elements();
                        let set: HashSet<_> = elems.iter().cloned().collect();
                        for x in &elems {
                            for c in bt.colors() {
                                for op in [Op::E, Op::F] {
                                    if let Some(y) = bt.apply(op, c, x) {
                                        assert!(bitableau_condition(&y.s, &y.t), "{x} -> {y}");
                                        assert!(set.contains(&y));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn bitableaux_match_the_tensor_component() {
    for (mu, nu) in [
        ("1", "1"),
        ("2", "1"),
        ("1,1", "2"),
        ("2,1", "1"),
        ("2", "2"),
    ] {
        let (mu, nu): (Partition, Partition) = (mu.parse().unwrap(), nu.parse().unwrap());
        let lo = (mu.len() + nu.len()) as u32;
        for n in lo..=lo + 1 {
            assert!(
                verify_bitableaux_iso(&mu, &nu, n).unwrap(),
                "({mu}, {nu}) at {n}"
            );
        }
    }
}

#[test]
fn tensor_multiplicities_follow_the_lr_formula() {
    for a in 0..=2 {
        for b in 0..=2 {
            for mu in Partition::all_of_size(a) {
                for nu in Partition::all_of_size(b) {
                    let n = (a + b + 2) as u32;
                    let table = tensor_multiplicities(&mu, &nu, n, BUDGET).unwrap();
                    let top = PartitionPair::new(mu.clone(), nu.clone());
                    let mut expect = std::collections::BTreeMap::new();
                    for low in top.below() {
                        let d = mu.size() - low.plus.size();
                        let m: u64 = Partition::all_of_size(d)
                            .iter()
                            .map(|s| {
                                lr_coefficient(&mu, s, &low.plus)
                                    * lr_coefficient(&nu, s, &low.minus)
                            })
                            .sum();
                        if m > 0 {
                            expect.insert(low, m as usize);
                        }
                    }
                    assert_eq!(table, expect, "({mu}, {nu})");
                }
            }
        }
    }
}
