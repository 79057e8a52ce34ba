//! The socle multiplicity three ways: the LR formula, the decomposition of
//! a tensor product of tableau crystals, and crystal H-sets.

use crystalkit::charalg::m_coeff;
use crystalkit::fockcrystal::socle_multiplicity;
use crystalkit::partitions::{Partition, PartitionPair};
use crystalkit::tableaux::tensor_multiplicities;

#[test]
fn lr_formula_tensor_crystals_and_h_sets_agree() {
    let mut cases = 0;
    for mu in Partition::all_up_to(3) {
        for nu in Partition::all_up_to(3) {
            let top = PartitionPair::new(mu.clone(), nu.clone());
            let n = (mu.size() + nu.size() + 2) as u32;
            let table = tensor_multiplicities(&mu, &nu, n, 10_000_000).unwrap();
            for low in top.below() {
                let m = m_coeff(&mu, &nu, &low.plus, &low.minus);
                let c = table.get(&low).copied().unwrap_or(0) as u64;
                let h = socle_multiplicity(&top, &low, 1_000_000).unwrap() as u64;
                assert_eq!((c, h), (m, m), "{top} over {low}");
                cases += 1;
            }
            // Nothing outside the order ideal shows up.
            assert!(table.keys().all(|k| top.below().contains(k)));
        }
    }
    assert!(cases > 100);
}
