//! Deterministic families of semigroups for the parameter sweeps.

use crate::semigroup::NumericalSemigroup;
use std::collections::BTreeMap;
use std::sync::Arc;

const SHOWCASES: [&[u64]; 2] = [&[10, 13, 16, 17, 19], &[7, 10, 18, 22]];

fn collect(candidates: impl IntoIterator<Item = Vec<u64>>) -> Vec<Arc<NumericalSemigroup>> {
    let mut by_gens: BTreeMap<Vec<u64>, Arc<NumericalSemigroup>> = BTreeMap::new();
    for gens in candidates {
        if let Ok(h) = NumericalSemigroup::new(&gens) {
            by_gens.entry(h.generators().to_vec()).or_insert_with(|| Arc::new(h));
        }
    }
    by_gens.into_values().collect()
}

/// All symmetric (Gorenstein) semigroups with conductor at most
/// `conductor_max` drawn from two sources — every two-generated `<a, b>`
/// (these are always symmetric, conductor `(a-1)(b-1)`) and every symmetric
/// three-generated semigroup with generators up to 30 — plus the two
/// showcase semigroups. Sorted by generator list, duplicates removed.
pub fn gorenstein_family(conductor_max: u64) -> Vec<Arc<NumericalSemigroup>> {
    let mut candidates: Vec<Vec<u64>> = SHOWCASES.map(<[u64]>::to_vec).to_vec();
    let mut a = 2;
    while (a - 1) * a <= conductor_max {
        let mut b = a + 1;
        while (a - 1) * (b - 1) <= conductor_max {
            candidates.push(vec![a, b]);
            b += 1;
        }
        a += 1;
    }
    for x in 3..=30u64 {
        for y in x + 1..=30 {
            for z in y + 1..=30 {
                candidates.push(vec![x, y, z]);
            }
        }
    }
    collect(candidates)
        .into_iter()
        .filter(|h| h.conductor() <= conductor_max && h.is_symmetric())
        .collect()
}

/// Three-generated semigroups (symmetric or not, so multiplicity >= 3) with
/// generators up to 24 and conductor at most `conductor_max`, plus the two
/// showcase semigroups. Used where symmetry is a conclusion rather than a
/// hypothesis.
pub fn mixed_family(conductor_max: u64) -> Vec<Arc<NumericalSemigroup>> {
    let mut candidates: Vec<Vec<u64>> = SHOWCASES.map(<[u64]>::to_vec).to_vec();
    for x in 3..=24u64 {
        for y in x + 1..=24 {
            for z in y + 1..=24 {
                candidates.push(vec![x, y, z]);
            }
        }
    }
    collect(candidates)
        .into_iter()
        .filter(|h| h.conductor() <= conductor_max && h.generators().len() >= 3)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gorenstein_family_contents() {
        let family = gorenstein_family(150);
        assert!(family.iter().all(|h| h.is_symmetric()));
        assert!(family.iter().all(|h| h.conductor() <= 150));
        let gens: Vec<&[u64]> = family.iter().map(|h| h.generators()).collect();
        assert!(gens.contains(&[2u64, 3].as_slice()));
        assert!(gens.contains(&[5u64, 6].as_slice()));
        assert!(gens.contains(&[4u64, 6, 9].as_slice()));
        assert!(gens.contains(&[10u64, 13, 16, 17, 19].as_slice()));
        assert!(gens.contains(&[7u64, 10, 18, 22].as_slice()));
        // deterministic and duplicate-free
        let mut sorted = gens.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, gens);
        assert_eq!(family.len(), gorenstein_family(150).len());
    }

    #[test]
    fn mixed_family_contents() {
        let family = mixed_family(150);
        assert!(family.iter().any(|h| !h.is_symmetric()));
        assert!(family.iter().all(|h| h.multiplicity() >= 3));
        let gens: Vec<&[u64]> = family.iter().map(|h| h.generators()).collect();
        assert!(gens.contains(&[3u64, 5, 7].as_slice()));
        assert!(gens.contains(&[7u64, 10, 18, 22].as_slice()));
    }
}
