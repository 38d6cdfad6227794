//! Random finite lattices and sup-to-inf maps between them.

#![allow(dead_code)]

use hopf_galois::lattice::{CompleteLattice, FinitePoset};

/// The intersection closure of `masks` plus the full set, as subsets of a 4-element set
/// ordered by inclusion; `None` when it has more than `max` elements.
pub fn closure_lattice(masks: &[u8], max: usize) -> Option<CompleteLattice> {
    let mut sets: Vec<u8> = vec![0b1111];
    let mut queue: Vec<u8> = masks.iter().map(|m| m & 0b1111).collect();
    while let Some(s) = queue.pop() {
        if sets.contains(&s) {
            continue;
        }
        for &t in &sets {
            queue.push(s & t);
        }
        sets.push(s);
        if sets.len() > max {
            return None;
        }
    }
    sets.sort_unstable();
    let labels = sets.iter().map(|s| format!("{s:04b}")).collect();
    let poset = FinitePoset::from_fn(labels, |i, j| sets[i] & !sets[j] == 0).ok()?;
    Some(CompleteLattice::new(poset).expect("intersection closures are complete lattices"))
}

/// `φ(p) = ⋀{b : p ≰ a}` over the steps `(a, b)`; every such map sends joins to meets.
pub fn sup_to_inf(p: &CompleteLattice, q: &CompleteLattice, steps: &[(usize, usize)]) -> Vec<usize> {
    (0..p.len())
        .map(|x| {
            let bs: Vec<usize> = steps
                .iter()
                .map(|&(a, b)| (a % p.len(), b % q.len()))
                .filter(|&(a, _)| !p.poset.le(x, a))
                .map(|(_, b)| b)
                .collect();
            q.inf(&bs)
        })
        .collect()
}
