//! Shared helpers for the integration suites: an independent brute-force
//! subgroup oracle and a tiny deterministic RNG.
//!
//! Each test target compiles this module separately and uses its own subset.
#![allow(dead_code)]

use std::collections::BTreeSet;

use latticelab_core::perm::Permutation;
use latticelab_core::FiniteGroup;

/// Naive closure of a set of permutations under composition, with no
/// multiplication table and no pruning: breadth-first words over the seed.
fn naive_closure(seed: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    let degree = seed.iter().next().expect("nonempty seed").degree();
    let mut closed: BTreeSet<Permutation> = BTreeSet::new();
    closed.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = closed.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for s in seed {
            let y = x.compose(s).expect("equal degrees");
            if closed.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    closed
}

/// Every subgroup of `g`, found independently of the lattice enumerator:
/// start from all cyclic subgroups and close the family under pairwise
/// joins until no new subgroup appears. Subgroups are returned as sorted
/// member-index lists.
pub fn oracle_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let mut family: Vec<BTreeSet<Permutation>> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<Permutation>> = BTreeSet::new();

    for e in g.elements() {
        let mut cyc = BTreeSet::new();
        let mut x = e.clone();
        loop {
            cyc.insert(x.clone());
            x = x.compose(e).expect("equal degrees");
            if &x == e {
                break;
            }
        }
        if seen.insert(cyc.clone()) {
            family.push(cyc);
        }
    }

    let mut i = 0;
    while i < family.len() {
        for j in 0..i {
            let (a, b) = (&family[i], &family[j]);
            if a.is_superset(b) || b.is_superset(a) {
                continue;
            }
            let union: BTreeSet<Permutation> = a.union(b).cloned().collect();
            let join = naive_closure(&union);
            if seen.insert(join.clone()) {
                family.push(join);
            }
        }
        i += 1;
    }

    family
        .into_iter()
        .map(|sub| {
            sub.into_iter()
                .map(|p| g.index_of(&p).expect("member of the group"))
                .collect::<BTreeSet<usize>>()
                .into_iter()
                .collect()
        })
        .collect()
}

/// Splitmix-style generator for reproducible spot checks.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next(&mut self, bound: usize) -> usize {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        ((z ^ (z >> 31)) % bound as u64) as usize
    }
}
