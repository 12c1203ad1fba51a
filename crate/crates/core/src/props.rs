//! Structural predicates: the solvability hierarchy and friends.

use crate::group::FiniteGroup;
use crate::lattice::{Bitset, Subgroup, SubgroupLattice};

/// Derived subgroups are generated from all-pairs commutators up to this
/// order; above it, generator-pair commutators plus a conjugate-closure
/// fixpoint are used instead.
const ALL_PAIRS_LIMIT: usize = 256;

/// Aggregated structural report for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub order: usize,
    pub sub_count: usize,
    pub is_cyclic: bool,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_supersolvable: bool,
    pub is_solvable: bool,
    pub is_perfect: bool,
    pub is_lagrangian: bool,
    /// Steps of the derived series down to the trivial subgroup; None when
    /// the series stabilizes above it (the group is not solvable).
    pub derived_length: Option<usize>,
}

/// True iff some element has order |G|.
pub fn is_cyclic(g: &FiniteGroup) -> bool {
    (0..g.order()).any(|i| g.element_order(i) == g.order())
}

/// True iff all generator pairs commute.
pub fn is_abelian(g: &FiniteGroup) -> bool {
    let gens = g.generator_indices();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| g.prod(a, b) == g.prod(b, a)))
}

/// Closure of a seed set of element indices into the subgroup it generates.
fn close_set(g: &FiniteGroup, seeds: &[usize]) -> Bitset {
    let mut set = Bitset::new(g.order());
    set.insert(0);
    let mut stack: Vec<usize> = Vec::new();
    for &s in seeds {
        if !set.contains(s) {
            set.insert(s);
            stack.push(s);
        }
    }
    while let Some(x) = stack.pop() {
        for &s in seeds {
            let y = g.prod(x, s);
            if !set.contains(y) {
                set.insert(y);
                stack.push(y);
            }
        }
    }
    set
}

/// Greedy generating set for a member mask, picked in ascending index order.
fn greedy_generators(g: &FiniteGroup, members: &Bitset) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = Bitset::new(g.order());
    reached.insert(0);
    for m in members.iter_ones() {
        if !reached.contains(m) {
            let gu16: Vec<u16> = gens.iter().map(|&x| x as u16).collect();
            reached = crate::lattice::extend_subgroup(g, &reached, &gu16, m as u16);
            gens.push(m);
        }
    }
    gens
}

/// Derived subgroup of the subgroup with the given member mask, as a mask.
///
/// Small subgroups take commutators of every member pair. Larger ones take
/// commutators of a generating set and then close under conjugation by those
/// generators until stable — generator commutators alone do not generate the
/// derived subgroup in general, their normal closure inside the subgroup
/// does.
fn derived_of(g: &FiniteGroup, members: &Bitset) -> Bitset {
    let count = members.count_ones();
    if count <= ALL_PAIRS_LIMIT {
        let member_list: Vec<usize> = members.iter_ones().collect();
        let mut seeds = Vec::new();
        let mut seen = Bitset::new(g.order());
        for &a in &member_list {
            for &b in &member_list {
                let c = g.commutator(a, b);
                if !seen.contains(c) {
                    seen.insert(c);
                    seeds.push(c);
                }
            }
        }
        close_set(g, &seeds)
    } else {
        let gens = greedy_generators(g, members);
        let mut seeds: Vec<usize> = Vec::new();
        let mut seen = Bitset::new(g.order());
        for &a in &gens {
            for &b in &gens {
                let c = g.commutator(a, b);
                if !seen.contains(c) {
                    seen.insert(c);
                    seeds.push(c);
                }
            }
        }
        loop {
            let closed = close_set(g, &seeds);
            let mut grew = false;
            for x in closed.iter_ones() {
                for &h in &gens {
                    let c = g.conjugate(h, x);
                    if !closed.contains(c) && !seen.contains(c) {
                        seen.insert(c);
                        seeds.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return closed;
            }
        }
    }
}

/// The commutator subgroup G'.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let mut full = Bitset::new(g.order());
    for i in 0..g.order() {
        full.insert(i);
    }
    let members = derived_of(g, &full);
    let order = members.count_ones();
    Subgroup { members, order }
}

/// Steps of the derived series G ⊇ G' ⊇ G'' ⊇ … down to the trivial
/// subgroup; None when the series stabilizes at a nontrivial term.
pub fn derived_length(g: &FiniteGroup) -> Option<usize> {
    let mut current = Bitset::new(g.order());
    for i in 0..g.order() {
        current.insert(i);
    }
    let mut steps = 0;
    loop {
        if current.count_ones() == 1 {
            return Some(steps);
        }
        let next = derived_of(g, &current);
        if next == current {
            return None;
        }
        current = next;
        steps += 1;
    }
}

/// The derived series reaches the trivial subgroup.
pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_length(g).is_some()
}

/// G equals its own derived subgroup.
pub fn is_perfect(g: &FiniteGroup) -> bool {
    derived_subgroup(g).order == g.order()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    prime_divisors(g.order())
        .into_iter()
        .all(|p| lat.sylow(p).len() == 1)
}

/// There is a chain {e} = N₀ < N₁ < … < N_k = G in which every term is
/// normal in G and every index is prime. Decided as reachability in the
/// graph of normal subgroups with prime-index inclusion edges; a normal
/// series with cyclic factors refines to exactly such a chain, so this is
/// equivalent to supersolvability.
pub fn is_supersolvable(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    let normals = lat.normal_indices();
    let n = g.order();
    let mut reachable: Vec<bool> = normals
        .iter()
        .map(|&i| lat.subgroup(i).order == 1)
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (ai, &a) in normals.iter().enumerate() {
            if !reachable[ai] {
                continue;
            }
            let sa = lat.subgroup(a);
            if sa.order == n {
                return true;
            }
            for (bi, &b) in normals.iter().enumerate() {
                if reachable[bi] {
                    continue;
                }
                let sb = lat.subgroup(b);
                if sb.order % sa.order == 0
                    && is_prime(sb.order / sa.order)
                    && sa.members.is_subset_of(&sb.members)
                {
                    reachable[bi] = true;
                    changed = true;
                }
            }
        }
    }
    normals
        .iter()
        .enumerate()
        .any(|(ai, &a)| reachable[ai] && lat.subgroup(a).order == n)
}

/// Every divisor of |G| occurs as a subgroup order (the converse of
/// Lagrange's theorem holds).
pub fn is_lagrangian(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    let n = g.order();
    let mut present = vec![false; n + 1];
    for s in lat.subgroups() {
        present[s.order] = true;
    }
    (1..=n).filter(|d| n % d == 0).all(|d| present[d])
}

/// Computes every flag for one group against its enumerated lattice.
pub fn report(g: &FiniteGroup, lat: &SubgroupLattice) -> PropertyReport {
    let derived_length = derived_length(g);
    let report = PropertyReport {
        order: g.order(),
        sub_count: lat.count(),
        is_cyclic: is_cyclic(g),
        is_abelian: is_abelian(g),
        is_nilpotent: is_nilpotent(g, lat),
        is_supersolvable: is_supersolvable(g, lat),
        is_solvable: derived_length.is_some(),
        is_perfect: is_perfect(g),
        is_lagrangian: is_lagrangian(g, lat),
        derived_length,
    };
    debug_assert!(!report.is_cyclic || report.is_abelian);
    debug_assert!(!report.is_abelian || report.is_nilpotent);
    debug_assert!(!report.is_nilpotent || report.is_supersolvable);
    debug_assert!(!report.is_supersolvable || report.is_solvable);
    report
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
