//! Complete subgroup lattice enumeration by cyclic extension.

use std::collections::{HashMap, VecDeque};

use crate::error::Result;
use crate::group::FiniteGroup;

/// Fixed-width bitmask over element indices of a parent group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Bitset {
        Bitset {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection_count(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }
}

impl std::fmt::Debug for Bitset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

/// One subgroup of a parent group, as a membership bitmask plus its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub members: Bitset,
    pub order: usize,
}

impl Subgroup {
    fn from_mask(members: Bitset) -> Subgroup {
        let order = members.count_ones();
        Subgroup { members, order }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Member element indices in ascending order.
    pub fn member_indices(&self) -> Vec<usize> {
        self.members.iter_ones().collect()
    }
}

/// Every subgroup of a group, sorted by (order, member list), with
/// normality flags.
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    normal: Vec<bool>,
}

impl SubgroupLattice {
    /// Sub(G): the total number of subgroups, counting the trivial subgroup
    /// and the whole group.
    pub fn count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    /// Indices of the normal subgroups.
    pub fn normal_indices(&self) -> Vec<usize> {
        (0..self.subgroups.len())
            .filter(|&i| self.normal[i])
            .collect()
    }

    /// All Sylow p-subgroups: subgroups whose order is the full p-part of
    /// |G|. For a prime not dividing |G| this is the trivial subgroup alone.
    ///
    /// Panics when p is not prime.
    pub fn sylow(&self, p: usize) -> Vec<&Subgroup> {
        assert!(crate::props::is_prime(p), "sylow requires a prime, got {p}");
        let n = self.whole_order();
        let mut part = 1;
        let mut rest = n;
        while rest % p == 0 {
            part *= p;
            rest /= p;
        }
        self.subgroups.iter().filter(|s| s.order == part).collect()
    }

    /// All Hall subgroups for a set of primes: order equal to the product of
    /// the full p-parts of |G| over the given primes.
    ///
    /// Panics when an entry is not prime.
    pub fn hall(&self, primes: &[usize]) -> Vec<&Subgroup> {
        let n = self.whole_order();
        let mut target = 1usize;
        for &p in primes {
            assert!(crate::props::is_prime(p), "hall requires primes, got {p}");
            let mut rest = n;
            while rest % p == 0 {
                target *= p;
                rest /= p;
            }
        }
        self.subgroups
            .iter()
            .filter(|s| s.order == target)
            .collect()
    }

    fn whole_order(&self) -> usize {
        self.subgroups.last().map_or(1, |s| s.order)
    }
}

/// True iff the set product HK is all of G, decided by cardinality:
/// |H|·|K| / |H∩K| = |G|.
pub fn set_product_is_whole(group_order: usize, h: &Subgroup, k: &Subgroup) -> bool {
    h.order * k.order == group_order * h.members.intersection_count(&k.members)
}

/// True iff gHg⁻¹ = H for every generator g of the parent.
pub fn is_normal(group: &FiniteGroup, sub: &Subgroup) -> bool {
    let gens = group.generator_indices();
    sub.members.iter_ones().all(|m| {
        gens.iter()
            .all(|&g| sub.members.contains(group.conjugate(g, m)))
    })
}

/// Closure of `base ∪ {extra}` where `base` is already a subgroup generated
/// by `base_gens`. Works entirely in element indices.
pub(crate) fn extend_subgroup(
    group: &FiniteGroup,
    base: &Bitset,
    base_gens: &[u16],
    extra: u16,
) -> Bitset {
    let mut set = base.clone();
    let mut stack: Vec<u16> = Vec::new();
    if !set.contains(extra as usize) {
        set.insert(extra as usize);
        stack.push(extra);
    }
    // every old member must meet the new generator once
    for m in base.iter_ones() {
        let y = group.prod(m, extra as usize);
        if !set.contains(y) {
            set.insert(y);
            stack.push(y as u16);
        }
    }
    while let Some(x) = stack.pop() {
        for g in base_gens.iter().copied().chain(std::iter::once(extra)) {
            let y = group.prod(x as usize, g as usize);
            if !set.contains(y) {
                set.insert(y);
                stack.push(y as u16);
            }
        }
    }
    set
}

/// Enumerates all subgroups of `group` by cyclic extension: grow every known
/// subgroup by one cyclic generator at a time until no new subgroup appears.
///
/// Candidate generators are canonicalized to the least element index of
/// ⟨g⟩ \ H, which prunes closures that could only rebuild an already-seen
/// extension of H.
pub fn all_subgroups(group: &FiniteGroup) -> SubgroupLattice {
    let n = group.order();

    // sorted member list of ⟨x⟩ for every element
    let cyclic: Vec<Vec<u16>> = (0..n)
        .map(|i| {
            let mut m: Vec<u16> = group
                .cyclic_members(i)
                .into_iter()
                .map(|x| x as u16)
                .collect();
            m.sort_unstable();
            m
        })
        .collect();

    let mut trivial = Bitset::new(n);
    trivial.insert(0);

    let mut seen: HashMap<Bitset, usize> = HashMap::new();
    let mut masks: Vec<(Bitset, Vec<u16>)> = Vec::new();
    seen.insert(trivial.clone(), 0);
    masks.push((trivial, Vec::new()));

    let mut queue: VecDeque<usize> = VecDeque::new();
    queue.push_back(0);

    while let Some(h) = queue.pop_front() {
        let (mask, gens) = masks[h].clone();
        for cand in 0..n as u16 {
            if mask.contains(cand as usize) {
                continue;
            }
            // canonical representative: least member of ⟨cand⟩ outside H
            let first_outside = cyclic[cand as usize]
                .iter()
                .copied()
                .find(|&m| !mask.contains(m as usize));
            if first_outside != Some(cand) {
                continue;
            }
            let extended = extend_subgroup(group, &mask, &gens, cand);
            if !seen.contains_key(&extended) {
                let idx = masks.len();
                seen.insert(extended.clone(), idx);
                let mut new_gens = gens.clone();
                new_gens.push(cand);
                masks.push((extended, new_gens));
                queue.push_back(idx);
            }
        }
    }

    let mut subgroups: Vec<Subgroup> = masks
        .into_iter()
        .map(|(mask, _)| Subgroup::from_mask(mask))
        .collect();
    subgroups.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.member_indices().cmp(&b.member_indices()))
    });

    let normal = subgroups.iter().map(|s| is_normal(group, s)).collect();
    SubgroupLattice { subgroups, normal }
}

/// Convenience over `all_subgroups`.
pub fn sub_count(group: &FiniteGroup) -> usize {
    all_subgroups(group).count()
}

/// Rebuilds a subgroup as a standalone `FiniteGroup`, generated by a greedy
/// generating set picked in ascending element order.
pub fn subgroup_as_group(
    group: &FiniteGroup,
    sub: &Subgroup,
    label: impl Into<String>,
    cap: usize,
) -> Result<FiniteGroup> {
    let mut gen_indices: Vec<usize> = Vec::new();
    let mut reached = Bitset::new(group.order());
    reached.insert(0);
    for m in sub.members.iter_ones() {
        if !reached.contains(m) {
            let gens: Vec<u16> = gen_indices.iter().map(|&g| g as u16).collect();
            reached = extend_subgroup(group, &reached, &gens, m as u16);
            gen_indices.push(m);
        }
    }
    let gens: Vec<_> = if gen_indices.is_empty() {
        vec![crate::perm::Permutation::identity(group.degree())]
    } else {
        gen_indices
            .iter()
            .map(|&i| group.element(i).clone())
            .collect()
    };
    FiniteGroup::close_generators(label, gens, cap)
}
