//! Fully materialized finite permutation groups.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on how many elements a closure may materialize.
pub const DEFAULT_CAP: usize = 5000;

/// Orders up to this get a full multiplication table; beyond it products are
/// composed on demand through the element index map.
const TABLE_LIMIT: usize = 1024;

/// A finite group given by the complete list of its elements as permutations.
///
/// `elements[0]` is the identity and the list order is the breadth-first
/// closure order from the identity, multiplying on the right by the
/// generators in their listed order. The ordering is deterministic, so
/// element indices are stable across runs and usable in fixtures.
pub struct FiniteGroup {
    label: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u16>,
    inverses: Vec<u16>,
    orders: Vec<u16>,
    /// `(parent, generator)` pair per element: `elem[i] = elem[parent] ∘ gen`.
    bfs_edge: Vec<(u16, u16)>,
    table: Option<Vec<u16>>,
}

impl FiniteGroup {
    /// Closes a nonempty generating set into the full element list.
    ///
    /// Fails with `ClosureExceedsCap` once more than `cap` elements appear.
    pub fn close_generators(
        label: impl Into<String>,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<FiniteGroup> {
        let label = label.into();
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => {
                return Err(Error::InvalidOrder {
                    family: "closure",
                    order: 0,
                    reason: "generator list must be nonempty",
                })
            }
        };
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u16);
        let mut bfs_edge = vec![(0u16, 0u16)];

        // element indices are u16 internally
        let cap = cap.min(u16::MAX as usize);
        let mut head = 0usize;
        while head < elements.len() {
            for (gi, g) in generators.iter().enumerate() {
                let child = elements[head].compose(g)?;
                if !index.contains_key(&child) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureExceedsCap { cap });
                    }
                    index.insert(child.clone(), elements.len() as u16);
                    bfs_edge.push((head as u16, gi as u16));
                    elements.push(child);
                }
            }
            head += 1;
        }

        let order = elements.len();
        let inverses = elements
            .iter()
            .map(|e| index[&e.inverse()])
            .collect::<Vec<_>>();
        let orders = elements.iter().map(|e| e.order() as u16).collect();

        let mut group = FiniteGroup {
            label,
            degree,
            generators,
            elements,
            index,
            inverses,
            orders,
            bfs_edge,
            table: None,
        };
        if order <= TABLE_LIMIT {
            group.table = Some(group.build_table());
        }
        Ok(group)
    }

    /// Full |G|×|G| product table, filled by walking the BFS tree so that only
    /// O(|G|·#gens) permutation compositions are needed.
    fn build_table(&self) -> Vec<u16> {
        let n = self.elements.len();
        // right_by_gen[g][i] = index of elements[i] ∘ generators[g]
        let right_by_gen: Vec<Vec<u16>> = self
            .generators
            .iter()
            .map(|g| {
                self.elements
                    .iter()
                    .map(|e| self.index[&e.compose(g).expect("equal degrees")])
                    .collect()
            })
            .collect();
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            table[i * n] = i as u16;
            for j in 1..n {
                let (parent, gen) = self.bfs_edge[j];
                let left = table[i * n + parent as usize];
                table[i * n + j] = right_by_gen[gen as usize][left as usize];
            }
        }
        table
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the generators in the element list.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g] as usize)
            .collect()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn prod(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.elements.len() + j] as usize,
            None => {
                let p = self.elements[i]
                    .compose(&self.elements[j])
                    .expect("elements share a degree");
                self.index[&p] as usize
            }
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    /// Least k >= 1 with `elements[i]^k` the identity; divides the order.
    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i] as usize
    }

    /// Index of the commutator x⁻¹y⁻¹xy of `elements[i]` and `elements[j]`.
    pub fn commutator(&self, i: usize, j: usize) -> usize {
        let a = self.prod(self.inv(i), self.inv(j));
        let b = self.prod(a, i);
        self.prod(b, j)
    }

    /// Index of g·x·g⁻¹.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.prod(self.prod(g, x), self.inv(g))
    }

    /// Extends a map given on the generators to every element, following the
    /// BFS tree, and verifies it is a product-preserving bijection. Returns
    /// the image index per element index, or None when it is not an
    /// automorphism.
    ///
    /// Checking φ(x·g) = φ(x)·φ(g) for all x and all generators g suffices:
    /// homomorphy on longer right factors follows by induction on word
    /// length.
    pub fn extend_automorphism(&self, gen_images: &[usize]) -> Option<Vec<usize>> {
        if gen_images.len() != self.generators.len() {
            return None;
        }
        let n = self.elements.len();
        let mut phi = vec![0usize; n];
        for j in 1..n {
            let (parent, gen) = self.bfs_edge[j];
            phi[j] = self.prod(phi[parent as usize], gen_images[gen as usize]);
        }
        let mut seen = vec![false; n];
        for &img in &phi {
            if seen[img] {
                return None;
            }
            seen[img] = true;
        }
        let gen_idx = self.generator_indices();
        for x in 0..n {
            for (k, &g) in gen_idx.iter().enumerate() {
                if phi[self.prod(x, g)] != self.prod(phi[x], gen_images[k]) {
                    return None;
                }
            }
        }
        Some(phi)
    }

    /// Element indices of the cyclic subgroup generated by `elements[i]`,
    /// in power order starting at the identity.
    pub fn cyclic_members(&self, i: usize) -> Vec<usize> {
        let mut members = vec![0usize];
        let mut x = i;
        while x != 0 {
            members.push(x);
            x = self.prod(x, i);
        }
        members
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({}, order {}, degree {})",
            self.label,
            self.order(),
            self.degree
        )
    }
}
