//! The comaximal subgroup graph Γ(G): vertices are the nontrivial proper
//! subgroups, H and K adjacent iff the set product HK is all of G.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{set_product_is_whole, SubgroupLattice};

/// Default vertex bound for the exact independence-number solver.
pub const DEFAULT_ALPHA_CAP: usize = 30;

/// Γ(G) over the lattice's nontrivial proper subgroups, in lattice order.
pub struct ComaximalGraph {
    labels: Vec<String>,
    vertex_orders: Vec<usize>,
    adjacency: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

/// Builds Γ(G). Adjacency is decided by cardinality: HK ⊆ G always, so
/// |H|·|K|/|H∩K| = |G| forces HK = G.
pub fn build_comaximal(group: &FiniteGroup, lattice: &SubgroupLattice) -> ComaximalGraph {
    let n = group.order();
    let verts: Vec<usize> = (0..lattice.count())
        .filter(|&i| {
            let o = lattice.subgroup(i).order;
            o != 1 && o != n
        })
        .collect();

    // label subgroups "order-<k>#<serial>" with serials counted in lattice order
    let mut labels = Vec::with_capacity(verts.len());
    let mut vertex_orders = Vec::with_capacity(verts.len());
    let mut serial_for_order: std::collections::BTreeMap<usize, usize> = Default::default();
    for &v in &verts {
        let order = lattice.subgroup(v).order;
        let serial = serial_for_order.entry(order).or_insert(0);
        labels.push(format!("order-{order}#{serial}"));
        vertex_orders.push(order);
        *serial += 1;
    }

    let count = verts.len();
    let mut adjacency = vec![vec![false; count]; count];
    let mut edges = Vec::new();
    for a in 0..count {
        for b in a + 1..count {
            if set_product_is_whole(n, lattice.subgroup(verts[a]), lattice.subgroup(verts[b])) {
                adjacency[a][b] = true;
                adjacency[b][a] = true;
                edges.push((a, b));
            }
        }
    }
    ComaximalGraph {
        labels,
        vertex_orders,
        adjacency,
        edges,
    }
}

/// Order, size and sorted degree sequence of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    /// Vertex degrees, descending.
    pub degrees: Vec<usize>,
}

impl ComaximalGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_orders(&self) -> &[usize] {
        &self.vertex_orders
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn stats(&self) -> GraphStats {
        let mut degrees: Vec<usize> = self
            .adjacency
            .iter()
            .map(|row| row.iter().filter(|&&x| x).count())
            .collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        GraphStats {
            order: self.vertex_count(),
            size: self.edges.len(),
            degrees,
        }
    }

    /// Size of a maximum independent set, by exact branch and bound.
    /// Capped: the solver refuses graphs larger than `vertex_cap` vertices.
    pub fn independence_number(&self, vertex_cap: usize) -> Result<usize> {
        let n = self.vertex_count();
        if n > vertex_cap || n > 64 {
            return Err(Error::TooLarge {
                vertices: n,
                cap: vertex_cap.min(64),
            });
        }
        let neighbors: Vec<u64> = (0..n)
            .map(|v| {
                self.adjacency[v]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &adj)| adj)
                    .fold(0u64, |m, (u, _)| m | 1 << u)
            })
            .collect();
        let mut best = 0;
        branch(&neighbors, (1u64 << n) - 1, 0, &mut best);
        Ok(best)
    }

    /// Deterministic undirected DOT document: vertices in lattice order,
    /// then edges with the lower index first.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph comaximal {\n");
        for label in &self.labels {
            writeln!(out, "  \"{label}\";").unwrap();
        }
        for &(a, b) in &self.edges {
            writeln!(out, "  \"{}\" -- \"{}\";", self.labels[a], self.labels[b]).unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Edge list as `u,v` lines, 0-based, lower index first.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            writeln!(out, "{a},{b}").unwrap();
        }
        out
    }
}

fn branch(neighbors: &[u64], available: u64, chosen: usize, best: &mut usize) {
    if chosen + available.count_ones() as usize <= *best {
        return;
    }
    if available == 0 {
        *best = (*best).max(chosen);
        return;
    }
    let v = available.trailing_zeros() as usize;
    // include v
    branch(
        neighbors,
        available & !(1 << v) & !neighbors[v],
        chosen + 1,
        best,
    );
    // exclude v
    branch(neighbors, available & !(1 << v), chosen, best);
}
