//! Constructors for the group families and named groups used throughout.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::Subgroup;
use crate::perm::Permutation;

fn is_prime(n: usize) -> bool {
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

fn check_cap(family: &'static str, order: usize, cap: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidOrder {
            family,
            order,
            reason: "order must be positive",
        });
    }
    if order > cap {
        Err(Error::ClosureExceedsCap { cap })
    } else {
        Ok(())
    }
}

fn cycle_on(degree: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in 0..points.len() {
        images[points[i]] = points[(i + 1) % points.len()];
    }
    Permutation::from_images(images).expect("cycle is a bijection")
}

/// Cyclic group of order n as a single n-cycle on n points.
pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    check_cap("cyclic", n, cap)?;
    let gen = if n == 1 {
        Permutation::identity(1)
    } else {
        cycle_on(n, &(0..n).collect::<Vec<_>>())
    };
    FiniteGroup::close_generators(format!("C{n}"), vec![gen], cap)
}

/// Direct product of cyclic groups on the disjoint union of their points.
pub fn abelian(factors: &[usize], cap: usize) -> Result<FiniteGroup> {
    if factors.is_empty() {
        return cyclic(1, cap);
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::ClosureExceedsCap { cap })?;
    check_cap("abelian", order, cap)?;
    let degree: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &f in factors {
        if f == 0 {
            return Err(Error::InvalidOrder {
                family: "abelian",
                order: 0,
                reason: "factors must be positive",
            });
        }
        gens.push(cycle_on(degree, &(offset..offset + f).collect::<Vec<_>>()));
        offset += f;
    }
    let label = factors
        .iter()
        .map(|f| format!("C{f}"))
        .collect::<Vec<_>>()
        .join("x");
    FiniteGroup::close_generators(label, gens, cap)
}

/// Dihedral group of order 2n (subscript n is half the order: D5 has order
/// 10), generated by an n-cycle and a reflection.
pub fn dihedral(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::InvalidOrder {
            family: "dihedral",
            order: n,
            reason: "requires n >= 2",
        });
    }
    check_cap("dihedral", 2 * n, cap)?;
    let gens = if n == 2 {
        vec![cycle_on(4, &[0, 1]), cycle_on(4, &[2, 3])]
    } else {
        let rot = cycle_on(n, &(0..n).collect::<Vec<_>>());
        let refl =
            Permutation::from_images((0..n).map(|x| (n - x) % n).collect()).expect("bijection");
        vec![rot, refl]
    };
    FiniteGroup::close_generators(format!("D{n}"), gens, cap)
}

/// Dicyclic group; the subscript is the full order (4 | n), so dicyclic(8)
/// is Q8 and dicyclic(16) is Q16. Realized by left multiplication on its own
/// element set {a^i, a^i·b}.
pub fn dicyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 8 || n % 4 != 0 {
        return Err(Error::InvalidOrder {
            family: "dicyclic",
            order: n,
            reason: "requires n >= 8 with 4 | n",
        });
    }
    check_cap("dicyclic", n, cap)?;
    let half = n / 2; // order of a
    let quarter = n / 4; // b² = a^quarter·... b² = a^(half/2)
    let mut a = vec![0usize; n];
    let mut b = vec![0usize; n];
    for i in 0..half {
        // a·aⁱ = aⁱ⁺¹ ; a·(aⁱb) = aⁱ⁺¹b
        a[i] = (i + 1) % half;
        a[half + i] = half + (i + 1) % half;
        // b·aⁱ = a⁻ⁱb ; b·(aⁱb) = a⁻ⁱb² = a^(n/4 − i)
        b[i] = half + (half - i) % half;
        b[half + i] = (half + quarter - i) % half;
    }
    let label = if n == 8 {
        "Q8".to_string()
    } else if n == 16 {
        "Q16".to_string()
    } else {
        format!("Dic{n}")
    };
    FiniteGroup::close_generators(
        label,
        vec![
            Permutation::from_images(a).expect("bijection"),
            Permutation::from_images(b).expect("bijection"),
        ],
        cap,
    )
}

fn factorial_capped(n: usize, cap: usize) -> Result<usize> {
    (1..=n.max(1))
        .try_fold(1usize, |acc, k| acc.checked_mul(k))
        .ok_or(Error::ClosureExceedsCap { cap })
}

/// Symmetric group in its natural action on n points.
pub fn symmetric(n: usize, cap: usize) -> Result<FiniteGroup> {
    let order = factorial_capped(n, cap)?;
    check_cap("symmetric", order, cap)?;
    let gens = match n {
        0 | 1 => vec![Permutation::identity(n.max(1))],
        2 => vec![cycle_on(2, &[0, 1])],
        _ => vec![
            cycle_on(n, &[0, 1]),
            cycle_on(n, &(0..n).collect::<Vec<_>>()),
        ],
    };
    FiniteGroup::close_generators(format!("S{n}"), gens, cap)
}

/// Alternating group in its natural action on n points.
pub fn alternating(n: usize, cap: usize) -> Result<FiniteGroup> {
    let order = factorial_capped(n, cap)? / if n >= 2 { 2 } else { 1 };
    check_cap("alternating", order, cap)?;
    let gens = match n {
        0..=2 => vec![Permutation::identity(n.max(1))],
        3 => vec![cycle_on(3, &[0, 1, 2])],
        _ if n % 2 == 1 => vec![
            cycle_on(n, &[0, 1, 2]),
            cycle_on(n, &(0..n).collect::<Vec<_>>()),
        ],
        _ => vec![
            cycle_on(n, &[0, 1, 2]),
            cycle_on(n, &(1..n).collect::<Vec<_>>()),
        ],
    };
    FiniteGroup::close_generators(format!("A{n}"), gens, cap)
}

/// SL(2,p) acting faithfully on the p²−1 nonzero vectors of the plane over
/// the p-element field. The matrix stage is internal: the two standard
/// generators are converted to permutations and closed as usual.
pub fn sl2(p: usize, cap: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidOrder {
            family: "sl2",
            order: p,
            reason: "parameter must be prime",
        });
    }
    // p(p²−1) overtakes any sane cap long before p² can overflow
    if p > 1 << 20 {
        return Err(Error::ClosureExceedsCap { cap });
    }
    let order = p * (p * p - 1);
    check_cap("sl2", order, cap)?;
    let degree = p * p - 1;
    // nonzero vector (x, y) <-> index x*p + y - 1
    let vec_index = |x: usize, y: usize| x * p + y - 1;
    let matrix_perm = |m: [usize; 4]| {
        let mut images = vec![0usize; degree];
        for x in 0..p {
            for y in 0..p {
                if x == 0 && y == 0 {
                    continue;
                }
                let nx = (m[0] * x + m[1] * y) % p;
                let ny = (m[2] * x + m[3] * y) % p;
                images[vec_index(x, y)] = vec_index(nx, ny);
            }
        }
        Permutation::from_images(images).expect("invertible matrices act bijectively")
    };
    let t = matrix_perm([1, 1, 0, 1]);
    let s = matrix_perm([0, p - 1, 1, 0]);
    FiniteGroup::close_generators(format!("SL(2,{p})"), vec![t, s], cap)
}

/// Componentwise action on disjoint point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let order = a
        .order()
        .checked_mul(b.order())
        .ok_or(Error::ClosureExceedsCap { cap })?;
    check_cap("direct product", order, cap)?;
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.extended(degree)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), degree)));
    let g = FiniteGroup::close_generators(format!("{}x{}", a.label(), b.label()), gens, cap)?;
    debug_assert_eq!(g.order(), order);
    Ok(g)
}

/// The action behind a semidirect product N ⋊ H: for each generator of H,
/// the image of each generator of N, as element indices of N.
///
/// Validation is in two stages: each per-generator map must extend to an
/// automorphism of N, and the assignment of automorphisms to H's generators
/// must extend to a homomorphism H → Aut(N).
#[derive(Clone, Debug)]
pub struct ActionSpec {
    pub images: Vec<Vec<usize>>,
}

impl ActionSpec {
    /// The trivial action of H on N (every H generator fixes N pointwise).
    pub fn trivial(n: &FiniteGroup, h: &FiniteGroup) -> ActionSpec {
        let ids = n.generator_indices();
        ActionSpec {
            images: vec![ids; h.generators().len()],
        }
    }

    /// Resolves each H generator to the full automorphism of N it induces.
    fn automorphisms(&self, n: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
        if self.images.len() != h.generators().len() {
            return Err(Error::NotAHomomorphism);
        }
        self.images
            .iter()
            .map(|imgs| n.extend_automorphism(imgs).ok_or(Error::NotAnAutomorphism))
            .collect()
    }
}

/// Semidirect product N ⋊ H realized as permutations of the |N|·|H| pairs:
/// the regular action of the product on itself.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &ActionSpec,
    cap: usize,
) -> Result<FiniteGroup> {
    let order = n
        .order()
        .checked_mul(h.order())
        .ok_or(Error::ClosureExceedsCap { cap })?;
    check_cap("semidirect product", order, cap)?;
    let autos = action.automorphisms(n, h)?;

    // The generator assignment extends to a homomorphism H -> Aut(N) iff the
    // group generated by the paired permutations (h_gen on H's points, the
    // automorphism on N's element indices) has order exactly |H|.
    {
        let combined_degree = h.degree() + n.order();
        let mut combined = Vec::new();
        for (hg, auto) in h.generators().iter().zip(&autos) {
            let mut images: Vec<usize> = (0..combined_degree).collect();
            for (p, slot) in images.iter_mut().enumerate().take(h.degree()) {
                *slot = hg.apply(p);
            }
            for (x, &img) in auto.iter().enumerate() {
                images[h.degree() + x] = h.degree() + img;
            }
            combined.push(Permutation::from_images(images).expect("bijection"));
        }
        match FiniteGroup::close_generators("action check", combined, h.order()) {
            Ok(g) if g.order() == h.order() => {}
            _ => return Err(Error::NotAHomomorphism),
        }
    }

    // full automorphism per element of H, walking H's BFS tree
    let mut auto_of: Vec<Vec<usize>> = vec![(0..n.order()).collect()];
    // identity automorphism for index 0; fill the rest in BFS order
    {
        let hg = h.generator_indices();
        // position of each generator in h's generator list
        for j in 1..h.order() {
            // reconstruct from prod: find (parent, gen) via bfs is private; walk
            // products instead: j = parent ∘ gen is not exposed, so recompute by
            // composing automorphisms along any factorization. Using left
            // division: for some generator g with j = k·g, auto_of[j] =
            // auto_of[k] ∘ auto_g.
            let mut found = None;
            for (gi, &g) in hg.iter().enumerate() {
                let k = h.prod(j, h.inv(g));
                if k < j {
                    found = Some((k, gi));
                    break;
                }
            }
            let (k, gi) = found.expect("BFS order reaches each element from a smaller one");
            let composed: Vec<usize> = (0..n.order()).map(|x| auto_of[k][autos[gi][x]]).collect();
            auto_of.push(composed);
        }
    }

    let degree = order;
    let pair = |n_idx: usize, h_idx: usize| n_idx * h.order() + h_idx;
    let mut gens = Vec::new();
    for g in n.generator_indices() {
        let mut images = vec![0usize; degree];
        for ni in 0..n.order() {
            for hi in 0..h.order() {
                images[pair(ni, hi)] = pair(n.prod(g, ni), hi);
            }
        }
        gens.push(Permutation::from_images(images).expect("bijection"));
    }
    for hg_elem in h.generator_indices() {
        let mut images = vec![0usize; degree];
        for ni in 0..n.order() {
            for hi in 0..h.order() {
                images[pair(ni, hi)] = pair(auto_of[hg_elem][ni], h.prod(hg_elem, hi));
            }
        }
        gens.push(Permutation::from_images(images).expect("bijection"));
    }

    let g = FiniteGroup::close_generators(format!("sd({},{})", n.label(), h.label()), gens, cap)?;
    debug_assert_eq!(g.order(), order);
    Ok(g)
}

/// The modular group of order 16: C8 ⋊ C2 with the automorphism a ↦ a⁵.
pub fn m16(cap: usize) -> Result<FiniteGroup> {
    let c8 = cyclic(8, cap)?;
    let c2 = cyclic(2, cap)?;
    let a = c8.generator_indices()[0];
    let a5 = {
        let mut x = 0;
        for _ in 0..5 {
            x = c8.prod(x, a);
        }
        x
    };
    let mut g = semidirect_product(
        &c8,
        &c2,
        &ActionSpec {
            images: vec![vec![a5]],
        },
        cap,
    )?;
    g.set_label("M16");
    Ok(g)
}

/// Quotient G/N acting on the left cosets of N, which are labeled in
/// ascending order of their least member index.
pub fn quotient(g: &FiniteGroup, n: &Subgroup, cap: usize) -> Result<FiniteGroup> {
    if !crate::lattice::is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in n.members.iter_ones() {
            coset_of[g.prod(x, m)] = id;
        }
    }
    let k = reps.len();
    debug_assert_eq!(k * n.order, order);
    let gens: Vec<Permutation> = g
        .generator_indices()
        .into_iter()
        .map(|gen| {
            let images = reps.iter().map(|&r| coset_of[g.prod(gen, r)]).collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        })
        .collect();
    let q = FiniteGroup::close_generators(format!("{}/N{}", g.label(), n.order), gens, cap)?;
    debug_assert_eq!(q.order(), k);
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use crate::lattice::{all_subgroups, sub_count};

    const CAP: usize = DEFAULT_CAP;

    #[test]
    fn cyclic_groups_by_table_rows() {
        assert_eq!(sub_count(&cyclic(1, CAP).unwrap()), 1);
        assert_eq!(sub_count(&cyclic(4, CAP).unwrap()), 3);
        assert_eq!(sub_count(&cyclic(6, CAP).unwrap()), 4);
    }

    #[test]
    fn abelian_groups_by_table_rows() {
        assert_eq!(sub_count(&abelian(&[2, 2], CAP).unwrap()), 5);
        assert_eq!(sub_count(&abelian(&[4, 2], CAP).unwrap()), 8);
        assert_eq!(sub_count(&abelian(&[9, 3], CAP).unwrap()), 10);
        // p + 3 and 2p² + 2p + 4 for elementary abelian rank 2 and 3
        assert_eq!(sub_count(&abelian(&[3, 3], CAP).unwrap()), 6);
        assert_eq!(sub_count(&abelian(&[2, 2, 2], CAP).unwrap()), 16);
    }

    #[test]
    fn dihedral_groups_by_table_rows() {
        assert_eq!(sub_count(&dihedral(5, CAP).unwrap()), 8);
        assert_eq!(sub_count(&dihedral(4, CAP).unwrap()), 10);
        assert_eq!(sub_count(&dihedral(7, CAP).unwrap()), 10);
        assert_eq!(dihedral(2, CAP).unwrap().order(), 4);
    }

    #[test]
    fn dicyclic_groups_by_table_rows() {
        assert_eq!(sub_count(&dicyclic(8, CAP).unwrap()), 6);
        assert_eq!(sub_count(&dicyclic(12, CAP).unwrap()), 8);
        assert_eq!(sub_count(&dicyclic(16, CAP).unwrap()), 11);
        assert!(dicyclic(10, CAP).is_err());
        assert!(dicyclic(4, CAP).is_err());
    }

    #[test]
    fn dicyclic_has_unique_involution() {
        for n in [8, 12, 16, 20] {
            let g = dicyclic(n, CAP).unwrap();
            let involutions = (0..g.order()).filter(|&i| g.element_order(i) == 2).count();
            assert_eq!(involutions, 1, "Dic{n}");
        }
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(sub_count(&symmetric(3, CAP).unwrap()), 6);
        assert_eq!(sub_count(&alternating(4, CAP).unwrap()), 10);
        assert_eq!(symmetric(4, CAP).unwrap().order(), 24);
        assert_eq!(alternating(5, CAP).unwrap().order(), 60);
    }

    #[test]
    fn sl2_small_primes() {
        let g = sl2(3, CAP).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(sub_count(&g), 15);
        assert_eq!(sl2(2, CAP).unwrap().order(), 6);
        assert!(sl2(4, CAP).is_err());
    }

    #[test]
    fn direct_products_multiply_coprime_counts() {
        let z2 = cyclic(2, CAP).unwrap();
        let z3 = cyclic(3, CAP).unwrap();
        let p = direct_product(&z2, &z3, CAP).unwrap();
        assert_eq!(sub_count(&p), 4);

        let a4 = alternating(4, CAP).unwrap();
        let z5 = cyclic(5, CAP).unwrap();
        let p = direct_product(&a4, &z5, CAP).unwrap();
        assert_eq!(sub_count(&p), 20);

        let t = cyclic(1, CAP).unwrap();
        let p = direct_product(&a4, &t, CAP).unwrap();
        assert_eq!(sub_count(&p), 10);
    }

    #[test]
    fn semidirect_z7_z3() {
        let z7 = cyclic(7, CAP).unwrap();
        let z3 = cyclic(3, CAP).unwrap();
        let a = z7.generator_indices()[0];
        let a2 = z7.prod(a, a);
        let g = semidirect_product(
            &z7,
            &z3,
            &ActionSpec {
                images: vec![vec![a2]],
            },
            CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 21);
        assert_eq!(sub_count(&g), 10);
    }

    #[test]
    fn semidirect_z3_z8() {
        let z3 = cyclic(3, CAP).unwrap();
        let z8 = cyclic(8, CAP).unwrap();
        let a = z3.generator_indices()[0];
        let g = semidirect_product(
            &z3,
            &z8,
            &ActionSpec {
                images: vec![vec![z3.inv(a)]],
            },
            CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(sub_count(&g), 10);
    }

    #[test]
    fn semidirect_with_trivial_action_matches_direct_product() {
        let q8 = dicyclic(8, CAP).unwrap();
        let z3 = cyclic(3, CAP).unwrap();
        let sd = semidirect_product(&q8, &z3, &ActionSpec::trivial(&q8, &z3), CAP).unwrap();
        let dp = direct_product(&q8, &z3, CAP).unwrap();
        assert_eq!(sd.order(), dp.order());
        assert_eq!(sub_count(&sd), sub_count(&dp));
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        let z7 = cyclic(7, CAP).unwrap();
        let z3 = cyclic(3, CAP).unwrap();
        // a ↦ identity is not bijective on generators' closure
        let bad = ActionSpec {
            images: vec![vec![0]],
        };
        assert!(matches!(
            semidirect_product(&z7, &z3, &bad, CAP),
            Err(Error::NotAnAutomorphism)
        ));
        // a ↦ a³ is an automorphism of C7 of order 6, not of order dividing 3
        let a = z7.generator_indices()[0];
        let a3 = z7.prod(z7.prod(a, a), a);
        let bad = ActionSpec {
            images: vec![vec![a3]],
        };
        assert!(matches!(
            semidirect_product(&z7, &z3, &bad, CAP),
            Err(Error::NotAHomomorphism)
        ));
    }

    #[test]
    fn m16_has_eleven_subgroups() {
        let g = m16(CAP).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(sub_count(&g), 11);
    }

    #[test]
    fn quotients() {
        let q8 = dicyclic(8, CAP).unwrap();
        let lat = all_subgroups(&q8);
        let center = lat
            .subgroups()
            .iter()
            .find(|s| s.order == 2)
            .expect("Q8 has a unique order-2 subgroup");
        let v4 = quotient(&q8, center, CAP).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(sub_count(&v4), 5);

        let sl23 = sl2(3, CAP).unwrap();
        let lat = all_subgroups(&sl23);
        let center = lat.subgroups().iter().find(|s| s.order == 2).unwrap();
        let q = quotient(&sl23, center, CAP).unwrap();
        assert_eq!(sub_count(&q), 10); // matches A4

        let trivial = all_subgroups(&q8).subgroups()[0].clone();
        let q = quotient(&q8, &trivial, CAP).unwrap();
        assert_eq!(sub_count(&q), 6);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = symmetric(3, CAP).unwrap();
        let lat = all_subgroups(&s3);
        let h = lat.subgroups().iter().find(|s| s.order == 2).unwrap();
        assert!(matches!(quotient(&s3, h, CAP), Err(Error::NotNormal)));
    }
}
