//! Permutations on `{0, .., d-1}` and the textual cycle notation.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, .., degree-1}`, stored in image form: `images[x]` is
/// where `x` is sent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image table, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let degree = images.len();
        if degree == 0 || degree > u16::MAX as usize {
            return Err(Error::NotABijection { degree });
        }
        let mut seen = vec![false; degree];
        for &img in &images {
            if img >= degree || seen[img] {
                return Err(Error::NotABijection { degree });
            }
            seen[img] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of one point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&mid| self.images[mid as usize])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Least k >= 1 with `self^k` the identity.
    pub fn order(&self) -> usize {
        // lcm of cycle lengths
        let mut seen = vec![false; self.degree()];
        let mut order: usize = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            loop {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            order = lcm(order, len);
        }
        order
    }

    /// Extends the permutation to act on `degree` points, fixing the new ones.
    pub fn extended(&self, degree: usize) -> Permutation {
        debug_assert!(degree >= self.degree());
        let mut images: Vec<u16> = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Permutation { images }
    }

    /// Shifts the action to points `offset..offset+degree` inside a larger set.
    pub fn shifted(&self, offset: usize, total_degree: usize) -> Permutation {
        let mut images: Vec<u16> = (0..total_degree as u16).collect();
        for (i, &img) in self.images.iter().enumerate() {
            images[offset + i] = (offset + img as usize) as u16;
        }
        Permutation { images }
    }

    /// Decomposes into cycles of length >= 2, each rotated to start at its
    /// least point, ordered by that least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`.
    ///
    /// Whitespace is ignored, fixed points may be omitted, and `()` denotes
    /// the identity. Points must lie in `1..=degree`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 || degree > u16::MAX as usize {
            return Err(Error::NotABijection { degree });
        }
        let bytes = text.as_bytes();
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        let mut any_cycle = false;
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(Error::Syntax {
                    position: pos,
                    expected: "'('".into(),
                });
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                if !cycle.is_empty() {
                    if pos >= bytes.len() || bytes[pos] != b',' {
                        return Err(Error::Syntax {
                            position: pos,
                            expected: "',' or ')'".into(),
                        });
                    }
                    pos += 1;
                    skip_ws(&mut pos);
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(Error::Syntax {
                        position: pos,
                        expected: "point number".into(),
                    });
                }
                let raw: usize = text[start..pos].parse().map_err(|_| Error::Syntax {
                    position: start,
                    expected: "point number".into(),
                })?;
                if raw == 0 || raw > degree {
                    return Err(Error::Syntax {
                        position: start,
                        expected: format!("point in 1..={degree}"),
                    });
                }
                cycle.push(raw - 1);
            }
            any_cycle = true;
            for &p in &cycle {
                if moved[p] {
                    return Err(Error::Syntax {
                        position: pos,
                        expected: format!("point {} to appear once", p + 1),
                    });
                }
                moved[p] = true;
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
            skip_ws(&mut pos);
        }
        if !any_cycle {
            return Err(Error::Syntax {
                position: pos,
                expected: "at least one cycle (use \"()\" for the identity)".into(),
            });
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// Canonical cycle notation: 1-based, least point first, `()` for identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(degree: usize, points: &[usize]) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..points.len() {
            images[points[i]] = points[(i + 1) % points.len()];
        }
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_follows_right_then_left() {
        let a = cycle(3, &[0, 1]);
        let b = cycle(3, &[1, 2]);
        let ab = a.compose(&b).unwrap();
        // x -> a(b(x)): 0 -> a(0) = 1, 1 -> a(2) = 2, 2 -> a(1) = 0
        assert_eq!(ab, cycle(3, &[0, 1, 2]));
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&a).unwrap(), a);
    }

    #[test]
    fn three_cycle_squared() {
        let c = cycle(3, &[0, 1, 2]);
        assert_eq!(c.compose(&c).unwrap(), cycle(3, &[0, 2, 1]));
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(cycle(3, &[0, 1, 2]).inverse(), cycle(3, &[0, 2, 1]));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        let t = cycle(5, &[1, 3]);
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn non_bijection_rejected() {
        assert!(Permutation::from_images(vec![0, 0, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn parse_and_print_cycles() {
        let p = Permutation::parse_cycles("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");

        let id = Permutation::parse_cycles("()", 3).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");

        // whitespace-insensitive, fixed points omitted
        let q = Permutation::parse_cycles(" ( 1 , 2 ) ", 4).unwrap();
        assert_eq!(q, cycle(4, &[0, 1]));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Permutation::parse_cycles("", 3).is_err());
    }

    #[test]
    fn order_of_mixed_cycles() {
        let p = Permutation::parse_cycles("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(7).order(), 1);
    }

    /// Fisher-Yates driven by raw fuzz words.
    fn random_perm(raw: &[u32]) -> Permutation {
        let n = raw.len();
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            v.swap(i, (raw[i] as usize) % (i + 1));
        }
        Permutation::from_images(v).unwrap()
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(raw in proptest::collection::vec(0..u32::MAX, 8)) {
            let p = random_perm(&raw);
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn print_parse_round_trip(raw in proptest::collection::vec(0..u32::MAX, 9)) {
            let p = random_perm(&raw);
            let q = Permutation::parse_cycles(&p.to_string(), raw.len()).unwrap();
            prop_assert_eq!(p, q);
        }
    }
}
