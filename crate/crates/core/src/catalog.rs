//! Group-expression DSL, catalog files of permutation generators, and the
//! bundled set of named groups.
//!
//! Expression grammar (whitespace insignificant, `x` left-associative):
//!
//! ```text
//! expr   := term { "x" term }
//! term   := "C" int | "D" int | "Dic" int | "S" int | "A" int
//!         | "SL(2," int ")" | "M16" | "gid(" int "," int ")"
//!         | "sd(" expr "," expr "," action ")" | "(" expr ")"
//! action := assignment { ";" assignment }
//! assignment := genname "->" word
//! word   := factor { "*" factor }
//! factor := genname [ "^" [-] int ]
//! ```
//!
//! Generator names refer to the generators of the normal factor, `a` for the
//! first, `b` for the second, and so on; unassigned generators are fixed.
//! The acting group of `sd` must be single-generator (all named semidirect
//! factors here are cyclic).
//!
//! Catalog files are UTF-8 text, one entry per line, `#` starting a comment:
//!
//! ```text
//! order <n> id <k> deg <d> [sub <s>] : <cycles> ; <cycles> ; ...
//! ```
//!
//! Every entry is validated on load: the generators must close to exactly
//! `order` elements, and when `sub` is present the enumerated subgroup count
//! must match it. `id` is an opaque external label (0 = not cross-referenced
//! against any external database).

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::construct;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::all_subgroups;
use crate::perm::Permutation;

/// Abstract syntax of a group expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Sl2(usize),
    M16,
    Gid(usize, usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Semidirect {
        normal: Box<GroupExpr>,
        acting: Box<GroupExpr>,
        action: Vec<Assignment>,
    },
}

/// One `genname -> word` clause of an sd() action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    /// 0-based generator index of the normal factor ('a' = 0).
    pub gen: usize,
    /// Product of (generator index, exponent) factors.
    pub word: Vec<(usize, i64)>,
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupExpr::Symmetric(n) => write!(f, "S{n}"),
            GroupExpr::Alternating(n) => write!(f, "A{n}"),
            GroupExpr::Sl2(p) => write!(f, "SL(2,{p})"),
            GroupExpr::M16 => write!(f, "M16"),
            GroupExpr::Gid(o, i) => write!(f, "gid({o},{i})"),
            GroupExpr::Product(a, b) => {
                write!(f, "{a} x ")?;
                // parenthesize a right-nested product so the left-associative
                // grammar reparses to the same tree
                if matches!(**b, GroupExpr::Product(_, _)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            GroupExpr::Semidirect {
                normal,
                acting,
                action,
            } => {
                write!(f, "sd({normal}, {acting}, ")?;
                for (i, a) in action.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{}->", gen_name(a.gen))?;
                    for (j, &(g, e)) in a.word.iter().enumerate() {
                        if j > 0 {
                            write!(f, "*")?;
                        }
                        write!(f, "{}", gen_name(g))?;
                        if e != 1 {
                            write!(f, "^{e}")?;
                        }
                    }
                }
                write!(f, ")")
            }
        }
    }
}

fn gen_name(i: usize) -> char {
    (b'a' + (i as u8 % 26)) as char
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Semi,
    Arrow,
    Caret,
    Star,
    Minus,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        if b.is_ascii_whitespace() {
            pos += 1;
        } else if b.is_ascii_alphabetic() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                pos += 1;
            }
            out.push((Tok::Word(text[start..pos].to_string()), start));
        } else if b.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let v = text[start..pos].parse().map_err(|_| Error::Syntax {
                position: start,
                expected: "integer".into(),
            })?;
            out.push((Tok::Int(v), start));
        } else {
            let tok = match b {
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b',' => Tok::Comma,
                b';' => Tok::Semi,
                b'^' => Tok::Caret,
                b'*' => Tok::Star,
                b'-' => {
                    if bytes.get(pos + 1) == Some(&b'>') {
                        pos += 1;
                        Tok::Arrow
                    } else {
                        Tok::Minus
                    }
                }
                _ => {
                    return Err(Error::Syntax {
                        position: pos,
                        expected: "token".into(),
                    })
                }
            };
            out.push((tok, pos));
            pos += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn fail<T>(&self, expected: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos(),
            expected: expected.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            self.fail(what.to_string())
        }
    }

    fn int(&mut self, what: &str) -> Result<usize> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.at += 1;
                Ok(v)
            }
            _ => self.fail(what.to_string()),
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        while matches!(self.peek(), Some(Tok::Word(w)) if w == "x") {
            self.at += 1;
            let right = self.term()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        match self.bump() {
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Word(w)) => match w.as_str() {
                "C" => Ok(GroupExpr::Cyclic(self.int("order after C")?)),
                "D" => Ok(GroupExpr::Dihedral(self.int("subscript after D")?)),
                "Dic" => Ok(GroupExpr::Dicyclic(self.int("order after Dic")?)),
                "S" => Ok(GroupExpr::Symmetric(self.int("degree after S")?)),
                "A" => Ok(GroupExpr::Alternating(self.int("degree after A")?)),
                "M" => {
                    let n = self.int("16 after M")?;
                    if n == 16 {
                        Ok(GroupExpr::M16)
                    } else {
                        self.fail("M16 (the only modular group provided)")
                    }
                }
                "SL" => {
                    self.expect(Tok::LParen, "'(' after SL")?;
                    let two = self.int("2")?;
                    if two != 2 {
                        return self.fail("SL(2,p) only");
                    }
                    self.expect(Tok::Comma, "','")?;
                    let p = self.int("prime")?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::Sl2(p))
                }
                "gid" => {
                    self.expect(Tok::LParen, "'(' after gid")?;
                    let order = self.int("order")?;
                    self.expect(Tok::Comma, "','")?;
                    let id = self.int("id")?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::Gid(order, id))
                }
                "sd" => {
                    self.expect(Tok::LParen, "'(' after sd")?;
                    let normal = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let acting = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let action = self.action()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::Semidirect {
                        normal: Box::new(normal),
                        acting: Box::new(acting),
                        action,
                    })
                }
                _ => {
                    self.at -= 1;
                    self.fail("family (C, D, Dic, S, A, SL, M16, gid, sd)")
                }
            },
            _ => {
                self.at = self.at.saturating_sub(1);
                self.fail("group expression")
            }
        }
    }

    fn action(&mut self) -> Result<Vec<Assignment>> {
        let mut out = vec![self.assignment()?];
        while self.peek() == Some(&Tok::Semi) {
            self.at += 1;
            out.push(self.assignment()?);
        }
        Ok(out)
    }

    fn gen_letter(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Tok::Word(w)) if w.len() == 1 && w.as_bytes()[0].is_ascii_lowercase() => {
                let g = (w.as_bytes()[0] - b'a') as usize;
                self.at += 1;
                Ok(g)
            }
            _ => self.fail("generator name (a, b, c, ...)"),
        }
    }

    fn assignment(&mut self) -> Result<Assignment> {
        let gen = self.gen_letter()?;
        self.expect(Tok::Arrow, "'->'")?;
        let mut word = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            word.push(self.factor()?);
        }
        Ok(Assignment { gen, word })
    }

    fn factor(&mut self) -> Result<(usize, i64)> {
        let gen = self.gen_letter()?;
        let mut exp = 1i64;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.at += 1;
                true
            } else {
                false
            };
            let v = self.int("exponent")? as i64;
            exp = if neg { -v } else { v };
        }
        Ok((gen, exp))
    }
}

/// Parses a group expression, reporting the byte offset on failure.
pub fn parse_expr(text: &str) -> Result<GroupExpr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.fail("end of input");
    }
    Ok(e)
}

/// Evaluates an expression to a materialized group, resolving gid()
/// references through the given catalog.
pub fn resolve(expr: &GroupExpr, catalog: &Catalog, cap: usize) -> Result<FiniteGroup> {
    match expr {
        GroupExpr::Cyclic(n) => construct::cyclic(*n, cap),
        GroupExpr::Dihedral(n) => construct::dihedral(*n, cap),
        GroupExpr::Dicyclic(n) => construct::dicyclic(*n, cap),
        GroupExpr::Symmetric(n) => construct::symmetric(*n, cap),
        GroupExpr::Alternating(n) => construct::alternating(*n, cap),
        GroupExpr::Sl2(p) => construct::sl2(*p, cap),
        GroupExpr::M16 => construct::m16(cap),
        GroupExpr::Gid(order, id) => {
            let entry = catalog.get(*order, *id).ok_or(Error::UnknownGid {
                order: *order,
                id: *id,
            })?;
            entry.build(cap)
        }
        GroupExpr::Product(a, b) => {
            let ga = resolve(a, catalog, cap)?;
            let gb = resolve(b, catalog, cap)?;
            construct::direct_product(&ga, &gb, cap)
        }
        GroupExpr::Semidirect {
            normal,
            acting,
            action,
        } => {
            let n = resolve(normal, catalog, cap)?;
            let h = resolve(acting, catalog, cap)?;
            if h.generators().len() != 1 {
                return Err(Error::Syntax {
                    position: 0,
                    expected: "single-generator acting group in sd()".into(),
                });
            }
            let n_gens = n.generator_indices();
            let mut images: Vec<usize> = n_gens.clone();
            for a in action {
                if a.gen >= n_gens.len() {
                    return Err(Error::Syntax {
                        position: 0,
                        expected: format!(
                            "generator name among a..{} (the normal factor has {} generators)",
                            gen_name(n_gens.len().saturating_sub(1)),
                            n_gens.len()
                        ),
                    });
                }
                let mut acc = 0usize; // identity
                for &(g, e) in &a.word {
                    if g >= n_gens.len() {
                        return Err(Error::Syntax {
                            position: 0,
                            expected: "generator name defined for the normal factor".into(),
                        });
                    }
                    let base = if e >= 0 { n_gens[g] } else { n.inv(n_gens[g]) };
                    for _ in 0..e.unsigned_abs() {
                        acc = n.prod(acc, base);
                    }
                }
                images[a.gen] = acc;
            }
            construct::semidirect_product(
                &n,
                &h,
                &construct::ActionSpec {
                    images: vec![images],
                },
                cap,
            )
        }
    }
}

/// Parses and resolves in one step.
pub fn resolve_text(text: &str, catalog: &Catalog, cap: usize) -> Result<FiniteGroup> {
    resolve(&parse_expr(text)?, catalog, cap)
}

/// One catalog line: an externally labeled group given by explicit
/// permutation generators.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub order: usize,
    pub id: usize,
    pub degree: usize,
    pub expected_sub: Option<usize>,
    pub generators: Vec<Permutation>,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        format!("gid({},{})", self.order, self.id)
    }

    /// Closes the stored generators into the group.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::close_generators(self.label(), self.generators.clone(), cap)
    }
}

/// A validated, immutable set of catalog entries.
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_gid: HashMap<(usize, usize), usize>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, order: usize, id: usize) -> Option<&CatalogEntry> {
        self.by_gid.get(&(order, id)).map(|&i| &self.entries[i])
    }

    /// Parses and validates catalog text: every entry's generators must close
    /// to exactly the claimed order, and the enumerated subgroup count must
    /// match `sub` when present.
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries = Vec::new();
        let mut by_gid = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let entry = parse_entry(content, line)?;
            if by_gid.contains_key(&(entry.order, entry.id)) {
                return Err(Error::CatalogParse {
                    line,
                    message: format!("duplicate entry for gid({},{})", entry.order, entry.id),
                });
            }
            validate_entry(&entry, line)?;
            by_gid.insert((entry.order, entry.id), entries.len());
            entries.push(entry);
        }
        Ok(Catalog { entries, by_gid })
    }

    /// Loads and validates a catalog file.
    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Catalog> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }
}

fn parse_entry(content: &str, line: usize) -> Result<CatalogEntry> {
    let (header, gens_text) = content.split_once(':').ok_or(Error::CatalogParse {
        line,
        message: "missing ':' between header and generators".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let mut order = None;
    let mut id = None;
    let mut degree = None;
    let mut expected_sub = None;
    let mut k = 0;
    while k + 1 < fields.len() {
        let value: usize = fields[k + 1].parse().map_err(|_| Error::CatalogParse {
            line,
            message: format!("bad integer after '{}'", fields[k]),
        })?;
        match fields[k] {
            "order" => order = Some(value),
            "id" => id = Some(value),
            "deg" => degree = Some(value),
            "sub" => expected_sub = Some(value),
            other => {
                return Err(Error::CatalogParse {
                    line,
                    message: format!("unknown header field '{other}'"),
                })
            }
        }
        k += 2;
    }
    if k != fields.len() {
        return Err(Error::CatalogParse {
            line,
            message: "dangling header field".into(),
        });
    }
    let (order, id, degree) = match (order, id, degree) {
        (Some(o), Some(i), Some(d)) => (o, i, d),
        _ => {
            return Err(Error::CatalogParse {
                line,
                message: "header must give order, id and deg".into(),
            })
        }
    };
    let generators = gens_text
        .split(';')
        .map(|s| {
            Permutation::parse_cycles(s.trim(), degree).map_err(|e| Error::CatalogParse {
                line,
                message: format!("bad generator: {e}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if generators.is_empty() {
        return Err(Error::CatalogParse {
            line,
            message: "entry needs at least one generator".into(),
        });
    }
    Ok(CatalogEntry {
        order,
        id,
        degree,
        expected_sub,
        generators,
    })
}

fn validate_entry(entry: &CatalogEntry, line: usize) -> Result<()> {
    let cap = entry.order.saturating_mul(2).saturating_add(16);
    let group = match entry.build(cap) {
        Ok(g) => g,
        Err(Error::ClosureExceedsCap { .. }) => {
            return Err(Error::OrderMismatch {
                line,
                expected: entry.order,
                actual: cap,
            })
        }
        Err(e) => return Err(e),
    };
    if group.order() != entry.order {
        return Err(Error::OrderMismatch {
            line,
            expected: entry.order,
            actual: group.order(),
        });
    }
    if let Some(expected) = entry.expected_sub {
        let actual = all_subgroups(&group).count();
        if actual != expected {
            return Err(Error::SubMismatch {
                line,
                expected,
                actual,
            });
        }
    }
    Ok(())
}

static BUNDLED: OnceLock<Catalog> = OnceLock::new();

/// The bundled catalog of named groups, validated on first use.
pub fn bundled() -> &'static Catalog {
    BUNDLED.get_or_init(|| {
        Catalog::parse(include_str!("../data/named_groups.cat"))
            .expect("bundled catalog is self-consistent")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use crate::lattice::sub_count;
    use proptest::prelude::*;

    fn empty_catalog() -> Catalog {
        Catalog::parse("").unwrap()
    }

    #[test]
    fn parses_products_left_associatively() {
        let e = parse_expr("C4 x C2").unwrap();
        assert_eq!(
            e,
            GroupExpr::Product(
                Box::new(GroupExpr::Cyclic(4)),
                Box::new(GroupExpr::Cyclic(2))
            )
        );
        let e = parse_expr("C2 x C3 x C5").unwrap();
        assert_eq!(e.to_string(), "C2 x C3 x C5");
    }

    #[test]
    fn parses_semidirect() {
        let e = parse_expr("sd(C7, C3, a->a^2)").unwrap();
        match &e {
            GroupExpr::Semidirect { action, .. } => {
                assert_eq!(action.len(), 1);
                assert_eq!(action[0].gen, 0);
                assert_eq!(action[0].word, vec![(0, 2)]);
            }
            _ => panic!("expected sd node"),
        }
        assert_eq!(e.to_string(), "sd(C7, C3, a->a^2)");
    }

    #[test]
    fn parses_named_families() {
        assert_eq!(parse_expr("Dic12").unwrap(), GroupExpr::Dicyclic(12));
        assert_eq!(parse_expr("SL(2,5)").unwrap(), GroupExpr::Sl2(5));
        assert_eq!(parse_expr("M16").unwrap(), GroupExpr::M16);
        assert_eq!(parse_expr("gid(81,10)").unwrap(), GroupExpr::Gid(81, 10));
        assert_eq!(
            parse_expr("(C2 x C2) x C9").unwrap().to_string(),
            "C2 x C2 x C9"
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_expr("C4 y C2") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_expr("").is_err());
        assert!(parse_expr("C").is_err());
        assert!(parse_expr("sd(C7, C3)").is_err());
        assert!(parse_expr("M17").is_err());
    }

    #[test]
    fn resolves_basic_expressions() {
        let cat = empty_catalog();
        let g = resolve_text("A5", &cat, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 60);
        let g = resolve_text("C2 x C2 x C2", &cat, DEFAULT_CAP).unwrap();
        assert_eq!(sub_count(&g), 16);
        let g = resolve_text("sd(C7, C3, a->a^2)", &cat, DEFAULT_CAP).unwrap();
        assert_eq!(sub_count(&g), 10);
        let g = resolve_text("sd(C3, C8, a->a^-1)", &cat, DEFAULT_CAP).unwrap();
        assert_eq!(sub_count(&g), 10);
        assert!(matches!(
            resolve_text("gid(81,10)", &cat, DEFAULT_CAP),
            Err(Error::UnknownGid { order: 81, id: 10 })
        ));
    }

    #[test]
    fn catalog_round_trip_and_validation() {
        let text = "\
# a comment
order 6 id 1 deg 3 sub 6 : (1,2) ; (1,2,3)
order 4 id 2 deg 4 : (1,2) ; (3,4)
";
        let cat = Catalog::parse(text).unwrap();
        assert_eq!(cat.entries().len(), 2);
        let s3 = cat.get(6, 1).unwrap().build(DEFAULT_CAP).unwrap();
        assert_eq!(s3.order(), 6);

        // order mismatch: claims 10, closes to 20
        let bad = "order 10 id 1 deg 20 : (1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20)";
        assert!(matches!(
            Catalog::parse(bad),
            Err(Error::OrderMismatch {
                line: 1,
                expected: 10,
                actual: 20
            })
        ));

        // sub mismatch
        let bad = "order 6 id 1 deg 3 sub 7 : (1,2) ; (1,2,3)";
        assert!(matches!(
            Catalog::parse(bad),
            Err(Error::SubMismatch {
                line: 1,
                expected: 7,
                actual: 6
            })
        ));

        // empty file is an empty catalog
        assert_eq!(Catalog::parse("").unwrap().entries().len(), 0);
    }

    fn arb_expr() -> impl Strategy<Value = GroupExpr> {
        let leaf = prop_oneof![
            (1usize..200).prop_map(GroupExpr::Cyclic),
            (2usize..50).prop_map(GroupExpr::Dihedral),
            (8usize..100).prop_map(|n| GroupExpr::Dicyclic(n / 4 * 4)),
            (1usize..8).prop_map(GroupExpr::Symmetric),
            (1usize..8).prop_map(GroupExpr::Alternating),
            (2usize..12).prop_map(GroupExpr::Sl2),
            Just(GroupExpr::M16),
            ((1usize..2000), (0usize..60)).prop_map(|(o, i)| GroupExpr::Gid(o, i)),
        ];
        leaf.prop_recursive(3, 16, 4, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| GroupExpr::Product(Box::new(a), Box::new(b))),
                (
                    inner.clone(),
                    inner,
                    proptest::collection::vec(
                        (
                            (0usize..3),
                            proptest::collection::vec(((0usize..3), -4i64..5), 1..3)
                        ),
                        1..3
                    )
                )
                    .prop_map(|(n, h, raw)| GroupExpr::Semidirect {
                        normal: Box::new(n),
                        acting: Box::new(h),
                        action: raw
                            .into_iter()
                            .map(|(gen, word)| Assignment { gen, word })
                            .collect(),
                    }),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(e in arb_expr()) {
            let text = e.to_string();
            let parsed = parse_expr(&text).unwrap();
            prop_assert_eq!(parsed, e);
        }
    }
}
