//! Classification of subgroup counts as enforcing numbers over a bounded
//! catalog, and comparison against the reference chart of enforcing numbers
//! up to 76.

use std::fmt;
use std::thread;

use crate::catalog::Catalog;
use crate::construct;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::all_subgroups;
use crate::props::{self, PropertyReport};

/// The strongest property class shared by every group with a given subgroup
/// count. "Strict" classes mark levels not implied by the next one up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EnforcingClass {
    Cyclic,
    StrictAbelian,
    StrictNilpotent,
    StrictSupersolvable,
    StrictSolvable,
    NonSolvable,
}

impl EnforcingClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EnforcingClass::Cyclic => "cyclic",
            EnforcingClass::StrictAbelian => "abelian",
            EnforcingClass::StrictNilpotent => "nilpotent",
            EnforcingClass::StrictSupersolvable => "supersolvable",
            EnforcingClass::StrictSolvable => "solvable",
            EnforcingClass::NonSolvable => "non-solvable",
        }
    }
}

impl fmt::Display for EnforcingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One cell of the reference chart: the class printed for n, and whether the
/// entry is boxed as a conjecture there.
#[derive(Clone, Copy, Debug)]
pub struct Figure1Entry {
    pub n: usize,
    pub class: EnforcingClass,
    pub conjectured: bool,
}

/// The reference chart for n in 1..=76, bundled verbatim.
///
/// The chart's four-color scheme has no "abelian" level: counts that force
/// abelianness without cyclicity are printed at the nilpotent level there,
/// so `StrictAbelian` never occurs in this table (observed records may still
/// report it).
pub fn figure1_table() -> Vec<Figure1Entry> {
    // b = cyclic, n = strictly nilpotent, o = strictly supersolvable,
    // s = strictly solvable, r = not solvable-enforcing
    const CHART: &str = "bbbbnobobs\
                         nobosonoos\
                         sonosssons\
                         oonsssssns\
                         ssossonsns\
                         ssssssosrs\
                         nosoosnsss\
                         ossssr";
    const CONJECTURED: [usize; 17] = [
        28, 29, 31, 32, 33, 39, 43, 46, 47, 49, 57, 61, 62, 64, 65, 67, 71,
    ];
    CHART
        .bytes()
        .filter(|b| !b.is_ascii_whitespace())
        .enumerate()
        .map(|(i, b)| {
            let n = i + 1;
            let class = match b {
                b'b' => EnforcingClass::Cyclic,
                b'n' => EnforcingClass::StrictNilpotent,
                b'o' => EnforcingClass::StrictSupersolvable,
                b's' => EnforcingClass::StrictSolvable,
                b'r' => EnforcingClass::NonSolvable,
                _ => unreachable!("chart encoding"),
            };
            Figure1Entry {
                n,
                class,
                conjectured: CONJECTURED.contains(&n),
            }
        })
        .collect()
}

/// One catalog group with its computed property report.
#[derive(Clone, Debug)]
pub struct ScannedGroup {
    pub order: usize,
    pub id: usize,
    pub label: String,
    pub report: PropertyReport,
}

/// Enumerates the lattice and properties of every catalog entry of order at
/// most `max_order`, fanning the groups out over `jobs` worker threads.
/// Results are merged by (order, id), so the output does not depend on the
/// worker count.
pub fn scan_catalog(
    catalog: &Catalog,
    max_order: usize,
    jobs: usize,
    cap: usize,
) -> Result<Vec<ScannedGroup>> {
    let mut selected: Vec<_> = catalog
        .entries()
        .iter()
        .filter(|e| e.order <= max_order)
        .collect();
    selected.sort_by_key(|e| (e.order, e.id));
    let jobs = jobs.max(1).min(selected.len().max(1));

    let chunks: Vec<Result<Vec<(usize, ScannedGroup)>>> = thread::scope(|scope| {
        let selected = &selected;
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut i = w;
                    while i < selected.len() {
                        let entry = selected[i];
                        let group = entry.build(cap)?;
                        let lat = all_subgroups(&group);
                        out.push((
                            i,
                            ScannedGroup {
                                order: entry.order,
                                id: entry.id,
                                label: entry.label(),
                                report: props::report(&group, &lat),
                            },
                        ));
                        i += jobs;
                    }
                    Ok(out)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });

    let mut indexed = Vec::new();
    for chunk in chunks {
        indexed.extend(chunk?);
    }
    indexed.sort_by_key(|(i, _)| *i);
    Ok(indexed.into_iter().map(|(_, g)| g).collect())
}

/// A property failure backing a non-enforcing observation: the least-order
/// scanned group with the given subgroup count that fails the property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub property: &'static str,
    pub label: String,
    pub order: usize,
}

/// The observed classification of one subgroup count over a bounded scan.
#[derive(Clone, Debug)]
pub struct EnforcingRecord {
    pub n: usize,
    /// Strongest class every found group satisfies; None when the scan found
    /// no group with this count (vacuous up to the bound).
    pub observed: Option<EnforcingClass>,
    pub witnesses: Vec<Witness>,
    pub scanned_order_bound: usize,
    pub groups_found: usize,
}

type PropertyPredicate = fn(&PropertyReport) -> bool;

const PROPERTIES: [(&str, PropertyPredicate); 5] = [
    ("cyclic", |r| r.is_cyclic),
    ("abelian", |r| r.is_abelian),
    ("nilpotent", |r| r.is_nilpotent),
    ("supersolvable", |r| r.is_supersolvable),
    ("solvable", |r| r.is_solvable),
];

/// Classifies one subgroup count against every scanned group of order at
/// most `order_bound` with that count.
pub fn classify_n(scanned: &[ScannedGroup], n: usize, order_bound: usize) -> EnforcingRecord {
    let mut found: Vec<&ScannedGroup> = scanned
        .iter()
        .filter(|g| g.report.sub_count == n && g.order <= order_bound)
        .collect();
    found.sort_by_key(|g| (g.order, g.id));

    let mut witnesses = Vec::new();
    for (name, holds) in PROPERTIES {
        if let Some(w) = found.iter().find(|g| !holds(&g.report)) {
            witnesses.push(Witness {
                property: name,
                label: w.label.clone(),
                order: w.order,
            });
        }
    }

    let observed = if found.is_empty() {
        None
    } else {
        let all = |holds: PropertyPredicate| found.iter().all(|g| holds(&g.report));
        Some(if all(|r| r.is_cyclic) {
            EnforcingClass::Cyclic
        } else if all(|r| r.is_abelian) {
            EnforcingClass::StrictAbelian
        } else if all(|r| r.is_nilpotent) {
            EnforcingClass::StrictNilpotent
        } else if all(|r| r.is_supersolvable) {
            EnforcingClass::StrictSupersolvable
        } else if all(|r| r.is_solvable) {
            EnforcingClass::StrictSolvable
        } else {
            EnforcingClass::NonSolvable
        })
    };

    EnforcingRecord {
        n,
        observed,
        witnesses,
        scanned_order_bound: order_bound,
        groups_found: found.len(),
    }
}

/// Line format for one record: `n=.. class=.. bound=.. witnesses=..`.
pub fn record_text_line(r: &EnforcingRecord) -> String {
    let class = r.observed.map_or("vacuous", |c| c.as_str());
    let witnesses = r
        .witnesses
        .iter()
        .map(|w| format!("{}:{}", w.label, w.property))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "n={} class={} bound={} witnesses={}",
        r.n, class, r.scanned_order_bound, witnesses
    )
}

/// One JSON record per line with keys n, class, bound, witnesses.
pub fn record_json_line(r: &EnforcingRecord) -> String {
    let class = r.observed.map_or("vacuous", |c| c.as_str());
    let witnesses = r
        .witnesses
        .iter()
        .map(|w| format!("\"{}:{}\"", w.label, w.property))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "{{\"n\":{},\"class\":\"{}\",\"bound\":{},\"witnesses\":[{}]}}",
        r.n, class, r.scanned_order_bound, witnesses
    )
}

/// Outcome of checking one observed record against the reference chart.
///
/// A bounded scan is one-sided: a counterexample is conclusive, absence of
/// one is only evidence up to the bound. WEAKER marks records whose scan
/// produced no counterexample where the chart knows one exists; CONFLICT
/// marks an observed witness contradicting the chart and must never occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Weaker,
    Conflict,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Agree => "AGREE",
            Verdict::Weaker => "WEAKER",
            Verdict::Conflict => "CONFLICT",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Figure1Comparison {
    pub n: usize,
    pub figure: EnforcingClass,
    pub conjectured: bool,
    pub observed: Option<EnforcingClass>,
    pub verdict: Verdict,
}

fn rank(c: EnforcingClass) -> u8 {
    match c {
        EnforcingClass::Cyclic => 0,
        EnforcingClass::StrictAbelian => 1,
        EnforcingClass::StrictNilpotent => 2,
        EnforcingClass::StrictSupersolvable => 3,
        EnforcingClass::StrictSolvable => 4,
        EnforcingClass::NonSolvable => 5,
    }
}

fn verdict(figure: EnforcingClass, observed: Option<EnforcingClass>) -> Verdict {
    let Some(obs) = observed else {
        return Verdict::Weaker;
    };
    match figure {
        // red entries assert existence of a non-solvable group; a scan that
        // lacks it is merely weaker
        EnforcingClass::NonSolvable => {
            if obs == EnforcingClass::NonSolvable {
                Verdict::Agree
            } else {
                Verdict::Weaker
            }
        }
        // any non-cyclic group with this count would contradict the chart
        EnforcingClass::Cyclic => {
            if obs == EnforcingClass::Cyclic {
                Verdict::Agree
            } else {
                Verdict::Conflict
            }
        }
        // the chart prints strictly-abelian counts at the nilpotent level,
        // so an observed abelian-but-not-cyclic record agrees with it
        EnforcingClass::StrictNilpotent => match obs {
            EnforcingClass::StrictAbelian | EnforcingClass::StrictNilpotent => Verdict::Agree,
            EnforcingClass::Cyclic => Verdict::Weaker,
            _ => Verdict::Conflict,
        },
        _ => {
            if rank(obs) == rank(figure) {
                Verdict::Agree
            } else if rank(obs) < rank(figure) {
                Verdict::Weaker
            } else {
                Verdict::Conflict
            }
        }
    }
}

/// Compares observed records (for n <= 76) against the reference chart.
pub fn compare_figure1(records: &[EnforcingRecord]) -> Vec<Figure1Comparison> {
    let table = figure1_table();
    records
        .iter()
        .filter(|r| r.n >= 1 && r.n <= table.len())
        .map(|r| {
            let fig = table[r.n - 1];
            Figure1Comparison {
                n: r.n,
                figure: fig.class,
                conjectured: fig.conjectured,
                observed: r.observed,
                verdict: verdict(fig.class, r.observed),
            }
        })
        .collect()
}

/// Verification record for one multiple-propagation instance: a group W
/// failing a property with Sub(W) = n yields W × Z_{p^(k−1)} with subgroup
/// count n·k and the same failures, for any prime p not dividing |W|.
#[derive(Clone, Debug)]
pub struct PropagationRecord {
    pub base_label: String,
    pub base_sub: usize,
    pub k: usize,
    pub p: usize,
    pub product_label: String,
    pub product_order: usize,
    pub expected_sub: usize,
    pub product_sub: usize,
    /// Properties failed by the base group and by the product.
    pub preserved_failures: Vec<&'static str>,
    pub verified: bool,
}

pub fn multiple_propagation(
    witness: &FiniteGroup,
    k: usize,
    p: usize,
    cap: usize,
) -> Result<PropagationRecord> {
    if k == 0 || !props::is_prime(p) || witness.order() % p == 0 {
        return Err(Error::InvalidOrder {
            family: "propagation",
            order: p,
            reason: "needs k >= 1 and a prime p not dividing the witness order",
        });
    }
    let base_lat = all_subgroups(witness);
    let base_report = props::report(witness, &base_lat);

    let factor_order = p
        .checked_pow((k - 1) as u32)
        .ok_or(Error::ClosureExceedsCap { cap })?;
    let factor = construct::cyclic(factor_order, cap)?;
    let product = construct::direct_product(witness, &factor, cap)?;
    let product_lat = all_subgroups(&product);
    let product_report = props::report(&product, &product_lat);

    let mut preserved = Vec::new();
    let mut all_preserved = true;
    for (name, holds) in PROPERTIES {
        if !holds(&base_report) {
            if holds(&product_report) {
                all_preserved = false;
            } else {
                preserved.push(name);
            }
        }
    }
    let expected_sub = base_report.sub_count * k;
    Ok(PropagationRecord {
        base_label: witness.label().to_string(),
        base_sub: base_report.sub_count,
        k,
        p,
        product_label: product.label().to_string(),
        product_order: product.order(),
        expected_sub,
        product_sub: product_report.sub_count,
        preserved_failures: preserved,
        verified: all_preserved && product_report.sub_count == expected_sub,
    })
}

/// The seven external ids classified as having exactly 23 subgroups.
pub const SUB23_GIDS: [(usize, usize); 7] = [
    (16, 3),
    (16, 13),
    (81, 2),
    (81, 4),
    (81, 10),
    (256, 537),
    (256, 538),
];

#[derive(Clone, Debug)]
pub struct Sub23Check {
    pub label: String,
    pub found: bool,
    pub sub: Option<usize>,
    pub nilpotent: bool,
    pub prime_power_order: bool,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct Sub23Outcome {
    pub checks: Vec<Sub23Check>,
    /// Scanned groups with 23 subgroups that are not among the seven ids.
    pub unexpected: Vec<String>,
    pub ok: bool,
}

/// Checks each of the seven named groups for Sub = 23, nilpotency and
/// prime-power order, and that no other scanned group shares the count.
/// Identity matching is by catalog label, not isomorphism testing.
pub fn verify_sub23(scanned: &[ScannedGroup]) -> Sub23Outcome {
    let mut checks = Vec::new();
    for (order, id) in SUB23_GIDS {
        let label = format!("gid({order},{id})");
        let hit = scanned.iter().find(|g| g.order == order && g.id == id);
        let check = match hit {
            Some(g) => {
                let prime_power = props::prime_divisors(g.order).len() == 1;
                Sub23Check {
                    label,
                    found: true,
                    sub: Some(g.report.sub_count),
                    nilpotent: g.report.is_nilpotent,
                    prime_power_order: prime_power,
                    ok: g.report.sub_count == 23 && g.report.is_nilpotent && prime_power,
                }
            }
            None => Sub23Check {
                label,
                found: false,
                sub: None,
                nilpotent: false,
                prime_power_order: false,
                ok: false,
            },
        };
        checks.push(check);
    }
    let unexpected: Vec<String> = scanned
        .iter()
        .filter(|g| g.report.sub_count == 23 && !SUB23_GIDS.contains(&(g.order, g.id)))
        .map(|g| g.label.clone())
        .collect();
    let ok = checks.iter().all(|c| c.ok) && unexpected.is_empty();
    Sub23Outcome {
        checks,
        unexpected,
        ok,
    }
}
