//! Convex hulls and the (strong) hull property.
//!
//! Everything here works over an [`InversionTable`]: a finite list of
//! elements, each carrying its inversion set as a 64-bit mask. The hull of
//! `x_1, ..., x_d` is the set of elements `w` with
//! `AND mask(x_i) ⊆ mask(w) ⊆ OR mask(x_i)`.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Elements with inversion masks.
pub trait InversionTable: Sync {
    fn len(&self) -> usize;
    fn mask(&self, idx: usize) -> u64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Human-readable name of an element, used in reports.
    fn label(&self, idx: usize) -> String {
        idx.to_string()
    }
}

/// Convex hull `W(D, A)` of a list of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hull {
    pub generators: Vec<usize>,
    /// Intersection of the generators' inversion sets.
    pub lower: u64,
    /// Union of the generators' inversion sets.
    pub upper: u64,
    pub members: Vec<usize>,
}

impl Hull {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }
}

#[inline]
fn between(mask: u64, lower: u64, upper: u64) -> bool {
    mask & lower == lower && mask & !upper == 0
}

fn bounds<T: InversionTable + ?Sized>(table: &T, xs: &[usize]) -> Result<(u64, u64)> {
    if xs.is_empty() {
        return Err(Error::Empty("hull of an empty list"));
    }
    let mut lower = u64::MAX;
    let mut upper = 0;
    for &x in xs {
        if x >= table.len() {
            return Err(Error::ElementOutOfRange(x));
        }
        lower &= table.mask(x);
        upper |= table.mask(x);
    }
    Ok((lower, upper))
}

/// Members of `W(D, A)`, in table order.
pub fn members_between<T: InversionTable + ?Sized>(table: &T, lower: u64, upper: u64) -> Vec<usize> {
    (0..table.len()).filter(|&w| between(table.mask(w), lower, upper)).collect()
}

pub fn count_between<T: InversionTable + ?Sized>(table: &T, lower: u64, upper: u64) -> usize {
    (0..table.len()).filter(|&w| between(table.mask(w), lower, upper)).count()
}

pub fn hull<T: InversionTable + ?Sized>(table: &T, xs: &[usize]) -> Result<Hull> {
    let (lower, upper) = bounds(table, xs)?;
    Ok(Hull {
        generators: xs.to_vec(),
        lower,
        upper,
        members: members_between(table, lower, upper),
    })
}

/// Size of the hull without materializing it.
pub fn hull_size<T: InversionTable + ?Sized>(table: &T, xs: &[usize]) -> Result<usize> {
    let (lower, upper) = bounds(table, xs)?;
    Ok(count_between(table, lower, upper))
}

/// Tests whether `set` equals `W(D, A)` for its own `D` and `A`; on success
/// returns that pair.
pub fn is_convex<T: InversionTable + ?Sized>(table: &T, set: &[usize]) -> Result<Option<(u64, u64)>> {
    let (lower, upper) = bounds(table, set)?;
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let members = members_between(table, lower, upper);
    Ok((members == sorted).then_some((lower, upper)))
}

/// How triples are enumerated by the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// The table is a whole group with the identity at index 0 (mask 0).
    /// Left translation moves the middle point of every triple to the
    /// identity, so it suffices to sweep pairs `(a, b)` with `a <= b`.
    Group,
    /// No symmetry assumed: every ordered triple is checked.
    AllTriples,
}

/// Which inequality a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    /// `|conv(u,v)| |conv(v,w)| >= |conv(u,w)|`.
    Hull,
    /// `|conv(u,v)| |conv(v,w)| >= |conv(u,v,w)|`.
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub u: String,
    pub v: String,
    pub w: String,
    /// `|conv(u,v)|`, `|conv(v,w)|` and the right-hand side hull size.
    pub sizes: [usize; 3],
    #[serde(skip)]
    pub indices: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullReport {
    pub scope: String,
    pub property: Property,
    pub pairs_checked: u64,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl HullReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks the strong hull property, returning the first violation in
/// canonical order.
pub fn check_strong_hull<T: InversionTable + ?Sized>(table: &T, scope: Scope, description: &str) -> HullReport {
    sweep(table, scope, Property::Strong, description)
}

/// Checks the hull property (the triangle inequality for `log |conv|`).
pub fn check_hull_property<T: InversionTable + ?Sized>(table: &T, scope: Scope, description: &str) -> HullReport {
    sweep(table, scope, Property::Hull, description)
}

pub fn sweep<T: InversionTable + ?Sized>(table: &T, scope: Scope, property: Property, description: &str) -> HullReport {
    let start = Instant::now();
    let (pairs_checked, found) = match scope {
        Scope::Group => sweep_group(table, property),
        Scope::AllTriples => sweep_triples(table, property),
    };
    let witness = found.map(|(idx, sizes)| Witness {
        u: table.label(idx[0]),
        v: table.label(idx[1]),
        w: table.label(idx[2]),
        sizes,
        indices: idx,
    });
    HullReport {
        scope: description.to_string(),
        property,
        pairs_checked,
        verdict: if witness.is_some() { Verdict::Violated } else { Verdict::Holds },
        witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

type Found = Option<([usize; 3], [usize; 3])>;

fn sweep_group<T: InversionTable + ?Sized>(table: &T, property: Property) -> (u64, Found) {
    let n = table.len();
    assert!(n > 0 && table.mask(0) == 0, "group scope needs the identity at index 0");
    let interval: Vec<usize> = (0..n).into_par_iter().map(|w| count_between(table, 0, table.mask(w))).collect();
    // triple (a, id, b): |[id, a]| |[id, b]| >= |conv(a, id, b)| or |conv(a, b)|
    let found = (0..n)
        .into_par_iter()
        .filter_map(|a| {
            let ma = table.mask(a);
            (a..n).find_map(|b| {
                let mb = table.mask(b);
                let lower = match property {
                    Property::Strong => 0,
                    Property::Hull => ma & mb,
                };
                let rhs = count_between(table, lower, ma | mb);
                let lhs = interval[a] * interval[b];
                (lhs < rhs).then_some(([a, 0, b], [interval[a], interval[b], rhs]))
            })
        })
        .min_by_key(|(idx, _)| *idx);
    let pairs = (n as u64) * (n as u64 + 1) / 2;
    (pairs, found.map(|(idx, sizes)| (idx, sizes)))
}

fn sweep_triples<T: InversionTable + ?Sized>(table: &T, property: Property) -> (u64, Found) {
    let n = table.len();
    let pair: Vec<usize> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (u, v) = (k / n, k % n);
            let (mu, mv) = (table.mask(u), table.mask(v));
            count_between(table, mu & mv, mu | mv)
        })
        .collect();
    let found = (0..n)
        .into_par_iter()
        .filter_map(|u| {
            let mu = table.mask(u);
            (0..n).find_map(|v| {
                let mv = table.mask(v);
                (0..n).find_map(|w| {
                    let lhs = pair[u * n + v] * pair[v * n + w];
                    let rhs = match property {
                        Property::Hull => pair[u * n + w],
                        Property::Strong => {
                            let mw = table.mask(w);
                            count_between(table, mu & mv & mw, mu | mv | mw)
                        }
                    };
                    (lhs < rhs).then_some(([u, v, w], [pair[u * n + v], pair[v * n + w], rhs]))
                })
            })
        })
        .min_by_key(|(idx, _)| *idx);
    ((n as u64) * (n as u64), found)
}

/// A value of `log |conv(u, v)|`, flagged when the hull property has not
/// been verified for the underlying space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricValue {
    pub value: f64,
    pub verified: bool,
}

/// `log |conv(-, -)|` over an inversion table.
pub struct HullMetric<'a, T: InversionTable + ?Sized> {
    table: &'a T,
    verified: bool,
}

impl<'a, T: InversionTable + ?Sized> HullMetric<'a, T> {
    pub fn new(table: &'a T) -> Self {
        HullMetric { table, verified: false }
    }

    /// Marks the metric as verified when the report shows the (strong) hull
    /// property holding.
    pub fn with_report(mut self, report: &HullReport) -> Self {
        self.verified = report.holds();
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<MetricValue> {
        let size = hull_size(self.table, &[u, v])?;
        Ok(MetricValue {
            value: (size as f64).ln(),
            verified: self.verified,
        })
    }
}

/// `log |conv(u, v)|` without verification bookkeeping.
pub fn log_hull_metric<T: InversionTable + ?Sized>(table: &T, u: usize, v: usize) -> Result<MetricValue> {
    HullMetric::new(table).distance(u, v)
}

/// A plain list of masks, handy for tests and ad-hoc spaces.
#[derive(Debug, Clone, Default)]
pub struct MaskList(pub Vec<u64>);

impl InversionTable for MaskList {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn mask(&self, idx: usize) -> u64 {
        self.0[idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Boolean lattice on two atoms: the Cayley graph of (Z/2)^2.
    fn square() -> MaskList {
        MaskList(vec![0b00, 0b01, 0b10, 0b11])
    }

    #[test]
    fn hull_of_singleton_and_extremes() {
        let t = square();
        assert_eq!(hull(&t, &[2]).unwrap().members, vec![2]);
        assert_eq!(hull(&t, &[0, 3]).unwrap().members, vec![0, 1, 2, 3]);
        assert_eq!(hull(&t, &[1, 3]).unwrap().members, vec![1, 3]);
        assert!(matches!(hull(&t, &[]), Err(Error::Empty(_))));
        assert!(hull(&t, &[7]).is_err());
    }

    #[test]
    fn convexity_of_pairs() {
        let t = square();
        assert_eq!(is_convex(&t, &[0, 1]).unwrap(), Some((0, 0b01)));
        assert_eq!(is_convex(&t, &[1, 2]).unwrap(), None);
        assert!(is_convex(&t, &[]).is_err());
    }

    #[test]
    fn group_and_triple_sweeps_agree_on_square() {
        let t = square();
        for property in [Property::Hull, Property::Strong] {
            assert!(sweep(&t, Scope::Group, property, "sq").holds());
            assert!(sweep(&t, Scope::AllTriples, property, "sq").holds());
        }
    }

    #[test]
    fn metric_values() {
        let t = square();
        assert_eq!(log_hull_metric(&t, 1, 1).unwrap().value, 0.0);
        assert!((log_hull_metric(&t, 0, 1).unwrap().value - 2f64.ln()).abs() < 1e-12);
        let report = check_hull_property(&t, Scope::Group, "sq");
        let metric = HullMetric::new(&t).with_report(&report);
        assert!(metric.is_verified());
        assert!(!log_hull_metric(&t, 0, 3).unwrap().verified);
    }

    #[test]
    fn violation_reported_with_witness() {
        // |conv(0,1)| = |conv(1,2)| = 2 but |conv(0,2)| = 6
        let t = MaskList(vec![0b0011, 0b0111, 0b1100, 0b0000, 0b1000, 0b0001]);
        let report = check_hull_property(&t, Scope::AllTriples, "bad");
        assert_eq!(report.verdict, Verdict::Violated);
        let w = report.witness.unwrap();
        assert!(w.sizes[0] * w.sizes[1] < w.sizes[2]);
    }
}
