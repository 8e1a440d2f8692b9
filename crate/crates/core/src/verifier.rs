//! Per-order verification that the fan maximizes the spectral radius among
//! maximal outerplanar graphs, plus the structural checks run on each winner.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, components_within, Bits, SmallGraph};
use crate::outerplanarity::recover_triangulation;
use crate::spectral::{compare_enclosed, perron_enclosure, SpectralEnclosure, DEFAULT_MAX_ITER};
use crate::triangulation::{enumerate_classes_counted, Triangulation, MAX_ENUMERATION};

/// Enclosure width used to shortlist candidates for the maximum.
pub const COARSE_TOL: f64 = 1e-8;
/// Classes whose coarse upper bound is this close to the best one are refined.
pub const SHORTLIST_WINDOW: f64 = 1e-6;
/// Widest enclosure accepted for shortlisted classes.
pub const REFINED_TOL: f64 = 1e-12;
/// Perron entries within this distance of the maximum count as tied.
pub const PERRON_TIE: f64 = 1e-9;
const SIGNIFICANT_DIGITS: usize = 12;

pub const MAXIMALITY_NOTE: &str = "Only maximal outerplanar graphs are scanned. Every outerplanar graph \
on n >= 3 vertices is a spanning subgraph of a maximal one, and adding an edge to a connected graph \
strictly increases its spectral radius (Perron-Frobenius), so the maximum over all outerplanar graphs \
of order n is attained by a maximal one.";

/// A spectral-radius interval rounded outward to 12 significant digits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

impl Bounds {
    pub fn from_enclosure(e: &SpectralEnclosure) -> Self {
        Bounds {
            lower: round_down(e.certified_lower()),
            upper: round_up(e.certified_upper()),
        }
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

fn round_directed(x: f64, up: bool) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let text = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = text.parse().expect("formatted float parses");
    if (up && r >= x) || (!up && r <= x) {
        return r;
    }
    let (mantissa, exp) = text.split_once('e').expect("scientific notation");
    let digits: i64 = mantissa.replace('.', "").parse().expect("integer mantissa");
    let exp: i32 = exp.parse().expect("integer exponent");
    let step = if up { 1 } else { -1 };
    format!("{}e{}", digits + step, exp - (SIGNIFICANT_DIGITS as i32 - 1))
        .parse()
        .expect("adjusted float parses")
}

/// Largest 12-significant-digit decimal `<= x`.
pub fn round_down(x: f64) -> f64 {
    round_directed(x, false)
}

/// Smallest 12-significant-digit decimal `>= x`.
pub fn round_up(x: f64) -> f64 {
    round_directed(x, true)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NReport {
    pub n: usize,
    pub raw_count: u64,
    pub class_count: u64,
    /// Native form `n:i-j,...` of the maximizing class's canonical representative.
    pub extremal_code: String,
    pub lambda_extremal: Bounds,
    pub lambda_fan: Bounds,
    pub conjecture_holds: bool,
    /// Certified lower bound on `λ(top) - λ(runner-up)`; `None` when there is only one class.
    pub margin: Option<f64>,
    pub runtime_ms: u64,
}

fn enclose(g: &SmallGraph, tol: f64) -> Result<SpectralEnclosure> {
    match perron_enclosure(g, tol, DEFAULT_MAX_ITER) {
        Err(Error::NoConvergence { best, .. }) => Ok(*best),
        other => other,
    }
}

/// Every class of order `n` paired with its enclosure, in canonical-code order.
pub fn class_enclosures(n: usize, tol: f64) -> Result<Vec<(Triangulation, SpectralEnclosure)>> {
    let classes = enumerate_classes_counted(n)?.classes;
    classes
        .into_par_iter()
        .map(|t| enclose(&t.to_graph(), tol).map(|e| (t, e)))
        .collect()
}

fn check_order(n: usize) -> Result<()> {
    if !(2..=MAX_ENUMERATION).contains(&n) {
        return Err(Error::OrderOutOfRange {
            what: "verify_n",
            order: n,
            min: 2,
            max: MAX_ENUMERATION,
        });
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    Ok(())
}

struct Candidate {
    triangulation: Triangulation,
    graph: SmallGraph,
    enclosure: SpectralEnclosure,
}

/// Finds the class of order `n` with the largest spectral radius and compares it with the fan.
///
/// Coarse enclosures shortlist every class that could still be the maximum;
/// the shortlist is refined to `min(tol, 1e-12)` and ranked by certified
/// comparison, falling back to exact arithmetic when enclosures overlap.
pub fn verify_n(n: usize, tol: f64) -> Result<NReport> {
    check_order(n)?;
    check_tol(tol)?;
    let start = Instant::now();
    if n == 2 {
        let k2 = crate::graph::fan_graph(2)?;
        let e = Bounds::from_enclosure(&enclose(&k2, tol)?);
        return Ok(NReport {
            n,
            raw_count: 1,
            class_count: 1,
            extremal_code: "2:".to_string(),
            lambda_extremal: e,
            lambda_fan: e,
            conjecture_holds: true,
            margin: None,
            runtime_ms: start.elapsed().as_millis() as u64,
        });
    }

    let enumeration = enumerate_classes_counted(n)?;
    let fan = Triangulation::fan(n)?.canonical_code().representative();
    let coarse: Vec<SpectralEnclosure> = enumeration
        .classes
        .par_iter()
        .map(|t| enclose(&t.to_graph(), COARSE_TOL))
        .collect::<Result<_>>()?;

    let best_upper = coarse
        .iter()
        .map(|e| e.certified_upper())
        .fold(f64::NEG_INFINITY, f64::max);
    let refine_tol = tol.min(REFINED_TOL);
    let shortlisted: Vec<usize> = (0..coarse.len())
        .filter(|&i| coarse[i].certified_upper() >= best_upper - SHORTLIST_WINDOW)
        .collect();
    let shortlist: Vec<Candidate> = shortlisted
        .par_iter()
        .map(|&i| {
            let triangulation = enumeration.classes[i].clone();
            let graph = triangulation.to_graph();
            let enclosure = enclose(&graph, refine_tol)?;
            Ok(Candidate {
                triangulation,
                graph,
                enclosure,
            })
        })
        .collect::<Result<_>>()?;

    let mut top = 0;
    for i in 1..shortlist.len() {
        let (a, b) = (&shortlist[i], &shortlist[top]);
        let cmp = compare_enclosed(&a.graph, &a.enclosure, &b.graph, &b.enclosure, 0.0)?;
        match cmp.ordering {
            Ordering::Greater => top = i,
            Ordering::Equal => return Err(Error::UnresolvedTie(n)),
            Ordering::Less => {}
        }
    }
    let winner = &shortlist[top];

    let mut margin: Option<f64> = None;
    let mut tighten = |gap: f64| margin = Some(margin.map_or(gap, |m: f64| m.min(gap)));
    for (i, c) in shortlist.iter().enumerate() {
        if i == top {
            continue;
        }
        let float_gap = winner.enclosure.certified_lower() - c.enclosure.certified_upper();
        if float_gap > 0.0 {
            tighten(float_gap);
        } else {
            let exact = crate::spectral::exact_compare(&winner.graph, &c.graph)?;
            match (exact.ordering, exact.gap) {
                (Ordering::Greater, Some(gap)) => tighten(gap),
                _ => return Err(Error::UnresolvedTie(n)),
            }
        }
    }
    let winner_lower = winner.enclosure.certified_lower();
    for (i, e) in coarse.iter().enumerate() {
        if shortlisted.binary_search(&i).is_err() {
            tighten(winner_lower - e.certified_upper());
        }
    }

    let fan_enclosure = match shortlist.iter().find(|c| c.triangulation == fan) {
        Some(c) => c.enclosure.clone(),
        None => enclose(&fan.to_graph(), refine_tol)?,
    };

    Ok(NReport {
        n,
        raw_count: enumeration.raw_count,
        class_count: enumeration.classes.len() as u64,
        extremal_code: winner.triangulation.to_string(),
        lambda_extremal: Bounds::from_enclosure(&winner.enclosure),
        lambda_fan: Bounds::from_enclosure(&fan_enclosure),
        conjecture_holds: winner.triangulation == fan,
        margin: margin.map(round_down),
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn verify_range(lo: usize, hi: usize, tol: f64) -> Result<Vec<NReport>> {
    if !(2 <= lo && lo <= hi && hi <= MAX_ENUMERATION) {
        return Err(Error::InvalidRange(format!(
            "{lo}..{hi} must satisfy 2 <= lo <= hi <= {MAX_ENUMERATION}"
        )));
    }
    (lo..=hi).map(|n| verify_n(n, tol)).collect()
}

/// Two-line table of `S(n)` in the layout of the published class counts.
pub fn table1_summary(reports: &[NReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.class_count.to_string().len().max(r.n.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut ns = String::from("n    ");
    let mut counts = String::from("S(n) ");
    for r in reports {
        ns.push_str(&format!(" {:>width$}", r.n));
        counts.push_str(&format!(" {:>width$}", r.class_count));
    }
    format!("{ns}\n{counts}\n")
}

/// The vertex `u` carrying the largest Perron entry and the partition of
/// the remaining vertices into its neighborhood `A` and the rest `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalStructure {
    pub u: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Members of `A` with exactly one neighbor inside `A`.
    pub s: Vec<usize>,
    pub components_of_b: Vec<Vec<usize>>,
    pub d_u: usize,
    a_edges: usize,
    a_max_degree: usize,
    a_components: usize,
}

impl ExtremalStructure {
    /// (a): `G[A]` is a disjoint union of paths.
    pub fn a_is_linear_forest(&self) -> bool {
        self.a_max_degree <= 2 && self.a_edges + self.a_components == self.a.len()
    }

    /// (b): `G[A]` is a single induced path.
    pub fn a_is_induced_path(&self) -> bool {
        self.a_is_linear_forest() && self.a_components == 1
    }

    /// (c): every vertex other than `u` is adjacent to `u`.
    pub fn b_is_empty(&self) -> bool {
        self.b.is_empty()
    }
}

fn members(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

pub fn analyze_extremal(g: &SmallGraph) -> Result<ExtremalStructure> {
    recover_triangulation(g)?;
    let e = enclose(g, REFINED_TOL)?;
    let top = e.vector.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let u = e
        .vector
        .iter()
        .position(|&x| x >= top - PERRON_TIE)
        .expect("nonempty vector");
    let a = g.neighbors(u);
    let b = g.all_vertices() & !a & !bit(u);
    let s = Bits(a)
        .filter(|&v| (g.neighbors(v) & a).count_ones() == 1)
        .fold(0, |m, v| m | bit(v));
    let a_edges = Bits(a)
        .map(|v| (g.neighbors(v) & a).count_ones() as usize)
        .sum::<usize>()
        / 2;
    let a_max_degree = Bits(a)
        .map(|v| (g.neighbors(v) & a).count_ones() as usize)
        .max()
        .unwrap_or(0);
    Ok(ExtremalStructure {
        u,
        a: members(a),
        b: members(b),
        s: members(s),
        components_of_b: components_within(g, b).into_iter().map(members).collect(),
        d_u: g.degree(u),
        a_edges,
        a_max_degree,
        a_components: components_within(g, a).len(),
    })
}

/// Report serialization formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Serialize, Deserialize)]
struct ReportFile {
    note: String,
    reports: Vec<NReport>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    raw_count: u64,
    class_count: u64,
    extremal_code: &'a str,
    lambda_extremal_lower: f64,
    lambda_extremal_upper: f64,
    lambda_fan_lower: f64,
    lambda_fan_upper: f64,
    conjecture_holds: bool,
    margin: Option<f64>,
    runtime_ms: u64,
}

pub fn emit_reports<W: Write>(reports: &[NReport], format: ReportFormat, mut out: W) -> Result<()> {
    match format {
        ReportFormat::Json => {
            let file = ReportFile {
                note: MAXIMALITY_NOTE.to_string(),
                reports: reports.to_vec(),
            };
            serde_json::to_writer_pretty(&mut out, &file)?;
            out.write_all(b"\n")?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(CsvRow {
                    n: r.n,
                    raw_count: r.raw_count,
                    class_count: r.class_count,
                    extremal_code: &r.extremal_code,
                    lambda_extremal_lower: r.lambda_extremal.lower,
                    lambda_extremal_upper: r.lambda_extremal.upper,
                    lambda_fan_lower: r.lambda_fan.lower,
                    lambda_fan_upper: r.lambda_fan.upper,
                    conjecture_holds: r.conjecture_holds,
                    margin: r.margin,
                    runtime_ms: r.runtime_ms,
                })
                .map_err(csv_error)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    }
}

/// Parses the JSON written by [`emit_reports`].
pub fn read_reports_json(text: &str) -> Result<Vec<NReport>> {
    Ok(serde_json::from_str::<ReportFile>(text)?.reports)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaTarget {
    Extremal,
    Fan,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaCheck {
    pub n: usize,
    pub which: LambdaTarget,
    pub value: f64,
}

/// Reference values every verification run is checked against.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectations {
    pub class_counts: BTreeMap<usize, u64>,
    pub class_count_bounds: BTreeMap<usize, u64>,
    pub exceptions: Vec<usize>,
    pub lambda_checks: Vec<LambdaCheck>,
    pub lambda_tolerance: f64,
}

const BUILTIN_EXPECTATIONS: &str = include_str!("expectations.json");

impl Expectations {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_EXPECTATIONS).expect("bundled expectations parse")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Human-readable descriptions of every expectation the reports contradict.
    pub fn violations(&self, reports: &[NReport]) -> Vec<String> {
        let mut out = Vec::new();
        for r in reports {
            if let Some(&want) = self.class_counts.get(&r.n) {
                if r.class_count != want {
                    out.push(format!("n = {}: S(n) = {}, expected {want}", r.n, r.class_count));
                }
            }
            if let Some(&bound) = self.class_count_bounds.get(&r.n) {
                if r.class_count > bound {
                    out.push(format!("n = {}: S(n) = {} exceeds bound {bound}", r.n, r.class_count));
                }
            }
            let expected = !self.exceptions.contains(&r.n);
            if r.conjecture_holds != expected {
                out.push(format!(
                    "n = {}: fan extremal = {}, expected {expected} (winner {})",
                    r.n, r.conjecture_holds, r.extremal_code
                ));
            }
            for c in self.lambda_checks.iter().filter(|c| c.n == r.n) {
                let bounds = match c.which {
                    LambdaTarget::Extremal => r.lambda_extremal,
                    LambdaTarget::Fan => r.lambda_fan,
                };
                let tol = self.lambda_tolerance;
                if !(bounds.lower <= c.value + tol && c.value - tol <= bounds.upper) {
                    out.push(format!(
                        "n = {}: λ {:?} in [{}, {}], expected {} ± {tol}",
                        r.n, c.which, bounds.lower, bounds.upper, c.value
                    ));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fan_graph;
    use crate::spectral::exact_compare;

    fn g1() -> SmallGraph {
        Triangulation::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap().to_graph()
    }

    #[test]
    fn directed_rounding() {
        for &x in &[
            1.0,
            1.0 + 5f64.sqrt(),
            0.1,
            2.0 / 3.0,
            1e-20,
            123_456_789.123_456_78,
            -2.5 / 3.0,
        ] {
            let (lo, hi) = (round_down(x), round_up(x));
            assert!(lo <= x && x <= hi, "{x}: {lo} {hi}");
            assert!(hi - lo <= 2e-11 * x.abs());
            assert!(format!("{lo:e}").len() <= 18 && format!("{hi:e}").len() <= 18);
        }
        assert_eq!(round_down(0.25), 0.25);
        assert_eq!(round_up(4.0), 4.0);
    }

    #[test]
    fn small_orders() {
        let two = verify_n(2, 1e-10).unwrap();
        assert!(two.conjecture_holds && two.margin.is_none());
        assert!(two.lambda_fan.contains(1.0));
        let three = verify_n(3, 1e-10).unwrap();
        assert_eq!((three.raw_count, three.class_count), (1, 1));
        assert!(three.conjecture_holds && three.margin.is_none());
        assert!(three.lambda_extremal.contains(2.0));
        assert!(verify_n(1, 1e-10).is_err());
        assert!(verify_n(21, 1e-10).is_err());
        assert!(verify_n(5, 0.0).is_err());
        assert!(verify_range(7, 6, 1e-10).is_err());
    }

    #[test]
    fn hexagon_exception() {
        let r = verify_n(6, 1e-10).unwrap();
        assert!(!r.conjecture_holds);
        assert_eq!(r.class_count, 3);
        assert_eq!(r.raw_count, 14);
        let winner: Triangulation = r.extremal_code.parse().unwrap();
        assert_eq!(
            winner.canonical_code(),
            Triangulation::new(6, [(0, 2), (2, 4), (0, 4)])
                .unwrap()
                .canonical_code()
        );
        assert!((r.lambda_extremal.midpoint() - 3.2361).abs() <= 5e-4);
        assert!((r.lambda_fan.midpoint() - 3.2227).abs() <= 5e-4);
        assert!(r.lambda_extremal.contains(1.0 + 5f64.sqrt()));
        assert!(r.margin.unwrap() > 0.0);
        assert_eq!(
            exact_compare(&fan_graph(6).unwrap(), &winner.to_graph())
                .unwrap()
                .ordering,
            Ordering::Less
        );
        assert!(Expectations::builtin().violations(&[r]).is_empty());
    }

    #[test]
    fn fan_wins_up_to_twelve() {
        let reports = verify_range(2, 12, 1e-10).unwrap();
        for r in &reports {
            assert_eq!(r.conjecture_holds, r.n != 6, "n = {}", r.n);
            if r.class_count > 1 {
                assert!(r.margin.unwrap() > 0.0);
            } else {
                assert!(r.margin.is_none());
            }
            assert!(r.lambda_extremal.upper - r.lambda_extremal.lower <= 1e-10);
        }
        assert!(Expectations::builtin().violations(&reports).is_empty());
        let summary = table1_summary(&reports[4..]);
        assert!(summary.ends_with("S(n)    3   4  12  27  82 228 733\n"), "{summary}");
    }

    #[test]
    fn structure_of_winners() {
        let fan = analyze_extremal(&fan_graph(10).unwrap()).unwrap();
        assert_eq!(fan.u, 0);
        assert_eq!(fan.d_u, 9);
        assert!(fan.b_is_empty() && fan.a_is_induced_path() && fan.a_is_linear_forest());
        assert_eq!(fan.s, vec![1, 9]);

        let hex = analyze_extremal(&g1()).unwrap();
        assert_eq!(hex.u, 0);
        assert_eq!(hex.d_u, 4);
        assert_eq!(hex.a, vec![1, 2, 4, 5]);
        assert_eq!(hex.b, vec![3]);
        assert_eq!(hex.components_of_b, vec![vec![3]]);
        assert!(g1().neighbors(3) & !(bit(2) | bit(4)) == 0);
        assert!(hex.a_is_induced_path() && !hex.b_is_empty());

        assert_eq!(analyze_extremal(&fan_graph(17).unwrap()).unwrap().d_u, 16);
        assert!(analyze_extremal(&crate::graph::wheel_graph(6).unwrap()).is_err());
    }

    #[test]
    fn structure_partitions_vertices() {
        for t in crate::triangulation::enumerate_classes(9).unwrap() {
            let g = t.to_graph();
            let s = analyze_extremal(&g).unwrap();
            let mut all: Vec<usize> = s.a.iter().chain(&s.b).copied().chain([s.u]).collect();
            all.sort_unstable();
            assert_eq!(all, (0..9).collect::<Vec<_>>());
            assert!(s.s.iter().all(|v| s.a.contains(v)));
            assert_eq!(s.components_of_b.iter().map(Vec::len).sum::<usize>(), s.b.len());
        }
    }

    #[test]
    fn json_roundtrip_and_csv_rows() {
        let reports = verify_range(6, 8, 1e-10).unwrap();
        let mut json = Vec::new();
        emit_reports(&reports, ReportFormat::Json, &mut json).unwrap();
        let text = String::from_utf8(json).unwrap();
        assert!(text.contains("\"lambda_extremal\": {\n"));
        assert!(text.contains(MAXIMALITY_NOTE));
        assert_eq!(read_reports_json(&text).unwrap(), reports);

        let mut csv = Vec::new();
        emit_reports(&reports, ReportFormat::Csv, &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("n,raw_count,class_count,extremal_code,"));
        assert!(lines[1].starts_with("6,14,3,\"6:"));
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| {
                let mut reports = verify_range(6, 11, 1e-10).unwrap();
                for r in &mut reports {
                    r.runtime_ms = 0;
                }
                let mut out = Vec::new();
                emit_reports(&reports, ReportFormat::Json, &mut out).unwrap();
                out
            })
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn corrupted_expectations_are_reported() {
        let reports = verify_range(6, 7, 1e-10).unwrap();
        let mut bad = Expectations::builtin();
        bad.class_counts.insert(7, 5);
        bad.exceptions.clear();
        let v = bad.violations(&reports);
        assert_eq!(v.len(), 2, "{v:?}");
    }
}
