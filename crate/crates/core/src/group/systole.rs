//! Systoles of the surfaces H / Gamma(I).
//!
//! A hyperbolic x in Gamma(I) with trace t at the natural place gives a
//! closed geodesic of length 2 arccosh(|t|/2), so the systole is read off the
//! smallest |t| over x = +-1 mod I Q_Hur, x != +-1. Two engines find it:
//!
//! * a breadth-first search over words in g2, g3, g3^-1 (a lower window);
//! * an enumeration of the rank-12 lattice coset 1 + I Q_Hur under a
//!   positive definite form, which is exhaustive for |t| up to a bound.
//!
//! For the second engine let p0 be the fixed point of g7. Every point of the
//! hyperbolic plane is within R of a translate of p0, where cosh R =
//! cot(pi/7) / sqrt 3 is the longest side of the (2,3,7) triangle, and
//! Gamma(I) is normal, so each conjugacy class has a representative whose
//! axis passes within R of p0. For such x, 2 cosh d(p0, x p0) is at most
//! 2 + cosh^2 R (t^2 - 4), while the reduced norm at the two other places is
//! equal to 1. The form Q0 / B0 + nrd_1 + nrd_2 is therefore at most 3 on every
//! representative we need.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::half::{eval_f64, CongruenceTester, HalfQuat};
use super::lattice::{coordinates, enumerate, lll};
use super::quotient::genus_of;
use super::word::{GroupWord, Letter};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::field::{FieldElem, Place, ETA_F64};
use crate::group::generators::g7;
use crate::ideal::IdealK;
use crate::order::Order;
use crate::real::{Precision, Real};

/// Relative slack on every floating-point window.
pub const WINDOW_MARGIN: f64 = 1e-9;
/// Per-task node budget of the lattice enumeration.
pub const NODE_LIMIT: u64 = 2_000_000_000;
/// Word length at which the BFS engine reaches the systole of every level in the test suite.
pub const DEFAULT_MAX_WORD_LENGTH: u32 = 30;

type M2 = [f64; 4];

fn m2_mul(a: &M2, b: &M2) -> M2 {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

/// The disc of radius R about the fixed point of g7.
#[derive(Debug, Clone, Copy)]
pub struct CenterDisc {
    a: M2,
    a_inv: M2,
    cosh_r: f64,
}

impl Default for CenterDisc {
    fn default() -> Self {
        Self::new()
    }
}

impl CenterDisc {
    pub fn new() -> Self {
        let [al, _, ga, de] = HalfQuat::from_quat(&g7())
            .expect("g7 is Hurwitz")
            .matrix_f64();
        let t = al + de;
        let x = (al - de) / (2.0 * ga);
        let y = libm::sqrt(4.0 - t * t) / (2.0 * libm::fabs(ga));
        let s = libm::sqrt(y);
        let pi = core::f64::consts::PI;
        let cosh_r = libm::cos(pi / 7.0) / libm::sin(pi / 7.0) / libm::sqrt(3.0);
        CenterDisc {
            a: [s, x / s, 0.0, 1.0 / s],
            a_inv: [1.0 / s, -x / s, 0.0, s],
            cosh_r,
        }
    }

    /// The fixed point of g7 in the upper half plane, as (re, im).
    pub fn center(&self) -> (f64, f64) {
        let s = self.a[0];
        (self.a[1] * s, s * s)
    }

    pub fn cosh_radius(&self) -> f64 {
        self.cosh_r
    }

    fn conjugated(&self, x: &HalfQuat) -> M2 {
        m2_mul(&m2_mul(&self.a_inv, &x.matrix_f64()), &self.a)
    }

    /// 2 cosh d(p0, x p0) for norm-one x.
    pub fn displacement(&self, x: &HalfQuat) -> f64 {
        self.conjugated(x).iter().map(|v| v * v).sum()
    }

    /// Largest displacement of an element of trace at most `trace` whose
    /// axis or fixed point is within R of p0.
    pub fn displacement_bound(&self, trace: f64) -> f64 {
        let c2 = self.cosh_r * self.cosh_r;
        let hyperbolic = 2.0 + c2 * (trace * trace - 4.0);
        let elliptic = 2.0 + 4.0 * (c2 - 1.0);
        hyperbolic.max(elliptic) * (1.0 + WINDOW_MARGIN)
    }

    /// Does the axis of the hyperbolic `x` pass within R of p0?
    pub fn axis_near_center(&self, x: &HalfQuat) -> bool {
        let t = eval_f64(&x.trace(), 0);
        let c2 = self.cosh_r * self.cosh_r;
        self.displacement(x) <= (2.0 + c2 * (t * t - 4.0)) * (1.0 + WINDOW_MARGIN)
    }

    /// Coordinates whose squared length is Q0 / b0 + nrd at the two definite places.
    fn embedding(&self, x: &HalfQuat, b0: f64) -> Vec<f64> {
        let scale = 1.0 / libm::sqrt(b0);
        let mut v: Vec<f64> = self.conjugated(x).iter().map(|m| m * scale).collect();
        for place in 1..3 {
            let e = ETA_F64[place];
            let r = libm::sqrt(-e);
            let [a, b, c, d] = x.0.map(|t| eval_f64(&t, place) / 2.0);
            v.extend([a, r * b, r * c, e * d]);
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Engine {
    Bfs,
    Lattice,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Bfs => "bfs",
            Engine::Lattice => "lattice",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchBound {
    WordLength(u32),
    Trace(f64),
}

#[derive(Debug, Clone)]
pub struct SystoleReport {
    pub ideal: IdealK,
    pub genus: u64,
    pub engine: Engine,
    pub bound: SearchBound,
    /// Reduced trace of a systolic element, positive at the natural place.
    pub min_trace: FieldElem,
    pub trace_value: Real,
    pub length: Real,
    /// Minimal-trace elements, up to sign and inversion, whose axis meets the disc about p0.
    pub multiplicity: u64,
    /// Minimal-trace elements found anywhere in the window, up to sign and inversion.
    pub found_with_min_trace: u64,
    pub witness: HalfQuat,
    pub witness_word: Option<GroupWord>,
    /// Group elements (BFS) or lattice points (lattice) examined.
    pub examined: u64,
    /// Congruence elements other than +-1 found.
    pub congruent: u64,
    /// (4/3) ln(genus).
    pub lower_bound: Real,
    pub bound_holds: bool,
}

struct Candidate {
    x: HalfQuat,
    word: Option<GroupWord>,
    abs_trace: f64,
}

fn trace_real(t: &[i64; 3], precision: Precision) -> Real {
    FieldElem::from_ints(t[0], t[1], t[2])
        .embed(Place::Natural, precision)
        .abs()
}

fn cmp_abs_trace(a: &Candidate, b: &Candidate, precision: Precision) -> Ordering {
    let scale = a.abs_trace.max(b.abs_trace);
    if (a.abs_trace - b.abs_trace).abs() > 1e-9 * scale {
        return a.abs_trace.total_cmp(&b.abs_trace);
    }
    trace_real(&a.x.trace(), precision).cmp(&trace_real(&b.x.trace(), precision))
}

fn negate(t: &[i64; 3]) -> [i64; 3] {
    t.map(|c| -c)
}

fn summarize(
    ideal: &IdealK,
    genus: u64,
    engine: Engine,
    bound: SearchBound,
    candidates: Vec<Candidate>,
    examined: u64,
    precision: Precision,
) -> Result<SystoleReport> {
    let two = Real::from_int(2, precision.bits());
    for c in &candidates {
        let t = c.x.trace();
        if t == [2, 0, 0] || t == [-2, 0, 0] {
            return Err(Error::ParabolicFound(format!("{}", c.x.to_quat())));
        }
        if c.abs_trace < 2.0 + 1e-6 && trace_real(&t, precision) < two {
            return Err(Error::TorsionDetected(format!("{}", c.x.to_quat())));
        }
    }
    let best = candidates
        .iter()
        .min_by(|a, b| cmp_abs_trace(a, b, precision))
        .ok_or_else(|| {
            Error::NoElementFound(format!("{ideal}: no congruence element in the window"))
        })?;
    let t = best.x.trace();
    let ties: Vec<&Candidate> = candidates
        .iter()
        .filter(|c| c.x.trace() == t || c.x.trace() == negate(&t))
        .collect();
    let disc = CenterDisc::new();
    let mut near: BTreeMap<HalfQuat, &Candidate> = BTreeMap::new();
    let mut all: BTreeSet<HalfQuat> = BTreeSet::new();
    for c in &ties {
        let key = c.x.canonical_up_to_inverse();
        all.insert(key);
        if disc.axis_near_center(&c.x) {
            near.entry(key).or_insert(c);
        }
    }
    let witness_candidate = near.values().next().copied().unwrap_or(ties[0]);
    let positive = if eval_f64(&t, 0) < 0.0 { negate(&t) } else { t };
    let trace_value = trace_real(&positive, precision);
    let length = trace_value.div_int(2).acosh().mul_int(2);
    let lower_bound = Real::from_int(genus as i64, precision.bits())
        .ln()
        .mul_int(4)
        .div_int(3);
    let witness = if eval_f64(&witness_candidate.x.trace(), 0) < 0.0 {
        witness_candidate.x.neg()
    } else {
        witness_candidate.x
    };
    Ok(SystoleReport {
        ideal: ideal.clone(),
        genus,
        engine,
        bound,
        min_trace: FieldElem::from_ints(positive[0], positive[1], positive[2]),
        trace_value,
        bound_holds: length >= lower_bound,
        length,
        multiplicity: near.len() as u64,
        found_with_min_trace: all.len() as u64,
        witness,
        witness_word: witness_candidate.word.clone(),
        examined,
        congruent: candidates.len() as u64,
        lower_bound,
    })
}

struct Node {
    value: HalfQuat,
    parent: u32,
    letter: Option<Letter>,
}

fn word_of(nodes: &[Node], mut id: u32) -> GroupWord {
    let mut letters = Vec::new();
    while let Some(l) = nodes[id as usize].letter {
        letters.push(l);
        id = nodes[id as usize].parent;
    }
    letters.reverse();
    GroupWord::new(letters)
}

/// Breadth-first search of the Cayley graph of g2, g3, g3^-1 up to sign,
/// collecting elements congruent to +-1 modulo I.
pub fn systole_bfs<E: Executor>(
    ideal: &IdealK,
    max_word_length: u32,
    precision: Precision,
    exec: &E,
) -> Result<SystoleReport> {
    let genus = genus_of(ideal)?;
    let tester = CongruenceTester::new(ideal.generator())?;
    let gens: Vec<(Letter, HalfQuat)> = Letter::ALL.iter().map(|&l| (l, l.half())).collect();
    let mut nodes = alloc::vec![Node {
        value: HalfQuat::one(),
        parent: 0,
        letter: None
    }];
    let mut seen: BTreeSet<HalfQuat> = BTreeSet::new();
    seen.insert(HalfQuat::one().canonical());
    let mut frontier: Vec<u32> = alloc::vec![0];
    let mut hits: Vec<u32> = Vec::new();
    for _ in 0..max_word_length {
        let values: Vec<HalfQuat> = frontier
            .iter()
            .map(|&id| nodes[id as usize].value)
            .collect();
        let expanded = exec.map(&values, |v| {
            gens.iter()
                .map(|(_, g)| {
                    let y = v.mul(g)?;
                    Ok((y, tester.congruent_pm_one(&y)))
                })
                .collect::<Result<Vec<_>>>()
        });
        let mut next = Vec::new();
        for (&parent, products) in frontier.iter().zip(expanded) {
            for ((letter, _), (y, congruent)) in gens.iter().zip(products?) {
                if seen.insert(y.canonical()) {
                    let id = nodes.len() as u32;
                    nodes.push(Node {
                        value: y,
                        parent,
                        letter: Some(*letter),
                    });
                    next.push(id);
                    if congruent && !y.is_pm_one() {
                        hits.push(id);
                    }
                }
            }
        }
        frontier = next;
    }
    let candidates = hits
        .iter()
        .map(|&id| {
            let x = nodes[id as usize].value;
            Candidate {
                x,
                word: Some(word_of(&nodes, id)),
                abs_trace: eval_f64(&x.trace(), 0).abs(),
            }
        })
        .collect();
    summarize(
        ideal,
        genus,
        Engine::Bfs,
        SearchBound::WordLength(max_word_length),
        candidates,
        nodes.len() as u64,
        precision,
    )
}

/// Norm-one elements of `shift + g Q_Hur` whose form value is at most 3 for
/// the window of traces up to `trace_bound`, with the number of lattice
/// points enumerated.
pub fn norm_one_window<E: Executor>(
    g: &FieldElem,
    shift: i64,
    trace_bound: f64,
    exec: &E,
) -> Result<(Vec<HalfQuat>, u64)> {
    let disc = CenterDisc::new();
    let b0 = disc.displacement_bound(trace_bound);
    let hur = Order::hurwitz();
    let mut basis: Vec<HalfQuat> = Vec::with_capacity(12);
    let eta = FieldElem::eta();
    for k in 0..3 {
        let s = g * &eta.pow(k);
        for h in hur.basis() {
            basis.push(HalfQuat::from_quat(&h.scale(&s))?);
        }
    }
    let rows: Vec<Vec<f64>> = basis.iter().map(|b| disc.embedding(b, b0)).collect();
    let reduced = lll(&rows, 0.99);
    let target = disc.embedding(&HalfQuat::from_int(-shift), b0);
    let center = coordinates(&reduced.rows, &target);
    let points = enumerate(&reduced.rows, &center, 3.0 * (1.0 + 1e-6), NODE_LIMIT, exec)?;
    let examined = points.len() as u64;
    let mut out = Vec::new();
    for p in points {
        let mut acc = [[0i128; 3]; 4];
        acc[0][0] = 2 * shift as i128;
        for (i, &xi) in p.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (k, b) in basis.iter().enumerate() {
                let z = xi as i128 * reduced.transform[i][k] as i128;
                if z == 0 {
                    continue;
                }
                for q in 0..4 {
                    for l in 0..3 {
                        acc[q][l] += z * b.0[q][l] as i128;
                    }
                }
            }
        }
        let mut v = [[0i64; 3]; 4];
        for q in 0..4 {
            for l in 0..3 {
                v[q][l] = i64::try_from(acc[q][l]).map_err(|_| Error::Overflow)?;
            }
        }
        let x = HalfQuat(v);
        if x.is_norm_one() {
            out.push(x);
        }
    }
    Ok((out, examined))
}

/// Norm-one elements of Q_Hur with |trace| at most 2 near p0: the torsion
/// visible from the center of the fundamental domain, up to sign.
pub fn torsion_in_window<E: Executor>(exec: &E) -> Result<Vec<HalfQuat>> {
    let (points, _) = norm_one_window(&FieldElem::one(), 0, 2.0, exec)?;
    let set: BTreeSet<HalfQuat> = points
        .into_iter()
        .filter(|x| eval_f64(&x.trace(), 0).abs() <= 2.0 + 1e-9)
        .map(|x| x.canonical())
        .collect();
    Ok(set.into_iter().collect())
}

/// Exhaustive systole search below `trace_bound`.
pub fn systole_lattice<E: Executor>(
    ideal: &IdealK,
    trace_bound: f64,
    precision: Precision,
    exec: &E,
) -> Result<SystoleReport> {
    if trace_bound <= 2.0 {
        return Err(Error::EmptyWindow);
    }
    let genus = genus_of(ideal)?;
    let (points, examined) = norm_one_window(ideal.generator(), 1, trace_bound, exec)?;
    let candidates: Vec<Candidate> = points
        .into_iter()
        .filter(|x| !x.is_pm_one())
        .map(|x| Candidate {
            x,
            word: None,
            abs_trace: eval_f64(&x.trace(), 0).abs(),
        })
        .collect();
    let report = summarize(
        ideal,
        genus,
        Engine::Lattice,
        SearchBound::Trace(trace_bound),
        candidates,
        examined,
        precision,
    );
    match report {
        Err(Error::NoElementFound(_)) => Err(Error::EmptyWindow),
        Ok(r) if r.trace_value.to_f64() > trace_bound * (1.0 + WINDOW_MARGIN) => {
            Err(Error::EmptyWindow)
        }
        other => other,
    }
}

/// The trace bound at which the automatic search starts: the trace of a
/// geodesic of length (4/3) ln(genus), but at least 3.
pub fn initial_trace_bound(genus: u64) -> f64 {
    let len = 4.0 / 3.0 * libm::log(genus as f64);
    (2.0 * libm::cosh(len / 2.0)).max(3.0)
}

/// Runs [`systole_lattice`] with growing trace bounds until the window is nonempty.
pub fn systole_lattice_auto<E: Executor>(
    ideal: &IdealK,
    start: Option<f64>,
    precision: Precision,
    exec: &E,
) -> Result<SystoleReport> {
    let mut bound = match start {
        Some(b) => b,
        None => initial_trace_bound(genus_of(ideal)?),
    };
    for _ in 0..40 {
        match systole_lattice(ideal, bound, precision, exec) {
            Err(Error::EmptyWindow) => bound *= 1.25,
            other => return other,
        }
    }
    Err(Error::EmptyWindow)
}
