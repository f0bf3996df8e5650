//! N-point discrete signal-induced heap transforms.
//!
//! A generator `x` induces a unitary transform built from `N - 1` basic
//! 2×2 transforms, each acting on one pair of components. The pair order
//! is the path:
//!
//! * [`HeapPath::Natural`] pairs the heap at index 0 with 1, 2, …, N-1.
//! * [`HeapPath::Strong`] walks pairs `(N-2, N-1)`, `(N-3, N-2)`, …, `(0, 1)`
//!   and carries the heap from the tail down to index 0.
//!
//! The transform sends the generator itself to `(heap, 0, …, 0)`.
//! [`HeapPlan`] precomputes the stage matrices once so the same transform
//! can be applied to many signals, which is what the decompositions do.

use std::fmt;
use std::str::FromStr;

use crate::basic::{heap_value, make_basic, real_givens_angle, Basic2x2, BasicKind};
use crate::error::{DsihtError, Result};
use crate::matrix::{CMatrix, Cpx};

const ZERO: Cpx = Cpx::new(0.0, 0.0);

/// Generator vector of a heap transform, with its cached norm.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    values: Vec<Cpx>,
    norm: f64,
}

impl Generator {
    pub fn new(values: Vec<Cpx>) -> Result<Self> {
        if values.len() < 2 {
            return Err(DsihtError::GeneratorTooShort(values.len()));
        }
        let norm = vector_norm(&values);
        if norm == 0.0 {
            return Err(DsihtError::ZeroGenerator);
        }
        Ok(Self { values, norm })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Cpx::new(v, 0.0)).collect())
    }

    pub fn values(&self) -> &[Cpx] {
        &self.values
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.im == 0.0)
    }

    /// Components at or below this modulus do not get a stage of their own.
    #[inline]
    fn negligible(&self) -> f64 {
        f64::EPSILON * self.norm
    }
}

/// Euclidean norm with scaling, safe against overflow for large entries.
pub(crate) fn vector_norm(v: &[Cpx]) -> f64 {
    v.iter().fold(0.0f64, |acc, z| acc.hypot(z.norm()))
}

/// Order in which component pairs are processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeapPath {
    #[default]
    Natural,
    Strong,
}

impl fmt::Display for HeapPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HeapPath::Natural => "natural",
            HeapPath::Strong => "strong",
        })
    }
}

impl FromStr for HeapPath {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "natural" | "weak" => Ok(HeapPath::Natural),
            "strong" => Ok(HeapPath::Strong),
            other => Err(format!("unknown path {other:?} (expected natural or strong)")),
        }
    }
}

/// A unitary map applied in place to one column segment.
pub trait StageOp: Send + Sync {
    fn apply(&self, v: &mut [Cpx]);

    /// Exact image of the generator at its heap index, if known. The
    /// decompositions store it directly instead of the rounded result.
    fn pivot(&self) -> Option<Cpx> {
        None
    }
}

#[derive(Debug, Clone, Copy)]
struct Stage {
    a: usize,
    b: usize,
    t: Basic2x2,
}

/// Precomputed cascade of basic transforms for one generator.
#[derive(Debug, Clone)]
pub struct HeapPlan {
    n: usize,
    kind: BasicKind,
    heap_index: usize,
    heap: Cpx,
    stages: Vec<Stage>,
}

impl HeapPlan {
    pub fn new(gen: &Generator, kind: BasicKind, path: HeapPath) -> Self {
        let x = gen.values();
        let n = x.len();
        let eps = gen.negligible();
        let mut stages = Vec::with_capacity(n - 1);
        let heap = match path {
            HeapPath::Natural => {
                let mut acc = x[0];
                for (k, &xk) in x.iter().enumerate().skip(1) {
                    if xk.norm() <= eps {
                        continue;
                    }
                    stages.push(Stage { a: 0, b: k, t: basic(kind, acc, xk) });
                    acc = heap_of(kind, acc, xk);
                }
                acc
            }
            HeapPath::Strong => {
                // the heap travels: after pair (k-1, k) it sits at k-1
                let mut acc = x[n - 1];
                for k in (1..n).rev() {
                    let lead = x[k - 1];
                    if acc.norm() <= eps {
                        acc = lead;
                        continue;
                    }
                    stages.push(Stage { a: k - 1, b: k, t: basic(kind, lead, acc) });
                    acc = heap_of(kind, lead, acc);
                }
                acc
            }
        };
        Self { n, kind, heap_index: 0, heap, stages }
    }

    /// Cascade with the heap anchored at the last index: the accumulated
    /// value is the leading element of every pair `(N-1, i)`, for
    /// `i = N-2, …, 0`. This is the orientation QL elimination needs.
    pub fn tail_anchored(gen: &Generator, kind: BasicKind) -> Self {
        let x = gen.values();
        let n = x.len();
        let eps = gen.negligible();
        let mut stages = Vec::with_capacity(n - 1);
        let mut acc = x[n - 1];
        for i in (0..n - 1).rev() {
            let xi = x[i];
            if xi.norm() <= eps {
                continue;
            }
            stages.push(Stage { a: n - 1, b: i, t: basic(kind, acc, xi) });
            acc = heap_of(kind, acc, xi);
        }
        Self { n, kind, heap_index: n - 1, heap: acc, stages }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn kind(&self) -> BasicKind {
        self.kind
    }

    /// Value the generator's energy is collected into.
    pub fn heap(&self) -> Cpx {
        self.heap
    }

    pub fn heap_index(&self) -> usize {
        self.heap_index
    }

    /// Number of non-skipped stages.
    pub fn active_stages(&self) -> usize {
        self.stages.len()
    }

    pub fn transform(&self, signal: &[Cpx]) -> Result<Vec<Cpx>> {
        check_len(self.n, signal.len())?;
        let mut v = signal.to_vec();
        self.apply(&mut v);
        Ok(v)
    }
}

impl StageOp for HeapPlan {
    #[inline]
    fn apply(&self, v: &mut [Cpx]) {
        assert_eq!(v.len(), self.n, "signal length");
        for s in &self.stages {
            let (p, q) = s.t.apply(v[s.a], v[s.b]);
            v[s.a] = p;
            v[s.b] = q;
        }
    }

    fn pivot(&self) -> Option<Cpx> {
        Some(self.heap)
    }
}

// generator pairs are never both zero here: the second element is above
// the skip threshold
fn basic(kind: BasicKind, x0: Cpx, x1: Cpx) -> Basic2x2 {
    make_basic(kind, x0, x1).expect("nonzero generator pair")
}

fn heap_of(kind: BasicKind, x0: Cpx, x1: Cpx) -> Cpx {
    heap_value(kind, x0, x1).expect("nonzero generator pair")
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        Err(DsihtError::LengthMismatch { expected, found })
    } else {
        Ok(())
    }
}

/// Running correlation data of the analytic engine: `E_k(z, x) = Σ z_i x̄_i`
/// and `E_k²(x) = Σ |x_i|²` over the first k components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationState {
    pub exy: Cpx,
    pub ex2: f64,
}

impl CorrelationState {
    pub fn start(z0: Cpx, x0: Cpx) -> Self {
        Self {
            exy: z0 * x0.conj(),
            ex2: x0.norm_sqr(),
        }
    }

    #[inline]
    pub fn update(&mut self, z: Cpx, x: Cpx) {
        self.exy += z * x.conj();
        self.ex2 += x.norm_sqr();
    }
}

#[derive(Debug, Clone, Copy)]
enum AnalyticStage {
    Skip,
    // out_k = alpha·z_k - beta·E_{k-1}(z, x)
    Regular { alpha: f64, beta: Cpx },
    // all earlier generator energy is zero
    Degenerate { phase: Cpx },
}

/// Natural-path M-type heap transform evaluated from correlation data,
/// without any 2×2 matrices.
///
/// Stage k produces
/// `z_k' = (E_{k-1}²(x)·z_k - E_{k-1}(z, x)·x_k) / (E_{k-1}(x)·E_k(x))`
/// and the heap is `E_{N-1}(z, x) / E_{N-1}(x)`.
#[derive(Debug, Clone)]
pub struct AnalyticPlan {
    x: Vec<Cpx>,
    stages: Vec<AnalyticStage>,
    energy: f64,
}

impl AnalyticPlan {
    pub fn new(gen: &Generator) -> Self {
        let x = gen.values().to_vec();
        let eps = gen.negligible();
        let mut stages = Vec::with_capacity(x.len());
        stages.push(AnalyticStage::Skip);
        let mut ex2 = x[0].norm_sqr();
        for &xk in &x[1..] {
            let m = xk.norm();
            if m <= eps {
                stages.push(AnalyticStage::Skip);
                continue;
            }
            let prev = ex2.sqrt();
            ex2 += xk.norm_sqr();
            let cur = ex2.sqrt();
            stages.push(if prev == 0.0 {
                AnalyticStage::Degenerate { phase: xk / m }
            } else {
                AnalyticStage::Regular {
                    alpha: prev / cur,
                    beta: xk / (prev * cur),
                }
            });
        }
        Self { x, stages, energy: ex2.sqrt() }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn transform(&self, signal: &[Cpx]) -> Result<Vec<Cpx>> {
        check_len(self.x.len(), signal.len())?;
        let mut v = signal.to_vec();
        self.apply(&mut v);
        Ok(v)
    }
}

impl StageOp for AnalyticPlan {
    #[allow(clippy::needless_range_loop)]
    fn apply(&self, v: &mut [Cpx]) {
        assert_eq!(v.len(), self.x.len(), "signal length");
        let z0 = v[0];
        let mut state = CorrelationState::start(z0, self.x[0]);
        for k in 1..v.len() {
            let zk = v[k];
            match self.stages[k] {
                AnalyticStage::Skip => continue,
                AnalyticStage::Regular { alpha, beta } => {
                    v[k] = zk * alpha - beta * state.exy;
                }
                AnalyticStage::Degenerate { phase } => {
                    v[k] = -phase * z0;
                }
            }
            state.update(zk, self.x[k]);
        }
        v[0] = state.exy / self.energy;
    }

    fn pivot(&self) -> Option<Cpx> {
        Some(Cpx::new(self.energy, 0.0))
    }
}

/// Heap transform of `signal` induced by `gen`.
pub fn dsiht(gen: &Generator, signal: &[Cpx], kind: BasicKind, path: HeapPath) -> Result<Vec<Cpx>> {
    check_len(gen.len(), signal.len())?;
    HeapPlan::new(gen, kind, path).transform(signal)
}

/// Natural-path M-type heap transform computed from correlation data.
pub fn dsiht_analytic(gen: &Generator, signal: &[Cpx]) -> Result<Vec<Cpx>> {
    check_len(gen.len(), signal.len())?;
    AnalyticPlan::new(gen).transform(signal)
}

/// Matrix of the heap transform, built column by column from unit vectors.
pub fn dsiht_matrix(gen: &Generator, kind: BasicKind, path: HeapPath) -> CMatrix {
    plan_matrix(&HeapPlan::new(gen, kind, path), gen.len())
}

pub(crate) fn plan_matrix(op: &dyn StageOp, n: usize) -> CMatrix {
    let cols: Vec<Vec<Cpx>> = (0..n)
        .map(|m| {
            let mut e = vec![ZERO; n];
            e[m] = Cpx::new(1.0, 0.0);
            op.apply(&mut e);
            e
        })
        .collect();
    CMatrix::from_columns(&cols)
}

/// Rotation angles equivalent to a real generator's heap cascade.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularRep {
    /// Final accumulated value of the generator.
    pub heap: f64,
    /// Natural path: in stage order. Strong path: `angles[k]` rotates the
    /// pair `(k, k+1)`. Skipped stages carry angle 0.
    pub angles: Vec<f64>,
    pub path: HeapPath,
}

impl AngularRep {
    fn pairs(&self) -> Vec<(usize, usize, f64)> {
        let n = self.angles.len() + 1;
        match self.path {
            HeapPath::Natural => (1..n).map(|k| (0, k, self.angles[k - 1])).collect(),
            HeapPath::Strong => (1..n).rev().map(|k| (k - 1, k, self.angles[k - 1])).collect(),
        }
    }

    /// Product of the plane rotations, as a matrix.
    pub fn matrix(&self) -> CMatrix {
        let n = self.angles.len() + 1;
        let mut h = CMatrix::identity(n);
        for (a, b, phi) in self.pairs() {
            let (s, c) = phi.sin_cos();
            for col in 0..n {
                let (p, q) = (h[(a, col)], h[(b, col)]);
                h[(a, col)] = p * c - q * s;
                h[(b, col)] = p * s + q * c;
            }
        }
        h
    }
}

/// Angular representation of a real generator along `path`.
pub fn angular_representation(gen: &Generator, path: HeapPath) -> Result<AngularRep> {
    if !gen.is_real() {
        return Err(DsihtError::NonRealGenerator);
    }
    let x: Vec<f64> = gen.values().iter().map(|v| v.re).collect();
    let n = x.len();
    let eps = gen.negligible();
    let mut angles = vec![0.0; n - 1];
    let heap = match path {
        HeapPath::Natural => {
            let mut acc = x[0];
            for k in 1..n {
                if x[k].abs() <= eps {
                    continue;
                }
                let a = real_givens_angle(acc, x[k])?;
                angles[k - 1] = a.phi;
                acc = a.rotate(acc, x[k]).0;
            }
            acc
        }
        HeapPath::Strong => {
            let mut acc = x[n - 1];
            for k in (1..n).rev() {
                if acc.abs() <= eps {
                    acc = x[k - 1];
                    continue;
                }
                let a = real_givens_angle(x[k - 1], acc)?;
                angles[k - 1] = a.phi;
                acc = a.rotate(x[k - 1], acc).0;
            }
            acc
        }
    };
    Ok(AngularRep { heap, angles, path })
}
