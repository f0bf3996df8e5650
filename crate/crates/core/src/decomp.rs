//! QR and QL factorizations assembled from column-wise heap transforms,
//! plus the complex Householder baseline and the accuracy diagnostics.
//!
//! QR stage `j` uses the trailing subcolumn `X[j.., j]` as generator and
//! applies the induced transform to rows `j..` of the remaining columns.
//! The transforms are also applied to an accumulated `Q*`, which is
//! conjugate-transposed once at the end.

use std::fmt;
use std::str::FromStr;

use crate::basic::{complex_sign, BasicKind};
use crate::error::{DsihtError, Result};
use crate::heap::{vector_norm, AnalyticPlan, Generator, HeapPath, HeapPlan, StageOp};
use crate::matrix::{CMatrix, Cpx};

/// How each stage's transform is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Cascade of explicit 2×2 basic transforms.
    #[default]
    Cascade,
    /// Correlation recurrences; only valid for all-M schedules.
    Analytic,
}

/// Basic-transform kind used at each elimination stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSchedule {
    stages: Vec<BasicKind>,
    engine: Engine,
}

impl TypeSchedule {
    pub fn new(stages: Vec<BasicKind>) -> Self {
        Self {
            stages,
            engine: Engine::Cascade,
        }
    }

    /// Same kind at every stage of an `n`×`n` decomposition.
    pub fn uniform(kind: BasicKind, n: usize) -> Self {
        Self::new(vec![kind; n.saturating_sub(1)])
    }

    /// All-M schedule evaluated by the analytic engine.
    pub fn analytic(n: usize) -> Self {
        Self {
            stages: vec![BasicKind::M; n.saturating_sub(1)],
            engine: Engine::Analytic,
        }
    }

    pub fn with_engine(stages: Vec<BasicKind>, engine: Engine) -> Result<Self> {
        if engine == Engine::Analytic && stages.iter().any(|&k| k != BasicKind::M) {
            return Err(DsihtError::AnalyticRequiresM);
        }
        Ok(Self { stages, engine })
    }

    pub fn stages(&self) -> &[BasicKind] {
        &self.stages
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// The single kind of a uniform schedule.
    pub fn uniform_kind(&self) -> Option<BasicKind> {
        let first = *self.stages.first()?;
        self.stages.iter().all(|&k| k == first).then_some(first)
    }

    fn check(&self, n: usize) -> Result<()> {
        let expected = n.saturating_sub(1);
        if self.stages.len() != expected {
            return Err(DsihtError::ScheduleLength {
                expected,
                found: self.stages.len(),
            });
        }
        if self.engine == Engine::Analytic && self.stages.iter().any(|&k| k != BasicKind::M) {
            return Err(DsihtError::AnalyticRequiresM);
        }
        Ok(())
    }
}

impl fmt::Display for TypeSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.stages.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))?;
        if self.engine == Engine::Analytic {
            write!(f, " (analytic)")?;
        }
        Ok(())
    }
}

impl FromStr for TypeSchedule {
    type Err = String;

    /// Comma-separated kinds, e.g. `t,m,g,t,t` or `1,2,3,1,1`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let stages = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<std::result::Result<Vec<BasicKind>, _>>()?;
        Ok(Self::new(stages))
    }
}

/// Which triangular factor a decomposition produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `X = Q·R`, R upper triangular.
    Qr,
    /// `X = Q·L`, L lower triangular.
    Ql,
}

/// What to do when a generator column is numerically zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankPolicy {
    #[default]
    Strict,
    /// Zero the column segment and move on; the diagonal entry becomes 0.
    Permissive,
}

/// Factor pair with metadata and diagnostics.
#[derive(Debug, Clone)]
pub struct DecompResult {
    pub q: CMatrix,
    /// R for [`Shape::Qr`], L for [`Shape::Ql`].
    pub factor: CMatrix,
    pub shape: Shape,
    /// `None` for the Householder baseline.
    pub schedule: Option<TypeSchedule>,
    pub path: HeapPath,
    /// `‖X − Q·factor‖₂`
    pub residual_norm: f64,
    /// `max |Q*Q − I|`
    pub unitarity_error: f64,
}

impl DecompResult {
    fn assemble(
        x: &CMatrix,
        (q, factor): (CMatrix, CMatrix),
        shape: Shape,
        schedule: Option<TypeSchedule>,
        path: HeapPath,
    ) -> Result<Self> {
        let residual_norm = residual_norm(x, &q, &factor)?;
        let unitarity_error = unitarity_error(&q);
        Ok(Self {
            q,
            factor,
            shape,
            schedule,
            path,
            residual_norm,
            unitarity_error,
        })
    }
}

fn check_square(x: &CMatrix) -> Result<usize> {
    if !x.is_square() {
        return Err(DsihtError::NonSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if x.rows() == 0 {
        return Err(DsihtError::ZeroDimension);
    }
    Ok(x.rows())
}

/// Runs the elimination loop with a caller-supplied stage transform.
///
/// For [`Shape::Qr`], stage `s = j` receives the generator `X_j[j.., j]`
/// and must heap it into its first component. For [`Shape::Ql`], stage
/// `s = N-1-j` receives `X_j[..=j, j]` and must heap it into its last
/// component. Returns `(Q, factor)`.
pub fn triangularize<F>(x: &CMatrix, shape: Shape, policy: RankPolicy, mut stage: F) -> Result<(CMatrix, CMatrix)>
where
    F: FnMut(usize, &Generator) -> Box<dyn StageOp>,
{
    let n = check_square(x)?;
    let floor = f64::EPSILON * x.frobenius_norm();
    let mut work = x.clone();
    let mut adj = CMatrix::identity(n);
    let mut buf = Vec::with_capacity(n);

    for s in 0..n.saturating_sub(1) {
        // pivot column and the row range the stage acts on
        let (j, lo, hi) = match shape {
            Shape::Qr => (s, s, n),
            Shape::Ql => (n - 1 - s, 0, n - s),
        };
        work.read_column(j, lo, hi, &mut buf);
        if vector_norm(&buf) <= floor {
            match policy {
                RankPolicy::Strict => return Err(DsihtError::RankDeficient(j)),
                RankPolicy::Permissive => {
                    let zeros = vec![Cpx::new(0.0, 0.0); hi - lo];
                    work.write_column(j, lo, &zeros);
                    continue;
                }
            }
        }
        let gen = Generator::new(buf.clone())?;
        let op = stage(s, &gen);

        // columns outside this range are already zero on rows lo..hi
        let cols = match shape {
            Shape::Qr => j..n,
            Shape::Ql => 0..j + 1,
        };
        let slot = match shape {
            Shape::Qr => 0,
            Shape::Ql => hi - lo - 1,
        };
        for c in cols {
            work.read_column(c, lo, hi, &mut buf);
            op.apply(&mut buf);
            if c == j {
                if let Some(p) = op.pivot() {
                    buf.fill(Cpx::new(0.0, 0.0));
                    buf[slot] = p;
                }
            }
            work.write_column(c, lo, &buf);
        }
        for c in 0..n {
            adj.read_column(c, lo, hi, &mut buf);
            op.apply(&mut buf);
            adj.write_column(c, lo, &buf);
        }
    }
    Ok((adj.conj_transpose(), work))
}

/// Source of per-stage transforms for the decompositions.
///
/// The defaults build the library plans; overriding a method swaps the
/// transform used at every stage of that kind.
pub trait StageKernels {
    /// Natural-path cascade heaping into index 0.
    fn cascade(&self, gen: &Generator, kind: BasicKind) -> Box<dyn StageOp> {
        Box::new(HeapPlan::new(gen, kind, HeapPath::Natural))
    }

    /// Cascade heaping into the last index.
    fn tail_cascade(&self, gen: &Generator, kind: BasicKind) -> Box<dyn StageOp> {
        Box::new(HeapPlan::tail_anchored(gen, kind))
    }

    /// Matrix-free M-kind transform heaping into index 0.
    fn analytic(&self, gen: &Generator) -> Box<dyn StageOp> {
        Box::new(AnalyticPlan::new(gen))
    }
}

/// The library's own stage transforms.
#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultKernels;

impl StageKernels for DefaultKernels {}

/// Applies the inner transform to the reversed segment.
struct Reversed<P: ?Sized>(Box<P>);

impl<P: StageOp + ?Sized> StageOp for Reversed<P> {
    fn apply(&self, v: &mut [Cpx]) {
        v.reverse();
        self.0.apply(v);
        v.reverse();
    }

    fn pivot(&self) -> Option<Cpx> {
        self.0.pivot()
    }
}

/// QR decomposition with natural-path heap transforms.
pub fn qr_decompose(x: &CMatrix, schedule: &TypeSchedule) -> Result<DecompResult> {
    qr_decompose_with(x, schedule, RankPolicy::Strict)
}

pub fn qr_decompose_with(x: &CMatrix, schedule: &TypeSchedule, policy: RankPolicy) -> Result<DecompResult> {
    qr_decompose_using(x, schedule, policy, &DefaultKernels)
}

/// QR decomposition with stage transforms supplied by `kernels`.
pub fn qr_decompose_using(
    x: &CMatrix,
    schedule: &TypeSchedule,
    policy: RankPolicy,
    kernels: &dyn StageKernels,
) -> Result<DecompResult> {
    let n = check_square(x)?;
    schedule.check(n)?;
    let factors = triangularize(x, Shape::Qr, policy, |s, gen| match schedule.engine {
        Engine::Cascade => kernels.cascade(gen, schedule.stages[s]),
        Engine::Analytic => kernels.analytic(gen),
    })?;
    DecompResult::assemble(x, factors, Shape::Qr, Some(schedule.clone()), HeapPath::Natural)
}

/// QL decomposition, processing columns from last to first.
///
/// Each stage heaps the leading subcolumn `X[..=j, j]` into row `j`: the
/// accumulated value sits at the last index and is paired in turn with
/// rows `j-1, j-2, …, 0`. `schedule[s]` is used for the `s`-th processed
/// column.
pub fn ql_decompose(x: &CMatrix, schedule: &TypeSchedule) -> Result<DecompResult> {
    ql_decompose_with(x, schedule, RankPolicy::Strict)
}

pub fn ql_decompose_with(x: &CMatrix, schedule: &TypeSchedule, policy: RankPolicy) -> Result<DecompResult> {
    ql_decompose_using(x, schedule, policy, &DefaultKernels)
}

/// QL decomposition with stage transforms supplied by `kernels`.
pub fn ql_decompose_using(
    x: &CMatrix,
    schedule: &TypeSchedule,
    policy: RankPolicy,
    kernels: &dyn StageKernels,
) -> Result<DecompResult> {
    let n = check_square(x)?;
    schedule.check(n)?;
    let factors = triangularize(x, Shape::Ql, policy, |s, gen| match schedule.engine {
        Engine::Cascade => kernels.tail_cascade(gen, schedule.stages[s]),
        Engine::Analytic => {
            let mut rev = gen.values().to_vec();
            rev.reverse();
            let rev = Generator::new(rev).expect("reversed generator is nonzero");
            Box::new(Reversed(kernels.analytic(&rev)))
        }
    })?;
    DecompResult::assemble(x, factors, Shape::Ql, Some(schedule.clone()), HeapPath::Strong)
}

/// Householder reflector `I − 2ww*` sending its generator to
/// `−sign(x0)·‖x‖·e0`.
#[derive(Debug, Clone)]
pub struct Reflector {
    w: Vec<Cpx>,
    pivot: Cpx,
}

impl Reflector {
    pub fn new(gen: &Generator) -> Self {
        let x = gen.values();
        let nx = gen.norm();
        let mut w = x.to_vec();
        w[0] += complex_sign(x[0]) * nx;
        let wn = (2.0 * nx * (nx + x[0].norm())).sqrt();
        for v in &mut w {
            *v /= wn;
        }
        Self {
            w,
            pivot: -complex_sign(x[0]) * nx,
        }
    }
}

impl StageOp for Reflector {
    fn apply(&self, v: &mut [Cpx]) {
        let t: Cpx = self.w.iter().zip(v.iter()).map(|(w, z)| w.conj() * z).sum();
        let t2 = t * 2.0;
        for (z, w) in v.iter_mut().zip(&self.w) {
            *z -= w * t2;
        }
    }

    fn pivot(&self) -> Option<Cpx> {
        Some(self.pivot)
    }
}

/// Classical complex Householder QR, the comparison baseline.
pub fn householder_qr(x: &CMatrix) -> Result<DecompResult> {
    let factors = triangularize(x, Shape::Qr, RankPolicy::Permissive, |_, gen| {
        Box::new(Reflector::new(gen))
    })?;
    DecompResult::assemble(x, factors, Shape::Qr, None, HeapPath::Natural)
}

/// Spectral-norm estimate by power iteration on `M*M`: stops after
/// `max_iter` steps or when the estimate changes by less than `rel_tol`.
pub fn spectral_norm_with(m: &CMatrix, max_iter: usize, rel_tol: f64) -> f64 {
    let n = m.cols();
    if n == 0 || m.max_abs() == 0.0 {
        return 0.0;
    }
    let mut v: Vec<Cpx> = (0..n)
        .map(|i| Cpx::new(1.0 + 0.25 * ((i * 7 % 11) as f64) / 11.0, 0.1 * ((i * 3 % 5) as f64)))
        .collect();
    let vn = vector_norm(&v);
    v.iter_mut().for_each(|z| *z /= vn);

    let mut est = 0.0f64;
    for _ in 0..max_iter {
        let w = m.mul_vec(&v);
        let next = vector_norm(&w);
        let u = m.adjoint_mul_vec(&w);
        let un = vector_norm(&u);
        let done = (next - est).abs() <= rel_tol * next;
        est = next;
        if done || un == 0.0 {
            break;
        }
        v = u.into_iter().map(|z| z / un).collect();
    }
    est
}

/// Spectral norm, 50 power iterations or relative change below 1e-9.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    spectral_norm_with(m, 50, 1e-9)
}

/// `‖X − Q·F‖₂`
pub fn residual_norm(x: &CMatrix, q: &CMatrix, f: &CMatrix) -> Result<f64> {
    if q.cols() != f.rows() || x.rows() != q.rows() || x.cols() != f.cols() {
        return Err(DsihtError::DimensionMismatch(format!(
            "X is {}x{}, Q is {}x{}, F is {}x{}",
            x.rows(),
            x.cols(),
            q.rows(),
            q.cols(),
            f.rows(),
            f.cols()
        )));
    }
    Ok(spectral_norm(&(x - &(q * f))))
}

/// Largest entrywise modulus of `Q*Q − I`.
pub fn unitarity_error(q: &CMatrix) -> f64 {
    let g = &q.conj_transpose() * q;
    let mut err = 0.0f64;
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let target = if i == j { 1.0 } else { 0.0 };
            err = err.max((g[(i, j)] - target).norm());
        }
    }
    err
}
