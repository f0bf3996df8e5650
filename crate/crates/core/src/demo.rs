//! Replays the worked examples against [`crate::reference`].
//!
//! Every check compares entrywise at [`TOLERANCE`]. The stage transforms
//! come from a [`StageKernels`] implementation so alternative kernels can
//! be run through the same examples.

use crate::basic::{apply_basic, make_basic, BasicKind};
use crate::decomp::{
    householder_qr, ql_decompose_using, qr_decompose_using, DefaultKernels, RankPolicy, StageKernels,
    TypeSchedule,
};
use crate::error::Result;
use crate::heap::{angular_representation, plan_matrix, Generator, HeapPath, HeapPlan};
use crate::matrix::{CMatrix, Cpx};
use crate::reference::{self as r, real_matrix, real_vector, Table};

/// Absolute per-entry tolerance; half a unit in the fourth decimal.
pub const TOLERANCE: f64 = 5e-4;

/// Result of one example.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: &'static str,
    /// Largest entrywise deviation, or `None` if the example errored.
    pub max_error: Option<f64>,
    pub error: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self.max_error, Some(e) if e <= TOLERANCE)
    }
}

type Check = fn(&dyn StageKernels) -> Result<f64>;

/// Runs all examples with the library kernels.
pub fn run() -> Vec<Outcome> {
    run_with(&DefaultKernels)
}

/// Runs all examples with the given stage kernels.
pub fn run_with(kernels: &dyn StageKernels) -> Vec<Outcome> {
    let checks: [(&'static str, Check); 15] = [
        ("example 1 natural path", example1_natural),
        ("example 1 strong path", example1_strong),
        ("example 2 basic matrices", example2_matrices),
        ("example 2 transforms", example2_transforms),
        ("example 3 heap matrices", example3_matrices),
        ("example 3 transforms", example3_transforms),
        ("analytic equivalence", analytic_equivalence),
        ("4x4 QR t", qr4_t),
        ("4x4 QR m", qr4_m),
        ("4x4 QR g", qr4_g),
        ("4x4 QR analytic", qr4_analytic),
        ("4x4 Householder", qr4_householder),
        ("4x4 QL g", ql4_g),
        ("6x6 QR m", qr6_m),
        ("6x6 QR t,m,g,t,t", qr6_mixed),
    ];
    checks
        .iter()
        .map(|&(name, check)| match check(kernels) {
            Ok(e) => Outcome {
                name,
                max_error: Some(e),
                error: None,
            },
            Err(e) => Outcome {
                name,
                max_error: None,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

pub fn all_passed(outcomes: &[Outcome]) -> bool {
    outcomes.iter().all(Outcome::passed)
}

fn vec_diff(got: &[Cpx], want: &[Cpx]) -> f64 {
    if got.len() != want.len() {
        return f64::INFINITY;
    }
    got.iter().zip(want).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

fn mat_diff<const R: usize, const C: usize>(got: &CMatrix, want: &Table<R, C>) -> f64 {
    got.max_abs_diff(&want.matrix())
}

fn real_diff(got: &[f64], want: &[f64]) -> f64 {
    got.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn example1(kernels: &dyn StageKernels, path: HeapPath) -> Result<f64> {
    let gen = Generator::from_real(&r::GEN_6)?;
    let (h, angles, z) = match path {
        HeapPath::Natural => (r::H_NATURAL, r::ANGLES_NATURAL, r::Z_NATURAL),
        HeapPath::Strong => (r::H_STRONG, r::ANGLES_STRONG, r::Z_STRONG),
    };
    let plan = match path {
        HeapPath::Natural => kernels.cascade(&gen, BasicKind::T),
        HeapPath::Strong => Box::new(HeapPlan::new(&gen, BasicKind::T, path)),
    };
    let mut out = real_vector(&r::SIGNAL_6);
    plan.apply(&mut out);
    let rep = angular_representation(&gen, path)?;
    Ok(plan_matrix(plan.as_ref(), 6)
        .max_abs_diff(&real_matrix(&h))
        .max(real_diff(&rep.angles, &angles))
        .max(vec_diff(&out, &real_vector(&z))))
}

fn example1_natural(k: &dyn StageKernels) -> Result<f64> {
    example1(k, HeapPath::Natural)
}

fn example1_strong(k: &dyn StageKernels) -> Result<f64> {
    example1(k, HeapPath::Strong)
}

fn example2_matrices(_: &dyn StageKernels) -> Result<f64> {
    let [x0, x1] = r::PAIR.vector()[..] else { unreachable!() };
    let mut err = 0.0f64;
    for kind in BasicKind::ALL {
        err = err.max(make_basic(kind, x0, x1)?.to_matrix().max_abs_diff(&r::pair_matrix(kind)));
    }
    let det = make_basic(BasicKind::M, x0, x1)?.det();
    Ok(err.max((det - Cpx::new(r::PAIR_M_DET.0, r::PAIR_M_DET.1)).norm()))
}

fn example2_transforms(_: &dyn StageKernels) -> Result<f64> {
    let [x0, x1] = r::PAIR.vector()[..] else { unreachable!() };
    let [z0, z1] = r::PAIR_SIGNAL.vector()[..] else { unreachable!() };
    let cases = [
        (BasicKind::T, z0, z1, r::PAIR_T_Z),
        (BasicKind::M, z0, z1, r::PAIR_M_Z),
        (BasicKind::G, z0, z1, r::PAIR_G_Z),
        (BasicKind::T, x0, x1, r::PAIR_TM_X),
        (BasicKind::M, x0, x1, r::PAIR_TM_X),
        (BasicKind::G, x0, x1, r::PAIR_G_X),
    ];
    let mut err = 0.0f64;
    for (kind, a, b, want) in cases {
        let (p, q) = apply_basic(kind, x0, x1, a, b)?;
        err = err.max(vec_diff(&[p, q], &want.vector()));
    }
    Ok(err)
}

fn example3_matrices(k: &dyn StageKernels) -> Result<f64> {
    let gen = Generator::new(r::GEN_4.vector())?;
    let cases = [
        (BasicKind::T, r::HEAP4_T),
        (BasicKind::M, r::HEAP4_M),
        (BasicKind::G, r::HEAP4_G),
    ];
    let mut err = 0.0f64;
    for (kind, want) in cases {
        err = err.max(mat_diff(&plan_matrix(k.cascade(&gen, kind).as_ref(), 4), &want));
    }
    Ok(err)
}

fn example3_transforms(k: &dyn StageKernels) -> Result<f64> {
    let gen = Generator::new(r::GEN_4.vector())?;
    let cases = [
        (BasicKind::T, r::HEAP4_T_Z),
        (BasicKind::M, r::HEAP4_M_Z),
        (BasicKind::G, r::HEAP4_G_Z),
    ];
    let mut err = 0.0f64;
    for (kind, want) in cases {
        let mut z = r::SIGNAL_4.vector();
        k.cascade(&gen, kind).apply(&mut z);
        err = err.max(vec_diff(&z, &want.vector()));
    }
    Ok(err)
}

fn analytic_equivalence(k: &dyn StageKernels) -> Result<f64> {
    let gen6 = Generator::from_real(&r::GEN_6)?;
    let mut z6 = real_vector(&r::SIGNAL_6);
    k.analytic(&gen6).apply(&mut z6);

    let gen4 = Generator::new(r::GEN_4.vector())?;
    let op = k.analytic(&gen4);
    let mut z4 = r::SIGNAL_4.vector();
    op.apply(&mut z4);

    Ok(vec_diff(&z6, &real_vector(&r::Z_NATURAL))
        .max(vec_diff(&z4, &r::HEAP4_M_Z.vector()))
        .max(mat_diff(&plan_matrix(op.as_ref(), 4), &r::HEAP4_M)))
}

fn qr(k: &dyn StageKernels, x: &CMatrix, schedule: &TypeSchedule) -> Result<(CMatrix, CMatrix)> {
    let d = qr_decompose_using(x, schedule, RankPolicy::Strict, k)?;
    Ok((d.q, d.factor))
}

fn qr4_t(k: &dyn StageKernels) -> Result<f64> {
    let (q, rr) = qr(k, &r::X4.matrix(), &TypeSchedule::uniform(BasicKind::T, 4))?;
    Ok(mat_diff(&q, &r::QR4_T_Q).max(mat_diff(&rr, &r::QR4_T_R)))
}

/// R of the M schedule with the `[2][2]` entry compared by modulus.
fn qr4_m_check(q: &CMatrix, rr: &CMatrix) -> f64 {
    let want = r::QR4_M_R.matrix();
    let mut err = mat_diff(q, &r::QR4_M_Q);
    for i in 0..4 {
        for j in 0..4 {
            let e = if (i, j) == (2, 2) {
                (rr[(i, j)].norm() - want[(i, j)].norm()).abs()
            } else {
                (rr[(i, j)] - want[(i, j)]).norm()
            };
            err = err.max(e);
        }
    }
    err
}

fn qr4_m(k: &dyn StageKernels) -> Result<f64> {
    let (q, rr) = qr(k, &r::X4.matrix(), &TypeSchedule::uniform(BasicKind::M, 4))?;
    Ok(qr4_m_check(&q, &rr))
}

fn qr4_analytic(k: &dyn StageKernels) -> Result<f64> {
    let (q, rr) = qr(k, &r::X4.matrix(), &TypeSchedule::analytic(4))?;
    Ok(qr4_m_check(&q, &rr))
}

fn qr4_g(k: &dyn StageKernels) -> Result<f64> {
    let (q, rr) = qr(k, &r::X4.matrix(), &TypeSchedule::uniform(BasicKind::G, 4))?;
    Ok(mat_diff(&q, &r::QR4_G_Q).max(mat_diff(&rr, &r::QR4_G_R)))
}

fn qr4_householder(_: &dyn StageKernels) -> Result<f64> {
    let d = householder_qr(&r::X4.matrix())?;
    let want = r::QR4_H_R.matrix();
    Ok(d.factor
        .as_slice()
        .iter()
        .zip(want.as_slice())
        .map(|(a, b)| (a.norm() - b.norm()).abs())
        .fold(0.0, f64::max))
}

fn ql4_g(k: &dyn StageKernels) -> Result<f64> {
    let schedule = TypeSchedule::uniform(BasicKind::G, 4);
    let d = ql_decompose_using(&r::X4.matrix(), &schedule, RankPolicy::Strict, k)?;
    Ok(mat_diff(&d.q, &r::QL4_G_Q).max(mat_diff(&d.factor, &r::QL4_G_L)))
}

fn qr6_m(k: &dyn StageKernels) -> Result<f64> {
    let (q, rr) = qr(k, &r::X6.matrix(), &TypeSchedule::uniform(BasicKind::M, 6))?;
    Ok(mat_diff(&q, &r::QR6_M_Q).max(mat_diff(&rr, &r::QR6_M_R)))
}

fn qr6_mixed(k: &dyn StageKernels) -> Result<f64> {
    use BasicKind::*;
    let schedule = TypeSchedule::new(vec![T, M, G, T, T]);
    let (q, rr) = qr(k, &r::X6.matrix(), &schedule)?;
    Ok(mat_diff(&q, &r::QR6_MIXED_Q).max(mat_diff(&rr, &r::QR6_MIXED_R)))
}
