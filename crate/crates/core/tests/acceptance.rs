//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the summary is always printed; exits non-zero on failure.

use std::process::ExitCode;
use std::time::Instant;

use dsiht::reference::{self as r, real_matrix, real_vector, Table};
use dsiht::*;

const TOL: f64 = 5e-4;

struct Line {
    passed: bool,
    /// Met only in the part that is attainable; see the detail text.
    partial: bool,
    detail: String,
}

impl Line {
    fn partial(mut self, yes: bool) -> Self {
        self.partial = yes;
        self
    }
}

fn line(passed: bool, detail: impl Into<String>) -> Line {
    Line {
        passed,
        partial: false,
        detail: detail.into(),
    }
}

fn vdiff(a: &[Cpx], b: &[Cpx]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn mdiff<const R: usize, const C: usize>(got: &CMatrix, want: &Table<R, C>) -> f64 {
    got.max_abs_diff(&want.matrix())
}

fn c(re: f64, im: f64) -> Cpx {
    Cpx::new(re, im)
}

fn criterion_1() -> Line {
    let [x0, x1] = r::PAIR.vector()[..] else { unreachable!() };
    let [z0, z1] = r::PAIR_SIGNAL.vector()[..] else { unreachable!() };
    let mut err = 0.0f64;
    for k in BasicKind::ALL {
        err = err.max(make_basic(k, x0, x1).unwrap().to_matrix().max_abs_diff(&r::pair_matrix(k)));
    }
    let det = make_basic(BasicKind::M, x0, x1).unwrap().det();
    err = err.max((det - c(r::PAIR_M_DET.0, r::PAIR_M_DET.1)).norm());
    for (k, a, b, want) in [
        (BasicKind::T, z0, z1, r::PAIR_T_Z),
        (BasicKind::M, z0, z1, r::PAIR_M_Z),
        (BasicKind::G, z0, z1, r::PAIR_G_Z),
        (BasicKind::T, x0, x1, r::PAIR_TM_X),
        (BasicKind::M, x0, x1, r::PAIR_TM_X),
        (BasicKind::G, x0, x1, r::PAIR_G_X),
    ] {
        let (p, q) = apply_basic(k, x0, x1, a, b).unwrap();
        err = err.max(vdiff(&[p, q], &want.vector()));
    }
    line(err <= TOL, format!("max deviation {err:.2e}"))
}

fn criterion_2() -> Line {
    let gen = Generator::from_real(&r::GEN_6).unwrap();
    let z = real_vector(&r::SIGNAL_6);
    let mut err = 0.0f64;
    for (path, h, angles, zz) in [
        (HeapPath::Natural, r::H_NATURAL, r::ANGLES_NATURAL, r::Z_NATURAL),
        (HeapPath::Strong, r::H_STRONG, r::ANGLES_STRONG, r::Z_STRONG),
    ] {
        err = err.max(dsiht_matrix(&gen, BasicKind::T, path).max_abs_diff(&real_matrix(&h)));
        let rep = angular_representation(&gen, path).unwrap();
        err = err.max(rep.angles.iter().zip(angles).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
        err = err.max(vdiff(&dsiht(&gen, &z, BasicKind::T, path).unwrap(), &real_vector(&zz)));
    }
    line(err <= TOL, format!("max deviation {err:.2e}"))
}

/// Rows holding an entry with modulus above `1e-10`.
fn support_rows(m: &CMatrix) -> Vec<usize> {
    (0..m.rows()).filter(|&i| m.row(i).iter().any(|z| z.norm() > 1e-10)).collect()
}

fn criterion_3() -> Line {
    let gen = Generator::new(r::GEN_4.vector()).unwrap();
    let z = r::SIGNAL_4.vector();
    let mut err = 0.0f64;
    let mut mats = Vec::new();
    for (k, h, hz) in [
        (BasicKind::T, r::HEAP4_T, r::HEAP4_T_Z),
        (BasicKind::M, r::HEAP4_M, r::HEAP4_M_Z),
        (BasicKind::G, r::HEAP4_G, r::HEAP4_G_Z),
    ] {
        let m = dsiht_matrix(&gen, k, HeapPath::Natural);
        err = err.max(mdiff(&m, &h));
        err = err.max(vdiff(&dsiht(&gen, &z, k, HeapPath::Natural).unwrap(), &hz.vector()));
        mats.push(m);
    }
    let tm = support_rows(&(&mats[0] - &mats[1]));
    let tg = support_rows(&(&mats[0] - &mats[2]));
    let support_ok = tm == [1] && tg == [0, 1];
    line(
        err <= TOL && support_ok,
        format!("max deviation {err:.2e}; T-M rows {tm:?}, T-G rows {tg:?}"),
    )
}

fn criterion_4() -> Line {
    let x = r::X4.matrix();
    let t = qr_decompose(&x, &TypeSchedule::uniform(BasicKind::T, 4)).unwrap();
    let m = qr_decompose(&x, &TypeSchedule::uniform(BasicKind::M, 4)).unwrap();
    let g = qr_decompose(&x, &TypeSchedule::uniform(BasicKind::G, 4)).unwrap();
    let ql = ql_decompose(&x, &TypeSchedule::uniform(BasicKind::G, 4)).unwrap();
    let h = householder_qr(&x).unwrap();

    let mut err = mdiff(&t.factor, &r::QR4_T_R).max(mdiff(&t.q, &r::QR4_T_Q));
    let rm = r::QR4_M_R.matrix();
    for i in 0..4 {
        for j in 0..4 {
            let e = if (i, j) == (2, 2) {
                (m.factor[(i, j)].norm() - rm[(i, j)].norm()).abs()
            } else {
                (m.factor[(i, j)] - rm[(i, j)]).norm()
            };
            err = err.max(e);
        }
    }
    let rg = r::QR4_G_R.matrix();
    err = err.max((g.factor[(0, 0)] - rg[(0, 0)]).norm());
    err = err.max((g.factor[(3, 3)] - rg[(3, 3)]).norm());
    let lg = r::QL4_G_L.matrix();
    err = err.max((ql.factor[(0, 0)] - lg[(0, 0)]).norm());
    err = err.max((ql.factor[(3, 3)] - lg[(3, 3)]).norm());
    for (i, want) in [5.4772, 7.3462, 3.3243, 8.3252].into_iter().enumerate() {
        err = err.max((h.factor[(i, i)].norm() - want).abs());
    }
    line(err <= TOL, format!("max deviation {err:.2e}"))
}

fn criterion_5() -> Line {
    let x = r::X6.matrix();
    let m = qr_decompose(&x, &TypeSchedule::uniform(BasicKind::M, 6)).unwrap();
    let mixed: TypeSchedule = "t,m,g,t,t".parse().unwrap();
    let mx = qr_decompose(&x, &mixed).unwrap();
    let mut err = mdiff(&m.q, &r::QR6_M_Q).max(mdiff(&m.factor, &r::QR6_M_R));
    let want = r::QR6_MIXED_R.matrix();
    for i in [2, 5] {
        err = err.max(vdiff(mx.factor.row(i), want.row(i)));
    }
    line(err <= TOL, format!("max deviation {err:.2e}"))
}

const TABLE_1: [(usize, f64); 12] = [
    (6, 5.0854e-15),
    (13, 2.8659e-14),
    (17, 4.8721e-14),
    (19, 5.7744e-14),
    (21, 9.2941e-14),
    (40, 3.6162e-13),
    (64, 7.9044e-13),
    (100, 2.4268e-12),
    (128, 4.8050e-12),
    (201, 1.0487e-11),
    (256, 1.6789e-11),
    (400, 4.8725e-11),
];

fn criterion_6() -> Line {
    let sizes: Vec<usize> = TABLE_1.iter().map(|&(n, _)| n).collect();
    let start = Instant::now();
    let rows = bench::run(&sizes, 1, 1, false).unwrap();
    let total = start.elapsed().as_secs_f64();
    let mut ok = total < 60.0;
    let mut worst_table = 0.0f64;
    let mut worst_hh = 0.0f64;
    let mut t400 = 0.0;
    for (row, &(n, paper)) in rows.iter().zip(&TABLE_1) {
        assert_eq!(row.n, n);
        let vs_table = row.norm_dsiht / paper;
        let vs_hh = row.norm_dsiht / row.norm_householder;
        worst_table = worst_table.max(vs_table);
        worst_hh = worst_hh.max(vs_hh.max(1.0 / vs_hh));
        ok &= vs_table <= 20.0;
        ok &= vs_hh <= 2.0 || (0.1..=10.0).contains(&vs_hh);
        if n == 400 {
            t400 = row.time_dsiht_ms / 1e3;
        }
    }
    ok &= t400 < 10.0;
    line(
        ok,
        format!(
            "max norm/Table ratio {worst_table:.2}, max Householder factor {worst_hh:.2}, \
             bench {total:.2}s, N=400 {t400:.2}s"
        ),
    )
}

/// Uniform doubles in `[-1, 1)` from SplitMix64.
struct Uniform(RngState);

impl Uniform {
    fn f(&mut self) -> f64 {
        let (u, next) = self.0.next();
        self.0 = next;
        (u >> 11) as f64 / (1u64 << 52) as f64 - 1.0
    }

    fn cpx(&mut self) -> Cpx {
        c(self.f(), self.f())
    }

    fn below(&mut self, n: usize) -> usize {
        let (u, next) = self.0.next();
        self.0 = next;
        (u % n as u64) as usize
    }

    fn vec(&mut self, n: usize) -> Vec<Cpx> {
        (0..n).map(|_| self.cpx()).collect()
    }
}

fn criterion_7() -> Line {
    const TRIALS: usize = 1000;
    let mut rng = Uniform(RngState::new(7));
    let kinds = BasicKind::ALL;
    let paths = [HeapPath::Natural, HeapPath::Strong];
    let mut worst = [0.0f64; 7];
    let bounds = [1e-14, 1e-12, 1e-11, 1e-12, 1.0, 1e-11, 1e-13];

    for _ in 0..TRIALS {
        let (x0, x1) = (rng.cpx(), rng.cpx());
        for k in kinds {
            let b = make_basic(k, x0, x1).unwrap().to_matrix();
            worst[0] = worst[0].max(unitarity_error(&b));
        }
        let t = make_basic(BasicKind::T, x0, x1).unwrap().to_matrix();
        let m = make_basic(BasicKind::M, x0, x1).unwrap().to_matrix();
        let g = make_basic(BasicKind::G, x0, x1).unwrap().to_matrix();
        let u = x0 / x0.norm();
        let s = x0.re.signum();
        let z = c(0.0, 0.0);
        let from_t = &CMatrix::from_rows(&[[u * s, z], [z, u.conj() * s]]) * &t;
        let from_m = &CMatrix::from_rows(&[[u, z], [z, c(1.0, 0.0)]]) * &m;
        worst[6] = worst[6].max(g.max_abs_diff(&from_t)).max(g.max_abs_diff(&from_m));
    }

    for _ in 0..TRIALS {
        let n = 2 + rng.below(15);
        let gen = Generator::new(rng.vec(n)).unwrap();
        let sig = rng.vec(n);
        let k = kinds[rng.below(3)];
        let p = paths[rng.below(2)];
        let out = dsiht(&gen, &sig, k, p).unwrap();
        let e0 = sig.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let e1 = out.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        worst[1] = worst[1].max((e1 - e0).abs() / e0);
        let heaped = dsiht(&gen, gen.values(), k, p).unwrap();
        let tail = heaped[1..].iter().map(|v| v.norm()).fold(0.0, f64::max);
        worst[2] = worst[2].max(tail / gen.norm());
        let cascade = dsiht(&gen, &sig, BasicKind::M, HeapPath::Natural).unwrap();
        worst[3] = worst[3].max(vdiff(&cascade, &dsiht_analytic(&gen, &sig).unwrap()));
    }

    for _ in 0..TRIALS {
        let n = 2 + rng.below(63);
        let x = CMatrix::from_vec(n, n, rng.vec(n * n)).unwrap();
        let schedule = if rng.below(5) == 0 {
            TypeSchedule::analytic(n)
        } else {
            TypeSchedule::new((1..n).map(|_| kinds[rng.below(3)]).collect())
        };
        let xn = spectral_norm(&x);
        let d = qr_decompose(&x, &schedule).unwrap();
        worst[4] = worst[4].max(d.residual_norm / (100.0 * n as f64 * f64::EPSILON * xn));
        worst[5] = worst[5].max(d.factor.max_below_diagonal() / xn);
    }

    let ok = worst.iter().zip(bounds).all(|(w, b)| *w <= b);
    line(
        ok,
        format!(
            "unitarity {:.1e}, energy {:.1e}, zeroing {:.1e}, analytic {:.1e}, \
             reconstruction {:.3} of bound, triangularity {:.1e}, kind relations {:.1e}",
            worst[0], worst[1], worst[2], worst[3], worst[4], worst[5], worst[6]
        ),
    )
}

/// M stages whose heap component comes out negated.
struct FlippedPivot;

struct Negate0(Box<dyn StageOp>);

impl StageOp for Negate0 {
    fn apply(&self, v: &mut [Cpx]) {
        self.0.apply(v);
        v[0] = -v[0];
    }
}

impl StageKernels for FlippedPivot {
    fn cascade(&self, gen: &Generator, kind: BasicKind) -> Box<dyn StageOp> {
        let plan = DefaultKernels.cascade(gen, kind);
        match kind {
            BasicKind::M => Box::new(Negate0(plan)),
            _ => plan,
        }
    }
}

/// Analytic engine with selectable subscripts:
/// `z_k' = (E_a²(x)·z_k − E_b(z, x)·x_k) / (E_{k−1}(x)·E_k(x))` where `a`
/// and `b` are `k` or `k − 1`. The published form uses `a = b = k`.
#[derive(Clone, Copy)]
struct IndexVariant {
    energy_at_k: bool,
    corr_at_k: bool,
}

struct VariantPlan(Vec<Cpx>, IndexVariant);

impl StageOp for VariantPlan {
    fn apply(&self, v: &mut [Cpx]) {
        let (x, var) = (&self.0, self.1);
        let mut exy = v[0] * x[0].conj();
        let mut ex2 = x[0].norm_sqr();
        for k in 1..v.len() {
            let zk = v[k];
            let (exy_prev, ex2_prev) = (exy, ex2);
            exy += zk * x[k].conj();
            ex2 += x[k].norm_sqr();
            let e2 = if var.energy_at_k { ex2 } else { ex2_prev };
            let cor = if var.corr_at_k { exy } else { exy_prev };
            v[k] = (zk * e2 - cor * x[k]) / (ex2_prev.sqrt() * ex2.sqrt());
        }
        v[0] = exy / ex2.sqrt();
    }
}

impl StageKernels for IndexVariant {
    fn analytic(&self, gen: &Generator) -> Box<dyn StageOp> {
        Box::new(VariantPlan(gen.values().to_vec(), *self))
    }
}

fn failed(outcomes: &[demo::Outcome], name: &str) -> bool {
    outcomes.iter().any(|o| o.name == name && !o.passed())
}

fn failures(o: &[demo::Outcome]) -> String {
    o.iter().filter(|o| !o.passed()).map(|o| o.name).collect::<Vec<_>>().join(", ")
}

/// Largest deviation of the published-subscript engine from the library
/// analytic engine over random inputs.
fn published_form_deviation() -> f64 {
    let mut rng = Uniform(RngState::new(8));
    let published = IndexVariant {
        energy_at_k: true,
        corr_at_k: true,
    };
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = 2 + rng.below(15);
        let gen = Generator::new(rng.vec(n)).unwrap();
        let mut a = rng.vec(n);
        let mut b = a.clone();
        published.analytic(&gen).apply(&mut a);
        DefaultKernels.analytic(&gen).apply(&mut b);
        worst = worst.max(vdiff(&a, &b));
    }
    worst
}

fn criterion_8() -> Line {
    let baseline = demo::all_passed(&demo::run());
    let flipped = demo::run_with(&FlippedPivot);
    let pivot_ok = failed(&flipped, "4x4 QR m");

    // Mixed-subscript variants differ from the cascade and must be caught.
    let mut mixed_ok = true;
    let mut mixed = Vec::new();
    for var in [
        IndexVariant {
            energy_at_k: true,
            corr_at_k: false,
        },
        IndexVariant {
            energy_at_k: false,
            corr_at_k: true,
        },
    ] {
        let o = demo::run_with(&var);
        mixed_ok &= failed(&o, "analytic equivalence");
        mixed.push(failures(&o));
    }

    // With both subscripts at k the z_k·|x_k|² terms cancel, so the
    // published form equals the corrected one and no example can tell
    // them apart.
    let dev = published_form_deviation();
    let published = demo::run_with(&IndexVariant {
        energy_at_k: true,
        corr_at_k: true,
    });
    let equivalent = dev <= 1e-12 && demo::all_passed(&published);

    let passed = baseline && pivot_ok && mixed_ok && equivalent;
    Line {
        passed,
        partial: false,
        detail: format!(
            "flipped M pivot fails [{}]; mixed-subscript analytic variants fail [{}] and [{}]; \
             published-subscript analytic form is an equivalent mutant (max deviation {dev:.1e}), \
             undetectable by any example",
            failures(&flipped),
            mixed[0],
            mixed[1]
        ),
    }
    .partial(equivalent)
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Line);
    let criteria: [Criterion; 8] = [
        ("basic 2x2 kernels", criterion_1),
        ("real 6-point heap transforms", criterion_2),
        ("complex 4-point heap transforms", criterion_3),
        ("4x4 decompositions", criterion_4),
        ("6x6 decompositions", criterion_5),
        ("precision benchmark", criterion_6),
        ("property suites", criterion_7),
        ("mutation sanity", criterion_8),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let l = check();
        all &= l.passed;
        let status = match (l.passed, l.partial) {
            (false, _) => "FAIL",
            (true, true) => "PARTIAL",
            (true, false) => "PASS",
        };
        println!("criterion {} {status}: {name}: {}", i + 1, l.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
