//! The 2×2 complex basic transforms (T, M, G) and the real Givens angle.
//!
//! Every basic transform is generated by a pair `(x0, x1)` and maps that
//! pair to `(heap, 0)`. They differ in the phase they leave on the heap and
//! on the second output:
//!
//! * `T` — `sign(Re x0)/r · [[x̄0, x̄1], [-x1, x0]]`, determinant 1.
//! * `M` — `1/r · [[x̄0, x̄1], [-x1·x̄0/|x0|, |x0|]]`, heap is `+r`.
//! * `G` — the complex Givens rotation with real diagonal `|x0|/r`,
//!   heap is `sign(x0)·r`.
//!
//! with `r = sqrt(|x0|² + |x1|²)`. When `x0 = 0` the unit phase `x0/|x0|`
//! is taken as 1, so `M` and `G` both reduce to `1/|x1| · [[0, x̄1], [-x1, 0]]`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{DsihtError, Result};
use crate::matrix::{CMatrix, Cpx};

/// Family of 2×2 basic transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicKind {
    T,
    M,
    G,
}

impl BasicKind {
    pub const ALL: [BasicKind; 3] = [BasicKind::T, BasicKind::M, BasicKind::G];
}

impl fmt::Display for BasicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasicKind::T => "t",
            BasicKind::M => "m",
            BasicKind::G => "g",
        };
        f.write_str(s)
    }
}

impl FromStr for BasicKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "t" | "1" => Ok(BasicKind::T),
            "m" | "2" => Ok(BasicKind::M),
            "g" | "3" => Ok(BasicKind::G),
            other => Err(format!("unknown transform kind {other:?} (expected t, m or g)")),
        }
    }
}

/// `x/|x|`, with `sign(0) = 1`.
#[inline]
pub fn complex_sign(x: Cpx) -> Cpx {
    let m = x.norm();
    if m > 0.0 {
        x / m
    } else {
        Cpx::new(1.0, 0.0)
    }
}

/// Sign of the real part, with `sign(0) = +1`.
#[inline]
fn real_sign(x: Cpx) -> f64 {
    if x.re < 0.0 {
        -1.0
    } else {
        1.0
    }
}

#[inline]
fn pair_norm(x0: Cpx, x1: Cpx) -> Result<f64> {
    let r = x0.norm().hypot(x1.norm());
    if r == 0.0 {
        Err(DsihtError::ZeroGeneratorPair)
    } else {
        Ok(r)
    }
}

/// An explicit 2×2 basic transform matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Basic2x2 {
    pub kind: BasicKind,
    pub m: [[Cpx; 2]; 2],
}

impl Basic2x2 {
    #[inline]
    pub fn apply(&self, z0: Cpx, z1: Cpx) -> (Cpx, Cpx) {
        let [[a, b], [c, d]] = self.m;
        (a * z0 + b * z1, c * z0 + d * z1)
    }

    pub fn det(&self) -> Cpx {
        let [[a, b], [c, d]] = self.m;
        a * d - b * c
    }

    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::from_rows(&self.m)
    }
}

/// Builds the basic transform of `kind` generated by `(x0, x1)`.
pub fn make_basic(kind: BasicKind, x0: Cpx, x1: Cpx) -> Result<Basic2x2> {
    let r = pair_norm(x0, x1)?;
    let a0 = x0.norm();
    // x0/|x0| with the sign(0) = 1 convention
    let phase = complex_sign(x0);
    let m = match kind {
        BasicKind::T => {
            let s = real_sign(x0) / r;
            [[x0.conj() * s, x1.conj() * s], [-x1 * s, x0 * s]]
        }
        BasicKind::M => [
            [x0.conj() / r, x1.conj() / r],
            [-x1 * phase.conj() / r, Cpx::new(a0 / r, 0.0)],
        ],
        BasicKind::G => [
            [Cpx::new(a0 / r, 0.0), phase * x1.conj() / r],
            [-x1 * phase.conj() / r, Cpx::new(a0 / r, 0.0)],
        ],
    };
    Ok(Basic2x2 { kind, m })
}

/// Applies the `(x0, x1)`-generated basic transform to `(z0, z1)` without
/// building the matrix.
#[inline]
pub fn apply_basic(kind: BasicKind, x0: Cpx, x1: Cpx, z0: Cpx, z1: Cpx) -> Result<(Cpx, Cpx)> {
    let r = pair_norm(x0, x1)?;
    let out = match kind {
        BasicKind::T => {
            let s = real_sign(x0) / r;
            (
                (x0.conj() * z0 + x1.conj() * z1) * s,
                (x0 * z1 - x1 * z0) * s,
            )
        }
        BasicKind::M => {
            let a0 = x0.norm();
            let phase = complex_sign(x0);
            (
                (x0.conj() * z0 + x1.conj() * z1) / r,
                (z1 * a0 - x1 * phase.conj() * z0) / r,
            )
        }
        BasicKind::G => {
            let a0 = x0.norm();
            let phase = complex_sign(x0);
            (
                (z0 * a0 + phase * x1.conj() * z1) / r,
                (z1 * a0 - x1 * phase.conj() * z0) / r,
            )
        }
    };
    Ok(out)
}

/// First output of the basic transform applied to its own generator.
#[inline]
pub fn heap_value(kind: BasicKind, x0: Cpx, x1: Cpx) -> Result<Cpx> {
    let r = pair_norm(x0, x1)?;
    Ok(match kind {
        BasicKind::T => Cpx::new(real_sign(x0) * r, 0.0),
        BasicKind::M => Cpx::new(r, 0.0),
        BasicKind::G => complex_sign(x0) * r,
    })
}

/// Angle of a real plane rotation `[[cos φ, -sin φ], [sin φ, cos φ]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GivensAngle {
    pub phi: f64,
}

impl GivensAngle {
    pub fn cos(&self) -> f64 {
        self.phi.cos()
    }

    pub fn sin(&self) -> f64 {
        self.phi.sin()
    }

    /// Rotates `(x, y)`.
    pub fn rotate(&self, x: f64, y: f64) -> (f64, f64) {
        let (s, c) = self.phi.sin_cos();
        (c * x - s * y, s * x + c * y)
    }
}

/// Angle whose rotation sends `(x, y)` to `(±sqrt(x² + y²), 0)`.
///
/// `x = 0` gives `π/2`. For `x < 0` the angle is shifted by `π` so the
/// heap comes out positive, then wrapped into `(-π, π]`.
pub fn real_givens_angle(x: f64, y: f64) -> Result<GivensAngle> {
    if x == 0.0 && y == 0.0 {
        return Err(DsihtError::ZeroGeneratorPair);
    }
    let mut phi = if x == 0.0 { FRAC_PI_2 } else { (-y / x).atan() };
    if x < 0.0 {
        phi += PI;
        if phi > PI {
            phi -= 2.0 * PI;
        }
    }
    Ok(GivensAngle { phi })
}

#[cfg(test)]
#[allow(clippy::needless_range_loop, clippy::approx_constant)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cpx {
        Cpx::new(re, im)
    }

    fn close(a: Cpx, b: Cpx, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    const X0: Cpx = Cpx::new(1.0, 3.0);
    const X1: Cpx = Cpx::new(-2.0, 5.0);
    const Z0: Cpx = Cpx::new(-7.0, 2.0);
    const Z1: Cpx = Cpx::new(3.0, -5.0);

    #[test]
    fn complex_sign_examples() {
        let s = complex_sign(c(1.0, -3.0));
        assert!(close(s, c(0.3162, -0.9487), 5e-5));
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert_eq!(complex_sign(c(0.0, 0.0)), c(1.0, 0.0));
        assert_eq!(complex_sign(c(-5.0, 0.0)), c(-1.0, 0.0));
    }

    #[test]
    fn t_matrix_of_worked_pair() {
        let t = make_basic(BasicKind::T, X0, X1).unwrap();
        let k = 1.0 / 39f64.sqrt();
        let want = [[c(1.0, -3.0), c(-2.0, -5.0)], [c(2.0, -5.0), c(1.0, 3.0)]];
        for i in 0..2 {
            for j in 0..2 {
                assert!(close(t.m[i][j], want[i][j] * k, 1e-15));
            }
        }
        assert!(close(t.det(), c(1.0, 0.0), 1e-14));
    }

    #[test]
    fn g_matrix_of_worked_pair() {
        let g = make_basic(BasicKind::G, X0, X1).unwrap();
        let k = 1.0 / 39f64.sqrt();
        let s10 = 10f64.sqrt();
        let want = [
            [c(s10, 0.0), c(13.0, -11.0) / s10],
            [c(-13.0, -11.0) / s10, c(s10, 0.0)],
        ];
        for i in 0..2 {
            for j in 0..2 {
                assert!(close(g.m[i][j], want[i][j] * k, 1e-14));
            }
        }
        assert!(close(g.det(), c(1.0, 0.0), 1e-14));
    }

    #[test]
    fn m_det_is_conjugate_phase() {
        let m = make_basic(BasicKind::M, X0, X1).unwrap();
        assert!(close(m.det(), c(0.3162, -0.9487), 5e-5));
        assert!(close(m.det(), complex_sign(X0).conj(), 1e-14));
    }

    #[test]
    fn m_with_unit_generator_is_identity() {
        let m = make_basic(BasicKind::M, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(m.m, [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
    }

    #[test]
    fn zero_leading_component_degenerates() {
        let x1 = c(3.0, -4.0);
        let want = [[c(0.0, 0.0), x1.conj() / 5.0], [-x1 / 5.0, c(0.0, 0.0)]];
        for kind in [BasicKind::M, BasicKind::G] {
            let b = make_basic(kind, c(0.0, 0.0), x1).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    assert!(close(b.m[i][j], want[i][j], 1e-15), "{kind}");
                }
            }
        }
        // T uses sign(Re 0) = +1, which gives the same matrix
        let t = make_basic(BasicKind::T, c(0.0, 0.0), x1).unwrap();
        assert!(close(t.m[0][1], want[0][1], 1e-15));
    }

    #[test]
    fn transforms_of_worked_signal() {
        let (t0, t1) = apply_basic(BasicKind::T, X0, X1, Z0, Z1).unwrap();
        assert!(close(t0, c(-5.1241, 2.8823), 5e-5));
        assert!(close(t1, c(2.2418, 6.8855), 5e-5));
        let (m0, m1) = apply_basic(BasicKind::M, X0, X1, Z0, Z1).unwrap();
        assert!(close(m0, c(-5.1241, 2.8823), 5e-5));
        assert!(close(m1, c(7.2411, 0.0506), 5e-5));
        let (g0, g1) = apply_basic(BasicKind::G, X0, X1, Z0, Z1).unwrap();
        assert!(close(g0, c(-4.3548, -3.9497), 5e-5));
        assert!(close(g1, c(7.2411, 0.0506), 5e-5));
    }

    #[test]
    fn generator_is_heaped() {
        let (h, z) = apply_basic(BasicKind::M, X0, X1, X0, X1).unwrap();
        assert!(close(h, c(6.2450, 0.0), 5e-5));
        assert!(z.norm() < 1e-14);
        let (h, _) = apply_basic(BasicKind::T, X0, X1, X0, X1).unwrap();
        assert!(close(h, c(6.2450, 0.0), 5e-5));
    }

    #[test]
    fn heap_value_examples() {
        assert!(close(heap_value(BasicKind::G, X0, X1).unwrap(), c(1.9748, 5.9245), 5e-5));
        assert!(close(heap_value(BasicKind::T, X0, X1).unwrap(), c(6.2450, 0.0), 5e-5));
        assert_eq!(heap_value(BasicKind::T, c(-1.0, 0.0), c(0.0, 0.0)).unwrap(), c(-1.0, 0.0));
    }

    #[test]
    fn zero_pair_is_an_error() {
        let z = c(0.0, 0.0);
        for kind in BasicKind::ALL {
            assert_eq!(make_basic(kind, z, z), Err(DsihtError::ZeroGeneratorPair));
            assert!(apply_basic(kind, z, z, X0, X1).is_err());
            assert!(heap_value(kind, z, z).is_err());
        }
        assert!(real_givens_angle(0.0, 0.0).is_err());
    }

    #[test]
    fn givens_angles() {
        assert!((real_givens_angle(1.0, 1.0).unwrap().phi + 0.7854).abs() < 5e-5);
        assert!((real_givens_angle(2f64.sqrt(), 2.0).unwrap().phi + 0.9553).abs() < 5e-5);
        assert!((real_givens_angle(0.0, 1.0).unwrap().phi - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn givens_angle_zeroes_second_component() {
        for (x, y) in [(3.0, 4.0), (-3.0, 4.0), (-3.0, -4.0), (0.0, -2.0), (-1.0, 0.0)] {
            let a = real_givens_angle(x, y).unwrap();
            assert!(a.phi > -PI && a.phi <= PI);
            let (h, z) = a.rotate(x, y);
            assert!(z.abs() < 1e-14, "({x}, {y})");
            assert!((h.abs() - x.hypot(y)).abs() < 1e-14);
            if x < 0.0 {
                assert!(h > 0.0);
            }
        }
    }

    #[test]
    fn kind_parses_from_names_and_codes() {
        assert_eq!("T".parse::<BasicKind>().unwrap(), BasicKind::T);
        assert_eq!("2".parse::<BasicKind>().unwrap(), BasicKind::M);
        assert_eq!(" g ".parse::<BasicKind>().unwrap(), BasicKind::G);
        assert!("x".parse::<BasicKind>().is_err());
    }
}
