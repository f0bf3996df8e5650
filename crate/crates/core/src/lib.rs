//! QR and QL decompositions of complex square matrices built from
//! discrete signal-induced heap transforms (DsiHT).
//!
//! A DsiHT is a unitary cascade of 2×2 transforms, induced by a generator
//! vector, that moves the generator's energy into a single component.
//! Three basic 2×2 kinds are provided ([`BasicKind::T`], [`BasicKind::M`],
//! [`BasicKind::G`]), and the M kind also has a matrix-free evaluation
//! ([`AnalyticPlan`]). Decompositions may mix kinds per stage through a
//! [`TypeSchedule`].
//!
//! ```
//! use dsiht::{qr_decompose, BasicKind, CMatrix, Cpx, TypeSchedule};
//!
//! let x = CMatrix::from_rows(&[
//!     [Cpx::new(1.0, 2.0), Cpx::new(2.0, -3.0)],
//!     [Cpx::new(2.0, -3.0), Cpx::new(3.0, 1.0)],
//! ]);
//! let d = qr_decompose(&x, &TypeSchedule::uniform(BasicKind::M, 2)).unwrap();
//! assert!(d.residual_norm < 1e-13);
//! assert!(d.factor[(1, 0)].norm() < 1e-13);
//! ```

pub mod basic;
pub mod bench;
pub mod decomp;
pub mod demo;
pub mod error;
pub mod heap;
pub mod matio;
pub mod matrix;
pub mod reference;

pub use basic::{
    apply_basic, complex_sign, heap_value, make_basic, real_givens_angle, Basic2x2, BasicKind, GivensAngle,
};
pub use bench::BenchRow;
pub use decomp::{
    householder_qr, ql_decompose, ql_decompose_using, ql_decompose_with, qr_decompose, qr_decompose_using,
    qr_decompose_with, residual_norm, spectral_norm, spectral_norm_with, triangularize, unitarity_error,
    DecompResult, DefaultKernels, Engine, RankPolicy, Reflector, Shape, StageKernels, TypeSchedule,
};
pub use error::{DsihtError, Result};
pub use heap::{
    angular_representation, dsiht, dsiht_analytic, dsiht_matrix, AnalyticPlan, AngularRep, CorrelationState,
    Generator, HeapPath, HeapPlan, StageOp,
};
pub use matio::{format_entry, format_matrix, parse_entry, parse_matrix, random_int_complex_matrix, RngState};
pub use matrix::{CMatrix, Cpx};
