//! Reference values for the worked examples, rounded to four decimals.
//!
//! Used by [`crate::demo`] and by the test suites.

// published values are rounded, not approximations of constants
#![allow(clippy::approx_constant)]

use crate::basic::BasicKind;
use crate::matrix::{CMatrix, Cpx};

/// A complex table stored as separate real and imaginary parts.
#[derive(Debug, Clone, Copy)]
pub struct Table<const R: usize, const C: usize> {
    pub re: [[f64; C]; R],
    pub im: [[f64; C]; R],
}

impl<const R: usize, const C: usize> Table<R, C> {
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_fn(R, C, |i, j| Cpx::new(self.re[i][j], self.im[i][j]))
    }

    /// Row 0 as a vector.
    pub fn vector(&self) -> Vec<Cpx> {
        (0..C).map(|j| Cpx::new(self.re[0][j], self.im[0][j])).collect()
    }
}

pub fn real_vector(v: &[f64]) -> Vec<Cpx> {
    v.iter().map(|&x| Cpx::new(x, 0.0)).collect()
}

pub fn real_matrix<const N: usize>(m: &[[f64; N]]) -> CMatrix {
    CMatrix::from_fn(m.len(), N, |i, j| Cpx::new(m[i][j], 0.0))
}

/// Closed forms of the T, M and G matrices induced by [`PAIR`].
pub fn pair_matrix(kind: BasicKind) -> CMatrix {
    let s39 = 39f64.sqrt();
    let s10 = 10f64.sqrt();
    let c = |re: f64, im: f64| Cpx::new(re, im) / s39;
    let rows = match kind {
        BasicKind::T => [[c(1.0, -3.0), c(-2.0, -5.0)], [c(2.0, -5.0), c(1.0, 3.0)]],
        BasicKind::M => [
            [c(1.0, -3.0), c(-2.0, -5.0)],
            [c(-13.0 / s10, -11.0 / s10), c(s10, 0.0)],
        ],
        BasicKind::G => [
            [c(s10, 0.0), c(13.0 / s10, -11.0 / s10)],
            [c(-13.0 / s10, -11.0 / s10), c(s10, 0.0)],
        ],
    };
    CMatrix::from_rows(&rows)
}

// Real 6-point generator

/// Real generator `(1, 1, 2, 4, 3, 1)`.
pub const GEN_6: [f64; 6] = [1.0, 1.0, 2.0, 4.0, 3.0, 1.0];

/// Signal transformed by both paths.
pub const SIGNAL_6: [f64; 6] = [4.0, -2.0, 3.0, -1.0, 7.0, 2.0];

/// T-kind natural-path matrix of `GEN_6`.
pub const H_NATURAL: [[f64; 6]; 6] = [
    [0.1768, 0.1768, 0.3536, 0.7071, 0.5303, 0.1768],
    [-0.7071, 0.7071, 0.0, 0.0, 0.0, 0.0],
    [-0.5774, -0.5774, 0.5774, 0.0, 0.0, 0.0],
    [-0.3482, -0.3482, -0.6963, 0.5222, 0.0, 0.0],
    [-0.1149, -0.1149, -0.2298, -0.4595, 0.8424, 0.0],
    [-0.0318, -0.0318, -0.0635, -0.127, -0.0953, 0.9843],
];

/// T-kind strong-path matrix of `GEN_6`.
pub const H_STRONG: [[f64; 6]; 6] = [
    [0.1768, 0.1768, 0.3536, 0.7071, 0.5303, 0.1768],
    [-0.9843, 0.0318, 0.0635, 0.127, 0.0953, 0.0318],
    [0.0, -0.9837, 0.0656, 0.1312, 0.0984, 0.0328],
    [0.0, 0.0, -0.9309, 0.2864, 0.2148, 0.0716],
    [0.0, 0.0, 0.0, -0.6202, 0.7442, 0.2481],
    [0.0, 0.0, 0.0, 0.0, -0.3162, 0.9487],
];

/// `H_NATURAL · SIGNAL_6`.
pub const Z_NATURAL: [f64; 6] = [4.773, -4.2426, 0.5774, -3.3075, 5.4375, 1.1748];

/// `H_STRONG · SIGNAL_6`.
pub const Z_STRONG: [f64; 6] = [4.773, -3.2068, 2.7873, -1.4322, 6.3258, -0.3162];

/// Angular representation of `GEN_6` on the natural path.
pub const ANGLES_NATURAL: [f64; 5] = [-0.7854, -0.9553, -1.0213, -0.569, -0.1777];

/// Angular representation of `GEN_6` on the strong path.
pub const ANGLES_STRONG: [f64; 5] = [-1.3931, -1.3902, -1.197, -0.669, -0.3218];

// Basic 2x2 transforms

/// Generator pair `(1+3i, −2+5i)`.
pub const PAIR: Table<1, 2> = Table {
    re: [[1.0, -2.0]],
    im: [[3.0, 5.0]],
};

/// Input pair.
pub const PAIR_SIGNAL: Table<1, 2> = Table {
    re: [[-7.0, 3.0]],
    im: [[2.0, -5.0]],
};

/// T applied to `PAIR_SIGNAL`.
pub const PAIR_T_Z: Table<1, 2> = Table {
    re: [[-5.1241, 2.2418]],
    im: [[2.8823, 6.8855]],
};

/// M applied to `PAIR_SIGNAL`.
pub const PAIR_M_Z: Table<1, 2> = Table {
    re: [[-5.1241, 7.2411]],
    im: [[2.8823, 0.0506]],
};

/// G applied to `PAIR_SIGNAL`.
pub const PAIR_G_Z: Table<1, 2> = Table {
    re: [[-4.3548, 7.2411]],
    im: [[-3.9497, 0.0506]],
};

/// T and M applied to their generator.
pub const PAIR_TM_X: Table<1, 2> = Table {
    re: [[6.245, 0.0]],
    im: [[0.0, 0.0]],
};

/// G applied to its generator.
pub const PAIR_G_X: Table<1, 2> = Table {
    re: [[1.9748, 0.0]],
    im: [[5.9245, 0.0]],
};

/// Determinant of the M matrix of `PAIR`.
pub const PAIR_M_DET: (f64, f64) = (0.3162, -0.9487);

// Complex 4-point generator

/// Complex generator.
pub const GEN_4: Table<1, 4> = Table {
    re: [[7.0, 3.0, -6.0, 1.0]],
    im: [[4.0, 7.0, 2.0, 2.0]],
};

/// Signal transformed by all three kinds.
pub const SIGNAL_4: Table<1, 4> = Table {
    re: [[2.0, 1.0, -7.0, 3.0]],
    im: [[-3.0, -4.0, 1.0, 5.0]],
};

/// T-kind matrix of `GEN_4`.
pub const HEAP4_T: Table<4, 4> = Table {
    re: [
        [0.5401, 0.2315, -0.4629, 0.0772],
        [-0.2705, 0.6312, 0.0, 0.0],
        [0.2401, 0.0282, 0.8687, 0.0],
        [-0.0906, -0.1027, 0.0121, 0.985],
    ],
    im: [
        [-0.3086, -0.5401, -0.1543, -0.1543],
        [-0.6312, 0.3607, 0.0, 0.0],
        [-0.2684, -0.339, 0.0, 0.0],
        [-0.0604, 0.006, 0.0846, 0.0],
    ],
};

/// M-kind matrix of `GEN_4`.
pub const HEAP4_M: Table<4, 4> = Table {
    re: [
        [0.5401, 0.2315, -0.4629, 0.0772],
        [-0.548, 0.7269, 0.0, 0.0],
        [0.2401, 0.0282, 0.8687, 0.0],
        [-0.0906, -0.1027, 0.0121, 0.985],
    ],
    im: [
        [-0.3086, -0.5401, -0.1543, -0.1543],
        [-0.4138, 0.0, 0.0, 0.0],
        [-0.2684, -0.339, 0.0, 0.0],
        [-0.0604, 0.006, 0.0846, 0.0],
    ],
};

/// G-kind matrix of `GEN_4`.
pub const HEAP4_G: Table<4, 4> = Table {
    re: [
        [0.622, 0.4687, -0.3254, 0.1435],
        [-0.548, 0.7269, 0.0, 0.0],
        [0.2401, 0.0282, 0.8687, 0.0],
        [-0.0906, -0.1027, 0.0121, 0.985],
    ],
    im: [
        [0.0, -0.3541, -0.3636, -0.0957],
        [-0.4138, 0.0, 0.0, 0.0],
        [-0.2684, -0.339, 0.0, 0.0],
        [-0.0604, 0.006, 0.0846, 0.0],
    ],
};

/// `HEAP4_T · SIGNAL_4`.
pub const HEAP4_T_Z: Table<1, 4> = Table {
    re: [[2.6232, -0.3607, -7.7334, 2.3447]],
    im: [[-3.1632, -2.6148, -0.8404, 4.9129]],
};

/// `HEAP4_M · SIGNAL_4`.
pub const HEAP4_M_Z: Table<1, 4> = Table {
    re: [[2.6232, -1.6105, -7.7334, 2.3447]],
    im: [[-3.1632, -2.0914, -0.8404, 4.9129]],
};

/// `HEAP4_G · SIGNAL_4`.
pub const HEAP4_G_Z: Table<1, 4> = Table {
    re: [[3.8469, -1.6105, -7.7334, 2.3447]],
    im: [[-1.445, -2.0914, -0.8404, 4.9129]],
};

// 4x4 decompositions

/// 4x4 test matrix.
pub const X4: Table<4, 4> = Table {
    re: [
        [1.0, 2.0, 3.0, -3.0],
        [2.0, 3.0, 2.0, -6.0],
        [1.0, 2.0, 3.0, 1.0],
        [3.0, 4.0, 4.0, 2.0],
    ],
    im: [
        [2.0, -3.0, 4.0, 1.0],
        [-3.0, 1.0, -2.0, -7.0],
        [-1.0, -4.0, 2.0, 2.0],
        [-1.0, 3.0, -2.0, 4.0],
    ],
};

/// Q of the uniform T schedule. `[3][3]` has the sign of its imaginary part
/// fixed so the column is orthogonal to the others.
pub const QR4_T_Q: Table<4, 4> = Table {
    re: [
        [0.1826, 0.3448, -0.2415, -0.5158],
        [0.3651, 0.0771, 0.0032, -0.5682],
        [0.1826, 0.1407, -0.0966, 0.5457],
        [0.5477, 0.2859, -0.471, 0.299],
    ],
    im: [
        [0.3651, -0.6035, 0.1577, 0.0299],
        [-0.5477, 0.1906, -0.4489, 0.0075],
        [-0.1826, -0.549, -0.5316, -0.1495],
        [-0.1826, 0.2677, 0.4489, -0.0224],
    ],
};

/// R of the uniform T schedule.
pub const QR4_T_R: Table<4, 4> = Table {
    re: [
        [5.4772, 2.556, 6.5727, 1.6432],
        [0.0, 7.3462, -1.6743, -2.7497],
        [0.0, 0.0, -3.3243, 3.6995],
        [0.0, 0.0, 0.0, 5.6893],
    ],
    im: [
        [0.0, 2.7386, 0.5477, -1.4606],
        [0.0, 0.0, 2.9403, 0.5763],
        [0.0, 0.0, 0.0, -4.9272],
        [0.0, 0.0, 0.0, 6.078],
    ],
};

/// Q of the uniform M schedule.
pub const QR4_M_Q: Table<4, 4> = Table {
    re: [
        [0.1826, 0.3448, 0.2415, -0.5166],
        [0.3651, 0.0771, -0.0032, -0.5671],
        [0.1826, 0.1407, 0.0966, 0.5554],
        [0.5477, 0.2859, 0.471, 0.2999],
    ],
    im: [
        [0.3651, -0.6035, -0.1577, -0.0088],
        [-0.5477, 0.1906, 0.4489, -0.035],
        [-0.1826, -0.549, 0.5316, -0.1083],
        [-0.1826, 0.2677, -0.4489, 0.0],
    ],
};

/// R of the uniform M schedule. `[2][2]` is compared by modulus.
pub const QR4_M_R: Table<4, 4> = Table {
    re: [
        [5.4772, 2.556, 6.5727, 1.6432],
        [0.0, 7.3462, -1.6743, -2.7497],
        [0.0, 0.0, 3.3243, -3.6995],
        [0.0, 0.0, 0.0, 6.1279],
    ],
    im: [
        [0.0, 2.7386, 0.5477, -1.4606],
        [0.0, 0.0, 2.9403, 0.5763],
        [0.0, 0.0, 0.0, 4.9272],
        [0.0, 0.0, 0.0, 5.6355],
    ],
};

/// Q of the uniform G schedule.
pub const QR4_G_Q: Table<4, 4> = Table {
    re: [
        [0.4082, 0.2457, -0.2362, -0.5166],
        [-0.3266, 0.1061, 0.4179, -0.5671],
        [-0.0816, 0.0527, 0.4576, 0.5554],
        [0.0816, 0.3244, -0.5918, 0.2999],
    ],
    im: [
        [0.0, -0.6502, -0.1656, -0.0088],
        [-0.5715, 0.1761, -0.1639, -0.035],
        [-0.2449, -0.5643, -0.2872, -0.1083],
        [-0.5715, 0.2195, -0.2705, 0.0],
    ],
};

/// R of the uniform G schedule.
pub const QR4_G_R: Table<4, 4> = Table {
    re: [
        [2.4495, -1.3064, 2.4495, 2.0412],
        [0.0, 7.255, -2.1155, -2.8061],
        [0.0, 0.0, -1.2353, -3.1997],
        [0.0, 0.0, 0.0, 6.1279],
    ],
    im: [
        [4.899, 3.5109, 6.1237, 0.8165],
        [0.0, 1.1542, 2.6407, 0.1371],
        [0.0, 0.0, 3.0863, -5.2656],
        [0.0, 0.0, 0.0, 5.6355],
    ],
};

/// Householder R; compared entrywise by modulus.
pub const QR4_H_R: Table<4, 4> = Table {
    re: [
        [-5.4772, -2.556, -6.5727, -1.6432],
        [0.0, -7.3462, 1.6743, 2.7497],
        [0.0, 0.0, 3.3243, -3.6995],
        [0.0, 0.0, 0.0, -8.3252],
    ],
    im: [
        [0.0, -2.7386, -0.5477, 1.4606],
        [0.0, 0.0, -2.9403, -0.5763],
        [0.0, 0.0, 0.0, 4.9272],
        [0.0, 0.0, 0.0, 0.0],
    ],
};

/// Q of the uniform G QL decomposition.
pub const QL4_G_Q: Table<4, 4> = Table {
    re: [
        [0.6434, 0.1675, 0.5481, -0.0408],
        [-0.1511, 0.188, -0.169, -0.8165],
        [-0.6892, 0.2775, 0.3496, 0.2041],
        [0.127, 0.4693, -0.0886, 0.4082],
    ],
    im: [
        [0.0, -0.3605, -0.2101, 0.2858],
        [-0.0403, 0.0742, -0.4448, 0.2041],
        [0.1466, -0.4503, -0.2445, 0.0],
        [0.2211, 0.5487, -0.4891, 0.0],
    ],
};

/// L of the uniform G QL decomposition.
pub const QL4_G_L: Table<4, 4> = Table {
    re: [
        [-0.2137, 0.0, 0.0, 0.0],
        [1.1871, 7.9344, 0.0, 0.0],
        [1.9415, 0.6302, 2.5389, 0.0],
        [-0.2858, -1.1431, 1.2247, 4.899],
    ],
    im: [
        [1.5731, 0.0, 0.0, 0.0],
        [-1.9594, -0.8122, 0.0, 0.0],
        [4.1538, 0.7221, 7.6166, 0.0],
        [1.0614, -1.4697, -0.2041, 9.798],
    ],
};

// 6x6 decompositions

/// 6x6 test matrix.
pub const X6: Table<6, 6> = Table {
    re: [
        [1.0, 2.0, 3.0, -3.0, -4.0, 2.0],
        [2.0, 3.0, 2.0, -6.0, 2.0, 5.0],
        [4.0, 3.0, 4.0, 2.0, 4.0, 6.0],
        [5.0, 5.0, 3.0, 8.0, 7.0, 2.0],
        [4.0, -5.0, 1.0, 2.0, 3.0, 1.0],
        [7.0, 6.0, 3.0, 4.0, 4.0, 2.0],
    ],
    im: [
        [2.0, -3.0, 4.0, 1.0, -1.0, -3.0],
        [-3.0, 1.0, -2.0, -7.0, 1.0, -2.0],
        [-1.0, -2.0, -5.0, 3.0, 7.0, 2.0],
        [2.0, 1.0, -2.0, -3.0, -2.0, 3.0],
        [-3.0, -2.0, -1.0, -4.0, 2.0, 2.0],
        [-2.0, 1.0, -1.0, 3.0, -2.0, 4.0],
    ],
};

/// Q of the uniform M schedule.
pub const QR6_M_Q: Table<6, 6> = Table {
    re: [
        [0.0839, 0.1419, 0.3046, -0.1235, 0.4129, -0.0136],
        [0.1678, 0.2321, 0.2051, -0.453, 0.2174, 0.4402],
        [0.3357, 0.1232, 0.2883, -0.0854, 0.0096, -0.4182],
        [0.4196, 0.2579, -0.0885, 0.3133, 0.3378, -0.1404],
        [0.3357, -0.6763, -0.0301, -0.0356, 0.3404, -0.284],
        [0.5874, 0.2937, -0.1343, 0.0922, -0.1331, 0.1813],
    ],
    im: [
        [0.1678, -0.3926, 0.5185, -0.0103, -0.2061, 0.4476],
        [-0.2518, 0.2579, 0.0226, -0.44, 0.2949, -0.1367],
        [-0.0839, -0.1275, -0.5164, 0.1108, 0.4122, 0.3669],
        [0.1678, 0.043, -0.2965, -0.3644, -0.4614, -0.2323],
        [-0.2518, -0.033, 0.2352, 0.0055, 0.1455, -0.3004],
        [-0.1678, 0.2465, 0.2758, 0.5705, -0.0318, 0.0],
    ],
};

/// R of the uniform M schedule.
pub const QR6_M_R: Table<6, 6> = Table {
    re: [
        [11.9164, 5.5386, 6.9652, 7.4687, 6.126, 4.5316],
        [0.0, 9.8295, 0.6133, -1.5246, 0.4542, 4.0665],
        [0.0, 0.0, 6.4709, -3.2862, -4.5013, 0.9395],
        [0.0, 0.0, 0.0, 11.9062, 1.6459, 0.0832],
        [0.0, 0.0, 0.0, 0.0, 6.339, 2.3524],
        [0.0, 0.0, 0.0, 0.0, 0.0, -2.1708],
    ],
    im: [
        [0.0, -0.8392, -2.8532, -1.9301, 2.8532, 6.0421],
        [0.0, 0.0, -0.3095, 1.0603, -4.2671, -0.3324],
        [0.0, 0.0, 0.0, 3.2384, 6.6643, 0.1439],
        [0.0, 0.0, 0.0, 0.0, -1.1619, 3.4811],
        [0.0, 0.0, 0.0, 0.0, 0.0, -3.1871],
        [0.0, 0.0, 0.0, 0.0, 0.0, -3.5886],
    ],
};

/// Q of the schedule `t,m,g,t,t`.
pub const QR6_MIXED_Q: Table<6, 6> = Table {
    re: [
        [0.0839, 0.1419, -0.5953, -0.1235, -0.4129, 0.3665],
        [0.1678, 0.2321, -0.0986, -0.453, -0.2174, 0.1278],
        [0.3357, 0.1232, 0.3685, -0.0854, -0.0096, 0.0767],
        [0.4196, 0.2579, 0.3079, 0.3133, -0.3378, -0.2713],
        [0.3357, -0.6763, -0.2063, -0.0356, -0.3404, -0.407],
        [0.5874, 0.2937, -0.2043, 0.0922, 0.1331, 0.0997],
    ],
    im: [
        [0.1678, -0.3926, 0.0853, -0.0103, 0.2061, 0.2573],
        [-0.2518, 0.2579, 0.1812, -0.44, -0.2949, -0.4429],
        [-0.0839, -0.1275, 0.4625, 0.1108, -0.4122, 0.551],
        [0.1678, 0.043, 0.0305, -0.3644, 0.4614, -0.0103],
        [-0.2518, -0.033, -0.117, 0.0055, -0.1455, 0.0722],
        [-0.1678, 0.2465, -0.2289, 0.5705, 0.0318, -0.1515],
    ],
};

/// R of the schedule `t,m,g,t,t`. `[4][4]` carries the sign implied by
/// `QR6_MIXED_Q`.
pub const QR6_MIXED_R: Table<6, 6> = Table {
    re: [
        [11.9164, 5.5386, 6.9652, 7.4687, 6.126, 4.5316],
        [0.0, 9.8295, 0.6133, -1.5246, 0.4542, 4.0665],
        [0.0, 0.0, -2.4534, 4.2425, 7.8733, -0.223],
        [0.0, 0.0, 0.0, 11.9062, 1.6459, 0.0832],
        [0.0, 0.0, 0.0, 0.0, -6.339, -2.3524],
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.805],
    ],
    im: [
        [0.0, -0.8392, -2.8532, -1.9301, 2.8532, 6.0421],
        [0.0, 0.0, -0.3095, 1.0603, -4.2671, -0.3324],
        [0.0, 0.0, -5.9878, 1.8131, 1.6386, -0.9239],
        [0.0, 0.0, 0.0, 0.0, -1.1619, 3.4811],
        [0.0, 0.0, 0.0, 0.0, 0.0, 3.1871],
        [0.0, 0.0, 0.0, 0.0, 0.0, -3.7858],
    ],
};
