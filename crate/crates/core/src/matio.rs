//! Plain-text complex matrices and reproducible integer test matrices.
//!
//! One matrix row per line, entries separated by spaces or tabs. An entry
//! is a real literal, an imaginary literal (`4i`, `-j`), or both joined by
//! a sign (`1+2i`, `2-3j`, `1e-3-2.5i`). Entries never contain whitespace.

use crate::error::{DsihtError, Result};
use crate::matrix::{CMatrix, Cpx};

/// Parses MatrixText.
pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    let mut cols = None;
    let mut rows = 0;
    let mut data = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let tokens: Vec<&str> = line.split([' ', '\t', '\r']).filter(|t| !t.is_empty()).collect();
        if tokens.is_empty() {
            continue;
        }
        rows += 1;
        let expected = *cols.get_or_insert(tokens.len());
        if tokens.len() != expected {
            return Err(DsihtError::RaggedRows {
                row: rows,
                expected,
                found: tokens.len(),
            });
        }
        for (col, tok) in tokens.iter().enumerate() {
            let z = parse_entry(tok).map_err(|reason| DsihtError::MalformedEntry {
                row: line_no + 1,
                col: col + 1,
                token: tok.to_string(),
                reason,
            })?;
            data.push(z);
        }
    }
    match cols {
        Some(c) => CMatrix::from_vec(rows, c, data),
        None => Err(DsihtError::EmptyInput),
    }
}

/// Parses a single complex literal.
pub fn parse_entry(s: &str) -> std::result::Result<Cpx, &'static str> {
    let b = s.as_bytes();
    let mut p = 0;
    let first = scan_signed(b, &mut p)?;
    if p == b.len() {
        return match first {
            Term::Real(v) => Ok(Cpx::new(v, 0.0)),
            Term::Imag(v) => Ok(Cpx::new(0.0, v)),
        };
    }
    let Term::Real(re) = first else {
        return Err("imaginary part must come last");
    };
    if !matches!(b[p], b'+' | b'-') {
        return Err("unexpected character");
    }
    match scan_signed(b, &mut p)? {
        Term::Imag(im) if p == b.len() => Ok(Cpx::new(re, im)),
        Term::Imag(_) => Err("trailing characters"),
        Term::Real(_) => Err("second part must be imaginary"),
    }
}

enum Term {
    Real(f64),
    Imag(f64),
}

fn is_unit(c: u8) -> bool {
    c == b'i' || c == b'j'
}

// [sign] (number [i|j] | i | j)
fn scan_signed(b: &[u8], p: &mut usize) -> std::result::Result<Term, &'static str> {
    let start = *p;
    let mut neg = false;
    if *p < b.len() && matches!(b[*p], b'+' | b'-') {
        neg = b[*p] == b'-';
        *p += 1;
    }
    if *p < b.len() && is_unit(b[*p]) {
        *p += 1;
        return Ok(Term::Imag(if neg { -1.0 } else { 1.0 }));
    }
    let num_start = *p;
    let mut digits = 0;
    while *p < b.len() && b[*p].is_ascii_digit() {
        *p += 1;
        digits += 1;
    }
    if *p < b.len() && b[*p] == b'.' {
        *p += 1;
        while *p < b.len() && b[*p].is_ascii_digit() {
            *p += 1;
            digits += 1;
        }
    }
    if digits == 0 {
        return Err(if start == b.len() { "missing number" } else { "expected a number" });
    }
    if *p < b.len() && matches!(b[*p], b'e' | b'E') {
        *p += 1;
        if *p < b.len() && matches!(b[*p], b'+' | b'-') {
            *p += 1;
        }
        let exp_start = *p;
        while *p < b.len() && b[*p].is_ascii_digit() {
            *p += 1;
        }
        if *p == exp_start {
            return Err("malformed exponent");
        }
    }
    // the slice is ASCII digits/sign/dot/exponent only
    let text = std::str::from_utf8(&b[num_start..*p]).expect("ascii");
    let mut v: f64 = text.parse().map_err(|_| "malformed number")?;
    if neg {
        v = -v;
    }
    if *p < b.len() && is_unit(b[*p]) {
        *p += 1;
        Ok(Term::Imag(v))
    } else {
        Ok(Term::Real(v))
    }
}

/// Renders `v` with `digits` significant digits, `%g` style.
fn format_real(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Renders one entry as `re±|im|i`, or a plain real when `im == 0`.
pub fn format_entry(z: Cpx, digits: usize) -> String {
    let re = format_real(z.re, digits);
    if z.im == 0.0 {
        return re;
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{re}{sign}{}i", format_real(z.im.abs(), digits))
}

/// Serializes a matrix; rows joined by `\n`, no trailing newline.
pub fn format_matrix(m: &CMatrix, digits: usize) -> Result<String> {
    if !(1..=17).contains(&digits) {
        return Err(DsihtError::InvalidDigits(digits));
    }
    let lines: Vec<String> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|&z| format_entry(z, digits))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    Ok(lines.join("\n"))
}

/// SplitMix64 generator state. Advancing returns the next state instead of
/// mutating, so independent streams are plain values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngState {
    pub state: u64,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[must_use]
    pub fn next(self) -> (u64, RngState) {
        let state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        (z ^ (z >> 31), RngState { state })
    }
}

impl Iterator for RngState {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let (v, s) = RngState::next(*self);
        *self = s;
        Some(v)
    }
}

/// `n`×`n` matrix with entries `a + bi`, `a, b` uniform integers in
/// `[1, n]`, filled row-major, real part drawn before imaginary part.
pub fn random_int_complex_matrix(n: usize, seed: u64) -> Result<CMatrix> {
    if n == 0 {
        return Err(DsihtError::ZeroDimension);
    }
    let modulus = n as u64;
    let mut rng = RngState::new(seed);
    let mut draw = || (Iterator::next(&mut rng).expect("infinite stream") % modulus + 1) as f64;
    Ok(CMatrix::from_fn(n, n, |_, _| {
        let re = draw();
        let im = draw();
        Cpx::new(re, im)
    }))
}
