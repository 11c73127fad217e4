//! Binary fields GF(2^k), the norm-one matrix subgroup `S` of order `q + 1`
//! inside SL(2, q), exhaustive counting of the curve
//!
//! ```text
//! a^2 + c * theta^m * a * y^3 + c^2 * y^6 + 1 = 0
//! ```
//!
//! and the Weil-bound comparison for it.

mod field;

pub use field::{is_irreducible, Field, FieldElem, MAX_DEGREE};

use crate::exec::Exec;
use serde::Serialize;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("extension degree {0} outside 1..=16")]
    DegreeOutOfRange(u32),
    #[error("no irreducible x^2 + theta^m x + 1 found")]
    NoneFound,
    #[error("x^2 + theta^{0} x + 1 is reducible")]
    ReducibleQuadratic(u32),
    #[error("c must be nonzero")]
    ZeroC,
}

/// 2x2 matrix over GF(2^k), row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[FieldElem; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Mat2 {
        Mat2([[FieldElem::ONE, FieldElem::ZERO], [FieldElem::ZERO, FieldElem::ONE]])
    }

    pub fn mul(&self, f: &Field, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let mut r = [[FieldElem::ZERO; 2]; 2];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
            }
        }
        Mat2(r)
    }

    pub fn det(&self, f: &Field) -> FieldElem {
        let a = &self.0;
        f.add(f.mul(a[0][0], a[1][1]), f.mul(a[0][1], a[1][0]))
    }

    /// Action on the projective line, row vector on the left:
    /// `(x : 1) M = (a x + c : b x + d)`. Point `None` is infinity `(1 : 0)`.
    pub fn act_projective(&self, f: &Field, x: Option<FieldElem>) -> Option<FieldElem> {
        let [[a, b], [c, d]] = self.0;
        let (num, den) = match x {
            None => (a, b),
            Some(x) => (f.add(f.mul(a, x), c), f.add(f.mul(b, x), d)),
        };
        f.inv(den).map(|inv| f.mul(num, inv))
    }
}

/// `s(a, b) = [[a, b], [b, a + b theta^m]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SMatrix {
    pub a: FieldElem,
    pub b: FieldElem,
}

impl SMatrix {
    pub fn to_mat(self, f: &Field, m: u32) -> Mat2 {
        let lower = f.add(self.a, f.mul(self.b, f.theta_pow(m as i64)));
        Mat2([[self.a, self.b], [self.b, lower]])
    }
}

/// The subgroup `S` with an element generating it.
#[derive(Debug, Clone)]
pub struct SGroup {
    pub m: u32,
    pub elements: Vec<SMatrix>,
    pub generator: SMatrix,
}

/// Whether `x^2 + theta^m x + 1` has no root in `f`.
pub fn quadratic_is_irreducible(f: &Field, m: u32) -> bool {
    let b = f.theta_pow(m as i64);
    f.elements()
        .all(|x| f.add(f.add(f.square(x), f.mul(b, x)), FieldElem::ONE) != FieldElem::ZERO)
}

/// Least `m >= 0` making `x^2 + theta^m x + 1` irreducible.
pub fn quad_irreducible_m(f: &Field) -> Result<u32, GfError> {
    (0..f.q() - 1)
        .find(|&m| quadratic_is_irreducible(f, m))
        .ok_or(GfError::NoneFound)
}

/// Every `m` in `0..q-1` making the quadratic irreducible.
pub fn irreducible_ms(f: &Field) -> Vec<u32> {
    (0..f.q() - 1).filter(|&m| quadratic_is_irreducible(f, m)).collect()
}

/// All `s(a, b)` with `a^2 + b^2 + ab theta^m = 1`, checked closed under
/// products and cyclic of order `q + 1`.
pub fn s_group(f: &Field, m: u32) -> Result<SGroup, GfError> {
    if !quadratic_is_irreducible(f, m) {
        return Err(GfError::ReducibleQuadratic(m));
    }
    let tm = f.theta_pow(m as i64);
    let mut elements = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            let lhs = f.add(f.add(f.square(a), f.square(b)), f.mul(f.mul(a, b), tm));
            if lhs == FieldElem::ONE {
                elements.push(SMatrix { a, b });
            }
        }
    }
    let q1 = f.q() as usize + 1;
    assert_eq!(elements.len(), q1, "norm-one group has q + 1 elements");

    let mats: std::collections::HashSet<Mat2> = elements.iter().map(|s| s.to_mat(f, m)).collect();
    for x in &mats {
        assert_eq!(x.det(f), FieldElem::ONE);
        for y in &mats {
            assert!(mats.contains(&x.mul(f, y)), "S closed under products");
        }
    }
    let generator = *elements
        .iter()
        .find(|s| matrix_order(f, &s.to_mat(f, m)) == q1)
        .expect("S is cyclic");
    Ok(SGroup {
        m,
        elements,
        generator,
    })
}

pub fn matrix_order(f: &Field, x: &Mat2) -> usize {
    let mut acc = *x;
    let mut k = 1;
    while acc != Mat2::identity() {
        acc = acc.mul(f, x);
        k += 1;
    }
    k
}

/// Number of `(a, y)` with `a^2 + c theta^m a y^3 + c^2 y^6 + 1 = 0`,
/// optionally only `y != 0`, by exhaustive evaluation.
pub fn count_eq2(f: &Field, m: u32, c: FieldElem, require_y_nonzero: bool, exec: Exec) -> Result<u64, GfError> {
    if c.is_zero() {
        return Err(GfError::ZeroC);
    }
    let k = f.mul(c, f.theta_pow(m as i64));
    let c2 = f.square(c);
    let y_from = u64::from(require_y_nonzero);
    let q = f.q() as u64;
    Ok(exec.sum_range(q - y_from, |i| {
        let y = FieldElem((i + y_from) as u32);
        let y3 = f.mul(f.square(y), y);
        let lin = f.mul(k, y3);
        let constant = f.add(f.mul(c2, f.square(y3)), FieldElem::ONE);
        f.elements()
            .filter(|&a| f.add(f.add(f.square(a), f.mul(lin, a)), constant) == FieldElem::ZERO)
            .count() as u64
    }))
}

/// `|N - q| <= (d-1)(d-2) sqrt(q) + d^2`, decided in exact integers.
pub fn weil_check(n: u64, q: u64, d: u64) -> bool {
    let dev = n.abs_diff(q) as u128;
    let d = d as u128;
    let slack = d * d;
    if dev <= slack {
        return true;
    }
    let coef = d.saturating_sub(1) * d.saturating_sub(2);
    // dev - d^2 <= coef * sqrt(q)  <=>  (dev - d^2)^2 <= coef^2 q
    let lhs = dev - slack;
    lhs * lhs <= coef * coef * q as u128
}

/// One row of the per-`c` table: `c = theta^c_exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eq2Row {
    pub m: u32,
    pub c_exp: u32,
    pub c: u32,
    pub count: u64,
    pub count_y_nonzero: u64,
    pub weil_pass: bool,
}

/// Counts for every nonzero `c`, with the degree-6 Weil check.
pub fn eq2_table(f: &Field, m: u32, exec: Exec) -> Vec<Eq2Row> {
    let exps: Vec<u32> = (0..f.q() - 1).collect();
    let q = f.q() as u64;
    exec.map(&exps, |&e| {
        let c = f.theta_pow(e as i64);
        let count = count_eq2(f, m, c, false, Exec::Sequential).unwrap();
        let count_y_nonzero = count_eq2(f, m, c, true, Exec::Sequential).unwrap();
        Eq2Row {
            m,
            c_exp: e,
            c: c.0,
            count,
            count_y_nonzero,
            weil_pass: weil_check(count, q, 6) && weil_check(count_y_nonzero, q, 6),
        }
    })
}
