//! Exact integer linear algebra: signless Laplacian and adjacency matrices,
//! arbitrary-precision matrix powers and spectral moments, and exact
//! characteristic polynomials via the Faddeev-LeVerrier trace recursion.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("characteristic polynomial requires order >= 1")]
    EmptyMatrix,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
}

/// Dense symmetric matrix with arbitrary-precision integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntSymMatrix {
    pub fn zero(n: usize) -> IntSymMatrix {
        IntSymMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> IntSymMatrix {
        let mut m = IntSymMatrix::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Build from explicit rows, checking symmetry.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<IntSymMatrix, ExactError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong length");
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(ExactError::NotSymmetric(i, j));
                }
            }
        }
        let entries = rows.into_iter().flatten().map(BigInt::from).collect();
        Ok(IntSymMatrix { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    /// Set entry (i, j) and its mirror.
    pub fn set_sym(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v.clone();
        self.entries[j * self.n + i] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub(crate) fn mul(&self, other: &IntSymMatrix) -> IntSymMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntSymMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.entries[i * n + j] = acc;
            }
        }
        out
    }

    /// Exact k-th power. Powers of a symmetric matrix stay symmetric.
    pub fn pow(&self, k: usize) -> IntSymMatrix {
        let mut acc = IntSymMatrix::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Copy with row and column `i` removed.
    pub fn delete_row_col(&self, i: usize) -> IntSymMatrix {
        assert!(i < self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&r| r != i).collect();
        let n = keep.len();
        let mut out = IntSymMatrix::zero(n);
        for (r, &or) in keep.iter().enumerate() {
            for (c, &oc) in keep.iter().enumerate() {
                out.entries[r * n + c] = self.get(or, oc).clone();
            }
        }
        out
    }

    /// Entries as f64, in row-major order. Entries of the matrices handled
    /// here (degrees and 0/1 adjacencies) are exactly representable.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).to_f64().expect("entry convertible to f64"))
                    .collect()
            })
            .collect()
    }
}

/// Q = D + A, the signless Laplacian.
pub fn signless_laplacian(g: &Graph) -> IntSymMatrix {
    let n = g.n();
    let mut q = IntSymMatrix::zero(n);
    for v in 0..n {
        q.entries[v * n + v] = BigInt::from(g.degree(v));
    }
    for &(u, v) in g.edges() {
        q.set_sym(u, v, BigInt::one());
    }
    q
}

/// Adjacency matrix A.
pub fn adjacency(g: &Graph) -> IntSymMatrix {
    let n = g.n();
    let mut a = IntSymMatrix::zero(n);
    for &(u, v) in g.edges() {
        a.set_sym(u, v, BigInt::one());
    }
    a
}

/// k-th signless Laplacian spectral moment T_k = Tr(Q^k).
pub fn spectral_moment(g: &Graph, k: usize) -> BigInt {
    signless_laplacian(g).pow(k).trace()
}

/// T_0 .. T_max_k in one pass of successive exact powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    moments: Vec<BigInt>,
}

impl MomentSequence {
    pub fn get(&self, k: usize) -> &BigInt {
        &self.moments[k]
    }

    pub fn max_k(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.moments
    }
}

pub fn spectral_moments(g: &Graph, max_k: usize) -> MomentSequence {
    let q = signless_laplacian(g);
    let mut moments = Vec::with_capacity(max_k + 1);
    let mut p = IntSymMatrix::identity(g.n());
    moments.push(p.trace());
    for _ in 1..=max_k {
        p = p.mul(&q);
        moments.push(p.trace());
    }
    MomentSequence { moments }
}

/// Characteristic polynomial det(M - xI) with exact integer coefficients
/// c_0 .. c_n, constant term first. The leading coefficient is (-1)^n and
/// c_0 = det(M).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn det(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// JSON array [c_0, ..., c_n]; coefficients that fit a double exactly are
    /// numbers, larger ones decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(bigint_to_json).collect())
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> CharPoly {
        assert!(!coeffs.is_empty());
        CharPoly { coeffs }
    }
}

pub fn bigint_to_json(v: &BigInt) -> Value {
    const SAFE: i64 = 1 << 53;
    match v.to_i64() {
        Some(x) if -SAFE < x && x < SAFE => json!(x),
        _ => json!(v.to_string()),
    }
}

/// Faddeev-LeVerrier: exact characteristic polynomial of a symmetric integer
/// matrix. The recursion produces det(xI - M) monic; the stored convention is
/// det(M - xI) = (-1)^n det(xI - M).
pub fn char_poly(m: &IntSymMatrix) -> Result<CharPoly, ExactError> {
    let n = m.order();
    if n == 0 {
        return Err(ExactError::EmptyMatrix);
    }
    // det(xI - M) = x^n + a[1] x^{n-1} + ... + a[n]
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::one();
    let mut mk = m.clone();
    for k in 1..=n {
        let tr = mk.trace();
        let divisor = BigInt::from(k);
        debug_assert!((&tr % &divisor).is_zero(), "trace recursion divisibility");
        a[k] = -tr / divisor;
        if k < n {
            // M_{k+1} = M (M_k + a_k I)
            let mut shifted = mk;
            for i in 0..n {
                let d = shifted.get(i, i) + &a[k];
                shifted.entries[i * n + i] = d;
            }
            mk = m.mul(&shifted);
        }
    }
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let coeffs: Vec<BigInt> = (0..=n).map(|j| &sign * &a[n - j]).collect();
    Ok(CharPoly { coeffs })
}

/// Exact Q-cospectrality: equal signless Laplacian characteristic polynomials.
pub fn are_q_cospectral(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    let pg = char_poly(&signless_laplacian(g)).expect("n >= 1");
    let ph = char_poly(&signless_laplacian(h)).expect("n >= 1");
    pg == ph
}

/// Dense integer polynomial helpers, coefficients ascending. Used for the
/// bordered-determinant recurrence checks.
pub mod poly {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.len() > 1 && v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        trim(out)
    }

    pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        trim(out)
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return vec![BigInt::zero()];
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                out[i + j] += ca * cb;
            }
        }
        trim(out)
    }

    pub fn pow(base: &[BigInt], k: usize) -> Vec<BigInt> {
        let mut acc = vec![BigInt::from(1)];
        for _ in 0..k {
            acc = mul(&acc, base);
        }
        acc
    }

    pub fn is_zero(a: &[BigInt]) -> bool {
        a.iter().all(Zero::is_zero)
    }
}
