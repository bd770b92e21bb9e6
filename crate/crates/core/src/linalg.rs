//! Small dense matrices over exact scalars and over the integers.

use crate::error::{Error, Result};
use crate::poly::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

pub type Mat<T> = Vec<Vec<T>>;
pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn identity<T: Scalar>(n: usize) -> Mat<T> {
    (0..n).map(|i| (0..n).map(|j| if i == j { T::unity() } else { T::nil() }).collect()).collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Mat<T> {
    let m = b[0].len();
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut acc = T::nil();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_nil() {
                            acc = acc.plus(&x.times(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<T: Scalar>(a: &[Vec<T>], v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            let mut acc = T::nil();
            for (x, y) in row.iter().zip(v) {
                acc = acc.plus(&x.times(y));
            }
            acc
        })
        .collect()
}

/// Determinant by Gaussian elimination.
pub fn det<T: Scalar>(a: &[Vec<T>]) -> T {
    let n = a.len();
    let mut m: Mat<T> = a.to_vec();
    let mut d = T::unity();
    for col in 0..n {
        let piv = match (col..n).find(|&r| !m[r][col].is_nil()) {
            Some(p) => p,
            None => return T::nil(),
        };
        if piv != col {
            m.swap(piv, col);
            d = d.negated();
        }
        let inv = m[col][col].recip();
        d = d.times(&m[col][col]);
        for r in col + 1..n {
            if m[r][col].is_nil() {
                continue;
            }
            let f = m[r][col].times(&inv);
            for c in col..n {
                let t = f.times(&m[col][c]);
                m[r][c] = m[r][c].minus(&t);
            }
        }
    }
    d
}

/// Inverse by Gauss-Jordan elimination.
pub fn inverse<T: Scalar>(a: &[Vec<T>]) -> Result<Mat<T>> {
    let n = a.len();
    let mut m: Mat<T> = a.to_vec();
    let mut inv = identity::<T>(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_nil()).ok_or(Error::Singular)?;
        m.swap(piv, col);
        inv.swap(piv, col);
        let p = m[col][col].recip();
        for c in 0..n {
            m[col][c] = m[col][c].times(&p);
            inv[col][c] = inv[col][c].times(&p);
        }
        for r in 0..n {
            if r == col || m[r][col].is_nil() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..n {
                let t = f.times(&m[col][c]);
                m[r][c] = m[r][c].minus(&t);
                let t = f.times(&inv[col][c]);
                inv[r][c] = inv[r][c].minus(&t);
            }
        }
    }
    Ok(inv)
}

/// Characteristic polynomial det(xI - A), by Faddeev-LeVerrier.
pub fn charpoly(a: &QMat) -> crate::poly::QPoly {
    let n = a.len();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m: QMat = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut am = mat_mul(a, &m);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = am;
        let am = mat_mul(a, &m);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    crate::poly::Poly::new(c)
}

pub fn trace(a: &QMat) -> BigRational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

// ---------- integer matrices ----------

pub fn imat(rows: &[&[i64]]) -> IMat {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn iidentity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

pub fn imul(a: &IMat, b: &IMat) -> IMat {
    let m = b[0].len();
    a.iter()
        .map(|row| {
            (0..m).map(|j| row.iter().enumerate().map(|(k, x)| x * &b[k][j]).sum()).collect()
        })
        .collect()
}

pub fn to_qmat(a: &IMat) -> QMat {
    a.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}

pub fn to_scalar_mat<T: Scalar>(a: &IMat) -> Mat<T> {
    a.iter().map(|r| r.iter().map(|x| T::from_q(&BigRational::from_integer(x.clone()))).collect()).collect()
}

pub fn idet(a: &IMat) -> BigInt {
    det(&to_qmat(a)).to_integer()
}

/// Inverse of a unimodular integer matrix.
pub fn iinverse(a: &IMat) -> Result<IMat> {
    let inv = inverse(&to_qmat(a))?;
    inv.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::Singular) })
                .collect()
        })
        .collect()
}

pub fn ineg(a: &IMat) -> IMat {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn is_identity(a: &IMat) -> bool {
    a.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| *x == BigInt::from((i == j) as i64)))
}

/// `[[a,b],[c,d]]` rendering, the form used in traces and JSON.
/// `[[a,b],[c,d]]` with rationals as `p/q`.
pub fn format_mat<T: std::fmt::Display>(a: &[Vec<T>]) -> String {
    let rows: Vec<String> =
        a.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

pub fn format_imat(a: &IMat) -> String {
    let mut s = String::from("[");
    for (i, r) in a.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push('[');
        for (j, x) in r.iter().enumerate() {
            if j > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}", x);
        }
        s.push(']');
    }
    s.push(']');
    s
}

/// Parse `[[1,0],[0,1]]`.
pub fn parse_imat(s: &str) -> Result<IMat> {
    let v: Vec<Vec<i64>> =
        serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("matrix: {e}")))?;
    let n = v.len();
    if n == 0 || v.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("matrix must be square".into()));
    }
    Ok(v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
}

pub fn max_abs_entry(a: &IMat) -> BigInt {
    a.iter().flatten().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}

pub fn is_unimodular(a: &IMat) -> bool {
    idet(a).abs().is_one()
}
