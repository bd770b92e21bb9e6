//! Points of the generalized upper half space as Gram matrices, their Iwasawa
//! coordinates, LLL reduction and the Siegel / LLL-reduced sets.

use crate::error::{Error, Result};
use crate::linalg::{self, det, iidentity, iinverse, idet, IMat, Mat};
use crate::poly::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::cmp::Ordering;

/// Rows `{i, j+1, ..., n-1}` and columns `{j, ..., n-1}` (0-based, `i ≤ j`).
pub fn b_index(n: usize, i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    let mut rows = vec![i];
    rows.extend(j + 1..n);
    (rows, (j..n).collect())
}

/// The principal index set `{i, i+2, ..., n-1}`.
pub fn c_index(n: usize, i: usize) -> Vec<usize> {
    let mut v = vec![i];
    v.extend(i + 2..n);
    v
}

fn submatrix<T: Clone>(q: &[Vec<T>], rows: &[usize], cols: &[usize]) -> Vec<Vec<T>> {
    rows.iter().map(|&r| cols.iter().map(|&c| q[r][c].clone()).collect()).collect()
}

/// The trailing minor `B_ij`.
pub fn b_minor<T: Scalar>(q: &[Vec<T>], i: usize, j: usize) -> T {
    let (r, c) = b_index(q.len(), i, j);
    det(&submatrix(q, &r, &c))
}

pub fn c_minor<T: Scalar>(q: &[Vec<T>], i: usize) -> T {
    let idx = c_index(q.len(), i);
    det(&submatrix(q, &idx, &idx))
}

/// A positive-definite symmetric Gram matrix, up to positive scaling.
#[derive(Clone, Debug)]
pub struct GramPoint<T: Scalar> {
    q: Mat<T>,
}

/// `Q/q_nn = X·Y²·Xᵗ` with `X` upper unipotent and `Y = diag(r)`, `r_n = 1`.
#[derive(Clone, Debug)]
pub struct IwasawaCoords<T: Scalar> {
    /// `x[i][j]` for `i < j`; zero elsewhere.
    pub x: Mat<T>,
    /// `r_i²`.
    pub r2: Vec<T>,
}

impl<T: Scalar> IwasawaCoords<T> {
    /// `X·Y²·Xᵗ`.
    pub fn reconstruct(&self) -> Mat<T> {
        let n = self.r2.len();
        let mut xm = self.x.clone();
        for (i, row) in xm.iter_mut().enumerate() {
            row[i] = T::unity();
        }
        let y: Mat<T> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.r2[i].clone() } else { T::nil() }).collect())
            .collect();
        linalg::mat_mul(&linalg::mat_mul(&xm, &y), &linalg::transpose(&xm))
    }
}

impl<T: Scalar> GramPoint<T> {
    pub fn new(q: Mat<T>) -> Result<Self> {
        let n = q.len();
        if n == 0 || q.iter().any(|r| r.len() != n) {
            return Err(Error::Degenerate("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !q[i][j].minus(&q[j][i]).is_nil() {
                    return Err(Error::Degenerate("Gram matrix must be symmetric".into()));
                }
            }
        }
        for k in 1..=n {
            let idx: Vec<usize> = (0..k).collect();
            if det(&submatrix(&q, &idx, &idx)).sign() != Ordering::Greater {
                return Err(Error::Degenerate("Gram matrix is not positive definite".into()));
            }
        }
        Ok(GramPoint { q })
    }

    pub fn new_unchecked(q: Mat<T>) -> Self {
        GramPoint { q }
    }

    pub fn matrix(&self) -> &Mat<T> {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    /// `γ·Q·γᵗ`.
    pub fn act(&self, g: &IMat) -> Self {
        let gm: Mat<T> = linalg::to_scalar_mat(g);
        GramPoint { q: linalg::mat_mul(&linalg::mat_mul(&gm, &self.q), &linalg::transpose(&gm)) }
    }

    pub fn iwasawa(&self) -> IwasawaCoords<T> {
        let n = self.dim();
        let bjj: Vec<T> = (0..n).map(|j| b_minor(&self.q, j, j)).collect();
        let mut x = vec![vec![T::nil(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                x[i][j] = b_minor(&self.q, i, j).times(&bjj[j].recip());
            }
        }
        let qnn = self.q[n - 1][n - 1].recip();
        let r2 = (0..n)
            .map(|i| {
                let r = if i + 1 < n { bjj[i].times(&bjj[i + 1].recip()) } else { bjj[i].clone() };
                r.times(&qnn)
            })
            .collect();
        IwasawaCoords { x, r2 }
    }

    /// Quantities whose simultaneous nonnegativity is membership in the LLL-reduced set.
    pub fn lll_conditions(&self, omega: &BigRational) -> Vec<T> {
        let n = self.dim();
        let two = T::from_q(&BigRational::from_integer(2.into()));
        let mut out = Vec::new();
        for j in 1..n {
            let bjj = b_minor(&self.q, j, j);
            for i in 0..j {
                let bij = b_minor(&self.q, i, j).times(&two);
                out.push(bjj.minus(&bij));
                out.push(bjj.plus(&bij));
            }
        }
        for i in 0..n - 1 {
            out.push(c_minor(&self.q, i).minus(&b_minor(&self.q, i + 1, i + 1).scale_q(omega)));
        }
        out
    }

    pub fn membership_lll(&self, omega: &BigRational) -> bool {
        self.lll_conditions(omega).iter().all(|c| c.sign() != Ordering::Less)
    }

    /// `|x_ij| ≤ b` and `r_i/r_{i+1} ≥ a`, with `a` passed as `a²`.
    pub fn membership_siegel(&self, a2: &BigRational, b: &BigRational) -> bool {
        let c = self.iwasawa();
        let n = self.dim();
        let bt = T::from_q(b);
        for i in 0..n {
            for j in i + 1..n {
                let x = &c.x[i][j];
                if bt.minus(x).sign() == Ordering::Less || bt.plus(x).sign() == Ordering::Less {
                    return false;
                }
            }
        }
        (0..n - 1).all(|i| c.r2[i].minus(&c.r2[i + 1].scale_q(a2)).sign() != Ordering::Less)
    }

    /// Unimodular `U`, det 1, with `U⁻¹·Q·U⁻ᵗ` LLL-reduced.
    pub fn lll_reduce(&self, omega: &BigRational) -> IMat {
        let n = self.dim();
        let rev: Mat<T> = (0..n).map(|i| (0..n).map(|j| self.q[n - 1 - i][n - 1 - j].clone()).collect()).collect();
        let mr = lll_gram(&rev, omega);
        let m: IMat = (0..n).map(|i| (0..n).map(|j| mr[n - 1 - i][n - 1 - j].clone()).collect()).collect();
        let mut u = iinverse(&m).expect("LLL transform is unimodular");
        if idet(&u).is_negative() {
            for row in u.iter_mut() {
                row[n - 1] = -row[n - 1].clone();
            }
        }
        u
    }
}

fn gram_schmidt<T: Scalar>(g: &Mat<T>) -> (Mat<T>, Vec<T>) {
    let n = g.len();
    let mut mu = vec![vec![T::nil(); n]; n];
    let mut bs: Vec<T> = vec![T::nil(); n];
    for i in 0..n {
        for j in 0..i {
            let mut s = g[i][j].clone();
            for k in 0..j {
                s = s.minus(&mu[j][k].times(&mu[i][k]).times(&bs[k]));
            }
            mu[i][j] = s.times(&bs[j].recip());
        }
        let mut s = g[i][i].clone();
        for k in 0..i {
            s = s.minus(&mu[i][k].times(&mu[i][k]).times(&bs[k]));
        }
        bs[i] = s;
    }
    (mu, bs)
}

/// Textbook LLL on a Gram matrix; returns `M` with the reduced basis `M·b`.
pub fn lll_gram<T: Scalar>(g: &Mat<T>, omega: &BigRational) -> IMat {
    let n = g.len();
    let mut m = iidentity(n);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let cur = |m: &IMat| -> Mat<T> {
        let mt: Mat<T> = linalg::to_scalar_mat(m);
        linalg::mat_mul(&linalg::mat_mul(&mt, g), &linalg::transpose(&mt))
    };
    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        assert!(guard < 100_000, "LLL did not terminate");
        for j in (0..k).rev() {
            let (mu, _) = gram_schmidt(&cur(&m));
            let x = &mu[k][j];
            let h = T::from_q(&half);
            if x.minus(&h).sign() == Ordering::Greater || x.plus(&h).sign() == Ordering::Less {
                let r = x.plus(&h).floor_int();
                let rowj = m[j].clone();
                for (c, v) in m[k].iter_mut().enumerate() {
                    *v -= &r * &rowj[c];
                }
            }
        }
        let (mu, bs) = gram_schmidt(&cur(&m));
        let w = T::from_q(omega).minus(&mu[k][k - 1].times(&mu[k][k - 1]));
        if bs[k].minus(&w.times(&bs[k - 1])).sign() != Ordering::Less {
            k += 1;
        } else {
            m.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    m
}

/// `γ⁻¹·P·γ⁻ᵗ`.
pub fn act_inverse<T: Scalar>(g: &IMat, p: &GramPoint<T>) -> GramPoint<T> {
    p.act(&iinverse(g).expect("unimodular"))
}

/// Whether `g` has integer entries and determinant one.
pub fn is_special(g: &IMat) -> bool {
    idet(g).is_one()
}

pub fn rational_gram(rows: &[&[i64]]) -> Mat<BigRational> {
    rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
}
