//! Dense linear maps between tensor powers of C^N.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gint::GInt;
use super::scalar::Scalar;
use super::sparse::SVec;
use crate::{Error, Result};

/// A map `(C^N)^{⊗dom_len} → (C^N)^{⊗cod_len}` stored row-major. Multi-
/// indices are mixed-radix with the first leg most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    n: usize,
    dom_len: usize,
    cod_len: usize,
    entries: Vec<Scalar>,
}

pub(crate) fn pow(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

impl LinMap {
    pub fn zero(n: usize, dom_len: usize, cod_len: usize) -> LinMap {
        let len = pow(n, dom_len) * pow(n, cod_len);
        LinMap {
            n,
            dom_len,
            cod_len,
            entries: vec![Scalar::zero(); len],
        }
    }

    pub fn identity(n: usize, legs: usize) -> LinMap {
        let mut m = LinMap::zero(n, legs, legs);
        for i in 0..pow(n, legs) {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// A 0-leg map holding one number.
    pub fn scalar(n: usize, s: Scalar) -> LinMap {
        LinMap {
            n,
            dom_len: 0,
            cod_len: 0,
            entries: vec![s],
        }
    }

    pub fn from_entries(
        n: usize,
        dom_len: usize,
        cod_len: usize,
        entries: Vec<Scalar>,
    ) -> Result<LinMap> {
        let want = pow(n, dom_len) * pow(n, cod_len);
        if entries.len() != want {
            return Err(Error::Shape(format!(
                "expected {want} entries for {} x {} map on N={n}, got {}",
                pow(n, cod_len),
                pow(n, dom_len),
                entries.len()
            )));
        }
        Ok(LinMap {
            n,
            dom_len,
            cod_len,
            entries,
        })
    }

    /// A vector in `(C^N)^{⊗legs}` viewed as a map from C.
    pub fn vector(n: usize, legs: usize, entries: Vec<Scalar>) -> Result<LinMap> {
        LinMap::from_entries(n, 0, legs, entries)
    }

    /// An N×N matrix given by rows.
    pub fn matrix(rows: Vec<Vec<Scalar>>) -> Result<LinMap> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("matrix must be square and non-empty".into()));
        }
        LinMap::from_entries(n, 1, 1, rows.into_iter().flatten().collect())
    }

    /// The basis vector `e_{i_1} ⊗ … ⊗ e_{i_k}` (0-based indices).
    pub fn basis_vector(n: usize, idx: &[usize]) -> LinMap {
        let mut m = LinMap::zero(n, 0, idx.len());
        let flat = idx.iter().fold(0, |acc, &i| acc * n + i);
        m.entries[flat] = Scalar::one();
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dom_len(&self) -> usize {
        self.dom_len
    }

    pub fn cod_len(&self) -> usize {
        self.cod_len
    }

    pub fn rows(&self) -> usize {
        pow(self.n, self.cod_len)
    }

    pub fn cols(&self) -> usize {
        pow(self.n, self.dom_len)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        let cols = self.cols();
        self.entries[r * cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn shape_string(&self) -> String {
        format!(
            "(N={}, dom {} legs, cod {} legs)",
            self.n, self.dom_len, self.cod_len
        )
    }

    pub fn same_shape(&self, o: &LinMap) -> bool {
        self.n == o.n && self.dom_len == o.dom_len && self.cod_len == o.cod_len
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            entries: self.entries.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, o: &LinMap) -> Result<LinMap> {
        if !self.same_shape(o) {
            return Err(Error::Shape(format!(
                "add {} + {}",
                self.shape_string(),
                o.shape_string()
            )));
        }
        Ok(LinMap {
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &LinMap) -> Result<LinMap> {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    /// Same entries reinterpreted with a different leg split (the total
    /// number of entries must agree).
    pub fn reshape(&self, dom_len: usize, cod_len: usize) -> Result<LinMap> {
        LinMap::from_entries(self.n, dom_len, cod_len, self.entries.clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> LinMap {
        LinMap {
            entries: self.entries.iter().map(|x| x.conj()).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> LinMap {
        let (r, c) = (self.rows(), self.cols());
        let mut e = Vec::with_capacity(r * c);
        for j in 0..c {
            for i in 0..r {
                e.push(self.get(i, j).clone());
            }
        }
        LinMap {
            n: self.n,
            dom_len: self.cod_len,
            cod_len: self.dom_len,
            entries: e,
        }
    }

    pub fn adjoint(&self) -> LinMap {
        self.transpose().conj()
    }

    /// Kronecker product with the legs of `self` first.
    pub fn tensor(&self, o: &LinMap) -> Result<LinMap> {
        if self.n != o.n {
            return Err(Error::Shape(format!(
                "tensor {} ⊗ {}",
                self.shape_string(),
                o.shape_string()
            )));
        }
        let (r1, c1, r2, c2) = (self.rows(), self.cols(), o.rows(), o.cols());
        let cols = c1 * c2;
        let mut e = vec![Scalar::zero(); r1 * r2 * cols];
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = o.get(i2, j2);
                        if !b.is_zero() {
                            e[(i1 * r2 + i2) * cols + j1 * c2 + j2] = a * b;
                        }
                    }
                }
            }
        }
        Ok(LinMap {
            n: self.n,
            dom_len: self.dom_len + o.dom_len,
            cod_len: self.cod_len + o.cod_len,
            entries: e,
        })
    }

    /// `self · t` (apply `t` first).
    pub fn compose(&self, t: &LinMap) -> Result<LinMap> {
        if self.n != t.n || t.cod_len != self.dom_len {
            return Err(Error::Shape(format!(
                "compose {} ∘ {}",
                self.shape_string(),
                t.shape_string()
            )));
        }
        let (r, k, c) = (self.rows(), self.cols(), t.cols());
        let mut e = vec![Scalar::zero(); r * c];
        for i in 0..r {
            for m in 0..k {
                let a = self.get(i, m);
                if a.is_zero() {
                    continue;
                }
                for j in 0..c {
                    let b = t.get(m, j);
                    if !b.is_zero() {
                        e[i * c + j] += &(a * b);
                    }
                }
            }
        }
        Ok(LinMap {
            n: self.n,
            dom_len: t.dom_len,
            cod_len: self.cod_len,
            entries: e,
        })
    }

    /// Inverse of a square map, `None` when singular.
    pub fn inverse(&self) -> Option<LinMap> {
        if self.dom_len != self.cod_len {
            return None;
        }
        let d = self.rows();
        let mut a: Vec<Vec<Scalar>> = (0..d)
            .map(|i| (0..d).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..d {
            let p = (col..d).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            inv.swap(col, p);
            let pinv = a[col][col].inv()?;
            for j in 0..d {
                a[col][j] = &a[col][j] * &pinv;
                inv[col][j] = &inv[col][j] * &pinv;
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..d {
                        let x = &a[col][j] * &f;
                        a[r][j] -= &x;
                        let y = &inv[col][j] * &f;
                        inv[r][j] -= &y;
                    }
                }
            }
        }
        Some(LinMap {
            entries: inv.into_iter().flatten().collect(),
            ..self.clone()
        })
    }

    /// Primitive Gaussian-integer multiple of the flattened entries.
    pub(crate) fn to_svec(&self) -> SVec {
        to_svec(&self.entries)
    }

    /// Rebuilds a map from a flattened integer vector scaled by `1/div`.
    pub(crate) fn from_svec(
        n: usize,
        dom_len: usize,
        cod_len: usize,
        v: &SVec,
        div: &Scalar,
    ) -> LinMap {
        let mut m = LinMap::zero(n, dom_len, cod_len);
        let inv = div.inv().expect("nonzero divisor");
        for (i, x) in &v.0 {
            m.entries[*i as usize] = &gint_to_scalar(x) * &inv;
        }
        m
    }
}

pub(crate) fn gint_to_scalar(x: &GInt) -> Scalar {
    let (a, b) = x.parts();
    Scalar::new(a.into(), b.into())
}

/// Clears denominators of a scalar slice, giving a primitive integer vector.
pub(crate) fn to_svec(entries: &[Scalar]) -> SVec {
    let mut l = BigInt::one();
    for x in entries {
        if !x.is_zero() {
            l = l.lcm(x.re().denom()).lcm(x.im().denom());
        }
    }
    let mut out = Vec::new();
    for (i, x) in entries.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let re = x.re().numer() * (&l / x.re().denom());
        let im = if x.im().is_zero() {
            BigInt::zero()
        } else {
            x.im().numer() * (&l / x.im().denom())
        };
        out.push((i as u32, GInt::new(re, im)));
    }
    let mut v = SVec(out);
    v.make_primitive();
    v
}

pub fn tensor_product(a: &LinMap, b: &LinMap) -> Result<LinMap> {
    a.tensor(b)
}

pub fn compose(s: &LinMap, t: &LinMap) -> Result<LinMap> {
    s.compose(t)
}

pub fn adjoint(t: &LinMap) -> LinMap {
    t.adjoint()
}
