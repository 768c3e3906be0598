//! The frame matrix F, its duality morphisms and the Frobenius operations
//! (contraction, rotation, reflection, one-sided rotations of morphisms).
//!
//! With `G = conj(F)^{-1}` the duality morphisms are
//! `xi_wb = Σ F_{ji} e_i ⊗ e_j` and `xi_bw = Σ G_{ji} e_i ⊗ e_j`. All
//! operations below are closed-form index formulas for the defining
//! compositions; the test suite checks them against the compositions.

use std::collections::HashMap;

use crate::linalg::{pow, to_svec, GInt, LinMap, SVec, Scalar};
use crate::words::{Colour, Word};
use crate::{Error, Result};

/// Square matrix stored row-major as nested vectors.
type Mat = Vec<Vec<Scalar>>;

fn mat_of(m: &LinMap) -> Mat {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Scalar::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn mat_t(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].clone()).collect())
        .collect()
}

fn mat_conj(a: &Mat) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| x.conj()).collect())
        .collect()
}

fn mat_inv(a: &Mat) -> Mat {
    let n = a.len();
    let m = LinMap::matrix(a.clone()).expect("square");
    mat_of(&m.inverse().expect("invertible by construction"))
        .into_iter()
        .take(n)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    n: usize,
    f: Mat,
    /// `conj(F)^{-1}`.
    g: Mat,
    xi_wb: LinMap,
    xi_bw: LinMap,
    c_opt: Option<Scalar>,
    /// Contraction kernels `conj(ξ_a[p,q])`, indexed by colour bit.
    contr: [Mat; 2],
    /// Rotation matrices `X_a X_a*` with `X_a[j][q] = ξ_a[j,q]`.
    rot: [Mat; 2],
    rot_inv: [Mat; 2],
    /// Per-leg reflection matrices: F for white legs, G for black legs.
    refl: [Mat; 2],
    int: IntFrame,
}

/// Builds the frame of an invertible matrix.
pub fn make_frame(f: &LinMap) -> Result<Frame> {
    if f.dom_len() != 1 || f.cod_len() != 1 {
        return Err(Error::Shape(format!(
            "frame matrix must be N×N, got {}",
            f.shape_string()
        )));
    }
    if f.inverse().is_none() {
        return Err(Error::SingularFrame);
    }
    let n = f.n();
    let fm = mat_of(f);
    let g = mat_inv(&mat_conj(&fm));
    let cup = |m: &Mat| {
        let mut v = LinMap::zero(n, 0, 2);
        for i in 0..n {
            for j in 0..n {
                v.set(i * n + j, 0, m[j][i].clone());
            }
        }
        v
    };
    let xi_wb = cup(&fm);
    let xi_bw = cup(&g);
    let prod = mat_mul(&fm, &mat_conj(&fm));
    let c = prod[0][0].clone();
    let scalar = (0..n).all(|i| {
        (0..n).all(|j| {
            if i == j {
                prod[i][j] == c
            } else {
                prod[i][j].is_zero()
            }
        })
    });
    let c_opt = scalar.then_some(c);
    // ξ_w[p,q] = F[q][p], ξ_b[p,q] = G[q][p]
    let contr = [mat_t(&mat_conj(&fm)), mat_t(&mat_conj(&g))];
    let rot = [
        mat_mul(&mat_t(&fm), &mat_conj(&fm)),
        mat_mul(&mat_t(&g), &mat_conj(&g)),
    ];
    let rot_inv = [mat_inv(&rot[0]), mat_inv(&rot[1])];
    let refl = [fm.clone(), g.clone()];
    let int = IntFrame::new(n, &contr, &rot, &rot_inv, &refl);
    Ok(Frame {
        n,
        f: fm,
        g,
        xi_wb,
        xi_bw,
        c_opt,
        contr,
        rot,
        rot_inv,
        refl,
        int,
    })
}

impl Frame {
    /// The frame `F = 1_N`, giving the orthogonal-type duality.
    pub fn identity(n: usize) -> Frame {
        make_frame(&LinMap::identity(n, 1)).expect("identity is invertible")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> LinMap {
        LinMap::matrix(self.f.clone()).expect("square")
    }

    /// `conj(F)^{-1}`.
    pub fn g_matrix(&self) -> LinMap {
        LinMap::matrix(self.g.clone()).expect("square")
    }

    pub fn xi_wb(&self) -> &LinMap {
        &self.xi_wb
    }

    pub fn xi_bw(&self) -> &LinMap {
        &self.xi_bw
    }

    /// The duality morphism of a single letter, living on `a ā`.
    pub fn xi(&self, a: Colour) -> &LinMap {
        match a {
            Colour::White => &self.xi_wb,
            Colour::Black => &self.xi_bw,
        }
    }

    /// The scalar c with `F·conj(F) = c·1`, when there is one.
    pub fn c(&self) -> Option<&Scalar> {
        self.c_opt.as_ref()
    }

    pub fn is_identity(&self) -> bool {
        self.f == mat_of(&LinMap::identity(self.n, 1))
    }

    pub(crate) fn int(&self) -> &IntFrame {
        &self.int
    }

    fn check_vec(&self, eta: &LinMap, w: &Word) -> Result<()> {
        if eta.n() != self.n || eta.dom_len() != 0 || eta.cod_len() != w.len() {
            return Err(Error::Shape(format!(
                "expected a fixed-vector shape on {} legs with N={}, got {}",
                w.len(),
                self.n,
                eta.shape_string()
            )));
        }
        Ok(())
    }
}

/// `ξ_w` for a word: `ξ_∅ = 1`, `ξ_{aw} = (1 ⊗ ξ_w ⊗ 1)·ξ_a`. Lives on
/// `w · star(w)`.
pub fn word_duality(fr: &Frame, w: &Word) -> LinMap {
    let n = fr.n;
    let Some((&a, rest)) = w.letters().split_first() else {
        return LinMap::scalar(n, Scalar::one());
    };
    let inner = word_duality(fr, &Word::new(rest.to_vec()));
    let id = LinMap::identity(n, 1);
    let mid = id
        .tensor(&inner)
        .and_then(|m| m.tensor(&id))
        .expect("same N");
    mid.compose(fr.xi(a)).expect("shapes agree")
}

fn digits(mut idx: usize, n: usize, legs: usize) -> Vec<usize> {
    let mut d = vec![0; legs];
    for k in (0..legs).rev() {
        d[k] = idx % n;
        idx /= n;
    }
    d
}

fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

/// `Π_i η`: contracts legs `i` and `i + 1` (0-based) with `ξ_{a_i}*`.
pub fn contraction(fr: &Frame, eta: &LinMap, w: &Word, i: usize) -> Result<LinMap> {
    fr.check_vec(eta, w)?;
    let k = w.len();
    if i + 1 >= k {
        return Err(Error::IndexOutOfRange { index: i, len: k });
    }
    let a = w.letters()[i];
    if w.letters()[i + 1] != a.flip() {
        return Err(Error::ColourClash(i));
    }
    let n = fr.n;
    let ker = &fr.contr[a.bit()];
    let mut out = LinMap::zero(n, 0, k - 2);
    for (idx, x) in eta.entries().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let d = digits(idx, n, k);
        let c = &ker[d[i]][d[i + 1]];
        if c.is_zero() {
            continue;
        }
        let mut rest = d[..i].to_vec();
        rest.extend_from_slice(&d[i + 2..]);
        let t = undigits(&rest, n);
        let v = out.get(t, 0) + &(c * x);
        out.set(t, 0, v);
    }
    Ok(out)
}

/// `R η`: the last leg moves to the front, twisted by `X_a X_a*`.
pub fn rotate(fr: &Frame, eta: &LinMap, w: &Word) -> Result<(LinMap, Word)> {
    fr.check_vec(eta, w)?;
    let k = w.len();
    let Some(&a) = w.letters().last() else {
        return Err(Error::EmptyWord);
    };
    let n = fr.n;
    let m = &fr.rot[a.bit()];
    let head = pow(n, k - 1);
    let mut out = LinMap::zero(n, 0, k);
    for (idx, x) in eta.entries().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (h, p) = (idx / n, idx % n);
        for (j, row) in m.iter().enumerate() {
            if !row[p].is_zero() {
                let t = j * head + h;
                let v = out.get(t, 0) + &(&row[p] * x);
                out.set(t, 0, v);
            }
        }
    }
    Ok((out, w.rotated()))
}

/// Exact inverse of [`rotate`]: the first leg moves to the end.
pub fn rotate_inv(fr: &Frame, eta: &LinMap, w: &Word) -> Result<(LinMap, Word)> {
    fr.check_vec(eta, w)?;
    let k = w.len();
    let Some(&a) = w.letters().first() else {
        return Err(Error::EmptyWord);
    };
    let n = fr.n;
    let m = &fr.rot_inv[a.bit()];
    let tail = pow(n, k - 1);
    let mut out = LinMap::zero(n, 0, k);
    for (idx, x) in eta.entries().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (p, r) = (idx / tail, idx % tail);
        for (j, row) in m.iter().enumerate() {
            if !row[p].is_zero() {
                let t = r * n + j;
                let v = out.get(t, 0) + &(&row[p] * x);
                out.set(t, 0, v);
            }
        }
    }
    Ok((out, w.rotated_inv()))
}

/// `η^⋆ = Rrot^{-k}(η*)`, a fixed vector on `star(w)`.
pub fn reflect(fr: &Frame, eta: &LinMap, w: &Word) -> Result<(LinMap, Word)> {
    fr.check_vec(eta, w)?;
    let k = w.len();
    let n = fr.n;
    let mut out = LinMap::zero(n, 0, k);
    let total = pow(n, k);
    for (idx, x) in eta.entries().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let p = digits(idx, n, k);
        let xc = x.conj();
        for t in 0..total {
            // output leg j comes from input leg k-1-j
            let q = digits(t, n, k);
            let mut c = xc.clone();
            for j in 0..k {
                let src = k - 1 - j;
                let m = &fr.refl[w.letters()[src].bit()];
                c = &c * &m[q[j]][p[src]];
                if c.is_zero() {
                    break;
                }
            }
            if !c.is_zero() {
                let v = out.get(t, 0) + &c;
                out.set(t, 0, v);
            }
        }
    }
    Ok((out, w.star()))
}

fn check_map(fr: &Frame, t: &LinMap, w1: &Word, w2: &Word) -> Result<()> {
    if t.n() != fr.n || t.dom_len() != w1.len() || t.cod_len() != w2.len() {
        return Err(Error::Shape(format!(
            "expected a map C({w1}, {w2}) with N={}, got {}",
            fr.n,
            t.shape_string()
        )));
    }
    Ok(())
}

/// `Rrot T = (1 ⊗ ξ_a*)(T ⊗ 1)` for `T ∈ C(w1, w2' a)`; lands in
/// `C(w1 ā, w2')`.
pub fn right_rotate(fr: &Frame, t: &LinMap, w1: &Word, w2: &Word) -> Result<(LinMap, Word, Word)> {
    check_map(fr, t, w1, w2)?;
    let Some(&a) = w2.letters().last() else {
        return Err(Error::EmptyWord);
    };
    let n = fr.n;
    let ker = &fr.contr[a.bit()];
    let nw1 = w1.concat(&Word::new(vec![a.flip()]));
    let nw2 = w2.slice(0, w2.len() - 1);
    let mut out = LinMap::zero(n, nw1.len(), nw2.len());
    for r in 0..t.rows() {
        let (r2, ra) = (r / n, r % n);
        for c1 in 0..t.cols() {
            let x = t.get(r, c1);
            if x.is_zero() {
                continue;
            }
            for (cp, k) in ker[ra].iter().enumerate() {
                if !k.is_zero() {
                    let v = out.get(r2, c1 * n + cp) + &(k * x);
                    out.set(r2, c1 * n + cp, v);
                }
            }
        }
    }
    Ok((out, nw1, nw2))
}

/// `Rrot^{-1} T = (T ⊗ 1)(1 ⊗ ξ_x)` for `T ∈ C(w1' x, w2)`; lands in
/// `C(w1', w2 x̄)`.
pub fn right_rotate_inv(
    fr: &Frame,
    t: &LinMap,
    w1: &Word,
    w2: &Word,
) -> Result<(LinMap, Word, Word)> {
    check_map(fr, t, w1, w2)?;
    let Some(&x) = w1.letters().last() else {
        return Err(Error::EmptyWord);
    };
    let n = fr.n;
    let xi = fr.xi(x);
    let nw1 = w1.slice(0, w1.len() - 1);
    let nw2 = w2.concat(&Word::new(vec![x.flip()]));
    let mut out = LinMap::zero(n, nw1.len(), nw2.len());
    for r2 in 0..t.rows() {
        for c in 0..t.cols() {
            let v = t.get(r2, c);
            if v.is_zero() {
                continue;
            }
            let (c1, cx) = (c / n, c % n);
            for rp in 0..n {
                let k = xi.get(cx * n + rp, 0);
                if !k.is_zero() {
                    let y = out.get(r2 * n + rp, c1) + &(k * v);
                    out.set(r2 * n + rp, c1, y);
                }
            }
        }
    }
    Ok((out, nw1, nw2))
}

/// `Lrot T = (1 ⊗ T)(ξ_ā ⊗ 1)` for `T ∈ C(a w1', w2)`; lands in
/// `C(w1', ā w2)`.
pub fn left_rotate(fr: &Frame, t: &LinMap, w1: &Word, w2: &Word) -> Result<(LinMap, Word, Word)> {
    check_map(fr, t, w1, w2)?;
    let Some(&a) = w1.letters().first() else {
        return Err(Error::EmptyWord);
    };
    let n = fr.n;
    let xi = fr.xi(a.flip());
    let nw1 = w1.slice(1, w1.len());
    let nw2 = Word::new(vec![a.flip()]).concat(w2);
    let c1s = pow(n, nw1.len());
    let r2s = t.rows();
    let mut out = LinMap::zero(n, nw1.len(), nw2.len());
    for r2 in 0..r2s {
        for c in 0..t.cols() {
            let v = t.get(r2, c);
            if v.is_zero() {
                continue;
            }
            let (ca, c1) = (c / c1s, c % c1s);
            for rp in 0..n {
                let k = xi.get(rp * n + ca, 0);
                if !k.is_zero() {
                    let y = out.get(rp * r2s + r2, c1) + &(k * v);
                    out.set(rp * r2s + r2, c1, y);
                }
            }
        }
    }
    Ok((out, nw1, nw2))
}

/// `Lrot^{-1} T = (ξ_b̄* ⊗ 1)(1 ⊗ T)` for `T ∈ C(w1, b w2')`; lands in
/// `C(b̄ w1, w2')`.
pub fn left_rotate_inv(
    fr: &Frame,
    t: &LinMap,
    w1: &Word,
    w2: &Word,
) -> Result<(LinMap, Word, Word)> {
    check_map(fr, t, w1, w2)?;
    let Some(&b) = w2.letters().first() else {
        return Err(Error::EmptyWord);
    };
    let n = fr.n;
    let xi = fr.xi(b.flip());
    let nw1 = Word::new(vec![b.flip()]).concat(w1);
    let nw2 = w2.slice(1, w2.len());
    let r2s = pow(n, nw2.len());
    let c1s = t.cols();
    let mut out = LinMap::zero(n, nw1.len(), nw2.len());
    for r in 0..t.rows() {
        let (rb, r2) = (r / r2s, r % r2s);
        for c1 in 0..c1s {
            let v = t.get(r, c1);
            if v.is_zero() {
                continue;
            }
            for cp in 0..n {
                let k = xi.get(cp * n + rb, 0).conj();
                if !k.is_zero() {
                    let y = out.get(r2, cp * c1s + c1) + &(&k * v);
                    out.set(r2, cp * c1s + c1, y);
                }
            }
        }
    }
    Ok((out, nw1, nw2))
}

/// Turns a fixed vector on `w2 · star(w1)` into a map in `C(w1, w2)`.
pub fn fix_to_mor(fr: &Frame, eta: &LinMap, w1: &Word, w2: &Word) -> Result<LinMap> {
    let total = w2.concat(&w1.star());
    fr.check_vec(eta, &total)?;
    let mut t = eta.clone();
    let (mut a, mut b) = (Word::empty(), total);
    for _ in 0..w1.len() {
        let (nt, na, nb) = right_rotate(fr, &t, &a, &b)?;
        t = nt;
        a = na;
        b = nb;
    }
    debug_assert_eq!(&a, w1);
    Ok(t)
}

/// Inverse of [`fix_to_mor`].
pub fn mor_to_fix(fr: &Frame, t: &LinMap, w1: &Word, w2: &Word) -> Result<LinMap> {
    check_map(fr, t, w1, w2)?;
    let mut t = t.clone();
    let (mut a, mut b) = (w1.clone(), w2.clone());
    for _ in 0..w1.len() {
        let (nt, na, nb) = right_rotate_inv(fr, &t, &a, &b)?;
        t = nt;
        a = na;
        b = nb;
    }
    Ok(t)
}

/// Matrix kernel used by the closure engine: the frame matrices scaled to
/// Gaussian integers. Spans are scale invariant, so every operation here
/// equals the exact one up to a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntFrame {
    n: usize,
    contr: [IntMat; 2],
    rot: [IntMat; 2],
    rot_inv: [IntMat; 2],
    refl: [IntMat; 2],
}

/// `None` when the matrix is a multiple of the identity.
type IntMat = Option<Vec<Vec<GInt>>>;

fn int_mat(m: &Mat) -> IntMat {
    let n = m.len();
    let diag = (0..n).all(|i| {
        (0..n).all(|j| {
            if i == j {
                m[i][j] == m[0][0]
            } else {
                m[i][j].is_zero()
            }
        })
    });
    if diag {
        return None;
    }
    let flat: Vec<Scalar> = m.iter().flatten().cloned().collect();
    let v = to_svec(&flat);
    let mut out = vec![vec![GInt::ZERO; n]; n];
    for (i, x) in v.0 {
        out[i as usize / n][i as usize % n] = x;
    }
    Some(out)
}

impl IntFrame {
    fn new(
        n: usize,
        contr: &[Mat; 2],
        rot: &[Mat; 2],
        rot_inv: &[Mat; 2],
        refl: &[Mat; 2],
    ) -> IntFrame {
        let conv = |m: &[Mat; 2]| [int_mat(&m[0]), int_mat(&m[1])];
        IntFrame {
            n,
            contr: conv(contr),
            rot: conv(rot),
            rot_inv: conv(rot_inv),
            refl: conv(refl),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rotate(&self, v: &SVec, legs: usize, last: Colour) -> SVec {
        let n = self.n as u32;
        let head = pow(self.n, legs - 1) as u32;
        match &self.rot[last.bit()] {
            None => SVec::from_unsorted(
                v.0.iter()
                    .map(|(i, x)| ((i % n) * head + i / n, x.clone()))
                    .collect(),
            ),
            Some(m) => {
                let mut e = Vec::with_capacity(v.nnz() * self.n);
                for (i, x) in &v.0 {
                    let (h, p) = (i / n, (i % n) as usize);
                    for (j, row) in m.iter().enumerate() {
                        if !row[p].is_zero() {
                            e.push((j as u32 * head + h, row[p].mul(x)));
                        }
                    }
                }
                SVec::from_unsorted(e)
            }
        }
    }

    pub fn rotate_inv(&self, v: &SVec, legs: usize, first: Colour) -> SVec {
        let n = self.n as u32;
        let tail = pow(self.n, legs - 1) as u32;
        match &self.rot_inv[first.bit()] {
            None => SVec::from_unsorted(
                v.0.iter()
                    .map(|(i, x)| ((i % tail) * n + i / tail, x.clone()))
                    .collect(),
            ),
            Some(m) => {
                let mut e = Vec::with_capacity(v.nnz() * self.n);
                for (i, x) in &v.0 {
                    let (p, r) = ((i / tail) as usize, i % tail);
                    for (j, row) in m.iter().enumerate() {
                        if !row[p].is_zero() {
                            e.push((r * n + j as u32, row[p].mul(x)));
                        }
                    }
                }
                SVec::from_unsorted(e)
            }
        }
    }

    /// Contraction of legs `i, i+1` whose first leg has colour `a`.
    pub fn contract(&self, v: &SVec, legs: usize, i: usize, a: Colour) -> SVec {
        let n = self.n as u32;
        let post = pow(self.n, legs - i - 2) as u32;
        let block = post * n * n;
        let mut e = Vec::with_capacity(v.nnz());
        for (idx, x) in &v.0 {
            let pre = idx / block;
            let mid = (idx / post) % (n * n);
            let (p, q) = (mid / n, mid % n);
            let target = pre * post + idx % post;
            match &self.contr[a.bit()] {
                None => {
                    if p == q {
                        e.push((target, x.clone()));
                    }
                }
                Some(m) => {
                    let c = &m[p as usize][q as usize];
                    if !c.is_zero() {
                        e.push((target, c.mul(x)));
                    }
                }
            }
        }
        SVec::from_unsorted(e)
    }

    /// Tensor product of `x` on `p·c` and `y` on `star(c)·q` followed by the
    /// `|c|` contractions across the junction, innermost first, without
    /// forming the long intermediate vector. `c` lists the colours of the
    /// contracted legs of `x`.
    pub fn compose(&self, x: &SVec, y: &SVec, y_legs: usize, c: &[Colour]) -> SVec {
        let n = self.n;
        let j = c.len();
        let nj = pow(n, j) as u32;
        let q_dim = pow(n, y_legs - j) as u32;
        // rows of y by their contracted part
        let mut by_l: HashMap<u32, Vec<(u32, &GInt)>> = HashMap::new();
        for (idx, v) in &y.0 {
            by_l.entry(idx / q_dim).or_default().push((idx % q_dim, v));
        }
        let mut e = Vec::new();
        for (idx, xv) in &x.0 {
            let (ip, k) = (idx / nj, (idx % nj) as usize);
            let kd = digits(k, n, j);
            // leg m of c pairs with leg j-1-m of star(c)
            let mut partial: Vec<(usize, GInt)> = vec![(0, xv.clone())];
            for pos in 0..j {
                let m = j - 1 - pos;
                let mut next = Vec::with_capacity(partial.len());
                match &self.contr[c[m].bit()] {
                    None => {
                        for (t, v) in partial {
                            next.push((t * n + kd[m], v));
                        }
                    }
                    Some(mat) => {
                        for (t, v) in &partial {
                            for (l, w) in mat[kd[m]].iter().enumerate() {
                                if !w.is_zero() {
                                    next.push((t * n + l, v.mul(w)));
                                }
                            }
                        }
                    }
                }
                partial = next;
            }
            for (l, v) in partial {
                if let Some(rows) = by_l.get(&(l as u32)) {
                    for &(iq, yv) in rows {
                        e.push((ip * q_dim + iq, v.mul(yv)));
                    }
                }
            }
        }
        SVec::from_unsorted(e)
    }

    /// Reflection of a vector on the word with the given leg colours.
    pub fn reflect(&self, v: &SVec, colours: &[Colour]) -> SVec {
        let k = colours.len();
        let n = self.n;
        let mut e = Vec::new();
        for (idx, x) in &v.0 {
            let p = digits(*idx as usize, n, k);
            // Partial products over output legs, expanded leg by leg.
            let mut partial: Vec<(usize, GInt)> = vec![(0, x.conj())];
            for j in 0..k {
                let src = k - 1 - j;
                let mut next = Vec::with_capacity(partial.len() * n);
                match &self.refl[colours[src].bit()] {
                    None => {
                        for (t, c) in partial {
                            next.push((t * n + p[src], c));
                        }
                    }
                    Some(m) => {
                        for (t, c) in &partial {
                            for (q, row) in m.iter().enumerate() {
                                if !row[p[src]].is_zero() {
                                    next.push((t * n + q, c.mul(&row[p[src]])));
                                }
                            }
                        }
                    }
                }
                partial = next;
            }
            e.extend(partial.into_iter().map(|(t, c)| (t as u32, c)));
        }
        SVec::from_unsorted(e)
    }
}
