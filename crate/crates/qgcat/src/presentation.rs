//! Noncommutative *-polynomials in the matrix entries: the relations an
//! intertwiner imposes, gradings, and the substitutions behind gluing and
//! ungluing.
//!
//! Text form: terms such as `3/2 * x[1,2] z x*[2,1]` joined by ` + ` and
//! ` - `, ordered by degree, then lexicographically. Indices are 1-based.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::frame::Frame;
use crate::linalg::{pow, LinMap, Scalar};
use crate::words::{Colour, Word};
use crate::{Error, Result};

/// The generators a polynomial may use besides the entries `x[i,j]` and
/// `x*[i,j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// Entries only.
    Entries,
    /// Entries and a unitary `z` with `z z* = z* z = 1`.
    Unitary,
    /// Entries and a self-adjoint `r` with `r r = 1`.
    Reflection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(u16, u16),
    XStar(u16, u16),
    /// A maximal run `z^e`, `e ≠ 0`; negative powers are powers of `z*`.
    Z(i32),
    R,
}

impl Letter {
    fn is_entry(self) -> bool {
        matches!(self, Letter::X(..) | Letter::XStar(..))
    }

    /// Degree in the `Z` grading: `x` and `z` count `+1`, their adjoints `-1`,
    /// `r` counts `+1`.
    fn degree(self) -> i64 {
        match self {
            Letter::X(..) | Letter::R => 1,
            Letter::XStar(..) => -1,
            Letter::Z(e) => e as i64,
        }
    }

    /// Letter count, with `z^e` counting `|e|`.
    fn len(self) -> usize {
        match self {
            Letter::Z(e) => e.unsigned_abs() as usize,
            _ => 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::X(i, j) => write!(f, "x[{i},{j}]"),
            Letter::XStar(i, j) => write!(f, "x*[{i},{j}]"),
            Letter::Z(e) => {
                let s = if e > 0 { "z" } else { "z*" };
                let parts: Vec<&str> = (0..e.unsigned_abs()).map(|_| s).collect();
                f.write_str(&parts.join(" "))
            }
            Letter::R => f.write_str("r"),
        }
    }
}

/// A reduced monomial: `z` runs merged, `r r` cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Letter>);

impl Monomial {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Monomial {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match (out.last().copied(), l) {
                (_, Letter::Z(0)) => {}
                (Some(Letter::Z(a)), Letter::Z(b)) => {
                    out.pop();
                    if a + b != 0 {
                        out.push(Letter::Z(a + b));
                    }
                }
                (Some(Letter::R), Letter::R) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Monomial(out)
    }

    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn concat(&self, o: &Monomial) -> Monomial {
        Monomial::new(self.0.iter().chain(&o.0).copied())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    n: usize,
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Scalar>,
}

impl NCPoly {
    pub fn zero(n: usize, alphabet: Alphabet) -> NCPoly {
        NCPoly {
            n,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// `c · m`, checking indices and letters against the alphabet.
    pub fn term(n: usize, alphabet: Alphabet, m: Monomial, c: Scalar) -> Result<NCPoly> {
        for &l in m.letters() {
            let ok = match l {
                Letter::X(i, j) | Letter::XStar(i, j) => {
                    (1..=n as u16).contains(&i) && (1..=n as u16).contains(&j)
                }
                Letter::Z(_) => alphabet == Alphabet::Unitary,
                Letter::R => alphabet == Alphabet::Reflection,
            };
            if !ok {
                return Err(Error::Parse(format!(
                    "letter {l} is not in the {alphabet:?} alphabet with N={n}"
                )));
            }
        }
        let mut p = NCPoly::zero(n, alphabet);
        p.add_term(m, &c);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in output order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, o: &NCPoly) -> Result<()> {
        if self.n != o.n || self.alphabet != o.alphabet {
            return Err(Error::Shape(format!(
                "polynomials over ({}, {:?}) and ({}, {:?})",
                self.n, self.alphabet, o.n, o.alphabet
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &NCPoly) -> Result<NCPoly> {
        self.check(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &NCPoly) -> Result<NCPoly> {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        let mut out = NCPoly::zero(self.n, self.alphabet);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * s));
        }
        out
    }

    pub fn mul(&self, o: &NCPoly) -> Result<NCPoly> {
        self.check(o)?;
        let mut out = NCPoly::zero(self.n, self.alphabet);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.concat(b), &(x * y));
            }
        }
        Ok(out)
    }

    /// Applies a letter substitution to every monomial.
    fn substitute(&self, alphabet: Alphabet, f: impl Fn(Letter) -> Vec<Letter>) -> NCPoly {
        let mut out = NCPoly::zero(self.n, alphabet);
        for (m, c) in &self.terms {
            let m = Monomial::new(m.letters().iter().flat_map(|&l| f(l)));
            out.add_term(m, c);
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_real() && c.re().is_negative();
            let abs = if negative { -c } else { c.clone() };
            let sign = match (k, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sign)?;
            let coeff = if abs.is_one() {
                None
            } else if abs.is_real() {
                Some(abs.to_string())
            } else {
                Some(format!("({abs})"))
            };
            match (coeff, m.is_empty()) {
                (None, _) => write!(f, "{m}")?,
                (Some(c), true) => f.write_str(&c)?,
                (Some(c), false) => write!(f, "{c} * {m}")?,
            }
        }
        Ok(())
    }
}

/// Entries of `x^{⊗w}` as polynomials, row-major over multi-indices.
/// White legs carry `x`, black legs `F · conj(x) · F^{-1}`.
fn tensor_power(fr: &Frame, w: &Word) -> Result<Vec<NCPoly>> {
    let n = fr.n();
    let f = fr.matrix();
    let f_inv = f.inverse().ok_or(Error::SingularFrame)?;
    let leg = |c: Colour| -> Vec<NCPoly> {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut p = NCPoly::zero(n, Alphabet::Entries);
                match c {
                    Colour::White => {
                        p.add_term(Monomial(vec![Letter::X(i as u16 + 1, j as u16 + 1)]), &Scalar::one())
                    }
                    Colour::Black => {
                        for a in 0..n {
                            for b in 0..n {
                                let s = f.get(i, a) * f_inv.get(b, j);
                                p.add_term(Monomial(vec![Letter::XStar(a as u16 + 1, b as u16 + 1)]), &s);
                            }
                        }
                    }
                }
                out.push(p);
            }
        }
        out
    };
    // (X ⊗ Y)[(r1 r2), (c1 c2)] = X[r1, c1] Y[r2, c2]
    let mut acc = vec![NCPoly::term(n, Alphabet::Entries, Monomial::one(), Scalar::one())?];
    let mut side = 1;
    for &c in w.letters() {
        let m = leg(c);
        let mut next = vec![NCPoly::zero(n, Alphabet::Entries); side * n * side * n];
        for r1 in 0..side {
            for c1 in 0..side {
                let x = &acc[r1 * side + c1];
                if x.is_zero() {
                    continue;
                }
                for r2 in 0..n {
                    for c2 in 0..n {
                        let y = &m[r2 * n + c2];
                        next[(r1 * n + r2) * (side * n) + c1 * n + c2] = x.mul(y)?;
                    }
                }
            }
        }
        acc = next;
        side *= n;
    }
    Ok(acc)
}

/// The entries of `T x^{⊗w1} − x^{⊗w2} T`, row-major, zeros included.
pub fn relations_from_intertwiner(t: &LinMap, w1: &Word, w2: &Word, fr: &Frame) -> Result<Vec<NCPoly>> {
    let n = fr.n();
    if t.n() != n || t.dom_len() != w1.len() || t.cod_len() != w2.len() {
        return Err(Error::Shape(format!(
            "map of shape {} is not in ({w1}, {w2}) for N={n}",
            t.shape_string()
        )));
    }
    let x1 = tensor_power(fr, w1)?;
    let x2 = tensor_power(fr, w2)?;
    let (rows, cols) = (pow(n, w2.len()), pow(n, w1.len()));
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut p = NCPoly::zero(n, Alphabet::Entries);
            for k in 0..cols {
                let s = t.get(r, k);
                if !s.is_zero() {
                    p = p.add(&x1[k * cols + c].scale(s))?;
                }
            }
            for k in 0..rows {
                let s = t.get(k, c);
                if !s.is_zero() {
                    p = p.sub(&x2[r * rows + k].scale(s))?;
                }
            }
            out.push(p);
        }
    }
    Ok(out)
}

/// Homogeneous components for the `Z_k` grading (`k = 0` for `Z`), keyed by
/// degree in `0..k` (or in `Z`).
pub fn homogeneous_components(f: &NCPoly, k: u32) -> BTreeMap<i64, NCPoly> {
    let mut out: BTreeMap<i64, NCPoly> = BTreeMap::new();
    for (m, c) in &f.terms {
        let d = if k == 0 {
            m.degree()
        } else {
            m.degree().rem_euclid(k as i64)
        };
        out.entry(d)
            .or_insert_with(|| NCPoly::zero(f.n, f.alphabet))
            .add_term(m.clone(), c);
    }
    out
}

/// Whether every monomial alternates between starred and unstarred entries,
/// has even length, and all of them start with the same kind. Constants
/// are compatible with either start.
pub fn is_alternating_poly(f: &NCPoly) -> bool {
    let mut start: Option<bool> = None;
    for m in f.terms.keys() {
        let l = m.letters();
        if l.len() % 2 == 1 || !l.iter().all(|x| x.is_entry()) {
            return false;
        }
        let starred: Vec<bool> = l.iter().map(|x| matches!(x, Letter::XStar(..))).collect();
        if starred.windows(2).any(|p| p[0] == p[1]) {
            return false;
        }
        if let Some(&s0) = starred.first() {
            if *start.get_or_insert(s0) != s0 {
                return false;
            }
        }
    }
    true
}

/// `x[i,j] ↦ x[i,j] z`, `x*[i,j] ↦ z* x*[i,j]`.
pub fn glue_substitute(f: &NCPoly) -> Result<NCPoly> {
    if f.alphabet != Alphabet::Entries {
        return Err(Error::NotApplicable("gluing substitutes into entries only".into()));
    }
    Ok(f.substitute(Alphabet::Unitary, |l| match l {
        Letter::X(..) => vec![l, Letter::Z(1)],
        Letter::XStar(..) => vec![Letter::Z(-1), l],
        _ => vec![l],
    }))
}

/// `x[i,j] ↦ x[i,j] r`, `x*[i,j] ↦ r x[i,j]`: the glued entries of an
/// extension by `Z_2` with self-adjoint entries.
pub fn glue_with_reflection(f: &NCPoly) -> Result<NCPoly> {
    if f.alphabet != Alphabet::Entries {
        return Err(Error::NotApplicable("gluing substitutes into entries only".into()));
    }
    Ok(f.substitute(Alphabet::Reflection, |l| match l {
        Letter::X(..) => vec![l, Letter::R],
        Letter::XStar(i, j) => vec![Letter::R, Letter::X(i, j)],
        _ => vec![l],
    }))
}

/// The preimage under [`glue_with_reflection`]. Reads each monomial left to
/// right: `x r` is a glued entry, `r x` a glued adjoint, and a bare `x`
/// followed by another entry is read as `x r · r …`.
pub fn unglue_parse(f: &NCPoly) -> Result<NCPoly> {
    if f.alphabet != Alphabet::Reflection {
        return Err(Error::NotApplicable("ungluing parses the reflection alphabet".into()));
    }
    let mut out = NCPoly::zero(f.n, Alphabet::Entries);
    for (m, c) in &f.terms {
        out.add_term(unglue_monomial(m)?, c);
    }
    Ok(out)
}

fn unglue_monomial(m: &Monomial) -> Result<Monomial> {
    let odd = || Error::NotApplicable(format!("monomial {m} has odd degree and no preimage"));
    let l = m.letters();
    let mut out = Vec::with_capacity(l.len());
    let mut pending_r = false;
    let mut i = 0;
    while i < l.len() {
        match (pending_r, l[i]) {
            (true, Letter::X(a, b)) => {
                out.push(Letter::XStar(a, b));
                pending_r = false;
                i += 1;
            }
            (false, Letter::R) => match l.get(i + 1) {
                Some(&Letter::X(a, b)) => {
                    out.push(Letter::XStar(a, b));
                    i += 2;
                }
                _ => return Err(odd()),
            },
            (false, Letter::X(a, b)) => {
                out.push(Letter::X(a, b));
                if l.get(i + 1) == Some(&Letter::R) {
                    i += 2;
                } else {
                    pending_r = true;
                    i += 1;
                }
            }
            (_, other) => {
                return Err(Error::NotApplicable(format!(
                    "letter {other} cannot occur in a glued monomial"
                )))
            }
        }
    }
    if pending_r {
        return Err(odd());
    }
    Ok(Monomial(out))
}

#[cfg(test)]
mod tests;
