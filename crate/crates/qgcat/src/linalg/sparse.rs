//! Sparse Gaussian-integer vectors and fraction-free reduced echelon forms.
//!
//! All spans are scale invariant, so vectors are kept primitive (integer
//! content one) and rows of an echelon form are additionally scaled so that
//! their pivot is a positive rational integer. With full back-reduction this
//! makes the row list a unique representative of the subspace.

use super::gint::{Content, GInt};

pub(crate) type Entry = (u32, GInt);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct SVec(pub Vec<Entry>);

impl SVec {
    pub fn unit(i: u32) -> SVec {
        SVec(vec![(i, GInt::ONE)])
    }

    /// Sorts, sums duplicate indices and drops zeros.
    pub fn from_unsorted(mut e: Vec<Entry>) -> SVec {
        e.sort_unstable_by_key(|x| x.0);
        let mut out: Vec<Entry> = Vec::with_capacity(e.len());
        for (i, v) in e {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 = last.1.add(&v),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((i, v));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        SVec(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, col: u32) -> Option<&GInt> {
        self.0
            .binary_search_by_key(&col, |e| e.0)
            .ok()
            .map(|k| &self.0[k].1)
    }

    pub fn content(&self) -> Content {
        let mut c = Content::zero();
        for (_, v) in &self.0 {
            c.absorb(v);
            if c.is_one() {
                break;
            }
        }
        c
    }

    pub fn make_primitive(&mut self) {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return;
        }
        for e in &mut self.0 {
            e.1 = e.1.div_int(&c);
        }
    }

    /// Unique representative of the line: pivot positive real, content one.
    pub fn canonicalize(&mut self) {
        let Some(first) = self.0.first() else { return };
        if !first.1.is_positive_real() {
            let m = first.1.conj();
            for e in &mut self.0 {
                e.1 = e.1.mul(&m);
            }
        }
        self.make_primitive();
    }

    /// `p·v − a·row`, merged in index order.
    pub fn combine(p: &GInt, v: &SVec, a: &GInt, row: &SVec) -> SVec {
        let mut out = Vec::with_capacity(v.0.len() + row.0.len());
        let (mut i, mut j) = (0, 0);
        let na = a.neg();
        let unit = p.is_one();
        let scale_v = |x: &GInt| if unit { x.clone() } else { p.mul(x) };
        while i < v.0.len() || j < row.0.len() {
            let ci = v.0.get(i).map(|e| e.0).unwrap_or(u32::MAX);
            let cj = row.0.get(j).map(|e| e.0).unwrap_or(u32::MAX);
            if ci < cj {
                out.push((ci, scale_v(&v.0[i].1)));
                i += 1;
            } else if cj < ci {
                out.push((cj, na.mul(&row.0[j].1)));
                j += 1;
            } else {
                let x = GInt::mul_sub(p, &v.0[i].1, a, &row.0[j].1);
                if !x.is_zero() {
                    out.push((ci, x));
                }
                i += 1;
                j += 1;
            }
        }
        SVec(out)
    }

    /// Kronecker product; `other_dim` is the length of `other`'s space.
    pub fn tensor(&self, other: &SVec, other_dim: u32) -> SVec {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for (i, a) in &self.0 {
            for (j, b) in &other.0 {
                out.push((i * other_dim + j, a.mul(b)));
            }
        }
        SVec(out)
    }
}

/// Reduced echelon form with canonically scaled rows, sorted by pivot.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Echelon {
    pivots: Vec<u32>,
    rows: Vec<SVec>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    /// Remainder of `v` against the rows, made primitive. Zero iff `v` lies
    /// in the span.
    pub fn reduce(&self, mut v: SVec) -> SVec {
        if !self.rows.is_empty() {
            let mut i = 0;
            while i < v.0.len() {
                let col = v.0[i].0;
                match self.pivots.binary_search(&col) {
                    Ok(j) => {
                        let row = &self.rows[j];
                        let p = &row.0[0].1;
                        let a = v.0[i].1.clone();
                        v = SVec::combine(p, &v, &a, row);
                        if !p.is_one() {
                            v.make_primitive();
                        }
                    }
                    Err(_) => i += 1,
                }
            }
        }
        v.make_primitive();
        v
    }

    pub fn contains(&self, v: &SVec) -> bool {
        v.is_zero() || self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the span. Returns the new canonical row when `v` was
    /// independent of the existing rows.
    pub fn insert(&mut self, v: SVec) -> Option<SVec> {
        let mut r = self.reduce(v);
        if r.is_zero() {
            return None;
        }
        r.canonicalize();
        let pc = r.0[0].0;
        let pr = r.0[0].1.clone();
        for row in self.rows.iter_mut() {
            if row.0[0].0 > pc {
                break;
            }
            if let Some(c) = row.get(pc).cloned() {
                let mut nr = SVec::combine(&pr, row, &c, &r);
                nr.make_primitive();
                *row = nr;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, r.clone());
        Some(r)
    }

    /// Inserts every vector; returns how many were independent.
    pub fn extend<I: IntoIterator<Item = SVec>>(&mut self, it: I) -> usize {
        it.into_iter().filter_map(|v| self.insert(v)).count()
    }

    pub fn from_vectors<I: IntoIterator<Item = SVec>>(it: I) -> Echelon {
        let mut e = Echelon::new();
        e.extend(it);
        e
    }

    pub fn contains_all(&self, other: &Echelon) -> bool {
        other.rank() <= self.rank() && other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Echelon) -> Echelon {
        let (mut big, small) = if self.rank() >= other.rank() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        big.extend(small.rows.iter().cloned());
        big
    }

    /// Zassenhaus intersection: rows `[v|v]` and `[w|0]` over a doubled
    /// index space; the rows whose pivot lands in the right half span the
    /// intersection.
    pub fn intersect(&self, other: &Echelon, dim: u32) -> Echelon {
        if self.rank() == 0 || other.rank() == 0 {
            return Echelon::new();
        }
        let mut z = Echelon::new();
        for v in &self.rows {
            let mut e = v.0.clone();
            e.extend(v.0.iter().map(|(i, x)| (i + dim, x.clone())));
            z.insert(SVec(e));
        }
        for w in &other.rows {
            z.insert(w.clone());
        }
        let mut out = Echelon::new();
        for r in &z.rows {
            if r.0[0].0 >= dim {
                out.insert(SVec(
                    r.0.iter().map(|(i, x)| (i - dim, x.clone())).collect(),
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[(u32, i64)]) -> SVec {
        SVec::from_unsorted(e.iter().map(|&(i, x)| (i, GInt::Small(x, 0))).collect())
    }

    #[test]
    fn echelon_is_order_independent() {
        let vs = vec![
            sv(&[(0, 2), (1, 4)]),
            sv(&[(1, 3), (2, 1)]),
            sv(&[(0, 1), (2, 5)]),
        ];
        let a = Echelon::from_vectors(vs.clone());
        let b = Echelon::from_vectors(vs.into_iter().rev());
        assert_eq!(a, b);
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn dependent_vector_rejected() {
        let mut e = Echelon::from_vectors(vec![sv(&[(0, 1), (1, 1)]), sv(&[(1, 1), (2, 1)])]);
        assert!(e.insert(sv(&[(0, 2), (1, 4), (2, 2)])).is_none());
        assert!(e.contains(&sv(&[(0, 1), (2, -1)])));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let a = Echelon::from_vectors(vec![sv(&[(0, 1)]), sv(&[(1, 1)])]);
        let b = Echelon::from_vectors(vec![sv(&[(1, 1)]), sv(&[(2, 1)])]);
        let c = a.intersect(&b, 3);
        assert_eq!(c, Echelon::from_vectors(vec![sv(&[(1, 1)])]));
    }

    #[test]
    fn gaussian_canonical_scaling() {
        let mut v = SVec(vec![(0, GInt::Small(1, 1)), (3, GInt::Small(2, 0))]);
        v.canonicalize();
        assert_eq!(
            v,
            SVec(vec![(0, GInt::Small(1, 0)), (3, GInt::Small(1, -1))])
        );
    }
}
