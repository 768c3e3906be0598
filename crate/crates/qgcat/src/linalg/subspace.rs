use super::linmap::{gint_to_scalar, pow, LinMap};
use super::sparse::{Echelon, SVec};
use crate::{Error, Result};

/// A subspace of maps `(C^N)^{⊗dom_len} → (C^N)^{⊗cod_len}`, held as the
/// unique reduced echelon basis of the flattened maps. Equality of values is
/// equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    dom_len: usize,
    cod_len: usize,
    ech: Echelon,
}

impl Subspace {
    pub fn zero(n: usize, dom_len: usize, cod_len: usize) -> Subspace {
        Subspace {
            n,
            dom_len,
            cod_len,
            ech: Echelon::new(),
        }
    }

    pub fn full(n: usize, dom_len: usize, cod_len: usize) -> Subspace {
        let d = pow(n, dom_len + cod_len) as u32;
        Subspace::from_echelon(
            n,
            dom_len,
            cod_len,
            Echelon::from_vectors((0..d).map(SVec::unit)),
        )
    }

    /// Span of fixed vectors on `legs` legs.
    pub fn zero_fix(n: usize, legs: usize) -> Subspace {
        Subspace::zero(n, 0, legs)
    }

    pub(crate) fn from_echelon(n: usize, dom_len: usize, cod_len: usize, ech: Echelon) -> Subspace {
        Subspace {
            n,
            dom_len,
            cod_len,
            ech,
        }
    }

    pub(crate) fn echelon(&self) -> &Echelon {
        &self.ech
    }

    /// Span of maps of the given shape. Zero maps are dropped.
    pub fn span_in(n: usize, dom_len: usize, cod_len: usize, maps: &[LinMap]) -> Result<Subspace> {
        let mut s = Subspace::zero(n, dom_len, cod_len);
        for m in maps {
            s.check(m)?;
            s.ech.insert(m.to_svec());
        }
        Ok(s)
    }

    fn check(&self, m: &LinMap) -> Result<()> {
        if m.n() != self.n || m.dom_len() != self.dom_len || m.cod_len() != self.cod_len {
            return Err(Error::Shape(format!(
                "map {} does not fit subspace (N={}, dom {} legs, cod {} legs)",
                m.shape_string(),
                self.n,
                self.dom_len,
                self.cod_len
            )));
        }
        Ok(())
    }

    fn check_same(&self, o: &Subspace) -> Result<()> {
        if self.n != o.n || self.dom_len != o.dom_len || self.cod_len != o.cod_len {
            return Err(Error::Shape(format!(
                "subspaces of shapes (N={}, {}->{}) and (N={}, {}->{})",
                self.n, self.dom_len, self.cod_len, o.n, o.dom_len, o.cod_len
            )));
        }
        Ok(())
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

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    /// Dimension of the ambient space of maps.
    pub fn ambient_dim(&self) -> usize {
        pow(self.n, self.dom_len + self.cod_len)
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn member(&self, t: &LinMap) -> Result<bool> {
        self.check(t)?;
        Ok(self.ech.contains(&t.to_svec()))
    }

    /// Whether `o ⊆ self`.
    pub fn contains(&self, o: &Subspace) -> Result<bool> {
        self.check_same(o)?;
        Ok(self.ech.contains_all(&o.ech))
    }

    pub fn intersect(&self, o: &Subspace) -> Result<Subspace> {
        self.check_same(o)?;
        let ech = if self.is_full() {
            o.ech.clone()
        } else if o.is_full() {
            self.ech.clone()
        } else {
            self.ech.intersect(&o.ech, self.ambient_dim() as u32)
        };
        Ok(Subspace {
            ech,
            ..self.clone()
        })
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        self.check_same(o)?;
        Ok(Subspace {
            ech: self.ech.sum(&o.ech),
            ..self.clone()
        })
    }

    /// The same subspace with the legs reinterpreted (entry order kept).
    pub fn reshape(&self, dom_len: usize, cod_len: usize) -> Result<Subspace> {
        if dom_len + cod_len != self.dom_len + self.cod_len {
            return Err(Error::Shape(format!(
                "cannot reshape {}+{} legs into {}+{}",
                self.dom_len, self.cod_len, dom_len, cod_len
            )));
        }
        Ok(Subspace {
            dom_len,
            cod_len,
            ..self.clone()
        })
    }

    /// The canonical RREF basis: leading entries 1, pivot columns cleared.
    pub fn basis(&self) -> Vec<LinMap> {
        self.ech
            .rows()
            .iter()
            .map(|r| {
                LinMap::from_svec(
                    self.n,
                    self.dom_len,
                    self.cod_len,
                    r,
                    &gint_to_scalar(&r.0[0].1),
                )
            })
            .collect()
    }
}

pub fn span(maps: &[LinMap]) -> Result<Subspace> {
    let first = maps.first().ok_or_else(|| {
        Error::Shape("span of an empty list has no shape; use Subspace::span_in".into())
    })?;
    Subspace::span_in(first.n(), first.dom_len(), first.cod_len(), maps)
}

pub fn member(v: &Subspace, t: &LinMap) -> Result<bool> {
    v.member(t)
}

pub fn intersect(v: &Subspace, w: &Subspace) -> Result<Subspace> {
    v.intersect(w)
}
