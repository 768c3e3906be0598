//! Representation categories presented by their fixed-point spaces.
//!
//! A [`FixTable`] stores `C(∅, w)` for every circle word up to the work
//! cutoff; all morphism spaces follow by Frobenius reciprocity. The closure
//! engine saturates generators under tensor products, contractions,
//! rotations and reflection. [`ExtFixTable`] does the same over square and
//! triangle words, where triangles carry no legs.

mod engine;
mod freeprod;
mod universe;

use std::fmt;

use crate::frame::{fix_to_mor, Frame};
use crate::linalg::{Echelon, SVec, Subspace};
use crate::words::{enumerate_words, glue_word, Colour, ExtWord, Word};
use crate::{Error, Result};

pub use freeprod::free_product_table;
pub(crate) use universe::ExtCoder;

/// Whether stored spaces are known to be the whole category or only a
/// subspace of it (derivations through words beyond the work cutoff are
/// not explored).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    Exact,
    LowerBound,
}

impl Semantics {
    fn and(self, o: Semantics) -> Semantics {
        if self == Semantics::Exact && o == Semantics::Exact {
            Semantics::Exact
        } else {
            Semantics::LowerBound
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::Exact => "exact",
            Semantics::LowerBound => "lower_bound",
        })
    }
}

#[derive(Clone, Debug)]
pub struct FixTable {
    frame: Frame,
    report: usize,
    work: usize,
    /// Indexed by [`Word::index`].
    spaces: Vec<Subspace>,
    semantics: Semantics,
}

impl PartialEq for FixTable {
    /// Same frame, cutoffs and spaces. Semantics is metadata.
    fn eq(&self, o: &FixTable) -> bool {
        self.frame == o.frame
            && self.report == o.report
            && self.work == o.work
            && self.spaces == o.spaces
    }
}

impl FixTable {
    pub(crate) fn from_spaces(
        frame: Frame,
        report: usize,
        work: usize,
        spaces: Vec<Subspace>,
        semantics: Semantics,
    ) -> FixTable {
        debug_assert_eq!(spaces.len(), enumerate_words(work).len());
        FixTable {
            frame,
            report,
            work,
            spaces,
            semantics,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    pub fn report_cutoff(&self) -> usize {
        self.report
    }

    pub fn work_cutoff(&self) -> usize {
        self.work
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn with_semantics(mut self, s: Semantics) -> FixTable {
        self.semantics = s;
        self
    }

    /// `C(∅, w)`, for words up to the work cutoff.
    pub fn space(&self, w: &Word) -> Option<&Subspace> {
        if w.len() > self.work {
            return None;
        }
        self.spaces.get(w.index())
    }

    pub(crate) fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// Dimensions of all words up to the report cutoff, in word order.
    pub fn dims(&self) -> Vec<(Word, usize)> {
        enumerate_words(self.report)
            .into_iter()
            .map(|w| {
                let d = self.spaces[w.index()].dim();
                (w, d)
            })
            .collect()
    }

    /// The first word up to the smaller report cutoff whose spaces differ.
    pub fn first_difference(&self, o: &FixTable) -> Option<Word> {
        enumerate_words(self.report.min(o.report))
            .into_iter()
            .find(|w| self.spaces[w.index()] != o.spaces[w.index()])
    }

    /// Equality of all spaces up to the smaller report cutoff.
    pub fn agrees_with(&self, o: &FixTable) -> bool {
        self.frame == o.frame && self.first_difference(o).is_none()
    }

    /// The same table with a smaller report cutoff.
    pub fn with_report_cutoff(mut self, report: usize) -> Result<FixTable> {
        if report > self.work {
            return Err(Error::Cutoff(format!(
                "report cutoff {report} exceeds work cutoff {}",
                self.work
            )));
        }
        self.report = report;
        Ok(self)
    }

    fn check_compatible(&self, o: &FixTable) -> Result<()> {
        if self.frame != o.frame {
            return Err(Error::TableMismatch("tables have different frames".into()));
        }
        if self.report != o.report || self.work != o.work {
            return Err(Error::TableMismatch(format!(
                "cutoffs ({}, {}) vs ({}, {})",
                self.report, self.work, o.report, o.work
            )));
        }
        Ok(())
    }
}

fn check_cutoffs(report: usize, work: usize) -> Result<()> {
    if report > work {
        return Err(Error::Cutoff(format!(
            "report cutoff {report} exceeds work cutoff {work}"
        )));
    }
    Ok(())
}

fn check_fix_generator(n: usize, legs: usize, s: &Subspace, what: &dyn fmt::Display) -> Result<()> {
    if s.n() != n || s.dom_len() != 0 || s.cod_len() != legs {
        return Err(Error::Shape(format!(
            "generator at {what} must be a fixed-vector space on {legs} legs with N={n}, got N={} {}->{}",
            s.n(),
            s.dom_len(),
            s.cod_len()
        )));
    }
    Ok(())
}

fn plain_seeds(frame: &Frame, work: usize) -> Vec<(usize, SVec)> {
    let mut seeds = vec![(0, SVec::unit(0))];
    if work >= 2 {
        let wb: Word = "wb".parse().expect("valid word");
        let bw: Word = "bw".parse().expect("valid word");
        seeds.push((wb.index(), frame.xi_wb().to_svec()));
        seeds.push((bw.index(), frame.xi_bw().to_svec()));
    }
    seeds
}

fn saturate_plain(frame: &Frame, report: usize, work: usize, init: Vec<Echelon>) -> FixTable {
    let mut uni = universe::plain(work);
    universe::add_long_compositions(&mut uni, work, report);
    let seeds = plain_seeds(frame, work);
    let out = engine::saturate(&uni, frame.int(), init, seeds);
    let n = frame.n();
    let spaces = out
        .into_iter()
        .enumerate()
        .map(|(id, e)| Subspace::from_echelon(n, 0, uni.legs[id].len(), e))
        .collect();
    FixTable::from_spaces(frame.clone(), report, work, spaces, Semantics::LowerBound)
}

/// The least table containing the generators (fixed-vector spaces on
/// words) and the duality morphisms, closed under the Frobenius operations
/// with every intermediate word of length at most `work`.
pub fn closure(
    frame: &Frame,
    generators: &[(Word, Subspace)],
    report: usize,
    work: usize,
) -> Result<FixTable> {
    check_cutoffs(report, work)?;
    let mut init: Vec<Echelon> = vec![Echelon::new(); enumerate_words(work).len()];
    for (w, s) in generators {
        if w.len() > work {
            return Err(Error::Cutoff(format!(
                "generator word {w} is longer than the work cutoff {work}"
            )));
        }
        check_fix_generator(frame.n(), w.len(), s, w)?;
        init[w.index()] = init[w.index()].sum(s.echelon());
    }
    Ok(saturate_plain(frame, report, work, init))
}

/// `C(w1, w2)`, obtained by rotating `C(∅, w2 · star(w1))`.
pub fn mor_space(table: &FixTable, w1: &Word, w2: &Word) -> Result<Subspace> {
    let total = w2.concat(&w1.star());
    if total.len() > table.report {
        return Err(Error::Cutoff(format!(
            "|{w1}| + |{w2}| = {} exceeds the report cutoff {}",
            total.len(),
            table.report
        )));
    }
    let fr = &table.frame;
    let maps = table.spaces[total.index()]
        .basis()
        .iter()
        .map(|v| fix_to_mor(fr, v, w1, w2))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span_in(fr.n(), w1.len(), w2.len(), &maps)
}

/// Pointwise inclusion of all stored spaces.
pub fn table_leq(a: &FixTable, b: &FixTable) -> Result<bool> {
    a.check_compatible(b)?;
    Ok(a.spaces
        .iter()
        .zip(&b.spaces)
        .all(|(x, y)| y.echelon().contains_all(x.echelon())))
}

/// Pointwise intersection. Intersections of categories are categories, so
/// no re-closure is needed.
pub fn table_intersect(a: &FixTable, b: &FixTable) -> Result<FixTable> {
    a.check_compatible(b)?;
    let spaces = a
        .spaces
        .iter()
        .zip(&b.spaces)
        .map(|(x, y)| x.intersect(y))
        .collect::<Result<Vec<_>>>()?;
    Ok(FixTable {
        spaces,
        semantics: a.semantics.and(b.semantics),
        ..a.clone()
    })
}

/// The category generated by both tables.
pub fn table_join(a: &FixTable, b: &FixTable) -> Result<FixTable> {
    a.check_compatible(b)?;
    let init = a
        .spaces
        .iter()
        .zip(&b.spaces)
        .map(|(x, y)| x.echelon().sum(y.echelon()))
        .collect();
    Ok(saturate_plain(&a.frame, a.report, a.work, init))
}

/// Re-closes a table together with extra generators.
pub fn table_extend(t: &FixTable, generators: &[(Word, Subspace)]) -> Result<FixTable> {
    let g = closure(&t.frame, generators, t.report, t.work)?;
    table_join(t, &g)
}

/// The category of `U^+(F) ×̃ Ẑ_k`-type colour counting: everything where
/// the colour sum is divisible by `k` (`k = 0`: equal to zero).
pub fn full_table(frame: &Frame, k: u32, l: usize) -> FixTable {
    full_table_with_work(frame, k, l, l)
}

pub fn full_table_with_work(frame: &Frame, k: u32, report: usize, work: usize) -> FixTable {
    let n = frame.n();
    let spaces = enumerate_words(work)
        .iter()
        .map(|w| {
            if divides(k, w.colour_sum()) {
                Subspace::full(n, 0, w.len())
            } else {
                Subspace::zero_fix(n, w.len())
            }
        })
        .collect();
    FixTable::from_spaces(frame.clone(), report, work, spaces, Semantics::Exact)
}

pub(crate) fn divides(k: u32, x: i64) -> bool {
    if k == 0 {
        x == 0
    } else {
        x.rem_euclid(k as i64) == 0
    }
}

/// A table over extended words, stored for cyclic classes under triangle
/// rotation (which acts as the identity on vectors).
#[derive(Clone, Debug)]
pub struct ExtFixTable {
    frame: Frame,
    coder: ExtCoder,
    spaces: Vec<Subspace>,
    semantics: Semantics,
}

impl PartialEq for ExtFixTable {
    fn eq(&self, o: &ExtFixTable) -> bool {
        self.frame == o.frame && self.coder == o.coder && self.spaces == o.spaces
    }
}

impl ExtFixTable {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn modulus(&self) -> u32 {
        self.coder.k()
    }

    pub fn max_squares(&self) -> usize {
        self.coder.max_squares()
    }

    /// Bound on triangle exponents for `modulus = 0`.
    pub fn exponent_budget(&self) -> i64 {
        self.coder.budget()
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn space(&self, w: &ExtWord) -> Option<&Subspace> {
        if w.modulus() != self.modulus() {
            return None;
        }
        self.coder.encode(w).map(|id| &self.spaces[id])
    }

    /// All stored classes with their spaces, in id order.
    pub fn entries(&self) -> impl Iterator<Item = (ExtWord, &Subspace)> + '_ {
        self.spaces
            .iter()
            .enumerate()
            .map(|(id, s)| (self.coder.decode(id), s))
    }

    /// First stored class where the tables differ.
    pub fn first_difference(&self, o: &ExtFixTable) -> Option<ExtWord> {
        if self.coder != o.coder {
            return Some(ExtWord::empty(self.modulus()));
        }
        (0..self.spaces.len())
            .find(|&i| self.spaces[i] != o.spaces[i])
            .map(|i| self.coder.decode(i))
    }

    /// First difference among classes with at most `squares` squares. The
    /// tables must share modulus and exponent budget but may be stored to
    /// different square counts.
    pub fn first_difference_within(&self, o: &ExtFixTable, squares: usize) -> Option<ExtWord> {
        if self.modulus() != o.modulus()
            || self.exponent_budget() != o.exponent_budget()
            || squares > self.max_squares().min(o.max_squares())
        {
            return Some(ExtWord::empty(self.modulus()));
        }
        self.entries()
            .filter(|(w, _)| w.square_count() <= squares)
            .find(|(w, s)| o.space(w) != Some(*s))
            .map(|(w, _)| w)
    }

    pub(crate) fn from_spaces(
        frame: Frame,
        coder: ExtCoder,
        spaces: Vec<Subspace>,
        semantics: Semantics,
    ) -> ExtFixTable {
        ExtFixTable {
            frame,
            coder,
            spaces,
            semantics,
        }
    }

    #[cfg(test)]
    pub(crate) fn coder(&self) -> &ExtCoder {
        &self.coder
    }
}

/// Cutoffs for extended tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtCutoffs {
    pub max_squares: usize,
    /// Exponent bound for `modulus = 0`; ignored otherwise.
    pub budget: i64,
}

impl ExtCutoffs {
    pub fn squares(max_squares: usize) -> ExtCutoffs {
        ExtCutoffs {
            max_squares,
            budget: 2,
        }
    }
}

/// The least extended table containing the generators, the square duality
/// morphisms and `1` at the empty word.
pub fn ext_closure(
    frame: &Frame,
    k: u32,
    generators: &[(ExtWord, Subspace)],
    cut: ExtCutoffs,
) -> Result<ExtFixTable> {
    let coder = ExtCoder::new(k, cut.max_squares, cut.budget);
    let uni = universe::extended(&coder);
    let mut init = vec![Echelon::new(); coder.len()];
    for (w, s) in generators {
        if w.modulus() != k {
            return Err(Error::ModulusMismatch(w.modulus(), k));
        }
        let id = coder.encode(w).ok_or_else(|| {
            Error::Cutoff(format!(
                "generator word {w} lies outside the extended cutoffs"
            ))
        })?;
        check_fix_generator(frame.n(), w.square_count(), s, w)?;
        init[id] = init[id].sum(s.echelon());
    }
    let mut seeds = vec![(
        coder.encode(&ExtWord::empty(k)).expect("empty word"),
        SVec::unit(0),
    )];
    if cut.max_squares >= 2 {
        let sq = |a: Colour, b: Colour| {
            coder
                .encode(&ExtWord::new(k, 0, vec![(a, 0), (b, 0)]))
                .expect("two squares")
        };
        seeds.push((sq(Colour::White, Colour::Black), frame.xi_wb().to_svec()));
        seeds.push((sq(Colour::Black, Colour::White), frame.xi_bw().to_svec()));
    }
    let out = engine::saturate(&uni, frame.int(), init, seeds);
    let n = frame.n();
    let spaces = out
        .into_iter()
        .enumerate()
        .map(|(id, e)| Subspace::from_echelon(n, 0, uni.legs[id].len(), e))
        .collect();
    Ok(ExtFixTable {
        frame: frame.clone(),
        coder,
        spaces,
        semantics: Semantics::LowerBound,
    })
}

/// Restriction of an extended table to glued words: `spaces(w) :=
/// G(glue(w))` for circle words up to `report`.
pub fn glue_table(g: &ExtFixTable, report: usize) -> Result<FixTable> {
    let work = g.max_squares();
    check_cutoffs(report, work)?;
    let k = g.modulus();
    let spaces = enumerate_words(work)
        .iter()
        .map(|w| {
            let gw = glue_word(w, k);
            g.space(&gw).cloned().ok_or_else(|| {
                Error::Cutoff(format!("glued word {gw} lies outside the extended cutoffs"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FixTable::from_spaces(
        g.frame.clone(),
        report,
        work,
        spaces,
        g.semantics,
    ))
}

#[cfg(test)]
mod tests;
