//! Invariants of representation categories and the complexification,
//! gluing and ungluing constructions, as operations on tables, together
//! with finite checkers for the main structural theorems.
//!
//! Every verdict holds up to the report cutoff of the tables involved.

use std::fmt;

use num_integer::Integer;

use crate::category::{
    closure, ext_closure, full_table_with_work, glue_table, table_extend, table_intersect,
    ExtCutoffs, ExtFixTable, FixTable,
};
use crate::frame::{mor_to_fix, Frame};
use crate::linalg::{LinMap, Subspace};
use crate::words::{enumerate_words, glue_word, Colour, ExtWord, Word};
use crate::{Error, Result};

/// The degree of reflection as seen up to a cutoff: the non-negative
/// generator of the group of colour sums of words with nonzero fixed
/// vectors. The true degree divides it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub value: u64,
    /// `(w1, w2, c(w2) - c(w1))` for the morphism spaces that lowered the
    /// value, in the order found.
    pub witnesses: Vec<(Word, Word, i64)>,
    pub cutoff: usize,
}

pub fn degree_of_reflection(t: &FixTable) -> DegreeCertificate {
    degree_at_cutoff(t, t.report_cutoff())
}

/// The certificate computed from words up to `cutoff` only.
pub fn degree_at_cutoff(t: &FixTable, cutoff: usize) -> DegreeCertificate {
    let mut value: u64 = 0;
    let mut witnesses = Vec::new();
    for w in enumerate_words(cutoff.min(t.work_cutoff())) {
        let c = w.colour_sum();
        if c == 0 || t.space(&w).is_some_and(|s| s.is_zero()) {
            continue;
        }
        let g = value.gcd(&c.unsigned_abs());
        if g != value {
            value = g;
            witnesses.push((Word::empty(), w, c));
        }
    }
    DegreeCertificate {
        value,
        witnesses,
        cutoff,
    }
}

/// The result of a predicate with the first word where it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl Check {
    fn pass() -> Check {
        Check {
            holds: true,
            counterexample: None,
        }
    }

    fn fail(what: impl fmt::Display) -> Check {
        Check {
            holds: false,
            counterexample: Some(what.to_string()),
        }
    }

    fn from_difference(d: Option<Word>) -> Check {
        match d {
            None => Check::pass(),
            Some(w) => Check::fail(if w.is_empty() {
                "(empty word)".to_string()
            } else {
                w.to_string()
            }),
        }
    }
}

fn identity_swap_vector(fr: &Frame) -> Result<LinMap> {
    let wb: Word = "wb".parse()?;
    let bw: Word = "bw".parse()?;
    mor_to_fix(fr, &LinMap::identity(fr.n(), 2), &wb, &bw)
}

/// `1 ∈ C(w, b)` as a fixed vector on `bb`: the relation cutting a unitary
/// category down to its orthogonal part.
pub fn orthogonality_generator(fr: &Frame) -> Result<(Word, Subspace)> {
    let w: Word = "w".parse()?;
    let b: Word = "b".parse()?;
    let v = mor_to_fix(fr, &LinMap::identity(fr.n(), 1), &w, &b)?;
    Ok((b.concat(&w.star()), Subspace::span_in(fr.n(), 0, 2, &[v])?))
}

/// The identity in `C(wb, bw)` as a generator on `bw · star(wb)`.
pub fn global_colour_generator(fr: &Frame) -> Result<(Word, Subspace)> {
    let wb: Word = "wb".parse()?;
    let bw: Word = "bw".parse()?;
    let v = identity_swap_vector(fr)?;
    Ok((
        bw.concat(&wb.star()),
        Subspace::span_in(fr.n(), 0, 4, &[v])?,
    ))
}

/// Whether the identity lies in `C(wb, bw)`.
pub fn is_globally_colourized(t: &FixTable) -> Result<bool> {
    if t.report_cutoff() < 4 {
        return Err(Error::Cutoff(
            "global colourization needs a report cutoff of at least 4".into(),
        ));
    }
    let (w, s) = global_colour_generator(t.frame())?;
    Ok(t.space(&w).expect("word within cutoff").contains(&s)?)
}

/// Whether `C(∅, w̄) = C(∅, w)` for every stored word.
pub fn colour_inversion_check(t: &FixTable) -> Check {
    Check::from_difference(
        enumerate_words(t.report_cutoff())
            .into_iter()
            .find(|w| t.space(w) != t.space(&w.invert())),
    )
}

pub fn is_colour_inversion_invariant(t: &FixTable) -> bool {
    colour_inversion_check(t).holds
}

/// The alternating generators `C(∅, (wb)^j)` and `C(∅, (bw)^j)`.
fn alternating_generators(t: &FixTable) -> Vec<(Word, Subspace)> {
    let mut out = Vec::new();
    for j in 1..=(t.work_cutoff() / 2) as i64 {
        for w in [Word::alternating(j), Word::alternating(-j)] {
            out.push((w.clone(), t.space(&w).expect("within cutoff").clone()));
        }
    }
    out
}

/// Whether the table is generated by its spaces on alternating words.
pub fn alternating_check(t: &FixTable) -> Result<Check> {
    let g = closure(
        t.frame(),
        &alternating_generators(t),
        t.report_cutoff(),
        t.work_cutoff(),
    )?;
    Ok(Check::from_difference(g.first_difference(t)))
}

pub fn is_alternating_category(t: &FixTable) -> Result<bool> {
    Ok(alternating_check(t)?.holds)
}

/// `C(∅, w)` kept where `c(w) ≡ 0 (mod k)`, zero elsewhere.
pub fn tensor_complexify(t: &FixTable, k: u32) -> FixTable {
    let n = t.n();
    let spaces = enumerate_words(t.work_cutoff())
        .iter()
        .map(|w| {
            if crate::category::divides(k, w.colour_sum()) {
                t.space(w).expect("within cutoff").clone()
            } else {
                Subspace::zero_fix(n, w.len())
            }
        })
        .collect();
    FixTable::from_spaces(
        t.frame().clone(),
        t.report_cutoff(),
        t.work_cutoff(),
        spaces,
        t.semantics(),
    )
}

/// Options for [`free_complexify`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FreeOptions {
    /// For degree-one inputs: add `ξ̃^{⊗l}` where `ξ̃` is a fixed vector on
    /// the shortest odd alternating word `wbw…w`.
    pub with_odd_witness: bool,
}

/// The category generated by the spaces on alternating words. For inputs
/// of degree one and `l ≥ 2` the answer depends on extra generators; that
/// case needs `with_odd_witness`.
pub fn free_complexify(t: &FixTable, l: u32, opts: FreeOptions) -> Result<FixTable> {
    if l == 1 {
        return Err(Error::NotApplicable(
            "free complexification with Z_1 is the input itself".into(),
        ));
    }
    let degree = degree_of_reflection(t).value;
    let mut gens = alternating_generators(t);
    if degree == 1 && l >= 2 {
        if !opts.with_odd_witness {
            return Err(Error::NotApplicable(format!(
                "degree of reflection 1 with l = {l}: the free complexification needs an odd witness"
            )));
        }
        let (w, v) = odd_witness(t)?;
        let mut word = Word::empty();
        let mut vec = LinMap::scalar(t.n(), 1.into());
        for _ in 0..l {
            word = word.concat(&w);
            vec = vec.tensor(&v)?;
        }
        if word.len() > t.work_cutoff() {
            return Err(Error::Cutoff(format!(
                "odd witness power {word} exceeds the work cutoff"
            )));
        }
        gens.push((
            word.clone(),
            Subspace::span_in(t.n(), 0, word.len(), &[vec])?,
        ));
    }
    closure(t.frame(), &gens, t.report_cutoff(), t.work_cutoff())
}

/// A nonzero fixed vector on the shortest odd word `wbw…w`.
fn odd_witness(t: &FixTable) -> Result<(Word, LinMap)> {
    let mut len = 1;
    while len <= t.work_cutoff() {
        let w = Word::new(
            (0..len)
                .map(|i| {
                    if i % 2 == 0 {
                        Colour::White
                    } else {
                        Colour::Black
                    }
                })
                .collect(),
        );
        if let Some(v) = t.space(&w).and_then(|s| s.basis().into_iter().next()) {
            return Ok((w, v));
        }
        len += 2;
    }
    Err(Error::NotApplicable(
        "no fixed vector on an odd alternating word within the cutoff".into(),
    ))
}

/// The maximal `Z_k`-ungluing: the extended category generated by the
/// spaces on glued words.
pub fn max_unglue(t: &FixTable, k: u32) -> Result<ExtFixTable> {
    max_unglue_with(t, k, ExtCutoffs::squares(t.work_cutoff()))
}

pub fn max_unglue_with(t: &FixTable, k: u32, cut: ExtCutoffs) -> Result<ExtFixTable> {
    let gens = glued_generators(t, k, cut.max_squares);
    ext_closure(t.frame(), k, &gens, cut)
}

fn glued_generators(t: &FixTable, k: u32, max_squares: usize) -> Vec<(ExtWord, Subspace)> {
    enumerate_words(t.work_cutoff().min(max_squares))
        .into_iter()
        .filter_map(|w| {
            let s = t.space(&w).expect("within cutoff");
            (!s.is_zero()).then(|| (glue_word(&w, k), s.clone()))
        })
        .collect()
}

/// `1 ∈ C(s, S)` as a fixed vector on `SS`.
fn square_orthogonality(fr: &Frame) -> Result<(ExtWord, Subspace)> {
    let (_, s) = orthogonality_generator(fr)?;
    Ok((ExtWord::parse("SS", 2)?, s))
}

/// The canonical `Z_2`-ungluing: the maximal one intersected with
/// `O^+(F) * Ẑ_2`, i.e. generated by the glued spaces and `1 ∈ C(s, S)`.
pub fn canonical_unglue_z2(t: &FixTable) -> Result<ExtFixTable> {
    let fr = t.frame();
    if fr.c().is_none() {
        return Err(Error::NotApplicable(
            "canonical ungluing needs F·conj(F) = c·1".into(),
        ));
    }
    let inv = colour_inversion_check(t);
    if !inv.holds {
        return Err(Error::NotApplicable(format!(
            "canonical ungluing needs colour-inversion invariance; fails at {}",
            inv.counterexample.unwrap_or_default()
        )));
    }
    let cut = ExtCutoffs::squares(t.work_cutoff());
    let mut gens = glued_generators(t, 2, cut.max_squares);
    gens.push(square_orthogonality(fr)?);
    ext_closure(fr, 2, &gens, cut)
}

/// The `×_{2k}` product of an orthogonal `H` with `Ẑ_2`, from its defining
/// relation `v r v r … = r v r v …` (`k` factors of `v`) on top of `H * Ẑ_2`.
pub fn times_product_table(h: &FixTable, k: usize, cut: ExtCutoffs) -> Result<ExtFixTable> {
    let fr = h.frame();
    let mut gens: Vec<(ExtWord, Subspace)> = enumerate_words(h.work_cutoff().min(cut.max_squares))
        .into_iter()
        .filter_map(|w| {
            let s = h.space(&w).expect("within cutoff");
            (!s.is_zero()).then(|| (ExtWord::from_circles(2, &w), s.clone()))
        })
        .collect();
    gens.push(square_orthogonality(fr)?);
    if k == 0 {
        return Err(Error::NotApplicable(
            "the x_{2k} product needs k >= 1".into(),
        ));
    }
    // identity in C((s t)^k, (t s)^k), as a fixed vector on
    // (t s)^k · star((s t)^k)
    let whites = Word::repeat(Colour::White, k);
    let v = mor_to_fix(fr, &LinMap::identity(fr.n(), k), &whites, &whites)?;
    let lhs = ExtWord::parse(&"st".repeat(k), 2)?;
    let rhs = ExtWord::parse(&"ts".repeat(k), 2)?;
    let word = rhs.concat(&lhs.star())?;
    if word.square_count() > cut.max_squares {
        return Err(Error::Cutoff(format!(
            "relation word {word} exceeds the square cutoff"
        )));
    }
    gens.push((word, Subspace::span_in(fr.n(), 0, 2 * k, &[v])?));
    ext_closure(fr, 2, &gens, cut)
}

/// One clause of a theorem check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: String,
    pub clauses: Vec<Clause>,
    /// Set for statements the theory leaves open: the clauses are evidence,
    /// not a verification.
    pub evidence_only: bool,
    pub report_cutoff: usize,
    pub work_cutoff: usize,
}

impl Verdict {
    fn new(theorem: &str, t: &FixTable) -> Verdict {
        Verdict {
            theorem: theorem.into(),
            clauses: Vec::new(),
            evidence_only: false,
            report_cutoff: t.report_cutoff(),
            work_cutoff: t.work_cutoff(),
        }
    }

    fn push(&mut self, name: impl Into<String>, check: Check) {
        self.clauses.push(Clause {
            name: name.into(),
            check,
        });
    }

    fn push_bool(&mut self, name: impl Into<String>, ok: bool, what: impl fmt::Display) {
        self.push(name, if ok { Check::pass() } else { Check::fail(what) });
    }

    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|c| c.check.holds)
    }
}

fn same(a: &FixTable, b: &FixTable) -> Check {
    if a.frame() != b.frame() {
        return Check::fail("frames differ");
    }
    Check::from_difference(a.first_difference(b))
}

/// Tensor complexification is the intersection with the colour-counting
/// category, and iterating it takes lcms.
pub fn verify_a(h: &FixTable, ks: &[u32]) -> Result<Verdict> {
    let mut v = Verdict::new("A", h);
    for &k in ks {
        let tc = tensor_complexify(h, k);
        let full = full_table_with_work(h.frame(), k, h.report_cutoff(), h.work_cutoff());
        v.push(
            format!("k={k}: filtered table = intersection with the Z_{k} table"),
            same(&tc, &table_intersect(h, &full)?),
        );
        let deg = degree_of_reflection(&tc).value;
        let base = degree_of_reflection(h).value;
        let l = lcm0(base, k as u64);
        v.push_bool(
            format!("k={k}: degree certificate is a multiple of lcm"),
            multiple_of(deg, l),
            format!("degree {deg}, lcm {l}"),
        );
    }
    for &k in ks {
        for &l in ks {
            let twice = tensor_complexify(&tensor_complexify(h, k), l);
            let once = tensor_complexify(h, lcm0(k as u64, l as u64) as u32);
            v.push(
                format!("tensor {k} then {l} = tensor lcm"),
                same(&twice, &once),
            );
        }
    }
    Ok(v)
}

/// `lcm` with the convention that 0 is a multiple of everything.
pub fn lcm0(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a.lcm(&b)
    }
}

fn multiple_of(x: u64, d: u64) -> bool {
    if d == 0 {
        x == 0
    } else {
        x % d == 0
    }
}

/// The orthogonal part `G ∩ O^+(F)`: `G` joined with `1 ∈ C(w, b)`.
pub fn orthogonal_part(g: &FixTable) -> Result<FixTable> {
    table_extend(g, &[orthogonality_generator(g.frame())?])
}

/// For orthogonal `H`: `H ×̃ Ẑ` is globally colourized with degree 0 and
/// is recovered from its orthogonal part. With `modulus = Some(k)`, `k > 0`,
/// the statement is open and the clauses are evidence for
/// `G = (G ∩ O^+(F)) ×̃ Ẑ_k` on the given table itself.
pub fn verify_b(h: &FixTable, modulus: Option<u32>) -> Result<Verdict> {
    let mut v = Verdict::new("B", h);
    match modulus {
        None | Some(0) => {
            let t = tensor_complexify(h, 0);
            v.push_bool(
                "tensor complexification is globally colourized",
                is_globally_colourized(&t)?,
                "identity not in C(wb, bw)",
            );
            let deg = degree_of_reflection(&t);
            v.push_bool(
                "degree certificate is 0",
                deg.value == 0,
                format!("degree {}", deg.value),
            );
            let back = tensor_complexify(&orthogonal_part(&t)?, 0);
            v.push("reconstruction from the orthogonal part", same(&back, &t));
        }
        Some(k) => {
            v.evidence_only = true;
            let g = h;
            v.push_bool(
                "input is globally colourized",
                is_globally_colourized(g)?,
                "identity not in C(wb, bw)",
            );
            let deg = degree_of_reflection(g);
            v.push_bool(
                format!("degree certificate is {k}"),
                deg.value == k as u64,
                format!("degree {}", deg.value),
            );
            let back = tensor_complexify(&orthogonal_part(g)?, k);
            v.push(format!("G = (G ∩ O^+(F)) ×̃ Z_{k}"), same(&back, g));
        }
    }
    Ok(v)
}

/// Free complexification by `l` equals the glued free product, for every
/// `l`, and does not depend on `l`.
pub fn verify_c(h: &FixTable, ls: &[u32]) -> Result<Verdict> {
    let mut v = Verdict::new("C", h);
    let deg = degree_of_reflection(h).value;
    if deg == 1 && ls.iter().any(|&l| l != 0) {
        return Err(Error::NotApplicable(
            "degree of reflection 1: the theorem covers only l = 0".into(),
        ));
    }
    let reference = free_complexify(h, ls.first().copied().unwrap_or(0), FreeOptions::default())?;
    for &l in ls {
        let fc = free_complexify(h, l, FreeOptions::default())?;
        v.push(
            format!("l={l}: agrees with l={}", ls[0]),
            same(&fc, &reference),
        );
        if l >= 2 {
            let fp = crate::category::free_product_table(h, l, h.work_cutoff())?;
            let glued = glue_table(&fp, h.report_cutoff())?;
            v.push(
                format!("l={l}: glued free product = alternating closure"),
                same(&glued, &fc),
            );
        }
    }
    let again = free_complexify(&reference, 2, FreeOptions::default())?;
    v.push(
        "free complexification is idempotent",
        same(&again, &reference),
    );
    for k in [0, 2] {
        let tf = free_complexify(&tensor_complexify(h, k), 2, FreeOptions::default())?;
        v.push(
            format!("tensor {k} then free = free"),
            same(&tf, &reference),
        );
    }
    Ok(v)
}

/// For orthogonal `H`: `H ~* Ẑ` is alternating and inversion invariant and
/// is recovered from its orthogonal part; adding global colourization gives
/// `H ×̃ Ẑ`.
pub fn verify_d(h: &FixTable) -> Result<Verdict> {
    let mut v = Verdict::new("D", h);
    let g = free_complexify(h, 0, FreeOptions::default())?;
    v.push(
        "free complexification is alternating",
        alternating_check(&g)?,
    );
    v.push(
        "free complexification is inversion invariant",
        colour_inversion_check(&g),
    );
    let back = free_complexify(&orthogonal_part(&g)?, 0, FreeOptions::default())?;
    v.push("reconstruction from the orthogonal part", same(&back, &g));
    let tensor = table_extend(&g, &[global_colour_generator(h.frame())?])?;
    v.push(
        "free complexification + global colourization = tensor complexification",
        same(&tensor, &tensor_complexify(h, 0)),
    );
    Ok(v)
}

/// Gluing inverts canonical ungluing on inversion-invariant tables. With
/// `times = Some((H, k))` also compares the ungluing with `H ×_{2k} Ẑ_2`
/// on classes with at most `work - 4` squares.
pub fn verify_e(t: &FixTable, times: Option<(&FixTable, usize)>) -> Result<Verdict> {
    let mut v = Verdict::new("E", t);
    let un = canonical_unglue_z2(t)?;
    let back = glue_table(&un, t.report_cutoff())?;
    v.push("glue(canonical ungluing) = input", same(&back, t));
    if let Some((h, k)) = times {
        // the relation closure needs four squares of headroom before its
        // classes stop growing
        let prod = times_product_table(h, k, ExtCutoffs::squares(t.work_cutoff()))?;
        let within = t.report_cutoff().min(t.work_cutoff().saturating_sub(4));
        let d = un.first_difference_within(&prod, within);
        v.push(
            format!("ungluing = H x_{} Z_2 from its relations, up to {within} squares", 2 * k),
            match d {
                None => Check::pass(),
                Some(w) => Check::fail(w),
            },
        );
    }
    Ok(v)
}
