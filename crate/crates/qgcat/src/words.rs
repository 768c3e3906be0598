//! The free two-coloured monoid of circle words and the Z_k-extended monoid
//! of square/triangle words.
//!
//! Text encoding: `w`/`b` for white/black circles, `s`/`S` for white/black
//! squares, `t`/`T` for the white triangle and its inverse.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    pub fn flip(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Colour::White => 1,
            Colour::Black => -1,
        }
    }

    pub(crate) fn bit(self) -> usize {
        match self {
            Colour::White => 0,
            Colour::Black => 1,
        }
    }

    pub(crate) fn from_bit(b: usize) -> Colour {
        if b == 0 {
            Colour::White
        } else {
            Colour::Black
        }
    }
}

/// A word in white and black circles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Colour>);

impl Word {
    pub fn new(letters: Vec<Colour>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// `n` copies of one colour.
    pub fn repeat(c: Colour, n: usize) -> Word {
        Word(vec![c; n])
    }

    pub fn letters(&self) -> &[Colour] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().map(|c| c.flip()).collect())
    }

    /// Colour inversion composed with reversal.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|c| c.flip()).collect())
    }

    /// Number of white letters minus number of black letters.
    pub fn colour_sum(&self) -> i64 {
        self.0.iter().map(|c| c.sign()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Moves the last letter to the front (the word of a rotated vector).
    pub fn rotated(&self) -> Word {
        let mut v = self.0.clone();
        if let Some(c) = v.pop() {
            v.insert(0, c);
        }
        Word(v)
    }

    /// Moves the first letter to the end.
    pub fn rotated_inv(&self) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let c = v.remove(0);
            v.push(c);
        }
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Position of this word in [`enumerate_words`] order.
    pub fn index(&self) -> usize {
        let n = self.0.len();
        let bits = self.0.iter().fold(0usize, |acc, c| (acc << 1) | c.bit());
        (1usize << n) - 1 + bits
    }

    /// Inverse of [`Word::index`].
    pub fn from_index(id: usize) -> Word {
        let mut n = 0;
        while (1usize << (n + 1)) - 1 <= id {
            n += 1;
        }
        let bits = id + 1 - (1usize << n);
        Word(
            (0..n)
                .map(|i| Colour::from_bit((bits >> (n - 1 - i)) & 1))
                .collect(),
        )
    }

    /// `(wb)^j` for `j >= 0` and `(bw)^{-j}` for `j < 0`.
    pub fn alternating(j: i64) -> Word {
        let pair = if j >= 0 {
            [Colour::White, Colour::Black]
        } else {
            [Colour::Black, Colour::White]
        };
        Word(
            pair.iter()
                .copied()
                .cycle()
                .take(2 * j.unsigned_abs() as usize)
                .collect(),
        )
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then lexicographic with white before black.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            f.write_str(match c {
                Colour::White => "w",
                Colour::Black => "b",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        let mut v = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                'w' => v.push(Colour::White),
                'b' => v.push(Colour::Black),
                _ => {
                    return Err(Error::Parse(format!(
                        "invalid circle letter {ch:?} at column {} in word {s:?}",
                        i + 1
                    )))
                }
            }
        }
        Ok(Word(v))
    }
}

pub fn colour_invert(w: &Word) -> Word {
    w.invert()
}

pub fn word_star(w: &Word) -> Word {
    w.star()
}

pub fn colour_sum(w: &Word) -> i64 {
    w.colour_sum()
}

/// All words of length at most `max_len`, shortest first, then
/// lexicographic with `w < b`.
pub fn enumerate_words(max_len: usize) -> Vec<Word> {
    let total = (1usize << (max_len + 1)) - 1;
    (0..total).map(Word::from_index).collect()
}

/// All words of exactly length `n` in lexicographic order.
pub fn words_of_length(n: usize) -> Vec<Word> {
    let start = (1usize << n) - 1;
    (start..start + (1usize << n))
        .map(Word::from_index)
        .collect()
}

/// Element of the Z_k-extended monoid in normal form: a leading triangle
/// exponent followed by squares, each carrying the exponent of the triangle
/// run after it. `modulus == 0` means the exponents live in Z.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtWord {
    modulus: u32,
    lead: i64,
    body: Vec<(Colour, i64)>,
}

impl ExtWord {
    pub fn new(modulus: u32, lead: i64, body: Vec<(Colour, i64)>) -> ExtWord {
        let mut w = ExtWord {
            modulus,
            lead,
            body,
        };
        w.normalize();
        w
    }

    pub fn empty(modulus: u32) -> ExtWord {
        ExtWord {
            modulus,
            lead: 0,
            body: Vec::new(),
        }
    }

    /// A single run `t^e` with no squares.
    pub fn triangles(modulus: u32, e: i64) -> ExtWord {
        ExtWord::new(modulus, e, Vec::new())
    }

    /// The triangle-free word with the same colour pattern as `w`.
    pub fn from_circles(modulus: u32, w: &Word) -> ExtWord {
        ExtWord {
            modulus,
            lead: 0,
            body: w.letters().iter().map(|&c| (c, 0)).collect(),
        }
    }

    pub fn parse(s: &str, modulus: u32) -> Result<ExtWord> {
        let mut w = ExtWord::empty(modulus);
        for (i, ch) in s.trim().chars().enumerate() {
            match ch {
                's' => w.body.push((Colour::White, 0)),
                'S' => w.body.push((Colour::Black, 0)),
                't' => *w.tail_mut() += 1,
                'T' => *w.tail_mut() -= 1,
                _ => {
                    return Err(Error::Parse(format!(
                        "invalid extended letter {ch:?} at column {} in word {s:?}",
                        i + 1
                    )))
                }
            }
        }
        w.normalize();
        Ok(w)
    }

    fn reduce(&self, e: i64) -> i64 {
        if self.modulus == 0 {
            e
        } else {
            e.rem_euclid(self.modulus as i64)
        }
    }

    fn normalize(&mut self) {
        self.lead = self.reduce(self.lead);
        for i in 0..self.body.len() {
            self.body[i].1 = self.reduce(self.body[i].1);
        }
    }

    fn tail_mut(&mut self) -> &mut i64 {
        match self.body.last_mut() {
            Some((_, e)) => e,
            None => &mut self.lead,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn body(&self) -> &[(Colour, i64)] {
        &self.body
    }

    pub fn square_count(&self) -> usize {
        self.body.len()
    }

    /// The colours of the squares, i.e. the legs a fixed vector lives on.
    pub fn squares(&self) -> Vec<Colour> {
        self.body.iter().map(|&(c, _)| c).collect()
    }

    /// The squares read as circles.
    pub fn square_word(&self) -> Word {
        Word::new(self.squares())
    }

    /// Total triangle exponent (reduced when `modulus > 0`).
    pub fn exponent_sum(&self) -> i64 {
        self.reduce(self.lead + self.body.iter().map(|&(_, e)| e).sum::<i64>())
    }

    pub fn is_triangle_free(&self) -> bool {
        self.lead == 0 && self.body.iter().all(|&(_, e)| e == 0)
    }

    pub fn concat(&self, other: &ExtWord) -> Result<ExtWord> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let mut w = self.clone();
        *w.tail_mut() += other.lead;
        w.body.extend_from_slice(&other.body);
        w.normalize();
        Ok(w)
    }

    /// Reversal with squares and triangles inverted.
    pub fn star(&self) -> ExtWord {
        // t^{a0} q1 t^{a1} ... qn t^{an}  ->  T^{an} q̄n ... T^{a1} q̄1 T^{a0}
        let n = self.body.len();
        let lead = if n == 0 {
            -self.lead
        } else {
            -self.body[n - 1].1
        };
        let mut body = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let after = if i == 0 {
                self.lead
            } else {
                self.body[i - 1].1
            };
            body.push((self.body[i].0.flip(), -after));
        }
        ExtWord::new(self.modulus, lead, body)
    }

    /// Representative of the class under rotation of triangles: the leading
    /// run is moved behind the last square.
    pub fn cyclic_canonical(&self) -> ExtWord {
        if self.body.is_empty() {
            return self.clone();
        }
        let mut w = self.clone();
        let lead = w.lead;
        w.lead = 0;
        *w.tail_mut() += lead;
        w.normalize();
        w
    }
}

impl fmt::Display for ExtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let run = |f: &mut fmt::Formatter<'_>, e: i64| -> fmt::Result {
            let ch = if e >= 0 { "t" } else { "T" };
            for _ in 0..e.unsigned_abs() {
                f.write_str(ch)?;
            }
            Ok(())
        };
        run(f, self.lead)?;
        for &(c, e) in &self.body {
            f.write_str(match c {
                Colour::White => "s",
                Colour::Black => "S",
            })?;
            run(f, e)?;
        }
        Ok(())
    }
}

/// Image under `w ↦ s t`, `b ↦ T S`.
pub fn glue_word(w: &Word, k: u32) -> ExtWord {
    let mut out = ExtWord::empty(k);
    for &c in w.letters() {
        match c {
            Colour::White => out.body.push((Colour::White, 1)),
            Colour::Black => {
                *out.tail_mut() -= 1;
                out.body.push((Colour::Black, 0));
            }
        }
    }
    out.normalize();
    out
}

pub fn ext_concat(u: &ExtWord, v: &ExtWord) -> Result<ExtWord> {
    u.concat(v)
}

pub fn square_count(w: &ExtWord) -> usize {
    w.square_count()
}
