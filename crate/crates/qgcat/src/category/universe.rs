//! Finite word universes for the saturation engine.

use super::engine::Universe;
use crate::words::{enumerate_words, words_of_length, Colour, ExtWord, Word};

/// All circle words of length at most `max_len`, with ids given by
/// [`Word::index`].
pub(crate) fn plain(max_len: usize) -> Universe {
    let words = enumerate_words(max_len);
    let mut u = Universe::default();
    for w in &words {
        let n = w.len();
        u.legs.push(w.letters().to_vec());
        u.rot.push((n > 0).then(|| w.rotated().index()));
        u.rot_inv.push((n > 0).then(|| w.rotated_inv().index()));
        u.star.push(Some(w.star().index()));
        let l = w.letters();
        let contr = (0..n.saturating_sub(1))
            .filter(|&i| l[i] != l[i + 1])
            .map(|i| {
                let mut v = l.to_vec();
                v.drain(i..i + 2);
                (i, Word::new(v).index())
            })
            .collect();
        u.contr.push(contr);
        u.splits.push(
            (1..n)
                .map(|c| (w.slice(0, c).index(), w.slice(c, n).index()))
                .collect(),
        );
    }
    u
}

/// Adds fused steps onto targets of length at most `reach` whose factors
/// fit in the universe but whose tensor product does not.
pub(crate) fn add_long_compositions(u: &mut Universe, max_len: usize, reach: usize) {
    u.comps = vec![Vec::new(); u.len()];
    for t in enumerate_words(reach.min(max_len)) {
        let m = t.len();
        let mut list = Vec::new();
        for cut in 0..=m {
            let (p, q) = (t.slice(0, cut), t.slice(cut, m));
            for j in 1..=max_len {
                if p.len() + j > max_len || q.len() + j > max_len {
                    break;
                }
                if p.len() + q.len() + 2 * j <= max_len {
                    continue;
                }
                // one step past the plain engine is enough for the report
                if m + 2 * j > reach + 2 {
                    break;
                }
                for c in words_of_length(j) {
                    let x = p.concat(&c).index();
                    let y = c.star().concat(&q).index();
                    list.push((x, y, j));
                }
            }
        }
        u.comps[t.index()] = list;
    }
}

/// Dense ids for cyclically canonical extended words (leading exponent 0)
/// with at most `max_squares` squares. For `k = 0` every exponent is bounded
/// by `budget` in absolute value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ExtCoder {
    k: u32,
    budget: i64,
    max_squares: usize,
    offsets: Vec<usize>,
}

impl ExtCoder {
    pub fn new(k: u32, max_squares: usize, budget: i64) -> ExtCoder {
        let budget = if k == 0 { budget } else { 0 };
        let mut c = ExtCoder {
            k,
            budget,
            max_squares,
            offsets: Vec::new(),
        };
        let r = c.radix();
        let mut off = 0;
        for n in 0..=max_squares {
            c.offsets.push(off);
            off += if n == 0 {
                r
            } else {
                (1usize << n) * r.pow(n as u32)
            };
        }
        c.offsets.push(off);
        c
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn budget(&self) -> i64 {
        self.budget
    }

    pub fn max_squares(&self) -> usize {
        self.max_squares
    }

    fn radix(&self) -> usize {
        if self.k == 0 {
            (2 * self.budget + 1) as usize
        } else {
            self.k as usize
        }
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn digit(&self, e: i64) -> Option<usize> {
        if self.k == 0 {
            (e.abs() <= self.budget).then(|| (e + self.budget) as usize)
        } else {
            Some(e.rem_euclid(self.k as i64) as usize)
        }
    }

    fn undigit(&self, d: usize) -> i64 {
        if self.k == 0 {
            d as i64 - self.budget
        } else {
            d as i64
        }
    }

    /// Id of the cyclic class of `w`, if it lies in the universe.
    pub fn encode(&self, w: &ExtWord) -> Option<usize> {
        let c = w.cyclic_canonical();
        let n = c.square_count();
        if n > self.max_squares {
            return None;
        }
        let r = self.radix();
        if n == 0 {
            return Some(self.offsets[0] + self.digit(c.lead())?);
        }
        let bits = c
            .body()
            .iter()
            .fold(0usize, |acc, &(col, _)| (acc << 1) | col.bit());
        let mut ex = 0usize;
        for &(_, e) in c.body() {
            ex = ex * r + self.digit(e)?;
        }
        Some(self.offsets[n] + bits * r.pow(n as u32) + ex)
    }

    pub fn decode(&self, id: usize) -> ExtWord {
        let n = (0..=self.max_squares)
            .rev()
            .find(|&n| self.offsets[n] <= id)
            .expect("id in range");
        let local = id - self.offsets[n];
        let r = self.radix();
        if n == 0 {
            return ExtWord::triangles(self.k, self.undigit(local));
        }
        let per = r.pow(n as u32);
        let (bits, mut ex) = (local / per, local % per);
        let mut exps = vec![0i64; n];
        for j in (0..n).rev() {
            exps[j] = self.undigit(ex % r);
            ex /= r;
        }
        let body = (0..n)
            .map(|j| (Colour::from_bit((bits >> (n - 1 - j)) & 1), exps[j]))
            .collect();
        ExtWord::new(self.k, 0, body)
    }

    /// Exponent values a single slot may take.
    fn exponent_values(&self) -> Vec<i64> {
        (0..self.radix()).map(|d| self.undigit(d)).collect()
    }
}

/// The universe of all canonical extended words of a coder. Triangle
/// rotation is the identity on vectors, so rotating a square moves the
/// trailing run along with it and the word stays canonical.
pub(crate) fn extended(coder: &ExtCoder) -> Universe {
    let k = coder.k();
    let enc = |w: &ExtWord| coder.encode(w);
    let mut u = Universe::default();
    let values = coder.exponent_values();
    for id in 0..coder.len() {
        let w = coder.decode(id);
        let body = w.body();
        let n = body.len();
        u.legs.push(w.squares());
        if n == 0 {
            u.rot.push(None);
            u.rot_inv.push(None);
        } else {
            // q1 t^{a1} … qn t^{e}  ->  qn t^{e} q1 t^{a1} … q_{n-1} t^{a_{n-1}}
            let mut r = vec![body[n - 1]];
            r.extend_from_slice(&body[..n - 1]);
            u.rot.push(enc(&ExtWord::new(k, 0, r)));
            let mut ri = body[1..].to_vec();
            ri.push(body[0]);
            u.rot_inv.push(enc(&ExtWord::new(k, 0, ri)));
        }
        u.star.push(enc(&w.star()));
        let mut contr = Vec::new();
        for i in 0..n.saturating_sub(1) {
            if body[i].0 != body[i + 1].0 && body[i].1 == 0 {
                let before = if i == 0 { 0 } else { body[i - 1].1 };
                let mut lead = 0;
                let mut nb: Vec<(Colour, i64)> = body[..i.saturating_sub(1)].to_vec();
                if i == 0 {
                    lead = body[1].1;
                } else {
                    nb.push((body[i - 1].0, before + body[i + 1].1));
                }
                nb.extend_from_slice(&body[i + 2..]);
                if let Some(t) = enc(&ExtWord::new(k, lead, nb)) {
                    contr.push((i, t));
                }
            }
        }
        u.contr.push(contr);
        let mut splits = Vec::new();
        let total = w.exponent_sum();
        if n == 0 {
            for &x in &values {
                if x == 0 || x == total {
                    continue;
                }
                if let (Some(a), Some(b)) = (
                    enc(&ExtWord::triangles(k, x)),
                    enc(&ExtWord::triangles(k, total - x)),
                ) {
                    splits.push((a, b));
                }
            }
        } else {
            let e = body[n - 1].1;
            // a pure triangle run times the word with a shifted trailing run
            for &x in &values {
                if x == 0 {
                    continue;
                }
                let mut nb = body.to_vec();
                nb[n - 1].1 = e - x;
                if let (Some(a), Some(b)) =
                    (enc(&ExtWord::triangles(k, x)), enc(&ExtWord::new(k, 0, nb)))
                {
                    splits.push((a, b));
                }
            }
            for c in 1..n {
                let ac = body[c - 1].1;
                for &x in &values {
                    let mut left = body[..c].to_vec();
                    left[c - 1].1 = x;
                    let mut right = body[c..].to_vec();
                    right[n - c - 1].1 = ac + e - x;
                    if let (Some(a), Some(b)) = (
                        enc(&ExtWord::new(k, 0, left)),
                        enc(&ExtWord::new(k, 0, right)),
                    ) {
                        splits.push((a, b));
                    }
                }
            }
        }
        u.splits.push(splits);
    }
    u
}
