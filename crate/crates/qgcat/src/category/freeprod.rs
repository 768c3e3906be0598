//! Fixed-point spaces of a free product `H * Ẑ_l`.
//!
//! A word with triangles is factorized as `w0 t w1 t … t w_{l-1} t w_l`
//! where the inner pieces carry no triangles. The vector is the rotation of
//! `ξ1 ⊗ … ⊗ ξ_{l-1} ⊗ ξ` with `ξi ∈ C_H(∅, wi)` and `ξ` taken from the
//! word `w_l w0`, which has fewer squares. On the cyclic word the `l`
//! separating triangles form a stretch between two gaps: inner gaps give
//! all their triangles to the stretch, the two end gaps share the rest.

use super::{ExtCoder, ExtFixTable, FixTable};
use crate::frame::IntFrame;
use crate::linalg::{Echelon, SVec, Subspace};
use crate::words::{Colour, ExtWord, Word};
use crate::{par, Error, Result};

/// Table of `C_{H * Ẑ_l}` on all cyclic classes with at most
/// `max_squares` squares. Needs `l ≥ 2` and `H` stored up to
/// `max_squares` letters.
pub fn free_product_table(h: &FixTable, l: u32, max_squares: usize) -> Result<ExtFixTable> {
    let coder = prepare(h, l, max_squares)?;
    let mut ids: Vec<usize> = (0..coder.len()).collect();
    ids.sort_by_key(|&id| coder.decode(id).square_count());
    let mut spaces: Vec<Echelon> = vec![Echelon::new(); coder.len()];
    // Pieces and remainders have fewer squares, so each level only reads
    // finished levels.
    for level in 0..=max_squares {
        let here: Vec<usize> = ids
            .iter()
            .copied()
            .filter(|&id| coder.decode(id).square_count() == level)
            .collect();
        let done = par::map_collect(&here, |&id| evaluate(h, &coder, &spaces, id));
        for (id, e) in here.into_iter().zip(done) {
            spaces[id] = e;
        }
    }
    Ok(finish(h, coder, spaces))
}

/// The same table by chaotic iteration in a given order, sweeping until
/// nothing changes.
#[cfg(test)]
pub(crate) fn free_product_fixpoint(
    h: &FixTable,
    l: u32,
    max_squares: usize,
    order: &[usize],
) -> Result<ExtFixTable> {
    let coder = prepare(h, l, max_squares)?;
    let mut spaces: Vec<Echelon> = vec![Echelon::new(); coder.len()];
    loop {
        let mut changed = false;
        for &id in order {
            let e = evaluate(h, &coder, &spaces, id);
            if e != spaces[id] {
                spaces[id] = e;
                changed = true;
            }
        }
        if !changed {
            return Ok(finish(h, coder, spaces));
        }
    }
}

fn prepare(h: &FixTable, l: u32, max_squares: usize) -> Result<ExtCoder> {
    if l < 2 {
        return Err(Error::NotApplicable(format!(
            "the free product recursion needs l >= 2, got {l}"
        )));
    }
    if h.work_cutoff() < max_squares {
        return Err(Error::Cutoff(format!(
            "H is stored up to length {} but {max_squares} squares were requested",
            h.work_cutoff()
        )));
    }
    Ok(ExtCoder::new(l, max_squares, 0))
}

fn finish(h: &FixTable, coder: ExtCoder, spaces: Vec<Echelon>) -> ExtFixTable {
    let n = h.n();
    let spaces = spaces
        .into_iter()
        .enumerate()
        .map(|(id, e)| Subspace::from_echelon(n, 0, coder.decode(id).square_count(), e))
        .collect();
    ExtFixTable::from_spaces(h.frame().clone(), coder, spaces, h.semantics())
}

fn h_space<'a>(h: &'a FixTable, colours: &[Colour]) -> &'a Echelon {
    h.spaces()[Word::new(colours.to_vec()).index()].echelon()
}

/// All tensor products of one basis vector from each space, in order.
fn tensor_all(spaces: &[(&Echelon, u32)]) -> Vec<SVec> {
    let mut acc = vec![SVec::unit(0)];
    for &(e, dim) in spaces {
        let mut next = Vec::with_capacity(acc.len() * e.rank());
        for x in &acc {
            for y in e.rows() {
                next.push(x.tensor(y, dim));
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    acc
}

fn evaluate(h: &FixTable, coder: &ExtCoder, spaces: &[Echelon], id: usize) -> Echelon {
    let w = coder.decode(id);
    let l = coder.k() as i64;
    let body = w.body();
    let sq = body.len();
    let colours = w.squares();
    let frame: &IntFrame = h.frame().int();
    let nn = h.n() as u32;
    if w.exponent_sum() != 0 {
        return Echelon::new();
    }
    if w.is_triangle_free() {
        return h_space(h, &colours).clone();
    }
    if sq == 0 {
        return Echelon::from_vectors([SVec::unit(0)]);
    }
    let full = crate::linalg::pow(h.n(), sq);
    let mut out = Echelon::new();
    let a = |j: usize| body[j % sq].1;
    for s in 0..sq {
        // stretch of squares s+1 ..= s+m, start gap s, end gap s+m
        let mut local = Echelon::new();
        for m in 1..=sq {
            let inner: i64 = (1..m).map(|j| a(s + j)).sum();
            let r = l - inner;
            if r < 2 {
                break;
            }
            // groups of squares split at inner gaps that hold triangles
            let mut groups: Vec<Vec<Colour>> = vec![Vec::new()];
            for j in 1..=m {
                groups.last_mut().unwrap().push(colours[(s + j) % sq]);
                if j < m && a(s + j) != 0 {
                    groups.push(Vec::new());
                }
            }
            let pieces: Vec<(&Echelon, u32)> = groups
                .iter()
                .map(|g| (h_space(h, g), nn.pow(g.len() as u32)))
                .collect();
            if pieces.iter().any(|(e, _)| e.rank() == 0) {
                continue;
            }
            for c_start in 1..r {
                let c_end = r - c_start;
                let leftover = if m == sq {
                    a(s) - r
                } else {
                    a(s) - c_start + a(s + m) - c_end
                };
                let rest: Vec<(Colour, i64)> = (m + 1..=sq)
                    .map(|j| {
                        let idx = (s + j) % sq;
                        let e = if j == sq { leftover } else { a(idx) };
                        (colours[idx], e)
                    })
                    .collect();
                let xw = if rest.is_empty() {
                    ExtWord::triangles(coder.k(), leftover)
                } else {
                    ExtWord::new(coder.k(), 0, rest)
                };
                let x = coder.encode(&xw).expect("remainder lies in the universe");
                let xs = &spaces[x];
                if xs.rank() == 0 {
                    continue;
                }
                let mut all = pieces.clone();
                all.push((xs, nn.pow(xw.square_count() as u32)));
                for v in tensor_all(&all) {
                    local.insert(v);
                    if local.rank() == full {
                        break;
                    }
                }
            }
            if m == sq {
                break;
            }
        }
        // legs are in the order s+1, …, s; rotate square s+1 to the front
        let shift = (s + 1) % sq;
        for row in local.rows() {
            let mut v = row.clone();
            for j in 0..shift {
                // the current last leg is square s - j
                let last = colours[(s + sq - j) % sq];
                v = frame.rotate(&v, sq, last);
            }
            out.insert(v);
            if out.rank() == full {
                return out;
            }
        }
    }
    out
}
