//! Round-based saturation of fixed-point spaces.
//!
//! A universe is a finite set of words (ids) with the word-level action of
//! the Frobenius operations. Every round each target word pulls candidate
//! vectors from the vectors added in the previous round (semi-naive
//! evaluation), reduces them against its own echelon form and records the
//! independent ones. Targets only read the previous round's state, so the
//! per-target work is an independent map and the merge is deterministic.

use std::collections::HashSet;

use crate::frame::IntFrame;
use crate::linalg::{pow, Echelon, SVec};
use crate::par;
use crate::words::Colour;

/// Word-level structure of a finite universe. `None` marks an image that
/// falls outside the universe.
#[derive(Clone, Debug, Default)]
pub(crate) struct Universe {
    pub legs: Vec<Vec<Colour>>,
    pub rot: Vec<Option<usize>>,
    pub rot_inv: Vec<Option<usize>>,
    pub star: Vec<Option<usize>>,
    /// Forward contractions: `(leg, target)`.
    pub contr: Vec<Vec<(usize, usize)>>,
    /// Ways to obtain the word as a tensor product `(left, right)`; both
    /// factors are proper (neither is the empty word).
    pub splits: Vec<Vec<(usize, usize)>>,
    /// Fused tensor-and-contract steps `(x, y, j)` whose intermediate word
    /// would exceed the universe: `x = p·c`, `y = star(c)·q` with `|c| = j`,
    /// landing on `p·q`. Empty when unused.
    pub comps: Vec<Vec<(usize, usize, usize)>>,
}

impl Universe {
    pub fn len(&self) -> usize {
        self.legs.len()
    }

    pub fn dim(&self, n: usize, id: usize) -> usize {
        pow(n, self.legs[id].len())
    }

    /// Reverse adjacency for pulls: `(source, leg)` contracting into each id.
    fn contraction_sources(&self) -> Vec<Vec<(usize, usize)>> {
        let mut rev = vec![Vec::new(); self.len()];
        for (src, list) in self.contr.iter().enumerate() {
            for &(leg, t) in list {
                rev[t].push((src, leg));
            }
        }
        rev
    }

    fn pull_sources(&self, opt: &[Option<usize>]) -> Vec<Option<usize>> {
        let mut rev = vec![None; self.len()];
        for (src, t) in opt.iter().enumerate() {
            if let Some(t) = t {
                rev[*t] = Some(src);
            }
        }
        rev
    }
}

struct Pulls {
    rot_from: Vec<Option<usize>>,
    rot_inv_from: Vec<Option<usize>>,
    star_from: Vec<Option<usize>>,
    contr_from: Vec<Vec<(usize, usize)>>,
}

/// Saturates `init` (one echelon per id) together with `seeds`. Returns the
/// closed spaces.
pub(crate) fn saturate(
    uni: &Universe,
    frame: &IntFrame,
    init: Vec<Echelon>,
    seeds: Vec<(usize, SVec)>,
) -> Vec<Echelon> {
    let n = frame.n();
    let pulls = Pulls {
        rot_from: uni.pull_sources(&uni.rot),
        rot_inv_from: uni.pull_sources(&uni.rot_inv),
        star_from: uni.pull_sources(&uni.star),
        contr_from: uni.contraction_sources(),
    };
    let mut spaces = init;
    assert_eq!(spaces.len(), uni.len());
    // Everything already present counts as new in the first round.
    let mut delta: Vec<Vec<SVec>> = spaces.iter().map(|e| e.rows().to_vec()).collect();
    for (id, v) in seeds {
        if let Some(r) = spaces[id].insert(v) {
            delta[id].push(r);
        }
    }
    let ids: Vec<usize> = (0..uni.len()).collect();
    loop {
        if delta.iter().all(|d| d.is_empty()) {
            return spaces;
        }
        let active: Vec<usize> = ids
            .iter()
            .copied()
            .filter(|&t| spaces[t].rank() < uni.dim(n, t) && has_pull(uni, &pulls, &delta, t))
            .collect();
        let updates = par::map_collect(&active, |&t| {
            let mut ech = spaces[t].clone();
            let added = pull_round(uni, frame, &pulls, &spaces, &delta, t, &mut ech);
            (ech, added)
        });
        let mut next: Vec<Vec<SVec>> = vec![Vec::new(); uni.len()];
        for (&t, (ech, added)) in active.iter().zip(updates) {
            if !added.is_empty() {
                spaces[t] = ech;
                next[t] = added;
            }
        }
        delta = next;
    }
}

fn has_pull(uni: &Universe, p: &Pulls, delta: &[Vec<SVec>], t: usize) -> bool {
    let nz = |o: Option<usize>| o.is_some_and(|s| !delta[s].is_empty());
    nz(p.rot_from[t])
        || nz(p.rot_inv_from[t])
        || nz(p.star_from[t])
        || p.contr_from[t].iter().any(|&(s, _)| !delta[s].is_empty())
        || uni.splits[t]
            .iter()
            .any(|&(a, b)| !delta[a].is_empty() || !delta[b].is_empty())
        || uni.comps.get(t).is_some_and(|c| {
            c.iter()
                .any(|&(a, b, _)| !delta[a].is_empty() || !delta[b].is_empty())
        })
}

fn pull_round(
    uni: &Universe,
    frame: &IntFrame,
    p: &Pulls,
    spaces: &[Echelon],
    delta: &[Vec<SVec>],
    t: usize,
    ech: &mut Echelon,
) -> Vec<SVec> {
    let n = frame.n();
    let full = uni.dim(n, t);
    let mut added = Vec::new();
    let mut seen: HashSet<SVec> = HashSet::new();
    let mut offer = |mut v: SVec, ech: &mut Echelon, added: &mut Vec<SVec>| -> bool {
        if v.is_zero() {
            return ech.rank() == full;
        }
        v.canonicalize();
        if seen.insert(v.clone()) {
            if let Some(r) = ech.insert(v) {
                added.push(r);
            }
        }
        ech.rank() == full
    };
    if let Some(s) = p.rot_from[t] {
        let legs = uni.legs[s].len();
        let last = *uni.legs[s].last().expect("rotation needs legs");
        for v in &delta[s] {
            if offer(frame.rotate(v, legs, last), ech, &mut added) {
                return added;
            }
        }
    }
    if let Some(s) = p.rot_inv_from[t] {
        let legs = uni.legs[s].len();
        let first = uni.legs[s][0];
        for v in &delta[s] {
            if offer(frame.rotate_inv(v, legs, first), ech, &mut added) {
                return added;
            }
        }
    }
    if let Some(s) = p.star_from[t] {
        for v in &delta[s] {
            if offer(frame.reflect(v, &uni.legs[s]), ech, &mut added) {
                return added;
            }
        }
    }
    for &(s, leg) in &p.contr_from[t] {
        let legs = uni.legs[s].len();
        let a = uni.legs[s][leg];
        for v in &delta[s] {
            if offer(frame.contract(v, legs, leg, a), ech, &mut added) {
                return added;
            }
        }
    }
    for &(a, b) in &uni.splits[t] {
        let db = uni.dim(n, b) as u32;
        if !delta[a].is_empty() {
            for x in &delta[a] {
                for y in spaces[b].rows() {
                    if offer(x.tensor(y, db), ech, &mut added) {
                        return added;
                    }
                }
            }
        }
        if !delta[b].is_empty() {
            for x in spaces[a].rows() {
                for y in &delta[b] {
                    if offer(x.tensor(y, db), ech, &mut added) {
                        return added;
                    }
                }
            }
        }
    }
    for &(a, b, j) in uni.comps.get(t).map(|c| c.as_slice()).unwrap_or(&[]) {
        let la = uni.legs[a].len();
        let c = &uni.legs[a][la - j..];
        let lb = uni.legs[b].len();
        // new x against all y, then old x against new y
        for x in &delta[a] {
            for y in spaces[b].rows() {
                if offer(frame.compose(x, y, lb, c), ech, &mut added) {
                    return added;
                }
            }
        }
        if !delta[b].is_empty() {
            for x in spaces[a].rows() {
                for y in &delta[b] {
                    if offer(frame.compose(x, y, lb, c), ech, &mut added) {
                        return added;
                    }
                }
            }
        }
    }
    added
}
