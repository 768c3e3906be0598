//! Two-coloured set partitions, their maps T_p, and a closure oracle for
//! categories of partitions.
//!
//! Points are numbered upper row first, then lower row, left to right,
//! starting at 0. `T_p` has rows indexed by the lower points and columns by
//! the upper points; an entry is 1 when the index assignment is constant on
//! every block.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::linalg::{pow, LinMap, Scalar};
use crate::words::{Colour, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    upper: Word,
    lower: Word,
    /// Block label of every point, numbered by first appearance.
    labels: Vec<u8>,
}

fn canonical_labels(raw: &[usize]) -> Vec<u8> {
    let mut map: HashMap<usize, u8> = HashMap::new();
    raw.iter()
        .map(|x| {
            let next = map.len() as u8;
            *map.entry(*x).or_insert(next)
        })
        .collect()
}

impl Partition {
    /// Builds a partition from 0-based blocks covering every point once.
    pub fn new(upper: Word, lower: Word, blocks: &[Vec<usize>]) -> Result<Partition> {
        let total = upper.len() + lower.len();
        let mut raw = vec![usize::MAX; total];
        for (b, block) in blocks.iter().enumerate() {
            for &pt in block {
                if pt >= total {
                    return Err(Error::IndexOutOfRange {
                        index: pt,
                        len: total,
                    });
                }
                if raw[pt] != usize::MAX {
                    return Err(Error::Parse(format!("point {pt} appears in two blocks")));
                }
                raw[pt] = b;
            }
        }
        if let Some(pt) = raw.iter().position(|&x| x == usize::MAX) {
            return Err(Error::Parse(format!(
                "point {pt} is not covered by any block"
            )));
        }
        Ok(Partition::from_labels(upper, lower, &raw))
    }

    /// Same, with the upper row empty.
    pub fn fix(lower: Word, blocks: &[Vec<usize>]) -> Result<Partition> {
        Partition::new(Word::empty(), lower, blocks)
    }

    fn from_labels(upper: Word, lower: Word, raw: &[usize]) -> Partition {
        Partition {
            upper,
            lower,
            labels: canonical_labels(raw),
        }
    }

    pub fn identity(c: Colour) -> Partition {
        Partition::from_labels(Word::new(vec![c]), Word::new(vec![c]), &[0, 0])
    }

    /// The pair on two lower points of the given colours.
    pub fn pair(a: Colour, b: Colour) -> Partition {
        Partition::from_labels(Word::empty(), Word::new(vec![a, b]), &[0, 0])
    }

    pub fn singleton(c: Colour) -> Partition {
        Partition::from_labels(Word::empty(), Word::new(vec![c]), &[0])
    }

    pub fn empty() -> Partition {
        Partition::from_labels(Word::empty(), Word::empty(), &[])
    }

    pub fn upper(&self) -> &Word {
        &self.upper
    }

    pub fn lower(&self) -> &Word {
        &self.lower
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn block_count(&self) -> usize {
        self.labels
            .iter()
            .map(|&x| x as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// Blocks as sorted lists of 0-based points, ordered by smallest point.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (pt, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(pt);
        }
        out
    }

    /// Whether no two blocks cross when the points are placed on a circle
    /// (lower row left to right, then upper row right to left).
    pub fn is_noncrossing(&self) -> bool {
        let u = self.upper.len();
        let order: Vec<usize> = (u..self.points()).chain((0..u).rev()).collect();
        let seq: Vec<u8> = order.iter().map(|&p| self.labels[p]).collect();
        labels_noncrossing(&seq)
    }

    /// Points on the circle, starting with the lower row.
    fn circle(&self) -> Vec<(Colour, bool, u8)> {
        let u = self.upper.len();
        let mut v: Vec<(Colour, bool, u8)> = self
            .lower
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, false, self.labels[u + i]))
            .collect();
        for i in (0..u).rev() {
            v.push((self.upper.letters()[i], true, self.labels[i]));
        }
        v
    }

    /// Fixed-point form: upper points are turned down to the right end of
    /// the lower row with their colours inverted, so the lower word becomes
    /// `lower · star(upper)`.
    pub fn to_fix(&self) -> Partition {
        let u = self.upper.len();
        let mut raw: Vec<usize> = self.labels[u..].iter().map(|&x| x as usize).collect();
        raw.extend((0..u).rev().map(|i| self.labels[i] as usize));
        Partition::from_labels(Word::empty(), self.lower.concat(&self.upper.star()), &raw)
    }
}

fn labels_noncrossing(seq: &[u8]) -> bool {
    // a < b < c < d with a, c in one block and b, d in another is a crossing
    let n = seq.len();
    for a in 0..n {
        for b in a + 1..n {
            if seq[b] == seq[a] {
                continue;
            }
            for c in b + 1..n {
                if seq[c] != seq[a] {
                    continue;
                }
                if seq[c + 1..].contains(&seq[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// `T_p` for the given dimension.
pub fn partition_map(p: &Partition, n: usize) -> LinMap {
    let u = p.upper.len();
    let l = p.lower.len();
    let mut m = LinMap::zero(n, u, l);
    let nb = p.block_count();
    for assign in 0..pow(n, nb) {
        let val = |b: u8| (assign / pow(n, b as usize)) % n;
        let col = p.labels[..u].iter().fold(0, |acc, &b| acc * n + val(b));
        let row = p.labels[u..].iter().fold(0, |acc, &b| acc * n + val(b));
        m.set(row, col, Scalar::one());
    }
    m
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `q ∘ p` (p first) and the number of closed components in the middle row.
pub fn partition_compose(q: &Partition, p: &Partition) -> Result<(Partition, usize)> {
    if q.upper != p.lower {
        return Err(Error::Shape(format!(
            "cannot stack: upper row {} over lower row {}",
            q.upper, p.lower
        )));
    }
    let (pu, pl) = (p.upper.len(), p.lower.len());
    let ql = q.lower.len();
    // nodes: p's points 0..pu+pl, then q's lower points; q's upper points
    // are identified with p's lower points.
    let total = pu + pl + ql;
    let mut uf = UnionFind::new(total);
    let mut seen: HashMap<u8, usize> = HashMap::new();
    for (pt, &b) in p.labels.iter().enumerate() {
        match seen.get(&b) {
            Some(&r) => uf.union(r, pt),
            None => {
                seen.insert(b, pt);
            }
        }
    }
    let mut seen: HashMap<u8, usize> = HashMap::new();
    for (pt, &b) in q.labels.iter().enumerate() {
        let node = if pt < pl {
            pu + pt
        } else {
            pu + pl + (pt - pl)
        };
        match seen.get(&b) {
            Some(&r) => uf.union(r, node),
            None => {
                seen.insert(b, node);
            }
        }
    }
    let outer: Vec<usize> = (0..pu).chain(pu + pl..total).collect();
    let raw: Vec<usize> = outer.iter().map(|&x| uf.find(x)).collect();
    let outer_roots: HashSet<usize> = raw.iter().copied().collect();
    let middle_roots: HashSet<usize> = (pu..pu + pl).map(|x| uf.find(x)).collect();
    let loops = middle_roots.difference(&outer_roots).count();
    Ok((
        Partition::from_labels(p.upper.clone(), q.lower.clone(), &raw),
        loops,
    ))
}

/// Side-by-side placement, `p` on the left.
pub fn partition_tensor(p: &Partition, q: &Partition) -> Partition {
    let off = p.block_count();
    let (pu, qu) = (p.upper.len(), q.upper.len());
    let mut raw: Vec<usize> = p.labels[..pu].iter().map(|&x| x as usize).collect();
    raw.extend(q.labels[..qu].iter().map(|&x| x as usize + off));
    raw.extend(p.labels[pu..].iter().map(|&x| x as usize));
    raw.extend(q.labels[qu..].iter().map(|&x| x as usize + off));
    Partition::from_labels(p.upper.concat(&q.upper), p.lower.concat(&q.lower), &raw)
}

/// Upside-down flip; `T` of the result is the adjoint of `T_p`.
pub fn partition_involute(p: &Partition) -> Partition {
    let u = p.upper.len();
    let mut raw: Vec<usize> = p.labels[u..].iter().map(|&x| x as usize).collect();
    raw.extend(p.labels[..u].iter().map(|&x| x as usize));
    Partition::from_labels(p.lower.clone(), p.upper.clone(), &raw)
}

/// One step around the circle of points (lower row left to right, then
/// upper row right to left). The last lower point moves to the right end
/// of the upper row and the first upper point moves to the front of the
/// lower row; a point changes colour when it changes rows. With an empty
/// upper row the last lower point goes straight to the front. At F = 1 this
/// is `Lrot ∘ Rrot`, and on fixed points it is the vector rotation.
pub fn partition_rotate(p: &Partition) -> Partition {
    let (u, l) = (p.upper.len(), p.lower.len());
    if u + l == 0 {
        return p.clone();
    }
    let mut circ = p.circle();
    circ.rotate_right(1);
    let mut lower = Vec::with_capacity(l);
    let mut lower_lab = Vec::with_capacity(l);
    let mut upper_rev = Vec::with_capacity(u);
    let mut upper_lab_rev = Vec::with_capacity(u);
    for (i, (c, was_upper, b)) in circ.into_iter().enumerate() {
        let now_upper = i >= l;
        let c = if was_upper != now_upper { c.flip() } else { c };
        if now_upper {
            upper_rev.push(c);
            upper_lab_rev.push(b as usize);
        } else {
            lower.push(c);
            lower_lab.push(b as usize);
        }
    }
    upper_rev.reverse();
    upper_lab_rev.reverse();
    let mut raw = upper_lab_rev;
    raw.extend(lower_lab);
    Partition::from_labels(Word::new(upper_rev), Word::new(lower), &raw)
}

/// Fixed-point contraction of lower points `i, i+1`: their blocks merge and
/// the two points disappear. Returns `None` on a colour clash and reports
/// whether a closed loop was removed.
fn fix_contract(p: &Partition, i: usize) -> Option<(Partition, bool)> {
    let l = p.lower.letters();
    if l[i] == l[i + 1] {
        return None;
    }
    let (a, b) = (p.labels[i], p.labels[i + 1]);
    let raw: Vec<usize> = p
        .labels
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != i + 1)
        .map(|(_, &x)| if x == b { a as usize } else { x as usize })
        .collect();
    let loop_closed = !raw.contains(&(a as usize));
    let mut w = l.to_vec();
    w.drain(i..i + 2);
    Some((
        Partition::from_labels(Word::empty(), Word::new(w), &raw),
        loop_closed,
    ))
}

/// Fixed-point reflection: reversal with inverted colours.
fn fix_reflect(p: &Partition) -> Partition {
    let raw: Vec<usize> = p.labels.iter().rev().map(|&x| x as usize).collect();
    Partition::from_labels(Word::empty(), p.lower.star(), &raw)
}

/// The least category of partitions containing the generators, at most
/// `max_points` points per partition. Elements are returned in fixed-point
/// form (empty upper row), which determines the category by Frobenius
/// reciprocity; closure under tensor, composition, involution and rotation
/// of general partitions amounts to closure of the fixed-point forms under
/// tensor, rotation, reflection and contraction. Sorted by point count,
/// then word, then blocks.
pub fn partition_closure(generators: &[Partition], max_points: usize) -> Vec<Partition> {
    let mut set: HashSet<Partition> = HashSet::new();
    let mut by_size: Vec<Vec<Partition>> = vec![Vec::new(); max_points + 1];
    let mut queue: VecDeque<Partition> = VecDeque::new();
    let add = |p: Partition,
               set: &mut HashSet<Partition>,
               by_size: &mut Vec<Vec<Partition>>,
               queue: &mut VecDeque<Partition>| {
        if p.points() <= max_points && set.insert(p.clone()) {
            by_size[p.points()].push(p.clone());
            queue.push_back(p);
        }
    };
    let seeds = [
        Partition::empty(),
        Partition::pair(Colour::White, Colour::Black),
        Partition::pair(Colour::Black, Colour::White),
    ];
    for p in seeds
        .into_iter()
        .chain(generators.iter().map(|g| g.to_fix()))
    {
        add(p, &mut set, &mut by_size, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        let mut out = Vec::new();
        if x.points() > 0 {
            out.push(partition_rotate(&x));
        }
        out.push(fix_reflect(&x));
        for i in 0..x.points().saturating_sub(1) {
            if let Some((c, _)) = fix_contract(&x, i) {
                out.push(c);
            }
        }
        for k in 0..=max_points - x.points() {
            for y in &by_size[k] {
                out.push(partition_tensor(&x, y));
                out.push(partition_tensor(y, &x));
            }
        }
        out.push(partition_tensor(&x, &x));
        for p in out {
            add(p, &mut set, &mut by_size, &mut queue);
        }
    }
    let mut v: Vec<Partition> = set.into_iter().collect();
    v.sort_by(|a, b| (a.points(), &a.lower, &a.labels).cmp(&(b.points(), &b.lower, &b.labels)));
    v
}

/// All set partitions of `n` points as canonical label vectors.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=max {
            prefix.push(b);
            rec(prefix, n, if b == max { max + 1 } else { max }, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, 0, &mut out);
    out
}

/// All noncrossing partitions on the lower row `w` (upper row empty).
pub fn noncrossing_fix_partitions(w: &Word) -> Vec<Partition> {
    set_partitions(w.len())
        .into_iter()
        .map(|raw| Partition::from_labels(Word::empty(), w.clone(), &raw))
        .filter(|p| p.is_noncrossing())
        .collect()
}


/// Fixed-point generators `(w, span T_p)` for a closure, one per partition.
pub fn partition_generators(ps: &[Partition], n: usize) -> Vec<(Word, crate::linalg::Subspace)> {
    ps.iter()
        .map(|p| {
            let f = p.to_fix();
            let m = partition_map(&f, n);
            let s = crate::linalg::Subspace::span_in(n, 0, f.points(), &[m]).expect("shapes agree");
            (f.lower().clone(), s)
        })
        .collect()
}

/// Generating partitions of the free easy quantum groups: `O+` (the white
/// pair), `U+` (none), `B+` (pair and singleton), `S+` (pair, singleton and
/// the three-block).
pub fn preset_generators(name: &str) -> Option<Vec<Partition>> {
    let w = Colour::White;
    let pair = Partition::pair(w, w);
    let single = Partition::singleton(w);
    let fork = Partition::fix(Word::repeat(w, 3), &[vec![0, 1, 2]]).expect("valid blocks");
    match name {
        "O+" => Some(vec![pair]),
        "U+" => Some(vec![]),
        "B+" => Some(vec![pair, single]),
        "S+" => Some(vec![pair, single, fork]),
        _ => None,
    }
}
