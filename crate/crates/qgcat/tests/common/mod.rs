#![allow(dead_code)]

use std::collections::HashMap;

use qgcat::category::{closure, FixTable};
use qgcat::frame::Frame;
use qgcat::linalg::Subspace;
use qgcat::partitions::{
    noncrossing_fix_partitions, partition_closure, partition_generators, partition_map,
    preset_generators, Partition,
};
use qgcat::words::{Colour, Word};

/// Closure of a preset's generators over the identity frame.
pub fn preset_table(name: &str, n: usize, report: usize, work: usize) -> FixTable {
    let gens = partition_generators(&preset_generators(name).unwrap(), n);
    closure(&Frame::identity(n), &gens, report, work).unwrap()
}

fn span_of(parts: &[&Partition], n: usize, w: &Word) -> Subspace {
    let maps: Vec<_> = parts.iter().map(|p| partition_map(p, n)).collect();
    Subspace::span_in(n, 0, w.len(), &maps).unwrap()
}

/// Span of `T_p` over the partition closure, word by word, for every word
/// of length at most `max_len`. Contraction drops two points, so the
/// closure runs two points further than the words it reports.
pub fn partition_closure_spans(name: &str, n: usize, max_len: usize) -> HashMap<Word, Subspace> {
    let closed = partition_closure(&preset_generators(name).unwrap(), max_len + 2);
    let mut by_word: HashMap<Word, Vec<&Partition>> = HashMap::new();
    for p in closed.iter().filter(|p| p.points() <= max_len) {
        by_word.entry(p.lower().clone()).or_default().push(p);
    }
    qgcat::words::enumerate_words(max_len)
        .into_iter()
        .map(|w| {
            let parts = by_word.remove(&w).unwrap_or_default();
            let s = span_of(&parts, n, &w);
            (w, s)
        })
        .collect()
}

/// Span of the noncrossing pairings on `w`; with `coloured` each pair must
/// join a white and a black point.
pub fn pairing_span(n: usize, w: &Word, coloured: bool) -> Subspace {
    let all = noncrossing_fix_partitions(w);
    let pairings: Vec<&Partition> = all
        .iter()
        .filter(|p| {
            p.blocks().iter().all(|b| {
                b.len() == 2 && (!coloured || w.letters()[b[0]] != w.letters()[b[1]])
            })
        })
        .collect();
    span_of(&pairings, n, w)
}

/// The first stored word (length at most `max_len`) where the table and
/// the expected spaces disagree.
pub fn first_mismatch(
    t: &FixTable,
    max_len: usize,
    expected: impl Fn(&Word) -> Subspace,
) -> Option<Word> {
    qgcat::words::enumerate_words(max_len)
        .into_iter()
        .find(|w| t.space(w) != Some(&expected(w)))
}

pub fn whites(len: usize) -> Word {
    Word::repeat(Colour::White, len)
}
